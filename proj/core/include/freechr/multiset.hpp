#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "freechr/errors.hpp"

namespace freechr {

/// Finite multiset over a totally ordered ground domain.
///
/// Occurrences are kept in canonical (sorted) order, so occurrence indices
/// are deterministic for equal multisets and stay valid for the lifetime of
/// a value. Every operation returns a fresh value; nothing mutates in place.
template <std::totally_ordered C>
class Multiset {
public:
  Multiset() = default;
  Multiset(std::initializer_list<C> values) : occurrences_(values) {
    normalize();
  }
  explicit Multiset(std::vector<C> values) : occurrences_(std::move(values)) {
    normalize();
  }

  std::size_t size() const noexcept { return occurrences_.size(); }
  bool empty() const noexcept { return occurrences_.empty(); }

  /// Occurrence view: canonical order, indices 0..size()-1.
  const std::vector<C>& occurrences() const noexcept { return occurrences_; }

  const C& occurrence(std::size_t index) const {
    if (index >= occurrences_.size())
      throw MatchError("occurrence index " + std::to_string(index) +
                       " out of range for state of size " +
                       std::to_string(occurrences_.size()));
    return occurrences_[index];
  }

  /// Counts view: how many occurrences of `value` are present.
  std::size_t count(const C& value) const {
    auto [lo, hi] =
        std::equal_range(occurrences_.begin(), occurrences_.end(), value);
    return static_cast<std::size_t>(std::distance(lo, hi));
  }

  /// Counts view over all distinct values; every count is >= 1.
  std::map<C, std::size_t> counts() const {
    std::map<C, std::size_t> result;
    for (const C& value : occurrences_) ++result[value];
    return result;
  }

  /// Multiset union: counts add.
  Multiset union_with(const Multiset& other) const {
    std::vector<C> merged;
    merged.reserve(size() + other.size());
    std::merge(occurrences_.begin(), occurrences_.end(),
               other.occurrences_.begin(), other.occurrences_.end(),
               std::back_inserter(merged));
    return Multiset(Sorted{}, std::move(merged));
  }

  /// Deletes exactly the given occurrences. Indices must be valid and
  /// pairwise distinct; anything else signals a malformed match.
  Multiset remove_occurrences(std::span<const std::size_t> indices) const {
    std::vector<bool> marked(occurrences_.size(), false);
    for (std::size_t index : indices) {
      if (index >= occurrences_.size())
        throw MatchError("occurrence index " + std::to_string(index) +
                         " out of range for state of size " +
                         std::to_string(occurrences_.size()));
      if (marked[index])
        throw MatchError("occurrence index " + std::to_string(index) +
                         " deleted twice in one match");
      marked[index] = true;
    }
    std::vector<C> remaining;
    remaining.reserve(occurrences_.size() - indices.size());
    for (std::size_t i = 0; i < occurrences_.size(); ++i)
      if (!marked[i]) remaining.push_back(occurrences_[i]);
    return Multiset(Sorted{}, std::move(remaining));
  }

  /// Canonical form: the sorted occurrence sequence. Two multisets are equal
  /// iff their canonical forms are identical.
  const std::vector<C>& canonical_form() const noexcept { return occurrences_; }

  friend bool operator==(const Multiset& a, const Multiset& b) {
    return a.occurrences_ == b.occurrences_;
  }

  /// Total order on canonical forms; makes states usable as set/map keys.
  friend bool operator<(const Multiset& a, const Multiset& b) {
    return std::lexicographical_compare(
        a.occurrences_.begin(), a.occurrences_.end(), b.occurrences_.begin(),
        b.occurrences_.end());
  }

  auto begin() const noexcept { return occurrences_.begin(); }
  auto end() const noexcept { return occurrences_.end(); }

private:
  struct Sorted {};
  Multiset(Sorted, std::vector<C> sorted) : occurrences_(std::move(sorted)) {}
  void normalize() { std::sort(occurrences_.begin(), occurrences_.end()); }

  std::vector<C> occurrences_;
};

/// Renders "{a, b, c}" with elements in canonical order.
template <std::totally_ordered C>
std::string to_string(const Multiset<C>& state) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const C& value : state) {
    if (!first) out << ", ";
    first = false;
    out << value;
  }
  out << '}';
  return out.str();
}

}  // namespace freechr
