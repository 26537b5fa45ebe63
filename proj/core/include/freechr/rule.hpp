#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "freechr/errors.hpp"
#include "freechr/named_fn.hpp"

namespace freechr {

/// A single guarded multiset-rewriting rule.
///
/// `kept` slots are matched and retained, `removed` slots are matched and
/// deleted. Guard and body receive all matched values in kept-then-removed
/// head order. A rule must match at least one constraint; a head-less rule
/// would fire unconditionally forever.
template <typename C>
class Rule {
public:
  Rule(std::string name, std::vector<HeadPredicate<C>> kept,
       std::vector<HeadPredicate<C>> removed, Guard<C> guard, Body<C> body)
      : name_(std::move(name)),
        kept_(std::move(kept)),
        removed_(std::move(removed)),
        guard_(std::move(guard)),
        body_(std::move(body)) {
    if (name_.empty()) throw ConstructionError("rule name must be non-empty");
    if (kept_.empty() && removed_.empty())
      throw ConstructionError("rule '" + name_ +
                              "' must have at least one head constraint");
  }

  const std::string& name() const noexcept { return name_; }
  const std::vector<HeadPredicate<C>>& kept() const noexcept { return kept_; }
  const std::vector<HeadPredicate<C>>& removed() const noexcept {
    return removed_;
  }
  const Guard<C>& guard() const noexcept { return guard_; }
  const Body<C>& body() const noexcept { return body_; }

  std::size_t kept_arity() const noexcept { return kept_.size(); }
  std::size_t removed_arity() const noexcept { return removed_.size(); }
  std::size_t head_arity() const noexcept {
    return kept_.size() + removed_.size();
  }

private:
  std::string name_;
  std::vector<HeadPredicate<C>> kept_;
  std::vector<HeadPredicate<C>> removed_;
  Guard<C> guard_;
  Body<C> body_;
};

}  // namespace freechr
