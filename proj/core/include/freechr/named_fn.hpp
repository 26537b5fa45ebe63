#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>

#include "freechr/errors.hpp"
#include "freechr/multiset.hpp"

namespace freechr {

/// A host function value paired with a display name.
///
/// The function stays opaque; the name is what the textual CHR embedding
/// prints for it. Functions must be pure and deterministic: equal arguments
/// give equal results.
template <typename Signature>
class NamedFn;

template <typename Ret, typename... Args>
class NamedFn<Ret(Args...)> {
public:
  NamedFn(std::string name, std::function<Ret(Args...)> fn)
      : name_(std::move(name)), fn_(std::move(fn)) {
    if (name_.empty())
      throw ConstructionError("named function requires a non-empty name");
    if (!fn_)
      throw ConstructionError("named function '" + name_ +
                              "' requires a callable");
  }

  const std::string& name() const noexcept { return name_; }

  Ret operator()(Args... args) const {
    return fn_(std::forward<Args>(args)...);
  }

private:
  std::string name_;
  std::function<Ret(Args...)> fn_;
};

/// Per-slot head check: does one state element fit this head position.
template <typename C>
using HeadPredicate = NamedFn<bool(const C&)>;

/// Guard over all matched values, kept-then-removed order.
template <typename C>
using Guard = NamedFn<bool(std::span<const C>)>;

/// Body: maps the matched values to the multiset of generated values.
template <typename C>
using Body = NamedFn<Multiset<C>(std::span<const C>)>;

}  // namespace freechr
