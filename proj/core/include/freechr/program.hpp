#pragma once

#include <memory>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "freechr/errors.hpp"
#include "freechr/rule.hpp"

namespace freechr {

/// Program AST: a rule leaf or the composition of two programs.
///
/// Values are immutable and share subtrees. Leaf rule names are unique per
/// program (checked when composing), which keeps traces and the textual
/// embedding unambiguous. `fold` is the catamorphism: any pair of functions
/// (rho on leaves, nu on compositions) evaluates a program into its algebra.
template <typename C>
class Program {
public:
  static Program from_rule(Rule<C> rule) {
    return Program(std::make_shared<const Node>(Node{std::move(rule)}));
  }

  static Program composed(Program left, Program right) {
    std::set<std::string> seen;
    for (std::string& name : left.leaf_names()) seen.insert(std::move(name));
    for (const std::string& name : right.leaf_names())
      if (!seen.insert(name).second)
        throw ConstructionError("duplicate rule name '" + name +
                                "' in composition");
    return Program(std::make_shared<const Node>(
        Node{Children{std::move(left.root_), std::move(right.root_)}}));
  }

  /// Structural recursion: rho on rule leaves, nu on compositions.
  /// fold(from_rule-leaf) = rho(rule); fold(l . r) = nu(fold(l), fold(r)).
  template <typename Rho, typename Nu>
  auto fold(Rho rho, Nu nu) const {
    using A = std::invoke_result_t<Rho&, const Rule<C>&>;
    return fold_node<A>(*root_, rho, nu);
  }

  /// Leaf rules in left-to-right composition order.
  std::vector<Rule<C>> leaves() const {
    std::vector<Rule<C>> out;
    collect_leaves(*root_, out);
    return out;
  }

  std::vector<std::string> leaf_names() const {
    std::vector<std::string> out;
    collect_names(*root_, out);
    return out;
  }

  std::size_t leaf_count() const { return leaf_names().size(); }

private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  using Children = std::pair<NodePtr, NodePtr>;

  struct Node {
    std::variant<Rule<C>, Children> value;
  };

  explicit Program(NodePtr root) : root_(std::move(root)) {}

  template <typename A, typename Rho, typename Nu>
  static A fold_node(const Node& node, Rho& rho, Nu& nu) {
    if (const Rule<C>* leaf = std::get_if<Rule<C>>(&node.value))
      return rho(*leaf);
    const Children& children = std::get<Children>(node.value);
    A left = fold_node<A>(*children.first, rho, nu);
    A right = fold_node<A>(*children.second, rho, nu);
    return nu(std::move(left), std::move(right));
  }

  static void collect_leaves(const Node& node, std::vector<Rule<C>>& out) {
    if (const Rule<C>* leaf = std::get_if<Rule<C>>(&node.value)) {
      out.push_back(*leaf);
      return;
    }
    const Children& children = std::get<Children>(node.value);
    collect_leaves(*children.first, out);
    collect_leaves(*children.second, out);
  }

  static void collect_names(const Node& node, std::vector<std::string>& out) {
    if (const Rule<C>* leaf = std::get_if<Rule<C>>(&node.value)) {
      out.push_back(leaf->name());
      return;
    }
    const Children& children = std::get<Children>(node.value);
    collect_names(*children.first, out);
    collect_names(*children.second, out);
  }

  NodePtr root_;
};

/// Builds a single-rule program. The combined head must be non-empty.
template <typename C>
Program<C> make_rule(std::string name, std::vector<HeadPredicate<C>> kept,
                     std::vector<HeadPredicate<C>> removed, Guard<C> guard,
                     Body<C> body) {
  return Program<C>::from_rule(Rule<C>(std::move(name), std::move(kept),
                                       std::move(removed), std::move(guard),
                                       std::move(body)));
}

template <typename C>
Program<C> make_rule(Rule<C> rule) {
  return Program<C>::from_rule(std::move(rule));
}

/// Composes two programs; their leaf rule names must be disjoint.
template <typename C>
Program<C> compose(Program<C> left, Program<C> right) {
  return Program<C>::composed(std::move(left), std::move(right));
}

}  // namespace freechr
