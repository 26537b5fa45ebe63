#pragma once

#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "freechr/matcher.hpp"
#include "freechr/program.hpp"

namespace freechr {
namespace detail {

template <typename C>
std::set<Multiset<C>> successors_of(const std::vector<Rule<C>>& rules,
                                    const Multiset<C>& state) {
  std::set<Multiset<C>> out;
  for (const Rule<C>& rule : rules)
    for (const Match<C>& match : find_matches(rule, state))
      out.insert(apply_match(rule, state, match));
  return out;
}

}  // namespace detail

/// Exhaustive nondeterministic single-step relation: apply every leaf rule
/// at every match, deduplicated by canonical state form.
template <typename C>
std::set<Multiset<C>> successors(const Program<C>& program,
                                 const Multiset<C>& state) {
  return detail::successors_of(program.leaves(), state);
}

template <typename C>
struct ReachabilityReport {
  Multiset<C> start;
  std::size_t depth_limit = 0;
  std::set<Multiset<C>> reachable;  // start is always a member
  std::set<Multiset<C>> finals;     // members with no successors
  bool truncated = false;  // unexplored successors remain past the limit
};

/// Breadth-first closure of `successors` up to `depth` steps, deduplicated
/// by canonical form. States still on the frontier when the limit is hit are
/// classified (final or not) but not expanded; `truncated` reports whether
/// any of them has a successor outside the computed set.
template <typename C>
ReachabilityReport<C> reachable(const Program<C>& program,
                                const Multiset<C>& start, std::size_t depth) {
  const std::vector<Rule<C>> rules = program.leaves();
  ReachabilityReport<C> report{start, depth, {start}, {}, false};
  std::set<Multiset<C>> frontier{start};
  for (std::size_t layer = 0; layer < depth && !frontier.empty(); ++layer) {
    std::set<Multiset<C>> next;
    for (const Multiset<C>& state : frontier) {
      std::set<Multiset<C>> succ = detail::successors_of(rules, state);
      if (succ.empty()) {
        report.finals.insert(state);
        continue;
      }
      for (const Multiset<C>& successor : succ)
        if (report.reachable.insert(successor).second)
          next.insert(successor);
    }
    frontier = std::move(next);
  }
  for (const Multiset<C>& state : frontier) {
    std::set<Multiset<C>> succ = detail::successors_of(rules, state);
    if (succ.empty()) {
      report.finals.insert(state);
      continue;
    }
    for (const Multiset<C>& successor : succ)
      if (!report.reachable.contains(successor)) {
        report.truncated = true;
        break;
      }
  }
  return report;
}

/// True iff `target` is reachable from `from` within `depth` steps.
template <typename C>
bool derivable(const Program<C>& program, const Multiset<C>& from,
               const Multiset<C>& target, std::size_t depth) {
  return reachable(program, from, depth).reachable.contains(target);
}

/// Text rendering; states listed in canonical order.
template <typename C>
std::string render_report(const ReachabilityReport<C>& report) {
  std::ostringstream out;
  out << "start: " << to_string(report.start) << '\n';
  out << "depth-limit: " << report.depth_limit << '\n';
  out << "reachable (" << report.reachable.size() << "):\n";
  for (const Multiset<C>& state : report.reachable)
    out << "  " << to_string(state) << '\n';
  out << "finals (" << report.finals.size() << "):\n";
  for (const Multiset<C>& state : report.finals)
    out << "  " << to_string(state) << '\n';
  out << "truncated: " << (report.truncated ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace freechr
