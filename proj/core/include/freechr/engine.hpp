#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "freechr/matcher.hpp"
#include "freechr/program.hpp"

namespace freechr {

/// Evidence for one executed step.
template <typename C>
struct StepRecord {
  std::string rule_name;
  Match<C> match;
  Multiset<C> pre_state;
  Multiset<C> post_state;
};

template <typename C>
struct StepOutcome {
  Multiset<C> state;
  StepRecord<C> record;
};

enum class RunStatus { Final, StepLimitReached };

inline std::string to_string(RunStatus status) {
  return status == RunStatus::Final ? "final" : "step-limit-reached";
}

template <typename C>
struct RunResult {
  Multiset<C> final_state;
  std::vector<StepRecord<C>> trace;
  RunStatus status = RunStatus::Final;
};

/// A state-to-successor function; an absent result means no rule applied.
/// A step may reproduce its input state (stutter); stutters are real steps
/// and count against run limits.
template <typename C>
class StateTransformer {
public:
  using StepFn =
      std::function<std::optional<StepOutcome<C>>(const Multiset<C>&)>;

  explicit StateTransformer(StepFn step) : step_(std::move(step)) {}

  std::optional<StepOutcome<C>> step(const Multiset<C>& state) const {
    return step_(state);
  }

private:
  StepFn step_;
};

/// Lifts one rule to a transformer: apply the first match, if any.
template <typename C>
StateTransformer<C> rule_step(Rule<C> rule) {
  return StateTransformer<C>(
      [rule = std::move(rule)](
          const Multiset<C>& state) -> std::optional<StepOutcome<C>> {
        std::optional<Match<C>> match = find_first_match(rule, state);
        if (!match) return std::nullopt;
        Multiset<C> post = apply_match(rule, state, *match);
        StepRecord<C> record{rule.name(), std::move(*match), state, post};
        return StepOutcome<C>{std::move(post), std::move(record)};
      });
}

/// Left-biased composition: try `first`; only if it has no step, `second`.
/// Associative by construction.
template <typename C>
StateTransformer<C> first_applicable(StateTransformer<C> first,
                                     StateTransformer<C> second) {
  return StateTransformer<C>([first = std::move(first),
                              second = std::move(second)](
                                 const Multiset<C>& state) {
    if (auto outcome = first.step(state)) return outcome;
    return second.step(state);
  });
}

/// Folds a program into one transformer; leaf rules get left-to-right
/// priority, first match wins within a rule.
template <typename C>
StateTransformer<C> compile(const Program<C>& program) {
  return program.fold(
      [](const Rule<C>& rule) { return rule_step(rule); },
      [](StateTransformer<C> left, StateTransformer<C> right) {
        return first_applicable(std::move(left), std::move(right));
      });
}

/// Iterates the compiled step function from `initial` until no rule applies
/// (status Final) or `max_steps` steps were taken (status StepLimitReached).
/// The limit is mandatory: the rewriting system need not terminate.
template <typename C>
RunResult<C> run(const Program<C>& program, Multiset<C> initial,
                 std::size_t max_steps) {
  if (max_steps == 0) throw std::invalid_argument("max_steps must be >= 1");
  const StateTransformer<C> transformer = compile(program);
  RunResult<C> result{std::move(initial), {}, RunStatus::Final};
  for (std::size_t step = 0; step < max_steps; ++step) {
    auto outcome = transformer.step(result.final_state);
    if (!outcome) {
      result.status = RunStatus::Final;
      return result;
    }
    result.final_state = std::move(outcome->state);
    result.trace.push_back(std::move(outcome->record));
  }
  result.status = RunStatus::StepLimitReached;
  return result;
}

template <typename C>
std::string render_step(const StepRecord<C>& record) {
  return record.rule_name + ": " + to_string(record.pre_state) + " -> " +
         to_string(record.post_state);
}

/// One line per step, "rule_name: {pre} -> {post}".
template <typename C>
std::string render_trace(const std::vector<StepRecord<C>>& trace) {
  std::string out;
  for (const StepRecord<C>& record : trace) {
    out += render_step(record);
    out += '\n';
  }
  return out;
}

}  // namespace freechr
