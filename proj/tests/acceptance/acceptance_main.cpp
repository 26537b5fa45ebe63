// Acceptance suite: one check per release criterion, each printed as a
// single PASS/FAIL line. Exits non-zero if any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <freechr/freechr.hpp>

#include "support/generators.hpp"
#include "support/naive_semantics.hpp"

#ifndef FREECHR_CLI_PATH
#define FREECHR_CLI_PATH "freechr"
#endif
#ifndef FREECHR_GOLDEN_DIR
#define FREECHR_GOLDEN_DIR "golden"
#endif

namespace {

using freechr::DfaConstraint;
using freechr::DfaState;
using freechr::Multiset;
using freechr::Program;
using freechr::Rule;

struct Check {
  std::vector<std::string> failures;

  void require(bool condition, const std::string& message) {
    if (!condition && failures.size() < 8) failures.push_back(message);
  }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_seconds;  // 0 = no limit stated
  std::function<void(Check&)> body;
};

// ---------------------------------------------------------------- helpers

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct CommandResult {
  std::string output;
  int exit_code = -1;
};

CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot spawn: " + command);
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// All sorted bags of `size` values drawn from lo..hi.
std::vector<std::vector<int>> bags_of(std::size_t size, int lo, int hi) {
  std::vector<std::vector<int>> bags{{}};
  for (std::size_t round = 0; round < size; ++round) {
    std::vector<std::vector<int>> next;
    for (const auto& bag : bags)
      for (int v = bag.empty() ? lo : bag.back(); v <= hi; ++v) {
        auto grown = bag;
        grown.push_back(v);
        next.push_back(std::move(grown));
      }
    bags = std::move(next);
  }
  return bags;
}

int fold_gcd(const std::vector<int>& values) {
  return std::accumulate(values.begin(), values.end(), 0,
                         [](int acc, int v) { return std::gcd(acc, v); });
}

// Reference automaton for a(ba)*, evaluated directly.
bool reference_accepts(const std::string& word) {
  enum { kS1, kS2, kFail } state = kS1;
  for (char c : word) {
    switch (state) {
      case kS1: state = (c == 'a') ? kS2 : kFail; break;
      case kS2: state = (c == 'b') ? kS1 : kFail; break;
      case kFail: break;
    }
  }
  return state == kS2;
}

// Shared random corpus for the soundness and completeness criteria.
struct Corpus {
  std::vector<Multiset<int>> gcd_states;
  std::vector<Multiset<int>> min_states;
  std::vector<Multiset<DfaConstraint>> dfa_states;
};

const Corpus& corpus() {
  static const Corpus instance = [] {
    Corpus c;
    testgen::Rng rng(20230707);
    for (int i = 0; i < 80; ++i)
      c.gcd_states.push_back(testgen::random_int_state(rng, 5, 10));
    for (int i = 0; i < 80; ++i)
      c.min_states.push_back(testgen::random_int_state(rng, 5, 10));
    for (int i = 0; i < 80; ++i)
      c.dfa_states.push_back(testgen::random_dfa_state(rng, 5, 4));
    return c;
  }();
  return instance;
}

template <typename C>
void check_soundness(Check& check, const Program<C>& program,
                     const std::vector<Multiset<C>>& states,
                     const std::string& label) {
  for (const auto& state : states) {
    const auto result = freechr::run(program, state, 300);
    for (const auto& record : result.trace) {
      const auto successors = freechr::successors(program, record.pre_state);
      check.require(successors.contains(record.post_state),
                    label + ": engine step " +
                        freechr::render_step(record) +
                        " is not an oracle step");
    }
  }
}

template <typename C>
void check_completeness(Check& check, const Program<C>& program,
                        const std::vector<Multiset<C>>& states,
                        const std::string& label) {
  const auto rules = program.leaves();
  for (const auto& state : states) {
    const auto report = freechr::reachable(program, state, 6);
    std::set<std::vector<C>> bfs_set;
    for (const auto& reached : report.reachable)
      bfs_set.insert(reached.canonical_form());
    const auto dfs_set =
        naive::dfs_reachable(rules, state.canonical_form(), 6);
    check.require(bfs_set == dfs_set,
                  label + ": reachable sets differ from " +
                      freechr::to_string(state) + " (oracle " +
                      std::to_string(bfs_set.size()) + ", naive " +
                      std::to_string(dfs_set.size()) + ")");
  }
}

// The twelve 3-leaf composition trees over a fixed leaf triple.
std::vector<Program<int>> three_leaf_variants() {
  const auto zero = freechr::make_rule(freechr::gcd_program().leaves()[0]);
  const auto subtract =
      freechr::make_rule(freechr::gcd_program().leaves()[1]);
  const auto min = freechr::make_rule(freechr::min_program().leaves()[0]);
  std::vector<Program<int>> leaves{zero, subtract, min};
  std::vector<std::size_t> order{0, 1, 2};
  std::vector<Program<int>> variants;
  do {
    const auto& a = leaves[order[0]];
    const auto& b = leaves[order[1]];
    const auto& c = leaves[order[2]];
    variants.push_back(freechr::compose(freechr::compose(a, b), c));
    variants.push_back(freechr::compose(a, freechr::compose(b, c)));
  } while (std::next_permutation(order.begin(), order.end()));
  return variants;
}

// ---------------------------------------------------------------- criteria

void criterion_gcd_derivation(Check& check) {
  const auto result = freechr::run(freechr::gcd_program(), {4, 6}, 100);
  check.require(result.status == freechr::RunStatus::Final,
                "run did not reach a final state");
  const std::vector<std::string> rules{"subtract", "subtract", "subtract",
                                       "zero"};
  const std::vector<Multiset<int>> states{
      {4, 6}, {4, 2}, {2, 2}, {2, 0}, {2}};
  check.require(result.trace.size() == rules.size(),
                "trace has " + std::to_string(result.trace.size()) +
                    " steps, expected 4");
  if (result.trace.size() == rules.size()) {
    for (std::size_t i = 0; i < rules.size(); ++i) {
      check.require(result.trace[i].rule_name == rules[i],
                    "step " + std::to_string(i + 1) + " used rule " +
                        result.trace[i].rule_name);
      check.require(result.trace[i].pre_state == states[i] &&
                        result.trace[i].post_state == states[i + 1],
                    "step " + std::to_string(i + 1) + " rewrote " +
                        freechr::render_step(result.trace[i]));
    }
  }
  check.require(result.final_state == Multiset<int>{2},
                "final state is " + freechr::to_string(result.final_state));
}

void criterion_negative_transition(Check& check) {
  const auto subtract = freechr::gcd_program().leaves()[1];
  check.require(freechr::find_matches(subtract, {0, 6}).empty(),
                "subtract matched {0, 6}");
  check.require(freechr::find_matches(subtract, {4, 6}).size() == 1,
                "subtract should match {4, 6} exactly once");
}

void criterion_soundness(Check& check) {
  check_soundness(check, freechr::gcd_program(), corpus().gcd_states, "gcd");
  check_soundness(check, freechr::min_program(), corpus().min_states, "min");
  check_soundness(check, freechr::dfa_program(), corpus().dfa_states, "dfa");
}

void criterion_completeness(Check& check) {
  check_completeness(check, freechr::gcd_program(), corpus().gcd_states,
                     "gcd");
  check_completeness(check, freechr::min_program(), corpus().min_states,
                     "min");
  check_completeness(check, freechr::dfa_program(), corpus().dfa_states,
                     "dfa");
}

void criterion_catamorphism_laws(Check& check) {
  testgen::Rng rng(5550123);
  auto count_rho = [](const Rule<int>&) { return std::size_t{1}; };
  auto count_nu = [](std::size_t l, std::size_t r) { return l + r; };
  for (int iteration = 0; iteration < 500; ++iteration) {
    const auto p = testgen::random_program(rng, 8, 4, 0);
    const auto q = testgen::random_program(rng, 8, 4, 100);
    check.require(p.fold(count_rho, count_nu) == p.leaf_count(),
                  "counting fold differs from leaf count");
    const auto rebuilt =
        p.fold([](const Rule<int>& r) { return freechr::make_rule(r); },
               [](Program<int> l, Program<int> r) {
                 return freechr::compose(std::move(l), std::move(r));
               });
    check.require(testgen::shape(rebuilt) == testgen::shape(p),
                  "constructor fold is not the identity");
    const auto composed = freechr::compose(p, q);
    check.require(composed.fold(count_rho, count_nu) ==
                      count_nu(p.fold(count_rho, count_nu),
                               q.fold(count_rho, count_nu)),
                  "fold does not distribute over composition");
  }
}

void criterion_association_invariance(Check& check) {
  const auto variants = three_leaf_variants();
  std::vector<Multiset<int>> states{Multiset<int>{}};
  for (std::size_t size = 1; size <= 3; ++size)
    for (const auto& bag : bags_of(size, 0, 6))
      states.emplace_back(bag);
  for (const auto& state : states) {
    const auto reference = freechr::reachable(variants[0], state, 24);
    check.require(!reference.truncated,
                  "closure truncated from " + freechr::to_string(state));
    for (std::size_t i = 1; i < variants.size(); ++i) {
      const auto report = freechr::reachable(variants[i], state, 24);
      const bool same = report.reachable == reference.reachable &&
                        report.finals == reference.finals &&
                        report.truncated == reference.truncated;
      check.require(same, "variant " + std::to_string(i) + " differs from " +
                              freechr::to_string(state));
    }
  }
}

void criterion_embedding_laws(Check& check) {
  testgen::Rng rng(90210);
  for (int iteration = 0; iteration < 200; ++iteration) {
    const auto p = testgen::random_program(rng, 6, 3, 0);
    const auto q = testgen::random_program(rng, 6, 3, 50);
    auto expected = freechr::embed(p);
    for (auto& rule : freechr::embed(q)) expected.push_back(std::move(rule));
    check.require(freechr::render(freechr::embed(freechr::compose(p, q))) ==
                      freechr::render(expected),
                  "embed of a composition is not the concatenation");
  }
  const std::string golden =
      read_file(std::string(FREECHR_GOLDEN_DIR) + "/embed_gcd.txt");
  check.require(freechr::render(freechr::embed(freechr::gcd_program())) ==
                    golden,
                "embed(gcd) differs from the golden rendering");
}

void criterion_dfa_language(Check& check) {
  std::vector<std::string> words{""};
  int checked = 0;
  for (std::size_t length = 1; length <= 6; ++length) {
    std::vector<std::string> longer;
    for (const auto& word : words)
      if (word.size() == length - 1)
        for (char c : {'a', 'b'}) longer.push_back(word + c);
    for (const auto& word : longer) {
      const auto result = freechr::run(
          freechr::dfa_program(),
          {DfaConstraint{word, DfaState::S1}}, 100);
      const bool accepted =
          result.final_state ==
          Multiset<DfaConstraint>{DfaConstraint{"", DfaState::S2}};
      check.require(accepted == reference_accepts(word),
                    "word '" + word + "': engine says " +
                        (accepted ? "accept" : "reject") +
                        ", reference disagrees");
      ++checked;
    }
    words.insert(words.end(), longer.begin(), longer.end());
  }
  check.require(checked == 126,
                "checked " + std::to_string(checked) + " words, expected 126");
}

void criterion_gcd_arithmetic(Check& check) {
  for (std::size_t size = 2; size <= 3; ++size) {
    for (const auto& bag : bags_of(size, 1, 12)) {
      const auto result =
          freechr::run(freechr::gcd_program(), Multiset<int>(bag), 500);
      check.require(result.status == freechr::RunStatus::Final,
                    "gcd run hit the step limit");
      check.require(result.final_state == Multiset<int>{fold_gcd(bag)},
                    "gcd of " + freechr::to_string(Multiset<int>(bag)) +
                        " computed as " +
                        freechr::to_string(result.final_state));
    }
  }
  for (const auto& zeros : {Multiset<int>{0, 0}, Multiset<int>{0, 0, 0}}) {
    const auto result = freechr::run(freechr::gcd_program(), zeros, 100);
    check.require(result.final_state == Multiset<int>{},
                  "all-zero input did not reduce to {}");
  }
}

void criterion_confluence(Check& check) {
  for (std::size_t size = 2; size <= 3; ++size) {
    for (const auto& bag : bags_of(size, 1, 12)) {
      const auto report =
          freechr::reachable(freechr::gcd_program(), Multiset<int>(bag), 64);
      check.require(!report.truncated, "closure truncated");
      check.require(report.finals.size() == 1,
                    "finals of " + freechr::to_string(Multiset<int>(bag)) +
                        " not a singleton");
      check.require(report.finals ==
                        std::set<Multiset<int>>{{fold_gcd(bag)}},
                    "final of " + freechr::to_string(Multiset<int>(bag)) +
                        " is not the gcd");
    }
  }
}

void criterion_cli(Check& check) {
  const std::string cli = FREECHR_CLI_PATH;
  const std::string golden_dir = FREECHR_GOLDEN_DIR;
  struct Invocation {
    std::string arguments;
    std::string golden;
    int exit_code;
  };
  const std::vector<Invocation> invocations{
      {" run gcd \"{4,6}\" --max-steps 100", "run_gcd_4_6.txt", 0},
      {" oracle gcd \"{4,6}\" --depth 10", "oracle_gcd_4_6.txt", 0},
      {" embed gcd", "embed_gcd.txt", 0},
  };
  for (const auto& invocation : invocations) {
    const auto result = run_command("\"" + cli + "\"" + invocation.arguments);
    const auto expected = read_file(golden_dir + "/" + invocation.golden);
    check.require(result.output == expected,
                  invocation.golden + ": output differs\n--- got ---\n" +
                      result.output);
    check.require(result.exit_code == invocation.exit_code,
                  invocation.golden + ": exit code " +
                      std::to_string(result.exit_code) + ", expected " +
                      std::to_string(invocation.exit_code));
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "gcd derivation reproduction", 1.0, criterion_gcd_derivation},
      {2, "negative transition", 0.0, criterion_negative_transition},
      {3, "desk-scale soundness", 30.0, criterion_soundness},
      {4, "desk-scale completeness surrogate", 60.0, criterion_completeness},
      {5, "catamorphism laws", 0.0, criterion_catamorphism_laws},
      {6, "association/permutation invariance", 0.0,
       criterion_association_invariance},
      {7, "embedding laws", 0.0, criterion_embedding_laws},
      {8, "dfa language property", 5.0, criterion_dfa_language},
      {9, "gcd arithmetic property", 60.0, criterion_gcd_arithmetic},
      {10, "confluence at desk scale", 0.0, criterion_confluence},
      {11, "cli end-to-end", 0.0, criterion_cli},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start)
            .count();
    if (criterion.time_limit_seconds > 0 &&
        elapsed > criterion.time_limit_seconds)
      check.failures.push_back(
          "took " + std::to_string(elapsed) + "s, limit " +
          std::to_string(criterion.time_limit_seconds) + "s");
    const bool passed = check.failures.empty();
    failed += passed ? 0 : 1;
    std::printf("[%2d] %s  %s (%.2fs)\n", criterion.id,
                passed ? "PASS" : "FAIL", criterion.title.c_str(), elapsed);
    for (const auto& failure : check.failures)
      std::printf("      - %s\n", failure.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
