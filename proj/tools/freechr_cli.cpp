// Command-line runner for the built-in example programs: deterministic
// fixed-point execution with traces, exhaustive reachability reports, and
// the textual CHR embedding of each program.
//
// Exit codes: 0 on a final state / complete report, 2 when the step limit
// was hit or the report is truncated, 1 on usage and parse errors.

#include <cstddef>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <freechr/freechr.hpp>

namespace {

using json = nlohmann::ordered_json;

enum class OutputFormat { Text, Structured };

class ProgramDriver {
public:
  virtual ~ProgramDriver() = default;
  virtual int run_mode(const std::string& literal, std::size_t max_steps,
                       OutputFormat format, std::ostream& out) const = 0;
  virtual int oracle_mode(const std::string& literal, std::size_t depth,
                          OutputFormat format, std::ostream& out) const = 0;
  virtual int embed_mode(OutputFormat format, std::ostream& out) const = 0;
};

template <typename C>
class TypedDriver final : public ProgramDriver {
public:
  using Parser = std::function<freechr::Multiset<C>(std::string_view)>;

  TypedDriver(freechr::Program<C> program, Parser parse)
      : program_(std::move(program)), parse_(std::move(parse)) {}

  int run_mode(const std::string& literal, std::size_t max_steps,
               OutputFormat format, std::ostream& out) const override {
    const freechr::Multiset<C> state = parse_(literal);
    const freechr::RunResult<C> result =
        freechr::run(program_, state, max_steps);
    if (format == OutputFormat::Text) {
      out << freechr::render_trace(result.trace);
      out << "final: " << freechr::to_string(result.final_state) << '\n';
      out << "status: " << freechr::to_string(result.status) << '\n';
    } else {
      std::size_t step = 1;
      for (const auto& record : result.trace) {
        json line = {{"step", step++},
                     {"rule", record.rule_name},
                     {"pre", freechr::to_string(record.pre_state)},
                     {"post", freechr::to_string(record.post_state)}};
        out << line.dump() << '\n';
      }
      json summary = {{"final", freechr::to_string(result.final_state)},
                      {"status", freechr::to_string(result.status)}};
      out << summary.dump() << '\n';
    }
    return result.status == freechr::RunStatus::Final ? 0 : 2;
  }

  int oracle_mode(const std::string& literal, std::size_t depth,
                  OutputFormat format, std::ostream& out) const override {
    const freechr::Multiset<C> state = parse_(literal);
    const freechr::ReachabilityReport<C> report =
        freechr::reachable(program_, state, depth);
    if (format == OutputFormat::Text) {
      out << freechr::render_report(report);
    } else {
      json states = json::array();
      for (const auto& s : report.reachable)
        states.push_back({{"state", freechr::to_string(s)},
                          {"final", report.finals.contains(s)}});
      json doc = {{"start", freechr::to_string(report.start)},
                  {"depth", report.depth_limit},
                  {"states", std::move(states)},
                  {"truncated", report.truncated}};
      out << doc.dump() << '\n';
    }
    return report.truncated ? 2 : 0;
  }

  int embed_mode(OutputFormat format, std::ostream& out) const override {
    const std::vector<freechr::ChrRuleText> rules = freechr::embed(program_);
    if (format == OutputFormat::Text) {
      out << freechr::render(rules);
    } else {
      for (const auto& rule : rules) {
        json line = {{"name", rule.name},
                     {"kept", rule.kept_vars},
                     {"removed", rule.removed_vars},
                     {"guard", rule.guard_text},
                     {"body", rule.body_text}};
        out << line.dump() << '\n';
      }
    }
    return 0;
  }

private:
  freechr::Program<C> program_;
  Parser parse_;
};

std::map<std::string, std::unique_ptr<ProgramDriver>> make_registry() {
  std::map<std::string, std::unique_ptr<ProgramDriver>> registry;
  registry["gcd"] = std::make_unique<TypedDriver<int>>(
      freechr::gcd_program(),
      [](std::string_view s) { return freechr::parse_int_state(s); });
  registry["min"] = std::make_unique<TypedDriver<int>>(
      freechr::min_program(),
      [](std::string_view s) { return freechr::parse_int_state(s); });
  registry["dfa"] = std::make_unique<TypedDriver<freechr::DfaConstraint>>(
      freechr::dfa_program(),
      [](std::string_view s) { return freechr::parse_dfa_state(s); });
  return registry;
}

const ProgramDriver& lookup(
    const std::map<std::string, std::unique_ptr<ProgramDriver>>& registry,
    const std::string& name) {
  auto it = registry.find(name);
  if (it == registry.end()) {
    std::string known;
    for (const auto& [key, driver] : registry) {
      if (!known.empty()) known += ", ";
      known += key;
    }
    throw freechr::Error("unknown program '" + name + "' (available: " +
                         known + ")");
  }
  return *it->second;
}

// `--embed` anywhere on the command line is an alias for the embed
// subcommand, as long as no other mode was named.
std::vector<std::string> rewrite_embed_flag(std::vector<std::string> args) {
  bool found = false;
  std::vector<std::string> rewritten;
  for (std::string& arg : args) {
    if (arg == "--embed") {
      found = true;
      continue;
    }
    rewritten.push_back(std::move(arg));
  }
  if (!found) return rewritten;
  if (!rewritten.empty() &&
      (rewritten.front() == "run" || rewritten.front() == "oracle"))
    throw freechr::Error("--embed conflicts with mode '" + rewritten.front() +
                         "'");
  if (rewritten.empty() || rewritten.front() != "embed")
    rewritten.insert(rewritten.begin(), "embed");
  return rewritten;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Guarded multiset rewriting over the built-in programs",
               "freechr"};
  app.require_subcommand(0, 1);

  const std::map<std::string, OutputFormat> format_names{
      {"text", OutputFormat::Text}, {"structured", OutputFormat::Structured}};

  std::string program_name;
  std::string state_literal;
  std::size_t max_steps = 0;
  std::size_t depth = 0;
  OutputFormat format = OutputFormat::Text;

  CLI::App* run_cmd =
      app.add_subcommand("run", "Run to a fixed point, printing the trace");
  run_cmd->add_option("program", program_name, "Program name")->required();
  run_cmd->add_option("state", state_literal, "Initial state literal")
      ->required();
  run_cmd->add_option("--max-steps", max_steps, "Step limit (required)")
      ->required()
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(format_names));

  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "Exhaustive reachability report up to a depth");
  oracle_cmd->add_option("program", program_name, "Program name")->required();
  oracle_cmd->add_option("state", state_literal, "Initial state literal")
      ->required();
  oracle_cmd->add_option("--depth", depth, "Exploration depth (required)")
      ->required()
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(format_names));

  CLI::App* embed_cmd =
      app.add_subcommand("embed", "Print the program as CHR rule text");
  embed_cmd->add_option("program", program_name, "Program name")->required();
  embed_cmd->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(format_names));

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = rewrite_embed_flag(std::move(args));
    // CLI11 parses reversed argument vectors.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const freechr::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    const auto registry = make_registry();
    if (run_cmd->parsed()) {
      const auto& driver = lookup(registry, program_name);
      return driver.run_mode(state_literal, max_steps, format, std::cout);
    }
    if (oracle_cmd->parsed()) {
      const auto& driver = lookup(registry, program_name);
      return driver.oracle_mode(state_literal, depth, format, std::cout);
    }
    if (embed_cmd->parsed()) {
      const auto& driver = lookup(registry, program_name);
      return driver.embed_mode(format, std::cout);
    }
    std::cerr << app.help();
    return 1;
  } catch (const freechr::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
