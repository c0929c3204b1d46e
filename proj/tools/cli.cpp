#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "jackpoly/errors.hpp"
#include "jackpoly/export.hpp"
#include "jackpoly/jack.hpp"
#include "jackpoly/parallel.hpp"
#include "jackpoly/text_format.hpp"
#include "jackpoly/verify.hpp"

namespace jackpoly::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalFlags {
  std::string format;
  unsigned jobs = 1;
  std::string alpha;
};

AlphaValue alpha_value(const GlobalFlags& flags) {
  if (flags.alpha.empty()) return std::nullopt;
  try {
    return parse_rational(flags.alpha);
  } catch (const ParseError&) {
    throw UsageError("--alpha expects an exact rational P/Q, got \"" + flags.alpha + "\"");
  }
}

std::string format_or(const GlobalFlags& flags, const std::string& fallback,
                      std::initializer_list<std::string_view> allowed, const char* command) {
  const std::string f = flags.format.empty() ? fallback : flags.format;
  for (auto a : allowed) {
    if (a == f) return f;
  }
  throw UsageError(std::string(command) + " does not support --format " + f);
}

int compute(const GlobalFlags& flags, const std::string& partition_text, std::size_t n, bool show_poly,
            std::ostream& out) {
  const std::string format = format_or(flags, "plain", {"plain", "json", "csv"}, "compute");
  const AlphaValue alpha = alpha_value(flags);
  Partition lambda;
  try {
    lambda = Partition::parse(partition_text);
  } catch (const InvalidPartition& e) {
    throw UsageError(e.what());
  }
  try {
    require_fits(lambda, n);
  } catch (const PartitionTooLong& e) {
    throw UsageError(e.what());
  }
  RodriguesOptions options;
  options.jobs = flags.jobs;
  const JackResult result = rodrigues_jack(lambda, n, options);

  if (format == "plain") {
    out << render_plain(result, alpha) << "\n";
    if (show_poly) out << "J[" << lambda.to_string() << "](x) = " << render(result.poly) << "\n";
  } else if (format == "json") {
    out << to_json(result, alpha).dump() << "\n";
  } else {
    out << csv_header() << "\n";
    for (const auto& row : table_rows(result)) out << to_csv(row, alpha) << "\n";
  }
  return kSuccess;
}

int table(const GlobalFlags& flags, unsigned max_weight, const std::string& output_path, std::ostream& out) {
  const std::string format = format_or(flags, "csv", {"csv", "json"}, "table");
  const AlphaValue alpha = alpha_value(flags);

  std::ofstream file;
  if (!output_path.empty()) {
    file.open(output_path);
    if (!file) throw UsageError("cannot write to " + output_path);
  }
  std::ostream& sink = output_path.empty() ? out : file;

  std::vector<Partition> lambdas;
  for (unsigned w = 1; w <= max_weight; ++w) {
    for (auto& p : partitions_of(w)) lambdas.push_back(std::move(p));
  }
  const auto blocks = parallel_map(lambdas.size(), flags.jobs, [&](std::size_t k) {
    return table_rows(rodrigues_jack(lambdas[k], lambdas[k].weight()));
  });

  if (format == "csv") {
    sink << csv_header() << "\n";
    for (const auto& rows : blocks) {
      for (const auto& row : rows) sink << to_csv(row, alpha) << "\n";
    }
  } else {
    sink << "[";
    bool first = true;
    for (const auto& rows : blocks) {
      for (const auto& row : rows) {
        sink << (first ? "\n  " : ",\n  ") << to_json(row, alpha).dump();
        first = false;
      }
    }
    sink << (first ? "]\n" : "\n]\n");
  }
  sink.flush();
  if (!sink) throw UsageError("failed writing " + (output_path.empty() ? std::string("output") : output_path));
  return kSuccess;
}

int verify(const GlobalFlags& flags, unsigned max_weight, const std::string& checks_text, std::ostream& out) {
  const std::string format = format_or(flags, "plain", {"plain", "json"}, "verify");
  if (!flags.alpha.empty()) throw UsageError("--alpha applies to compute and table only");
  if (max_weight < 1) throw UsageError("--max-weight must be at least 1");

  VerifyOptions options;
  options.max_weight = max_weight;
  options.jobs = flags.jobs;
  if (checks_text.empty() || checks_text == "all") {
    options.checks = all_checks();
  } else {
    std::stringstream ss(checks_text);
    std::string name;
    while (std::getline(ss, name, ',')) {
      const auto c = parse_check(name);
      if (!c) throw UsageError("unknown check \"" + name + "\"");
      options.checks.push_back(*c);
    }
  }

  const VerifyReport report = run_verification(options);
  if (format == "plain") {
    out << report.render();
  } else {
    nlohmann::ordered_json j;
    j["max_weight"] = max_weight;
    j["all_passed"] = report.all_passed();
    auto checks = nlohmann::ordered_json::array();
    for (const auto& o : report.outcomes) {
      nlohmann::ordered_json c{{"name", check_name(o.check)}, {"passed", o.passed}, {"total", o.total}};
      if (o.counterexample) c["counterexample"] = *o.counterexample;
      checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    out << j.dump(2) << "\n";
  }
  return report.all_passed() ? kSuccess : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jack polynomials from creation operators, with exact verification", "jackpoly"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_option("--format", flags.format, "plain | json | csv (per command)");
  app.add_option("--jobs", flags.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--alpha", flags.alpha, "print coefficients evaluated at alpha = P/Q");

  std::string partition_text;
  std::size_t n = 0;
  bool show_poly = false;
  auto* compute_cmd = app.add_subcommand("compute", "expand one Jack polynomial in the monomial basis");
  compute_cmd->add_option("--partition", partition_text, "comma-separated parts, e.g. 3,1,1")->required();
  compute_cmd->add_option("--n", n, "number of variables")->required()->check(CLI::PositiveNumber);
  compute_cmd->add_flag("--poly", show_poly, "also print the polynomial in x (plain format)");

  unsigned verify_weight = 4;
  std::string checks_text;
  auto* verify_cmd = app.add_subcommand("verify", "check identities for every partition up to a weight");
  verify_cmd->add_option("--max-weight", verify_weight, "largest partition weight")->capture_default_str();
  verify_cmd->add_option("--checks", checks_text, "comma-separated subset of: eigen, orthogonality, triangularity, "
                                                  "normalization, integrality, positivity, commutator, "
                                                  "dunkl-relations, oracle (default: all)");

  unsigned table_weight = 0;
  std::string output_path;
  auto* table_cmd = app.add_subcommand("table", "export v and v-tilde for every partition up to a weight");
  table_cmd->add_option("--max-weight", table_weight, "largest partition weight")->required();
  table_cmd->add_option("--output", output_path, "write to a file instead of standard output");

  std::vector<const char*> argv{"jackpoly"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "jackpoly: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (compute_cmd->parsed()) return compute(flags, partition_text, n, show_poly, out);
    if (verify_cmd->parsed()) return verify(flags, verify_weight, checks_text, out);
    if (table_cmd->parsed()) return table(flags, table_weight, output_path, out);
  } catch (const UsageError& e) {
    err << "jackpoly: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "jackpoly: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace jackpoly::cli
