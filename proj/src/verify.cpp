#include "jackpoly/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <sstream>
#include <utility>

#include "jackpoly/identities.hpp"
#include "jackpoly/jack.hpp"
#include "jackpoly/oracle.hpp"
#include "jackpoly/parallel.hpp"
#include "jackpoly/text_format.hpp"

namespace jackpoly {

namespace {

constexpr std::array<std::pair<Check, std::string_view>, 9> kNames{{
    {Check::eigen, "eigen"},
    {Check::orthogonality, "orthogonality"},
    {Check::triangularity, "triangularity"},
    {Check::normalization, "normalization"},
    {Check::integrality, "integrality"},
    {Check::positivity, "positivity"},
    {Check::commutator, "commutator"},
    {Check::dunkl_relations, "dunkl-relations"},
    {Check::oracle, "oracle"},
}};

constexpr std::size_t kCommutatorMaxVars = 4;

// Per-case verdicts in canonical order; the first failure carries its text.
using Verdict = std::optional<std::string>;

CheckOutcome tally(Check check, const std::vector<Verdict>& verdicts) {
  CheckOutcome out;
  out.check = check;
  out.total = verdicts.size();
  for (const auto& v : verdicts) {
    if (!v) {
      ++out.passed;
    } else if (!out.counterexample) {
      out.counterexample = *v;
    }
  }
  return out;
}

std::string describe(const JackResult& r) {
  std::ostringstream s;
  s << "lambda = " << r.lambda.to_string() << ", n = " << r.n << "\n  J = " << render(r.poly);
  return s.str();
}

std::string describe_expansion(const MExpansion& e) {
  std::ostringstream s;
  bool first = true;
  for (const auto& [mu, c] : e.coeffs()) {
    if (!first) s << " + ";
    first = false;
    s << render(c) << " m[" << mu.to_string() << "]";
  }
  return first ? "0" : s.str();
}

struct Workspace {
  std::vector<Partition> partitions;  // weight 0..max, each weight descending lex
  std::vector<JackResult> results;    // parallel to partitions
};

Workspace build_workspace(unsigned max_weight, unsigned jobs) {
  Workspace ws;
  for (unsigned w = 0; w <= max_weight; ++w) {
    for (auto& p : partitions_of(w)) ws.partitions.push_back(std::move(p));
  }
  ws.results = parallel_map(ws.partitions.size(), jobs, [&](std::size_t k) {
    return rodrigues_jack(ws.partitions[k], std::max(ws.partitions[k].weight(), 1U));
  });
  return ws;
}

CheckOutcome run_eigen(const Workspace& ws, unsigned jobs) {
  auto verdicts = parallel_map(ws.results.size(), jobs, [&](std::size_t k) -> Verdict {
    const JackResult& r = ws.results[k];
    if (check_eigen(r)) return std::nullopt;
    return "H J != epsilon J for " + describe(r) + "\n  epsilon = " + render(epsilon(r.lambda, r.n));
  });
  return tally(Check::eigen, verdicts);
}

CheckOutcome run_orthogonality(const Workspace& ws, unsigned max_weight) {
  std::vector<Verdict> verdicts;
  for (unsigned w = 1; w <= max_weight; ++w) {
    std::vector<const JackResult*> same;
    for (const auto& r : ws.results) {
      if (r.lambda.weight() == w) same.push_back(&r);
    }
    const ScalarProduct product(w);
    for (std::size_t a = 0; a < same.size(); ++a) {
      for (std::size_t b = a + 1; b < same.size(); ++b) {
        const AlphaRational sp = product(same[a]->expansion, same[b]->expansion);
        if (sp.is_zero()) {
          verdicts.emplace_back();
        } else {
          verdicts.emplace_back("<J_" + same[a]->lambda.to_string() + ", J_" + same[b]->lambda.to_string() +
                                "> = " + render(sp));
        }
      }
    }
  }
  return tally(Check::orthogonality, verdicts);
}

CheckOutcome run_per_result(Check check, const Workspace& ws) {
  std::vector<Verdict> verdicts;
  for (const auto& r : ws.results) {
    switch (check) {
      case Check::triangularity:
        verdicts.push_back(check_triangularity(r) ? Verdict{}
                                                  : Verdict{"expansion not dominance-triangular for " + describe(r) +
                                                            "\n  expansion = " + describe_expansion(r.expansion)});
        break;
      case Check::normalization:
        verdicts.push_back(check_normalization(r) ? Verdict{}
                                                  : Verdict{"m_{1^N} coefficient is not N! for " + describe(r) +
                                                            "\n  expansion = " + describe_expansion(r.expansion)});
        break;
      case Check::integrality:
      case Check::positivity: {
        const ConjectureReport report = conjecture_report(r);
        Verdict v;
        for (const auto& e : report.entries) {
          const bool ok = check == Check::integrality ? e.is_integer_poly : e.is_nonneg_integer_poly;
          if (!ok) {
            v = "lambda = " + r.lambda.to_string() + ", mu = " + e.mu.to_string() + ": v = " + render(e.v) +
                ", v_tilde = " + render(e.tilde_v);
            break;
          }
        }
        verdicts.push_back(std::move(v));
        break;
      }
      default:
        break;
    }
  }
  return tally(check, verdicts);
}

CheckOutcome run_oracle(const Workspace& ws, unsigned max_weight, unsigned jobs) {
  auto tables = parallel_map(max_weight + 1, jobs, [](std::size_t k) { return gram_schmidt_jack(static_cast<unsigned>(k)); });
  std::vector<Verdict> verdicts;
  for (const auto& r : ws.results) {
    const MExpansion& expected = tables[r.lambda.weight()].at(r.lambda);
    if (expected == r.expansion) {
      verdicts.emplace_back();
    } else {
      verdicts.emplace_back("Rodrigues and Gram-Schmidt disagree for " + describe(r) +
                            "\n  rodrigues = " + describe_expansion(r.expansion) +
                            "\n  oracle    = " + describe_expansion(expected));
    }
  }
  return tally(Check::oracle, verdicts);
}

CheckOutcome run_commutator(unsigned max_weight, unsigned jobs) {
  struct Case {
    Partition lambda;
    std::size_t i;
    std::size_t n;
  };
  std::vector<Case> cases;
  const std::size_t max_vars = std::min<std::size_t>(max_weight, kCommutatorMaxVars);
  for (unsigned w = 0; w <= max_weight; ++w) {
    for (const auto& lambda : partitions_of(w, max_vars)) {
      for (std::size_t n = 1; n <= max_vars; ++n) {
        for (std::size_t i = std::max<std::size_t>(lambda.length(), 1); i <= n; ++i) cases.push_back({lambda, i, n});
      }
    }
  }
  auto verdicts = parallel_map(cases.size(), jobs, [&](std::size_t k) -> Verdict {
    const Case& c = cases[k];
    if (check_commutator(c.lambda, c.i, c.n)) return std::nullopt;
    return "[H, B_" + std::to_string(c.i) + "^+] phi mismatch for lambda = " + c.lambda.to_string() +
           ", i = " + std::to_string(c.i) + ", n = " + std::to_string(c.n);
  });
  return tally(Check::commutator, verdicts);
}

CheckOutcome run_dunkl_relations(const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> vars(2, 4);
  const unsigned max_degree = std::min(options.max_weight, 5U);
  std::vector<Verdict> verdicts;
  for (std::size_t c = 0; c < options.commutation_cases; ++c) {
    const std::size_t n = vars(rng);
    const MultiPoly f = random_monomial(rng, n, max_degree);
    Verdict v;
    for (std::size_t i = 1; i <= n && !v; ++i) {
      for (std::size_t j = i + 1; j <= n && !v; ++j) {
        if (!dunkl_commutation_holds(f, i, j)) {
          v = "[D_" + std::to_string(i) + ", D_" + std::to_string(j) + "] != (D_j - D_i) K_ij on f = " + render(f);
        }
      }
    }
    verdicts.push_back(std::move(v));
  }
  for (std::size_t c = 0; c < options.restricted_cases; ++c) {
    const std::size_t n = vars(rng);
    std::uniform_int_distribution<std::size_t> idx(1, n);
    std::size_t i = idx(rng);
    std::size_t j = idx(rng);
    while (j == i) j = idx(rng);
    const MultiPoly f = random_pair_symmetric(rng, n, i, j, max_degree, 4);
    Verdict v;
    for (long m = 0; m <= 3 && !v; ++m) {
      if (!restricted_identity_holds(f, i, j, m)) {
        v = "restricted identity fails for i = " + std::to_string(i) + ", j = " + std::to_string(j) +
            ", m = " + std::to_string(m) + " on f = " + render(f);
      }
    }
    verdicts.push_back(std::move(v));
  }
  return tally(Check::dunkl_relations, verdicts);
}

}  // namespace

std::vector<Check> all_checks() {
  std::vector<Check> out;
  for (const auto& [c, name] : kNames) out.push_back(c);
  return out;
}

std::string_view check_name(Check c) {
  for (const auto& [check, name] : kNames) {
    if (check == c) return name;
  }
  return "?";
}

std::optional<Check> parse_check(std::string_view name) {
  for (const auto& [check, n] : kNames) {
    if (n == name) return check;
  }
  return std::nullopt;
}

bool VerifyReport::all_passed() const noexcept {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const CheckOutcome& o) { return o.ok(); });
}

std::string VerifyReport::render() const {
  std::ostringstream out;
  const CheckOutcome* first_failure = nullptr;
  for (const auto& o : outcomes) {
    out << check_name(o.check) << ": " << o.passed << "/" << o.total << " pass";
    if (!o.ok()) {
      out << ", " << (o.total - o.passed) << " FAIL";
      if (!first_failure) first_failure = &o;
    }
    out << "\n";
  }
  if (first_failure && first_failure->counterexample) {
    out << "first counterexample (" << check_name(first_failure->check) << "):\n  " << *first_failure->counterexample
        << "\n";
  }
  return out.str();
}

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  report.max_weight = options.max_weight;
  const auto selected = [&](Check c) {
    return std::find(options.checks.begin(), options.checks.end(), c) != options.checks.end();
  };
  const bool needs_results = std::any_of(options.checks.begin(), options.checks.end(), [](Check c) {
    return c != Check::commutator && c != Check::dunkl_relations;
  });
  Workspace ws;
  if (needs_results) ws = build_workspace(options.max_weight, options.jobs);

  for (Check c : all_checks()) {
    if (!selected(c)) continue;
    switch (c) {
      case Check::eigen:
        report.outcomes.push_back(run_eigen(ws, options.jobs));
        break;
      case Check::orthogonality:
        report.outcomes.push_back(run_orthogonality(ws, options.max_weight));
        break;
      case Check::triangularity:
      case Check::normalization:
      case Check::integrality:
      case Check::positivity:
        report.outcomes.push_back(run_per_result(c, ws));
        break;
      case Check::commutator:
        report.outcomes.push_back(run_commutator(options.max_weight, options.jobs));
        break;
      case Check::dunkl_relations:
        report.outcomes.push_back(run_dunkl_relations(options));
        break;
      case Check::oracle:
        report.outcomes.push_back(run_oracle(ws, options.max_weight, options.jobs));
        break;
    }
  }
  return report;
}

}  // namespace jackpoly
