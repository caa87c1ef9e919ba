// Command-line driver: verify | oracle | trace-table | order-census.
//
// Exit codes: 0 pass, 1 fail, 2 invalid parameters (or an oracle run that
// does not fit the enumeration budget).

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "beauville/report.hpp"

namespace {

using namespace beauville;

struct Options {
  std::uint64_t p = 0, q = 0, r = 0;
  bool json = false;
  std::optional<std::uint64_t> budget;
  std::string variant = "auto";
  unsigned max_exponent = 28;
  bool powers = false;
};

std::uint64_t resolve_budget(const Options& o) {
  if (o.budget) return *o.budget;
  if (const char* env = std::getenv("BEAUVILLE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed BEAUVILLE_BUDGET=" << env << '\n';
    }
  }
  return kDefaultBudget;
}

WordVariant parse_variant(const std::string& s) {
  if (s == "short") return WordVariant::Short;
  if (s == "long") return WordVariant::Long;
  return WordVariant::Auto;
}

GroupParams structure_params(const Options& o) {
  GroupParams params(o.p, o.q, o.r);
  if (!params.supports_structure()) {
    throw InvalidParams("r = 3 with p = 3 is too small: C_3 wr C_3 has no Beauville quotient; use r > 3");
  }
  return params;
}

void print_human(const VerifyReport& rep, double seconds) {
  std::cout << "C_" << rep.q << " wr C_" << rep.r << " / Z  (p = " << rep.p << ")\n";
  for (const auto& c : rep.checks) {
    std::cout << (c.pass ? "  [PASS] " : "  [FAIL] ") << std::left << std::setw(28) << c.name;
    if (c.name == "witness") std::cout << c.details["pair2"].get<std::string>();
    if (c.details.contains("skipped")) std::cout << "skipped: " << c.details["skipped"].get<std::string>();
    if (c.name == "conj-invariant-validation") {
      for (const char* part : {"group", "quotient"}) {
        const auto& d = c.details[part];
        std::cout << part << (d.contains("skipped") ? " skipped" : " " + std::to_string(d["classes"].get<std::size_t>()) + " classes")
                  << (std::string(part) == "group" ? ", " : "");
      }
    }
    if (c.name == "relations") std::cout << "order " << c.details["group_order"].get<std::string>();
    if (c.name == "reconstruction" && c.details.contains("length")) {
      std::cout << "word of length " << c.details["length"].get<std::size_t>();
    }
    if (c.name == "double-dagger") {
      std::cout << c.details["comparisons"].get<std::uint64_t>() << " comparisons, "
                << c.details["collisions"].size() << " trace collisions";
    }
    if (c.name == "quotient-direct" && c.details.contains("order")) {
      std::cout << "|G/Z| = " << c.details["order"].get<std::uint64_t>();
    }
    std::cout << '\n';
  }
  std::cout << "verdict: " << (rep.verdict ? "pass" : "fail") << "  (" << std::fixed << std::setprecision(2)
            << seconds << " s)\n";
}

int run_pipeline(const Options& o, bool oracle) {
  auto params = structure_params(o);
  auto start = std::chrono::steady_clock::now();
  auto rep = oracle ? run_oracle(params, parse_variant(o.variant), resolve_budget(o))
                    : run_verify(params, parse_variant(o.variant), resolve_budget(o));
  std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  if (o.json) {
    std::cout << Json(rep).dump(2) << '\n';
  } else {
    print_human(rep, elapsed.count());
  }
  return rep.verdict ? 0 : 1;
}

int run_trace_table(const Options& o) {
  GroupParams params(o.p, o.q, o.r);
  auto rep = verify_trace_formulas(params);
  if (o.json) {
    Json fams = Json::array();
    auto families = trace_families(params);
    for (std::size_t k = 0; k < families.size(); ++k) {
      Json f{{"family", rep.families[k].formula},
             {"closed_form", rep.families[k].closed_form},
             {"ok", rep.families[k].ok}};
      if (o.powers) {
        Json rows = Json::array();
        auto g = families[k].element(params);
        auto cur = g;
        for (std::uint64_t i = 1; !cur.is_identity(); ++i, cur = cur * g) {
          rows.push_back(Json{{"i", i}, {"trace", cyc_to_json(trace(cur))}});
        }
        f["powers"] = rows;
      }
      fams.push_back(f);
    }
    std::cout << Json{{"version", kVersion},
                      {"params", Json{{"p", o.p}, {"q", o.q}, {"r", o.r}}},
                      {"families", fams},
                      {"verdict", rep.passed() ? "pass" : "fail"}}
                     .dump(2)
              << '\n';
  } else {
    auto families = trace_families(params);
    for (std::size_t k = 0; k < rep.families.size(); ++k) {
      const auto& f = rep.families[k];
      std::cout << f.formula << (f.ok ? "" : "   MISMATCH") << (f.closed_form ? "" : "   [five-term word]") << '\n';
      if (o.powers) {
        auto g = families[k].element(params);
        auto cur = g;
        for (std::uint64_t i = 1; !cur.is_identity(); ++i, cur = cur * g) {
          std::cout << "    i=" << i << ": " << trace(cur).to_string() << '\n';
        }
      }
    }
    if (rep.counterexample) {
      std::cout << "counterexample: " << rep.counterexample->family << " at i=" << rep.counterexample->power
                << ": expected " << rep.counterexample->expected << ", computed " << rep.counterexample->computed
                << '\n';
    }
  }
  return rep.passed() ? 0 : 1;
}

int run_census(const Options& o) {
  auto census = order_census(o.p, o.max_exponent);
  auto pair = [&](const CensusEntry& e) {
    return "(" + std::to_string(o.p) + "^" + std::to_string(e.q_exponent) + ", " + std::to_string(o.p) + "^" +
           std::to_string(e.r_exponent) + ")";
  };
  if (o.json) {
    Json entries = Json::array();
    for (const auto& e : census.entries) {
      entries.push_back(Json{{"q_exponent", e.q_exponent}, {"r_exponent", e.r_exponent}, {"order_exponent", e.order_exponent.str()}});
    }
    Json collisions = Json::array();
    for (const auto& [exp, idx] : census.collisions) {
      Json members = Json::array();
      for (auto i : idx) members.push_back(Json::array({census.entries[i].q_exponent, census.entries[i].r_exponent}));
      collisions.push_back(Json{{"order_exponent", exp.str()}, {"pairs", members}});
    }
    std::cout << Json{{"version", kVersion},
                      {"p", o.p},
                      {"max_exponent", o.max_exponent},
                      {"entries", entries},
                      {"collisions", collisions}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "|G/Z| = p^(b(r-1)+a) for (q, r) = (p^b, p^a), 1 <= a, b <= " << o.max_exponent << '\n';
    std::cout << census.entries.size() << " pairs, " << census.collisions.size() << " shared orders\n";
    for (const auto& [exp, idx] : census.collisions) {
      std::cout << "  " << o.p << '^' << exp << ':';
      for (auto i : idx) std::cout << ' ' << pair(census.entries[i]);
      std::cout << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify C_q wr C_r / Z as strongly real Beauville groups"};
  app.require_subcommand(1);
  Options o;

  auto add_group_flags = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "odd prime")->required();
    sub->add_option("--q", o.q, "base cyclic order, a power of p")->required();
    sub->add_option("--r", o.r, "top cyclic order, a power of p")->required();
    sub->add_flag("--json", o.json, "emit the JSON report");
  };

  auto* verify = app.add_subcommand("verify", "run the full certification pipeline");
  auto* oracle = app.add_subcommand("oracle", "re-derive every verdict by brute-force enumeration of G/Z");
  for (auto* sub : {verify, oracle}) {
    add_group_flags(sub);
    sub->add_option("--budget", o.budget, "max enumerated quotient size (default 100000, env BEAUVILLE_BUDGET)");
    sub->add_option("--variant", o.variant, "second witness word")
        ->check(CLI::IsMember({"auto", "short", "long"}));
  }
  auto* table = app.add_subcommand("trace-table", "print and check the trace families");
  add_group_flags(table);
  table->add_flag("--powers", o.powers, "list the exact trace of every power");
  auto* census = app.add_subcommand("order-census", "orders |G/Z| as exponents of p, with coincidences");
  census->add_option("--p", o.p, "odd prime")->required();
  census->add_option("--max-exponent", o.max_exponent, "largest exponent of q and r (default 28)");
  census->add_flag("--json", o.json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*verify) return run_pipeline(o, false);
    if (*oracle) return run_pipeline(o, true);
    if (*table) return run_trace_table(o);
    if (*census) return run_census(o);
  } catch (const InvalidParams& e) {
    std::cerr << "invalid parameters: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 2;
}
