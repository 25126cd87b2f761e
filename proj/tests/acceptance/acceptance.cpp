// One line per acceptance criterion: "criterion N: PASS|FAIL  title (details)".
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "gpc/oracle.hpp"

namespace {
  using Clock = std::chrono::steady_clock;

  struct Outcome {
    bool        passed = false;
    std::string detail;
  };

  struct Criterion {
    int                      number;
    std::string              title;
    double                   limit_seconds;
    std::function<Outcome()> run;
  };

  std::uint64_t const seed = 1;

  std::string data(std::string const& file) {
    return std::string(GPC_TEST_DATA_DIR) + "/" + file;
  }

  Outcome suites(std::vector<std::string> const& names,
                 std::vector<std::size_t> const& minimum_trials) {
    Outcome     out{true, ""};
    std::size_t i = 0;
    for (auto const& name : names) {
      auto trials = std::max(gpc::default_trials(name), minimum_trials[i++]);
      auto r      = gpc::check_suite(name, seed, trials);
      out.passed  = out.passed && r.passed();
      out.detail += (out.detail.empty() ? "" : "; ") + name + " "
                    + std::to_string(r.trials) + " trials, "
                    + std::to_string(r.failures) + " failures";
      if (r.counterexample) {
        out.detail += ", counterexample " + *r.counterexample;
      }
      if (!r.passed()) {
        std::cerr << gpc::to_string(r);
      }
    }
    return out;
  }

  std::string note(gpc::SuiteReport const& r, std::string const& key) {
    for (auto const& n : r.notes) {
      if (n.rfind(key + " = ", 0) == 0) {
        return n.substr(key.size() + 3);
      }
    }
    return "";
  }

  std::pair<int, std::string> cli(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int                rc = gpc::cli::run(args, out, err);
    return {rc, out.str() + err.str()};
  }

  std::vector<std::vector<std::string>> golden_commands() {
    return {
        {"--spec", data("ex2gen.gp"), "nf", "a*c*a*c*a*c"},
        {"--spec", data("ex1.gp"), "kernel", "v1", "v1*v3*v1^-1"},
        {"--spec", data("ex1.gp"), "--json", "compress", "v1*v3*v1^-1*v3^-1", "v2"},
        {"--spec", data("ex2gen.gp"), "--json", "classify", "a*c", "b*c"},
        {"--spec", data("racg2.gp"), "tree", "u", "u*w", "u*w*u"},
        {"--spec", data("square.gp"), "--json", "classify", "a*c", "b*d^2"},
        {"--spec", data("square.gp"), "pc", "b*a*c*b^-1"},
    };
  }
}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "normal forms match the rewriting oracle", 60,
       [] { return suites({"nf_minimality"}, {10000}); }},
      {2, "parabolic intersection matches ball intersection", 120,
       [] { return suites({"prop_3_4"}, {1000}); }},
      {3, "kernel maps are mutually inverse and shrink lengths", 60,
       [] {
         auto out = suites({"thm_5_1", "kernel_roundtrip"}, {0, 0});
         auto r   = gpc::check_suite("thm_5_1", seed, 0);
         auto v   = note(r, "ex1_delta_vertices");
         auto e   = note(r, "ex1_delta_edges");
         out.passed = out.passed && v == "4" && e == "3";
         out.detail += "; ex1 census " + v + " vertices, " + e + " edges";
         return out;
       }},
      {4, "compress terminates with the promised output", 120,
       [] { return suites({"prop_5_6"}, {500}); }},
      {5, "normalizers match ball normalizers", 60,
       [] { return suites({"prop_3_13"}, {1000}); }},
      {6, "non-commuting RAAG pairs satisfy no short relation", 60,
       [] { return suites({"baudisch"}, {1000}); }},
      {7, "RAAG subgroups are free abelian or certified free", 120,
       [] {
         // An Unknown verdict counts as a dichotomy failure.
         return suites({"dichotomy", "rank_bound"}, {1000, 0});
       }},
      {8, "two-generator fixture relation and verdict", 5,
       [] { return suites({"ex_2gen"}, {0}); }},
      {9, "tree actions match the coset tree", 60,
       [] { return suites({"bass_serre"}, {300}); }},
      {10, "suites and CLI output are deterministic", 600,
       [] {
         Outcome out{true, ""};
         std::size_t suites_checked = 0;
         for (auto const& name : gpc::suite_names()) {
           auto t = gpc::default_trials(name);
           auto a = gpc::to_string(gpc::check_suite(name, seed, t));
           auto b = gpc::to_string(gpc::check_suite(name, seed, t));
           if (a != b) {
             out.passed = false;
             out.detail += "suite " + name + " differs; ";
           }
           ++suites_checked;
         }
         std::size_t commands = 0;
         for (auto const& args : golden_commands()) {
           auto a = cli(args);
           auto b = cli(args);
           if (a != b || a.first != 0) {
             out.passed = false;
             out.detail += "command " + args[3] + " unstable or failed; ";
           }
           ++commands;
         }
         out.detail += std::to_string(suites_checked) + " suites rerun, "
                       + std::to_string(commands) + " commands rerun";
         return out;
       }},
  };

  int failed = 0;
  for (auto const& c : criteria) {
    auto const start   = Clock::now();
    auto       outcome = c.run();
    double     seconds = std::chrono::duration<double>(Clock::now() - start).count();
    bool       in_time = seconds <= c.limit_seconds;
    bool       ok      = outcome.passed && in_time;
    failed += ok ? 0 : 1;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", seconds, c.limit_seconds);
    std::cout << "criterion " << c.number << ": " << (ok ? "PASS" : "FAIL") << "  "
              << c.title << " (" << outcome.detail << "; " << timing
              << (in_time ? "" : ", over time") << ")\n";
  }
  return failed;
}
