// Acceptance harness: one pass/fail line per criterion, with the elapsed
// time against the budget.  Exit code 0 iff every criterion passes.
// Pass --deep to include the expensive conjecture branch.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qtcat/cfrac.hpp"
#include "qtcat/cli.hpp"
#include "qtcat/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  int id;
  std::string label;
  long long budget_ms;
  bool pass;
  long long elapsed_ms;
  std::string detail;
};

std::vector<Criterion> results;

template <typename F>
void criterion(int id, const std::string& label, long long budget_ms, F body) {
  Criterion c{id, label, budget_ms, true, 0, ""};
  auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = e.what();
  }
  c.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
          .count();
  if (c.elapsed_ms > c.budget_ms) {
    c.pass = false;
    if (!c.detail.empty()) c.detail += "; ";
    c.detail += "over budget";
  }
  results.push_back(c);
}

void absorb(Criterion& c, const qtcat::Report& rep) {
  if (!rep.pass) {
    c.pass = false;
    if (!c.detail.empty()) c.detail += "; ";
    c.detail += rep.suite + ": " + rep.counterexample;
  }
}

void expect_poly(Criterion& c, const std::string& family, int n,
                 const std::string& want) {
  std::string got = qtcat::named_family(family, n).str();
  if (got != want) {
    c.pass = false;
    if (!c.detail.empty()) c.detail += "; ";
    c.detail += family + "(" + std::to_string(n) + ") = " + got + ", want " + want;
  }
}

void expect_cli(Criterion& c, const std::vector<std::string>& args,
                const std::string& want_stdout) {
  std::ostringstream out, err;
  int code = qtcat::cli::run(args, out, err);
  if (code != 0 || out.str() != want_stdout) {
    c.pass = false;
    if (!c.detail.empty()) c.detail += "; ";
    std::string cmd;
    for (const auto& a : args) cmd += (cmd.empty() ? "" : " ") + a;
    c.detail += "cli `" + cmd + "` exit " + std::to_string(code) + ", got \"" +
                out.str() + "\"";
  }
}

}  // namespace

int main(int argc, char** argv) {
  bool deep = false;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--deep") deep = true;

  criterion(1, "golden polynomial families", 5000, [](Criterion& c) {
    expect_poly(c, "carlitz", 0, "1");
    expect_poly(c, "carlitz", 1, "1");
    expect_poly(c, "carlitz", 2, "q+1");
    expect_poly(c, "carlitz", 3, "q^3+q^2+2*q+1");
    expect_poly(c, "carlitz", 4, "q^6+q^5+2*q^4+3*q^3+3*q^2+3*q+1");
    expect_poly(c, "cstar", 0, "1");
    expect_poly(c, "cstar", 1, "1");
    expect_poly(c, "cstar", 2, "2*q");
    expect_poly(c, "cstar", 3, "2*q^4+3*q^2");
    expect_poly(c, "cstar", 4, "2*q^9+2*q^7+6*q^5+4*q^3");
    expect_poly(c, "cstar", 5, "2*q^16+2*q^14+4*q^12+8*q^10+9*q^8+12*q^6+5*q^4");
    expect_poly(c, "chat", 0, "1");
    expect_poly(c, "chat", 1, "1");
    expect_poly(c, "chat", 2, "q^2+q");
    expect_poly(c, "chat", 3, "q^6+q^5+q^4+q^3+q^2");
    expect_poly(c, "chat", 4,
                "q^12+q^11+q^10+2*q^9+q^8+2*q^7+2*q^6+2*q^5+q^4+q^3");
    expect_poly(c, "chat", 5,
                "q^20+q^19+q^18+2*q^17+2*q^16+2*q^15+3*q^14+3*q^13+4*q^12+3*q^11+"
                "5*q^10+3*q^9+4*q^8+3*q^7+3*q^6+q^5+q^4");
    expect_poly(c, "cbar", 0, "1");
    expect_poly(c, "cbar", 1, "1");
    expect_poly(c, "cbar", 2, "q+1");
    expect_poly(c, "cbar", 3, "2*q^2+2*q+1");
    expect_poly(c, "cbar", 4, "5*q^3+5*q^2+3*q+1");
    expect_poly(c, "cbar", 5, "14*q^4+14*q^3+9*q^2+4*q+1");
    expect_poly(c, "cbar", 6, "42*q^5+42*q^4+28*q^3+14*q^2+5*q+1");
    expect_cli(c, {"poly", "carlitz", "4"},
               "q^6+q^5+2*q^4+3*q^3+3*q^2+3*q+1\n");
  });

  criterion(2, "ten interpretations, n <= 8", 60000, [](Criterion& c) {
    absorb(c, qtcat::verify::check_ten_interpretations(8));
  });

  criterion(3, "gamma expansions and wex variant, n <= 8", 120000,
            [](Criterion& c) {
              absorb(c, qtcat::verify::check_gamma_theorems(8));
              absorb(c, qtcat::verify::check_wex_variant(8));
            });

  criterion(4, "(-1)-evaluations, n <= 10", 300000, [](Criterion& c) {
    absorb(c, qtcat::verify::check_minus_one_exc(10));
    absorb(c, qtcat::verify::check_minus_one_des(10));
  });

  criterion(5, "equidistributions, n <= 7", 60000, [](Criterion& c) {
    absorb(c, qtcat::verify::check_equidistributions(7));
  });

  criterion(6, "MFS-action invariants, n <= 7", 60000, [](Criterion& c) {
    absorb(c, qtcat::verify::check_mfs(7));
  });

  criterion(7, "ballot refinement and bijections, n <= 6", 30000,
            [](Criterion& c) { absorb(c, qtcat::verify::check_ballot(6)); });

  criterion(8, "section 6 counting, lengths <= 13", 300000, [](Criterion& c) {
    absorb(c, qtcat::verify::check_section6(13, 12));
    expect_cli(c, {"seq", "r", "9", "--format", "bfile"},
               "0 1\n1 2\n2 10\n3 66\n4 498\n5 4066\n6 34970\n7 312066\n"
               "8 2862562\n");
    expect_cli(c, {"seq", "t", "8", "--format", "bfile"},
               "1 1\n2 4\n3 24\n4 172\n5 1360\n6 11444\n7 100520\n8 911068\n");
    expect_cli(c, {"seq", "u", "13", "--format", "bfile"},
               "0 1\n1 2\n2 8\n3 36\n4 168\n5 796\n6 3800\n7 18216\n8 87536\n"
               "9 421292\n10 2029592\n11 9784088\n12 47187536\n");
  });

  criterion(9, deep ? "conjecture explorer, n <= 12 (deep)"
                    : "conjecture explorer, n <= 10",
            deep ? 1800000 : 120000, [deep](Criterion& c) {
              absorb(c, qtcat::verify::explore_conjecture(10, deep));
              expect_cli(c, {"seq", "F", "4"}, "1\n7\n58\n545\n");
              if (deep)
                expect_cli(c, {"seq", "F", "5", "--deep"},
                           "1\n7\n58\n545\n5570\n");
            });

  criterion(10, "randomized property batteries, 1000 trials", 60000,
            [](Criterion& c) { absorb(c, qtcat::verify::check_properties(1000)); });

  bool all = true;
  for (const Criterion& c : results) {
    all = all && c.pass;
    std::cout << "criterion " << c.id << ": " << (c.pass ? "PASS" : "FAIL")
              << " (" << c.elapsed_ms << " ms <= " << c.budget_ms << " ms) "
              << c.label;
    if (!c.detail.empty()) std::cout << " -- " << c.detail;
    std::cout << "\n";
  }
  std::cout << (all ? "acceptance: PASS" : "acceptance: FAIL") << "\n";
  return all ? 0 : 1;
}
