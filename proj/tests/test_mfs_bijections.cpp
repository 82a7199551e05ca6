#include "qtcat/mfs.hpp"

#include "qtcat/bijections.hpp"
#include "qtcat/classes.hpp"
#include "qtcat/permutation.hpp"
#include "qtcat/stats.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

using qtcat::ActionKind;
using qtcat::Boundary;
using qtcat::ClassSpec;
using qtcat::Error;
using qtcat::Perm;

namespace {

Perm pp(const char* text) { return Perm::parse(text); }

}  // namespace

TEST_CASE("x-factorization blocks", "[mfs]") {
  // 5 sits at the front of 596137428: nothing precedes it, and the larger
  // letters 9,6 follow immediately.
  qtcat::XFactorization f = qtcat::x_factorization(pp("596137428"), 5);
  CHECK(f.w1.empty());
  CHECK(f.w2.empty());
  CHECK(f.w3 == std::vector<int>{9, 6});
  CHECK(f.w4 == std::vector<int>{1, 3, 7, 4, 2, 8});

  qtcat::XFactorization g = qtcat::x_factorization(pp("28531746"), 3);
  CHECK(g.w1 == std::vector<int>{2});
  CHECK(g.w2 == std::vector<int>{8, 5});
  CHECK(g.w3.empty());
  CHECK(g.w4 == std::vector<int>{1, 7, 4, 6});

  CHECK_THROWS_AS(qtcat::x_factorization(pp("321"), 4), Error);
}

TEST_CASE("phi swaps the blocks around x", "[mfs]") {
  CHECK(qtcat::phi(pp("28531746"), 3) == pp("23851746"));
  // phi_x is an involution.
  for (int x = 1; x <= 8; ++x) {
    Perm p = pp("28531746");
    CHECK(qtcat::phi(qtcat::phi(p, x), x) == p);
  }
}

TEST_CASE("action kinds", "[mfs]") {
  CHECK(qtcat::parse_action_kind("zero") == ActionKind::PhiPrimeZero);
  CHECK(qtcat::parse_action_kind("np1") == ActionKind::PhiPrimeNPlusOne);
  CHECK(qtcat::parse_action_kind("bar") == ActionKind::PhiBar);
  CHECK(qtcat::action_kind_name(ActionKind::PhiBar) == "bar");
  CHECK_THROWS_AS(qtcat::parse_action_kind("sideways"), Error);
}

TEST_CASE("action fixed points", "[mfs]") {
  Perm p = pp("28531746");
  // 1 is a valley with the zero boundary, so phi'_1 fixes the permutation.
  CHECK(qtcat::act(p, 1, ActionKind::PhiPrimeZero) == p);
  // 8 is a peak, so the n+1-boundary action fixes it.
  CHECK(qtcat::act(p, 8, ActionKind::PhiPrimeNPlusOne) == p);
  // 2 is a left-to-right maximum and frozen for the bar action; 5 is not.
  CHECK(qtcat::act(p, 2, ActionKind::PhiBar) == p);
  CHECK(qtcat::act(p, 5, ActionKind::PhiBar) == pp("28315746"));
  // Each generator is an involution.
  for (ActionKind kind : {ActionKind::PhiPrimeZero, ActionKind::PhiPrimeNPlusOne,
                          ActionKind::PhiBar}) {
    for (int x = 1; x <= 8; ++x)
      CHECK(qtcat::act(qtcat::act(p, x, kind), x, kind) == p);
  }
}

TEST_CASE("orbits partition the symmetric group", "[mfs]") {
  for (ActionKind kind : {ActionKind::PhiPrimeZero, ActionKind::PhiPrimeNPlusOne,
                          ActionKind::PhiBar}) {
    qtcat::for_each_perm(4, [&](const Perm& p) {
      std::set<Perm> orb = qtcat::orbit(p, kind);
      REQUIRE(orb.count(p) == 1);
      for (const Perm& q : orb) REQUIRE(qtcat::orbit(q, kind) == orb);
    });
  }
}

TEST_CASE("representatives within avoidance classes", "[mfs]") {
  for (const Perm& p : qtcat::enumerate(ClassSpec::parse("av:213@n=5"))) {
    Perm rep = qtcat::representative(p, ActionKind::PhiPrimeZero);
    REQUIRE(qtcat::dd(rep, Boundary::Zero) == 0);
    REQUIRE(qtcat::orbit(p, ActionKind::PhiPrimeZero).count(rep) == 1);
  }
  for (const Perm& p : qtcat::enumerate(ClassSpec::parse("av:231@n=5"))) {
    Perm rep = qtcat::representative(p, ActionKind::PhiPrimeNPlusOne);
    REQUIRE(qtcat::dd(rep, Boundary::NPlusOne) == 0);
  }
  // The bar action is canonical on 132-avoiding coderangements.
  for (const Perm& p : qtcat::enumerate(ClassSpec::parse("av:132;coder@n=6"))) {
    Perm rep = qtcat::representative(p, ActionKind::PhiBar);
    REQUIRE(qtcat::dd_positions(rep, Boundary::NPlusOne) == std::vector<int>{1});
    REQUIRE(qtcat::fl(rep) == qtcat::fl(p));
  }
}

TEST_CASE("alpha and beta bijections", "[bijections]") {
  CHECK(qtcat::alpha(pp("13254768")) == pp("13254867"));
  CHECK(qtcat::beta(pp("13254867")) == pp("132546"));
  CHECK(qtcat::beta_inv(pp("132546")) == pp("13254867"));

  // a_{n+1,k} splits by whether pi(2n)-1 is a peak: alpha carries the peak
  // side onto a_{n+1,k-1}, beta carries the valley side onto a_{n,k}, and
  // beta_inv undoes beta member by member.
  auto ballot = [](int n, int k) {
    return qtcat::enumerate(ClassSpec::parse(
        "ballot:" + std::to_string(k) + "@n=" + std::to_string(n)));
  };
  auto strs = [](const std::vector<Perm>& ps) {
    std::set<std::string> s;
    for (const Perm& p : ps) s.insert(p.str());
    return s;
  };
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::set<std::string> via_alpha, via_beta;
      for (const Perm& p : ballot(n + 1, k)) {
        if (qtcat::value_is_peak(p, p(p.size()) - 1)) {
          via_alpha.insert(qtcat::alpha(p).str());
        } else {
          CHECK(qtcat::beta_inv(qtcat::beta(p)) == p);
          via_beta.insert(qtcat::beta(p).str());
        }
      }
      if (k >= 1) CHECK(via_alpha == strs(ballot(n + 1, k - 1)));
      CHECK(via_beta == strs(ballot(n, k)));
    }
  }
}
