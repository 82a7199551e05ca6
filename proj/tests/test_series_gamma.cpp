#include "qtcat/series.hpp"

#include "qtcat/gamma.hpp"
#include "qtcat/multipoly.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

using qtcat::Error;
using qtcat::GammaBasis;
using qtcat::GammaKind;
using qtcat::GammaResult;
using qtcat::Int;
using qtcat::MultiPoly;
using qtcat::PowerSeries;

namespace {

const std::vector<std::string> kT{"t"};
const std::vector<std::string> kTQ{"t", "q"};

MultiPoly pt(const std::string& text) { return MultiPoly::parse(text, kT); }

}  // namespace

TEST_CASE("series arithmetic", "[series]") {
  PowerSeries one = PowerSeries::one(4, kT);
  PowerSeries z = one.shifted_z(1);
  CHECK(z.coeff(0).is_zero());
  CHECK(z.coeff(1).constant_value() == 1);
  CHECK((z * z).coeff(2).constant_value() == 1);
  CHECK((one + z) * (one - z) == one - z * z);
  CHECK((one - z).scaled(MultiPoly::constant(kT, 3)).coeff(1).constant_value() == -3);
  CHECK(one.str() == "z^0: 1\nz^1: 0\nz^2: 0\nz^3: 0\nz^4: 0\n");
}

TEST_CASE("series reciprocal", "[series]") {
  // 1/(1 - z - t z^2): coefficients follow c_n = c_{n-1} + t c_{n-2}.
  PowerSeries one = PowerSeries::one(4, kT);
  PowerSeries z = one.shifted_z(1);
  PowerSeries s = (one - z - z.shifted_z(1).scaled(MultiPoly::var(kT, "t"))).reciprocal();
  CHECK(s.coeff(0).str() == "1");
  CHECK(s.coeff(1).str() == "1");
  CHECK(s.coeff(2).str() == "t+1");
  CHECK(s.coeff(3).str() == "2*t+1");
  CHECK(s.coeff(4).str() == "t^2+3*t+1");
  CHECK(s * (one - z - z.shifted_z(1).scaled(MultiPoly::var(kT, "t"))) == one);

  // Leading coefficient -1 works; leading 0 or 2 is rejected.
  CHECK((one.scaled(MultiPoly::constant(kT, -1))).reciprocal().coeff(0).constant_value() == -1);
  CHECK_THROWS_AS(z.reciprocal(), Error);
  CHECK_THROWS_AS(one.scaled(MultiPoly::constant(kT, 2)).reciprocal(), Error);
}

TEST_CASE("algebraic fixed point", "[series]") {
  // C = 1 + z C^2 generates the Catalan numbers.
  PowerSeries c = qtcat::solve_algebraic_fixed_point(
      [](const PowerSeries& g) {
        PowerSeries one = PowerSeries::one(g.order(), g.vars());
        return one + (g * g).shifted_z(1);
      },
      7, {});
  const long long want[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 0; n <= 7; ++n) CHECK(c.coeff(n).constant_value() == want[n]);
}

TEST_CASE("gamma expansion of narayana", "[gamma]") {
  GammaResult g = qtcat::gamma_expand(pt("t^3+6*t^2+6*t+1"), GammaBasis{GammaKind::OnePlusT, 3});
  REQUIRE(g.ok);
  REQUIRE(g.gammas.size() == 2);
  CHECK(g.gammas[0].str() == "1");
  CHECK(g.gammas[1].str() == "3");
  CHECK(qtcat::gamma_reconstruct(g.gammas, GammaBasis{GammaKind::OnePlusT, 3}).str() ==
        "t^3+6*t^2+6*t+1");
}

TEST_CASE("gamma expansion with even span", "[gamma]") {
  // 2 t^4 + 62 t^3 + 2 t^2 over span 6 splits as 2 t^2 (1+t)^2 + 58 t^3.
  GammaResult g = qtcat::gamma_expand(pt("2*t^4+62*t^3+2*t^2"), GammaBasis{GammaKind::OnePlusT, 6});
  REQUIRE(g.ok);
  REQUIRE(g.gammas.size() == 4);
  CHECK(g.gammas[0].is_zero());
  CHECK(g.gammas[1].is_zero());
  CHECK(g.gammas[2].constant_value() == 2);
  CHECK(g.gammas[3].constant_value() == 58);
}

TEST_CASE("gamma failure keeps the remainder", "[gamma]") {
  GammaResult g = qtcat::gamma_expand(pt("t^2+2"), GammaBasis{GammaKind::OnePlusT, 2});
  REQUIRE_FALSE(g.ok);
  CHECK(g.remainder.str() == "-t^2");
  // The peeled prefix plus the remainder reproduces the input.
  MultiPoly back = qtcat::gamma_reconstruct(g.gammas, GammaBasis{GammaKind::OnePlusT, 2});
  CHECK(back + g.remainder == pt("t^2+2"));
  CHECK_THROWS_AS(qtcat::gamma_expand(pt("t^3"), GammaBasis{GammaKind::OnePlusT, 2}),
                  Error);  // support outside the window
}

TEST_CASE("gamma basis 1+t/q", "[gamma]") {
  // Build sum_k g_k t^k (1+t/q)^(4-2k) from known coefficients, then recover them.
  std::vector<MultiPoly> gam;
  gam.push_back(MultiPoly::parse("q^2", kTQ));
  gam.push_back(MultiPoly::parse("q+1", kTQ));
  gam.push_back(MultiPoly::parse("3", kTQ));
  GammaBasis basis{GammaKind::OnePlusTOverQ, 4};
  MultiPoly p = qtcat::gamma_reconstruct(gam, basis);
  GammaResult g = qtcat::gamma_expand(p, basis);
  REQUIRE(g.ok);
  REQUIRE(g.gammas.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(g.gammas[k] == gam[k]);
}
