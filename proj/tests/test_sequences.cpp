#include "qtcat/sequences.hpp"

#include "qtcat/multipoly.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

using qtcat::Error;
using qtcat::Int;

TEST_CASE("binomials and catalan numbers", "[sequences]") {
  CHECK(qtcat::binomial(0, 0) == 1);
  CHECK(qtcat::binomial(5, 2) == 10);
  CHECK(qtcat::binomial(5, 6) == 0);
  CHECK(qtcat::binomial(64, 32) == Int("1832624140942590534"));
  const long long want[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796,
                            58786, 208012};
  for (int n = 0; n <= 12; ++n) CHECK(qtcat::catalan_number(n) == want[n]);
}

TEST_CASE("ballot triangle", "[sequences]") {
  auto rows = qtcat::ballot_rows_by_recurrence(6);
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] == std::vector<Int>{1});
  CHECK(rows[3] == std::vector<Int>{1, 3, 5, 5});
  CHECK(rows[6] == std::vector<Int>{1, 6, 20, 48, 90, 132, 132});
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) CHECK(qtcat::ballot_number(n, k) == rows[n][k]);
  // The diagonal repeats the Catalan numbers.
  for (int n = 1; n <= 6; ++n) {
    CHECK(qtcat::ballot_number(n, n) == qtcat::catalan_number(n));
    CHECK(qtcat::ballot_number(n, n - 1) == qtcat::ballot_number(n, n));
  }
}

TEST_CASE("alternating separable counts", "[sequences]") {
  const long long r[] = {1, 2, 10, 66, 498, 4066, 34970, 312066, 2862562};
  for (int n = 0; n <= 8; ++n) CHECK(qtcat::r_closed(n) == r[n]);
  const long long t[] = {1, 4, 24, 172, 1360, 11444, 100520, 911068};
  for (int n = 1; n <= 8; ++n) CHECK(qtcat::t_closed(n) == t[n - 1]);
  // The unified closed form covers both parities.
  for (int n = 1; n <= 4; ++n)
    CHECK(qtcat::separable_alt_unified(2 * n + 1) == r[n]);
  for (int n = 2; n <= 4; ++n)
    CHECK(qtcat::separable_alt_unified(2 * n) == t[n - 1]);
  // Series expansions agree with the closed forms.
  qtcat::PowerSeries rs = qtcat::r_series(8);
  qtcat::PowerSeries ts = qtcat::t_series(8);
  for (int n = 1; n <= 8; ++n) {
    CHECK(rs.coeff(n).constant_value() == r[n]);
    CHECK(ts.coeff(n).constant_value() == t[n - 1]);
  }
}

TEST_CASE("u sequence routes", "[sequences]") {
  const long long u[] = {1, 2, 8,  36, 168, 796, 3800, 18216, 87536, 421292,
                         2029592, 9784088, 47187536};
  std::vector<Int> rec = qtcat::u_by_recurrence(12);
  REQUIRE(rec.size() == 13);
  for (int n = 0; n <= 12; ++n) CHECK(rec[n] == u[n]);
  for (int n = 1; n <= 7; ++n) CHECK(qtcat::u_multisum(n) == u[n]);
  qtcat::PowerSeries us = qtcat::u_series_by_reciprocal(8);
  for (int n = 0; n <= 8; ++n) CHECK(us.coeff(n).constant_value() == u[n]);
  for (int n = 2; n <= 12; ++n) CHECK(rec[n] % 4 == 0);
  CHECK_THROWS_AS(qtcat::u_multisum(0), Error);
}

TEST_CASE("conjectured excedance polynomials", "[sequences]") {
  const char* g[] = {"0", "t", "t^2+t", "7*t^2", "10*t^3+10*t^2",
                     "2*t^4+62*t^3+2*t^2", "109*t^4+109*t^3",
                     "45*t^5+635*t^4+45*t^3"};
  for (int n = 1; n <= 8; ++n) CHECK(qtcat::conjecture_g(n).str() == g[n - 1]);
}

TEST_CASE("named sequences", "[sequences]") {
  CHECK(qtcat::sequence_values("catalan", 6) ==
        std::vector<Int>{1, 1, 2, 5, 14, 42});
  CHECK(qtcat::sequence_values("r", 4) == std::vector<Int>{1, 2, 10, 66});
  CHECK(qtcat::sequence_values("t", 4) == std::vector<Int>{1, 4, 24, 172});
  CHECK(qtcat::sequence_values("u", 5) == std::vector<Int>{1, 2, 8, 36, 168});
  CHECK(qtcat::sequence_values("F", 4) == std::vector<Int>{1, 7, 58, 545});
  CHECK(qtcat::sequence_values("Gat1", 8) ==
        std::vector<Int>{0, 1, 2, 7, 20, 66, 218, 725});
  CHECK(qtcat::sequence_values("catalan", 0).empty());
  CHECK_THROWS_AS(qtcat::sequence_values("nosuch", 3), Error);

  CHECK(qtcat::sequence_offset("catalan") == 0);
  CHECK(qtcat::sequence_offset("r") == 0);
  CHECK(qtcat::sequence_offset("u") == 0);
  CHECK(qtcat::sequence_offset("t") == 1);
  CHECK(qtcat::sequence_offset("F") == 1);
  CHECK(qtcat::sequence_offset("Gat1") == 1);
  CHECK_THROWS_AS(qtcat::sequence_offset("nosuch"), Error);
}
