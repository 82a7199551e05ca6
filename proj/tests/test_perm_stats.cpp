#include "qtcat/stats.hpp"

#include "qtcat/patterns.hpp"
#include "qtcat/permutation.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

using qtcat::Boundary;
using qtcat::Error;
using qtcat::Perm;

namespace {

Perm pp(const char* text) { return Perm::parse(text); }

}  // namespace

TEST_CASE("permutation parsing and printing", "[perm]") {
  Perm p = pp("28531746");
  CHECK(p.size() == 8);
  CHECK(p(1) == 2);
  CHECK(p(2) == 8);
  CHECK(p.str() == "2 8 5 3 1 7 4 6");
  CHECK(Perm::parse("2 8 5 3 1 7 4 6") == p);
  CHECK(Perm::parse("10 2 3 4 5 6 7 8 9 1").size() == 10);
  CHECK(Perm::identity(4).str() == "1 2 3 4");
  CHECK(Perm().size() == 0);
  CHECK_THROWS_AS(Perm::parse("1a2"), Error);
}

TEST_CASE("permutation symmetries", "[perm]") {
  Perm p = pp("231");
  CHECK(p.inverse() == pp("312"));
  CHECK(p.reversed() == pp("132"));
  CHECK(p.complemented() == pp("213"));
  CHECK(p.reverse_complemented() == pp("312"));
  CHECK(p.inverse().inverse() == p);
  CHECK(qtcat::standardize({5, 9, 6}) == pp("132"));
  CHECK_THROWS_AS(qtcat::standardize({5, 5, 6}), Error);
}

TEST_CASE("exhaustive generation", "[perm]") {
  std::set<Perm> seen;
  qtcat::for_each_perm(4, [&](const Perm& p) { seen.insert(p); });
  CHECK(seen.size() == 24);
}

TEST_CASE("descent-side statistics", "[stats]") {
  Perm p = pp("321");
  CHECK(qtcat::des(p) == 2);
  CHECK(qtcat::asc(p) == 0);
  CHECK(qtcat::exc(p) == 1);
  CHECK(qtcat::fix(p) == 1);
  CHECK(qtcat::wex(p) == 2);
  CHECK(qtcat::drop(p) == 1);
  CHECK(qtcat::inv(p) == 3);
  CHECK(qtcat::fl(p) == 3);
  CHECK(qtcat::fl(Perm()) == 0);
  CHECK(qtcat::fmax(Perm::identity(3)) == 3);
  CHECK(qtcat::fmax(pp("231")) == 1);
  CHECK(qtcat::fmax(pp("312")) == 0);
  CHECK(qtcat::fmax(pp("321")) == 0);
}

TEST_CASE("boundary-sensitive statistics", "[stats]") {
  CHECK(qtcat::peak(pp("132"), Boundary::Zero) == 1);
  CHECK(qtcat::peak(pp("21"), Boundary::NPlusOne) == 0);
  CHECK(qtcat::valley(pp("213"), Boundary::Zero) == 1);
  CHECK(qtcat::dd(pp("321"), Boundary::Zero) == 2);
  CHECK(qtcat::dd(pp("321"), Boundary::NPlusOne) == 2);
  CHECK(qtcat::dd_positions(pp("321"), Boundary::Zero) == std::vector<int>{2, 3});
  CHECK(qtcat::dd(Perm::identity(3), Boundary::Zero) == 0);
}

TEST_CASE("vincular patterns", "[stats]") {
  CHECK(qtcat::count_vincular(pp("312"), "31-2") == 1);
  CHECK(qtcat::count_vincular(pp("231"), "2-31") == 1);
  CHECK(qtcat::count_vincular(pp("231"), "31-2") == 0);
  CHECK(qtcat::count_vincular(pp("28531746"), "2-31") == 2);
  CHECK(qtcat::count_vincular(Perm::identity(5), "2-31") == 0);
}

TEST_CASE("admissible inversions", "[stats]") {
  CHECK(qtcat::adi(pp("231")) == 0);
  CHECK(qtcat::adi_star(pp("231")) == 2);
  CHECK(qtcat::mad(pp("231")) == 3);
}

TEST_CASE("crossings and nestings", "[stats]") {
  CHECK(qtcat::cros(pp("231")) == 1);
  CHECK(qtcat::nest(pp("231")) == 0);
  CHECK(qtcat::cros(Perm::identity(4)) == 0);
  CHECK(qtcat::nest(Perm::identity(4)) == 0);
  // icr and ine are the statistics of the inverse by definition.
  qtcat::for_each_perm(5, [&](const Perm& p) {
    REQUIRE(qtcat::icr(p) == qtcat::cros(p.inverse()));
    REQUIRE(qtcat::ine(p) == qtcat::nest(p.inverse()));
  });
  // ine vanishes exactly on the 321-avoiders.
  qtcat::for_each_perm(5, [&](const Perm& p) {
    REQUIRE((qtcat::ine(p) == 0) == qtcat::avoids(p, {Perm::parse("321")}));
  });
}

TEST_CASE("pattern containment", "[stats]") {
  CHECK(qtcat::contains(pp("28531746"), pp("321")));
  CHECK_FALSE(qtcat::avoids(pp("28531746"), {pp("321")}));
  CHECK(qtcat::avoids(pp("1234"), {pp("321"), pp("231")}));
  CHECK(qtcat::has_shape(pp("13254768"), qtcat::Shape::UpDown));
  CHECK_FALSE(qtcat::has_shape(pp("321"), qtcat::Shape::UpDown));
  CHECK(qtcat::has_shape(pp("21435"), qtcat::Shape::DownUp));
}

TEST_CASE("stat key grammar", "[stats]") {
  Perm p = pp("28531746");
  CHECK(qtcat::stat(p, "des") == qtcat::des(p));
  CHECK(qtcat::stat(p, "MAD") == qtcat::mad(p));
  CHECK(qtcat::stat(p, "adiStar") == qtcat::adi_star(p));
  CHECK(qtcat::stat(p, "dd:np1") == qtcat::dd(p, Boundary::NPlusOne));
  CHECK(qtcat::stat(p, "dd:zero") == qtcat::dd(p, Boundary::Zero));
  CHECK(qtcat::stat(p, "2-31") == qtcat::count_vincular(p, "2-31"));
  CHECK(qtcat::stat(p, "one") == 0);
  CHECK(qtcat::stat(p, "1") == 0);
  CHECK_THROWS_AS(qtcat::parse_stat("bogus"), Error);
}
