#include "qtcat/classes.hpp"

#include "qtcat/multipoly.hpp"
#include "qtcat/permutation.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using qtcat::ClassSpec;
using qtcat::Error;
using qtcat::MultiPoly;
using qtcat::Perm;
using qtcat::Weight;

namespace {

std::set<Perm> members(const std::string& text) {
  std::set<Perm> out;
  for (const Perm& p : qtcat::enumerate(ClassSpec::parse(text))) out.insert(p);
  return out;
}

std::set<Perm> brute(const ClassSpec& spec) {
  std::set<Perm> out;
  qtcat::for_each_perm(spec.length(), [&](const Perm& p) {
    if (qtcat::membership(p, spec)) out.insert(p);
  });
  return out;
}

}  // namespace

TEST_CASE("spec text round trips", "[classes]") {
  for (const char* text :
       {"av:231@n=5", "av:132;coder@n=6", "av:2413,3142;alt@n=7",
        "tilde:213,1@n=5", "hat:2@n=6", "ndw:2@n=5", "nde:1@n=4",
        "dbar132:2@n=6", "ballot:1@n=3", "av:123;der@n=6", "all@n=3",
        "av:321;downup@n=4", "av:231;normal@n=3"}) {
    ClassSpec spec = ClassSpec::parse(text);
    CHECK(ClassSpec::parse(spec.str()).str() == spec.str());
  }
  CHECK(ClassSpec::parse("av:231@n=5").n == 5);
  CHECK(ClassSpec::parse("ballot:1@n=3").length() == 6);
  CHECK(ClassSpec::parse("av:231@n=5").length() == 5);
  CHECK_THROWS_AS(ClassSpec::parse("av:2x1@n=3"), Error);
  CHECK_THROWS_AS(ClassSpec::parse("nonsense@n=3"), Error);
}

TEST_CASE("pattern class sizes", "[classes]") {
  CHECK(qtcat::class_size(ClassSpec::parse("av:231@n=5")) == 42);
  CHECK(qtcat::class_size(ClassSpec::parse("av:132,213@n=3")) == 4);
  CHECK(qtcat::class_size(ClassSpec::parse("all@n=3")) == 6);
  CHECK(qtcat::class_size(ClassSpec::parse("av:321;downup@n=4")) == 2);
  CHECK(qtcat::class_size(ClassSpec::parse("av:231;normal@n=3")) == 3);
  // Coderangements avoiding 213 are n prepended to a shorter 213-avoider.
  CHECK(qtcat::class_size(ClassSpec::parse("av:213;coder@n=5")) == 14);
  // Alternating 132-avoiders of length 2n are counted by Catalan numbers.
  CHECK(qtcat::class_size(ClassSpec::parse("av:132;alt@n=4")) == 2);
  CHECK(qtcat::class_size(ClassSpec::parse("av:132;alt@n=6")) == 5);
  CHECK(qtcat::class_size(ClassSpec::parse("av:132;alt@n=8")) == 14);
}

TEST_CASE("ballot classes", "[classes]") {
  CHECK(members("ballot:0@n=2") == std::set<Perm>{Perm::parse("1423")});
  CHECK(members("ballot:1@n=2") == std::set<Perm>{Perm::parse("1324")});
  CHECK(members("ballot:1@n=3") ==
        std::set<Perm>{Perm::parse("162435"), Perm::parse("132645")});
  CHECK(members("ballot:2@n=3") ==
        std::set<Perm>{Perm::parse("132546"), Perm::parse("152436")});
}

TEST_CASE("pruned enumeration agrees with membership", "[classes]") {
  for (const char* text :
       {"tilde:213,1@n=5", "hat:2@n=5", "ndw:2@n=5", "nde:1@n=5",
        "dbar132:2@n=5", "av:123;der@n=5", "av:132;coder@n=5",
        "ballot:1@n=2", "av:2413,3142;alt@n=5"}) {
    ClassSpec spec = ClassSpec::parse(text);
    CHECK(members(text) == brute(spec));
  }
}

TEST_CASE("predicate helpers", "[classes]") {
  CHECK(qtcat::is_derangement(Perm::parse("21")));
  CHECK_FALSE(qtcat::is_derangement(Perm::parse("321")));
  CHECK(qtcat::is_coderangement(Perm::parse("312")));
  CHECK_FALSE(qtcat::is_coderangement(Perm::parse("231")));
  CHECK(qtcat::is_normal(Perm::parse("132")));
  CHECK_FALSE(qtcat::is_normal(Perm::parse("321")));
  CHECK(qtcat::is_involution(Perm::parse("21")));
  CHECK_FALSE(qtcat::is_involution(Perm::parse("231")));
}

TEST_CASE("weight grammar", "[classes]") {
  Weight w = Weight::parse("q^31-2");
  CHECK(w.var == "q");
  CHECK(w.stat == "31-2");
  CHECK_FALSE(w.neg_base);
  CHECK_FALSE(w.neg_exp);
  CHECK(w.str() == "q^31-2");

  Weight sign = Weight::parse("-1^exc");
  CHECK(sign.neg_base);
  CHECK(sign.var.empty());
  CHECK(sign.str() == "-1^exc");

  Weight laurent = Weight::parse("q^-des");
  CHECK(laurent.neg_exp);
  CHECK(laurent.str() == "q^-des");

  CHECK(qtcat::parse_weights("t^des,q^31-2").size() == 2);
  CHECK_THROWS_AS(Weight::parse("t^"), Error);
  CHECK_THROWS_AS(Weight::parse("^des"), Error);
  CHECK_THROWS_AS(Weight::parse("-1^-des"), Error);
  CHECK_THROWS_AS(Weight::parse("q^bogus"), Error);
  CHECK_THROWS_AS(qtcat::parse_weights(""), Error);
}

TEST_CASE("distributions", "[classes]") {
  MultiPoly d = qtcat::distribution("av:231@n=3", "t^des,q^31-2");
  CHECK(d.str() == "t^2+t*q+2*t+1");
  CHECK(qtcat::distribution("all@n=2", "-1^exc").str() == "0");
  // Descending exponent order puts the constant term first.
  CHECK(qtcat::distribution("all@n=2", "q^-des").str() == "1+q^-1");
  // A weight base of 1 counts members.
  CHECK(qtcat::distribution("av:231@n=4", "1^one").constant_value() == 14);
}
