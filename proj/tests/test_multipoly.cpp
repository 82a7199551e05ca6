#include "qtcat/multipoly.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <string>
#include <vector>

using qtcat::Error;
using qtcat::Int;
using qtcat::MultiPoly;
using qtcat::SignedMonomial;

namespace {

const std::vector<std::string> kTQ{"t", "q"};

MultiPoly ptq(const std::string& text) { return MultiPoly::parse(text, kTQ); }

}  // namespace

TEST_CASE("canonical text form", "[multipoly]") {
  CHECK(MultiPoly(kTQ).str() == "0");
  CHECK(MultiPoly::constant(kTQ, -7).str() == "-7");
  CHECK(MultiPoly::monomial(kTQ, 3, {2, -1}).str() == "3*t^2*q^-1");
  CHECK(MultiPoly::monomial(kTQ, 1, {1, 0}).str() == "t");
  CHECK(MultiPoly::monomial(kTQ, -1, {0, 1}).str() == "-q");
  // Terms print in descending lexicographic exponent order.
  MultiPoly::TermMap terms;
  terms[{0, 0}] = 1;
  terms[{1, 1}] = 1;
  terms[{2, 0}] = 1;
  terms[{1, 0}] = 2;
  CHECK(MultiPoly::from_terms(kTQ, terms).str() == "t^2+t*q+2*t+1");
}

TEST_CASE("parse round trips", "[multipoly]") {
  for (const char* text : {"0", "1", "-1", "t", "-q", "3*t^2*q^-1",
                           "t^2+t*q+2*t+1",
                           "t^3+t^2*q^2+2*t^2*q+3*t^2+t*q^2+2*t*q+3*t+1"}) {
    CHECK(ptq(text).str() == text);
  }
  CHECK(ptq("t + q") == ptq("q+t"));
  CHECK(ptq("2*t-t") == ptq("t"));
  CHECK(ptq("t-t").is_zero());
  CHECK_THROWS_AS(ptq("t^"), Error);
  CHECK_THROWS_AS(ptq("x"), Error);
  CHECK_THROWS_AS(MultiPoly::parse("y", {"y", "t"}), Error);  // out of order
}

TEST_CASE("ring operations", "[multipoly]") {
  MultiPoly one = MultiPoly::constant(kTQ, 1);
  MultiPoly t = MultiPoly::var(kTQ, "t");
  CHECK((one + t) * (one - t) == one - t * t);
  CHECK((one + t).pow(3).str() == "t^3+3*t^2+3*t+1");
  CHECK((-t).str() == "-t");
  CHECK(t.scaled(0).is_zero());
  CHECK((t - t).is_zero());
  CHECK(t.pow(0) == one);
  CHECK_THROWS_AS(t.pow(-1), Error);
}

TEST_CASE("substitution", "[multipoly]") {
  // t -> q, q -> q^2 carries the (q,t)-polynomial to its one-variable form.
  MultiPoly p = ptq("t^2+t*q+2*t+1");
  std::map<std::string, SignedMonomial> binds;
  binds["t"] = SignedMonomial{1, {{"q", 1}}};
  binds["q"] = SignedMonomial{1, {{"q", 2}}};
  CHECK(p.substitute(binds, {"q"}).str() == "q^3+q^2+2*q+1");

  std::map<std::string, SignedMonomial> neg;
  neg["t"] = SignedMonomial{-1, {}};
  CHECK(p.substitute(neg, {"q"}).str() == "-q");

  // Widening the variable list leaves the terms unchanged.
  MultiPoly q_only = MultiPoly::parse("q^2+1", {"q"});
  CHECK(q_only.substitute({}, kTQ).str() == "q^2+1");
  CHECK(q_only.substitute({}, kTQ).vars() == kTQ);
}

TEST_CASE("coefficient access", "[multipoly]") {
  MultiPoly p = ptq("t^3+t^2*q^2+2*t^2*q+3*t^2+t*q^2+2*t*q+3*t+1");
  CHECK(p.coeff_of("t", 2).str() == "q^2+2*q+3");
  CHECK(p.coeff_of("t", 5).is_zero());
  CHECK(p.coeff_of("q", 0).str() == "t^3+3*t^2+3*t+1");
  CHECK(p.degree_range("t") == std::pair<int, int>(0, 3));
  CHECK(p.degree_range("q") == std::pair<int, int>(0, 2));
  CHECK(ptq("3*t^2*q^-1").degree_range("q") == std::pair<int, int>(-1, -1));
  CHECK_THROWS_AS(MultiPoly(kTQ).degree_range("t"), Error);
  CHECK(p.shifted("q", 1).coeff_of("q", 3).str() == "t^2+t");
  CHECK(p.shifted("q", -1) == p.shifted("q", 2).shifted("q", -3));
}

TEST_CASE("evaluation", "[multipoly]") {
  MultiPoly p = ptq("t^2+t*q+2*t+1");
  CHECK(p.evaluate({{"t", 1}, {"q", 1}}) == 5);
  CHECK(p.evaluate({{"t", -1}, {"q", 1}}) == -1);
  CHECK(p.evaluate({{"t", 2}, {"q", 3}}) == 15);
  // Negative exponents evaluate only at +-1, where the power is exact.
  MultiPoly l = ptq("3*t^2*q^-1");
  CHECK(l.evaluate({{"t", 2}, {"q", 1}}) == 12);
  CHECK(l.evaluate({{"t", 2}, {"q", -1}}) == -12);
  CHECK_THROWS_AS(l.evaluate({{"t", 1}, {"q", 3}}), Error);
}

TEST_CASE("json form", "[multipoly]") {
  CHECK(ptq("t^2+t*q+2*t+1").json() ==
        "{\"vars\":[\"t\",\"q\"],\"terms\":["
        "{\"exp\":[2,0],\"coef\":\"1\"},"
        "{\"exp\":[1,1],\"coef\":\"1\"},"
        "{\"exp\":[1,0],\"coef\":\"2\"},"
        "{\"exp\":[0,0],\"coef\":\"1\"}]}");
  CHECK(MultiPoly(kTQ).json() == "{\"vars\":[\"t\",\"q\"],\"terms\":[]}");
}

TEST_CASE("palindromicity", "[multipoly]") {
  CHECK(qtcat::is_palindromic(ptq("t^2+2*t+1"), "t", 0, 2));
  CHECK(qtcat::is_palindromic(ptq("5*t^6+1264*t^5+1264*t^4+5*t^3"), "t", 3, 6));
  CHECK_FALSE(qtcat::is_palindromic(ptq("t^2+2*t"), "t", 0, 2));
  CHECK(qtcat::is_palindromic(MultiPoly(kTQ), "t", 0, 4));
}

TEST_CASE("big coefficients stay exact", "[multipoly]") {
  MultiPoly t = MultiPoly::var(kTQ, "t");
  MultiPoly one = MultiPoly::constant(kTQ, 1);
  MultiPoly p = (one + t).pow(64);
  // Central binomial coefficient C(64,32).
  CHECK(p.coeff_of("t", 32).constant_value() ==
        Int("1832624140942590534"));
  CHECK(p.evaluate({{"t", 1}, {"q", 1}}) == Int(1) << 64);
}
