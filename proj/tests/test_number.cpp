#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "rectwalg/number.hpp"

using namespace rectwalg;

namespace {

Number num(const char* s) { return Number::parse(s); }

std::vector<Number> sample_values() {
    std::vector<Number> vals;
    for (int k = -4; k <= 4; ++k) vals.push_back(Number(Rational(k, 2)));
    vals.push_back(num("s"));
    vals.push_back(num("s+1"));
    vals.push_back(num("s+1/2"));
    vals.push_back(num("-s"));
    vals.push_back(num("-2*s+1"));
    vals.push_back(num("s+t"));
    return vals;
}

} // namespace

TEST_CASE("ge: integer-difference partial order") {
    CHECK(ge(num("5/2"), num("1/2")));                      // difference 2
    CHECK(ge(num("s+1"), num("s")));                        // integer difference, same coset
    CHECK_FALSE(ge(num("1/2"), num("0")));                  // 1/2 not an integer
    CHECK_FALSE(ge(num("s"), num("0")));
    CHECK_FALSE(ge(num("0"), num("1")));
    CHECK(gt(num("1"), num("0")));
    CHECK_FALSE(gt(num("0"), num("0")));
}

TEST_CASE("sum_nonneg_int") {
    CHECK(sum_nonneg_int(num("3"), num("-1")));             // 2 in Z>=0
    CHECK_FALSE(sum_nonneg_int(num("s"), num("-s"), true)); // 0 is not > 0
    CHECK(sum_nonneg_int(num("s"), num("-s"), false));
    CHECK_FALSE(sum_nonneg_int(num("1/2"), num("1/4")));    // 3/4 not an integer
}

TEST_CASE("arithmetic bundle") {
    CHECK(num("1/2") + num("1/2") == num("1"));
    CHECK(-num("s+1") == num("-s-1"));
    CHECK(num("s+3/2") - num("s+3/2") == Number(0));
    CHECK(num("s").scaled(Rational(-2)) + num("1") == num("-2*s+1"));
}

TEST_CASE("partial order properties on sample triples") {
    auto vals = sample_values();
    for (const auto& a : vals) {
        CHECK(ge(a, a)); // reflexive
        for (const auto& b : vals) {
            if (ge(a, b) && ge(b, a)) CHECK(a == b); // antisymmetric
            for (const auto& c : vals) {
                if (ge(a, b) && ge(b, c)) CHECK(ge(a, c)); // transitive
                if (ge(a, b)) CHECK(ge(a + c, b + c));     // translation invariant
            }
            // sum_nonneg_int(a,b) == ge(a, -b)
            CHECK(sum_nonneg_int(a, b) == ge(a, -b));
        }
    }
}

TEST_CASE("parse/print round trip") {
    const char* cases[] = {"0",       "3/2",  "-2",        "s",         "-s",
                           "s+1/2",   "-s+1", "-2*s+1",    "1/2*s-3/2", "s+t",
                           "2*ab1-1", "-5"};
    for (const char* c : cases) {
        Number v = Number::parse(c);
        CHECK(Number::parse(v.str()) == v);
    }
    // canonical printing
    CHECK(num("s+1/2").str() == "s+1/2");
    CHECK(num("-2*s+1").str() == "-2*s+1");
    CHECK(num("0*s+3/2").str() == "3/2");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(Number::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Number::parse("s+"), std::invalid_argument);
    CHECK_THROWS_AS(Number::parse("S"), std::invalid_argument);
    CHECK_THROWS_AS(Number::parse("1**s"), std::invalid_argument);
}

TEST_CASE("coset keys") {
    CHECK(coset_of(num("5/2")) == coset_of(num("1/2")));
    CHECK(coset_of(num("5/2")) == coset_of(num("-1/2")));
    CHECK_FALSE(coset_of(num("1/2")) == coset_of(num("0")));
    CHECK_FALSE(coset_of(num("s")) == coset_of(num("0")));
    CHECK(coset_of(num("s+1")) == coset_of(num("s")));
    CHECK(coset_of(num("-s")) == coset_of(num("s")).negated());
    CHECK(coset_of(num("1/2")) == coset_of(num("1/2")).negated()); // self-paired coset
}
