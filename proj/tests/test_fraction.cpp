#include <doctest.h>

#include "slopes/fraction.hpp"

using namespace slopes;

namespace {
Fraction fr(long n, long d) { return make_fraction(n, d); }
}

TEST_CASE("construction reduces and normalizes the sign") {
    CHECK(fr(4, 34) == fr(2, 17));
    CHECK(fr(-2, -4) == fr(1, 2));
    CHECK(fr(2, -4) == fr(-1, 2));
    CHECK(fr(0, 7) == fr(0, 1));
    CHECK(fr(6, 3).num() == 2);
    CHECK(fr(6, 3).den() == 1);
}

TEST_CASE("invalid fractions are rejected") {
    CHECK_THROWS_AS(fr(0, 0), bad_fraction);
    CHECK_THROWS_AS(fr(-1, 0), bad_fraction);
    CHECK(fr(3, 0) == Fraction::infinity());  // every n/0 with n > 0 is the same vertex
    CHECK(fr(1, 0) == Fraction::infinity());
}

TEST_CASE("parse and str round-trip") {
    CHECK(Fraction::parse("3/8") == fr(3, 8));
    CHECK(Fraction::parse("7") == fr(7, 1));
    CHECK(fr(3, 8).str() == "3/8");
    CHECK(Fraction::infinity().str() == "1/0");
    CHECK_THROWS_AS(Fraction::parse("a/b"), bad_fraction);
    CHECK_THROWS_AS(Fraction::parse("1/2/3"), bad_fraction);
}

TEST_CASE("ordering treats 1/0 as plus infinity") {
    CHECK(fr(1, 3) < fr(2, 5));
    CHECK(fr(2, 5) < Fraction::infinity());
    CHECK_FALSE(Fraction::infinity() < Fraction::infinity());
    CHECK(fr(-1, 2) < fr(0, 1));
}

TEST_CASE("parity predicates") {
    CHECK(fr(1, 3).is_knot());
    CHECK(fr(1, 2).is_link());
    CHECK(fr(1, 2).has_even_den());
    CHECK(Fraction::infinity().has_even_den());
    CHECK_FALSE(Fraction::infinity().is_link());
}

TEST_CASE("det and Farey neighbors") {
    CHECK(det(fr(1, 3), fr(2, 5)) == -1);
    CHECK(det(fr(2, 5), fr(1, 3)) == 1);
    CHECK(is_farey_neighbor(fr(1, 3), fr(2, 5)));
    CHECK(is_farey_neighbor(Fraction::infinity(), fr(4, 1)));
    CHECK(is_farey_neighbor(fr(1, 3), fr(3, 8)));  // det -1
    CHECK_FALSE(is_farey_neighbor(fr(1, 3), fr(3, 7)));
    CHECK_FALSE(is_farey_neighbor(fr(1, 3), fr(1, 3)));
}

TEST_CASE("mediant") {
    CHECK(mediant(fr(1, 3), fr(1, 2)) == fr(2, 5));
    CHECK(mediant(fr(0, 1), Fraction::infinity()) == fr(1, 1));
    CHECK_THROWS_AS(mediant(fr(1, 3), fr(3, 7)), bad_fraction);
}

TEST_CASE("parents recover the mediant decomposition") {
    auto [lo, hi] = parents(fr(13, 34));
    CHECK(lo == fr(8, 21));
    CHECK(hi == fr(5, 13));

    auto [a, b] = parents(fr(2, 5));
    CHECK(a == fr(1, 3));
    CHECK(b == fr(1, 2));

    auto [c, d] = parents(fr(1, 1));
    CHECK(c == fr(0, 1));
    CHECK(d == Fraction::infinity());

    auto [e, f] = parents(fr(1, 2));
    CHECK(mediant(e, f) == fr(1, 2));
    CHECK(e == fr(0, 1));
    CHECK(f == fr(1, 1));
}
