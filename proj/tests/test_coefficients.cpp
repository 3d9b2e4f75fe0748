#include <random>

#include "doctest.h"
#include "pcoh/rational.hpp"

using pcoh::GaussianRational;
using pcoh::parse_gq;
using pcoh::serialize_gq;

namespace {

GaussianRational random_gq(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return GaussianRational(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("arithmetic basics") {
    GaussianRational one_plus_i(1, 1), one_minus_i(1, -1);
    CHECK(one_plus_i * one_minus_i == GaussianRational(2));

    GaussianRational x(mpq_class(3, 2), mpq_class(1, 2));
    CHECK(x.conj() == GaussianRational(mpq_class(3, 2), mpq_class(-1, 2)));

    GaussianRational two_i(0, 2);
    CHECK(two_i.inv() == GaussianRational(mpq_class(0), mpq_class(-1, 2)));
    CHECK(two_i * two_i.inv() == GaussianRational(1));
}

TEST_CASE("division by zero is an explicit error") {
    CHECK_THROWS_AS(GaussianRational().inv(), pcoh::division_by_zero);
    CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(), pcoh::division_by_zero);
}

TEST_CASE("field axioms on randomized canonical inputs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        GaussianRational a = random_gq(rng), b = random_gq(rng), c = random_gq(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == GaussianRational());
        if (!a.is_zero()) CHECK(a * a.inv() == GaussianRational(1));
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
    }
}

TEST_CASE("parse examples") {
    CHECK(parse_gq("3/2+1/2i") == GaussianRational(mpq_class(3, 2), mpq_class(1, 2)));
    CHECK(parse_gq("-1") == GaussianRational(-1));
    CHECK(parse_gq("i") == GaussianRational(0, 1));
    CHECK(parse_gq("-i") == GaussianRational(0, -1));
    CHECK(parse_gq("2/4") == GaussianRational(mpq_class(1, 2)));
    CHECK(parse_gq("0") == GaussianRational());
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_gq(""), pcoh::parse_error);
    CHECK_THROWS_AS(parse_gq("1+"), pcoh::parse_error);
    CHECK_THROWS_AS(parse_gq("1i+2i"), pcoh::parse_error);
    CHECK_THROWS_AS(parse_gq("1i+2"), pcoh::parse_error);
    CHECK_THROWS_AS(parse_gq("x"), pcoh::parse_error);
    CHECK_THROWS_AS(parse_gq("1/0"), pcoh::parse_error);
    CHECK_THROWS_AS(parse_gq("1 "), pcoh::parse_error);
}

TEST_CASE("serialize forms") {
    CHECK(serialize_gq(GaussianRational()) == "0");
    CHECK(serialize_gq(GaussianRational(mpq_class(3, 2), mpq_class(1, 2))) == "3/2+1/2i");
    CHECK(serialize_gq(GaussianRational(0, 1)) == "i");
    CHECK(serialize_gq(GaussianRational(0, -1)) == "-i");
    CHECK(serialize_gq(GaussianRational(mpq_class(0), mpq_class(-1, 2))) == "-1/2i");
    CHECK(serialize_gq(GaussianRational(-1)) == "-1");
    CHECK(serialize_gq(GaussianRational(2, -3)) == "2-3i");
}

TEST_CASE("round trips") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        GaussianRational x = random_gq(rng);
        CHECK(parse_gq(serialize_gq(x)) == x);
    }
}
