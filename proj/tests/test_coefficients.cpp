#include <doctest.h>

#include "tc/coefficients.hpp"

using namespace tc;

TEST_CASE("field descriptors")
{
    CHECK(std::holds_alternative<Rationals>(parse_field("q")));
    CHECK(std::holds_alternative<Rationals>(parse_field("Q")));
    const auto z7 = parse_field("zp:7");
    REQUIRE(std::holds_alternative<PrimeField>(z7));
    CHECK(std::get<PrimeField>(z7).prime() == 7);
    CHECK(field_name(z7) == "Z_7");
    CHECK(field_characteristic(parse_field("zp:2")) == 2);
    CHECK(field_characteristic(parse_field("q")) == 0);

    CHECK_THROWS_AS(parse_field("zp:4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field("zp:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field("zp:"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field("zp:7x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field("reals"), std::invalid_argument);
}

TEST_CASE("prime field arithmetic")
{
    const PrimeField f(5);
    CHECK(f.add(3, 4) == 2);
    CHECK(f.sub(1, 3) == 3);
    CHECK(f.neg(0) == 0);
    CHECK(f.neg(2) == 3);
    CHECK(f.from_integer(-2) == 3);
    CHECK(f.from_integer(mpz_class("123456789012345678901")) == 1);
    for (PrimeField::Elem a = 1; a < 5; ++a)
        CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);

    const PrimeField two(2);
    CHECK(two.from_integer(-2) == 0);
}

TEST_CASE("rationals")
{
    const Rationals q;
    CHECK(q.mul(q.inv(mpq_class(3, 4)), mpq_class(3, 4)) == 1);
    CHECK_THROWS_AS(q.inv(0), std::domain_error);
    CHECK(q.to_string(mpq_class(-1, 2)) == "-1/2");
}
