#include "halo/linalg.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace halo;

TEST_CASE("fraction rendering") {
    CHECK(to_fraction_string(Rational(1, 3)) == "1/3");
    CHECK(to_fraction_string(Rational(-4, 6)) == "-2/3");
    CHECK(to_fraction_string(Rational(7)) == "7");
    CHECK(parse_rational("5/15") == Rational(1, 3));
    CHECK(parse_rational("-2") == Rational(-2));
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);

    CHECK(to_decimal_string(Rational(1, 4)) == "0.25");
    CHECK(to_decimal_string(Rational(-1, 3), 5) == "-0.33333");
    CHECK(to_decimal_string(Rational(3)) == "3");
    CHECK(to_decimal_string(Rational(0)) == "0");
}

TEST_CASE("linear solving") {
    const RatMat a = {{Rational(2), Rational(1)}, {Rational(1), Rational(-1)}};
    const auto x = solve_linear(a, {Rational(5), Rational(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rational(2));
    CHECK((*x)[1] == Rational(1));

    const RatMat singular = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK_FALSE(solve_linear(singular, {Rational(1), Rational(1)}).has_value());
    CHECK_FALSE(solve_linear(singular, {Rational(1), Rational(2)}).has_value());
}

TEST_CASE("rank and kernels") {
    CHECK(matrix_rank({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}) == 2);
    CHECK(matrix_rank({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 1);

    const auto y = nullspace_direction({{Rational(1), Rational(1)}});
    REQUIRE(y.has_value());
    CHECK(((*y)[0] + (*y)[1] == 0));
    CHECK_FALSE(((*y)[0] == 0 && (*y)[1] == 0));
    CHECK_FALSE(
        nullspace_direction({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}).has_value());
}

TEST_CASE("affine dimension") {
    CHECK(affine_dimension({}) == -1);
    CHECK(affine_dimension({{Rational(3), Rational(4)}}) == 0);
    CHECK(affine_dimension({{Rational(0), Rational(0)},
                            {Rational(1), Rational(1)},
                            {Rational(2), Rational(2)}}) == 1);
    CHECK(affine_dimension({{Rational(0), Rational(0)},
                            {Rational(1), Rational(0)},
                            {Rational(0), Rational(1)}}) == 2);
}
