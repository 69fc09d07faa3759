#include "gridtf/polynomial.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace gridtf;
using Catch::Approx;

TEST_CASE("polynomial multiplication and identities") {
    const Polynomial a({1.0, 1.0});   // 1 + s
    const Polynomial b({1.0, -1.0});  // 1 - s
    const Polynomial prod = poly_mul(a, b);
    REQUIRE(prod.coeffs() == std::vector<double>{1.0, 0.0, -1.0});

    REQUIRE(poly_add(a, Polynomial()).coeffs() == a.coeffs());
    REQUIRE(poly_mul(a, Polynomial()).is_zero());
    REQUIRE(poly_sub(a, a).is_zero());
}

TEST_CASE("poly_pow expands binomials") {
    const Polynomial p = poly_pow(Polynomial({1.0, 0.5}), 2);
    REQUIRE(p.coeffs().size() == 3);
    CHECK(p[0] == Approx(1.0));
    CHECK(p[1] == Approx(1.0));
    CHECK(p[2] == Approx(0.25));
    CHECK(poly_pow(Polynomial({1.0, 2.0}), 0).coeffs() == std::vector<double>{1.0});
}

TEST_CASE("evaluation uses Horner at real and complex points") {
    const Polynomial p({1.0, -2.0, 3.0});
    CHECK(p.eval(2.0) == Approx(1.0 - 4.0 + 12.0));
    const auto v = p.eval(std::complex<double>(0.0, 1.0));
    CHECK(v.real() == Approx(1.0 - 3.0));
    CHECK(v.imag() == Approx(-2.0));
}

TEST_CASE("division recovers quotient and remainder") {
    const Polynomial a({2.0, 3.0, 1.0});  // (s+1)(s+2)
    const Polynomial b({1.0, 1.0});
    const auto div = poly_divmod(a, b);
    REQUIRE(div.remainder.is_zero());
    CHECK(div.quotient[0] == Approx(2.0));
    CHECK(div.quotient[1] == Approx(1.0));

    const auto div2 = poly_divmod(Polynomial({1.0, 0.0, 1.0}), Polynomial({1.0, 1.0}));
    CHECK(div2.quotient.degree() == 1);
    CHECK(div2.remainder.degree() == 0);
    CHECK(div2.remainder[0] == Approx(2.0));

    CHECK_THROWS_AS(poly_divmod(a, Polynomial()), std::invalid_argument);
}

TEST_CASE("roots come from the companion matrix") {
    const auto roots = poly_roots(Polynomial({2.0, 3.0, 1.0}));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].real() == Approx(-2.0).margin(1e-10));
    CHECK(roots[1].real() == Approx(-1.0).margin(1e-10));

    CHECK(poly_roots(Polynomial({5.0})).empty());
    CHECK(poly_roots(Polynomial()).empty());
}

TEST_CASE("trim removes trailing dust relative to the coefficient scale") {
    Polynomial p({1.0, 2.0, 1e-15});
    p.trim(1e-12);
    CHECK(p.degree() == 1);

    Polynomial q({0.0, 0.0});
    CHECK(q.is_zero());
}

TEST_CASE("non-finite coefficients are rejected") {
    CHECK_THROWS_AS(Polynomial({1.0, std::numeric_limits<double>::infinity()}),
                    std::invalid_argument);
}
