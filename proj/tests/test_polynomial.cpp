#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "radspec/polynomial.hpp"

#include <cmath>

using namespace radspec;

TEST_CASE("evaluation and arithmetic") {
    const Poly p{{1.0, -3.0, 2.0}};  // 1 - 3x + 2x^2
    CHECK(p.eval(0.0) == 1.0);
    CHECK(p.eval(1.0) == 0.0);
    CHECK(p.eval_derivative(1.0) == 1.0);

    const Poly q = mul_linear(p, 1.0, 1.0);  // (1+x) p
    CHECK(q.eval(2.0) == doctest::Approx(3.0 * p.eval(2.0)));

    const Poly s = p + Poly{{0.0, 3.0}};
    CHECK(s.eval(5.0) == doctest::Approx(1.0 + 2.0 * 25.0));
}

TEST_CASE("real roots of products of linear factors") {
    // (x-1)(x-2)(x-3)(x+4) = 24 - 14x - 13x^2 + 2x^3 + ... build by multiplication
    Poly p = Poly::constant(1.0);
    for (double r : {1.0, 2.0, 3.0, -4.0}) p = mul_linear(p, -r, 1.0);
    const std::vector<double> roots = real_roots(p);
    REQUIRE(roots.size() == 4);
    CHECK(roots[0] == doctest::Approx(-4.0).epsilon(1e-12));
    CHECK(roots[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(roots[2] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(roots[3] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("complex pairs are rejected") {
    // (x^2 + 1)(x - 2): only the real root survives
    const Poly p{{-2.0, 1.0, -2.0, 1.0}};
    const std::vector<double> roots = real_roots(p);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("wide dynamic range is handled by scaling") {
    // roots at 1e-3, 1, 1e3
    Poly p = Poly::constant(1.0);
    for (double r : {1e-3, 1.0, 1e3}) p = mul_linear(p, -r, 1.0);
    const std::vector<double> roots = real_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == doctest::Approx(1e-3).epsilon(1e-10));
    CHECK(roots[1] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(roots[2] == doctest::Approx(1e3).epsilon(1e-10));
}

TEST_CASE("degenerate inputs") {
    CHECK(real_roots(Poly::constant(3.0)).empty());
    const std::vector<double> lin = real_roots(Poly{{-6.0, 2.0}});
    REQUIRE(lin.size() == 1);
    CHECK(lin[0] == 3.0);
}
