#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bergman/kernels.hpp"
#include "bergman/monomials.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/sampling.hpp"

using namespace bergman;

TEST_CASE("disc kernel values") {
    CHECK(kernel_disc(0.0, 0.0).real() == doctest::Approx(1.0 / M_PI).epsilon(1e-15));
    CHECK(std::abs(kernel_disc(0.0, 0.0).imag()) < 1e-16);

    // monomial series sum (a+1) z^a conj(w)^a / pi at z = w = 1/2
    Complex series = 0.0;
    for (int a = 0; a < 200; ++a) series += (a + 1.0) * std::pow(0.25, a) / M_PI;
    CHECK(kernel_disc(0.5, 0.5).real() == doctest::Approx(16.0 / (9.0 * M_PI)).epsilon(1e-14));
    CHECK(kernel_disc(0.5, 0.5).real() == doctest::Approx(series.real()).epsilon(1e-13));
}

TEST_CASE("Hermitian symmetry") {
    SampleCloud zs = sample(DomainSpec::unit_disc(), 100, 1);
    SampleCloud ws = sample(DomainSpec::unit_disc(), 100, 2);
    for (std::size_t i = 0; i < 100; ++i) {
        const Complex a = kernel_disc(zs.points[i][0], ws.points[i][0]);
        const Complex b = std::conj(kernel_disc(ws.points[i][0], zs.points[i][0]));
        CHECK(std::abs(a - b) < 1e-15 * std::abs(a));
    }
    SampleCloud hz = sample(DomainSpec::hartogs(), 100, 3);
    SampleCloud hw = sample(DomainSpec::hartogs(), 100, 4);
    for (std::size_t i = 0; i < 100; ++i) {
        const Complex a = kernel_hartogs(hz.points[i], hw.points[i]);
        const Complex b = std::conj(kernel_hartogs(hw.points[i], hz.points[i]));
        CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
    }
}

TEST_CASE("polydisc kernel factorizes") {
    CHECK(kernel_polydisc(CPoint(0.0, 0.0), CPoint(0.0, 0.0)).real() ==
          doctest::Approx(1.0 / (M_PI * M_PI)).epsilon(1e-15));
    const double v = 16.0 / (9.0 * M_PI);
    CHECK(kernel_polydisc(CPoint(0.5, 0.5), CPoint(0.5, 0.5)).real() ==
          doctest::Approx(v * v).epsilon(1e-14));

    SampleCloud zs = sample(DomainSpec::polydisc(2), 50, 5);
    SampleCloud ws = sample(DomainSpec::polydisc(2), 50, 6);
    for (std::size_t i = 0; i < 50; ++i) {
        const Complex prod = kernel_disc(zs.points[i][0], ws.points[i][0]) *
                             kernel_disc(zs.points[i][1], ws.points[i][1]);
        CHECK(std::abs(kernel_polydisc(zs.points[i], ws.points[i]) - prod) <= 1e-14 * std::abs(prod));
    }
}

TEST_CASE("Hartogs kernel: closed form and Laurent series at a diagonal point") {
    const double r = std::sqrt(0.5);
    const CPoint z(0.0, r);
    CHECK(kernel_hartogs(z, z).real() == doctest::Approx(8.0 / (M_PI * M_PI)).epsilon(1e-13));

    // Laurent series: K(z; conj z) = sum |z|^{2 idx} / ||idx||^2; at z1 = 0
    // only a = 0 survives and ||w2^b||^2 = pi^2/(b+2)
    double s = 0.0;
    for (int b = -1; b <= 400; ++b)
        s += std::pow(r * r, b) * (b + 2.0) / (M_PI * M_PI);
    CHECK(kernel_hartogs(z, z).real() == doctest::Approx(s).epsilon(1e-12));
}

TEST_CASE("Hartogs kernel matches the biholomorphic transformation formula") {
    SampleCloud zs = sample(DomainSpec::hartogs(), 100, 7);
    SampleCloud ws = sample(DomainSpec::hartogs(), 100, 8);
    for (std::size_t i = 0; i < 100; ++i) {
        const CPoint &z = zs.points[i], &w = ws.points[i];
        const Complex lhs = kernel_hartogs(z, w);
        const Complex rhs = kernel_polydisc(CPoint(z[0] / z[1], z[1]), CPoint(w[0] / w[1], w[1])) /
                            (z[1] * std::conj(w[1]));
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
    }
}

TEST_CASE("kernels refuse boundary and exterior points") {
    CHECK_THROWS_AS(kernel_disc(Complex(1.0, 0.0), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(kernel_hartogs(CPoint(0.5, 0.5), CPoint(0.1, 0.5)), std::invalid_argument);
    CHECK_THROWS_AS(abs_kernel(DomainSpec::hartogs(), CPoint(0.0, 0.0), CPoint(0.1, 0.5)),
                    std::invalid_argument);
}

TEST_CASE("abs_kernel equals |kernel| and is positive") {
    SampleCloud zs = sample(DomainSpec::hartogs(), 50, 9);
    SampleCloud ws = sample(DomainSpec::hartogs(), 50, 10);
    for (std::size_t i = 0; i < 50; ++i) {
        const double a = abs_kernel(DomainSpec::hartogs(), zs.points[i], ws.points[i]);
        CHECK(a == std::abs(kernel_hartogs(zs.points[i], ws.points[i])));
        CHECK(a > 0.0);
    }
}

TEST_CASE("on the bidisc with |z2| <= 1/2 the kernel is comparable to the disc kernel") {
    // pi |K_D2| / |K_D(z1)| = 1/|1 - z2 conj(w2)|^2 in [1/9, 4] for |z2| <= 1/2
    SampleCloud zs = sample(DomainSpec::polydisc(2), 200, 11);
    SampleCloud ws = sample(DomainSpec::polydisc(2), 200, 12);
    for (std::size_t i = 0; i < 200; ++i) {
        CPoint z = zs.points[i];
        z.coords[1] *= 0.5;
        const double ratio = M_PI * abs_kernel(DomainSpec::polydisc(2), z, ws.points[i]) /
                             std::abs(kernel_disc(z[0], ws.points[i][0]));
        CHECK(ratio >= 1.0 / 9.0);
        CHECK(ratio <= 4.0);
    }
}

TEST_CASE("reproducing property on monomials via quadrature") {
    const auto D = DomainSpec::unit_disc();
    QuadratureRule rule = quadrature_rule(D, 40, 20);
    for (int a = 0; a <= 8; ++a) {
        for (Complex z : {Complex(0.3, 0.1), Complex(-0.5, 0.2), Complex(0.0, 0.6)}) {
            const Complex got = integrate_value(
                [&](const CPoint& w) { return kernel_disc(z, w[0]) * std::pow(w[0], a); }, rule);
            CHECK(std::abs(got - std::pow(z, a)) < 1e-8);
        }
    }
}

TEST_CASE("norm-reproducing identity for the f_s construction") {
    // int_{D^2} |K((s,s); conj w)|^2 dV = K((s,s);(s,s))
    const auto D2 = DomainSpec::polydisc(2);
    for (double s : {0.3, 0.6}) {
        QuadratureRule rule = quadrature_rule(D2, 32, 24, s);
        const CPoint zs(s, s);
        const double lhs = integrate_value(
                               [&](const CPoint& w) {
                                   const double k = abs_kernel(D2, zs, w);
                                   return Complex(k * k, 0.0);
                               },
                               rule)
                               .real();
        const double rhs = kernel_polydisc(zs, zs).real();
        CHECK(std::abs(lhs - rhs) / rhs < 1e-4);
    }
}

TEST_CASE("diagonal positivity") {
    SampleCloud zs = sample(DomainSpec::hartogs(), 100, 13);
    for (const auto& z : zs.points) {
        const Complex k = kernel_hartogs(z, z);
        CHECK(k.real() > 0.0);
        CHECK(std::abs(k.imag()) <= 1e-12 * k.real());
    }
    SampleCloud ds = sample(DomainSpec::unit_disc(), 100, 14);
    for (const auto& z : ds.points) CHECK(kernel_disc(z[0], z[0]).real() > 0.0);
}
