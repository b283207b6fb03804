#include "qeuler/qdigamma.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

using namespace qeuler;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using big = boost::multiprecision::cpp_int;

TEST_CASE("Eulerian polynomial table", "[eulerian]") {
    CHECK(eulerian(0).coeffs == std::vector<big>{1});
    CHECK(eulerian(1).coeffs == std::vector<big>{1});
    CHECK(eulerian(2).coeffs == std::vector<big>{1, 1});
    CHECK(eulerian(3).coeffs == std::vector<big>{1, 4, 1});
    CHECK(eulerian(4).coeffs == std::vector<big>{1, 11, 11, 1});
    CHECK(eulerian(5).coeffs == std::vector<big>{1, 26, 66, 26, 1});
    CHECK_THROWS_AS(eulerian(65), cap_exceeded);
}

TEST_CASE("Eulerian polynomial structure", "[eulerian]") {
    big factorial = 1;
    for (unsigned n = 1; n <= 20; ++n) {
        factorial *= n;
        const EulerianPoly p = eulerian(n);
        CHECK(p.coeffs.size() == n);
        CHECK(p.coefficient_sum() == factorial);  // P_n(1) = n!
        CHECK(p.coeffs.front() == 1);
        CHECK(p.coeffs.back() == 1);
        for (const big& c : p.coeffs) CHECK(c > 0);
        // palindromic (observed, not paper-asserted)
        for (std::size_t i = 0; i < p.coeffs.size(); ++i)
            CHECK(p.coeffs[i] == p.coeffs[p.coeffs.size() - 1 - i]);
    }
}

TEST_CASE("Eulerian recursion closure", "[eulerian]") {
    // independent route: P_{n+1}(t) = (n t + 1) P_n(t) + t (1 - t) P_n'(t),
    // expanded with plain polynomial arithmetic on the test side
    for (unsigned n = 0; n <= 20; ++n) {
        const std::vector<big> pn = eulerian(n).coeffs;
        std::vector<big> next(pn.size() + 1, 0);
        for (std::size_t j = 0; j < pn.size(); ++j) {
            next[j + 1] += big(n) * pn[j];          // n t P_n
            next[j] += pn[j];                       // P_n
            if (j >= 1) next[j] += big(j) * pn[j];  // t P_n' contributes j c_j t^j
        }
        // -t^2 P_n' contributes -j c_j t^{j+1}
        for (std::size_t j = 1; j < pn.size(); ++j) next[j + 1] -= big(j) * pn[j];
        while (next.size() > 1 && next.back() == 0) next.pop_back();
        CHECK(eulerian(n + 1).coeffs == next);
    }
}

TEST_CASE("digamma_q values", "[qdigamma]") {
    // 40-digit series oracle values
    CHECK_THAT(digamma_q(1.0, QParam(0.5)).value,
               WithinAbs(-0.4205290343560457797847369304, 1e-13));
    CHECK_THAT(digamma_q(1.0, QParam(0.3)).value,
               WithinAbs(-0.3258161047371025714639902850, 1e-13));
    CHECK_THAT(digamma_q(1.5, QParam(0.5)).value,
               WithinAbs(0.03485896632887618954397370137, 1e-13));

    // super-unit shift: psi_q(x) = psi_{1/q}(x) + (x - 3/2) log q
    const double lhs = digamma_q(2.0, QParam(2.0)).value;
    const double rhs = digamma_q(2.0, QParam(0.5)).value + 0.5 * std::log(2.0);
    CHECK_THAT(lhs, WithinAbs(rhs, 1e-14));
    CHECK_THAT(lhs, WithinAbs(0.6191917364838721843411112518, 1e-13));

    // classical limit: psi(2) = 1 - euler_gamma
    CHECK_THAT(digamma_q(2.0, QParam(1.0)).value,
               WithinAbs(1.0 - 0.5772156649015328606065121, 1e-13));

    CHECK_THROWS_AS(digamma_q(0.0, QParam(0.5)), domain_error);
    CHECK_THROWS_AS(digamma_q(-1.0, QParam(0.5)), domain_error);
}

TEST_CASE("digamma_q large-x asymptotics", "[qdigamma]") {
    const QParam q(0.5);
    const double x = 80.0;
    const double qx = std::pow(0.5, x);
    const double expected = log_q_bracket(x, q) + qx * q.log_q() / (2.0 * (1.0 - qx));
    CHECK_THAT(digamma_q(x, q).value, WithinAbs(expected, 1e-12));
}

TEST_CASE("digamma_q_deriv", "[qdigamma]") {
    CHECK_THAT(digamma_q_deriv(2.0, 1, QParam(0.5)).value,
               WithinRel(0.3574733243117759917907161, 1e-12));
    CHECK(digamma_q_deriv(2.0, 1, QParam(0.5)).value > 0.0);
    // sign of d^2 psi equals sign(log^3 q) < 0
    CHECK_THAT(digamma_q_deriv(3.0, 2, QParam(0.5)).value,
               WithinRel(-0.1194041367375254067335647, 1e-12));
    CHECK_THAT(digamma_q_deriv(1.5, 1, QParam(0.7)).value,
               WithinRel(0.7670493092883629011220516, 1e-12));
    CHECK_THAT(digamma_q_deriv(2.0, 3, QParam(0.3)).value,
               WithinRel(0.4730139580914676557249530, 1e-12));

    CHECK_THROWS_AS(digamma_q_deriv(1.0, 0, QParam(0.5)), domain_error);
    CHECK_THROWS_AS(digamma_q_deriv(0.0, 1, QParam(0.5)), domain_error);

    SECTION("matches central finite differences of psi_q") {
        for (double qv : {0.3, 0.7}) {
            const QParam q(qv);
            for (double x : {0.5, 2.0, 10.0}) {
                const auto psi = [&](double t) { return digamma_q(t, q).value; };
                const double h1 = 1e-4;
                const double fd1 = (psi(x + h1) - psi(x - h1)) / (2.0 * h1);
                CHECK_THAT(digamma_q_deriv(x, 1, q).value, WithinRel(fd1, 1e-5));
                const double fd2 = (psi(x + h1) - 2.0 * psi(x) + psi(x - h1)) / (h1 * h1);
                CHECK_THAT(digamma_q_deriv(x, 2, q).value, WithinRel(fd2, 1e-5));
                const double h3 = 1e-3;
                const double fd3 = (psi(x + 2 * h3) - 2.0 * psi(x + h3) + 2.0 * psi(x - h3) -
                                    psi(x - 2 * h3)) /
                                   (2.0 * h3 * h3 * h3);
                CHECK_THAT(digamma_q_deriv(x, 3, q).value, WithinRel(fd3, 1e-5));
            }
        }
    }

    SECTION("super-unit transform: identical for n>=2, shifted by log q for n=1") {
        const QParam q(3.0), p(1.0 / 3.0);
        CHECK_THAT(digamma_q_deriv(1.7, 1, q).value,
                   WithinRel(digamma_q_deriv(1.7, 1, p).value + q.log_q(), 1e-13));
        CHECK_THAT(digamma_q_deriv(1.7, 2, q).value,
                   WithinRel(digamma_q_deriv(1.7, 2, p).value, 1e-14));
    }
}

TEST_CASE("envelope bracket for psi derivatives", "[qdigamma]") {
    // q^x/(1-q) < log^{-n} q * d^{n-1} psi_q(x) < (1+c_{n-1} q^x) q^x / ((1-q)(1-q^x)^n)
    for (unsigned n : {2u, 3u}) {
        for (double qv : {0.3, 0.7}) {
            const QParam q(qv);
            for (double x : {0.5, 2.0}) {
                const double qx = std::pow(qv, x);
                const double mid = digamma_q_deriv(x, n - 1, q).value /
                                   std::pow(q.log_q(), static_cast<double>(n));
                const double lo = qx / (1.0 - qv);
                const double cn = eulerian_envelope_constant(n - 1);
                const double hi = (1.0 + cn * qx) * qx /
                                  ((1.0 - qv) * std::pow(1.0 - qx, static_cast<double>(n)));
                CHECK(lo < mid);
                CHECK(mid < hi);
            }
        }
    }
}

TEST_CASE("Plana representation agrees with the series", "[qdigamma]") {
    CHECK_THAT(digamma_q_plana(1.5, QParam(0.5)).value,
               WithinAbs(digamma_q(1.5, QParam(0.5)).value, 1e-10));
    CHECK_THAT(digamma_q_plana(1.0, QParam(0.3)).value,
               WithinAbs(digamma_q(1.0, QParam(0.3)).value, 1e-10));
    // super-unit corollary
    CHECK_THAT(digamma_q_plana(2.0, QParam(3.0)).value,
               WithinAbs(digamma_q(2.0, QParam(3.0)).value, 1e-9));

    for (double qv : {0.3, 0.5, 0.7, 0.9}) {
        const QParam q(qv);
        for (double x : {0.3, 0.8, 1.7, 4.2, 9.5})
            CHECK_THAT(digamma_q_plana(x, q).value, WithinAbs(digamma_q(x, q).value, 1e-9));
    }

    CHECK_THROWS_AS(digamma_q_plana(1.0, QParam(1.0)), domain_error);
    CHECK_THROWS_AS(digamma_q_plana(1.0, QParam(1e-13)), domain_error);
}
