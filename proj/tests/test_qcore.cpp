#include "qeuler/qcore.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace qeuler;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using Catch::Matchers::WithinULP;

TEST_CASE("QParam validates and classifies q", "[qcore]") {
    CHECK(QParam(0.5).regime() == QRegime::SubUnit);
    CHECK(QParam(2.0).regime() == QRegime::SuperUnit);
    CHECK(QParam(1.0).regime() == QRegime::ClassicalLimit);
    CHECK(QParam(1.0 + 5e-10).regime() == QRegime::ClassicalLimit);
    CHECK(QParam(1.0 - 5e-10).regime() == QRegime::ClassicalLimit);
    CHECK(QParam(1e-13).regime() == QRegime::ZeroLimit);
    CHECK(QParam(1e-12).regime() == QRegime::ZeroLimit);
    CHECK(QParam(2e-12).regime() == QRegime::SubUnit);

    CHECK_THROWS_AS(QParam(0.0), domain_error);
    CHECK_THROWS_AS(QParam(-1.0), domain_error);
    CHECK_THROWS_AS(QParam(std::nan("")), domain_error);
    CHECK_THROWS_AS(QParam(std::numeric_limits<double>::infinity()), domain_error);

    CHECK_THAT(QParam(0.5).log_q(), WithinULP(std::log(0.5), 1));
    CHECK(QParam(0.25).reciprocal().q() == 4.0);
}

TEST_CASE("Precision invariants", "[qcore]") {
    CHECK_NOTHROW(Precision{});
    CHECK_NOTHROW(Precision(1e-10, 1e-200, 1000, 1e-8));
    CHECK_THROWS_AS(Precision(0.0, 1e-300, 1000, 1e-12), domain_error);
    CHECK_THROWS_AS(Precision(2.0, 1e-300, 1000, 1e-12), domain_error);
    CHECK_THROWS_AS(Precision(1e-14, 0.0, 1000, 1e-12), domain_error);
    CHECK_THROWS_AS(Precision(1e-14, 1e-300, 8, 1e-12), domain_error);
    CHECK_THROWS_AS(Precision(1e-14, 1e-300, 1000, 1.5), domain_error);
}

TEST_CASE("q_bracket", "[qcore]") {
    CHECK_THAT(q_bracket(2.0, QParam(0.5)), WithinULP(1.5, 2));
    CHECK_THAT(q_bracket(3.0, QParam(2.0)), WithinULP(7.0, 2));
    CHECK_THAT(q_bracket(1.0, QParam(0.3)), WithinULP(1.0, 2));
    CHECK_THAT(q_bracket(1.0, QParam(7.0)), WithinULP(1.0, 2));
    // classical limit: [x]_q -> x
    CHECK(q_bracket(3.7, QParam(1.0)) == 3.7);

    for (double qv : {0.3, 2.0, 10.0}) {
        const QParam q(qv);
        for (double x : {0.5, 5.0, 50.0})
            CHECK_THAT(std::exp(log_q_bracket(x, q)), WithinRel(q_bracket(x, q), 1e-14));
    }
}

TEST_CASE("qpoch_finite", "[qcore]") {
    CHECK_THAT(qpoch_finite(0.5, QParam(0.5), 3), WithinULP(0.328125, 2));
    CHECK(qpoch_finite(0.0, QParam(0.7), 5) == 1.0);
    CHECK(qpoch_finite(0.3, QParam(0.3), 0) == 1.0);

    SECTION("recurrence (a;q)_{n+1} = (a;q)_n (1 - a q^n)") {
        for (double a : {-0.8, -0.2, 0.1, 0.5, 0.9}) {
            for (double qv : {0.2, 0.5, 0.9}) {
                const QParam q(qv);
                for (std::size_t n : {0u, 1u, 4u, 11u}) {
                    const double lhs = qpoch_finite(a, q, n + 1);
                    const double rhs = qpoch_finite(a, q, n) * (1.0 - a * std::pow(qv, n));
                    CHECK_THAT(lhs, WithinULP(rhs, 2));
                }
            }
        }
    }
}

TEST_CASE("qpoch_inf", "[qcore]") {
    CHECK(qpoch_inf(0.0, QParam(0.5)) == 1.0);
    // oracle: 40-digit evaluation of prod (1 - 0.5^{k+1})
    CHECK_THAT(qpoch_inf(0.5, QParam(0.5)), WithinRel(0.2887880950866024212788997219, 3e-14));

    CHECK_THROWS_AS(qpoch_inf(0.5, QParam(1.0)), non_convergent);
    CHECK_THROWS_AS(qpoch_inf(0.5, QParam(2.0)), non_convergent);

    SECTION("truncation cap carries the achieved bound") {
        Precision prec;
        prec.max_terms = 32;
        try {
            qpoch_inf(0.999, QParam(0.999), prec);
            FAIL("expected truncation_cap_exceeded");
        } catch (const truncation_cap_exceeded& e) {
            CHECK(e.achieved_bound() > 1e-2);
        }
    }

    SECTION("splitting: (a;q)_inf = (a;q)_n (a q^n; q)_inf") {
        for (double a : {-0.8, -0.3, 0.2, 0.5, 0.9}) {
            for (double qv : {0.2, 0.5, 0.9}) {
                const QParam q(qv);
                const double whole = qpoch_inf(a, q);
                for (std::size_t n : {1u, 5u, 20u}) {
                    const double split =
                        qpoch_finite(a, q, n) * qpoch_inf(a * std::pow(qv, n), q);
                    CHECK_THAT(whole, WithinRel(split, 5e-14));
                }
            }
        }
    }

    SECTION("monotone truncation: partials decrease, value within tail bound") {
        const QParam q(0.6);
        const double a = 0.7;
        const double value = qpoch_inf(a, q);
        double prev = 2.0;
        for (std::size_t n : {2u, 5u, 10u, 20u, 40u}) {
            const double partial = qpoch_finite(a, q, n);
            CHECK(partial < prev);
            prev = partial;
            const double aqn = a * std::pow(0.6, n);
            const double bound = aqn / ((1.0 - 0.6) * (1.0 - aqn));
            CHECK(value <= partial * (1 + 1e-15));
            CHECK(value >= partial * std::exp(-bound) * (1 - 1e-13));
        }
    }
}

TEST_CASE("log_qpoch_inf underflow regime", "[qcore]") {
    // (q;q)_inf at q = 0.999 underflows double; the log stays representable
    const QParam q(0.999);
    const double lg = log_qpoch_inf(0.999, q);
    CHECK(std::isfinite(lg));
    // log (q;q)_inf ~ -pi^2/(6 |log q|) + positive corrections
    CHECK(lg < -1600.0);
    CHECK(lg > -1700.0);
}
