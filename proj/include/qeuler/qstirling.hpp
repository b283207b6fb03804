#pragma once

// Moak-type expansion of log Gamma_q: the constant M_q, the Debye-type
// integral, the remainder mu_q, the decrement g_q and the tail-sum
// characterization; q > 1 variant through the q <-> 1/q identity.

#include <cmath>

#include "qeuler/qgamma.hpp"
#include "qeuler/quadrature.hpp"

namespace qeuler {

namespace detail {

// u/(e^u - 1), extended continuously by 1 at u = 0.
inline double debye_integrand(double u) {
    if (u < 1e-8) return 1.0 - 0.5 * u + u * u / 12.0;
    return u / std::expm1(u);
}

}  // namespace detail

/// int_0^X u/(e^u - 1) du by adaptive quadrature.
inline double debye_integral(double X, const Precision& prec = {}) {
    if (!(X >= 0.0)) throw domain_error("debye_integral: requires X >= 0");
    if (X == 0.0) return 0.0;
    return integrate(detail::debye_integrand, 0.0, X, prec.quad_tol, 8.0);
}

/// Series oracle for the same integral:
///   int_0^X u/(e^u-1) du = pi^2/6 - sum_{k>=1} e^{-kX} (X/k + 1/k^2).
/// Quadrature-free path, fastest for large X; kept independent so the two
/// routes can certify each other.
inline double debye_integral_series(double X, const Precision& prec = {}) {
    if (!(X > 0.0)) throw domain_error("debye_integral_series: requires X > 0");
    const double zeta2 = M_PI * M_PI / 6.0;
    double sum = 0.0, comp = 0.0;
    double ekx = 1.0;
    const double ex = std::exp(-X);
    for (std::size_t k = 1; k <= prec.max_terms; ++k) {
        ekx *= ex;
        const double kd = static_cast<double>(k);
        const double term = ekx * (X / kd + 1.0 / (kd * kd));
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (term <= prec.rel_tol * zeta2) return zeta2 - sum;
    }
    throw truncation_cap_exceeded("debye_integral_series: cap exceeded", 0.0);
}

/// M_q = log sqrt(1-q) + log (q;q)_inf - pi^2 / (6 log q), 0 < q < 1.
inline double m_q_constant(const QParam& q, const Precision& prec = {}) {
    if (!q.sub_unit()) throw domain_error("m_q_constant: requires 0 < q < 1");
    return 0.5 * std::log1p(-q.q()) + log_qpoch_inf(q.q(), q, prec) -
           M_PI * M_PI / (6.0 * q.log_q());
}

/// The expansion split at x: log Gamma_q(x) = main + integral + M_q + mu.
struct StirlingParts {
    double main_term;      // (x - 1/2) log((1-q^x)/(1-q))
    double integral_term;  // (1/log q) int_0^{-x log q} u/(e^u-1) du
    double constant;       // M_q
    double mu;             // remainder, -> 0 as x -> infty
};

inline StirlingParts mu_q(double x, const QParam& q, const Precision& prec = {}) {
    if (!(x > 0.0)) throw domain_error("mu_q: requires x > 0");
    if (!q.sub_unit()) throw domain_error("mu_q: requires 0 < q < 1");
    StirlingParts parts{};
    parts.main_term = (x - 0.5) * log_q_bracket(x, q);
    parts.integral_term = debye_integral(-x * q.log_q(), prec) / q.log_q();
    parts.constant = m_q_constant(q, prec);
    parts.mu = log_gamma_q(x, q, prec) - parts.main_term - parts.integral_term - parts.constant;
    return parts;
}

/// g_q(x) = mu_q(x) - mu_q(x+1) in closed form (single strip integral, no
/// mu_q calls):
///   g_q(x) = (x+1/2) log((1-q^{x+1})/(1-q^x))
///            + (1/log q) int_{-x log q}^{-(x+1) log q} u/(e^u-1) du.
inline double g_q_decrement(double x, const QParam& q, const Precision& prec = {}) {
    if (!(x > 0.0)) throw domain_error("g_q_decrement: requires x > 0");
    if (!q.sub_unit()) throw domain_error("g_q_decrement: requires 0 < q < 1");
    const double lq = q.log_q();
    const double qx = std::exp(x * lq);
    // log((1-q^{x+1})/(1-q^x)) = log1p(q^x (1-q)/(1-q^x)), accurate when both
    // endpoints are already close to 1
    const double main = (x + 0.5) * std::log1p(qx * (1.0 - q.q()) / (1.0 - qx));
    const double strip = integrate(detail::debye_integrand, -x * lq, -(x + 1.0) * lq,
                                   prec.quad_tol * std::exp(std::max(-700.0, x * lq)), 8.0);
    return main + strip / lq;
}

/// Main + integral + constant; for q > 1 the Eq-(1.4) route
///   log Gamma_q(x) = (x-1)(x-2)/2 log q + log Gamma_{1/q}(x)
/// is applied to the sub-unit expansion (which lands on the
/// (1-x^2)/2 log q + ... + M_{1/q} form).
inline double log_gamma_q_asymptotic(double x, const QParam& q, const Precision& prec = {}) {
    if (!(x > 0.0)) throw domain_error("log_gamma_q_asymptotic: requires x > 0");
    if (q.boundary())
        throw domain_error("log_gamma_q_asymptotic: q must be sub-unit or super-unit");
    if (q.super_unit()) {
        return 0.5 * (x - 1.0) * (x - 2.0) * q.log_q() +
               log_gamma_q_asymptotic(x, q.reciprocal(), prec);
    }
    return (x - 0.5) * log_q_bracket(x, q) + debye_integral(-x * q.log_q(), prec) / q.log_q() +
           m_q_constant(q, prec);
}

}  // namespace qeuler
