#pragma once

// Gamma_q on (0, infty) for all q-regimes, the q <-> 1/q identity, the
// q-factorial recurrence, and the Gauss-type multiplication formula.
//
// All internal arithmetic is in log space: for q > 1 the prefactor
// q^{x(x-1)/2} overflows double long before the logarithm does.

#include <cmath>
#include <cstddef>
#include <utility>

#include "qeuler/classical.hpp"
#include "qeuler/qcore.hpp"

namespace qeuler {

/// Value of Gamma_q together with its logarithm and the certified
/// truncation bound that was achieved while computing it.
struct GammaValue {
    double value;
    double log_value;
    double achieved_rel_err;
};

namespace detail {

struct LogGamma {
    double log_value;
    double err;  // certified truncation bound on log_value
};

constexpr double log_err_floor = 4.4e-16;  // ~2 eps

// 0 < q < 1 product form, Eq-level:
//   log Gamma_q(x) = log (q;q)_inf - log (q^x;q)_inf + (1-x) log(1-q)
inline LogGamma log_gamma_q_subunit(double x, const QParam& q, const Precision& prec) {
    Precision half = prec;
    half.rel_tol = 0.5 * prec.rel_tol;
    const double qx = std::exp(x * q.log_q());
    const QpochInfResult num = qpoch_inf_log(q.q(), q, half);
    const QpochInfResult den = qpoch_inf_log(qx, q, half);
    const double lg = num.log_value - den.log_value + (1.0 - x) * std::log1p(-q.q());
    return {lg, num.tail_bound + den.tail_bound + log_err_floor};
}

// q > 1 direct form:
//   log Gamma_q(x) = log (p;p)_inf - log (p^x;p)_inf + (1-x) log(q-1)
//                    + x(x-1)/2 log q,   p = 1/q.
// Kept distinct from the routed path so the q <-> 1/q identity check has
// two genuinely different arrangements to compare.
inline LogGamma log_gamma_q_superunit_direct(double x, const QParam& q, const Precision& prec) {
    const QParam p = q.reciprocal();
    Precision half = prec;
    half.rel_tol = 0.5 * prec.rel_tol;
    const double px = std::exp(-x * q.log_q());
    const QpochInfResult num = qpoch_inf_log(p.q(), p, half);
    const QpochInfResult den = qpoch_inf_log(px, p, half);
    const double lg = num.log_value - den.log_value + (1.0 - x) * std::log(q.q() - 1.0) +
                      0.5 * x * (x - 1.0) * q.log_q();
    return {lg, num.tail_bound + den.tail_bound + log_err_floor};
}

inline bool is_small_integer(double x) { return x == std::floor(x) && x <= 1e6; }

// Integer arguments: Gamma_q(n+1) is the plain bracket product, which is the
// recurrence iterated exactly; no infinite product is involved in any regime.
inline LogGamma log_gamma_q_integer(double x, const QParam& q) {
    double sum = 0.0, comp = 0.0;
    double prod = 1.0;
    for (double k = 1.0; k < x; k += 1.0) {
        prod *= q_bracket(k, q);
        const double y = log_q_bracket(k, q) - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    if (std::isfinite(prod) && prod > 0.0) return {std::log(prod), log_err_floor};
    return {sum, log_err_floor};
}

inline LogGamma log_gamma_q_impl(double x, const QParam& q, const Precision& prec) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw domain_error("gamma_q: requires x > 0");
    switch (q.regime()) {
        case QRegime::ZeroLimit:
            return {0.0, log_err_floor};
        case QRegime::ClassicalLimit:
            return {classical::log_gamma(x), log_err_floor};
        case QRegime::SubUnit:
            if (is_small_integer(x)) return log_gamma_q_integer(x, q);
            break;
        case QRegime::SuperUnit: {
            if (is_small_integer(x)) return log_gamma_q_integer(x, q);
            // route through Eq-(1.4): Gamma_q(x) = q^{(x-1)(x-2)/2} Gamma_{1/q}(x)
            const LogGamma sub = log_gamma_q_impl(x, q.reciprocal(), prec);
            return {0.5 * (x - 1.0) * (x - 2.0) * q.log_q() + sub.log_value, sub.err};
        }
    }
    return log_gamma_q_subunit(x, q, prec);
}

}  // namespace detail

/// Gamma_q(x) for x > 0 and any q > 0.
inline GammaValue gamma_q(double x, const QParam& q, const Precision& prec = {}) {
    if (!q.boundary() && detail::is_small_integer(x) && x > 0.0) {
        // exact for small integer arguments; keeps Gamma_q(1) == 1 bit-exact
        double prod = 1.0;
        for (double k = 1.0; k < x; k += 1.0) prod *= q_bracket(k, q);
        if (std::isfinite(prod) && prod > 0.0)
            return {prod, std::log(prod), detail::log_err_floor};
    }
    const detail::LogGamma lg = detail::log_gamma_q_impl(x, q, prec);
    return {std::exp(lg.log_value), lg.log_value, lg.err};
}

inline double log_gamma_q(double x, const QParam& q, const Precision& prec = {}) {
    return detail::log_gamma_q_impl(x, q, prec).log_value;
}

/// Relative residual of Gamma_q(x) = q^{(x-1)(x-2)/2} Gamma_{1/q}(x), the two
/// sides evaluated through different product arrangements.
inline double gamma_q_reciprocal_identity_residual(double x, const QParam& q,
                                                   const Precision& prec = {}) {
    if (q.boundary())
        throw domain_error("reciprocal identity: q must not be in a boundary regime");
    double side_a, side_b;
    const double prefactor = 0.5 * (x - 1.0) * (x - 2.0) * q.log_q();
    if (q.sub_unit()) {
        side_a = detail::log_gamma_q_subunit(x, q, prec).log_value;
        side_b = prefactor + detail::log_gamma_q_superunit_direct(x, q.reciprocal(), prec).log_value;
    } else {
        side_a = detail::log_gamma_q_superunit_direct(x, q, prec).log_value;
        side_b = prefactor + detail::log_gamma_q_subunit(x, q.reciprocal(), prec).log_value;
    }
    return std::fabs(std::expm1(side_b - side_a));
}

/// Both sides of the multiplication formula
///   prod_{i=0}^{m-1} Gamma_{q^m}(x + i/m)
///     = [m]_q^{1-mx} prod_{i=1}^{m-1} Gamma_{q^m}(i/m) * Gamma_q(mx),
/// evaluated independently. Logarithms are included since either side can
/// overflow double for q > 1.
struct MultiplicationSides {
    double lhs;
    double rhs;
    double log_lhs;
    double log_rhs;
};

inline MultiplicationSides multiplication_lhs_rhs(double x, int m, const QParam& q,
                                                  const Precision& prec = {}) {
    if (!(x > 0.0)) throw domain_error("multiplication_lhs_rhs: requires x > 0");
    if (m < 2) throw domain_error("multiplication_lhs_rhs: requires m >= 2");
    const QParam qm(std::pow(q.q(), m));
    const double md = static_cast<double>(m);
    double log_lhs = 0.0;
    for (int i = 0; i < m; ++i)
        log_lhs += log_gamma_q(x + static_cast<double>(i) / md, qm, prec);
    double log_rhs = (1.0 - md * x) * log_q_bracket(md, q);
    for (int i = 1; i < m; ++i)
        log_rhs += log_gamma_q(static_cast<double>(i) / md, qm, prec);
    log_rhs += log_gamma_q(md * x, q, prec);
    return {std::exp(log_lhs), std::exp(log_rhs), log_lhs, log_rhs};
}

/// [n]_q! = prod_{k=1}^{n} [k]_q = Gamma_q(n+1).
inline double q_factorial(unsigned n, const QParam& q) {
    double prod = 1.0;
    for (unsigned k = 1; k <= n; ++k) prod *= q_bracket(static_cast<double>(k), q);
    return prod;
}

}  // namespace qeuler
