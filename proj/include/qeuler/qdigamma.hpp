#pragma once

// psi_q and all higher logarithmic derivatives of Gamma_q via Eulerian
// polynomials; Plana-integral cross-check path.

#include <cmath>
#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qeuler/classical.hpp"
#include "qeuler/qcore.hpp"
#include "qeuler/quadrature.hpp"

namespace qeuler {

// ---------------------------------------------------------------------------
// Eulerian polynomials
// ---------------------------------------------------------------------------

/// Exact integer coefficients of P_n, ascending powers. The recursion
///   P_0 = 1,  P_{n+1}(t) = (n t + 1) P_n(t) + t (1 - t) P_n'(t)
/// drives the coefficients to n! scale, so they are kept as big integers
/// and converted to double only at evaluation.
struct EulerianPoly {
    unsigned n = 0;
    std::vector<boost::multiprecision::cpp_int> coeffs;

    /// P_n(t) by Horner evaluation in double.
    double operator()(double t) const {
        double v = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            v = v * t + static_cast<double>(*it);
        return v;
    }

    boost::multiprecision::cpp_int coefficient_sum() const {
        boost::multiprecision::cpp_int s = 0;
        for (const auto& c : coeffs) s += c;
        return s;
    }
};

inline constexpr unsigned eulerian_max_order = 64;

inline EulerianPoly eulerian(unsigned n) {
    if (n > eulerian_max_order)
        throw cap_exceeded("eulerian: order capped at 64");
    using big = boost::multiprecision::cpp_int;
    std::vector<big> c{1};  // P_0 = P_1 = [1]
    for (unsigned m = 1; m < std::max(n, 1u); ++m) {
        // coefficient recurrence: d_j = (j+1) c_j + (m - j + 1) c_{j-1}
        std::vector<big> d(m + 1, 0);
        for (unsigned j = 0; j <= m; ++j) {
            if (j < c.size()) d[j] += big(j + 1) * c[j];
            if (j >= 1 && j - 1 < c.size()) d[j] += big(m - j + 1) * c[j - 1];
        }
        c = std::move(d);
    }
    return {n, std::move(c)};
}

/// c_n = n! - 1, the envelope constant in 1 < P_n(q^y) < 1 + c_n q^y.
inline double eulerian_envelope_constant(unsigned n) {
    double f = 1.0;
    for (unsigned k = 2; k <= n; ++k) f *= static_cast<double>(k);
    return f - 1.0;
}

// ---------------------------------------------------------------------------
// q-digamma
// ---------------------------------------------------------------------------

/// psi_q or one of its derivatives, with the certified truncation bound.
struct DigammaValue {
    double value;
    unsigned order;  // 0 for psi_q itself
    double achieved_rel_err;
};

namespace detail {

// psi_q(x) = -log(1-q) + log q * sum_{j>=1} q^{xj}/(1-q^j), 0 < q < 1.
// Tail: sum_{j>N} <= q^{x(N+1)} / ((1-q^{N+1})(1-q^x)).
inline DigammaValue digamma_q_subunit(double x, const QParam& q, const Precision& prec) {
    const double qq = q.q();
    const double qx = std::exp(x * q.log_q());
    double sum = 0.0, comp = 0.0;
    double qxj = qx;   // q^{x j}
    double qj = qq;    // q^j
    double bound = 0.0;
    bool converged = false;
    for (std::size_t j = 1; j <= prec.max_terms; ++j) {
        const double term = qxj / (1.0 - qj);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        qxj *= qx;
        qj *= qq;
        bound = qxj / ((1.0 - qj) * (1.0 - qx));
        if (bound <= prec.rel_tol * (sum + prec.abs_tol)) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw truncation_cap_exceeded("digamma_q: series cap exceeded", bound);
    const double value = -std::log1p(-qq) + q.log_q() * sum;
    const double abs_err = std::fabs(q.log_q()) * bound;
    return {value, 0, value != 0.0 ? abs_err / std::fabs(value) + detail::log_err_floor : abs_err};
}

}  // namespace detail

/// psi_q(x) = d/dx log Gamma_q(x), x > 0, any q > 0.
inline DigammaValue digamma_q(double x, const QParam& q, const Precision& prec = {}) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw domain_error("digamma_q: requires x > 0");
    switch (q.regime()) {
        case QRegime::ZeroLimit:
            return {0.0, 0, detail::log_err_floor};  // Gamma_q == 1
        case QRegime::ClassicalLimit:
            return {classical::digamma(x), 0, detail::log_err_floor};
        case QRegime::SubUnit:
            return detail::digamma_q_subunit(x, q, prec);
        case QRegime::SuperUnit: {
            DigammaValue v = detail::digamma_q_subunit(x, q.reciprocal(), prec);
            v.value += (x - 1.5) * q.log_q();
            return v;
        }
    }
    throw error("digamma_q: unreachable");
}

/// d^n/dx^n psi_q(x), n >= 1:
///   log^{n+1} q * sum_{i>=0} q^{x+i} P_n(q^{x+i}) / (1 - q^{x+i})^{n+1}.
/// The tail is cut with the Eulerian envelope 1 < P_n(u) < 1 + c_n u.
inline DigammaValue digamma_q_deriv(double x, unsigned n, const QParam& q,
                                    const Precision& prec = {}) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw domain_error("digamma_q_deriv: requires x > 0");
    if (n == 0) throw domain_error("digamma_q_deriv: requires n >= 1 (use digamma_q)");
    if (q.regime() == QRegime::ZeroLimit) return {0.0, n, detail::log_err_floor};
    if (q.regime() == QRegime::ClassicalLimit)
        throw domain_error("digamma_q_deriv: classical polygamma is out of scope");
    if (q.super_unit()) {
        // Eq-(2.4) shifted: identical to the 1/q value for n >= 2, offset by
        // log q for n = 1.
        DigammaValue v = digamma_q_deriv(x, n, q.reciprocal(), prec);
        if (n == 1) v.value += q.log_q();
        return v;
    }

    const EulerianPoly pn = eulerian(n);
    const double cn = eulerian_envelope_constant(n);
    const double qq = q.q();
    const double lq = q.log_q();
    double sum = 0.0, comp = 0.0;
    double qxi = std::exp(x * lq);  // q^{x+i}
    double bound = 0.0;
    bool converged = false;
    for (std::size_t i = 0; i <= prec.max_terms; ++i) {
        const double om = 1.0 - qxi;
        const double term = qxi * pn(qxi) / std::pow(om, static_cast<double>(n) + 1.0);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        qxi *= qq;
        // envelope tail: sum_{j>i} q^{x+j} P_n(...) / (1-...)^{n+1}
        //   <= (1 + c_n q^{x+i+1}) q^{x+i+1} / ((1-q)(1-q^{x+i+1})^{n+1})
        bound = (1.0 + cn * qxi) * qxi /
                ((1.0 - qq) * std::pow(1.0 - qxi, static_cast<double>(n) + 1.0));
        if (bound <= prec.rel_tol * sum) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw truncation_cap_exceeded("digamma_q_deriv: series cap exceeded", bound);
    const double scale = std::pow(lq, static_cast<double>(n) + 1.0);
    const double rel = (sum > 0.0) ? bound / sum + detail::log_err_floor : 0.0;
    return {scale * sum, n, rel};
}

/// psi_q via the Plana integral representation; an evaluation path
/// independent of the series in digamma_q.
inline DigammaValue digamma_q_plana(double x, const QParam& q, const Precision& prec = {}) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw domain_error("digamma_q_plana: requires x > 0");
    if (q.boundary())
        throw domain_error("digamma_q_plana: q must not be in a boundary regime");
    if (q.super_unit()) {
        DigammaValue v = digamma_q_plana(x, q.reciprocal(), prec);
        v.value += (x - 1.5) * q.log_q();
        return v;
    }
    const double qq = q.q();
    const double lq = q.log_q();
    const double qx = std::exp(x * lq);
    const double q2x = qx * qx;
    const auto integrand = [&](double t) {
        const double em = std::expm1(2.0 * M_PI * t);
        const double s = std::sin(t * lq);
        const double den = 1.0 - 2.0 * qx * std::cos(t * lq) + q2x;
        return s / (em * den);
    };
    // integrand decays like e^{-2 pi t}; oscillation period in t is 2 pi/|log q|
    const double upper = (-std::log(prec.quad_tol) + 5.0) / (2.0 * M_PI);
    const double period = 2.0 * M_PI / std::fabs(lq);
    const double integral = integrate(integrand, 0.0, upper, prec.quad_tol, period / 4.0);
    const double value = -std::log1p(-qq) + 0.5 * lq * qx / (1.0 - qx) + std::log1p(-qx) -
                         2.0 * qx * lq * integral;
    const double abs_err = 2.0 * std::fabs(qx * lq) * prec.quad_tol;
    return {value, 0, value != 0.0 ? abs_err / std::fabs(value) + detail::log_err_floor : abs_err};
}

}  // namespace qeuler
