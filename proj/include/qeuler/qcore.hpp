#pragma once

// Validated q-parameters, q-brackets and finite/infinite q-Pochhammer
// symbols with certified truncation error. Everything else in the library
// sits on top of this header.

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace qeuler {

// ---------------------------------------------------------------------------
// Error hierarchy
// ---------------------------------------------------------------------------

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class domain_error : public error {
public:
    using error::error;
};

/// An infinite product/series was requested where it does not converge.
class non_convergent : public error {
public:
    using error::error;
};

/// The certified tail bound could not be pushed below tolerance within
/// the allowed number of terms. Carries the bound that was achieved.
class truncation_cap_exceeded : public error {
public:
    truncation_cap_exceeded(const std::string& what, double achieved)
        : error(what), achieved_bound_(achieved) {}
    double achieved_bound() const noexcept { return achieved_bound_; }

private:
    double achieved_bound_;
};

/// Hard cap on a discrete index (polynomial order, oracle length) exceeded.
class cap_exceeded : public error {
public:
    using error::error;
};

/// Adaptive quadrature failed to reach the requested tolerance.
class quadrature_failure : public error {
public:
    using error::error;
};

/// q is below the threshold where a reflection-based approximation is valid.
class unsafe_q : public error {
public:
    using error::error;
};

// ---------------------------------------------------------------------------
// QParam
// ---------------------------------------------------------------------------

enum class QRegime {
    SubUnit,         // 0 < q < 1 (away from both boundaries)
    SuperUnit,       // q > 1
    ClassicalLimit,  // |q - 1| <= eps1: delegate to classical kernels
    ZeroLimit        // q <= eps0: Gamma_q == 1
};

/// Validated base q with its regime tag and cached natural log.
class QParam {
public:
    // Below eps0 the defining products are numerically indistinguishable
    // from their q->0 limits; within eps1 of 1 direct evaluation loses all
    // accuracy and the classical kernels take over.
    static constexpr double zero_limit_threshold = 1e-12;
    static constexpr double classical_limit_threshold = 1e-9;

    explicit QParam(double q) : q_(q) {
        if (!(q > 0.0) || !std::isfinite(q))
            throw domain_error("QParam: q must be a positive finite real");
        if (q <= zero_limit_threshold)
            regime_ = QRegime::ZeroLimit;
        else if (std::fabs(q - 1.0) <= classical_limit_threshold)
            regime_ = QRegime::ClassicalLimit;
        else if (q < 1.0)
            regime_ = QRegime::SubUnit;
        else
            regime_ = QRegime::SuperUnit;
        log_q_ = std::log(q);
    }

    double q() const noexcept { return q_; }
    double log_q() const noexcept { return log_q_; }
    QRegime regime() const noexcept { return regime_; }

    bool sub_unit() const noexcept { return regime_ == QRegime::SubUnit; }
    bool super_unit() const noexcept { return regime_ == QRegime::SuperUnit; }
    bool boundary() const noexcept {
        return regime_ == QRegime::ZeroLimit || regime_ == QRegime::ClassicalLimit;
    }

    /// The partner base 1/q.
    QParam reciprocal() const { return QParam(1.0 / q_); }

private:
    double q_;
    double log_q_;
    QRegime regime_;
};

// ---------------------------------------------------------------------------
// Precision policy
// ---------------------------------------------------------------------------

/// Truncation/quadrature tolerance policy for every infinite product,
/// series and integral in the library.
struct Precision {
    double rel_tol = 1e-14;
    double abs_tol = 1e-300;
    std::size_t max_terms = 1000000;
    double quad_tol = 1e-12;

    Precision() = default;
    Precision(double rel, double abs, std::size_t terms, double quad)
        : rel_tol(rel), abs_tol(abs), max_terms(terms), quad_tol(quad) {
        validate();
    }

    void validate() const {
        if (!(rel_tol > 0.0 && rel_tol < 1.0))
            throw domain_error("Precision: rel_tol must lie in (0,1)");
        if (!(abs_tol > 0.0 && abs_tol < 1.0))
            throw domain_error("Precision: abs_tol must lie in (0,1)");
        if (!(quad_tol > 0.0 && quad_tol < 1.0))
            throw domain_error("Precision: quad_tol must lie in (0,1)");
        if (max_terms < 16)
            throw domain_error("Precision: max_terms must be at least 16");
    }
};

// ---------------------------------------------------------------------------
// q-bracket
// ---------------------------------------------------------------------------

/// [x]_q = (1 - q^x) / (1 - q); the classical-limit value is x itself.
inline double q_bracket(double x, const QParam& q) {
    if (q.regime() == QRegime::ClassicalLimit) return x;
    return -std::expm1(x * q.log_q()) / -std::expm1(q.log_q());
}

/// log [x]_q, safe against overflow of q^x for q > 1 and large x.
inline double log_q_bracket(double x, const QParam& q) {
    if (q.regime() == QRegime::ClassicalLimit) return std::log(x);
    const double lq = q.log_q();
    if (q.super_unit()) {
        // (q^x - 1)/(q - 1) = exp(x log q) (1 - q^-x) / (q - 1)
        return x * lq + std::log1p(-std::exp(-x * lq)) - std::log(q.q() - 1.0);
    }
    return std::log(-std::expm1(x * lq)) - std::log1p(-q.q());
}

// ---------------------------------------------------------------------------
// q-Pochhammer symbols
// ---------------------------------------------------------------------------

/// (a;q)_n = prod_{k=0}^{n-1} (1 - a q^k); the empty product is 1.
inline double qpoch_finite(double a, const QParam& q, std::size_t n) {
    double prod = 1.0;
    double aqk = a;
    for (std::size_t k = 0; k < n; ++k) {
        prod *= (1.0 - aqk);
        aqk *= q.q();
    }
    return prod;
}

/// log (a;q)_n for a < 1 (all factors positive), accumulated with
/// compensated summation.
inline double log_qpoch_finite(double a, const QParam& q, std::size_t n) {
    if (a > 1.0)
        throw domain_error("log_qpoch_finite requires a <= 1");
    double sum = 0.0, comp = 0.0;
    double aqk = a;
    for (std::size_t k = 0; k < n; ++k) {
        const double term = std::log1p(-aqk);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        aqk *= q.q();
    }
    return sum;
}

namespace detail {

/// Result of a truncated infinite q-Pochhammer evaluation.
struct QpochInfResult {
    double log_value;   // sum of log(1 - a q^k), k < terms
    double tail_bound;  // certified bound on the dropped log-tail
    std::size_t terms;
};

// Truncate prod_{k>=0} (1 - a q^k) at N with the log-tail bound
//   |sum_{k>=N} log(1 - a q^k)| <= |a| q^N / ((1-q)(1 - |a| q^N)).
inline QpochInfResult qpoch_inf_log(double a, const QParam& q, const Precision& prec) {
    if (q.q() >= 1.0)
        throw non_convergent("qpoch_inf: requires 0 < q < 1");
    if (std::fabs(a) > 1.0 || a > 1.0)
        throw domain_error("qpoch_inf: requires |a| < 1 (or a = q^y, y > 0)");

    const double qq = q.q();
    double sum = 0.0, comp = 0.0;
    double aqk = a;
    for (std::size_t k = 0; k < prec.max_terms; ++k) {
        const double abs_aqk = std::fabs(aqk);
        const double bound = abs_aqk / ((1.0 - qq) * (1.0 - abs_aqk));
        if (bound <= prec.rel_tol)
            return {sum, bound, k};
        const double term = std::log1p(-aqk);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        aqk *= qq;
    }
    const double abs_aqk = std::fabs(aqk);
    const double bound = abs_aqk / ((1.0 - qq) * (1.0 - abs_aqk));
    throw truncation_cap_exceeded(
        "qpoch_inf: tail bound " + std::to_string(bound) + " not below rel_tol within " +
            std::to_string(prec.max_terms) + " terms",
        bound);
}

}  // namespace detail

/// log (a;q)_infty with certified truncation (requires 0 < q < 1).
inline double log_qpoch_inf(double a, const QParam& q, const Precision& prec = {}) {
    if (a == 1.0) return -std::numeric_limits<double>::infinity();
    return detail::qpoch_inf_log(a, q, prec).log_value;
}

/// (a;q)_infty = prod_{k=0}^infty (1 - a q^k) for 0 < q < 1.
inline double qpoch_inf(double a, const QParam& q, const Precision& prec = {}) {
    if (a == 1.0) return 0.0;  // first factor vanishes exactly
    if (a == 0.0) return 1.0;
    return std::exp(detail::qpoch_inf_log(a, q, prec).log_value);
}

}  // namespace qeuler
