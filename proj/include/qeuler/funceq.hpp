#pragma once

// Closed-form solution builders for the two functional-equation families
//
//   gamma type:      f(x+w) = (prod [x+a_i]_q / prod [x+b_j]_q)^k f(x),  f(w) = 1
//   reciprocal type: f(x+w) = (prod [x+a_i]_q / prod [x+b_j]_q)^k / f(x)
//
// plus independent sandwich-limit oracles extracted from the uniqueness
// arguments: truncated q-Pochhammer (resp. bracket-ratio) products that never
// touch the Gamma_q / G_q code paths.

#include <cmath>
#include <cstddef>

#include "qeuler/qquotients.hpp"

namespace qeuler {

enum class FEKind { GammaType, ReciprocalType };

/// Immutable evaluator for the canonical solution of one of the two
/// functional-equation families.
class FESolution {
public:
    FESolution(QuotientSpec spec, QParam q, FEKind kind)
        : spec_(std::move(spec)), q_(q), kind_(kind) {
        if (q_.boundary())
            throw domain_error("FESolution: q must be sub-unit or super-unit");
        q_w_ = QParam(std::pow(q_.q(), spec_.w));
    }

    const QuotientSpec& spec() const noexcept { return spec_; }
    const QParam& q() const noexcept { return q_; }
    FEKind kind() const noexcept { return kind_; }

    double log_eval(double x, const Precision& prec = {}) const {
        if (!(x > 0.0)) throw domain_error("FESolution: requires x > 0");
        const double w = spec_.w;
        const double rs = static_cast<double>(spec_.r()) - static_cast<double>(spec_.s());
        double lg = 0.0;
        if (kind_ == FEKind::GammaType) {
            for (double aj : spec_.a)
                lg += log_gamma_q((x + aj) / w, q_w_, prec) -
                      log_gamma_q((w + aj) / w, q_w_, prec);
            for (double bi : spec_.b)
                lg += log_gamma_q((w + bi) / w, q_w_, prec) -
                      log_gamma_q((x + bi) / w, q_w_, prec);
            lg += rs * (x / w - 1.0) * log_q_bracket(w, q_);
        } else {
            // u := r, v := s in the section-4 naming
            for (double bj : spec_.b) lg += detail::log_g_q((x + bj) / w, q_w_, prec);
            for (double ai : spec_.a) lg -= detail::log_g_q((x + ai) / w, q_w_, prec);
            lg += 0.5 * (-rs) * log_q_bracket(w, q_);
        }
        return spec_.k * lg;
    }

    double operator()(double x, const Precision& prec = {}) const {
        return std::exp(log_eval(x, prec));
    }

    /// log of the equation's right-hand quotient (prod [x+a]_q / prod [x+b]_q)^k.
    double log_step(double x) const {
        double lg = 0.0;
        for (double ai : spec_.a) lg += log_q_bracket(x + ai, q_);
        for (double bj : spec_.b) lg -= log_q_bracket(x + bj, q_);
        return spec_.k * lg;
    }

    /// Relative residual of the defining equation at x.
    double residual(double x, const Precision& prec = {}) const {
        if (kind_ == FEKind::GammaType)
            return std::fabs(std::expm1(log_eval(x + spec_.w, prec) - log_step(x) -
                                        log_eval(x, prec)));
        return std::fabs(std::expm1(log_eval(x + spec_.w, prec) + log_eval(x, prec) -
                                    log_step(x)));
    }

private:
    QuotientSpec spec_;
    QParam q_;
    FEKind kind_;
    QParam q_w_{0.5};
};

inline FESolution solve_gamma_type(const QuotientSpec& spec, const QParam& q) {
    return FESolution(spec, q, FEKind::GammaType);
}

inline FESolution solve_reciprocal_type(const QuotientSpec& spec, const QParam& q) {
    return FESolution(spec, q, FEKind::ReciprocalType);
}

// ---------------------------------------------------------------------------
// Sandwich oracles
// ---------------------------------------------------------------------------

inline constexpr std::size_t sandwich_max_terms = 1000000;

/// n-truncated bracketing quotient for the gamma-type solution (0 < x <= w):
///   [ (1-q)^{(s-r)(x/w-1)} prod_i (q^{w+a_i};q^w)_n / (q^{x+a_i};q^w)_n
///                          prod_j (q^{x+b_j};q^w)_n / (q^{w+b_j};q^w)_n ]^k
/// Uses finite q-Pochhammer ratios only; never calls gamma_q.
inline double sandwich_oracle_gamma(const QuotientSpec& spec, const QParam& q, double x,
                                    std::size_t n_max) {
    if (!q.sub_unit()) throw domain_error("sandwich_oracle_gamma: requires 0 < q < 1");
    if (!(x > 0.0 && x <= spec.w))
        throw domain_error("sandwich_oracle_gamma: requires 0 < x <= w");
    if (n_max > sandwich_max_terms)
        throw cap_exceeded("sandwich_oracle_gamma: n_max cap exceeded");
    const double w = spec.w;
    const QParam qw(std::pow(q.q(), w));
    const double rs = static_cast<double>(spec.r()) - static_cast<double>(spec.s());
    double lg = -rs * (x / w - 1.0) * std::log1p(-q.q());
    for (double ai : spec.a)
        lg += log_qpoch_finite(std::exp((w + ai) * q.log_q()), qw, n_max) -
              log_qpoch_finite(std::exp((x + ai) * q.log_q()), qw, n_max);
    for (double bj : spec.b)
        lg += log_qpoch_finite(std::exp((x + bj) * q.log_q()), qw, n_max) -
              log_qpoch_finite(std::exp((w + bj) * q.log_q()), qw, n_max);
    return std::exp(spec.k * lg);
}

/// Truncated alternating-ratio product for the reciprocal-type solution:
///   (1-q)^{k(v-u)/2} prod_{j=0}^{n_max} P_{2j+1} / P_{2j},
/// P_n = (prod [y+b]_q / prod [y+a]_q)^k at y = x + n w. Independent of
/// g_q_func.
inline double sandwich_oracle_reciprocal(const QuotientSpec& spec, const QParam& q, double x,
                                         std::size_t n_max) {
    if (!q.sub_unit()) throw domain_error("sandwich_oracle_reciprocal: requires 0 < q < 1");
    if (!(x > 0.0)) throw domain_error("sandwich_oracle_reciprocal: requires x > 0");
    if (n_max > sandwich_max_terms)
        throw cap_exceeded("sandwich_oracle_reciprocal: n_max cap exceeded");
    const double w = spec.w;
    const auto log_p = [&](double y) {
        double lg = 0.0;
        for (double bj : spec.b) lg += log_q_bracket(y + bj, q);
        for (double ai : spec.a) lg -= log_q_bracket(y + ai, q);
        return spec.k * lg;
    };
    const double uv = static_cast<double>(spec.r()) - static_cast<double>(spec.s());
    double lg = 0.5 * spec.k * (-uv) * std::log1p(-q.q());
    double comp = 0.0;
    for (std::size_t j = 0; j <= n_max; ++j) {
        const double y = x + 2.0 * static_cast<double>(j) * w;
        const double term = log_p(y + w) - log_p(y);
        const double c = term - comp;
        const double t = lg + c;
        comp = (t - lg) - c;
        lg = t;
    }
    return std::exp(lg);
}

}  // namespace qeuler
