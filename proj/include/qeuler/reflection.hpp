#pragma once

// Reflection machinery: the auxiliary nome r(q), theta-like h-series, the
// Askey reflection identity, the pi formula with bracketed error, sin(pi x)
// approximations, and Gosper's sin_q with its exact reflection.
//
// The h-series that enters the *identities* is evaluated at the modular nome
// rho = r^4 = e^{2 pi^2 / log q} (log rho = 4 log r). With the nome r itself
// the reflection formulas are off by O(r^2); with rho they are exact, which
// is what the two-path residual checks certify. h_series() keeps the nome r
// so the classical series bounds (the (7.11)-style bracket, h(r,0) <
// r^2/(1-r^2)) can be exercised directly against it.

#include <cmath>
#include <cstddef>

#include "qeuler/qgamma.hpp"

namespace qeuler {

enum class HVariant { H, Hc, Hs };

/// q, log r(q) and the h-series truncation length for reflection evaluations.
/// A super-unit q delegates to 1/q: the gamma-side quantities are invariant
/// under q <-> 1/q, and r stays in (0,1) only for the sub-unit base.
class ReflectionContext {
public:
    explicit ReflectionContext(const QParam& q, const Precision& prec = {}) : q_(q) {
        if (q.boundary())
            throw domain_error("ReflectionContext: q must be sub-unit or super-unit");
        const double log_q_sub = q.sub_unit() ? q.log_q() : -q.log_q();
        log_r_ = M_PI * M_PI / (2.0 * log_q_sub);
        n_terms_ = 1;
        while (n_terms_ < 256 &&
               static_cast<double>(n_terms_) * static_cast<double>(n_terms_ + 1) * log_r_ >
                   std::log(prec.abs_tol))
            ++n_terms_;
    }

    const QParam& q() const noexcept { return q_; }
    double log_r() const noexcept { return log_r_; }
    unsigned n_terms() const noexcept { return n_terms_; }

private:
    QParam q_;
    double log_r_;
    unsigned n_terms_;
};

namespace detail {

inline double theta_sum(double log_nome, double x, HVariant variant, unsigned n_terms) {
    double sum = 0.0;
    for (unsigned n = 1; n <= n_terms; ++n) {
        const double mag = std::exp(static_cast<double>(n) * static_cast<double>(n + 1) * log_nome);
        if (mag == 0.0) break;
        switch (variant) {
            case HVariant::H:
                sum += mag * std::cos((2.0 * n + 1.0) * M_PI * x);
                break;
            case HVariant::Hc:
                sum += (n % 2 ? -mag : mag) * std::cos(2.0 * M_PI * n * x);
                break;
            case HVariant::Hs:
                sum += (n % 2 ? -mag : mag) * std::sin(2.0 * M_PI * n * x);
                break;
        }
    }
    return sum;
}

// modular nome used by the exact identities
inline double log_rho(const ReflectionContext& ctx) { return 4.0 * ctx.log_r(); }

// log Gamma_q^2(1/2) - log Gamma_q(1/2+x) - log Gamma_q(1/2-x)
inline double log_gamma_ratio_centered(double x, const QParam& q, const Precision& prec) {
    return 2.0 * log_gamma_q(0.5, q, prec) - log_gamma_q(0.5 + x, q, prec) -
           log_gamma_q(0.5 - x, q, prec);
}

}  // namespace detail

/// The three theta-like series at the nome r:
///   H : sum_{n>=1} r^{n(n+1)} cos((2n+1) pi x)
///   Hc: sum_{n>=1} (-1)^n r^{n(n+1)} cos(2 pi n x)
///   Hs: sum_{n>=1} (-1)^n r^{n(n+1)} sin(2 pi n x)
inline double h_series(const ReflectionContext& ctx, double x, HVariant variant) {
    return detail::theta_sum(ctx.log_r(), x, variant, ctx.n_terms());
}

/// Relative residual of the reflection identity
///   Gamma_q^2(1/2) / (Gamma_q(1/2+x) Gamma_q(1/2-x))
///     = q^{-x^2/2} (cos pi x + h(rho,x)) / (1 + h(rho,0)),
/// both sides computed independently (gamma products vs theta series).
inline double askey_reflection_residual(double x, const QParam& q, const Precision& prec = {}) {
    if (!(std::fabs(x) < 0.5))
        throw domain_error("askey_reflection_residual: requires |x| < 1/2");
    ReflectionContext ctx(q, prec);
    const double lrho = detail::log_rho(ctx);
    const double lhs_log = detail::log_gamma_ratio_centered(x, q, prec);
    const double h_x = detail::theta_sum(lrho, x, HVariant::H, ctx.n_terms());
    const double h_0 = detail::theta_sum(lrho, 0.0, HVariant::H, ctx.n_terms());
    const double rhs = (std::cos(M_PI * x) + h_x) / (1.0 + h_0);
    const double rhs_log = -0.5 * x * x * q.log_q() + std::log(rhs);
    return std::fabs(std::expm1(lhs_log - rhs_log));
}

/// Relative residual of the shifted (sine) form
///   Gamma_q^2(1/2) / (Gamma_q(x) Gamma_q(1-x))
///     = q^{-(x-1/2)^2/2} (sin pi x (1+h_c(rho,x)) + cos pi x h_s(rho,x)) / (1+h(rho,0)).
inline double reflection_sine_residual(double x, const QParam& q, const Precision& prec = {}) {
    if (!(x > 0.0 && x < 1.0))
        throw domain_error("reflection_sine_residual: requires 0 < x < 1");
    ReflectionContext ctx(q, prec);
    const double lrho = detail::log_rho(ctx);
    const unsigned nt = ctx.n_terms();
    const double lhs_log = 2.0 * log_gamma_q(0.5, q, prec) - log_gamma_q(x, q, prec) -
                           log_gamma_q(1.0 - x, q, prec);
    const double hc = detail::theta_sum(lrho, x, HVariant::Hc, nt);
    const double hs = detail::theta_sum(lrho, x, HVariant::Hs, nt);
    const double h0 = detail::theta_sum(lrho, 0.0, HVariant::H, nt);
    const double s = std::sin(M_PI * x) * (1.0 + hc) + std::cos(M_PI * x) * hs;
    const double rhs_log = -0.5 * (x - 0.5) * (x - 0.5) * q.log_q() + std::log(s / (1.0 + h0));
    return std::fabs(std::expm1(lhs_log - rhs_log));
}

/// pi from the reflection identity. With exact_correction the full identity
///   pi = q^{1/8} Gamma_q^2(1/2) log q/(q-1) * (1+h(rho,0)) / (rho^2;rho^2)_inf^3
/// is evaluated; otherwise only the leading factor. The expression is
/// invariant under q <-> 1/q, so any non-boundary q is accepted as-is.
inline double pi_approx(const QParam& q, const Precision& prec = {}, bool exact_correction = true) {
    ReflectionContext ctx(q, prec);
    const double lead = std::exp(q.log_q() / 8.0 + 2.0 * log_gamma_q(0.5, q, prec)) *
                        q.log_q() / (q.q() - 1.0);
    if (!exact_correction) return lead;
    const double lrho = detail::log_rho(ctx);
    const double h0 = detail::theta_sum(lrho, 0.0, HVariant::H, ctx.n_terms());
    const double log_rho2 = 2.0 * lrho;
    double log_eta3 = 0.0;  // log (rho^2; rho^2)_inf^3
    if (log_rho2 > -700.0)
        log_eta3 = 3.0 * log_qpoch_inf(std::exp(log_rho2), QParam(std::exp(log_rho2)), prec);
    return lead * (1.0 + h0) * std::exp(-log_eta3);
}

enum class SinVariant { HalfShift, PiForm };

/// Main term of the sin(pi x) approximation, x in (0,1); the exponentially
/// small remainder is not added. Requires r < 1/sqrt(2), the convergence
/// condition of the underlying series bound.
inline double sin_approx(double x, const QParam& q, SinVariant variant,
                         const Precision& prec = {}) {
    if (!(x > 0.0 && x < 1.0)) throw domain_error("sin_approx: requires 0 < x < 1");
    ReflectionContext ctx(q, prec);
    if (!(ctx.log_r() < -0.5 * std::log(2.0)))
        throw unsafe_q("sin_approx: requires r < 1/sqrt(2)");
    const double lg_xx = log_gamma_q(x, q, prec) + log_gamma_q(1.0 - x, q, prec);
    if (variant == SinVariant::HalfShift) {
        return std::exp(0.5 * (x - 0.5) * (x - 0.5) * q.log_q() +
                        2.0 * log_gamma_q(0.5, q, prec) - lg_xx);
    }
    return M_PI * (1.0 - q.q()) / (-q.log_q()) *
           std::exp(0.5 * x * (x - 1.0) * q.log_q() - lg_xx);
}

/// Gosper's sin_q(pi z) through the exact reflection
///   sin_q(pi z) = q^{1/4} Gamma_{q^2}^2(1/2) q^{z(z-1)} / (Gamma_{q^2}(z) Gamma_{q^2}(1-z)).
inline double gosper_sin_q(double z, const QParam& q, const Precision& prec = {}) {
    if (!(z > 0.0 && z < 1.0)) throw domain_error("gosper_sin_q: requires 0 < z < 1");
    if (!q.sub_unit()) throw domain_error("gosper_sin_q: requires 0 < q < 1");
    const QParam q2(q.q() * q.q());
    return std::exp((0.25 + z * (z - 1.0)) * q.log_q() + 2.0 * log_gamma_q(0.5, q2, prec) -
                    log_gamma_q(z, q2, prec) - log_gamma_q(1.0 - z, q2, prec));
}

/// Direct-product form of sin_q, cross-check path for gosper_sin_q:
///   q^{(z-1/2)^2} (q^{2z};q^2)_inf (q^{2-2z};q^2)_inf / (q;q^2)_inf^2
/// (the exponent consistent with the reflection form and sin_q(pi/2) = 1).
inline double gosper_sin_q_product(double z, const QParam& q, const Precision& prec = {}) {
    if (!(z > 0.0 && z < 1.0)) throw domain_error("gosper_sin_q: requires 0 < z < 1");
    if (!q.sub_unit()) throw domain_error("gosper_sin_q: requires 0 < q < 1");
    const QParam q2(q.q() * q.q());
    const double lq = q.log_q();
    return std::exp((z - 0.5) * (z - 0.5) * lq +
                    log_qpoch_inf(std::exp(2.0 * z * lq), q2, prec) +
                    log_qpoch_inf(std::exp((2.0 - 2.0 * z) * lq), q2, prec) -
                    2.0 * log_qpoch_inf(q.q(), q2, prec));
}

}  // namespace qeuler
