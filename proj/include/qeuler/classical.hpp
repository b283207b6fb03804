#pragma once

// Classical-limit kernels. Gamma_1 := Gamma and psi_1 := psi are the q->1
// delegates; they are deliberately kept behind these two functions so the
// kernel can be swapped without touching any caller.

#include <cmath>

#include "qeuler/qcore.hpp"

namespace qeuler::classical {

inline double log_gamma(double x) {
    if (!(x > 0.0)) throw domain_error("classical::log_gamma requires x > 0");
    return std::lgamma(x);
}

inline double gamma(double x) {
    if (!(x > 0.0)) throw domain_error("classical::gamma requires x > 0");
    return std::tgamma(x);
}

/// psi(x) for x > 0 via the recurrence psi(x+1) = psi(x) + 1/x followed by
/// the Bernoulli asymptotic series, good to ~1e-15 relative for double.
inline double digamma(double x) {
    if (!(x > 0.0)) throw domain_error("classical::digamma requires x > 0");
    double result = 0.0;
    while (x < 10.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    // psi(x) ~ log x - 1/(2x) - sum B_{2n} / (2n x^{2n})
    static const double coeff[] = {
        1.0 / 12.0,   -1.0 / 120.0,   1.0 / 252.0,   -1.0 / 240.0,
        1.0 / 132.0,  -691.0 / 32760.0, 1.0 / 12.0,
    };
    const double z = 1.0 / (x * x);
    double series = 0.0;
    double zk = z;
    for (double c : coeff) {
        series += c * zk;
        zk *= z;
    }
    return result + std::log(x) - 0.5 / x - series;
}

}  // namespace qeuler::classical
