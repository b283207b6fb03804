#pragma once

// Adaptive quadrature: fixed-order Gauss-Legendre per panel, bisection
// refinement driven by the parent-vs-children discrepancy.

#include <cmath>
#include <cstddef>

#include "qeuler/qcore.hpp"

namespace qeuler {

namespace detail {

// 15-point Gauss-Legendre nodes/weights on [-1, 1].
inline constexpr int gauss_order = 15;
inline constexpr double gauss_nodes[gauss_order] = {
    -0.9879925180204854285, -0.9372733924007059043, -0.8482065834104272162,
    -0.7244177313601700474, -0.5709721726085388475, -0.3941513470775633699,
    -0.2011940939974345223, 0.0,                    0.2011940939974345223,
    0.3941513470775633699,  0.5709721726085388475,  0.7244177313601700474,
    0.8482065834104272162,  0.9372733924007059043,  0.9879925180204854285};
inline constexpr double gauss_weights[gauss_order] = {
    0.03075324199611726835, 0.07036604748810812471, 0.1071592204671719350,
    0.1395706779261543144,  0.1662692058169939336,  0.1861610000155622110,
    0.1984314853271115765,  0.2025782419255612729,  0.1984314853271115765,
    0.1861610000155622110,  0.1662692058169939336,  0.1395706779261543144,
    0.1071592204671719350,  0.07036604748810812471, 0.03075324199611726835};

template <typename F>
double gauss_panel(const F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < gauss_order; ++i) sum += gauss_weights[i] * f(mid + half * gauss_nodes[i]);
    return half * sum;
}

template <typename F>
double adaptive_panel(const F& f, double a, double b, double whole, double tol, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = gauss_panel(f, a, mid);
    const double right = gauss_panel(f, mid, b);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= tol) return left + right + delta / 63.0;
    if (depth <= 0)
        throw quadrature_failure("adaptive quadrature: refinement depth exhausted");
    return adaptive_panel(f, a, mid, left, 0.5 * tol, depth - 1) +
           adaptive_panel(f, mid, b, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Integrate f over [a, b] to absolute tolerance tol. `max_width` caps the
/// initial panel width (oscillatory integrands need panels at the scale of
/// one period or finer).
template <typename F>
double integrate(const F& f, double a, double b, double tol,
                 double max_width = 0.0, int max_depth = 48) {
    if (!(b >= a)) throw domain_error("integrate: requires b >= a");
    if (a == b) return 0.0;
    double width = b - a;
    std::size_t panels = 1;
    if (max_width > 0.0 && width > max_width) {
        panels = static_cast<std::size_t>(std::ceil(width / max_width));
        if (panels > 4096) panels = 4096;
    }
    const double step = width / static_cast<double>(panels);
    const double panel_tol = tol / static_cast<double>(panels);
    double total = 0.0;
    for (std::size_t i = 0; i < panels; ++i) {
        const double lo = a + step * static_cast<double>(i);
        const double hi = (i + 1 == panels) ? b : lo + step;
        const double coarse = detail::gauss_panel(f, lo, hi);
        total += detail::adaptive_panel(f, lo, hi, coarse, panel_tol, max_depth);
    }
    return total;
}

}  // namespace qeuler
