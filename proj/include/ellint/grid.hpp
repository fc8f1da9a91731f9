#pragma once

// Evaluation grids in r. The composite layout splits its points three ways:
// geometric toward 0, uniform through the middle, geometric toward 1, so both
// endpoint regimes get log-density coverage.

#include <string>
#include <vector>

#include "real.hpp"

namespace ellint {

enum class GridSpacing { uniform, geo0, geo1, composite };

struct GridSpec {
    long n_points = 10000;
    std::string lo = "1e-6";
    std::string hi = "0.999999";
    GridSpacing spacing = GridSpacing::composite;

    static GridSpec composite_default() { return {}; }
    static GridSpec uniform_n(long n, std::string lo = "0.001",
                              std::string hi = "0.999") {
        return {n, std::move(lo), std::move(hi), GridSpacing::uniform};
    }

    std::string describe() const {
        const char* s = spacing == GridSpacing::uniform    ? "uniform"
                        : spacing == GridSpacing::geo0     ? "geo0"
                        : spacing == GridSpacing::geo1     ? "geo1"
                                                           : "composite";
        return std::to_string(n_points) + " pts " + s + " [" + lo + ", " + hi + "]";
    }
};

namespace detail {

inline std::vector<Real> grid_uniform(const Real& lo, const Real& hi, long n, long prec) {
    std::vector<Real> out;
    out.reserve(n);
    for (long i = 0; i < n; i++)
        out.push_back(lo + (hi - lo) * i / (n - 1));
    (void)prec;
    return out;
}

inline std::vector<Real> grid_geo0(const Real& lo, const Real& hi, long n, long prec) {
    std::vector<Real> out;
    out.reserve(n);
    const Real step = (log(hi) - log(lo)) / (n - 1);
    for (long i = 0; i < n; i++)
        out.push_back(exp(log(lo.rounded_to(prec)) + step * i));
    return out;
}

inline std::vector<Real> grid_geo1(const Real& lo, const Real& hi, long n, long prec) {
    // geometric in 1-r, increasing from lo to hi
    std::vector<Real> out;
    out.reserve(n);
    const Real a = 1 - hi;  // small side
    const Real b = 1 - lo;
    const Real step = (log(b) - log(a)) / (n - 1);
    for (long i = 0; i < n; i++)
        out.push_back(1 - exp(log(a.rounded_to(prec)) + step * (n - 1 - i)));
    return out;
}

}  // namespace detail

inline std::vector<Real> make_grid(const GridSpec& spec, long prec) {
    const Real lo = Real::from_decimal(spec.lo, prec);
    const Real hi = Real::from_decimal(spec.hi, prec);
    const long n = spec.n_points;
    if (n < 3) throw std::invalid_argument("grid needs at least 3 points");
    switch (spec.spacing) {
        case GridSpacing::uniform: return detail::grid_uniform(lo, hi, n, prec);
        case GridSpacing::geo0: return detail::grid_geo0(lo, hi, n, prec);
        case GridSpacing::geo1: return detail::grid_geo1(lo, hi, n, prec);
        case GridSpacing::composite: break;
    }
    const long third = n / 3;
    const Real a = Real::from_decimal("0.1", prec);
    const Real b = Real::from_decimal("0.9", prec);
    // the three-way split needs the range to straddle both joints
    if (third < 2 || !(lo < a) || !(b < hi))
        return detail::grid_uniform(lo, hi, n, prec);
    std::vector<Real> out = detail::grid_geo0(lo, a, third, prec);
    // interior uniform block, joints excluded to avoid duplicates
    std::vector<Real> mid = detail::grid_uniform(a, b, n - 2 * third + 2, prec);
    out.insert(out.end(), mid.begin() + 1, mid.end() - 1);
    std::vector<Real> top = detail::grid_geo1(b, hi, third, prec);
    out.insert(out.end(), top.begin(), top.end());
    return out;
}

}  // namespace ellint
