#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyckodd/series.hpp"
#include "dyckodd/states.hpp"

namespace dyckodd {

struct non_convergence : std::runtime_error {
    explicit non_convergence(const std::string& what) : std::runtime_error(what) {}
};

struct negative_valuation : std::logic_error {
    explicit negative_valuation(const std::string& what) : std::logic_error(what) {}
};

// The kernel cubic P(u) = z*u^3 + (z^2 - 1)*u^2 - z^3*u + z^2, i.e. the joint
// denominator u^3 z + u^2 z^2 - u^2 - z^3 u + z^2 of the layered system
// collected in u.  It factors as z(u - v1)(u - v2)(u - v3); only v1 has a
// Laurent expansion at the origin (leading term 1/z), and only v1 enters any
// closed form below.  v2 and v3 are never computed.

namespace detail {

inline series zpoly(std::initializer_list<std::pair<std::int64_t, rational>> terms,
                    std::int64_t precision) {
    return series::polynomial(terms, precision);
}

}  // namespace detail

inline series kernel_polynomial(const series& u) {
    std::int64_t pp = u.precision() + 16;
    series z = detail::zpoly({{1, 1}}, pp);
    series z3 = detail::zpoly({{3, 1}}, pp);
    series z2 = detail::zpoly({{2, 1}}, pp);
    series quad = detail::zpoly({{2, 1}, {0, -1}}, pp);  // z^2 - 1
    return ((z * u + quad) * u - z3) * u + z2;
}

inline series kernel_polynomial_derivative(const series& u) {
    std::int64_t pp = u.precision() + 16;
    series z3_lead = detail::zpoly({{1, 3}}, pp);  // 3z
    series quad2 = detail::zpoly({{2, 2}, {0, -2}}, pp);  // 2(z^2 - 1)
    series z3 = detail::zpoly({{3, 1}}, pp);
    return (z3_lead * u + quad2) * u - z3;
}

struct newton_trace {
    // Valuation of P(u_k) per iteration; the final entry is the residual's
    // certified precision once it vanishes identically on its window.
    std::vector<std::int64_t> residual_valuations;
    bool converged = false;
};

struct newton_options {
    std::optional<series> initial_iterate;  // defaults to 1/z
    int max_iterations = 64;
};

// Newton iteration for the small root v1 of the kernel cubic, in the Laurent
// ring.  The error valuation follows m -> 2m + 1, so the residual valuation
// at least doubles per step (slack zero); any stall means a broken iterate,
// not a math failure, and raises non_convergence.
inline series solve_v1(std::int64_t precision, newton_trace* trace = nullptr,
                       const newton_options& opts = {}) {
    if (precision < 2) throw std::invalid_argument("solve_v1: precision must be >= 2");
    series u = opts.initial_iterate ? *opts.initial_iterate
                                    : series::monomial(1, -1, precision);
    if (u.precision() < precision)
        throw std::invalid_argument("solve_v1: initial iterate narrower than the target");

    std::int64_t last = 0;
    for (int it = 0; it < opts.max_iterations; ++it) {
        series residual = kernel_polynomial(u);
        std::int64_t rv = residual.is_zero() ? residual.precision() : residual.valuation();
        if (trace) trace->residual_valuations.push_back(rv);
        if (residual.is_zero()) {
            // Zero through the certified window: u agrees with v1 below z^precision.
            if (trace) trace->converged = true;
            series v1 = u.truncated(std::min(u.precision(), precision));
            if (v1.valuation() != -1 || v1.coeff(-1) != 1)
                throw non_convergence("solve_v1: converged to a root without principal part 1/z");
            if (!v1.is_integral())
                throw non_convergence("solve_v1: v1 came out with a non-integer coefficient");
            if (v1.precision() < precision)
                throw non_convergence("solve_v1: certified precision fell short of the target");
            return v1;
        }
        if (it > 0 && (rv <= last || rv < 2 * last))
            throw non_convergence("solve_v1: residual valuation moved " + std::to_string(last) +
                                  " -> " + std::to_string(rv) +
                                  ", short of the quadratic rate");
        last = rv;
        u = u - residual / kernel_polynomial_derivative(u);
    }
    throw non_convergence("solve_v1: no convergence within " +
                          std::to_string(opts.max_iterations) + " iterations");
}

namespace detail {

// g0 = z*v1 / (v1^2 - z^2)
inline series g0_from(const series& v1) {
    std::int64_t pp = v1.precision() + 16;
    series z = zpoly({{1, 1}}, pp);
    series z2 = zpoly({{2, 1}}, pp);
    return (z * v1) / (v1 * v1 - z2);
}

// h0 = z^2 / (v1^2 - z^2)
inline series h0_from(const series& v1) {
    std::int64_t pp = v1.precision() + 16;
    series z2 = zpoly({{2, 1}}, pp);
    return z2 / (v1 * v1 - z2);
}

}  // namespace detail

// Complete paths with every descent odd; even series in z, A101785 under z^2 = Z.
inline series g0_closed(std::int64_t precision) {
    if (precision < 4) throw std::invalid_argument("g0_closed: precision must be >= 4");
    return detail::g0_from(solve_v1(precision)).truncated(precision);
}

// Complete paths with every descent odd except an even last one; A113337 in Z.
inline series h0_closed(std::int64_t precision) {
    if (precision < 4) throw std::invalid_argument("h0_closed: precision must be >= 4");
    return detail::h0_from(solve_v1(precision)).truncated(precision);
}

// The coefficient families of F(u), G(u), H(u): f_j = v1^(-j) with f_0 = 1,
// g_j = z(1 + h0)/v1^(j+1), h_j = z*g0/v1^(j+1).  Each is a power series in z
// counting the prefixes that end in the state (layer, j).
inline series partial_closed(layer l, int j, std::int64_t precision) {
    if (j < 0) throw std::invalid_argument("partial_closed: negative state index");
    if (precision < 4) throw std::invalid_argument("partial_closed: precision must be >= 4");
    series v1 = solve_v1(precision);
    std::int64_t pp = v1.precision() + 16;
    series z = detail::zpoly({{1, 1}}, pp);
    series one = detail::zpoly({{0, 1}}, pp);

    series result;
    switch (l) {
        case layer::F:
            result = (j == 0) ? series::one(precision) : inverse(pow(v1, static_cast<unsigned>(j)));
            break;
        case layer::G:
            result = z * (one + detail::h0_from(v1)) / pow(v1, static_cast<unsigned>(j) + 1);
            break;
        case layer::H:
            result = z * detail::g0_from(v1) / pow(v1, static_cast<unsigned>(j) + 1);
            break;
    }
    if (!result.is_zero() && result.valuation() < 0)
        throw negative_valuation("partial_closed: " + to_string(l) + "_" + std::to_string(j) +
                                 " has a negative-power coefficient");
    return result.truncated(precision);
}

struct bonus_series {
    series f1;
    series g1;
    series h1;
    series g0;
};

// The bonus class, where descents reaching the axis are unconstrained:
//   g0 = z^2 v1 / (v1(1 - z^2) - z),  f1 = z + z g0,
//   g1 = z f1 v1 / (v1^2 - z^2),      h1 = z^2 f1 / (v1^2 - z^2),
// consistent with g0 = z(f1 + g1 + h1).
inline bonus_series bonus_closed(std::int64_t precision) {
    if (precision < 4) throw std::invalid_argument("bonus_closed: precision must be >= 4");
    series v1 = solve_v1(precision);
    std::int64_t pp = v1.precision() + 16;
    series z = detail::zpoly({{1, 1}}, pp);
    series z2 = detail::zpoly({{2, 1}}, pp);
    series one = detail::zpoly({{0, 1}}, pp);

    series g0 = (z2 * v1) / (v1 * (one - z2) - z);
    series f1 = z + z * g0;
    series kernel_factor = v1 * v1 - z2;
    series g1 = z * f1 * v1 / kernel_factor;
    series h1 = z2 * f1 / kernel_factor;
    return {f1.truncated(precision), g1.truncated(precision), h1.truncated(precision),
            g0.truncated(precision)};
}

// Left-hand side of the algebraic equation for g0 in Z:
//   -Z^2 g^3 - 2 Z^2 g^2 + g - Z^2 g - Z g - Z.
// Identically zero (to the input's precision) exactly when g is the real g0.
inline series residue_cubic(const series& g0_in_Z) {
    std::int64_t pp = g0_in_Z.precision() + 16;
    series Z = detail::zpoly({{1, 1}}, pp);
    series Z2 = detail::zpoly({{2, 1}}, pp);
    const series& g = g0_in_Z;
    return g - Z2 * pow(g, 3) - (Z2 * pow(g, 2)).scaled(2) - Z2 * g - Z * g - Z;
}

// Residual of the functional equation g0 = z^2 (1 + g0) / (1 - z^4 (1 + g0)^2),
// cleared of denominators: g*(1 - z^4 (1+g)^2) - z^2 (1+g).
inline series residue_functional(const series& g0_in_z) {
    std::int64_t pp = g0_in_z.precision() + 16;
    series z2 = detail::zpoly({{2, 1}}, pp);
    series z4 = detail::zpoly({{4, 1}}, pp);
    series one = detail::zpoly({{0, 1}}, pp);
    const series& g = g0_in_z;
    series w = one + g;
    return g * (one - z4 * w * w) - z2 * w;
}

}  // namespace dyckodd
