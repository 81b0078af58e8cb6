#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "dyckodd/series.hpp"
#include "dyckodd/states.hpp"

namespace dyckodd {

// Layered transition system over states (layer, height).
//
// Strict classes (odd-all, odd-last-even, odd-last-any) share one graph:
//
//     (F,i) -Up-> (F,i+1)      (F,i) -Down-> (G,i-1)   i >= 1
//     (G,i) -Up-> (F,i+1)      (G,i) -Down-> (H,i-1)   i >= 1
//                              (H,i) -Down-> (G,i-1)   i >= 1
//
// H-states have no up-step: leaving H upward would complete an even descent,
// so its absence is exactly the oddness constraint.  The three classes differ
// only in their accepting states.
//
// The bonus class keeps this graph above the axis but reroutes every down-step
// landing at height 0 into (G,0), which also steps up again; (H,0) does not
// exist in its state space.
inline std::vector<std::pair<step, layer_state>> transitions(path_class cls, layer_state s) {
    if (s.height < 0) throw std::invalid_argument("transitions: negative height");
    const bool bonus = cls == path_class::bonus_interior_odd;
    if (bonus && s.lay == layer::H && s.height == 0)
        throw std::invalid_argument("transitions: (H,0) is not a state of the bonus class");

    std::vector<std::pair<step, layer_state>> out;
    switch (s.lay) {
        case layer::F:
            out.push_back({step::up, {layer::F, s.height + 1}});
            if (s.height >= 1) out.push_back({step::down, {layer::G, s.height - 1}});
            break;
        case layer::G:
            out.push_back({step::up, {layer::F, s.height + 1}});
            if (s.height >= 1) {
                layer down_layer = (bonus && s.height == 1) ? layer::G : layer::H;
                out.push_back({step::down, {down_layer, s.height - 1}});
            }
            break;
        case layer::H:
            if (s.height >= 1) out.push_back({step::down, {layer::G, s.height - 1}});
            break;
    }
    return out;
}

inline std::vector<layer_state> accepting_states(path_class cls) {
    switch (cls) {
        case path_class::odd_all: return {{layer::G, 0}};
        case path_class::odd_last_even: return {{layer::H, 0}};
        case path_class::odd_last_any: return {{layer::G, 0}, {layer::H, 0}};
        case path_class::bonus_interior_odd: return {{layer::G, 0}};
    }
    throw std::invalid_argument("unknown path class");
}

// Forward dynamic program over the transition system, by the last step made.
inline count_table dp_counts(path_class cls, int n_max) {
    if (n_max < 0) throw std::invalid_argument("dp_counts: negative n_max");
    count_table table(n_max);
    table.add(0, {layer::F, 0}, 1);
    for (int n = 0; n < n_max; ++n) {
        for (layer l : {layer::F, layer::G, layer::H}) {
            for (int h = 0; h <= n; ++h) {
                if (cls == path_class::bonus_interior_odd && l == layer::H && h == 0) continue;
                const bigint& c = table.at(n, {l, h});
                if (c == 0) continue;
                for (const auto& [s, target] : transitions(cls, {l, h}))
                    table.add(n + 1, target, c);
            }
        }
    }
    return table;
}

inline bigint count_complete(const count_table& table, path_class cls, int m) {
    if (m < 1) throw std::invalid_argument("count_complete: semilength must be >= 1");
    if (2 * m > table.n_max())
        throw std::out_of_range("count_complete: table too small for semilength " +
                                std::to_string(m));
    bigint sum = 0;
    for (layer_state s : accepting_states(cls)) sum += table.at(2 * m, s);
    return sum;
}

// Complete paths of semilength m; the empty path (m = 0) is not counted.
inline bigint count_complete(path_class cls, int m) {
    if (m < 1) throw std::invalid_argument("count_complete: semilength must be >= 1");
    return count_complete(dp_counts(cls, 2 * m), cls, m);
}

// Complete-path counts for every semilength the table covers, m = 1..n_max/2.
inline std::vector<bigint> complete_counts(const count_table& table, path_class cls) {
    std::vector<bigint> out;
    for (int m = 1; 2 * m <= table.n_max(); ++m) out.push_back(count_complete(table, cls, m));
    return out;
}

// Generating function of one state: coefficient of z^n counts the n-step
// prefixes ending there.  DP-side realization of the f_j, g_j, h_j families.
inline series partial_series(const count_table& table, layer l, int height) {
    std::int64_t prec = table.n_max() + 1;
    if (height > table.n_max()) return series::zero(prec);  // unreachable in n_max steps
    std::vector<rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(prec));
    for (int n = 0; n <= table.n_max(); ++n)
        coeffs.emplace_back(table.at(n, {l, height}));
    return series::from_coefficients(0, std::move(coeffs), prec);
}

inline series partial_series(path_class cls, layer l, int height, int n_max) {
    if (height < 0) throw std::invalid_argument("partial_series: negative height");
    return partial_series(dp_counts(cls, n_max), l, height);
}

}  // namespace dyckodd
