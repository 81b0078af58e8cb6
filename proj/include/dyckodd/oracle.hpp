#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dyckodd/states.hpp"

namespace dyckodd {

// Ground-truth enumeration by direct inspection of descent runs.  Nothing in
// here consults the transition system in automaton.hpp; the classification
// below restates the defining rules on whole step sequences, so agreement
// between oracle_counts and dp_counts is a genuine cross-check.

// Enumeration is exponential in the step count; beyond this it is pointless.
inline constexpr int oracle_max_steps = 28;

// A Dyck prefix: steps that never take the running height below zero.
class path {
public:
    explicit path(std::vector<step> steps) : steps_(std::move(steps)) {
        int h = 0;
        for (step s : steps_) {
            h += (s == step::up) ? 1 : -1;
            if (h < 0) throw std::invalid_argument("path: dips below the axis");
        }
        final_height_ = h;
    }

    static path from_string(std::string_view text) {
        std::vector<step> steps;
        steps.reserve(text.size());
        for (char c : text) {
            if (c == 'U' || c == 'u')
                steps.push_back(step::up);
            else if (c == 'D' || c == 'd')
                steps.push_back(step::down);
            else
                throw std::invalid_argument(std::string("path: unknown step character '") + c +
                                            "'");
        }
        return path(std::move(steps));
    }

    const std::vector<step>& steps() const { return steps_; }
    std::size_t size() const { return steps_.size(); }
    int final_height() const { return final_height_; }

private:
    std::vector<step> steps_;
    int final_height_ = 0;
};

// A maximal run of contiguous down-steps; length counted in down-steps.
struct descent_run {
    int start_height;  // height before the first down-step
    int length;
    int end_height;    // == start_height - length
    bool completed;    // an up-step follows the run
    bool touches_axis; // end_height == 0

    friend bool operator==(const descent_run&, const descent_run&) = default;
};

namespace detail {

inline std::vector<descent_run> descent_runs_of(std::span<const step> steps) {
    std::vector<descent_run> runs;
    int h = 0;
    for (std::size_t i = 0; i < steps.size();) {
        if (steps[i] == step::up) {
            ++h;
            ++i;
            continue;
        }
        int start = h;
        int len = 0;
        while (i < steps.size() && steps[i] == step::down) {
            ++len;
            --h;
            ++i;
        }
        runs.push_back({start, len, h, i < steps.size(), h == 0});
    }
    return runs;
}

// Classification straight from the class definitions.  A prefix is rejected
// when a completed descent violates the class's parity rule; otherwise its
// state is read off the trailing run (F after an up-step or on the empty
// path, G/H by trailing parity, and in the bonus class every trailing run
// that reaches the axis sits in (G,0) whatever its parity).
inline std::optional<layer_state> classify_steps(path_class cls, std::span<const step> steps) {
    const bool bonus = cls == path_class::bonus_interior_odd;
    auto runs = descent_runs_of(steps);

    for (const auto& run : runs) {
        if (!run.completed) continue;
        if (run.length % 2 == 0 && !(bonus && run.touches_axis)) return std::nullopt;
    }

    int height = 0;
    for (step s : steps) height += (s == step::up) ? 1 : -1;

    if (steps.empty() || steps.back() == step::up) return layer_state{layer::F, height};

    const descent_run& trailing = runs.back();
    if (bonus && trailing.touches_axis) return layer_state{layer::G, 0};
    layer l = (trailing.length % 2 != 0) ? layer::G : layer::H;
    return layer_state{l, height};
}

inline void enumerate(path_class cls, std::vector<step>& buf, int height, int n_max,
                      count_table& table) {
    auto state = classify_steps(cls, buf);
    if (!state) return;  // a violated completed descent stays violated in every extension
    table.add(static_cast<int>(buf.size()), *state, 1);
    if (static_cast<int>(buf.size()) == n_max) return;

    buf.push_back(step::up);
    enumerate(cls, buf, height + 1, n_max, table);
    buf.back() = step::down;
    if (height > 0) enumerate(cls, buf, height - 1, n_max, table);
    buf.pop_back();
}

}  // namespace detail

inline std::vector<descent_run> descent_runs(const path& p) {
    return detail::descent_runs_of(p.steps());
}

// nullopt means the prefix is not admissible for the class.
inline std::optional<layer_state> classify(path_class cls, const path& p) {
    return detail::classify_steps(cls, p.steps());
}

// Exhaustive tally of all admissible prefixes of every length up to n_max,
// by depth-first walk over step sequences (pruned below the axis and at the
// first violated descent).
inline count_table oracle_counts(path_class cls, int n_max) {
    if (n_max < 0) throw std::invalid_argument("oracle_counts: negative n_max");
    if (n_max > oracle_max_steps)
        throw std::invalid_argument("oracle_counts: n_max " + std::to_string(n_max) +
                                    " exceeds the practical cap of " +
                                    std::to_string(oracle_max_steps) + " steps");
    count_table table(n_max);
    std::vector<step> buf;
    buf.reserve(static_cast<std::size_t>(n_max));
    detail::enumerate(cls, buf, 0, n_max, table);
    return table;
}

}  // namespace dyckodd
