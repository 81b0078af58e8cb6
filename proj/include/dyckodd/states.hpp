#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dyckodd/numeric.hpp"

namespace dyckodd {

enum class step : std::uint8_t { up, down };

// F: empty path or last step up.  G: trailing maximal descent of odd length.
// H: trailing maximal descent of even (positive) length.
enum class layer : std::uint8_t { F, G, H };

// Path subclasses by the parity rule imposed on completed descents.
enum class path_class : std::uint8_t {
    odd_all,             // every descent has odd length
    odd_last_even,       // every descent odd, except the final one which is even
    odd_last_any,        // every non-final descent odd, final descent unconstrained
    bonus_interior_odd,  // descents ending above the axis odd; axis descents unconstrained
};

inline constexpr std::array<path_class, 4> all_path_classes = {
    path_class::odd_all, path_class::odd_last_even, path_class::odd_last_any,
    path_class::bonus_interior_odd};

struct layer_state {
    layer lay;
    int height;

    friend auto operator<=>(const layer_state&, const layer_state&) = default;
};

inline std::string to_string(layer l) {
    switch (l) {
        case layer::F: return "F";
        case layer::G: return "G";
        case layer::H: return "H";
    }
    throw std::invalid_argument("unknown layer");
}

inline std::string to_string(path_class c) {
    switch (c) {
        case path_class::odd_all: return "odd-all";
        case path_class::odd_last_even: return "odd-last-even";
        case path_class::odd_last_any: return "odd-last-any";
        case path_class::bonus_interior_odd: return "bonus";
    }
    throw std::invalid_argument("unknown path class");
}

inline path_class parse_path_class(std::string_view name) {
    for (path_class c : all_path_classes)
        if (name == to_string(c)) return c;
    throw std::invalid_argument("unknown path class: " + std::string(name));
}

inline std::string to_string(layer_state s) {
    return "(" + to_string(s.lay) + "," + std::to_string(s.height) + ")";
}

// counts[n][state] = number of admissible n-step prefixes ending in state.
// Heights run 0..n_max; an n-step prefix cannot climb higher.
class count_table {
public:
    explicit count_table(int n_max) : n_max_(n_max) {
        if (n_max < 0) throw std::invalid_argument("count_table: negative n_max");
        counts_.resize(static_cast<std::size_t>(n_max) + 1);
        for (auto& row : counts_)
            for (auto& per_layer : row)
                per_layer.assign(static_cast<std::size_t>(n_max) + 1, bigint(0));
    }

    int n_max() const { return n_max_; }

    const bigint& at(int n, layer_state s) const {
        check(n, s);
        return counts_[static_cast<std::size_t>(n)][layer_index(s.lay)]
                      [static_cast<std::size_t>(s.height)];
    }

    void add(int n, layer_state s, const bigint& v) {
        check(n, s);
        counts_[static_cast<std::size_t>(n)][layer_index(s.lay)]
               [static_cast<std::size_t>(s.height)] += v;
    }

    bigint total(int n) const {
        bigint sum = 0;
        for (const auto& per_layer : counts_.at(static_cast<std::size_t>(n)))
            for (const auto& c : per_layer) sum += c;
        return sum;
    }

    friend bool operator==(const count_table&, const count_table&) = default;

private:
    static std::size_t layer_index(layer l) { return static_cast<std::size_t>(l); }

    void check(int n, layer_state s) const {
        if (n < 0 || n > n_max_)
            throw std::out_of_range("count_table: step count " + std::to_string(n) +
                                    " outside 0.." + std::to_string(n_max_));
        if (s.height < 0 || s.height > n_max_)
            throw std::out_of_range("count_table: height " + std::to_string(s.height) +
                                    " outside 0.." + std::to_string(n_max_));
    }

    int n_max_;
    std::vector<std::array<std::vector<bigint>, 3>> counts_;
};

}  // namespace dyckodd
