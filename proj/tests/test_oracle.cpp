#include <optional>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "dyckodd/automaton.hpp"
#include "dyckodd/oracle.hpp"

using namespace dyckodd;

TEST_CASE("path construction enforces the prefix property") {
    CHECK(path::from_string("UUDD").final_height() == 0);
    CHECK(path::from_string("UUU").final_height() == 3);
    CHECK(path::from_string("").size() == 0);
    CHECK_THROWS_AS(path::from_string("UDD"), std::invalid_argument);
    CHECK_THROWS_AS(path::from_string("D"), std::invalid_argument);
    CHECK_THROWS_AS(path::from_string("UXD"), std::invalid_argument);
}

TEST_CASE("descent run extraction") {
    SECTION("single trailing run") {
        auto runs = descent_runs(path::from_string("UUDD"));
        REQUIRE(runs.size() == 1);
        CHECK(runs[0].length == 2);
        CHECK(runs[0].start_height == 2);
        CHECK(runs[0].end_height == 0);
        CHECK_FALSE(runs[0].completed);
        CHECK(runs[0].touches_axis);
    }
    SECTION("alternating runs") {
        auto runs = descent_runs(path::from_string("UDUD"));
        REQUIRE(runs.size() == 2);
        CHECK(runs[0].length == 1);
        CHECK(runs[0].touches_axis);
        CHECK(runs[0].completed);
        CHECK(runs[1].length == 1);
        CHECK(runs[1].touches_axis);
        CHECK_FALSE(runs[1].completed);
    }
    SECTION("interior and trailing run") {
        auto runs = descent_runs(path::from_string("UUDUDD"));
        REQUIRE(runs.size() == 2);
        CHECK(runs[0].length == 1);
        CHECK(runs[0].end_height == 1);
        CHECK(runs[0].completed);
        CHECK(runs[1].length == 2);
        CHECK(runs[1].end_height == 0);
        CHECK_FALSE(runs[1].completed);
    }
    SECTION("no downs, no runs") {
        CHECK(descent_runs(path::from_string("UUU")).empty());
        CHECK(descent_runs(path::from_string("")).empty());
    }
    SECTION("lengths sum to the down-step count; completed = non-final") {
        for (const std::string& text : {"UUDDUUDUDD", "UDUDUDUD", "UUUDDDUD", "UUDUUDDUDD"}) {
            path p = path::from_string(text);
            auto runs = descent_runs(p);
            int downs = 0;
            for (step s : p.steps())
                if (s == step::down) ++downs;
            int total = 0;
            for (std::size_t i = 0; i < runs.size(); ++i) {
                total += runs[i].length;
                bool final_run = i + 1 == runs.size() &&
                                 !p.steps().empty() && p.steps().back() == step::down;
                CHECK(runs[i].completed == !final_run);
            }
            CHECK(total == downs);
        }
    }
}

TEST_CASE("classification") {
    SECTION("strict classes") {
        CHECK(classify(path_class::odd_all, path::from_string("UUDD")) ==
              layer_state{layer::H, 0});
        CHECK(classify(path_class::odd_all, path::from_string("UUDDUD")) == std::nullopt);
        CHECK(classify(path_class::odd_all, path::from_string("")) ==
              layer_state{layer::F, 0});
        CHECK(classify(path_class::odd_all, path::from_string("UUD")) ==
              layer_state{layer::G, 1});
        CHECK(classify(path_class::odd_all, path::from_string("UUUDD")) ==
              layer_state{layer::H, 1});
    }
    SECTION("planted even completed runs always reject") {
        // Each path completes a length-2 descent away from the end.
        for (const std::string& text : {"UUDDUD", "UUUDDUU", "UUDDUUDD", "UUUUDDUD"})
            for (path_class cls :
                 {path_class::odd_all, path_class::odd_last_even, path_class::odd_last_any})
                CHECK(classify(cls, path::from_string(text)) == std::nullopt);
    }
    SECTION("bonus forgives even descents at the axis") {
        CHECK(classify(path_class::bonus_interior_odd, path::from_string("UUDDUD")) ==
              layer_state{layer::G, 0});
        CHECK(classify(path_class::bonus_interior_odd, path::from_string("UUDD")) ==
              layer_state{layer::G, 0});
        // An even descent completed above the axis still rejects.
        CHECK(classify(path_class::bonus_interior_odd, path::from_string("UUUDDUU")) ==
              std::nullopt);
    }
}

TEST_CASE("oracle tables") {
    SECTION("empty path only at n = 0") {
        count_table table = oracle_counts(path_class::odd_last_any, 0);
        CHECK(table.at(0, {layer::F, 0}) == 1);
        CHECK(table.total(0) == 1);
    }
    SECTION("A101785 prefix from raw enumeration") {
        const std::vector<bigint> expected = {1, 1, 2, 5, 12, 30, 79};
        count_table table = oracle_counts(path_class::odd_all, 14);
        for (int m = 1; m <= 7; ++m)
            CHECK(table.at(2 * m, {layer::G, 0}) == expected[static_cast<std::size_t>(m - 1)]);
    }
    SECTION("complete tallies for the mixed class") {
        count_table table = oracle_counts(path_class::odd_last_any, 8);
        const std::vector<bigint> expected = {1, 2, 4, 9};
        for (int m = 1; m <= 4; ++m)
            CHECK(count_complete(table, path_class::odd_last_any, m) ==
                  expected[static_cast<std::size_t>(m - 1)]);
    }
    SECTION("three-step states, including the parity-forced zero") {
        count_table table = oracle_counts(path_class::odd_all, 3);
        CHECK(table.at(3, {layer::G, 1}) == 1);
        CHECK(table.at(3, {layer::G, 2}) == 0);
    }
    SECTION("cap is enforced") {
        CHECK_THROWS_AS(oracle_counts(path_class::odd_all, oracle_max_steps + 1),
                        std::invalid_argument);
    }
}

TEST_CASE("oracle equals dp on every class") {
    const int n_max = 14;
    for (path_class cls : all_path_classes) {
        count_table dp = dp_counts(cls, n_max);
        count_table oracle = oracle_counts(cls, n_max);
        for (int n = 0; n <= n_max; ++n)
            for (layer l : {layer::F, layer::G, layer::H})
                for (int h = 0; h <= n_max; ++h) {
                    CAPTURE(to_string(cls), n, to_string(l), h);
                    CHECK(dp.at(n, {l, h}) == oracle.at(n, {l, h}));
                }
    }
}

TEST_CASE("classification agrees with stepping the automaton") {
    // Walk every Dyck prefix of length <= 10 through the transition system and
    // compare with the prose-level classifier.
    for (path_class cls : all_path_classes) {
        std::vector<std::vector<step>> frontier = {{}};
        for (int n = 0; n <= 10; ++n) {
            std::vector<std::vector<step>> next;
            for (const std::vector<step>& steps : frontier) {
                path p(steps);
                std::optional<layer_state> by_predicate = classify(cls, p);

                std::optional<layer_state> by_automaton = layer_state{layer::F, 0};
                for (step s : steps) {
                    if (!by_automaton) break;
                    std::optional<layer_state> target;
                    for (const auto& [st, to] : transitions(cls, *by_automaton))
                        if (st == s) target = to;
                    by_automaton = target;
                }
                CAPTURE(to_string(cls), p.size());
                CHECK(by_predicate == by_automaton);

                int h = p.final_height();
                for (step s : {step::up, step::down}) {
                    if (s == step::down && h == 0) continue;
                    std::vector<step> extended = steps;
                    extended.push_back(s);
                    next.push_back(std::move(extended));
                }
            }
            frontier = std::move(next);
        }
    }
}
