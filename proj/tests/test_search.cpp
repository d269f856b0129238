#include <doctest.h>

#include <cmath>
#include <vector>

#include "sidonlab/constructions.hpp"
#include "sidonlab/search.hpp"
#include "sidonlab/sidon.hpp"

using namespace sidonlab;

namespace {

// Exhaustive maximum by plain recursion, no bounding.
void oracle_extend(int64_t n, int64_t last, std::vector<int64_t>& chosen,
                   std::vector<bool>& used, int64_t& best,
                   std::vector<int64_t>& best_set) {
    if (static_cast<int64_t>(chosen.size()) > best) {
        best = static_cast<int64_t>(chosen.size());
        best_set = chosen;
    }
    for (int64_t cand = last + 1; cand <= n; ++cand) {
        bool ok = true;
        for (int64_t a : chosen)
            if (used[static_cast<size_t>(cand - a)]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (int64_t a : chosen) used[static_cast<size_t>(cand - a)] = true;
        chosen.push_back(cand);
        oracle_extend(n, cand, chosen, used, best, best_set);
        chosen.pop_back();
        for (int64_t a : chosen) used[static_cast<size_t>(cand - a)] = false;
    }
}

int64_t oracle_max(int64_t n) {
    std::vector<int64_t> chosen, best_set;
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    int64_t best = 0;
    oracle_extend(n, 0, chosen, used, best, best_set);
    return best;
}

// All maximum-size Sidon subsets of [n].
void oracle_all(int64_t n, int64_t target, int64_t last, std::vector<int64_t>& chosen,
                std::vector<bool>& used, std::vector<std::vector<int64_t>>& out) {
    if (static_cast<int64_t>(chosen.size()) == target) {
        out.push_back(chosen);
        return;
    }
    for (int64_t cand = last + 1; cand <= n; ++cand) {
        bool ok = true;
        for (int64_t a : chosen)
            if (used[static_cast<size_t>(cand - a)]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (int64_t a : chosen) used[static_cast<size_t>(cand - a)] = true;
        chosen.push_back(cand);
        oracle_all(n, target, cand, chosen, used, out);
        chosen.pop_back();
        for (int64_t a : chosen) used[static_cast<size_t>(cand - a)] = false;
    }
}

}  // namespace

TEST_CASE("max_sidon agrees with the exhaustive oracle up to 18") {
    for (int64_t n = 1; n <= 18; ++n) {
        const SearchResult r = max_sidon(n);
        CHECK(r.s_n == oracle_max(n));
        CHECK(r.witness.verified);
        CHECK(r.witness.size() == r.s_n);
        CHECK(r.witness.elements.back() <= n);
    }
}

TEST_CASE("max_sidon trivial and error cases") {
    const SearchResult r1 = max_sidon(1);
    CHECK(r1.s_n == 1);
    CHECK(r1.witness.elements == std::vector<int64_t>{1});
    CHECK_THROWS_AS(max_sidon(0), std::invalid_argument);
    CHECK_THROWS_AS(max_sidon(-3), std::invalid_argument);
    SearchOptions small;
    small.limit = 10;
    CHECK_THROWS_AS(max_sidon(11, small), std::invalid_argument);
}

TEST_CASE("known values regression") {
    const std::vector<std::pair<int64_t, int64_t>> known{
        {1, 1}, {2, 2}, {3, 2}, {4, 3}, {7, 4}, {12, 5}, {18, 6}, {26, 7}};
    for (auto [n, s] : known) CHECK(max_sidon(n).s_n == s);
}

TEST_CASE("monotonicity of S(n)") {
    int64_t prev = 0;
    for (int64_t n = 1; n <= 30; ++n) {
        const int64_t cur = max_sidon(n).s_n;
        CHECK(cur >= prev);
        CHECK(cur - prev <= 1);
        prev = cur;
    }
}

TEST_CASE("S(n) dominates construction sizes") {
    for (int64_t p : {2, 3, 5, 7}) {
        const SidonSet b = bose(p);
        if (b.n <= 56) CHECK(max_sidon(b.n).s_n >= b.size());
    }
    const SidonSet s = singer(5);  // n = 31
    CHECK(max_sidon(s.n).s_n >= s.size());
}

TEST_CASE("lex witness mode returns the lexicographically smallest optimum") {
    for (int64_t n : {7, 12, 18}) {
        SearchOptions opts;
        opts.lex_witness = true;
        const SearchResult r = max_sidon(n, opts);
        std::vector<std::vector<int64_t>> all;
        std::vector<int64_t> chosen;
        std::vector<bool> used(static_cast<size_t>(n) + 1, false);
        oracle_all(n, r.s_n, 0, chosen, used, all);
        REQUIRE_FALSE(all.empty());
        CHECK(r.witness.elements == *std::min_element(all.begin(), all.end()));
    }
}

TEST_CASE("eq1_check") {
    const auto recs = defect_table({12, 1, 7});
    for (const auto& r : recs) CHECK(eq1_check(r));
    CHECK(recs[0].s_n == 5);
    CHECK(recs[0].eq1_bound ==
          doctest::Approx(std::sqrt(12.0) + 0.998 * std::pow(12.0, 0.25)));
    const auto bracket = defect_table({1000000}, true);
    CHECK_THROWS_AS(eq1_check(bracket.front()), std::invalid_argument);
}

TEST_CASE("defect_table exact records") {
    const auto recs = defect_table({8, 48});
    CHECK(recs[0].bose_bracket == 3);   // 3^2 - 1 = 8
    CHECK(recs[1].bose_bracket == 7);   // 7^2 - 1 = 48
    for (const auto& r : recs) {
        REQUIRE(r.s_n.has_value());
        CHECK(*r.s_n >= r.bose_bracket);
        CHECK(static_cast<double>(*r.s_n) < r.eq1_bound);
        CHECK(r.L_prime ==
              doctest::Approx(std::sqrt(static_cast<double>(r.n)) -
                              static_cast<double>(*r.s_n)));
        CHECK(r.L_prime >= -std::pow(static_cast<double>(r.n), 0.25));
    }
}

TEST_CASE("defect_table bracket mode") {
    const auto recs = defect_table({1000000}, true);
    const auto& r = recs.front();
    CHECK_FALSE(r.s_n.has_value());
    CHECK(r.bose_bracket == 997);  // largest prime p with p^2 - 1 <= 1e6
    CHECK(r.eq1_bound ==
          doctest::Approx(1000.0 + 0.998 * std::pow(1e6, 0.25)));
    CHECK(r.s_hi == static_cast<int64_t>(std::floor(r.eq1_bound)));
    CHECK(r.bose_bracket <= r.s_hi);
}

TEST_CASE("nodes and elapsed are populated") {
    const SearchResult r = max_sidon(26);
    CHECK(r.nodes_expanded > 0);
    CHECK(r.elapsed >= 0.0);
}
