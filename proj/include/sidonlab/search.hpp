// Exact maximum Sidon subset of [n] by depth-first branch and bound.

#pragma once

#include <cstdint>
#include <optional>

#include "sidonlab/sidon.hpp"

namespace sidonlab {

struct SearchOptions {
    int64_t limit = 150;      // refuse larger n rather than truncate
    bool lex_witness = false; // deterministic lexicographically-smallest witness
    int threads = 0;          // 0: SIDONLAB_THREADS env or hardware default
};

struct SearchResult {
    int64_t n = 0;
    int64_t s_n = 0;          // exact maximum size
    SidonSet witness;         // one optimal set
    uint64_t nodes_expanded = 0;
    double elapsed = 0.0;     // seconds
};

SearchResult max_sidon(int64_t n, const SearchOptions& opts = {});

struct DefectRecord {
    int64_t n = 0;
    std::optional<int64_t> s_n;  // present in exact mode
    int64_t bose_bracket = 0;    // largest prime p with p^2 - 1 <= n; S(n) >= p
    double eq1_bound = 0.0;      // sqrt(n) + 0.998 n^{1/4}
    double L_prime = 0.0;        // exact mode: sqrt(n) - s_n
    // Bracket mode: s_n in [bose_bracket, floor(eq1_bound)] instead.
    int64_t s_hi = 0;            // floor(eq1_bound)
};

// Exact mode when n is within opts.limit, bracket mode otherwise (or when
// forced). Bracket mode replaces the exact size by [bose_bracket, s_hi].
std::vector<DefectRecord> defect_table(const std::vector<int64_t>& n_values,
                                       bool force_bracket = false,
                                       const SearchOptions& opts = {});

// S(n) < sqrt(n) + 0.998 n^{1/4}? Refuses bracket-mode records.
bool eq1_check(const DefectRecord& record);

}  // namespace sidonlab
