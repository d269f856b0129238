// Acceptance suite: end-to-end checks with pinned tolerances, one line each.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "sidonlab/constructions.hpp"
#include "sidonlab/gf.hpp"
#include "sidonlab/primes.hpp"
#include "sidonlab/search.hpp"
#include "sidonlab/sidon.hpp"

using namespace sidonlab;

namespace {

int failures = 0;

void report(int criterion, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion, name,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

// Quadruple-loop brute force over sums with early exit.
bool brute_force_sidon(const std::vector<int64_t>& e) {
    std::vector<int64_t> sums;
    sums.reserve(e.size() * (e.size() + 1) / 2);
    for (size_t i = 0; i < e.size(); ++i)
        for (size_t j = i; j < e.size(); ++j) sums.push_back(e[i] + e[j]);
    for (size_t a = 0; a < sums.size(); ++a)
        for (size_t b = a + 1; b < sums.size(); ++b)
            if (sums[a] == sums[b]) return false;
    return true;
}

std::vector<int64_t> prime_grid(int64_t lo, int64_t hi) {
    std::vector<int64_t> ps;
    for (int64_t p = lo; p <= hi; ++p)
        if (is_prime(p)) ps.push_back(p);
    return ps;
}

void criterion_1() {
    bool ok = true;
    for (unsigned mask = 0; mask < (1u << 12); ++mask) {
        std::vector<int64_t> e;
        for (int b = 0; b < 12; ++b)
            if (mask & (1u << b)) e.push_back(b + 1);
        if (verify_sidon(e).ok != brute_force_sidon(e)) {
            ok = false;
            break;
        }
    }
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> size_dist(0, 50);
    std::uniform_int_distribution<int64_t> val_dist(1, 10'000);
    int random_checked = 0;
    for (int it = 0; it < 10'000 && ok; ++it) {
        std::vector<int64_t> e;
        const int k = size_dist(rng);
        while (static_cast<int>(e.size()) < k) {
            const int64_t v = val_dist(rng);
            if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
        }
        std::sort(e.begin(), e.end());
        if (verify_sidon(e).ok != brute_force_sidon(e)) ok = false;
        ++random_checked;
    }
    report(1, "verification oracle equivalence", ok,
           "4096 subsets of [1,12] + " + std::to_string(random_checked) + " random sets");
}

std::vector<DefectRecord> exact_records;  // shared with criterion 7

void criterion_2() {
    const std::vector<int64_t> ns{1, 2, 3, 4, 7, 12, 18, 26, 35, 45, 56};
    const std::vector<int64_t> expected{1, 2, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    bool ok = true;
    std::string detail;
    for (size_t i = 0; i < ns.size(); ++i) {
        const auto recs = defect_table({ns[i]});
        exact_records.push_back(recs.front());
        const int64_t got = recs.front().s_n.value_or(-1);
        if (got != expected[i]) {
            ok = false;
            detail = "S(" + std::to_string(ns[i]) + ") = " + std::to_string(got) +
                     ", want " + std::to_string(expected[i]);
        }
    }
    report(2, "exact S(n) regression", ok, detail);
}

void criterion_3() {
    bool ok = true;
    std::string detail;
    for (int64_t p : prime_grid(2, 251)) {
        const SidonSet b = bose(p);
        const SidonSet s = singer(p);
        const SidonSet e = erdos_turan(p);
        if (!b.verified || b.size() != p || !is_sidon_mod(b.elements, p * p - 1) ||
            !s.verified || s.size() != p + 1 || !e.verified || e.size() != p) {
            ok = false;
            detail = "failure at p = " + std::to_string(p);
            break;
        }
        if (p <= 100) {
            // independent perfect-difference recount
            const int64_t v = p * p + p + 1;
            std::vector<int> hits(static_cast<size_t>(v), 0);
            for (int64_t a : s.elements)
                for (int64_t c : s.elements) {
                    if (a == c) continue;
                    int64_t d = ((a - c) % v + v) % v;
                    ++hits[static_cast<size_t>(d)];
                }
            for (int64_t d = 1; d < v && ok; ++d)
                if (hits[static_cast<size_t>(d)] != 1) {
                    ok = false;
                    detail = "singer(" + std::to_string(p) + ") difference map not perfect";
                }
            if (!ok) break;
        }
    }
    report(3, "construction validity (p,q <= 251)", ok, detail);
}

std::vector<SidonSet> grid_sets() {
    std::vector<SidonSet> sets;
    for (int64_t p : prime_grid(11, 251)) {
        sets.push_back(bose(p));
        sets.push_back(singer(p));
        sets.push_back(erdos_turan(p));
    }
    return sets;
}

void criterion_4(const std::vector<SidonSet>& sets) {
    double worst = 0.0;
    for (const SidonSet& a : sets)
        worst = std::max(worst, discrepancy_sweep(a).max_ratio);
    char buf[64];
    std::snprintf(buf, sizeof buf, "observed max |E_I|/bound = %.4f", worst);
    report(4, "interval discrepancy bound (dyadic sweep)", worst <= 1.0, buf);
}

void criterion_5(const std::vector<SidonSet>& sets) {
    double worst = 0.0;
    for (const SidonSet& a : sets)
        worst = std::max(worst, element_errors(a).max_normalized);
    char buf[64];
    std::snprintf(buf, sizeof buf, "observed max normalized error = %.4f", worst);
    report(5, "per-element error cap (<= 5)", worst <= 5.0, buf);
}

void criterion_6(const std::vector<SidonSet>& sets) {
    double worst = 0.0;
    for (const SidonSet& a : sets)
        for (int64_t ell : {1, 2, 3})
            worst = std::max(worst, power_sum(a, ell).normalized);
    char buf[64];
    std::snprintf(buf, sizeof buf, "observed max normalized error = %.4f", worst);
    report(6, "power-sum error caps, l = 1,2,3 (<= 5)", worst <= 5.0, buf);
}

void criterion_7() {
    bool ok = true;
    std::string detail;
    for (const DefectRecord& r : exact_records) {
        if (!eq1_check(r)) {
            ok = false;
            detail = "upper bound fails at n = " + std::to_string(r.n);
        }
        if (r.L_prime < -std::pow(static_cast<double>(r.n), 0.25)) {
            ok = false;
            detail = "defect lower bound fails at n = " + std::to_string(r.n);
        }
    }
    report(7, "S(n) upper bound and defect lower bound", ok, detail);
}

void criterion_8() {
    const PrimeTable table = sieve(10'000);
    bool ok = exceptional_set(30, table).exception_count == 16;
    std::string detail = ok ? "" : "count(30) != 16";
    double prev = 2.0;
    std::string ratios;
    for (int64_t N : {10'000, 100'000, 1'000'000, 10'000'000}) {
        const auto r = exceptional_set(N, table);
        const double ratio = static_cast<double>(r.exception_count) /
                             static_cast<double>(N);
        if (ratio > prev) {
            ok = false;
            detail = "density increased at N = " + std::to_string(N);
        }
        prev = ratio;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%s%.5f", ratios.empty() ? "" : ", ", ratio);
        ratios += buf;
    }
    if (detail.empty()) detail = "count(30) = 16; densities " + ratios;
    report(8, "exceptional-set count and density trend", ok, detail);
}

void criterion_9() {
    const PrimeTable table = sieve(10'000);
    bool ok = heath_brown_sum(table, 2).sum == 0 && heath_brown_sum(table, 3).sum == 2 &&
              heath_brown_sum(table, 10).sum == 6;
    for (int64_t x = 2; x <= 10'000 && ok; x = x * 3 + 1) {
        int64_t brute = 0;
        for (size_t k = 1; k + 1 <= table.count(); ++k) {
            const int64_t p = table.p(k), q = table.p(k + 1);
            if (p <= x && (q - p) * (q - p) >= p) brute += q - p;
        }
        if (heath_brown_sum(table, x).sum != brute) ok = false;
    }
    report(9, "large-gap sum spot values and brute-force equality", ok, "");
}

void criterion_10() {
    const SidonSet a = singer(101);
    const DingReport d = ding_condition(a, 0.01);
    const bool ok = !d.holds && d.first_failing_t.has_value();
    std::string detail;
    if (d.first_failing_t)
        detail = "first failing t = " + std::to_string(*d.first_failing_t) + " of n = " +
                 std::to_string(a.n);
    report(10, "counting condition fails for a dense set", ok, detail);
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    const auto sets = grid_sets();
    criterion_4(sets);
    criterion_5(sets);
    criterion_6(sets);
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s: %d/10 criteria passed in %.1f s\n",
                failures == 0 ? "OK" : "FAILED", 10 - failures, secs);
    return failures == 0 ? 0 : 1;
}
