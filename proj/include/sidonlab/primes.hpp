// Prime sieve, gap statistics, and the exceptional-interval machinery driven
// by large prime gaps.

#pragma once

#include <cstdint>
#include <vector>

namespace sidonlab {

struct PrimeTable {
    int64_t limit = 0;
    std::vector<int64_t> primes;  // all primes <= limit, increasing

    size_t count() const { return primes.size(); }
    int64_t p(size_t k) const;               // 1-based: p(1) = 2
    int64_t gap(size_t k) const;             // p_{k+1} - p_k
    int64_t predecessor(int64_t x) const;    // largest prime <= x
    bool contains(int64_t x) const;
};

// Segmented sieve of Eratosthenes; limit up to ~1e9.
PrimeTable sieve(int64_t limit);

struct GapExponentReport {
    int64_t limit = 0;
    int64_t min_prime = 0;        // small primes excluded (constants dominate)
    double max_exponent = 0.0;    // max log(gap) / log(p_k)
    int64_t argmax_p = 0;
    int64_t count_exceeding = 0;  // gaps with gap > p_k^0.525
};

// The 0.525 exponent only bites past the small-prime regime: the last known
// exceedance is the gap 113 -> 127, so the default cutoff starts just above.
GapExponentReport gap_exponent_report(const PrimeTable& table, int64_t min_prime = 127);

struct HeathBrownSum {
    int64_t x = 0;
    int64_t sum = 0;  // sum of gaps p_{k+1} - p_k with p_k <= x, gap^2 >= p_k
    // (decade x, log(sum)/log(x)) for x = 10^3, 10^4, ... up to the query.
    std::vector<std::pair<int64_t, double>> decade_exponents;
    bool sublinear_tail = false;  // sum(x) < x at the two largest decades
};

HeathBrownSum heath_brown_sum(const PrimeTable& table, int64_t x);

struct ExceptionInterval {
    int64_t p_lo = 0, p_hi = 0;  // consecutive primes with p_hi - p_lo >= sqrt(p_lo)
    int64_t lo = 0, hi = 0;      // half-open [p_lo^2 - 1, p_hi^2 - 1)
};

struct ExceptionReport {
    int64_t N = 0;
    std::vector<ExceptionInterval> intervals;  // those meeting [1, N]
    int64_t exception_count = 0;               // total clipped length
    double ratio_to_N45 = 0.0;                 // exception_count / N^{4/5}
};

// Requires the table to reach past sqrt(N + 1) to the successor prime.
ExceptionReport exceptional_set(int64_t N, const PrimeTable& table);

// Upper bound on the defect L' = sqrt(n) - S(n) of a maximum Sidon set:
// sqrt(n) - p_k where p_k is the largest prime with p_k^2 - 1 <= n.
double defect_upper_envelope(int64_t n, const PrimeTable& table);

// True if n lies in some exceptional interval of the table.
bool in_exceptional_interval(int64_t n, const PrimeTable& table);

}  // namespace sidonlab
