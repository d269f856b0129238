#include "sidonlab/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sidonlab {

int64_t PrimeTable::p(size_t k) const {
    if (k < 1 || k > primes.size()) throw std::out_of_range("prime index out of range");
    return primes[k - 1];
}

int64_t PrimeTable::gap(size_t k) const {
    if (k < 1 || k + 1 > primes.size()) throw std::out_of_range("gap index out of range");
    return primes[k] - primes[k - 1];
}

int64_t PrimeTable::predecessor(int64_t x) const {
    auto it = std::upper_bound(primes.begin(), primes.end(), x);
    if (it == primes.begin()) throw std::invalid_argument("no prime <= x");
    return *(it - 1);
}

bool PrimeTable::contains(int64_t x) const {
    return std::binary_search(primes.begin(), primes.end(), x);
}

PrimeTable sieve(int64_t limit) {
    if (limit < 2) throw std::invalid_argument("sieve limit must be at least 2");
    if (limit > int64_t{1'000'000'000})
        throw std::invalid_argument("sieve limit over 1e9 not supported");
    PrimeTable t;
    t.limit = limit;

    const int64_t root = static_cast<int64_t>(std::sqrt(static_cast<double>(limit))) + 2;
    std::vector<bool> base(static_cast<size_t>(root) + 1, true);
    base[0] = base[1] = false;
    for (int64_t i = 2; i * i <= root; ++i)
        if (base[static_cast<size_t>(i)])
            for (int64_t j = i * i; j <= root; j += i) base[static_cast<size_t>(j)] = false;
    std::vector<int64_t> base_primes;
    for (int64_t i = 2; i <= root; ++i)
        if (base[static_cast<size_t>(i)]) base_primes.push_back(i);

    const int64_t seg_size = 1 << 20;
    std::vector<bool> seg;
    for (int64_t lo = 2; lo <= limit; lo += seg_size) {
        const int64_t hi = std::min(limit, lo + seg_size - 1);
        seg.assign(static_cast<size_t>(hi - lo + 1), true);
        for (int64_t p : base_primes) {
            if (p * p > hi) break;
            int64_t start = std::max(p * p, (lo + p - 1) / p * p);
            for (int64_t j = start; j <= hi; j += p) seg[static_cast<size_t>(j - lo)] = false;
        }
        for (int64_t v = lo; v <= hi; ++v)
            if (seg[static_cast<size_t>(v - lo)]) t.primes.push_back(v);
    }
    return t;
}

GapExponentReport gap_exponent_report(const PrimeTable& table, int64_t min_prime) {
    if (table.limit < 100)
        throw std::invalid_argument("gap report needs a table limit of at least 100");
    GapExponentReport r;
    r.limit = table.limit;
    r.min_prime = min_prime;
    for (size_t k = 1; k + 1 <= table.count(); ++k) {
        const int64_t p = table.p(k);
        if (p < r.min_prime) continue;
        const int64_t g = table.gap(k);
        const double expo = std::log(static_cast<double>(g)) / std::log(static_cast<double>(p));
        if (expo > r.max_exponent) {
            r.max_exponent = expo;
            r.argmax_p = p;
        }
        if (expo > 0.525) ++r.count_exceeding;
    }
    return r;
}

namespace {

// gap >= sqrt(p), decided in exact integer arithmetic.
bool qualifying_gap(int64_t p, int64_t gap) { return gap * gap >= p; }

int64_t hb_sum_upto(const PrimeTable& table, int64_t x) {
    int64_t sum = 0;
    for (size_t k = 1; k + 1 <= table.count() && table.p(k) <= x; ++k)
        if (qualifying_gap(table.p(k), table.gap(k))) sum += table.gap(k);
    return sum;
}

}  // namespace

HeathBrownSum heath_brown_sum(const PrimeTable& table, int64_t x) {
    if (x > table.limit) throw std::invalid_argument("x exceeds the table limit");
    HeathBrownSum r;
    r.x = x;
    r.sum = hb_sum_upto(table, x);
    for (int64_t d = 1000; d <= x; d *= 10) {
        const int64_t s = hb_sum_upto(table, d);
        const double expo =
            s > 0 ? std::log(static_cast<double>(s)) / std::log(static_cast<double>(d)) : 0.0;
        r.decade_exponents.emplace_back(d, expo);
    }
    r.sublinear_tail = true;
    const size_t nd = r.decade_exponents.size();
    for (size_t i = nd >= 2 ? nd - 2 : 0; i < nd; ++i) {
        const auto& [d, expo] = r.decade_exponents[i];
        if (hb_sum_upto(table, d) >= d) r.sublinear_tail = false;
    }
    return r;
}

ExceptionReport exceptional_set(int64_t N, const PrimeTable& table) {
    if (N < 1) throw std::invalid_argument("N must be positive");
    const int64_t root = static_cast<int64_t>(std::floor(std::sqrt(static_cast<double>(N) + 1.0)));
    // Need the successor prime of every p with p^2 - 1 <= N.
    if (table.primes.empty() || table.primes.back() <= root)
        throw std::invalid_argument("prime table too small for this N");
    ExceptionReport r;
    r.N = N;
    for (size_t k = 1; k + 1 <= table.count() && table.p(k) <= root; ++k) {
        const int64_t p = table.p(k);
        const int64_t q = table.p(k + 1);
        if (!qualifying_gap(p, q - p)) continue;
        ExceptionInterval iv{p, q, p * p - 1, q * q - 1};
        const int64_t lo = std::max<int64_t>(iv.lo, 1);
        const int64_t hi = std::min(iv.hi, N + 1);  // half-open clip to [1, N]
        if (hi <= lo) continue;
        r.intervals.push_back(iv);
        r.exception_count += hi - lo;
    }
    r.ratio_to_N45 = static_cast<double>(r.exception_count) /
                     std::pow(static_cast<double>(N), 0.8);
    return r;
}

double defect_upper_envelope(int64_t n, const PrimeTable& table) {
    if (n < 3) throw std::invalid_argument("n must be at least 3");
    const int64_t root = static_cast<int64_t>(std::floor(std::sqrt(static_cast<double>(n) + 1.0)));
    if (table.limit < root) throw std::invalid_argument("prime table too small for this n");
    const int64_t p = table.predecessor(root);
    return std::sqrt(static_cast<double>(n)) - static_cast<double>(p);
}

bool in_exceptional_interval(int64_t n, const PrimeTable& table) {
    for (size_t k = 1; k + 1 <= table.count(); ++k) {
        const int64_t p = table.p(k);
        if (p * p - 1 > n) break;
        const int64_t q = table.p(k + 1);
        if (!qualifying_gap(p, q - p)) continue;
        if (n >= p * p - 1 && n < q * q - 1) return true;
    }
    return false;
}

}  // namespace sidonlab
