// Sidon set data model, verification and measurement operations.
//
// A Sidon set (B2 set) is a set of positive integers whose pairwise sums
// a_i + a_j (i <= j) are all distinct; equivalently, all positive pairwise
// differences are distinct.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sidonlab {

using BigInt = boost::multiprecision::cpp_int;

// Verified strictly increasing sequence of positive integers inside [1, n].
struct SidonSet {
    std::vector<int64_t> elements;  // strictly increasing, in [1, n]
    int64_t n = 0;                  // ambient bound
    bool verified = false;          // set only by verification

    int64_t size() const { return static_cast<int64_t>(elements.size()); }
};

// Witness of a non-trivial solution of a + b = c + d.
struct Violation {
    int64_t a, b, c, d;
};

struct VerifyResult {
    bool ok = false;
    std::optional<Violation> witness;
};

// Defect of a Sidon set: L' = sqrt(n) - |A|, clamped at zero for L.
struct DefectValue {
    int64_t n = 0;
    int64_t size = 0;
    double L_prime = 0.0;  // sqrt(n) - size, may be negative
    double L = 0.0;        // max{0, L_prime}
};

struct DiscrepancyReport {
    int64_t n = 0;
    int64_t u = 0;      // interval is {u+1, ..., u+len}
    int64_t len = 0;
    double c = 0.0;     // len / n
    int64_t count = 0;  // |A ∩ interval|
    double E_I = 0.0;   // count - c*|A|
    double bound = 0.0; // 52 n^{1/4} (1 + c^{1/2} n^{1/8}) (1 + L^{1/2} n^{-1/8})
    double ratio = 0.0; // |E_I| / bound
};

struct SweepGrid {
    std::vector<std::pair<int64_t, int64_t>> cells;  // (u, len)

    // Dyadic lengths n/2^j, j = 0..floor(log2 n)-3, offsets stepped by len/4.
    static SweepGrid dyadic(int64_t n);
};

struct SweepSummary {
    std::vector<DiscrepancyReport> reports;  // ordered by (len desc, u asc)
    double max_ratio = 0.0;
    int64_t argmax_u = 0;
    int64_t argmax_len = 0;
};

struct ElementErrorRecord {
    int64_t m = 0;            // rank, 1-based
    int64_t a_m = 0;
    double main_term = 0.0;   // m * n^{1/2}
    double abs_error = 0.0;
    double normalizer = 0.0;  // n^{7/8} + L^{1/2} n^{3/4}
    double normalized = 0.0;
};

struct ElementErrorSummary {
    std::vector<ElementErrorRecord> records;
    double max_normalized = 0.0;
    int64_t argmax_m = 0;
    // Same statistics restricted to ranks m >= |A|/2, where the formula is
    // actually asymptotically meaningful.
    double max_normalized_upper = 0.0;
    int64_t argmax_m_upper = 0;
};

struct PowerSumRecord {
    int64_t ell = 0;
    BigInt exact_sum;         // sum of a^ell, exact
    double main_term = 0.0;   // n^{(2l+1)/2} / (l+1)
    double abs_error = 0.0;
    double normalizer = 0.0;  // n^{(8l+3)/8} + L^{1/2} n^{(4l+1)/4}
    double normalized = 0.0;
};

struct DingReport {
    bool holds = false;
    std::optional<int64_t> first_failing_t;
};

// Checks the Sidon property. Rejects non-increasing or non-positive input
// with std::invalid_argument (that is an input error, not a violation).
// O(k^2) difference-membership path by default; above `sum_path_threshold`
// pairs (or when the elements are too spread for a bitset) falls back to a
// sort-based sum path with identical answers.
VerifyResult verify_sidon(const std::vector<int64_t>& elements,
                          int64_t sum_path_threshold = int64_t{1} << 26);

namespace detail {
// The two characterizations, individually exposed for cross-checking.
VerifyResult verify_via_differences(const std::vector<int64_t>& elements);
VerifyResult verify_via_sums(const std::vector<int64_t>& elements);
}  // namespace detail

// Verifies and wraps; throws std::invalid_argument if the input is not a
// Sidon set or does not fit in [1, n].
SidonSet make_verified(std::vector<int64_t> elements, int64_t n);

DefectValue defect_value(int64_t n, int64_t size);
DefectValue defect_value(const SidonSet& a);

// A(t) = |A ∩ (0, t)|. Requires a verified set and t > 0.
int64_t counting_function(const SidonSet& a, double t);

DiscrepancyReport interval_discrepancy(const SidonSet& a, int64_t u,
                                       int64_t len, const DefectValue& defect);

SweepSummary discrepancy_sweep(const SidonSet& a, const SweepGrid& grid);
SweepSummary discrepancy_sweep(const SidonSet& a);  // default dyadic grid

ElementErrorSummary element_errors(const SidonSet& a);

// Exact power sum with its main term and normalized error, 1 <= ell <= 8.
PowerSumRecord power_sum(const SidonSet& a, int64_t ell);

// Checks whether A(t) > sqrt(t) for every integer t in (n*fraction, n).
DingReport ding_condition(const SidonSet& a, double fraction);

}  // namespace sidonlab
