#include "sidonlab/sidon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>

namespace sidonlab {

namespace {

void check_input(const std::vector<int64_t>& elements) {
    for (size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] <= 0)
            throw std::invalid_argument("element " + std::to_string(elements[i]) +
                                        " is not positive");
        if (i > 0 && elements[i] <= elements[i - 1])
            throw std::invalid_argument("elements are not strictly increasing at index " +
                                        std::to_string(i));
    }
}

// Difference d = a_j - a_i collides with an earlier pair (i0, j0):
// a_j + a_{i0} = a_{j0} + a_i, a non-trivial sum coincidence.
Violation witness_from_diff_collision(const std::vector<int64_t>& e, size_t i, size_t j) {
    const int64_t d = e[j] - e[i];
    for (size_t i0 = 0; i0 < e.size(); ++i0) {
        for (size_t j0 = i0 + 1; j0 < e.size(); ++j0) {
            if (i0 == i && j0 == j) continue;
            if (e[j0] - e[i0] == d)
                return Violation{e[j], e[i0], e[j0], e[i]};
        }
    }
    // unreachable: a collision was observed
    throw std::logic_error("difference collision vanished on rescan");
}

}  // namespace

namespace detail {

VerifyResult verify_via_differences(const std::vector<int64_t>& elements) {
    const size_t k = elements.size();
    if (k < 2) return {true, std::nullopt};
    const int64_t span = elements.back() - elements.front();
    std::vector<bool> seen(static_cast<size_t>(span) + 1, false);
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = i + 1; j < k; ++j) {
            const int64_t d = elements[j] - elements[i];
            if (seen[static_cast<size_t>(d)])
                return {false, witness_from_diff_collision(elements, i, j)};
            seen[static_cast<size_t>(d)] = true;
        }
    }
    return {true, std::nullopt};
}

VerifyResult verify_via_sums(const std::vector<int64_t>& elements) {
    const size_t k = elements.size();
    if (k < 2) return {true, std::nullopt};
    struct Entry {
        int64_t sum;
        uint32_t i, j;
    };
    std::vector<Entry> sums;
    sums.reserve(k * (k + 1) / 2);
    for (uint32_t i = 0; i < k; ++i)
        for (uint32_t j = i; j < k; ++j)
            sums.push_back({elements[i] + elements[j], i, j});
    std::sort(sums.begin(), sums.end(),
              [](const Entry& a, const Entry& b) { return a.sum < b.sum; });
    for (size_t t = 1; t < sums.size(); ++t) {
        if (sums[t].sum == sums[t - 1].sum) {
            const Entry& a = sums[t - 1];
            const Entry& b = sums[t];
            return {false, Violation{elements[a.i], elements[a.j],
                                     elements[b.i], elements[b.j]}};
        }
    }
    return {true, std::nullopt};
}

}  // namespace detail

VerifyResult verify_sidon(const std::vector<int64_t>& elements,
                          int64_t sum_path_threshold) {
    check_input(elements);
    const int64_t k = static_cast<int64_t>(elements.size());
    if (k < 2) return {true, std::nullopt};
    const int64_t span = elements.back() - elements.front();
    // The difference path needs a span-sized membership bitset; use it while
    // both the span and the pair count stay modest.
    if (span <= sum_path_threshold && k * k <= sum_path_threshold)
        return detail::verify_via_differences(elements);
    return detail::verify_via_sums(elements);
}

SidonSet make_verified(std::vector<int64_t> elements, int64_t n) {
    if (n <= 0 && !elements.empty())
        throw std::invalid_argument("ambient bound must be positive");
    if (!elements.empty() && elements.back() > n)
        throw std::invalid_argument("element " + std::to_string(elements.back()) +
                                    " exceeds ambient bound " + std::to_string(n));
    VerifyResult r = verify_sidon(elements);
    if (!r.ok) {
        const Violation& w = *r.witness;
        throw std::invalid_argument("not a Sidon set: " + std::to_string(w.a) + "+" +
                                    std::to_string(w.b) + " = " + std::to_string(w.c) +
                                    "+" + std::to_string(w.d));
    }
    SidonSet s;
    s.elements = std::move(elements);
    s.n = n;
    s.verified = true;
    return s;
}

DefectValue defect_value(int64_t n, int64_t size) {
    DefectValue d;
    d.n = n;
    d.size = size;
    d.L_prime = std::sqrt(static_cast<double>(n)) - static_cast<double>(size);
    d.L = std::max(0.0, d.L_prime);
    return d;
}

DefectValue defect_value(const SidonSet& a) { return defect_value(a.n, a.size()); }

namespace {

void require_verified(const SidonSet& a) {
    if (!a.verified) throw std::invalid_argument("set is not verified");
}

// Elements strictly below t.
int64_t count_below(const SidonSet& a, double t) {
    auto it = std::lower_bound(a.elements.begin(), a.elements.end(), t,
                               [](int64_t e, double v) { return static_cast<double>(e) < v; });
    return static_cast<int64_t>(it - a.elements.begin());
}

// Elements in [1, x] for integer x.
int64_t count_upto(const SidonSet& a, int64_t x) {
    auto it = std::upper_bound(a.elements.begin(), a.elements.end(), x);
    return static_cast<int64_t>(it - a.elements.begin());
}

}  // namespace

int64_t counting_function(const SidonSet& a, double t) {
    require_verified(a);
    if (t <= 0.0) throw std::invalid_argument("t must be positive");
    return count_below(a, t);
}

DiscrepancyReport interval_discrepancy(const SidonSet& a, int64_t u, int64_t len,
                                       const DefectValue& defect) {
    require_verified(a);
    if (len <= 0) throw std::invalid_argument("interval length must be positive");
    if (u < 0 || u + len > a.n) throw std::invalid_argument("interval out of range");
    DiscrepancyReport r;
    r.n = a.n;
    r.u = u;
    r.len = len;
    r.c = static_cast<double>(len) / static_cast<double>(a.n);
    r.count = count_upto(a, u + len) - count_upto(a, u);
    r.E_I = static_cast<double>(r.count) - r.c * static_cast<double>(a.size());
    const double n = static_cast<double>(a.n);
    r.bound = 52.0 * std::pow(n, 0.25) * (1.0 + std::sqrt(r.c) * std::pow(n, 0.125)) *
              (1.0 + std::sqrt(defect.L) * std::pow(n, -0.125));
    r.ratio = std::abs(r.E_I) / r.bound;
    return r;
}

SweepGrid SweepGrid::dyadic(int64_t n) {
    SweepGrid g;
    if (n <= 0) return g;
    int64_t jmax = 0;
    while ((int64_t{1} << (jmax + 1)) <= n) ++jmax;  // jmax = floor(log2 n)
    jmax = std::max<int64_t>(0, jmax - 3);
    for (int64_t j = 0; j <= jmax; ++j) {
        const int64_t len = n >> j;
        if (len < 1) break;
        const int64_t step = std::max<int64_t>(1, len / 4);
        for (int64_t u = 0; u + len <= n; u += step)
            g.cells.emplace_back(u, len);
    }
    return g;
}

SweepSummary discrepancy_sweep(const SidonSet& a, const SweepGrid& grid) {
    require_verified(a);
    const DefectValue defect = defect_value(a);
    SweepSummary s;
    s.reports.reserve(grid.cells.size());
    for (const auto& [u, len] : grid.cells)
        s.reports.push_back(interval_discrepancy(a, u, len, defect));
    std::stable_sort(s.reports.begin(), s.reports.end(),
                     [](const DiscrepancyReport& x, const DiscrepancyReport& y) {
                         return std::tie(y.len, x.u) < std::tie(x.len, y.u);
                     });
    for (const auto& r : s.reports) {
        if (r.ratio > s.max_ratio) {
            s.max_ratio = r.ratio;
            s.argmax_u = r.u;
            s.argmax_len = r.len;
        }
    }
    return s;
}

SweepSummary discrepancy_sweep(const SidonSet& a) {
    return discrepancy_sweep(a, SweepGrid::dyadic(a.n));
}

ElementErrorSummary element_errors(const SidonSet& a) {
    require_verified(a);
    if (a.elements.empty()) throw std::invalid_argument("set is empty");
    const DefectValue defect = defect_value(a);
    const double n = static_cast<double>(a.n);
    const double sqrt_n = std::sqrt(n);
    const double normalizer =
        std::pow(n, 7.0 / 8.0) + std::sqrt(defect.L) * std::pow(n, 3.0 / 4.0);
    ElementErrorSummary s;
    s.records.reserve(a.elements.size());
    const int64_t k = a.size();
    for (int64_t m = 1; m <= k; ++m) {
        ElementErrorRecord r;
        r.m = m;
        r.a_m = a.elements[static_cast<size_t>(m - 1)];
        r.main_term = static_cast<double>(m) * sqrt_n;
        r.abs_error = std::abs(static_cast<double>(r.a_m) - r.main_term);
        r.normalizer = normalizer;
        r.normalized = r.abs_error / normalizer;
        if (r.normalized > s.max_normalized) {
            s.max_normalized = r.normalized;
            s.argmax_m = m;
        }
        if (2 * m >= k && r.normalized > s.max_normalized_upper) {
            s.max_normalized_upper = r.normalized;
            s.argmax_m_upper = m;
        }
        s.records.push_back(r);
    }
    return s;
}

PowerSumRecord power_sum(const SidonSet& a, int64_t ell) {
    require_verified(a);
    if (ell < 1 || ell > 8) throw std::invalid_argument("ell must be in [1, 8]");
    const DefectValue defect = defect_value(a);
    PowerSumRecord r;
    r.ell = ell;
    r.exact_sum = 0;
    for (int64_t e : a.elements)
        r.exact_sum += boost::multiprecision::pow(BigInt(e), static_cast<unsigned>(ell));
    const double n = static_cast<double>(a.n);
    const double l = static_cast<double>(ell);
    r.main_term = std::pow(n, (2.0 * l + 1.0) / 2.0) / (l + 1.0);
    r.abs_error = std::abs(r.exact_sum.convert_to<double>() - r.main_term);
    r.normalizer = std::pow(n, (8.0 * l + 3.0) / 8.0) +
                   std::sqrt(defect.L) * std::pow(n, (4.0 * l + 1.0) / 4.0);
    r.normalized = r.abs_error / r.normalizer;
    return r;
}

DingReport ding_condition(const SidonSet& a, double fraction) {
    require_verified(a);
    if (fraction <= 0.0 || fraction >= 1.0)
        throw std::invalid_argument("fraction must lie in (0, 1)");
    DingReport rep;
    rep.holds = true;
    const double lo = static_cast<double>(a.n) * fraction;
    for (int64_t t = static_cast<int64_t>(std::floor(lo)) + 1; t < a.n; ++t) {
        if (static_cast<double>(t) <= lo) continue;  // open at the left endpoint
        const int64_t at = count_below(a, static_cast<double>(t));
        if (static_cast<double>(at) * static_cast<double>(at) <= static_cast<double>(t)) {
            rep.holds = false;
            rep.first_failing_t = t;
            break;
        }
    }
    return rep;
}

}  // namespace sidonlab
