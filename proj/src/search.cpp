#include "sidonlab/search.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "sidonlab/constructions.hpp"
#include "sidonlab/gf.hpp"

namespace sidonlab {

namespace {

// Appending r elements above `last` inside [n] consumes r(r+1)/2 distinct
// differences of size at most n - last (the mutual ones plus those to `last`),
// so r(r+1)/2 <= w is necessary.
int64_t max_extra(int64_t w) {
    return static_cast<int64_t>((std::sqrt(8.0 * static_cast<double>(w) + 1.0) - 1.0) / 2.0);
}

struct Shared {
    int64_t n = 0;
    std::atomic<int64_t> best{0};
    std::atomic<uint64_t> nodes{0};
    std::mutex witness_mu;
    std::vector<int64_t> witness;

    void offer(const std::vector<int64_t>& set) {
        const int64_t sz = static_cast<int64_t>(set.size());
        int64_t cur = best.load();
        while (sz > cur && !best.compare_exchange_weak(cur, sz)) {
        }
        std::lock_guard<std::mutex> lk(witness_mu);
        if (set.size() > witness.size()) witness = set;
    }
};

struct Worker {
    Shared& sh;
    std::vector<int64_t> chosen;
    std::vector<bool> used;  // pairwise differences of `chosen`
    uint64_t nodes = 0;

    explicit Worker(Shared& s) : sh(s), used(static_cast<size_t>(s.n) + 1, false) {}

    void push(int64_t cand) {
        for (int64_t a : chosen) used[static_cast<size_t>(cand - a)] = true;
        chosen.push_back(cand);
    }

    void pop() {
        const int64_t cand = chosen.back();
        chosen.pop_back();
        for (int64_t a : chosen) used[static_cast<size_t>(cand - a)] = false;
    }

    bool fits(int64_t cand) const {
        for (int64_t a : chosen)
            if (used[static_cast<size_t>(cand - a)]) return false;
        return true;
    }

    void dfs() {
        ++nodes;
        const int64_t size = static_cast<int64_t>(chosen.size());
        if (size > sh.best.load()) sh.offer(chosen);
        const int64_t last = chosen.back();
        if (size + max_extra(sh.n - last) <= sh.best.load()) return;
        for (int64_t cand = last + 1; cand <= sh.n; ++cand) {
            if (size + 1 + max_extra(sh.n - cand) <= sh.best.load()) break;
            if (!fits(cand)) continue;
            push(cand);
            dfs();
            pop();
        }
    }
};

// Lower bounds from the constructions, truncated to [n].
std::vector<int64_t> incumbent_from_constructions(int64_t n) {
    std::vector<int64_t> best{1};
    auto consider = [&](const SidonSet& s) {
        std::vector<int64_t> trunc;
        for (int64_t e : s.elements)
            if (e <= n) trunc.push_back(e);
        if (trunc.size() > best.size()) best = std::move(trunc);
    };
    for (int64_t k = 1; k <= 60; ++k) {
        SidonSet mc = mian_chowla(k);
        if (mc.elements.back() > n) {
            mc.elements.resize(static_cast<size_t>(k - 1));
            consider(mc);
            break;
        }
        if (k == 60) consider(mc);
    }
    for (int64_t p = 2; p * p - 1 <= 4 * n && p < 1000; ++p) {
        if (!is_prime(p)) continue;
        consider(bose(p));
        consider(singer(p));
    }
    return best;
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SIDONLAB_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// First-fit DFS for a Sidon set of exactly `target` elements; ascending order
// makes the first hit the lexicographically smallest witness.
bool lex_dfs(int64_t n, int64_t target, std::vector<int64_t>& chosen,
             std::vector<bool>& used) {
    const int64_t size = static_cast<int64_t>(chosen.size());
    if (size == target) return true;
    const int64_t last = chosen.back();
    for (int64_t cand = last + 1; cand <= n; ++cand) {
        if (size + 1 + max_extra(n - cand) < target) break;
        bool ok = true;
        for (int64_t a : chosen)
            if (used[static_cast<size_t>(cand - a)]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (int64_t a : chosen) used[static_cast<size_t>(cand - a)] = true;
        chosen.push_back(cand);
        if (lex_dfs(n, target, chosen, used)) return true;
        chosen.pop_back();
        for (int64_t a : chosen) used[static_cast<size_t>(cand - a)] = false;
    }
    return false;
}

}  // namespace

SearchResult max_sidon(int64_t n, const SearchOptions& opts) {
    if (n <= 0) throw std::invalid_argument("n must be positive");
    if (n > opts.limit)
        throw std::invalid_argument("n = " + std::to_string(n) +
                                    " exceeds the exact-search limit " +
                                    std::to_string(opts.limit));
    const auto t0 = std::chrono::steady_clock::now();

    Shared sh;
    sh.n = n;
    sh.witness = incumbent_from_constructions(n);
    sh.best.store(static_cast<int64_t>(sh.witness.size()));

    // Every maximum set can be translated to start at 1, so the first element
    // is fixed; parallel mode splits on the second element.
    const int threads = resolve_threads(opts.threads);
    if (threads <= 1 || n < 16) {
        Worker w(sh);
        w.push(1);
        w.dfs();
        sh.nodes += w.nodes;
    } else {
        std::atomic<int64_t> next_a2{2};
        auto work = [&] {
            Worker w(sh);
            w.push(1);
            for (;;) {
                const int64_t a2 = next_a2.fetch_add(1);
                if (a2 > n) break;
                w.push(a2);
                w.dfs();
                w.pop();
            }
            sh.nodes += w.nodes;
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    SearchResult res;
    res.n = n;
    res.s_n = sh.best.load();
    res.nodes_expanded = sh.nodes.load();

    std::vector<int64_t> witness_elems = sh.witness;
    if (opts.lex_witness) {
        std::vector<int64_t> chosen{1};
        std::vector<bool> used(static_cast<size_t>(n) + 1, false);
        if (!lex_dfs(n, res.s_n, chosen, used))
            throw std::logic_error("optimal size unreachable in lex re-search");
        witness_elems = std::move(chosen);
    }
    res.witness = make_verified(std::move(witness_elems), n);
    if (res.witness.size() != res.s_n)
        throw std::logic_error("witness size mismatch");

    res.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

namespace {

int64_t largest_bose_prime(int64_t n) {
    // largest prime p with p^2 - 1 <= n
    int64_t p = static_cast<int64_t>(std::floor(std::sqrt(static_cast<double>(n) + 1.0)));
    while (p * p - 1 > n) --p;
    while (p >= 2 && !is_prime(p)) --p;
    return p >= 2 ? p : 0;
}

}  // namespace

std::vector<DefectRecord> defect_table(const std::vector<int64_t>& n_values,
                                       bool force_bracket, const SearchOptions& opts) {
    std::vector<DefectRecord> out;
    out.reserve(n_values.size());
    for (int64_t n : n_values) {
        if (n <= 0) throw std::invalid_argument("n must be positive");
        DefectRecord r;
        r.n = n;
        r.bose_bracket = largest_bose_prime(n);
        const double nd = static_cast<double>(n);
        r.eq1_bound = std::sqrt(nd) + 0.998 * std::pow(nd, 0.25);
        r.s_hi = static_cast<int64_t>(std::floor(r.eq1_bound));
        if (!force_bracket && n <= opts.limit) {
            const SearchResult sr = max_sidon(n, opts);
            r.s_n = sr.s_n;
            r.L_prime = std::sqrt(nd) - static_cast<double>(sr.s_n);
        } else {
            r.L_prime = std::sqrt(nd) - static_cast<double>(r.bose_bracket);  // upper end
        }
        out.push_back(r);
    }
    return out;
}

bool eq1_check(const DefectRecord& record) {
    if (!record.s_n) throw std::invalid_argument("eq1_check requires an exact-mode record");
    return static_cast<double>(*record.s_n) < record.eq1_bound;
}

}  // namespace sidonlab
