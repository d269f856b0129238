#include "sidonlab/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "sidonlab/gf.hpp"

namespace sidonlab {

std::string family_name(Family f) {
    switch (f) {
        case Family::erdos_turan: return "erdos-turan";
        case Family::bose: return "bose";
        case Family::singer: return "singer";
        case Family::mian_chowla: return "mian-chowla";
    }
    throw std::logic_error("unknown family");
}

Family parse_family(const std::string& name) {
    std::string s = name;
    std::replace(s.begin(), s.end(), '_', '-');
    if (s == "erdos-turan") return Family::erdos_turan;
    if (s == "bose") return Family::bose;
    if (s == "singer") return Family::singer;
    if (s == "mian-chowla") return Family::mian_chowla;
    throw std::invalid_argument("unknown construction family: " + name);
}

bool is_sidon_mod(const std::vector<int64_t>& elements, int64_t m) {
    std::vector<bool> seen(static_cast<size_t>(m), false);
    for (size_t i = 0; i < elements.size(); ++i) {
        for (size_t j = 0; j < elements.size(); ++j) {
            if (i == j) continue;
            int64_t d = (elements[i] - elements[j]) % m;
            if (d < 0) d += m;
            if (d == 0) return false;
            if (seen[static_cast<size_t>(d)]) return false;
            seen[static_cast<size_t>(d)] = true;
        }
    }
    return true;
}

SidonSet bose(int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("bose: parameter must be prime");
    const int64_t n = p * p - 1;
    FieldCtx ctx(p, 2);
    DiscreteLog dlog(ctx);
    const FieldElement g = ctx.generator();
    std::vector<int64_t> elems;
    elems.reserve(static_cast<size_t>(p));
    for (int64_t c = 0; c < p; ++c)
        elems.push_back(dlog(ctx.add(g, ctx.from_scalar(c))));
    std::sort(elems.begin(), elems.end());
    if (static_cast<int64_t>(elems.size()) != p ||
        std::adjacent_find(elems.begin(), elems.end()) != elems.end())
        throw std::logic_error("bose: expected exactly p distinct elements");
    if (!is_sidon_mod(elems, n))
        throw std::logic_error("bose: differences collide modulo p^2 - 1");
    return make_verified(std::move(elems), n);
}

SidonSet erdos_turan(int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("erdos-turan: parameter must be prime");
    std::vector<int64_t> elems;
    elems.reserve(static_cast<size_t>(p));
    for (int64_t i = 0; i < p; ++i)
        elems.push_back(2 * p * i + (i * i % p) + 1);
    return make_verified(std::move(elems), 2 * p * p);
}

SidonSet singer(int64_t q) {
    if (!is_prime(q)) throw std::invalid_argument("singer: parameter must be prime");
    const int64_t v = q * q + q + 1;
    FieldCtx ctx(q, 3);
    DiscreteLog dlog(ctx);
    // Projective classes of the plane span{1, theta}: the class of 1 (log 0)
    // and the classes of theta + c for c in GF(q).
    std::vector<int64_t> elems;
    elems.reserve(static_cast<size_t>(q + 1));
    elems.push_back(v);  // residue 0 represented as v to stay positive
    const FieldElement theta = ctx.theta();
    for (int64_t c = 0; c < q; ++c) {
        int64_t a = dlog(ctx.add(theta, ctx.from_scalar(c))) % v;
        elems.push_back(a == 0 ? v : a);
    }
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (static_cast<int64_t>(elems.size()) != q + 1)
        throw std::logic_error("singer: expected exactly q + 1 residue classes");
    if (q <= 100) {
        // Perfect difference set: every nonzero residue mod v is hit exactly
        // once as an ordered difference.
        std::vector<int> hits(static_cast<size_t>(v), 0);
        for (int64_t a : elems)
            for (int64_t b : elems) {
                if (a == b) continue;
                int64_t d = (a - b) % v;
                if (d < 0) d += v;
                ++hits[static_cast<size_t>(d)];
            }
        for (int64_t d = 1; d < v; ++d)
            if (hits[static_cast<size_t>(d)] != 1)
                throw std::logic_error("singer: perfect difference property failed");
    }
    return make_verified(std::move(elems), v);
}

SidonSet mian_chowla(int64_t k) {
    if (k < 1) throw std::invalid_argument("mian-chowla: length must be positive");
    if (k > 2000) throw std::invalid_argument("mian-chowla: length over desk-scale limit");
    std::vector<int64_t> elems{1};
    std::vector<bool> used_diff;  // grows with the current maximum
    while (static_cast<int64_t>(elems.size()) < k) {
        for (int64_t cand = elems.back() + 1;; ++cand) {
            if (static_cast<size_t>(cand) > used_diff.size())
                used_diff.resize(static_cast<size_t>(cand) * 2, false);
            bool ok = true;
            for (int64_t a : elems) {
                if (used_diff[static_cast<size_t>(cand - a)]) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                for (int64_t a : elems) used_diff[static_cast<size_t>(cand - a)] = true;
                // differences among earlier elements enter the set lazily:
                // every old difference b - a was recorded when b was appended
                elems.push_back(cand);
                break;
            }
        }
    }
    const int64_t n = elems.back();
    return make_verified(std::move(elems), n);
}

SidonSet construct(Family f, int64_t param) {
    switch (f) {
        case Family::erdos_turan: return erdos_turan(param);
        case Family::bose: return bose(param);
        case Family::singer: return singer(param);
        case Family::mian_chowla: return mian_chowla(param);
    }
    throw std::logic_error("unknown family");
}

}  // namespace sidonlab
