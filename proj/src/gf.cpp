#include "sidonlab/gf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sidonlab {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    // Deterministic Miller-Rabin for 64-bit with the first twelve prime bases.
    uint64_t d = static_cast<uint64_t>(n - 1);
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        uint64_t x = powmod_u64(a, d, static_cast<uint64_t>(n));
        if (x == 1 || x == static_cast<uint64_t>(n - 1)) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, static_cast<uint64_t>(n));
            if (x == static_cast<uint64_t>(n - 1)) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<int64_t> prime_factors(int64_t n) {
    std::vector<int64_t> fs;
    for (int64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            fs.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

FieldCtx::FieldCtx(int64_t p, int d) : p_(p), d_(d) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (d < 1 || d > 3) throw std::invalid_argument("degree must be 1, 2 or 3");
    order_ = 1;
    for (int i = 0; i < d; ++i) {
        if (order_ > (int64_t{4} << 40) / p)
            throw std::invalid_argument("p^d too large for desk-scale field context");
        order_ *= p;
    }
    pick_modulus();
    pick_generator();
}

void FieldCtx::pick_modulus() {
    mod_ = {0, 0, 0};
    if (d_ == 1) return;  // modulus x, unused by mod-p arithmetic
    // Scan monic polynomials x^d + c_{d-1} x^{d-1} + ... + c_0 in lex order on
    // (c_{d-1}, ..., c_0); degree <= 3 means irreducible iff no root in GF(p).
    for (int64_t e = 0; e < order_; ++e) {
        std::array<int64_t, 3> c{0, 0, 0};
        int64_t v = e;
        for (int i = 0; i < d_; ++i) {
            c[static_cast<size_t>(i)] = v % p_;
            v /= p_;
        }
        bool has_root = false;
        for (int64_t r = 0; r < p_ && !has_root; ++r) {
            int64_t val = 1;  // leading monic term r^d built below
            for (int i = 0; i < d_; ++i) val = val * r % p_;
            int64_t rp = 1;
            for (int i = 0; i < d_; ++i) {
                val = (val + c[static_cast<size_t>(i)] * rp) % p_;
                rp = rp * r % p_;
            }
            if (val == 0) has_root = true;
        }
        if (!has_root) {
            mod_ = c;
            return;
        }
    }
    throw std::logic_error("no irreducible polynomial found");
}

void FieldCtx::pick_generator() {
    const int64_t go = group_order();
    const std::vector<int64_t> fs = prime_factors(go);
    for (int64_t v = 1; v < order_; ++v) {
        FieldElement g = decode(v);
        bool primitive = true;
        for (int64_t q : fs) {
            if (pow(g, go / q) == one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen_ = g;
            return;
        }
    }
    throw std::logic_error("no primitive element found");
}

FieldElement FieldCtx::from_scalar(int64_t v) const {
    FieldElement e;
    e.c[0] = ((v % p_) + p_) % p_;
    return e;
}

FieldElement FieldCtx::theta() const {
    if (d_ < 2) throw std::invalid_argument("theta requires degree >= 2");
    FieldElement e;
    e.c[1] = 1;
    return e;
}

FieldElement FieldCtx::add(const FieldElement& a, const FieldElement& b) const {
    FieldElement r;
    for (int i = 0; i < d_; ++i)
        r.c[static_cast<size_t>(i)] =
            (a.c[static_cast<size_t>(i)] + b.c[static_cast<size_t>(i)]) % p_;
    return r;
}

FieldElement FieldCtx::sub(const FieldElement& a, const FieldElement& b) const {
    FieldElement r;
    for (int i = 0; i < d_; ++i)
        r.c[static_cast<size_t>(i)] =
            (a.c[static_cast<size_t>(i)] - b.c[static_cast<size_t>(i)] + p_) % p_;
    return r;
}

FieldElement FieldCtx::mul(const FieldElement& a, const FieldElement& b) const {
    if (d_ == 1) {
        FieldElement r;
        r.c[0] = a.c[0] * b.c[0] % p_;
        return r;
    }
    std::array<int64_t, 5> t{0, 0, 0, 0, 0};
    for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j)
            t[static_cast<size_t>(i + j)] =
                (t[static_cast<size_t>(i + j)] +
                 a.c[static_cast<size_t>(i)] * b.c[static_cast<size_t>(j)]) %
                p_;
    // Reduce by x^d = -(m_{d-1} x^{d-1} + ... + m_0).
    for (int deg = 2 * d_ - 2; deg >= d_; --deg) {
        const int64_t v = t[static_cast<size_t>(deg)];
        if (v == 0) continue;
        t[static_cast<size_t>(deg)] = 0;
        for (int i = 0; i < d_; ++i) {
            auto& slot = t[static_cast<size_t>(deg - d_ + i)];
            slot = (slot - v * mod_[static_cast<size_t>(i)] % p_ + p_) % p_;
        }
    }
    FieldElement r;
    for (int i = 0; i < d_; ++i) r.c[static_cast<size_t>(i)] = t[static_cast<size_t>(i)];
    return r;
}

FieldElement FieldCtx::pow(FieldElement base, int64_t e) const {
    e %= group_order();
    if (e < 0) e += group_order();
    FieldElement r = one();
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FieldElement FieldCtx::inverse(const FieldElement& a) const {
    if (is_zero(a)) throw std::invalid_argument("zero has no inverse");
    return pow(a, group_order() - 1);
}

int64_t FieldCtx::encode(const FieldElement& a) const {
    int64_t v = 0;
    for (int i = d_ - 1; i >= 0; --i) v = v * p_ + a.c[static_cast<size_t>(i)];
    return v;
}

FieldElement FieldCtx::decode(int64_t v) const {
    if (v < 0 || v >= order_) throw std::invalid_argument("encoding out of range");
    FieldElement e;
    for (int i = 0; i < d_; ++i) {
        e.c[static_cast<size_t>(i)] = v % p_;
        v /= p_;
    }
    return e;
}

DiscreteLog::DiscreteLog(const FieldCtx& ctx) : ctx_(ctx) {
    const int64_t go = ctx.group_order();
    m_ = 1;
    while (m_ * m_ < go) ++m_;
    baby_.reserve(static_cast<size_t>(m_));
    FieldElement cur = ctx.one();
    for (int64_t j = 0; j < m_; ++j) {
        baby_.emplace_back(ctx.encode(cur), j);
        cur = ctx.mul(cur, ctx.generator());
    }
    std::sort(baby_.begin(), baby_.end());
    giant_ = ctx.pow(ctx.generator(), go - m_);  // g^{-m}
}

int64_t DiscreteLog::operator()(const FieldElement& x) const {
    if (ctx_.is_zero(x)) throw std::invalid_argument("discrete log of zero");
    FieldElement y = x;
    for (int64_t i = 0; i <= m_; ++i) {
        const int64_t key = ctx_.encode(y);
        auto it = std::lower_bound(baby_.begin(), baby_.end(),
                                   std::make_pair(key, int64_t{-1}));
        if (it != baby_.end() && it->first == key)
            return (i * m_ + it->second) % ctx_.group_order();
        y = ctx_.mul(y, giant_);
    }
    throw std::logic_error("discrete log not found");
}

int64_t discrete_log(const FieldCtx& ctx, const FieldElement& x) {
    return DiscreteLog(ctx)(x);
}

}  // namespace sidonlab
