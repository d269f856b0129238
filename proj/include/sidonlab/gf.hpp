// Small finite fields GF(p^d), d <= 3, in a fixed canonical representation.
//
// Elements are coefficient vectors (a_0, ..., a_{d-1}) modulo a canonical
// monic irreducible polynomial; the integer encoding of an element is
// sum a_i p^i, which makes "smallest" well defined for canonicalization.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace sidonlab {

struct FieldElement {
    std::array<int64_t, 3> c{0, 0, 0};  // coefficients of 1, x, x^2

    bool operator==(const FieldElement&) const = default;
};

class FieldCtx {
public:
    // Canonical context: lexicographically smallest monic irreducible modulus
    // (constant term last in the lex tuple), smallest-encoding primitive
    // element. Deterministic per (p, d). Throws std::invalid_argument if p is
    // not prime or d is not in {1, 2, 3}.
    FieldCtx(int64_t p, int d);

    int64_t p() const { return p_; }
    int d() const { return d_; }
    int64_t order() const { return order_; }          // p^d
    int64_t group_order() const { return order_ - 1; }
    const std::array<int64_t, 3>& modulus() const { return mod_; }
    FieldElement generator() const { return gen_; }

    FieldElement zero() const { return {}; }
    FieldElement one() const { return from_scalar(1); }
    FieldElement from_scalar(int64_t v) const;
    FieldElement theta() const;  // the polynomial variable x (requires d >= 2)

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement pow(FieldElement base, int64_t e) const;
    FieldElement inverse(const FieldElement& a) const;

    bool is_zero(const FieldElement& a) const { return a == FieldElement{}; }
    int64_t encode(const FieldElement& a) const;  // sum a_i p^i
    FieldElement decode(int64_t v) const;

private:
    int64_t p_ = 0;
    int d_ = 0;
    int64_t order_ = 0;
    std::array<int64_t, 3> mod_{0, 0, 0};  // modulus minus x^d: coeffs of 1, x, x^2
    FieldElement gen_;

    void pick_modulus();
    void pick_generator();
};

// Baby-step/giant-step table over a field context; reusable across queries.
class DiscreteLog {
public:
    explicit DiscreteLog(const FieldCtx& ctx);

    // Unique a in [0, p^d - 2] with g^a = x. Throws on x = 0.
    int64_t operator()(const FieldElement& x) const;

private:
    const FieldCtx& ctx_;
    int64_t m_ = 0;                       // ceil(sqrt(group order))
    FieldElement giant_;                  // g^{-m}
    std::vector<std::pair<int64_t, int64_t>> baby_;  // (encoding, exponent), sorted
};

// One-shot convenience wrapper.
int64_t discrete_log(const FieldCtx& ctx, const FieldElement& x);

// Deterministic primality test (trial division + Miller-Rabin for 64-bit).
bool is_prime(int64_t n);

// Prime factors of n without multiplicity, by trial division.
std::vector<int64_t> prime_factors(int64_t n);

}  // namespace sidonlab
