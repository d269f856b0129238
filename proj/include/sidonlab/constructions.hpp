// Classic dense Sidon set constructions plus the greedy Mian-Chowla baseline.

#pragma once

#include <cstdint>
#include <string>

#include "sidonlab/sidon.hpp"

namespace sidonlab {

enum class Family { erdos_turan, bose, singer, mian_chowla };

std::string family_name(Family f);
Family parse_family(const std::string& name);  // accepts "erdos-turan" etc.

// Bose: p elements inside [p^2 - 1], Sidon even modulo p^2 - 1, as the
// discrete logs of g + c (c in GF(p)) for the canonical primitive g of GF(p^2).
SidonSet bose(int64_t p);

// Erdos-Turan: {2p*i + (i^2 mod p) + 1 : 0 <= i < p} inside [2p^2].
SidonSet erdos_turan(int64_t p);

// Singer perfect difference set mod q^2 + q + 1 via GF(q^3), representatives
// in [1, q^2 + q + 1]; q + 1 elements. For q <= 100 the perfect-difference
// property is checked exhaustively.
SidonSet singer(int64_t q);

// Greedy sequence 1, 2, 5, 11, 22, 40, 56, ...; ambient bound is the last
// element.
SidonSet mian_chowla(int64_t k);

SidonSet construct(Family f, int64_t param);

// All ordered differences distinct modulo m (cyclic-group Sidon property).
bool is_sidon_mod(const std::vector<int64_t>& elements, int64_t m);

}  // namespace sidonlab
