#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tame/poly.hpp"

namespace tame {

/* Monic irreducible factors with multiplicities; input non-zero.  The
   splitting randomness is seeded from the input, so results are stable. */
std::vector<std::pair<Poly, int>> factor_poly(const Poly& f);

/* Roots in the coefficient field, each listed once, sorted by encoding. */
std::vector<uint64_t> poly_roots(const Poly& f);

bool is_irreducible(const Poly& f);

/* a^e mod m with a 128-bit exponent. */
Poly powmod(const Poly& a, unsigned __int128 e, const Poly& m);

}  // namespace tame
