#pragma once

#include <cstdint>
#include <vector>

#include "pidisc/rng.hpp"
#include "pidisc/scalar.hpp"

namespace pidisc {

// Dense univariate polynomials over F_p, just enough for minimal-polynomial
// factorization during block decomposition. Coefficient vectors are trimmed.
namespace fpuni {

using Poly = std::vector<std::uint64_t>; // coeffs[i] mod p, ascending degree

Poly trim(Poly a);
bool is_zero(const Poly& a);
long long degree(const Poly& a);
Poly add(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
Poly scale(const Poly& a, std::uint64_t c, std::uint64_t p);
Poly monic(const Poly& a, std::uint64_t p);
// division with remainder; divisor nonzero
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint64_t p);
Poly mod(const Poly& a, const Poly& b, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
Poly derivative(const Poly& a, std::uint64_t p);
// base^e mod m, e as 128-bit to cover p^d exponents
Poly powmod(const Poly& base, unsigned __int128 e, const Poly& m, std::uint64_t p);

// complete factorization of a squarefree monic polynomial into monic irreducibles,
// by distinct-degree splitting then Cantor-Zassenhaus (p odd)
std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t p, Rng& rng);

bool is_squarefree(const Poly& f, std::uint64_t p);

} // namespace fpuni

} // namespace pidisc
