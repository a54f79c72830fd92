#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "betaseries/polynomial.hpp"

namespace betaseries {

/// gcd(f, f') is constant over Q.
bool is_squarefree(const Polynomial& f);

/// A nontrivial monic factor of the monic polynomial `f` over Z, or nullopt
/// if `f` is irreducible over Q. Uses modular factorization (distinct
/// degree plus Cantor-Zassenhaus), a degree-set sieve over several primes,
/// and Hensel lifting with subset recombination when the sieve is
/// inconclusive.
std::optional<Polynomial> find_factor(const Polynomial& f);

inline bool is_irreducible(const Polynomial& f) { return f.degree() >= 1 && !find_factor(f); }

namespace modp {

using Poly = std::vector<std::uint64_t>;  // ascending, trimmed

// Irreducible monic factors of a squarefree f mod p (odd p).
std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t p, std::uint64_t seed);

Poly reduce(const Polynomial& f, std::uint64_t p);

}  // namespace modp

}  // namespace betaseries
