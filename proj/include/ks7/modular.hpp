#pragma once

// Legendre symbols, the two-variable quadratic counting formula and its
// brute-force oracle, and Chinese remainder solving.

#include "ks7/exactmath.hpp"

#include <vector>

namespace ks7::modular {

using exactmath::Integer;

/// Trial division; fine for the small moduli used here.
bool is_odd_prime(long p);

/// Legendre symbol (a/p) in {-1, 0, 1} via Euler's criterion.
/// Throws NotAnOddPrime.
int legendre(const Integer& a, long p);

/// Number of (x, y) in (Z/p)^2 with a x^2 + b y^2 = c (mod p), by the
/// closed form
///   p + (-ab/p)(p-1)   if p | c,
///   p - (-ab/p)        otherwise.
/// Throws BadInput if p | ab, NotAnOddPrime if p is not an odd prime.
long count_quadratic_solutions(const Integer& a, const Integer& b, const Integer& c, long p);

/// Same count by enumerating all p^2 pairs.
long count_quadratic_solutions_oracle(const Integer& a, const Integer& b, const Integer& c, long p);

struct Congruence {
    Integer modulus;
    Integer residue;
};

struct CrtSolution {
    Integer residue; // in [0, modulus)
    Integer modulus;
    friend bool operator==(const CrtSolution&, const CrtSolution&) = default;
};

/// Solves x = r_i (mod m_i) for pairwise coprime positive moduli.
/// Throws NotCoprime, or BadInput for a non-positive modulus.
CrtSolution crt_solve(const std::vector<Congruence>& system);

} // namespace ks7::modular
