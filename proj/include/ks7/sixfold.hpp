#pragma once

// Orbit 6-manifolds with b2 = 2 and H^3 = 0, described by the cubic form on
// an ordered basis (e, f) of H^2 (e the Euler class of the circle bundle),
// the spin type, and the first Pontryagin class in the dual basis.

#include "ks7/exactmath.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ks7::sixfold {

using exactmath::Integer;
using exactmath::SymMat2;

enum class SpinType {
    Spin,     ///< w2(N) = 0
    NonspinE, ///< w2(N) = reduction of e
};

std::string to_string(SpinType s);
/// Accepts "spin" and "nonspinE" (also "nonspin").
SpinType spin_type_from_string(const std::string& s);

/// mu(e,e,e), mu(e,e,f), mu(e,f,f), mu(f,f,f).
struct CubicForm {
    Integer A;
    Integer B;
    Integer C;
    Integer D;

    /// Matrix of x -> e x from H^2 to H^4 in the dual bases.
    SymMat2 cup_with_e() const { return {A, B, C}; }

    friend bool operator==(const CubicForm&, const CubicForm&) = default;
};

/// Base of a type I total space: p1(N) = k e* + l f* with
///   Spin:     k = 24u + 4A,  l = 24v + 4D
///   NonspinE: k = 48u + A,   l = 24v + 3B + 6C + 4D
struct TypeIBase {
    SpinType spin = SpinType::Spin;
    CubicForm form;
    Integer u;
    Integer v;

    Integer k() const;
    Integer l() const;

    friend bool operator==(const TypeIBase&, const TypeIBase&) = default;
};

/// Base of a type II total space: cubic form (eps, A, eps A^2, A^3),
/// spin, p1(N) = (4 eps + 24u)(e* + eps A f*).
struct TypeIIBase {
    Integer epsilon{1};
    Integer A;
    Integer u;

    CubicForm form() const;
    friend bool operator==(const TypeIIBase&, const TypeIIBase&) = default;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate_type1(const TypeIBase& base);
ValidationReport validate_type2(const TypeIIBase& base);

/// Parity conditions obtained from the Wu formula on H^4(N; Z/2):
/// Spin -> B + C even; NonspinE -> A and C even.
bool wu_parity_constraints(SpinType spin, const CubicForm& form);

/// p1(N) mod 2 = w2(N)^2: Spin -> k, l even; NonspinE -> k = A, l = B mod 2.
bool p1_mod2_constraint(SpinType spin, const CubicForm& form, const Integer& k, const Integer& l);

/// Jupp's relation mu(w+2x, w+2x, w+2x) = <p1 (w+2x), [N]> mod 48 checked on
/// every residue class of x = Xe + Yf. With w = 0 (spin) this is
///   4X^3 A + 12X^2 Y B + 12X Y^2 C + 4Y^3 D = kX + lY (mod 24),
/// and with w = e (nonspin), writing X' = 2X + 1,
///   X'^3 A + 6X'^2 Y B + 12X' Y^2 C + 8Y^3 D = kX' + 2lY (mod 48).
bool jupp_check(SpinType spin, const CubicForm& form, const Integer& k, const Integer& l);

struct JuppSolution {
    long k_modulus; ///< 24 (spin) or 48 (nonspin)
    long l_modulus; ///< 24
    std::set<std::pair<long, long>> residues;
};

/// All (k mod K, l mod L) satisfying jupp_check, by exhaustive enumeration.
/// Throws ParityViolation if the form fails wu_parity_constraints.
JuppSolution jupp_solve(SpinType spin, const CubicForm& form);

} // namespace ks7::sixfold
