#pragma once

// Kreck-Stolz s-invariants of circle-bundle total spaces N_e, computed on
// the disc-bundle coboundary D_e.
//
// Every degree-4 class on D_e used here has the form pi^*(e (x e + y f)),
// and the product of two such classes evaluates to (x1, y1) P (x2, y2)^T
// where P is the matrix of cup-with-e. The characteristic numbers are
// therefore computed by a single pairing routine from representatives of
// c^2, z c, z^2 and p1(D_e).

#include "ks7/exactmath.hpp"
#include "ks7/sixfold.hpp"

#include <array>

namespace ks7::kreckstolz {

using exactmath::Integer;
using exactmath::QmodZ;
using exactmath::Rational;
using exactmath::SymMat2;
using sixfold::TypeIBase;
using sixfold::TypeIIBase;

/// The class pi^*(e (x e + y f)) in H^4(D_e).
using DegFourClass = exactmath::Vec2;

/// Characteristic numbers of (D_e, z, c) evaluated on [D_e, N_e].
/// Names read left to right as products of degree-4 classes, e.g. zc_c2 is
/// (zc)(c^2) = z c^3.
struct CharNumbers {
    int sigma = 0;
    Integer p1_sq;
    Integer c2_p1;
    Integer zc_p1;
    Integer z2_p1;
    Integer c4;
    Integer zc_c2;
    Integer zc_zc;
    Integer z2_c2;
    Integer z2_zc;
    Integer z4;

    friend bool operator==(const CharNumbers&, const CharNumbers&) = default;
};

/// Representatives of the degree-4 classes and the pairing they live in.
struct PairingData {
    SymMat2 pairing;
    int sigma = 0;
    DegFourClass c2;
    DegFourClass zc;
    DegFourClass z2;
    DegFourClass p1;
};

PairingData pairing_data_type1(const TypeIBase& base);
PairingData pairing_data_type2(const TypeIIBase& base);
CharNumbers char_numbers(const PairingData& data);

/// Throws NonUnimodular if det M_e is not +-1.
CharNumbers char_numbers_type1(const TypeIBase& base);
/// Throws PreconditionViolation if epsilon is not +-1.
CharNumbers char_numbers_type2(const TypeIIBase& base);

struct SInvariants {
    QmodZ s1;
    QmodZ s1_times_28;
    QmodZ s2;
    QmodZ s3;

    /// s1_times_28 derived from s1.
    static SInvariants from(const QmodZ& s1, const QmodZ& s2, const QmodZ& s3);
    bool consistent() const { return s1_times_28 == 28 * s1; }

    friend bool operator==(const SInvariants&, const SInvariants&) = default;
};

/// Unreduced S_1, S_2, S_3.
struct SValues {
    Rational S1;
    Rational S2;
    Rational S3;
};

/// S-values from characteristic numbers. A spin coboundary takes c = 0, so
/// every monomial containing c is dropped.
SValues s_values(const CharNumbers& ch, bool coboundary_spin);
SInvariants s_invariants_generic(const CharNumbers& ch, bool coboundary_spin);

/// D_e is spin exactly when N is not.
bool coboundary_is_spin(const TypeIBase& base);

/// Generic pipeline end to end.
SInvariants s_invariants_type1(const TypeIBase& base);
SInvariants s_invariants_type2(const TypeIIBase& base);

/// Closed forms for spin bases with det M_e = -1. Throws PreconditionViolation.
SInvariants s_closed_type1_spin(const Integer& A, const Integer& B, const Integer& C, const Integer& D,
                                const Integer& u, const Integer& v);
/// Closed forms for nonspin bases (w2 = e). Throws PreconditionViolation.
/// Also checks s3 = 4 s2 and throws IntegralityFailure if it fails.
SInvariants s_closed_type1_nonspin(const Integer& A, const Integer& B, const Integer& C, const Integer& D,
                                   const Integer& u, const Integer& v);
/// s1 = (9 eps u^2 + 2u)/14, s2 = s3 = 0. Throws PreconditionViolation.
SInvariants s_closed_type2(const Integer& epsilon, const Integer& A, const Integer& u);

/// Dispatches to the closed form matching the base. Throws
/// PreconditionViolation for spin bases with det M_e = +1.
SInvariants s_closed_type1(const TypeIBase& base);

struct IntegralS {
    Integer S2;
    Integer S3;
};

/// The factored type II expressions
///   S2 = eps A(A+1)(A-1)(A+2eps)/24 - uA(A+eps)/2
///   S3 = eps A(A+eps)(2A+1)(2A-1)/6 - eps uA(2eps A+1)
/// evaluated exactly. Throws IntegralityFailure if either is fractional.
IntegralS s_type2_integrality(const Integer& epsilon, const Integer& A, const Integer& u);

/// Invariants of S^2 x S^5 # Sigma_r and S^2 x S^5 # S^3 x S^4 # Sigma_r.
SInvariants target_invariants_type1(const Integer& r);
SInvariants target_invariants_type2(const Integer& r);

/// Same (s1, s2, s3).
bool same_diffeo_class(const SInvariants& a, const SInvariants& b);
/// Same (28 s1, s2, s3).
bool same_homeo_class(const SInvariants& a, const SInvariants& b);

using STriple = std::array<QmodZ, 3>;

/// Type I to type II normalization of the invariants:
///   (s1, s2, s3) -> (s1, s2, s3 - 16 s2).
STriple s2_basis_transition(const STriple& sI);
STriple s2_basis_transition_inverse(const STriple& sII);

} // namespace ks7::kreckstolz
