#include "ks7/kreckstolz.hpp"

#include "ks7/errors.hpp"

namespace ks7::kreckstolz {

using sixfold::SpinType;

namespace {

Rational frac(const Integer& num, long den) { return Rational(num, Integer(den)); }

bool is_even(const Integer& x) { return mpz_even_p(x.get_mpz_t()) != 0; }

void require(bool condition, const char* what)
{
    if (!condition)
        throw PreconditionViolation(what);
}

} // namespace

PairingData pairing_data_type1(const TypeIBase& base)
{
    const auto& f = base.form;
    SymMat2 me = f.cup_with_e();
    SymMat2 inv = exactmath::mat2_inverse(me);

    PairingData d;
    d.pairing = me;
    d.sigma = exactmath::mat2_signature(me);
    d.c2 = {1, 0};
    d.zc = {0, 1};
    // f^2 = C e* + D f* = e (e, f) M_e^{-1} (C, D)^T
    d.z2 = inv.apply({f.C, f.D});
    // p1(D_e) = pi^*(p1(N) + e^2)
    DegFourClass p1n = inv.apply({base.k(), base.l()});
    d.p1 = {Integer(p1n.x + 1), p1n.y};
    return d;
}

PairingData pairing_data_type2(const TypeIIBase& base)
{
    if (!sixfold::validate_type2(base).ok())
        throw PreconditionViolation("type II base requires epsilon = +1 or -1");
    // M_e is singular here; ef = eps A e^2 and f^2 = A^2 e^2 give the
    // representatives directly.
    PairingData d;
    d.pairing = base.form().cup_with_e();
    d.sigma = exactmath::mat2_signature(d.pairing);
    d.c2 = {1, 0};
    d.zc = {0, 1};
    d.z2 = {Integer(base.A * base.A), 0};
    d.p1 = {Integer(5 + 24 * base.epsilon * base.u), 0};
    return d;
}

CharNumbers char_numbers(const PairingData& d)
{
    const auto& P = d.pairing;
    CharNumbers ch;
    ch.sigma = d.sigma;
    ch.p1_sq = P.pair(d.p1, d.p1);
    ch.c2_p1 = P.pair(d.c2, d.p1);
    ch.zc_p1 = P.pair(d.zc, d.p1);
    ch.z2_p1 = P.pair(d.z2, d.p1);
    ch.c4 = P.pair(d.c2, d.c2);
    ch.zc_c2 = P.pair(d.zc, d.c2);
    ch.zc_zc = P.pair(d.zc, d.zc);
    ch.z2_c2 = P.pair(d.z2, d.c2);
    ch.z2_zc = P.pair(d.z2, d.zc);
    ch.z4 = P.pair(d.z2, d.z2);
    return ch;
}

CharNumbers char_numbers_type1(const TypeIBase& base) { return char_numbers(pairing_data_type1(base)); }

CharNumbers char_numbers_type2(const TypeIIBase& base) { return char_numbers(pairing_data_type2(base)); }

SInvariants SInvariants::from(const QmodZ& s1, const QmodZ& s2, const QmodZ& s3)
{
    return {s1, 28 * s1, s2, s3};
}

SValues s_values(const CharNumbers& ch, bool coboundary_spin)
{
    const Integer zero = 0;
    const Integer& c2_p1 = coboundary_spin ? zero : ch.c2_p1;
    const Integer& zc_p1 = coboundary_spin ? zero : ch.zc_p1;
    const Integer& c4 = coboundary_spin ? zero : ch.c4;
    const Integer& z3c = coboundary_spin ? zero : ch.z2_zc;
    const Integer& z2c2 = coboundary_spin ? zero : ch.z2_c2;
    const Integer& zc3 = coboundary_spin ? zero : ch.zc_c2;

    SValues s;
    s.S1 = frac(-ch.sigma, 224) + frac(ch.p1_sq, 896) - frac(c2_p1, 192) + frac(c4, 384);
    s.S2 = frac(Integer(-(ch.z2_p1 + zc_p1)), 48) + frac(Integer(2 * ch.z4 + 4 * z3c + 3 * z2c2 + zc3), 48);
    s.S3 = frac(Integer(-(2 * ch.z2_p1 + zc_p1)), 24)
           + frac(Integer(16 * ch.z4 + 16 * z3c + 6 * z2c2 + zc3), 24);
    return s;
}

SInvariants s_invariants_generic(const CharNumbers& ch, bool coboundary_spin)
{
    SValues s = s_values(ch, coboundary_spin);
    return SInvariants::from(s.S1, s.S2, s.S3);
}

bool coboundary_is_spin(const TypeIBase& base) { return base.spin == SpinType::NonspinE; }

SInvariants s_invariants_type1(const TypeIBase& base)
{
    return s_invariants_generic(char_numbers_type1(base), coboundary_is_spin(base));
}

SInvariants s_invariants_type2(const TypeIIBase& base)
{
    return s_invariants_generic(char_numbers_type2(base), false);
}

SInvariants s_closed_type1_spin(const Integer& A, const Integer& B, const Integer& C, const Integer& D,
                                const Integer& u, const Integer& v)
{
    require(is_even(A) && !is_even(B) && !is_even(C),
            "closed form (spin) requires A even and B, C odd");
    require(A * C - B * B == -1, "closed form (spin) requires AC - B^2 = -1");

    const Integer BmD = B - D;
    Rational s1 = frac(Integer(-9 * (C * u * u - 2 * B * u * v + A * v * v)), 14)
                  + frac(Integer((2 - 3 * B * BmD) * u), 14) + frac(Integer(3 * A * BmD * v), 14)
                  + frac(A, 224) - frac(Integer(A * BmD * BmD), 56);
    Rational s1x28 = frac(A, 8);
    Rational s2 = frac(Integer((1 + D) * u), 2) + frac(Integer(2 * A * C * C - 2 * A * B * D + A * D * D), 24);
    Rational s3 = frac(Integer(A * C * C - A * B * D - A * D * D), 3) + frac(Integer(D + 1), 2);
    return {s1, s1x28, s2, s3};
}

SInvariants s_closed_type1_nonspin(const Integer& A, const Integer& B, const Integer& C, const Integer& D,
                                   const Integer& u, const Integer& v)
{
    require(is_even(A) && is_even(C) && !is_even(B),
            "closed form (nonspin) requires A, C even and B odd");
    require(A * C - B * B == -1, "closed form (nonspin) requires AC - B^2 = -1");

    // The u coefficient 3(B^2 + 3BC + 2BD + 1)/14 is p1^2/896 reduced with
    // AC = B^2 - 1; the constant 1 is easy to lose and shifts r = 28 s1 by 6u.
    Rational s1 = frac(Integer(-9 * (4 * C * u * u - 4 * B * u * v + A * v * v)), 14)
                  + frac(Integer(3 * (B * B + 3 * B * C + 2 * B * D + 1) * u), 14)
                  - frac(Integer(3 * (A * B + 3 * A * C + 2 * A * D) * v), 28)
                  - frac(Integer(A * A * C + 6 * A * B * C + 4 * A * B * D + 9 * A * C * C + 4 * A * D * D
                                 + 12 * A * C * D),
                         224);
    Rational s2 = -frac(Integer(B * B * C + 3 * B * C * C - A * B * D - 3 * A * C * D - A * D * D + C + C * C * C), 24);
    Rational s3 = -frac(Integer(B * B * C - A * B * D + 2 * A * D * D + C + C * C * C), 6);

    SInvariants out{s1, QmodZ(), s2, s3};
    if (out.s3 != 4 * out.s2)
        throw IntegralityFailure("nonspin closed form: s3 != 4 s2");
    return out;
}

SInvariants s_closed_type2(const Integer& epsilon, const Integer& A, const Integer& u)
{
    (void)A; // the invariants do not depend on A
    require(epsilon == 1 || epsilon == -1, "closed form (type II) requires epsilon = +1 or -1");
    return SInvariants::from(frac(Integer(9 * epsilon * u * u + 2 * u), 14), QmodZ(), QmodZ());
}

SInvariants s_closed_type1(const TypeIBase& base)
{
    const auto& f = base.form;
    if (base.spin == SpinType::Spin)
        return s_closed_type1_spin(f.A, f.B, f.C, f.D, base.u, base.v);
    return s_closed_type1_nonspin(f.A, f.B, f.C, f.D, base.u, base.v);
}

IntegralS s_type2_integrality(const Integer& epsilon, const Integer& A, const Integer& u)
{
    require(epsilon == 1 || epsilon == -1, "type II integrality requires epsilon = +1 or -1");
    const Integer& e = epsilon;
    Rational S2 = frac(Integer(e * A * (A + 1) * (A - 1) * (A + 2 * e)), 24) - frac(Integer(u * A * (A + e)), 2);
    Rational S3 = frac(Integer(e * A * (A + e) * (2 * A + 1) * (2 * A - 1)), 6) - Rational(Integer(e * u * A * (2 * e * A + 1)));
    if (!S2.is_integer() || !S3.is_integer())
        throw IntegralityFailure("type II S-values not integral at eps=" + e.get_str() + ", A=" + A.get_str()
                                 + ", u=" + u.get_str() + ": S2=" + S2.to_string() + ", S3=" + S3.to_string());
    return {S2.numerator(), S3.numerator()};
}

SInvariants target_invariants_type1(const Integer& r)
{
    return SInvariants::from(frac(r, 28), QmodZ(), QmodZ());
}

SInvariants target_invariants_type2(const Integer& r)
{
    return SInvariants::from(frac(r, 28), QmodZ(), QmodZ());
}

bool same_diffeo_class(const SInvariants& a, const SInvariants& b)
{
    return a.s1 == b.s1 && a.s2 == b.s2 && a.s3 == b.s3;
}

bool same_homeo_class(const SInvariants& a, const SInvariants& b)
{
    return a.s1_times_28 == b.s1_times_28 && a.s2 == b.s2 && a.s3 == b.s3;
}

STriple s2_basis_transition(const STriple& sI) { return {sI[0], sI[1], sI[2] - 16 * sI[1]}; }

STriple s2_basis_transition_inverse(const STriple& sII) { return {sII[0], sII[1], sII[2] + 16 * sII[1]}; }

} // namespace ks7::kreckstolz
