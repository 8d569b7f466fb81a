#pragma once

// Exact arithmetic: rationals, residues in Q/Z, 2x2 symmetric integer
// matrices and square matrices over the two-element field.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ks7::exactmath {

using Integer = mpz_class;

/// Reduced fraction with positive denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long n) : value_(n) {}
    Rational(const Integer& n) : value_(n) {}
    Rational(const Integer& num, const Integer& den);

    static Rational from_mpq(const mpq_class& q) { return Rational(q); }

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    const mpq_class& mpq() const { return value_; }

    bool is_integer() const { return value_.get_den() == 1; }
    Integer floor() const;

    /// "p/q" with q >= 1, always including the denominator.
    std::string to_string() const;
    /// Parses "p/q" or "p".
    static Rational parse(const std::string& text);

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    explicit Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Element of Q/Z stored as its representative in [0, 1).
class QmodZ {
public:
    QmodZ() = default;
    QmodZ(const Rational& q);

    const Rational& residue() const { return residue_; }
    bool is_zero() const { return residue_ == Rational(0); }
    std::string to_string() const { return residue_.to_string(); }

    QmodZ operator-() const { return QmodZ(-residue_); }
    friend QmodZ operator+(const QmodZ& a, const QmodZ& b) { return QmodZ(a.residue_ + b.residue_); }
    friend QmodZ operator-(const QmodZ& a, const QmodZ& b) { return QmodZ(a.residue_ - b.residue_); }
    friend QmodZ operator*(const Integer& n, const QmodZ& a) { return QmodZ(Rational(n) * a.residue_); }
    friend QmodZ operator*(long n, const QmodZ& a) { return QmodZ(Rational(n) * a.residue_); }

    friend bool operator==(const QmodZ& a, const QmodZ& b) { return a.residue_ == b.residue_; }
    friend auto operator<=>(const QmodZ& a, const QmodZ& b) { return a.residue_ <=> b.residue_; }

private:
    Rational residue_;
};

std::ostream& operator<<(std::ostream& os, const QmodZ& q);

/// q - floor(q).
QmodZ qmodz_reduce(const Rational& q);

/// Column vector in Z^2.
struct Vec2 {
    Integer x;
    Integer y;
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// [[a, b], [b, c]].
struct SymMat2 {
    Integer a;
    Integer b;
    Integer c;

    Integer det() const { return a * c - b * b; }
    Integer trace() const { return a + c; }
    bool is_zero() const { return a == 0 && b == 0 && c == 0; }

    Vec2 apply(const Vec2& v) const { return {a * v.x + b * v.y, b * v.x + c * v.y}; }
    /// v^T M w.
    Integer pair(const Vec2& v, const Vec2& w) const;

    friend bool operator==(const SymMat2&, const SymMat2&) = default;
};

/// Signature of the real quadratic form: det<0 -> 0, det>0 -> 2 sign(a),
/// rank one -> sign(trace), zero -> 0.
int mat2_signature(const SymMat2& m);

/// Exact inverse of a unimodular matrix. Throws NonUnimodular otherwise.
SymMat2 mat2_inverse(const SymMat2& m);

/// P^T M P for P = [[p00, p01], [p10, p11]].
SymMat2 congruent(const SymMat2& m, const Integer& p00, const Integer& p01,
                  const Integer& p10, const Integer& p11);

/// Square matrix over F_2.
class F2Matrix {
public:
    explicit F2Matrix(std::size_t n);

    static F2Matrix identity(std::size_t n);
    /// Symmetric, zero diagonal; bit t of `mask` fills the t-th strictly
    /// upper-triangular entry in row-major order. Uses n(n-1)/2 bits.
    static F2Matrix symmetric_zero_diagonal(std::size_t n, std::uint64_t mask);

    std::size_t size() const { return n_; }
    bool at(std::size_t i, std::size_t j) const { return bits_[i * n_ + j] != 0; }
    void set(std::size_t i, std::size_t j, bool bit) { bits_[i * n_ + j] = bit ? 1 : 0; }

    bool is_symmetric_zero_diagonal() const;

private:
    std::size_t n_;
    std::vector<std::uint8_t> bits_;
};

/// Determinant over F_2 by Gaussian elimination.
bool f2_det(const F2Matrix& m);

} // namespace ks7::exactmath
