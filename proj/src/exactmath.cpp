#include "ks7/exactmath.hpp"

#include "ks7/errors.hpp"

#include <ostream>

namespace ks7::exactmath {

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw BadInput("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.value_ == 0)
        throw BadInput("division by zero");
    return Rational(mpq_class(a.value_ / b.value_));
}

Integer Rational::floor() const
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

std::string Rational::to_string() const
{
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::parse(const std::string& text)
{
    auto slash = text.find('/');
    Integer num, den{1};
    try {
        if (slash == std::string::npos) {
            num = Integer(text);
        } else {
            num = Integer(text.substr(0, slash));
            den = Integer(text.substr(slash + 1));
        }
    } catch (const std::invalid_argument&) {
        throw BadInput("not a rational: '" + text + "'");
    }
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

QmodZ::QmodZ(const Rational& q) : residue_(q - Rational(q.floor())) {}

std::ostream& operator<<(std::ostream& os, const QmodZ& q) { return os << q.to_string(); }

QmodZ qmodz_reduce(const Rational& q) { return QmodZ(q); }

Integer SymMat2::pair(const Vec2& v, const Vec2& w) const
{
    Vec2 mw = apply(w);
    return Integer(v.x * mw.x + v.y * mw.y);
}

namespace {
int sign(const Integer& x) { return sgn(x); }
} // namespace

int mat2_signature(const SymMat2& m)
{
    Integer d = m.det();
    if (d < 0)
        return 0;
    if (d > 0)
        return 2 * sign(m.a);
    if (m.is_zero())
        return 0;
    // rank one: the nonzero eigenvalue equals the trace
    return sign(m.trace());
}

SymMat2 mat2_inverse(const SymMat2& m)
{
    Integer d = m.det();
    if (d == 1)
        return {m.c, -m.b, m.a};
    if (d == -1)
        return {-m.c, m.b, -m.a};
    throw NonUnimodular("matrix [[" + m.a.get_str() + "," + m.b.get_str() + "],[" + m.b.get_str() + ","
                        + m.c.get_str() + "]] has determinant " + d.get_str());
}

SymMat2 congruent(const SymMat2& m, const Integer& p00, const Integer& p01, const Integer& p10,
                  const Integer& p11)
{
    Vec2 col0{p00, p10};
    Vec2 col1{p01, p11};
    return {m.pair(col0, col0), m.pair(col0, col1), m.pair(col1, col1)};
}

F2Matrix::F2Matrix(std::size_t n) : n_(n), bits_(n * n, 0)
{
    if (n == 0)
        throw BadInput("F2Matrix size must be positive");
}

F2Matrix F2Matrix::identity(std::size_t n)
{
    F2Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

F2Matrix F2Matrix::symmetric_zero_diagonal(std::size_t n, std::uint64_t mask)
{
    if (n * (n - 1) / 2 > 64)
        throw BadInput("symmetric_zero_diagonal: size too large for a 64-bit mask");
    F2Matrix m(n);
    std::size_t t = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++t) {
            bool bit = (mask >> t) & 1U;
            m.set(i, j, bit);
            m.set(j, i, bit);
        }
    }
    return m;
}

bool F2Matrix::is_symmetric_zero_diagonal() const
{
    for (std::size_t i = 0; i < n_; ++i) {
        if (at(i, i))
            return false;
        for (std::size_t j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i))
                return false;
    }
    return true;
}

bool f2_det(const F2Matrix& m)
{
    const std::size_t n = m.size();
    std::vector<std::vector<std::uint8_t>> rows(n, std::vector<std::uint8_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rows[i][j] = m.at(i, j);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && !rows[pivot][col])
            ++pivot;
        if (pivot == n)
            return false;
        std::swap(rows[pivot], rows[col]); // row swaps do not change the sign mod 2
        for (std::size_t r = col + 1; r < n; ++r)
            if (rows[r][col])
                for (std::size_t j = col; j < n; ++j)
                    rows[r][j] ^= rows[col][j];
    }
    return true;
}

} // namespace ks7::exactmath
