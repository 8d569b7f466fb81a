#include "ks7/modular.hpp"

#include "ks7/errors.hpp"

#include <string>

namespace ks7::modular {

namespace {

long mod_p(const Integer& a, long p)
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(p));
    return r.get_si();
}

void require_odd_prime(long p)
{
    if (!is_odd_prime(p))
        throw NotAnOddPrime(std::to_string(p) + " is not an odd prime");
}

} // namespace

bool is_odd_prime(long p)
{
    if (p < 3 || p % 2 == 0)
        return false;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

int legendre(const Integer& a, long p)
{
    require_odd_prime(p);
    Integer base = mod_p(a, p);
    if (base == 0)
        return 0;
    Integer r;
    Integer exponent = (p - 1) / 2;
    Integer modulus = p;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
    return r == 1 ? 1 : -1;
}

long count_quadratic_solutions(const Integer& a, const Integer& b, const Integer& c, long p)
{
    require_odd_prime(p);
    if (mod_p(Integer(a * b), p) == 0)
        throw BadInput("count_quadratic_solutions: p divides ab");
    int symbol = legendre(Integer(-a * b), p);
    if (mod_p(c, p) == 0)
        return p + symbol * (p - 1);
    return p - symbol;
}

long count_quadratic_solutions_oracle(const Integer& a, const Integer& b, const Integer& c, long p)
{
    require_odd_prime(p);
    const long ar = mod_p(a, p);
    const long br = mod_p(b, p);
    const long cr = mod_p(c, p);
    long count = 0;
    for (long x = 0; x < p; ++x)
        for (long y = 0; y < p; ++y)
            if ((ar * x % p * x + br * y % p * y) % p == cr)
                ++count;
    return count;
}

CrtSolution crt_solve(const std::vector<Congruence>& system)
{
    CrtSolution acc{0, 1};
    for (const auto& [m, r] : system) {
        if (m <= 0)
            throw BadInput("crt_solve: modulus must be positive, got " + m.get_str());
        Integer g = gcd(acc.modulus, m);
        if (g != 1)
            throw NotCoprime("crt_solve: moduli " + acc.modulus.get_str() + " and " + m.get_str()
                             + " share the factor " + g.get_str());
        // x = acc.residue + acc.modulus * t, with t = (r - acc.residue) / acc.modulus (mod m)
        Integer inv;
        Integer mm = m;
        mpz_invert(inv.get_mpz_t(), acc.modulus.get_mpz_t(), mm.get_mpz_t());
        Integer t = Integer(r - acc.residue) * inv;
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), mm.get_mpz_t());
        Integer next_modulus = acc.modulus * m;
        Integer next = acc.residue + acc.modulus * t;
        mpz_fdiv_r(next.get_mpz_t(), next.get_mpz_t(), next_modulus.get_mpz_t());
        acc = {next, next_modulus};
    }
    return acc;
}

} // namespace ks7::modular
