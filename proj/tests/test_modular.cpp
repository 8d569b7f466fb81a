#include "ks7/errors.hpp"
#include "ks7/modular.hpp"

#include <doctest.h>

#include <iterator>
#include <numeric>
#include <random>
#include <set>

using namespace ks7::modular;
using ks7::exactmath::Integer;

namespace {

// Oracle: Legendre symbol from the set of nonzero squares mod p.
int legendre_by_squares(long a, long p)
{
    long r = ((a % p) + p) % p;
    if (r == 0)
        return 0;
    std::set<long> squares;
    for (long x = 1; x < p; ++x)
        squares.insert(x * x % p);
    return squares.count(r) ? 1 : -1;
}

// Oracle: least nonnegative x satisfying every congruence, by search.
long crt_by_search(const std::vector<std::pair<long, long>>& system, long product)
{
    for (long x = 0; x < product; ++x) {
        bool ok = true;
        for (auto [m, r] : system)
            ok = ok && ((x - r) % m + m) % m == 0;
        if (ok)
            return x;
    }
    return -1;
}

} // namespace

TEST_CASE("is_odd_prime")
{
    CHECK(is_odd_prime(3));
    CHECK(is_odd_prime(13));
    CHECK(is_odd_prime(7919));
    CHECK_FALSE(is_odd_prime(2));
    CHECK_FALSE(is_odd_prime(1));
    CHECK_FALSE(is_odd_prime(0));
    CHECK_FALSE(is_odd_prime(-3));
    CHECK_FALSE(is_odd_prime(9));
    CHECK_FALSE(is_odd_prime(91));
}

TEST_CASE("legendre examples")
{
    CHECK(legendre(2, 7) == 1);
    CHECK(legendre(3, 7) == -1);
    CHECK(legendre(7, 7) == 0);
    CHECK(legendre(-1, 5) == 1);
    CHECK(legendre(-1, 7) == -1);
    CHECK(legendre(Integer("100000000000000000000000000001"), 3) == legendre(Integer("100000000000000000000000000001") % 3, 3));
    CHECK_THROWS_AS(legendre(1, 2), ks7::NotAnOddPrime);
    CHECK_THROWS_AS(legendre(1, 9), ks7::NotAnOddPrime);
    CHECK_THROWS_AS(legendre(1, 1), ks7::NotAnOddPrime);
}

TEST_CASE("legendre matches the set of squares for p <= 31")
{
    for (long p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31})
        for (long a = -2 * p; a <= 2 * p; ++a)
            REQUIRE(legendre(a, p) == legendre_by_squares(a, p));
}

TEST_CASE("legendre is multiplicative")
{
    std::mt19937_64 rng(11);
    const long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 101, 1009};
    std::uniform_int_distribution<long> d(-1000000, 1000000);
    for (int i = 0; i < 10000; ++i) {
        long p = primes[rng() % std::size(primes)];
        long a = d(rng), b = d(rng);
        if (a % p == 0 || b % p == 0)
            continue;
        REQUIRE(legendre(Integer(a) * b, p) == legendre(a, p) * legendre(b, p));
    }
}

TEST_CASE("count_quadratic_solutions examples")
{
    CHECK(count_quadratic_solutions(1, 1, 0, 3) == 1);
    CHECK(count_quadratic_solutions(1, 1, 1, 5) == 4);
    CHECK(count_quadratic_solutions(1, 1, 0, 5) == 9);
    CHECK(count_quadratic_solutions_oracle(1, 1, 0, 3) == 1);
    CHECK(count_quadratic_solutions_oracle(1, 1, 1, 5) == 4);
    CHECK(count_quadratic_solutions_oracle(2, 3, 0, 7) == 13);
    CHECK(count_quadratic_solutions(2, 3, 0, 7) == 13);
    CHECK_THROWS_AS(count_quadratic_solutions(3, 1, 1, 3), ks7::BadInput);
    CHECK_THROWS_AS(count_quadratic_solutions(1, 0, 1, 5), ks7::BadInput);
    CHECK_THROWS_AS(count_quadratic_solutions(1, 1, 1, 4), ks7::NotAnOddPrime);
}

TEST_CASE("counting formula equals brute force and is positive, p <= 13")
{
    for (long p : {3, 5, 7, 11, 13})
        for (long a = 1; a < p; ++a)
            for (long b = 1; b < p; ++b)
                for (long c = 0; c < p; ++c) {
                    // Brute force written out here rather than via the library oracle.
                    long n = 0;
                    for (long x = 0; x < p; ++x)
                        for (long y = 0; y < p; ++y)
                            n += (a * x * x + b * y * y - c) % p == 0;
                    long closed = count_quadratic_solutions(a, b, c, p);
                    REQUIRE(closed == n);
                    REQUIRE(count_quadratic_solutions_oracle(a, b, c, p) == n);
                    REQUIRE(closed >= 1);
                }
}

TEST_CASE("counting formula accepts negative and large coefficients")
{
    CHECK(count_quadratic_solutions(-1, -1, 3, 7) == count_quadratic_solutions_oracle(6, 6, 3, 7));
    CHECK(count_quadratic_solutions(Integer("1000000000000000000001"), 1, -2, 5) ==
          count_quadratic_solutions_oracle(Integer("1000000000000000000001") % 5, 1, 3, 5));
}

TEST_CASE("crt_solve examples")
{
    CHECK(crt_solve({{4, 2}, {7, 3}}) == CrtSolution{10, 28});
    CHECK(crt_solve({{4, 0}, {7, 0}}) == CrtSolution{0, 28});
    CHECK(crt_solve({{3, 1}, {8, 1}}) == CrtSolution{1, 24});
    CHECK(crt_solve({{5, -1}}) == CrtSolution{4, 5});
    CHECK(crt_solve({}) == CrtSolution{0, 1});
    CHECK_THROWS_AS(crt_solve({{4, 1}, {6, 1}}), ks7::NotCoprime);
    CHECK_THROWS_AS(crt_solve({{0, 1}}), ks7::BadInput);
    CHECK_THROWS_AS(crt_solve({{-3, 1}}), ks7::BadInput);
}

TEST_CASE("crt_solve matches search on random coprime systems")
{
    std::mt19937_64 rng(5);
    const long moduli[] = {3, 4, 5, 7, 9, 11, 13, 16};
    for (int i = 0; i < 2000; ++i) {
        std::vector<std::pair<long, long>> sys;
        std::vector<Congruence> congr;
        long product = 1;
        for (long m : moduli) {
            if (rng() % 3 != 0 || std::gcd(m, product) != 1 || product * m > 200000)
                continue;
            long r = long(rng() % 1000) - 500;
            sys.push_back({m, r});
            congr.push_back({m, r});
            product *= m;
        }
        CrtSolution s = crt_solve(congr);
        REQUIRE(s.modulus == product);
        REQUIRE(s.residue == crt_by_search(sys, product));
    }
}
