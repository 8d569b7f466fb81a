#include "ks7/classify.hpp"
#include "ks7/errors.hpp"

#include <doctest.h>

#include <random>

using namespace ks7::classify;
using ks7::exactmath::QmodZ;
using ks7::exactmath::Rational;
using ks7::kreckstolz::SInvariants;
using ks7::kreckstolz::s_invariants_type1;

namespace {

QmodZ q(long p, long r) { return QmodZ(Rational(Integer(p), Integer(r))); }

long mod(long a, long m) { return ((a % m) + m) % m; }

std::set<int> evens()
{
    std::set<int> s;
    for (int r = 0; r < 28; r += 2)
        s.insert(r);
    return s;
}

std::set<int> all_residues()
{
    std::set<int> s;
    for (int r = 0; r < 28; ++r)
        s.insert(r);
    return s;
}

TypeIBase base(SpinType s, long A, long B, long C, long D, long u, long v)
{
    return {s, {A, B, C, D}, u, v};
}

void check_witnesses(const RealizationSet& set)
{
    REQUIRE(set.witnesses.size() == set.members.size());
    for (const auto& [r, w] : set.witnesses) {
        REQUIRE(set.members.count(r) == 1);
        REQUIRE(ks7::sixfold::validate_type1(w).ok());
        SInvariants s = s_invariants_type1(w);
        REQUIRE(s.s2.is_zero());
        REQUIRE(s.s3.is_zero());
        REQUIRE(s.s1_times_28.is_zero());
        REQUIRE(s.s1 == q(r, 28));
        REQUIRE(ks7::kreckstolz::same_diffeo_class(s, ks7::kreckstolz::target_invariants_type1(r)));
    }
}

} // namespace

TEST_CASE("sphere set")
{
    // Oracle 1: enumerate over a wide u range, not one period.
    std::set<int> wide;
    for (long e : {1, -1})
        for (long u = -200; u <= 200; ++u)
            wide.insert(int(mod(18 * e * u * u + 4 * u, 28)));
    // Oracle 2: the mu-list {0, +-4, +-6, +-8, +-10, 14} / 28.
    std::set<int> mu_list;
    for (long m : {0, 4, -4, 6, -6, 8, -8, 10, -10, 14})
        mu_list.insert(int(mod(m, 28)));
    std::set<int> s = sphere_action_set();
    CHECK(s == wide);
    CHECK(s == mu_list);
    CHECK(s == std::set<int>{0, 4, 6, 8, 10, 14, 18, 20, 22, 24});
    CHECK(s.size() == 10);
    for (int r : s)
        CHECK(s.count(int(mod(-r, 28))) == 1);
    std::set<int> printed = printed_sphere_list();
    CHECK(printed.size() == 9);
    CHECK(printed.count(22) == 0);
    CHECK(sphere_admits_free_action(0));
    CHECK_FALSE(sphere_admits_free_action(2));
    CHECK(sphere_admits_free_action(14));
    CHECK(sphere_admits_free_action(22));
}

TEST_CASE("sphere set agrees with the type II invariants")
{
    for (long e : {1, -1})
        for (long u = -20; u <= 20; ++u) {
            auto r = sphere_residue(ks7::kreckstolz::s_invariants_type2({e, 0, u}));
            REQUIRE(r.has_value());
            REQUIRE(sphere_admits_free_action(*r));
        }
}

TEST_CASE("sphere_residue")
{
    CHECK(sphere_residue(SInvariants{}) == 0);
    CHECK(sphere_residue(SInvariants::from(q(3, 7), QmodZ(), QmodZ())) == 12);
    CHECK_FALSE(sphere_residue(SInvariants::from(q(1, 56), QmodZ(), QmodZ())).has_value());
}

TEST_CASE("admits_free_circle_action examples")
{
    Decision a = admits_free_circle_action({2, 5, 13});
    CHECK(a.admits);
    CHECK(a.case_number == 1);
    Decision b = admits_free_circle_action({1, 1, 13});
    CHECK_FALSE(b.admits);
    CHECK(b.case_number == 3);
    CHECK(b.sphere_member == false);
    Decision c = admits_free_circle_action({0, 3, 0});
    CHECK(c.admits);
    CHECK(c.case_number == 5);
    Decision d = admits_free_circle_action({0, 3, 1});
    CHECK_FALSE(d.admits);
    CHECK(d.case_number == 5);
    Decision e = admits_free_circle_action({1, 2, 13});
    CHECK(e.admits);
    CHECK(e.case_number == 2);
    Decision f = admits_free_circle_action({0, 2, 2});
    CHECK_FALSE(f.admits);
    CHECK(f.case_number == 4);
    CHECK(admits_free_circle_action({0, 0, 14}).admits);
    CHECK(admits_free_circle_action({0, 1, 0}).admits);
    CHECK_THROWS_AS(admits_free_circle_action({-1, 0, 0}), ks7::BadInput);
    CHECK_THROWS_AS(admits_free_circle_action({0, -1, 0}), ks7::BadInput);
    CHECK_THROWS_AS(admits_free_circle_action({0, 0, 28}), ks7::BadInput);
    CHECK_THROWS_AS(admits_free_circle_action({0, 0, -1}), ks7::BadInput);
}

TEST_CASE("k = 0, l even follows sphere membership")
{
    for (long l = 0; l <= 6; l += 2)
        for (int r = 0; r < 28; ++r) {
            Decision d = admits_free_circle_action({0, l, r});
            REQUIRE(d.case_number == 4);
            REQUIRE(d.admits == sphere_admits_free_action(r));
        }
}

TEST_CASE("large k always admits")
{
    for (long k = 2; k < 50; ++k)
        for (int r = 0; r < 28; ++r)
            REQUIRE(admits_free_circle_action({k, k * 7 % 5, r}).admits);
}

TEST_CASE("nonspin_orbit_possible")
{
    CHECK(nonspin_orbit_possible(2) == Possibility::No);
    CHECK(nonspin_orbit_possible(4) == Possibility::No);
    CHECK(nonspin_orbit_possible(1) == Possibility::Possible);
    CHECK(nonspin_orbit_possible(3) == Possibility::Unknown);
    CHECK(nonspin_orbit_possible(9) == Possibility::Unknown);
    CHECK(to_string(Possibility::No) == "No");
    CHECK(to_string(Possibility::Possible) == "Possible");
    CHECK(to_string(Possibility::Unknown) == "Unknown");
    CHECK_THROWS_AS(nonspin_orbit_possible(0), ks7::PreconditionViolation);
}

TEST_CASE("realization sets at bound 6 and 12")
{
    RealizationSet n6 = realization_set(SpinType::NonspinE, 6);
    RealizationSet s6 = realization_set(SpinType::Spin, 6);
    CHECK(n6.members == evens());
    CHECK(s6.members == all_residues());
    check_witnesses(n6);
    check_witnesses(s6);
    RealizationSet n12 = realization_set(SpinType::NonspinE, 12);
    RealizationSet s12 = realization_set(SpinType::Spin, 12);
    CHECK(n12.members == n6.members);
    CHECK(s12.members == s6.members);
    check_witnesses(n12);
    check_witnesses(s12);
}

TEST_CASE("realization set at bound 0 and bad bounds")
{
    RealizationSet z = realization_set(SpinType::NonspinE, 0);
    for (int r : z.members)
        CHECK(r == 0);
    CHECK_THROWS_AS(realization_set(SpinType::Spin, -1), ks7::BadInput);
}

TEST_CASE("realization is deterministic")
{
    RealizationSet a = realization_set(SpinType::Spin, 4);
    RealizationSet b = realization_set(SpinType::Spin, 4);
    CHECK(a.members == b.members);
    CHECK(a.witnesses == b.witnesses);
}

TEST_CASE("find_witness examples")
{
    auto w14 = find_witness(14, SpinType::Spin, 6);
    REQUIRE(w14.has_value());
    CHECK(s_invariants_type1(*w14).s1 == q(1, 2));
    CHECK(ks7::kreckstolz::s_closed_type1_spin(0, 1, 1, 1, 1, 0).s1 == q(1, 2));
    CHECK_FALSE(find_witness(1, SpinType::NonspinE, 10).has_value());
    auto w0 = find_witness(0, SpinType::Spin, 1);
    REQUIRE(w0.has_value());
    CHECK(s_invariants_type1(*w0) == SInvariants{});
}

TEST_CASE("random nonspin tuples never give odd r")
{
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<long> d(-50, 50);
    long checked = 0;
    while (checked < 100000) {
        long B = 2 * (d(rng) / 2) + 1;
        long prod = (B * B - 1) / 4; // A1 C1
        long A1, C1;
        if (prod == 0) {
            A1 = d(rng);
            C1 = 0;
            if (rng() & 1)
                std::swap(A1, C1);
        } else {
            std::vector<long> divisors;
            for (long t = 1; t <= prod; ++t)
                if (prod % t == 0)
                    divisors.push_back(t);
            A1 = divisors[rng() % divisors.size()];
            C1 = prod / A1;
            if (rng() & 1) {
                A1 = -A1;
                C1 = -C1;
            }
        }
        if (std::abs(B) > 50 || std::abs(A1) > 50 || std::abs(C1) > 50)
            continue;
        TypeIBase b = base(SpinType::NonspinE, 2 * A1, B, 2 * C1, d(rng), d(rng), d(rng));
        REQUIRE(ks7::sixfold::validate_type1(b).ok());
        SInvariants s = s_invariants_type1(b);
        auto r = sphere_residue(s);
        REQUIRE(r.has_value());
        REQUIRE(*r % 2 == 0);
        ++checked;
    }
}

TEST_CASE("reduced congruences are equivalent to s2 = s3 = 0 for all u, v")
{
    long hits = 0, total = 0;
    for (long a1 = -8; a1 <= 8; ++a1)
        for (long B = -9; B <= 9; ++B)
            for (long c = -8; c <= 8; ++c) {
                bool spin_ok = B * B == 8 * a1 * c + 1 && c % 2 != 0;
                bool nonspin_ok = B * B == 4 * a1 * c + 1;
                for (long D = -8; D <= 8; ++D) {
                    std::vector<TypeIBase> bases;
                    if (spin_ok)
                        bases.push_back(base(SpinType::Spin, 8 * a1, B, c, D, 0, 0));
                    if (nonspin_ok)
                        bases.push_back(base(SpinType::NonspinE, 2 * a1, B, 2 * c, D, 0, 0));
                    for (const TypeIBase& b : bases) {
                        REQUIRE(ks7::sixfold::validate_type1(b).ok());
                        // s2 and s3 are affine in (u, v); three points decide "zero for all u, v".
                        bool zero = true;
                        for (auto [u, v] : {std::pair{0, 0}, {1, 0}, {0, 1}}) {
                            TypeIBase bu = b;
                            bu.u = u;
                            bu.v = v;
                            SInvariants s = s_invariants_type1(bu);
                            zero = zero && s.s2.is_zero() && s.s3.is_zero();
                        }
                        INFO("base ", b.form.A.get_si(), " ", B, " ", b.form.C.get_si(), " ", D);
                        REQUIRE(reduced_congruences_hold(b) == zero);
                        hits += zero;
                        ++total;
                    }
                }
            }
    CHECK(total > 500);
    CHECK(hits > 50);
    CHECK(hits < total);
}
