#include "ks7/classify.hpp"

#include "ks7/errors.hpp"

#include <algorithm>
#include <thread>
#include <tuple>
#include <vector>

namespace ks7::classify {

using kreckstolz::SInvariants;

std::set<int> sphere_action_set()
{
    auto value = [](int eps, int u) {
        int r = (18 * eps * u * u + 4 * u) % kSphereCount;
        return r < 0 ? r + kSphereCount : r;
    };
    std::set<int> out;
    for (int eps : {1, -1})
        for (int u = 0; u < 14; ++u) {
            // u -> u + 14 changes the value by a multiple of 28
            if (value(eps, u) != value(eps, u + 14))
                throw IntegralityFailure("sphere_action_set: value not 14-periodic in u");
            out.insert(value(eps, u));
        }
    return out;
}

std::set<int> printed_sphere_list() { return {0, 4, 6, 8, 10, 14, 18, 20, 24}; }

bool sphere_admits_free_action(int r)
{
    if (r < 0 || r >= kSphereCount)
        throw BadInput("sphere index must lie in [0, 28), got " + std::to_string(r));
    static const std::set<int> members = sphere_action_set();
    return members.contains(r);
}

Decision admits_free_circle_action(const ManifoldSpec& spec)
{
    if (spec.k < 0 || spec.l < 0)
        throw BadInput("k and l must be nonnegative");
    if (spec.r < 0 || spec.r >= kSphereCount)
        throw BadInput("r must lie in [0, 28), got " + std::to_string(spec.r));

    const bool l_even = spec.l % 2 == 0;
    if (spec.k >= 2)
        return {true, 1, std::nullopt};
    if (spec.k == 1 && l_even)
        return {true, 2, std::nullopt};
    if (spec.k == 1) {
        bool member = sphere_admits_free_action(spec.r);
        return {member, 3, member};
    }
    if (l_even) {
        bool member = sphere_admits_free_action(spec.r);
        return {member, 4, member};
    }
    return {spec.r == 0, 5, std::nullopt};
}

std::string to_string(Possibility p)
{
    switch (p) {
    case Possibility::No:
        return "No";
    case Possibility::Possible:
        return "Possible";
    case Possibility::Unknown:
        return "Unknown";
    }
    return "?";
}

Possibility nonspin_orbit_possible(long k)
{
    if (k < 1)
        throw PreconditionViolation("nonspin_orbit_possible requires k >= 1");
    if (k % 2 == 0)
        return Possibility::No;
    if (k == 1)
        return Possibility::Possible;
    return Possibility::Unknown;
}

std::optional<int> sphere_residue(const SInvariants& s)
{
    if (!s.s1_times_28.is_zero())
        return std::nullopt;
    exactmath::Rational r = s.s1.residue() * exactmath::Rational(kSphereCount);
    if (!r.is_integer())
        throw IntegralityFailure("28 s1 = 0 but 28 * s1 is not an integer");
    return static_cast<int>(r.numerator().get_si());
}

namespace {

auto lex_key(const TypeIBase& b)
{
    return std::tie(b.form.A, b.form.B, b.form.C, b.form.D, b.u, b.v);
}

bool lex_less(const TypeIBase& a, const TypeIBase& b) { return lex_key(a) < lex_key(b); }

std::vector<TypeIBase> constrained_forms(SpinType orbit, long bound)
{
    std::vector<TypeIBase> forms;
    for (long a1 = -bound; a1 <= bound; ++a1)
        for (long b = -bound; b <= bound; ++b)
            for (long c = -bound; c <= bound; ++c) {
                // spin: B^2 = 8 A1 C + 1; nonspin: B^2 = 4 A1 C1 + 1
                long rhs = orbit == SpinType::Spin ? 8 * a1 * c + 1 : 4 * a1 * c + 1;
                if (b * b != rhs)
                    continue;
                for (long d = -bound; d <= bound; ++d) {
                    TypeIBase base;
                    base.spin = orbit;
                    if (orbit == SpinType::Spin)
                        base.form = {8 * a1, b, c, d};
                    else
                        base.form = {2 * a1, b, 2 * c, d};
                    if (sixfold::validate_type1(base).ok())
                        forms.push_back(base);
                }
            }
    return forms;
}

void record(std::map<int, TypeIBase>& witnesses, int r, const TypeIBase& base)
{
    auto it = witnesses.find(r);
    if (it == witnesses.end())
        witnesses.emplace(r, base);
    else if (lex_less(base, it->second))
        it->second = base;
}

} // namespace

RealizationSet realization_set(SpinType orbit, long bound)
{
    if (bound < 0)
        throw BadInput("bound must be nonnegative");
    const std::vector<TypeIBase> forms = constrained_forms(orbit, bound);

    unsigned threads = std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(forms.size(), 1));
    std::vector<std::map<int, TypeIBase>> partial(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < forms.size(); i += threads) {
                TypeIBase base = forms[i];
                for (long u = -bound; u <= bound; ++u)
                    for (long v = -bound; v <= bound; ++v) {
                        base.u = u;
                        base.v = v;
                        SInvariants s = kreckstolz::s_closed_type1(base);
                        if (!s.s2.is_zero() || !s.s3.is_zero())
                            continue;
                        if (auto r = sphere_residue(s))
                            record(partial[t], *r, base);
                    }
            }
        });
    }
    for (auto& th : pool)
        th.join();

    RealizationSet out;
    for (const auto& part : partial)
        for (const auto& [r, base] : part)
            record(out.witnesses, r, base);
    for (const auto& [r, base] : out.witnesses)
        out.members.insert(r);
    return out;
}

std::optional<TypeIBase> find_witness(int r, SpinType orbit, long bound)
{
    if (r < 0 || r >= kSphereCount)
        throw BadInput("r must lie in [0, 28), got " + std::to_string(r));
    RealizationSet set = realization_set(orbit, bound);
    auto it = set.witnesses.find(r);
    if (it == set.witnesses.end())
        return std::nullopt;
    SInvariants generic = kreckstolz::s_invariants_type1(it->second);
    SInvariants target = kreckstolz::target_invariants_type1(r);
    if (!kreckstolz::same_diffeo_class(generic, target) || !generic.s1_times_28.is_zero())
        throw Error("witness for r = " + std::to_string(r) + " failed re-verification");
    return it->second;
}

bool reduced_congruences_hold(const TypeIBase& base)
{
    auto mod = [](const Integer& x, long m) {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m));
        return r.get_si();
    };
    const auto& f = base.form;
    if (base.spin == SpinType::Spin) {
        if (mod(f.A, 8) != 0)
            return false;
        Integer a1 = f.A / 8;
        return mod(Integer(a1 * (f.C * f.C - f.B * f.D - f.D * f.D)), 3) == 0 && mod(f.D, 2) == 1;
    }
    Integer a1 = f.A / 2;
    Integer c1 = f.C / 2;
    // s2 = 0 reads 12 | B^2 C1 + 6BC1^2 - A1 BD - 6A1 C1 D - A1 D^2 + C1 + 4C1^3;
    // the A1 D^2 term turns A1 BD into A1 D(B + D) in both congruences.
    Integer t = a1 * f.D * (f.B + f.D);
    return mod(Integer((f.B * f.B - 1) * c1 - t), 3) == 0 && mod(t, 4) == 0;
}

} // namespace ks7::classify
