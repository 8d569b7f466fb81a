#include "ks7/verify.hpp"

#include "ks7/classify.hpp"
#include "ks7/errors.hpp"
#include "ks7/exactmath.hpp"
#include "ks7/kreckstolz.hpp"
#include "ks7/modular.hpp"
#include "ks7/sixfold.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace ks7::verify {

using exactmath::Integer;
using exactmath::QmodZ;
using exactmath::Rational;
using sixfold::CubicForm;
using sixfold::SpinType;
using sixfold::TypeIBase;
using sixfold::TypeIIBase;

bool SuiteReport::passed() const
{
    return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.passed; });
}

namespace {

// Accumulates one property; keeps the first counterexample.
class Property {
public:
    explicit Property(std::string name) : result_{std::move(name), true, {}} {}

    template <class F>
    void check(bool ok, F&& describe)
    {
        ++cases_;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.detail = "counterexample: " + describe();
        }
    }

    PropertyResult finish(const std::string& summary = {})
    {
        if (result_.passed)
            result_.detail = summary.empty() ? std::to_string(cases_) + " cases" : summary;
        return result_;
    }

private:
    PropertyResult result_;
    long cases_ = 0;
};

std::string show(const TypeIBase& b)
{
    std::ostringstream os;
    os << sixfold::to_string(b.spin) << " (A,B,C,D,u,v)=(" << b.form.A << "," << b.form.B << "," << b.form.C << ","
       << b.form.D << "," << b.u << "," << b.v << ")";
    return os.str();
}

std::string show(const kreckstolz::SInvariants& s)
{
    return "(" + s.s1.to_string() + ", " + s.s1_times_28.to_string() + ", " + s.s2.to_string() + ", "
           + s.s3.to_string() + ")";
}

/// Every valid type I form with entries in [-bound, bound] and det = -1.
std::vector<CubicForm> valid_forms(SpinType spin, long bound)
{
    std::vector<CubicForm> out;
    for (long a = -bound; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b)
            for (long c = -bound; c <= bound; ++c) {
                if (a * c - b * b != -1)
                    continue;
                for (long d = -bound; d <= bound; ++d) {
                    TypeIBase base{spin, {a, b, c, d}, 0, 0};
                    if (sixfold::validate_type1(base).ok())
                        out.push_back(base.form);
                }
            }
    return out;
}

/// A random form passing the Wu parity conditions, entries in [-50, 50].
CubicForm random_parity_form(SpinType spin, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> coord(-50, 50);
    while (true) {
        long a = coord(rng), b = coord(rng), c = coord(rng), d = coord(rng);
        if (sixfold::wu_parity_constraints(spin, {a, b, c, d}))
            return {a, b, c, d};
    }
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"f2det", "jupp", "nt", "pipeline", "spheres"};
    return names;
}

bool is_suite(const std::string& name)
{
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport run_suite(const std::string& name, const Options& options)
{
    if (name == "nt")
        return suite_nt(options);
    if (name == "jupp")
        return suite_jupp(options);
    if (name == "pipeline")
        return suite_pipeline(options);
    if (name == "f2det")
        return suite_f2det(options);
    if (name == "spheres")
        return suite_spheres(options);
    throw BadInput("unknown suite '" + name + "'");
}

SuiteReport suite_nt(const Options& options)
{
    SuiteReport report{"nt", {}, {}};
    const long primes[] = {3, 5, 7, 11, 13};

    Property counting("counting formula equals brute force, p <= 13");
    Property positive("every residue is represented, p <= 13");
    for (long p : primes)
        for (long a = 1; a < p; ++a)
            for (long b = 1; b < p; ++b)
                for (long c = 0; c < p; ++c) {
                    long closed = modular::count_quadratic_solutions(a, b, c, p);
                    long brute = modular::count_quadratic_solutions_oracle(a, b, c, p);
                    auto where = [&] {
                        return "(a,b,c,p)=(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c)
                               + "," + std::to_string(p) + ") closed=" + std::to_string(closed)
                               + " brute=" + std::to_string(brute);
                    };
                    counting.check(closed == brute, where);
                    positive.check(closed >= 1, where);
                }
    report.properties.push_back(counting.finish());
    report.properties.push_back(positive.finish());

    Property squares("Legendre symbol matches the set of squares, p <= 31");
    for (long p = 3; p <= 31; p += 2) {
        if (!modular::is_odd_prime(p))
            continue;
        std::vector<bool> is_square(p, false);
        for (long x = 1; x < p; ++x)
            is_square[x * x % p] = true;
        for (long a = 0; a < p; ++a) {
            int expected = a == 0 ? 0 : (is_square[a] ? 1 : -1);
            int got = modular::legendre(a, p);
            squares.check(got == expected, [&] {
                return "(" + std::to_string(a) + "/" + std::to_string(p) + ") = " + std::to_string(got);
            });
        }
    }
    report.properties.push_back(squares.finish());

    std::mt19937_64 rng(options.seed);
    Property multiplicative("Legendre symbol is multiplicative (random)");
    Property crt("CRT solution satisfies every congruence (random)");
    std::uniform_int_distribution<long> pick_prime(0, 4), value(-100000, 100000);
    for (long i = 0; i < options.samples; ++i) {
        long p = primes[pick_prime(rng)];
        long a = value(rng), b = value(rng);
        if (a % p == 0 || b % p == 0)
            continue;
        multiplicative.check(modular::legendre(a * b, p) == modular::legendre(a, p) * modular::legendre(b, p),
                             [&] { return "a=" + std::to_string(a) + " b=" + std::to_string(b) + " p=" + std::to_string(p); });

        long r4 = value(rng), r7 = value(rng), r9 = value(rng);
        auto sol = modular::crt_solve({{4, r4}, {7, r7}, {9, r9}});
        auto ok = [&](long m, long r) { return (sol.residue - r) % m == 0; };
        crt.check(sol.modulus == 252 && ok(4, r4) && ok(7, r7) && ok(9, r9), [&] {
            return "residues " + std::to_string(r4) + "," + std::to_string(r7) + "," + std::to_string(r9);
        });
    }
    report.properties.push_back(multiplicative.finish());
    report.properties.push_back(crt.finish());
    return report;
}

SuiteReport suite_jupp(const Options& options)
{
    SuiteReport report{"jupp", {}, {}};

    Property param("p1 parameterizations satisfy the Jupp relation, |A..D| <= 5");
    for (SpinType spin : {SpinType::Spin, SpinType::NonspinE})
        for (long a = -5; a <= 5; ++a)
            for (long b = -5; b <= 5; ++b)
                for (long c = -5; c <= 5; ++c)
                    for (long d = -5; d <= 5; ++d) {
                        TypeIBase base{spin, {a, b, c, d}, 0, 0};
                        if (!sixfold::validate_type1(base).ok())
                            continue;
                        for (long u = -1; u <= 1; ++u)
                            for (long v = -1; v <= 1; ++v) {
                                base.u = u;
                                base.v = v;
                                param.check(sixfold::jupp_check(spin, base.form, base.k(), base.l()),
                                            [&] { return show(base); });
                            }
                    }
    report.properties.push_back(param.finish());

    // Each nonspin solve scans 1152 candidates against 1152 residue pairs.
    const long forms = std::clamp<long>(options.samples / 50, 100, 400);
    std::mt19937_64 rng(options.seed ^ 0x6a7570705eedULL);
    for (SpinType spin : {SpinType::Spin, SpinType::NonspinE}) {
        Property closure("exhaustive solve gives the closed singleton (" + sixfold::to_string(spin) + ", random)");
        for (long i = 0; i < forms; ++i) {
            CubicForm f = random_parity_form(spin, rng);
            auto sol = sixfold::jupp_solve(spin, f);
            std::pair<long, long> expected;
            auto mod = [](const Integer& x, long m) {
                Integer r;
                mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), m);
                return r.get_si();
            };
            if (spin == SpinType::Spin)
                expected = {mod(Integer(4 * f.A), 24), mod(Integer(4 * f.D), 24)};
            else
                expected = {mod(f.A, 48), mod(Integer(3 * f.B + 6 * f.C + 4 * f.D), 24)};
            bool ok = sol.residues.size() == 1 && *sol.residues.begin() == expected;
            closure.check(ok, [&] {
                std::ostringstream os;
                os << "form (" << f.A << "," << f.B << "," << f.C << "," << f.D << ") gave " << sol.residues.size()
                   << " solutions";
                return os.str();
            });
        }
        report.properties.push_back(closure.finish());
    }

    Property periodic("Jupp check is periodic in k and l (random)");
    std::uniform_int_distribution<long> kl(-200, 200);
    for (long i = 0; i < std::min<long>(options.samples, 2000); ++i) {
        SpinType spin = i % 2 == 0 ? SpinType::Spin : SpinType::NonspinE;
        CubicForm f = random_parity_form(spin, rng);
        Integer k = kl(rng), l = kl(rng);
        long kp = spin == SpinType::Spin ? 24 : 48;
        bool base_value = sixfold::jupp_check(spin, f, k, l);
        periodic.check(base_value == sixfold::jupp_check(spin, f, Integer(k + kp), l)
                           && base_value == sixfold::jupp_check(spin, f, k, Integer(l + 24)),
                       [&] { return "k=" + k.get_str() + " l=" + l.get_str(); });
    }
    report.properties.push_back(periodic.finish());
    return report;
}

SuiteReport suite_pipeline(const Options& options)
{
    SuiteReport report{"pipeline", {}, {}};

    for (SpinType spin : {SpinType::Spin, SpinType::NonspinE}) {
        Property agree("closed form equals generic pipeline (" + sixfold::to_string(spin) + ", coordinates in [-7,7])");
        Property identity(spin == SpinType::Spin ? "28 s1 = A/8 for spin bases" : "s3 = 4 s2 for nonspin bases");
        Property double_count("z^2 c^2 computed two ways agrees (" + sixfold::to_string(spin) + ")");
        for (const CubicForm& f : valid_forms(spin, 7))
            for (long u = -7; u <= 7; ++u)
                for (long v = -7; v <= 7; ++v) {
                    TypeIBase base{spin, f, u, v};
                    auto closed = kreckstolz::s_closed_type1(base);
                    auto ch = kreckstolz::char_numbers_type1(base);
                    auto generic = kreckstolz::s_invariants_generic(ch, kreckstolz::coboundary_is_spin(base));
                    agree.check(closed == generic,
                                [&] { return show(base) + " closed " + show(closed) + " generic " + show(generic); });
                    if (spin == SpinType::Spin)
                        identity.check(generic.s1_times_28 == QmodZ(Rational(f.A, 8)), [&] { return show(base); });
                    else
                        identity.check(generic.s3 == 4 * generic.s2, [&] { return show(base); });
                    double_count.check(ch.z2_c2 == ch.zc_zc, [&] { return show(base); });
                }
        report.properties.push_back(agree.finish());
        report.properties.push_back(identity.finish());
        report.properties.push_back(double_count.finish());
    }

    Property type2("closed form equals generic pipeline (type II, A,u in [-10,10])");
    for (long eps : {1L, -1L})
        for (long a = -10; a <= 10; ++a)
            for (long u = -10; u <= 10; ++u) {
                TypeIIBase base{eps, a, u};
                auto closed = kreckstolz::s_closed_type2(eps, a, u);
                auto generic = kreckstolz::s_invariants_type2(base);
                type2.check(closed == generic, [&] {
                    return "(eps,A,u)=(" + std::to_string(eps) + "," + std::to_string(a) + "," + std::to_string(u) + ")";
                });
            }
    report.properties.push_back(type2.finish());

    Property integral("type II S2, S3 integral and equal to the pipeline (A,u in [-50,50])");
    for (long eps : {1L, -1L})
        for (long a = -50; a <= 50; ++a)
            for (long u = -50; u <= 50; ++u) {
                std::string failure;
                try {
                    auto s = kreckstolz::s_type2_integrality(eps, a, u);
                    auto values = kreckstolz::s_values(kreckstolz::char_numbers_type2({eps, a, u}), false);
                    if (values.S2 != Rational(s.S2) || values.S3 != Rational(s.S3))
                        failure = "factored form differs from pipeline";
                } catch (const IntegralityFailure& e) {
                    failure = e.what();
                }
                integral.check(failure.empty(), [&] {
                    return "(eps,A,u)=(" + std::to_string(eps) + "," + std::to_string(a) + "," + std::to_string(u)
                           + "): " + failure;
                });
            }
    report.properties.push_back(integral.finish());

    // Random larger parameters: build valid forms from B and a factorization of B^2 - 1.
    std::mt19937_64 rng(options.seed ^ 0x706970656c696eULL);
    Property random_agree("closed form equals generic pipeline (random, |B| <= 1001, |D|,|u|,|v| <= 1000)");
    std::uniform_int_distribution<long> half(-500, 500), big(-1000, 1000);
    for (long i = 0; i < options.samples; ++i) {
        SpinType spin = i % 2 == 0 ? SpinType::Spin : SpinType::NonspinE;
        long b = 2 * half(rng) + 1;
        long n = b * b - 1; // AC = n
        if (n == 0) {
            // B = +-1: A C = 0
            long other = big(rng);
            if (spin == SpinType::Spin)
                other = 2 * (other / 2) + 1;
            else
                other = 2 * (other / 2);
            TypeIBase base{spin, {0, b, other, big(rng)}, big(rng), big(rng)};
            auto closed = kreckstolz::s_closed_type1(base);
            auto generic = kreckstolz::s_invariants_type1(base);
            random_agree.check(closed == generic, [&] { return show(base); });
            continue;
        }
        std::vector<long> divisors;
        for (long d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                divisors.push_back(d);
                divisors.push_back(n / d);
            }
        std::uniform_int_distribution<std::size_t> pick(0, divisors.size() - 1);
        long a = divisors[pick(rng)];
        if (rng() & 1U)
            a = -a;
        long c = n / a;
        TypeIBase base{spin, {a, b, c, big(rng)}, big(rng), big(rng)};
        if (!sixfold::validate_type1(base).ok())
            continue;
        auto closed = kreckstolz::s_closed_type1(base);
        auto generic = kreckstolz::s_invariants_type1(base);
        random_agree.check(closed == generic, [&] { return show(base); });
    }
    report.properties.push_back(random_agree.finish());

    Property zero("all-zero characteristic numbers give zero invariants");
    for (bool spin_cob : {false, true}) {
        auto s = kreckstolz::s_invariants_generic(kreckstolz::CharNumbers{}, spin_cob);
        zero.check(s == kreckstolz::SInvariants{}, [&] { return show(s); });
    }
    report.properties.push_back(zero.finish());
    return report;
}

SuiteReport suite_f2det(const Options& options)
{
    SuiteReport report{"f2det", {}, {}};
    for (std::size_t n : {3U, 5U}) {
        Property vanish("symmetric zero-diagonal " + std::to_string(n) + "x" + std::to_string(n)
                        + " matrices over F2 are singular (exhaustive)");
        const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < count; ++mask)
            vanish.check(!exactmath::f2_det(exactmath::F2Matrix::symmetric_zero_diagonal(n, mask)),
                         [&] { return "mask " + std::to_string(mask); });
        report.properties.push_back(vanish.finish());
    }

    std::mt19937_64 rng(options.seed ^ 0x663264657421ULL);
    Property odd("random symmetric zero-diagonal matrices of odd size 7..11 are singular");
    for (long i = 0; i < std::min<long>(options.samples, 5000); ++i) {
        std::size_t n = 7 + 2 * (i % 3);
        auto m = exactmath::F2Matrix::symmetric_zero_diagonal(n, rng());
        odd.check(!exactmath::f2_det(m), [&] { return "size " + std::to_string(n); });
    }
    report.properties.push_back(odd.finish());

    Property verdict("even k admits no nonspin orbit");
    for (long k = 2; k <= 20; k += 2)
        verdict.check(classify::nonspin_orbit_possible(k) == classify::Possibility::No,
                      [&] { return "k=" + std::to_string(k); });
    report.properties.push_back(verdict.finish());
    return report;
}

SuiteReport suite_spheres(const Options& /*options*/)
{
    SuiteReport report{"spheres", {}, {}};
    const std::set<int> derived = classify::sphere_action_set();

    auto list = [](const std::set<int>& s) {
        std::string out = "{";
        for (int r : s)
            out += (out.size() > 1 ? "," : "") + std::to_string(r);
        return out + "}";
    };

    // mu in {0, +-4/28, +-6/28, +-8/28, +-10/28, 14/28}
    std::set<int> from_mu{0, 14};
    for (int r : {4, 6, 8, 10}) {
        from_mu.insert(r);
        from_mu.insert(28 - r);
    }

    Property size("sphere set has exactly 10 elements");
    size.check(derived.size() == 10, [&] { return list(derived); });
    report.properties.push_back(size.finish(list(derived)));

    Property negation("sphere set is closed under r -> -r");
    for (int r : derived)
        negation.check(derived.contains((28 - r) % 28), [&] { return std::to_string(r); });
    report.properties.push_back(negation.finish());

    Property mu("sphere set equals {0, +-4, +-6, +-8, +-10, 14} mod 28");
    mu.check(derived == from_mu, [&] { return list(derived) + " vs " + list(from_mu); });
    report.properties.push_back(mu.finish());

    Property theorem("k = 0, l even: manifold verdict equals the sphere verdict");
    for (long l : {0L, 2L, 4L})
        for (int r = 0; r < 28; ++r)
            theorem.check(classify::admits_free_circle_action({0, l, r}).admits == classify::sphere_admits_free_action(r),
                          [&] { return "l=" + std::to_string(l) + " r=" + std::to_string(r); });
    report.properties.push_back(theorem.finish());

    const std::set<int> printed = classify::printed_sphere_list();
    std::set<int> missing, extra;
    std::set_difference(derived.begin(), derived.end(), printed.begin(), printed.end(),
                        std::inserter(missing, missing.end()));
    std::set_difference(printed.begin(), printed.end(), derived.begin(), derived.end(),
                        std::inserter(extra, extra.end()));
    if (!missing.empty() || !extra.empty()) {
        std::string note = "discrepancy: the printed r-list " + list(printed) + " (" + std::to_string(printed.size())
                           + " values)";
        if (!missing.empty())
            note += " omits " + list(missing);
        if (!extra.empty())
            note += " and has extra " + list(extra);
        note += "; the mu-list and the derived set contain them (" + std::to_string(derived.size()) + " values)";
        report.notes.push_back(note);
    }
    return report;
}

} // namespace ks7::verify
