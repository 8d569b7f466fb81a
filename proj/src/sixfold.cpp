#include "ks7/sixfold.hpp"

#include "ks7/errors.hpp"

#include <cstdint>

namespace ks7::sixfold {

namespace {

bool is_even(const Integer& x) { return mpz_even_p(x.get_mpz_t()) != 0; }

std::int64_t residue(const Integer& x, unsigned long m)
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), m);
    return r.get_si();
}

} // namespace

std::string to_string(SpinType s) { return s == SpinType::Spin ? "spin" : "nonspinE"; }

SpinType spin_type_from_string(const std::string& s)
{
    if (s == "spin")
        return SpinType::Spin;
    if (s == "nonspinE" || s == "nonspin")
        return SpinType::NonspinE;
    throw BadInput("unknown spin type '" + s + "'");
}

Integer TypeIBase::k() const
{
    if (spin == SpinType::Spin)
        return Integer(24 * u + 4 * form.A);
    return Integer(48 * u + form.A);
}

Integer TypeIBase::l() const
{
    if (spin == SpinType::Spin)
        return Integer(24 * v + 4 * form.D);
    return Integer(24 * v + 3 * form.B + 6 * form.C + 4 * form.D);
}

CubicForm TypeIIBase::form() const
{
    return {epsilon, A, Integer(epsilon * A * A), Integer(A * A * A)};
}

ValidationReport validate_type1(const TypeIBase& base)
{
    ValidationReport report;
    const auto& f = base.form;
    Integer det = f.cup_with_e().det();
    if (det != 1 && det != -1)
        report.violations.push_back("det(M_e) = AC - B^2 must be +1 or -1 (got " + det.get_str() + ")");
    if (!is_even(f.A))
        report.violations.push_back("A must be even");
    if (base.spin == SpinType::Spin) {
        if (is_even(f.B))
            report.violations.push_back("B must be odd");
        if (is_even(f.C))
            report.violations.push_back("C must be odd");
    } else {
        if (is_even(f.B))
            report.violations.push_back("B must be odd");
        if (!is_even(f.C))
            report.violations.push_back("C must be even");
    }
    return report;
}

ValidationReport validate_type2(const TypeIIBase& base)
{
    ValidationReport report;
    if (base.epsilon != 1 && base.epsilon != -1)
        report.violations.push_back("epsilon must be +1 or -1 (got " + base.epsilon.get_str() + ")");
    return report;
}

bool wu_parity_constraints(SpinType spin, const CubicForm& form)
{
    if (spin == SpinType::Spin)
        return is_even(Integer(form.B + form.C));
    return is_even(form.A) && is_even(form.C);
}

bool p1_mod2_constraint(SpinType spin, const CubicForm& form, const Integer& k, const Integer& l)
{
    if (spin == SpinType::Spin)
        return is_even(k) && is_even(l);
    return is_even(Integer(k - form.A)) && is_even(Integer(l - form.B));
}

namespace {

// Both congruences are polynomial in X, Y with period dividing the modulus,
// so checking one period in each variable decides them.
struct ReducedForm {
    std::int64_t a, b, c, d;
};

bool jupp_spin(const ReducedForm& f, std::int64_t k, std::int64_t l)
{
    for (std::int64_t x = 0; x < 24; ++x)
        for (std::int64_t y = 0; y < 24; ++y) {
            std::int64_t lhs = 4 * x * x * x * f.a + 12 * x * x * y * f.b + 12 * x * y * y * f.c + 4 * y * y * y * f.d;
            if ((lhs - k * x - l * y) % 24 != 0)
                return false;
        }
    return true;
}

bool jupp_nonspin(const ReducedForm& f, std::int64_t k, std::int64_t l)
{
    for (std::int64_t x = 1; x < 48; x += 2)
        for (std::int64_t y = 0; y < 48; ++y) {
            std::int64_t lhs = x * x * x * f.a + 6 * x * x * y * f.b + 12 * x * y * y * f.c + 8 * y * y * y * f.d;
            if ((lhs - k * x - 2 * l * y) % 48 != 0)
                return false;
        }
    return true;
}

ReducedForm reduce(const CubicForm& form)
{
    return {residue(form.A, 48), residue(form.B, 48), residue(form.C, 48), residue(form.D, 48)};
}

} // namespace

bool jupp_check(SpinType spin, const CubicForm& form, const Integer& k, const Integer& l)
{
    ReducedForm f = reduce(form);
    if (spin == SpinType::Spin)
        return jupp_spin(f, residue(k, 24), residue(l, 24));
    return jupp_nonspin(f, residue(k, 48), residue(l, 24));
}

JuppSolution jupp_solve(SpinType spin, const CubicForm& form)
{
    if (!wu_parity_constraints(spin, form))
        throw ParityViolation("jupp_solve: cubic form violates the Wu parity conditions for "
                              + to_string(spin) + " bases");
    ReducedForm f = reduce(form);
    JuppSolution sol;
    sol.k_modulus = spin == SpinType::Spin ? 24 : 48;
    sol.l_modulus = 24;
    for (long k = 0; k < sol.k_modulus; ++k)
        for (long l = 0; l < sol.l_modulus; ++l) {
            bool holds = spin == SpinType::Spin ? jupp_spin(f, k, l) : jupp_nonspin(f, k, l);
            if (holds)
                sol.residues.emplace(k, l);
        }
    return sol;
}

} // namespace ks7::sixfold
