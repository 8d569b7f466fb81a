// ks7: Kreck-Stolz invariants and free circle action queries from the
// command line. Exit codes: 0 success, 1 verification failure, 2 usage or
// validation error.

#include "ks7/classify.hpp"
#include "ks7/errors.hpp"
#include "ks7/kreckstolz.hpp"
#include "ks7/serialize.hpp"
#include "ks7/sixfold.hpp"
#include "ks7/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>

namespace {

using ks7::exactmath::Integer;
using ks7::kreckstolz::SInvariants;
using ks7::serialize::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

enum class Format { Text, Json };

Format parse_format(const std::string& s)
{
    if (s == "json")
        return Format::Json;
    if (s == "text")
        return Format::Text;
    throw ks7::BadInput("unknown format '" + s + "' (expected text or json)");
}

Integer parse_integer(const std::string& text, const char* name)
{
    try {
        return Integer(text);
    } catch (const std::invalid_argument&) {
        throw ks7::BadInput(std::string("-") + name + " expects an integer, got '" + text + "'");
    }
}

void print_invariants(const SInvariants& s, const std::string& indent = "")
{
    std::cout << indent << "s1   = " << s.s1 << "\n"
              << indent << "28s1 = " << s.s1_times_28 << "\n"
              << indent << "s2   = " << s.s2 << "\n"
              << indent << "s3   = " << s.s3 << "\n";
}

int report_invalid(const ks7::sixfold::ValidationReport& report)
{
    std::cerr << "invalid base:\n";
    for (const auto& v : report.violations)
        std::cerr << "  " << v << "\n";
    return kExitUsage;
}

struct InvariantsArgs {
    bool spin = false;
    bool nonspin = false;
    std::string A = "0", B = "0", C = "0", D = "0", u = "0", v = "0", epsilon = "1";
    std::string engine = "generic";
};

int emit_invariants(Format format, const json& base_json, const std::string& engine,
                    const std::function<SInvariants()>& closed, const std::function<SInvariants()>& generic)
{
    if (engine == "both") {
        SInvariants c = closed();
        SInvariants g = generic();
        bool agree = c == g;
        if (format == Format::Json) {
            json out{{"base", base_json},
                     {"closed", ks7::serialize::to_json(c)},
                     {"generic", ks7::serialize::to_json(g)},
                     {"agree", agree}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "closed form:\n";
            print_invariants(c, "  ");
            std::cout << "generic pipeline:\n";
            print_invariants(g, "  ");
            std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
        }
        return agree ? kExitOk : kExitVerifyFailed;
    }
    SInvariants s = engine == "closed" ? closed() : generic();
    if (format == Format::Json) {
        json out{{"base", base_json}, {"engine", engine}, {"invariants", ks7::serialize::to_json(s)}};
        std::cout << out.dump() << "\n";
    } else {
        print_invariants(s);
    }
    return kExitOk;
}

int run_type1(const InvariantsArgs& a, Format format)
{
    if (a.spin == a.nonspin)
        throw ks7::BadInput("exactly one of --spin or --nonspin is required");
    ks7::sixfold::TypeIBase base;
    base.spin = a.spin ? ks7::sixfold::SpinType::Spin : ks7::sixfold::SpinType::NonspinE;
    base.form = {parse_integer(a.A, "A"), parse_integer(a.B, "B"), parse_integer(a.C, "C"), parse_integer(a.D, "D")};
    base.u = parse_integer(a.u, "u");
    base.v = parse_integer(a.v, "v");
    auto report = ks7::sixfold::validate_type1(base);
    if (!report.ok())
        return report_invalid(report);
    return emit_invariants(
        format, ks7::serialize::to_json(base), a.engine, [&] { return ks7::kreckstolz::s_closed_type1(base); },
        [&] { return ks7::kreckstolz::s_invariants_type1(base); });
}

int run_type2(const InvariantsArgs& a, Format format)
{
    ks7::sixfold::TypeIIBase base{parse_integer(a.epsilon, "epsilon"), parse_integer(a.A, "A"), parse_integer(a.u, "u")};
    auto report = ks7::sixfold::validate_type2(base);
    if (!report.ok())
        return report_invalid(report);
    return emit_invariants(
        format, ks7::serialize::to_json(base), a.engine,
        [&] { return ks7::kreckstolz::s_closed_type2(base.epsilon, base.A, base.u); },
        [&] { return ks7::kreckstolz::s_invariants_type2(base); });
}

int run_classify(long k, long l, int r, Format format)
{
    auto d = ks7::classify::admits_free_circle_action({k, l, r});
    if (format == Format::Json) {
        json out = ks7::serialize::to_json(d);
        out["k"] = k;
        out["l"] = l;
        out["r"] = r;
        std::cout << out.dump() << "\n";
        return kExitOk;
    }
    std::cout << k << " S^2xS^5 # " << l << " S^3xS^4 # Sigma_" << r << ": " << (d.admits ? "Yes" : "No")
              << " (case " << d.case_number << ")\n";
    if (d.sphere_member)
        std::cout << "Sigma_" << r << (*d.sphere_member ? " admits" : " does not admit") << " a free circle action\n";
    return kExitOk;
}

int run_realize(const std::string& orbit_name, long bound, Format format)
{
    auto orbit = ks7::sixfold::spin_type_from_string(orbit_name);
    auto set = ks7::classify::realization_set(orbit, bound);
    if (format == Format::Json) {
        std::cout << ks7::serialize::to_json(set).dump() << "\n";
        return kExitOk;
    }
    std::cout << "orbit " << ks7::sixfold::to_string(orbit) << ", bound " << bound << "\n";
    std::cout << "members (" << set.members.size() << "):";
    for (int r : set.members)
        std::cout << " " << r;
    std::cout << "\n\n";
    std::cout << std::setw(4) << "r" << std::setw(7) << "A" << std::setw(7) << "B" << std::setw(7) << "C"
              << std::setw(7) << "D" << std::setw(7) << "u" << std::setw(7) << "v" << "\n";
    for (const auto& [r, b] : set.witnesses)
        std::cout << std::setw(4) << r << std::setw(7) << b.form.A << std::setw(7) << b.form.B << std::setw(7)
                  << b.form.C << std::setw(7) << b.form.D << std::setw(7) << b.u << std::setw(7) << b.v << "\n";
    return kExitOk;
}

std::string discrepancy_note()
{
    auto report = ks7::verify::suite_spheres({});
    return report.notes.empty() ? std::string{} : report.notes.front();
}

int run_spheres(Format format)
{
    auto set = ks7::classify::sphere_action_set();
    std::string note = discrepancy_note();
    if (format == Format::Json) {
        json out{{"members", set}, {"printed_list", ks7::classify::printed_sphere_list()}};
        if (!note.empty())
            out["note"] = note;
        std::cout << out.dump() << "\n";
        return kExitOk;
    }
    std::cout << "{";
    bool first = true;
    for (int r : set) {
        std::cout << (first ? "" : ",") << r;
        first = false;
    }
    std::cout << "}\n";
    if (!note.empty())
        std::cout << "note: " << note << "\n";
    return kExitOk;
}

int run_verify(const std::string& suite, long samples, std::uint64_t seed, Format format)
{
    if (suite != "all" && !ks7::verify::is_suite(suite)) {
        std::cerr << "unknown suite '" << suite << "'\n";
        return kExitUsage;
    }
    std::vector<std::string> names = suite == "all" ? ks7::verify::suite_names() : std::vector<std::string>{suite};
    ks7::verify::Options options{samples, seed};
    bool all_passed = true;
    json out = json::array();
    for (const auto& name : names) {
        auto report = ks7::verify::run_suite(name, options);
        all_passed = all_passed && report.passed();
        if (format == Format::Json) {
            json props = json::array();
            for (const auto& p : report.properties)
                props.push_back({{"name", p.name}, {"passed", p.passed}, {"detail", p.detail}});
            out.push_back({{"suite", name}, {"passed", report.passed()}, {"properties", props}, {"notes", report.notes}});
            continue;
        }
        for (const auto& p : report.properties)
            std::cout << (p.passed ? "PASS" : "FAIL") << "  [" << name << "] " << p.name << ": " << p.detail << "\n";
        for (const auto& n : report.notes)
            std::cout << "NOTE  [" << name << "] " << n << "\n";
        std::cout << "suite " << name << ": " << (report.passed() ? "PASS" : "FAIL") << "\n";
    }
    if (format == Format::Json)
        std::cout << out.dump() << "\n";
    return all_passed ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Kreck-Stolz invariants of circle bundles over 6-manifolds and free circle actions on "
                 "k S^2xS^5 # l S^3xS^4 # Sigma_r"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "text";
    if (const char* env = std::getenv("KS7_FORMAT"))
        format_name = env;
    app.add_option("--format", format_name, "Output format: text or json (default from KS7_FORMAT)");

    InvariantsArgs inv;
    auto* invariants = app.add_subcommand("invariants", "Compute s-invariants of a circle-bundle total space");
    invariants->require_subcommand(1);
    invariants->fallthrough();
    auto* type1 = invariants->add_subcommand("type1", "Base with invertible M_e (total space of type I)");
    auto* spin_flag = type1->add_flag("--spin", inv.spin, "Spin base");
    auto* nonspin_flag = type1->add_flag("--nonspin", inv.nonspin, "Nonspin base with w2 = e");
    spin_flag->excludes(nonspin_flag);
    type1->add_option("-A", inv.A, "mu(e,e,e)")->required();
    type1->add_option("-B", inv.B, "mu(e,e,f)")->required();
    type1->add_option("-C", inv.C, "mu(e,f,f)")->required();
    type1->add_option("-D", inv.D, "mu(f,f,f)")->required();
    type1->add_option("-u", inv.u, "p1 parameter u");
    type1->add_option("-v", inv.v, "p1 parameter v");
    type1->add_option("--engine", inv.engine, "closed, generic or both")
        ->check(CLI::IsMember({"closed", "generic", "both"}));

    auto* type2 = invariants->add_subcommand("type2", "Base with singular M_e (total space of type II)");
    type2->add_option("--epsilon", inv.epsilon, "mu(e,e,e) = +1 or -1")->required();
    type2->add_option("-A", inv.A, "mu(e,e,f)")->required();
    type2->add_option("-u", inv.u, "p1 parameter u");
    type2->add_option("--engine", inv.engine, "closed, generic or both")
        ->check(CLI::IsMember({"closed", "generic", "both"}));

    long k = 0, l = 0;
    int r = 0;
    auto* classify = app.add_subcommand("classify", "Does k S^2xS^5 # l S^3xS^4 # Sigma_r admit a free circle action?");
    classify->add_option("-k", k, "copies of S^2 x S^5")->required()->check(CLI::NonNegativeNumber);
    classify->add_option("-l", l, "copies of S^3 x S^4")->required()->check(CLI::NonNegativeNumber);
    classify->add_option("-r", r, "homotopy sphere index in [0, 28)")->required();

    std::string orbit = "spin";
    long bound = 6;
    auto* realize = app.add_subcommand("realize", "Residues r with S^2xS^5 # Sigma_r a circle-bundle total space");
    realize->add_option("--orbit", orbit, "spin or nonspin")->check(CLI::IsMember({"spin", "nonspin", "nonspinE"}));
    realize->add_option("--bound", bound, "search bound")->check(CLI::NonNegativeNumber);

    auto* spheres = app.add_subcommand("spheres", "Homotopy 7-spheres admitting a free circle action");

    std::string suite = "all";
    long samples = 10000;
    std::uint64_t seed = 0;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "nt, jupp, pipeline, f2det, spheres or all");
    verify->add_option("--samples", samples, "random samples per property")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Format format = parse_format(format_name);
        if (type1->parsed())
            return run_type1(inv, format);
        if (type2->parsed())
            return run_type2(inv, format);
        if (classify->parsed()) {
            if (r < 0 || r >= ks7::classify::kSphereCount) {
                std::cerr << "r must lie in [0, 28), got " << r << "\n";
                return kExitUsage;
            }
            return run_classify(k, l, r, format);
        }
        if (realize->parsed())
            return run_realize(orbit, bound, format);
        if (spheres->parsed())
            return run_spheres(format);
        if (verify->parsed())
            return run_verify(suite, samples, seed, format);
    } catch (const ks7::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
