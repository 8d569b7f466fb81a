#include "ks7/serialize.hpp"

#include "ks7/errors.hpp"

#include <string>

namespace ks7::serialize {

using exactmath::Integer;
using exactmath::QmodZ;
using exactmath::Rational;

json integer_to_json(const Integer& n)
{
    if (n.fits_slong_p())
        return json(static_cast<std::int64_t>(n.get_si()));
    return json(n.get_str());
}

Integer integer_from_json(const json& j)
{
    if (j.is_number_integer())
        return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw BadInput("expected an integer, got " + j.dump());
}

json to_json(const Rational& q) { return q.to_string(); }
json to_json(const QmodZ& q) { return q.to_string(); }

json to_json(const sixfold::TypeIBase& b)
{
    return {{"type", "I"},
            {"spin", sixfold::to_string(b.spin)},
            {"A", integer_to_json(b.form.A)},
            {"B", integer_to_json(b.form.B)},
            {"C", integer_to_json(b.form.C)},
            {"D", integer_to_json(b.form.D)},
            {"u", integer_to_json(b.u)},
            {"v", integer_to_json(b.v)}};
}

json to_json(const sixfold::TypeIIBase& b)
{
    return {{"type", "II"},
            {"epsilon", integer_to_json(b.epsilon)},
            {"A", integer_to_json(b.A)},
            {"u", integer_to_json(b.u)}};
}

json to_json(const sixfold::ValidationReport& report)
{
    return {{"valid", report.ok()}, {"violations", report.violations}};
}

json to_json(const kreckstolz::CharNumbers& ch)
{
    return {{"sigma", ch.sigma},
            {"p1_sq", integer_to_json(ch.p1_sq)},
            {"c2_p1", integer_to_json(ch.c2_p1)},
            {"zc_p1", integer_to_json(ch.zc_p1)},
            {"z2_p1", integer_to_json(ch.z2_p1)},
            {"c4", integer_to_json(ch.c4)},
            {"zc_c2", integer_to_json(ch.zc_c2)},
            {"zc_zc", integer_to_json(ch.zc_zc)},
            {"z2_c2", integer_to_json(ch.z2_c2)},
            {"z2_zc", integer_to_json(ch.z2_zc)},
            {"z4", integer_to_json(ch.z4)}};
}

json to_json(const kreckstolz::SInvariants& s)
{
    return {{"s1", to_json(s.s1)}, {"s1x28", to_json(s.s1_times_28)}, {"s2", to_json(s.s2)}, {"s3", to_json(s.s3)}};
}

json to_json(const classify::RealizationSet& set)
{
    json witnesses = json::object();
    for (const auto& [r, base] : set.witnesses)
        witnesses[std::to_string(r)] = to_json(base);
    return {{"members", set.members}, {"witnesses", witnesses}};
}

json to_json(const classify::Decision& d)
{
    json out = {{"admits", d.admits}, {"case", d.case_number}};
    if (d.sphere_member)
        out["sphere_admits_free_action"] = *d.sphere_member;
    return out;
}

namespace {

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw BadInput(std::string("missing field '") + key + "'");
    return j.at(key);
}

QmodZ qmodz_from_json(const json& j)
{
    if (!j.is_string())
        throw BadInput("expected a \"p/q\" string, got " + j.dump());
    return QmodZ(Rational::parse(j.get<std::string>()));
}

} // namespace

sixfold::TypeIBase type1_from_json(const json& j)
{
    if (field(j, "type") != "I")
        throw BadInput("expected a type I base");
    sixfold::TypeIBase b;
    b.spin = sixfold::spin_type_from_string(field(j, "spin").get<std::string>());
    b.form = {integer_from_json(field(j, "A")), integer_from_json(field(j, "B")), integer_from_json(field(j, "C")),
              integer_from_json(field(j, "D"))};
    b.u = integer_from_json(field(j, "u"));
    b.v = integer_from_json(field(j, "v"));
    return b;
}

sixfold::TypeIIBase type2_from_json(const json& j)
{
    if (field(j, "type") != "II")
        throw BadInput("expected a type II base");
    return {integer_from_json(field(j, "epsilon")), integer_from_json(field(j, "A")), integer_from_json(field(j, "u"))};
}

kreckstolz::SInvariants s_invariants_from_json(const json& j)
{
    return {qmodz_from_json(field(j, "s1")), qmodz_from_json(field(j, "s1x28")), qmodz_from_json(field(j, "s2")),
            qmodz_from_json(field(j, "s3"))};
}

classify::RealizationSet realization_set_from_json(const json& j)
{
    classify::RealizationSet set;
    for (const auto& m : field(j, "members"))
        set.members.insert(m.get<int>());
    for (const auto& [key, value] : field(j, "witnesses").items())
        set.witnesses.emplace(std::stoi(key), type1_from_json(value));
    return set;
}

} // namespace ks7::serialize
