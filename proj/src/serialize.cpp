#include "delpezzo/serialize.hpp"

#include <sstream>

#include "delpezzo/errors.hpp"

namespace delpezzo {

json class_to_json(const DivisorClass& x) { return json(x.coefficients()); }

DivisorClass class_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw InputError("divisor class must be a non-empty integer array");
    std::vector<Coeff> coeffs;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InputError("divisor class entries must be integers");
        coeffs.push_back(v.get<Coeff>());
    }
    return DivisorClass::from_coefficients(coeffs);
}

json curve_to_json(const NegOneCurve& c) {
    json j = {
        {"id", c.id},
        {"class", class_to_json(c.cls)},
        {"type", std::string(to_string(c.type.kind))},
        {"indices", c.type.points},
    };
    if (!c.type.omitted.empty()) j["omitted"] = c.type.omitted;
    return j;
}

std::string curves_to_csv(const std::vector<NegOneCurve>& curves) {
    std::ostringstream os;
    os << "id,class,type,indices\n";
    for (const auto& c : curves) {
        os << c.id << ",\"" << c.cls.to_string() << "\"," << to_string(c.type.kind) << ",\"" << describe(c.type)
           << "\"\n";
    }
    return os.str();
}

json precycle_to_json(const FormalPrecycle& z) {
    json terms = json::array();
    for (const auto& t : z.terms) {
        json orders = json::object();
        for (const auto& [point, ord] : t.function.orders()) orders[point] = ord;
        json term = {{"curve", t.curve}, {"orders", orders}, {"anchor", nullptr}};
        if (t.function.anchor()) term["anchor"] = *t.function.anchor();
        if (t.function.constant_label()) term["constant"] = *t.function.constant_label();
        terms.push_back(std::move(term));
    }
    return {{"terms", terms}};
}

FormalPrecycle precycle_from_json(const json& j) {
    FormalPrecycle z;
    try {
        for (const auto& term : j.at("terms")) {
            if (term.contains("constant")) {
                z.terms.push_back({term.at("curve").get<std::string>(),
                                   CurveFunction::constant(term.at("constant").get<std::string>())});
                continue;
            }
            std::map<std::string, Coeff> orders;
            for (const auto& [point, ord] : term.at("orders").items()) orders[point] = ord.get<Coeff>();
            std::optional<std::string> anchor;
            if (term.contains("anchor") && !term.at("anchor").is_null()) anchor = term.at("anchor").get<std::string>();
            z.terms.push_back({term.at("curve").get<std::string>(), CurveFunction(std::move(orders), anchor)});
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed precycle JSON: ") + e.what());
    }
    return z;
}

json formal_sum_to_json(const FormalSum& s) {
    json j = json::object();
    for (const auto& [label, c] : s.terms()) j[label] = c;
    return j;
}

json tame_to_json(const TameSymbol& t) {
    json components = json::array();
    for (const auto& c : t.components) {
        json factors = json::array();
        for (const auto& [form, e] : c.factors) factors.push_back({{"form", form.to_string()}, {"exponent", e}});
        components.push_back({{"line", c.line.to_string()}, {"sign", c.sign}, {"factors", factors}});
    }
    return {{"precycle", precycle_to_json(t.precycle)}, {"components", components}};
}

DegenerationModel model_from_json(const json& overrides) {
    DegenerationModel m = DegenerationModel::standard();
    if (overrides.is_null()) return m;
    if (!overrides.is_object()) throw InputError("intersection-table override must be a JSON object");
    try {
        if (overrides.contains("other_components")) {
            for (const auto& z : overrides.at("other_components")) {
                const std::string label = z.at("label").get<std::string>();
                m.add_component({ComponentKind::OtherZ, label, z.value("a_z", Coeff{0})});
                m.set_intersection(label, "T11", z.value("t11", Coeff{0}));
            }
            for (const auto& z : overrides.at("other_components"))
                if (z.contains("swap_with"))
                    m.swap_in_involution(z.at("label").get<std::string>(), z.at("swap_with").get<std::string>());
        }
        if (overrides.contains("intersections")) {
            for (const auto& e : overrides.at("intersections"))
                m.set_intersection(e.at("x").get<std::string>(), e.at("y").get<std::string>(), e.at("value").get<Coeff>());
        }
        if (overrides.contains("p1_component")) m.p1_component = overrides.at("p1_component").get<std::string>();
        if (overrides.contains("splitting")) {
            const std::string s = overrides.at("splitting").get<std::string>();
            if (s == "none") m.splitting = Splitting::None;
            else if (s == "first") m.splitting = Splitting::FirstCurve;
            else if (s == "both") m.splitting = Splitting::BothCurves;
            else throw InputError("splitting must be none, first or both");
        }
        if (overrides.value("identity_involution", false)) m.set_identity_involution();
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed intersection-table override: ") + e.what());
    } catch (const ModelError& e) {
        throw InputError(e.what());
    }
    return m;
}

json replay_to_json(const DegenerationModel& m, const BoundaryReplay& r) {
    json constraints = json::array();
    for (const auto& c : r.constraints.constraints) constraints.push_back(describe(m, c));
    json j = {
        {"constraints", constraints},
        {"degenerate_involution", r.constraints.degenerate},
        {"boundary", r.boundary.to_string()},
        {"boundary_terms", formal_sum_to_json(r.boundary)},
        {"indecomposable", r.indecomposable},
    };
    if (r.decomposition.solved) {
        j["a"] = r.decomposition.a;
        j["b"] = r.decomposition.b;
        j["c"] = r.decomposition.c;
    } else {
        j["a"] = j["b"] = j["c"] = nullptr;
    }
    return j;
}

json count_table_to_json(const std::map<long, BigInt>& table) {
    json j = json::object();
    for (const auto& [d, n] : table) j[std::to_string(d)] = n.get_str();
    return j;
}

}  // namespace delpezzo
