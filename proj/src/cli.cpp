#include "delpezzo/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "delpezzo/errors.hpp"
#include "delpezzo/serialize.hpp"
#include "delpezzo/verification.hpp"

namespace delpezzo {

namespace {

struct Options {
    std::optional<int> degree;
    bool as_json = false;
    bool as_csv = false;
    std::string out_path;
    std::string f_text;
    std::string g_text;
    std::string itable_path;
    long max_degree = 10;
};

struct Outcome {
    json payload = json::object();
    std::vector<Claim> claims;
    std::string csv;  // enumerate --csv only
};

std::vector<int> selected_degrees(const Options& opt) {
    if (opt.degree) return {DelPezzoContext(*opt.degree).degree()};
    return all_degrees();
}

std::string key(int d) { return std::to_string(d); }

Outcome cmd_enumerate(const Options& opt) {
    Outcome o;
    for (int d : selected_degrees(opt)) {
        const auto curves = enumerate_neg_one(DelPezzoContext(d));
        json records = json::array();
        for (const auto& c : curves) records.push_back(curve_to_json(c));
        o.payload[key(d)] = records;
        if (opt.as_csv) o.csv += "# degree " + key(d) + "\n" + curves_to_csv(curves);
    }
    o.claims = count_table_claims(selected_degrees(opt));
    return o;
}

Outcome cmd_census(const Options& opt) {
    Outcome o;
    for (int d : selected_degrees(opt)) {
        json entry = json::object();
        std::size_t total = 0;
        for (const auto& [kind, count] : type_census(DelPezzoContext(d))) {
            entry[std::string(to_string(kind))] = count;
            total += count;
        }
        entry["total"] = total;
        o.payload[key(d)] = entry;
    }
    o.claims = census_claims(selected_degrees(opt));
    return o;
}

Outcome cmd_incidence(const Options& opt) {
    Outcome o;
    for (int d : selected_degrees(opt)) {
        const IncidenceGraph g(enumerate_neg_one(DelPezzoContext(d)));
        json histogram = json::object();
        for (const auto& [value, count] : g.histogram()) histogram[std::to_string(value)] = count;
        json meets = json::array();
        for (std::size_t i = 0; i < g.size(); ++i) meets.push_back(meets_count(g, i));
        o.payload[key(d)] = {{"degree", d}, {"n", g.size()}, {"histogram", histogram}, {"meets_count", meets}};
    }
    o.claims = incidence_claims(selected_degrees(opt));
    return o;
}

Outcome cmd_pairs(const Options& opt) {
    Outcome o;
    for (int d : selected_degrees(opt)) {
        const IncidenceGraph g(enumerate_neg_one(DelPezzoContext(d)));
        json list = json::array();
        for (const auto& p : candidate_cycle_pairs(g)) {
            list.push_back({{"i", p.i},
                            {"j", p.j},
                            {"m", p.multiplicity},
                            {"first", describe(g.node(p.i).type)},
                            {"second", describe(g.node(p.j).type)}});
        }
        o.payload[key(d)] = {{"count", list.size()}, {"note", kGenericPositionNote}, {"pairs", list}};
    }
    o.claims = candidate_pair_claims(selected_degrees(opt));
    return o;
}

Outcome cmd_bitangents(const Options& opt) {
    const DelPezzoContext ctx(opt.degree.value_or(2));
    const auto report = bitangent_pairs(ctx);
    Outcome o;
    json list = json::array();
    for (const auto& p : report.pairs) {
        list.push_back({{"first", curve_to_json(p.first)},
                        {"second", curve_to_json(p.second)},
                        {"types", p.composition()},
                        {"intersection", pair(p.first.cls, p.second.cls)}});
    }
    o.payload = {{"degree", 2}, {"pairs", list}, {"composition", report.composition}};
    o.claims = bitangent_claims();
    return o;
}

Outcome cmd_double_sixes(const Options& opt) {
    const DelPezzoContext ctx(opt.degree.value_or(3));
    const auto sixes = double_sixes(ctx);
    Outcome o;
    json list = json::array();
    for (const auto& ds : sixes) list.push_back({{"first", ds.first}, {"second", ds.second}});
    o.payload = {{"degree", 3}, {"count", sixes.size()}, {"double_sixes", list}};
    o.claims = double_six_claims();
    return o;
}

Outcome cmd_verify_lemma(const Options& opt) {
    Outcome o;
    for (int d : selected_degrees(opt)) {
        json records = json::array();
        for (const auto& c : enumerate_neg_one(DelPezzoContext(d))) {
            if (c.type.kind == CurveKind::Exceptional) continue;
            const auto rec = verify_branch_lemma(c);
            records.push_back({{"id", c.id},
                               {"type", describe(c.type)},
                               {"e", rec.e},
                               {"sum_b", rec.sum_b},
                               {"residual", rec.residual}});
        }
        o.payload[key(d)] = {{"checked", records.size()}, {"records", records}};
    }
    o.claims = branch_lemma_claims(selected_degrees(opt));
    return o;
}

Outcome cmd_tame(const Options& opt) {
    const auto f = LinearFormFunction::parse(opt.f_text);
    const auto g = LinearFormFunction::parse(opt.g_text);
    const TameSymbol t = tame_symbol(f, g);
    Outcome o;
    o.payload = tame_to_json(t);
    o.claims.push_back(make_claim("tame symbol cocycle", true, cocycle_check(t.precycle)));
    return o;
}

Outcome cmd_boundary_replay(const Options& opt) {
    json overrides;
    if (!opt.itable_path.empty()) {
        std::ifstream in(opt.itable_path);
        if (!in) throw InputError("cannot open " + opt.itable_path);
        try {
            overrides = json::parse(in);
        } catch (const json::exception& e) {
            throw InputError("invalid JSON in " + opt.itable_path + ": " + e.what());
        }
    }
    const DegenerationModel m = model_from_json(overrides);
    const BoundaryReplay r = replay_boundary(m);
    Outcome o;
    o.payload = replay_to_json(m, r);
    o.claims.push_back(make_claim("witness matches anti-invariant part", !anti_invariant_part(m, r.boundary).is_zero(),
                                  r.indecomposable));
    if (opt.itable_path.empty()) {
        for (auto& c : boundary_claims()) o.claims.push_back(std::move(c));
    }
    return o;
}

Outcome cmd_count_rational(const Options& opt) {
    if (opt.max_degree < 1) throw InputError("--max-degree must be at least 1");
    Outcome o;
    o.payload = count_table_to_json(kontsevich_table(opt.max_degree));
    o.claims = rational_count_claims(opt.max_degree);
    return o;
}

Outcome cmd_report(const Options&) {
    Outcome o;
    o.claims = full_report();
    std::size_t failed = 0;
    for (const auto& c : o.claims) failed += c.pass ? 0 : 1;
    o.payload = {{"claims_total", o.claims.size()}, {"claims_failed", failed}};
    return o;
}

std::string render_value(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Same data as the JSON form, one flattened entry per line.
std::string render_text(const json& report) {
    std::ostringstream os;
    os << "tool_version: " << render_value(report.at("tool_version")) << "\n";
    os << "command: " << render_value(report.at("command")) << "\n";
    os << "status: " << render_value(report.at("status")) << "\n";
    for (const auto& c : report.at("claims")) {
        os << (c.at("pass").get<bool>() ? "PASS  " : "FAIL  ") << render_value(c.at("name"))
           << "  expected=" << render_value(c.at("expected")) << "  actual=" << render_value(c.at("actual")) << "\n";
    }
    const json flat = report.at("payload").flatten();
    for (const auto& [path, value] : flat.items()) os << "payload" << path << " = " << render_value(value) << "\n";
    return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact (-1)-curve combinatorics and motivic precycle bookkeeping on del Pezzo surfaces", "delpezzo"};
    app.require_subcommand(1);
    Options opt;

    using Handler = std::function<Outcome(const Options&)>;
    std::vector<std::pair<CLI::App*, Handler>> commands;
    const auto add = [&](const std::string& name, const std::string& help, Handler h) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_flag("--json", opt.as_json, "Emit the report as JSON");
        sub->add_option("--out", opt.out_path, "Write the report to this file instead of stdout");
        commands.emplace_back(sub, std::move(h));
        return sub;
    };
    const auto with_degree = [&](CLI::App* sub) { sub->add_option("--degree", opt.degree, "Degree d in [1, 9]"); };

    auto* enumerate = add("enumerate", "List the (-1)-classes", cmd_enumerate);
    with_degree(enumerate);
    enumerate->add_flag("--csv", opt.as_csv, "Emit CSV rows with the textual class form");
    with_degree(add("census", "Count (-1)-curves by type", cmd_census));
    with_degree(add("incidence", "Intersection histogram and meets counts", cmd_incidence));
    with_degree(add("pairs", "Curve pairs with positive intersection", cmd_pairs));
    with_degree(add("bitangents", "Degree 2: the 28 pairs {D, -K - D}", cmd_bitangents));
    with_degree(add("double-sixes", "Degree 3: all double-sixes", cmd_double_sixes));
    with_degree(add("verify-lemma", "Branch-curve intersection residuals", cmd_verify_lemma));
    auto* tame = add("tame", "Tame symbol of two products of linear forms", cmd_tame);
    tame->add_option("--f", opt.f_text, "Factors 'a,b,c^e;...' of f")->required();
    tame->add_option("--g", opt.g_text, "Factors 'a,b,c^e;...' of g")->required();
    auto* replay = add("boundary-replay", "Replay the boundary computation for Xi", cmd_boundary_replay);
    replay->add_option("--itable", opt.itable_path, "JSON overrides for the degeneration model");
    auto* count = add("count-rational", "Kontsevich counts N_d", cmd_count_rational);
    count->add_option("--max-degree", opt.max_degree, "Largest degree to tabulate");
    add("report", "Run every verification claim across degrees 1-9", cmd_report);

    std::vector<std::string> argv_storage{"delpezzo"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitBadInput;
    }

    try {
        for (const auto& [sub, handler] : commands) {
            if (!sub->parsed()) continue;
            Outcome o = handler(opt);
            bool all_pass = true;
            json claims = json::array();
            for (const auto& c : o.claims) {
                all_pass = all_pass && c.pass;
                claims.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
            }
            json report = {{"tool_version", kToolVersion},
                           {"command", sub->get_name()},
                           {"claims", claims},
                           {"payload", o.payload},
                           {"status", all_pass ? "pass" : "fail"}};

            std::string text;
            if (opt.as_csv) text = o.csv;
            else if (opt.as_json) text = report.dump(2) + "\n";
            else text = render_text(report);

            if (opt.out_path.empty()) {
                out << text;
            } else {
                std::ofstream file(opt.out_path);
                if (!file) throw InputError("cannot write " + opt.out_path);
                file << text;
            }
            if (opt.as_csv) {
                for (const auto& c : o.claims) err << (c.pass ? "PASS  " : "FAIL  ") << c.name << "\n";
            }
            return all_pass ? kExitOk : kExitClaimFailed;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const GeometryError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const ModelError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}

}  // namespace delpezzo
