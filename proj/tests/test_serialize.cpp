#include <random>
#include <sstream>

#include "doctest.h"

#include "delpezzo/errors.hpp"
#include "delpezzo/incidence.hpp"
#include "delpezzo/serialize.hpp"

using namespace delpezzo;

TEST_CASE("class JSON round trip") {
    for (int d = 1; d <= 8; ++d)
        for (const auto& c : enumerate_neg_one(DelPezzoContext(d)))
            CHECK(class_from_json(class_to_json(c.cls)) == c.cls);
    CHECK(class_to_json(DivisorClass(1, {1, 1, 0})).dump() == "[1,1,1,0]");
    CHECK_THROWS_AS(class_from_json(json::array()), InputError);
    CHECK_THROWS_AS(class_from_json(json::parse("[1, \"x\"]")), InputError);
    CHECK_THROWS_AS(class_from_json(json::parse("{\"a\": 1}")), InputError);
}

TEST_CASE("curve records") {
    const auto curves = enumerate_neg_one(DelPezzoContext(1));
    for (const auto& c : curves) {
        const json j = curve_to_json(c);
        CHECK(j.at("id") == c.id);
        CHECK(j.at("type") == std::string(to_string(c.type.kind)));
        CHECK(j.contains("omitted") == !c.type.omitted.empty());
    }

    const std::string csv = curves_to_csv(enumerate_neg_one(DelPezzoContext(7)));
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    CHECK(line == "id,class,type,indices");
    int rows = 0;
    while (std::getline(is, line)) ++rows;
    CHECK(rows == 3);
    CHECK(csv.find("\"1H - 1*E1 - 1*E2\",Line,\"L(1,2)\"") != std::string::npos);
}

TEST_CASE("property: precycle JSON round trip") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> ord(-3, 3);
    std::uniform_int_distribution<int> coin(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        FormalPrecycle z;
        const int n = 1 + coin(rng);
        for (int t = 0; t < n; ++t) {
            const std::string curve = "C" + std::to_string(coin(rng));
            if (coin(rng) == 0) {
                z.terms.push_back({curve, CurveFunction::constant(coin(rng) % 2 ? "-1" : "a")});
                continue;
            }
            std::map<std::string, Coeff> orders;
            Coeff total = 0;
            for (int k = 0; k < 3; ++k) total += orders["p" + std::to_string(k)] = ord(rng);
            orders["q"] = -total;
            std::optional<std::string> anchor;
            if (coin(rng) > 1) anchor = "s[" + curve + "]";
            z.terms.push_back({curve, CurveFunction(orders, anchor)});
        }
        const json j = precycle_to_json(z);
        const FormalPrecycle back = precycle_from_json(json::parse(j.dump()));
        CHECK(back.terms == z.terms);
        CHECK(precycle_to_json(back) == j);
    }
    CHECK_THROWS_AS(precycle_from_json(json::parse("{\"terms\": [{\"curve\": \"C\"}]}")), InputError);
    CHECK_THROWS_AS(precycle_from_json(json::parse("{\"terms\": [{\"curve\": \"C\", \"orders\": {\"p\": 1}}]}")),
                    DomainError);
}

TEST_CASE("model overrides") {
    const auto standard = model_from_json(json::object());
    CHECK(replay_boundary(standard).boundary.to_string() == "T11 - T12");

    const auto m = model_from_json(json::parse(R"({
        "intersections": [{"x": "H", "y": "T11", "value": 2}],
        "other_components": [{"label": "Z1"}, {"label": "Z2", "swap_with": "Z1"}]
    })"));
    CHECK(m.intersection("H", "T11") == 2);
    CHECK(m.components().size() == 6);
    const auto r = replay_boundary(m);
    CHECK(r.boundary.to_string() == "2*T11 - 2*T12");
    const json out = replay_to_json(m, r);
    CHECK(out.at("a") == 2);
    CHECK(out.at("constraints").size() == 3);

    CHECK(model_from_json(json::parse(R"({"splitting": "none"})")).splitting == Splitting::None);
    CHECK_THROWS_AS(model_from_json(json::parse(R"({"splitting": "sideways"})")), InputError);
    CHECK_THROWS_AS(model_from_json(json::parse(R"({"intersections": [{"x": "Q", "y": "T11", "value": 1}]})")),
                    InputError);
    CHECK_THROWS_AS(model_from_json(json::parse("[1]")), InputError);
}

TEST_CASE("count table is emitted as decimal strings") {
    const json j = count_table_to_json(kontsevich_table(4));
    CHECK(j.dump() == R"({"1":"1","2":"1","3":"12","4":"620"})");
}
