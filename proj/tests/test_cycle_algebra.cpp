#include <random>

#include "doctest.h"

#include "delpezzo/cycle_algebra.hpp"
#include "delpezzo/errors.hpp"
#include "delpezzo/incidence.hpp"

using namespace delpezzo;

namespace {

NegOneCurve curve_of(const DelPezzoContext& ctx, const DivisorClass& x) {
    for (const auto& c : enumerate_neg_one(ctx))
        if (c.cls == x) return c;
    FAIL("class not enumerated");
    return {};
}

}  // namespace

TEST_CASE("curve functions have degree-zero divisors") {
    CHECK_NOTHROW(CurveFunction({{"p", 1}, {"q", -1}}));
    CHECK_THROWS_AS(CurveFunction({{"p", 1}, {"q", -2}}), DomainError);
    CHECK_THROWS_AS(CurveFunction({{"p", 1}, {"q", -1}}, "p"), DomainError);
    const CurveFunction f({{"p", 2}, {"q", -2}, {"r", 0}}, "s");
    CHECK(f.orders().size() == 2);
    CHECK(f.inverse().orders().at("p") == -2);
    CHECK(f.inverse().anchor() == f.anchor());
    CHECK(f.inverse().inverse() == f);
    CHECK(CurveFunction::constant("a").inverse().constant_label() == "(a)^-1");
    CHECK(CurveFunction::constant("-1").inverse() == CurveFunction::constant("-1"));
}

TEST_CASE("cocycle check") {
    FormalPrecycle z;
    z.terms.push_back({"A", CurveFunction({{"p", 1}, {"q", -1}})});
    CHECK_FALSE(cocycle_check(z));
    z.terms.push_back({"B", CurveFunction({{"p", -1}, {"q", 1}})});
    CHECK(cocycle_check(z));
    CHECK(cocycle_check(FormalPrecycle{}));
    z.terms.push_back({"C", CurveFunction({{"p", 1}, {"r", -1}})});
    const auto div = total_divisor(z);
    CHECK(div.size() == 2);
    CHECK(div.at("p") == 1);
    CHECK(div.at("r") == -1);
    CHECK(cocycle_check(z - z));
}

TEST_CASE("lifting points to the cover") {
    CHECK(lift({"P", PointLocation::OffBranch}).size() == 2);
    CHECK(lift({"P", PointLocation::OffBranch})[1].id == "P#2");
    const auto on = lift({"P", PointLocation::OnBranch});
    REQUIRE(on.size() == 1);
    CHECK(on[0].id == "P~");
}

TEST_CASE("Xi off the branch curve") {
    const DelPezzoContext ctx(2);
    const auto line = curve_of(ctx, DivisorClass(1, {1, 1, 0, 0, 0, 0, 0}));
    const auto conic = curve_of(ctx, DivisorClass(2, {0, 0, 1, 1, 1, 1, 1}));
    REQUIRE(pair(line.cls, conic.cls) == 2);
    const auto xi = build_xi(line, conic, {"P", PointLocation::OffBranch});
    REQUIRE(xi.terms.size() == 2);
    CHECK(cocycle_check(xi));
    CHECK(xi.terms[0].curve == lifted_curve_id(line));
    CHECK(xi.terms[0].function.orders().at("P#1") == 1);
    CHECK(xi.terms[0].function.orders().at("P#2") == -1);
    CHECK(xi.terms[0].function.anchor() == s_point_id(line));
    CHECK(xi.terms[1].function.orders().at("P#1") == -1);
}

TEST_CASE("Xi on the branch curve with an exceptional member") {
    const DelPezzoContext ctx(2);
    const auto e1 = curve_of(ctx, DivisorClass::exceptional(ctx, 1));
    const auto line = curve_of(ctx, DivisorClass(1, {1, 1, 0, 0, 0, 0, 0}));
    const auto xi = build_xi(e1, line, {"P", PointLocation::OnBranch});
    REQUIRE(xi.terms.size() == 2);
    CHECK(cocycle_check(xi));
    CHECK_FALSE(xi.terms[0].function.anchor().has_value());
    CHECK(xi.terms[1].function.anchor() == s_point_id(line));
}

TEST_CASE("Xi on the branch curve between two non-exceptional curves") {
    const DelPezzoContext ctx(2);
    const auto line = curve_of(ctx, DivisorClass(1, {1, 1, 0, 0, 0, 0, 0}));
    const auto conic = curve_of(ctx, DivisorClass(2, {0, 0, 1, 1, 1, 1, 1}));
    const SurfacePoint p{"P", PointLocation::OnBranch};
    const auto xi = build_xi(line, conic, p);
    REQUIRE(xi.terms.size() == 4);
    CHECK(cocycle_check(xi));
    int on_fibre = 0;
    for (const auto& t : xi.terms)
        if (t.curve == exceptional_fibre_id(p)) ++on_fibre;
    CHECK(on_fibre == 2);
}

TEST_CASE("Xi errors") {
    const DelPezzoContext ctx(3);
    const auto e1 = curve_of(ctx, DivisorClass::exceptional(ctx, 1));
    const auto e2 = curve_of(ctx, DivisorClass::exceptional(ctx, 2));
    const auto l12 = curve_of(ctx, DivisorClass(1, {1, 1, 0, 0, 0, 0}));
    CHECK_THROWS_AS(build_xi(e1, e2, {"P", PointLocation::OffBranch}), DomainError);
    CHECK_THROWS_AS(build_xi(e1, l12, {"P", PointLocation::Generic}), InputError);
    CHECK_THROWS_AS(build_xi(e1, l12, {"P", PointLocation::Node}), InputError);
}

TEST_CASE("property: Xi is a cocycle for every meeting pair") {
    for (int d : {1, 2, 3, 5}) {
        const DelPezzoContext ctx(d);
        const IncidenceGraph g = build_graph(enumerate_neg_one(ctx));
        for (const auto& p : candidate_cycle_pairs(g))
            for (auto loc : {PointLocation::OnBranch, PointLocation::OffBranch}) {
                const auto xi = build_xi(g.node(p.i), g.node(p.j), {"P", loc});
                CHECK(cocycle_check(xi));
                CHECK(cocycle_check(xi.negated()));
            }
    }
}

TEST_CASE("decomposable cycles") {
    const auto one = decomposable_cycle("C", "1");
    CHECK(one.boundary({}).is_zero());
    CHECK(one.boundary({{"s0", 0}}).is_zero());
    CHECK_THROWS_AS(one.boundary({{"s0", 1}}), DomainError);
    CHECK(cocycle_check(one.precycle()));

    const auto a = decomposable_cycle("C", "a");
    CHECK(a.boundary({{"s0", 1}}) == FormalSum::single("C|s0"));
    const auto b = a.boundary({{"s0", 2}, {"s1", -2}});
    CHECK(b.coefficient("C|s0") == 2);
    CHECK(b.coefficient("C|s1") == -2);
    CHECK(b.to_string() == "2*C|s0 - 2*C|s1");
}

TEST_CASE("formal sums") {
    FormalSum s = FormalSum::single("T11") - FormalSum::single("T12");
    CHECK(s.to_string() == "T11 - T12");
    CHECK((s + FormalSum::single("T12")).to_string() == "T11");
    CHECK((s - s).is_zero());
    CHECK((s - s).to_string() == "0");
    CHECK((Coeff{-3} * s).to_string() == "-3*T11 + 3*T12");
}

TEST_CASE("property: negation inverts the total divisor") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> ord(-4, 4);
    const std::vector<std::string> pts{"p", "q", "r", "s"};
    for (int trial = 0; trial < 200; ++trial) {
        FormalPrecycle z;
        for (int t = 0; t < 3; ++t) {
            std::map<std::string, Coeff> orders;
            Coeff total = 0;
            for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
                orders[pts[i]] = ord(rng);
                total += orders[pts[i]];
            }
            orders[pts.back()] = -total;
            z.terms.push_back({"C" + std::to_string(t), CurveFunction(orders)});
        }
        auto neg = total_divisor(z.negated());
        for (const auto& [p, k] : total_divisor(z)) CHECK(neg[p] == -k);
        CHECK(cocycle_check(z + z.negated()));
    }
}
