#include <set>

#include "doctest.h"

#include "delpezzo/errors.hpp"
#include "delpezzo/neg_one.hpp"

using namespace delpezzo;

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t out = 1;
    for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

// Naive oracle: every vector in a fixed box, no pruning, no ordering tricks.
std::set<DivisorClass> brute_force_neg_one(int r, Coeff a_max, Coeff b_max) {
    std::set<DivisorClass> out;
    std::vector<Coeff> b(r, -1);
    for (Coeff a = 0; a <= a_max; ++a) {
        std::fill(b.begin(), b.end(), -1);
        for (;;) {
            const DivisorClass x(a, b);
            if (is_neg_one_class(x)) out.insert(x);
            int k = 0;
            while (k < r && b[k] == b_max) b[k++] = -1;
            if (k == r) break;
            ++b[k];
        }
    }
    return out;
}

}  // namespace

TEST_CASE("count table") {
    const std::size_t expected[] = {0, 240, 56, 27, 16, 10, 6, 3, 1, 0};
    for (int d = 1; d <= 9; ++d) CHECK(enumerate_neg_one(DelPezzoContext(d)).size() == expected[d]);
}

TEST_CASE("enumeration agrees with a naive box search for r <= 6") {
    for (int d = 3; d <= 9; ++d) {
        const DelPezzoContext ctx(d);
        std::set<DivisorClass> fast;
        for (const auto& c : enumerate_neg_one(ctx)) fast.insert(c.cls);
        CHECK(fast == brute_force_neg_one(ctx.num_points(), 5, 4));
    }
}

TEST_CASE("enumeration is in lexicographic order with matching ids") {
    const auto curves = enumerate_neg_one(DelPezzoContext(1));
    for (std::size_t i = 0; i < curves.size(); ++i) {
        CHECK(curves[i].id == i);
        if (i > 0) CHECK(curves[i - 1].cls < curves[i].cls);
    }
    CHECK(curves.front().cls.a() == 0);
    CHECK(curves.back().cls == DivisorClass(6, {3, 2, 2, 2, 2, 2, 2, 2}));
}

TEST_CASE("type census against binomial counts") {
    const auto d1 = type_census(DelPezzoContext(1));
    CHECK(d1.at(CurveKind::Exceptional) == 8);
    CHECK(d1.at(CurveKind::Line) == binom(8, 2));
    CHECK(d1.at(CurveKind::Conic) == binom(8, 5));
    CHECK(d1.at(CurveKind::Cubic) == 8 * 7);
    CHECK(d1.at(CurveKind::Quartic) == binom(8, 3));
    CHECK(d1.at(CurveKind::Quintic) == binom(8, 6));
    CHECK(d1.at(CurveKind::Sextic) == 8);

    const auto d2 = type_census(DelPezzoContext(2));
    CHECK(d2.size() == 4);
    CHECK(d2.at(CurveKind::Exceptional) == 7);
    CHECK(d2.at(CurveKind::Line) == binom(7, 2));
    CHECK(d2.at(CurveKind::Conic) == binom(7, 5));
    CHECK(d2.at(CurveKind::Cubic) == 7);

    const auto d8 = type_census(DelPezzoContext(8));
    CHECK(d8.size() == 1);
    CHECK(d8.at(CurveKind::Exceptional) == 1);
    CHECK(type_census(DelPezzoContext(9)).empty());
}

TEST_CASE("classify examples") {
    const auto e = classify(DivisorClass(0, {0, 0, 0, 0, 0, 0, -1}));
    CHECK(e.kind == CurveKind::Exceptional);
    CHECK(e.points == std::vector<int>{7});

    const auto conic = classify(DivisorClass(2, {1, 1, 1, 1, 1, 0, 0}));
    CHECK(conic.kind == CurveKind::Conic);
    CHECK(conic.points == std::vector<int>{1, 2, 3, 4, 5});

    const auto sextic = classify(DivisorClass(6, {3, 2, 2, 2, 2, 2, 2, 2}));
    CHECK(sextic.kind == CurveKind::Sextic);
    CHECK(sextic.points == std::vector<int>{1});

    const auto cubic = classify(DivisorClass(3, {2, 1, 1, 1, 1, 1, 1, 0}));
    CHECK(cubic.kind == CurveKind::Cubic);
    CHECK(cubic.points == std::vector<int>{1});
    CHECK(cubic.omitted == std::vector<int>{8});

    // Three distinct nodes.
    const auto quartic = classify(DivisorClass(4, {2, 2, 2, 1, 1, 1, 1, 1}));
    CHECK(quartic.kind == CurveKind::Quartic);
    CHECK(quartic.points == std::vector<int>{1, 2, 3});

    CHECK_THROWS_AS(classify(DivisorClass(1, {1, 1, 1, 0, 0, 0, 0, 0})), DomainError);
}

TEST_CASE("classification is injective within each degree") {
    for (int d = 1; d <= 8; ++d) {
        std::set<CurveType> seen;
        for (const auto& c : enumerate_neg_one(DelPezzoContext(d))) {
            CHECK(seen.insert(c.type).second);
            CHECK(image_degree(c.type.kind) == c.cls.a());
        }
    }
}

TEST_CASE("every (-1)-class has arithmetic genus 0") {
    for (int d = 1; d <= 8; ++d)
        for (const auto& c : enumerate_neg_one(DelPezzoContext(d))) CHECK(adjunction_value(c.cls) == -2);
}

TEST_CASE("branch lemma records") {
    const DelPezzoContext ctx(1);
    const auto curves = enumerate_neg_one(ctx);
    const auto find = [&](const DivisorClass& x) {
        for (const auto& c : curves)
            if (c.cls == x) return c;
        FAIL("class not enumerated");
        return curves.front();
    };

    const auto line = verify_branch_lemma(find(DivisorClass(1, {1, 1, 0, 0, 0, 0, 0, 0})));
    CHECK(line.e == 1);
    CHECK(line.sum_b == 2);
    CHECK(line.residual == 2);

    const auto sextic = verify_branch_lemma(find(DivisorClass(6, {3, 2, 2, 2, 2, 2, 2, 2})));
    CHECK(sextic.e == 6);
    CHECK(sextic.sum_b == 17);
    CHECK(sextic.residual == 2);

    const auto quintic = verify_branch_lemma(find(DivisorClass(5, {2, 2, 2, 2, 2, 2, 1, 1})));
    CHECK(quintic.e == 5);
    CHECK(quintic.sum_b == 14);
    CHECK(quintic.residual == 2);

    CHECK_THROWS_AS(verify_branch_lemma(find(DivisorClass::exceptional(ctx, 3))), DomainError);
}

TEST_CASE("branch lemma holds for every non-exceptional class") {
    for (int d = 1; d <= 8; ++d) {
        for (const auto& c : enumerate_neg_one(DelPezzoContext(d))) {
            if (c.type.kind == CurveKind::Exceptional) continue;
            const auto rec = verify_branch_lemma(c);
            CHECK(rec.residual == 2);
            CHECK(rec.sum_b == 3 * rec.e - 1);
        }
    }
}

TEST_CASE("root systems and Weyl closure") {
    const std::size_t root_counts[] = {0, 240, 126, 72, 40, 20, 8, 2, 0, 0};
    for (int d = 1; d <= 9; ++d) {
        const DelPezzoContext ctx(d);
        const auto roots = enumerate_roots(ctx);
        CHECK(roots.size() == root_counts[d]);
        for (const auto& rho : roots) CHECK(is_root(rho));
        CHECK(weyl_closure_violations(enumerate_neg_one(ctx), roots).empty());
    }
}

TEST_CASE("Weyl closure detects a missing class") {
    const DelPezzoContext ctx(3);
    auto curves = enumerate_neg_one(ctx);
    curves.pop_back();
    CHECK_FALSE(weyl_closure_violations(curves, enumerate_roots(ctx)).empty());
}

TEST_CASE("search bound") {
    CHECK(neg_one_max_degree(0) == -1);
    CHECK(neg_one_max_degree(1) == 0);
    CHECK(neg_one_max_degree(8) == 7);
}
