#include "delpezzo/cycle_algebra.hpp"

#include <stdexcept>

#include "delpezzo/errors.hpp"

namespace delpezzo {

std::string_view to_string(PointLocation loc) {
    switch (loc) {
        case PointLocation::OnBranch: return "on_branch";
        case PointLocation::OffBranch: return "off_branch";
        case PointLocation::Node: return "node";
        case PointLocation::Generic: return "generic";
    }
    throw std::logic_error("unknown point location");
}

std::vector<SurfacePoint> lift(const SurfacePoint& p) {
    if (p.location == PointLocation::OnBranch) return {{p.id + "~", PointLocation::OnBranch}};
    return {{p.id + "#1", p.location}, {p.id + "#2", p.location}};
}

CurveFunction::CurveFunction(std::map<std::string, Coeff> orders, std::optional<std::string> anchor)
    : anchor_(std::move(anchor)) {
    Coeff total = 0;
    for (auto& [point, ord] : orders) {
        if (ord == 0) continue;
        total = checked_add(total, ord);
        orders_.emplace(point, ord);
    }
    if (total != 0) throw DomainError("divisor of a function on a rational curve must have degree 0");
    if (anchor_ && orders_.contains(*anchor_))
        throw DomainError("normalisation point " + *anchor_ + " lies in the support of the divisor");
}

CurveFunction CurveFunction::constant(std::string label) {
    CurveFunction f;
    f.constant_ = std::move(label);
    return f;
}

CurveFunction CurveFunction::inverse() const {
    CurveFunction out = *this;
    for (auto& [point, ord] : out.orders_) ord = checked_mul(-1, ord);
    if (out.constant_ && *out.constant_ != "1" && *out.constant_ != "-1")
        out.constant_ = "(" + *out.constant_ + ")^-1";
    return out;
}

FormalPrecycle FormalPrecycle::negated() const {
    FormalPrecycle out;
    out.terms.reserve(terms.size());
    for (const auto& t : terms) out.terms.push_back({t.curve, t.function.inverse()});
    return out;
}

FormalPrecycle operator+(const FormalPrecycle& x, const FormalPrecycle& y) {
    FormalPrecycle out = x;
    out.terms.insert(out.terms.end(), y.terms.begin(), y.terms.end());
    return out;
}

FormalPrecycle operator-(const FormalPrecycle& x, const FormalPrecycle& y) { return x + y.negated(); }

std::map<std::string, Coeff> total_divisor(const FormalPrecycle& z) {
    std::map<std::string, Coeff> acc;
    for (const auto& term : z.terms) {
        for (const auto& [point, ord] : term.function.orders()) {
            Coeff& slot = acc[point];
            slot = checked_add(slot, ord);
            if (slot == 0) acc.erase(point);
        }
    }
    return acc;
}

bool cocycle_check(const FormalPrecycle& z) { return total_divisor(z).empty(); }

std::string lifted_curve_id(const NegOneCurve& d) { return "~" + describe(d.type); }

std::string s_point_id(const NegOneCurve& d) { return "s[" + lifted_curve_id(d) + "]"; }

std::string exceptional_fibre_id(const SurfacePoint& p) { return "~E[" + p.id + "]"; }

namespace {

std::optional<std::string> anchor_for(const NegOneCurve& d) {
    if (d.type.kind == CurveKind::Exceptional) return std::nullopt;
    return s_point_id(d);
}

// (A, Q1 - Q2) + (B, Q2 - Q1) for two curves meeting at the labelled points.
FormalPrecycle two_term_cycle(const std::string& curve_a, std::optional<std::string> anchor_a,
                              const std::string& curve_b, std::optional<std::string> anchor_b,
                              const std::string& q1, const std::string& q2) {
    FormalPrecycle z;
    z.terms.push_back({curve_a, CurveFunction({{q1, 1}, {q2, -1}}, std::move(anchor_a))});
    z.terms.push_back({curve_b, CurveFunction({{q1, -1}, {q2, 1}}, std::move(anchor_b))});
    return z;
}

// Labels of the two points of ~A meet ~B over the branch point p.
std::pair<std::string, std::string> meeting_points(const SurfacePoint& p, const std::string& a, const std::string& b) {
    const std::string base = p.id + "|" + a + "^" + b;
    return {base + "#1", base + "#2"};
}

}  // namespace

FormalPrecycle build_xi(const NegOneCurve& d1, const NegOneCurve& d2, const SurfacePoint& p) {
    const Coeff m = pair(d1.cls, d2.cls);
    if (m < 1)
        throw DomainError(describe(d1.type) + " and " + describe(d2.type) + " do not meet (intersection number " +
                          std::to_string(m) + ")");
    if (p.location != PointLocation::OnBranch && p.location != PointLocation::OffBranch)
        throw InputError("point " + p.id + " must be flagged on_branch or off_branch, got " +
                         std::string(to_string(p.location)));

    const std::string c1 = lifted_curve_id(d1);
    const std::string c2 = lifted_curve_id(d2);

    if (p.location == PointLocation::OffBranch) {
        const auto over = lift(p);
        return two_term_cycle(c1, anchor_for(d1), c2, anchor_for(d2), over[0].id, over[1].id);
    }

    if (d1.type.kind == CurveKind::Exceptional || d2.type.kind == CurveKind::Exceptional) {
        const auto [q1, q2] = meeting_points(p, c1, c2);
        return two_term_cycle(c1, anchor_for(d1), c2, anchor_for(d2), q1, q2);
    }

    // Routed through the exceptional fibre E at P: Xi_{Q1,E,P} - Xi_{Q2,E,P}.
    const std::string e = exceptional_fibre_id(p);
    const auto [a1, a2] = meeting_points(p, c1, e);
    const auto [b1, b2] = meeting_points(p, c2, e);
    const FormalPrecycle xi1 = two_term_cycle(c1, anchor_for(d1), e, std::nullopt, a1, a2);
    const FormalPrecycle xi2 = two_term_cycle(c2, anchor_for(d2), e, std::nullopt, b1, b2);
    return xi1 - xi2;
}

FormalPrecycle DecomposableCycle::precycle() const {
    FormalPrecycle z;
    z.terms.push_back({curve, CurveFunction::constant(constant)});
    return z;
}

FormalSum DecomposableCycle::boundary(const std::map<std::string, Coeff>& valuations) const {
    FormalSum out;
    for (const auto& [s, ord] : valuations) {
        if (constant == "1" && ord != 0) throw DomainError("the constant 1 has order 0 at every point");
        out.add(curve + "|" + s, ord);
    }
    return out;
}

DecomposableCycle decomposable_cycle(std::string curve, std::string constant) {
    return {std::move(curve), std::move(constant)};
}

}  // namespace delpezzo
