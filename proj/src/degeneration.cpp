#include "delpezzo/degeneration.hpp"

#include <algorithm>
#include <set>

#include <gmpxx.h>

#include "delpezzo/errors.hpp"

namespace delpezzo {

DegenerationModel DegenerationModel::standard() {
    DegenerationModel m;
    m.add_component({ComponentKind::Horizontal, "H", 0});
    m.add_component({ComponentKind::T11, "T11", 0});
    m.add_component({ComponentKind::T12, "T12", 0});
    m.add_component({ComponentKind::ExcFibre, "E_R", 0});
    m.swap_in_involution("T11", "T12");
    m.set_intersection("H", "T11", 1);
    m.set_intersection("T12", "T11", 0);
    m.set_intersection("E_R", "T11", 1);
    return m;
}

std::size_t DegenerationModel::add_component(Component c) {
    for (const auto& existing : components_)
        if (existing.label == c.label) throw ModelError("duplicate component label " + c.label);
    components_.push_back(std::move(c));
    involution_.push_back(components_.size() - 1);
    return components_.size() - 1;
}

std::size_t DegenerationModel::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < components_.size(); ++i)
        if (components_[i].label == label) return i;
    throw ModelError("no component labelled " + label);
}

std::size_t DegenerationModel::index_of(ComponentKind kind) const {
    for (std::size_t i = 0; i < components_.size(); ++i)
        if (components_[i].kind == kind) return i;
    throw ModelError("model has no component of the requested kind");
}

void DegenerationModel::set_involution(std::vector<std::size_t> image) {
    if (image.size() != components_.size()) throw ModelError("involution table has the wrong size");
    involution_ = std::move(image);
}

void DegenerationModel::swap_in_involution(const std::string& x, const std::string& y) {
    const std::size_t i = index_of(x), j = index_of(y);
    involution_[i] = j;
    involution_[j] = i;
}

void DegenerationModel::set_identity_involution() {
    for (std::size_t i = 0; i < involution_.size(); ++i) involution_[i] = i;
}

void DegenerationModel::set_intersection(const std::string& x, const std::string& y, Coeff value) {
    std::size_t i = index_of(x), j = index_of(y);
    if (i > j) std::swap(i, j);
    itable_[{i, j}] = value;
}

Coeff DegenerationModel::intersection(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    const auto it = itable_.find({i, j});
    return it == itable_.end() ? 0 : it->second;
}

Coeff DegenerationModel::intersection(const std::string& x, const std::string& y) const {
    return intersection(index_of(x), index_of(y));
}

std::string coefficient_symbol(const DegenerationModel& m, const std::string& label) {
    switch (m.components().at(m.index_of(label)).kind) {
        case ComponentKind::T11: return "a";
        case ComponentKind::T12: return "b";
        case ComponentKind::ExcFibre: return "c";
        default: return "x[" + label + "]";
    }
}

std::string describe(const DegenerationModel& m, const Constraint& c) {
    const std::string lhs = coefficient_symbol(m, c.target);
    if (c.kind == Constraint::Kind::Vanishes) return lhs + " = 0";
    return lhs + " = -" + coefficient_symbol(m, c.source);
}

ConstraintSet solve_involution_constraints(const DegenerationModel& m) {
    const auto& iota = m.involution();
    const std::size_t n = m.components().size();
    for (std::size_t i = 0; i < n; ++i) {
        if (iota[i] >= n) throw ModelError("involution maps outside the component set");
        if (iota[iota[i]] != i) throw ModelError("involution does not square to the identity");
    }

    ConstraintSet out;
    bool identity = true;
    for (std::size_t i = 0; i < n; ++i) identity = identity && iota[i] == i;
    if (identity) {
        out.degenerate = true;
        return out;
    }

    for (std::size_t i = 0; i < n; ++i)
        if (m.components()[i].kind == ComponentKind::Horizontal && iota[i] != i)
            throw ModelError("involution must map the horizontal divisor to itself");
    const std::size_t t11 = m.index_of(ComponentKind::T11);
    const std::size_t t12 = m.index_of(ComponentKind::T12);
    const std::size_t exc = m.index_of(ComponentKind::ExcFibre);
    if (iota[t11] != t12) throw ModelError("involution must interchange T11 and T12");
    if (iota[exc] != exc) throw ModelError("involution must fix the exceptional fibre at the node");

    // iota(H + sum x_i C_i) = -H + sum x_i C_iota(i) must equal -H - sum x_i C_i.
    for (std::size_t i = 0; i < n; ++i) {
        if (m.components()[i].kind == ComponentKind::Horizontal) continue;
        const std::size_t j = iota[i];
        const std::string& label = m.components()[i].label;
        if (j == i) out.constraints.push_back({Constraint::Kind::Vanishes, label, ""});
        else if (i < j) out.constraints.push_back({Constraint::Kind::Negates, m.components()[j].label, label});
    }
    return out;
}

namespace {

bool has_constraint(const ConstraintSet& cs, const Constraint& c) {
    return std::find(cs.constraints.begin(), cs.constraints.end(), c) != cs.constraints.end();
}

}  // namespace

BoundaryDecomposition solve_degree_constraint(const DegenerationModel& m, const ConstraintSet& constraints) {
    if (constraints.degenerate) throw ModelError("degenerate involution gives no constraints to solve with");
    const std::string& t11 = m.components().at(m.index_of(ComponentKind::T11)).label;
    const std::string& t12 = m.components().at(m.index_of(ComponentKind::T12)).label;
    const std::string& exc = m.components().at(m.index_of(ComponentKind::ExcFibre)).label;
    if (!has_constraint(constraints, {Constraint::Kind::Negates, t12, t11}) ||
        !has_constraint(constraints, {Constraint::Kind::Vanishes, exc, ""}))
        throw ModelError("constraint set lacks b = -a and c = 0");

    std::string first, second;
    if (m.p1_component == t11) {
        first = t11;
        second = t12;
    } else if (m.p1_component == t12) {
        first = t12;
        second = t11;
    } else {
        throw ModelError("P1 must lie on " + t11 + " or " + t12 + ", not " + m.p1_component);
    }

    const std::size_t f = m.index_of(first);
    const Coeff h = m.intersection(m.index_of(ComponentKind::Horizontal), f);
    const Coeff t = m.intersection(m.index_of(second), f);
    const Coeff e = m.intersection(m.index_of(exc), f);
    Coeff z = 0;
    for (std::size_t i = 0; i < m.components().size(); ++i)
        if (m.components()[i].kind == ComponentKind::OtherZ)
            z = checked_add(z, checked_mul(m.components()[i].a_z, m.intersection(i, f)));

    // h - a*(2t + e - z) = 0
    const Coeff slope = checked_sub(checked_add(checked_mul(2, t), e), z);
    if (slope == 0) throw ModelError("singular model: the coefficient of a vanishes in the degree equation");
    if (h % slope != 0)
        throw ModelError("non-integral solution a = " + std::to_string(h) + "/" + std::to_string(slope));
    const Coeff on_first = h / slope;

    BoundaryDecomposition out;
    out.a = first == t11 ? on_first : -on_first;
    out.b = -out.a;
    out.c = 0;
    out.solved = true;
    return out;
}

FormalSum boundary_of_xi(const DegenerationModel& m, const BoundaryDecomposition& solved) {
    if (m.splitting == Splitting::None) return {};
    if (m.splitting == Splitting::BothCurves)
        throw ModelError("unsupported: both curves split (H_Q1 meets H_Q2); no boundary formula is available");
    if (!solved.solved) throw ModelError("boundary requested for an unsolved model");

    const std::string& horizontal = m.components().at(m.index_of(ComponentKind::Horizontal)).label;
    FormalSum d1_side = FormalSum::single(horizontal, solved.horizontal);
    d1_side.add(m.components().at(m.index_of(ComponentKind::T11)).label, solved.a);
    d1_side.add(m.components().at(m.index_of(ComponentKind::T12)).label, solved.b);
    d1_side.add(m.components().at(m.index_of(ComponentKind::ExcFibre)).label, solved.c);
    // ~D2 stays irreducible: its function only has the horizontal divisor, with opposite sign.
    const FormalSum d2_side = FormalSum::single(horizontal, -solved.horizontal);
    return d1_side + d2_side;
}

std::vector<FormalSum> invariant_span(const DegenerationModel& m) {
    std::vector<FormalSum> span;
    std::set<std::size_t> done;
    for (std::size_t i = 0; i < m.components().size(); ++i) {
        if (m.components()[i].kind == ComponentKind::Horizontal || done.contains(i)) continue;
        const std::size_t j = m.involution()[i];
        done.insert(i);
        done.insert(j);
        FormalSum s = FormalSum::single(m.components()[i].label);
        s.add(m.components()[j].label, 1);
        span.push_back(std::move(s));
    }
    return span;
}

bool indecomposability_witness(const FormalSum& boundary, const std::vector<FormalSum>& generic_span) {
    if (boundary.is_zero()) return false;

    std::vector<std::string> coords;
    const auto collect = [&](const FormalSum& s) {
        for (const auto& [label, _] : s.terms())
            if (std::find(coords.begin(), coords.end(), label) == coords.end()) coords.push_back(label);
    };
    collect(boundary);
    for (const auto& v : generic_span) collect(v);

    // Columns: span vectors, then the boundary; boundary is in the span iff
    // appending it does not raise the rank.
    const std::size_t rows = coords.size();
    const std::size_t cols = generic_span.size() + 1;
    std::vector<std::vector<mpq_class>> mat(rows, std::vector<mpq_class>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < generic_span.size(); ++c)
            mat[r][c] = static_cast<long>(generic_span[c].coefficient(coords[r]));
        mat[r][cols - 1] = static_cast<long>(boundary.coefficient(coords[r]));
    }

    const auto rank = [&](std::size_t ncols) {
        auto a = mat;
        std::size_t rk = 0;
        for (std::size_t c = 0; c < ncols && rk < rows; ++c) {
            std::size_t pivot = rk;
            while (pivot < rows && a[pivot][c] == 0) ++pivot;
            if (pivot == rows) continue;
            std::swap(a[pivot], a[rk]);
            for (std::size_t r = 0; r < rows; ++r) {
                if (r == rk || a[r][c] == 0) continue;
                const mpq_class factor = a[r][c] / a[rk][c];
                for (std::size_t k = c; k < ncols; ++k) a[r][k] -= factor * a[rk][k];
            }
            ++rk;
        }
        return rk;
    };
    return rank(cols) > rank(cols - 1);
}

FormalSum anti_invariant_part(const DegenerationModel& m, const FormalSum& boundary) {
    FormalSum image;
    for (const auto& [label, c] : boundary.terms())
        image.add(m.components().at(m.involution().at(m.index_of(label))).label, c);
    return boundary - image;
}

BoundaryReplay replay_boundary(const DegenerationModel& m) {
    BoundaryReplay out;
    out.constraints = solve_involution_constraints(m);
    if (m.splitting == Splitting::FirstCurve) out.decomposition = solve_degree_constraint(m, out.constraints);
    out.boundary = boundary_of_xi(m, out.decomposition);
    out.indecomposable = indecomposability_witness(out.boundary, invariant_span(m));
    return out;
}

}  // namespace delpezzo
