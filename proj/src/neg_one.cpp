#include "delpezzo/neg_one.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "delpezzo/errors.hpp"

namespace delpezzo {

std::string_view to_string(CurveKind kind) {
    switch (kind) {
        case CurveKind::Exceptional: return "Exceptional";
        case CurveKind::Line: return "Line";
        case CurveKind::Conic: return "Conic";
        case CurveKind::Cubic: return "Cubic";
        case CurveKind::Quartic: return "Quartic";
        case CurveKind::Quintic: return "Quintic";
        case CurveKind::Sextic: return "Sextic";
    }
    throw std::logic_error("unknown curve kind");
}

int image_degree(CurveKind kind) { return static_cast<int>(kind); }

namespace {

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

}  // namespace

std::string describe(const CurveType& type) {
    const std::string pts = join(type.points);
    switch (type.kind) {
        case CurveKind::Exceptional: return "E(" + pts + ")";
        case CurveKind::Line: return "L(" + pts + ")";
        case CurveKind::Conic: return "F(" + pts + ")";
        case CurveKind::Cubic:
            return type.omitted.empty() ? "C3(node " + pts + ")"
                                        : "C3(node " + pts + "; omit " + join(type.omitted) + ")";
        case CurveKind::Quartic: return "Q4(" + pts + ")";
        case CurveKind::Quintic: return "Q5(" + pts + ")";
        case CurveKind::Sextic: return "S6(" + pts + ")";
    }
    throw std::logic_error("unknown curve kind");
}

namespace {

// Depth-first search for integer vectors b in [lo, hi]^r with sum b = target_sum
// and sum b^2 = target_sq, in lexicographic order. Branches are cut with the
// range bound on the remaining sum and Cauchy-Schwarz (s^2 <= k*q).
class BoundedShellSearch {
public:
    BoundedShellSearch(int r, Coeff lo, Coeff hi) : r_(r), lo_(lo), hi_(hi), current_(r, 0) {}

    std::vector<std::vector<Coeff>> run(Coeff target_sum, Coeff target_sq) {
        found_.clear();
        descend(0, target_sum, target_sq);
        return std::move(found_);
    }

private:
    bool feasible(int k, Coeff s, Coeff q) const {
        if (q < 0) return false;
        if (k == 0) return s == 0 && q == 0;
        if (s < k * lo_ || s > k * hi_) return false;
        if (s * s > k * q) return false;
        const Coeff max_sq = std::max(lo_ * lo_, hi_ * hi_);
        return q <= k * max_sq;
    }

    void descend(int pos, Coeff s, Coeff q) {
        if (!feasible(r_ - pos, s, q)) return;
        if (pos == r_) {
            found_.push_back(current_);
            return;
        }
        for (Coeff v = lo_; v <= hi_; ++v) {
            current_[pos] = v;
            descend(pos + 1, s - v, q - v * v);
        }
    }

    int r_;
    Coeff lo_, hi_;
    std::vector<Coeff> current_;
    std::vector<std::vector<Coeff>> found_;
};

}  // namespace

Coeff neg_one_max_degree(int num_points) {
    // (9 - r)a^2 - 6a + 1 - r <= 0 describes an interval of a; scan past its upper end.
    Coeff best = -1;
    for (Coeff a = 0; a <= 64; ++a) {
        const Coeff lhs = (3 * a - 1) * (3 * a - 1);
        const Coeff rhs = num_points * (a * a + 1);
        if (lhs <= rhs) best = a;
    }
    return best;
}

std::vector<NegOneCurve> enumerate_neg_one(const DelPezzoContext& ctx) {
    const int r = ctx.num_points();
    std::vector<DivisorClass> classes;
    for (Coeff a = 0; a <= neg_one_max_degree(r); ++a) {
        BoundedShellSearch search(r, -1, a);
        for (auto& b : search.run(3 * a - 1, a * a + 1)) classes.emplace_back(a, std::move(b));
    }
    std::sort(classes.begin(), classes.end());

    std::vector<NegOneCurve> out;
    out.reserve(classes.size());
    for (auto& cls : classes) {
        CurveType type = classify(cls);
        out.push_back(NegOneCurve{std::move(cls), std::move(type), out.size()});
    }
    return out;
}

CurveType classify(const DivisorClass& x) {
    if (!is_neg_one_class(x)) throw DomainError("not a (-1)-class: " + x.to_string());

    std::vector<int> ones, twos, threes, zeros, negatives;
    std::vector<int> other;
    for (int i = 0; i < x.num_points(); ++i) {
        switch (x.b(i)) {
            case -1: negatives.push_back(i + 1); break;
            case 0: zeros.push_back(i + 1); break;
            case 1: ones.push_back(i + 1); break;
            case 2: twos.push_back(i + 1); break;
            case 3: threes.push_back(i + 1); break;
            default: other.push_back(i + 1); break;
        }
    }
    const auto counts = [&](std::size_t n1, std::size_t n2, std::size_t n3) {
        return negatives.empty() && other.empty() && ones.size() == n1 && twos.size() == n2 && threes.size() == n3;
    };

    switch (x.a()) {
        case 0:
            if (negatives.size() == 1 && ones.empty() && twos.empty() && threes.empty() && other.empty())
                return {CurveKind::Exceptional, negatives, {}};
            break;
        case 1:
            if (counts(2, 0, 0)) return {CurveKind::Line, ones, {}};
            break;
        case 2:
            if (counts(5, 0, 0)) return {CurveKind::Conic, ones, {}};
            break;
        case 3:
            if (counts(6, 1, 0)) return {CurveKind::Cubic, twos, zeros};
            break;
        case 4:
            if (counts(5, 3, 0)) return {CurveKind::Quartic, twos, {}};
            break;
        case 5:
            if (counts(2, 6, 0)) return {CurveKind::Quintic, twos, {}};
            break;
        case 6:
            if (counts(0, 7, 1)) return {CurveKind::Sextic, threes, {}};
            break;
        default: break;
    }
    throw std::logic_error("(-1)-class with unrecognised multiplicity signature: " + x.to_string());
}

std::map<CurveKind, std::size_t> type_census(const DelPezzoContext& ctx) {
    std::map<CurveKind, std::size_t> census;
    for (const auto& curve : enumerate_neg_one(ctx)) ++census[curve.type.kind];
    return census;
}

BranchLemmaRecord verify_branch_lemma(const NegOneCurve& curve) {
    if (curve.type.kind == CurveKind::Exceptional)
        throw DomainError("image is a point: " + describe(curve.type) + " has no plane curve image");
    BranchLemmaRecord rec;
    rec.e = curve.cls.a();
    for (Coeff bi : curve.cls.b()) rec.sum_b = checked_add(rec.sum_b, bi);
    rec.residual = checked_sub(checked_mul(6, rec.e), checked_mul(2, rec.sum_b));
    return rec;
}

std::vector<DivisorClass> enumerate_roots(const DelPezzoContext& ctx) {
    const int r = ctx.num_points();
    std::vector<DivisorClass> roots;
    // (3a)^2 <= r(a^2 + 2) bounds |a|; |b_i|^2 <= a^2 + 2 bounds each multiplicity.
    for (Coeff a = -16; a <= 16; ++a) {
        if (9 * a * a > r * (a * a + 2)) continue;
        Coeff bound = 0;
        while ((bound + 1) * (bound + 1) <= a * a + 2) ++bound;
        BoundedShellSearch search(r, -bound, bound);
        for (auto& b : search.run(3 * a, a * a + 2)) roots.emplace_back(a, std::move(b));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<WeylViolation> weyl_closure_violations(const std::vector<NegOneCurve>& curves,
                                                   const std::vector<DivisorClass>& roots) {
    std::set<DivisorClass> members;
    for (const auto& c : curves) members.insert(c.cls);
    std::vector<WeylViolation> bad;
    for (const auto& c : curves) {
        for (const auto& rho : roots) {
            DivisorClass image = reflect(c.cls, rho);
            if (!members.contains(image)) bad.push_back({c.cls, rho, std::move(image)});
        }
    }
    return bad;
}

}  // namespace delpezzo
