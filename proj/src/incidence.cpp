#include "delpezzo/incidence.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "delpezzo/errors.hpp"

namespace delpezzo {

IncidenceGraph::IncidenceGraph(std::vector<NegOneCurve> curves) : nodes_(std::move(curves)) {
    if (!nodes_.empty()) num_points_ = nodes_.front().cls.num_points();
    for (const auto& c : nodes_) {
        if (c.cls.num_points() != num_points_)
            throw DimensionError("incidence graph mixes curves from different lattices");
    }
    const std::size_t n = nodes_.size();
    m_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        m_[i * n + i] = -1;
        for (std::size_t j = i + 1; j < n; ++j) {
            const Coeff v = pair(nodes_[i].cls, nodes_[j].cls);
            m_[i * n + j] = v;
            m_[j * n + i] = v;
        }
    }
}

Coeff IncidenceGraph::at(std::size_t i, std::size_t j) const {
    if (i >= size() || j >= size()) throw std::out_of_range("incidence node id out of range");
    return m_[i * size() + j];
}

std::map<Coeff, std::size_t> IncidenceGraph::histogram() const {
    std::map<Coeff, std::size_t> h;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j) ++h[m_[i * size() + j]];
    return h;
}

IncidenceGraph build_graph(std::vector<NegOneCurve> curves) { return IncidenceGraph(std::move(curves)); }

std::size_t meets_count(const IncidenceGraph& g, std::size_t i) {
    if (i >= g.size()) throw std::out_of_range("incidence node id out of range");
    std::size_t count = 0;
    for (std::size_t j = 0; j < g.size(); ++j)
        if (j != i && g.at(i, j) >= 1) ++count;
    return count;
}

std::string BitangentPair::composition() const {
    CurveKind x = first.type.kind, y = second.type.kind;
    if (y < x) std::swap(x, y);
    return std::string(to_string(x)) + "+" + std::string(to_string(y));
}

BitangentReport bitangent_pairs(const DelPezzoContext& ctx) {
    if (ctx.degree() != 2)
        throw DomainError("bitangent pairs exist only in degree 2, got degree " + std::to_string(ctx.degree()));
    const auto curves = enumerate_neg_one(ctx);
    const DivisorClass minus_k = -canonical_class(ctx);

    std::map<DivisorClass, std::size_t> index;
    for (const auto& c : curves) index.emplace(c.cls, c.id);

    BitangentReport report;
    for (const auto& c : curves) {
        const auto partner = index.find(minus_k - c.cls);
        if (partner == index.end())
            throw std::logic_error("-K - D is not a (-1)-class for " + c.cls.to_string());
        if (partner->second == c.id) throw std::logic_error("-K - D = D has no integral solution");
        if (partner->second < c.id) continue;
        BitangentPair p{c, curves[partner->second]};
        ++report.composition[p.composition()];
        report.pairs.push_back(std::move(p));
    }
    return report;
}

std::vector<CandidatePair> candidate_cycle_pairs(const IncidenceGraph& g) {
    std::vector<CandidatePair> out;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (const Coeff m = g.at(i, j); m >= 1) out.push_back({i, j, m});
    return out;
}

namespace {

DoubleSix canonical_double_six(std::array<std::size_t, 6> a, std::array<std::size_t, 6> b) {
    const auto sorted_by_first = [](std::array<std::size_t, 6> x, std::array<std::size_t, 6> y) {
        std::array<std::size_t, 6> perm{0, 1, 2, 3, 4, 5};
        std::sort(perm.begin(), perm.end(), [&](std::size_t p, std::size_t q) { return x[p] < x[q]; });
        DoubleSix ds;
        for (std::size_t k = 0; k < 6; ++k) {
            ds.first[k] = x[perm[k]];
            ds.second[k] = y[perm[k]];
        }
        return ds;
    };
    DoubleSix lhs = sorted_by_first(a, b);
    DoubleSix rhs = sorted_by_first(b, a);
    return std::min(lhs, rhs);
}

}  // namespace

std::vector<DoubleSix> double_sixes(const DelPezzoContext& ctx) {
    if (ctx.degree() != 3)
        throw DomainError("double-sixes exist only in degree 3, got degree " + std::to_string(ctx.degree()));
    const IncidenceGraph g(enumerate_neg_one(ctx));
    const std::size_t n = g.size();

    std::set<DoubleSix> found;
    std::array<std::size_t, 6> a{};

    // Every sextuple of pairwise disjoint lines; for each, look for the partner lines.
    std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t depth, std::size_t start) {
        if (depth == 6) {
            std::array<std::size_t, 6> b{};
            for (std::size_t k = 0; k < 6; ++k) {
                std::size_t hits = 0;
                for (std::size_t cand = 0; cand < n; ++cand) {
                    bool ok = true;
                    for (std::size_t j = 0; j < 6 && ok; ++j) {
                        if (cand == a[j]) ok = false;
                        else ok = g.at(cand, a[j]) == (j == k ? 0 : 1);
                    }
                    if (ok) {
                        b[k] = cand;
                        ++hits;
                    }
                }
                if (hits != 1) return;
            }
            DoubleSix ds = canonical_double_six(a, b);
            if (is_double_six(g, ds)) found.insert(ds);
            return;
        }
        for (std::size_t v = start; v < n; ++v) {
            bool disjoint = true;
            for (std::size_t j = 0; j < depth && disjoint; ++j) disjoint = g.at(v, a[j]) == 0;
            if (!disjoint) continue;
            a[depth] = v;
            extend(depth + 1, v + 1);
        }
    };
    extend(0, 0);
    return {found.begin(), found.end()};
}

bool is_double_six(const IncidenceGraph& g, const DoubleSix& ds) {
    std::set<std::size_t> all(ds.first.begin(), ds.first.end());
    all.insert(ds.second.begin(), ds.second.end());
    if (all.size() != 12) return false;
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            if (i != j && (g.at(ds.first[i], ds.first[j]) != 0 || g.at(ds.second[i], ds.second[j]) != 0))
                return false;
            if (g.at(ds.first[i], ds.second[j]) != (i == j ? 0 : 1)) return false;
        }
    }
    return true;
}

}  // namespace delpezzo
