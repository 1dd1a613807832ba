#pragma once

// Pairwise intersection structure of the (-1)-curves of one degree.

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "delpezzo/neg_one.hpp"

namespace delpezzo {

class IncidenceGraph {
public:
    // Throws DimensionError if the curves do not share a lattice.
    explicit IncidenceGraph(std::vector<NegOneCurve> curves);

    std::size_t size() const { return nodes_.size(); }
    int num_points() const { return num_points_; }
    const std::vector<NegOneCurve>& nodes() const { return nodes_; }
    const NegOneCurve& node(std::size_t i) const { return nodes_.at(i); }

    // m[i][j] = (D_i, D_j); the diagonal is -1. Throws std::out_of_range.
    Coeff at(std::size_t i, std::size_t j) const;

    // Counts of each off-diagonal value over unordered pairs.
    std::map<Coeff, std::size_t> histogram() const;

private:
    int num_points_ = 0;
    std::vector<NegOneCurve> nodes_;
    std::vector<Coeff> m_;
};

IncidenceGraph build_graph(std::vector<NegOneCurve> curves);

// #{j != i : m[i][j] >= 1}. Throws std::out_of_range for a bad id.
std::size_t meets_count(const IncidenceGraph& g, std::size_t i);

struct BitangentPair {
    NegOneCurve first;
    NegOneCurve second;

    // "Exceptional+Cubic", "Line+Conic", ... with kinds in declaration order.
    std::string composition() const;
};

struct BitangentReport {
    std::vector<BitangentPair> pairs;
    std::map<std::string, std::size_t> composition;
};

// Degree 2 only: splits the 56 curves into 28 pairs {D, -K - D}.
// Throws DomainError for any other degree.
BitangentReport bitangent_pairs(const DelPezzoContext& ctx);

struct CandidatePair {
    std::size_t i = 0;
    std::size_t j = 0;
    Coeff multiplicity = 0;

    friend bool operator==(const CandidatePair&, const CandidatePair&) = default;
};

// Unordered pairs i < j with m[i][j] >= 1. Only the lattice intersection
// number is known; the s/t points are assumed to be in generic position.
std::vector<CandidatePair> candidate_cycle_pairs(const IncidenceGraph& g);

inline constexpr const char* kGenericPositionNote = "generic-position assumed";

struct DoubleSix {
    std::array<std::size_t, 6> first{};
    std::array<std::size_t, 6> second{};

    friend bool operator==(const DoubleSix&, const DoubleSix&) = default;
    friend auto operator<=>(const DoubleSix&, const DoubleSix&) = default;
};

// Degree 3 only (DomainError otherwise). Each double-six is reported with
// second[k] the unique line meeting every first[j], j != k; the pair is
// ordered so that the sorted first sextuple is lexicographically smaller.
std::vector<DoubleSix> double_sixes(const DelPezzoContext& ctx);

// Checks the defining incidences of a double-six against a graph.
bool is_double_six(const IncidenceGraph& g, const DoubleSix& ds);

}  // namespace delpezzo
