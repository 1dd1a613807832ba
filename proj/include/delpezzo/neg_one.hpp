#pragma once

// Enumeration and classification of (-1)-curves on del Pezzo surfaces.

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "delpezzo/picard_lattice.hpp"

namespace delpezzo {

enum class CurveKind { Exceptional, Line, Conic, Cubic, Quartic, Quintic, Sextic };

inline constexpr std::array<CurveKind, 7> kAllCurveKinds = {
    CurveKind::Exceptional, CurveKind::Line,    CurveKind::Conic,  CurveKind::Cubic,
    CurveKind::Quartic,     CurveKind::Quintic, CurveKind::Sextic,
};

std::string_view to_string(CurveKind kind);

// Degree of the plane image: 0 for a point, 1 for a line, ..., 6 for a sextic.
int image_degree(CurveKind kind);

// Geometric type of a (-1)-curve together with the blown-up points it involves.
// Indices are 1-based and sorted.
//
//   Exceptional  points = {i}
//   Line         points = {i, j}
//   Conic        points = the five points on the conic
//   Cubic        points = {node}, omitted = points the cubic misses (empty for r = 7)
//   Quartic      points = the three nodes
//   Quintic      points = the six double points
//   Sextic       points = {triple point}
struct CurveType {
    CurveKind kind = CurveKind::Exceptional;
    std::vector<int> points;
    std::vector<int> omitted;

    friend bool operator==(const CurveType&, const CurveType&) = default;
    friend auto operator<=>(const CurveType&, const CurveType&) = default;
};

// Human-readable label, e.g. "Q4(1,2,3)" or "C3(node 2; omit 5)".
std::string describe(const CurveType& type);

struct NegOneCurve {
    DivisorClass cls;
    CurveType type;
    std::size_t id = 0;
};

// Exhaustive search over a in [0, a_max] with (3a - 1)^2 <= r(a^2 + 1) and
// b_i in [-1, a]. Output is sorted lexicographically on (a, b); ids follow
// that order.
std::vector<NegOneCurve> enumerate_neg_one(const DelPezzoContext& ctx);

// Largest a admitted by the Cauchy-Schwarz bound, or -1 if none (r = 0).
Coeff neg_one_max_degree(int num_points);

// Throws DomainError if x is not a (-1)-class. A valid (-1)-class whose
// multiplicity signature matches no known type is a std::logic_error.
CurveType classify(const DivisorClass& x);

// Number of curves of each kind; kinds that do not occur are absent.
std::map<CurveKind, std::size_t> type_census(const DelPezzoContext& ctx);

struct BranchLemmaRecord {
    Coeff e = 0;         // degree of the plane image
    Coeff sum_b = 0;     // number of double points on the branch sextic, counted with multiplicity
    Coeff residual = 0;  // 6e - 2*sum_b, the intersection points left over (2 when the lemma holds)
};

// Throws DomainError for exceptional curves: their plane image is a point.
BranchLemmaRecord verify_branch_lemma(const NegOneCurve& curve);

// All roots (x^2 = -2, x.K = 0) of the lattice, sorted. Used to certify that
// the (-1)-set is closed under the Weyl group.
std::vector<DivisorClass> enumerate_roots(const DelPezzoContext& ctx);

// Pairs (curve, root) whose reflection leaves the enumerated set. Empty when
// the set is Weyl-closed.
struct WeylViolation {
    DivisorClass curve;
    DivisorClass root;
    DivisorClass image;
};
std::vector<WeylViolation> weyl_closure_violations(const std::vector<NegOneCurve>& curves,
                                                   const std::vector<DivisorClass>& roots);

}  // namespace delpezzo
