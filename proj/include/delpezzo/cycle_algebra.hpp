#pragma once

// Formal precycles sum (C_i, f_i) on the K3 double cover, where each f_i is a
// function on a rational curve recorded by its degree-zero divisor and an
// optional normalisation point.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "delpezzo/formal_sum.hpp"
#include "delpezzo/neg_one.hpp"

namespace delpezzo {

enum class PointLocation { OnBranch, OffBranch, Node, Generic };

std::string_view to_string(PointLocation loc);

struct SurfacePoint {
    std::string id;
    PointLocation location = PointLocation::Generic;
};

// A point off the branch curve has two preimages in the cover ("<id>#1",
// "<id>#2"); a point on it has one ("<id>~").
std::vector<SurfacePoint> lift(const SurfacePoint& p);

class CurveFunction {
public:
    // The constant function 1.
    CurveFunction() = default;

    // Throws DomainError if the orders do not sum to zero or the anchor lies
    // in their support. Zero orders are dropped.
    CurveFunction(std::map<std::string, Coeff> orders, std::optional<std::string> anchor = std::nullopt);

    // A nonzero constant, kept symbolically.
    static CurveFunction constant(std::string label);

    const std::map<std::string, Coeff>& orders() const { return orders_; }
    const std::optional<std::string>& anchor() const { return anchor_; }
    const std::optional<std::string>& constant_label() const { return constant_; }

    // 1/f: orders negated, anchor kept (1/f is still 1 there).
    CurveFunction inverse() const;

    friend bool operator==(const CurveFunction&, const CurveFunction&) = default;

private:
    std::map<std::string, Coeff> orders_;
    std::optional<std::string> anchor_;
    std::optional<std::string> constant_;
};

struct PrecycleTerm {
    std::string curve;
    CurveFunction function;

    friend bool operator==(const PrecycleTerm&, const PrecycleTerm&) = default;
};

struct FormalPrecycle {
    std::vector<PrecycleTerm> terms;

    // Termwise inverse of every function.
    FormalPrecycle negated() const;
    friend FormalPrecycle operator-(const FormalPrecycle& x, const FormalPrecycle& y);
    friend FormalPrecycle operator+(const FormalPrecycle& x, const FormalPrecycle& y);
};

// Sum of all divisors, aggregated by point id.
std::map<std::string, Coeff> total_divisor(const FormalPrecycle& z);

// True iff sum div(f_i) = 0.
bool cocycle_check(const FormalPrecycle& z);

// Identifier of the preimage in the cover of a (-1)-curve, e.g. "~L(1,2)".
std::string lifted_curve_id(const NegOneCurve& d);
// The branch point s_D on the lifted curve where its function is normalised to 1.
std::string s_point_id(const NegOneCurve& d);
// Exceptional fibre over a branch point P of the cover, used when neither
// curve through P is exceptional.
std::string exceptional_fibre_id(const SurfacePoint& p);

// The cycle Xi_{Q1,Q2,P} attached to two (-1)-curves meeting at P.
//
//   off branch:                   (~D1, P1 - P2) + (~D2, P2 - P1)
//   on branch, one exceptional:   same shape through the two points over P
//   on branch, neither:           Xi_{Q1,E,P} - Xi_{Q2,E,P}, E the exceptional
//                                 fibre at P (four terms)
//
// Non-exceptional curves are normalised to 1 at their s-point.
// Throws DomainError if (d1, d2) < 1 and InputError unless p is flagged
// OnBranch or OffBranch.
FormalPrecycle build_xi(const NegOneCurve& d1, const NegOneCurve& d2, const SurfacePoint& p);

// (C, a) for a nonzero constant a.
struct DecomposableCycle {
    std::string curve;
    std::string constant;

    FormalPrecycle precycle() const;

    // sum_s ord_s(a) * C_s over a valuation table {s: ord_s(a)}; C_s is
    // labelled "<curve>|<s>".
    FormalSum boundary(const std::map<std::string, Coeff>& valuations) const;
};

DecomposableCycle decomposable_cycle(std::string curve, std::string constant);

}  // namespace delpezzo
