#pragma once

// Symbolic replay of the localization boundary of Xi over the locus H_Q1
// where the lift of D1 splits into two components T11, T12 meeting at a node
// whose blow-up contributes an exceptional fibre E.
//
// The closure of ~D1 carries div(f) = H + a*T11 + b*T12 + c*E (+ other
// vertical components). The covering involution sends f to 1/f, which forces
// b = -a and c = 0. Restricting f*h^(-a) to the component through P1, where
// div(h) = H_Q1 - sum a_Z Z, gives the linear equation
//
//     (H.T11) - 2a (T12.T11) - a (E.T11) + a sum_Z a_Z (T_Z.T11) = 0
//
// and the D2 side contributes -H, leaving the boundary a*(T11 - T12).

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "delpezzo/formal_sum.hpp"

namespace delpezzo {

enum class ComponentKind { Horizontal, T11, T12, ExcFibre, OtherZ };

struct Component {
    ComponentKind kind = ComponentKind::OtherZ;
    std::string label;
    Coeff a_z = 0;  // multiplicity of Z in div(h); OtherZ only
};

// Which lifted curves split over the special locus.
enum class Splitting { None, FirstCurve, BothCurves };

class DegenerationModel {
public:
    // Horizontal "H", split components "T11", "T12" and the node's exceptional
    // fibre "E_R"; involution swaps T11 and T12, fixes the rest. Intersection
    // table (H.T11) = 1, (T12.T11) = 0, (E_R.T11) = 1. P1 lies on T11.
    static DegenerationModel standard();

    // Adds a component and returns its index. The involution fixes it until
    // set_involution is called.
    std::size_t add_component(Component c);
    const std::vector<Component>& components() const { return components_; }
    std::size_t index_of(const std::string& label) const;  // ModelError if absent
    std::size_t index_of(ComponentKind kind) const;          // first of that kind

    // The involution as an image table: involution()[i] = iota(i).
    const std::vector<std::size_t>& involution() const { return involution_; }
    void set_involution(std::vector<std::size_t> image);
    void swap_in_involution(const std::string& x, const std::string& y);
    void set_identity_involution();

    // Symmetric intersection table; missing entries are 0.
    void set_intersection(const std::string& x, const std::string& y, Coeff value);
    Coeff intersection(std::size_t i, std::size_t j) const;
    Coeff intersection(const std::string& x, const std::string& y) const;

    Splitting splitting = Splitting::FirstCurve;
    // Label of the split component carrying the closure of P1 ("T11" or "T12").
    std::string p1_component = "T11";

private:
    std::vector<Component> components_;
    std::vector<std::size_t> involution_;
    std::map<std::pair<std::size_t, std::size_t>, Coeff> itable_;
};

// x_target = 0 (kind Vanishes) or x_target = -x_source (kind Negates), where
// x is the coefficient of a vertical component in div(f).
struct Constraint {
    enum class Kind { Vanishes, Negates };
    Kind kind = Kind::Vanishes;
    std::string target;
    std::string source;

    friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct ConstraintSet {
    std::vector<Constraint> constraints;
    bool degenerate = false;  // identity involution: nothing can be compared
};

// Symbol used for a component's coefficient in div(f): a for T11, b for T12,
// c for E, x[label] otherwise.
std::string coefficient_symbol(const DegenerationModel& m, const std::string& label);
// "b = -a", "c = 0".
std::string describe(const DegenerationModel& m, const Constraint& c);

// Compares iota(div f) with -div f. Throws ModelError if the involution is not
// an involutive permutation, moves the horizontal part, fails to swap T11/T12
// or to fix E. The identity involution yields an empty set flagged degenerate.
ConstraintSet solve_involution_constraints(const DegenerationModel& m);

struct BoundaryDecomposition {
    Coeff a = 0;
    Coeff b = 0;
    Coeff c = 0;
    Coeff horizontal = 1;
    bool solved = false;
};

// Solves the degree equation on the component carrying P1. Throws ModelError
// when the constraints do not include b = -a and c = 0, the coefficient of a
// vanishes, or the solution is not integral.
BoundaryDecomposition solve_degree_constraint(const DegenerationModel& m, const ConstraintSet& constraints);

// a*(T11 - T12) for a solved first-curve splitting, 0 when nothing splits.
// Throws ModelError for an unsolved decomposition or when both curves split.
FormalSum boundary_of_xi(const DegenerationModel& m, const BoundaryDecomposition& solved);

// iota-invariant combinations c + iota(c) over the vertical components; their
// span contains the boundaries of decomposable cycles.
std::vector<FormalSum> invariant_span(const DegenerationModel& m);

// True iff boundary is not in the rational span of generic_span.
bool indecomposability_witness(const FormalSum& boundary, const std::vector<FormalSum>& generic_span);

// boundary - iota(boundary); zero iff the boundary is iota-invariant.
FormalSum anti_invariant_part(const DegenerationModel& m, const FormalSum& boundary);

struct BoundaryReplay {
    ConstraintSet constraints;
    BoundaryDecomposition decomposition;
    FormalSum boundary;
    bool indecomposable = false;
};

// Full pipeline: constraints, degree solve, boundary, indecomposability test.
BoundaryReplay replay_boundary(const DegenerationModel& m);

}  // namespace delpezzo
