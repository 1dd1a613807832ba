#pragma once

// Picard lattice of a del Pezzo surface X_d = Bl_{P_1..P_r}(P^2), r = 9 - d.
//
// A class is stored as (a; b_1, ..., b_r) and denotes a*H - sum b_i*E_i.
// Under this convention the intersection form is
//
//     (x, y) = a_x*a_y - sum_i b_{x,i}*b_{y,i}
//
// so the exceptional curve E_i is (0; ..., -1, ...), a line through P_i, P_j
// is (1; ..., 1, ..., 1, ...) and the canonical class K = -3H + sum E_i is
// (-3; -1, ..., -1). All arithmetic is overflow-checked.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace delpezzo {

using Coeff = std::int64_t;

Coeff checked_add(Coeff x, Coeff y);
Coeff checked_sub(Coeff x, Coeff y);
Coeff checked_mul(Coeff x, Coeff y);

class DelPezzoContext {
public:
    // Throws DomainError unless 1 <= degree <= 9.
    explicit DelPezzoContext(int degree);

    int degree() const { return degree_; }
    int num_points() const { return 9 - degree_; }

    friend bool operator==(const DelPezzoContext&, const DelPezzoContext&) = default;

private:
    int degree_;
};

class DivisorClass {
public:
    DivisorClass() = default;
    DivisorClass(Coeff a, std::vector<Coeff> b) : a_(a), b_(std::move(b)) {}
    DivisorClass(Coeff a, std::initializer_list<Coeff> b) : a_(a), b_(b) {}

    static DivisorClass zero(const DelPezzoContext& ctx);
    static DivisorClass hyperplane(const DelPezzoContext& ctx);
    // E_i, 1-based.
    static DivisorClass exceptional(const DelPezzoContext& ctx, int i);

    Coeff a() const { return a_; }
    std::span<const Coeff> b() const { return b_; }
    Coeff b(std::size_t i) const { return b_.at(i); }
    int num_points() const { return static_cast<int>(b_.size()); }

    // [a, b_1, ..., b_r]
    std::vector<Coeff> coefficients() const;
    static DivisorClass from_coefficients(std::span<const Coeff> coeffs);

    // "aH - b1*E1 - ... - br*Er"; zero multiplicities are omitted, negative
    // ones are written with '+'.
    std::string to_string() const;

    DivisorClass operator-() const;
    friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
    friend DivisorClass operator-(const DivisorClass& x, const DivisorClass& y);
    friend DivisorClass operator*(Coeff k, const DivisorClass& x);

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
    // Lexicographic on (a, b_1, ..., b_r).
    friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

private:
    Coeff a_ = 0;
    std::vector<Coeff> b_;
};

// Intersection pairing. Throws DimensionError on mismatched lengths.
Coeff pair(const DivisorClass& x, const DivisorClass& y);

DivisorClass canonical_class(const DelPezzoContext& ctx);

// Class of the branch curve of the K3 double cover, -2K = (6; 2, ..., 2).
DivisorClass branch_class(const DelPezzoContext& ctx);

// 3a - sum b_i, i.e. half of (x, -2K).
Coeff anticanonical_half_degree(const DivisorClass& x);

// x^2 = -1 and x.K = -1.
bool is_neg_one_class(const DivisorClass& x);

// x^2 = -2 and x.K = 0.
bool is_root(const DivisorClass& x);

// x^2 + x.K = 2*p_a(x) - 2; -2 for classes of arithmetic genus 0.
Coeff adjunction_value(const DivisorClass& x);

// Reflection of x in the root rho: x + (x, rho) * rho.
DivisorClass reflect(const DivisorClass& x, const DivisorClass& rho);

}  // namespace delpezzo
