#include "delpezzo/picard_lattice.hpp"

#include <sstream>
#include <stdexcept>

#include "delpezzo/errors.hpp"

namespace delpezzo {

Coeff checked_add(Coeff x, Coeff y) {
    Coeff out;
    if (__builtin_add_overflow(x, y, &out)) throw std::overflow_error("divisor coefficient overflow");
    return out;
}

Coeff checked_sub(Coeff x, Coeff y) {
    Coeff out;
    if (__builtin_sub_overflow(x, y, &out)) throw std::overflow_error("divisor coefficient overflow");
    return out;
}

Coeff checked_mul(Coeff x, Coeff y) {
    Coeff out;
    if (__builtin_mul_overflow(x, y, &out)) throw std::overflow_error("divisor coefficient overflow");
    return out;
}

DelPezzoContext::DelPezzoContext(int degree) : degree_(degree) {
    if (degree < 1 || degree > 9)
        throw DomainError("del Pezzo degree must lie in [1, 9], got " + std::to_string(degree));
}

DivisorClass DivisorClass::zero(const DelPezzoContext& ctx) {
    return DivisorClass(0, std::vector<Coeff>(ctx.num_points(), 0));
}

DivisorClass DivisorClass::hyperplane(const DelPezzoContext& ctx) {
    return DivisorClass(1, std::vector<Coeff>(ctx.num_points(), 0));
}

DivisorClass DivisorClass::exceptional(const DelPezzoContext& ctx, int i) {
    if (i < 1 || i > ctx.num_points())
        throw DomainError("exceptional index " + std::to_string(i) + " out of range");
    std::vector<Coeff> b(ctx.num_points(), 0);
    b[i - 1] = -1;
    return DivisorClass(0, std::move(b));
}

std::vector<Coeff> DivisorClass::coefficients() const {
    std::vector<Coeff> out;
    out.reserve(b_.size() + 1);
    out.push_back(a_);
    out.insert(out.end(), b_.begin(), b_.end());
    return out;
}

DivisorClass DivisorClass::from_coefficients(std::span<const Coeff> coeffs) {
    if (coeffs.empty()) throw InputError("divisor class needs at least the H coefficient");
    return DivisorClass(coeffs.front(), std::vector<Coeff>(coeffs.begin() + 1, coeffs.end()));
}

std::string DivisorClass::to_string() const {
    std::ostringstream os;
    os << a_ << "H";
    for (std::size_t i = 0; i < b_.size(); ++i) {
        if (b_[i] == 0) continue;
        os << (b_[i] > 0 ? " - " : " + ") << (b_[i] > 0 ? b_[i] : -b_[i]) << "*E" << (i + 1);
    }
    return os.str();
}

DivisorClass DivisorClass::operator-() const { return Coeff{-1} * *this; }

namespace {

void require_same_length(const DivisorClass& x, const DivisorClass& y) {
    if (x.num_points() != y.num_points())
        throw DimensionError("classes live in different lattices (r = " + std::to_string(x.num_points()) +
                             " vs r = " + std::to_string(y.num_points()) + ")");
}

}  // namespace

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
    require_same_length(x, y);
    std::vector<Coeff> b(x.b_.size());
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = checked_add(x.b_[i], y.b_[i]);
    return DivisorClass(checked_add(x.a_, y.a_), std::move(b));
}

DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
    require_same_length(x, y);
    std::vector<Coeff> b(x.b_.size());
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = checked_sub(x.b_[i], y.b_[i]);
    return DivisorClass(checked_sub(x.a_, y.a_), std::move(b));
}

DivisorClass operator*(Coeff k, const DivisorClass& x) {
    std::vector<Coeff> b(x.b_.size());
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = checked_mul(k, x.b_[i]);
    return DivisorClass(checked_mul(k, x.a_), std::move(b));
}

Coeff pair(const DivisorClass& x, const DivisorClass& y) {
    require_same_length(x, y);
    Coeff acc = checked_mul(x.a(), y.a());
    for (std::size_t i = 0; i < x.b().size(); ++i) acc = checked_sub(acc, checked_mul(x.b()[i], y.b()[i]));
    return acc;
}

DivisorClass canonical_class(const DelPezzoContext& ctx) {
    return DivisorClass(-3, std::vector<Coeff>(ctx.num_points(), -1));
}

DivisorClass branch_class(const DelPezzoContext& ctx) {
    return DivisorClass(6, std::vector<Coeff>(ctx.num_points(), 2));
}

Coeff anticanonical_half_degree(const DivisorClass& x) {
    Coeff acc = checked_mul(3, x.a());
    for (Coeff bi : x.b()) acc = checked_sub(acc, bi);
    return acc;
}

namespace {

// x.K without building K: -3a + sum b_i.
Coeff canonical_degree(const DivisorClass& x) { return -anticanonical_half_degree(x); }

}  // namespace

bool is_neg_one_class(const DivisorClass& x) { return pair(x, x) == -1 && canonical_degree(x) == -1; }

bool is_root(const DivisorClass& x) { return pair(x, x) == -2 && canonical_degree(x) == 0; }

Coeff adjunction_value(const DivisorClass& x) { return checked_add(pair(x, x), canonical_degree(x)); }

DivisorClass reflect(const DivisorClass& x, const DivisorClass& rho) { return x + pair(x, rho) * rho; }

}  // namespace delpezzo
