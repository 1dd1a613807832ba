#pragma once

#include <map>
#include <sstream>
#include <string>

#include "delpezzo/picard_lattice.hpp"

namespace delpezzo {

// Finite integer combination of labelled components, e.g. T11 - T12.
// Zero coefficients are never stored, so equality is structural.
class FormalSum {
public:
    FormalSum() = default;

    static FormalSum single(const std::string& label, Coeff coeff = 1) {
        FormalSum s;
        s.add(label, coeff);
        return s;
    }

    void add(const std::string& label, Coeff coeff) {
        if (coeff == 0) return;
        Coeff& slot = terms_[label];
        slot = checked_add(slot, coeff);
        if (slot == 0) terms_.erase(label);
    }

    Coeff coefficient(const std::string& label) const {
        const auto it = terms_.find(label);
        return it == terms_.end() ? 0 : it->second;
    }

    const std::map<std::string, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    FormalSum& operator+=(const FormalSum& other) {
        for (const auto& [label, c] : other.terms_) add(label, c);
        return *this;
    }
    FormalSum& operator-=(const FormalSum& other) {
        for (const auto& [label, c] : other.terms_) add(label, checked_mul(-1, c));
        return *this;
    }
    friend FormalSum operator+(FormalSum x, const FormalSum& y) { return x += y; }
    friend FormalSum operator-(FormalSum x, const FormalSum& y) { return x -= y; }
    friend FormalSum operator*(Coeff k, const FormalSum& x) {
        FormalSum out;
        for (const auto& [label, c] : x.terms_) out.add(label, checked_mul(k, c));
        return out;
    }

    friend bool operator==(const FormalSum&, const FormalSum&) = default;

    // "T11 - T12", "2*C|s0 - 2*C|s1", "0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [label, c] : terms_) {
            const Coeff mag = c < 0 ? -c : c;
            if (first) os << (c < 0 ? "-" : "");
            else os << (c < 0 ? " - " : " + ");
            if (mag != 1) os << mag << "*";
            os << label;
            first = false;
        }
        return os.str();
    }

private:
    std::map<std::string, Coeff> terms_;
};

}  // namespace delpezzo
