#include "delpezzo/tame_symbol.hpp"

#include <algorithm>
#include <sstream>

#include "delpezzo/errors.hpp"

namespace delpezzo {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(trim(cur));
    return out;
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0) throw InputError("not a rational number: '" + text + "'");
    q.canonicalize();
    if (q.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
    return q;
}

Rational power(const Rational& x, Coeff e) {
    Rational base = e < 0 ? Rational(1) / x : x;
    Rational out = 1;
    for (Coeff k = 0; k < (e < 0 ? -e : e); ++k) out *= base;
    return out;
}

Rational det3(const LinearForm& x, const LinearForm& y, const LinearForm& z) {
    const auto& a = x.coeffs;
    const auto& b = y.coeffs;
    const auto& c = z.coeffs;
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

}  // namespace

LinearForm LinearForm::parse(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 3) throw InputError("linear form needs three coefficients 'a,b,c', got '" + text + "'");
    LinearForm form{{parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])}};
    if (form.is_zero()) throw InputError("linear form '" + text + "' is identically zero");
    return form;
}

Rational LinearForm::operator()(const PlanePoint& p) const {
    return coeffs[0] * p[0] + coeffs[1] * p[1] + coeffs[2] * p[2];
}

bool LinearForm::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

std::string LinearForm::to_string() const {
    return "[" + coeffs[0].get_str() + ":" + coeffs[1].get_str() + ":" + coeffs[2].get_str() + "]";
}

bool proportional(const LinearForm& x, const LinearForm& y) {
    const auto& a = x.coeffs;
    const auto& b = y.coeffs;
    return a[0] * b[1] == a[1] * b[0] && a[0] * b[2] == a[2] * b[0] && a[1] * b[2] == a[2] * b[1];
}

PlanePoint normalize(PlanePoint p) {
    for (const auto& c : p) {
        if (c != 0) {
            const Rational lead = c;
            for (auto& x : p) x /= lead;
            return p;
        }
    }
    throw DomainError("the zero vector is not a projective point");
}

std::string point_id(const PlanePoint& p) {
    const PlanePoint n = normalize(p);
    return "[" + n[0].get_str() + ":" + n[1].get_str() + ":" + n[2].get_str() + "]";
}

LinearFormFunction::LinearFormFunction(std::vector<std::pair<LinearForm, Coeff>> factors) {
    for (auto& [form, e] : factors) {
        if (form.is_zero()) throw DomainError("zero linear form in a product");
        if (e == 0) continue;
        for (const auto& [other, _] : factors_)
            if (proportional(form, other))
                throw DomainError("proportional linear forms " + form.to_string() + " and " + other.to_string() +
                                  " in one function");
        factors_.emplace_back(std::move(form), e);
    }
}

LinearFormFunction LinearFormFunction::parse(const std::string& text) {
    std::vector<std::pair<LinearForm, Coeff>> factors;
    if (trim(text).empty()) return {};
    for (const auto& item : split(text, ';')) {
        if (item.empty()) continue;
        const auto caret = item.find('^');
        Coeff e = 1;
        if (caret != std::string::npos) {
            const std::string exp = trim(item.substr(caret + 1));
            try {
                std::size_t used = 0;
                e = std::stoll(exp, &used);
                if (used != exp.size()) throw InputError("");
            } catch (const std::exception&) {
                throw InputError("bad exponent in '" + item + "'");
            }
        }
        factors.emplace_back(LinearForm::parse(item.substr(0, caret)), e);
    }
    return LinearFormFunction(std::move(factors));
}

Coeff LinearFormFunction::degree() const {
    Coeff d = 0;
    for (const auto& [_, e] : factors_) d = checked_add(d, e);
    return d;
}

Coeff LinearFormFunction::order_along(const LinearForm& line) const {
    for (const auto& [form, e] : factors_)
        if (form == line) return e;
    return 0;
}

LineParametrization::LineParametrization(const LinearForm& line) : line_(line) {
    if (line.is_zero()) throw DomainError("cannot parametrise the zero form");
    for (std::size_t k = 1; k < 3; ++k)
        if (abs(line.coeffs[k]) > abs(line.coeffs[solved_])) solved_ = k;
    std::size_t n = 0;
    for (std::size_t k = 0; k < 3; ++k)
        if (k != solved_) params_[n++] = k;
}

PlanePoint LineParametrization::point(const Rational& u, const Rational& v) const {
    PlanePoint p;
    p[params_[0]] = u;
    p[params_[1]] = v;
    const auto& c = line_.coeffs;
    p[solved_] = -(c[params_[0]] * u + c[params_[1]] * v) / c[solved_];
    return p;
}

std::pair<Rational, Rational> LineParametrization::restrict(const LinearForm& form) const {
    const auto& c = line_.coeffs;
    const auto& l = form.coeffs;
    const Rational ratio = l[solved_] / c[solved_];
    return {l[params_[0]] - ratio * c[params_[0]], l[params_[1]] - ratio * c[params_[1]]};
}

PlanePoint LineParametrization::zero_of(const LinearForm& form) const {
    const auto [alpha, beta] = restrict(form);
    if (alpha == 0 && beta == 0)
        throw DomainError("form " + form.to_string() + " vanishes identically on " + line_.to_string());
    return normalize(point(-beta, alpha));
}

Rational TameComponent::evaluate(const PlanePoint& p) const {
    Rational value = sign;
    for (const auto& [form, e] : factors) {
        const Rational v = form(p);
        if (v == 0) throw DomainError("evaluation point lies on factor " + form.to_string());
        value *= power(v, e);
    }
    return value;
}

std::map<std::string, Coeff> TameComponent::divisor() const {
    const LineParametrization param(line);
    std::map<std::string, Coeff> orders;
    for (const auto& [form, e] : factors) {
        Coeff& slot = orders[point_id(param.zero_of(form))];
        slot = checked_add(slot, e);
    }
    std::erase_if(orders, [](const auto& kv) { return kv.second == 0; });
    return orders;
}

std::string line_curve_id(const LinearForm& line) { return "Z" + line.to_string(); }

void require_general_position(const std::vector<LinearForm>& lines) {
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (proportional(lines[i], lines[j]))
                throw GeometryError("support lines " + lines[i].to_string() + " and " + lines[j].to_string() +
                                    " coincide");
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            for (std::size_t k = j + 1; k < lines.size(); ++k)
                if (det3(lines[i], lines[j], lines[k]) == 0)
                    throw GeometryError("support lines " + lines[i].to_string() + ", " + lines[j].to_string() +
                                        ", " + lines[k].to_string() + " are concurrent");
}

TameSymbol tame_symbol(const LinearFormFunction& f, const LinearFormFunction& g) {
    if (f.degree() != 0 || g.degree() != 0)
        throw DomainError("tame symbol needs rational functions: total exponent must be 0");

    std::vector<LinearForm> lines;
    for (const auto& [form, _] : f.factors()) lines.push_back(form);
    for (const auto& [form, _] : g.factors()) {
        bool seen = false;
        for (const auto& existing : lines) {
            if (existing == form) seen = true;
            else if (proportional(existing, form))
                throw GeometryError("forms " + existing.to_string() + " and " + form.to_string() +
                                    " define the same line with different scalings");
        }
        if (!seen) lines.push_back(form);
    }
    require_general_position(lines);

    TameSymbol out;
    for (const auto& z : lines) {
        const Coeff ord_f = f.order_along(z);
        const Coeff ord_g = g.order_along(z);

        std::vector<std::pair<LinearForm, Coeff>> factors;
        const auto accumulate = [&](const LinearForm& form, Coeff e) {
            if (form == z || e == 0) return;
            for (auto& [existing, acc] : factors) {
                if (existing == form) {
                    acc = checked_add(acc, e);
                    return;
                }
            }
            factors.emplace_back(form, e);
        };
        for (const auto& [form, e] : f.factors()) accumulate(form, checked_mul(e, ord_g));
        for (const auto& [form, e] : g.factors()) accumulate(form, checked_mul(-e, ord_f));
        std::erase_if(factors, [](const auto& fe) { return fe.second == 0; });

        TameComponent comp{z, (checked_mul(ord_f, ord_g) % 2 == 0) ? 1 : -1, std::move(factors)};
        if (comp.is_one()) continue;

        CurveFunction fn = comp.factors.empty() ? CurveFunction::constant("-1") : CurveFunction(comp.divisor());
        out.precycle.terms.push_back({line_curve_id(z), std::move(fn)});
        out.components.push_back(std::move(comp));
    }
    return out;
}

}  // namespace delpezzo
