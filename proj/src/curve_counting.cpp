#include "delpezzo/curve_counting.hpp"

#include "delpezzo/errors.hpp"

namespace delpezzo {

namespace {

BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

void require_positive(long degree) {
    if (degree < 1) throw DomainError("curve degree must be positive, got " + std::to_string(degree));
}

}  // namespace

const BigInt& RationalCurveCounter::count(long degree) {
    require_positive(degree);
    if (const auto it = memo_.find(degree); it != memo_.end()) return it->second;

    BigInt total = 0;
    for (long d1 = 1; d1 < degree; ++d1) {
        const long d2 = degree - d1;
        const BigInt bracket =
            d2 * binomial(3 * degree - 4, 3 * d1 - 2) - d1 * binomial(3 * degree - 4, 3 * d1 - 1);
        total += count(d1) * count(d2) * (d1 * d1) * d2 * bracket;
    }
    return memo_.emplace(degree, std::move(total)).first->second;
}

BigInt kontsevich_count(long degree) {
    RationalCurveCounter counter;
    return counter.count(degree);
}

std::map<long, BigInt> kontsevich_table(long max_degree) {
    require_positive(max_degree);
    std::map<long, BigInt> table{{1, BigInt(1)}};
    for (long d = 2; d <= max_degree; ++d) {
        BigInt total = 0;
        for (long d1 = 1; d1 < d; ++d1) {
            const long d2 = d - d1;
            BigInt term = table.at(d1) * table.at(d2);
            term *= d1 * d1 * d2;
            term *= d2 * binomial(3 * d - 4, 3 * d1 - 2) - d1 * binomial(3 * d - 4, 3 * d1 - 1);
            total += term;
        }
        table.emplace(d, std::move(total));
    }
    return table;
}

Coeff generalized_point_condition(const DivisorClass& x) { return checked_sub(anticanonical_half_degree(x), 1); }

}  // namespace delpezzo
