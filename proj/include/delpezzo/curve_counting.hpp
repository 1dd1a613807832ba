#pragma once

// Counts N_d of rational plane curves of degree d through 3d - 1 general
// points, via Kontsevich's recursion
//
//   N_d = sum_{d1 + d2 = d} N_d1 N_d2 d1^2 d2 (d2 C(3d-4, 3d1-2) - d1 C(3d-4, 3d1-1)),  N_1 = 1.

#include <map>

#include <gmpxx.h>

#include "delpezzo/picard_lattice.hpp"

namespace delpezzo {

using BigInt = mpz_class;

// Memoised top-down evaluation. Not thread-safe; use one instance per thread.
class RationalCurveCounter {
public:
    // Throws DomainError for degree < 1.
    const BigInt& count(long degree);

private:
    std::map<long, BigInt> memo_{{1, BigInt(1)}};
};

BigInt kontsevich_count(long degree);

// Bottom-up evaluation of the same recursion into a table N_1..N_max.
std::map<long, BigInt> kontsevich_table(long max_degree);

// 3a - sum b_i - 1: the number of point conditions in the generalized count
// for class x; 0 for (-1)-curves and negative for non-effective classes.
Coeff generalized_point_condition(const DivisorClass& x);

}  // namespace delpezzo
