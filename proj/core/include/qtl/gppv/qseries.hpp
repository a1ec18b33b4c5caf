#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtl/core/rational.hpp"

namespace qtl {

// Truncated q-series: terms hold full exponents (prefactor included); every term with
// exponent <= emax is present.
struct QSeries {
    Rational prefactor_exponent = 0;
    std::map<Rational, Rational> terms;
    Rational emax = 0;
    std::vector<std::string> warnings;

    void add(const Rational& exponent, const Rational& coeff);
    // sum c * zeta_k^{e} * exp(-t e) over the stored terms
    Complex evaluate_radial(long k, double t) const;
    std::string to_json() const;
    // Power of 2 in the largest coefficient denominator.
    int max_denominator_power_of_two() const;
};

}  // namespace qtl
