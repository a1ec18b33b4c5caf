#include "qtl/gppv/qseries.hpp"

#include <cmath>

#include "json.hpp"

namespace qtl {

void QSeries::add(const Rational& exponent, const Rational& coeff)
{
    if (coeff == 0) return;
    auto [it, inserted] = terms.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms.erase(it);
    }
}

Complex QSeries::evaluate_radial(long k, double t) const
{
    Complex s = 0;
    for (auto& [ex, c] : terms) s += c.get_d() * e(ex / Rational(k)) * std::exp(-t * ex.get_d());
    return s;
}

std::string QSeries::to_json() const
{
    nlohmann::ordered_json doc;
    doc["emax"] = qtl::to_string(emax);
    doc["prefactor_exponent"] = qtl::to_string(prefactor_exponent);
    auto arr = nlohmann::ordered_json::array();
    for (auto& [ex, c] : terms) arr.push_back({qtl::to_string(ex), qtl::to_string(c)});
    doc["terms"] = arr;
    return doc.dump();
}

int QSeries::max_denominator_power_of_two() const
{
    int best = 0;
    for (auto& [ex, c] : terms) {
        Integer d = c.get_den();
        int p = 0;
        while (mpz_even_p(d.get_mpz_t())) {
            d /= 2;
            ++p;
        }
        best = std::max(best, p);
    }
    return best;
}

}  // namespace qtl
