#pragma once

#include <type_traits>
#include <vector>

#include "qtl/core/error.hpp"
#include "qtl/core/rational.hpp"

namespace qtl::asymptotics {

// coefficient * prod_i y_i^{power_i} [y_i in residue_i + modulus_i Z]; modulus 0 pins y_i = residue_i.
template <class C>
struct WeightTerm {
    C coefficient{};
    std::vector<unsigned> powers;
    std::vector<Integer> residues;
    std::vector<Integer> moduli;
};

// F(l) for l in Z_{>=0}^N + offset.
template <class C>
struct BasicWeightFunction {
    int dimension = 0;
    std::vector<Integer> offset;
    std::vector<WeightTerm<C>> terms;

    explicit BasicWeightFunction(int n = 0) : dimension(n), offset(n, 0) {}

    void add_term(WeightTerm<C> t)
    {
        if (static_cast<int>(t.powers.size()) != dimension || static_cast<int>(t.residues.size()) != dimension ||
            static_cast<int>(t.moduli.size()) != dimension)
            fail(ErrorCode::invalid_input, "weight term has the wrong dimension");
        for (auto& k : t.moduli)
            if (k < 0) fail(ErrorCode::invalid_input, "congruence modulus must be non-negative");
        terms.push_back(std::move(t));
    }

    // Indicator-type term: coefficient * [l_i in a_i + k_i Z] for all i, no monomial.
    void add_congruence(const C& c, const std::vector<Integer>& a, const std::vector<Integer>& k)
    {
        add_term({c, std::vector<unsigned>(dimension, 0), a, k});
    }

    C evaluate(const std::vector<Integer>& l) const
    {
        if (static_cast<int>(l.size()) != dimension) fail(ErrorCode::invalid_input, "lattice point has the wrong dimension");
        for (int i = 0; i < dimension; ++i)
            if (l[i] < offset[i]) fail(ErrorCode::domain, "lattice point below the weight offset");
        C sum{};
        for (auto& t : terms) {
            Rational mono = 1;
            bool hit = true;
            for (int i = 0; i < dimension && hit; ++i) {
                if (t.moduli[i] == 0) hit = (l[i] == t.residues[i]);
                else hit = (mod(l[i] - t.residues[i], t.moduli[i]) == 0);
                if (hit) mono *= pow(Rational(l[i]), t.powers[i]);
            }
            if (hit) sum += t.coefficient * convert(mono);
        }
        return sum;
    }

private:
    static C convert(const Rational& r)
    {
        if constexpr (std::is_same_v<C, Rational>) return r;
        else return C(r.get_d());
    }
};

using WeightFunction = BasicWeightFunction<Rational>;
using ComplexWeightFunction = BasicWeightFunction<Complex>;

// Indicator of Z_{>=0}^N + offset.
WeightFunction indicator(int n, std::vector<Integer> offset = {});

}  // namespace qtl::asymptotics
