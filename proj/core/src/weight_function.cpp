#include "qtl/asymptotics/weight_function.hpp"

namespace qtl::asymptotics {

WeightFunction indicator(int n, std::vector<Integer> offset)
{
    WeightFunction f(n);
    if (!offset.empty()) {
        if (static_cast<int>(offset.size()) != n) fail(ErrorCode::invalid_input, "offset has the wrong dimension");
        f.offset = std::move(offset);
    }
    f.add_congruence(Rational(1), std::vector<Integer>(n, 0), std::vector<Integer>(n, 1));
    return f;
}

}  // namespace qtl::asymptotics
