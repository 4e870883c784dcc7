#include "cpchart/point.hpp"

#include "cpchart/errors.hpp"

namespace cpchart {

std::vector<std::complex<double>> EvalPoint::values(const VarSet& vars) const {
    if (static_cast<int>(coords.size()) != vars.n())
        throw DimensionError("evaluation point has wrong coordinate count");
    if (static_cast<int>(constants.size()) != vars.num_constants())
        throw DimensionError("evaluation point has wrong constant count");
    std::vector<std::complex<double>> v(vars.num_vars());
    for (int j = 0; j < vars.n(); ++j) {
        v[j] = coords[j];
        v[vars.n() + j] = std::conj(coords[j]);
    }
    for (int t = 0; t < vars.num_constants(); ++t) {
        v[2 * vars.n() + 2 * t] = constants[t];
        v[2 * vars.n() + 2 * t + 1] = std::conj(constants[t]);
    }
    return v;
}

}  // namespace cpchart
