#pragma once

#include <complex>
#include <random>
#include <vector>

#include "cpchart/varset.hpp"

namespace cpchart {

// Numeric evaluation point: values for the n chart coordinates and for each
// declared constant. zb_j and conjugate partners evaluate to the complex
// conjugates, which is what makes eval a *-homomorphism.
struct EvalPoint {
    std::vector<std::complex<double>> coords;
    std::vector<std::complex<double>> constants;

    // Full value vector in VarSet index order.
    std::vector<std::complex<double>> values(const VarSet& vars) const;
};

// Deterministic sample stream: mt19937_64 raw output mapped to doubles via
// (x >> 11) * 2^-53, coordinates drawn with modulus in [mod_min, mod_max] and
// uniform phase. Identical seeds give identical points on every platform.
class PointSampler {
public:
    PointSampler(uint64_t seed, double mod_min = 0.5, double mod_max = 2.0)
        : eng_(seed), mod_min_(mod_min), mod_max_(mod_max) {}

    double uniform(double a, double b) {
        uint64_t x = eng_();
        double u = static_cast<double>(x >> 11) * 0x1.0p-53;
        return a + u * (b - a);
    }

    std::complex<double> sample_value() {
        double m = uniform(mod_min_, mod_max_);
        double ph = uniform(0.0, 6.283185307179586476925286766559);
        return std::polar(m, ph);
    }

    EvalPoint sample_point(const VarSet& vars) {
        EvalPoint p;
        p.coords.reserve(vars.n());
        for (int j = 0; j < vars.n(); ++j) p.coords.push_back(sample_value());
        p.constants.reserve(vars.num_constants());
        for (int t = 0; t < vars.num_constants(); ++t) p.constants.push_back(sample_value());
        return p;
    }

private:
    std::mt19937_64 eng_;
    double mod_min_, mod_max_;
};

inline bool approx_equal(std::complex<double> a, std::complex<double> b, double rel_tol,
                         double abs_floor = 1e-8) {
    double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= std::max(abs_floor, rel_tol * scale);
}

}  // namespace cpchart
