#pragma once

#include <memory>
#include <vector>

#include "cpchart/expr.hpp"
#include "cpchart/varset.hpp"

namespace cpchart {

// A single coordinate chart on C^n (optionally with coordinate hyperplanes
// z_j = 0 removed, as for the C* example). The realified frame convention is
//   index 0 .. n-1   : dz_1 .. dz_n   /  d/dz_1 .. d/dz_n
//   index n .. 2n-1  : dzb_1 .. dzb_n /  d/dzb_1 .. d/dzb_n
struct Chart {
    int n;
    std::vector<bool> origin_excluded;  // per coordinate
    VarSetPtr vars;

    int dim() const { return 2 * n; }

    Expr zero() const { return Expr::zero(vars); }
    Expr one() const { return Expr::one(vars); }

    // Human-readable frame labels for reports: dz1..dzn, dzb1..dzbn.
    std::string cobasis_name(int a) const {
        return a < n ? "dz" + std::to_string(a + 1) : "dzb" + std::to_string(a - n + 1);
    }
    std::string basis_name(int a) const {
        return a < n ? "d/dz" + std::to_string(a + 1) : "d/dzb" + std::to_string(a - n + 1);
    }
};

using ChartPtr = std::shared_ptr<const Chart>;

ChartPtr make_chart(int n, std::vector<bool> origin_excluded = {},
                    std::vector<std::string> constants = {});

}  // namespace cpchart
