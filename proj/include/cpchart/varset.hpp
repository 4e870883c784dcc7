#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cpchart {

// Variable table for a chart of complex dimension n. z_j and zb_j are
// independent formal indeterminates (Wirtinger convention); declared symbolic
// constants carry an implicit conjugate partner so that conjugation stays a
// syntactic involution.
//
// Index layout:
//   0 .. n-1          z_1 .. z_n
//   n .. 2n-1         zb_1 .. zb_n
//   2n + 2t           t-th declared constant
//   2n + 2t + 1       its conjugate partner
class VarSet {
public:
    VarSet(int n, std::vector<std::string> constants = {});

    int n() const { return n_; }
    int num_constants() const { return static_cast<int>(constants_.size()); }
    int num_vars() const { return 2 * n_ + 2 * num_constants(); }

    int z(int j) const;   // j is 1-based, matching z1..zn in the grammar
    int zb(int j) const;  // 1-based
    int constant(int t) const { return 2 * n_ + 2 * t; }

    bool is_holomorphic_coord(int v) const { return v < n_; }
    bool is_antiholomorphic_coord(int v) const { return v >= n_ && v < 2 * n_; }
    bool is_coord(int v) const { return v < 2 * n_; }

    // Conjugation as an index permutation: z_j <-> zb_j, c <-> c̄.
    int conjugate_index(int v) const;

    std::string name(int v) const;
    std::optional<int> index_of(const std::string& name) const;

    const std::vector<std::string>& constant_names() const { return constants_; }

    // Same chart dimension, extra constants appended; existing indices are
    // preserved, so polynomials lift by zero-padding exponent vectors.
    std::shared_ptr<const VarSet> extended(const std::vector<std::string>& extra) const;

    friend bool operator==(const VarSet& a, const VarSet& b) {
        return a.n_ == b.n_ && a.constants_ == b.constants_;
    }

private:
    int n_;
    std::vector<std::string> constants_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline VarSetPtr make_varset(int n, std::vector<std::string> constants = {}) {
    return std::make_shared<const VarSet>(n, std::move(constants));
}

}  // namespace cpchart
