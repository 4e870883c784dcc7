#include "cpchart/varset.hpp"

#include <stdexcept>

namespace cpchart {

VarSet::VarSet(int n, std::vector<std::string> constants) : n_(n), constants_(std::move(constants)) {
    if (n < 1) throw std::invalid_argument("chart dimension must be >= 1");
    for (const auto& c : constants_) {
        if (c.empty()) throw std::invalid_argument("empty constant name");
        if (c == "i") throw std::invalid_argument("'i' is reserved for the imaginary unit");
        if (c == "conj") throw std::invalid_argument("'conj' is reserved for conjugation");
        if (c.size() >= 2 && (c[0] == 'z') &&
            (std::isdigit(static_cast<unsigned char>(c[1])) ||
             (c[1] == 'b' && c.size() >= 3 && std::isdigit(static_cast<unsigned char>(c[2])))))
            throw std::invalid_argument("constant name '" + c + "' collides with coordinate names");
    }
    for (size_t a = 0; a < constants_.size(); ++a)
        for (size_t b = a + 1; b < constants_.size(); ++b)
            if (constants_[a] == constants_[b])
                throw std::invalid_argument("duplicate constant name '" + constants_[a] + "'");
}

int VarSet::z(int j) const {
    if (j < 1 || j > n_) throw std::out_of_range("coordinate index out of range");
    return j - 1;
}

int VarSet::zb(int j) const {
    if (j < 1 || j > n_) throw std::out_of_range("coordinate index out of range");
    return n_ + j - 1;
}

int VarSet::conjugate_index(int v) const {
    if (v < n_) return v + n_;
    if (v < 2 * n_) return v - n_;
    int t = v - 2 * n_;
    return 2 * n_ + (t ^ 1);
}

std::string VarSet::name(int v) const {
    if (v < n_) return "z" + std::to_string(v + 1);
    if (v < 2 * n_) return "zb" + std::to_string(v - n_ + 1);
    int t = v - 2 * n_;
    const std::string& base = constants_[t / 2];
    return (t % 2 == 0) ? base : "conj(" + base + ")";
}

std::optional<int> VarSet::index_of(const std::string& name) const {
    for (int v = 0; v < 2 * n_; ++v)
        if (this->name(v) == name) return v;
    for (int t = 0; t < num_constants(); ++t)
        if (constants_[t] == name) return constant(t);
    return std::nullopt;
}

std::shared_ptr<const VarSet> VarSet::extended(const std::vector<std::string>& extra) const {
    std::vector<std::string> all = constants_;
    all.insert(all.end(), extra.begin(), extra.end());
    return std::make_shared<const VarSet>(n_, std::move(all));
}

}  // namespace cpchart
