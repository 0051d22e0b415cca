#ifndef DUNKLBI_PARAMS_HPP
#define DUNKLBI_PARAMS_HPP

#include <string>
#include <vector>

#include "dunklbi/rational.hpp"

namespace dunklbi {

// Subset of the axis set {1, ..., n}, kept sorted and duplicate-free.
// The empty subset is legal (it indexes the scalar Casimir -1/2).
class SubsetLabel {
  public:
    SubsetLabel() = default;
    SubsetLabel(std::initializer_list<int> axes);
    explicit SubsetLabel(std::vector<int> axes);

    static SubsetLabel full(int n);
    // Every subset of {1..n}, ordered by size then lexicographically.
    static std::vector<SubsetLabel> all_subsets(int n, bool include_empty);

    bool empty() const { return axes_.empty(); }
    std::size_t size() const { return axes_.size(); }
    bool contains(int axis) const;
    const std::vector<int>& axes() const { return axes_; }
    int max_axis() const { return axes_.empty() ? 0 : axes_.back(); }

    SubsetLabel set_union(const SubsetLabel& rhs) const;
    SubsetLabel set_intersection(const SubsetLabel& rhs) const;
    SubsetLabel set_difference(const SubsetLabel& rhs) const;
    SubsetLabel symmetric_difference(const SubsetLabel& rhs) const;

    bool operator==(const SubsetLabel& rhs) const = default;
    auto operator<=>(const SubsetLabel& rhs) const = default;

    std::string to_string() const;  // "{1,3}"

  private:
    std::vector<int> axes_;
};

// Model parameters: dimension n >= 2 and the non-negative rational vector
// mu_1..mu_n. gamma_i = mu_i + 1/2 and gamma_A = sum over A.
class ModelParams {
  public:
    ModelParams(int n, std::vector<Rational> mu);

    int dimension() const { return n_; }
    const std::vector<Rational>& mu() const { return mu_; }
    const Rational& mu(int axis) const;         // 1-based
    Rational gamma(int axis) const;             // mu_axis + 1/2
    Rational gamma_sum(const SubsetLabel& a) const;
    Rational gamma_prefix(int k) const;         // gamma_{[k]} = sum_{i<=k} gamma_i
    Rational mu_sum() const;

    std::string mu_string() const;  // "1/2,1/3,1/4"

  private:
    int n_;
    std::vector<Rational> mu_;
};

}  // namespace dunklbi

#endif
