#include "dunklbi/params.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dunklbi {

SubsetLabel::SubsetLabel(std::initializer_list<int> axes) : SubsetLabel(std::vector<int>(axes)) {}

SubsetLabel::SubsetLabel(std::vector<int> axes) : axes_(std::move(axes)) {
    std::sort(axes_.begin(), axes_.end());
    axes_.erase(std::unique(axes_.begin(), axes_.end()), axes_.end());
    if (!axes_.empty() && axes_.front() < 1)
        throw std::invalid_argument("SubsetLabel: axes are 1-based");
}

SubsetLabel SubsetLabel::full(int n) {
    std::vector<int> axes(n);
    for (int i = 0; i < n; ++i) axes[i] = i + 1;
    return SubsetLabel(std::move(axes));
}

std::vector<SubsetLabel> SubsetLabel::all_subsets(int n, bool include_empty) {
    std::vector<SubsetLabel> out;
    for (unsigned mask = include_empty ? 0 : 1; mask < (1u << n); ++mask) {
        std::vector<int> axes;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) axes.push_back(i + 1);
        out.emplace_back(std::move(axes));
    }
    std::sort(out.begin(), out.end(), [](const SubsetLabel& a, const SubsetLabel& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.axes() < b.axes();
    });
    return out;
}

bool SubsetLabel::contains(int axis) const {
    return std::binary_search(axes_.begin(), axes_.end(), axis);
}

SubsetLabel SubsetLabel::set_union(const SubsetLabel& rhs) const {
    std::vector<int> out;
    std::set_union(axes_.begin(), axes_.end(), rhs.axes_.begin(), rhs.axes_.end(),
                   std::back_inserter(out));
    return SubsetLabel(std::move(out));
}

SubsetLabel SubsetLabel::set_intersection(const SubsetLabel& rhs) const {
    std::vector<int> out;
    std::set_intersection(axes_.begin(), axes_.end(), rhs.axes_.begin(), rhs.axes_.end(),
                          std::back_inserter(out));
    return SubsetLabel(std::move(out));
}

SubsetLabel SubsetLabel::set_difference(const SubsetLabel& rhs) const {
    std::vector<int> out;
    std::set_difference(axes_.begin(), axes_.end(), rhs.axes_.begin(), rhs.axes_.end(),
                        std::back_inserter(out));
    return SubsetLabel(std::move(out));
}

SubsetLabel SubsetLabel::symmetric_difference(const SubsetLabel& rhs) const {
    std::vector<int> out;
    std::set_symmetric_difference(axes_.begin(), axes_.end(), rhs.axes_.begin(), rhs.axes_.end(),
                                  std::back_inserter(out));
    return SubsetLabel(std::move(out));
}

std::string SubsetLabel::to_string() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < axes_.size(); ++i) {
        if (i) os << ",";
        os << axes_[i];
    }
    os << "}";
    return os.str();
}

ModelParams::ModelParams(int n, std::vector<Rational> mu) : n_(n), mu_(std::move(mu)) {
    if (n_ < 2) throw std::invalid_argument("ModelParams: dimension must be >= 2");
    if (static_cast<int>(mu_.size()) != n_)
        throw std::invalid_argument("ModelParams: mu vector length must equal dimension");
    for (const auto& m : mu_)
        if (m < 0) throw std::invalid_argument("ModelParams: mu values must be non-negative");
}

const Rational& ModelParams::mu(int axis) const {
    if (axis < 1 || axis > n_) throw std::invalid_argument("ModelParams: axis out of range");
    return mu_[axis - 1];
}

Rational ModelParams::gamma(int axis) const {
    return mu(axis) + Rational(1, 2);
}

Rational ModelParams::gamma_sum(const SubsetLabel& a) const {
    Rational out = 0;
    for (int i : a.axes()) out += gamma(i);
    return out;
}

Rational ModelParams::gamma_prefix(int k) const {
    if (k < 0 || k > n_) throw std::invalid_argument("ModelParams: prefix length out of range");
    Rational out = 0;
    for (int i = 1; i <= k; ++i) out += gamma(i);
    return out;
}

Rational ModelParams::mu_sum() const {
    Rational out = 0;
    for (const auto& m : mu_) out += m;
    return out;
}

std::string ModelParams::mu_string() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        if (i) os << ",";
        os << to_string(mu_[i]);
    }
    return os.str();
}

}  // namespace dunklbi
