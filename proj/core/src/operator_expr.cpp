#include "dunklbi/operator_expr.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace dunklbi {

struct OperatorExpr::Node {
    Tag tag;
    int axis = 0;                    // atoms
    Rational coeff;                  // scalar / scale
    std::vector<NodePtr> children;   // sum: n-ary; compose: {after, first}; scale: {child}
};

namespace {

OperatorExpr::Tag check_axis_positive(OperatorExpr::Tag tag, int axis) {
    if (axis < 1) throw std::invalid_argument("operator atom: axis must be >= 1");
    return tag;
}

}  // namespace

OperatorExpr OperatorExpr::identity() {
    return OperatorExpr(std::make_shared<Node>(Node{Tag::identity, 0, Rational(), {}}));
}

OperatorExpr OperatorExpr::scalar(const Rational& c) {
    return OperatorExpr(std::make_shared<Node>(Node{Tag::scalar, 0, c, {}}));
}

OperatorExpr OperatorExpr::mul_var(int axis) {
    return OperatorExpr(std::make_shared<Node>(Node{check_axis_positive(Tag::mul_var, axis), axis, Rational(), {}}));
}

OperatorExpr OperatorExpr::inv_var(int axis) {
    return OperatorExpr(std::make_shared<Node>(Node{check_axis_positive(Tag::inv_var, axis), axis, Rational(), {}}));
}

OperatorExpr OperatorExpr::partial(int axis) {
    return OperatorExpr(std::make_shared<Node>(Node{check_axis_positive(Tag::partial, axis), axis, Rational(), {}}));
}

OperatorExpr OperatorExpr::reflect(int axis) {
    return OperatorExpr(std::make_shared<Node>(Node{check_axis_positive(Tag::reflect, axis), axis, Rational(), {}}));
}

OperatorExpr OperatorExpr::sum(std::vector<OperatorExpr> terms) {
    if (terms.empty()) return scalar(Rational(0));
    if (terms.size() == 1) return terms.front();
    Node node{Tag::sum, 0, Rational(), {}};
    node.children.reserve(terms.size());
    for (auto& t : terms) node.children.push_back(std::move(t.node_));
    return OperatorExpr(std::make_shared<Node>(std::move(node)));
}

OperatorExpr OperatorExpr::compose(OperatorExpr after, OperatorExpr first) {
    Node node{Tag::compose, 0, Rational(), {}};
    node.children = {std::move(after.node_), std::move(first.node_)};
    return OperatorExpr(std::make_shared<Node>(std::move(node)));
}

OperatorExpr OperatorExpr::scale(const Rational& c, OperatorExpr e) {
    Node node{Tag::scale, 0, c, {}};
    node.children = {std::move(e.node_)};
    return OperatorExpr(std::make_shared<Node>(std::move(node)));
}

OperatorExpr::Tag OperatorExpr::tag() const {
    return node_->tag;
}

namespace {

LaurentPoly apply_node(const OperatorExpr::Node* node, const LaurentPoly& p);

LaurentPoly apply_ptr(const std::shared_ptr<const OperatorExpr::Node>& node, const LaurentPoly& p) {
    return apply_node(node.get(), p);
}

LaurentPoly apply_node(const OperatorExpr::Node* node, const LaurentPoly& p) {
    using Tag = OperatorExpr::Tag;
    switch (node->tag) {
        case Tag::identity:
            return p;
        case Tag::scalar:
            return p * node->coeff;
        case Tag::mul_var:
            return p.mul_var(node->axis, 1);
        case Tag::inv_var:
            return p.mul_var(node->axis, -1);
        case Tag::partial:
            return p.partial(node->axis);
        case Tag::reflect:
            return p.reflect(node->axis);
        case Tag::sum: {
            LaurentPoly out(p.dim());
            for (const auto& child : node->children) out += apply_ptr(child, p);
            return out;
        }
        case Tag::compose:
            return apply_ptr(node->children[0], apply_ptr(node->children[1], p));
        case Tag::scale:
            return apply_ptr(node->children[0], p) * node->coeff;
    }
    throw std::logic_error("unreachable operator tag");
}

}  // namespace

LaurentPoly OperatorExpr::apply(const LaurentPoly& p) const {
    return apply_node(node_.get(), p);
}

namespace {

void render_node(const OperatorExpr::Node* node, std::ostringstream& os) {
    using Tag = OperatorExpr::Tag;
    switch (node->tag) {
        case Tag::identity:
            os << "1";
            return;
        case Tag::scalar:
            os << to_string(node->coeff);
            return;
        case Tag::mul_var:
            os << "x_" << node->axis;
            return;
        case Tag::inv_var:
            os << "1/x_" << node->axis;
            return;
        case Tag::partial:
            os << "d_" << node->axis;
            return;
        case Tag::reflect:
            os << "R_" << node->axis;
            return;
        case Tag::sum:
            os << "(sum";
            for (const auto& c : node->children) {
                os << " ";
                render_node(c.get(), os);
            }
            os << ")";
            return;
        case Tag::compose:
            os << "(compose ";
            render_node(node->children[0].get(), os);
            os << " ";
            render_node(node->children[1].get(), os);
            os << ")";
            return;
        case Tag::scale:
            os << "(scale " << to_string(node->coeff) << " ";
            render_node(node->children[0].get(), os);
            os << ")";
            return;
    }
}

}  // namespace

std::string OperatorExpr::render() const {
    std::ostringstream os;
    render_node(node_.get(), os);
    return os.str();
}

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b) {
    return OperatorExpr::sum({OperatorExpr::compose(a, b),
                              OperatorExpr::scale(Rational(-1), OperatorExpr::compose(b, a))});
}

OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b) {
    return OperatorExpr::sum({OperatorExpr::compose(a, b), OperatorExpr::compose(b, a)});
}

OperatorExpr op_pow(const OperatorExpr& a, int k) {
    if (k < 0) throw std::invalid_argument("op_pow: negative power");
    OperatorExpr out = OperatorExpr::identity();
    for (int i = 0; i < k; ++i) out = OperatorExpr::compose(out, a);
    return out;
}

OperatorExpr gauge_conjugate(const OperatorExpr& op, const ModelParams& params) {
    using Tag = OperatorExpr::Tag;
    const auto& node = *op.node_;
    switch (node.tag) {
        case Tag::identity:
        case Tag::scalar:
        case Tag::mul_var:
        case Tag::inv_var:
        case Tag::reflect:
            return op;
        case Tag::partial: {
            // G^{-1} d_i G = d_i + mu_i / s_i
            return OperatorExpr::sum(
                {OperatorExpr::partial(node.axis),
                 OperatorExpr::scale(params.mu(node.axis), OperatorExpr::inv_var(node.axis))});
        }
        case Tag::sum: {
            std::vector<OperatorExpr> terms;
            terms.reserve(node.children.size());
            for (const auto& c : node.children)
                terms.push_back(gauge_conjugate(OperatorExpr(c), params));
            return OperatorExpr::sum(std::move(terms));
        }
        case Tag::compose:
            return OperatorExpr::compose(gauge_conjugate(OperatorExpr(node.children[0]), params),
                                         gauge_conjugate(OperatorExpr(node.children[1]), params));
        case Tag::scale:
            return OperatorExpr::scale(node.coeff,
                                       gauge_conjugate(OperatorExpr(node.children[0]), params));
    }
    throw std::logic_error("unreachable operator tag");
}

namespace {

void compositions_colex(int total, int parts, ExponentVector& scratch, int pos,
                        std::vector<ExponentVector>& out) {
    if (pos == 0) {
        scratch[0] = total;
        out.push_back(scratch);
        return;
    }
    // Last position varies slowest: emit smaller values at `pos` first.
    for (int v = 0; v <= total; ++v) {
        scratch[pos] = v;
        compositions_colex(total - v, parts - 1, scratch, pos - 1, out);
    }
}

}  // namespace

std::vector<ExponentVector> monomials_of_degree(int n, int degree) {
    if (n < 1 || degree < 0) throw std::invalid_argument("monomials_of_degree: bad arguments");
    std::vector<ExponentVector> out;
    ExponentVector scratch(n, 0);
    compositions_colex(degree, n, scratch, n - 1, out);
    return out;
}

std::vector<ExponentVector> monomials_up_to_degree(int n, int max_degree) {
    std::vector<ExponentVector> out;
    for (int d = 0; d <= max_degree; ++d) {
        auto level = monomials_of_degree(n, d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::string EqualityWitness::describe() const {
    if (kind == Kind::equal) return "equal";
    std::ostringstream os;
    os << (kind == Kind::images_differ ? "images differ" : "non-polynomial image");
    os << " at monomial ";
    os << LaurentPoly::monomial(monomial, Rational(1)).to_string();
    os << "; lhs = " << lhs_image.to_string() << "; rhs = " << rhs_image.to_string();
    return os.str();
}

EqualityWitness equal_on_degree(const OperatorExpr& a, const OperatorExpr& b, int dim,
                                int max_degree, bool require_polynomial_images) {
    if (max_degree < 0) throw std::invalid_argument("equal_on_degree: negative degree bound");
    const auto monomials = monomials_up_to_degree(dim, max_degree);
    const std::size_t count = monomials.size();

    // Each slot gets the verdict for one monomial; the first bad slot (in
    // sweep order) is reported, independent of thread scheduling.
    std::vector<EqualityWitness::Kind> kinds(count, EqualityWitness::Kind::equal);
    std::vector<std::unique_ptr<std::pair<LaurentPoly, LaurentPoly>>> images(count);
    std::atomic<std::size_t> first_bad{count};
    std::atomic<std::size_t> next{0};

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            if (i > first_bad.load(std::memory_order_relaxed)) continue;  // best-effort skip
            const LaurentPoly m = LaurentPoly::monomial(monomials[i], Rational(1));
            LaurentPoly la = a.apply(m);
            LaurentPoly lb = b.apply(m);
            EqualityWitness::Kind kind = EqualityWitness::Kind::equal;
            if (require_polynomial_images && (!la.is_polynomial() || !lb.is_polynomial()))
                kind = EqualityWitness::Kind::nonpolynomial_image;
            else if (!(la == lb))
                kind = EqualityWitness::Kind::images_differ;
            if (kind != EqualityWitness::Kind::equal) {
                kinds[i] = kind;
                images[i] = std::make_unique<std::pair<LaurentPoly, LaurentPoly>>(std::move(la),
                                                                                  std::move(lb));
                std::size_t cur = first_bad.load();
                while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {}
            }
        }
    };

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned nthreads = static_cast<unsigned>(std::min<std::size_t>(hw, count));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (std::size_t i = 0; i < count; ++i) {
        if (kinds[i] != EqualityWitness::Kind::equal) {
            EqualityWitness w;
            w.kind = kinds[i];
            w.monomial = monomials[i];
            w.lhs_image = std::move(images[i]->first);
            w.rhs_image = std::move(images[i]->second);
            return w;
        }
    }
    return EqualityWitness{};
}

}  // namespace dunklbi
