#include "solharm/system.hpp"

#include <cmath>

#include "solharm/rng.hpp"

namespace solharm {

namespace {

// 8-point Gauss-Legendre nodes/weights on [-1, 1]
constexpr double kGlNode[4] = {
    0.1834346424956498, 0.5255324099163290,
    0.7966664774136267, 0.9602898564975363};
constexpr double kGlWeight[4] = {
    0.3626837833783620, 0.3137066458778873,
    0.2223810344533745, 0.1012285362903763};

}  // namespace

System System::circle(int N, int panels) {
    if (N < 1) throw ConfigError("system: circle branching N must be >= 1");
    if (panels < 1) throw ConfigError("system: panel count must be >= 1");
    System s;
    s.kind_ = SystemKind::CirclePower;
    s.branching_ = N;
    s.panels_ = panels;
    return s;
}

System System::abstract_tree(AbstractTreeSpec spec) {
    if (!spec.nodes.count(spec.root))
        throw ConfigError("system: abstract tree root '" + spec.root +
                          "' not among nodes");
    for (const auto& [label, info] : spec.nodes) {
        if (label != spec.root && !spec.nodes.count(info.parent))
            throw ConfigError("system: node '" + label +
                              "' has unknown parent '" + info.parent + "'");
        for (const auto& c : info.children)
            if (!spec.nodes.count(c))
                throw ConfigError("system: node '" + label +
                                  "' lists unknown child '" + c + "'");
        if (info.weight < 0)
            throw ConfigError("system: node '" + label +
                              "' has negative weight");
    }
    System s;
    s.kind_ = SystemKind::AbstractTree;
    s.tree_ = std::make_shared<const AbstractTreeSpec>(std::move(spec));
    return s;
}

int System::branching() const {
    if (!is_circle())
        throw Error("system: abstract trees have per-node branching");
    return branching_;
}

const AbstractTreeSpec::Node& System::node_info(const Point& x) const {
    auto it = tree_->nodes.find(x.label());
    if (it == tree_->nodes.end())
        throw Error("system: unknown tree node '" + x.label() + "'");
    return it->second;
}

Point System::apply_r(const Point& x) const {
    if (is_circle()) {
        double t = x.angle() * branching_;
        return Point::circle(t - std::floor(t));
    }
    if (x.label() == tree_->root)
        throw TruncationError("system: root has no image within truncation");
    return Point::node(node_info(x).parent);
}

std::vector<Point> System::preimages(const Point& x) const {
    std::vector<Point> out;
    if (is_circle()) {
        const double t = x.angle();
        out.reserve(branching_);
        for (int k = 0; k < branching_; ++k)
            out.push_back(Point::circle((t + k) / branching_));
        return out;  // ascending angle by construction
    }
    for (const auto& c : node_info(x).children) out.push_back(Point::node(c));
    return out;
}

int System::preimage_count(const Point& x) const {
    if (is_circle()) return branching_;
    return static_cast<int>(node_info(x).children.size());
}

double System::stored_weight(const Point& x) const {
    if (is_circle())
        throw Error("system: circle systems derive W from a filter");
    return node_info(x).weight;
}

Point System::tree_root() const {
    if (is_circle()) throw Error("system: circle systems have no root");
    return Point::node(tree_->root);
}

std::complex<double> gauss_legendre(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    int panels) {
    const double h = (b - a) / panels;
    std::complex<double> total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        std::complex<double> acc = 0.0;
        for (int j = 0; j < 4; ++j) {
            const double dx = 0.5 * h * kGlNode[j];
            acc += kGlWeight[j] * (f(mid + dx) + f(mid - dx));
        }
        total += acc * (0.5 * h);
    }
    return total;
}

QuadratureResult System::integrate_mu(
    const std::function<std::complex<double>(double)>& f) const {
    if (!is_circle())
        throw Error("system: abstract trees carry no global measure");
    auto checked = [&f](double t) {
        std::complex<double> v = f(t);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw Error("integrate_mu: non-finite integrand value at t=" +
                        std::to_string(t));
        return v;
    };
    const std::complex<double> fine = gauss_legendre(checked, 0.0, 1.0, panels_);
    const int coarse_panels = panels_ > 1 ? panels_ / 2 : 2;
    const std::complex<double> coarse =
        gauss_legendre(checked, 0.0, 1.0, coarse_panels);
    return {fine, std::abs(fine - coarse)};
}

Point System::sample_mu(std::uint64_t seed, std::uint64_t draw) const {
    if (!is_circle())
        throw Error("system: abstract trees carry no global measure");
    Rng rng(seed, draw);
    return Point::circle(rng.uniform01());
}

}  // namespace solharm
