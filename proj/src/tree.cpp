#include "solharm/tree.hpp"

#include <cmath>
#include <deque>

namespace solharm {

std::string RegularityReport::describe() const {
    if (regular)
        return "regular to depth " + std::to_string(depth_checked);
    if (period)
        return "not regular: root is periodic with period " +
               std::to_string(*period);
    return "not regular: W = 0 on the tree";
}

RegularityReport check_regular(const System& sys, const WeightFn& w,
                               const Point& x0, int depth) {
    RegularityReport rep;
    rep.depth_checked = depth;

    if (sys.is_circle()) {
        Point x = x0;
        for (int n = 1; n <= depth; ++n) {
            x = sys.apply_r(x);
            if (points_equal(x, x0)) {
                rep.regular = false;
                rep.period = n;
                return rep;
            }
        }
    }
    // abstract trees have no forward orbit above the root, so only the
    // weight condition applies there

    std::deque<Point> frontier{x0};
    for (int level = 0; level <= depth; ++level) {
        std::deque<Point> next;
        for (const Point& p : frontier) {
            if (std::fabs(w(p)) <= kZeroWeightTol) {
                rep.regular = false;
                rep.zero_node = p;
                return rep;
            }
            if (level < depth)
                for (const Point& c : sys.preimages(p)) next.push_back(c);
        }
        frontier.swap(next);
    }
    return rep;
}

Tree Tree::build(const System& sys, const WeightFn& w, const Point& root,
                 int depth) {
    if (depth < 0) throw ConfigError("tree: depth must be >= 0");
    Tree t;
    t.sys_ = sys;
    t.weight_ = w;
    t.depth_ = depth;

    double root_w = 1.0;
    if (sys.is_circle()) {
        root_w = w(root);
    } else if (!points_equal(root, sys.tree_root())) {
        root_w = w(root);
    }
    t.nodes_.push_back({root, -1, 0, root_w, 1.0, {}});

    for (std::size_t i = 0; i < t.nodes_.size(); ++i) {
        if (t.nodes_[i].depth >= depth) continue;
        const Point parent_point = t.nodes_[i].point;
        const double parent_cum = t.nodes_[i].cum_weight;
        const int parent_depth = t.nodes_[i].depth;
        for (const Point& c : sys.preimages(parent_point)) {
            const double wc = w(c);
            TreeNode n;
            n.point = c;
            n.parent = static_cast<int>(i);
            n.depth = parent_depth + 1;
            n.weight = wc;
            n.cum_weight = wc * parent_cum;
            t.nodes_[i].children.push_back(static_cast<int>(t.nodes_.size()));
            t.nodes_.push_back(std::move(n));
        }
    }
    t.reg_ = check_regular(sys, w, root, depth);
    return t;
}

int Tree::find(const Point& p) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (points_equal(nodes_[i].point, p)) return static_cast<int>(i);
    return -1;
}

int Tree::ancestor(int id, int levels) const {
    if (levels > nodes_.at(id).depth)
        throw TruncationError("tree: ancestor above the root");
    int cur = id;
    for (int k = 0; k < levels; ++k) cur = nodes_[cur].parent;
    return cur;
}

bool Tree::in_subtree(int x, int y) const {
    const int dx = nodes_.at(x).depth;
    const int dy = nodes_.at(y).depth;
    if (dy < dx) return false;
    return ancestor(y, dy - dx) == x;
}

double Tree::transition_pn(int x, int y, int n) const {
    if (n < 0) throw ConfigError("transition_pn: n must be >= 0");
    if (nodes_.at(x).depth + n > depth_)
        throw TruncationError("transition_pn: n exceeds the depth budget");
    if (n == 0) return x == y ? 1.0 : 0.0;
    if (nodes_.at(y).depth != nodes_[x].depth + n || ancestor(y, n) != x)
        return 0.0;
    double prod = 1.0;
    int cur = y;
    for (int k = 0; k < n; ++k) {
        prod *= nodes_[cur].weight;
        cur = nodes_[cur].parent;
    }
    return prod;
}

void Tree::require_regular(const char* op) const {
    if (!reg_.regular)
        throw Error(std::string(op) + ": tree is not regular (" +
                    reg_.describe() + ")");
}

double Tree::green(int x, int y) const {
    require_regular("green");
    if (x == y) return 1.0;
    if (!in_subtree(x, y)) return 0.0;
    const int n = nodes_.at(y).depth - nodes_.at(x).depth;
    double prod = 1.0;
    int cur = y;
    for (int k = 0; k < n; ++k) {
        prod *= nodes_[cur].weight;
        cur = nodes_[cur].parent;
    }
    return prod;
}

double Tree::martin_kernel(int x, int y) const {
    require_regular("martin_kernel");
    if (!in_subtree(x, y)) return 0.0;
    return bound_c(x);
}

Tree::MetricValue Tree::martin_metric(int x, int y) const {
    require_regular("martin_metric");
    double sum = 0.0;
    for (std::size_t q = 0; q < nodes_.size(); ++q) {
        const int qi = static_cast<int>(q);
        const double kx = martin_kernel(qi, x);
        const double ky = martin_kernel(qi, y);
        const double dx = qi == x ? 1.0 : 0.0;
        const double dy = qi == y ? 1.0 : 0.0;
        const double num = std::fabs(kx - ky) + std::fabs(dx - dy);
        if (num != 0.0)
            sum += metric_weight(qi) * num / (bound_c(qi) + 1.0);
    }
    const double tail =
        2.0 * std::ldexp(1.0, -static_cast<int>(nodes_.size()));
    return {sum, tail};
}

}  // namespace solharm
