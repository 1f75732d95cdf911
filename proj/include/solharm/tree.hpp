#ifndef SOLHARM_TREE_HPP
#define SOLHARM_TREE_HPP

#include <optional>
#include <string>
#include <vector>

#include "solharm/filter.hpp"
#include "solharm/system.hpp"

namespace solharm {

inline constexpr double kZeroWeightTol = 1e-14;

struct RegularityReport {
    bool regular = true;
    int depth_checked = 0;
    // failure witnesses
    std::optional<int> period;        // n with r^n(x0) = x0, 1 <= n <= depth
    std::optional<Point> zero_node;   // node with W below tolerance
    std::string describe() const;
};

// checks, up to the given depth: no r^n(x0) = x0 for 1 <= n <= d (which is
// equivalent to pairwise disjointness of the preimage levels), and W above
// the zero tolerance at every node of the truncation
RegularityReport check_regular(const System& sys, const WeightFn& w,
                               const Point& x0, int depth);

struct TreeNode {
    Point point;
    int parent = -1;
    int depth = 0;
    double weight = 1.0;      // W at this node
    double cum_weight = 1.0;  // W^(n): product of W along the path to the root
    std::vector<int> children;
};

// Depth-truncated preimage tree T(x0) with cached weights, BFS node order,
// and the metric weights D(q_i) = 2^-(i+1) used by the Martin metric.
// Queries are read-only; kernel operations refuse non-regular trees.
class Tree {
public:
    static Tree build(const System& sys, const WeightFn& w, const Point& root,
                      int depth);

    const System& system() const { return sys_; }
    const WeightFn& weight_fn() const { return weight_; }
    int depth() const { return depth_; }
    std::size_t size() const { return nodes_.size(); }
    const TreeNode& node(int id) const { return nodes_.at(id); }
    const std::vector<TreeNode>& nodes() const { return nodes_; }
    const RegularityReport& regularity() const { return reg_; }

    // BFS metric weight D(q_i) = 2^-(i+1)
    double metric_weight(int id) const { return std::ldexp(1.0, -(id + 1)); }
    // Martin bound C_x = 1 / W^(n(x))(x)
    double bound_c(int id) const { return 1.0 / nodes_[id].cum_weight; }

    // first node whose point matches, searching BFS order; -1 if none
    int find(const Point& p) const;
    // ancestor m levels up; throws if m exceeds the node depth
    int ancestor(int id, int levels) const;
    // true if y lies in the subtree rooted at x (or equals x)
    bool in_subtree(int x, int y) const;

    // n-step transition probability p_n(x, y)
    double transition_pn(int x, int y, int n) const;
    // closed-form Green function g(x, y); requires a regular tree
    double green(int x, int y) const;
    // closed-form Martin kernel K(x, y); requires a regular tree
    double martin_kernel(int x, int y) const;

    struct MetricValue {
        double value;
        double tail_bound;  // mass of D beyond the truncation
    };
    // Martin metric rho(x, y): partial sum over the truncation plus a bound
    // on the omitted tail (each omitted term is at most 2 D(q))
    MetricValue martin_metric(int x, int y) const;

private:
    void require_regular(const char* op) const;

    System sys_ = System::circle(2);
    WeightFn weight_ = WeightFn(Filter::constant(), System::circle(2));
    std::vector<TreeNode> nodes_;
    RegularityReport reg_;
    int depth_ = 0;
};

}  // namespace solharm

#endif
