#ifndef SOLHARM_SYSTEM_HPP
#define SOLHARM_SYSTEM_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "solharm/point.hpp"

namespace solharm {

enum class SystemKind { CirclePower, AbstractTree };

// Stored description of an abstract weighted preimage tree: node labels with
// declared-order children and per-node transition weights. Branching may vary
// from node to node.
struct AbstractTreeSpec {
    struct Node {
        std::string parent;                // empty for the root
        std::vector<std::string> children; // declared order
        double weight = 1.0;               // W at this node (edge from parent)
    };
    std::string root;
    std::map<std::string, Node> nodes;
};

struct QuadratureResult {
    std::complex<double> value;
    double error;  // estimated from panel refinement
};

// The dynamical system (X, r, mu). Two realizations: the circle with
// r(t) = N*t mod 1 under Haar (Lebesgue) measure, and an abstract weighted
// preimage tree for which only the tree-side modules apply (no global
// measure, no forward map above the root).
class System {
public:
    static System circle(int N, int panels = 4096);
    static System abstract_tree(AbstractTreeSpec spec);

    SystemKind kind() const { return kind_; }
    bool is_circle() const { return kind_ == SystemKind::CirclePower; }
    int branching() const;  // N; abstract trees have per-node branching
    int panels() const { return panels_; }

    // N == 1 is accepted but flagged: the walk is deterministic and the QMF
    // condition forces |m0| == 1.
    bool degenerate() const { return is_circle() && branching_ == 1; }

    Point apply_r(const Point& x) const;
    std::vector<Point> preimages(const Point& x) const;
    int preimage_count(const Point& x) const;  // #r^{-1}(x)

    // stored transition weight of an abstract-tree node (root defaults to 1)
    double stored_weight(const Point& x) const;
    Point tree_root() const;

    // composite 8-node Gauss-Legendre over [0,1) with the configured panel
    // count; the error estimate compares against half the panels.
    // Circle systems only; throws on non-finite integrand values.
    QuadratureResult integrate_mu(
        const std::function<std::complex<double>(double)>& f) const;

    // uniform draw from Haar measure; deterministic given (seed, draw)
    Point sample_mu(std::uint64_t seed, std::uint64_t draw) const;

private:
    System() = default;
    const AbstractTreeSpec::Node& node_info(const Point& x) const;

    SystemKind kind_ = SystemKind::CirclePower;
    int branching_ = 2;
    int panels_ = 4096;
    std::shared_ptr<const AbstractTreeSpec> tree_;
};

// composite Gauss-Legendre over [a,b]
std::complex<double> gauss_legendre(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    int panels);

}  // namespace solharm

#endif
