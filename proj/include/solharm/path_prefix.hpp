#ifndef SOLHARM_PATH_PREFIX_HPP
#define SOLHARM_PATH_PREFIX_HPP

#include <vector>

#include "solharm/system.hpp"

namespace solharm {

// A finite walk (x0, ..., xL) down the preimage tree: r(x_{k+1}) = x_k for
// every step. Doubles as a solenoid-point prefix and as the computable
// representative of a Martin boundary point. Immutable once built.
class PathPrefix {
public:
    PathPrefix(const System& sys, std::vector<Point> points);

    std::size_t length() const { return points_.size() - 1; }  // L
    const Point& at(std::size_t k) const { return points_.at(k); }
    const Point& root() const { return points_.front(); }
    const Point& tip() const { return points_.back(); }
    const std::vector<Point>& points() const { return points_; }

    // first L+1 entries as a new prefix
    PathPrefix truncated(const System& sys, std::size_t L) const;

private:
    std::vector<Point> points_;
};

}  // namespace solharm

#endif
