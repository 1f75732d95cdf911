#include "solharm/path_prefix.hpp"

#include <string>

namespace solharm {

PathPrefix::PathPrefix(const System& sys, std::vector<Point> points)
    : points_(std::move(points)) {
    if (points_.empty()) throw Error("path: a prefix needs at least a root");
    for (std::size_t k = 0; k + 1 < points_.size(); ++k) {
        if (!points_equal(sys.apply_r(points_[k + 1]), points_[k]))
            throw Error("path: r(x_" + std::to_string(k + 1) +
                        ") does not match x_" + std::to_string(k));
    }
}

PathPrefix PathPrefix::truncated(const System& sys, std::size_t L) const {
    if (L > length()) throw TruncationError("path: truncation beyond length");
    return PathPrefix(sys,
                      std::vector<Point>(points_.begin(), points_.begin() + L + 1));
}

}  // namespace solharm
