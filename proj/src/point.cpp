#include "solharm/point.hpp"

#include <cmath>

namespace solharm {

Point Point::circle(double t) {
    if (!std::isfinite(t)) throw Error("point: non-finite angle");
    t -= std::floor(t);
    if (t >= 1.0) t = 0.0;  // t just below 1 can round up through floor
    return Point(t);
}

double circle_distance(double a, double b) {
    double d = std::fabs(a - b);
    return d <= 0.5 ? d : 1.0 - d;
}

bool points_equal(const Point& a, const Point& b, double tol) {
    if (a.is_circle() != b.is_circle()) return false;
    if (a.is_circle()) return circle_distance(a.angle(), b.angle()) < tol;
    return a.label() == b.label();
}

}  // namespace solharm
