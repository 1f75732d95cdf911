#ifndef SOLHARM_POINT_HPP
#define SOLHARM_POINT_HPP

#include <string>
#include <variant>

#include "solharm/error.hpp"

namespace solharm {

// Tolerance for deciding whether two circle angles are the same point.
// Preimage arithmetic (t+k)/N is exact to within one rounding of t+k, so
// a round trip through apply_r lands within N*2^-53 of the original angle;
// 1e-12 covers that with a wide margin and also serves the non-dyadic case.
inline constexpr double kCircleEqTol = 1e-12;

// A point of the base space X: an angle in [0,1) for circle systems, an
// opaque node label for abstract preimage trees.
class Point {
public:
    Point() : rep_(0.0) {}

    static Point circle(double t);
    static Point node(std::string label) { return Point(std::move(label)); }

    bool is_circle() const { return std::holds_alternative<double>(rep_); }

    double angle() const {
        if (!is_circle()) throw Error("point: label point has no angle");
        return std::get<double>(rep_);
    }

    const std::string& label() const {
        if (is_circle()) throw Error("point: circle point has no label");
        return std::get<std::string>(rep_);
    }

    bool operator==(const Point& o) const { return rep_ == o.rep_; }
    bool operator<(const Point& o) const { return rep_ < o.rep_; }

private:
    explicit Point(double t) : rep_(t) {}
    explicit Point(std::string l) : rep_(std::move(l)) {}
    std::variant<double, std::string> rep_;
};

// wraparound distance on the circle, in [0, 1/2]
double circle_distance(double a, double b);

// equality with the circle tolerance (labels compare exactly)
bool points_equal(const Point& a, const Point& b, double tol = kCircleEqTol);

}  // namespace solharm

#endif
