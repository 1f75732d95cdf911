#include "solharm/filter.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace solharm {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

// ---------------------------------------------------------------------------
// TrigPoly

TrigPoly::TrigPoly(int lo, std::vector<Complex> coeffs)
    : lo_(lo), coeffs_(std::move(coeffs)) {
    trim();
}

void TrigPoly::trim() {
    std::size_t front = 0;
    while (front < coeffs_.size() && coeffs_[front] == Complex{}) ++front;
    if (front == coeffs_.size()) {
        coeffs_.clear();
        lo_ = 0;
        return;
    }
    std::size_t back = coeffs_.size();
    while (back > front && coeffs_[back - 1] == Complex{}) --back;
    coeffs_ = std::vector<Complex>(coeffs_.begin() + front, coeffs_.begin() + back);
    lo_ += static_cast<int>(front);
}

Complex TrigPoly::coeff(int freq) const {
    if (zero() || freq < lo_ || freq > hi()) return {};
    return coeffs_[static_cast<std::size_t>(freq - lo_)];
}

Complex TrigPoly::eval(double t) const {
    if (zero()) return {};
    const Complex z = std::polar(1.0, kTwoPi * t);
    // Horner over the coefficient window, then shift by z^lo
    Complex acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + *it;
    if (lo_ != 0) acc *= std::polar(1.0, kTwoPi * t * lo_);
    return acc;
}

TrigPoly TrigPoly::conj_mirror() const {
    if (zero()) return {};
    std::vector<Complex> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i] = std::conj(coeffs_[coeffs_.size() - 1 - i]);
    return TrigPoly(-hi(), std::move(out));
}

TrigPoly TrigPoly::decimate(int N) const {
    if (zero()) return {};
    int first = lo_;
    while (first % N != 0) ++first;  // lo_ may be negative; step to a multiple
    if (first > hi()) return {};
    std::vector<Complex> out;
    for (int k = first; k <= hi(); k += N) out.push_back(coeff(k));
    return TrigPoly(first / N, std::move(out));
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
    if (a.zero() || b.zero()) return {};
    std::vector<Complex> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return TrigPoly(a.lo_ + b.lo_, std::move(out));
}

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
    if (a.zero()) return b;
    if (b.zero()) return a;
    const int lo = std::min(a.lo_, b.lo_);
    const int hi = std::max(a.hi(), b.hi());
    std::vector<Complex> out(static_cast<std::size_t>(hi - lo + 1));
    for (int k = lo; k <= hi; ++k)
        out[static_cast<std::size_t>(k - lo)] = a.coeff(k) + b.coeff(k);
    return TrigPoly(lo, std::move(out));
}

TrigPoly& TrigPoly::operator*=(Complex s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
}

double TrigPoly::max_abs_on_grid(int n) const {
    double m = 0.0;
    for (int i = 0; i < n; ++i)
        m = std::max(m, std::abs(eval(static_cast<double>(i) / n)));
    return m;
}

// ---------------------------------------------------------------------------
// Filter

Filter::Filter(std::vector<Complex> coeffs, std::string name)
    : poly_(0, std::move(coeffs)), name_(std::move(name)) {
    if (poly_.zero()) throw ConfigError("filter: all coefficients are zero");
}

Filter Filter::haar() {
    const double c = std::sqrt(0.5);
    return Filter({c, c}, "haar");
}

Filter Filter::constant() { return Filter({1.0}, "constant"); }

Filter Filter::d4() {
    const double s3 = std::sqrt(3.0);
    const double d = 4.0 * std::sqrt(2.0);
    return Filter({(1.0 + s3) / d, (3.0 + s3) / d, (3.0 - s3) / d,
                   (1.0 - s3) / d},
                  "d4");
}

Filter Filter::by_name(const std::string& name) {
    if (name == "haar") return haar();
    if (name == "constant") return constant();
    if (name == "d4") return d4();
    throw ConfigError("filter: unknown name '" + name +
                      "' (expected haar, constant or d4)");
}

// ---------------------------------------------------------------------------
// QMF validation and weights

double qmf_residual(const Filter& f, const System& sys, int grid_size) {
    if (!sys.is_circle())
        throw Error("qmf_residual: abstract trees carry stored weights");
    if (grid_size < 1) throw ConfigError("qmf_residual: grid size must be >= 1");
    const int N = sys.branching();
    double worst = 0.0;
    for (int i = 0; i < grid_size; ++i) {
        const Point x = Point::circle(static_cast<double>(i) / grid_size);
        double s = 0.0;
        for (const Point& y : sys.preimages(x)) s += f.abs2(y);
        worst = std::max(worst, std::fabs(s / N - 1.0));
    }
    return worst;
}

namespace {

double validate_qmf(const Filter& f, const System& sys) {
    const double res = qmf_residual(f, sys, kQmfGrid);
    if (res > kQmfTol)
        throw Error("filter '" + f.name() + "' is not a QMF for N=" +
                    std::to_string(sys.branching()) + " (residual " +
                    std::to_string(res) + ")");
    return res;
}

}  // namespace

WeightFn::WeightFn(Filter f, System sys) : sys_(std::move(sys)) {
    if (!sys_.is_circle())
        throw Error("weight: abstract-tree systems use WeightFn::stored");
    residual_ = validate_qmf(f, sys_);
    filter_ = std::move(f);
}

WeightFn WeightFn::stored(System sys) {
    if (sys.is_circle())
        throw Error("weight: circle systems derive W from a filter");
    WeightFn w;
    w.sys_ = std::move(sys);
    return w;
}

double WeightFn::operator()(const Point& x) const {
    if (filter_) return filter_->abs2(x) / sys_.branching();
    return sys_.stored_weight(x);
}

const Filter& WeightFn::filter() const {
    if (!filter_) throw Error("weight: stored-weight system has no filter");
    return *filter_;
}

// ---------------------------------------------------------------------------
// Transfer operator

TrigPoly transfer_apply(const Filter& f, const System& sys, const TrigPoly& g,
                        std::optional<int> max_degree) {
    validate_qmf(f, sys);
    const TrigPoly image = (f.abs2_poly() * g).decimate(sys.branching());
    if (max_degree) {
        const int need = std::max(std::abs(image.lo()), std::abs(image.hi()));
        if (need > *max_degree)
            throw TruncationError(
                "transfer: image needs degree " + std::to_string(need) +
                " beyond truncation " + std::to_string(*max_degree));
    }
    return image;
}

std::function<Complex(double)> transfer_apply_fn(
    const Filter& f, const System& sys, std::function<Complex(double)> g) {
    validate_qmf(f, sys);
    const int N = sys.branching();
    return [f, sys, g = std::move(g), N](double t) {
        Complex acc = 0.0;
        for (const Point& y : sys.preimages(Point::circle(t)))
            acc += f.abs2(y) * g(y.angle());
        return acc / static_cast<double>(N);
    };
}

std::vector<TrigPoly> rw_harmonic_solve(const Filter& f, const System& sys,
                                        int degree) {
    if (degree < 0) throw ConfigError("rw_harmonic_solve: degree must be >= 0");
    validate_qmf(f, sys);
    const int N = sys.branching();
    const int dim = 2 * degree + 1;
    const TrigPoly c = f.abs2_poly();

    // column j: R_W e_j has coefficient c_{Nq - j} at output frequency q
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(dim, dim);
    for (int j = -degree; j <= degree; ++j)
        for (int q = -degree; q <= degree; ++q)
            A(q + degree, j + degree) = c.coeff(N * q - j);

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(A);
    if (es.info() != Eigen::Success)
        throw Error("rw_harmonic_solve: eigen-decomposition failed");

    std::vector<int> fixed;
    for (int i = 0; i < dim; ++i)
        if (std::abs(es.eigenvalues()(i) - Complex(1.0, 0.0)) <= 1e-9)
            fixed.push_back(i);
    if (fixed.empty()) return {};

    Eigen::MatrixXcd V(dim, static_cast<int>(fixed.size()));
    for (std::size_t k = 0; k < fixed.size(); ++k)
        V.col(static_cast<int>(k)) = es.eigenvectors().col(fixed[k]);

    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(V);
    Eigen::MatrixXcd Q =
        qr.householderQ() * Eigen::MatrixXcd::Identity(dim, V.cols());

    std::vector<TrigPoly> basis;
    for (int k = 0; k < Q.cols(); ++k) {
        std::vector<Complex> coeffs(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i)
            coeffs[static_cast<std::size_t>(i)] = Q(i, k);
        basis.emplace_back(-degree, std::move(coeffs));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Lyapunov integral

namespace {

struct AdaptiveAcc {
    double integral = 0.0;
    double error = 0.0;
};

double gl8_log_abs2(const Filter& f, double a, double b, bool& hit_zero) {
    static constexpr double node[4] = {0.1834346424956498, 0.5255324099163290,
                                       0.7966664774136267, 0.9602898564975363};
    static constexpr double wgt[4] = {0.3626837833783620, 0.3137066458778873,
                                      0.2223810344533745, 0.1012285362903763};
    const double h = b - a, mid = 0.5 * (a + b);
    double acc = 0.0;
    for (int j = 0; j < 4; ++j) {
        const double dx = 0.5 * h * node[j];
        for (double t : {mid + dx, mid - dx}) {
            const double a2 = f.abs2(t);
            if (a2 < 1e-300) {
                hit_zero = true;
                return 0.0;
            }
            acc += 0.5 * wgt[j] * std::log(a2);
        }
    }
    return acc * h;
}

void lyap_panel(const Filter& f, double a, double b, double coarse, int depth,
                AdaptiveAcc& out) {
    constexpr double kWidthFloor = 1e-13;
    const double width = b - a;
    if (width < kWidthFloor) {
        // integrable log mass of the dropped sliver, bounded crudely
        out.error += width * (2.0 + std::fabs(std::log(width)) *
                                        (2.0 * std::max(1, f.degree() + 1)));
        return;
    }
    bool hit_zero = false;
    const double m = 0.5 * (a + b);
    const double left = gl8_log_abs2(f, a, m, hit_zero);
    const double right = gl8_log_abs2(f, m, b, hit_zero);
    const double fine = left + right;
    const double err = std::fabs(fine - coarse);
    if (!hit_zero && (err < 1e-9 * width || depth >= 48)) {
        out.integral += fine;
        out.error += err;
        return;
    }
    bool z2 = false;
    lyap_panel(f, a, m, gl8_log_abs2(f, a, m, z2), depth + 1, out);
    lyap_panel(f, m, b, gl8_log_abs2(f, m, b, z2), depth + 1, out);
}

}  // namespace

LyapunovResult lyapunov(const Filter& f, const System& sys) {
    if (!sys.is_circle())
        throw Error("lyapunov: abstract trees carry no global measure");
    AdaptiveAcc acc;
    const int base = 64;
    for (int p = 0; p < base; ++p) {
        const double a = static_cast<double>(p) / base;
        const double b = static_cast<double>(p + 1) / base;
        bool z = false;
        lyap_panel(f, a, b, gl8_log_abs2(f, a, b, z), 0, acc);
    }
    if (!(acc.error < 1e-4))
        throw Error("lyapunov: quadrature did not converge (error estimate " +
                    std::to_string(acc.error) + "); non-integrable input?");
    return {acc.integral, acc.error, acc.integral <= 1e-12};
}

// ---------------------------------------------------------------------------
// Cocycle

double cocycle_mod2(const Filter& f, const System& sys,
                    const PathPrefix& prefix, int n) {
    if (n == 0) return 1.0;
    if (n > 0) {
        Point x = prefix.root();
        double prod = 1.0;
        for (int k = 0; k < n; ++k) {
            const double a2 = f.abs2(x);
            if (a2 < kFilterZeroTol2)
                throw Error("cocycle undefined (filter zero on orbit at step " +
                            std::to_string(k) + ")");
            prod *= a2;
            if (k + 1 < n) x = sys.apply_r(x);
        }
        return prod;
    }
    const std::size_t back = static_cast<std::size_t>(-n);
    if (prefix.length() < back)
        throw TruncationError("cocycle: insufficient backward coordinates (need " +
                              std::to_string(back) + ", have " +
                              std::to_string(prefix.length()) + ")");
    double prod = 1.0;
    for (std::size_t j = 1; j <= back; ++j) {
        const double a2 = f.abs2(prefix.at(j));
        if (a2 < kFilterZeroTol2)
            throw Error("cocycle undefined (filter zero on orbit at coordinate " +
                        std::to_string(j) + ")");
        prod *= a2;
    }
    return 1.0 / prod;
}

}  // namespace solharm
