#ifndef SOLHARM_FILTER_HPP
#define SOLHARM_FILTER_HPP

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "solharm/path_prefix.hpp"
#include "solharm/system.hpp"

namespace solharm {

using Complex = std::complex<double>;

// Trigonometric polynomial sum_{k=lo..hi} c_k e^{2 pi i k t} with a signed
// frequency range. Filters themselves use only k >= 0, but |m0|^2 and
// transfer-operator images need negative frequencies.
class TrigPoly {
public:
    TrigPoly() : lo_(0), coeffs_{} {}
    TrigPoly(int lo, std::vector<Complex> coeffs);
    static TrigPoly constant(Complex c) { return TrigPoly(0, {c}); }

    bool zero() const { return coeffs_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return zero() ? 0 : lo_ + static_cast<int>(coeffs_.size()) - 1; }
    Complex coeff(int freq) const;
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    Complex eval(double t) const;

    // coefficients of conj(p(t)) as a trig polynomial
    TrigPoly conj_mirror() const;

    // keep frequencies divisible by N and divide them by N; this is the
    // coefficient action of averaging over the N preimage branches
    TrigPoly decimate(int N) const;

    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
    friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b);
    TrigPoly& operator*=(Complex s);

    double max_abs_on_grid(int n) const;

private:
    void trim();
    int lo_;
    std::vector<Complex> coeffs_;  // coeffs_[i] is the coefficient of lo_+i
};

// QMF filter candidate m0(t) = sum_k h_k e^{2 pi i k t}. Whether it actually
// satisfies the QMF identity depends on the branching N of the system it is
// paired with; see qmf_residual and WeightFn.
class Filter {
public:
    explicit Filter(std::vector<Complex> coeffs, std::string name = "custom");

    static Filter haar();      // (1/sqrt2, 1/sqrt2)
    static Filter constant();  // m0 == 1
    static Filter d4();        // Daubechies-4 scaling coefficients
    static Filter by_name(const std::string& name);

    Complex eval(double t) const { return poly_.eval(t); }
    double abs2(double t) const { return std::norm(eval(t)); }
    Complex eval(const Point& x) const { return eval(x.angle()); }
    double abs2(const Point& x) const { return abs2(x.angle()); }

    const TrigPoly& poly() const { return poly_; }
    TrigPoly abs2_poly() const { return poly_ * poly_.conj_mirror(); }
    const std::string& name() const { return name_; }
    int degree() const { return poly_.hi(); }

private:
    TrigPoly poly_;
    std::string name_;
};

// max over an x-grid of |(1/N) sum_{r(y)=x} |m0(y)|^2 - 1|
double qmf_residual(const Filter& f, const System& sys, int grid_size);

inline constexpr double kQmfTol = 1e-9;
inline constexpr int kQmfGrid = 4096;

// The transition weight W(x) = |m0(x)|^2 / #r^{-1}(r(x)). Construction
// validates the QMF identity (residual <= 1e-9 on a 4096 grid) and refuses
// the pairing otherwise; abstract-tree systems use their stored weights.
class WeightFn {
public:
    WeightFn(Filter f, System sys);
    static WeightFn stored(System sys);

    double operator()(const Point& x) const;
    double qmf_residual() const { return residual_; }
    bool degenerate() const { return sys_.degenerate(); }

    const Filter& filter() const;
    const System& system() const { return sys_; }

private:
    WeightFn() = default;
    std::optional<Filter> filter_;
    System sys_ = System::circle(2);
    double residual_ = 0.0;
};

// R_W g(x) = sum_{r(y)=x} W(y) g(y), exact on trig-polynomial coefficients.
// If max_degree is given and the image needs a larger range, throws naming
// the required truncation.
TrigPoly transfer_apply(const Filter& f, const System& sys, const TrigPoly& g,
                        std::optional<int> max_degree = std::nullopt);

// grid-mode transfer: pointwise preimage sum of an arbitrary function
std::function<Complex(double)> transfer_apply_fn(
    const Filter& f, const System& sys, std::function<Complex(double)> g);

// Basis of the eigenvalue-1 eigenspace of R_W acting on trig polynomials
// with frequencies in [-D, D]. Dense eigen-decomposition, eigenvalue
// tolerance 1e-9, returned basis orthonormal.
std::vector<TrigPoly> rw_harmonic_solve(const Filter& f, const System& sys,
                                        int degree);

struct LyapunovResult {
    double a;          // integral of log|m0|^2 dmu
    double error;      // adaptive-refinement error estimate
    bool jensen_ok;    // a <= tolerance (Jensen bound)
};

// a = integral of log|m0|^2 over Haar measure. Adaptive Gauss-Legendre;
// the integrable log singularities at filter zeros are handled by panel
// subdivision (nodes are interior, so a zero is never evaluated unless the
// panel has shrunk to the width floor, whose contribution is dropped).
LyapunovResult lyapunov(const Filter& f, const System& sys);

// Squared cocycle modulus |m~_n(z)|^2 for a solenoid point represented by a
// backward prefix: product of |m0|^2 along the forward orbit of the root for
// n >= 1, reciprocal product along the prefix for n <= -1, 1 for n = 0.
// Throws if the prefix is too short for n <= -1 or a factor sits on a
// filter zero (|m0|^2 < 1e-28).
double cocycle_mod2(const Filter& f, const System& sys,
                    const PathPrefix& prefix, int n);

inline constexpr double kFilterZeroTol2 = 1e-28;  // |m0|^2 threshold

}  // namespace solharm

#endif
