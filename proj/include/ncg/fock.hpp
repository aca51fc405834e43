#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ncg/defect_profile.hpp"
#include "ncg/quadrature.hpp"

namespace ncg {

using Complex = std::complex<double>;

// Truncated Fock space on modes |0>..|n_max> with validated quadrature for
// symbol compression. The radial rules integrate t^p t^alpha e^-t exactly
// for every power appearing in entries up to n_max; the uniform angular grid
// annihilates e^{il theta} exactly for 0 < |l| < n_angular.
class FockTruncation {
public:
    static FockTruncation build(int n_max);

    int n_max() const { return n_max_; }
    int n_angular() const { return n_angular_; }
    const GaussLaguerreRule& radial_whole() const { return rad0_; }
    const GaussLaguerreRule& radial_half() const { return rad_half_; }
    double validation_error() const { return validation_error_; }

private:
    int n_max_ = 0;
    int n_angular_ = 0;
    GaussLaguerreRule rad0_, rad_half_;
    double validation_error_ = 0;
};

struct TruncatedOperator {
    Eigen::MatrixXcd mat;
    int n_max = 0;

    int dim() const { return n_max + 1; }
    TruncatedOperator adjoint() const { return {mat.adjoint(), n_max}; }
};

// Bounded symbol on the plane with a class tag driving the compression rule.
class Symbol {
public:
    enum class Class { Radial, Angular, PlaneWave, Generic };

    static Symbol radial(std::string name, std::function<Complex(double)> g, double sup_bound);
    static Symbol angular(int l, std::string name, std::function<Complex(double)> g,
                          double sup_bound);
    static Symbol plane_wave(Complex xi);
    static Symbol generic(std::string name, std::function<Complex(Complex)> f, double sup_bound);

    Class cls() const { return cls_; }
    int winding() const { return l_; }
    const std::string& name() const { return name_; }
    double sup_bound() const { return sup_bound_; }
    Complex radial_profile(double r) const { return g_(r); }
    Complex operator()(Complex z) const { return eval_(z); }

    // Pointwise product, staying in the exact classes when possible.
    friend Symbol operator*(const Symbol& a, const Symbol& b);

private:
    Class cls_ = Class::Generic;
    int l_ = 0;
    std::string name_;
    double sup_bound_ = 1;
    std::function<Complex(double)> g_;        // radial profile (Radial/Angular)
    std::function<Complex(Complex)> eval_;    // pointwise evaluator (all classes)
};

// Smooth ramp used to cut the e^{il theta} singularity out of the origin:
// 0 at r = 0, 1 for r >= 1.
double smooth_cutoff(double r);

// Components e^{-|z|^2/2} z^n / sqrt(n!), n <= n_max.
Eigen::VectorXcd coherent_vector(Complex z, int n_max);

// Compression of multiplication by h to the truncated holomorphic subspace:
// T[m][k] = (1/pi) int h(z) conj(e_m)(z) e_k(z) e^{-|z|^2} d^2 z with
// e_k(z) = z^k/sqrt(k!). For h = e^{i theta} this is the weighted lower
// shift with weight(k) = Gamma(k+3/2)/sqrt(k!(k+1)!).
TruncatedOperator toeplitz(const Symbol& h, const FockTruncation& T);

struct BerezinValue {
    Complex value{0, 0};
    bool trusted = true;  // |z| within sqrt(n_max)/2
};

// Normalized coherent matrix coefficient of A at z (the dequantizer); for
// A = toeplitz(h) this is the Gaussian smoothing of h on the trust disk.
BerezinValue berezin(const TruncatedOperator& A, Complex z);

// exp(z a^dag - conj(z) a) truncated; unitary by construction.
TruncatedOperator displacement(Complex z, int n_max);

// Largest retained mode index for defect measurements after conjugating by
// displacement(z): rows/columns beyond it are truncation artifacts.
int displacement_trust_limit(int n_max, double abs_z);

// Spectral norm. Dense Hermitian eigensolve of A^H A; exact max for
// numerically diagonal input.
double operator_norm(const Eigen::MatrixXcd& A);

// ||Q_n A Q_n|| per cutoff, Q_n the projection onto modes > n.
DefectProfile compact_tail_profile(const TruncatedOperator& A, const std::vector<int>& cutoffs,
                                   double tolerance = 1e-2);

// Tail profile of D(z) A D(z)^dag - A, measured on the displacement-trusted
// block; cutoffs at or beyond the trust limit are flagged, not reported.
DefectProfile translation_defect(const TruncatedOperator& A, Complex z,
                                 const std::vector<int>& cutoffs, double tolerance = 1e-2);

// Tail profile of toeplitz(g) toeplitz(h) - toeplitz(gh).
DefectProfile corona_product_defect(const Symbol& g, const Symbol& h, const FockTruncation& T,
                                    const std::vector<int>& cutoffs, double tolerance = 1e-2);

// sup over |z| = r of |berezin(toeplitz(h))(z) - h(z)| for each trust radius.
DefectProfile roundtrip_defect(const Symbol& h, const FockTruncation& T,
                               const std::vector<double>& radii, int angular_samples = 64,
                               double tolerance = 0.15);

}  // namespace ncg
