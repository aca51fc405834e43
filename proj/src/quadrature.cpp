#include "ncg/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace ncg {

namespace {

// Value with a separate binary exponent, for recurrences whose magnitudes
// overflow double.
struct Scaled {
    double f = 0;   // mantissa
    long e = 0;     // value = f * 2^e

    void normalize() {
        if (f == 0) {
            e = 0;
            return;
        }
        int k;
        f = std::frexp(f, &k);
        e += k;
    }
    double log_abs() const { return std::log(std::abs(f)) + static_cast<double>(e) * M_LN2; }
};

// Orthonormal Laguerre values p_0..p_{n-1} at t and p_n, p_n' for Newton.
struct RecurrenceOut {
    Scaled pn, dpn;
    double log_sum_sq;  // log sum_{k<n} p_k(t)^2
};

RecurrenceOut orthonormal_laguerre(int n, double alpha, double t) {
    auto a = [alpha](int k) { return 2.0 * k + alpha + 1.0; };
    auto b = [alpha](int k) { return std::sqrt((k + 1.0) * (k + 1.0 + alpha)); };

    Scaled pm1{0, 0}, p0{1.0 / std::sqrt(std::tgamma(alpha + 1.0)), 0};
    Scaled dm1{0, 0}, d0{0, 0};
    p0.normalize();

    // running sum of squares, scaled
    Scaled ssq{p0.f * p0.f, 2 * p0.e};
    ssq.normalize();

    for (int k = 0; k < n; ++k) {
        // align exponents of p_{k-1} to p_k before combining
        const long shift = pm1.e - p0.e;
        const double pm1f = (pm1.f == 0) ? 0.0 : std::ldexp(pm1.f, static_cast<int>(shift));
        const double dm1f = (dm1.f == 0) ? 0.0 : std::ldexp(dm1.f, static_cast<int>(dm1.e - d0.e));

        Scaled pnext{((t - a(k)) * p0.f - (k > 0 ? b(k - 1) * pm1f : 0.0)) / b(k), p0.e};
        Scaled dnext{(p0.f * std::ldexp(1.0, static_cast<int>(p0.e - d0.e)) + (t - a(k)) * d0.f -
                      (k > 0 ? b(k - 1) * dm1f : 0.0)) /
                         b(k),
                     d0.e};
        pnext.normalize();
        dnext.normalize();
        pm1 = p0;
        p0 = pnext;
        dm1 = d0;
        d0 = dnext;

        if (k + 1 < n) {
            // accumulate p_{k+1}^2 into ssq
            Scaled sq{p0.f * p0.f, 2 * p0.e};
            sq.normalize();
            if (sq.f != 0) {
                if (sq.e > ssq.e) {
                    ssq.f = std::ldexp(ssq.f, static_cast<int>(ssq.e - sq.e)) + sq.f;
                    ssq.e = sq.e;
                } else {
                    ssq.f += std::ldexp(sq.f, static_cast<int>(sq.e - ssq.e));
                }
                ssq.normalize();
            }
        }
    }
    return {p0, d0, ssq.log_abs()};
}

}  // namespace

GaussLaguerreRule GaussLaguerreRule::build(int n, double alpha) {
    if (n < 2) throw QuadratureError("GaussLaguerreRule: need at least 2 nodes");
    GaussLaguerreRule rule;
    rule.alpha_ = alpha;

    Eigen::VectorXd diag(n), sub(n - 1);
    for (int k = 0; k < n; ++k) diag[k] = 2.0 * k + alpha + 1.0;
    for (int k = 0; k + 1 < n; ++k) sub[k] = std::sqrt((k + 1.0) * (k + 1.0 + alpha));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw QuadratureError("GaussLaguerreRule: tridiagonal eigensolve failed");

    rule.nodes_.resize(static_cast<std::size_t>(n));
    rule.log_weights_.resize(static_cast<std::size_t>(n));
    rule.log_nodes_.resize(static_cast<std::size_t>(n));

    for (int i = 0; i < n; ++i) {
        double t = es.eigenvalues()[i];
        // Newton polish on the degree-n orthonormal polynomial.
        for (int it = 0; it < 3; ++it) {
            const auto rec = orthonormal_laguerre(n, alpha, t);
            if (rec.dpn.f == 0) break;
            const double step =
                -(rec.pn.f / rec.dpn.f) * std::ldexp(1.0, static_cast<int>(rec.pn.e - rec.dpn.e));
            if (!std::isfinite(step) || std::abs(step) > 1.0) break;
            t += step;
        }
        const auto rec = orthonormal_laguerre(n, alpha, t);
        rule.nodes_[static_cast<std::size_t>(i)] = t;
        rule.log_nodes_[static_cast<std::size_t>(i)] = std::log(t);
        // Christoffel: w_i = 1 / sum_{k<n} p_k(t_i)^2 (orthonormal basis).
        rule.log_weights_[static_cast<std::size_t>(i)] = -rec.log_sum_sq;
    }
    return rule;
}

double GaussLaguerreRule::log_moment(double power) const {
    double m = -std::numeric_limits<double>::infinity();
    const std::size_t n = nodes_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double lg = log_weights_[i] + power * log_nodes_[i];
        if (lg > m) m = lg;
    }
    if (!std::isfinite(m)) return m;
    double acc = 0;
    for (std::size_t i = 0; i < n; ++i)
        acc += std::exp(log_weights_[i] + power * log_nodes_[i] - m);
    return m + std::log(acc);
}

double GaussLaguerreRule::validate_moments(int max_power) const {
    double worst = 0;
    // moments against lgamma: int t^(p+alpha) e^-t = Gamma(p+alpha+1)
    for (int p = 0; p <= max_power; ++p) {
        const double lhs = log_moment(static_cast<double>(p));
        const double rhs = std::lgamma(static_cast<double>(p) + alpha_ + 1.0);
        worst = std::max(worst, std::abs(std::expm1(lhs - rhs)));
    }
    return worst;
}

}  // namespace ncg
