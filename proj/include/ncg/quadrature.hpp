#pragma once

#include <stdexcept>
#include <vector>

namespace ncg {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Generalized Gauss-Laguerre rule for int_0^inf f(t) t^alpha e^-t dt with
// weights stored in log form. Node positions go up to ~4n, where the plain
// weights underflow double precision long before the weighted integrands
// become negligible; keeping log weights and assembling every integral as
// sum exp(log w + log |integrand|) stays finite at any order.
class GaussLaguerreRule {
public:
    static GaussLaguerreRule build(int n, double alpha);

    int size() const { return static_cast<int>(nodes_.size()); }
    double alpha() const { return alpha_; }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& log_weights() const { return log_weights_; }
    const std::vector<double>& log_nodes() const { return log_nodes_; }

    // log of int t^power t^alpha e^-t dt computed by the rule (power >= 0).
    double log_moment(double power) const;

    // Largest relative error of the rule's monomial moments against the
    // Gamma recurrence, for powers 0..max_power.
    double validate_moments(int max_power) const;

private:
    double alpha_ = 0;
    std::vector<double> nodes_;
    std::vector<double> log_weights_;
    std::vector<double> log_nodes_;
};

}  // namespace ncg
