#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "ncg/coarse_ops.hpp"
#include "ncg/defect_profile.hpp"
#include "ncg/entourage.hpp"
#include "ncg/space.hpp"

namespace ncg {

// A point of the boundary locus, given by its coordinates in the compact
// metric model plus chart metadata (angle, end word, ...).
struct BoundaryPoint {
    Eigen::Vector2d coords = Eigen::Vector2d::Zero();
    std::string chart;
};

inline double model_distance(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return (a - b).norm();
}

// A compactification realized inside a compact subset of R^2: the interior
// embeds injectively, the boundary is a metric model of the corona, and an
// exhaustion K_0 = {} <= K_1 <= ... captures escape to infinity.
class CompactModel {
public:
    virtual ~CompactModel() = default;

    virtual std::string key() const = 0;
    virtual const ProperMetricSpace& interior() const = 0;
    virtual int boundary_dim() const = 0;

    virtual Eigen::Vector2d embed(const Point& x) const = 0;

    // Dense deterministic candidate set on the boundary locus; `seed` rotates
    // the start so independent nets can be drawn.
    virtual std::vector<BoundaryPoint> boundary_candidates(double seed) const = 0;

    // K_n = ball(radius_of_class(n)); radius_of_class(0) < 0 encodes K_0 = {}.
    virtual double radius_of_class(int n) const {
        return n <= 0 ? -1.0 : std::pow(2.0, n);
    }

    // The unique n with x in K_{n+1} \ K_n.
    int class_of(const Point& x) const;

    // idx-th candidate of a deterministic interior sequence escaping toward b.
    virtual Point witness_candidate(const BoundaryPoint& b, long idx) const = 0;

    // Greedy farthest-point-insertion net with covering radius <= eps.
    std::vector<BoundaryPoint> boundary_net(double eps, double seed = 0.0) const;

    // Density at scale: near every net point at scale eps there is an interior
    // point beyond 1/eps. Throws on failure.
    void check_boundary_density(double eps, long budget = 1 << 16) const;
};

// Radial compactification of Z^n (n = 1, 2): x -> x/(1+|x|), boundary S^{n-1}.
class RadialLatticeModel final : public CompactModel {
public:
    explicit RadialLatticeModel(int dim);
    std::string key() const override { return dim_ == 1 ? "radial-Z1" : "radial-Z2"; }
    const ProperMetricSpace& interior() const override { return space_; }
    int boundary_dim() const override { return dim_ - 1; }
    Eigen::Vector2d embed(const Point& x) const override;
    std::vector<BoundaryPoint> boundary_candidates(double seed) const override;
    Point witness_candidate(const BoundaryPoint& b, long idx) const override;

private:
    int dim_;
    LatticeSpace space_;
};

// One-point compactification of Z: a single boundary point.
class OnePointZModel final : public CompactModel {
public:
    std::string key() const override { return "one-point-Z"; }
    const ProperMetricSpace& interior() const override { return space_; }
    int boundary_dim() const override { return 0; }
    Eigen::Vector2d embed(const Point& x) const override;
    std::vector<BoundaryPoint> boundary_candidates(double) const override;
    Point witness_candidate(const BoundaryPoint&, long idx) const override;

private:
    LatticeSpace space_{1};
};

// The cone over a point: N with its one-point compactification N^+.
class ConeNModel final : public CompactModel {
public:
    std::string key() const override { return "cone-N"; }
    const ProperMetricSpace& interior() const override { return space_; }
    int boundary_dim() const override { return 0; }
    Eigen::Vector2d embed(const Point& x) const override;
    std::vector<BoundaryPoint> boundary_candidates(double) const override;
    Point witness_candidate(const BoundaryPoint&, long idx) const override;

private:
    NatSpace space_;
};

// Rooted binary tree with its space of ends; ends sit on a Cantor set at
// height zero, vertices at height 2^-depth. The exhaustion is linear in
// depth so the finite tree reaches usable net levels.
class TreeEndsModel final : public CompactModel {
public:
    explicit TreeEndsModel(int depth) : space_(depth) {}
    std::string key() const override { return "binary-tree-" + std::to_string(space_.depth()); }
    const ProperMetricSpace& interior() const override { return space_; }
    int boundary_dim() const override { return 1; }
    Eigen::Vector2d embed(const Point& x) const override;
    std::vector<BoundaryPoint> boundary_candidates(double) const override;
    double radius_of_class(int n) const override { return n <= 0 ? -1.0 : n; }
    Point witness_candidate(const BoundaryPoint& b, long idx) const override;

    static double cantor_coord(const Point& word, bool center_gap);
    static BoundaryPoint end_point(const Point& word);

private:
    BinaryTreeSpace space_;
};

// For each escape radius r: sup of model distances over entourage pairs with
// |x| >= r. Decay means the entourage is controlled for the coarse structure
// induced by the compactification.
DefectProfile induced_controlled_test(const Entourage& E, const CompactModel& M,
                                      const std::vector<double>& escape_radii, double window,
                                      double tolerance = 1e-2);

// The controlled diagonal neighbourhood E = U_n {(x,y) in U_n x U_n :
// d_model(x, y) < 2^-n} for the cover U_n = K_{n + cover_offset}. Membership
// is exact; pair enumeration reports a metric slice of width `pair_cap`
// around each point.
class NeighborhoodEntourage final : public Entourage {
public:
    NeighborhoodEntourage(const CompactModel* M, int cover_offset = 0, double pair_cap = 8.0)
        : model_(M), cover_offset_(cover_offset), pair_cap_(pair_cap) {}
    std::string describe() const override { return "diag-neighborhood(" + model_->key() + ")"; }
    bool contains(const ProperMetricSpace& X, const Point& a, const Point& b) const override;
    std::vector<PointPair> pairs(const ProperMetricSpace& X, double window,
                                 std::size_t budget) const override;
    // Smallest n >= 0 with both points in U_n.
    int joint_class(const Point& a, const Point& b) const;

private:
    const CompactModel* model_;
    int cover_offset_;
    double pair_cap_;
};

std::shared_ptr<NeighborhoodEntourage> controlled_neighborhood(const CompactModel& M,
                                                               int cover_offset = 0,
                                                               double pair_cap = 8.0);

// For each epsilon: max over boundary net points b of the oscillation of f on
// {x : d_model(embed x, b) < eps, |x| >= 1/eps}. Decay at every boundary
// point is membership of f in the compactification algebra at scale.
DefectProfile higson_membership_profile(const SampledFunction& f, const CompactModel& M,
                                        const std::vector<double>& eps_schedule, double window,
                                        double tolerance = 1e-2);

struct CrossCheckRow {
    std::string entourage;
    bool metric_bounded = false;
    double metric_sup = 0;
    Verdict induced = Verdict::Inconclusive;
    double induced_final = 0;
    bool agree = false;  // metric-bounded implies induced-controlled
};

struct CrossCheckReport {
    std::vector<CrossCheckRow> rows;
    int disagreements = 0;
};

// Metric-vs-compactification agreement: every metric-bounded sample must pass
// the induced test (the compactification's coarse structure contains the
// metric one); metric-unbounded samples are reported with their profiles.
CrossCheckReport cross_check_metric_vs_compactification(
    const CompactModel& M,
    const std::vector<std::pair<std::string, std::shared_ptr<Entourage>>>& samples,
    const std::vector<double>& escape_radii, double window, double metric_bound_cap);

}  // namespace ncg
