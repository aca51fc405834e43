#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncg/coarse_ops.hpp"
#include "ncg/compact_model.hpp"
#include "ncg/defect_profile.hpp"

namespace ncg {

struct DensityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A continuous map between boundary models, with a declared modulus of
// continuity (Lipschitz constant in the model metric).
struct BoundaryMap {
    std::string name;
    std::function<BoundaryPoint(const BoundaryPoint&)> map;
    double modulus = 1.0;
};

BoundaryMap circle_rotation_map(double angle);       // identity at angle 0
BoundaryMap circle_antipodal_map();
BoundaryMap constant_boundary_map(BoundaryPoint target, std::string name);
// phi known only on a net: nearest-net evaluation, declared modulus bounds
// the extra error.
BoundaryMap net_backed_map(std::vector<BoundaryPoint> net, std::vector<BoundaryPoint> values,
                           double modulus, std::string name);

struct WitnessEntry {
    BoundaryPoint net_point;   // y_{n,i}
    Point witness;             // y'_{n,i} in Y \ L_n within 2^-n of the net point
    double model_error;        // d_model(embed(witness), net_point)
};

struct WitnessTable {
    const CompactModel* model = nullptr;
    std::vector<std::vector<WitnessEntry>> levels;  // [n][i], n = 0..N
    double net_seed = 0;
};

// For each level n <= N: a 2^-n net of the boundary and, per net point, an
// interior witness outside L_n within 2^-n in the model. The search walks the
// model's escape sequence with budget 2^(n+6) candidates per net point.
WitnessTable boundary_witnesses(const CompactModel& MY, int levels, double net_seed = 0.0);

struct AuditRow {
    Point x;
    int n = 0;                 // x in K_{n+1} \ K_n
    BoundaryPoint delta;       // nearest finest-net boundary point to x
    std::size_t net_index = 0; // chosen i at level n
    double d_target_net = 0;   // d(phi(delta x), y_{n,i}) < 2^-n
    double d_witness_net = 0;  // d(embed y'_{n,i}, y_{n,i}) < 2^-n
    Point value;               // F(x) = y'_{n,i}
};

class LiftResult {
public:
    LiftResult(BoundaryMap phi, const CompactModel* MX, const CompactModel* MY,
               WitnessTable witnesses, double window);

    // Pure evaluation; the audit row alone reproduces the value.
    AuditRow evaluate(const Point& x) const;
    Point operator()(const Point& x) const { return evaluate(x).value; }

    PointMap as_point_map() const;
    const WitnessTable& witnesses() const { return witnesses_; }
    const std::vector<BoundaryPoint>& finest_net() const { return finest_net_; }
    double window() const { return window_; }
    const BoundaryMap& boundary_map() const { return phi_; }
    const CompactModel& source() const { return *MX_; }
    const CompactModel& target() const { return *MY_; }

private:
    BoundaryMap phi_;
    const CompactModel* MX_;
    const CompactModel* MY_;
    WitnessTable witnesses_;
    std::vector<BoundaryPoint> finest_net_;  // net of the source boundary
    double window_;
};

LiftResult lift_boundary_map(const BoundaryMap& phi, const CompactModel& MX,
                             const CompactModel& MY, WitnessTable witnesses, double window);

struct RaySpec {
    std::string name;
    BoundaryPoint limit;         // limit in the source boundary model
    std::vector<Point> points;   // interior sequence converging to it
};

// Canonical ray toward b with |x_k| ~ 2^k.
RaySpec dyadic_ray(const CompactModel& MX, const BoundaryPoint& b, int depth);

struct LiftVerification {
    DefectProfile profile;          // max over rays, indexed by ray position
    std::vector<DefectProfile> per_ray;
    CoarseMapReport coarse;
};

// Along each ray: d_model(embed F(x_k), phi(limit)); plus the coarse-map
// check of F on the lift window.
LiftVerification verify_lift(const LiftResult& L, const std::vector<RaySpec>& rays,
                             const std::vector<double>& coarse_radii, double tolerance = 0.1);

struct DisplacementRow {
    double radius;
    double sup_displacement;   // sup over |x| <= radius of d(F1 x, F2 x)
    double ratio;              // sup / radius
};

// Sublinearity scan for two lifts of the same boundary map (and the
// counterexample search mode for lifts of different maps).
std::vector<DisplacementRow> lift_displacement(const LiftResult& L1, const LiftResult& L2,
                                               const std::vector<double>& radii);

}  // namespace ncg
