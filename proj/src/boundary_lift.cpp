#include "ncg/boundary_lift.hpp"

#include <algorithm>
#include <cmath>

namespace ncg {

BoundaryMap circle_rotation_map(double angle) {
    return {angle == 0.0 ? "identity" : "rotation:" + std::to_string(angle),
            [angle](const BoundaryPoint& b) {
                const double a = std::atan2(b.coords[1], b.coords[0]) + angle;
                return BoundaryPoint{Eigen::Vector2d(std::cos(a), std::sin(a)),
                                     "angle:" + std::to_string(a)};
            },
            1.0};
}

BoundaryMap circle_antipodal_map() {
    return {"antipodal",
            [](const BoundaryPoint& b) {
                return BoundaryPoint{-b.coords, "antipode"};
            },
            1.0};
}

BoundaryMap constant_boundary_map(BoundaryPoint target, std::string name) {
    return {std::move(name), [target](const BoundaryPoint&) { return target; }, 0.0};
}

BoundaryMap net_backed_map(std::vector<BoundaryPoint> net, std::vector<BoundaryPoint> values,
                           double modulus, std::string name) {
    if (net.size() != values.size() || net.empty())
        throw std::invalid_argument("net_backed_map: net/value size mismatch");
    auto n = std::make_shared<std::vector<BoundaryPoint>>(std::move(net));
    auto v = std::make_shared<std::vector<BoundaryPoint>>(std::move(values));
    return {std::move(name),
            [n, v](const BoundaryPoint& b) {
                std::size_t best = 0;
                double bd = model_distance(b.coords, (*n)[0].coords);
                for (std::size_t i = 1; i < n->size(); ++i) {
                    const double d = model_distance(b.coords, (*n)[i].coords);
                    if (d < bd) {
                        bd = d;
                        best = i;
                    }
                }
                return (*v)[best];
            },
            modulus};
}

WitnessTable boundary_witnesses(const CompactModel& MY, int levels, double net_seed) {
    WitnessTable table;
    table.model = &MY;
    table.net_seed = net_seed;
    const auto& Y = MY.interior();
    for (int n = 0; n <= levels; ++n) {
        const double eps = std::pow(2.0, -n);
        const double L_n = MY.radius_of_class(n);
        std::vector<WitnessEntry> row;
        for (const auto& b : MY.boundary_net(eps, net_seed)) {
            const long budget = 1L << (n + 6);
            std::optional<WitnessEntry> hit;
            for (long idx = 0; idx < budget; ++idx) {
                Point c = MY.witness_candidate(b, idx);
                if (Y.norm(c) <= L_n + 1e-12) continue;
                const double err = model_distance(MY.embed(c), b.coords);
                if (err < eps) {
                    hit = WitnessEntry{b, std::move(c), err};
                    break;
                }
            }
            if (!hit)
                throw DensityViolation("witness search budget exhausted at level " +
                                       std::to_string(n) + ", net point " + b.chart);
            row.push_back(std::move(*hit));
        }
        table.levels.push_back(std::move(row));
    }
    return table;
}

LiftResult::LiftResult(BoundaryMap phi, const CompactModel* MX, const CompactModel* MY,
                       WitnessTable witnesses, double window)
    : phi_(std::move(phi)), MX_(MX), MY_(MY), witnesses_(std::move(witnesses)), window_(window) {
    const int finest = static_cast<int>(witnesses_.levels.size()) - 1;
    finest_net_ = MX_->boundary_net(std::pow(2.0, -finest), witnesses_.net_seed);
}

AuditRow LiftResult::evaluate(const Point& x) const {
    AuditRow row;
    row.x = x;
    const int top = static_cast<int>(witnesses_.levels.size()) - 1;
    row.n = std::min(MX_->class_of(x), top);

    // delta(x): nearest finest-net boundary point (ties to the smallest index).
    const Eigen::Vector2d e = MX_->embed(x);
    std::size_t bi = 0;
    double bd = model_distance(e, finest_net_[0].coords);
    for (std::size_t i = 1; i < finest_net_.size(); ++i) {
        const double d = model_distance(e, finest_net_[i].coords);
        if (d < bd - 1e-15) {
            bd = d;
            bi = i;
        }
    }
    row.delta = finest_net_[bi];

    const BoundaryPoint target = phi_.map(row.delta);
    const auto& level = witnesses_.levels[static_cast<std::size_t>(row.n)];
    std::size_t wi = 0;
    double wd = model_distance(target.coords, level[0].net_point.coords);
    for (std::size_t i = 1; i < level.size(); ++i) {
        const double d = model_distance(target.coords, level[i].net_point.coords);
        if (d < wd - 1e-15) {
            wd = d;
            wi = i;
        }
    }
    row.net_index = wi;
    row.d_target_net = wd;
    row.d_witness_net = level[wi].model_error;
    row.value = level[wi].witness;
    return row;
}

PointMap LiftResult::as_point_map() const {
    auto self = *this;  // value copy; evaluation is pure
    return {"lift(" + phi_.name + ")",
            [self](const Point& x) { return self.evaluate(x).value; }, window_};
}

LiftResult lift_boundary_map(const BoundaryMap& phi, const CompactModel& MX,
                             const CompactModel& MY, WitnessTable witnesses, double window) {
    return LiftResult(phi, &MX, &MY, std::move(witnesses), window);
}

RaySpec dyadic_ray(const CompactModel& MX, const BoundaryPoint& b, int depth) {
    RaySpec ray;
    ray.name = "ray(" + b.chart + ")";
    ray.limit = b;
    long idx = 0;
    for (int k = 1; k <= depth; ++k) {
        const double target = std::pow(2.0, k);
        Point best;
        // advance the escape sequence until we pass radius 2^k
        for (; idx < (1L << 24); ++idx) {
            Point c = MX.witness_candidate(b, idx);
            if (MX.interior().norm(c) >= target) {
                best = std::move(c);
                break;
            }
        }
        if (best.empty() && MX.interior().key().rfind("tree", 0) == std::string::npos)
            throw std::runtime_error("dyadic_ray: escape sequence exhausted");
        ray.points.push_back(std::move(best));
    }
    return ray;
}

LiftVerification verify_lift(const LiftResult& L, const std::vector<RaySpec>& rays,
                             const std::vector<double>& coarse_radii, double tolerance) {
    LiftVerification out;
    out.profile.tolerance = tolerance;
    out.profile.label = "verify-lift(" + L.boundary_map().name + ")";
    std::size_t longest = 0;
    for (const auto& ray : rays) {
        DefectProfile p;
        p.tolerance = tolerance;
        p.label = out.profile.label + "/" + ray.name;
        const BoundaryPoint target = L.boundary_map().map(ray.limit);
        for (std::size_t k = 0; k < ray.points.size(); ++k) {
            const Point Fx = L(ray.points[k]);
            p.add(static_cast<double>(k),
                  model_distance(L.target().embed(Fx), target.coords));
        }
        longest = std::max(longest, ray.points.size());
        out.per_ray.push_back(std::move(p));
    }
    for (std::size_t k = 0; k < longest; ++k) {
        double worst = 0;
        bool any = false;
        for (const auto& p : out.per_ray)
            if (k < p.entries.size()) {
                any = true;
                worst = std::max(worst, p.entries[k].value);
            }
        if (any) out.profile.add(static_cast<double>(k), worst);
    }
    out.coarse = coarse_map_check(L.as_point_map(), L.source().interior(), L.target().interior(),
                                  coarse_radii, L.window());
    return out;
}

std::vector<DisplacementRow> lift_displacement(const LiftResult& L1, const LiftResult& L2,
                                               const std::vector<double>& radii) {
    std::vector<DisplacementRow> rows;
    if (radii.empty()) return rows;
    const auto& X = L1.source().interior();
    const auto& Y = L1.target().interior();
    const auto pts = X.base_ball(radii.back());
    std::vector<double> sup(radii.size(), 0.0);
    for (const auto& x : pts) {
        const double nx = X.norm(x);
        const double d = Y.distance(L1(x), L2(x));
        for (std::size_t i = 0; i < radii.size(); ++i)
            if (nx <= radii[i] + 1e-12) sup[i] = std::max(sup[i], d);
    }
    for (std::size_t i = 0; i < radii.size(); ++i)
        rows.push_back({radii[i], sup[i], sup[i] / radii[i]});
    return rows;
}

}  // namespace ncg
