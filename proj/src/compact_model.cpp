#include "ncg/compact_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ncg {

int CompactModel::class_of(const Point& x) const {
    const double r = interior().norm(x);
    int n = 0;
    while (r > radius_of_class(n + 1) + 1e-12) {
        ++n;
        if (n > 62) throw std::runtime_error("class_of: point beyond exhaustion");
    }
    return n;
}

std::vector<BoundaryPoint> CompactModel::boundary_net(double eps, double seed) const {
    const auto cand = boundary_candidates(seed);
    if (cand.empty()) throw std::runtime_error("boundary_net: no candidates");
    std::vector<BoundaryPoint> net{cand[0]};
    std::vector<double> dmin(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i)
        dmin[i] = model_distance(cand[i].coords, cand[0].coords);
    for (;;) {
        std::size_t far = 0;
        for (std::size_t i = 1; i < cand.size(); ++i)
            if (dmin[i] > dmin[far]) far = i;
        if (dmin[far] <= eps) break;
        net.push_back(cand[far]);
        for (std::size_t i = 0; i < cand.size(); ++i)
            dmin[i] = std::min(dmin[i], model_distance(cand[i].coords, cand[far].coords));
    }
    return net;
}

void CompactModel::check_boundary_density(double eps, long budget) const {
    for (const auto& b : boundary_net(eps)) {
        bool found = false;
        for (long idx = 0; idx < budget; ++idx) {
            Point c = witness_candidate(b, idx);
            if (c.empty() && interior().key().rfind("tree", 0) == std::string::npos) break;
            if (interior().norm(c) >= 1.0 / eps &&
                model_distance(embed(c), b.coords) < eps) {
                found = true;
                break;
            }
        }
        if (!found)
            throw std::runtime_error("boundary density violated at scale " + std::to_string(eps) +
                                     " near " + b.chart);
    }
}

RadialLatticeModel::RadialLatticeModel(int dim) : dim_(dim), space_(dim) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("RadialLatticeModel: dim must be 1 or 2");
}

Eigen::Vector2d RadialLatticeModel::embed(const Point& x) const {
    const double r = space_.norm(x);
    Eigen::Vector2d v = Eigen::Vector2d::Zero();
    v[0] = static_cast<double>(x[0]) / (1.0 + r);
    if (dim_ == 2) v[1] = static_cast<double>(x[1]) / (1.0 + r);
    return v;
}

std::vector<BoundaryPoint> RadialLatticeModel::boundary_candidates(double seed) const {
    std::vector<BoundaryPoint> out;
    if (dim_ == 1) {
        out.push_back({Eigen::Vector2d(1, 0), "dir:+1"});
        out.push_back({Eigen::Vector2d(-1, 0), "dir:-1"});
        return out;
    }
    const int n = 4096;
    out.reserve(n);
    for (int j = 0; j < n; ++j) {
        const double a = seed + 2.0 * M_PI * j / n;
        out.push_back({Eigen::Vector2d(std::cos(a), std::sin(a)), "angle:" + std::to_string(a)});
    }
    return out;
}

Point RadialLatticeModel::witness_candidate(const BoundaryPoint& b, long idx) const {
    if (dim_ == 1) {
        const std::int64_t sgn = b.coords[0] >= 0 ? 1 : -1;
        return {sgn * (idx + 1)};
    }
    // Walk outward along the ray, probing the 3x3 lattice neighbourhood of
    // each rounded ray point.
    const long ring = idx / 9;
    const long off = idx % 9;
    const double R = 1.0 + static_cast<double>(ring);
    const auto bx = static_cast<std::int64_t>(std::llround(R * b.coords[0]));
    const auto by = static_cast<std::int64_t>(std::llround(R * b.coords[1]));
    static const std::int64_t dx[9] = {0, -1, 1, 0, 0, -1, -1, 1, 1};
    static const std::int64_t dy[9] = {0, 0, 0, -1, 1, -1, 1, -1, 1};
    return {bx + dx[off], by + dy[off]};
}

Eigen::Vector2d OnePointZModel::embed(const Point& x) const {
    const auto v = static_cast<double>(x[0]);
    const double r = std::abs(v);
    return {0.5 / (1.0 + r), 0.5 * v / (1.0 + v * v)};
}

std::vector<BoundaryPoint> OnePointZModel::boundary_candidates(double) const {
    return {{Eigen::Vector2d(0, 0), "infty"}};
}

Point OnePointZModel::witness_candidate(const BoundaryPoint&, long idx) const {
    // Alternate between the two escape directions.
    const long k = idx / 2 + 1;
    return {idx % 2 == 0 ? k : -k};
}

Eigen::Vector2d ConeNModel::embed(const Point& x) const {
    return {1.0 / (1.0 + static_cast<double>(x[0])), 0.0};
}

std::vector<BoundaryPoint> ConeNModel::boundary_candidates(double) const {
    return {{Eigen::Vector2d(0, 0), "infty"}};
}

Point ConeNModel::witness_candidate(const BoundaryPoint&, long idx) const { return {idx + 1}; }

double TreeEndsModel::cantor_coord(const Point& word, bool center_gap) {
    double c = 0, scale = 1.0;
    for (auto bit : word) {
        scale /= 3.0;
        c += 2.0 * scale * static_cast<double>(bit);
    }
    if (center_gap) c += scale / 3.0 * 1.5;  // centre of the remaining gap
    return c;
}

BoundaryPoint TreeEndsModel::end_point(const Point& word) {
    std::string chart = "end:";
    for (auto b : word) chart += (b ? '1' : '0');
    return {Eigen::Vector2d(cantor_coord(word, false), 0.0), chart};
}

Eigen::Vector2d TreeEndsModel::embed(const Point& x) const {
    return {cantor_coord(x, true), std::pow(2.0, -static_cast<double>(x.size()))};
}

std::vector<BoundaryPoint> TreeEndsModel::boundary_candidates(double) const {
    std::vector<BoundaryPoint> out;
    const int d = space_.depth();
    for (std::int64_t mask = 0; mask < (1LL << d); ++mask) {
        Point w(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) w[static_cast<std::size_t>(i)] = (mask >> (d - 1 - i)) & 1;
        out.push_back(end_point(w));
    }
    return out;
}

Point TreeEndsModel::witness_candidate(const BoundaryPoint& b, long idx) const {
    // The vertex chain along the end: prefixes of its word.
    const std::string& chart = b.chart;
    const auto word = chart.substr(chart.find(':') + 1);
    const long depth = std::min<long>(idx + 1, static_cast<long>(word.size()));
    Point w;
    for (long i = 0; i < depth; ++i) w.push_back(word[static_cast<std::size_t>(i)] == '1' ? 1 : 0);
    return w;
}

DefectProfile induced_controlled_test(const Entourage& E, const CompactModel& M,
                                      const std::vector<double>& escape_radii, double window,
                                      double tolerance) {
    DefectProfile profile;
    profile.tolerance = tolerance;
    profile.label = "induced-controlled(" + E.describe() + "," + M.key() + ")";
    const auto& X = M.interior();
    const auto prs = E.pairs(X, window);
    std::vector<double> norms;
    std::vector<double> dists;
    norms.reserve(prs.size());
    dists.reserve(prs.size());
    for (const auto& p : prs) {
        norms.push_back(X.norm(p.first));
        dists.push_back(model_distance(M.embed(p.first), M.embed(p.second)));
    }
    for (double r : escape_radii) {
        double sup = 0;
        bool any = false;
        for (std::size_t i = 0; i < prs.size(); ++i)
            if (norms[i] >= r) {
                any = true;
                sup = std::max(sup, dists[i]);
            }
        if (any)
            profile.add(r, sup);
        else
            profile.add_skipped(r, "empty annulus");
    }
    return profile;
}

int NeighborhoodEntourage::joint_class(const Point& a, const Point& b) const {
    const auto& X = model_->interior();
    const double r = std::max(X.norm(a), X.norm(b));
    int n = 0;
    while (r > model_->radius_of_class(n + cover_offset_) + 1e-12) {
        ++n;
        if (n > 62) throw std::runtime_error("joint_class: beyond exhaustion");
    }
    return n;
}

bool NeighborhoodEntourage::contains(const ProperMetricSpace&, const Point& a,
                                     const Point& b) const {
    const int n0 = joint_class(a, b);
    return model_distance(model_->embed(a), model_->embed(b)) < std::pow(2.0, -n0);
}

std::vector<PointPair> NeighborhoodEntourage::pairs(const ProperMetricSpace& X, double window,
                                                    std::size_t budget) const {
    std::vector<PointPair> out;
    for (const auto& x : X.base_ball(window))
        for (const auto& y : X.ball(x, pair_cap_)) {
            if (X.norm(y) > window + 1e-12) continue;
            if (!contains(X, x, y)) continue;
            if (out.size() >= budget) throw std::runtime_error("neighborhood pair budget exceeded");
            out.push_back({x, y});
        }
    return out;
}

std::shared_ptr<NeighborhoodEntourage> controlled_neighborhood(const CompactModel& M,
                                                               int cover_offset, double pair_cap) {
    return std::make_shared<NeighborhoodEntourage>(&M, cover_offset, pair_cap);
}

DefectProfile higson_membership_profile(const SampledFunction& f, const CompactModel& M,
                                        const std::vector<double>& eps_schedule, double window,
                                        double tolerance) {
    DefectProfile profile;
    profile.tolerance = tolerance;
    profile.label = "higson(" + f.name + "," + M.key() + ")";
    const auto& X = M.interior();
    const auto pts = X.base_ball(window);
    std::vector<Eigen::Vector2d> emb(pts.size());
    std::vector<double> norms(pts.size());
    std::vector<std::complex<double>> vals(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        emb[i] = M.embed(pts[i]);
        norms[i] = X.norm(pts[i]);
        vals[i] = f.values(pts[i]);
    }
    for (double eps : eps_schedule) {
        double worst = 0;
        bool any = false;
        for (const auto& b : M.boundary_net(eps)) {
            double lo_re = 0, hi_re = 0, lo_im = 0, hi_im = 0;
            bool first = true;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                if (norms[i] < 1.0 / eps) continue;
                if (model_distance(emb[i], b.coords) >= eps) continue;
                const double re = vals[i].real(), im = vals[i].imag();
                if (first) {
                    lo_re = hi_re = re;
                    lo_im = hi_im = im;
                    first = false;
                } else {
                    lo_re = std::min(lo_re, re);
                    hi_re = std::max(hi_re, re);
                    lo_im = std::min(lo_im, im);
                    hi_im = std::max(hi_im, im);
                }
            }
            if (!first) {
                any = true;
                worst = std::max(worst, std::hypot(hi_re - lo_re, hi_im - lo_im));
            }
        }
        if (any)
            profile.add(eps, worst);
        else
            profile.add_skipped(eps, "no interior points at scale");
    }
    return profile;
}

CrossCheckReport cross_check_metric_vs_compactification(
    const CompactModel& M,
    const std::vector<std::pair<std::string, std::shared_ptr<Entourage>>>& samples,
    const std::vector<double>& escape_radii, double window, double metric_bound_cap) {
    CrossCheckReport rep;
    for (const auto& [name, E] : samples) {
        CrossCheckRow row;
        row.entourage = name;
        const auto ctl = is_controlled(*E, M.interior(), window, metric_bound_cap);
        row.metric_bounded = ctl.controlled;
        row.metric_sup = ctl.sup_distance;
        auto prof = induced_controlled_test(*E, M, escape_radii, window);
        row.induced = prof.decay_verdict();
        row.induced_final = prof.final_value();
        // The compactification coarse structure contains the metric one, so a
        // metric-bounded entourage failing the induced test is a disagreement.
        row.agree = !(row.metric_bounded && row.induced == Verdict::Fail);
        if (!row.agree) ++rep.disagreements;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace ncg
