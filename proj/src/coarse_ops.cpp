#include "ncg/coarse_ops.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace ncg {

CoarseMapReport coarse_map_check(const PointMap& F, const ProperMetricSpace& X,
                                 const ProperMetricSpace& Y, const std::vector<double>& radii,
                                 double window) {
    CoarseMapReport rep;
    const auto domain = X.base_ball(window);  // graded-lex sorted
    std::vector<Point> images;
    images.reserve(domain.size());
    for (const auto& x : domain) images.push_back(F.map(x));
    auto image_of = [&](const Point& y) -> const Point& {
        auto it = std::lower_bound(domain.begin(), domain.end(), y, point_less);
        return images[static_cast<std::size_t>(it - domain.begin())];
    };

    // Expansion profile. Pairs are scanned per point against a local ball;
    // images are looked up, not recomputed.
    for (double R : radii) {
        double S = 0;
        for (std::size_t i = 0; i < domain.size(); ++i)
            for (const auto& y : X.ball(domain[i], R)) {
                if (X.norm(y) > window + 1e-12) continue;
                S = std::max(S, Y.distance(images[i], image_of(y)));
            }
        rep.expansion.push_back({R, S});
    }

    // Properness: sample target balls around images of points spread through
    // the window and measure the diameter of their preimages.
    PropernessReport& pr = rep.properness;
    const double target_radius = radii.empty() ? 1.0 : radii.back();
    std::vector<std::size_t> sample_idx;
    for (std::size_t i = 0; i < domain.size(); i += std::max<std::size_t>(1, domain.size() / 12))
        sample_idx.push_back(i);
    for (std::size_t si : sample_idx) {
        const Point& y0 = images[si];
        double lo = std::nan(""), hi = 0;  // spread of |x| over the preimage
        double diam = 0;
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < domain.size(); ++i)
            if (Y.distance(images[i], y0) <= target_radius + 1e-12) members.push_back(i);
        for (std::size_t a = 0; a < members.size(); ++a) {
            const double na = X.norm(domain[members[a]]);
            lo = std::isnan(lo) ? na : std::min(lo, na);
            hi = std::max(hi, na);
        }
        diam = std::isnan(lo) ? 0 : hi - lo;  // radial diameter suffices to witness escape
        if (diam > pr.max_preimage_radius) {
            pr.max_preimage_radius = diam;
            pr.flag_threshold = window / 2 + target_radius;
        }
    }
    if (pr.flag_threshold == 0) pr.flag_threshold = window / 2 + target_radius;
    pr.bounded = pr.max_preimage_radius <= pr.flag_threshold;
    if (window < 4 * target_radius) {
        pr.inconclusive = true;
        pr.note = "window too small to witness escape";
    }

    bool expansion_finite = std::all_of(rep.expansion.begin(), rep.expansion.end(),
                                        [](const ExpansionEntry& e) { return std::isfinite(e.S); });
    if (pr.inconclusive)
        rep.verdict = Verdict::Inconclusive;
    else
        rep.verdict = (expansion_finite && pr.bounded) ? Verdict::Pass : Verdict::Fail;
    return rep;
}

ClosenessReport are_close(const PointMap& F1, const PointMap& F2, const ProperMetricSpace& X,
                          const ProperMetricSpace& Y, double window, double growth_tolerance) {
    ClosenessReport rep;
    for (const auto& x : X.base_ball(window)) {
        const double d = Y.distance(F1.map(x), F2.map(x));
        rep.sup_displacement = std::max(rep.sup_displacement, d);
        if (X.norm(x) <= window / 2 + 1e-12)
            rep.sup_displacement_half = std::max(rep.sup_displacement_half, d);
    }
    rep.close = rep.sup_displacement <= rep.sup_displacement_half + growth_tolerance;
    return rep;
}

DefectProfile slow_oscillation_profile(const SampledFunction& f, const ProperMetricSpace& X,
                                       double R, const std::vector<double>& escape_radii,
                                       double tolerance) {
    DefectProfile profile;
    profile.tolerance = tolerance;
    profile.label = "slow-oscillation(" + f.name + ")";
    if (escape_radii.empty()) return profile;
    const double window = escape_radii.back() + R;
    const auto pts = X.base_ball(window);
    std::vector<double> norms(pts.size());
    std::vector<std::complex<double>> vals(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        norms[i] = X.norm(pts[i]);
        vals[i] = f.values(pts[i]);
    }
    for (double r : escape_radii) {
        double sup = 0;
        bool any = false;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (norms[i] < r) continue;
            for (const auto& y : X.ball(pts[i], R)) {
                if (X.norm(y) < r || X.norm(y) > window + 1e-12) continue;
                any = true;
                sup = std::max(sup, std::abs(vals[i] - f.values(y)));
            }
        }
        if (any)
            profile.add(r, sup);
        else
            profile.add_skipped(r, "empty annulus");
    }
    return profile;
}

}  // namespace ncg
