#include "ncg/entourage.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ncg {

namespace {
void sort_pairs(std::vector<PointPair>& ps) {
    std::sort(ps.begin(), ps.end(), [](const PointPair& a, const PointPair& b) {
        if (a.first != b.first) return point_less(a.first, b.first);
        return point_less(a.second, b.second);
    });
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
}
}  // namespace

std::vector<PointPair> MetricBoundEntourage::pairs(const ProperMetricSpace& X, double window,
                                                   std::size_t budget) const {
    std::vector<PointPair> out;
    for (const auto& x : X.base_ball(window))
        for (const auto& y : X.ball(x, R_)) {
            if (X.norm(y) > window + 1e-12) continue;
            if (out.size() >= budget) throw std::runtime_error("entourage pair budget exceeded");
            out.push_back({x, y});
        }
    sort_pairs(out);
    return out;
}

bool ExplicitPairsEntourage::contains(const ProperMetricSpace&, const Point& a,
                                      const Point& b) const {
    for (const auto& p : pairs_)
        if (p.first == a && p.second == b) return true;
    return false;
}

std::vector<PointPair> ExplicitPairsEntourage::pairs(const ProperMetricSpace& X, double window,
                                                     std::size_t) const {
    std::vector<PointPair> out;
    for (const auto& p : pairs_)
        if (X.norm(p.first) <= window + 1e-12 && X.norm(p.second) <= window + 1e-12)
            out.push_back(p);
    sort_pairs(out);
    return out;
}

std::vector<PointPair> GraphEntourage::pairs(const ProperMetricSpace& X, double window,
                                             std::size_t budget) const {
    std::vector<PointPair> out;
    for (const auto& x : X.base_ball(std::min(window, F_.window))) {
        Point y = F_.map(x);
        if (X.norm(y) > window + 1e-12) continue;
        if (out.size() >= budget) throw std::runtime_error("entourage pair budget exceeded");
        out.push_back({x, std::move(y)});
    }
    sort_pairs(out);
    return out;
}

bool OrbitEntourage::contains(const ProperMetricSpace&, const Point& a, const Point& b) const {
    for (const auto& g : action_->elements())
        for (const auto& x : K_) {
            if (g(x) != a) continue;
            for (const auto& y : K_)
                if (g(y) == b) return true;
        }
    return false;
}

std::vector<PointPair> OrbitEntourage::pairs(const ProperMetricSpace& X, double window,
                                             std::size_t budget) const {
    std::vector<PointPair> out;
    for (const auto& g : action_->elements())
        for (const auto& x : K_) {
            Point gx = g(x);
            if (X.norm(gx) > window + 1e-12) continue;
            for (const auto& y : K_) {
                Point gy = g(y);
                if (X.norm(gy) > window + 1e-12) continue;
                if (out.size() >= budget)
                    throw std::runtime_error("entourage pair budget exceeded");
                out.push_back({gx, std::move(gy)});
            }
        }
    sort_pairs(out);
    return out;
}

std::vector<PointPair> compose_pairs(const std::vector<PointPair>& e1,
                                     const std::vector<PointPair>& e2) {
    // E1 o E2 = {(x, z) : exists y, (x,y) in E2 and (y,z) in E1}.
    std::map<Point, std::vector<Point>, decltype(&point_less)> by_first(&point_less);
    for (const auto& p : e1) by_first[p.first].push_back(p.second);
    std::vector<PointPair> out;
    for (const auto& p : e2) {
        auto it = by_first.find(p.second);
        if (it == by_first.end()) continue;
        for (const auto& z : it->second) out.push_back({p.first, z});
    }
    sort_pairs(out);
    return out;
}

std::vector<PointPair> inverse_pairs(const std::vector<PointPair>& e) {
    std::vector<PointPair> out;
    out.reserve(e.size());
    for (const auto& p : e) out.push_back({p.second, p.first});
    sort_pairs(out);
    return out;
}

ControlledReport is_controlled(const Entourage& E, const ProperMetricSpace& X, double window,
                               double R_out) {
    ControlledReport rep;
    rep.controlled = true;
    for (const auto& p : E.pairs(X, window)) {
        const double d = X.distance(p.first, p.second);
        if (d > rep.sup_distance) {
            rep.sup_distance = d;
            if (d > R_out + 1e-12) {
                rep.controlled = false;
                rep.witness = p;
            }
        }
    }
    return rep;
}

std::shared_ptr<Entourage> orbit_entourage(const GroupAction& action, std::vector<Point> K) {
    action.check_isometric(3.0);
    return std::make_shared<OrbitEntourage>(&action, std::move(K));
}

}  // namespace ncg
