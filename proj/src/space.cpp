#include "ncg/space.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace ncg {

std::vector<Point> ProperMetricSpace::ball(const Point& center, double radius,
                                           std::size_t budget) const {
    // Generic route: scan a base ball big enough to contain the requested one.
    const double reach = norm(center) + radius;
    std::vector<Point> out;
    for (auto& p : base_ball(reach, budget))
        if (distance(center, p) <= radius + 1e-12) out.push_back(std::move(p));
    return out;
}

double LatticeSpace::distance(const Point& a, const Point& b) const {
    double s = 0;
    for (int i = 0; i < dim_; ++i) {
        const double d = static_cast<double>(a[static_cast<std::size_t>(i)] -
                                             b[static_cast<std::size_t>(i)]);
        s += d * d;
    }
    return std::sqrt(s);
}

std::vector<Point> LatticeSpace::ball(const Point& center, double radius,
                                      std::size_t budget) const {
    if (radius < 0) return {};
    const auto r = static_cast<std::int64_t>(std::floor(radius + 1e-12));
    std::vector<Point> out;
    const double r2 = radius * radius + 1e-9;
    std::size_t seen = 0;
    auto push = [&](Point p) {
        if (++seen > budget) throw PropernessViolation("lattice ball: enumeration budget exceeded");
        out.push_back(std::move(p));
    };
    if (dim_ == 1) {
        for (std::int64_t x = center[0] - r; x <= center[0] + r; ++x) push({x});
    } else if (dim_ == 2) {
        for (std::int64_t x = center[0] - r; x <= center[0] + r; ++x)
            for (std::int64_t y = center[1] - r; y <= center[1] + r; ++y) {
                const double dx = static_cast<double>(x - center[0]);
                const double dy = static_cast<double>(y - center[1]);
                if (dx * dx + dy * dy <= r2) push({x, y});
            }
    } else {
        for (std::int64_t x = center[0] - r; x <= center[0] + r; ++x)
            for (std::int64_t y = center[1] - r; y <= center[1] + r; ++y)
                for (std::int64_t z = center[2] - r; z <= center[2] + r; ++z) {
                    const double dx = static_cast<double>(x - center[0]);
                    const double dy = static_cast<double>(y - center[1]);
                    const double dz = static_cast<double>(z - center[2]);
                    if (dx * dx + dy * dy + dz * dz <= r2) push({x, y, z});
                }
    }
    std::sort(out.begin(), out.end(), point_less);
    return out;
}

double StripSpace::distance(const Point& a, const Point& b) const {
    const double dx = static_cast<double>(a[0] - b[0]);
    const double ds = static_cast<double>(a[1] - b[1]);
    return std::abs(dx) + std::abs(ds);
}

std::vector<Point> StripSpace::ball(const Point& center, double radius,
                                    std::size_t budget) const {
    if (radius < 0) return {};
    std::vector<Point> out;
    const auto r = static_cast<std::int64_t>(std::floor(radius + 1e-12));
    for (std::int64_t x = center[0] - r; x <= center[0] + r; ++x)
        for (std::int64_t s = 0; s <= 1; ++s)
            if (distance(center, {x, s}) <= radius + 1e-12) {
                if (out.size() >= budget) throw PropernessViolation("strip ball: budget exceeded");
                out.push_back({x, s});
            }
    std::sort(out.begin(), out.end(), point_less);
    return out;
}

std::vector<Point> NatSpace::ball(const Point& center, double radius,
                                  std::size_t budget) const {
    if (radius < 0) return {};
    std::vector<Point> out;
    const auto r = static_cast<std::int64_t>(std::floor(radius + 1e-12));
    for (std::int64_t x = std::max<std::int64_t>(0, center[0] - r); x <= center[0] + r; ++x) {
        if (out.size() >= budget) throw PropernessViolation("nat ball: budget exceeded");
        out.push_back({x});
    }
    return out;
}

Point FreeGroupSpace::reduce_concat(const Point& u, const Point& v) {
    Point w = u;
    for (auto letter : v) {
        if (!w.empty() && w.back() == -letter)
            w.pop_back();
        else
            w.push_back(letter);
    }
    return w;
}

Point FreeGroupSpace::inverse(const Point& w) {
    Point out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

double FreeGroupSpace::distance(const Point& a, const Point& b) const {
    return static_cast<double>(reduce_concat(inverse(a), b).size());
}

std::vector<Point> FreeGroupSpace::base_ball(double radius, std::size_t budget) const {
    std::vector<Point> out{Point{}};
    std::vector<Point> frontier{Point{}};
    const auto r = static_cast<std::int64_t>(std::floor(radius + 1e-12));
    const std::int64_t letters[4] = {1, -1, 2, -2};
    for (std::int64_t len = 1; len <= r; ++len) {
        std::vector<Point> next;
        for (const auto& w : frontier)
            for (auto letter : letters) {
                if (!w.empty() && w.back() == -letter) continue;
                Point e = w;
                e.push_back(letter);
                if (out.size() + next.size() >= budget)
                    throw PropernessViolation("F2 ball: budget exceeded");
                next.push_back(std::move(e));
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), point_less);
    return out;
}

double BinaryTreeSpace::distance(const Point& a, const Point& b) const {
    std::size_t common = 0;
    while (common < a.size() && common < b.size() && a[common] == b[common]) ++common;
    return static_cast<double>(a.size() + b.size() - 2 * common);
}

std::vector<Point> BinaryTreeSpace::base_ball(double radius, std::size_t budget) const {
    std::vector<Point> out{Point{}};
    std::vector<Point> frontier{Point{}};
    const auto r = std::min<std::int64_t>(static_cast<std::int64_t>(std::floor(radius + 1e-12)),
                                          depth_);
    for (std::int64_t len = 1; len <= r; ++len) {
        std::vector<Point> next;
        for (const auto& w : frontier)
            for (std::int64_t bit = 0; bit <= 1; ++bit) {
                Point e = w;
                e.push_back(bit);
                if (out.size() + next.size() >= budget)
                    throw PropernessViolation("tree ball: budget exceeded");
                next.push_back(std::move(e));
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), point_less);
    return out;
}

GroupAction::GroupAction(std::string name, const ProperMetricSpace* space,
                         std::vector<std::function<Point(const Point&)>> generators,
                         int word_window)
    : name_(std::move(name)), space_(space), word_window_(word_window) {
    // Probe set identifying an element by where it sends a few points.
    std::vector<Point> probe = space_->base_ball(2.0);
    if (probe.size() > 8) probe.resize(8);
    auto signature = [&](const std::function<Point(const Point&)>& g) {
        std::vector<Point> sig;
        sig.reserve(probe.size());
        for (const auto& p : probe) sig.push_back(g(p));
        return sig;
    };

    std::map<std::vector<Point>, std::size_t> seen;
    std::vector<std::function<Point(const Point&)>> frontier;
    auto identity = [](const Point& p) { return p; };
    elements_.push_back(identity);
    seen[signature(identity)] = 0;
    frontier.push_back(identity);

    for (int len = 1; len <= word_window; ++len) {
        std::vector<std::function<Point(const Point&)>> next;
        for (const auto& w : frontier)
            for (const auto& g : generators) {
                auto composed = [w, g](const Point& p) { return g(w(p)); };
                auto sig = signature(composed);
                if (seen.count(sig)) continue;
                seen[sig] = elements_.size();
                elements_.push_back(composed);
                next.push_back(composed);
            }
        frontier = std::move(next);
    }
}

void GroupAction::check_isometric(double sample_radius) const {
    auto pts = space_->base_ball(sample_radius);
    if (pts.size() > 24) pts.resize(24);
    for (const auto& g : elements_)
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                const double before = space_->distance(pts[i], pts[j]);
                const double after = space_->distance(g(pts[i]), g(pts[j]));
                if (std::abs(before - after) > 1e-9)
                    throw std::runtime_error("group action is not isometric on samples: " + name_);
            }
}

GroupAction lattice_translation_action(const LatticeSpace& space, int word_window) {
    std::vector<std::function<Point(const Point&)>> gens;
    for (int i = 0; i < space.dim(); ++i)
        for (int sgn : {+1, -1})
            gens.push_back([i, sgn](const Point& p) {
                Point q = p;
                q[static_cast<std::size_t>(i)] += sgn;
                return q;
            });
    return GroupAction("translations-" + space.key(), &space, std::move(gens), word_window);
}

GroupAction strip_shift_action(const StripSpace& space, int word_window) {
    std::vector<std::function<Point(const Point&)>> gens;
    for (int sgn : {+1, -1})
        gens.push_back([sgn](const Point& p) {
            Point q = p;
            q[0] += sgn;
            return q;
        });
    return GroupAction("shift-Zstrip", &space, std::move(gens), word_window);
}

}  // namespace ncg
