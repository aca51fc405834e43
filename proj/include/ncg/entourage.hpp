#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncg/point.hpp"
#include "ncg/space.hpp"

namespace ncg {

using PointPair = std::pair<Point, Point>;

// A bounded function sampled on a space. |values(x)| <= sup_bound wherever
// it is evaluated.
struct SampledFunction {
    std::string name;
    std::function<std::complex<double>(const Point&)> values;
    double sup_bound = 1.0;
};

// A map between spaces, evaluated out to a window radius.
struct PointMap {
    std::string name;
    std::function<Point(const Point&)> map;
    double window = 0;
};

// A set of pairs E in X x X, queryable and enumerable on a window. The
// enumeration is deterministic; `budget` caps the scan.
class Entourage {
public:
    virtual ~Entourage() = default;
    virtual std::string describe() const = 0;
    virtual bool contains(const ProperMetricSpace& X, const Point& a, const Point& b) const = 0;
    // Pairs with both members in ball(basepoint, window).
    virtual std::vector<PointPair> pairs(const ProperMetricSpace& X, double window,
                                         std::size_t budget = 4'000'000) const = 0;
};

class MetricBoundEntourage final : public Entourage {
public:
    explicit MetricBoundEntourage(double R) : R_(R) {}
    std::string describe() const override { return "metric<=" + std::to_string(R_); }
    bool contains(const ProperMetricSpace& X, const Point& a, const Point& b) const override {
        return X.distance(a, b) <= R_ + 1e-12;
    }
    std::vector<PointPair> pairs(const ProperMetricSpace& X, double window,
                                 std::size_t budget) const override;
    double bound() const { return R_; }

private:
    double R_;
};

class ExplicitPairsEntourage final : public Entourage {
public:
    ExplicitPairsEntourage(std::string name, std::vector<PointPair> ps)
        : name_(std::move(name)), pairs_(std::move(ps)) {}
    std::string describe() const override { return name_; }
    bool contains(const ProperMetricSpace&, const Point& a, const Point& b) const override;
    std::vector<PointPair> pairs(const ProperMetricSpace& X, double window,
                                 std::size_t budget) const override;

private:
    std::string name_;
    std::vector<PointPair> pairs_;
};

// Graph of a point map: {(x, F x) : |x| <= window}.
class GraphEntourage final : public Entourage {
public:
    explicit GraphEntourage(PointMap F) : F_(std::move(F)) {}
    std::string describe() const override { return "graph(" + F_.name + ")"; }
    bool contains(const ProperMetricSpace&, const Point& a, const Point& b) const override {
        return F_.map(a) == b;
    }
    std::vector<PointPair> pairs(const ProperMetricSpace& X, double window,
                                 std::size_t budget) const override;

private:
    PointMap F_;
};

// E_K = {(g x, g y) : g in the action window, x, y in K} for a finite K.
class OrbitEntourage final : public Entourage {
public:
    OrbitEntourage(const GroupAction* action, std::vector<Point> K)
        : action_(action), K_(std::move(K)) {}
    std::string describe() const override {
        return "orbit(" + action_->name() + ",|K|=" + std::to_string(K_.size()) + ")";
    }
    bool contains(const ProperMetricSpace& X, const Point& a, const Point& b) const override;
    std::vector<PointPair> pairs(const ProperMetricSpace& X, double window,
                                 std::size_t budget) const override;

private:
    const GroupAction* action_;
    std::vector<Point> K_;
};

// Composition E1 o E2 and inverse, materialized on a window. Used by the
// coarse-structure axiom checks.
std::vector<PointPair> compose_pairs(const std::vector<PointPair>& e1,
                                     const std::vector<PointPair>& e2);
std::vector<PointPair> inverse_pairs(const std::vector<PointPair>& e);

struct ControlledReport {
    bool controlled = false;
    double sup_distance = 0;
    std::optional<PointPair> witness;  // a violating pair when not controlled
};

// Is sup d over the entourage's window pairs <= R_out?
ControlledReport is_controlled(const Entourage& E, const ProperMetricSpace& X, double window,
                               double R_out);

// E_K for a registered isometric action; checks isometry on samples first.
std::shared_ptr<Entourage> orbit_entourage(const GroupAction& action, std::vector<Point> K);

}  // namespace ncg
