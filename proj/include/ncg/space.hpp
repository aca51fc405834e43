#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncg/point.hpp"

namespace ncg {

struct PropernessViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A discrete proper metric space given by a point enumerator, a metric and a
// basepoint. Properness means every ball around the basepoint is finite; the
// enumeration budget turns a violation into a hard error instead of a hang.
class ProperMetricSpace {
public:
    virtual ~ProperMetricSpace() = default;

    virtual std::string key() const = 0;
    virtual Point basepoint() const = 0;
    virtual double distance(const Point& a, const Point& b) const = 0;

    // All points with distance(center, .) <= radius, in graded lex order.
    virtual std::vector<Point> ball(const Point& center, double radius,
                                    std::size_t budget = kDefaultBudget) const;

    // Ball around the basepoint; instances override with a direct scan.
    virtual std::vector<Point> base_ball(double radius,
                                         std::size_t budget = kDefaultBudget) const = 0;

    double norm(const Point& p) const { return distance(basepoint(), p); }

    static constexpr std::size_t kDefaultBudget = 20'000'000;
};

// Z^n with the Euclidean metric.
class LatticeSpace final : public ProperMetricSpace {
public:
    explicit LatticeSpace(int dim) : dim_(dim) {
        if (dim < 1 || dim > 3) throw std::invalid_argument("LatticeSpace: dim must be 1..3");
    }

    std::string key() const override { return dim_ == 1 ? "Z1" : (dim_ == 2 ? "Z2" : "Z3"); }
    Point basepoint() const override { return Point(static_cast<std::size_t>(dim_), 0); }
    double distance(const Point& a, const Point& b) const override;
    std::vector<Point> ball(const Point& center, double radius, std::size_t budget) const override;
    std::vector<Point> base_ball(double radius, std::size_t budget) const override {
        return ball(basepoint(), radius, budget);
    }
    int dim() const { return dim_; }

private:
    int dim_;
};

// Z x {0,1}: two parallel copies of Z, fiber distance 1. Carries the
// cocompact shift action of Z.
class StripSpace final : public ProperMetricSpace {
public:
    std::string key() const override { return "Zstrip"; }
    Point basepoint() const override { return {0, 0}; }
    double distance(const Point& a, const Point& b) const override;
    std::vector<Point> ball(const Point& center, double radius, std::size_t budget) const override;
    std::vector<Point> base_ball(double radius, std::size_t budget) const override {
        return ball(basepoint(), radius, budget);
    }
};

// N = {0,1,2,...} with |a-b|.
class NatSpace final : public ProperMetricSpace {
public:
    std::string key() const override { return "N"; }
    Point basepoint() const override { return {0}; }
    double distance(const Point& a, const Point& b) const override {
        return static_cast<double>(a[0] > b[0] ? a[0] - b[0] : b[0] - a[0]);
    }
    std::vector<Point> ball(const Point& center, double radius, std::size_t budget) const override;
    std::vector<Point> base_ball(double radius, std::size_t budget) const override {
        return ball(basepoint(), radius, budget);
    }
};

// Free group on two generators with the word metric. Points are reduced
// words; letters are encoded 1,-1 (a, a^-1) and 2,-2 (b, b^-1).
class FreeGroupSpace final : public ProperMetricSpace {
public:
    std::string key() const override { return "F2"; }
    Point basepoint() const override { return {}; }
    double distance(const Point& a, const Point& b) const override;
    std::vector<Point> base_ball(double radius, std::size_t budget) const override;

    static Point reduce_concat(const Point& u, const Point& v);
    static Point inverse(const Point& w);
};

// Rooted binary tree of the given depth with the graph metric. Points are
// 0/1 words (the root is the empty word).
class BinaryTreeSpace final : public ProperMetricSpace {
public:
    explicit BinaryTreeSpace(int depth) : depth_(depth) {}
    std::string key() const override { return "tree-" + std::to_string(depth_); }
    Point basepoint() const override { return {}; }
    double distance(const Point& a, const Point& b) const override;
    std::vector<Point> base_ball(double radius, std::size_t budget) const override;
    int depth() const { return depth_; }

private:
    int depth_;
};

// An isometric group action given by generators (with inverses). Group
// elements are enumerated as generator words up to the word window and
// deduplicated by their action on a probe set.
class GroupAction {
public:
    GroupAction(std::string name, const ProperMetricSpace* space,
                std::vector<std::function<Point(const Point&)>> generators,
                int word_window);

    const std::string& name() const { return name_; }
    int word_window() const { return word_window_; }

    // Distinct group elements realized as point maps, deterministic order.
    const std::vector<std::function<Point(const Point&)>>& elements() const { return elements_; }

    // Spot check: d(g x, g y) == d(x, y) on sampled pairs.
    void check_isometric(double sample_radius) const;

private:
    std::string name_;
    const ProperMetricSpace* space_;
    std::vector<std::function<Point(const Point&)>> elements_;
    int word_window_;
};

// Translation action of Z^n on the lattice, window = max l^1 word length.
GroupAction lattice_translation_action(const LatticeSpace& space, int word_window);
// Shift action of Z on the strip.
GroupAction strip_shift_action(const StripSpace& space, int word_window);

}  // namespace ncg
