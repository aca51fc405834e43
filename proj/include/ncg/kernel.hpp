#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ncg/compact_model.hpp"
#include "ncg/defect_profile.hpp"
#include "ncg/entourage.hpp"

namespace ncg {

struct KernelAtom {
    Point target;
    double weight;
};

// Finitely supported probability-measure-valued map x -> mu_x: the
// commutative avatar of a nondegenerate completely positive map.
struct StochasticKernel {
    std::string name;
    std::function<std::vector<KernelAtom>(const Point&)> mu;
    double window = 0;

    static constexpr double kMassTolerance = 1e-12;
    static constexpr std::size_t kMaxSupport = 8;

    // Checks weights >= 0, total mass 1 and the support cap at x.
    std::vector<KernelAtom> measure(const Point& x) const;
};

struct PartitionCell {
    Point base;                                       // x_i
    std::vector<std::pair<Point, double>> weights;    // psi_i on its support
};

struct PartitionOfUnity {
    std::vector<PartitionCell> cells;
    std::shared_ptr<const Entourage> subordinate_to;  // U with (supp psi_i)^2 in U
};

enum class PartitionStyle { Auto, Tents, Singletons };

struct PartitionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Hat-function partition subordinate to a controlled neighbourhood of the
// diagonal: overlapping tents when U admits them, indicator cells otherwise.
// Verifies sum psi = 1 on the window and the support condition by scan.
PartitionOfUnity partition_from_neighborhood(std::shared_ptr<const Entourage> U,
                                             const CompactModel& M, double window,
                                             PartitionStyle style = PartitionStyle::Auto);

// mu_x = sum_i psi_i(x) delta_{F(x_i)}.
StochasticKernel kernel_from_coarse_map(const PointMap& F, const PartitionOfUnity& P,
                                        const ProperMetricSpace& X, double window);

// (apply K h)(x) = integral of h against mu_x. Linear, positive, unital.
SampledFunction apply_kernel(const StochasticKernel& K, const SampledFunction& h);

// sup_{|x| >= r} |K(h1 h2) - K(h1) K(h2)| per escape radius: the
// multiplicativity-on-the-boundary defect.
DefectProfile multiplicativity_defect(const StochasticKernel& K, const ProperMetricSpace& X,
                                      const SampledFunction& h1, const SampledFunction& h2,
                                      const std::vector<double>& escape_radii,
                                      double tolerance = 1e-2);

// sup_{|x| >= r} |K1(h) - K2(h)|: closeness of two kernels at scale.
DefectProfile closeness_defect(const StochasticKernel& K1, const StochasticKernel& K2,
                               const ProperMetricSpace& X, const SampledFunction& h,
                               const std::vector<double>& escape_radii, double tolerance = 1e-2);

struct BoxBlock {
    std::vector<double> masses;  // c(n, .) summing to 1
};

struct BoxSpaceRow {
    std::size_t block = 0;
    double multiplicativity = 0;  // worst defect over function pairs
    std::size_t best_point = 0;   // y_n minimizing the point-evaluation gap
    double gap = 0;               // min over y of max over h |phi(h)(n) - h(n,y)|
};

struct BoxSpaceReport {
    std::vector<BoxSpaceRow> rows;
    double sup_multiplicativity = 0;
    double sup_gap = 0;
};

// Block kernel (phi h)(n) = sum_y c(n,y) h(n,y) on a box space; searches for
// point evaluations close to phi. Evidence reporting only: the underlying
// lifting question stays open.
BoxSpaceReport box_space_harness(const std::vector<BoxBlock>& blocks,
                                 const std::vector<std::function<double(std::size_t, std::size_t)>>& h_family);

}  // namespace ncg
