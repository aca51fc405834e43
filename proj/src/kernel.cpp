#include "ncg/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace ncg {

std::vector<KernelAtom> StochasticKernel::measure(const Point& x) const {
    auto atoms = mu(x);
    double mass = 0;
    for (const auto& a : atoms) {
        if (a.weight < -kMassTolerance)
            throw std::runtime_error(name + ": negative weight at " + point_to_string(x));
        mass += a.weight;
    }
    if (std::abs(mass - 1.0) > kMassTolerance)
        throw std::runtime_error(name + ": mass " + std::to_string(mass) + " at " +
                                 point_to_string(x));
    if (atoms.size() > kMaxSupport)
        throw std::runtime_error(name + ": support size exceeds cap at " + point_to_string(x));
    return atoms;
}

namespace {

// Sliding tents on a rank-1 space: psi_j lives on {j, j+1} with weights 1/2.
PartitionOfUnity tents_1d(const std::vector<Point>& window_pts) {
    PartitionOfUnity P;
    for (const auto& p : window_pts) {
        PartitionCell cell;
        cell.base = p;
        Point q = p;
        q[0] += 1;
        cell.weights = {{p, 0.5}, {q, 0.5}};
        P.cells.push_back(std::move(cell));
    }
    return P;
}

// Product tents on Z^2: psi_(a,b) lives on {a,a+1} x {b,b+1} with weights 1/4.
PartitionOfUnity tents_2d(const std::vector<Point>& window_pts) {
    PartitionOfUnity P;
    for (const auto& p : window_pts) {
        PartitionCell cell;
        cell.base = p;
        for (std::int64_t dx = 0; dx <= 1; ++dx)
            for (std::int64_t dy = 0; dy <= 1; ++dy)
                cell.weights.push_back({{p[0] + dx, p[1] + dy}, 0.25});
        P.cells.push_back(std::move(cell));
    }
    return P;
}

PartitionOfUnity singletons(const std::vector<Point>& window_pts) {
    PartitionOfUnity P;
    for (const auto& p : window_pts) {
        PartitionCell cell;
        cell.base = p;
        cell.weights = {{p, 1.0}};
        P.cells.push_back(std::move(cell));
    }
    return P;
}

bool supports_in_U(const PartitionOfUnity& P, const Entourage& U, const ProperMetricSpace& X,
                   std::string* failed_cell) {
    for (const auto& cell : P.cells)
        for (const auto& [p, wp] : cell.weights)
            for (const auto& [q, wq] : cell.weights)
                if (!U.contains(X, p, q)) {
                    if (failed_cell) *failed_cell = point_to_string(cell.base);
                    return false;
                }
    return true;
}

void check_partition_sums(const PartitionOfUnity& P, const ProperMetricSpace& X, double window) {
    std::map<Point, double, decltype(&point_less)> sums(&point_less);
    for (const auto& cell : P.cells)
        for (const auto& [p, w] : cell.weights) sums[p] += w;
    // Interior points of the window must be covered with total weight one;
    // the outermost shell is allowed to be partially covered.
    for (const auto& [p, s] : sums) {
        if (X.norm(p) > window - 2.0) continue;
        if (std::abs(s - 1.0) > 1e-12)
            throw PartitionError("partition sums to " + std::to_string(s) + " at " +
                                 point_to_string(p));
    }
}

// Spaces with an inner edge (N at 0) leave deficits under sliding tents;
// top them up with singleton cells of the missing weight.
void patch_deficits(PartitionOfUnity& P, const std::vector<Point>& pts,
                    const ProperMetricSpace& X, double window) {
    std::map<Point, double, decltype(&point_less)> sums(&point_less);
    for (const auto& cell : P.cells)
        for (const auto& [p, w] : cell.weights) sums[p] += w;
    for (const auto& p : pts) {
        if (X.norm(p) > window - 2.0) continue;
        const double s = sums.count(p) ? sums[p] : 0.0;
        if (s < 1.0 - 1e-12) {
            PartitionCell cell;
            cell.base = p;
            cell.weights = {{p, 1.0 - s}};
            P.cells.push_back(std::move(cell));
        }
    }
}

}  // namespace

PartitionOfUnity partition_from_neighborhood(std::shared_ptr<const Entourage> U,
                                             const CompactModel& M, double window,
                                             PartitionStyle style) {
    const auto& X = M.interior();
    const auto pts = X.base_ball(window);
    const bool rank1 = !pts.empty() && pts[0].size() == 1;
    const bool rank2 = !pts.empty() && pts[0].size() == 2 && X.key() == "Z2";

    auto finish = [&](PartitionOfUnity P) {
        std::string cell;
        if (!supports_in_U(P, *U, X, &cell))
            throw PartitionError("cell square outside U at base " + cell);
        check_partition_sums(P, X, window);
        P.subordinate_to = U;
        return P;
    };

    if (style == PartitionStyle::Singletons) return finish(singletons(pts));
    PartitionOfUnity tents;
    if (rank1)
        tents = tents_1d(pts);
    else if (rank2)
        tents = tents_2d(pts);
    else
        return finish(singletons(pts));
    patch_deficits(tents, pts, X, window);

    if (style == PartitionStyle::Tents) return finish(std::move(tents));
    // Auto: prefer tents, fall back to indicator cells when U is too small.
    if (supports_in_U(tents, *U, X, nullptr)) return finish(std::move(tents));
    return finish(singletons(pts));
}

StochasticKernel kernel_from_coarse_map(const PointMap& F, const PartitionOfUnity& P,
                                        const ProperMetricSpace& X, double window) {
    // Index: point -> list of (cell weight, image of cell base).
    auto table = std::make_shared<std::map<Point, std::vector<KernelAtom>, decltype(&point_less)>>(
        &point_less);
    for (const auto& cell : P.cells) {
        const Point img = F.map(cell.base);
        for (const auto& [p, w] : cell.weights) (*table)[p].push_back({img, w});
    }
    // Merge repeated targets, order targets deterministically.
    for (auto& [p, atoms] : *table) {
        std::map<Point, double, decltype(&point_less)> merged(&point_less);
        for (const auto& a : atoms) merged[a.target] += a.weight;
        atoms.clear();
        for (const auto& [y, w] : merged) atoms.push_back({y, w});
    }
    return {"kernel(" + F.name + ")",
            [table](const Point& x) {
                auto it = table->find(x);
                if (it == table->end())
                    throw std::runtime_error("kernel evaluated outside its window at " +
                                             point_to_string(x));
                return it->second;
            },
            window};
}

SampledFunction apply_kernel(const StochasticKernel& K, const SampledFunction& h) {
    auto hv = h.values;
    auto mu = K.mu;
    return {"K[" + h.name + "]",
            [mu, hv](const Point& x) {
                std::complex<double> acc = 0;
                for (const auto& a : mu(x)) acc += a.weight * hv(a.target);
                return acc;
            },
            h.sup_bound};
}

DefectProfile multiplicativity_defect(const StochasticKernel& K, const ProperMetricSpace& X,
                                      const SampledFunction& h1, const SampledFunction& h2,
                                      const std::vector<double>& escape_radii, double tolerance) {
    DefectProfile profile;
    profile.tolerance = tolerance;
    profile.label = "multiplicativity(" + K.name + ";" + h1.name + "," + h2.name + ")";
    if (escape_radii.empty()) return profile;
    const auto pts = X.base_ball(std::min(K.window, escape_radii.back() + 1));
    std::vector<double> defect(pts.size());
    std::vector<double> norms(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        norms[i] = X.norm(pts[i]);
        std::complex<double> prod = 0, a1 = 0, a2 = 0;
        for (const auto& at : K.measure(pts[i])) {
            const auto v1 = h1.values(at.target);
            const auto v2 = h2.values(at.target);
            prod += at.weight * v1 * v2;
            a1 += at.weight * v1;
            a2 += at.weight * v2;
        }
        defect[i] = std::abs(prod - a1 * a2);
    }
    for (double r : escape_radii) {
        double sup = 0;
        bool any = false;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (norms[i] >= r) {
                any = true;
                sup = std::max(sup, defect[i]);
            }
        if (any)
            profile.add(r, sup);
        else
            profile.add_skipped(r, "empty annulus");
    }
    return profile;
}

DefectProfile closeness_defect(const StochasticKernel& K1, const StochasticKernel& K2,
                               const ProperMetricSpace& X, const SampledFunction& h,
                               const std::vector<double>& escape_radii, double tolerance) {
    DefectProfile profile;
    profile.tolerance = tolerance;
    profile.label = "closeness(" + K1.name + "," + K2.name + ";" + h.name + ")";
    if (escape_radii.empty()) return profile;
    const double window = std::min({K1.window, K2.window, escape_radii.back() + 1});
    const auto f1 = apply_kernel(K1, h);
    const auto f2 = apply_kernel(K2, h);
    const auto pts = X.base_ball(window);
    for (double r : escape_radii) {
        double sup = 0;
        bool any = false;
        for (const auto& x : pts) {
            if (X.norm(x) < r) continue;
            any = true;
            sup = std::max(sup, std::abs(f1.values(x) - f2.values(x)));
        }
        if (any)
            profile.add(r, sup);
        else
            profile.add_skipped(r, "empty annulus");
    }
    return profile;
}

BoxSpaceReport box_space_harness(
    const std::vector<BoxBlock>& blocks,
    const std::vector<std::function<double(std::size_t, std::size_t)>>& h_family) {
    BoxSpaceReport rep;
    for (std::size_t n = 0; n < blocks.size(); ++n) {
        const auto& c = blocks[n].masses;
        double mass = 0;
        for (double w : c) mass += w;
        if (std::abs(mass - 1.0) > StochasticKernel::kMassTolerance)
            throw std::runtime_error("box block " + std::to_string(n) + " mass != 1");

        auto phi = [&](const std::function<double(std::size_t, std::size_t)>& h) {
            double acc = 0;
            for (std::size_t y = 0; y < c.size(); ++y) acc += c[y] * h(n, y);
            return acc;
        };

        BoxSpaceRow row;
        row.block = n;
        for (const auto& ha : h_family)
            for (const auto& hb : h_family) {
                auto hab = [&](std::size_t bn, std::size_t y) { return ha(bn, y) * hb(bn, y); };
                row.multiplicativity =
                    std::max(row.multiplicativity, std::abs(phi(hab) - phi(ha) * phi(hb)));
            }
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t y = 0; y < c.size(); ++y) {
            double worst = 0;
            for (const auto& h : h_family) worst = std::max(worst, std::abs(phi(h) - h(n, y)));
            if (worst < best) {
                best = worst;
                row.best_point = y;
            }
        }
        row.gap = best;
        rep.sup_multiplicativity = std::max(rep.sup_multiplicativity, row.multiplicativity);
        rep.sup_gap = std::max(rep.sup_gap, row.gap);
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace ncg
