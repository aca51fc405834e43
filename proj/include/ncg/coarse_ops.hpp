#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncg/defect_profile.hpp"
#include "ncg/entourage.hpp"
#include "ncg/space.hpp"

namespace ncg {

struct ExpansionEntry {
    double R = 0;       // input scale
    double S = 0;       // sup d(F x, F y) over window pairs with d(x,y) <= R
};

struct PropernessReport {
    double max_preimage_radius = 0;   // largest diameter of a sampled target-ball preimage
    double flag_threshold = 0;        // window/2 + target radius at the worst sample
    bool bounded = true;
    bool inconclusive = false;        // window too small to witness escape
    std::string note;
};

struct CoarseMapReport {
    std::vector<ExpansionEntry> expansion;   // S(R) per requested R
    PropernessReport properness;
    Verdict verdict = Verdict::Inconclusive; // coarse iff expansion finite on window and proper
};

// Expansion profile + properness scan for F : X -> Y on the window.
CoarseMapReport coarse_map_check(const PointMap& F, const ProperMetricSpace& X,
                                 const ProperMetricSpace& Y, const std::vector<double>& radii,
                                 double window);

struct ClosenessReport {
    double sup_displacement = 0;        // sup d(F1 x, F2 x) over the window
    double sup_displacement_half = 0;   // same over the half window
    bool close = false;                 // stable bound found (no growth with window)
};

// Is {(F1 x, F2 x)} bounded on the window, i.e. are the maps close at scale?
ClosenessReport are_close(const PointMap& F1, const PointMap& F2, const ProperMetricSpace& X,
                          const ProperMetricSpace& Y, double window, double growth_tolerance = 1.0);

// Delta_R profile: for each escape radius r, sup |f(y)-f(x)| over pairs with
// d(x,y) <= R and |x|,|y| >= r. Decay of the profile is the finite-scale
// form of slow oscillation.
DefectProfile slow_oscillation_profile(const SampledFunction& f, const ProperMetricSpace& X,
                                       double R, const std::vector<double>& escape_radii,
                                       double tolerance = 1e-2);

}  // namespace ncg
