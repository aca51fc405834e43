#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace ncg {

enum class Verdict { Pass, Fail, Inconclusive };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        default: return "inconclusive";
    }
}

struct ProfileEntry {
    double index = 0;   // escape radius, cutoff, epsilon, ray index, ...
    double value = 0;   // tail norm / oscillation / defect at that index
    bool skipped = false;
    std::string note;
};

// Monotone sequence of tail defects over a growing schedule. This is the
// artifact's finite-scale stand-in for "vanishes at infinity": the verdict is
// decay of the measured values below a tolerance, never a claim about limits.
struct DefectProfile {
    std::vector<ProfileEntry> entries;
    double tolerance = 1e-2;
    std::string label;

    void add(double index, double value) { entries.push_back({index, value, false, ""}); }
    void add_skipped(double index, std::string note) {
        entries.push_back({index, 0.0, true, std::move(note)});
    }

    bool empty_measured() const {
        return std::none_of(entries.begin(), entries.end(),
                            [](const ProfileEntry& e) { return !e.skipped; });
    }

    double final_value() const {
        for (auto it = entries.rbegin(); it != entries.rend(); ++it)
            if (!it->skipped) return it->value;
        return std::nan("");
    }

    double max_value() const {
        double m = 0;
        for (const auto& e : entries)
            if (!e.skipped) m = std::max(m, e.value);
        return m;
    }

    double min_value() const {
        double m = std::nan("");
        for (const auto& e : entries)
            if (!e.skipped) m = std::isnan(m) ? e.value : std::min(m, e.value);
        return m;
    }

    // Non-increasing up to a relative slack (finite windows wobble a little).
    bool monotone_decay(double slack = 0.05) const {
        double prev = std::nan("");
        for (const auto& e : entries) {
            if (e.skipped) continue;
            if (!std::isnan(prev) && e.value > prev * (1.0 + slack) + 1e-15) return false;
            prev = e.value;
        }
        return true;
    }

    // Decays-below-tolerance verdict. A window too small to measure anything
    // is inconclusive, not false.
    Verdict decay_verdict() const {
        if (empty_measured()) return Verdict::Inconclusive;
        if (!monotone_decay()) return Verdict::Fail;
        return final_value() <= tolerance ? Verdict::Pass : Verdict::Fail;
    }

    // Stays-above-threshold verdict for counterexample profiles.
    Verdict persistence_verdict(double threshold) const {
        if (empty_measured()) return Verdict::Inconclusive;
        return min_value() >= threshold ? Verdict::Pass : Verdict::Fail;
    }
};

}  // namespace ncg
