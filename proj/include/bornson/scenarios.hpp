#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "bornson/solver.hpp"

namespace bornson {

// Relative cancellation threshold for the dark-state test, measured against
// the incoherent sum |t42 t21| + |t43 t31|.
inline constexpr double kDarkThreshold = 1e-12;

// Chain n -> n-1 -> ... -> 1. amplitudes[k] is the transition (k+2) -> (k+1)
// in 1-based labels, stored at (k, k+1). Needs at least one amplitude.
BornSonSystem build_cascade(std::span<const Amplitude> amplitudes);

struct DiamondAmplitudes {
    Amplitude t21, t31, t42, t43;
};

// Four levels, 1 -> {2, 3} -> 4. Zero amplitudes delete their edge.
BornSonSystem build_diamond(const DiamondAmplitudes& t);

struct DoubleDiamondAmplitudes {
    Amplitude t21, t31, t42, t43;   // first stage, 1 -> {2, 3} -> 4
    Amplitude t54, t64, t75, t76;   // second stage, 4 -> {5, 6} -> 7
};

// Seven levels, two branching-and-recombination stages sharing vertex 4.
BornSonSystem build_double_diamond(const DoubleDiamondAmplitudes& t);

enum class InterferenceRegime { Constructive, DarkState, Generic };

const char* to_string(InterferenceRegime regime) noexcept;

struct PathContribution {
    std::vector<std::size_t> path;   // 0-based vertices
    Amplitude amplitude;
};

struct InterferenceReport {
    Amplitude a4;                            // exact amplitude on |4>
    Amplitude a4_born1;                      // first-order prediction, always 0
    std::array<PathContribution, 2> paths;   // 1->2->4, 1->3->4
    InterferenceRegime regime = InterferenceRegime::Generic;
    std::optional<double> relative_error_born1;   // absent when a4 == 0
};

// Reads the four amplitudes back out of T. Throws TopologyError unless the
// system is the full four-edge diamond.
DiamondAmplitudes diamond_amplitudes(const BornSonSystem& sys);

InterferenceReport classify_interference(const BornSonSystem& sys);

} // namespace bornson
