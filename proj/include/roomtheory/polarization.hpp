#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "roomtheory/scoring.hpp"

namespace roomtheory {

// Which number stands for an emotion when two groups are compared: one cell
// of the emotion matrix, or the sum of a channel's three intensities.
struct EmotionSelector {
    enum class Kind { cell, channel_sum };

    std::size_t channel = 0;
    Intensity level = Intensity::mid;
    Kind kind = Kind::cell;

    // "trust", "amazement", ... select a cell (ASCII case ignored); "sum:trust" (any word of the
    // channel after the prefix) selects the channel sum.
    static EmotionSelector parse(std::string_view label, const EmotionBenchmark& bench = plutchik());
    // The eight channels at the given intensity.
    static std::vector<EmotionSelector> channels(Intensity level = Intensity::mid);
    static std::vector<EmotionSelector> channel_sums();

    std::string label(const EmotionBenchmark& bench = plutchik()) const;
    double read(const EmotionProfile& profile) const;

    bool operator==(const EmotionSelector&) const = default;
};

struct GroupStats {
    std::string group_label;
    std::size_t population = 0;
    EmotionGrid mean_profile{};
};

// Means over non-degenerate profiles; population counts those profiles.
// Throws InputError when no profile is usable.
GroupStats group_stats(std::string label, std::span<const EmotionProfile> profiles);

// Arithmetic mean of the selected score. Throws InputError on an empty group.
double group_average(std::span<const EmotionProfile> profiles, const EmotionSelector& selector);

struct Polarization {
    double d = 0.0;
    double p = 0.0;
};

// d = |avg_t - avg_c|, P = (1 - |pop_t - pop_c| / (pop_t + pop_c)) * d.
// Throws InputError when both populations are zero.
Polarization polarization(double avg_t, double avg_c, std::size_t pop_t, std::size_t pop_c);

struct PolarizationRow {
    std::string emotion;
    double avg_t = 0.0;
    double avg_c = 0.0;
    double d = 0.0;
    double p = 0.0;
};

struct PopulationOverride {
    std::optional<std::size_t> t;
    std::optional<std::size_t> c;
};

// One row per selector, sorted by descending P (stable for ties). Degenerate
// profiles are left out of both the averages and the default populations.
std::vector<PolarizationRow> polarization_table(std::span<const EmotionProfile> profiles_t,
                                                std::span<const EmotionProfile> profiles_c,
                                                std::span<const EmotionSelector> emotions,
                                                const PopulationOverride& populations = {});

// Generic-benchmark variant: one row per label. A label's averages use the
// profiles where it was scored.
std::vector<PolarizationRow> polarization_table(std::span<const GenericProfile> profiles_t,
                                                std::span<const GenericProfile> profiles_c,
                                                const PopulationOverride& populations = {});

inline constexpr double kDefaultClusterThreshold = 0.1;

struct EmotionClusters {
    std::vector<std::string> polarizing;      // P >= threshold
    std::vector<std::string> non_polarizing;  // P <  threshold
    double threshold = kDefaultClusterThreshold;

    bool is_polarizing(std::string_view emotion) const;
};

// Throws InputError on an empty row list.
EmotionClusters cluster(std::span<const PolarizationRow> rows,
                        double threshold = kDefaultClusterThreshold);

}  // namespace roomtheory
