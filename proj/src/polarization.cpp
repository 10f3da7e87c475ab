#include "roomtheory/polarization.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "roomtheory/detail/exact_sum.hpp"
#include "roomtheory/error.hpp"

namespace roomtheory {

namespace {

constexpr std::string_view kSumPrefix = "sum:";

}  // namespace

EmotionSelector EmotionSelector::parse(std::string_view label, const EmotionBenchmark& bench) {
    std::string lowered(label);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    std::string_view name = lowered;
    const bool sum = name.starts_with(kSumPrefix);
    if (sum) name.remove_prefix(kSumPrefix.size());
    for (std::size_t ch = 0; ch < kChannels; ++ch)
        for (std::size_t in = 0; in < kIntensities; ++in)
            if (bench.matrix[ch][in] == name)
                return sum ? EmotionSelector{ch, Intensity::mid, Kind::channel_sum}
                           : EmotionSelector{ch, static_cast<Intensity>(in), Kind::cell};
    throw InputError("unknown emotion '" + std::string(label) + "'");
}

std::vector<EmotionSelector> EmotionSelector::channels(Intensity level) {
    std::vector<EmotionSelector> out;
    for (std::size_t ch = 0; ch < kChannels; ++ch) out.push_back({ch, level, Kind::cell});
    return out;
}

std::vector<EmotionSelector> EmotionSelector::channel_sums() {
    std::vector<EmotionSelector> out;
    for (std::size_t ch = 0; ch < kChannels; ++ch)
        out.push_back({ch, Intensity::mid, Kind::channel_sum});
    return out;
}

std::string EmotionSelector::label(const EmotionBenchmark& bench) const {
    if (kind == Kind::channel_sum) return std::string(kSumPrefix) + std::string(bench.channel_name(channel));
    return std::string(bench.word(channel, level));
}

double EmotionSelector::read(const EmotionProfile& profile) const {
    if (kind == Kind::cell) return profile.score(channel, level);
    const auto& row = profile.scores[channel];
    return row[0] + row[1] + row[2];
}

GroupStats group_stats(std::string label, std::span<const EmotionProfile> profiles) {
    GroupStats out{std::move(label), 0, {}};
    std::array<std::array<detail::ExactSum, kIntensities>, kChannels> sums;
    for (const auto& p : profiles) {
        if (p.degenerate) continue;
        ++out.population;
        for (std::size_t ch = 0; ch < kChannels; ++ch)
            for (std::size_t in = 0; in < kIntensities; ++in) sums[ch][in].add(p.scores[ch][in]);
    }
    if (out.population == 0)
        throw InputError("group '" + out.group_label + "' has no scored documents");
    for (std::size_t ch = 0; ch < kChannels; ++ch)
        for (std::size_t in = 0; in < kIntensities; ++in)
            out.mean_profile[ch][in] = sums[ch][in].mean(out.population);
    return out;
}

double group_average(std::span<const EmotionProfile> profiles, const EmotionSelector& selector) {
    if (profiles.empty()) throw InputError("group average of an empty group");
    detail::ExactSum sum;
    for (const auto& p : profiles) sum.add(selector.read(p));
    return sum.mean(profiles.size());
}

Polarization polarization(double avg_t, double avg_c, std::size_t pop_t, std::size_t pop_c) {
    if (pop_t == 0 && pop_c == 0) throw InputError("polarization: both populations are zero");
    const std::size_t gap = pop_t > pop_c ? pop_t - pop_c : pop_c - pop_t;
    const double balance =
        1.0 - static_cast<double>(gap) / (static_cast<double>(pop_t) + static_cast<double>(pop_c));
    const double d = std::abs(avg_t - avg_c);
    return {d, balance * d};
}

std::vector<PolarizationRow> polarization_table(std::span<const EmotionProfile> profiles_t,
                                                std::span<const EmotionProfile> profiles_c,
                                                std::span<const EmotionSelector> emotions,
                                                const PopulationOverride& populations) {
    auto usable = [](std::span<const EmotionProfile> in, const char* name) {
        std::vector<EmotionProfile> out;
        std::copy_if(in.begin(), in.end(), std::back_inserter(out),
                     [](const EmotionProfile& p) { return !p.degenerate; });
        if (out.empty()) throw InputError(std::string("group ") + name + " has no scored documents");
        return out;
    };
    const auto group_t = usable(profiles_t, "T");
    const auto group_c = usable(profiles_c, "C");
    const std::size_t pop_t = populations.t.value_or(group_t.size());
    const std::size_t pop_c = populations.c.value_or(group_c.size());

    std::vector<PolarizationRow> rows;
    rows.reserve(emotions.size());
    for (const auto& sel : emotions) {
        PolarizationRow row{sel.label(), group_average(group_t, sel), group_average(group_c, sel)};
        const auto pol = polarization(row.avg_t, row.avg_c, pop_t, pop_c);
        row.d = pol.d;
        row.p = pol.p;
        rows.push_back(std::move(row));
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const PolarizationRow& a, const PolarizationRow& b) { return a.p > b.p; });
    return rows;
}

std::vector<PolarizationRow> polarization_table(std::span<const GenericProfile> profiles_t,
                                                std::span<const GenericProfile> profiles_c,
                                                const PopulationOverride& populations) {
    auto scored = [](std::span<const GenericProfile> in) {
        return static_cast<std::size_t>(std::count_if(
            in.begin(), in.end(), [](const GenericProfile& p) { return !p.degenerate; }));
    };
    const std::size_t scored_t = scored(profiles_t);
    const std::size_t scored_c = scored(profiles_c);
    if (scored_t == 0) throw InputError("group T has no scored documents");
    if (scored_c == 0) throw InputError("group C has no scored documents");
    const std::size_t pop_t = populations.t.value_or(scored_t);
    const std::size_t pop_c = populations.c.value_or(scored_c);

    auto label_mean = [](std::span<const GenericProfile> in, std::size_t i, const char* name) {
        detail::ExactSum sum;
        std::size_t n = 0;
        for (const auto& p : in) {
            if (i >= p.labels.size()) throw InputError("profiles disagree on benchmark labels");
            if (p.labels[i].degenerate) continue;
            sum.add(p.labels[i].score);
            ++n;
        }
        if (n == 0)
            throw InputError(std::string("label '") + in.front().labels[i].label +
                             "' was never scored in group " + name);
        return sum.mean(n);
    };

    std::vector<PolarizationRow> rows;
    const auto& labels = profiles_t.front().labels;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        PolarizationRow row{labels[i].label, label_mean(profiles_t, i, "T"),
                            label_mean(profiles_c, i, "C")};
        const auto pol = polarization(row.avg_t, row.avg_c, pop_t, pop_c);
        row.d = pol.d;
        row.p = pol.p;
        rows.push_back(std::move(row));
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const PolarizationRow& a, const PolarizationRow& b) { return a.p > b.p; });
    return rows;
}

bool EmotionClusters::is_polarizing(std::string_view emotion) const {
    return std::find(polarizing.begin(), polarizing.end(), emotion) != polarizing.end();
}

EmotionClusters cluster(std::span<const PolarizationRow> rows, double threshold) {
    if (rows.empty()) throw InputError("cluster: no polarization rows");
    EmotionClusters out;
    out.threshold = threshold;
    for (const auto& r : rows) (r.p >= threshold ? out.polarizing : out.non_polarizing).push_back(r.emotion);
    return out;
}

}  // namespace roomtheory
