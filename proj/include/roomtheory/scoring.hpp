#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "roomtheory/benchmark.hpp"
#include "roomtheory/corpus.hpp"
#include "roomtheory/room.hpp"

namespace roomtheory {

struct SimsetConfig {
    // Neighbours must be strictly more similar than this.
    double threshold = 0.7;
    // Cap on neighbours, the seed not included.
    std::size_t max_neighbors = 10;

    void validate() const;
};

// What to do with benchmark words (or chunks) the room has never seen.
enum class OovPolicy { error, skip };

struct SimsetMember {
    std::size_t index;
    std::string token;
    double weight;

    bool operator==(const SimsetMember&) const = default;
};

// A seed word and its similarity-weighted neighbours. members[0] is the seed
// with weight 1; the rest are sorted by descending weight.
struct Simset {
    std::string seed;
    std::vector<SimsetMember> members;

    std::size_t size() const noexcept { return members.size(); }
};

// Throws NotFound for an OOV seed.
Simset build_simset(const Room& room, std::string_view seed, const SimsetConfig& config);

// sum_j similarities[j] * weights[j] / n, accumulated in member order.
double simset_weighted_score(std::span<const double> similarities, std::span<const double> weights);

using EmotionGrid = std::array<std::array<double, kIntensities>, kChannels>;
using ConditionScores = std::array<double, kChannels>;

struct Coverage {
    std::size_t tokens_scored = 0;
    std::size_t tokens_oov = 0;
    std::size_t tokens_total = 0;

    bool operator==(const Coverage&) const = default;
};

struct EmotionProfile {
    std::string doc_id;
    EmotionGrid scores{};
    ConditionScores conditions{};
    Coverage coverage;
    // No token of the document was in the room; scores are all zero.
    bool degenerate = false;

    double score(std::size_t channel, Intensity level) const {
        return scores[channel][static_cast<std::size_t>(level)];
    }
};

ConditionScores condition_scores(const EmotionGrid& scores,
                                 const EmotionBenchmark& bench = plutchik());
ConditionScores condition_scores(const EmotionProfile& profile);

// Scores words against an arbitrary list of criterion vectors. Per-word score
// vectors are memoised; the cache is safe to populate from several threads.
class CriteriaScorer {
public:
    // A nullopt criterion scores 0 everywhere (the skip policy's placeholder).
    CriteriaScorer(const Room& room, std::vector<std::optional<std::vector<double>>> criteria,
                   SimsetConfig config);

    const Room& room() const noexcept { return *room_; }
    const SimsetConfig& config() const noexcept { return config_; }
    std::size_t criteria_count() const noexcept { return criteria_.size(); }

    // nullopt when the word is OOV.
    std::optional<std::vector<double>> word_scores(std::string_view word) const;

    struct DocumentScores {
        std::vector<double> mean;
        Coverage coverage;
        bool degenerate = false;
    };

    // Mean of the per-token score vectors over in-vocabulary tokens, each
    // occurrence counted. The mean is correctly rounded, so token order never
    // changes the result.
    DocumentScores score(std::span<const std::string> tokens) const;

private:
    std::shared_ptr<const std::vector<double>> scores_for(std::size_t index) const;

    const Room* room_;
    std::vector<std::optional<std::vector<double>>> criteria_;
    SimsetConfig config_;
    mutable std::shared_mutex mutex_;
    mutable std::unordered_map<std::size_t, std::shared_ptr<const std::vector<double>>> cache_;
};

// Document scoring against the emotion matrix. The room must outlive the
// scorer.
class EmotionScorer {
public:
    // With OovPolicy::error, throws MissingBenchmarkWords listing every
    // emotion word absent from the room.
    explicit EmotionScorer(const Room& room, const EmotionBenchmark& bench = plutchik(),
                           SimsetConfig config = {}, OovPolicy policy = OovPolicy::error);

    const EmotionBenchmark& benchmark() const noexcept { return *bench_; }
    const SimsetConfig& config() const noexcept { return core_.config(); }
    // Emotion words scored as 0 under OovPolicy::skip.
    const std::vector<std::string>& skipped_words() const noexcept { return skipped_; }

    std::optional<EmotionGrid> word_emotion(std::string_view word) const;
    EmotionProfile score(const TokenizedDocument& doc) const;
    Simset simset(std::string_view seed) const { return build_simset(core_.room(), seed, config()); }

private:
    const EmotionBenchmark* bench_;
    std::vector<std::string> skipped_;
    CriteriaScorer core_;
};

// Throws NotFound when `word` is OOV.
EmotionGrid word_emotion(const Room& room, std::string_view word,
                         const EmotionBenchmark& bench = plutchik(), const SimsetConfig& config = {},
                         OovPolicy policy = OovPolicy::error);

EmotionProfile score_document(const Room& room, const TokenizedDocument& doc,
                              const EmotionBenchmark& bench = plutchik(),
                              const SimsetConfig& config = {}, OovPolicy policy = OovPolicy::error);

// Stacked-bar view of a profile. Negative scores are floored at zero before
// the 24 cells are L1-normalised; raw values are kept alongside.
struct EmotionalDna {
    std::string doc_id;
    EmotionGrid raw{};
    EmotionGrid normalized{};
    std::array<double, kChannels> channel_totals{};
    std::array<double, kChannels> normalized_channel_totals{};
    // False when no cell is positive; normalized is then all zero.
    bool has_positive_mass = false;
};

// Throws InputError("no scored tokens") for a degenerate profile.
EmotionalDna emotional_dna(const EmotionProfile& profile);

struct LabelScore {
    std::string label;
    double score = 0.0;
    // Set when the document had no scored tokens or the label's chunk was
    // skipped as OOV.
    bool degenerate = false;
};

struct GenericProfile {
    std::string doc_id;
    std::vector<LabelScore> labels;
    Coverage coverage;
    bool degenerate = false;
};

// Scores against a flat keyword benchmark. A multi-word chunk is represented
// by the mean of its in-vocabulary token vectors.
class GenericScorer {
public:
    GenericScorer(const Room& room, Benchmark bench, SimsetConfig config = {},
                  OovPolicy policy = OovPolicy::error);

    const Benchmark& benchmark() const noexcept { return bench_; }
    const std::vector<std::string>& skipped_labels() const noexcept { return skipped_; }

    GenericProfile score(const TokenizedDocument& doc) const;

private:
    Benchmark bench_;
    std::vector<bool> skipped_mask_;
    std::vector<std::string> skipped_;
    CriteriaScorer core_;
};

GenericProfile score_against_generic(const Room& room, const TokenizedDocument& doc,
                                     const Benchmark& bench, const SimsetConfig& config = {},
                                     OovPolicy policy = OovPolicy::error);

}  // namespace roomtheory
