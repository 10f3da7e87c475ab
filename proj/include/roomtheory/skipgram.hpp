#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "roomtheory/room.hpp"

namespace roomtheory {

using Sentence = std::vector<std::string>;

struct TrainConfig {
    std::size_t dim = 300;
    std::size_t window = 5;
    std::size_t min_count = 2;
    std::size_t epochs = 5;
    std::size_t negatives = 5;
    double learning_rate = 0.025;
    double min_learning_rate = 1e-4;
    // Frequent-word subsampling threshold; 0 disables it.
    double sample = 0.0;
    std::uint64_t seed = 1;
    // More than one worker trains lock-free and is not reproducible.
    std::size_t workers = 1;

    // Throws InputError naming the first offending field.
    void validate() const;
};

struct VocabStats {
    std::unordered_map<std::string, std::uint64_t> counts;
    std::uint64_t total_tokens = 0;
    // Kept tokens by descending frequency, ties lexicographic.
    std::vector<std::string> kept;
    std::unordered_map<std::string, std::size_t> index;

    std::uint64_t count(const std::string& token) const {
        auto it = counts.find(token);
        return it == counts.end() ? 0 : it->second;
    }
};

VocabStats build_vocab(std::span<const Sentence> corpus, std::size_t min_count);

// One positive pair with its frozen noise words, for loss probing.
struct ProbeExample {
    std::size_t center;
    std::size_t context;
    std::vector<std::size_t> negatives;
};

// Skip-gram with negative sampling. Each center word's input vector is
// trained to predict its window contexts against `negatives` noise words
// drawn from unigram^0.75, with the step size decayed linearly from
// learning_rate to min_learning_rate over the whole run.
class SkipGramTrainer {
public:
    SkipGramTrainer(std::span<const Sentence> corpus, TrainConfig config);

    void run_epoch();
    std::size_t epochs_completed() const noexcept { return epochs_done_; }
    bool finished() const noexcept { return epochs_done_ >= config_.epochs; }

    const VocabStats& vocab() const noexcept { return vocab_; }
    const TrainConfig& config() const noexcept { return config_; }

    // Mean negative-sampling loss over the probe batch under current weights.
    double probe_loss(std::span<const ProbeExample> probe) const;

    // Draws `count` positive pairs with their noise words from the corpus.
    std::vector<ProbeExample> make_probe_batch(std::size_t count, std::uint64_t seed) const;

    Room to_room() const;

private:
    void train_range(std::size_t begin, std::size_t end, std::uint64_t stream);

    TrainConfig config_;
    VocabStats vocab_;
    std::vector<std::vector<std::uint32_t>> sentences_;
    std::vector<double> noise_cdf_;
    std::vector<float> input_;
    std::vector<float> output_;
    std::uint64_t words_per_epoch_ = 0;
    std::uint64_t words_seen_ = 0;
    std::size_t epochs_done_ = 0;
};

Room train_skipgram(std::span<const Sentence> corpus, const TrainConfig& config);

}  // namespace roomtheory
