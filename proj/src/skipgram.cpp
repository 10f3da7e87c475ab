#include "roomtheory/skipgram.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "roomtheory/error.hpp"

namespace roomtheory {

namespace {

// Uniform integer in [0, n) from one 64-bit draw (multiply-shift), so the
// stream of draws is identical across standard library implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng()) * n) >> 64);
}

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double log_sigmoid(double x) {
    return x >= 0 ? -std::log1p(std::exp(-x)) : x - std::log1p(std::exp(x));
}

double sigmoid(double x) {
    if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

std::size_t draw_noise(std::mt19937_64& rng, const std::vector<double>& cdf) {
    const double u = uniform_unit(rng) * cdf.back();
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    return static_cast<std::size_t>(it - cdf.begin());
}

}  // namespace

void TrainConfig::validate() const {
    if (dim < 1) throw InputError("dim must be at least 1");
    if (window < 1) throw InputError("window must be at least 1");
    if (min_count < 1) throw InputError("min_count must be at least 1");
    if (epochs < 1) throw InputError("epochs must be at least 1");
    if (negatives < 1) throw InputError("negatives must be at least 1");
    if (!(learning_rate > 0.0) || !std::isfinite(learning_rate))
        throw InputError("learning_rate must be positive");
    if (!(min_learning_rate >= 0.0) || min_learning_rate > learning_rate)
        throw InputError("min_learning_rate must lie in [0, learning_rate]");
    if (!(sample >= 0.0)) throw InputError("sample must be non-negative");
    if (workers < 1) throw InputError("workers must be at least 1");
}

VocabStats build_vocab(std::span<const Sentence> corpus, std::size_t min_count) {
    if (min_count < 1) throw InputError("min_count must be at least 1");
    VocabStats stats;
    for (const auto& sentence : corpus)
        for (const auto& tok : sentence) {
            ++stats.counts[tok];
            ++stats.total_tokens;
        }
    if (stats.total_tokens == 0) throw InputError("empty corpus");

    for (const auto& [tok, n] : stats.counts)
        if (n >= min_count) stats.kept.push_back(tok);
    if (stats.kept.empty())
        throw InputError("corpus below min_count: no token occurs " + std::to_string(min_count) +
                         " times");
    std::sort(stats.kept.begin(), stats.kept.end(), [&](const auto& a, const auto& b) {
        const auto ca = stats.counts.at(a), cb = stats.counts.at(b);
        return ca != cb ? ca > cb : a < b;
    });
    for (std::size_t i = 0; i < stats.kept.size(); ++i) stats.index.emplace(stats.kept[i], i);
    return stats;
}

SkipGramTrainer::SkipGramTrainer(std::span<const Sentence> corpus, TrainConfig config)
    : config_(config) {
    config_.validate();
    vocab_ = build_vocab(corpus, config_.min_count);

    sentences_.reserve(corpus.size());
    for (const auto& sentence : corpus) {
        std::vector<std::uint32_t> ids;
        ids.reserve(sentence.size());
        for (const auto& tok : sentence) {
            auto it = vocab_.index.find(tok);
            if (it != vocab_.index.end()) ids.push_back(static_cast<std::uint32_t>(it->second));
        }
        words_per_epoch_ += ids.size();
        if (!ids.empty()) sentences_.push_back(std::move(ids));
    }

    noise_cdf_.resize(vocab_.kept.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < vocab_.kept.size(); ++i) {
        acc += std::pow(static_cast<double>(vocab_.counts.at(vocab_.kept[i])), 0.75);
        noise_cdf_[i] = acc;
    }

    const std::size_t dim = config_.dim;
    input_.resize(vocab_.kept.size() * dim);
    output_.assign(vocab_.kept.size() * dim, 0.0f);
    std::mt19937_64 rng(mix(config_.seed));
    for (auto& w : input_)
        w = static_cast<float>((uniform_unit(rng) - 0.5) / static_cast<double>(dim));
}

void SkipGramTrainer::train_range(std::size_t begin, std::size_t end, std::uint64_t stream) {
    const std::size_t dim = config_.dim;
    const double total = static_cast<double>(words_per_epoch_) * static_cast<double>(config_.epochs);
    const double lr0 = config_.learning_rate;
    const double lr_min = config_.min_learning_rate;
    const double sample_t = config_.sample * static_cast<double>(vocab_.total_tokens);

    std::mt19937_64 rng(stream);
    std::vector<float> grad(dim);
    std::vector<std::uint32_t> kept;
    std::uint64_t local_seen = 0;

    auto train_pair = [&](std::size_t center, std::size_t context, double lr) {
        float* in = &input_[center * dim];
        std::fill(grad.begin(), grad.end(), 0.0f);
        for (std::size_t d = 0; d <= config_.negatives; ++d) {
            std::size_t target = context;
            double label = 1.0;
            if (d > 0) {
                target = draw_noise(rng, noise_cdf_);
                if (target == context) continue;
                label = 0.0;
            }
            float* out = &output_[target * dim];
            double f = 0.0;
            for (std::size_t c = 0; c < dim; ++c) f += static_cast<double>(in[c]) * out[c];
            const auto g = static_cast<float>((label - sigmoid(f)) * lr);
            for (std::size_t c = 0; c < dim; ++c) grad[c] += g * out[c];
            for (std::size_t c = 0; c < dim; ++c) out[c] += g * in[c];
        }
        for (std::size_t c = 0; c < dim; ++c) in[c] += grad[c];
    };

    for (std::size_t s = begin; s < end; ++s) {
        const auto& sentence = sentences_[s];
        const double progress =
            total > 0 ? static_cast<double>(words_seen_ + local_seen) / total : 0.0;
        const double lr = std::max(lr_min, lr0 - (lr0 - lr_min) * progress);
        local_seen += sentence.size();

        const std::vector<std::uint32_t>* words = &sentence;
        if (sample_t > 0) {
            kept.clear();
            for (auto id : sentence) {
                const double f = static_cast<double>(vocab_.counts.at(vocab_.kept[id]));
                const double keep = (std::sqrt(f / sample_t) + 1.0) * sample_t / f;
                if (keep >= 1.0 || uniform_unit(rng) < keep) kept.push_back(id);
            }
            words = &kept;
        }

        const auto n = words->size();
        for (std::size_t i = 0; i < n; ++i) {
            const auto reach = 1 + static_cast<std::size_t>(uniform_below(rng, config_.window));
            const std::size_t lo = i >= reach ? i - reach : 0;
            const std::size_t hi = std::min(n - 1, i + reach);
            for (std::size_t j = lo; j <= hi; ++j)
                if (j != i) train_pair((*words)[i], (*words)[j], lr);
        }
    }
}

void SkipGramTrainer::run_epoch() {
    if (finished()) throw Error("training already finished");
    const std::uint64_t epoch_seed = mix(config_.seed ^ mix(epochs_done_ + 1));
    const std::size_t workers = std::min<std::size_t>(config_.workers, std::max<std::size_t>(1, sentences_.size()));
    if (workers == 1) {
        train_range(0, sentences_.size(), epoch_seed);
    } else {
        // Hogwild: workers share the weight arrays without locking.
        std::vector<std::jthread> pool;
        const std::size_t chunk = (sentences_.size() + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t b = std::min(sentences_.size(), w * chunk);
            const std::size_t e = std::min(sentences_.size(), b + chunk);
            pool.emplace_back([this, b, e, seed = mix(epoch_seed + w)] { train_range(b, e, seed); });
        }
    }
    words_seen_ += words_per_epoch_;
    ++epochs_done_;
}

double SkipGramTrainer::probe_loss(std::span<const ProbeExample> probe) const {
    if (probe.empty()) return 0.0;
    const std::size_t dim = config_.dim;
    auto dot = [&](std::size_t a, std::size_t b) {
        double s = 0.0;
        for (std::size_t c = 0; c < dim; ++c)
            s += static_cast<double>(input_[a * dim + c]) * output_[b * dim + c];
        return s;
    };
    double total = 0.0;
    for (const auto& ex : probe) {
        double loss = -log_sigmoid(dot(ex.center, ex.context));
        for (auto n : ex.negatives) loss -= log_sigmoid(-dot(ex.center, n));
        total += loss;
    }
    return total / static_cast<double>(probe.size());
}

std::vector<ProbeExample> SkipGramTrainer::make_probe_batch(std::size_t count,
                                                            std::uint64_t seed) const {
    std::vector<std::size_t> usable;
    for (std::size_t s = 0; s < sentences_.size(); ++s)
        if (sentences_[s].size() >= 2) usable.push_back(s);
    std::vector<ProbeExample> out;
    if (usable.empty()) return out;
    std::mt19937_64 rng(mix(seed));
    out.reserve(count);
    while (out.size() < count) {
        const auto& sentence = sentences_[usable[uniform_below(rng, usable.size())]];
        const std::size_t n = sentence.size();
        const std::size_t i = uniform_below(rng, n);
        const std::size_t reach = 1 + uniform_below(rng, config_.window);
        const std::size_t lo = i >= reach ? i - reach : 0;
        const std::size_t hi = std::min(n - 1, i + reach);
        std::size_t j = lo + uniform_below(rng, hi - lo);
        if (j >= i) ++j;
        ProbeExample ex{sentence[i], sentence[j], {}};
        while (ex.negatives.size() < config_.negatives) {
            const auto neg = draw_noise(rng, noise_cdf_);
            if (neg != ex.context) ex.negatives.push_back(neg);
            else if (vocab_.kept.size() == 1) break;
        }
        out.push_back(std::move(ex));
    }
    return out;
}

Room SkipGramTrainer::to_room() const {
    return Room(vocab_.kept, input_, config_.dim,
                TrainProvenance{config_.window, config_.min_count, epochs_done_, config_.seed});
}

Room train_skipgram(std::span<const Sentence> corpus, const TrainConfig& config) {
    SkipGramTrainer trainer(corpus, config);
    while (!trainer.finished()) trainer.run_epoch();
    return trainer.to_room();
}

}  // namespace roomtheory
