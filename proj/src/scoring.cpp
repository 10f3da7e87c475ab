#include "roomtheory/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "roomtheory/detail/exact_sum.hpp"
#include "roomtheory/error.hpp"

namespace roomtheory {

void SimsetConfig::validate() const {
    if (!(threshold >= 0.0 && threshold <= 1.0))
        throw InputError("simset threshold must lie in [0, 1]");
}

Simset build_simset(const Room& room, std::string_view seed, const SimsetConfig& config) {
    config.validate();
    auto idx = room.index_of(seed);
    if (!idx) throw NotFound("token not in room: '" + std::string(seed) + "'");
    Simset out{std::string(seed), {{*idx, std::string(seed), 1.0}}};
    for (auto& n : nearest(room, seed, config.max_neighbors, config.threshold))
        out.members.push_back({n.index, std::move(n.token), n.score});
    return out;
}

double simset_weighted_score(std::span<const double> similarities, std::span<const double> weights) {
    if (similarities.size() != weights.size())
        throw DimensionError("simset score: similarities and weights differ in length");
    if (similarities.empty()) throw InputError("simset score: empty simset");
    double sum = 0.0;
    for (std::size_t j = 0; j < similarities.size(); ++j) sum += similarities[j] * weights[j];
    return sum / static_cast<double>(similarities.size());
}

ConditionScores condition_scores(const EmotionGrid& scores, const EmotionBenchmark& bench) {
    ConditionScores out{};
    constexpr auto mid = static_cast<std::size_t>(Intensity::mid);
    for (std::size_t i = 0; i < kChannels; ++i) {
        const auto& c = bench.conditions[i];
        out[i] = scores[c.first][mid] + scores[c.second][mid];
    }
    return out;
}

ConditionScores condition_scores(const EmotionProfile& profile) {
    return condition_scores(profile.scores);
}

// ---------------------------------------------------------------------------

CriteriaScorer::CriteriaScorer(const Room& room,
                               std::vector<std::optional<std::vector<double>>> criteria,
                               SimsetConfig config)
    : room_(&room), criteria_(std::move(criteria)), config_(config) {
    config_.validate();
    for (const auto& c : criteria_)
        if (c && c->size() != room.dim())
            throw DimensionError("criterion vector does not match room dimension");
}

std::shared_ptr<const std::vector<double>> CriteriaScorer::scores_for(std::size_t index) const {
    {
        std::shared_lock lock(mutex_);
        if (auto it = cache_.find(index); it != cache_.end()) return it->second;
    }
    const Simset simset = build_simset(*room_, room_->token(index), config_);
    std::vector<double> weights(simset.size());
    std::transform(simset.members.begin(), simset.members.end(), weights.begin(),
                   [](const SimsetMember& m) { return m.weight; });

    auto scores = std::make_shared<std::vector<double>>(criteria_.size(), 0.0);
    std::vector<double> sims(simset.size());
    for (std::size_t c = 0; c < criteria_.size(); ++c) {
        if (!criteria_[c]) continue;
        for (std::size_t j = 0; j < simset.size(); ++j)
            sims[j] = cosine(std::span<const double>(*criteria_[c]),
                             room_->row(simset.members[j].index));
        (*scores)[c] = simset_weighted_score(sims, weights);
    }

    std::unique_lock lock(mutex_);
    return cache_.try_emplace(index, std::move(scores)).first->second;
}

std::optional<std::vector<double>> CriteriaScorer::word_scores(std::string_view word) const {
    auto idx = room_->index_of(word);
    if (!idx) return std::nullopt;
    return *scores_for(*idx);
}

CriteriaScorer::DocumentScores CriteriaScorer::score(std::span<const std::string> tokens) const {
    DocumentScores out;
    out.mean.assign(criteria_.size(), 0.0);
    out.coverage.tokens_total = tokens.size();

    std::vector<std::shared_ptr<const std::vector<double>>> rows;
    rows.reserve(tokens.size());
    for (const auto& tok : tokens) {
        if (auto idx = room_->index_of(tok))
            rows.push_back(scores_for(*idx));
        else
            ++out.coverage.tokens_oov;
    }
    out.coverage.tokens_scored = rows.size();
    if (rows.empty()) {
        out.degenerate = true;
        return out;
    }
    for (std::size_t c = 0; c < criteria_.size(); ++c) {
        detail::ExactSum sum;
        for (const auto& r : rows) sum.add((*r)[c]);
        out.mean[c] = sum.mean(rows.size());
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::optional<std::vector<double>>> emotion_criteria(const Room& room,
                                                                 const EmotionBenchmark& bench,
                                                                 OovPolicy policy,
                                                                 std::vector<std::string>& missing) {
    std::vector<std::optional<std::vector<double>>> out;
    for (const auto& row : bench.matrix)
        for (auto word : row) {
            if (auto v = room.lookup(word))
                out.emplace_back(std::vector<double>(v->begin(), v->end()));
            else {
                out.emplace_back(std::nullopt);
                missing.emplace_back(word);
            }
        }
    if (!missing.empty() && policy == OovPolicy::error) throw MissingBenchmarkWords(missing);
    return out;
}

EmotionGrid to_grid(const std::vector<double>& flat) {
    EmotionGrid g{};
    for (std::size_t ch = 0; ch < kChannels; ++ch)
        for (std::size_t in = 0; in < kIntensities; ++in) g[ch][in] = flat[ch * kIntensities + in];
    return g;
}

}  // namespace

EmotionScorer::EmotionScorer(const Room& room, const EmotionBenchmark& bench, SimsetConfig config,
                             OovPolicy policy)
    : bench_(&bench), core_(room, emotion_criteria(room, bench, policy, skipped_), config) {}

std::optional<EmotionGrid> EmotionScorer::word_emotion(std::string_view word) const {
    auto flat = core_.word_scores(word);
    if (!flat) return std::nullopt;
    return to_grid(*flat);
}

EmotionProfile EmotionScorer::score(const TokenizedDocument& doc) const {
    auto result = core_.score(doc.tokens);
    EmotionProfile p;
    p.doc_id = doc.id;
    p.scores = to_grid(result.mean);
    p.conditions = condition_scores(p.scores, *bench_);
    p.coverage = result.coverage;
    p.degenerate = result.degenerate;
    return p;
}

EmotionGrid word_emotion(const Room& room, std::string_view word, const EmotionBenchmark& bench,
                         const SimsetConfig& config, OovPolicy policy) {
    if (!room.contains(word)) throw NotFound("token not in room: '" + std::string(word) + "'");
    return *EmotionScorer(room, bench, config, policy).word_emotion(word);
}

EmotionProfile score_document(const Room& room, const TokenizedDocument& doc,
                              const EmotionBenchmark& bench, const SimsetConfig& config,
                              OovPolicy policy) {
    return EmotionScorer(room, bench, config, policy).score(doc);
}

EmotionalDna emotional_dna(const EmotionProfile& profile) {
    if (profile.degenerate) throw InputError("no scored tokens in document '" + profile.doc_id + "'");
    EmotionalDna dna;
    dna.doc_id = profile.doc_id;
    dna.raw = profile.scores;
    detail::ExactSum mass;
    for (std::size_t ch = 0; ch < kChannels; ++ch) {
        detail::ExactSum channel;
        for (double v : profile.scores[ch]) {
            channel.add(v);
            mass.add(std::max(0.0, v));
        }
        dna.channel_totals[ch] = channel.value();
    }
    const double total = mass.value();
    dna.has_positive_mass = total > 0.0;
    if (!dna.has_positive_mass) return dna;
    for (std::size_t ch = 0; ch < kChannels; ++ch) {
        detail::ExactSum channel;
        for (std::size_t in = 0; in < kIntensities; ++in) {
            dna.normalized[ch][in] = std::max(0.0, profile.scores[ch][in]) / total;
            channel.add(dna.normalized[ch][in]);
        }
        dna.normalized_channel_totals[ch] = channel.value();
    }
    return dna;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::optional<std::vector<double>>> chunk_criteria(const Room& room,
                                                               const Benchmark& bench,
                                                               OovPolicy policy,
                                                               std::vector<std::string>& skipped,
                                                               std::vector<bool>& mask) {
    std::vector<std::optional<std::vector<double>>> out;
    std::vector<std::string> missing_words;
    for (const auto& entry : bench.entries) {
        std::vector<double> sum(room.dim(), 0.0);
        std::size_t found = 0;
        for (const auto& tok : entry.chunk) {
            auto v = room.lookup(tok);
            if (!v) continue;
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += (*v)[i];
            ++found;
        }
        if (found == 0) {
            out.emplace_back(std::nullopt);
            mask.push_back(true);
            skipped.push_back(entry.label);
            missing_words.insert(missing_words.end(), entry.chunk.begin(), entry.chunk.end());
            continue;
        }
        for (auto& x : sum) x /= static_cast<double>(found);
        out.emplace_back(std::move(sum));
        mask.push_back(false);
    }
    if (!skipped.empty() && policy == OovPolicy::error) throw MissingBenchmarkWords(missing_words);
    return out;
}

}  // namespace

GenericScorer::GenericScorer(const Room& room, Benchmark bench, SimsetConfig config,
                             OovPolicy policy)
    : bench_(std::move(bench)),
      core_(room, chunk_criteria(room, bench_, policy, skipped_, skipped_mask_), config) {}

GenericProfile GenericScorer::score(const TokenizedDocument& doc) const {
    auto result = core_.score(doc.tokens);
    GenericProfile p;
    p.doc_id = doc.id;
    p.coverage = result.coverage;
    p.degenerate = result.degenerate;
    for (std::size_t i = 0; i < bench_.entries.size(); ++i)
        p.labels.push_back(
            {bench_.entries[i].label, result.mean[i], result.degenerate || skipped_mask_[i]});
    return p;
}

GenericProfile score_against_generic(const Room& room, const TokenizedDocument& doc,
                                     const Benchmark& bench, const SimsetConfig& config,
                                     OovPolicy policy) {
    return GenericScorer(room, bench, config, policy).score(doc);
}

}  // namespace roomtheory
