#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "roomtheory/corpus.hpp"
#include "roomtheory/error.hpp"
#include "roomtheory/skipgram.hpp"
#include "synthetic.hpp"

using namespace roomtheory;

namespace {

TrainConfig small_config(std::uint64_t seed = 1) {
    TrainConfig c;
    c.dim = 24;
    c.window = 3;
    c.epochs = 5;
    c.seed = seed;
    return c;
}

std::string bytes_of(const Room& room) {
    std::ostringstream out;
    write_room_binary(room, out);
    return out.str();
}

}  // namespace

TEST(BuildVocab, CountsAndThreshold) {
    std::vector<Sentence> corpus{{"a", "b", "a"}};
    auto v = build_vocab(corpus, 2);
    EXPECT_EQ(v.kept, (std::vector<std::string>{"a"}));
    EXPECT_EQ(v.count("a"), 2u);
    EXPECT_EQ(v.count("b"), 1u);
    EXPECT_EQ(v.total_tokens, 3u);
}

TEST(BuildVocab, TiesAreLexicographic) {
    std::vector<Sentence> corpus{{"b", "a"}, {"b", "a"}};
    EXPECT_EQ(build_vocab(corpus, 2).kept, (std::vector<std::string>{"a", "b"}));
}

TEST(BuildVocab, Errors) {
    std::vector<Sentence> empty;
    EXPECT_THROW(build_vocab(empty, 1), InputError);
    std::vector<Sentence> blank{{}, {}};
    EXPECT_THROW(build_vocab(blank, 1), InputError);
    std::vector<Sentence> sparse{{"a", "b"}};
    try {
        build_vocab(sparse, 2);
        FAIL();
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("corpus below min_count"), std::string::npos);
    }
}

TEST(BuildVocab, MatchesFrequencyCountOnFixture) {
    auto corpus = load_token_corpus(std::string(ROOMTHEORY_FIXTURES) + "/news_corpus.txt");
    ASSERT_EQ(corpus.size(), 1000u);
    std::map<std::string, std::uint64_t> freq;
    for (const auto& s : corpus)
        for (const auto& t : s) ++freq[t];
    std::vector<std::pair<std::uint64_t, std::string>> order;
    for (const auto& [t, n] : freq)
        if (n >= 2) order.emplace_back(n, t);
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    std::vector<std::string> expected;
    for (const auto& p : order) expected.push_back(p.second);

    auto v = build_vocab(corpus, 2);
    EXPECT_EQ(v.kept, expected);
    for (std::size_t i = 0; i < v.kept.size(); ++i) EXPECT_EQ(v.index.at(v.kept[i]), i);
    for (const auto& [t, n] : freq) EXPECT_EQ(v.count(t), n);
}

TEST(TrainConfig, ValidatesEveryField) {
    auto bad = [](auto mutate) {
        TrainConfig c;
        mutate(c);
        EXPECT_THROW(c.validate(), InputError);
    };
    bad([](TrainConfig& c) { c.dim = 0; });
    bad([](TrainConfig& c) { c.window = 0; });
    bad([](TrainConfig& c) { c.min_count = 0; });
    bad([](TrainConfig& c) { c.epochs = 0; });
    bad([](TrainConfig& c) { c.negatives = 0; });
    bad([](TrainConfig& c) { c.learning_rate = 0; });
    bad([](TrainConfig& c) { c.workers = 0; });
    EXPECT_NO_THROW(TrainConfig{}.validate());
}

TEST(TrainSkipgram, RepeatedPairVocabulary) {
    std::vector<Sentence> corpus(50, Sentence{"x", "y"});
    Room room = train_skipgram(corpus, small_config());
    std::vector<std::string> toks = room.tokens();
    std::sort(toks.begin(), toks.end());
    EXPECT_EQ(toks, (std::vector<std::string>{"x", "y"}));
    EXPECT_EQ(room.dim(), 24u);
}

TEST(TrainSkipgram, OutputVectorsFiniteAndNonzero) {
    auto corpus = synthetic::planted_pairs(3, 600);
    Room room = train_skipgram(corpus.sentences, small_config(3));
    for (std::size_t i = 0; i < room.size(); ++i) {
        double n = 0;
        for (float v : room.row(i)) {
            ASSERT_TRUE(std::isfinite(v));
            n += double(v) * v;
        }
        EXPECT_GT(n, 0.0) << room.token(i);
    }
    const auto* prov = std::get_if<TrainProvenance>(&room.meta());
    ASSERT_NE(prov, nullptr);
    EXPECT_EQ(prov->window, 3u);
    EXPECT_EQ(prov->seed, 3u);
}

TEST(TrainSkipgram, PlantedPairBeatsUnrelatedWord) {
    int wins = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto corpus = synthetic::planted_pairs(seed);
        Room room = train_skipgram(corpus.sentences, small_config(seed));
        const double ab = cosine(*room.lookup("alpha"), *room.lookup("beta"));
        const double ag = cosine(*room.lookup("alpha"), *room.lookup("gamma"));
        wins += ab > ag;
    }
    EXPECT_EQ(wins, 5);
}

TEST(TrainSkipgram, SingleWorkerIsBitReproducible) {
    auto corpus = synthetic::planted_pairs(11, 500);
    auto cfg = small_config(42);
    cfg.sample = 1e-3;
    EXPECT_EQ(bytes_of(train_skipgram(corpus.sentences, cfg)),
              bytes_of(train_skipgram(corpus.sentences, cfg)));
    auto other = cfg;
    other.seed = 43;
    EXPECT_NE(bytes_of(train_skipgram(corpus.sentences, cfg)),
              bytes_of(train_skipgram(corpus.sentences, other)));
}

TEST(TrainSkipgram, ProbeLossImproves) {
    auto corpus = synthetic::planted_pairs(5, 1500);
    auto cfg = small_config(5);
    cfg.epochs = 6;
    SkipGramTrainer trainer(corpus.sentences, cfg);
    const auto probe = trainer.make_probe_batch(2000, 99);
    ASSERT_EQ(probe.size(), 2000u);
    const double before = trainer.probe_loss(probe);
    trainer.run_epoch();
    const double first = trainer.probe_loss(probe);
    EXPECT_LT(first, before);
    while (!trainer.finished()) {
        trainer.run_epoch();
        if (trainer.epochs_completed() >= 3) EXPECT_LE(trainer.probe_loss(probe), first * 1.05);
    }
    EXPECT_EQ(trainer.epochs_completed(), 6u);
}

TEST(TrainSkipgram, SteppedTrainerMatchesOneShot) {
    auto corpus = synthetic::planted_pairs(8, 300);
    auto cfg = small_config(8);
    SkipGramTrainer trainer(corpus.sentences, cfg);
    while (!trainer.finished()) trainer.run_epoch();
    EXPECT_TRUE(trainer.to_room().same_space(train_skipgram(corpus.sentences, cfg)));
}

TEST(TrainSkipgram, MultipleWorkersStillProduceAUsableRoom) {
    auto corpus = synthetic::planted_pairs(9, 800);
    auto cfg = small_config(9);
    cfg.workers = 3;
    Room room = train_skipgram(corpus.sentences, cfg);
    EXPECT_EQ(room.size(), build_vocab(corpus.sentences, cfg.min_count).kept.size());
    for (float v : room.matrix()) ASSERT_TRUE(std::isfinite(v));
}
