#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "roomtheory/benchmark.hpp"
#include "roomtheory/corpus.hpp"
#include "roomtheory/error.hpp"
#include "roomtheory/polarization.hpp"
#include "roomtheory/room.hpp"
#include "roomtheory/scoring.hpp"
#include "roomtheory/skipgram.hpp"

namespace py = pybind11;
using namespace roomtheory;

namespace {

RoomFormat room_format(const std::string& name) {
    if (name == "text") return RoomFormat::text;
    if (name == "binary") return RoomFormat::binary;
    throw InputError("unknown room format '" + name + "'");
}

Room make_room(std::vector<std::string> tokens, const std::vector<std::vector<float>>& rows) {
    if (rows.size() != tokens.size()) throw DimensionError("one row per token is required");
    const std::size_t dim = rows.empty() ? 0 : rows.front().size();
    std::vector<float> flat;
    flat.reserve(rows.size() * dim);
    for (const auto& r : rows) {
        if (r.size() != dim) throw DimensionError("rows differ in length");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return Room(std::move(tokens), std::move(flat), dim);
}

std::vector<std::vector<double>> grid_to_lists(const EmotionGrid& g) {
    std::vector<std::vector<double>> out;
    for (const auto& row : g) out.emplace_back(row.begin(), row.end());
    return out;
}

py::dict profile_scores(const EmotionProfile& p) {
    py::dict d;
    const auto& b = plutchik();
    for (std::size_t ch = 0; ch < kChannels; ++ch)
        for (std::size_t in = 0; in < kIntensities; ++in)
            d[py::str(std::string(b.matrix[ch][in]))] = p.scores[ch][in];
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Room-based document scoring: embeddings, emotion benchmarks, polarization";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", input_error.ptr());
    py::register_exception<NotFound>(m, "NotFound", input_error.ptr());
    py::register_exception<DomainError>(m, "DomainError", input_error.ptr());
    py::register_exception<DimensionError>(m, "DimensionError", input_error.ptr());
    py::register_exception<MissingBenchmarkWords>(m, "MissingBenchmarkWords", input_error.ptr());
    (void)error;

    // ---- room ------------------------------------------------------------
    py::class_<Room>(m, "Room")
        .def(py::init(&make_room), py::arg("tokens"), py::arg("vectors"))
        .def_property_readonly("size", &Room::size)
        .def_property_readonly("dim", &Room::dim)
        .def_property_readonly("tokens", &Room::tokens)
        .def("__len__", &Room::size)
        .def("__contains__", &Room::contains)
        .def("lookup",
             [](const Room& r, const std::string& token) -> std::optional<std::vector<float>> {
                 auto v = r.lookup(token);
                 if (!v) return std::nullopt;
                 return std::vector<float>(v->begin(), v->end());
             })
        .def("save", [](const Room& r, const std::filesystem::path& path,
                        const std::string& format) { save_room(r, path, room_format(format)); },
             py::arg("path"), py::arg("format") = "binary")
        .def_static("load",
                    [](const std::filesystem::path& path, std::optional<std::string> format) {
                        return format ? load_room(path, room_format(*format)) : load_room(path);
                    },
                    py::arg("path"), py::arg("format") = py::none())
        .def("same_space", &Room::same_space);

    m.def("cosine",
          [](const std::vector<double>& a, const std::vector<double>& b) {
              return cosine(std::span<const double>(a), std::span<const double>(b));
          },
          py::arg("a"), py::arg("b"));
    m.def("nearest",
          [](const Room& room, const std::string& seed, std::size_t k, double threshold) {
              std::vector<std::pair<std::string, double>> out;
              for (auto& n : nearest(room, seed, k, threshold)) out.emplace_back(n.token, n.score);
              return out;
          },
          py::arg("room"), py::arg("seed"), py::arg("k"), py::arg("threshold"));

    // ---- training ----------------------------------------------------------
    py::class_<TrainConfig>(m, "TrainConfig")
        .def(py::init<>())
        .def_readwrite("dim", &TrainConfig::dim)
        .def_readwrite("window", &TrainConfig::window)
        .def_readwrite("min_count", &TrainConfig::min_count)
        .def_readwrite("epochs", &TrainConfig::epochs)
        .def_readwrite("negatives", &TrainConfig::negatives)
        .def_readwrite("learning_rate", &TrainConfig::learning_rate)
        .def_readwrite("min_learning_rate", &TrainConfig::min_learning_rate)
        .def_readwrite("sample", &TrainConfig::sample)
        .def_readwrite("seed", &TrainConfig::seed)
        .def_readwrite("workers", &TrainConfig::workers);

    m.def("build_vocab",
          [](const std::vector<Sentence>& corpus, std::size_t min_count) {
              auto v = build_vocab(corpus, min_count);
              return py::make_tuple(v.kept, v.counts, v.total_tokens);
          },
          py::arg("corpus"), py::arg("min_count"),
          "Returns (kept tokens in index order, counts, total tokens).");
    m.def("train_skipgram",
          [](const std::vector<Sentence>& corpus, const TrainConfig& cfg) {
              py::gil_scoped_release release;
              return train_skipgram(corpus, cfg);
          },
          py::arg("corpus"), py::arg("config"));

    // ---- corpus ------------------------------------------------------------
    m.def("clean_text", [](const std::string& text) { return clean_text(text); }, py::arg("text"));
    m.def("extract_hashtags", &extract_hashtags, py::arg("text"));

    py::class_<HashtagSets>(m, "HashtagSets")
        .def(py::init<>())
        .def_readwrite("pro_trump", &HashtagSets::pro_trump)
        .def_readwrite("anti_clinton", &HashtagSets::anti_clinton)
        .def_readwrite("pro_clinton", &HashtagSets::pro_clinton)
        .def_readwrite("anti_trump", &HashtagSets::anti_trump)
        .def("validate", &HashtagSets::validate);
    m.def("default_hashtag_sets", &default_hashtag_sets, py::return_value_policy::copy);

    m.def("classify",
          [](const std::string& text, const HashtagSets& sets) {
              switch (classify(extract_hashtags(text), sets)) {
                  case Side::t: return "T";
                  case Side::c: return "C";
                  case Side::ambiguous: return "ambiguous";
                  case Side::unclassified: break;
              }
              return "unclassified";
          },
          py::arg("text"), py::arg("sets"));

    // ---- benchmarks ----------------------------------------------------------
    m.def("plutchik_matrix", [] {
        std::vector<std::vector<std::string>> out;
        for (const auto& row : plutchik().matrix) out.emplace_back(row.begin(), row.end());
        return out;
    });
    m.def("plutchik_conditions", [] {
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (const auto& c : plutchik().conditions)
            out.emplace_back(c.first_word, c.second_word, c.name);
        return out;
    });
    m.def("load_benchmark",
          [](const std::filesystem::path& path) {
              std::vector<std::pair<std::string, std::vector<std::string>>> out;
              for (auto& e : load_benchmark(path).entries) out.emplace_back(e.label, e.chunk);
              return out;
          },
          py::arg("path"));

    // ---- scoring -------------------------------------------------------------
    py::class_<SimsetConfig>(m, "SimsetConfig")
        .def(py::init([](double threshold, std::size_t max_neighbors) {
                 return SimsetConfig{threshold, max_neighbors};
             }),
             py::arg("threshold") = 0.7, py::arg("max_neighbors") = 10)
        .def_readwrite("threshold", &SimsetConfig::threshold)
        .def_readwrite("max_neighbors", &SimsetConfig::max_neighbors);

    m.def("build_simset",
          [](const Room& room, const std::string& seed, const SimsetConfig& cfg) {
              std::vector<std::pair<std::string, double>> out;
              for (auto& mbr : build_simset(room, seed, cfg).members) out.emplace_back(mbr.token, mbr.weight);
              return out;
          },
          py::arg("room"), py::arg("seed"), py::arg("config") = SimsetConfig{});
    m.def("simset_weighted_score",
          [](const std::vector<double>& sims, const std::vector<double>& weights) {
              return simset_weighted_score(sims, weights);
          },
          py::arg("similarities"), py::arg("weights"));

    py::class_<Coverage>(m, "Coverage")
        .def_readonly("tokens_scored", &Coverage::tokens_scored)
        .def_readonly("tokens_oov", &Coverage::tokens_oov)
        .def_readonly("tokens_total", &Coverage::tokens_total);

    py::class_<EmotionProfile>(m, "EmotionProfile")
        .def_readonly("doc_id", &EmotionProfile::doc_id)
        .def_property_readonly("matrix", [](const EmotionProfile& p) { return grid_to_lists(p.scores); })
        .def_property_readonly("scores", &profile_scores)
        .def_property_readonly("conditions",
                               [](const EmotionProfile& p) {
                                   py::dict d;
                                   for (std::size_t i = 0; i < kChannels; ++i)
                                       d[py::str(std::string(plutchik().conditions[i].name))] = p.conditions[i];
                                   return d;
                               })
        .def_readonly("coverage", &EmotionProfile::coverage)
        .def_readonly("degenerate", &EmotionProfile::degenerate);

    py::class_<EmotionScorer>(m, "EmotionScorer")
        .def(py::init([](const Room& room, const SimsetConfig& cfg, bool skip_missing) {
                 return std::make_unique<EmotionScorer>(room, plutchik(), cfg,
                                                        skip_missing ? OovPolicy::skip : OovPolicy::error);
             }),
             py::arg("room"), py::arg("config") = SimsetConfig{}, py::arg("skip_missing") = false,
             py::keep_alive<1, 2>())
        .def_property_readonly("skipped_words", &EmotionScorer::skipped_words)
        .def("word_emotion",
             [](const EmotionScorer& s, const std::string& word) -> std::optional<std::vector<std::vector<double>>> {
                 auto g = s.word_emotion(word);
                 if (!g) return std::nullopt;
                 return grid_to_lists(*g);
             })
        .def("score",
             [](const EmotionScorer& s, const std::vector<std::string>& tokens, const std::string& doc_id) {
                 return s.score(TokenizedDocument{doc_id, tokens, tokens.empty()});
             },
             py::arg("tokens"), py::arg("doc_id") = "");

    py::class_<EmotionalDna>(m, "EmotionalDna")
        .def_readonly("doc_id", &EmotionalDna::doc_id)
        .def_property_readonly("raw", [](const EmotionalDna& d) { return grid_to_lists(d.raw); })
        .def_property_readonly("normalized", [](const EmotionalDna& d) { return grid_to_lists(d.normalized); })
        .def_readonly("channel_totals", &EmotionalDna::channel_totals)
        .def_readonly("normalized_channel_totals", &EmotionalDna::normalized_channel_totals)
        .def_readonly("has_positive_mass", &EmotionalDna::has_positive_mass);
    m.def("emotional_dna", &emotional_dna, py::arg("profile"));

    m.def("score_generic",
          [](const Room& room, const std::vector<std::pair<std::string, std::vector<std::string>>>& entries,
             const std::vector<std::string>& tokens, const SimsetConfig& cfg, bool skip_missing) {
              Benchmark b;
              for (const auto& [label, chunk] : entries) b.entries.push_back({label, chunk});
              auto p = score_against_generic(room, TokenizedDocument{"", tokens, tokens.empty()}, b, cfg,
                                             skip_missing ? OovPolicy::skip : OovPolicy::error);
              py::dict d;
              for (const auto& l : p.labels)
                  d[py::str(l.label)] = l.degenerate ? py::object(py::none()) : py::object(py::float_(l.score));
              return d;
          },
          py::arg("room"), py::arg("benchmark"), py::arg("tokens"), py::arg("config") = SimsetConfig{},
          py::arg("skip_missing") = false);

    // ---- polarization --------------------------------------------------------
    m.def("polarization",
          [](double avg_t, double avg_c, std::size_t pop_t, std::size_t pop_c) {
              auto r = polarization(avg_t, avg_c, pop_t, pop_c);
              return py::make_tuple(r.d, r.p);
          },
          py::arg("avg_t"), py::arg("avg_c"), py::arg("pop_t"), py::arg("pop_c"),
          "Returns (d, P).");

    py::class_<PolarizationRow>(m, "PolarizationRow")
        .def_readonly("emotion", &PolarizationRow::emotion)
        .def_readonly("avg_t", &PolarizationRow::avg_t)
        .def_readonly("avg_c", &PolarizationRow::avg_c)
        .def_readonly("d", &PolarizationRow::d)
        .def_readonly("p", &PolarizationRow::p)
        .def("__repr__", [](const PolarizationRow& r) {
            return "PolarizationRow(" + r.emotion + ", d=" + std::to_string(r.d) + ", P=" + std::to_string(r.p) + ")";
        });

    m.def("polarization_table",
          [](const std::vector<EmotionProfile>& t, const std::vector<EmotionProfile>& c,
             const std::vector<std::string>& emotions, std::optional<std::size_t> pop_t,
             std::optional<std::size_t> pop_c) {
              std::vector<EmotionSelector> sel;
              if (emotions.empty()) sel = EmotionSelector::channels();
              for (const auto& e : emotions) sel.push_back(EmotionSelector::parse(e));
              return polarization_table(t, c, sel, PopulationOverride{pop_t, pop_c});
          },
          py::arg("profiles_t"), py::arg("profiles_c"), py::arg("emotions") = std::vector<std::string>{},
          py::arg("pop_t") = py::none(), py::arg("pop_c") = py::none());

    m.def("cluster",
          [](const std::vector<PolarizationRow>& rows, double threshold) {
              auto c = cluster(rows, threshold);
              return py::make_tuple(c.polarizing, c.non_polarizing);
          },
          py::arg("rows"), py::arg("threshold") = kDefaultClusterThreshold,
          "Returns (polarizing, non_polarizing) emotion labels.");
}
