#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "roomtheory/benchmark.hpp"
#include "roomtheory/corpus.hpp"
#include "roomtheory/error.hpp"
#include "roomtheory/io.hpp"
#include "roomtheory/polarization.hpp"
#include "roomtheory/report.hpp"
#include "roomtheory/room.hpp"
#include "roomtheory/scoring.hpp"
#include "roomtheory/skipgram.hpp"

namespace roomtheory::cli {

namespace fs = std::filesystem;

namespace {

struct Logger {
    std::ostream& err;
    int verbosity = 1;  // 0 quiet, 1 normal, 2 verbose

    void warn(const std::string& msg) const {
        if (verbosity >= 1) err << "warning: " << msg << '\n';
    }
    void info(const std::string& msg) const {
        if (verbosity >= 1) err << msg << '\n';
    }
    void debug(const std::string& msg) const {
        if (verbosity >= 2) err << msg << '\n';
    }
};

void check_output_path(const std::string& path) {
    if (path.empty() || path == "-") return;
    const fs::path parent = fs::path(path).parent_path();
    std::error_code ec;
    if (!parent.empty() && !fs::is_directory(parent, ec))
        throw InputError("output directory does not exist: " + parent.string());
}

// "-" or empty writes to stdout; anything else goes through a temp file.
void emit(const std::string& path, std::ostream& stdout_stream,
          const std::function<void(std::ostream&)>& writer) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        writer(buf);
        stdout_stream << buf.str();
        return;
    }
    write_file_atomically(path, writer);
}

RoomFormat parse_room_format(const std::string& name) {
    if (name == "text") return RoomFormat::text;
    if (name == "binary") return RoomFormat::binary;
    throw InputError("unknown room format '" + name + "'");
}

bool is_jsonl(const std::string& path, const std::string& declared) {
    if (declared == "jsonl") return true;
    if (declared == "tokens") return false;
    const auto ext = fs::path(path).extension().string();
    return ext == ".jsonl" || ext == ".ndjson" || ext == ".json";
}

std::vector<TokenizedDocument> read_docs(const std::string& path, const std::string& declared,
                                         const CleanOptions& clean) {
    std::vector<TokenizedDocument> docs;
    if (is_jsonl(path, declared)) {
        for (const auto& raw : load_documents_jsonl(path)) docs.push_back(clean_and_tokenize(raw, clean));
    } else {
        auto lines = load_token_corpus(path);
        for (std::size_t i = 0; i < lines.size(); ++i) {
            TokenizedDocument d{std::to_string(i + 1), std::move(lines[i]), false};
            d.dropped = d.tokens.empty();
            docs.push_back(std::move(d));
        }
    }
    return docs;
}

CleanOptions clean_options(const std::string& stopwords_path) {
    CleanOptions opts;
    if (!stopwords_path.empty()) opts.stopwords = load_word_list(stopwords_path);
    return opts;
}

std::string coverage_summary(std::size_t docs, std::size_t degenerate, const Coverage& c) {
    std::ostringstream s;
    s << "documents=" << docs << " degenerate=" << degenerate << " tokens_scored=" << c.tokens_scored
      << " tokens_oov=" << c.tokens_oov << " tokens_total=" << c.tokens_total;
    return s.str();
}

void add_coverage(Coverage& total, const Coverage& c) {
    total.tokens_scored += c.tokens_scored;
    total.tokens_oov += c.tokens_oov;
    total.tokens_total += c.tokens_total;
}

struct SimsetFlags {
    double threshold = 0.7;
    std::size_t max_neighbors = 10;
    bool skip_missing = false;

    void attach(CLI::App* cmd, bool with_policy = true) {
        cmd->add_option("--sim-threshold", threshold, "Simset similarity threshold t in [0,1]")
            ->check(CLI::Range(0.0, 1.0))
            ->capture_default_str();
        cmd->add_option("-k,--max-neighbors", max_neighbors, "Maximum simset neighbours besides the seed")
            ->capture_default_str();
        if (with_policy)
            cmd->add_flag("--skip-missing", skip_missing,
                          "Score benchmark words missing from the room as 0 instead of failing");
    }
    SimsetConfig config() const { return {threshold, max_neighbors}; }
    OovPolicy policy() const { return skip_missing ? OovPolicy::skip : OovPolicy::error; }
};

// ---------------------------------------------------------------------------

struct TrainArgs {
    std::string corpus, out, input_format = "auto", room_format = "binary", stopwords;
    TrainConfig config;
};

void cmd_train(const TrainArgs& a, std::ostream& out, const Logger& log) {
    check_output_path(a.out);
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Sentence> corpus;
    if (is_jsonl(a.corpus, a.input_format)) {
        const auto clean = clean_options(a.stopwords);
        for (const auto& raw : load_documents_jsonl(a.corpus)) {
            auto doc = clean_and_tokenize(raw, clean);
            if (!doc.dropped) corpus.push_back(std::move(doc.tokens));
        }
    } else {
        corpus = load_token_corpus(a.corpus);
    }
    SkipGramTrainer trainer(corpus, a.config);
    while (!trainer.finished()) {
        trainer.run_epoch();
        log.debug("epoch " + std::to_string(trainer.epochs_completed()) + " done");
    }
    const Room room = trainer.to_room();
    save_room(room, a.out, parse_room_format(a.room_format));
    const std::chrono::duration<double> secs = std::chrono::steady_clock::now() - t0;
    out << "vocab_size=" << room.size() << " tokens=" << trainer.vocab().total_tokens
        << " dim=" << room.dim() << " seconds=" << format_number(secs.count()) << '\n';
}

struct PartitionArgs {
    std::string tweets, sets, out_t, out_c, stopwords;
};

void cmd_partition(const PartitionArgs& a, std::ostream& out, const Logger&) {
    check_output_path(a.out_t);
    check_output_path(a.out_c);
    const HashtagSets sets = a.sets.empty() ? default_hashtag_sets() : load_hashtag_sets(a.sets);
    const auto docs = load_documents_jsonl(a.tweets);
    const auto result = partition(docs, sets, clean_options(a.stopwords));
    write_file_atomically(a.out_t, [&](std::ostream& o) { write_token_corpus(result.group_t, o); });
    try {
        write_file_atomically(a.out_c, [&](std::ostream& o) { write_token_corpus(result.group_c, o); });
    } catch (...) {
        std::error_code ec;
        fs::remove(a.out_t, ec);
        throw;
    }
    out << "group_T=" << result.group_t.size() << " group_C=" << result.group_c.size()
        << " ambiguous=" << result.ambiguous.size()
        << " unclassified=" << result.unclassified.size() << '\n';
}

struct ScoreArgs {
    std::string room, docs, docs_format = "auto", benchmark = "plutchik", out, format = "csv",
                                              stopwords;
    SimsetFlags simset;
};

void cmd_score(const ScoreArgs& a, std::ostream& out, const Logger& log) {
    check_output_path(a.out);
    const auto format = parse_report_format(a.format);
    const Room room = load_room(a.room);
    const auto docs = read_docs(a.docs, a.docs_format, clean_options(a.stopwords));
    if (docs.empty()) log.warn("no documents in " + a.docs);

    Coverage total;
    std::size_t degenerate = 0;
    if (a.benchmark == "plutchik") {
        EmotionScorer scorer(room, plutchik(), a.simset.config(), a.simset.policy());
        for (const auto& w : scorer.skipped_words()) log.warn("benchmark word missing from room: " + w);
        std::vector<EmotionProfile> profiles;
        for (const auto& d : docs) {
            profiles.push_back(scorer.score(d));
            add_coverage(total, profiles.back().coverage);
            degenerate += profiles.back().degenerate;
        }
        emit(a.out, out, [&](std::ostream& o) { write_profiles(profiles, o, format); });
    } else {
        GenericScorer scorer(room, load_benchmark(a.benchmark), a.simset.config(), a.simset.policy());
        for (const auto& l : scorer.skipped_labels()) log.warn("benchmark label missing from room: " + l);
        std::vector<GenericProfile> profiles;
        for (const auto& d : docs) {
            profiles.push_back(scorer.score(d));
            add_coverage(total, profiles.back().coverage);
            degenerate += profiles.back().degenerate;
        }
        emit(a.out, out,
             [&](std::ostream& o) { write_generic_profiles(profiles, scorer.benchmark(), o, format); });
    }
    log.info(coverage_summary(docs.size(), degenerate, total));
}

struct CompareArgs {
    std::string room_t, room_c, docs, docs_format = "auto", benchmark = "plutchik", out,
                                                  format = "csv", stopwords,
                                                  representative = "mid";
    std::vector<std::string> emotions;
    double threshold = kDefaultClusterThreshold;
    std::optional<std::size_t> pop_t, pop_c;
    SimsetFlags simset;
};

std::vector<EmotionSelector> selectors(const CompareArgs& a) {
    if (!a.emotions.empty()) {
        std::vector<EmotionSelector> out;
        for (const auto& e : a.emotions) out.push_back(EmotionSelector::parse(e));
        return out;
    }
    if (a.representative == "sum") return EmotionSelector::channel_sums();
    if (a.representative == "low") return EmotionSelector::channels(Intensity::low);
    if (a.representative == "high") return EmotionSelector::channels(Intensity::high);
    if (a.representative == "mid") return EmotionSelector::channels(Intensity::mid);
    throw InputError("unknown representative '" + a.representative + "'");
}

void cmd_compare(const CompareArgs& a, std::ostream& out, const Logger& log) {
    check_output_path(a.out);
    const auto format = parse_report_format(a.format);
    const Room room_t = load_room(a.room_t);
    const Room room_c = load_room(a.room_c);
    const auto docs = read_docs(a.docs, a.docs_format, clean_options(a.stopwords));
    const PopulationOverride pops{a.pop_t, a.pop_c};

    std::vector<PolarizationRow> rows;
    if (a.benchmark == "plutchik") {
        const auto emotions = selectors(a);
        EmotionScorer scorer_t(room_t, plutchik(), a.simset.config(), a.simset.policy());
        EmotionScorer scorer_c(room_c, plutchik(), a.simset.config(), a.simset.policy());
        std::vector<EmotionProfile> pt, pc;
        for (const auto& d : docs) {
            pt.push_back(scorer_t.score(d));
            pc.push_back(scorer_c.score(d));
        }
        rows = polarization_table(pt, pc, emotions, pops);
    } else {
        const Benchmark bench = load_benchmark(a.benchmark);
        GenericScorer scorer_t(room_t, bench, a.simset.config(), a.simset.policy());
        GenericScorer scorer_c(room_c, bench, a.simset.config(), a.simset.policy());
        std::vector<GenericProfile> pt, pc;
        for (const auto& d : docs) {
            pt.push_back(scorer_t.score(d));
            pc.push_back(scorer_c.score(d));
        }
        rows = polarization_table(pt, pc, pops);
    }
    const auto clusters = cluster(rows, a.threshold);
    emit(a.out, out, [&](std::ostream& o) { write_polarization(rows, clusters, o, format); });
    log.info("documents=" + std::to_string(docs.size()) +
             " polarizing=" + std::to_string(clusters.polarizing.size()));
}

struct SimsetArgs {
    std::string room, token;
    SimsetFlags simset;
};

void cmd_simset(const SimsetArgs& a, std::ostream& out, const Logger&) {
    const Room room = load_room(a.room);
    const auto s = build_simset(room, a.token, a.simset.config());
    for (const auto& m : s.members) out << m.token << '\t' << format_number(m.weight) << '\n';
}

struct DnaArgs {
    std::string room, docs, docs_format = "auto", out, format = "csv", stopwords;
    SimsetFlags simset;
};

void cmd_dna(const DnaArgs& a, std::ostream& out, const Logger& log) {
    check_output_path(a.out);
    const auto format = parse_report_format(a.format);
    const Room room = load_room(a.room);
    const auto docs = read_docs(a.docs, a.docs_format, clean_options(a.stopwords));
    EmotionScorer scorer(room, plutchik(), a.simset.config(), a.simset.policy());
    std::vector<EmotionalDna> dna;
    for (const auto& d : docs) {
        const auto profile = scorer.score(d);
        if (profile.degenerate) {
            log.warn("document '" + d.id + "' has no scored tokens, skipped");
            continue;
        }
        dna.push_back(emotional_dna(profile));
    }
    emit(a.out, out, [&](std::ostream& o) { write_dna(dna, o, format); });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Room-based document scoring: train rooms, score documents against "
                 "benchmarks, compare points of view"};
    app.name(args.empty() ? "roomtheory" : fs::path(args[0]).filename().string());
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Print help for every subcommand and exit");

    int verbose = 0;
    bool quiet = false;
    app.add_flag("-v,--verbose", verbose, "More diagnostics on stderr");
    app.add_flag("-q,--quiet", quiet, "Suppress warnings and summaries");

    auto room_format_check = CLI::IsMember({"text", "binary"});
    auto report_check = CLI::IsMember({"csv", "json"});
    auto docs_check = CLI::IsMember({"auto", "jsonl", "tokens"});

    TrainArgs train;
    auto* c_train = app.add_subcommand("train", "Train a room from a corpus");
    c_train->add_option("--corpus", train.corpus, "Tokenized corpus (one document per line) or JSONL")
        ->required()
        ->check(CLI::ExistingFile);
    c_train->add_option("--out", train.out, "Room file to write")->required();
    c_train->add_option("--input-format", train.input_format, "auto|tokens|jsonl")
        ->check(docs_check)
        ->capture_default_str();
    c_train->add_option("--format", train.room_format, "Room file format: text|binary")
        ->check(room_format_check)
        ->capture_default_str();
    c_train->add_option("--dim", train.config.dim, "Embedding size")->capture_default_str();
    c_train->add_option("--window", train.config.window, "Maximum context offset")->capture_default_str();
    c_train->add_option("--min-count", train.config.min_count, "Minimum token frequency")
        ->capture_default_str();
    c_train->add_option("--epochs", train.config.epochs, "Training epochs")->capture_default_str();
    c_train->add_option("--negatives", train.config.negatives, "Noise words per positive pair")
        ->capture_default_str();
    c_train->add_option("--lr", train.config.learning_rate, "Initial learning rate")->capture_default_str();
    c_train->add_option("--min-lr", train.config.min_learning_rate, "Final learning rate")
        ->capture_default_str();
    c_train->add_option("--sample", train.config.sample, "Subsampling threshold, 0 disables")
        ->capture_default_str();
    c_train->add_option("--seed", train.config.seed, "Random seed")->capture_default_str();
    c_train->add_option("--workers", train.config.workers,
                        "Training threads; more than 1 is not reproducible")
        ->capture_default_str();
    c_train->add_option("--stopwords", train.stopwords, "Stop-word list applied to JSONL input")
        ->check(CLI::ExistingFile);

    PartitionArgs part;
    auto* c_part = app.add_subcommand("partition", "Split tweets into partisan corpora by hashtag");
    c_part->add_option("--tweets", part.tweets, "Tweets as JSONL")->required()->check(CLI::ExistingFile);
    c_part->add_option("--sets", part.sets, "Hashtag sets JSON (default: built-in sets)")
        ->check(CLI::ExistingFile);
    c_part->add_option("--out-t", part.out_t, "Tokenized corpus for group T")->required();
    c_part->add_option("--out-c", part.out_c, "Tokenized corpus for group C")->required();
    c_part->add_option("--stopwords", part.stopwords, "Stop-word list")->check(CLI::ExistingFile);

    ScoreArgs score;
    auto* c_score = app.add_subcommand("score", "Score documents against a benchmark");
    c_score->add_option("--room", score.room, "Room file")->required()->check(CLI::ExistingFile);
    c_score->add_option("--docs", score.docs, "Documents (JSONL or tokenized)")
        ->required()
        ->check(CLI::ExistingFile);
    c_score->add_option("--docs-format", score.docs_format, "auto|jsonl|tokens")
        ->check(docs_check)
        ->capture_default_str();
    c_score->add_option("--benchmark", score.benchmark, "\"plutchik\" or a benchmark file")
        ->capture_default_str();
    c_score->add_option("--out", score.out, "Report file (default stdout)");
    c_score->add_option("--format", score.format, "csv|json")->check(report_check)->capture_default_str();
    c_score->add_option("--stopwords", score.stopwords, "Stop-word list")->check(CLI::ExistingFile);
    score.simset.attach(c_score);

    CompareArgs cmp;
    auto* c_cmp = app.add_subcommand("compare", "Polarization between two rooms over the same documents");
    c_cmp->add_option("--room-t", cmp.room_t, "Room of group T")->required()->check(CLI::ExistingFile);
    c_cmp->add_option("--room-c", cmp.room_c, "Room of group C")->required()->check(CLI::ExistingFile);
    c_cmp->add_option("--docs", cmp.docs, "Documents (JSONL or tokenized)")
        ->required()
        ->check(CLI::ExistingFile);
    c_cmp->add_option("--docs-format", cmp.docs_format, "auto|jsonl|tokens")
        ->check(docs_check)
        ->capture_default_str();
    c_cmp->add_option("--benchmark", cmp.benchmark, "\"plutchik\" or a benchmark file")
        ->capture_default_str();
    c_cmp->add_option("--emotions", cmp.emotions, "Emotion words to compare (or sum:<channel>)")
        ->delimiter(',');
    c_cmp->add_option("--representative", cmp.representative,
                      "Per-channel value when --emotions is absent: low|mid|high|sum")
        ->check(CLI::IsMember({"low", "mid", "high", "sum"}))
        ->capture_default_str();
    c_cmp->add_option("--threshold", cmp.threshold, "Cluster threshold on P")->capture_default_str();
    c_cmp->add_option("--pop-t", cmp.pop_t, "Population of group T (default: scored documents)");
    c_cmp->add_option("--pop-c", cmp.pop_c, "Population of group C (default: scored documents)");
    c_cmp->add_option("--out", cmp.out, "Report file (default stdout)");
    c_cmp->add_option("--format", cmp.format, "csv|json")->check(report_check)->capture_default_str();
    c_cmp->add_option("--stopwords", cmp.stopwords, "Stop-word list")->check(CLI::ExistingFile);
    cmp.simset.attach(c_cmp);

    SimsetArgs sim;
    auto* c_sim = app.add_subcommand("simset", "Print a token's simset");
    c_sim->add_option("--room", sim.room, "Room file")->required()->check(CLI::ExistingFile);
    c_sim->add_option("--token", sim.token, "Seed token")->required();
    sim.simset.attach(c_sim, false);

    DnaArgs dna;
    auto* c_dna = app.add_subcommand("dna", "Export normalized stacked-bar emotion data");
    c_dna->add_option("--room", dna.room, "Room file")->required()->check(CLI::ExistingFile);
    c_dna->add_option("--docs", dna.docs, "Documents (JSONL or tokenized)")
        ->required()
        ->check(CLI::ExistingFile);
    c_dna->add_option("--docs-format", dna.docs_format, "auto|jsonl|tokens")
        ->check(docs_check)
        ->capture_default_str();
    c_dna->add_option("--out", dna.out, "Report file (default stdout)");
    c_dna->add_option("--format", dna.format, "csv|json")->check(report_check)->capture_default_str();
    c_dna->add_option("--stopwords", dna.stopwords, "Stop-word list")->check(CLI::ExistingFile);
    dna.simset.attach(c_dna);

    std::vector<char*> argv;
    std::vector<std::string> storage = args.empty() ? std::vector<std::string>{"roomtheory"} : args;
    for (auto& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    const Logger log{err, quiet ? 0 : 1 + verbose};
    try {
        if (*c_train) cmd_train(train, out, log);
        else if (*c_part) cmd_partition(part, out, log);
        else if (*c_score) cmd_score(score, out, log);
        else if (*c_cmp) cmd_compare(cmp, out, log);
        else if (*c_sim) cmd_simset(sim, out, log);
        else if (*c_dna) cmd_dna(dna, out, log);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace roomtheory::cli
