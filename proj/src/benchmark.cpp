#include "roomtheory/benchmark.hpp"

#include <sstream>
#include <unordered_set>

#include "roomtheory/error.hpp"
#include "roomtheory/io.hpp"

namespace roomtheory {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

Benchmark read_benchmark(std::istream& in, const std::string& source) {
    Benchmark bench;
    std::unordered_set<std::string> labels;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        const auto colon = body.find(':');
        if (colon == std::string_view::npos)
            throw ParseError(source, line_no, "expected \"label: token [token ...]\"");
        std::string label(trim(body.substr(0, colon)));
        if (label.empty()) throw ParseError(source, line_no, "empty label");
        BenchmarkEntry entry{label, {}};
        std::istringstream words{std::string(body.substr(colon + 1))};
        for (std::string w; words >> w;) entry.chunk.push_back(std::move(w));
        if (entry.chunk.empty())
            throw ParseError(source, line_no, "empty chunk for label '" + label + "'");
        if (!labels.insert(label).second)
            throw ParseError(source, line_no, "duplicate label '" + label + "'");
        bench.entries.push_back(std::move(entry));
    }
    return bench;
}

Benchmark load_benchmark(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_benchmark(in, path.string());
}

Benchmark EmotionBenchmark::as_benchmark() const {
    Benchmark b;
    for (const auto& row : matrix)
        for (auto w : row) b.entries.push_back({std::string(w), {std::string(w)}});
    return b;
}

const EmotionBenchmark& plutchik() {
    static const EmotionBenchmark bench{
        {{
            {"serenity", "joy", "ecstasy"},
            {"acceptance", "trust", "admiration"},
            {"apprehension", "fear", "terror"},
            {"distraction", "surprise", "amazement"},
            {"pensiveness", "sadness", "grief"},
            {"boredom", "disgust", "loathing"},
            {"annoyance", "anger", "rage"},
            {"interest", "anticipation", "vigilance"},
        }},
        {{
            {0, 1, "joy", "trust", "love"},
            {1, 2, "trust", "fear", "submission"},
            {2, 3, "fear", "surprise", "awe"},
            {3, 4, "surprise", "sadness", "disapproval"},
            {4, 5, "sadness", "disgust", "remorse"},
            {5, 6, "disgust", "anger", "contempt"},
            {6, 7, "anger", "anticipation", "aggressiveness"},
            {7, 0, "anticipation", "joy", "optimism"},
        }},
    };
    return bench;
}

}  // namespace roomtheory
