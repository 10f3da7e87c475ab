#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace roomtheory {

// One criterion: a label and the word or multi-word chunk it stands for.
struct BenchmarkEntry {
    std::string label;
    std::vector<std::string> chunk;

    bool operator==(const BenchmarkEntry&) const = default;
};

struct Benchmark {
    std::vector<BenchmarkEntry> entries;

    bool operator==(const Benchmark&) const = default;
};

// Lines of `label: token [token ...]`; '#' starts a comment line, blank lines
// are ignored. Duplicate labels and empty chunks are parse errors.
Benchmark read_benchmark(std::istream& in, const std::string& source = "<benchmark>");
Benchmark load_benchmark(const std::filesystem::path& path);

inline constexpr std::size_t kChannels = 8;
inline constexpr std::size_t kIntensities = 3;

enum class Intensity : std::size_t { low = 0, mid = 1, high = 2 };

// A named sum of two channels' mid-intensity scores.
struct Condition {
    std::size_t first;   // channel index
    std::size_t second;  // channel index
    std::string_view first_word;
    std::string_view second_word;
    std::string_view name;

    bool operator==(const Condition&) const = default;
};

// Plutchik's wheel as an 8 channel x 3 intensity word matrix plus the eight
// adjacent-pair conditions.
struct EmotionBenchmark {
    std::array<std::array<std::string_view, kIntensities>, kChannels> matrix;
    std::array<Condition, kChannels> conditions;

    std::string_view word(std::size_t channel, Intensity level) const {
        return matrix[channel][static_cast<std::size_t>(level)];
    }
    std::string_view channel_name(std::size_t channel) const { return word(channel, Intensity::mid); }

    // The 24 words row-major as single-token entries labelled by the word.
    Benchmark as_benchmark() const;

    bool operator==(const EmotionBenchmark&) const = default;
};

const EmotionBenchmark& plutchik();

}  // namespace roomtheory
