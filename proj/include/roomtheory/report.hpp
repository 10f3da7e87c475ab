#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "roomtheory/polarization.hpp"
#include "roomtheory/scoring.hpp"

namespace roomtheory {

enum class ReportFormat { csv, json };

ReportFormat parse_report_format(std::string_view name);

// Shortest decimal that reads back as the same double.
std::string format_number(double v);

// Profile CSV columns, fixed:
//   doc_id, the 24 emotion words row-major (serenity, joy, ecstasy,
//   acceptance, ...), the 8 condition names (love ... optimism),
//   tokens_scored, tokens_oov, tokens_total.
std::vector<std::string> profile_columns(const EmotionBenchmark& bench = plutchik());

void write_profiles(std::span<const EmotionProfile> profiles, std::ostream& out, ReportFormat format,
                    const EmotionBenchmark& bench = plutchik());

// doc_id, one column per benchmark label, then the coverage triple.
void write_generic_profiles(std::span<const GenericProfile> profiles, const Benchmark& bench,
                            std::ostream& out, ReportFormat format);

// emotion, avg_T, avg_C, d, P, cluster ("A" polarizing, "B" otherwise).
void write_polarization(std::span<const PolarizationRow> rows, const EmotionClusters& clusters,
                        std::ostream& out, ReportFormat format);

// Long format, one row per (document, emotion word):
// doc_id, channel, intensity, emotion, raw, normalized, channel_total,
// normalized_channel_total.
void write_dna(std::span<const EmotionalDna> dna, std::ostream& out, ReportFormat format,
               const EmotionBenchmark& bench = plutchik());

}  // namespace roomtheory
