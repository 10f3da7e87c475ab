#include "roomtheory/report.hpp"

#include <array>
#include <charconv>

#include "json.hpp"
#include "roomtheory/error.hpp"

namespace roomtheory {

using ojson = nlohmann::ordered_json;

namespace {

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << fields[i];
    }
    out << '\n';
}

constexpr std::array<std::string_view, kIntensities> kIntensityNames = {"low", "mid", "high"};

ojson coverage_json(const Coverage& c) {
    return ojson{{"tokens_scored", c.tokens_scored},
                 {"tokens_oov", c.tokens_oov},
                 {"tokens_total", c.tokens_total}};
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
    if (name == "csv") return ReportFormat::csv;
    if (name == "json") return ReportFormat::json;
    throw InputError("unknown report format '" + std::string(name) + "' (expected csv or json)");
}

std::string format_number(double v) {
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

std::vector<std::string> profile_columns(const EmotionBenchmark& bench) {
    std::vector<std::string> cols{"doc_id"};
    for (const auto& row : bench.matrix)
        for (auto w : row) cols.emplace_back(w);
    for (const auto& c : bench.conditions) cols.emplace_back(c.name);
    cols.insert(cols.end(), {"tokens_scored", "tokens_oov", "tokens_total"});
    return cols;
}

void write_profiles(std::span<const EmotionProfile> profiles, std::ostream& out, ReportFormat format,
                    const EmotionBenchmark& bench) {
    if (format == ReportFormat::csv) {
        write_row(out, profile_columns(bench));
        for (const auto& p : profiles) {
            std::vector<std::string> f{csv_field(p.doc_id)};
            // A degenerate profile has no scores, only coverage.
            for (const auto& row : p.scores)
                for (double v : row) f.push_back(p.degenerate ? "" : format_number(v));
            for (double v : p.conditions) f.push_back(p.degenerate ? "" : format_number(v));
            f.push_back(std::to_string(p.coverage.tokens_scored));
            f.push_back(std::to_string(p.coverage.tokens_oov));
            f.push_back(std::to_string(p.coverage.tokens_total));
            write_row(out, f);
        }
        return;
    }
    ojson arr = ojson::array();
    for (const auto& p : profiles) {
        ojson scores = ojson::object();
        for (std::size_t ch = 0; ch < kChannels; ++ch)
            for (std::size_t in = 0; in < kIntensities; ++in)
                scores[std::string(bench.matrix[ch][in])] =
                    p.degenerate ? ojson(nullptr) : ojson(p.scores[ch][in]);
        ojson conditions = ojson::object();
        for (std::size_t i = 0; i < kChannels; ++i)
            conditions[std::string(bench.conditions[i].name)] =
                p.degenerate ? ojson(nullptr) : ojson(p.conditions[i]);
        arr.push_back(ojson{{"doc_id", p.doc_id},
                            {"scores", std::move(scores)},
                            {"conditions", std::move(conditions)},
                            {"coverage", coverage_json(p.coverage)},
                            {"degenerate", p.degenerate}});
    }
    out << arr.dump(2) << '\n';
}

void write_generic_profiles(std::span<const GenericProfile> profiles, const Benchmark& bench,
                            std::ostream& out, ReportFormat format) {
    if (format == ReportFormat::csv) {
        std::vector<std::string> header{"doc_id"};
        for (const auto& e : bench.entries) header.push_back(csv_field(e.label));
        header.insert(header.end(), {"tokens_scored", "tokens_oov", "tokens_total"});
        write_row(out, header);
        for (const auto& p : profiles) {
            std::vector<std::string> f{csv_field(p.doc_id)};
            for (const auto& l : p.labels) f.push_back(l.degenerate ? "" : format_number(l.score));
            f.push_back(std::to_string(p.coverage.tokens_scored));
            f.push_back(std::to_string(p.coverage.tokens_oov));
            f.push_back(std::to_string(p.coverage.tokens_total));
            write_row(out, f);
        }
        return;
    }
    ojson arr = ojson::array();
    for (const auto& p : profiles) {
        ojson labels = ojson::object();
        for (const auto& l : p.labels)
            labels[l.label] = l.degenerate ? ojson(nullptr) : ojson(l.score);
        arr.push_back(ojson{{"doc_id", p.doc_id},
                            {"scores", std::move(labels)},
                            {"coverage", coverage_json(p.coverage)},
                            {"degenerate", p.degenerate}});
    }
    out << arr.dump(2) << '\n';
}

void write_polarization(std::span<const PolarizationRow> rows, const EmotionClusters& clusters,
                        std::ostream& out, ReportFormat format) {
    if (format == ReportFormat::csv) {
        write_row(out, {"emotion", "avg_T", "avg_C", "d", "P", "cluster"});
        for (const auto& r : rows)
            write_row(out, {csv_field(r.emotion), format_number(r.avg_t), format_number(r.avg_c),
                            format_number(r.d), format_number(r.p),
                            clusters.is_polarizing(r.emotion) ? "A" : "B"});
        return;
    }
    ojson arr = ojson::array();
    for (const auto& r : rows)
        arr.push_back(ojson{{"emotion", r.emotion},
                            {"avg_T", r.avg_t},
                            {"avg_C", r.avg_c},
                            {"d", r.d},
                            {"P", r.p},
                            {"cluster", clusters.is_polarizing(r.emotion) ? "A" : "B"}});
    out << ojson{{"threshold", clusters.threshold}, {"rows", std::move(arr)}}.dump(2) << '\n';
}

void write_dna(std::span<const EmotionalDna> dna, std::ostream& out, ReportFormat format,
               const EmotionBenchmark& bench) {
    if (format == ReportFormat::csv) {
        write_row(out, {"doc_id", "channel", "intensity", "emotion", "raw", "normalized",
                        "channel_total", "normalized_channel_total"});
        for (const auto& d : dna)
            for (std::size_t ch = 0; ch < kChannels; ++ch)
                for (std::size_t in = 0; in < kIntensities; ++in)
                    write_row(out, {csv_field(d.doc_id), std::string(bench.channel_name(ch)),
                                    std::string(kIntensityNames[in]),
                                    std::string(bench.matrix[ch][in]), format_number(d.raw[ch][in]),
                                    format_number(d.normalized[ch][in]),
                                    format_number(d.channel_totals[ch]),
                                    format_number(d.normalized_channel_totals[ch])});
        return;
    }
    ojson arr = ojson::array();
    for (const auto& d : dna) {
        ojson channels = ojson::array();
        for (std::size_t ch = 0; ch < kChannels; ++ch) {
            ojson cells = ojson::array();
            for (std::size_t in = 0; in < kIntensities; ++in)
                cells.push_back(ojson{{"intensity", kIntensityNames[in]},
                                      {"emotion", bench.matrix[ch][in]},
                                      {"raw", d.raw[ch][in]},
                                      {"normalized", d.normalized[ch][in]}});
            channels.push_back(ojson{{"channel", bench.channel_name(ch)},
                                     {"total", d.channel_totals[ch]},
                                     {"normalized_total", d.normalized_channel_totals[ch]},
                                     {"cells", std::move(cells)}});
        }
        arr.push_back(ojson{{"doc_id", d.doc_id},
                            {"has_positive_mass", d.has_positive_mass},
                            {"channels", std::move(channels)}});
    }
    out << arr.dump(2) << '\n';
}

}  // namespace roomtheory
