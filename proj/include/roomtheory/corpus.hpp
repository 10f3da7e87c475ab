#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "roomtheory/skipgram.hpp"

namespace roomtheory {

struct RawDocument {
    std::string id;
    std::string text;
    std::map<std::string, std::string> meta;
};

struct TokenizedDocument {
    std::string id;
    std::vector<std::string> tokens;
    // Set when cleaning left nothing; tokens is then empty.
    bool dropped = false;

    bool operator==(const TokenizedDocument&) const = default;
};

struct CleanOptions {
    // Removed after all other rules. Empty by default.
    std::unordered_set<std::string> stopwords;
};

// Tweet-aware normalisation: NFC, lowercase, URLs and @-mentions removed,
// '#' dropped from hashtags (the tag word stays), punctuation and symbols
// treated as separators, apostrophes deleted, "rt" markers removed. Digits
// are kept.
std::vector<std::string> clean_text(std::string_view text, const CleanOptions& options = {});
TokenizedDocument clean_and_tokenize(const RawDocument& doc, const CleanOptions& options = {});

// Lowercased hashtag bodies. A tag starts at a '#' that does not follow a
// letter or digit and runs over letters, digits, marks and '_'.
std::set<std::string> extract_hashtags(std::string_view raw_text);

struct HashtagSets {
    std::set<std::string> pro_trump;
    std::set<std::string> anti_clinton;
    std::set<std::string> pro_clinton;
    std::set<std::string> anti_trump;

    // Throws InputError if any two sets share a hashtag.
    void validate() const;
    std::set<std::string> side_t() const;
    std::set<std::string> side_c() const;
};

// The partisan hashtag lists from the 2016 election study, lowercased with
// stray spaces removed.
const HashtagSets& default_hashtag_sets();

enum class Side { t, c, ambiguous, unclassified };

Side classify(const std::set<std::string>& hashtags, const HashtagSets& sets);

struct PartitionResult {
    std::vector<TokenizedDocument> group_t;
    std::vector<TokenizedDocument> group_c;
    std::vector<TokenizedDocument> ambiguous;
    std::vector<TokenizedDocument> unclassified;
};

// Classification reads hashtags from the raw text; tokens come from cleaning.
PartitionResult partition(std::span<const RawDocument> docs, const HashtagSets& sets,
                          const CleanOptions& options = {});

// Newline-delimited JSON: {"id": ..., "text": ..., "meta": {...}} per line.
// Blank lines are skipped; ids must be unique.
std::vector<RawDocument> read_documents_jsonl(std::istream& in, const std::string& source);
std::vector<RawDocument> load_documents_jsonl(const std::filesystem::path& path);

// One document per line, tokens separated by spaces. Blank lines are kept as
// empty sentences so line numbers stay meaningful.
std::vector<Sentence> read_token_corpus(std::istream& in);
std::vector<Sentence> load_token_corpus(const std::filesystem::path& path);
void write_token_corpus(std::span<const TokenizedDocument> docs, std::ostream& out);

HashtagSets read_hashtag_sets(std::istream& in, const std::string& source);
HashtagSets load_hashtag_sets(const std::filesystem::path& path);

std::unordered_set<std::string> load_word_list(const std::filesystem::path& path);

}  // namespace roomtheory
