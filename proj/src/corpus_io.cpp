#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "roomtheory/corpus.hpp"
#include "roomtheory/error.hpp"
#include "roomtheory/io.hpp"
#include "unicode.hpp"

namespace roomtheory {

using nlohmann::json;

namespace {

std::string scalar_to_string(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

std::vector<RawDocument> read_documents_jsonl(std::istream& in, const std::string& source) {
    std::vector<RawDocument> docs;
    std::unordered_set<std::string> ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank(line)) continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ParseError(source, line_no, std::string("invalid JSON: ") + e.what());
        }
        if (!obj.is_object()) throw ParseError(source, line_no, "expected a JSON object");
        auto id = obj.find("id");
        if (id == obj.end() || !(id->is_string() || id->is_number_integer()))
            throw ParseError(source, line_no, "missing string or integer \"id\"");
        auto text = obj.find("text");
        if (text == obj.end() || !text->is_string())
            throw ParseError(source, line_no, "missing string \"text\"");

        RawDocument doc{scalar_to_string(*id), text->get<std::string>(), {}};
        if (auto meta = obj.find("meta"); meta != obj.end() && !meta->is_null()) {
            if (!meta->is_object()) throw ParseError(source, line_no, "\"meta\" must be an object");
            for (const auto& [k, v] : meta->items()) doc.meta.emplace(k, scalar_to_string(v));
        }
        if (!ids.insert(doc.id).second)
            throw ParseError(source, line_no, "duplicate id '" + doc.id + "'");
        docs.push_back(std::move(doc));
    }
    return docs;
}

std::vector<RawDocument> load_documents_jsonl(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_documents_jsonl(in, path.string());
}

std::vector<Sentence> read_token_corpus(std::istream& in) {
    std::vector<Sentence> out;
    std::string line;
    while (std::getline(in, line)) {
        Sentence s;
        std::istringstream fields(line);
        for (std::string tok; fields >> tok;) s.push_back(std::move(tok));
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Sentence> load_token_corpus(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_token_corpus(in);
}

void write_token_corpus(std::span<const TokenizedDocument> docs, std::ostream& out) {
    for (const auto& doc : docs) {
        if (doc.tokens.empty()) continue;
        for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
            if (i) out << ' ';
            out << doc.tokens[i];
        }
        out << '\n';
    }
}

HashtagSets read_hashtag_sets(std::istream& in, const std::string& source) {
    json obj;
    try {
        obj = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(source, 0, std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object()) throw ParseError(source, 0, "expected a JSON object");
    auto read_set = [&](const char* key) {
        auto it = obj.find(key);
        if (it == obj.end() || !it->is_array())
            throw ParseError(source, 0, std::string("missing array \"") + key + "\"");
        std::set<std::string> out;
        for (const auto& v : *it) {
            if (!v.is_string())
                throw ParseError(source, 0, std::string("non-string entry in \"") + key + "\"");
            std::string tag = v.get<std::string>();
            if (!tag.empty() && tag.front() == '#') tag.erase(0, 1);
            if (tag.empty()) throw ParseError(source, 0, std::string("empty hashtag in \"") + key + "\"");
            out.insert(unicode::lower(tag));
        }
        return out;
    };
    HashtagSets sets{read_set("pro_trump"), read_set("anti_clinton"), read_set("pro_clinton"),
                     read_set("anti_trump")};
    sets.validate();
    return sets;
}

HashtagSets load_hashtag_sets(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_hashtag_sets(in, path.string());
}

std::unordered_set<std::string> load_word_list(const std::filesystem::path& path) {
    auto in = open_input(path);
    std::unordered_set<std::string> words;
    for (std::string w; in >> w;) words.insert(unicode::lower(w));
    return words;
}

}  // namespace roomtheory
