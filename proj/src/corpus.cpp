#include "roomtheory/corpus.hpp"

#include <algorithm>

#include <unicode/uchar.h>

#include "roomtheory/error.hpp"
#include "unicode.hpp"

namespace roomtheory {

namespace {

bool is_apostrophe(UChar32 c) { return c == 0x27 || c == 0x2019 || c == 0x02BC; }

bool is_hash(UChar32 c) { return c == '#' || c == 0xFF03; }

bool starts_with_at(const icu::UnicodeString& s, int32_t i, std::u16string_view prefix) {
    if (s.length() - i < static_cast<int32_t>(prefix.size())) return false;
    for (std::size_t k = 0; k < prefix.size(); ++k)
        if (s.charAt(i + static_cast<int32_t>(k)) != prefix[k]) return false;
    return true;
}

bool is_url_start(const icu::UnicodeString& s, int32_t i) {
    return starts_with_at(s, i, u"http://") || starts_with_at(s, i, u"https://") ||
           starts_with_at(s, i, u"www.");
}

}  // namespace

std::vector<std::string> clean_text(std::string_view text, const CleanOptions& options) {
    const icu::UnicodeString s = unicode::fold(text);
    std::vector<std::string> tokens;
    icu::UnicodeString current;

    auto flush = [&] {
        if (current.isEmpty()) return;
        std::string tok = unicode::to_utf8(current);
        current.remove();
        if (tok == "rt" || options.stopwords.contains(tok)) return;
        tokens.push_back(std::move(tok));
    };

    int32_t i = 0;
    const int32_t n = s.length();
    while (i < n) {
        if (current.isEmpty() && is_url_start(s, i)) {
            while (i < n && !u_isUWhiteSpace(s.char32At(i))) i = s.moveIndex32(i, 1);
            continue;
        }
        const UChar32 c = s.char32At(i);
        const int32_t next = s.moveIndex32(i, 1);
        if (c == '@' && current.isEmpty()) {
            i = next;
            while (i < n) {
                const UChar32 m = s.char32At(i);
                if (!unicode::is_word_char(m) && m != '_') break;
                i = s.moveIndex32(i, 1);
            }
            continue;
        }
        if (is_apostrophe(c)) {
            i = next;
            continue;
        }
        if (unicode::is_word_char(c)) {
            // A combining mark cannot open a token (e.g. an emoji variation selector).
            if (!current.isEmpty() || u_isalnum(c)) current.append(c);
        } else {
            flush();
        }
        i = next;
    }
    flush();
    return tokens;
}

TokenizedDocument clean_and_tokenize(const RawDocument& doc, const CleanOptions& options) {
    TokenizedDocument out{doc.id, clean_text(doc.text, options), false};
    out.dropped = out.tokens.empty();
    return out;
}

std::set<std::string> extract_hashtags(std::string_view raw_text) {
    const icu::UnicodeString s = unicode::nfc(raw_text);
    std::set<std::string> tags;
    UChar32 prev = 0;
    int32_t i = 0;
    const int32_t n = s.length();
    while (i < n) {
        const UChar32 c = s.char32At(i);
        i = s.moveIndex32(i, 1);
        if (is_hash(c) && !u_isalnum(prev)) {
            icu::UnicodeString body;
            while (i < n) {
                const UChar32 b = s.char32At(i);
                if (!unicode::is_word_char(b) && b != '_') break;
                body.append(b);
                i = s.moveIndex32(i, 1);
            }
            if (!body.isEmpty()) tags.insert(unicode::lower(unicode::to_utf8(body)));
            prev = body.isEmpty() ? c : body.char32At(body.moveIndex32(body.length(), -1));
            continue;
        }
        prev = c;
    }
    return tags;
}

void HashtagSets::validate() const {
    const std::pair<const char*, const std::set<std::string>*> all[] = {
        {"pro_trump", &pro_trump},
        {"anti_clinton", &anti_clinton},
        {"pro_clinton", &pro_clinton},
        {"anti_trump", &anti_trump},
    };
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b)
            for (const auto& tag : *all[a].second)
                if (all[b].second->contains(tag))
                    throw InputError("hashtag '" + tag + "' appears in both " + all[a].first +
                                     " and " + all[b].first);
}

std::set<std::string> HashtagSets::side_t() const {
    std::set<std::string> out = pro_trump;
    out.insert(anti_clinton.begin(), anti_clinton.end());
    return out;
}

std::set<std::string> HashtagSets::side_c() const {
    std::set<std::string> out = pro_clinton;
    out.insert(anti_trump.begin(), anti_trump.end());
    return out;
}

const HashtagSets& default_hashtag_sets() {
    static const HashtagSets sets = [] {
        HashtagSets s;
        s.pro_trump = {"trump2016",        "trump16",         "makeamericagreatagain",
                       "maga",             "trumppence16",    "trumptrain",
                       "presidenttrump",   "makeamericasafeagain", "democratsfortrump",
                       "vetsfortrump",     "women4trump",     "gays4trump",
                       "democrats4trump",  "latinos4trump",   "blacks4trump",
                       "buildthewall",     "votetrump2016",   "alwaystrump",
                       "bikersfortrump",   "makeamericaworkagain", "trumpiswithyou",
                       "onlytrump",        "heswithus",       "trumpcares",
                       "votegop"};
        s.anti_clinton = {"neverhillary",      "imnotwithher",       "crookedhillary",
                          "nevereverhillary",  "nomoreclintons",     "stophillary",
                          "kiliary",           "clintoncrimefoundation", "hillno",
                          "dropouthillary",    "riskyhillary",       "clintoncorruption",
                          "notwithher",        "hillary4jail",       "deletehillary",
                          "hillarylies",       "hypocritehillary",   "iwillneverstandwithher",
                          "crookedclinton",    "crookedclintons",    "lyinghillary",
                          "hillaryliesmatter", "hillaryliedpeopledied"};
        s.pro_clinton = {"hillary2016",      "imwithher",         "strongertogether",
                         "vote4hillary",     "imwithhillary",     "clintonkaine2016",
                         "hillarysopresidential", "hillarystrong", "uniteblue",
                         "voteblue",         "sheswithus",        "votehillary",
                         "madampresident",   "yeswekaine",        "welovehillary",
                         "itrusther",        "itrusthillary",     "estoyconella",
                         "republicans4hillary", "bluewave2016",   "hillstorm2016",
                         "hillaryforpr",     "hillaryforamerica", "hillarysoqualified",
                         "hillaryforpresident"};
        // "crybabytrum" is kept as published.
        s.anti_trump = {"nevertrump",      "dumpthetrump",    "crybabytrum",
                        "trumpthefraud",   "lyingtrump",      "stoptrump",
                        "dirtydonald",     "crookeddonald",   "lyintrump",
                        "nevertrumpence",  "boycotttrump",    "lyindonald",
                        "lovetrumpshates", "notrumpanytime",  "defeattrump",
                        "weakdonald",      "sleazydonald",    "chickentrump",
                        "loserdonald",     "losertrump",      "showusyourtaxes",
                        "antitrump",       "freethedelegates", "traitfortrump"};
        s.validate();
        return s;
    }();
    return sets;
}

Side classify(const std::set<std::string>& hashtags, const HashtagSets& sets) {
    auto hits = [&](const std::set<std::string>& a, const std::set<std::string>& b) {
        return std::any_of(hashtags.begin(), hashtags.end(),
                           [&](const auto& h) { return a.contains(h) || b.contains(h); });
    };
    const bool t = hits(sets.pro_trump, sets.anti_clinton);
    const bool c = hits(sets.pro_clinton, sets.anti_trump);
    if (t && c) return Side::ambiguous;
    if (t) return Side::t;
    if (c) return Side::c;
    return Side::unclassified;
}

PartitionResult partition(std::span<const RawDocument> docs, const HashtagSets& sets,
                          const CleanOptions& options) {
    sets.validate();
    PartitionResult out;
    for (const auto& doc : docs) {
        TokenizedDocument tok = clean_and_tokenize(doc, options);
        switch (classify(extract_hashtags(doc.text), sets)) {
            case Side::t: out.group_t.push_back(std::move(tok)); break;
            case Side::c: out.group_c.push_back(std::move(tok)); break;
            case Side::ambiguous: out.ambiguous.push_back(std::move(tok)); break;
            case Side::unclassified: out.unclassified.push_back(std::move(tok)); break;
        }
    }
    return out;
}

}  // namespace roomtheory
