#include "unicode.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>

#include "roomtheory/error.hpp"

namespace roomtheory::unicode {

namespace {

const icu::Normalizer2& nfc_instance() {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status) || n == nullptr) throw Error("ICU NFC normalizer unavailable");
    return *n;
}

icu::UnicodeString normalize(const icu::UnicodeString& s) {
    UErrorCode status = U_ZERO_ERROR;
    icu::UnicodeString out = nfc_instance().normalize(s, status);
    if (U_FAILURE(status)) throw Error("ICU normalization failed");
    return out;
}

}  // namespace

icu::UnicodeString nfc(std::string_view utf8) {
    return normalize(icu::UnicodeString::fromUTF8(
        icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size()))));
}

icu::UnicodeString fold(std::string_view utf8) {
    icu::UnicodeString s = nfc(utf8);
    s.toLower(icu::Locale::getRoot());
    return normalize(s);
}

std::string to_utf8(const icu::UnicodeString& s) {
    std::string out;
    s.toUTF8String(out);
    return out;
}

std::string lower(std::string_view utf8) { return to_utf8(fold(utf8)); }

bool is_word_char(UChar32 c) {
    if (u_isalnum(c)) return true;
    const auto mask = U_GET_GC_MASK(c);
    return (mask & U_GC_M_MASK) != 0;
}

}  // namespace roomtheory::unicode
