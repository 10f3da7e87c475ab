#pragma once

#include <string>
#include <string_view>

#include <unicode/unistr.h>

namespace roomtheory::unicode {

// NFC-normalised UnicodeString; invalid UTF-8 becomes U+FFFD.
icu::UnicodeString nfc(std::string_view utf8);

// NFC + root-locale full lowercase.
icu::UnicodeString fold(std::string_view utf8);

std::string to_utf8(const icu::UnicodeString& s);

std::string lower(std::string_view utf8);

// Letters, digits and combining marks; what a token or tag body is made of.
bool is_word_char(UChar32 c);

}  // namespace roomtheory::unicode
