#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <istream>
#include <unordered_map>
#include <ostream>

#include "roomtheory/error.hpp"
#include "roomtheory/io.hpp"
#include "roomtheory/room.hpp"

namespace roomtheory {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

bool read_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

void put_u32(std::ostream& out, std::uint32_t v) {
    std::array<char, 4> b{};
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFFu);
    out.write(b.data(), b.size());
}

void put_u64(std::ostream& out, std::uint64_t v) {
    std::array<char, 8> b{};
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFFu);
    out.write(b.data(), b.size());
}

template <std::size_t N>
std::uint64_t get_le(std::istream& in, const std::string& source, const char* what) {
    std::array<unsigned char, N> b{};
    if (!in.read(reinterpret_cast<char*>(b.data()), N))
        throw ParseError(source, 0, std::string("truncated file while reading ") + what);
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < N; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

}  // namespace

Room read_room_text(std::istream& in, const std::string& source) {
    std::string line;
    std::size_t line_no = 1;
    if (!read_line(in, line)) throw ParseError(source, 1, "missing header line");
    auto header = split_fields(line);
    std::size_t vocab = 0, dim = 0;
    if (header.size() != 2 || !parse_number(header[0], vocab) || !parse_number(header[1], dim))
        throw ParseError(source, 1, "malformed header, expected \"<V> <e>\"");
    if (dim == 0) throw ParseError(source, 1, "embedding size must be at least 1");

    std::vector<std::string> tokens;
    std::vector<float> matrix;
    tokens.reserve(std::min<std::size_t>(vocab, 1u << 20));
    std::unordered_map<std::string, std::size_t> seen;
    while (read_line(in, line)) {
        ++line_no;
        auto fields = split_fields(line);
        if (fields.empty()) {
            // Tolerate a trailing blank line, nothing else.
            continue;
        }
        if (tokens.size() == vocab)
            throw ParseError(source, line_no,
                             "more rows than the " + std::to_string(vocab) + " declared in header");
        if (fields.size() != dim + 1)
            throw ParseError(source, line_no,
                             "row has " + std::to_string(fields.size() - 1) + " values, expected " +
                                 std::to_string(dim));
        std::string token(fields[0]);
        if (!seen.emplace(token, line_no).second)
            throw ParseError(source, line_no, "duplicate token '" + token + "'");
        for (std::size_t j = 1; j <= dim; ++j) {
            float v = 0.0f;
            if (!parse_number(fields[j], v) || !std::isfinite(v))
                throw ParseError(source, line_no,
                                 "bad vector component '" + std::string(fields[j]) + "'");
            matrix.push_back(v);
        }
        tokens.push_back(std::move(token));
    }
    if (tokens.size() != vocab)
        throw ParseError(source, line_no + 1,
                         "header declares " + std::to_string(vocab) + " rows, found " +
                             std::to_string(tokens.size()));
    return Room(std::move(tokens), std::move(matrix), dim, LoadedFrom{source});
}

void write_room_text(const Room& room, std::ostream& out) {
    out << room.size() << ' ' << room.dim() << '\n';
    std::array<char, 64> buf{};
    for (std::size_t i = 0; i < room.size(); ++i) {
        out << room.token(i);
        for (float v : room.row(i)) {
            auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
            out << ' ';
            out.write(buf.data(), ptr - buf.data());
        }
        out << '\n';
    }
}

Room read_room_binary(std::istream& in, const std::string& source) {
    std::array<char, kBinaryMagic.size()> magic{};
    if (!in.read(magic.data(), magic.size()) ||
        std::string_view(magic.data(), magic.size()) != kBinaryMagic)
        throw ParseError(source, 0, "bad magic, not a ROOM1 binary file");
    const std::uint64_t vocab = get_le<8>(in, source, "vocabulary size");
    const std::uint64_t dim = get_le<8>(in, source, "embedding size");
    if (dim == 0) throw ParseError(source, 0, "embedding size must be at least 1");

    std::vector<std::string> tokens;
    std::vector<float> matrix;
    // Sizes come from an untrusted header; let the vectors grow as data arrives.
    tokens.reserve(std::min<std::uint64_t>(vocab, 1u << 20));
    std::unordered_map<std::string, std::uint64_t> seen;
    for (std::uint64_t i = 0; i < vocab; ++i) {
        const auto len = static_cast<std::size_t>(get_le<4>(in, source, "token length"));
        std::string token(len, '\0');
        if (len && !in.read(token.data(), static_cast<std::streamsize>(len)))
            throw ParseError(source, 0, "truncated token at entry " + std::to_string(i));
        if (!seen.emplace(token, i).second)
            throw ParseError(source, 0,
                             "duplicate token '" + token + "' at entry " + std::to_string(i));
        for (std::uint64_t j = 0; j < dim; ++j)
            matrix.push_back(
                std::bit_cast<float>(static_cast<std::uint32_t>(get_le<4>(in, source, "vector"))));
        tokens.push_back(std::move(token));
    }
    return Room(std::move(tokens), std::move(matrix), static_cast<std::size_t>(dim),
                LoadedFrom{source});
}

void write_room_binary(const Room& room, std::ostream& out) {
    out.write(kBinaryMagic.data(), static_cast<std::streamsize>(kBinaryMagic.size()));
    put_u64(out, room.size());
    put_u64(out, room.dim());
    for (std::size_t i = 0; i < room.size(); ++i) {
        const auto& tok = room.token(i);
        put_u32(out, static_cast<std::uint32_t>(tok.size()));
        out.write(tok.data(), static_cast<std::streamsize>(tok.size()));
        for (float v : room.row(i)) put_u32(out, std::bit_cast<std::uint32_t>(v));
    }
}

Room load_room(const std::filesystem::path& path, RoomFormat format) {
    auto in = open_input(path, format == RoomFormat::binary);
    return format == RoomFormat::binary ? read_room_binary(in, path.string())
                                        : read_room_text(in, path.string());
}

Room load_room(const std::filesystem::path& path) {
    auto in = open_input(path, true);
    std::array<char, kBinaryMagic.size()> magic{};
    in.read(magic.data(), magic.size());
    const bool binary = in.gcount() == static_cast<std::streamsize>(magic.size()) &&
                        std::string_view(magic.data(), magic.size()) == kBinaryMagic;
    return load_room(path, binary ? RoomFormat::binary : RoomFormat::text);
}

void save_room(const Room& room, const std::filesystem::path& path, RoomFormat format) {
    write_file_atomically(path, [&](std::ostream& out) {
        if (format == RoomFormat::binary)
            write_room_binary(room, out);
        else
            write_room_text(room, out);
    });
}

}  // namespace roomtheory
