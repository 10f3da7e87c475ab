#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace roomtheory {

// How a room came to be. Loaded rooms carry no training provenance.
struct TrainProvenance {
    std::size_t window = 0;
    std::size_t min_count = 0;
    std::size_t epochs = 0;
    std::uint64_t seed = 0;

    bool operator==(const TrainProvenance&) const = default;
};

struct LoadedFrom {
    std::string path;

    bool operator==(const LoadedFrom&) const = default;
};

using RoomMeta = std::variant<LoadedFrom, TrainProvenance>;

namespace detail {
struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
        return std::hash<std::string_view>{}(s);
    }
};
}  // namespace detail

// An immutable embedding space: the vocabulary of one corpus and one vector
// per token. Row i of the matrix belongs to tokens()[i].
class Room {
public:
    // Throws InputError on duplicate/empty tokens, a matrix whose size is not
    // tokens.size() * dim, dim == 0, or non-finite components.
    Room(std::vector<std::string> tokens, std::vector<float> matrix, std::size_t dim,
         RoomMeta meta = LoadedFrom{});

    std::size_t size() const noexcept { return tokens_.size(); }
    std::size_t dim() const noexcept { return dim_; }

    const std::vector<std::string>& tokens() const noexcept { return tokens_; }
    const std::string& token(std::size_t index) const { return tokens_.at(index); }
    std::span<const float> matrix() const noexcept { return matrix_; }
    std::span<const float> row(std::size_t index) const;
    const RoomMeta& meta() const noexcept { return meta_; }

    std::optional<std::size_t> index_of(std::string_view token) const;

    // nullopt means out-of-vocabulary, which is a normal outcome.
    std::optional<std::span<const float>> lookup(std::string_view token) const;

    bool contains(std::string_view token) const { return index_of(token).has_value(); }

    // Same vocabulary (in order) and bitwise-identical vectors; meta ignored.
    bool same_space(const Room& other) const;

private:
    std::vector<std::string> tokens_;
    std::vector<float> matrix_;
    std::size_t dim_;
    RoomMeta meta_;
    std::unordered_map<std::string, std::size_t, detail::StringHash, std::equal_to<>> index_;
};

// Cosine similarity, accumulated in double. Throws DimensionError on length
// mismatch and DomainError when either input has zero norm.
double cosine(std::span<const float> a, std::span<const float> b);
double cosine(std::span<const double> a, std::span<const float> b);
double cosine(std::span<const double> a, std::span<const double> b);

struct Neighbor {
    std::size_t index;
    std::string token;
    double score;

    bool operator==(const Neighbor&) const = default;
};

// Exact scan over the whole vocabulary. Returns at most k entries with
// score strictly greater than threshold, best first; equal scores keep
// vocabulary order. Zero-norm rows are never candidates.
std::vector<Neighbor> nearest(const Room& room, std::span<const float> query, std::size_t k,
                              double threshold);
std::vector<Neighbor> nearest(const Room& room, std::span<const double> query, std::size_t k,
                              double threshold);

// Token seed: the seed itself is excluded. Throws NotFound for an OOV seed.
std::vector<Neighbor> nearest(const Room& room, std::string_view seed, std::size_t k,
                              double threshold);

enum class RoomFormat { text, binary };

// Binary files start with this tag; anything else is read as text.
inline constexpr std::string_view kBinaryMagic = "ROOM1";

Room load_room(const std::filesystem::path& path, RoomFormat format);
// Sniffs the magic bytes to pick the format.
Room load_room(const std::filesystem::path& path);
void save_room(const Room& room, const std::filesystem::path& path, RoomFormat format);

// Stream-level codecs; `source` only labels error messages.
Room read_room_text(std::istream& in, const std::string& source = "<text>");
Room read_room_binary(std::istream& in, const std::string& source = "<binary>");
void write_room_text(const Room& room, std::ostream& out);
void write_room_binary(const Room& room, std::ostream& out);

}  // namespace roomtheory
