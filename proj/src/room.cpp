#include "roomtheory/room.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "roomtheory/error.hpp"

namespace roomtheory {

Room::Room(std::vector<std::string> tokens, std::vector<float> matrix, std::size_t dim,
           RoomMeta meta)
    : tokens_(std::move(tokens)), matrix_(std::move(matrix)), dim_(dim), meta_(std::move(meta)) {
    if (dim_ == 0) throw InputError("room dimension must be at least 1");
    if (matrix_.size() != tokens_.size() * dim_)
        throw DimensionError("room matrix holds " + std::to_string(matrix_.size()) +
                             " values, expected " + std::to_string(tokens_.size()) + " x " +
                             std::to_string(dim_));
    for (std::size_t i = 0; i < matrix_.size(); ++i)
        if (!std::isfinite(matrix_[i]))
            throw InputError("non-finite component in vector of '" + tokens_[i / dim_] + "'");
    index_.reserve(tokens_.size());
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        if (tokens_[i].empty()) throw InputError("empty token at row " + std::to_string(i));
        if (!index_.emplace(tokens_[i], i).second)
            throw InputError("duplicate token '" + tokens_[i] + "'");
    }
}

std::span<const float> Room::row(std::size_t index) const {
    if (index >= tokens_.size()) throw std::out_of_range("room row out of range");
    return std::span<const float>(matrix_).subspan(index * dim_, dim_);
}

std::optional<std::size_t> Room::index_of(std::string_view token) const {
    auto it = index_.find(token);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::span<const float>> Room::lookup(std::string_view token) const {
    auto idx = index_of(token);
    if (!idx) return std::nullopt;
    return row(*idx);
}

bool Room::same_space(const Room& other) const {
    if (dim_ != other.dim_ || tokens_ != other.tokens_) return false;
    return std::equal(matrix_.begin(), matrix_.end(), other.matrix_.begin(), other.matrix_.end(),
                      [](float a, float b) {
                          return std::bit_cast<std::uint32_t>(a) == std::bit_cast<std::uint32_t>(b);
                      });
}

namespace {

template <typename A, typename B>
double cosine_impl(std::span<const A> a, std::span<const B> b) {
    if (a.size() != b.size())
        throw DimensionError("cosine: length mismatch " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double x = a[i];
        const double y = b[i];
        dot += x * y;
        na += x * x;
        nb += y * y;
    }
    if (na == 0.0 || nb == 0.0) throw DomainError("cosine: degenerate vector (zero norm)");
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

template <typename T>
double squared_norm(std::span<const T> v) {
    double s = 0.0;
    for (T x : v) s += static_cast<double>(x) * static_cast<double>(x);
    return s;
}

template <typename T>
std::vector<Neighbor> scan(const Room& room, std::span<const T> query, std::size_t k,
                           double threshold, std::optional<std::size_t> exclude) {
    if (query.size() != room.dim())
        throw DimensionError("nearest: query has " + std::to_string(query.size()) +
                             " components, room has " + std::to_string(room.dim()));
    std::vector<Neighbor> out;
    if (k == 0) return out;
    if (squared_norm(query) == 0.0) throw DomainError("nearest: degenerate query vector");

    std::vector<std::pair<double, std::size_t>> hits;
    for (std::size_t i = 0; i < room.size(); ++i) {
        if (exclude && *exclude == i) continue;
        auto row = room.row(i);
        if (squared_norm(row) == 0.0) continue;
        const double s = cosine_impl<T, float>(query, row);
        if (s > threshold) hits.emplace_back(s, i);
    }
    auto better = [](const auto& x, const auto& y) {
        return x.first > y.first || (x.first == y.first && x.second < y.second);
    };
    const std::size_t n = std::min(k, hits.size());
    std::partial_sort(hits.begin(), hits.begin() + static_cast<std::ptrdiff_t>(n), hits.end(),
                      better);
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back({hits[i].second, room.token(hits[i].second), hits[i].first});
    return out;
}

}  // namespace

double cosine(std::span<const float> a, std::span<const float> b) {
    return cosine_impl<float, float>(a, b);
}

double cosine(std::span<const double> a, std::span<const float> b) {
    return cosine_impl<double, float>(a, b);
}

double cosine(std::span<const double> a, std::span<const double> b) {
    return cosine_impl<double, double>(a, b);
}

std::vector<Neighbor> nearest(const Room& room, std::span<const float> query, std::size_t k,
                              double threshold) {
    return scan<float>(room, query, k, threshold, std::nullopt);
}

std::vector<Neighbor> nearest(const Room& room, std::span<const double> query, std::size_t k,
                              double threshold) {
    return scan<double>(room, query, k, threshold, std::nullopt);
}

std::vector<Neighbor> nearest(const Room& room, std::string_view seed, std::size_t k,
                              double threshold) {
    auto idx = room.index_of(seed);
    if (!idx) throw NotFound("token not in room: '" + std::string(seed) + "'");
    return scan<float>(room, room.row(*idx), k, threshold, idx);
}

}  // namespace roomtheory
