#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace roomtheory {

// Base of every error thrown by the library. Anything deriving from
// InputError is the caller's fault (bad file, bad flag, bad argument);
// everything else is an internal failure.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
    using Error::Error;
};

// A file did not match its documented format. line() is 1-based, 0 when the
// problem is not tied to a single line (e.g. truncated binary data).
class ParseError : public InputError {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& what)
        : InputError(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
          source_(source), line_(line) {}

    const std::string& source() const noexcept { return source_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string source_;
    std::size_t line_;
};

class NotFound : public InputError {
public:
    using InputError::InputError;
};

// Zero-norm vector handed to a similarity computation.
class DomainError : public InputError {
public:
    using InputError::InputError;
};

class DimensionError : public InputError {
public:
    using InputError::InputError;
};

// Raised when a benchmark references words the room has never seen and the
// caller asked for the strict policy.
class MissingBenchmarkWords : public InputError {
public:
    explicit MissingBenchmarkWords(std::vector<std::string> words)
        : InputError(format(words)), words_(std::move(words)) {}

    const std::vector<std::string>& words() const noexcept { return words_; }

private:
    static std::string format(const std::vector<std::string>& words) {
        std::string msg = "benchmark words missing from room:";
        for (const auto& w : words) msg += " " + w;
        return msg;
    }

    std::vector<std::string> words_;
};

}  // namespace roomtheory
