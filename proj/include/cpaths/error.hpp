#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpaths {

/// Child-index address inside a path, derivation or cell tree.
using TreePos = std::vector<int>;

std::string format_pos(const TreePos& pos);

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidIdentifier : public Error {
public:
    using Error::Error;
};

class NotARedex : public Error {
public:
    using Error::Error;
};

class InvalidPosition : public Error {
public:
    using Error::Error;
};

class NoMatch : public Error {
public:
    using Error::Error;
};

class NotEquivalent : public Error {
public:
    using Error::Error;
};

class NotParallel : public Error {
public:
    using Error::Error;
};

/// A path, derivation or cell whose boundaries do not chain.
class IllFormed : public Error {
public:
    IllFormed(TreePos pos, std::string reason);

    const TreePos& pos() const noexcept { return pos_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    TreePos pos_;
    std::string reason_;
};

class FuelExhausted : public Error {
public:
    explicit FuelExhausted(std::size_t steps);

    std::size_t steps() const noexcept { return steps_; }

private:
    std::size_t steps_;
};

class SyntaxError : public Error {
public:
    SyntaxError(int line, int column, const std::string& what);

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// Outcome of a structural re-check (validate, verify, verify_cell).
struct Failure {
    enum class Kind { IllFormed, BadStep, BadChain, BadBoundary };
    Kind kind;
    TreePos pos;
    std::string reason;
};

const char* to_string(Failure::Kind kind);

class Verdict {
public:
    static Verdict ok() { return Verdict{}; }
    static Verdict fail(Failure::Kind kind, TreePos pos, std::string reason);

    bool is_ok() const noexcept { return !failed_; }
    explicit operator bool() const noexcept { return !failed_; }
    const Failure& failure() const;
    std::string describe() const;

private:
    bool failed_ = false;
    Failure failure_{};
};

}  // namespace cpaths
