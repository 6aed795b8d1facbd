#include "cpaths/error.hpp"

namespace cpaths {

std::string format_pos(const TreePos& pos) {
    std::string out = "[";
    for (std::size_t i = 0; i < pos.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(pos[i]);
    }
    out += ']';
    return out;
}

IllFormed::IllFormed(TreePos pos, std::string reason)
    : Error("ill-formed at " + format_pos(pos) + ": " + reason),
      pos_(std::move(pos)),
      reason_(std::move(reason)) {}

FuelExhausted::FuelExhausted(std::size_t steps)
    : Error("fuel exhausted after " + std::to_string(steps) + " steps"), steps_(steps) {}

SyntaxError::SyntaxError(int line, int column, const std::string& what)
    : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

const char* to_string(Failure::Kind kind) {
    switch (kind) {
        case Failure::Kind::IllFormed: return "IllFormed";
        case Failure::Kind::BadStep: return "BadStep";
        case Failure::Kind::BadChain: return "BadChain";
        case Failure::Kind::BadBoundary: return "BadBoundary";
    }
    return "?";
}

Verdict Verdict::fail(Failure::Kind kind, TreePos pos, std::string reason) {
    Verdict v;
    v.failed_ = true;
    v.failure_ = Failure{kind, std::move(pos), std::move(reason)};
    return v;
}

const Failure& Verdict::failure() const {
    if (!failed_) throw std::logic_error("Verdict::failure() on an ok verdict");
    return failure_;
}

std::string Verdict::describe() const {
    if (!failed_) return "ok";
    return std::string(to_string(failure_.kind)) + " at " + format_pos(failure_.pos) + ": " +
           failure_.reason;
}

}  // namespace cpaths
