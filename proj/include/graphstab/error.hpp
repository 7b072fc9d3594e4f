#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace graphstab {

// Carries a short machine-checkable name ("ZeroInverse", "NotSelfOrthogonal", ...)
// in front of the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

// Malformed input text (bad header, wrong token count, non-integer digits).
// Distinct from Error so the CLI can map it to its own exit code.
class ParseError : public Error {
public:
    ParseError(const std::string& detail) : Error("ParseError", detail) {}
};

} // namespace graphstab
