#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ggk {

// Base of every error thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller broke an operation's precondition (not a tree, vertex out of
// range, instance above the desk-scale cap, ...).
class precondition_error : public error {
public:
    using error::error;
};

// An analyzer or self-verifying construction observed something a proved
// result rules out. Never expected; surfaced so the harness can fail loudly.
class theorem_violation : public error {
public:
    theorem_violation(std::string tag, const std::string& details)
        : error(tag + ": " + details), tag_(std::move(tag)) {}

    const std::string& tag() const noexcept { return tag_; }

private:
    std::string tag_;
};

// A failed theorem check, reported instead of thrown by the analyzers.
struct Violation {
    std::string tag;
    std::string details;

    bool operator==(const Violation&) const = default;
};

using Violations = std::vector<Violation>;

} // namespace ggk
