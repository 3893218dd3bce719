#pragma once

#include <stdexcept>
#include <string>

namespace leavitt {

// Malformed textual input: graph files, expressions, descriptors.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A value violates a mathematical precondition (wrong field, reducible
// modulus, non-closed path, mismatched sessions, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Generator images fail the defining relations.
struct relation_error : std::runtime_error {
    explicit relation_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace leavitt
