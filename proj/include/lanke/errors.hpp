#pragma once

#include <stdexcept>
#include <string>

namespace lanke {

// Size/enumeration bound exceeded; recoverable by raising the bound.
struct bound_error : std::runtime_error {
    explicit bound_error(const std::string& what) : std::runtime_error(what) {}
};

// A check of a mathematical statement failed.  This signals a bug in the
// engine (or a genuine counterexample) and maps to exit code 2 in the CLI.
struct theorem_violation : std::runtime_error {
    explicit theorem_violation(const std::string& what) : std::runtime_error(what) {}
};

// A matrix entry has a denominator divisible by the working prime.
struct prime_collision : std::runtime_error {
    explicit prime_collision(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lanke
