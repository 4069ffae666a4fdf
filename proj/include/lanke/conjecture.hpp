#pragma once

#include <optional>
#include <string>

#include "lanke/characters.hpp"
#include "lanke/engine.hpp"

namespace lanke {

// Lie(k) as computed by the general engine (n = 2), with the Klyachko and
// Kraskiewicz-Weyman descriptions available as oracles in the test suite.
ClassFunction lie_character(int k, const EngineOptions& opts = {});

// W_{k+1} = Lie(k) induced to S_{k+1} modulo Lie(k+1).
ClassFunction whitehouse_character(int k, const EngineOptions& opts = {});

enum class Verdict { match, dim_match_only, mismatch, engine_unavailable };

std::string to_string(Verdict v);

struct ConjectureReport {
    int n = 0, k = 0, m = 0;
    Int predicted_dim = 0;
    Decomposition predicted_decomposition;
    std::optional<Int> engine_dim;
    std::optional<Decomposition> engine_decomposition;
    Verdict verdict = Verdict::engine_unavailable;
    // constituents of W_{k+1} that violate the first-part <= k-1 condition
    std::vector<Partition> flagged_constituents;
    bool dims_only = false;
};

// Predicted module: restrict each W_{k+1} constituent, widened by n-2 rows
// of length k-1, from S_{m+1} down to S_m by the branching rule; compare
// with the engine's rho_{n,k}.
ConjectureReport conjecture_check(int n, int k, bool dims_only = false,
                                  const EngineOptions& opts = {});

}  // namespace lanke
