#include "lanke/conjecture.hpp"

#include <algorithm>
#include <map>

#include "lanke/errors.hpp"

namespace lanke {

ClassFunction lie_character(int k, const EngineOptions& opts) {
    if (k < 2 || k > 7) throw bound_error("lie_character: k out of supported range");
    return character_rho(2, k, opts);
}

ClassFunction whitehouse_character(int k, const EngineOptions& opts) {
    if (k < 2 || k > 6) throw bound_error("whitehouse_character: k out of supported range");
    ClassFunction w = induce_to_next(lie_character(k, opts)) - lie_character(k + 1, opts);
    decompose(w);  // must be a genuine character
    if (!(restrict_to_prev(w) == lie_character(k, opts)))
        throw theorem_violation("whitehouse_character: restriction does not recover Lie(k)");
    return w;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::match: return "match";
        case Verdict::dim_match_only: return "dim-match-only";
        case Verdict::mismatch: return "mismatch";
        case Verdict::engine_unavailable: return "engine-unavailable";
    }
    return "?";
}

ConjectureReport conjecture_check(int n, int k, bool dims_only, const EngineOptions& opts) {
    ConjectureReport rep;
    rep.n = n;
    rep.k = k;
    rep.m = generator_count(n, k);
    rep.dims_only = dims_only;

    // predicted module: branching-rule restriction of each widened
    // Whitehouse constituent
    Decomposition w = decompose(whitehouse_character(k, opts));
    std::map<Partition, Int> predicted;
    for (const auto& [mu, mult] : w.terms) {
        Partition wide;
        try {
            wide = add_rows(mu, n, k);
        } catch (const std::invalid_argument&) {
            rep.flagged_constituents.push_back(mu);
            continue;
        }
        for (const auto& [nu, one] : restrict_irreducible(wide).terms)
            predicted[nu] += mult * one;
    }
    for (const auto& [nu, mult] : predicted)
        rep.predicted_decomposition.terms.emplace_back(nu, mult);
    rep.predicted_dim = rep.predicted_decomposition.total_dim();

    // engine side
    try {
        DimReport dr = dim_rho(n, k, opts);
        rep.engine_dim = Int(dr.dim);
    } catch (const bound_error&) {
        rep.verdict = Verdict::engine_unavailable;
        return rep;
    }
    if (!dims_only) {
        try {
            rep.engine_decomposition = decompose(character_rho(n, k, opts));
        } catch (const bound_error&) {
            // dimension-only comparison below
        }
    }

    bool dim_ok = *rep.engine_dim == rep.predicted_dim;
    if (rep.engine_decomposition) {
        rep.verdict = !dim_ok                  ? Verdict::mismatch
                      : (*rep.engine_decomposition == rep.predicted_decomposition)
                          ? Verdict::match
                          : Verdict::dim_match_only;
    } else {
        rep.verdict = dim_ok ? Verdict::dim_match_only : Verdict::mismatch;
    }
    return rep;
}

}  // namespace lanke
