#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "lanke/bracket.hpp"
#include "lanke/characters.hpp"
#include "lanke/sparse_linalg.hpp"

namespace lanke {

struct EngineOptions {
    long max_basis = 100000;        // dimension-path bound on |basis|
    long max_char_basis = 1200;     // character-path bound on |basis|
    int exact_rank_threshold = 1200;  // basis sizes up to this use rational rank
    std::vector<std::uint64_t> primes{kDefaultPrimes[0], kDefaultPrimes[1]};
    std::uint64_t escalation_prime = 2147483563ull;  // third prime on disagreement
    bool exact_verify = false;      // force the rational path regardless of size
};

// Pre-Jacobi space: canonical bracketed words with index lookup.
class VSpace {
  public:
    VSpace(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    int m() const { return m_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<BracketedWord>& basis() const { return basis_; }
    int index_of(const BracketedWord& canonical) const;

    // Signed permutation matrix of sigma acting on the canonical basis.
    SparseRationalMatrix action_matrix(const std::vector<int>& sigma) const;

  private:
    int n_, k_, m_;
    std::vector<BracketedWord> basis_;
    std::unordered_map<std::string, int> index_;
};

struct RelationProvenance {
    int tree_index;   // basis tree the relation was generated in
    int node_id;      // preorder id of the context node P
    int child_pos;    // position of the expanded bracket child C under P
};

struct RelationSet {
    SparseRationalMatrix matrix;  // columns indexed by VSpace basis
    std::vector<RelationProvenance> provenance;
};

// One generalized Jacobi relation per (canonical tree, internal node P,
// internal child C of P), expanded and canonicalized in context.
RelationSet jacobi_relations(const VSpace& V);

struct DimReport {
    int n = 0, k = 0, m = 0;
    int basis_size = 0;
    int relation_rank = 0;
    int dim = 0;
    bool used_modular = false;
    bool confident = true;  // two-prime agreement (rational path: always)
    std::vector<std::uint64_t> primes_used;
};

DimReport dim_rho(int n, int k, const EngineOptions& opts = {});

ClassFunction character_rho(int n, int k, const EngineOptions& opts = {});

// ---- the phi operator (k = 3) ----

// Entry <phi(v_S), v_T> of Lemma-style closed form: 1 if S = T, (-1)^d if
// the intersection is the singleton {d}, else 0.
int phi_entry(const std::vector<int>& S, const std::vector<int>& T);

enum class PhiMethod { closed_form, definitional };

struct PhiMatrix {
    int n = 0;
    std::vector<std::vector<int>> subsets;  // n-subsets of [2n-1], lex order
    SparseRationalMatrix matrix;            // entry (T_row, S_col)
};

PhiMatrix phi_matrix(int n, PhiMethod method);

struct PhiSpectrum {
    int n = 0;
    // (eigenvalue w_i, multiplicity) for i = 0..n-1, in i order
    std::vector<std::pair<int, int>> eigenvalues;
};

// Kernel dimensions of phi - w_i at the candidate eigenvalues
// w_i = 1 + (n-i)(-1)^{n-i}; throws theorem_violation if the multiplicities
// do not exhaust the space.
PhiSpectrum phi_spectrum(int n, const EngineOptions& opts = {});

// Standard bracketed permutations on [2n-1]; count must be the nth Catalan
// number and their classes must be independent modulo the Jacobi relations.
std::vector<BracketedWord> standard_brackets(int n, const EngineOptions& opts = {});

// Permutation of [m] with the given cycle type, cycles on consecutive blocks.
std::vector<int> class_representative(const Partition& cycle_type);

}  // namespace lanke
