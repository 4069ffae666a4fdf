#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lanke/rational.hpp"

namespace lanke {

// Sparse row: (column, value) pairs sorted by column, no zero values.
using SparseVec = std::vector<std::pair<int, Rat>>;

class SparseRationalMatrix {
  public:
    SparseRationalMatrix() = default;
    SparseRationalMatrix(int n_rows, int n_cols);

    int n_rows() const { return n_rows_; }
    int n_cols() const { return n_cols_; }
    long long nnz() const;

    void set(int row, int col, const Rat& value);  // value 0 erases
    Rat get(int row, int col) const;
    const SparseVec& row(int r) const { return rows_[r]; }
    void set_row(int r, SparseVec v);
    void append_row(SparseVec v);

    SparseRationalMatrix transpose() const;
    bool operator==(const SparseRationalMatrix&) const = default;

    // Text triplet format: header "rows cols nnz", then one line
    // "row col numerator/denominator" per entry (0-based indices).
    std::string dump() const;
    static SparseRationalMatrix load(const std::string& text);

  private:
    int n_rows_ = 0, n_cols_ = 0;
    std::vector<SparseVec> rows_;
};

struct EchelonForm {
    SparseRationalMatrix matrix;     // reduced row echelon form
    std::vector<int> pivot_columns;  // ascending

    int rank() const { return static_cast<int>(pivot_columns.size()); }
};

// Reduced row echelon form (unique for a given row space).
EchelonForm rref(const SparseRationalMatrix& M);

int rank(const SparseRationalMatrix& M);

// Basis of the right kernel; M * v = 0 exactly for each basis vector.
std::vector<SparseVec> kernel_basis(const SparseRationalMatrix& M);

// v reduced modulo the row space of E (pivot coordinates eliminated).
SparseVec reduce_against(const EchelonForm& E, SparseVec v);

// Matrix-vector product g * v (v indexed by columns of g).
SparseVec mat_vec(const SparseRationalMatrix& g, const SparseVec& v);

// Trace of g restricted to the row space of subspace_rref.  Throws
// theorem_violation if the row space is not invariant under g.
Rat restricted_trace(const SparseRationalMatrix& g_matrix, const EchelonForm& subspace_rref);

// Default 31-bit working primes for the modular rank path.
inline constexpr std::uint64_t kDefaultPrimes[2] = {2147483629ull, 2147483587ull};

struct ModularRankResult {
    int rank = 0;        // max over the primes: a lower bound on the rational rank
    bool confident = false;  // at least two primes agreed on the max
    std::vector<int> per_prime;
};

// Rank of M modulo each prime.  Primes must be > 2^20 and pairwise distinct;
// an entry whose denominator is divisible by a prime raises prime_collision.
ModularRankResult modular_rank(const SparseRationalMatrix& M,
                               const std::vector<std::uint64_t>& primes);

}  // namespace lanke
