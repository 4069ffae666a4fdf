#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lanke/combinatorics.hpp"
#include "lanke/sparse_linalg.hpp"

namespace lanke {

// Filling stored column by column, columns strictly increasing top-down
// once canonicalized.
using ColumnFilling = std::vector<std::vector<int>>;

// Sort each column ascending; the sign is the product of the per-column
// sort parities.
std::pair<ColumnFilling, int> sort_columns(ColumnFilling f);

std::pair<ColumnFilling, int> canonical_tabloid(const Tableau& t);

std::string filling_to_string(const ColumnFilling& f);  // row-major "1,3;2"

inline constexpr long kTabloidDimBound = 100000;

// The space M^lambda: column-sorted bijective fillings modulo column
// relations.  Basis size m! / prod (column length)!.
class ColumnTabloidSpace {
  public:
    explicit ColumnTabloidSpace(Partition shape);

    const Partition& shape() const { return shape_; }
    const std::vector<int>& column_lengths() const { return col_lengths_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<ColumnFilling>& basis() const { return basis_; }
    int index_of(const ColumnFilling& sorted_filling) const;

  private:
    Partition shape_;
    std::vector<int> col_lengths_;  // conjugate parts
    std::vector<ColumnFilling> basis_;
    std::unordered_map<std::string, int> index_;
};

// Garnir vector g^t_{c,k} = t-bar minus the sum over all k-subsets of
// column c exchanged with the top k entries of column c+1 (vertical order
// kept, then columns re-sorted).  c is 1-based.
SparseVec garnir_vector(const ColumnTabloidSpace& M, const ColumnFilling& t, int c, int k);

enum class GarnirMode { full, reduced };
enum class GarnirTSet { all_fillings, standard_only };

// Rows g^t_{c,k} over the chosen set of tableaux t.  In reduced mode,
// columns c with conj_{c+1} = conj_c - 1 contribute only the full exchange
// k = conj_{c+1}; other columns contribute every k.
SparseRationalMatrix garnir_generators(const ColumnTabloidSpace& M, GarnirMode mode,
                                       GarnirTSet tset = GarnirTSet::all_fillings);

Int specht_dim_full(const Partition& shape);
Int specht_dim_reduced(const Partition& shape);

// Image of a filling under a permutation of the entries, canonicalized.
std::pair<ColumnFilling, int> act_on_filling(const std::vector<int>& sigma,
                                             const ColumnFilling& f);

}  // namespace lanke
