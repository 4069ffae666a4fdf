#pragma once

#include <string>
#include <vector>

#include "lanke/rational.hpp"

namespace lanke {

// Integer partition, parts weakly decreasing, all parts >= 1.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);
    Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

    int m() const;                 // sum of parts
    int rows() const { return static_cast<int>(parts.size()); }
    int operator[](int i) const { return parts[i]; }  // 0-based row index

    bool operator==(const Partition&) const = default;
    // Ordering used throughout: descending lexicographic on the part lists,
    // i.e. (m) first, (1^m) last.  See partitions_of().
    bool operator<(const Partition& o) const { return parts > o.parts; }

    std::string to_string() const;                 // "2,2,1"
    static Partition from_string(const std::string&);
};

Partition conjugate(const Partition& lam);
bool is_staircase(const Partition& lam);

// All partitions of m in descending-lex order (trivial shape first).
const std::vector<Partition>& partitions_of(int m);
int partition_index(const Partition& lam);  // index into partitions_of(lam.m())

// Number of standard Young tableaux of shape lam, by the hook length formula.
Int hook_dim(const Partition& lam);

Int factorial(int m);
Int binomial(int n, int k);
Int catalan(int n);

// Bijective filling of the diagram of `shape` with 1..m.
// entries[r][c] is the entry in row r, column c (0-based internally;
// the external convention is 1-based English notation).
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> entries;

    bool is_standard() const;  // rows and columns strictly increase
    std::string to_string() const;  // rows joined by ';': "1,3;2"
    static Tableau from_string(const Partition& shape, const std::string&);
};

// Descent sum: positions i such that i+1 lies in a strictly lower row.
int maj(const Tableau& t);

inline constexpr int kSytEnumerationBound = 16;

// All standard Young tableaux of shape lam, in lexicographic order of the
// row reading word.  Throws bound_error above kSytEnumerationBound.
std::vector<Tableau> enumerate_syt(const Partition& lam);

struct Decomposition {
    std::vector<std::pair<Partition, Int>> terms;  // sorted by partition order

    Int total_dim() const;
    Int multiplicity(const Partition& lam) const;
    bool operator==(const Decomposition&) const = default;
    std::string to_string() const;  // "S^(2,1) + 2 S^(1,1,1)"
};

// Branching rule: restriction of S^lam from S_m to S_{m-1} is the sum over
// removable corners, each with multiplicity 1.
Decomposition restrict_irreducible(const Partition& lam);

// Shape of the partition "lam with n-2 rows of length k-1 stacked on top".
// Requires lam.parts[0] <= k-1.
Partition add_rows(const Partition& lam, int n, int k);

}  // namespace lanke
