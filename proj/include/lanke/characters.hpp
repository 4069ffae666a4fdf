#pragma once

#include <vector>

#include "lanke/combinatorics.hpp"
#include "lanke/rational.hpp"

namespace lanke {

inline constexpr int kCharacterDegreeBound = 12;

struct ConjugacyClass {
    Partition cycle_type;
    Int size;
};

// Classes of S_m, one per cycle type, in partitions_of(m) order.
const std::vector<ConjugacyClass>& conjugacy_classes(int m);

// Order of the centralizer of a permutation of cycle type mu.
Int centralizer_order(const Partition& mu);

// Rational-valued class function on S_m; values[i] is the value on the
// cycle type partitions_of(m)[i].
struct ClassFunction {
    int m = 0;
    std::vector<Rat> values;

    static ClassFunction zero(int m);
    Rat at(const Partition& cycle_type) const;
    Rat degree() const;  // value on the identity class (1^m)

    ClassFunction& operator+=(const ClassFunction&);
    ClassFunction& operator-=(const ClassFunction&);
    ClassFunction operator+(const ClassFunction&) const;
    ClassFunction operator-(const ClassFunction&) const;
    bool operator==(const ClassFunction&) const = default;

    std::string to_json() const;
    static ClassFunction from_json(const std::string&);
};

// Irreducible character chi^lam by the Murnaghan-Nakayama rule (memoized).
ClassFunction irreducible_character(const Partition& lam);

ClassFunction trivial_character(int m);
ClassFunction sign_character(int m);

Rat inner_product(const ClassFunction& chi, const ClassFunction& psi);

// Full decomposition into irreducibles; throws theorem_violation if any
// multiplicity is negative or non-integral.
Decomposition decompose(const ClassFunction& chi);

ClassFunction character_of(const Decomposition& d);

// Induction of chi1 x chi2 from the Young subgroup S_a x S_b to S_{a+b}.
ClassFunction induce_product(const ClassFunction& chi1, const ClassFunction& chi2);

// (sgn_a x sgn_b) induced from S_a x S_b to S_{a+b}.
ClassFunction induced_sign_young(int a, int b);

// Induction from S_m to S_{m+1}.
ClassFunction induce_to_next(const ClassFunction& chi);

// Restriction from S_m to S_{m-1}.
ClassFunction restrict_to_prev(const ClassFunction& chi);

// Character induced to S_k from a faithful one-dimensional representation
// of the cyclic subgroup generated by a k-cycle.
ClassFunction induced_cyclic_character(int k);

// Number of standard Young tableaux of shape lam (a partition of k) with
// major index congruent to i mod k.  i must be coprime to k.
Int kw_multiplicity(const Partition& lam, int k, int i = 1);

}  // namespace lanke
