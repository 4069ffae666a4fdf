#pragma once

#include <string>
#include <vector>

namespace lanke {

// Bracketed word: a tree whose internal nodes have exactly n children and
// whose leaves carry pairwise distinct positive integer labels.
class BracketedWord {
  public:
    static BracketedWord leaf(int label);
    static BracketedWord node(std::vector<BracketedWord> children);

    bool is_leaf() const { return children_.empty(); }
    int label() const { return label_; }
    const std::vector<BracketedWord>& children() const { return children_; }
    int min_leaf() const { return min_leaf_; }
    int arity() const { return static_cast<int>(children_.size()); }

    int leaf_count() const;
    int internal_count() const;
    void collect_leaves(std::vector<int>& out) const;

    bool operator==(const BracketedWord&) const = default;
    // Total order: internal nodes before leaves, then children pairwise,
    // leaves by label.  For k=3 this lists the v_S basis in lex-S order.
    bool operator<(const BracketedWord& o) const;

    std::string to_string() const;                 // "[[1,2,4],3,5]"
    static BracketedWord parse(const std::string&);

  private:
    int label_ = 0;     // > 0 for leaves
    int min_leaf_ = 0;  // cached minimum over the subtree
    std::vector<BracketedWord> children_;
};

struct SignedBracket {
    BracketedWord word;  // canonical
    int sign = 1;        // +1 or -1
};

// Canonical form: at every node the children are sorted ascending by the
// minimal leaf of their subtree.  The sign is the product over nodes of the
// parity of the sorting permutation.  Throws on repeated leaf labels.
SignedBracket canonicalize(const BracketedWord& w);

bool is_canonical(const BracketedWord& w);

// Relabel leaves by sigma (sigma[x] is the image of x, 1-based) and
// canonicalize.  sigma must be a permutation of the leaf set.
SignedBracket act(const std::vector<int>& sigma, const BracketedWord& b);

// Number of generators of the multilinear component: kn - n - k + 2.
int generator_count(int n, int k);

inline constexpr long kEnumerationBound = 2'000'000;

// All canonical multilinear bracketed words on [kn-n-k+2] built from k-1
// n-ary brackets, in the order of BracketedWord::operator<.
std::vector<BracketedWord> enumerate_canonical(int n, int k);

}  // namespace lanke
