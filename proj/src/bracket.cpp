#include "lanke/bracket.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lanke/combinatorics.hpp"
#include "lanke/errors.hpp"

namespace lanke {

BracketedWord BracketedWord::leaf(int label) {
    if (label < 1) throw std::invalid_argument("leaf labels must be positive");
    BracketedWord w;
    w.label_ = label;
    w.min_leaf_ = label;
    return w;
}

BracketedWord BracketedWord::node(std::vector<BracketedWord> children) {
    if (children.size() < 2) throw std::invalid_argument("bracket arity must be >= 2");
    BracketedWord w;
    w.children_ = std::move(children);
    w.min_leaf_ = w.children_[0].min_leaf_;
    for (const auto& c : w.children_) w.min_leaf_ = std::min(w.min_leaf_, c.min_leaf_);
    return w;
}

int BracketedWord::leaf_count() const {
    if (is_leaf()) return 1;
    int n = 0;
    for (const auto& c : children_) n += c.leaf_count();
    return n;
}

int BracketedWord::internal_count() const {
    if (is_leaf()) return 0;
    int n = 1;
    for (const auto& c : children_) n += c.internal_count();
    return n;
}

void BracketedWord::collect_leaves(std::vector<int>& out) const {
    if (is_leaf()) {
        out.push_back(label_);
        return;
    }
    for (const auto& c : children_) c.collect_leaves(out);
}

bool BracketedWord::operator<(const BracketedWord& o) const {
    if (is_leaf() != o.is_leaf()) return !is_leaf();  // internal nodes first
    if (is_leaf()) return label_ < o.label_;
    return children_ < o.children_;
}

std::string BracketedWord::to_string() const {
    if (is_leaf()) return std::to_string(label_);
    std::string s = "[";
    for (size_t i = 0; i < children_.size(); ++i) {
        if (i) s += ',';
        s += children_[i].to_string();
    }
    s += ']';
    return s;
}

namespace {

BracketedWord parse_at(const std::string& s, size_t& pos) {
    if (pos >= s.size()) throw std::invalid_argument("unexpected end of bracketed word");
    if (s[pos] == '[') {
        ++pos;
        std::vector<BracketedWord> children;
        for (;;) {
            children.push_back(parse_at(s, pos));
            if (pos >= s.size()) throw std::invalid_argument("unterminated bracket");
            if (s[pos] == ',') {
                ++pos;
            } else if (s[pos] == ']') {
                ++pos;
                break;
            } else {
                throw std::invalid_argument("expected ',' or ']' in bracketed word");
            }
        }
        return BracketedWord::node(std::move(children));
    }
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected integer leaf");
    return BracketedWord::leaf(std::stoi(s.substr(start, pos - start)));
}

}  // namespace

BracketedWord BracketedWord::parse(const std::string& s) {
    size_t pos = 0;
    BracketedWord w = parse_at(s, pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters in bracketed word");
    return w;
}

namespace {

// sign of the permutation sorting children ascending by min leaf
int sort_children(std::vector<BracketedWord>& children) {
    int inversions = 0;
    for (size_t i = 0; i < children.size(); ++i)
        for (size_t j = i + 1; j < children.size(); ++j) {
            if (children[i].min_leaf() == children[j].min_leaf())
                throw std::invalid_argument("sibling subtrees share a minimal leaf");
            if (children[i].min_leaf() > children[j].min_leaf()) ++inversions;
        }
    std::sort(children.begin(), children.end(), [](const auto& a, const auto& b) {
        return a.min_leaf() < b.min_leaf();
    });
    return (inversions % 2) ? -1 : 1;
}

SignedBracket canonicalize_rec(const BracketedWord& w) {
    if (w.is_leaf()) return {w, 1};
    int sign = 1;
    std::vector<BracketedWord> children;
    children.reserve(w.children().size());
    for (const auto& c : w.children()) {
        SignedBracket sc = canonicalize_rec(c);
        sign *= sc.sign;
        children.push_back(std::move(sc.word));
    }
    sign *= sort_children(children);
    return {BracketedWord::node(std::move(children)), sign};
}

}  // namespace

SignedBracket canonicalize(const BracketedWord& w) {
    std::vector<int> leaves;
    w.collect_leaves(leaves);
    std::sort(leaves.begin(), leaves.end());
    if (std::adjacent_find(leaves.begin(), leaves.end()) != leaves.end())
        throw std::invalid_argument("repeated leaf labels");
    return canonicalize_rec(w);
}

bool is_canonical(const BracketedWord& w) {
    if (w.is_leaf()) return true;
    for (size_t i = 0; i + 1 < w.children().size(); ++i)
        if (w.children()[i].min_leaf() >= w.children()[i + 1].min_leaf()) return false;
    for (const auto& c : w.children())
        if (!is_canonical(c)) return false;
    return true;
}

namespace {

BracketedWord relabel(const std::vector<int>& sigma, const BracketedWord& w) {
    if (w.is_leaf()) {
        if (w.label() >= static_cast<int>(sigma.size()) || sigma[w.label()] < 1)
            throw std::invalid_argument("permutation does not cover leaf label");
        return BracketedWord::leaf(sigma[w.label()]);
    }
    std::vector<BracketedWord> children;
    children.reserve(w.children().size());
    for (const auto& c : w.children()) children.push_back(relabel(sigma, c));
    return BracketedWord::node(std::move(children));
}

}  // namespace

SignedBracket act(const std::vector<int>& sigma, const BracketedWord& b) {
    std::vector<int> leaves, images;
    b.collect_leaves(leaves);
    for (int x : leaves) {
        if (x >= static_cast<int>(sigma.size()))
            throw std::invalid_argument("permutation does not cover leaf set");
        images.push_back(sigma[x]);
    }
    std::sort(leaves.begin(), leaves.end());
    std::sort(images.begin(), images.end());
    if (leaves != images)
        throw std::invalid_argument("sigma is not a permutation of the leaf set");
    return canonicalize(relabel(sigma, b));
}

int generator_count(int n, int k) {
    if (n < 2 || k < 2) throw std::invalid_argument("generator_count: need n,k >= 2");
    return k * n - n - k + 2;
}

namespace {

// number of canonical trees on a set of the given size (size-only invariant)
Int count_canonical_size(int n, int size, std::map<int, Int>& memo) {
    if (size == 1) return 1;
    auto it = memo.find(size);
    if (it != memo.end()) return it->second;
    // partition the set into n blocks of valid sizes; blocks ordered by minima
    Int total = 0;
    std::vector<int> sizes;
    auto rec = [&](auto&& self, int remaining, int blocks_left, int max_size) -> void {
        if (blocks_left == 0) {
            if (remaining != 0) return;
            // multinomial over the multiset of block sizes
            Int ways = factorial(size);
            for (int s : sizes) ways /= factorial(s);
            int run = 1;
            for (size_t i = 1; i <= sizes.size(); ++i) {
                if (i < sizes.size() && sizes[i] == sizes[i - 1]) {
                    ++run;
                } else {
                    ways /= factorial(run);
                    run = 1;
                }
            }
            Int prod = ways;
            for (int s : sizes) prod *= count_canonical_size(n, s, memo);
            total += prod;
            return;
        }
        for (int s = std::min(remaining - (blocks_left - 1), max_size); s >= 1; --s) {
            if ((s - 1) % (std::max(n - 1, 1)) != 0) continue;
            sizes.push_back(s);
            self(self, remaining - s, blocks_left - 1, s);
            sizes.pop_back();
        }
    };
    rec(rec, size, n, size - 1);
    memo.emplace(size, total);
    return total;
}

std::vector<BracketedWord> enum_on_set(int n, const std::vector<int>& set) {
    if (set.size() == 1) return {BracketedWord::leaf(set[0])};
    std::vector<BracketedWord> out;
    // choose blocks one at a time; each block contains the minimum of what
    // remains, so children come out ordered by minimal leaf
    std::vector<std::vector<int>> blocks(n);
    auto build = [&](auto&& self, int bi) -> void {
        if (bi == n) {
            std::vector<std::vector<BracketedWord>> sub(n);
            for (int i = 0; i < n; ++i) sub[i] = enum_on_set(n, blocks[i]);
            std::vector<BracketedWord> children(n, BracketedWord::leaf(1));
            auto cross = [&](auto&& cself, int i) -> void {
                if (i == n) {
                    out.push_back(BracketedWord::node(children));
                    return;
                }
                for (const auto& t : sub[i]) {
                    children[i] = t;
                    cself(cself, i + 1);
                }
            };
            cross(cross, 0);
            return;
        }
        // remaining elements, sorted
        std::vector<int> rem;
        {
            std::set<int> used;
            for (int j = 0; j < bi; ++j) used.insert(blocks[j].begin(), blocks[j].end());
            for (int x : set)
                if (!used.count(x)) rem.push_back(x);
        }
        int blocks_left = n - bi;
        for (size_t s = 1; s + (blocks_left - 1) <= rem.size(); ++s) {
            if ((s - 1) % (n - 1) != 0) continue;
            if (blocks_left == 1 && s != rem.size()) continue;  // last block takes the rest
            // all (s-1)-subsets of rem minus its minimum, lexicographic
            std::vector<int> pick;
            auto choose = [&](auto&& chself, size_t start, size_t left) -> void {
                if (left == 0) {
                    blocks[bi] = {rem[0]};
                    blocks[bi].insert(blocks[bi].end(), pick.begin(), pick.end());
                    self(self, bi + 1);
                    return;
                }
                for (size_t i = start; i + left <= rem.size(); ++i) {
                    pick.push_back(rem[i]);
                    chself(chself, i + 1, left - 1);
                    pick.pop_back();
                }
            };
            choose(choose, 1, s - 1);
        }
    };
    build(build, 0);
    return out;
}

}  // namespace

std::vector<BracketedWord> enumerate_canonical(int n, int k) {
    int m = generator_count(n, k);
    std::map<int, Int> memo;
    Int predicted = count_canonical_size(n, m, memo);
    if (predicted > kEnumerationBound)
        throw bound_error("enumerate_canonical: basis size " + predicted.get_str() +
                          " exceeds bound");
    std::vector<int> set(m);
    for (int i = 0; i < m; ++i) set[i] = i + 1;
    std::vector<BracketedWord> out = enum_on_set(n, set);
    if (Int(static_cast<long>(out.size())) != predicted)
        throw theorem_violation("enumerate_canonical: enumerated " +
                                std::to_string(out.size()) + " trees but closed form gives " +
                                predicted.get_str());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lanke
