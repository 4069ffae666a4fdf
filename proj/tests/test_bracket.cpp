#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "lanke/bracket.hpp"
#include "lanke/combinatorics.hpp"
#include "lanke/errors.hpp"

using namespace lanke;

namespace {

// oracle: all ordered n-ary trees on an ordered leaf list (every child
// order, not just canonical ones)
std::vector<BracketedWord> all_ordered_trees(int n, const std::vector<int>& leaves) {
    if (leaves.size() == 1) return {BracketedWord::leaf(leaves[0])};
    std::vector<BracketedWord> out;
    // split the list into n ordered blocks of valid sizes, all interleavings
    std::vector<std::vector<int>> blocks(n);
    std::vector<int> assignment(leaves.size());
    auto assign = [&](auto&& self, size_t i) -> void {
        if (i == leaves.size()) {
            for (int b = 0; b < n; ++b) {
                if (blocks[b].empty()) return;
                if ((blocks[b].size() - 1) % (n - 1)) return;
            }
            std::vector<std::vector<BracketedWord>> sub(n);
            for (int b = 0; b < n; ++b) sub[b] = all_ordered_trees(n, blocks[b]);
            std::vector<BracketedWord> children(n, BracketedWord::leaf(1));
            auto cross = [&](auto&& cself, int b) -> void {
                if (b == n) {
                    out.push_back(BracketedWord::node(children));
                    return;
                }
                for (const auto& t : sub[b]) {
                    children[b] = t;
                    cself(cself, b + 1);
                }
            };
            cross(cross, 0);
            return;
        }
        for (int b = 0; b < n; ++b) {
            blocks[b].push_back(leaves[i]);
            self(self, i + 1);
            blocks[b].pop_back();
        }
    };
    assign(assign, 0);
    return out;
}

std::vector<int> random_permutation(int m, std::mt19937& rng) {
    std::vector<int> sigma(m + 1);
    for (int i = 1; i <= m; ++i) sigma[i] = i;
    std::shuffle(sigma.begin() + 1, sigma.end(), rng);
    return sigma;
}

}  // namespace

TEST_CASE("generator_count") {
    CHECK(generator_count(3, 3) == 5);
    CHECK(generator_count(3, 4) == 7);
    for (int k = 2; k <= 8; ++k) CHECK(generator_count(2, k) == k);
    CHECK(generator_count(4, 3) == generator_count(3, 4));
    CHECK_THROWS_AS(generator_count(1, 3), std::invalid_argument);
}

TEST_CASE("parse/print round trip") {
    for (const char* s : {"[[1,2,4],3,5]", "[1,[2,3]]", "[[1,2],[3,4],[5,6,7]]", "7"}) {
        CHECK(BracketedWord::parse(s).to_string() == s);
    }
    CHECK_THROWS(BracketedWord::parse("[1,2"));
    CHECK_THROWS(BracketedWord::parse("[]"));
}

TEST_CASE("canonicalize") {
    auto check = [](const char* in, const char* out, int sign) {
        SignedBracket sb = canonicalize(BracketedWord::parse(in));
        CHECK(sb.word.to_string() == out);
        CHECK(sb.sign == sign);
    };
    check("[[2,1],3]", "[[1,2],3]", -1);
    check("[3,[1,2]]", "[[1,2],3]", -1);
    check("[[2,4,5],1,3]", "[1,[2,4,5],3]", -1);
    check("[[3,1],2]", "[[1,3],2]", -1);
    CHECK_THROWS_AS(canonicalize(BracketedWord::parse("[[1,2],1]")), std::invalid_argument);
    // idempotent with sign +1 on canonical input
    for (const BracketedWord& b : enumerate_canonical(2, 4)) {
        SignedBracket sb = canonicalize(b);
        CHECK(sb.word == b);
        CHECK(sb.sign == 1);
    }
}

TEST_CASE("node-level transpositions flip the sign") {
    std::mt19937 rng(3);
    for (auto [n, k] : {std::pair{2, 3}, {2, 4}, {3, 3}}) {
        auto basis = enumerate_canonical(n, k);
        std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
        for (int trial = 0; trial < 40; ++trial) {
            const BracketedWord& b = basis[pick(rng)];
            // swap two children of the root
            std::vector<BracketedWord> kids = b.children();
            std::uniform_int_distribution<int> ci(0, b.arity() - 1);
            int i = ci(rng), j = ci(rng);
            if (i == j) continue;
            std::swap(kids[i], kids[j]);
            SignedBracket sb = canonicalize(BracketedWord::node(kids));
            CHECK(sb.word == b);
            CHECK(sb.sign == -1);
        }
    }
}

TEST_CASE("enumerate_canonical counts") {
    CHECK(enumerate_canonical(2, 3).size() == 3);
    CHECK(enumerate_canonical(3, 3).size() == 10);
    CHECK(enumerate_canonical(2, 4).size() == 15);
    for (int n = 2; n <= 6; ++n)
        CHECK(Int(static_cast<long>(enumerate_canonical(n, 3).size())) ==
              binomial(2 * n - 1, n));
}

TEST_CASE("enumeration matches brute-force canonicalization of ordered trees") {
    for (auto [n, k] : {std::pair{2, 3}, {2, 4}, {3, 3}}) {
        int m = generator_count(n, k);
        std::vector<int> leaves(m);
        for (int i = 0; i < m; ++i) leaves[i] = i + 1;
        std::set<std::string> from_oracle;
        for (const BracketedWord& t : all_ordered_trees(n, leaves))
            from_oracle.insert(canonicalize(t).word.to_string());
        std::set<std::string> from_enum;
        for (const BracketedWord& b : enumerate_canonical(n, k)) {
            CHECK(is_canonical(b));
            from_enum.insert(b.to_string());
        }
        CHECK(from_oracle == from_enum);
    }
}

TEST_CASE("k=3 basis is in lexicographic subset order") {
    auto basis = enumerate_canonical(3, 3);
    std::vector<std::string> subsets;
    for (const BracketedWord& b : basis) {
        // leaf set of the unique internal child
        for (const auto& c : b.children())
            if (!c.is_leaf()) {
                std::vector<int> s;
                c.collect_leaves(s);
                std::sort(s.begin(), s.end());
                std::string key;
                for (int x : s) key += std::to_string(x);
                subsets.push_back(key);
            }
    }
    CHECK(std::is_sorted(subsets.begin(), subsets.end()));
    CHECK(subsets.front() == "123");
    CHECK(subsets.back() == "345");
}

TEST_CASE("act") {
    BracketedWord b = BracketedWord::parse("[[1,2],3]");
    std::vector<int> id{0, 1, 2, 3};
    CHECK(act(id, b).word == b);
    CHECK(act(id, b).sign == 1);

    std::vector<int> swap12{0, 2, 1, 3};
    SignedBracket sb = act(swap12, b);
    CHECK(sb.word == b);
    CHECK(sb.sign == -1);

    // (1 3): [[1,2],3] -> [[3,2],1]; sorting inside costs one sign, moving
    // the leaf in front of the bracket costs another, net +1
    std::vector<int> swap13{0, 3, 2, 1};
    sb = act(swap13, b);
    CHECK(sb.word.to_string() == "[1,[2,3]]");
    CHECK(sb.sign == 1);

    std::vector<int> not_perm{0, 1, 1, 3};
    CHECK_THROWS_AS(act(not_perm, b), std::invalid_argument);
}

TEST_CASE("act is a group action with signs") {
    std::mt19937 rng(11);
    for (auto [n, k] : {std::pair{2, 3}, {2, 4}, {3, 3}, {2, 5}, {3, 4}}) {
        int m = generator_count(n, k);
        auto basis = enumerate_canonical(n, k);
        std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
        for (int trial = 0; trial < 100; ++trial) {
            auto sigma = random_permutation(m, rng);
            auto tau = random_permutation(m, rng);
            std::vector<int> prod(m + 1);
            for (int i = 1; i <= m; ++i) prod[i] = sigma[tau[i]];
            const BracketedWord& b = basis[pick(rng)];
            SignedBracket via_tau = act(tau, b);
            SignedBracket stepwise = act(sigma, via_tau.word);
            stepwise.sign *= via_tau.sign;
            SignedBracket direct = act(prod, b);
            CHECK(stepwise.word == direct.word);
            CHECK(stepwise.sign == direct.sign);
        }
    }
}

TEST_CASE("act on [1,3] with sigma=(1 3) matches brute-force orbit expectation") {
    // sigma = (1 3): [[1,2],3] -> [[3,2],1] -> canonical [1,[2,3]], sign -1
    BracketedWord b = BracketedWord::parse("[[1,2],3]");
    std::vector<int> sigma{0, 3, 2, 1};
    SignedBracket sb = act(sigma, b);
    SignedBracket oracle = canonicalize(BracketedWord::parse("[[3,2],1]"));
    CHECK(sb.word == oracle.word);
    CHECK(sb.sign == oracle.sign);
}
