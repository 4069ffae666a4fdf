#include "lanke/garnir.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lanke/errors.hpp"

namespace lanke {

std::pair<ColumnFilling, int> sort_columns(ColumnFilling f) {
    int sign = 1;
    for (auto& col : f) {
        int inversions = 0;
        for (size_t i = 0; i < col.size(); ++i)
            for (size_t j = i + 1; j < col.size(); ++j)
                if (col[i] > col[j]) ++inversions;
        if (inversions % 2) sign = -sign;
        std::sort(col.begin(), col.end());
    }
    return {std::move(f), sign};
}

std::pair<ColumnFilling, int> canonical_tabloid(const Tableau& t) {
    Partition conj = conjugate(t.shape);
    ColumnFilling f(conj.rows());
    for (int c = 0; c < conj.rows(); ++c) {
        f[c].reserve(conj.parts[c]);
        for (int r = 0; r < conj.parts[c]; ++r) f[c].push_back(t.entries[r][c]);
    }
    return sort_columns(std::move(f));
}

std::string filling_to_string(const ColumnFilling& f) {
    size_t n_rows = 0;
    for (const auto& col : f) n_rows = std::max(n_rows, col.size());
    std::ostringstream os;
    for (size_t r = 0; r < n_rows; ++r) {
        if (r) os << ';';
        bool first = true;
        for (const auto& col : f) {
            if (r >= col.size()) break;
            if (!first) os << ',';
            os << col[r];
            first = false;
        }
    }
    return os.str();
}

namespace {

std::string column_key(const ColumnFilling& f) {
    std::string s;
    for (const auto& col : f) {
        for (int e : col) {
            s += std::to_string(e);
            s += ',';
        }
        s += '|';
    }
    return s;
}

}  // namespace

ColumnTabloidSpace::ColumnTabloidSpace(Partition shape) : shape_(std::move(shape)) {
    col_lengths_ = conjugate(shape_).parts;
    const int m = shape_.m();
    Int dim = factorial(m);
    for (int l : col_lengths_) dim /= factorial(l);
    if (dim > kTabloidDimBound)
        throw bound_error("ColumnTabloidSpace: dimension " + dim.get_str() + " exceeds bound");

    // distribute 1..m over the columns, column contents sorted; columns are
    // filled left to right choosing entry sets in lexicographic order
    ColumnFilling cur(col_lengths_.size());
    std::vector<int> avail(m);
    for (int i = 0; i < m; ++i) avail[i] = i + 1;
    auto rec = [&](auto&& self, size_t ci, std::vector<int> pool) -> void {
        if (ci == col_lengths_.size()) {
            basis_.push_back(cur);
            return;
        }
        int len = col_lengths_[ci];
        std::vector<int> pick;
        auto choose = [&](auto&& cself, size_t start, int left) -> void {
            if (left == 0) {
                cur[ci] = pick;
                std::vector<int> rest;
                for (int x : pool)
                    if (!std::binary_search(pick.begin(), pick.end(), x)) rest.push_back(x);
                self(self, ci + 1, std::move(rest));
                return;
            }
            for (size_t i = start; i + left <= pool.size(); ++i) {
                pick.push_back(pool[i]);
                cself(cself, i + 1, left - 1);
                pick.pop_back();
            }
        };
        choose(choose, 0, len);
    };
    rec(rec, 0, std::move(avail));
    index_.reserve(basis_.size() * 2);
    for (size_t i = 0; i < basis_.size(); ++i)
        index_.emplace(column_key(basis_[i]), static_cast<int>(i));
}

int ColumnTabloidSpace::index_of(const ColumnFilling& sorted_filling) const {
    auto it = index_.find(column_key(sorted_filling));
    if (it == index_.end())
        throw std::invalid_argument("filling not in tabloid basis");
    return it->second;
}

SparseVec garnir_vector(const ColumnTabloidSpace& M, const ColumnFilling& t, int c, int k) {
    const auto& lens = M.column_lengths();
    if (c < 1 || c >= static_cast<int>(lens.size()))
        throw std::invalid_argument("garnir_vector: column c+1 does not exist");
    if (k < 1 || k > lens[c])
        throw std::invalid_argument("garnir_vector: k out of range");
    const int ci = c - 1;
    std::vector<Rat> coeff(M.dim(), Rat(0));
    coeff[M.index_of(t)] += 1;
    // all k-subsets of column c, exchanged with the top k of column c+1
    std::vector<int> pos;
    auto choose = [&](auto&& self, int start, int left) -> void {
        if (left == 0) {
            ColumnFilling s = t;
            for (int i = 0; i < k; ++i) {
                std::swap(s[ci][pos[i]], s[ci + 1][i]);
            }
            auto [sorted, sign] = sort_columns(std::move(s));
            coeff[M.index_of(sorted)] -= sign;
            return;
        }
        for (int i = start; i + left <= lens[ci]; ++i) {
            pos.push_back(i);
            self(self, i + 1, left - 1);
            pos.pop_back();
        }
    };
    choose(choose, 0, k);
    SparseVec v;
    for (int i = 0; i < M.dim(); ++i)
        if (coeff[i] != 0) v.emplace_back(i, coeff[i]);
    return v;
}

SparseRationalMatrix garnir_generators(const ColumnTabloidSpace& M, GarnirMode mode,
                                       GarnirTSet tset) {
    const auto& lens = M.column_lengths();
    std::vector<const ColumnFilling*> tableaux;
    std::vector<ColumnFilling> standard_store;
    if (tset == GarnirTSet::all_fillings) {
        for (const auto& f : M.basis()) tableaux.push_back(&f);
    } else {
        for (const Tableau& t : enumerate_syt(M.shape())) {
            auto [f, sign] = canonical_tabloid(t);
            (void)sign;  // standard tableaux already have sorted columns
            standard_store.push_back(std::move(f));
        }
        for (const auto& f : standard_store) tableaux.push_back(&f);
    }
    SparseRationalMatrix G(0, M.dim());
    for (int c = 1; c < static_cast<int>(lens.size()) + 1 - 1; ++c) {
        bool reduced_col = mode == GarnirMode::reduced && lens[c] == lens[c - 1] - 1;
        for (int k = 1; k <= lens[c]; ++k) {
            if (reduced_col && k != lens[c]) continue;
            for (const ColumnFilling* t : tableaux)
                G.append_row(garnir_vector(M, *t, c, k));
        }
    }
    return G;
}

namespace {

Int specht_dim(const Partition& shape, GarnirMode mode) {
    ColumnTabloidSpace M(shape);
    if (M.column_lengths().size() < 2) return 1;  // single column, no relations
    SparseRationalMatrix G = garnir_generators(M, mode);
    return Int(M.dim() - rank(G));
}

}  // namespace

Int specht_dim_full(const Partition& shape) { return specht_dim(shape, GarnirMode::full); }

Int specht_dim_reduced(const Partition& shape) {
    return specht_dim(shape, GarnirMode::reduced);
}

std::pair<ColumnFilling, int> act_on_filling(const std::vector<int>& sigma,
                                             const ColumnFilling& f) {
    ColumnFilling g = f;
    for (auto& col : g)
        for (int& e : col) {
            if (e >= static_cast<int>(sigma.size()))
                throw std::invalid_argument("permutation does not cover filling entries");
            e = sigma[e];
        }
    return sort_columns(std::move(g));
}

}  // namespace lanke
