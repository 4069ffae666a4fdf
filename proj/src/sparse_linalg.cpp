#include "lanke/sparse_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lanke/errors.hpp"

namespace lanke {

SparseRationalMatrix::SparseRationalMatrix(int n_rows, int n_cols)
    : n_rows_(n_rows), n_cols_(n_cols), rows_(n_rows) {
    if (n_rows < 0 || n_cols < 0) throw std::invalid_argument("negative matrix dimension");
}

long long SparseRationalMatrix::nnz() const {
    long long n = 0;
    for (const auto& r : rows_) n += static_cast<long long>(r.size());
    return n;
}

void SparseRationalMatrix::set(int row, int col, const Rat& value) {
    if (row < 0 || row >= n_rows_ || col < 0 || col >= n_cols_)
        throw std::out_of_range("matrix index out of range");
    auto& r = rows_[row];
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    if (it != r.end() && it->first == col) {
        if (value == 0)
            r.erase(it);
        else
            it->second = value;
    } else if (value != 0) {
        r.insert(it, {col, value});
    }
}

Rat SparseRationalMatrix::get(int row, int col) const {
    const auto& r = rows_[row];
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    return (it != r.end() && it->first == col) ? it->second : Rat(0);
}

void SparseRationalMatrix::set_row(int r, SparseVec v) { rows_[r] = std::move(v); }

void SparseRationalMatrix::append_row(SparseVec v) {
    rows_.push_back(std::move(v));
    ++n_rows_;
}

SparseRationalMatrix SparseRationalMatrix::transpose() const {
    SparseRationalMatrix t(n_cols_, n_rows_);
    for (int r = 0; r < n_rows_; ++r)
        for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace_back(r, v);
    return t;
}

std::string SparseRationalMatrix::dump() const {
    std::ostringstream os;
    os << n_rows_ << ' ' << n_cols_ << ' ' << nnz() << '\n';
    for (int r = 0; r < n_rows_; ++r)
        for (const auto& [c, v] : rows_[r])
            os << r << ' ' << c << ' ' << rat_to_string(v) << '\n';
    return os.str();
}

SparseRationalMatrix SparseRationalMatrix::load(const std::string& text) {
    std::istringstream is(text);
    int rows, cols;
    long long nnz;
    if (!(is >> rows >> cols >> nnz)) throw std::invalid_argument("bad matrix header");
    SparseRationalMatrix M(rows, cols);
    for (long long i = 0; i < nnz; ++i) {
        int r, c;
        std::string val;
        if (!(is >> r >> c >> val)) throw std::invalid_argument("truncated matrix triplets");
        M.set(r, c, rat_from_string(val));
    }
    return M;
}

namespace {

// ---- field abstractions for the shared elimination engine ----

struct RatField {
    using Value = Rat;
    static bool is_zero(const Value& v) { return v == 0; }
    static Value neg(const Value& v) { return -v; }
    static Value mul(const Value& a, const Value& b) { return a * b; }
    static Value div(const Value& a, const Value& b) { return a / b; }
    static Value mul_sub(const Value& a, const Value& f, const Value& b) { return a - f * b; }
};

struct ZpField {
    std::uint64_t p;
    using Value = std::uint64_t;
    bool is_zero(Value v) const { return v == 0; }
    Value neg(Value v) const { return v ? p - v : 0; }
    Value mul(Value a, Value b) const { return a * b % p; }
    Value div(Value a, Value b) const { return mul(a, inv(b)); }
    Value mul_sub(Value a, Value f, Value b) const { return (a + p - mul(f, b)) % p; }
    Value inv(Value a) const {
        Value r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
};

// Right-looking sparse Gaussian elimination with Markowitz-style pivoting:
// pivot column has minimal active count, pivot row minimal nonzero count,
// ties broken by smallest (row, col).  Deterministic for a fixed input.
template <class F>
class Eliminator {
  public:
    using Value = typename F::Value;
    using Row = std::vector<std::pair<int, Value>>;

    Eliminator(F field, int n_cols, std::vector<Row> rows, bool leftmost = false)
        : field_(field), n_cols_(n_cols), leftmost_(leftmost), rows_(std::move(rows)) {
        alive_.assign(rows_.size(), 1);
        col_count_.assign(n_cols_, 0);
        col_rows_.resize(n_cols_);
        for (size_t r = 0; r < rows_.size(); ++r) {
            if (rows_[r].empty()) alive_[r] = 0;
            for (const auto& [c, v] : rows_[r]) {
                ++col_count_[c];
                col_rows_[c].push_back(static_cast<int>(r));
            }
        }
    }

    // Pivot rows in elimination order, each paired with its pivot column.
    std::vector<std::pair<int, Row>> run() {
        std::vector<std::pair<int, Row>> pivots;
        for (;;) {
            int c = pick_column();
            if (c < 0) break;
            int pr = pick_row(c);
            Row piv = std::move(rows_[pr]);
            retire_row(pr, piv);
            Value pinv = field_.div(Value(1), value_at(piv, c));
            // copy: eliminations below append to col_rows_[c]
            std::vector<int> targets = col_rows_[c];
            for (int r : targets) {
                if (!alive_[r]) continue;
                const Value* rv = find(rows_[r], c);
                if (!rv) continue;
                combine(r, *rv, pinv, piv, c);
            }
            col_rows_[c].clear();
            pivots.emplace_back(c, std::move(piv));
        }
        return pivots;
    }

  private:
    static const Value* find(const Row& row, int c) {
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        return (it != row.end() && it->first == c) ? &it->second : nullptr;
    }
    static Value value_at(const Row& row, int c) { return *find(row, c); }

    int pick_column() const {
        int best = -1, best_count = 0;
        for (int c = 0; c < n_cols_; ++c)
            if (col_count_[c] > 0 && (best < 0 || col_count_[c] < best_count)) {
                best = c;
                best_count = col_count_[c];
                if (leftmost_) break;
            }
        return best;
    }

    int pick_row(int c) {
        int best = -1;
        size_t best_nnz = 0;
        auto& list = col_rows_[c];
        size_t out = 0;
        for (int r : list) {
            if (!alive_[r] || !find(rows_[r], c)) continue;
            list[out++] = r;  // compact stale entries
            if (best < 0 || rows_[r].size() < best_nnz) {
                best = r;
                best_nnz = rows_[r].size();
            }
        }
        list.resize(out);
        return best;
    }

    void retire_row(int r, const Row& contents) {
        alive_[r] = 0;
        for (const auto& [c, v] : contents) --col_count_[c];
    }

    // rows_[r] -= (rv * pinv) * piv; maintains counts and column lists.
    void combine(int r, const Value& rv, const Value& pinv, const Row& piv, int pivot_col) {
        Value factor = field_.mul(rv, pinv);
        Row merged;
        merged.reserve(rows_[r].size() + piv.size());
        auto a = rows_[r].begin(), ae = rows_[r].end();
        auto b = piv.begin(), be = piv.end();
        while (a != ae || b != be) {
            if (b == be || (a != ae && a->first < b->first)) {
                merged.push_back(*a++);
            } else if (a == ae || b->first < a->first) {
                Value v = field_.neg(field_.mul(factor, b->second));
                if (!field_.is_zero(v)) {
                    ++col_count_[b->first];
                    col_rows_[b->first].push_back(r);
                    merged.emplace_back(b->first, std::move(v));
                }
                ++b;
            } else {
                Value v = field_.mul_sub(a->second, factor, b->second);
                if (field_.is_zero(v))
                    --col_count_[a->first];
                else
                    merged.emplace_back(a->first, std::move(v));
                ++a;
                ++b;
            }
        }
        (void)pivot_col;
        rows_[r] = std::move(merged);
        if (rows_[r].empty()) alive_[r] = 0;
    }

    F field_;
    int n_cols_;
    bool leftmost_ = false;
    std::vector<Row> rows_;
    std::vector<char> alive_;
    std::vector<int> col_count_;
    std::vector<std::vector<int>> col_rows_;
};

std::vector<SparseVec> copy_rows(const SparseRationalMatrix& M) {
    std::vector<SparseVec> rows(M.n_rows());
    for (int r = 0; r < M.n_rows(); ++r) rows[r] = M.row(r);
    return rows;
}

}  // namespace

EchelonForm rref(const SparseRationalMatrix& M) {
    // Two passes: sparsity-driven pivoting to cut the matrix down to a row
    // basis, then a leftmost-column pass over that basis.  The second pass
    // pins down the canonical pivot columns, which makes the result the
    // unique reduced echelon form of the row space.
    Eliminator<RatField> first(RatField{}, M.n_cols(), copy_rows(M));
    std::vector<SparseVec> basis;
    for (auto& [c, row] : first.run()) basis.push_back(std::move(row));
    Eliminator<RatField> second(RatField{}, M.n_cols(), std::move(basis), /*leftmost=*/true);
    auto pivots = second.run();
    std::sort(pivots.begin(), pivots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    int r = static_cast<int>(pivots.size());
    // normalize pivot entries to 1
    for (auto& [c, row] : pivots) {
        Rat pv;
        for (const auto& [col, v] : row)
            if (col == c) pv = v;
        for (auto& [col, v] : row) v /= pv;
    }
    // Leftmost pivoting clears each pivot column from every row still alive,
    // so a pivot row can only retain entries in columns of pivots chosen
    // before it; those all lie above it here.  Classic back substitution.
    for (int i = r - 1; i >= 0; --i) {
        const int ci = pivots[i].first;
        for (int j = 0; j < i; ++j) {
            auto& rj = pivots[j].second;
            auto it = std::lower_bound(rj.begin(), rj.end(), ci,
                                       [](const auto& e, int c) { return e.first < c; });
            if (it == rj.end() || it->first != ci) continue;
            Rat f = it->second;
            SparseVec merged;
            merged.reserve(rj.size() + pivots[i].second.size());
            auto a = rj.begin(), ae = rj.end();
            auto b = pivots[i].second.begin(), be = pivots[i].second.end();
            while (a != ae || b != be) {
                if (b == be || (a != ae && a->first < b->first)) {
                    merged.push_back(*a++);
                } else if (a == ae || b->first < a->first) {
                    merged.emplace_back(b->first, -f * b->second);
                    ++b;
                } else {
                    Rat v = a->second - f * b->second;
                    if (v != 0) merged.emplace_back(a->first, std::move(v));
                    ++a;
                    ++b;
                }
            }
            rj = std::move(merged);
        }
    }
    EchelonForm E;
    E.matrix = SparseRationalMatrix(r, M.n_cols());
    for (int i = 0; i < r; ++i) {
        E.pivot_columns.push_back(pivots[i].first);
        E.matrix.set_row(i, std::move(pivots[i].second));
    }
    return E;
}

int rank(const SparseRationalMatrix& M) {
    Eliminator<RatField> elim(RatField{}, M.n_cols(), copy_rows(M));
    return static_cast<int>(elim.run().size());
}

std::vector<SparseVec> kernel_basis(const SparseRationalMatrix& M) {
    EchelonForm E = rref(M);
    std::vector<char> is_pivot(M.n_cols(), 0);
    for (int c : E.pivot_columns) is_pivot[c] = 1;
    std::vector<SparseVec> basis;
    for (int j = 0; j < M.n_cols(); ++j) {
        if (is_pivot[j]) continue;
        SparseVec v;
        for (int i = 0; i < E.rank(); ++i) {
            Rat e = E.matrix.get(i, j);
            if (e != 0) v.emplace_back(E.pivot_columns[i], -e);
        }
        v.emplace_back(j, Rat(1));
        std::sort(v.begin(), v.end());
        basis.push_back(std::move(v));
    }
    return basis;
}

SparseVec reduce_against(const EchelonForm& E, SparseVec v) {
    for (int i = 0; i < E.rank(); ++i) {
        int p = E.pivot_columns[i];
        auto it = std::lower_bound(v.begin(), v.end(), p,
                                   [](const auto& e, int c) { return e.first < c; });
        if (it == v.end() || it->first != p) continue;
        Rat f = it->second;
        SparseVec merged;
        auto a = v.begin(), ae = v.end();
        const auto& row = E.matrix.row(i);
        auto b = row.begin(), be = row.end();
        while (a != ae || b != be) {
            if (b == be || (a != ae && a->first < b->first)) {
                merged.push_back(*a++);
            } else if (a == ae || b->first < a->first) {
                merged.emplace_back(b->first, -f * b->second);
                ++b;
            } else {
                Rat val = a->second - f * b->second;
                if (val != 0) merged.emplace_back(a->first, std::move(val));
                ++a;
                ++b;
            }
        }
        v = std::move(merged);
    }
    return v;
}

SparseVec mat_vec(const SparseRationalMatrix& g, const SparseVec& v) {
    std::vector<Rat> dense(g.n_cols(), Rat(0));
    for (const auto& [c, val] : v) dense[c] = val;
    SparseVec w;
    for (int r = 0; r < g.n_rows(); ++r) {
        Rat s = 0;
        for (const auto& [c, val] : g.row(r))
            if (dense[c] != 0) s += val * dense[c];
        if (s != 0) w.emplace_back(r, std::move(s));
    }
    return w;
}

Rat restricted_trace(const SparseRationalMatrix& g_matrix, const EchelonForm& subspace_rref) {
    const EchelonForm& E = subspace_rref;
    if (g_matrix.n_cols() != E.matrix.n_cols() || g_matrix.n_rows() != g_matrix.n_cols())
        throw std::invalid_argument("restricted_trace: dimension mismatch");
    Rat trace = 0;
    for (int i = 0; i < E.rank(); ++i) {
        SparseVec w = mat_vec(g_matrix, E.matrix.row(i));
        // coefficients of g*r_i in the rref basis read off at pivot columns
        SparseVec residual = std::move(w);
        for (int j = 0; j < E.rank(); ++j) {
            int p = E.pivot_columns[j];
            auto it = std::lower_bound(residual.begin(), residual.end(), p,
                                       [](const auto& e, int c) { return e.first < c; });
            if (it == residual.end() || it->first != p) continue;
            Rat coeff = it->second;
            if (j == i) trace += coeff;
            SparseVec merged;
            auto a = residual.begin(), ae = residual.end();
            const auto& row = E.matrix.row(j);
            auto b = row.begin(), be = row.end();
            while (a != ae || b != be) {
                if (b == be || (a != ae && a->first < b->first)) {
                    merged.push_back(*a++);
                } else if (a == ae || b->first < a->first) {
                    merged.emplace_back(b->first, -coeff * b->second);
                    ++b;
                } else {
                    Rat val = a->second - coeff * b->second;
                    if (val != 0) merged.emplace_back(a->first, std::move(val));
                    ++a;
                    ++b;
                }
            }
            residual = std::move(merged);
        }
        if (!residual.empty())
            throw theorem_violation("restricted_trace: subspace is not invariant");
    }
    return trace;
}

ModularRankResult modular_rank(const SparseRationalMatrix& M,
                               const std::vector<std::uint64_t>& primes) {
    if (primes.empty()) throw std::invalid_argument("modular_rank: need at least one prime");
    for (size_t i = 0; i < primes.size(); ++i) {
        if (primes[i] <= (1u << 20)) throw std::invalid_argument("modular_rank: primes must be > 2^20");
        for (size_t j = i + 1; j < primes.size(); ++j)
            if (primes[i] == primes[j])
                throw std::invalid_argument("modular_rank: primes must be distinct");
    }
    ModularRankResult result;
    for (std::uint64_t p : primes) {
        std::vector<std::vector<std::pair<int, std::uint64_t>>> rows(M.n_rows());
        for (int r = 0; r < M.n_rows(); ++r) {
            rows[r].reserve(M.row(r).size());
            for (const auto& [c, v] : M.row(r)) {
                std::uint64_t den = mpz_fdiv_ui(v.get_den().get_mpz_t(), p);
                if (den == 0)
                    throw prime_collision("modular_rank: denominator divisible by prime " +
                                          std::to_string(p));
                std::uint64_t num = mpz_fdiv_ui(v.get_num().get_mpz_t(), p);
                ZpField f{p};
                std::uint64_t val = f.mul(num, f.inv(den));
                if (val != 0) rows[r].emplace_back(c, val);
            }
        }
        Eliminator<ZpField> elim(ZpField{p}, M.n_cols(), std::move(rows));
        result.per_prime.push_back(static_cast<int>(elim.run().size()));
    }
    result.rank = *std::max_element(result.per_prime.begin(), result.per_prime.end());
    int agree = static_cast<int>(
        std::count(result.per_prime.begin(), result.per_prime.end(), result.rank));
    result.confident = agree >= 2;
    return result;
}

}  // namespace lanke
