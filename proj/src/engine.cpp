#include "lanke/engine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "lanke/errors.hpp"

namespace lanke {

VSpace::VSpace(int n, int k) : n_(n), k_(k), m_(generator_count(n, k)) {
    basis_ = enumerate_canonical(n, k);
    index_.reserve(basis_.size() * 2);
    for (size_t i = 0; i < basis_.size(); ++i)
        index_.emplace(basis_[i].to_string(), static_cast<int>(i));
}

int VSpace::index_of(const BracketedWord& canonical) const {
    auto it = index_.find(canonical.to_string());
    if (it == index_.end())
        throw std::invalid_argument("word not in canonical basis: " + canonical.to_string());
    return it->second;
}

SparseRationalMatrix VSpace::action_matrix(const std::vector<int>& sigma) const {
    SparseRationalMatrix g(dim(), dim());
    for (int j = 0; j < dim(); ++j) {
        SignedBracket sb = act(sigma, basis_[j]);
        g.set(index_of(sb.word), j, Rat(sb.sign));
    }
    return g;
}

namespace {

// replace the internal node with preorder id `target` (internal nodes only)
// by `replacement`; id counter advances in preorder
BracketedWord replace_node(const BracketedWord& w, int target, const BracketedWord& replacement,
                           int& next_id) {
    if (w.is_leaf()) return w;
    int my_id = next_id++;
    if (my_id == target) return replacement;
    std::vector<BracketedWord> children;
    children.reserve(w.children().size());
    for (const auto& c : w.children())
        children.push_back(replace_node(c, target, replacement, next_id));
    return BracketedWord::node(std::move(children));
}

void collect_internal(const BracketedWord& w, std::vector<const BracketedWord*>& out) {
    if (w.is_leaf()) return;
    out.push_back(&w);
    for (const auto& c : w.children()) collect_internal(c, out);
}

}  // namespace

RelationSet jacobi_relations(const VSpace& V) {
    const int n = V.n();
    RelationSet rel;
    rel.matrix = SparseRationalMatrix(0, V.dim());
    for (int ti = 0; ti < V.dim(); ++ti) {
        const BracketedWord& tree = V.basis()[ti];
        std::vector<const BracketedWord*> internal;
        collect_internal(tree, internal);
        for (size_t pid = 0; pid < internal.size(); ++pid) {
            const BracketedWord& P = *internal[pid];
            for (int ci = 0; ci < P.arity(); ++ci) {
                const BracketedWord& C = P.children()[ci];
                if (C.is_leaf()) continue;
                // [x_1..x_n] with context arguments y_1..y_{n-1}
                std::vector<BracketedWord> y;
                for (int j = 0; j < P.arity(); ++j)
                    if (j != ci) y.push_back(P.children()[j]);
                std::map<int, Rat> row;
                // the identity expands [C, y...]; C sits at position ci in P,
                // so the original tree carries the sign of moving C in front
                row[ti] += (ci % 2) ? -1 : 1;
                for (int i = 0; i < n; ++i) {
                    std::vector<BracketedWord> inner{C.children()[i]};
                    inner.insert(inner.end(), y.begin(), y.end());
                    std::vector<BracketedWord> outer;
                    for (int j = 0; j < n; ++j)
                        outer.push_back(j == i ? BracketedWord::node(inner)
                                               : C.children()[j]);
                    BracketedWord term_p = BracketedWord::node(std::move(outer));
                    int next_id = 0;
                    BracketedWord whole =
                        replace_node(tree, static_cast<int>(pid), term_p, next_id);
                    SignedBracket sb = canonicalize(whole);
                    row[V.index_of(sb.word)] -= sb.sign;
                }
                SparseVec sv;
                for (auto& [col, val] : row)
                    if (val != 0) sv.emplace_back(col, std::move(val));
                rel.matrix.append_row(std::move(sv));
                rel.provenance.push_back({ti, static_cast<int>(pid), ci});
            }
        }
    }
    return rel;
}

DimReport dim_rho(int n, int k, const EngineOptions& opts) {
    VSpace V(n, k);
    if (V.dim() > opts.max_basis)
        throw bound_error("dim_rho: basis size exceeds configured bound");
    RelationSet rel = jacobi_relations(V);
    DimReport rep;
    rep.n = n;
    rep.k = k;
    rep.m = V.m();
    rep.basis_size = V.dim();
    if (opts.exact_verify || V.dim() <= opts.exact_rank_threshold) {
        rep.relation_rank = rank(rel.matrix);
    } else {
        rep.used_modular = true;
        rep.primes_used = opts.primes;
        ModularRankResult mr = modular_rank(rel.matrix, opts.primes);
        if (!mr.confident) {
            // escalate with a third prime before falling back to exact
            std::vector<std::uint64_t> primes = opts.primes;
            primes.push_back(opts.escalation_prime);
            mr = modular_rank(rel.matrix, primes);
            rep.primes_used = primes;
            if (!mr.confident) {
                rep.relation_rank = rank(rel.matrix);
                rep.used_modular = false;
                rep.confident = true;
                rep.dim = rep.basis_size - rep.relation_rank;
                return rep;
            }
        }
        rep.relation_rank = mr.rank;
        rep.confident = mr.confident;
    }
    rep.dim = rep.basis_size - rep.relation_rank;
    return rep;
}

std::vector<int> class_representative(const Partition& cycle_type) {
    int m = cycle_type.m();
    std::vector<int> sigma(m + 1);
    int start = 1;
    for (int len : cycle_type.parts) {
        for (int i = 0; i < len; ++i) sigma[start + i] = start + (i + 1) % len;
        start += len;
    }
    return sigma;
}

ClassFunction character_rho(int n, int k, const EngineOptions& opts) {
    VSpace V(n, k);
    if (V.dim() > opts.max_char_basis)
        throw bound_error("character_rho: basis size exceeds character-path bound");
    RelationSet rel = jacobi_relations(V);
    EchelonForm E = rref(rel.matrix);
    ClassFunction chi = ClassFunction::zero(V.m());
    const auto& types = partitions_of(V.m());
    for (size_t ci = 0; ci < types.size(); ++ci) {
        std::vector<int> sigma = class_representative(types[ci]);
        Rat fixed = 0;
        for (int j = 0; j < V.dim(); ++j) {
            SignedBracket sb = act(sigma, V.basis()[j]);
            if (sb.word == V.basis()[j]) fixed += sb.sign;
        }
        SparseRationalMatrix g = V.action_matrix(sigma);
        chi.values[ci] = fixed - restricted_trace(g, E);
    }
    // sanity: the quotient character must decompose with integer multiplicities
    decompose(chi);
    return chi;
}

// ---- phi (k = 3) ----

namespace {

std::vector<std::vector<int>> n_subsets(int n) {
    const int m = 2 * n - 1;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int x = start; x <= m; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// v_S = [[a_1..a_n], b_1..b_{n-1}]; relative to the canonical basis word it
// carries the sign of moving the inner bracket to its sorted position.
SignedBracket v_subset(const std::vector<int>& S, int m) {
    std::vector<char> in_s(m + 1, 0);
    for (int a : S) in_s[a] = 1;
    std::vector<BracketedWord> inner;
    for (int a : S) inner.push_back(BracketedWord::leaf(a));
    std::vector<BracketedWord> outer{BracketedWord::node(std::move(inner))};
    for (int b = 1; b <= m; ++b)
        if (!in_s[b]) outer.push_back(BracketedWord::leaf(b));
    return canonicalize(BracketedWord::node(std::move(outer)));
}

}  // namespace

int phi_entry(const std::vector<int>& S, const std::vector<int>& T) {
    if (S.size() != T.size()) throw std::invalid_argument("phi_entry: subset sizes differ");
    if (S == T) return 1;
    std::vector<int> inter;
    std::set_intersection(S.begin(), S.end(), T.begin(), T.end(), std::back_inserter(inter));
    if (inter.size() == 1) return (inter[0] % 2) ? -1 : 1;
    return 0;
}

PhiMatrix phi_matrix(int n, PhiMethod method) {
    if (n < 2) throw std::invalid_argument("phi_matrix: need n >= 2");
    PhiMatrix phi;
    phi.n = n;
    phi.subsets = n_subsets(n);
    const int dim = static_cast<int>(phi.subsets.size());
    const int m = 2 * n - 1;
    phi.matrix = SparseRationalMatrix(dim, dim);
    if (method == PhiMethod::closed_form) {
        for (int t = 0; t < dim; ++t)
            for (int s = 0; s < dim; ++s) {
                int e = phi_entry(phi.subsets[s], phi.subsets[t]);
                if (e) phi.matrix.set(t, s, Rat(e));
            }
        return phi;
    }
    // definitional: expand R_S through the canonical basis and convert back
    // to the v_S basis via the per-subset signs
    VSpace V(n, 3);
    std::vector<int> sign_of_index(dim);       // canonical index -> v sign
    std::vector<int> col_of_index(dim);        // canonical index -> subset row
    for (int s = 0; s < dim; ++s) {
        SignedBracket sb = v_subset(phi.subsets[s], m);
        int idx = V.index_of(sb.word);
        sign_of_index[idx] = sb.sign;
        col_of_index[idx] = s;
    }
    for (int s = 0; s < dim; ++s) {
        const auto& S = phi.subsets[s];
        std::vector<int> b;
        {
            std::vector<char> in_s(m + 1, 0);
            for (int a : S) in_s[a] = 1;
            for (int x = 1; x <= m; ++x)
                if (!in_s[x]) b.push_back(x);
        }
        std::map<int, Rat> col;  // row (subset index) -> coefficient
        col[s] += 1;
        for (int i = 0; i < n; ++i) {
            std::vector<BracketedWord> inner{BracketedWord::leaf(S[i])};
            for (int x : b) inner.push_back(BracketedWord::leaf(x));
            std::vector<BracketedWord> outer;
            for (int j = 0; j < n; ++j)
                outer.push_back(j == i ? BracketedWord::node(inner)
                                       : BracketedWord::leaf(S[j]));
            SignedBracket sb = canonicalize(BracketedWord::node(std::move(outer)));
            int idx = V.index_of(sb.word);
            // term in the v basis: sign relative to canonical, then to v_T
            col[col_of_index[idx]] -= Rat(sb.sign * sign_of_index[idx]);
        }
        for (const auto& [row, val] : col)
            if (val != 0) phi.matrix.set(row, s, val);
    }
    return phi;
}

PhiSpectrum phi_spectrum(int n, const EngineOptions& opts) {
    PhiMatrix phi = phi_matrix(n, PhiMethod::closed_form);
    const int dim = phi.matrix.n_rows();
    if (dim > opts.max_basis) throw bound_error("phi_spectrum: dimension exceeds bound");
    PhiSpectrum spec;
    spec.n = n;
    int total = 0;
    for (int i = 0; i < n; ++i) {
        int j = n - i;
        int w = 1 + ((j % 2) ? -j : j);
        SparseRationalMatrix shifted = phi.matrix;
        for (int d = 0; d < dim; ++d) shifted.set(d, d, shifted.get(d, d) - w);
        int mult = dim - rank(shifted);
        spec.eigenvalues.emplace_back(w, mult);
        total += mult;
    }
    if (total != dim)
        throw theorem_violation("phi_spectrum: candidate eigenvalues leave " +
                                std::to_string(dim - total) + " dimensions unaccounted");
    return spec;
}

std::vector<BracketedWord> standard_brackets(int n, const EngineOptions& opts) {
    const int m = 2 * n - 1;
    VSpace V(n, 3);
    std::vector<BracketedWord> out;
    std::vector<int> indices;
    for (const auto& S : n_subsets(n)) {
        std::vector<int> b;
        std::vector<char> in_s(m + 1, 0);
        for (int a : S) in_s[a] = 1;
        for (int x = 1; x <= m; ++x)
            if (!in_s[x]) b.push_back(x);
        bool standard = true;
        for (int i = 0; i + 1 < n; ++i)
            if (S[i] >= b[i]) standard = false;
        if (!standard) continue;
        SignedBracket sb = v_subset(S, m);
        indices.push_back(V.index_of(sb.word));
        out.push_back(sb.word);
    }
    if (Int(static_cast<long>(out.size())) != catalan(n))
        throw theorem_violation("standard_brackets: count differs from the Catalan number");
    // independence modulo the relation row space
    RelationSet rel = jacobi_relations(V);
    int base_rank = rank(rel.matrix);
    SparseRationalMatrix stacked = rel.matrix;
    for (int idx : indices) stacked.append_row({{idx, Rat(1)}});
    if (rank(stacked) != base_rank + static_cast<int>(indices.size()))
        throw theorem_violation("standard_brackets: images are dependent modulo relations");
    (void)opts;
    return out;
}

}  // namespace lanke
