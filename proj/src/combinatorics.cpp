#include "lanke/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "lanke/errors.hpp"

namespace lanke {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("partition parts must be >= 1");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::m() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ',';
        os << parts[i];
    }
    return os.str();
}

Partition Partition::from_string(const std::string& s) {
    std::vector<int> parts;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& lam) {
    std::vector<int> conj;
    if (lam.parts.empty()) return Partition{};
    for (int c = 1; c <= lam.parts[0]; ++c) {
        int cnt = 0;
        for (int p : lam.parts)
            if (p >= c) ++cnt;
        conj.push_back(cnt);
    }
    return Partition(std::move(conj));
}

bool is_staircase(const Partition& lam) {
    Partition conj = conjugate(lam);
    for (size_t i = 0; i + 1 < conj.parts.size(); ++i)
        if (conj.parts[i + 1] != conj.parts[i] - 1) return false;
    return !conj.parts.empty();
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

std::mutex partitions_mutex;

}  // namespace

const std::vector<Partition>& partitions_of(int m) {
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard<std::mutex> lock(partitions_mutex);
    auto it = cache.find(m);
    if (it == cache.end()) {
        std::vector<Partition> out;
        std::vector<int> cur;
        gen_partitions(m, m, cur, out);
        it = cache.emplace(m, std::move(out)).first;
    }
    return it->second;
}

int partition_index(const Partition& lam) {
    const auto& all = partitions_of(lam.m());
    auto it = std::lower_bound(all.begin(), all.end(), lam);
    if (it == all.end() || !(*it == lam))
        throw std::invalid_argument("partition not found: " + lam.to_string());
    return static_cast<int>(it - all.begin());
}

Int factorial(int m) {
    Int f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int b = 1;
    for (int i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

Int catalan(int n) { return binomial(2 * n, n) / (n + 1); }

Int hook_dim(const Partition& lam) {
    Partition conj = conjugate(lam);
    Int hooks = 1;
    for (int r = 0; r < lam.rows(); ++r)
        for (int c = 0; c < lam.parts[r]; ++c)
            hooks *= (lam.parts[r] - c) + (conj.parts[c] - r) - 1;
    Int f = factorial(lam.m());
    return f / hooks;
}

bool Tableau::is_standard() const {
    for (int r = 0; r < shape.rows(); ++r)
        for (int c = 0; c < shape.parts[r]; ++c) {
            if (c + 1 < shape.parts[r] && entries[r][c] >= entries[r][c + 1]) return false;
            if (r + 1 < shape.rows() && c < shape.parts[r + 1] &&
                entries[r][c] >= entries[r + 1][c])
                return false;
        }
    return true;
}

std::string Tableau::to_string() const {
    std::ostringstream os;
    for (int r = 0; r < shape.rows(); ++r) {
        if (r) os << ';';
        for (int c = 0; c < shape.parts[r]; ++c) {
            if (c) os << ',';
            os << entries[r][c];
        }
    }
    return os.str();
}

Tableau Tableau::from_string(const Partition& shape, const std::string& s) {
    Tableau t;
    t.shape = shape;
    std::istringstream is(s);
    std::string row;
    while (std::getline(is, row, ';')) {
        std::vector<int> r;
        std::istringstream ris(row);
        std::string tok;
        while (std::getline(ris, tok, ',')) r.push_back(std::stoi(tok));
        t.entries.push_back(std::move(r));
    }
    if (t.entries.size() != static_cast<size_t>(shape.rows()))
        throw std::invalid_argument("row count does not match shape");
    for (int r = 0; r < shape.rows(); ++r)
        if (t.entries[r].size() != static_cast<size_t>(shape.parts[r]))
            throw std::invalid_argument("row length does not match shape");
    return t;
}

int maj(const Tableau& t) {
    int m = t.shape.m();
    std::vector<int> row_of(m + 2, 0);
    for (int r = 0; r < t.shape.rows(); ++r)
        for (int e : t.entries[r]) row_of[e] = r;
    int s = 0;
    for (int i = 1; i < m; ++i)
        if (row_of[i + 1] > row_of[i]) s += i;
    return s;
}

namespace {

// Fill entries 1..m cell by cell; at each step the set of filled cells of
// each row is a prefix, and the partial filling is standard.  Cells are
// tried top row first, which yields lexicographic row-reading-word order.
void gen_syt(const Partition& lam, int next, std::vector<int>& row_fill,
             Tableau& t, std::vector<Tableau>& out) {
    int m = lam.m();
    if (next > m) {
        out.push_back(t);
        return;
    }
    for (int r = 0; r < lam.rows(); ++r) {
        int c = row_fill[r];
        if (c >= lam.parts[r]) continue;
        if (r > 0 && row_fill[r - 1] <= c) continue;  // cell above not filled
        t.entries[r][c] = next;
        ++row_fill[r];
        gen_syt(lam, next + 1, row_fill, t, out);
        --row_fill[r];
    }
}

}  // namespace

std::vector<Tableau> enumerate_syt(const Partition& lam) {
    if (lam.m() > kSytEnumerationBound)
        throw bound_error("enumerate_syt: |lambda| exceeds enumeration bound");
    Tableau t;
    t.shape = lam;
    t.entries.resize(lam.rows());
    for (int r = 0; r < lam.rows(); ++r) t.entries[r].resize(lam.parts[r]);
    std::vector<int> row_fill(lam.rows(), 0);
    std::vector<Tableau> out;
    gen_syt(lam, 1, row_fill, t, out);
    return out;
}

Int Decomposition::total_dim() const {
    Int d = 0;
    for (const auto& [lam, mult] : terms) d += mult * hook_dim(lam);
    return d;
}

Int Decomposition::multiplicity(const Partition& lam) const {
    for (const auto& [mu, mult] : terms)
        if (mu == lam) return mult;
    return 0;
}

std::string Decomposition::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) os << " + ";
        if (terms[i].second != 1) os << terms[i].second.get_str() << " ";
        os << "S^(" << terms[i].first.to_string() << ")";
    }
    return os.str();
}

Decomposition restrict_irreducible(const Partition& lam) {
    if (lam.m() < 2) throw std::invalid_argument("restrict_irreducible: need m >= 2");
    Decomposition d;
    for (int r = 0; r < lam.rows(); ++r) {
        // removable corner: last cell of row r
        if (r + 1 < lam.rows() && lam.parts[r + 1] == lam.parts[r]) continue;
        std::vector<int> p = lam.parts;
        if (--p[r] == 0) p.erase(p.begin() + r);
        d.terms.emplace_back(Partition(std::move(p)), 1);
    }
    std::sort(d.terms.begin(), d.terms.end());
    return d;
}

Partition add_rows(const Partition& lam, int n, int k) {
    if (n < 2 || k < 2) throw std::invalid_argument("add_rows: need n,k >= 2");
    if (!lam.parts.empty() && lam.parts[0] > k - 1)
        throw std::invalid_argument("add_rows: first part of " + lam.to_string() +
                                    " exceeds k-1 = " + std::to_string(k - 1));
    std::vector<int> p(n - 2, k - 1);
    p.insert(p.end(), lam.parts.begin(), lam.parts.end());
    return Partition(std::move(p));
}

}  // namespace lanke
