#include "lanke/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "lanke/errors.hpp"

namespace lanke {

Int centralizer_order(const Partition& mu) {
    Int z = 1;
    int run = 1;
    for (size_t i = 0; i < mu.parts.size(); ++i) {
        z *= mu.parts[i];
        if (i + 1 < mu.parts.size() && mu.parts[i + 1] == mu.parts[i]) {
            ++run;
        } else {
            z *= factorial(run);
            run = 1;
        }
    }
    return z;
}

const std::vector<ConjugacyClass>& conjugacy_classes(int m) {
    static std::map<int, std::vector<ConjugacyClass>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it == cache.end()) {
        std::vector<ConjugacyClass> cls;
        Int mfact = factorial(m);
        for (const Partition& mu : partitions_of(m))
            cls.push_back({mu, mfact / centralizer_order(mu)});
        it = cache.emplace(m, std::move(cls)).first;
    }
    return it->second;
}

ClassFunction ClassFunction::zero(int m) {
    ClassFunction f;
    f.m = m;
    f.values.assign(partitions_of(m).size(), Rat(0));
    return f;
}

Rat ClassFunction::at(const Partition& cycle_type) const {
    return values[partition_index(cycle_type)];
}

Rat ClassFunction::degree() const { return values.back(); }  // (1^m) is last

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    if (m != o.m) throw std::invalid_argument("class function degree mismatch");
    for (size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
    if (m != o.m) throw std::invalid_argument("class function degree mismatch");
    for (size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
    return *this;
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
    ClassFunction r = *this;
    r += o;
    return r;
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
    ClassFunction r = *this;
    r -= o;
    return r;
}

std::string ClassFunction::to_json() const {
    nlohmann::json j;
    j["m"] = m;
    j["values"] = nlohmann::json::array();
    const auto& types = partitions_of(m);
    for (size_t i = 0; i < values.size(); ++i)
        j["values"].push_back({{"cycle_type", types[i].to_string()},
                               {"value", rat_to_string(values[i])}});
    return j.dump();
}

ClassFunction ClassFunction::from_json(const std::string& s) {
    nlohmann::json j = nlohmann::json::parse(s);
    ClassFunction f = zero(j.at("m").get<int>());
    for (const auto& v : j.at("values")) {
        Partition mu = Partition::from_string(v.at("cycle_type").get<std::string>());
        f.values[partition_index(mu)] = rat_from_string(v.at("value").get<std::string>());
    }
    return f;
}

namespace {

// Murnaghan-Nakayama on beta-numbers: a shape is a set of distinct
// first-column hook lengths; removing a border strip of size r replaces
// some b in the set by b - r, with sign (-1)^{#elements strictly between}.
using BetaSet = std::vector<int>;  // sorted ascending, distinct

BetaSet beta_set(const Partition& lam) {
    int rows = lam.rows();
    BetaSet b(rows);
    for (int i = 0; i < rows; ++i) b[rows - 1 - i] = lam.parts[i] + (rows - 1 - i);
    return b;
}

struct MNKey {
    BetaSet beta;
    int part_index;
    bool operator<(const MNKey& o) const {
        if (part_index != o.part_index) return part_index < o.part_index;
        return beta < o.beta;
    }
};

Int mn_value(const BetaSet& beta, const std::vector<int>& mu, int idx,
             std::map<MNKey, Int>& memo) {
    if (idx == static_cast<int>(mu.size())) return 1;
    MNKey key{beta, idx};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int r = mu[idx];
    Int total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - r;
        if (target < 0) continue;
        if (std::binary_search(beta.begin(), beta.end(), target)) continue;
        BetaSet next = beta;
        next.erase(next.begin() + i);
        auto pos = std::lower_bound(next.begin(), next.end(), target);
        int height = static_cast<int>((next.begin() + i) - pos);
        next.insert(pos, target);
        Int sub = mn_value(next, mu, idx + 1, memo);
        if (height % 2)
            total -= sub;
        else
            total += sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

ClassFunction irreducible_character(const Partition& lam) {
    if (lam.m() > kCharacterDegreeBound)
        throw bound_error("irreducible_character: degree exceeds bound");
    static std::map<Partition, ClassFunction> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(lam);
    if (it != cache.end()) return it->second;

    int m = lam.m();
    ClassFunction chi = ClassFunction::zero(m);
    BetaSet beta = beta_set(lam);
    const auto& types = partitions_of(m);
    for (size_t i = 0; i < types.size(); ++i) {
        std::map<MNKey, Int> memo;  // keyed by position in one cycle type only
        chi.values[i] = Rat(mn_value(beta, types[i].parts, 0, memo));
    }
    cache.emplace(lam, chi);
    return chi;
}

ClassFunction trivial_character(int m) {
    ClassFunction f = ClassFunction::zero(m);
    for (auto& v : f.values) v = 1;
    return f;
}

ClassFunction sign_character(int m) {
    ClassFunction f = ClassFunction::zero(m);
    const auto& types = partitions_of(m);
    for (size_t i = 0; i < types.size(); ++i)
        f.values[i] = ((m - types[i].rows()) % 2) ? Rat(-1) : Rat(1);
    return f;
}

Rat inner_product(const ClassFunction& chi, const ClassFunction& psi) {
    if (chi.m != psi.m) throw std::invalid_argument("inner_product: degree mismatch");
    const auto& cls = conjugacy_classes(chi.m);
    Rat s = 0;
    for (size_t i = 0; i < cls.size(); ++i)
        s += Rat(cls[i].size) * chi.values[i] * psi.values[i];
    return s / Rat(factorial(chi.m));
}

Decomposition decompose(const ClassFunction& chi) {
    Decomposition d;
    for (const Partition& lam : partitions_of(chi.m)) {
        Rat mult = inner_product(chi, irreducible_character(lam));
        if (mult == 0) continue;
        if (mult.get_den() != 1 || mult < 0)
            throw theorem_violation("decompose: multiplicity of S^(" + lam.to_string() +
                                    ") is " + rat_to_string(mult) + ", not a character");
        d.terms.emplace_back(lam, Int(mult.get_num()));
    }
    return d;
}

ClassFunction character_of(const Decomposition& d) {
    if (d.terms.empty()) throw std::invalid_argument("character_of: empty decomposition");
    ClassFunction f = ClassFunction::zero(d.terms[0].first.m());
    for (const auto& [lam, mult] : d.terms) {
        ClassFunction chi = irreducible_character(lam);
        for (size_t i = 0; i < f.values.size(); ++i)
            f.values[i] += Rat(mult) * chi.values[i];
    }
    return f;
}

namespace {

// Distinct parts of mu with multiplicities.
std::vector<std::pair<int, int>> part_multiplicities(const Partition& mu) {
    std::vector<std::pair<int, int>> pm;
    for (int p : mu.parts) {
        if (!pm.empty() && pm.back().first == p)
            ++pm.back().second;
        else
            pm.emplace_back(p, 1);
    }
    return pm;
}

Partition from_counts(const std::vector<std::pair<int, int>>& pm,
                      const std::vector<int>& take) {
    std::vector<int> parts;
    for (size_t i = 0; i < pm.size(); ++i)
        for (int j = 0; j < take[i]; ++j) parts.push_back(pm[i].first);
    return Partition(std::move(parts));
}

}  // namespace

ClassFunction induce_product(const ClassFunction& chi1, const ClassFunction& chi2) {
    int a = chi1.m, b = chi2.m;
    ClassFunction out = ClassFunction::zero(a + b);
    const auto& types = partitions_of(a + b);
    for (size_t ti = 0; ti < types.size(); ++ti) {
        const Partition& mu = types[ti];
        auto pm = part_multiplicities(mu);
        Rat sum = 0;
        // split the multiset of parts of mu into alpha |- a and beta |- b
        std::vector<int> take(pm.size(), 0);
        auto dfs = [&](auto&& self, size_t i, int rem) -> void {
            if (i == pm.size()) {
                if (rem != 0) return;
                Partition alpha = from_counts(pm, take);
                std::vector<int> rest(pm.size());
                for (size_t j = 0; j < pm.size(); ++j) rest[j] = pm[j].second - take[j];
                Partition beta = from_counts(pm, rest);
                sum += chi1.at(alpha) * chi2.at(beta) /
                       (Rat(centralizer_order(alpha)) * Rat(centralizer_order(beta)));
                return;
            }
            for (int t = 0; t <= pm[i].second && t * pm[i].first <= rem; ++t) {
                take[i] = t;
                self(self, i + 1, rem - t * pm[i].first);
            }
            take[i] = 0;
        };
        dfs(dfs, 0, a);
        out.values[ti] = Rat(centralizer_order(mu)) * sum;
    }
    return out;
}

ClassFunction induced_sign_young(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("induced_sign_young: need a,b >= 1");
    return induce_product(sign_character(a), sign_character(b));
}

ClassFunction induce_to_next(const ClassFunction& chi) {
    return induce_product(chi, trivial_character(1));
}

ClassFunction restrict_to_prev(const ClassFunction& chi) {
    if (chi.m < 2) throw std::invalid_argument("restrict_to_prev: need m >= 2");
    ClassFunction out = ClassFunction::zero(chi.m - 1);
    const auto& types = partitions_of(chi.m - 1);
    for (size_t i = 0; i < types.size(); ++i) {
        std::vector<int> parts = types[i].parts;
        parts.push_back(1);
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        out.values[i] = chi.at(Partition(std::move(parts)));
    }
    return out;
}

namespace {

int mobius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

}  // namespace

ClassFunction induced_cyclic_character(int k) {
    if (k < 2) throw std::invalid_argument("induced_cyclic_character: need k >= 2");
    // The k-cycle c generates C_k; c^j has gcd(j,k) cycles of length
    // k/gcd(j,k), and summing a primitive root of unity over the j with
    // fixed gcd collapses to a Mobius number.
    ClassFunction out = ClassFunction::zero(k);
    for (int g = 1; g <= k; ++g) {
        if (k % g) continue;
        int d = k / g;
        std::vector<int> parts(g, d);
        Partition mu{parts};
        Rat z(centralizer_order(mu));
        out.values[partition_index(mu)] = z * mobius(d) / k;
    }
    return out;
}

Int kw_multiplicity(const Partition& lam, int k, int i) {
    if (lam.m() != k) throw std::invalid_argument("kw_multiplicity: lambda must be a partition of k");
    if (std::gcd(((i % k) + k) % k, k) != 1)
        throw std::invalid_argument("kw_multiplicity: i must be coprime to k");
    Int count = 0;
    for (const Tableau& t : enumerate_syt(lam))
        if (maj(t) % k == ((i % k) + k) % k) ++count;
    return count;
}

}  // namespace lanke
