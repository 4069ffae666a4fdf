// Acceptance runner: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "lanke/conjecture.hpp"
#include "lanke/engine.hpp"
#include "lanke/errors.hpp"
#include "lanke/garnir.hpp"

using namespace lanke;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double time_limit_s,
               const std::function<bool()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        detail = std::string(" (") + e.what() + ")";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && time_limit_s > 0 && secs > time_limit_s) {
        ok = false;
        detail = " (time limit exceeded)";
    }
    std::printf("%2d. %-58s %s  [%.1fs]%s\n", number, name.c_str(), ok ? "pass" : "FAIL",
                secs, detail.c_str());
    if (!ok) ++failures;
}

Partition two_column_hook(int i, int m) {
    std::vector<int> parts(i, 2);
    parts.insert(parts.end(), m - 2 * i, 1);
    return Partition{parts};
}

}  // namespace

int main() {
    criterion(1, "kernel of phi has Catalan dimension (n=2..6)", 10.0, [] {
        for (int n = 2; n <= 6; ++n) {
            PhiMatrix phi = phi_matrix(n, PhiMethod::closed_form);
            if (Int(phi.matrix.n_cols() - rank(phi.matrix)) != catalan(n)) return false;
        }
        return true;
    });

    criterion(2, "phi spectrum multiplicities are hook dimensions (n=2..6)", 30.0, [] {
        for (int n = 2; n <= 6; ++n) {
            PhiSpectrum s = phi_spectrum(n);
            Int total = 0;
            for (int i = 0; i < n; ++i) {
                int j = n - i;
                if (s.eigenvalues[i].first != 1 + ((j % 2) ? -j : j)) return false;
                if (Int(s.eigenvalues[i].second) != hook_dim(two_column_hook(i, 2 * n - 1)))
                    return false;
                total += s.eigenvalues[i].second;
            }
            if (total != binomial(2 * n - 1, n)) return false;
        }
        return true;
    });

    criterion(3, "definitional phi equals the closed form (n=2..5)", 0, [] {
        for (int n = 2; n <= 5; ++n)
            if (!(phi_matrix(n, PhiMethod::closed_form).matrix ==
                  phi_matrix(n, PhiMethod::definitional).matrix))
                return false;
        return true;
    });

    criterion(4, "binary bracket dimensions are (k-1)! (k=3..6)", 60.0, [] {
        for (int k = 3; k <= 6; ++k)
            if (Int(dim_rho(2, k).dim) != factorial(k - 1)) return false;
        return true;
    });

    criterion(5, "k=2 is the one-dimensional sign representation (n=2..6)", 0, [] {
        for (int n = 2; n <= 6; ++n) {
            if (dim_rho(n, 2).dim != 1) return false;
            if (!(character_rho(n, 2) == sign_character(n))) return false;
        }
        return true;
    });

    criterion(6, "ternary character is the two-column hook shape (n=2..4)", 0, [] {
        for (int n = 2; n <= 4; ++n)
            if (!(character_rho(n, 3) ==
                  irreducible_character(two_column_hook(n - 1, 2 * n - 1))))
                return false;
        return true;
    });

    criterion(7, "dim rho(3,5) = 1077 by two-prime modular rank", 600.0, [] {
        DimReport r = dim_rho(3, 5);
        return r.basis_size == 15400 && r.dim == 1077 && r.used_modular && r.confident;
    });

    criterion(8, "standard brackets: Catalan count, independent (n=2..6)", 0, [] {
        for (int n = 2; n <= 6; ++n)
            // counting and independence are asserted inside; throws on failure
            if (Int(static_cast<long>(standard_brackets(n).size())) != catalan(n))
                return false;
        return true;
    });

    criterion(9, "Garnir quotients match hook dimensions (all shapes, m<=7)", 0, [] {
        for (int m = 1; m <= 7; ++m)
            for (const Partition& lam : partitions_of(m)) {
                Int f = hook_dim(lam);
                if (specht_dim_full(lam) != f) return false;
                if (specht_dim_reduced(lam) != f) return false;
            }
        return true;
    });

    criterion(10, "Klyachko and maj-count oracles match engine Lie(k) (k=3..6)", 0, [] {
        for (int k = 3; k <= 6; ++k) {
            ClassFunction engine = lie_character(k);
            if (!(engine == induced_cyclic_character(k))) return false;
            for (const Partition& lam : partitions_of(k))
                if (Rat(kw_multiplicity(lam, k)) !=
                    inner_product(engine, irreducible_character(lam)))
                    return false;
        }
        return true;
    });

    criterion(11, "Whitehouse: W_4 = S^(2,2); restriction identity (k=3..5)", 0, [] {
        if (!(decompose(whitehouse_character(3)) ==
              Decomposition{{{Partition{2, 2}, 1}}}))
            return false;
        for (int k = 3; k <= 5; ++k)
            if (!(restrict_to_prev(whitehouse_character(k)) == lie_character(k)))
                return false;
        return true;
    });

    criterion(12, "conjecture: match on (2,3),(2,4),(3,3); (3,5) dim 1077", 0, [] {
        for (auto [n, k] : {std::pair{2, 3}, {2, 4}, {3, 3}})
            if (conjecture_check(n, k).verdict != Verdict::match) return false;
        ConjectureReport r35 = conjecture_check(3, 5, /*dims_only=*/true);
        if (r35.predicted_dim != 1077) return false;
        if (!r35.engine_dim || *r35.engine_dim != 1077) return false;
        // open case: report both sides, no pass/fail judgement
        ConjectureReport r34 = conjecture_check(3, 4);
        std::printf("    open case (3,4): predicted %s, engine %s, verdict %s\n",
                    r34.predicted_dim.get_str().c_str(),
                    r34.engine_dim ? r34.engine_dim->get_str().c_str() : "-",
                    to_string(r34.verdict).c_str());
        return true;
    });

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria satisfied\n");
    return 0;
}
