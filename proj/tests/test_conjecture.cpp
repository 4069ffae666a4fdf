#include <doctest.h>

#include "lanke/conjecture.hpp"
#include "lanke/errors.hpp"

using namespace lanke;

TEST_CASE("lie_character small cases") {
    CHECK(lie_character(2) == sign_character(2));
    CHECK(lie_character(3) == irreducible_character(Partition{2, 1}));
    CHECK(decompose(lie_character(4)) ==
          Decomposition{{{Partition{3, 1}, 1}, {Partition{2, 1, 1}, 1}}});
    CHECK(lie_character(5).degree() == 24);
    CHECK_THROWS_AS(lie_character(9), bound_error);
}

TEST_CASE("lie_character agrees with the cyclic-induction description") {
    for (int k = 3; k <= 5; ++k)
        CHECK(lie_character(k) == induced_cyclic_character(k));
}

TEST_CASE("whitehouse_character") {
    CHECK(decompose(whitehouse_character(3)) == Decomposition{{{Partition{2, 2}, 1}}});
    CHECK(decompose(whitehouse_character(4)) ==
          Decomposition{{{Partition{3, 1, 1}, 1}}});
    for (int k = 3; k <= 5; ++k) {
        ClassFunction w = whitehouse_character(k);
        CHECK(w.degree() == Rat(factorial(k - 1)));
        // restriction identity, checked again from the outside
        CHECK(restrict_to_prev(w) == lie_character(k));
    }
}

TEST_CASE("verdict names") {
    CHECK(to_string(Verdict::match) == "match");
    CHECK(to_string(Verdict::dim_match_only) == "dim-match-only");
    CHECK(to_string(Verdict::mismatch) == "mismatch");
    CHECK(to_string(Verdict::engine_unavailable) == "engine-unavailable");
}

TEST_CASE("conjecture_check on settled cases") {
    ConjectureReport r23 = conjecture_check(2, 3);
    CHECK(r23.m == 3);
    CHECK(r23.predicted_dim == 2);
    CHECK(r23.engine_dim.has_value());
    CHECK(*r23.engine_dim == 2);
    CHECK(r23.verdict == Verdict::match);
    CHECK(r23.flagged_constituents.empty());
    CHECK(r23.predicted_decomposition ==
          Decomposition{{{Partition{2, 1}, 1}}});

    ConjectureReport r33 = conjecture_check(3, 3);
    CHECK(r33.predicted_dim == 5);
    CHECK(r33.predicted_decomposition ==
          Decomposition{{{Partition{2, 2, 1}, 1}}});
    CHECK(r33.verdict == Verdict::match);

    CHECK(conjecture_check(2, 4).verdict == Verdict::match);
}

TEST_CASE("conjecture_check dims-only stops at dimension agreement") {
    ConjectureReport r = conjecture_check(2, 3, /*dims_only=*/true);
    CHECK_FALSE(r.engine_decomposition.has_value());
    CHECK(r.verdict == Verdict::dim_match_only);
}

TEST_CASE("conjecture_check reports engine-unavailable beyond the bounds") {
    EngineOptions tight;
    tight.max_basis = 5;
    ConjectureReport r = conjecture_check(3, 3, false, tight);
    CHECK(r.verdict == Verdict::engine_unavailable);
    CHECK_FALSE(r.engine_dim.has_value());
    CHECK(r.predicted_dim == 5);  // prediction is still produced
}

TEST_CASE("conjecture_check on the open case runs to a verdict") {
    ConjectureReport r = conjecture_check(3, 4);
    CHECK(r.m == 7);
    CHECK(r.engine_dim.has_value());
    CHECK(r.predicted_dim > 0);
    // no assertion about which verdict: this case is the open question
    CHECK(to_string(r.verdict) != "?");
}
