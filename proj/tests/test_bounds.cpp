#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "satlab/bounds.hpp"
#include "satlab/constructions.hpp"
#include "satlab/counting.hpp"
#include "satlab/graph.hpp"
#include "satlab/pattern.hpp"

using namespace satlab;

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(3, 6) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(7).to_string() == "7");
    CHECK(Rational(35, 3).to_string() == "35/3");
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("falling factorial") {
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(7, 0) == 1);
    CHECK(falling_factorial(3, 4) == 0);
    CHECK_THROWS(falling_factorial(3, -1));
}

TEST_CASE("edge-count bound values") {
    BoundParams p;
    p.n = 10;
    p.s = 4;
    BoundReport r = evaluate_bound(BoundCase::Ehm, p);
    CHECK(r.lower == Rational(17));
    CHECK(r.upper == Rational(17));
    CHECK(!r.lower_asymptotic);
}

TEST_CASE("clique-vs-clique bound values") {
    BoundParams p;
    p.n = 10;
    p.r = 3;
    p.s = 4;
    BoundReport r = evaluate_bound(BoundCase::KrKs, p);
    // Upper: 8 * C(2,2) + C(2,3) = 8.
    CHECK(r.upper == Rational(8));
    // Lower: max{ C(2,2)/2 * 10 - 2, (C(2,2)+C(1,1))/3 * 10 } = max{3, 20/3}.
    CHECK(r.lower == Rational(20, 3));
    CHECK(r.lower_asymptotic);
    CHECK_THROWS_AS(evaluate_bound(BoundCase::KrKs, BoundParams{.n = 10, .r = 4, .s = 4}),
                    std::domain_error);
}

TEST_CASE("pinned-pair quadratic lower bound") {
    BoundParams p;
    p.n = 10;
    p.s = 4;
    p.h = cycle_graph(4);
    p.h1 = 0;
    p.h2 = 2;
    BoundReport r = evaluate_bound(BoundCase::QuadLB, p);
    // f = 1, so n^2/(2*3) - n/2 = 100/6 - 5 = 35/3.
    CHECK(r.lower == Rational(35, 3));
    p.h2 = 1;  // an edge, not a nonedge
    CHECK_THROWS_AS(evaluate_bound(BoundCase::QuadLB, p), std::domain_error);
}

TEST_CASE("four-cycle vs K4 upper bound") {
    BoundParams p;
    p.n = 10;
    BoundReport r = evaluate_bound(BoundCase::C4K4, p);
    CHECK(r.upper == Rational(28));
    CHECK(r.lower_asymptotic);
}

TEST_CASE("cycle-vs-clique leading coefficients") {
    BoundParams p;
    p.n = 10;
    p.s = 5;
    p.r = 6;
    BoundReport r = evaluate_bound(BoundCase::CrKs, p);
    // k = 3, (s-2)_k = 6: lower (6/12) n^3, upper (6/6) n^3.
    CHECK(r.lower == Rational(500));
    CHECK(r.upper == Rational(1000));
    CHECK(r.lower_asymptotic);
    CHECK(r.upper_asymptotic);
    CHECK_THROWS_AS(evaluate_bound(BoundCase::CrKs, BoundParams{.n = 10, .r = 8, .s = 5}),
                    std::domain_error);
}

TEST_CASE("six-cycle vs K5 upper bound") {
    BoundParams p;
    p.n = 10;
    BoundReport r = evaluate_bound(BoundCase::C6K5, p);
    CHECK(r.upper == Rational(6 * binomial(7, 3)));
}

TEST_CASE("greedy-count bound dominates the realized construction") {
    for (const Graph& f : {complete_graph(3), complete_graph(4), path_graph(3)}) {
        for (int n : {8, 10, 12}) {
            for (int r : {2, 3}) {
                BoundParams p;
                p.n = n;
                p.r = r;
                p.f = f;
                BoundReport rep = evaluate_bound(BoundCase::KTcount, p);
                Count realized = count_copies(kaszonyi_tuza(n, f), Pattern::clique(r)).copies;
                REQUIRE(rep.upper.has_value());
                CHECK(Rational(realized) <= *rep.upper);
            }
        }
    }
}

TEST_CASE("construction matches the clique-count formula") {
    for (int s = 4; s <= 6; ++s)
        for (int r = 3; r < s; ++r)
            for (int n = s; n <= 14; ++n) {
                Count copies = count_copies(make(ehm_join(n, s)), Pattern::clique(r)).copies;
                CHECK(copies == (n - s + 2) * binomial(s - 2, r - 1) + binomial(s - 2, r));
            }
}

TEST_CASE("report serialization and table rendering") {
    BoundParams p;
    p.n = 10;
    p.s = 4;
    std::string j = evaluate_bound(BoundCase::Ehm, p).to_json();
    CHECK(j.find("\"case\":\"Ehm\"") != std::string::npos);
    CHECK(j.find("17") != std::string::npos);

    std::string table = bounds_table(12);
    CHECK(table.find("sat(n,K3,K4)") != std::string::npos);
    CHECK(table.find("asymptotic") != std::string::npos);
}
