#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "halg/sset.hpp"

using namespace halg;

namespace {

Field Q = Field::rationals();

std::vector<int> homology_dims(const DGModule& m, int lo, int hi) {
    auto h = homology(m, lo - 1, hi + 1);
    std::vector<int> dims;
    for (int n = lo; n <= hi; ++n) dims.push_back(h[n].dim);
    return dims;
}

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// simplices of dimension n including degenerate ones
long simplex_count(const FiniteSimplicialSet& x, int n) {
    long total = 0;
    for (int p = 0; p <= x.top_dim(); ++p) total += x.count(p) * binom(n, p);
    return total;
}

}  // namespace

TEST_CASE("point") {
    FiniteSimplicialSet pt = point();
    CHECK(check_sset(pt).ok());
    DGModule c = normalized_chains(pt, Q);
    CHECK(c.dim(0) == 1);
    CHECK(c.gm.total_dim() == 1);
    CHECK(euler_characteristic(pt) == 1);
}

TEST_CASE("circle") {
    FiniteSimplicialSet k = circle();
    CHECK(check_sset(k).ok());
    CHECK(k.count(0) == 1);
    CHECK(k.count(1) == 1);
    CHECK(k.top_dim() == 1);
    // level n of the circle is Z/(n+1)
    for (int n = 0; n <= 6; ++n) CHECK(simplex_count(k, n) == n + 1);
    CHECK(homology_dims(normalized_chains(k, Q), 0, 2) == std::vector<int>{1, 1, 0});
}

TEST_CASE("product with a point") {
    FiniteSimplicialSet k = circle();
    FiniteSimplicialSet kp = product(k, point());
    CHECK(check_sset(kp).ok());
    for (int n = 0; n <= 2; ++n) CHECK(kp.count(n) == k.count(n));
    CHECK(homology_dims(normalized_chains(kp, Q), 0, 2) == std::vector<int>{1, 1, 0});
}

TEST_CASE("square: interval times interval") {
    FiniteSimplicialSet i = standard_simplex(1);
    FiniteSimplicialSet sq = product(i, i);
    CHECK(check_sset(sq).ok());
    CHECK(sq.count(0) == 4);
    CHECK(sq.count(1) == 5);
    CHECK(sq.count(2) == 2);
    CHECK(sq.top_dim() == 2);
    CHECK(homology_dims(normalized_chains(sq, Q), 0, 2) == std::vector<int>{1, 0, 0});
}

TEST_CASE("boundary of the tetrahedron") {
    FiniteSimplicialSet s2 = boundary_sphere(3);
    CHECK(check_sset(s2).ok());
    CHECK(s2.count(0) == 4);
    CHECK(s2.count(1) == 6);
    CHECK(s2.count(2) == 4);
    CHECK(homology_dims(normalized_chains(s2, Q), 0, 2) == std::vector<int>{1, 0, 1});
    // cochains: same dims in negated degrees
    DGModule co = normalized_cochains(s2, Q);
    CHECK(verify_dsquare(co, -3, 1).ok());
    CHECK(homology_dims(co, -2, 0) == std::vector<int>{1, 0, 1});
}

TEST_CASE("torus") {
    FiniteSimplicialSet k = circle();
    FiniteSimplicialSet t = product(k, k);
    CHECK(check_sset(t).ok());
    CHECK(t.count(0) == 1);
    CHECK(t.count(1) == 3);
    CHECK(t.count(2) == 2);
    CHECK(euler_characteristic(t) == 0);
    CHECK(homology_dims(normalized_chains(t, Q), 0, 2) == std::vector<int>{1, 2, 1});
    CHECK(homology_dims(normalized_cochains(t, Q), -2, 0) == std::vector<int>{1, 2, 1});
}

TEST_CASE("Euler characteristic is multiplicative") {
    FiniteSimplicialSet a = boundary_sphere(2);  // chi = 0
    FiniteSimplicialSet b = standard_simplex(2);
    FiniteSimplicialSet c = boundary_sphere(3);  // chi = 2
    CHECK(euler_characteristic(product(a, b)) ==
          euler_characteristic(a) * euler_characteristic(b));
    CHECK(euler_characteristic(product(c, c)) ==
          euler_characteristic(c) * euler_characteristic(c));
    CHECK(euler_characteristic(product(a, c)) == 0);
}

TEST_CASE("Kuenneth for circle times 2-sphere") {
    FiniteSimplicialSet p = product(circle(), boundary_sphere(3));
    CHECK(check_sset(p).ok());
    CHECK(homology_dims(normalized_chains(p, Q), 0, 3) == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("simplex calculus identities with degeneracies") {
    FiniteSimplicialSet t = product(circle(), circle());
    for (int n = 1; n <= t.top_dim(); ++n)
        for (int j = 0; j < t.count(n); ++j) {
            SimplexRef r = nondeg_ref(n, j);
            for (int i = 0; i <= n; ++i) {
                SimplexRef s = degen_of(r, i);
                CHECK(face_of(t, s, i) == r);
                CHECK(face_of(t, s, i + 1) == r);
                if (i + 2 <= n + 1) {
                    // d_{i+2} s_i = s_i d_{i+1}
                    CHECK(face_of(t, s, i + 2) == degen_of(face_of(t, r, i + 1), i));
                }
            }
        }
}

TEST_CASE("facet parsing") {
    FiniteSimplicialSet x = parse_facets_string("# hollow triangle\na b\nb c\na c\n");
    CHECK(x.count(0) == 3);
    CHECK(x.count(1) == 3);
    CHECK(homology_dims(normalized_chains(x, Q), 0, 1) == std::vector<int>{1, 1});
    CHECK_THROWS_AS(parse_facets_string("# nothing\n"), ParseError);
}

TEST_CASE("size cap") {
    FiniteSimplicialSet s2 = boundary_sphere(3);
    CHECK_THROWS_AS(product(s2, s2, 10), SizeLimitExceeded);
}
