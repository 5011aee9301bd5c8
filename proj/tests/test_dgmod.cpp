#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "halg/dgmod.hpp"

using namespace halg;

namespace {

Field Q = Field::rationals();

// 2-term acyclic complex: generator in degree hi maps isomorphically down.
DGModule two_term(const Label& top, const Label& bot, int topdeg) {
    DGModule m;
    m.field = Q;
    m.gm.add_label(topdeg, top);
    m.gm.add_label(topdeg - 1, bot);
    SparseMatrix d(1, 1);
    d.set(0, 0, Scalar(1), Q);
    m.set_d(topdeg, d);
    return m;
}

// Random complex with prescribed dims; differential forced to satisfy d^2=0
// by zeroing the composite obstruction (take d in odd degrees random, even zero).
DGModule random_complex(std::mt19937& rng, int maxdeg) {
    DGModule m;
    m.field = Q;
    for (int n = 0; n <= maxdeg; ++n) {
        int k = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i) m.gm.add_label(n, "e" + std::to_string(n) + "_" + std::to_string(i));
    }
    for (int n = 1; n <= maxdeg; n += 2) {
        SparseMatrix d(m.dim(n - 1), m.dim(n));
        for (int i = 0; i < d.rows; ++i)
            for (int j = 0; j < d.cols; ++j) {
                long v = static_cast<long>(rng() % 5) - 2;
                if (v != 0) d.set(i, j, Scalar(v), Q);
            }
        m.set_d(n, d);
    }
    return m;
}

}  // namespace

TEST_CASE("verify_dsquare") {
    DGModule zero;
    zero.field = Q;
    zero.gm.add_label(0, "a");
    zero.gm.add_label(1, "b");
    CHECK(verify_dsquare(zero, 0, 1).ok());
    CHECK(verify_dsquare(two_term("x", "y", 1), 0, 1).ok());

    // corrupt: d in two consecutive degrees both identity => d^2 = id
    DGModule bad;
    bad.field = Q;
    bad.gm.add_label(0, "a");
    bad.gm.add_label(1, "b");
    bad.gm.add_label(2, "c");
    SparseMatrix one(1, 1);
    one.set(0, 0, Scalar(1), Q);
    bad.set_d(1, one);
    bad.set_d(2, one);
    auto rep = verify_dsquare(bad, 0, 2);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].degree == 2);
    CHECK(rep.violations[0].witness == "c");
}

TEST_CASE("tensor unit and Koszul sign") {
    DGModule unit = unit_complex(Q);
    DGModule b = two_term("x", "y", 3);
    DGModule t = tensor(unit, b);
    CHECK(t.dim(3) == 1);
    CHECK(t.dim(2) == 1);
    CHECK(t.d(3).get(0, 0) == 1);

    // |x| = |y| = 1, dx = u, dy = v: d(x@y) = u@y - x@v
    DGModule a1 = two_term("x", "u", 1);
    DGModule b1 = two_term("y", "v", 1);
    DGModule t2 = tensor(a1, b1);
    LinComb img = t2.d_comb(2, LinComb{{tensor_label("x", "y"), Scalar(1)}});
    REQUIRE(img.size() == 2);
    CHECK(img[tensor_label("u", "y")] == 1);
    CHECK(img[tensor_label("x", "v")] == -1);
}

TEST_CASE("tensor of acyclic complexes is acyclic") {
    DGModule a = two_term("x", "u", 1);
    DGModule b = two_term("y", "v", 2);
    DGModule t = tensor(a, b);
    for (int n = 0; n <= 3; ++n) CHECK(homology_dim_at(t, n) == 0);
}

TEST_CASE("homology basics") {
    DGModule m;
    m.field = Q;
    m.gm.add_label(0, "a");
    m.gm.add_label(1, "b");
    m.gm.add_label(1, "b2");
    auto h = homology(m, -1, 2);
    CHECK(h[0].dim == 1);
    CHECK(h[1].dim == 2);
    DGModule acyc = two_term("x", "y", 1);
    auto h2 = homology(acyc, -1, 2);
    CHECK(h2[0].dim == 0);
    CHECK(h2[1].dim == 0);
}

TEST_CASE("suspend") {
    DGModule m = two_term("x", "y", 2);
    CHECK(suspend(m, 0).gm.basis == m.gm.basis);
    DGModule s = suspend(m, 1);
    CHECK(s.dim(3) == 1);
    CHECK(s.dim(2) == 1);
    CHECK(s.d(3).get(0, 0) == -1);
    // suspend(suspend(m,1),-1) == m exactly
    DGModule rt = suspend(suspend(m, 1), -1);
    CHECK(rt.gm.basis == m.gm.basis);
    CHECK(rt.d(2) == m.d(2));
    // double suspension = suspension by 2
    DGModule s2a = suspend(suspend(m, 1), 1);
    DGModule s2b = suspend(m, 2);
    CHECK(s2a.gm.basis == s2b.gm.basis);
    CHECK(s2a.d(4) == s2b.d(4));
}

TEST_CASE("tensor associativity with signs") {
    std::mt19937 rng(77);
    DGModule a = random_complex(rng, 3);
    DGModule b = random_complex(rng, 2);
    DGModule c = random_complex(rng, 3);
    DGModule left = tensor(tensor(a, b), c);
    DGModule right = tensor(a, tensor(b, c));
    auto reassoc = [](const Label& l) {
        auto [ab, z] = split_tensor_label(l);
        auto [x, y] = split_tensor_label(ab);
        return tensor_label(x, tensor_label(y, z));
    };
    for (const auto& [n, ls] : left.gm.basis) {
        REQUIRE(left.dim(n) == right.dim(n));
        // d commutes with the reassociation bijection, signs included
        for (const auto& l : ls) {
            LinComb dl = left.d_comb(n, LinComb{{l, Scalar(1)}});
            LinComb dr = right.d_comb(n, LinComb{{reassoc(l), Scalar(1)}});
            LinComb dl_mapped;
            for (const auto& [lbl, s] : dl) dl_mapped[reassoc(lbl)] = s;
            CHECK(dl_mapped == dr);
        }
    }
}

TEST_CASE("Kuenneth over a field") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 4; ++trial) {
        DGModule a = random_complex(rng, 3);
        DGModule b = random_complex(rng, 3);
        DGModule t = tensor(a, b);
        for (int n = 1; n <= 4; ++n) {
            int lhs = homology_dim_at(t, n);
            int rhs = 0;
            for (int i = n - 3; i <= n; ++i) rhs += homology_dim_at(a, i) * homology_dim_at(b, n - i);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("chain map machinery") {
    DGModule a = two_term("x", "y", 1);
    DGModule b = two_term("p", "q", 1);
    ChainMap f;
    f.shift = 0;
    SparseMatrix m0(1, 1), m1(1, 1);
    m0.set(0, 0, Scalar(3), Q);
    m1.set(0, 0, Scalar(3), Q);
    f.mats[0] = m0;
    f.mats[1] = m1;
    CHECK(is_chain_map(a, b, f, 0, 1));
    f.mats[1].set(0, 0, Scalar(2), Q);
    CHECK(!is_chain_map(a, b, f, 0, 1));
}
