// Acceptance gate: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "halg/algio.hpp"
#include "halg/hochschild.hpp"
#include "halg/loopmodel.hpp"
#include "halg/operads.hpp"

using namespace halg;

namespace {

Field Q = Field::rationals();

AlgebraSpec one_even_spec() {
    AlgebraSpec s;
    s.gens = {{"x", 2}};
    return s;
}

AlgebraSpec sphere_spec() {
    AlgebraSpec s;
    s.gens = {{"x", 2}, {"y", 3}};
    s.dgen[1] = {{{0, 0}, Scalar(1)}};
    return s;
}

AlgebraSpec nil_spec() {
    AlgebraSpec s;
    s.gens = {{"e", 0}};
    return s;
}

// simplicial circle as a module: level n basis {*, t1..tn} in degree 0
SimplicialDGModule circle_module(int P) {
    auto level = [](int n) {
        DGModule m;
        m.gm.add_label(0, "*");
        for (int k = 1; k <= n; ++k) m.gm.add_label(0, "t" + std::to_string(k));
        return m;
    };
    auto step = [](const Label& l) { return l == "*" ? 0 : std::stoi(l.substr(1)); };
    auto face = [&](int n, int i, const Label& l) {
        int k = step(l);
        if (k == 0) return LinComb{{"*", Scalar(1)}};
        int kk = (k <= i) ? k : k - 1;
        if (kk == 0 || kk == n) return LinComb{{"*", Scalar(1)}};
        return LinComb{{"t" + std::to_string(kk), Scalar(1)}};
    };
    auto degen = [&](int, int i, const Label& l) {
        int k = step(l);
        if (k == 0) return LinComb{{"*", Scalar(1)}};
        int kk = (k <= i) ? k : k + 1;
        return LinComb{{"t" + std::to_string(kk), Scalar(1)}};
    };
    return build_simplicial(Q, P, level, face, degen);
}

bool dsq(const DGModule& m) {
    return verify_dsquare(m, m.gm.lowest_degree() - 1, m.gm.highest_degree() + 1).ok();
}

// ---- criterion 7 second generator: dense normalized Hochschild complex of
// the dual numbers, built from the bare face formula and reduced by plain
// Gaussian elimination ----

using DenseMat = std::vector<std::vector<Scalar>>;

int dense_rank(DenseMat m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Scalar f = m[i][c] / m[r][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

// C_k = A (x) Abar^k for A = Q[e]/e^2, basis (a0, e,...,e), a0 in {1, e};
// b = sum_{i<k} (-1)^i (merge i, i+1) + (-1)^k (merge last into first)
std::vector<int> dense_dual_numbers_hh(int max_len) {
    std::vector<DenseMat> b(max_len + 1);  // b[k] : C_k -> C_{k-1}, 2 x 2
    for (int k = 1; k <= max_len; ++k) {
        DenseMat m(2, std::vector<Scalar>(2, Scalar(0)));
        // column 0: a0 = 1. merge(1, e) = e survives only at i = 0 and at
        // the wraparound; middle merges hit e*e = 0.
        m[1][0] = Scalar(1) + ((k % 2 == 0) ? Scalar(1) : Scalar(-1));
        // column 1: a0 = e. every merge hits e*e = 0.
        b[k] = m;
    }
    std::vector<int> dims;
    for (int n = 0; n + 1 <= max_len; ++n) {
        int rk_out = (n == 0) ? 0 : dense_rank(b[n]);
        int rk_in = dense_rank(b[n + 1]);
        dims.push_back(2 - rk_out - rk_in);
    }
    return dims;
}

// deterministic bar-construction label of arity n, degree d
Label sample_be_label(int n, int d, std::mt19937& rng) {
    auto perms = all_perms(n);
    while (true) {
        std::vector<Perm> t;
        t.push_back(perms[rng() % perms.size()]);
        for (int i = 0; i < d; ++i) t.push_back(perms[rng() % perms.size()]);
        // make letters non-identity by construction of the word label
        std::vector<Perm> homog;
        homog.push_back(t[0]);
        for (int i = 1; i <= d; ++i) homog.push_back(perm_compose(homog[i - 1], t[i]));
        Label l = be_word_label(homog);
        if (!l.empty()) return l;
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Gate {
    bool all = true;
    void line(int i, const std::string& what, bool pass) {
        std::cout << (pass ? "PASS" : "FAIL") << "  " << i << ": " << what << "\n" << std::flush;
        all = all && pass;
    }
};

}  // namespace

int main() {
    Gate gate;

    // shared instances; arity-4 bar space kept to degree 2 (24 * 23^d labels)
    OperadData E2 = barratt_eccles(2, 9, Q);
    OperadData E3 = barratt_eccles(3, 6, Q);
    OperadData E4 = barratt_eccles(4, 2, Q);
    OperadicHC h_even = operadic_hc(one_even_spec(), {5, 10}, 4);
    OperadicHC h_sphere = operadic_hc(sphere_spec(), {4, 8}, 3);
    ClassicalComplex cl_dual = classical_complex(dual_numbers(Q), 6, 0, 6);
    FiniteAlgebra fa_sphere = from_free(build_algebra(sphere_spec(), {5, 10}));
    ClassicalComplex cl_sphere = classical_complex(fa_sphere, 5, -8, 0);

    // 1: d^2 = 0 across the corpus
    {
        bool ok = dsq(cl_dual.complex) && dsq(cl_sphere.complex);
        Unreduced u_dual = unreduced_complex(dual_numbers(Q), 4, cl_dual);
        ok = ok && dsq(u_dual.norm.total.complex) && dsq(u_dual.norm.complex);
        ok = ok && dsq(h_sphere.norm.total.complex) && dsq(h_sphere.norm.complex) &&
             dsq(h_sphere.plus);
        ok = ok && dsq(h_even.plus);
        ok = ok && dsq(E2.space(2)) && dsq(E3.space(3));
        ok = ok && verify_dsquare(E4.space(4), -1, 2).ok();  // arity 4 truncated low
        try {
            // cototal verifies its own D^2 = 0 during construction
            cototal(jones_model(sphere_one_cell(2), 3, 6), Q);
        } catch (const Error&) {
            ok = false;
        }
        gate.line(1, "every constructed differential squares to zero", ok);
    }

    // 2: Tot vs N homology agreement for generated simplicial DG modules
    {
        bool ok = true;
        auto agree = [&](const SimplicialDGModule& s, int P) {
            TotalComplex t = tot(s, P);
            Normalized n = normalize(s, P);
            for (int d = 0; d <= P - 1; ++d)
                if (homology_dim_at(t.complex, d) != homology_dim_at(n.complex, d)) ok = false;
        };
        SimplicialDGModule circ = circle_module(4);
        agree(circ, 4);
        agree(levelwise_product(circ, circ), 4);                 // torus
        agree(cyclic_simplicial(nil_spec(), {4, 0}, 3).sim, 3);  // one-generator model
        DGModule two;
        two.gm.add_label(1, "v");
        two.gm.add_label(0, "u");
        SparseMatrix d11(1, 1);
        d11.set(0, 0, Scalar(1), Q);
        two.set_d(1, d11);
        agree(constant_simplicial(two, 3), 3);
        ClassicalComplex cl5 = classical_complex(dual_numbers(Q), 5, 0, 5);
        agree(unreduced_complex(dual_numbers(Q), 4, cl5).sim, 4);
        gate.line(2, "Tot and N homology agree below the level bound on 5 modules", ok);
    }

    // 3: bar complexes acyclic and free
    {
        bool ok = true;
        // direct homology where the spaces are materialized and affordable
        for (int d = 0; d <= 8; ++d)
            ok = ok && homology_dim_at(E2.space(2), d) == (d == 0 ? 1 : 0);
        for (int d = 0; d <= 4; ++d)
            ok = ok && homology_dim_at(E3.space(3), d) == (d == 0 ? 1 : 0);
        ok = ok && homology_dim_at(E4.space(4), 0) == 1 && homology_dim_at(E4.space(4), 1) == 0;
        // contraction certificate dh + hd = id - unit aug, degrees through 8:
        // exhaustive at low degree, deterministic samples above
        std::mt19937 rng(7);
        for (int n = 2; n <= 4 && ok; ++n)
            for (int d = 0; d <= 8 && ok; ++d) {
                OperadData& Esrc = (n == 2) ? E2 : (n == 3 ? E3 : E4);
                std::vector<Label> labels;
                if (d <= Esrc.space(n).gm.highest_degree()) labels = Esrc.space(n).gm.labels(d);
                if (labels.empty())
                    for (int t = 0; t < 25; ++t) labels.push_back(sample_be_label(n, d, rng));
                for (const Label& x : labels) {
                    LinComb lhs;
                    for (const auto& [hl, hv] : be_contraction(n, x))
                        lhs = comb_add(lhs, comb_scale(be_diff(n, hl, Q), hv, Q), Q);
                    for (const auto& [dl, dv] : be_diff(n, x, Q))
                        for (const auto& [hl, hv] : be_contraction(n, dl))
                            comb_accumulate(lhs, hl, Q.mul(dv, hv), Q);
                    LinComb rhs{{x, Scalar(1)}};
                    if (d == 0) comb_accumulate(rhs, perm_label(perm_identity(n)), Scalar(-1), Q);
                    if (lhs != rhs) ok = false;
                }
            }
        // freeness by orbit count: no fixed labels, dims = order * orbits
        for (int n = 2; n <= 4 && ok; ++n) {
            long order = 1;
            for (int k = 2; k <= n; ++k) order *= k;
            OperadData& Esrc = (n == 2) ? E2 : (n == 3 ? E3 : E4);
            const DGModule& sp = Esrc.space(n);
            for (int d = 0; d <= sp.gm.highest_degree(); ++d) {
                if (sp.dim(d) % order != 0) ok = false;
                for (const auto& g : all_perms(n)) {
                    if (g == perm_identity(n)) continue;
                    for (const auto& l : sp.gm.labels(d)) {
                        LinComb img = Esrc.act(n, l, g);
                        if (img.size() == 1 && img.begin()->first == l) ok = false;
                    }
                }
            }
        }
        gate.line(3, "bar complexes acyclic (direct + contraction certificate) and free", ok);
    }

    // 4: block-label bijection
    {
        bool ok = check_label_bijection(h_even).ok() && check_label_bijection(h_sphere).ok();
        ok = ok && check_label_bijection(operadic_hc(one_even_spec(), {5, 10}, 2)).ok();
        ok = ok && check_label_bijection(operadic_hc(sphere_spec(), {4, 8}, 2)).ok();
        gate.line(4, "positive-block labels biject with normalization representatives", ok);
    }

    // 5: splitting
    {
        bool ok = true;
        try {
            check_splitting(h_even);
            check_splitting(h_sphere);
        } catch (const MixingDetected&) {
            ok = false;
        }
        gate.line(5, "level-zero summand splits off with zero coupling", ok);
    }

    // 6: comparison homology agreement with basis-to-basis rank
    {
        bool ok = true;
        auto compare = [&ok](const OperadicHC& h, int P, int maxdeg) {
            FreeAlgebra A = build_algebra(h.cyc.base, h.cyc.bounds);
            ClassicalComplex cl = classical_complex(from_free(A), P, P - maxdeg, P);
            ChainMap cmp = block_compare(h, cl);
            for (int n = -(P - 1); n <= 0; ++n) {
                int dn = homology_dim_at(h.norm.complex, n);
                if (dn != homology_dim_at(cl.complex, n)) ok = false;
                if (induced_homology_rank(h.norm.complex, cl.complex, cmp, n) != dn) ok = false;
            }
        };
        compare(h_even, 4, 10);
        compare(h_sphere, 3, 8);
        gate.line(6, "comparison map matches homology and carries a basis to a basis", ok);
    }

    // 7: classical oracles against an independent dense generator
    {
        std::vector<int> want = {2, 1, 1, 1, 1};
        std::vector<int> naive = dense_dual_numbers_hh(5);
        bool ok = naive == want;
        for (int n = 0; n <= 4; ++n)
            if (homology_dim_at(cl_dual.complex, n) != want[n]) ok = false;
        ClassicalComplex ext = classical_complex(exterior_on_one(Q, 1), 5, 0, 10);
        for (int n = 0; n <= 8; ++n)
            if (homology_dim_at(ext.complex, n) != 1) ok = false;
        gate.line(7, "dual-numbers and exterior oracles agree across both generators", ok);
    }

    // 8: unreduced vs reduced in stable degrees
    {
        bool ok = true;
        Unreduced u = unreduced_complex(dual_numbers(Q), 4, cl_dual);
        for (int n = 0; n <= 3; ++n)
            if (homology_dim_at(u.norm.complex, n) != homology_dim_at(cl_dual.complex, n))
                ok = false;
        FiniteAlgebra tp = from_free(build_algebra(one_even_spec(), {3, 6}));
        ClassicalComplex cl_tp = classical_complex(tp, 4, -8, 4);
        Unreduced ut = unreduced_complex(tp, 4, cl_tp);
        for (int n = -3; n <= 0; ++n)
            if (homology_dim_at(ut.norm.complex, n) != homology_dim_at(cl_tp.complex, n))
                ok = false;
        gate.line(8, "unreduced and reduced homology agree in stable degrees", ok);
    }

    // 9: loop-space Betti numbers against the two-generator model
    {
        bool cap4 = false, cap3 = false;
        try {
            loop_betti(boundary_sphere(3), Q, 4, 3);
        } catch (const SizeLimitExceeded&) {
            cap4 = true;
        }
        try {
            loop_betti(boundary_sphere(3), Q, 3, 2);
        } catch (const SizeLimitExceeded&) {
            cap3 = true;
        }
        bool ok = cap4 && cap3;
        auto b2 = loop_betti(boundary_sphere(3), Q, 2, 1);
        ok = ok && b2[0].first == homology_dim_at(cl_sphere.complex, 0) && b2[0].first == 1;
        ok = ok && b2[1].first == homology_dim_at(cl_sphere.complex, -1) && b2[1].first == 1;
        auto b1c = loop_betti(sphere_one_cell(2), Q, 3, 2);
        for (int m = 0; m <= 2; ++m)
            ok = ok && b1c[m].first == homology_dim_at(cl_sphere.complex, -m);
        gate.line(9,
                  "loop model: size cap at levels 4 and 3; b0 = b1 = 1 at level 2 for the "
                  "triangulated 2-sphere; one-cell model matches the oracle through degree 2",
                  ok);
    }

    // 10: byte-identical selftest reports
    {
        std::string bin = HALG_BIN;
        std::string f1 = "acceptance_selftest_1.txt", f2 = "acceptance_selftest_2.txt";
        int r1 = std::system((bin + " selftest > " + f1).c_str());
        int r2 = std::system((bin + " selftest > " + f2).c_str());
        std::string a = slurp(f1), b = slurp(f2);
        bool ok = r1 == 0 && r2 == 0 && !a.empty() && a == b;
        std::remove(f1.c_str());
        std::remove(f2.c_str());
        gate.line(10, "two selftest runs are byte-identical", ok);
    }

    return gate.all ? 0 : 1;
}
