#include "halg/hochschild.hpp"

#include <algorithm>
#include <set>

namespace halg {

int FiniteAlgebra::index_of(const Label& l) const {
    for (int i = 0; i < dim(); ++i)
        if (labels[i] == l) return i;
    throw Error("unknown algebra basis label: " + l);
}

FiniteAlgebra dual_numbers(const Field& F) {
    FiniteAlgebra A;
    A.field = F;
    A.labels = {"1", "e"};
    A.degrees = {0, 0};
    A.mult = {{{{"1", Scalar(1)}}, {{"e", Scalar(1)}}}, {{{"e", Scalar(1)}}, {}}};
    A.dval = {{}, {}};
    return A;
}

FiniteAlgebra exterior_on_one(const Field& F, int degree) {
    FiniteAlgebra A;
    A.field = F;
    A.labels = {"1", "x"};
    A.degrees = {0, degree};
    A.mult = {{{{"1", Scalar(1)}}, {{"x", Scalar(1)}}}, {{{"x", Scalar(1)}}, {}}};
    A.dval = {{}, {}};
    return A;
}

FiniteAlgebra from_free(const FreeAlgebra& F) {
    FiniteAlgebra A;
    A.field = F.spec.field;
    A.labels.push_back("1");
    A.degrees.push_back(0);
    int lo = F.complex.gm.lowest_degree(), hi = F.complex.gm.highest_degree();
    for (int n = hi; n >= lo; --n)
        for (const auto& l : F.complex.gm.labels(n)) {
            if (l == "1") continue;
            A.labels.push_back(l);
            A.degrees.push_back(n);
        }
    int d = A.dim();
    A.mult.assign(d, std::vector<LinComb>(d));
    A.dval.assign(d, {});
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j)
            A.mult[i][j] = multiply_monomials(F, F.monomial(A.labels[i]), F.monomial(A.labels[j]));
        A.dval[i] = F.complex.d_comb(A.degrees[i], {{A.labels[i], Scalar(1)}});
    }
    return A;
}

DGModule algebra_complex(const FiniteAlgebra& A) {
    DGModule m;
    m.field = A.field;
    for (int i = 0; i < A.dim(); ++i) m.gm.add_label(A.degrees[i], A.labels[i]);
    int lo = m.gm.lowest_degree(), hi = m.gm.highest_degree();
    for (int n = hi; n > lo; --n)
        m.set_d(n, matrix_from_images(m, n, m, n - 1, [&](const Label& l) {
                    return A.dval[A.index_of(l)];
                }));
    return m;
}

Label word_label(const FiniteAlgebra& A, const std::vector<int>& w) {
    Label l = A.labels[w[0]] + "[";
    for (size_t i = 1; i < w.size(); ++i) {
        if (i > 1) l += "|";
        l += A.labels[w[i]];
    }
    return l + "]";
}

namespace {

int word_degree(const FiniteAlgebra& A, const std::vector<int>& w) {
    int d = A.degrees[w[0]];
    for (size_t i = 1; i < w.size(); ++i) d += A.degrees[w[i]] + 1;
    return d;
}

// differential of a word, with the window quotient (terms below lo drop)
LinComb d_word(const ClassicalComplex& c, const std::vector<int>& w) {
    const FiniteAlgebra& A = c.A;
    const Field& F = A.field;
    int k = static_cast<int>(w.size()) - 1;
    LinComb out;
    auto emit = [&](std::vector<int> nw, Scalar coef) {
        if (F.is_zero(coef)) return;
        int d = word_degree(A, nw);
        if (d < c.lo) return;
        Label l = word_label(A, nw);
        if (!c.words.count(l)) throw Error("differential image escapes the basis at " + l);
        comb_accumulate(out, l, coef, F);
    };
    auto slot_terms = [&](const LinComb& val, int slot, bool unit_ok, const Scalar& sgn) {
        for (const auto& [lab, cv] : val) {
            int idx = A.index_of(lab);
            if (idx == 0 && !unit_ok) throw Error("unit appears inside a suspended slot");
            std::vector<int> nw = w;
            nw[slot] = idx;
            emit(std::move(nw), F.mul(sgn, cv));
        }
    };
    // eps[i] = |a0| + sum_{j<i} |sa_j|
    std::vector<long> eps(k + 1, 0);
    if (k >= 1) eps[1] = A.degrees[w[0]];
    for (int i = 2; i <= k; ++i) eps[i] = eps[i - 1] + A.degrees[w[i - 1]] + 1;

    // internal part
    slot_terms(A.dval[w[0]], 0, true, Scalar(1));
    for (int i = 1; i <= k; ++i) {
        Scalar sgn = (eps[i] % 2 == 0) ? Scalar(-1) : Scalar(1);
        slot_terms(A.dval[w[i]], i, false, sgn);
    }
    if (k == 0) return out;

    // multiplication part
    for (const auto& [lab, cv] : A.mult[w[0]][w[1]]) {
        std::vector<int> nw{A.index_of(lab)};
        nw.insert(nw.end(), w.begin() + 2, w.end());
        Scalar sgn = (A.degrees[w[0]] % 2 == 0) ? Scalar(1) : Scalar(-1);
        emit(std::move(nw), F.mul(sgn, cv));
    }
    for (int i = 2; i <= k; ++i) {
        Scalar sgn = (eps[i] % 2 == 0) ? Scalar(1) : Scalar(-1);
        for (const auto& [lab, cv] : A.mult[w[i - 1]][w[i]]) {
            int idx = A.index_of(lab);
            if (idx == 0) throw Error("unit appears inside a suspended slot");
            std::vector<int> nw(w.begin(), w.begin() + i - 1);
            nw.push_back(idx);
            nw.insert(nw.end(), w.begin() + i + 1, w.end());
            emit(std::move(nw), F.mul(sgn, cv));
        }
    }
    long wr = (static_cast<long>(A.degrees[w[k]]) + 1) * eps[k];
    Scalar wsgn = (wr % 2 == 0) ? Scalar(-1) : Scalar(1);
    for (const auto& [lab, cv] : A.mult[w[k]][w[0]]) {
        std::vector<int> nw{A.index_of(lab)};
        nw.insert(nw.end(), w.begin() + 1, w.end() - 1);
        emit(std::move(nw), F.mul(wsgn, cv));
    }
    return out;
}

}  // namespace

ClassicalComplex classical_complex(const FiniteAlgebra& A, int max_length, int lo, int hi) {
    ClassicalComplex c;
    c.A = A;
    c.max_length = max_length;
    c.lo = lo;
    c.hi = hi;
    c.complex.field = A.field;

    bool allpos = true, allneg = true;
    for (int i = 1; i < A.dim(); ++i) {
        int sd = A.degrees[i] + 1;
        if (sd < 1) allpos = false;
        if (sd > -1) allneg = false;
    }
    if (!allpos && !allneg && max_length > 12)
        throw Error("mixed-sign letters require a small length bound");

    std::vector<std::vector<int>> found;
    std::vector<int> w;
    std::function<void(int)> rec = [&](int deg) {
        if (deg >= lo && deg <= hi) found.push_back(w);
        if (static_cast<int>(w.size()) - 1 >= max_length) return;
        for (int l = 1; l < A.dim(); ++l) {
            int nd = deg + A.degrees[l] + 1;
            if (allpos && nd > hi) continue;
            if (allneg && nd < lo) continue;
            w.push_back(l);
            rec(nd);
            w.pop_back();
        }
    };
    for (int a0 = 0; a0 < A.dim(); ++a0) {
        w = {a0};
        rec(A.degrees[a0]);
    }

    std::map<int, std::vector<std::vector<int>>> by_deg;
    for (auto& f : found) by_deg[word_degree(A, f)].push_back(f);
    for (auto& [d, v] : by_deg) {
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        for (const auto& f : v) {
            Label l = word_label(A, f);
            c.complex.gm.add_label(d, l);
            c.words[l] = f;
        }
    }

    for (int n = hi; n > lo; --n) {
        if (c.complex.dim(n) == 0 && c.complex.dim(n - 1) == 0) continue;
        c.complex.set_d(n, matrix_from_images(c.complex, n, c.complex, n - 1, [&](const Label& l) {
                            return d_word(c, c.words.at(l));
                        }));
    }
    auto rep = verify_dsquare(c.complex, lo, hi);
    if (!rep.ok()) throw DSquareNonzero("d^2 != 0 on " + rep.violations.front().witness);
    return c;
}

LinComb classical_mul(const ClassicalComplex& c, const Label& a, const Label& b) {
    const FiniteAlgebra& A = c.A;
    const Field& F = A.field;
    const auto& wa = c.words.at(a);
    const auto& wb = c.words.at(b);
    int n = static_cast<int>(wa.size()) - 1, m = static_cast<int>(wb.size()) - 1;
    if (n + m > c.max_length) throw Error("product escapes the length bound");
    // b0 moves past the suspended letters of the first factor
    long t = 0;
    for (int i = 1; i <= n; ++i) t += A.degrees[wa[i]] + 1;
    t *= A.degrees[wb[0]];

    LinComb out;
    std::vector<int> pick(n + m, 0);  // 1 where a-letters go
    std::fill(pick.begin(), pick.begin() + n, 1);
    std::sort(pick.begin(), pick.end());
    do {
        // shuffle sign: each b-letter passed by a later a-letter
        long sh = 0;
        for (int i = 0; i < n + m; ++i)
            if (pick[i] == 1)
                for (int j = 0; j < i; ++j)
                    if (pick[j] == 0) {
                        int ai = 0, bj = 0, ca = 0, cb = 0;
                        for (int u = 0; u <= i; ++u) ca += pick[u];
                        for (int u = 0; u <= j; ++u) cb += 1 - pick[u];
                        ai = wa[ca];
                        bj = wb[cb];
                        sh += static_cast<long>(A.degrees[ai] + 1) * (A.degrees[bj] + 1);
                    }
        std::vector<int> letters;
        int ia = 1, ib = 1;
        for (int i = 0; i < n + m; ++i) letters.push_back(pick[i] ? wa[ia++] : wb[ib++]);
        Scalar sgn = ((t + sh) % 2 == 0) ? Scalar(1) : Scalar(-1);
        for (const auto& [lab, cv] : A.mult[wa[0]][wb[0]]) {
            std::vector<int> nw{A.index_of(lab)};
            nw.insert(nw.end(), letters.begin(), letters.end());
            int d = word_degree(A, nw);
            if (d < c.lo || d > c.hi) continue;
            Label l = word_label(A, nw);
            if (!c.words.count(l)) throw Error("product escapes the basis at " + l);
            comb_accumulate(out, l, F.mul(sgn, cv), F);
        }
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

LinComb classical_mul(const ClassicalComplex& c, const LinComb& a, const LinComb& b) {
    const Field& F = c.A.field;
    LinComb out;
    for (const auto& [la, ca] : a)
        for (const auto& [lb, cb] : b)
            for (const auto& [l, cv] : classical_mul(c, la, lb))
                comb_accumulate(out, l, F.mul(cv, F.mul(ca, cb)), F);
    return out;
}

namespace {

std::vector<Label> tensor_factors(Label l, int slots) {
    std::vector<Label> out(slots);
    for (int i = slots - 1; i >= 1; --i) {
        auto [a, b] = split_tensor_label(l);
        out[i] = b;
        l = a;
    }
    out[0] = l;
    return out;
}

Label tensor_join(const std::vector<Label>& f) {
    Label l = f[0];
    for (size_t i = 1; i < f.size(); ++i) l = tensor_label(l, f[i]);
    return l;
}

ChainMap degreewise_map(const DGModule& src, const DGModule& tgt,
                        const std::function<LinComb(const Label&)>& f) {
    ChainMap m;
    int lo = src.gm.lowest_degree(), hi = src.gm.highest_degree();
    for (int n = lo; n <= hi; ++n) {
        if (src.dim(n) == 0) continue;
        m.mats[n] = matrix_from_images(src, n, tgt, n, f);
    }
    return m;
}

}  // namespace

Unreduced unreduced_complex(const FiniteAlgebra& A, int P, const ClassicalComplex& target) {
    const Field& F = A.field;
    Unreduced u;
    u.sim.field = F;
    u.sim.level_bound = P;
    DGModule A1 = algebra_complex(A);
    u.sim.levels.push_back(A1);
    for (int n = 1; n <= P; ++n) u.sim.levels.push_back(tensor(u.sim.levels.back(), A1));

    u.sim.faces.resize(P + 1);
    u.sim.degens.resize(P);
    for (int n = 1; n <= P; ++n) {
        for (int i = 0; i <= n; ++i) {
            auto img = [&, n, i](const Label& l) {
                auto f = tensor_factors(l, n + 1);
                std::vector<int> idx(n + 1);
                for (int j = 0; j <= n; ++j) idx[j] = A.index_of(f[j]);
                LinComb out;
                if (i < n) {
                    for (const auto& [lab, cv] : A.mult[idx[i]][idx[i + 1]]) {
                        std::vector<Label> nf;
                        for (int j = 0; j < i; ++j) nf.push_back(f[j]);
                        nf.push_back(lab);
                        for (int j = i + 2; j <= n; ++j) nf.push_back(f[j]);
                        comb_accumulate(out, tensor_join(nf), cv, F);
                    }
                } else {
                    long s = 0;
                    for (int j = 0; j < n; ++j) s += A.degrees[idx[j]];
                    s *= A.degrees[idx[n]];
                    Scalar sgn = (s % 2 == 0) ? Scalar(1) : Scalar(-1);
                    for (const auto& [lab, cv] : A.mult[idx[n]][idx[0]]) {
                        std::vector<Label> nf{lab};
                        for (int j = 1; j < n; ++j) nf.push_back(f[j]);
                        comb_accumulate(out, tensor_join(nf), F.mul(sgn, cv), F);
                    }
                }
                return out;
            };
            u.sim.faces[n].push_back(degreewise_map(u.sim.levels[n], u.sim.levels[n - 1], img));
        }
    }
    for (int n = 0; n < P; ++n) {
        for (int i = 0; i <= n; ++i) {
            auto img = [&, n, i](const Label& l) {
                auto f = tensor_factors(l, n + 1);
                std::vector<Label> nf;
                for (int j = 0; j <= i; ++j) nf.push_back(f[j]);
                nf.push_back(A.labels[0]);
                for (int j = i + 1; j <= n; ++j) nf.push_back(f[j]);
                return LinComb{{tensor_join(nf), Scalar(1)}};
            };
            u.sim.degens[n].push_back(degreewise_map(u.sim.levels[n], u.sim.levels[n + 1], img));
        }
    }

    u.norm = normalize(u.sim, P, TotSign::InternalFirst);

    auto cmp = [&](const Label& nl) {
        auto [p, tl] = split_tot_label(nl);
        auto f = tensor_factors(tl, p + 1);
        std::vector<int> w(p + 1);
        for (int j = 0; j <= p; ++j) w[j] = A.index_of(f[j]);
        LinComb out;
        long s = 0;
        for (int j = 1; j <= p; ++j) {
            if (w[j] == 0) return out;  // suspension kills the unit
            s += static_cast<long>(j) * A.degrees[w[j]];
        }
        int d = word_degree(A, w);
        if (d < target.lo || d > target.hi) return out;
        Label l = word_label(A, w);
        if (!target.words.count(l)) throw Error("comparison image escapes the basis at " + l);
        out[l] = (s % 2 == 0) ? Scalar(1) : Scalar(-1);
        return out;
    };
    u.compare = degreewise_map(u.norm.complex, target.complex, cmp);
    return u;
}

CyclicSimplicial cyclic_simplicial(const AlgebraSpec& s, const AlgebraBounds& b, int P) {
    CyclicSimplicial c;
    c.base = s;
    c.bounds = b;
    c.P = P;
    const Field& F = s.field;
    for (int n = 0; n <= P; ++n) c.levels.push_back(build_algebra(copower_spec(s, n + 1), b));

    c.sim.field = F;
    c.sim.level_bound = P;
    for (int n = 0; n <= P; ++n) c.sim.levels.push_back(c.levels[n].complex);
    c.sim.faces.resize(P + 1);
    c.sim.degens.resize(P);
    int nv = static_cast<int>(s.gens.size());
    for (int n = 1; n <= P; ++n) {
        for (int i = 0; i < n; ++i)
            c.sim.faces[n].push_back(fold_adjacent(c.levels[n], c.levels[n - 1], n + 1, i));
        ChainMap tau = cyclic_rotation(c.levels[n], n + 1);
        ChainMap f0 = fold_adjacent(c.levels[n], c.levels[n - 1], n + 1, 0);
        ChainMap dn;
        const DGModule& ln = c.levels[n].complex;
        const DGModule& lm = c.levels[n - 1].complex;
        for (int q = ln.gm.lowest_degree(); q <= ln.gm.highest_degree(); ++q) {
            if (ln.dim(q) == 0) continue;
            dn.mats[q] = f0.mat(ln, lm, q).mul(tau.mat(ln, ln, q), F);
        }
        c.sim.faces[n].push_back(dn);
    }
    for (int n = 0; n < P; ++n)
        for (int i = 0; i <= n; ++i)
            c.sim.degens[n].push_back(algebra_hom(c.levels[n], c.levels[n + 1], [nv, i](int idx) {
                int cp = idx / nv, g = idx % nv;
                return (cp <= i ? cp : cp + 1) * nv + g;
            }));
    return c;
}

bool is_positive_block(const CyclicSimplicial& c, int p, const Label& mono_label) {
    if (p == 0) return true;
    int nv = static_cast<int>(c.base.gens.size());
    std::set<int> copies;
    for (int idx : c.levels[p].monomial(mono_label)) copies.insert(idx / nv);
    // degeneracies insert the unit after a slot, so only copies 1..p must
    // appear; the 0-th block plays the role of the unsuspended factor
    for (int j = 1; j <= p; ++j)
        if (!copies.count(j)) return false;
    return true;
}

OperadicHC operadic_hc(const AlgebraSpec& s, const AlgebraBounds& b, int P) {
    OperadicHC h;
    h.cyc = cyclic_simplicial(s, b, P);
    h.norm = normalize(h.cyc.sim, P, TotSign::InternalFirst);
    const Field& F = s.field;
    const DGModule& T = h.norm.total.complex;

    int lo = T.gm.lowest_degree(), hi = T.gm.highest_degree();
    std::map<int, std::map<int, int>> pos;  // degree -> tot index -> plus index
    for (int n = lo; n <= hi; ++n) {
        const auto& ls = T.gm.labels(n);
        for (int j = 0; j < static_cast<int>(ls.size()); ++j) {
            auto [p, ml] = split_tot_label(ls[j]);
            if (!is_positive_block(h.cyc, p, ml)) continue;
            pos[n][j] = static_cast<int>(h.plus_coords[n].size());
            h.plus_coords[n].push_back(j);
            h.plus.gm.add_label(n, ls[j]);
        }
    }
    h.plus.field = F;
    for (int n = hi; n > lo; --n) {
        if (h.plus.dim(n) == 0 && h.plus.dim(n - 1) == 0) continue;
        SparseMatrix D = T.d(n);
        SparseMatrix m(h.plus.dim(n - 1), h.plus.dim(n));
        for (int cj = 0; cj < h.plus.dim(n); ++cj) {
            for (const auto& [ri, v] : D.column(h.plus_coords[n][cj])) {
                auto it = pos[n - 1].find(ri);
                if (it == pos[n - 1].end())
                    throw Error("positive blocks are not stable under the differential");
                m.set(it->second, cj, v, F);
            }
        }
        h.plus.set_d(n, m);
    }

    h.plus_to_norm.shift = 0;
    for (int n = lo; n <= hi; ++n) {
        if (h.plus.dim(n) == 0) continue;
        SparseMatrix pm = h.norm.projection.mat(T, h.norm.complex, n);
        SparseMatrix m(h.norm.complex.dim(n), h.plus.dim(n));
        for (int cj = 0; cj < h.plus.dim(n); ++cj)
            m.set_column(cj, pm.column(h.plus_coords[n][cj]));
        h.plus_to_norm.mats[n] = m;
    }
    return h;
}

IdentityReport check_label_bijection(const OperadicHC& h) {
    IdentityReport rep;
    const DGModule& T = h.norm.total.complex;
    const DGModule& N = h.norm.complex;
    int lo = T.gm.lowest_degree(), hi = T.gm.highest_degree();
    for (int n = lo; n <= hi; ++n) {
        auto ri = h.norm.representative_indices.count(n)
                      ? h.norm.representative_indices.at(n)
                      : std::vector<int>{};
        auto pc = h.plus_coords.count(n) ? h.plus_coords.at(n) : std::vector<int>{};
        if (ri != pc) {
            rep.failures.push_back("representatives differ from positive blocks in degree " +
                                   std::to_string(n));
            continue;
        }
        if (h.plus.dim(n) > 0) {
            SparseMatrix m = h.plus_to_norm.mat(h.plus, N, n);
            if (!(m == SparseMatrix::identity(h.plus.dim(n))))
                rep.failures.push_back("projection is not the identity on blocks in degree " +
                                       std::to_string(n));
        }
        if (n > lo && !(h.plus.d(n) == N.d(n)))
            rep.failures.push_back("differentials disagree in degree " + std::to_string(n));
    }
    return rep;
}

void check_splitting(const OperadicHC& h) {
    const DGModule& Pm = h.plus;
    int lo = Pm.gm.lowest_degree(), hi = Pm.gm.highest_degree();
    for (int n = lo + 1; n <= hi; ++n) {
        SparseMatrix D = Pm.d(n);
        for (const auto& [rc, v] : D.entries) {
            int pr = split_tot_label(Pm.gm.labels(n - 1)[rc.first]).first;
            int pcd = split_tot_label(Pm.gm.labels(n)[rc.second]).first;
            if ((pr == 0) != (pcd == 0))
                throw MixingDetected("differential couples the level-0 summand in degree " +
                                     std::to_string(n));
        }
    }
}

ChainMap block_compare(const OperadicHC& h, const ClassicalComplex& target) {
    if (h.cyc.base.flavor != Flavor::Commutative)
        throw Error("block comparison needs a commutative algebra");
    // monomials dropped by the algebra-degree truncation land at word
    // degree <= P - max_degree - 1; the window must drop them too
    if (target.lo < h.cyc.P - h.cyc.bounds.max_degree)
        throw Error("target window keeps degrees the truncated source drops");
    const FiniteAlgebra& A = target.A;
    int nv = static_cast<int>(h.cyc.base.gens.size());
    auto img = [&](const Label& nl) {
        auto [p, ml] = split_tot_label(nl);
        const Monomial& mono = h.cyc.levels[p].monomial(ml);
        std::vector<Monomial> blocks(p + 1);
        for (int idx : mono) blocks[idx / nv].push_back(idx % nv);
        std::vector<int> w(p + 1);
        LinComb out;
        long s = 0;
        for (int j = 0; j <= p; ++j) {
            Label bl = "1";
            if (!blocks[j].empty()) {
                bl.clear();
                for (size_t u = 0; u < blocks[j].size(); ++u) {
                    if (u) bl += "*";
                    bl += h.cyc.base.gens[blocks[j][u]].name;
                }
            }
            w[j] = A.index_of(bl);
            if (j >= 1) {
                if (w[j] == 0) return out;
                s += static_cast<long>(j) * A.degrees[w[j]];
            }
        }
        int d = word_degree(A, w);
        if (d < target.lo || d > target.hi) return out;
        Label l = word_label(A, w);
        if (!target.words.count(l)) throw Error("block comparison escapes the basis at " + l);
        out[l] = (s % 2 == 0) ? Scalar(1) : Scalar(-1);
        return out;
    };
    return degreewise_map(h.norm.complex, target.complex, img);
}

int induced_homology_rank(const DGModule& src, const DGModule& tgt, const ChainMap& f, int n) {
    const Field& F = tgt.field;
    Echelon bnd(F);
    for (const auto& v : image_basis(tgt.d(n + 1), F)) bnd.insert(v);
    auto hs = homology(src, n - 1, n + 1);
    int r = 0;
    for (const auto& rep : hs[n].representatives) {
        LinComb im = f.apply(src, tgt, n, rep, F);
        if (bnd.insert(tgt.to_vec(n, im))) ++r;
    }
    return r;
}

std::map<int, std::pair<int, bool>> hh_stable(const FiniteAlgebra& A, int max_length, int lo,
                                              int hi) {
    ClassicalComplex c1 = classical_complex(A, max_length, lo, hi);
    ClassicalComplex c2 = classical_complex(A, max_length + 1, lo - 1, hi + 1);
    std::map<int, std::pair<int, bool>> out;
    for (int n = lo + 1; n <= hi - 1; ++n) {
        int d1 = homology_dim_at(c1.complex, n);
        int d2 = homology_dim_at(c2.complex, n);
        out[n] = {d2, d1 == d2};
    }
    return out;
}

}  // namespace halg
