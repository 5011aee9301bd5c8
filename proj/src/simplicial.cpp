#include "halg/simplicial.hpp"

#include <algorithm>

namespace halg {

namespace {

// degree range covering every level's basis
std::pair<int, int> degree_range(const DGModule& m) {
    return {m.gm.lowest_degree(), m.gm.highest_degree()};
}

// per-column views of a matrix, row-sorted
std::vector<SparseVec> matrix_columns(const SparseMatrix& m) {
    std::vector<SparseVec> cols(m.cols);
    for (const auto& [rc, val] : m.entries) cols[rc.second].emplace_back(rc.first, val);
    return cols;
}

ChainMap map_from_formula(const DGModule& src, const DGModule& tgt,
                          const std::function<LinComb(const Label&)>& f) {
    ChainMap cm;
    for (const auto& [q, ls] : src.gm.basis) {
        if (ls.empty()) continue;
        cm.mats[q] = matrix_from_images(src, q, tgt, q, f);
    }
    return cm;
}

// composite of two degree-0 chain maps, matrices over src's degrees
ChainMap compose0(const DGModule& src, const DGModule& mid, const DGModule& tgt, const ChainMap& g,
                  const ChainMap& f) {
    ChainMap h;
    for (const auto& [q, ls] : src.gm.basis) {
        if (ls.empty()) continue;
        h.mats[q] = g.mat(mid, tgt, q).mul(f.mat(src, mid, q), src.field);
    }
    return h;
}

bool maps_equal(const DGModule& src, const DGModule& tgt, const ChainMap& a, const ChainMap& b) {
    for (const auto& [q, ls] : src.gm.basis) {
        if (ls.empty()) continue;
        if (!(a.mat(src, tgt, q) == b.mat(src, tgt, q))) return false;
    }
    return true;
}

ChainMap identity_map(const DGModule& m) {
    ChainMap id;
    for (const auto& [q, ls] : m.gm.basis)
        if (!ls.empty()) id.mats[q] = SparseMatrix::identity(static_cast<int>(ls.size()));
    return id;
}

}  // namespace

SimplicialDGModule build_simplicial(const Field& F, int P,
                                    const std::function<DGModule(int)>& level,
                                    const std::function<LinComb(int, int, const Label&)>& face,
                                    const std::function<LinComb(int, int, const Label&)>& degen) {
    SimplicialDGModule s;
    s.field = F;
    s.level_bound = P;
    for (int n = 0; n <= P; ++n) {
        s.levels.push_back(level(n));
        s.levels.back().field = F;
    }
    s.faces.resize(P + 1);
    s.degens.resize(P + 1);
    for (int n = 1; n <= P; ++n)
        for (int i = 0; i <= n; ++i)
            s.faces[n].push_back(map_from_formula(
                s.levels[n], s.levels[n - 1],
                [&](const Label& l) { return face(n, i, l); }));
    for (int n = 0; n < P; ++n)
        for (int i = 0; i <= n; ++i)
            s.degens[n].push_back(map_from_formula(
                s.levels[n], s.levels[n + 1],
                [&](const Label& l) { return degen(n, i, l); }));
    return s;
}

IdentityReport check_simplicial_identities(const SimplicialDGModule& s) {
    IdentityReport rep;
    int P = s.level_bound;
    auto fail = [&](const std::string& what) { rep.failures.push_back(what); };

    for (int n = 0; n <= P; ++n) {
        auto [lo, hi] = degree_range(s.levels[n]);
        if (n >= 1)
            for (int i = 0; i <= n; ++i) {
                std::string why;
                if (!is_chain_map(s.levels[n], s.levels[n - 1], s.face(n, i), lo - 1, hi, &why))
                    fail("d_" + std::to_string(i) + " at level " + std::to_string(n) +
                         " is not a chain map: " + why);
            }
        if (n < P)
            for (int i = 0; i <= n; ++i) {
                std::string why;
                if (!is_chain_map(s.levels[n], s.levels[n + 1], s.degen(n, i), lo - 1, hi, &why))
                    fail("s_" + std::to_string(i) + " at level " + std::to_string(n) +
                         " is not a chain map: " + why);
            }
    }

    // d_i d_j = d_{j-1} d_i, i < j
    for (int n = 2; n <= P; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i) {
                ChainMap lhs = compose0(s.levels[n], s.levels[n - 1], s.levels[n - 2],
                                        s.face(n - 1, i), s.face(n, j));
                ChainMap rhs = compose0(s.levels[n], s.levels[n - 1], s.levels[n - 2],
                                        s.face(n - 1, j - 1), s.face(n, i));
                if (!maps_equal(s.levels[n], s.levels[n - 2], lhs, rhs))
                    fail("d_i d_j identity fails at level " + std::to_string(n) + " (i=" +
                         std::to_string(i) + ", j=" + std::to_string(j) + ")");
            }

    // s_i s_j = s_{j+1} s_i, i <= j
    for (int n = 0; n + 2 <= P; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i) {
                ChainMap lhs = compose0(s.levels[n], s.levels[n + 1], s.levels[n + 2],
                                        s.degen(n + 1, i), s.degen(n, j));
                ChainMap rhs = compose0(s.levels[n], s.levels[n + 1], s.levels[n + 2],
                                        s.degen(n + 1, j + 1), s.degen(n, i));
                if (!maps_equal(s.levels[n], s.levels[n + 2], lhs, rhs))
                    fail("s_i s_j identity fails at level " + std::to_string(n) + " (i=" +
                         std::to_string(i) + ", j=" + std::to_string(j) + ")");
            }

    // d_i s_j mixed identities, on level n with n+1 <= P
    for (int n = 0; n + 1 <= P; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                ChainMap lhs = compose0(s.levels[n], s.levels[n + 1], s.levels[n],
                                        s.face(n + 1, i), s.degen(n, j));
                ChainMap rhs;
                if (i == j || i == j + 1) {
                    rhs = identity_map(s.levels[n]);
                } else if (i < j) {
                    if (n >= 1)
                        rhs = compose0(s.levels[n], s.levels[n - 1], s.levels[n],
                                       s.degen(n - 1, j - 1), s.face(n, i));
                } else {  // i > j + 1
                    if (n >= 1)
                        rhs = compose0(s.levels[n], s.levels[n - 1], s.levels[n],
                                       s.degen(n - 1, j), s.face(n, i - 1));
                }
                if (!maps_equal(s.levels[n], s.levels[n], lhs, rhs))
                    fail("d_i s_j identity fails at level " + std::to_string(n) + " (i=" +
                         std::to_string(i) + ", j=" + std::to_string(j) + ")");
            }

    return rep;
}

Label tot_label(int p, const Label& l) { return std::to_string(p) + ":" + l; }

std::pair<int, Label> split_tot_label(const Label& l) {
    size_t pos = l.find(':');
    if (pos == std::string::npos || pos == 0)
        throw Error("split_tot_label: malformed '" + l + "'");
    return {std::stoi(l.substr(0, pos)), l.substr(pos + 1)};
}

TotalComplex tot(const SimplicialDGModule& s, int P, TotSign sign) {
    if (P > s.level_bound) throw Error("tot: level bound exceeds available levels");
    TotalComplex t;
    t.level_bound = P;
    t.sign = sign;
    DGModule& c = t.complex;
    c.field = s.field;
    // record (p, q, index) per total degree, in insertion order
    struct Gen {
        int p, q, i;
    };
    std::map<int, std::vector<Gen>> gens;
    for (int p = 0; p <= P; ++p)
        for (const auto& [q, ls] : s.levels[p].gm.basis)
            for (size_t i = 0; i < ls.size(); ++i) {
                c.gm.add_label(p + q, tot_label(p, ls[i]));
                gens[p + q].push_back({p, q, static_cast<int>(i)});
            }
    const Field& F = s.field;
    // per total degree, tot index of the first generator of each (p, q) block
    std::map<int, std::map<int, int>> block_start;
    for (const auto& [n, gs] : gens)
        for (size_t j = 0; j < gs.size(); ++j)
            block_start[n].try_emplace(gs[j].p, static_cast<int>(j));

    std::map<int, SparseMatrix> mats;
    for (const auto& [n, gs] : gens) mats.emplace(n, SparseMatrix(c.dim(n - 1), c.dim(n)));
    for (const auto& [n, gs] : gens) {
        SparseMatrix& m = mats.at(n);
        // one pass per (p, q) block; each source matrix is fetched once
        for (size_t j = 0; j < gs.size();) {
            const Gen& g = gs[j];
            int cnt = s.levels[g.p].dim(g.q);
            // InternalFirst: d = d_int + (-1)^q d_simp (q internal degree);
            // FacesFirst:    d = d_simp + (-1)^p d_int (p simplicial level).
            // Either placement makes the cross terms cancel.
            Scalar int_coef = 1, face_coef = 1;
            if (sign == TotSign::InternalFirst)
                face_coef = (g.q % 2 == 0) ? 1 : -1;
            else
                int_coef = (g.p % 2 == 0) ? 1 : -1;
            if (s.levels[g.p].dim(g.q - 1) > 0) {
                int off = block_start.at(n - 1).at(g.p);
                auto cols = matrix_columns(s.levels[g.p].d(g.q));
                for (int k = 0; k < cnt; ++k)
                    for (const auto& [i, v] : cols[k])
                        m.add_to(off + i, static_cast<int>(j) + k, F.mul(int_coef, v), F);
            }
            if (g.p >= 1 && s.levels[g.p - 1].dim(g.q) > 0) {
                int off = block_start.at(n - 1).at(g.p - 1);
                for (int fi = 0; fi <= g.p; ++fi) {
                    Scalar coef = F.mul(face_coef, (fi % 2 == 0) ? Scalar(1) : Scalar(-1));
                    auto cols =
                        matrix_columns(s.face(g.p, fi).mat(s.levels[g.p], s.levels[g.p - 1], g.q));
                    for (int k = 0; k < cnt; ++k)
                        for (const auto& [i, v] : cols[k])
                            m.add_to(off + i, static_cast<int>(j) + k, F.mul(coef, v), F);
                }
            }
            j += cnt;
        }
    }
    for (auto& [n, m] : mats) c.diff[n] = std::move(m);
    return t;
}

namespace {

// per total degree, echelonized span of all degeneracy images inside tot
std::map<int, Echelon> degenerate_echelons(const SimplicialDGModule& s, int P,
                                           const TotalComplex& t) {
    std::map<int, Echelon> ech;
    const Field& F = s.field;
    for (int p = 1; p <= P; ++p)
        for (int i = 0; i <= p - 1; ++i)
            for (const auto& [q, ls] : s.levels[p - 1].gm.basis) {
                if (ls.empty() || s.levels[p].dim(q) == 0) continue;
                int off =
                    t.complex.gm.index_of(p + q, tot_label(p, s.levels[p].gm.labels(q)[0]));
                if (off < 0) throw Error("degenerate span: label missing in tot");
                auto cols =
                    matrix_columns(s.degen(p - 1, i).mat(s.levels[p - 1], s.levels[p], q));
                auto it = ech.find(p + q);
                if (it == ech.end()) it = ech.emplace(p + q, Echelon(F)).first;
                for (size_t k = 0; k < ls.size(); ++k) {
                    SparseVec v;
                    for (const auto& [ri, rv] : cols[k]) v.emplace_back(off + ri, rv);
                    it->second.insert(std::move(v));
                }
            }
    return ech;
}

void check_closure(const DGModule& c, std::map<int, Echelon>& ech) {
    for (auto& [n, e] : ech) {
        if (e.rows().empty()) continue;
        auto cols = matrix_columns(c.d(n));
        for (const auto& [piv, row] : e.rows()) {
            SparseVec img;
            for (const auto& [ci, cv] : row) img = vec_axpy(img, cv, cols[ci], c.field);
            if (img.empty()) continue;
            auto it = ech.find(n - 1);
            if (it == ech.end() || !it->second.contains(img))
                throw NotClosed("degenerate span not closed under total differential at degree " +
                                std::to_string(n));
        }
    }
}

}  // namespace

int DegenerateSub::dim(int n) const {
    auto it = span.find(n);
    return it == span.end() ? 0 : static_cast<int>(it->second.size());
}

DegenerateSub degenerate_subcomplex(const SimplicialDGModule& s, int P, TotSign sign) {
    TotalComplex t = tot(s, P, sign);
    auto ech = degenerate_echelons(s, P, t);
    check_closure(t.complex, ech);
    DegenerateSub sub;
    for (const auto& [n, e] : ech)
        for (const auto& [piv, row] : e.rows()) sub.span[n].push_back(row);
    return sub;
}

Normalized normalize(const SimplicialDGModule& s, int P, TotSign sign) {
    Normalized out;
    out.total = tot(s, P, sign);
    const DGModule& c = out.total.complex;
    const Field& F = s.field;
    auto ech = degenerate_echelons(s, P, out.total);
    check_closure(c, ech);

    // representatives: tot coordinates that are not pivots of the span
    std::map<int, std::map<int, int>> pos;  // degree -> tot index -> N index
    for (const auto& [n, ls] : c.gm.basis) {
        auto it = ech.find(n);
        for (size_t j = 0; j < ls.size(); ++j) {
            if (it != ech.end() && it->second.rows().count(static_cast<int>(j))) continue;
            pos[n][static_cast<int>(j)] = static_cast<int>(out.representative_indices[n].size());
            out.representative_indices[n].push_back(static_cast<int>(j));
            out.complex.gm.add_label(n, ls[j]);
        }
    }
    out.complex.field = F;

    auto project = [&](int n, const SparseVec& v) {
        SparseVec red = v;
        if (auto it = ech.find(n); it != ech.end()) red = it->second.reduce(std::move(red));
        SparseVec w;
        const auto& pn = pos[n];
        for (const auto& [i, val] : red) {
            auto it = pn.find(i);
            if (it == pn.end()) throw Error("normalize: residual hits a pivot coordinate");
            w.emplace_back(it->second, val);
        }
        std::sort(w.begin(), w.end());
        return w;
    };

    out.projection.shift = 0;
    for (const auto& [n, ls] : c.gm.basis) {
        if (ls.empty()) continue;
        SparseMatrix pm(out.complex.dim(n), c.dim(n));
        for (size_t j = 0; j < ls.size(); ++j)
            pm.set_column(static_cast<int>(j),
                          project(n, SparseVec{{static_cast<int>(j), Scalar(1)}}));
        out.projection.mats[n] = std::move(pm);

        SparseMatrix dm(out.complex.dim(n - 1), out.complex.dim(n));
        auto cols = matrix_columns(c.d(n));
        const auto& reps = out.representative_indices[n];
        for (size_t j = 0; j < reps.size(); ++j)
            dm.set_column(static_cast<int>(j), project(n - 1, cols[reps[j]]));
        out.complex.diff[n] = std::move(dm);
    }
    return out;
}

SimplicialDGModule levelwise_product(const SimplicialDGModule& a, const SimplicialDGModule& b) {
    if (!(a.field == b.field)) throw Error("levelwise_product: field mismatch");
    int P = std::min(a.level_bound, b.level_bound);
    SimplicialDGModule t;
    t.field = a.field;
    t.level_bound = P;
    for (int n = 0; n <= P; ++n) t.levels.push_back(tensor(a.levels[n], b.levels[n]));
    t.faces.resize(P + 1);
    t.degens.resize(P + 1);
    for (int n = 1; n <= P; ++n)
        for (int i = 0; i <= n; ++i)
            t.faces[n].push_back(tensor_chain_map(a.levels[n], b.levels[n], a.levels[n - 1],
                                                  b.levels[n - 1], a.face(n, i), b.face(n, i)));
    for (int n = 0; n < P; ++n)
        for (int i = 0; i <= n; ++i)
            t.degens[n].push_back(tensor_chain_map(a.levels[n], b.levels[n], a.levels[n + 1],
                                                   b.levels[n + 1], a.degen(n, i), b.degen(n, i)));
    return t;
}

SimplicialDGModule levelwise_power(const SimplicialDGModule& a, int m) {
    if (m < 1) throw Error("levelwise_power: need m >= 1");
    SimplicialDGModule out = a;
    for (int k = 2; k <= m; ++k) out = levelwise_product(out, a);
    return out;
}

namespace {

// apply degeneracies s_j for j in S (ascending application order) to a
// level-p element; returns coefficients on the level p+|S| basis
LinComb apply_degeneracies(const SimplicialDGModule& s, int p, int q, const LinComb& x,
                           const std::vector<int>& S) {
    LinComb cur = x;
    int lvl = p;
    for (int j : S) {
        cur = s.degen(lvl, j).apply(s.levels[lvl], s.levels[lvl + 1], q, cur, s.field);
        ++lvl;
    }
    return cur;
}

}  // namespace

ShuffleMap shuffle(const SimplicialDGModule& a, const SimplicialDGModule& b, int P) {
    const Field& F = a.field;
    TotalComplex ta = tot(a, P);
    TotalComplex tb = tot(b, P);
    SimplicialDGModule prod = levelwise_product(a, b);
    ShuffleMap out;
    out.domain = tensor(ta.complex, tb.complex);
    out.target = tot(prod, P).complex;
    out.map.shift = 0;

    auto pairs = tensor_pairs(ta.complex, tb.complex);
    for (const auto& [n, ps] : pairs) {
        SparseMatrix m(out.target.dim(n), out.domain.dim(n));
        for (size_t col = 0; col < ps.size(); ++col) {
            const TensorPair& tp = ps[col];
            auto [p, xl] = split_tot_label(ta.complex.gm.labels(tp.da)[tp.ia]);
            auto [q, yl] = split_tot_label(tb.complex.gm.labels(tp.db)[tp.ib]);
            int qx = tp.da - p, qy = tp.db - q;
            if (p + q > P) continue;  // truncated away in the target
            // all (p,q)-shuffles: S_a gets the q degeneracies applied to x
            std::vector<int> Sa(q), Sb(p);
            std::vector<int> comb(q);
            for (int i = 0; i < q; ++i) comb[i] = i;
            bool more = (p + q >= 0);
            while (more) {
                Sa.assign(comb.begin(), comb.end());
                Sb.clear();
                {
                    size_t t = 0;
                    for (int i = 0; i < p + q; ++i) {
                        if (t < Sa.size() && Sa[t] == i)
                            ++t;
                        else
                            Sb.push_back(i);
                    }
                }
                // shuffle signature: inversions between the two blocks
                long inv = 0;
                for (int al : Sa)
                    for (int be : Sb)
                        if (al < be) ++inv;
                // Koszul twist: y's internal part moves past x's simplicial part
                long tw = inv + static_cast<long>(p) * qy;
                Scalar sgn = (tw % 2 == 0) ? 1 : -1;
                LinComb sx = apply_degeneracies(a, p, qx, LinComb{{xl, Scalar(1)}}, Sa);
                LinComb sy = apply_degeneracies(b, q, qy, LinComb{{yl, Scalar(1)}}, Sb);
                for (const auto& [lx, vx] : sx)
                    for (const auto& [ly, vy] : sy) {
                        Label l = tot_label(p + q, tensor_label(lx, ly));
                        int i = out.target.gm.index_of(n, l);
                        if (i < 0) throw Error("shuffle: image label missing");
                        m.add_to(i, static_cast<int>(col), F.mul(sgn, F.mul(vx, vy)), F);
                    }
                // next q-combination of {0..p+q-1}
                if (q == 0) break;
                int idx = q - 1;
                while (idx >= 0 && comb[idx] == p + idx) --idx;
                if (idx < 0) break;
                ++comb[idx];
                for (int i = idx + 1; i < q; ++i) comb[i] = comb[i - 1] + 1;
            }
        }
        out.map.mats[n] = std::move(m);
    }
    return out;
}

ShuffleMap iterated_shuffle(int k, const SimplicialDGModule& a, int P) {
    if (k == 0) {
        ShuffleMap out;
        out.domain = tot(a, P).complex;
        out.target = out.domain;
        out.map = identity_map(out.domain);
        return out;
    }
    ShuffleMap prev = iterated_shuffle(k - 1, a, P);
    SimplicialDGModule ak = levelwise_power(a, k);
    ShuffleMap sh = shuffle(ak, a, P);
    DGModule tota = tot(a, P).complex;
    ShuffleMap out;
    out.domain = tensor(prev.domain, tota);
    out.target = sh.target;
    ChainMap step = tensor_chain_map(prev.domain, tota, prev.target, tota, prev.map,
                                     identity_map(tota));
    // sh.domain == tensor(prev.target, tota) by construction
    out.map = compose0(out.domain, sh.domain, out.target, sh.map, step);
    return out;
}

SimplicialDGModule constant_simplicial(const DGModule& m, int P) {
    SimplicialDGModule s;
    s.field = m.field;
    s.level_bound = P;
    for (int n = 0; n <= P; ++n) s.levels.push_back(m);
    s.faces.resize(P + 1);
    s.degens.resize(P + 1);
    ChainMap id = identity_map(m);
    for (int n = 1; n <= P; ++n) s.faces[n].assign(n + 1, id);
    for (int n = 0; n < P; ++n) s.degens[n].assign(n + 1, id);
    return s;
}

}  // namespace halg
