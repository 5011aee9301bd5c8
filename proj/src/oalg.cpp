#include "halg/oalg.hpp"

#include <algorithm>
#include <set>

namespace halg {

Scalar canonicalize(const AlgebraSpec& spec, Monomial& m) {
    if (spec.flavor == Flavor::Associative) return 1;
    long sign = 0;
    for (size_t i = 1; i < m.size(); ++i) {
        int g = m[i];
        size_t j = i;
        while (j > 0 && m[j - 1] > g) {
            sign += static_cast<long>(spec.gens[g].degree) * spec.gens[m[j - 1]].degree;
            m[j] = m[j - 1];
            --j;
        }
        m[j] = g;
    }
    if (spec.field.characteristic() != 2)
        for (size_t i = 1; i < m.size(); ++i)
            if (m[i] == m[i - 1] && spec.gens[m[i]].degree % 2 != 0) return 0;
    return (sign % 2 == 0) ? Scalar(1) : Scalar(-1);
}

int FreeAlgebra::degree(const Monomial& m) const {
    int w = 0;
    for (int g : m) w += spec.gens[g].degree;
    return w;
}

Label FreeAlgebra::label(const Monomial& m) const {
    if (m.empty()) return "1";
    Label l;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) l += "*";
        l += spec.gens[m[i]].name;
    }
    return l;
}

const Monomial& FreeAlgebra::monomial(const Label& l) const {
    auto it = basis_monomials.find(l);
    if (it == basis_monomials.end()) throw Error("unknown basis label: " + l);
    return it->second;
}

namespace {

void enumerate_monomials(const AlgebraSpec& spec, const AlgebraBounds& b, Monomial& cur, int curdeg,
                         std::vector<Monomial>& out) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) >= b.max_weight) return;
    int ng = static_cast<int>(spec.gens.size());
    int start = 0;
    if (spec.flavor == Flavor::Commutative && !cur.empty()) start = cur.back();
    for (int g = start; g < ng; ++g) {
        if (spec.flavor == Flavor::Commutative && spec.field.characteristic() != 2 &&
            spec.gens[g].degree % 2 != 0 && !cur.empty() && cur.back() == g)
            continue;
        int d = curdeg + spec.gens[g].degree;
        if (d > b.max_degree) continue;
        cur.push_back(g);
        enumerate_monomials(spec, b, cur, d, out);
        cur.pop_back();
    }
}

// derivation extension; terms above the degree bound are quotiented away,
// terms violating the weight bound mean the truncation is unsound
LinComb d_monomial(const FreeAlgebra& A, const Monomial& m) {
    const AlgebraSpec& spec = A.spec;
    const Field& F = spec.field;
    LinComb out;
    long pre = 0;
    for (size_t i = 0; i < m.size(); ++i) {
        auto it = spec.dgen.find(m[i]);
        if (it != spec.dgen.end()) {
            for (const auto& [val, c] : it->second) {
                Monomial nm(m.begin(), m.begin() + i);
                nm.insert(nm.end(), val.begin(), val.end());
                nm.insert(nm.end(), m.begin() + i + 1, m.end());
                Scalar s = canonicalize(spec, nm);
                if (F.is_zero(s)) continue;
                if (A.degree(nm) > A.bounds.max_degree) continue;
                Label l = A.label(nm);
                if (!A.in_basis(l))
                    throw Error("differential image escapes the weight bound at " + l);
                Scalar coef = F.mul(s, c);
                if (pre % 2 != 0) coef = F.neg(coef);
                comb_accumulate(out, l, coef, F);
            }
        }
        pre += spec.gens[m[i]].degree;
    }
    return out;
}

}  // namespace

FreeAlgebra build_algebra(const AlgebraSpec& spec, const AlgebraBounds& b) {
    FreeAlgebra A;
    A.spec = spec;
    A.bounds = b;
    A.complex.field = spec.field;
    for (const auto& g : spec.gens)
        if (g.degree < 0) throw Error("generator degrees must be nonnegative");
    for (const auto& [g, terms] : spec.dgen)
        for (const auto& [val, c] : terms) {
            int w = 0;
            for (int v : val) w += spec.gens[v].degree;
            if (w != spec.gens[g].degree + 1)
                throw Error("differential of " + spec.gens[g].name +
                            " must raise algebra degree by 1");
        }

    std::vector<Monomial> monos;
    Monomial cur;
    enumerate_monomials(spec, b, cur, 0, monos);
    std::map<int, std::vector<Monomial>> by_deg;
    for (auto& m : monos) by_deg[A.degree(m)].push_back(m);
    for (auto& [w, v] : by_deg) {
        std::sort(v.begin(), v.end(), [](const Monomial& a, const Monomial& b2) {
            if (a.size() != b2.size()) return a.size() < b2.size();
            return a < b2;
        });
        for (const auto& m : v) {
            Label l = A.label(m);
            A.complex.gm.add_label(-w, l);
            A.basis_monomials[l] = m;
        }
    }

    int lo = A.complex.gm.lowest_degree(), hi = A.complex.gm.highest_degree();
    for (int n = hi; n > lo; --n)
        A.complex.set_d(n, matrix_from_images(A.complex, n, A.complex, n - 1, [&](const Label& l) {
                            return d_monomial(A, A.monomial(l));
                        }));
    auto rep = verify_dsquare(A.complex, lo - 1, hi + 1);
    if (!rep.ok())
        throw DSquareNonzero("d^2 != 0 on " + rep.violations.front().witness);
    return A;
}

LinComb multiply_monomials(const FreeAlgebra& A, const Monomial& a, const Monomial& b) {
    const Field& F = A.spec.field;
    Monomial m = a;
    m.insert(m.end(), b.begin(), b.end());
    Scalar s = canonicalize(A.spec, m);
    LinComb out;
    if (F.is_zero(s)) return out;
    // both bounds act as the truncation quotient
    if (A.degree(m) > A.bounds.max_degree) return out;
    if (static_cast<int>(m.size()) > A.bounds.max_weight) return out;
    Label l = A.label(m);
    if (!A.in_basis(l)) throw Error("product escapes the truncated basis at " + l);
    out[l] = s;
    return out;
}

LinComb multiply(const FreeAlgebra& A, const LinComb& a, const LinComb& b) {
    const Field& F = A.spec.field;
    LinComb out;
    for (const auto& [la, ca] : a)
        for (const auto& [lb, cb] : b)
            for (const auto& [l, c] : multiply_monomials(A, A.monomial(la), A.monomial(lb)))
                comb_accumulate(out, l, F.mul(c, F.mul(ca, cb)), F);
    return out;
}

AlgebraSpec copower_spec(const AlgebraSpec& s, int n) {
    AlgebraSpec out;
    out.field = s.field;
    out.flavor = s.flavor;
    int nv = static_cast<int>(s.gens.size());
    for (int c = 0; c < n; ++c)
        for (const auto& g : s.gens)
            out.gens.push_back({g.name + std::string(c, '\''), g.degree});
    for (int c = 0; c < n; ++c)
        for (const auto& [g, terms] : s.dgen) {
            auto& tv = out.dgen[c * nv + g];
            for (const auto& [val, coef] : terms) {
                Monomial nm;
                for (int v : val) nm.push_back(c * nv + v);
                tv.push_back({nm, coef});
            }
        }
    return out;
}

AlgebraSpec coproduct_spec(const AlgebraSpec& a, const AlgebraSpec& b) {
    if (!(a.field == b.field) || a.flavor != b.flavor)
        throw Error("coproduct requires matching field and flavor");
    AlgebraSpec out = a;
    std::set<std::string> used;
    for (const auto& g : a.gens) used.insert(g.name);
    int off = static_cast<int>(a.gens.size());
    for (const auto& g : b.gens) {
        std::string nm = g.name;
        while (used.count(nm)) nm += "'";
        used.insert(nm);
        out.gens.push_back({nm, g.degree});
    }
    for (const auto& [g, terms] : b.dgen) {
        auto& tv = out.dgen[off + g];
        for (const auto& [val, coef] : terms) {
            Monomial nm;
            for (int v : val) nm.push_back(off + v);
            tv.push_back({nm, coef});
        }
    }
    return out;
}

ChainMap algebra_hom(const FreeAlgebra& src, const FreeAlgebra& tgt,
                     const std::function<int(int)>& genmap) {
    const Field& F = src.spec.field;
    for (size_t g = 0; g < src.spec.gens.size(); ++g)
        if (src.spec.gens[g].degree != tgt.spec.gens[genmap(static_cast<int>(g))].degree)
            throw Error("generator relabeling must preserve degree");
    ChainMap f;
    int lo = src.complex.gm.lowest_degree(), hi = src.complex.gm.highest_degree();
    for (int n = lo; n <= hi; ++n) {
        if (src.complex.dim(n) == 0) continue;
        f.mats[n] = matrix_from_images(src.complex, n, tgt.complex, n, [&](const Label& l) {
            Monomial nm;
            for (int g : src.monomial(l)) nm.push_back(genmap(g));
            Scalar s = canonicalize(tgt.spec, nm);
            LinComb out;
            if (F.is_zero(s)) return out;
            Label tl = tgt.label(nm);
            if (!tgt.in_basis(tl)) throw Error("homomorphism image escapes target basis: " + tl);
            out[tl] = s;
            return out;
        });
    }
    return f;
}

ChainMap copy_inclusion(const FreeAlgebra& A, const FreeAlgebra& An, int copy) {
    int nv = static_cast<int>(A.spec.gens.size());
    return algebra_hom(A, An, [copy, nv](int g) { return copy * nv + g; });
}

ChainMap fold_adjacent(const FreeAlgebra& Am, const FreeAlgebra& Atgt, int m, int i) {
    int nv = static_cast<int>(Am.spec.gens.size()) / m;
    return algebra_hom(Am, Atgt, [nv, i](int idx) {
        int c = idx / nv, g = idx % nv;
        int nc = (c <= i) ? c : c - 1;
        return nc * nv + g;
    });
}

ChainMap cyclic_rotation(const FreeAlgebra& An, int n) {
    int nv = static_cast<int>(An.spec.gens.size()) / n;
    return algebra_hom(An, An, [nv, n](int idx) {
        int c = idx / nv, g = idx % nv;
        return ((c + 1) % n) * nv + g;
    });
}

}  // namespace halg
