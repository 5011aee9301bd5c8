#include "halg/sset.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

namespace halg {

namespace {

std::vector<int> identity_map(int n) {
    std::vector<int> m(n + 1);
    for (int i = 0; i <= n; ++i) m[i] = i;
    return m;
}

// delta^i : [m-1] -> [m], skipping i
std::vector<int> coface_map(int i, int m) {
    std::vector<int> f(m);
    for (int t = 0; t < m; ++t) f[t] = (t < i) ? t : t + 1;
    return f;
}

bool is_monotone_surjection(const std::vector<int>& f, int target_dim) {
    if (f.empty() || f.front() != 0 || f.back() != target_dim) return false;
    for (size_t t = 1; t < f.size(); ++t) {
        int step = f[t] - f[t - 1];
        if (step != 0 && step != 1) return false;
    }
    return true;
}

// canonical form of (nondegenerate base bd/bi) composed with monotone g
SimplexRef canonical(const FiniteSimplicialSet& x, int bd, int bi, std::vector<int> g) {
    for (;;) {
        int missing = -1;
        {
            std::vector<bool> hit(bd + 1, false);
            for (int v : g) hit[v] = true;
            for (int v = bd; v >= 0; --v)
                if (!hit[v]) {
                    missing = v;
                    break;
                }
        }
        if (missing < 0) return SimplexRef{bd, bi, std::move(g)};
        // g = delta^missing o g'; the base absorbs the face
        const SimplexRef& fr = x.faces.at(bd).at(bi).at(missing);
        for (int& v : g)
            if (v > missing) --v;
        std::vector<int> g2(g.size());
        for (size_t t = 0; t < g.size(); ++t) g2[t] = fr.map[g[t]];
        bd = fr.base_dim;
        bi = fr.base_index;
        g = std::move(g2);
    }
}

}  // namespace

SimplexRef nondeg_ref(int dim, int index) { return SimplexRef{dim, index, identity_map(dim)}; }

int FiniteSimplicialSet::index_of(int n, const std::string& l) const {
    if (n < 0 || n > top_dim()) return -1;
    if (index_.size() != labels.size()) index_.assign(labels.size(), {});
    auto& idx = index_[n];
    if (idx.size() != labels[n].size()) {
        idx.clear();
        for (size_t i = 0; i < labels[n].size(); ++i) idx[labels[n][i]] = static_cast<int>(i);
    }
    auto it = idx.find(l);
    return it == idx.end() ? -1 : it->second;
}

long FiniteSimplicialSet::total_count() const {
    long t = 0;
    for (const auto& ls : labels) t += static_cast<long>(ls.size());
    return t;
}

SimplexRef pullback(const FiniteSimplicialSet& x, const SimplexRef& r, const std::vector<int>& f) {
    std::vector<int> g(f.size());
    for (size_t t = 0; t < f.size(); ++t) g[t] = r.map.at(f[t]);
    return canonical(x, r.base_dim, r.base_index, std::move(g));
}

SimplexRef face_of(const FiniteSimplicialSet& x, const SimplexRef& r, int i) {
    if (r.dim() < 1) throw Error("face_of: dimension 0 simplex");
    return pullback(x, r, coface_map(i, r.dim()));
}

SimplexRef degen_of(const SimplexRef& r, int j) {
    SimplexRef out = r;
    out.map.insert(out.map.begin() + j + 1, r.map.at(j));
    return out;
}

std::vector<int> degeneracy_word(const SimplexRef& r) {
    std::vector<int> w;
    for (int t = r.dim() - 1; t >= 0; --t)
        if (r.map[t] == r.map[t + 1]) w.push_back(t);
    return w;
}

std::string ref_label(const FiniteSimplicialSet& x, const SimplexRef& r) {
    std::string l = x.labels.at(r.base_dim).at(r.base_index);
    auto w = degeneracy_word(r);
    if (w.empty()) return l;
    l += "s[";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) l += ",";
        l += std::to_string(w[i]);
    }
    l += "]";
    return l;
}

IdentityReport check_sset(const FiniteSimplicialSet& x) {
    IdentityReport rep;
    for (int n = 1; n <= x.top_dim(); ++n) {
        if (x.faces.size() <= static_cast<size_t>(n) || x.faces[n].size() != x.labels[n].size()) {
            rep.failures.push_back("missing face data in dimension " + std::to_string(n));
            continue;
        }
        for (size_t j = 0; j < x.labels[n].size(); ++j) {
            if (x.faces[n][j].size() != static_cast<size_t>(n + 1)) {
                rep.failures.push_back("wrong face count for " + x.labels[n][j]);
                continue;
            }
            for (int i = 0; i <= n; ++i) {
                const SimplexRef& f = x.faces[n][j][i];
                if (f.dim() != n - 1 || f.base_dim < 0 || f.base_dim > x.top_dim() ||
                    f.base_index < 0 || f.base_index >= x.count(f.base_dim) ||
                    !is_monotone_surjection(f.map, f.base_dim)) {
                    rep.failures.push_back("malformed face d_" + std::to_string(i) + " of " +
                                           x.labels[n][j]);
                }
            }
            if (n < 2) continue;
            SimplexRef r = nondeg_ref(n, static_cast<int>(j));
            for (int jj = 1; jj <= n; ++jj)
                for (int i = 0; i < jj; ++i) {
                    SimplexRef a = face_of(x, face_of(x, r, jj), i);
                    SimplexRef b = face_of(x, face_of(x, r, i), jj - 1);
                    if (!(a == b))
                        rep.failures.push_back("d_i d_j fails on " + x.labels[n][j] + " (i=" +
                                               std::to_string(i) + ", j=" + std::to_string(jj) +
                                               ")");
                }
        }
    }
    return rep;
}

FiniteSimplicialSet from_levelwise(
    int N, const std::vector<std::vector<std::string>>& levels,
    const std::function<std::string(int, int, const std::string&)>& face,
    const std::function<std::string(int, int, const std::string&)>& degen) {
    if (static_cast<int>(levels.size()) < N + 1) throw Error("from_levelwise: too few levels");
    FiniteSimplicialSet x;
    x.labels.resize(N + 1);
    std::vector<std::map<std::string, int>> nd_index(N + 1);
    std::vector<std::set<std::string>> degenerate(N + 1);
    for (int n = 1; n <= N; ++n)
        for (int j = 0; j <= n - 1; ++j)
            for (const auto& y : levels[n - 1]) degenerate[n].insert(degen(n - 1, j, y));
    for (int n = 0; n <= N; ++n)
        for (const auto& l : levels[n])
            if (!degenerate[n].count(l)) {
                nd_index[n][l] = static_cast<int>(x.labels[n].size());
                x.labels[n].push_back(l);
            }

    // Eilenberg-Zilber decomposition of an arbitrary element
    std::function<SimplexRef(int, const std::string&)> decompose = [&](int n,
                                                                       const std::string& l) {
        auto it = nd_index[n].find(l);
        if (it != nd_index[n].end()) return nondeg_ref(n, it->second);
        for (int j = 0; j <= n - 1; ++j) {
            std::string below = face(n, j, l);
            if (degen(n - 1, j, below) == l) {
                SimplexRef sub = decompose(n - 1, below);
                std::vector<int> m(n + 1);
                for (int t = 0; t <= n; ++t) m[t] = sub.map[(t <= j) ? t : t - 1];
                return SimplexRef{sub.base_dim, sub.base_index, std::move(m)};
            }
        }
        throw Error("from_levelwise: cannot decompose '" + l + "' at level " + std::to_string(n));
    };

    x.faces.resize(N + 1);
    for (int n = 1; n <= N; ++n) {
        x.faces[n].resize(x.labels[n].size());
        for (size_t j = 0; j < x.labels[n].size(); ++j)
            for (int i = 0; i <= n; ++i)
                x.faces[n][j].push_back(decompose(n - 1, face(n, i, x.labels[n][j])));
    }
    while (x.labels.size() > 1 && x.labels.back().empty()) {
        x.labels.pop_back();
        x.faces.pop_back();
    }
    return x;
}

FiniteSimplicialSet point() {
    FiniteSimplicialSet x;
    x.labels.push_back({"*"});
    x.faces.emplace_back();
    return x;
}

FiniteSimplicialSet circle() {
    int N = 3;
    std::vector<std::vector<std::string>> levels(N + 1);
    for (int n = 0; n <= N; ++n)
        for (int k = 0; k <= n; ++k) levels[n].push_back(std::to_string(k));
    auto face = [](int n, int i, const std::string& l) {
        int k = std::stoi(l);
        int kk;
        if (i == n)
            kk = (k == n) ? 0 : k;  // wraparound face
        else
            kk = (k <= i) ? k : k - 1;
        return std::to_string(kk);
    };
    auto degen = [](int, int j, const std::string& l) {
        int k = std::stoi(l);
        return std::to_string((k <= j) ? k : k + 1);
    };
    return from_levelwise(N, levels, face, degen);
}

FiniteSimplicialSet from_facets(const std::vector<std::vector<std::string>>& facets) {
    if (facets.empty()) throw ParseError("empty facet list");
    std::set<std::vector<std::string>> closed;
    for (auto facet : facets) {
        std::sort(facet.begin(), facet.end());
        facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
        if (facet.empty()) throw ParseError("empty facet");
        // all nonempty subsets
        int k = static_cast<int>(facet.size());
        for (int mask = 1; mask < (1 << k); ++mask) {
            std::vector<std::string> sub;
            for (int b = 0; b < k; ++b)
                if (mask & (1 << b)) sub.push_back(facet[b]);
            closed.insert(sub);
        }
    }
    int top = 0;
    for (const auto& s : closed) top = std::max(top, static_cast<int>(s.size()) - 1);
    FiniteSimplicialSet x;
    x.labels.resize(top + 1);
    x.faces.resize(top + 1);
    auto join = [](const std::vector<std::string>& vs) {
        std::string l;
        for (size_t i = 0; i < vs.size(); ++i) {
            if (i) l += ",";
            l += vs[i];
        }
        return l;
    };
    std::vector<std::vector<std::vector<std::string>>> simp(top + 1);
    for (const auto& s : closed) {
        int n = static_cast<int>(s.size()) - 1;
        x.labels[n].push_back(join(s));
        simp[n].push_back(s);
    }
    for (int n = 1; n <= top; ++n) {
        x.faces[n].resize(x.labels[n].size());
        for (size_t j = 0; j < simp[n].size(); ++j)
            for (int i = 0; i <= n; ++i) {
                std::vector<std::string> f = simp[n][j];
                f.erase(f.begin() + i);
                int idx = x.index_of(n - 1, join(f));
                if (idx < 0) throw Error("from_facets: missing face");
                x.faces[n][j].push_back(nondeg_ref(n - 1, idx));
            }
    }
    return x;
}

FiniteSimplicialSet parse_facets(std::istream& in) {
    std::vector<std::vector<std::string>> facets;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<std::string> facet;
        std::string tok;
        while (ls >> tok) facet.push_back(tok);
        if (!facet.empty()) facets.push_back(std::move(facet));
    }
    if (facets.empty()) throw ParseError("no facets in input");
    return from_facets(facets);
}

FiniteSimplicialSet parse_facets_string(const std::string& text) {
    std::istringstream in(text);
    return parse_facets(in);
}

FiniteSimplicialSet standard_simplex(int n) {
    std::vector<std::string> facet;
    for (int i = 0; i <= n; ++i) facet.push_back(std::to_string(i));
    return from_facets({facet});
}

FiniteSimplicialSet boundary_sphere(int n) {
    if (n < 1) throw Error("boundary_sphere: need n >= 1");
    std::vector<std::vector<std::string>> facets;
    for (int skip = 0; skip <= n; ++skip) {
        std::vector<std::string> facet;
        for (int i = 0; i <= n; ++i)
            if (i != skip) facet.push_back(std::to_string(i));
        facets.push_back(std::move(facet));
    }
    return from_facets(facets);
}

FiniteSimplicialSet sphere_one_cell(int n) {
    if (n < 1) throw Error("sphere_one_cell: need n >= 1");
    FiniteSimplicialSet s;
    s.labels.resize(n + 1);
    s.faces.resize(n + 1);
    s.labels[0] = {"*"};
    s.labels[n] = {"top"};
    s.faces[n].resize(1);
    for (int i = 0; i <= n; ++i)
        s.faces[n][0].push_back(SimplexRef{0, 0, std::vector<int>(n, 0)});
    return s;
}

namespace {

// surjection [m] -> [m-|S|] collapsing exactly at the positions in S
std::vector<int> surjection_from_collapses(int m, const std::vector<int>& S) {
    std::vector<bool> coll(m > 0 ? m : 0, false);
    for (int t : S) coll[t] = true;
    std::vector<int> f(m + 1);
    f[0] = 0;
    for (int t = 1; t <= m; ++t) f[t] = f[t - 1] + (coll[t - 1] ? 0 : 1);
    return f;
}

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    if (k > n) return;
    for (;;) {
        fn(c);
        int idx = k - 1;
        while (idx >= 0 && c[idx] == n - k + idx) --idx;
        if (idx < 0) break;
        ++c[idx];
        for (int i = idx + 1; i < k; ++i) c[i] = c[i - 1] + 1;
    }
}

struct PairRef {
    SimplexRef a, b;
};

// strip the common degeneracies of a coordinate pair of equal dimension;
// returns the nondegenerate pair plus the shared surjection
std::pair<PairRef, std::vector<int>> strip_common(const SimplexRef& a, const SimplexRef& b) {
    int k = a.dim();
    std::vector<int> surj(k + 1), ua{a.map[0]}, vb{b.map[0]};
    surj[0] = 0;
    for (int t = 1; t <= k; ++t) {
        if (a.map[t] == a.map[t - 1] && b.map[t] == b.map[t - 1]) {
            surj[t] = surj[t - 1];
        } else {
            surj[t] = surj[t - 1] + 1;
            ua.push_back(a.map[t]);
            vb.push_back(b.map[t]);
        }
    }
    return {{SimplexRef{a.base_dim, a.base_index, std::move(ua)},
             SimplexRef{b.base_dim, b.base_index, std::move(vb)}},
            std::move(surj)};
}

}  // namespace

FiniteSimplicialSet product(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y, long cap) {
    int top = x.top_dim() + y.top_dim();
    FiniteSimplicialSet t;
    t.labels.resize(top + 1);
    t.faces.resize(top + 1);
    std::vector<std::vector<PairRef>> pairs(top + 1);
    for (int m = 0; m <= top; ++m) {
        for (int p = 0; p <= std::min(m, x.top_dim()); ++p)
            for (int ja = 0; ja < x.count(p); ++ja)
                for (int q = std::max(0, m - p); q <= std::min(m, y.top_dim()); ++q)
                    for (int jb = 0; jb < y.count(q); ++jb) {
                        // disjoint collapse sets S_a (|.|=m-p) and S_b (|.|=m-q)
                        combinations(m, m - p, [&](const std::vector<int>& Sa) {
                            std::vector<int> rest;
                            {
                                std::vector<bool> used(m > 0 ? m : 0, false);
                                for (int s : Sa) used[s] = true;
                                for (int s = 0; s < m; ++s)
                                    if (!used[s]) rest.push_back(s);
                            }
                            combinations(static_cast<int>(rest.size()), m - q,
                                         [&](const std::vector<int>& pick) {
                                             std::vector<int> Sb;
                                             for (int s : pick) Sb.push_back(rest[s]);
                                             SimplexRef ra{p, ja, surjection_from_collapses(m, Sa)};
                                             SimplexRef rb{q, jb, surjection_from_collapses(m, Sb)};
                                             if (static_cast<long>(t.labels[m].size()) >= cap)
                                                 throw SizeLimitExceeded(
                                                     "product: more than " + std::to_string(cap) +
                                                     " nondegenerate simplices in dimension " +
                                                     std::to_string(m));
                                             t.labels[m].push_back(tensor_label(
                                                 ref_label(x, ra), ref_label(y, rb)));
                                             pairs[m].push_back({std::move(ra), std::move(rb)});
                                         });
                        });
                    }
    }
    for (int m = 1; m <= top; ++m) {
        t.faces[m].resize(t.labels[m].size());
        for (size_t j = 0; j < pairs[m].size(); ++j)
            for (int i = 0; i <= m; ++i) {
                std::vector<int> di = coface_map(i, m);
                SimplexRef fa = pullback(x, pairs[m][j].a, di);
                SimplexRef fb = pullback(y, pairs[m][j].b, di);
                auto [nd, surj] = strip_common(fa, fb);
                int pd = surj.back();
                int idx = t.index_of(pd, tensor_label(ref_label(x, nd.a), ref_label(y, nd.b)));
                if (idx < 0) throw Error("product: face pair not found");
                t.faces[m][j].push_back(SimplexRef{pd, idx, std::move(surj)});
            }
    }
    while (t.labels.size() > 1 && t.labels.back().empty()) {
        t.labels.pop_back();
        t.faces.pop_back();
    }
    return t;
}

FiniteSimplicialSet power(const FiniteSimplicialSet& x, int m, long cap) {
    if (m < 1) throw Error("power: need m >= 1");
    FiniteSimplicialSet out = x;
    for (int k = 2; k <= m; ++k) out = product(out, x, cap);
    return out;
}

long euler_characteristic(const FiniteSimplicialSet& x) {
    long chi = 0;
    for (int n = 0; n <= x.top_dim(); ++n) chi += (n % 2 == 0 ? 1 : -1) * x.count(n);
    return chi;
}

DGModule normalized_chains(const FiniteSimplicialSet& x, const Field& F) {
    DGModule c;
    c.field = F;
    for (int n = 0; n <= x.top_dim(); ++n)
        for (const auto& l : x.labels[n]) c.gm.add_label(n, l);
    for (int n = 1; n <= x.top_dim(); ++n) {
        SparseMatrix d(c.dim(n - 1), c.dim(n));
        for (size_t j = 0; j < x.labels[n].size(); ++j)
            for (int i = 0; i <= n; ++i) {
                const SimplexRef& f = x.faces[n][j][i];
                if (!f.nondegenerate()) continue;
                d.add_to(f.base_index, static_cast<int>(j), (i % 2 == 0) ? Scalar(1) : Scalar(-1),
                         F);
            }
        c.set_d(n, d);
    }
    return c;
}

DGModule normalized_cochains(const FiniteSimplicialSet& x, const Field& F) {
    DGModule chains = normalized_chains(x, F);
    DGModule c;
    c.field = F;
    for (int n = 0; n <= x.top_dim(); ++n)
        for (const auto& l : x.labels[n]) c.gm.add_label(-n, l);
    for (int n = 0; n < x.top_dim(); ++n) c.set_d(-n, chains.d(n + 1).transpose());
    return c;
}

}  // namespace halg
