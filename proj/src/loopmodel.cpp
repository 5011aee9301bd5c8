#include "halg/loopmodel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>

namespace halg {

namespace {

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    while (true) {
        fn(c);
        int idx = k - 1;
        while (idx >= 0 && c[idx] == n - k + idx) --idx;
        if (idx < 0) break;
        ++c[idx];
        for (int i = idx + 1; i < k; ++i) c[i] = c[i - 1] + 1;
    }
}

struct RefInfo {
    SimplexRef ref;
    std::uint64_t collapse = 0;  // bit t set when map[t] == map[t+1]
};

// every simplex of dimension n: nondegenerate base of dimension p with a
// monotone surjection, encoded by its collapse set
std::vector<RefInfo> refs_at(const FiniteSimplicialSet& x, int n) {
    std::vector<RefInfo> out;
    for (int p = std::min(n, x.top_dim()); p >= 0; --p)
        for (int j = 0; j < x.count(p); ++j)
            combinations(n, n - p, [&](const std::vector<int>& S) {
                std::vector<int> map(n + 1);
                std::uint64_t mask = 0;
                std::vector<bool> in(n, false);
                for (int s : S) in[s] = true;
                for (int t = 0; t < n; ++t) {
                    map[t + 1] = map[t] + (in[t] ? 0 : 1);
                    if (in[t]) mask |= (std::uint64_t{1} << t);
                }
                out.push_back({SimplexRef{p, j, std::move(map)}, mask});
            });
    return out;
}

constexpr double kNodeBudget = 5e8;

}  // namespace

int PowerLevel::index_of(int q, const Label& l) const {
    if (q < 0 || q > top()) return -1;
    if (index_.size() != labels.size()) index_.assign(labels.size(), {});
    auto& idx = index_[q];
    if (idx.size() != labels[q].size()) {
        idx.clear();
        for (size_t i = 0; i < labels[q].size(); ++i) idx[labels[q][i]] = static_cast<int>(i);
    }
    auto it = idx.find(l);
    return it == idx.end() ? -1 : it->second;
}

Label power_tuple_label(const FiniteSimplicialSet& x, const std::vector<SimplexRef>& t) {
    if (t.size() == 1) return ref_label(x, t[0]);
    Label l = "(";
    for (size_t k = 0; k < t.size(); ++k) {
        if (k) l += "|";
        l += ref_label(x, t[k]);
    }
    l += ")";
    return l;
}

PowerLevel tuple_power(const FiniteSimplicialSet& x, int m, int qmax, long cap) {
    if (m < 1) throw Error("tuple_power: need m >= 1");
    PowerLevel P;
    P.m = m;
    int top = x.top_dim();
    P.qmax = std::min(qmax, m * top);
    P.tuples.resize(P.qmax + 1);
    P.labels.resize(P.qmax + 1);
    for (int n = 0; n <= P.qmax; ++n) {
        auto refs = refs_at(x, n);
        if (std::pow(static_cast<double>(refs.size()), m) > kNodeBudget)
            throw SizeLimitExceeded("tuple_power: enumeration in dimension " + std::to_string(n) +
                                    " exceeds the node budget");
        std::uint64_t full = (n == 0) ? 0 : ((std::uint64_t{1} << n) - 1);
        std::vector<int> pick(m);
        std::function<void(int, std::uint64_t)> rec = [&](int depth, std::uint64_t mask) {
            if (depth == m) {
                if (mask != 0) return;
                if (static_cast<long>(P.tuples[n].size()) >= cap)
                    throw SizeLimitExceeded("tuple_power: more than " + std::to_string(cap) +
                                            " simplices in dimension " + std::to_string(n));
                std::vector<SimplexRef> t;
                t.reserve(m);
                for (int k = 0; k < m; ++k) t.push_back(refs[pick[k]].ref);
                P.labels[n].push_back(power_tuple_label(x, t));
                P.tuples[n].push_back(std::move(t));
                return;
            }
            if (std::popcount(mask) > (m - depth) * top) return;
            for (size_t r = 0; r < refs.size(); ++r) {
                pick[depth] = static_cast<int>(r);
                rec(depth + 1, mask & refs[r].collapse);
            }
        };
        rec(0, full);
    }
    while (P.labels.size() > 1 && P.labels.back().empty()) {
        P.labels.pop_back();
        P.tuples.pop_back();
    }
    P.qmax = P.top();
    return P;
}

int selection_image(const FiniteSimplicialSet& x, const PowerLevel& src, int q, int j,
                    const std::vector<int>& sel, const PowerLevel& tgt) {
    const auto& t = src.tuples.at(q).at(j);
    std::vector<SimplexRef> img;
    img.reserve(sel.size());
    for (int k : sel) img.push_back(t.at(k));
    for (int tt = 0; tt < q; ++tt) {
        bool common = true;
        for (const auto& r : img)
            if (r.map[tt] != r.map[tt + 1]) {
                common = false;
                break;
            }
        if (common) return -1;
    }
    int idx = tgt.index_of(q, power_tuple_label(x, img));
    if (idx < 0) throw Error("selection_image: image tuple not found in the target power");
    return idx;
}

std::vector<int> jones_coface_selection(int i, int n) {
    std::vector<int> sel(n + 1);
    if (i == n) {
        for (int k = 0; k < n; ++k) sel[k] = k;
        sel[n] = 0;
    } else {
        for (int k = 0; k <= n; ++k) sel[k] = (k <= i) ? k : k - 1;
    }
    return sel;
}

std::vector<int> jones_codegen_selection(int j, int n) {
    std::vector<int> sel(n + 1);
    for (int k = 0; k <= n; ++k) sel[k] = (k <= j) ? k : k + 1;
    return sel;
}

namespace {

std::vector<int> sel_compose(const std::vector<int>& inner, const std::vector<int>& outer) {
    std::vector<int> out(outer.size());
    for (size_t k = 0; k < outer.size(); ++k) out[k] = inner.at(outer[k]);
    return out;
}

}  // namespace

IdentityReport check_coface_identities(int P) {
    IdentityReport rep;
    auto D = jones_coface_selection;
    auto S = jones_codegen_selection;
    int N = std::max(P, 2);
    for (int n = 1; n <= N; ++n) {
        // d^j d^i = d^i d^{j-1}, i < j
        for (int j = 1; j <= n + 1; ++j)
            for (int i = 0; i < j; ++i)
                if (sel_compose(D(i, n), D(j, n + 1)) != sel_compose(D(j - 1, n), D(i, n + 1)))
                    rep.failures.push_back("coface identity fails at n=" + std::to_string(n) +
                                           " i=" + std::to_string(i) + " j=" + std::to_string(j));
    }
    for (int n = 0; n <= N; ++n) {
        // s^j d^i
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                std::vector<int> lhs = sel_compose(D(i, n + 1), S(j, n));
                std::vector<int> rhs;
                if (i < j)
                    rhs = sel_compose(S(j - 1, n - 1), D(i, n));
                else if (i == j || i == j + 1) {
                    rhs.resize(n + 1);
                    for (int k = 0; k <= n; ++k) rhs[k] = k;
                } else
                    rhs = sel_compose(S(j, n - 1), D(i - 1, n));
                if (lhs != rhs)
                    rep.failures.push_back("codegeneracy-coface identity fails at n=" +
                                           std::to_string(n) + " i=" + std::to_string(i) +
                                           " j=" + std::to_string(j));
            }
        // s^j s^i = s^i s^{j+1}, i <= j
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                if (sel_compose(S(i, n + 1), S(j, n)) != sel_compose(S(j + 1, n + 1), S(i, n)))
                    rep.failures.push_back("codegeneracy identity fails at n=" + std::to_string(n) +
                                           " i=" + std::to_string(i) + " j=" + std::to_string(j));
    }
    return rep;
}

JonesCosimplicial jones_model(const FiniteSimplicialSet& x, int P, int qmax, long cap) {
    if (P < 0) throw Error("jones_model: need P >= 0");
    auto idrep = check_coface_identities(P);
    if (!idrep.ok()) throw Error("jones_model: " + idrep.failures.front());
    JonesCosimplicial j;
    j.base = x;
    j.P = P;
    int full = (P + 1) * x.top_dim();
    j.qmax = (qmax < 0) ? full : std::min(qmax, full);
    for (int p = 0; p <= P; ++p) j.levels.push_back(tuple_power(x, p + 1, j.qmax, cap));
    return j;
}

CochainCototal cototal(const JonesCosimplicial& jm, const Field& F) {
    CochainCototal c;
    SimplicialDGModule& s = c.sim;
    s.field = F;
    s.level_bound = jm.P;
    s.levels.resize(jm.P + 1);
    const FiniteSimplicialSet& x = jm.base;

    for (int p = 0; p <= jm.P; ++p) {
        const PowerLevel& lv = jm.levels[p];
        DGModule& mod = s.levels[p];
        mod.field = F;
        for (int q = 0; q <= lv.top(); ++q)
            for (const auto& l : lv.labels[q]) mod.gm.add_label(-q, l);
        // cochain differential at -q = transpose of the chain boundary
        for (int q = 0; q + 1 <= lv.top(); ++q) {
            SparseMatrix d(lv.count(q + 1), lv.count(q));
            for (int t = 0; t < lv.count(q + 1); ++t)
                for (int i = 0; i <= q + 1; ++i) {
                    std::vector<SimplexRef> img;
                    img.reserve(lv.m);
                    for (const auto& r : lv.tuples[q + 1][t]) img.push_back(face_of(x, r, i));
                    bool degen = false;
                    for (int tt = 0; tt < q && !degen; ++tt) {
                        bool common = true;
                        for (const auto& r : img)
                            if (r.map[tt] != r.map[tt + 1]) {
                                common = false;
                                break;
                            }
                        degen = common;
                    }
                    if (degen) continue;
                    int sig = lv.index_of(q, power_tuple_label(x, img));
                    if (sig < 0) throw Error("cototal: missing face tuple");
                    d.add_to(t, sig, (i % 2 == 0) ? Scalar(1) : Scalar(-1), F);
                }
            mod.set_d(-q, std::move(d));
        }
    }

    s.faces.resize(jm.P + 1);
    for (int n = 1; n <= jm.P; ++n) {
        s.faces[n].resize(n + 1);
        const PowerLevel& big = jm.levels[n];
        const PowerLevel& small = jm.levels[n - 1];
        for (int i = 0; i <= n; ++i) {
            std::vector<int> sel = jones_coface_selection(i, n);
            ChainMap& f = s.faces[n][i];
            for (int q = 0; q <= big.top(); ++q) {
                SparseMatrix m(small.count(q), big.count(q));
                for (int j = 0; j < small.count(q); ++j) {
                    int idx = selection_image(x, small, q, j, sel, big);
                    if (idx >= 0) m.add_to(j, idx, Scalar(1), F);
                }
                f.mats[-q] = std::move(m);
            }
        }
    }
    s.degens.resize(jm.P + 1);
    for (int n = 0; n < jm.P; ++n) {
        s.degens[n].resize(n + 1);
        const PowerLevel& big = jm.levels[n + 1];
        const PowerLevel& small = jm.levels[n];
        for (int j = 0; j <= n; ++j) {
            std::vector<int> sel = jones_codegen_selection(j, n);
            ChainMap& g = s.degens[n][j];
            for (int q = 0; q <= big.top(); ++q) {
                SparseMatrix m(big.count(q), small.count(q));
                for (int t = 0; t < big.count(q); ++t) {
                    int idx = selection_image(x, big, q, t, sel, small);
                    if (idx >= 0) m.add_to(t, idx, Scalar(1), F);
                }
                g.mats[-q] = std::move(m);
            }
        }
    }

    c.norm = normalize(s, jm.P, TotSign::FacesFirst);
    int lo = c.norm.complex.gm.lowest_degree(), hi = c.norm.complex.gm.highest_degree();
    auto rep = verify_dsquare(c.norm.complex, lo - 1, hi + 1);
    if (!rep.ok())
        throw DSquareNonzero("cototal: D^2 != 0 at " + rep.violations.front().witness);
    return c;
}

std::map<int, std::pair<int, bool>> loop_betti(const FiniteSimplicialSet& x, const Field& F, int P,
                                               int mmax, long cap) {
    DGModule ch = normalized_chains(x, F);
    if (homology_dim_at(ch, 1) != 0)
        throw NotSimplyConnectedProxy("loop_betti: H_1 of the base is nonzero");
    int top = x.top_dim();
    int qmax = std::min(P + mmax + 1, (P + 1) * top);
    JonesCosimplicial jm = jones_model(x, P, qmax, cap);
    CochainCototal ct = cototal(jm, F);
    std::optional<Normalized> prev;
    if (P >= 1) prev = normalize(ct.sim, P - 1, TotSign::FacesFirst);

    std::map<int, std::pair<int, bool>> out;
    for (int m = 0; m <= mmax; ++m) {
        int b = homology_dim_at(ct.norm.complex, -m);
        bool stable = m < P - top;
        if (stable && prev) stable = (b == homology_dim_at(prev->complex, -m));
        out[m] = {b, stable};
    }
    return out;
}

}  // namespace halg
