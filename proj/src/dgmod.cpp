#include "halg/dgmod.hpp"

#include <algorithm>

namespace halg {

LinComb comb_add(const LinComb& a, const LinComb& b, const Field& F) {
    LinComb out = a;
    for (const auto& [l, c] : b) comb_accumulate(out, l, c, F);
    return out;
}

LinComb comb_scale(const LinComb& a, const Scalar& c, const Field& F) {
    LinComb out;
    if (F.is_zero(c)) return out;
    for (const auto& [l, v] : a) {
        Scalar w = F.mul(c, v);
        if (w != 0) out[l] = w;
    }
    return out;
}

void comb_accumulate(LinComb& acc, const Label& l, const Scalar& c, const Field& F) {
    auto it = acc.find(l);
    Scalar w = F.normalize(it == acc.end() ? c : it->second + c);
    if (w == 0) {
        if (it != acc.end()) acc.erase(it);
    } else {
        acc[l] = w;
    }
}

int GradedModule::dim(int n) const {
    auto it = basis.find(n);
    return it == basis.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<Label>& GradedModule::labels(int n) const {
    static const std::vector<Label> kEmpty;
    auto it = basis.find(n);
    return it == basis.end() ? kEmpty : it->second;
}

int GradedModule::index_of(int n, const Label& l) const {
    auto bt = basis.find(n);
    if (bt == basis.end()) return -1;
    auto& idx = index_[n];
    if (idx.size() != bt->second.size()) {
        idx.clear();
        for (size_t i = 0; i < bt->second.size(); ++i) idx[bt->second[i]] = static_cast<int>(i);
    }
    auto it = idx.find(l);
    return it == idx.end() ? -1 : it->second;
}

void GradedModule::add_label(int n, const Label& l) {
    basis[n].push_back(l);
    index_.erase(n);
}

int GradedModule::lowest_degree() const {
    for (const auto& [n, ls] : basis)
        if (!ls.empty()) return n;
    return 0;
}

int GradedModule::highest_degree() const {
    int h = 0;
    bool seen = false;
    for (const auto& [n, ls] : basis)
        if (!ls.empty()) {
            h = n;
            seen = true;
        }
    return seen ? h : 0;
}

int GradedModule::total_dim() const {
    int t = 0;
    for (const auto& [n, ls] : basis) t += static_cast<int>(ls.size());
    return t;
}

SparseMatrix DGModule::d(int n) const {
    auto it = diff.find(n);
    if (it != diff.end()) return it->second;
    return SparseMatrix(dim(n - 1), dim(n));
}

void DGModule::set_d(int n, SparseMatrix m) {
    if (m.rows != dim(n - 1) || m.cols != dim(n)) throw Error("set_d: shape mismatch");
    diff[n] = std::move(m);
}

SparseVec DGModule::to_vec(int n, const LinComb& c) const {
    SparseVec v;
    std::map<int, Scalar> acc;
    for (const auto& [l, s] : c) {
        int i = gm.index_of(n, l);
        if (i < 0) throw Error("to_vec: label '" + l + "' not in degree " + std::to_string(n));
        acc[i] = s;
    }
    for (auto& [i, s] : acc)
        if (s != 0) v.emplace_back(i, s);
    return v;
}

LinComb DGModule::to_comb(int n, const SparseVec& v) const {
    LinComb c;
    const auto& ls = gm.labels(n);
    for (const auto& [i, s] : v) {
        if (i < 0 || i >= static_cast<int>(ls.size())) throw Error("to_comb: index out of range");
        c[ls[i]] = s;
    }
    return c;
}

LinComb DGModule::d_comb(int n, const LinComb& c) const {
    return to_comb(n - 1, d(n).apply(to_vec(n, c), field));
}

DsquareReport verify_dsquare(const DGModule& m, int lo, int hi) {
    DsquareReport rep;
    for (int n = lo + 2; n <= hi; ++n) {
        SparseMatrix dd = m.d(n - 1).mul(m.d(n), m.field);
        if (!dd.is_zero()) {
            // first offending column
            int col = dd.entries.begin()->first.second;
            rep.violations.push_back({n, m.gm.labels(n)[col]});
        }
    }
    return rep;
}

SparseMatrix ChainMap::mat(const DGModule& src, const DGModule& tgt, int n) const {
    auto it = mats.find(n);
    if (it != mats.end()) return it->second;
    return SparseMatrix(tgt.dim(n + shift), src.dim(n));
}

LinComb ChainMap::apply(const DGModule& src, const DGModule& tgt, int n, const LinComb& c,
                        const Field& F) const {
    return tgt.to_comb(n + shift, mat(src, tgt, n).apply(src.to_vec(n, c), F));
}

bool is_chain_map(const DGModule& src, const DGModule& tgt, const ChainMap& f, int lo, int hi,
                  std::string* why) {
    const Field& F = src.field;
    for (int n = lo + 1; n <= hi; ++n) {
        SparseMatrix lhs = f.mat(src, tgt, n - 1).mul(src.d(n), F);
        SparseMatrix rhs = tgt.d(n + f.shift).mul(f.mat(src, tgt, n), F);
        if (f.shift % 2 != 0) rhs = rhs.scale(Scalar(-1), F);
        if (!(lhs == rhs)) {
            if (why) *why = "chain-map identity fails at source degree " + std::to_string(n);
            return false;
        }
    }
    return true;
}

ChainMap compose(const DGModule& a, const DGModule& b, const DGModule& c, const ChainMap& g,
                 const ChainMap& f, int lo, int hi) {
    ChainMap h;
    h.shift = f.shift + g.shift;
    for (int n = lo; n <= hi; ++n)
        h.mats[n] = g.mat(b, c, n + f.shift).mul(f.mat(a, b, n), a.field);
    return h;
}

SparseMatrix matrix_from_images(const DGModule& src, int src_deg, const DGModule& tgt, int tgt_deg,
                                const std::function<LinComb(const Label&)>& f) {
    SparseMatrix m(tgt.dim(tgt_deg), src.dim(src_deg));
    const auto& ls = src.gm.labels(src_deg);
    for (size_t j = 0; j < ls.size(); ++j) {
        LinComb img = f(ls[j]);
        for (const auto& [l, s] : img) {
            int i = tgt.gm.index_of(tgt_deg, l);
            if (i < 0)
                throw Error("matrix_from_images: image label '" + l + "' not in target degree " +
                            std::to_string(tgt_deg));
            m.add_to(i, static_cast<int>(j), s, src.field);
        }
    }
    return m;
}

Label tensor_label(const Label& a, const Label& b) { return "(" + a + "|" + b + ")"; }

std::pair<Label, Label> split_tensor_label(const Label& l) {
    if (l.size() < 3 || l.front() != '(' || l.back() != ')')
        throw Error("split_tensor_label: malformed '" + l + "'");
    int depth = 0;
    for (size_t i = 1; i + 1 < l.size(); ++i) {
        char ch = l[i];
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == '|' && depth == 0) return {l.substr(1, i - 1), l.substr(i + 1, l.size() - i - 2)};
    }
    throw Error("split_tensor_label: no separator in '" + l + "'");
}

std::map<int, std::vector<TensorPair>> tensor_pairs(const DGModule& a, const DGModule& b) {
    std::map<int, std::vector<TensorPair>> pairs;
    for (const auto& [da, la] : a.gm.basis)
        for (const auto& [db, lb] : b.gm.basis)
            for (size_t ia = 0; ia < la.size(); ++ia)
                for (size_t ib = 0; ib < lb.size(); ++ib)
                    pairs[da + db].push_back({da, static_cast<int>(ia), db, static_cast<int>(ib)});
    return pairs;
}

DGModule tensor(const DGModule& a, const DGModule& b) {
    if (!(a.field == b.field)) throw Error("tensor: field mismatch");
    DGModule t;
    t.field = a.field;
    std::map<int, std::vector<TensorPair>> pairs = tensor_pairs(a, b);
    for (const auto& [n, ps] : pairs)
        for (const auto& p : ps)
            t.gm.add_label(n, tensor_label(a.gm.labels(p.da)[p.ia], b.gm.labels(p.db)[p.ib]));
    for (const auto& [n, ps] : pairs) {
        SparseMatrix m(t.dim(n - 1), t.dim(n));
        for (size_t j = 0; j < ps.size(); ++j) {
            const TensorPair& p = ps[j];
            const Label& xa = a.gm.labels(p.da)[p.ia];
            const Label& xb = b.gm.labels(p.db)[p.ib];
            LinComb img;
            SparseVec dx = a.d(p.da).apply(SparseVec{{p.ia, Scalar(1)}}, a.field);
            for (const auto& [i, s] : dx)
                comb_accumulate(img, tensor_label(a.gm.labels(p.da - 1)[i], xb), s, t.field);
            SparseVec dy = b.d(p.db).apply(SparseVec{{p.ib, Scalar(1)}}, b.field);
            Scalar sgn = (p.da % 2 == 0) ? 1 : -1;
            for (const auto& [i, s] : dy)
                comb_accumulate(img, tensor_label(xa, b.gm.labels(p.db - 1)[i]), t.field.mul(sgn, s),
                                t.field);
            for (const auto& [l, s] : img) {
                int i = t.gm.index_of(n - 1, l);
                if (i < 0) throw Error("tensor: differential leaves basis");
                m.add_to(i, static_cast<int>(j), s, t.field);
            }
        }
        t.diff[n] = std::move(m);
    }
    return t;
}

ChainMap tensor_chain_map(const DGModule& sa, const DGModule& sb, const DGModule& ta,
                          const DGModule& tb, const ChainMap& f, const ChainMap& g) {
    if (f.shift != 0 || g.shift != 0) throw Error("tensor_chain_map: only degree-0 maps");
    const Field& F = sa.field;
    DGModule src = tensor(sa, sb);
    DGModule tgt = tensor(ta, tb);
    auto pairs = tensor_pairs(sa, sb);
    ChainMap h;
    for (const auto& [n, ps] : pairs) {
        SparseMatrix m(tgt.dim(n), src.dim(n));
        for (size_t j = 0; j < ps.size(); ++j) {
            const TensorPair& p = ps[j];
            SparseVec fx = f.mat(sa, ta, p.da).column(p.ia);
            SparseVec gy = g.mat(sb, tb, p.db).column(p.ib);
            for (const auto& [ri, rv] : fx)
                for (const auto& [si, sv] : gy) {
                    Label l = tensor_label(ta.gm.labels(p.da)[ri], tb.gm.labels(p.db)[si]);
                    int i = tgt.gm.index_of(n, l);
                    if (i < 0) throw Error("tensor_chain_map: image label missing");
                    m.add_to(i, static_cast<int>(j), F.mul(rv, sv), F);
                }
        }
        h.mats[n] = std::move(m);
    }
    return h;
}

std::map<int, HomologySummary> homology(const DGModule& m, int lo, int hi) {
    DsquareReport rep = verify_dsquare(m, lo, hi);
    if (!rep.ok())
        throw CompositionNotZero("homology: d^2 != 0 at degree " +
                                 std::to_string(rep.violations.front().degree));
    std::map<int, HomologySummary> out;
    for (int n = lo + 1; n <= hi - 1; ++n) {
        HomologySummary h;
        auto kb = kernel_basis(m.d(n), m.field);
        Echelon e(m.field);
        // image first, then independent kernel vectors become representatives
        std::map<int, SparseVec> cols;
        for (const auto& [rc, val] : m.d(n + 1).entries) cols[rc.second].emplace_back(rc.first, val);
        for (auto& [j, col] : cols) e.insert(col);
        for (const auto& k : kb) {
            SparseVec copy = k;
            if (e.insert(copy)) {
                h.representatives.push_back(m.to_comb(n, k));
                ++h.dim;
            }
        }
        out[n] = std::move(h);
    }
    return out;
}

int homology_dim_at(const DGModule& m, int n) {
    return homology_dim(m.d(n + 1), m.d(n), m.field);
}

DGModule suspend(const DGModule& m, int shift) {
    DGModule s;
    s.field = m.field;
    for (const auto& [n, ls] : m.gm.basis)
        for (const auto& l : ls) s.gm.add_label(n + shift, l);
    Scalar sgn = (shift % 2 == 0) ? 1 : -1;
    for (const auto& [n, mat] : m.diff) s.diff[n + shift] = mat.scale(sgn, m.field);
    return s;
}

DGModule unit_complex(const Field& F, const Label& l) {
    DGModule m;
    m.field = F;
    m.gm.add_label(0, l);
    return m;
}

}  // namespace halg
