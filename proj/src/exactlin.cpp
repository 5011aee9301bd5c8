#include "halg/exactlin.hpp"

#include <sstream>

namespace halg {

Field Field::prime(unsigned long p) {
    mpz_class n(static_cast<unsigned long>(p));
    if (p < 2 || mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
        throw Error("not a prime: " + std::to_string(p));
    return Field(Kind::Prime, p);
}

Scalar Field::normalize(const Scalar& x) const {
    if (is_rational()) {
        Scalar y = x;
        y.canonicalize();
        return y;
    }
    // F_p: the denominator must be invertible mod p.
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class num = x.get_num(), den = x.get_den();
    mpz_class deninv;
    if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw Error("denominator not invertible mod p");
    mpz_class r = (num * deninv) % p;
    if (r < 0) r += p;
    return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
    Scalar b = normalize(a);
    if (b == 0) throw Error("division by zero");
    if (is_rational()) {
        Scalar y = 1 / b;
        y.canonicalize();
        return y;
    }
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class r;
    mpz_invert(r.get_mpz_t(), mpz_class(b.get_num()).get_mpz_t(), p.get_mpz_t());
    if (r < 0) r += p;
    return Scalar(r);
}

std::string Field::name() const {
    if (is_rational()) return "Q";
    return "F" + std::to_string(p_);
}

SparseVec vec_axpy(const SparseVec& a, const Scalar& c, const SparseVec& b, const Field& F) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Scalar v = F.mul(c, b[j].second);
            if (v != 0) out.emplace_back(b[j].first, v);
            ++j;
        } else {
            Scalar v = F.add(a[i].second, F.mul(c, b[j].second));
            if (v != 0) out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec vec_add(const SparseVec& a, const SparseVec& b, const Field& F) {
    return vec_axpy(a, Scalar(1), b, F);
}

SparseVec vec_scale(const SparseVec& a, const Scalar& c, const Field& F) {
    SparseVec out;
    if (F.is_zero(c)) return out;
    out.reserve(a.size());
    for (const auto& [i, v] : a) {
        Scalar w = F.mul(c, v);
        if (w != 0) out.emplace_back(i, w);
    }
    return out;
}

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.entries[{i, i}] = 1;
    return m;
}

void SparseMatrix::set(int r, int c, const Scalar& v, const Field& F) {
    Scalar w = F.normalize(v);
    if (w == 0)
        entries.erase({r, c});
    else
        entries[{r, c}] = w;
}

void SparseMatrix::add_to(int r, int c, const Scalar& v, const Field& F) {
    auto it = entries.find({r, c});
    Scalar w = F.normalize(it == entries.end() ? v : it->second + v);
    if (w == 0) {
        if (it != entries.end()) entries.erase(it);
    } else {
        entries[{r, c}] = w;
    }
}

Scalar SparseMatrix::get(int r, int c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? Scalar(0) : it->second;
}

SparseVec SparseMatrix::column(int c) const {
    SparseVec v;
    for (const auto& [rc, val] : entries)
        if (rc.second == c) v.emplace_back(rc.first, val);
    return v;
}

void SparseMatrix::set_column(int c, const SparseVec& v) {
    for (const auto& [r, val] : v) entries[{r, c}] = val;
}

SparseVec SparseMatrix::apply(const SparseVec& x, const Field& F) const {
    std::map<int, Scalar> acc;
    // column-major application needs per-column access; iterate entries
    std::map<int, Scalar> xv(x.begin(), x.end());
    for (const auto& [rc, val] : entries) {
        auto it = xv.find(rc.second);
        if (it != xv.end()) acc[rc.first] += val * it->second;
    }
    SparseVec out;
    for (auto& [i, v] : acc) {
        Scalar w = F.normalize(v);
        if (w != 0) out.emplace_back(i, w);
    }
    return out;
}

SparseMatrix SparseMatrix::mul(const SparseMatrix& other, const Field& F) const {
    if (cols != other.rows) throw Error("matrix shape mismatch in mul");
    SparseMatrix out(rows, other.cols);
    // group other's entries by column
    std::map<int, SparseVec> bycol;
    for (const auto& [rc, val] : other.entries) bycol[rc.second].emplace_back(rc.first, val);
    std::map<int, SparseVec> rowsa;  // this grouped by row? need by column index of this
    std::map<int, SparseVec> colsa;  // this's columns
    for (const auto& [rc, val] : entries) colsa[rc.second].emplace_back(rc.first, val);
    for (const auto& [j, colb] : bycol) {
        std::map<int, Scalar> acc;
        for (const auto& [k, bv] : colb) {
            auto it = colsa.find(k);
            if (it == colsa.end()) continue;
            for (const auto& [i, av] : it->second) acc[i] += av * bv;
        }
        for (auto& [i, v] : acc) {
            Scalar w = F.normalize(v);
            if (w != 0) out.entries[{i, j}] = w;
        }
    }
    return out;
}

SparseMatrix SparseMatrix::add(const SparseMatrix& other, const Field& F) const {
    if (rows != other.rows || cols != other.cols) throw Error("matrix shape mismatch in add");
    SparseMatrix out = *this;
    for (const auto& [rc, val] : other.entries) out.add_to(rc.first, rc.second, val, F);
    return out;
}

SparseMatrix SparseMatrix::scale(const Scalar& c, const Field& F) const {
    SparseMatrix out(rows, cols);
    if (F.is_zero(c)) return out;
    for (const auto& [rc, val] : entries) {
        Scalar w = F.mul(c, val);
        if (w != 0) out.entries[rc] = w;
    }
    return out;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix out(cols, rows);
    for (const auto& [rc, val] : entries) out.entries[{rc.second, rc.first}] = val;
    return out;
}

SparseVec Echelon::reduce(SparseVec v) const {
    // Full reduction against every pivot present in v. Eliminating the
    // coordinate at position k only introduces indices > v[k].first, so a
    // single left-to-right sweep suffices.
    for (size_t k = 0; k < v.size();) {
        auto it = rows_.find(v[k].first);
        if (it == rows_.end()) {
            ++k;
            continue;
        }
        v = vec_axpy(v, F_.neg(v[k].second), it->second, F_);
    }
    return v;
}

bool Echelon::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Scalar lead = v.front().second;
    v = vec_scale(v, F_.inv(lead), F_);
    int piv = v.front().first;
    rows_.emplace(piv, std::move(v));
    return true;
}

int rank(const SparseMatrix& m, const Field& F) {
    Echelon e(F);
    std::map<int, SparseVec> cols;
    for (const auto& [rc, val] : m.entries) cols[rc.second].emplace_back(rc.first, val);
    for (auto& [j, col] : cols) e.insert(col);
    return e.rank();
}

std::vector<SparseVec> kernel_basis(const SparseMatrix& m, const Field& F) {
    // Reduce columns while tracking the combination used.
    std::map<int, std::pair<SparseVec, SparseVec>> pivots;  // pivot -> (row, witness)
    std::vector<SparseVec> kernel;
    std::map<int, SparseVec> cols;
    for (const auto& [rc, val] : m.entries) cols[rc.second].emplace_back(rc.first, val);
    for (int j = 0; j < m.cols; ++j) {
        SparseVec v;
        if (auto it = cols.find(j); it != cols.end()) v = it->second;
        SparseVec wit{{j, Scalar(1)}};
        for (size_t k = 0; k < v.size();) {
            auto jt = pivots.find(v[k].first);
            if (jt == pivots.end()) {
                ++k;
                continue;
            }
            Scalar c = F.neg(v[k].second);
            v = vec_axpy(v, c, jt->second.first, F);
            wit = vec_axpy(wit, c, jt->second.second, F);
        }
        if (v.empty()) {
            kernel.push_back(wit);
        } else {
            Scalar invlead = F.inv(v.front().second);
            v = vec_scale(v, invlead, F);
            wit = vec_scale(wit, invlead, F);
            int piv = v.front().first;
            pivots.emplace(piv, std::make_pair(std::move(v), std::move(wit)));
        }
    }
    return kernel;
}

std::vector<SparseVec> image_basis(const SparseMatrix& m, const Field& F) {
    Echelon e(F);
    std::map<int, SparseVec> cols;
    for (const auto& [rc, val] : m.entries) cols[rc.second].emplace_back(rc.first, val);
    for (auto& [j, col] : cols) e.insert(col);
    std::vector<SparseVec> out;
    for (const auto& [p, row] : e.rows()) out.push_back(row);
    return out;
}

int homology_dim(const SparseMatrix& d_in, const SparseMatrix& d_out, const Field& F) {
    if (d_in.cols > 0 && d_out.cols > 0 && d_in.rows != d_out.cols)
        throw Error("homology_dim: shape mismatch");
    if (!d_out.mul(d_in, F).is_zero())
        throw CompositionNotZero("homology_dim: d_out * d_in != 0");
    int dim = d_out.cols;
    int r_out = rank(d_out, F);
    int r_in = rank(d_in, F);
    return (dim - r_out) - r_in;
}

}  // namespace halg
