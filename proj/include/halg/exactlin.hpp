#pragma once

// Exact sparse linear algebra over Q and prime fields.

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "halg/errors.hpp"

namespace halg {

using Scalar = mpq_class;

// Ground field: the rationals or F_p. Elements of F_p are kept as
// integers in [0, p).
class Field {
  public:
    enum class Kind { Rationals, Prime };

    static Field rationals() { return Field(Kind::Rationals, 0); }
    static Field prime(unsigned long p);

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::Rationals; }
    unsigned long p() const { return p_; }
    unsigned long characteristic() const { return is_rational() ? 0 : p_; }

    Scalar normalize(const Scalar& x) const;
    Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
    Scalar neg(const Scalar& a) const { return normalize(-a); }
    Scalar inv(const Scalar& a) const;
    bool is_zero(const Scalar& a) const { return normalize(a) == 0; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    std::string name() const;

  private:
    Field(Kind k, unsigned long p) : kind_(k), p_(p) {}
    Kind kind_;
    unsigned long p_;
};

// Sparse vector, entries sorted by index, no zeros stored.
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec vec_add(const SparseVec& a, const SparseVec& b, const Field& F);
SparseVec vec_scale(const SparseVec& a, const Scalar& c, const Field& F);
// a + c*b
SparseVec vec_axpy(const SparseVec& a, const Scalar& c, const SparseVec& b, const Field& F);

struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::map<std::pair<int, int>, Scalar> entries;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c) {}

    static SparseMatrix identity(int n);
    static SparseMatrix zero(int r, int c) { return SparseMatrix(r, c); }

    void set(int r, int c, const Scalar& v, const Field& F);
    void add_to(int r, int c, const Scalar& v, const Field& F);
    Scalar get(int r, int c) const;
    bool is_zero() const { return entries.empty(); }
    size_t nnz() const { return entries.size(); }

    SparseVec column(int c) const;
    void set_column(int c, const SparseVec& v);

    SparseVec apply(const SparseVec& x, const Field& F) const;
    SparseMatrix mul(const SparseMatrix& other, const Field& F) const;
    SparseMatrix add(const SparseMatrix& other, const Field& F) const;
    SparseMatrix scale(const Scalar& c, const Field& F) const;
    SparseMatrix transpose() const;

    bool operator==(const SparseMatrix& o) const {
        return rows == o.rows && cols == o.cols && entries == o.entries;
    }
};

// Incremental row-echelon accumulator. Pivot of a vector is its first
// nonzero index, so insertion order fixes the result deterministically.
class Echelon {
  public:
    explicit Echelon(const Field& F) : F_(F) {}

    // Reduces v against the stored rows; returns the residual.
    SparseVec reduce(SparseVec v) const;
    // Reduces and inserts if independent. Returns true if rank grew.
    bool insert(SparseVec v);
    int rank() const { return static_cast<int>(rows_.size()); }
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    const std::map<int, SparseVec>& rows() const { return rows_; }

  private:
    const Field& F_;
    std::map<int, SparseVec> rows_;  // pivot index -> normalized row
};

int rank(const SparseMatrix& m, const Field& F);

// Exact null-space basis; size == cols - rank.
std::vector<SparseVec> kernel_basis(const SparseMatrix& m, const Field& F);

// Column-space basis (as vectors of length m.rows).
std::vector<SparseVec> image_basis(const SparseMatrix& m, const Field& F);

// dim ker(d_out) - rank(d_in). Throws CompositionNotZero unless
// d_out * d_in == 0.
int homology_dim(const SparseMatrix& d_in, const SparseMatrix& d_out, const Field& F);

}  // namespace halg
