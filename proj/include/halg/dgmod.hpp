#pragma once

// Finite-type graded and differential graded modules over a field,
// with structured basis labels so that maps defined by formulas on
// generators can be evaluated symbolically.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "halg/exactlin.hpp"

namespace halg {

using Label = std::string;
// Formal linear combination of basis labels.
using LinComb = std::map<Label, Scalar>;

LinComb comb_add(const LinComb& a, const LinComb& b, const Field& F);
LinComb comb_scale(const LinComb& a, const Scalar& c, const Field& F);
void comb_accumulate(LinComb& acc, const Label& l, const Scalar& c, const Field& F);

struct GradedModule {
    std::map<int, std::vector<Label>> basis;

    int dim(int n) const;
    const std::vector<Label>& labels(int n) const;
    // -1 if absent in that degree
    int index_of(int n, const Label& l) const;
    void add_label(int n, const Label& l);
    int lowest_degree() const;
    int highest_degree() const;
    int total_dim() const;

  private:
    mutable std::map<int, std::map<Label, int>> index_;
};

struct DGModule {
    Field field = Field::rationals();
    GradedModule gm;
    // d_n : degree n -> degree n-1; rows = dim(n-1), cols = dim(n)
    std::map<int, SparseMatrix> diff;

    int dim(int n) const { return gm.dim(n); }
    SparseMatrix d(int n) const;
    void set_d(int n, SparseMatrix m);

    SparseVec to_vec(int n, const LinComb& c) const;
    LinComb to_comb(int n, const SparseVec& v) const;
    // Differential applied to a combination in degree n.
    LinComb d_comb(int n, const LinComb& c) const;
};

struct DsquareViolation {
    int degree;  // d_{n-1} o d_n != 0 at source degree n
    Label witness;
};

struct DsquareReport {
    std::vector<DsquareViolation> violations;
    bool ok() const { return violations.empty(); }
};

DsquareReport verify_dsquare(const DGModule& m, int lo, int hi);

// Degree-shifting map of complexes. Commutes with differentials up to
// the Koszul sign (-1)^shift: f(dx) = (-1)^shift d(f x).
struct ChainMap {
    int shift = 0;
    std::map<int, SparseMatrix> mats;  // source degree -> matrix

    SparseMatrix mat(const DGModule& src, const DGModule& tgt, int n) const;
    LinComb apply(const DGModule& src, const DGModule& tgt, int n, const LinComb& c,
                  const Field& F) const;
};

bool is_chain_map(const DGModule& src, const DGModule& tgt, const ChainMap& f, int lo, int hi,
                  std::string* why = nullptr);

ChainMap compose(const DGModule& a, const DGModule& b, const DGModule& c, const ChainMap& g,
                 const ChainMap& f, int lo, int hi);

SparseMatrix matrix_from_images(const DGModule& src, int src_deg, const DGModule& tgt, int tgt_deg,
                                const std::function<LinComb(const Label&)>& f);

// Tensor product label bookkeeping: pair(a,b) <-> "(a|b)" with balanced
// parentheses, so nested products can be split back apart.
Label tensor_label(const Label& a, const Label& b);
std::pair<Label, Label> split_tensor_label(const Label& l);

// Basis in degree n = pairs (x,y), |x|+|y| = n; d(x@y) = dx@y + (-1)^|x| x@dy.
DGModule tensor(const DGModule& a, const DGModule& b);

// Factor coordinates of the tensor basis, listed in the same order as the
// labels produced by tensor(). Lets callers act on factors without having
// to look degrees up from labels.
struct TensorPair {
    int da, ia, db, ib;
};
std::map<int, std::vector<TensorPair>> tensor_pairs(const DGModule& a, const DGModule& b);

// f (x) g on tensor(sa,sb) -> tensor(ta,tb), for degree-0 maps (no Koszul sign).
ChainMap tensor_chain_map(const DGModule& sa, const DGModule& sb, const DGModule& ta,
                          const DGModule& tb, const ChainMap& f, const ChainMap& g);

struct HomologySummary {
    int dim = 0;
    std::vector<LinComb> representatives;
};

// Checks d^2 = 0 on [lo, hi] first (CompositionNotZero on failure), then
// reports homology for n in [lo+1, hi-1] where both boundary maps are in range.
std::map<int, HomologySummary> homology(const DGModule& m, int lo, int hi);

// Homology dimension in a single degree without representative extraction.
int homology_dim_at(const DGModule& m, int n);

DGModule suspend(const DGModule& m, int shift);

// Unit complex: k in degree 0.
DGModule unit_complex(const Field& F, const Label& l = "1");

}  // namespace halg
