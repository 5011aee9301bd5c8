#pragma once

// Simplicial objects in differential graded modules: total complex,
// degenerate subcomplex, normalization, shuffle products.

#include "halg/dgmod.hpp"

namespace halg {

// Truncated simplicial DG module: levels 0..P with faces d_i and
// degeneracies s_i as degree-0 chain maps.
struct SimplicialDGModule {
    Field field = Field::rationals();
    int level_bound = 0;  // P
    std::vector<DGModule> levels;
    // faces[n][i] : level n -> level n-1 (1 <= n <= P, 0 <= i <= n)
    std::vector<std::vector<ChainMap>> faces;
    // degens[n][i] : level n -> level n+1 (0 <= n < P, 0 <= i <= n)
    std::vector<std::vector<ChainMap>> degens;

    const DGModule& level(int n) const { return levels.at(n); }
    const ChainMap& face(int n, int i) const { return faces.at(n).at(i); }
    const ChainMap& degen(int n, int i) const { return degens.at(n).at(i); }
};

// Builds levels/faces/degens from per-level bases and symbolic images.
// face(n, i, label) and degen(n, i, label) give images of level-n basis
// labels; internal_d(n, label) the internal differential.
SimplicialDGModule build_simplicial(
    const Field& F, int P, const std::function<DGModule(int)>& level,
    const std::function<LinComb(int, int, const Label&)>& face,
    const std::function<LinComb(int, int, const Label&)>& degen);

struct IdentityReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

IdentityReport check_simplicial_identities(const SimplicialDGModule& s);

Label tot_label(int p, const Label& l);
std::pair<int, Label> split_tot_label(const Label& l);

// Sign placement for the total differential.
enum class TotSign {
    // d = d_A + (-1)^p sum_i (-1)^i d_i
    InternalFirst,
    // d = sum_i (-1)^i d_i + (-1)^p d_A
    FacesFirst,
};

struct TotalComplex {
    DGModule complex;
    int level_bound = 0;
    TotSign sign = TotSign::InternalFirst;
};

TotalComplex tot(const SimplicialDGModule& s, int P, TotSign sign = TotSign::InternalFirst);

// Span of all degeneracy images inside tot(s, P), with closure check.
struct DegenerateSub {
    // total degree -> echelon rows spanning the degenerate subspace
    std::map<int, std::vector<SparseVec>> span;
    int dim(int n) const;
};

DegenerateSub degenerate_subcomplex(const SimplicialDGModule& s, int P,
                                    TotSign sign = TotSign::InternalFirst);

struct Normalized {
    TotalComplex total;
    DGModule complex;     // the quotient N = Tot/D
    ChainMap projection;  // Tot -> N, degree 0
    // per total degree, indices of Tot basis vectors chosen as representatives
    std::map<int, std::vector<int>> representative_indices;
};

Normalized normalize(const SimplicialDGModule& s, int P, TotSign sign = TotSign::InternalFirst);

// Levelwise tensor product: level n = a_n (x) b_n, diagonal structure maps.
SimplicialDGModule levelwise_product(const SimplicialDGModule& a, const SimplicialDGModule& b);

// n-fold levelwise power a x a x ... x a (m factors, m >= 1).
SimplicialDGModule levelwise_power(const SimplicialDGModule& a, int m);

// Eilenberg-Zilber shuffle Tot(a) (x) Tot(b) -> Tot(a x b). The returned
// map's domain is tensor(tot(a), tot(b)) and target tot(levelwise_product).
struct ShuffleMap {
    DGModule domain;
    DGModule target;
    ChainMap map;
};

ShuffleMap shuffle(const SimplicialDGModule& a, const SimplicialDGModule& b, int P);

// k-fold iterated shuffle Tot(a)^{(x)(k+1)} -> Tot(a^{x(k+1)}).
ShuffleMap iterated_shuffle(int k, const SimplicialDGModule& a, int P);

// Constant simplicial module on a complex (all structure maps identity).
SimplicialDGModule constant_simplicial(const DGModule& m, int P);

}  // namespace halg
