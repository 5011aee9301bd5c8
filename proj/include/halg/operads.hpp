#pragma once

// Operads in DG modules: the associative operad, the commutative operad,
// and a degree-truncated Barratt-Eccles operad, with composition products,
// symmetric-group actions, augmentations and mechanical identity checks.

#include <limits>

#include "halg/simplicial.hpp"

namespace halg {

// permutations of {0..n-1}; p[i] = image of i
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& a, const Perm& b);  // (a o b)[i] = a[b[i]]
Perm perm_inverse(const Perm& a);
std::vector<Perm> all_perms(int n);  // lexicographic
Label perm_label(const Perm& p);
Perm parse_perm(const Label& l);

// block permutation s<n_1,...,n_k>: permutes consecutive blocks of the
// given sizes the way s permutes {0..k-1}
Perm block_perm(const Perm& s, const std::vector<int>& sizes);
// full block substitution gamma(s; t_1,...,t_k) for permutations
Perm perm_block_subst(const Perm& s, const std::vector<Perm>& args);

struct OperadArg {
    int arity;
    int degree;
    Label label;
};

struct OperadData {
    Field field = Field::rationals();
    std::string name;
    int arity_bound = 0;
    int degree_bound = 0;  // 0 for the degree-0 operads
    std::vector<DGModule> spaces;  // indexed by arity; [0] unused
    Label unit;                    // degree-0 label in spaces[1]
    // right action of Sigma_n on basis labels of arity n
    std::function<LinComb(int, const Label&, const Perm&)> act;
    // composition on a basis element of arity k and degree deg
    std::function<LinComb(int, int, const Label&, const std::vector<OperadArg>&)> compose;
    // composition feature gate (result arity / total degree)
    int comp_arity_gate = std::numeric_limits<int>::max();
    int comp_degree_gate = std::numeric_limits<int>::max();

    const DGModule& space(int n) const { return spaces.at(n); }
};

OperadData assoc_operad(int arity_bound, const Field& F);
OperadData comm_operad(int arity_bound, const Field& F);
// E(n)_d = normalized bar construction of Sigma_n, truncated at the degree
// bound; composition is available for result arity <= 4 and degree <= 4.
OperadData barratt_eccles(int arity_bound, int degree_bound, const Field& F);

// Bar-construction bookkeeping: labels store the inhomogeneous word
// "g0;h1|...|hd" with non-identity letters; the homogeneous tuple is
// (g0, g0 h1, g0 h1 h2, ...).
std::vector<Perm> be_tuple(int n, const Label& l);
// canonical label of a homogeneous tuple; empty string if degenerate
Label be_word_label(const std::vector<Perm>& t);
// bar differential evaluated symbolically on a label (no space needed)
LinComb be_diff(int n, const Label& l, const Field& F);
// contracting homotopy h(g0,...,gd) = (id, g0, ..., gd); satisfies
// dh + hd = id - unit*augmentation, which certifies acyclicity
LinComb be_contraction(int n, const Label& l);

struct OperadMorphismData {
    std::vector<ChainMap> maps;  // indexed by arity
};

OperadMorphismData augmentation_assoc_to_comm(const OperadData& A, const OperadData& C);
OperadMorphismData augmentation_be_to_comm(const OperadData& E, const OperadData& C);
OperadMorphismData inclusion_assoc_to_be(const OperadData& A, const OperadData& E);

// Verifies d^2 = 0, unit laws, action laws, equivariance (on degree-0
// arguments), associativity and the chain-map property of the composition,
// on exhaustive small instances plus random samples.
IdentityReport check_operad(const OperadData& o, int max_arity, int max_degree, int samples = 40,
                            unsigned seed = 1);

}  // namespace halg
