#pragma once

// Finite simplicial sets presented by their nondegenerate simplices.
// Arbitrary simplices are pairs (nondegenerate base, monotone surjection);
// face/degeneracy calculus works on those pairs.

#include <iosfwd>

#include "halg/dgmod.hpp"
#include "halg/simplicial.hpp"

namespace halg {

// A simplex of dimension map.size()-1 with values in [0, base_dim]; the
// surjection is the identity exactly when the simplex is nondegenerate.
struct SimplexRef {
    int base_dim = 0;
    int base_index = 0;
    std::vector<int> map;

    int dim() const { return static_cast<int>(map.size()) - 1; }
    bool nondegenerate() const { return dim() == base_dim; }
    bool operator==(const SimplexRef& o) const {
        return base_dim == o.base_dim && base_index == o.base_index && map == o.map;
    }
};

SimplexRef nondeg_ref(int dim, int index);

struct FiniteSimplicialSet {
    // labels[n] = nondegenerate n-simplices, in a fixed order
    std::vector<std::vector<std::string>> labels;
    // faces[n][j][i] = d_i of the j-th nondegenerate n-simplex (n >= 1)
    std::vector<std::vector<std::vector<SimplexRef>>> faces;

    int top_dim() const { return static_cast<int>(labels.size()) - 1; }
    int count(int n) const {
        return (n < 0 || n > top_dim()) ? 0 : static_cast<int>(labels[n].size());
    }
    int index_of(int n, const std::string& l) const;
    long total_count() const;

  private:
    mutable std::vector<std::map<std::string, int>> index_;
};

// r composed with an arbitrary monotone map f (values in [0, r.dim()]),
// renormalized to canonical form via the stored faces.
SimplexRef pullback(const FiniteSimplicialSet& x, const SimplexRef& r, const std::vector<int>& f);
SimplexRef face_of(const FiniteSimplicialSet& x, const SimplexRef& r, int i);
SimplexRef degen_of(const SimplexRef& r, int j);

// descending degeneracy word of the surjection (empty iff nondegenerate)
std::vector<int> degeneracy_word(const SimplexRef& r);
std::string ref_label(const FiniteSimplicialSet& x, const SimplexRef& r);

IdentityReport check_sset(const FiniteSimplicialSet& x);

// Builds the nondegenerate presentation from a levelwise description given
// up to level N (inclusive): element labels per level and total face/
// degeneracy functions on labels.
FiniteSimplicialSet from_levelwise(
    int N, const std::vector<std::vector<std::string>>& levels,
    const std::function<std::string(int, int, const std::string&)>& face,
    const std::function<std::string(int, int, const std::string&)>& degen);

FiniteSimplicialSet point();
// Simplicial circle: level n = Z/(n+1), one nondegenerate cell in dims 0, 1.
FiniteSimplicialSet circle();
FiniteSimplicialSet standard_simplex(int n);
FiniteSimplicialSet boundary_sphere(int n);  // boundary of the n-simplex
// one vertex and one n-cell with all faces collapsed (n >= 1)
FiniteSimplicialSet sphere_one_cell(int n);

// Simplicial complex from its facet list; vertices ordered by label.
FiniteSimplicialSet from_facets(const std::vector<std::vector<std::string>>& facets);
// one facet per line, whitespace-separated vertex labels, '#' comments
FiniteSimplicialSet parse_facets(std::istream& in);
FiniteSimplicialSet parse_facets_string(const std::string& text);

inline constexpr long kDefaultSimplexCap = 200000;

// Categorical product; nondegenerate m-simplices are the coordinate pairs
// whose degeneracy words are disjoint. Throws SizeLimitExceeded when any
// dimension exceeds the cap.
FiniteSimplicialSet product(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y,
                            long cap = kDefaultSimplexCap);
// m-fold product x^m, left-associated labels
FiniteSimplicialSet power(const FiniteSimplicialSet& x, int m, long cap = kDefaultSimplexCap);

long euler_characteristic(const FiniteSimplicialSet& x);

// degree-n basis = nondegenerate n-simplices; d = alternating face sum with
// degenerate faces dropped
DGModule normalized_chains(const FiniteSimplicialSet& x, const Field& F);
// dual complex, cochain degree q stored as homological degree -q;
// differential = transpose of the chain differential
DGModule normalized_cochains(const FiniteSimplicialSet& x, const Field& F);

}  // namespace halg
