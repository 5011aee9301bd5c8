#pragma once

// Hochschild complexes: the classical reduced complex with its shuffle
// product, the unreduced simplicial version with the comparison map, the
// cyclic simplicial algebra of an almost-free algebra, its normalization,
// and the positive-block subcomplex with splitting and comparison checks.

#include "halg/oalg.hpp"
#include "halg/simplicial.hpp"

namespace halg {

// Unital augmented associative algebra on an explicit basis; basis[0] is
// the unit and the rest spans the augmentation kernel.
struct FiniteAlgebra {
    Field field = Field::rationals();
    std::vector<Label> labels;
    std::vector<int> degrees;  // homological
    std::vector<std::vector<LinComb>> mult;
    std::vector<LinComb> dval;  // internal differential, lowers degree by 1

    int dim() const { return static_cast<int>(labels.size()); }
    int index_of(const Label& l) const;
};

FiniteAlgebra dual_numbers(const Field& F);          // k[e]/e^2, |e| = 0
FiniteAlgebra exterior_on_one(const Field& F, int degree);  // one odd generator
FiniteAlgebra from_free(const FreeAlgebra& A);
DGModule algebra_complex(const FiniteAlgebra& A);

// Reduced complex: words a0[sa1|...|sak], letters in the augmentation
// kernel; degree = |a0| + sum (|a_i|+1), truncated to length <= L and
// degree window [lo, hi] (the window quotient is exact since d lowers
// degree).
struct ClassicalComplex {
    FiniteAlgebra A;
    int max_length = 0;
    int lo = 0, hi = 0;
    DGModule complex;
    std::map<Label, std::vector<int>> words;  // label -> (a0, letters...)
};

ClassicalComplex classical_complex(const FiniteAlgebra& A, int max_length, int lo, int hi);

Label word_label(const FiniteAlgebra& A, const std::vector<int>& w);

// shuffle product on words of a commutative algebra
LinComb classical_mul(const ClassicalComplex& c, const Label& a, const Label& b);
LinComb classical_mul(const ClassicalComplex& c, const LinComb& a, const LinComb& b);

// Simplicial algebra with levels A^{(x) n+1}, faces by multiplication of
// adjacent slots (cyclic wraparound with Koszul sign), degeneracies by
// unit insertion; plus its normalization and the comparison chain map to
// the reduced complex sending a0 (x) a1 ... to a0[sa1|...|san].
struct Unreduced {
    SimplicialDGModule sim;
    Normalized norm;
    ChainMap compare;  // norm.complex -> target.complex
};

Unreduced unreduced_complex(const FiniteAlgebra& A, int P, const ClassicalComplex& target);

// Cyclic simplicial algebra of an almost-free algebra: level n is the
// (n+1)-fold coproduct, faces fold adjacent copies (the last face rotates
// first), degeneracies skip a copy.
struct CyclicSimplicial {
    AlgebraSpec base;
    AlgebraBounds bounds;
    int P = 0;
    std::vector<FreeAlgebra> levels;
    SimplicialDGModule sim;
};

CyclicSimplicial cyclic_simplicial(const AlgebraSpec& s, const AlgebraBounds& b, int P);

// Normalization plus the subcomplex of positive blocks: level-p tot
// coordinates whose monomial uses every one of the p+1 copies (level 0
// keeps everything).
struct OperadicHC {
    CyclicSimplicial cyc;
    Normalized norm;
    DGModule plus;                            // Tot of the positive blocks
    std::map<int, std::vector<int>> plus_coords;  // tot-degree -> tot indices
    ChainMap plus_to_norm;
};

OperadicHC operadic_hc(const AlgebraSpec& s, const AlgebraBounds& b, int P);

// positive-block label test: every copy of the level appears
bool is_positive_block(const CyclicSimplicial& c, int p, const Label& mono_label);

// The basis-label comparison: normalization representatives are exactly
// the positive-block coordinates and the projection restricts to the
// identity on them, compatibly with differentials.
IdentityReport check_label_bijection(const OperadicHC& h);

// Degree-0 levels split off: no differential entry couples level-0
// coordinates with positive-level ones. Throws MixingDetected.
void check_splitting(const OperadicHC& h);

// Comparison chain map from the normalized cyclic complex to the reduced
// complex of the same algebra, through the copy-block decomposition.
ChainMap block_compare(const OperadicHC& h, const ClassicalComplex& target);

// rank of the map induced on degree-n homology by a degree-0 chain map
int induced_homology_rank(const DGModule& src, const DGModule& tgt, const ChainMap& f, int n);

// homology dimensions with stability flags: recomputed with the length
// bound raised and the window widened by one
std::map<int, std::pair<int, bool>> hh_stable(const FiniteAlgebra& A, int max_length, int lo,
                                              int hi);

}  // namespace halg
