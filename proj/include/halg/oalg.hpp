#pragma once

// Free and almost-free graded algebras: monomial and word bases,
// differentials extended as derivations, coproducts via generator
// union, folding and cyclic rotation of generator copies.

#include "halg/dgmod.hpp"

namespace halg {

enum class Flavor { Commutative, Associative };

struct Generator {
    std::string name;
    int degree = 0;  // algebra degree; the complex stores -degree
};

// Monomial = generator indices; sorted ascending in the commutative
// flavor, arbitrary word in the associative one.
using Monomial = std::vector<int>;

struct AlgebraSpec {
    Field field = Field::rationals();
    Flavor flavor = Flavor::Commutative;
    std::vector<Generator> gens;
    // generator index -> differential value, raising algebra degree by 1
    std::map<int, std::vector<std::pair<Monomial, Scalar>>> dgen;
};

struct AlgebraBounds {
    int max_weight = 0;  // monomial length
    int max_degree = 0;  // algebra degree
};

// Sorts m into canonical form (commutative flavor) and returns the Koszul
// sign, 0 if an odd generator squares away from characteristic 2.
Scalar canonicalize(const AlgebraSpec& spec, Monomial& m);

struct FreeAlgebra {
    AlgebraSpec spec;
    AlgebraBounds bounds;
    // basis label of algebra degree w sits in homological degree -w
    DGModule complex;
    std::map<Label, Monomial> basis_monomials;

    int degree(const Monomial& m) const;  // algebra degree
    Label label(const Monomial& m) const;
    const Monomial& monomial(const Label& l) const;
    bool in_basis(const Label& l) const { return basis_monomials.count(l) > 0; }
};

// Enumerates the basis within bounds and extends the generator
// differential as a derivation. Throws Error if an image escapes the
// truncated basis, DSquareNonzero (with witness) if d^2 != 0.
FreeAlgebra build_algebra(const AlgebraSpec& spec, const AlgebraBounds& b);

// Product of combinations of basis labels; monomials past either bound
// are dropped (truncation quotient).
LinComb multiply(const FreeAlgebra& A, const LinComb& a, const LinComb& b);
LinComb multiply_monomials(const FreeAlgebra& A, const Monomial& a, const Monomial& b);

// n-fold coproduct A^{|_| n}: n tagged copies of the generators, copy c
// named with c primes; index of generator g in copy c is c*|V| + g.
AlgebraSpec copower_spec(const AlgebraSpec& s, int n);
// Coproduct of distinct algebras: generator union, second operand's
// colliding names primed.
AlgebraSpec coproduct_spec(const AlgebraSpec& a, const AlgebraSpec& b);

// Algebra homomorphism determined by a generator relabeling; signs only
// arise from commutative canonicalization.
ChainMap algebra_hom(const FreeAlgebra& src, const FreeAlgebra& tgt,
                     const std::function<int(int)>& genmap);

// copy inclusion A -> A^{|_| n}
ChainMap copy_inclusion(const FreeAlgebra& A, const FreeAlgebra& An, int copy);
// merge copies i, i+1 of A^{|_| m} into copy i of A^{|_| (m-1)}
ChainMap fold_adjacent(const FreeAlgebra& Am, const FreeAlgebra& Atgt, int m, int i);
// cyclic rotation copy c -> c+1 mod n on A^{|_| n}
ChainMap cyclic_rotation(const FreeAlgebra& An, int n);

}  // namespace halg
