#pragma once

// Cosimplicial loop-space model: levels X^{n+1} with duplication/wraparound
// cofaces and deletion codegeneracies, cochain levels assembled into a
// simplicial DG module, and its normalized (co)totalization with Betti
// extraction over a truncated level range.

#include "halg/simplicial.hpp"
#include "halg/sset.hpp"

namespace halg {

// X^m truncated to simplex dimension <= qmax; nondegenerate simplices are
// coordinate tuples with no common collapse.
struct PowerLevel {
    int m = 0, qmax = 0;
    std::vector<std::vector<std::vector<SimplexRef>>> tuples;  // [dim][j][coord]
    std::vector<std::vector<Label>> labels;                    // [dim][j]

    int top() const { return static_cast<int>(labels.size()) - 1; }
    int count(int q) const {
        return (q < 0 || q > top()) ? 0 : static_cast<int>(labels[q].size());
    }
    int index_of(int q, const Label& l) const;

  private:
    mutable std::vector<std::map<Label, int>> index_;
};

PowerLevel tuple_power(const FiniteSimplicialSet& x, int m, int qmax,
                       long cap = kDefaultSimplexCap);

Label power_tuple_label(const FiniteSimplicialSet& x, const std::vector<SimplexRef>& t);

// image of tuple j (dimension q) under the coordinate selection sel
// (target coordinate k takes source coordinate sel[k]); -1 if the image
// is degenerate in the target power
int selection_image(const FiniteSimplicialSet& x, const PowerLevel& src, int q, int j,
                    const std::vector<int>& sel, const PowerLevel& tgt);

// selection of the coface X^n -> X^{n+1}: duplicate coordinate i for
// i < n, append coordinate 0 for i = n
std::vector<int> jones_coface_selection(int i, int n);
// selection of the codegeneracy X^{n+2} -> X^{n+1}: delete coordinate j+1
std::vector<int> jones_codegen_selection(int j, int n);

struct JonesCosimplicial {
    FiniteSimplicialSet base;
    int P = 0;
    int qmax = 0;
    std::vector<PowerLevel> levels;  // levels[p] = X^{p+1}
};

// qmax < 0 means no truncation beyond the top dimension of X^{P+1}
JonesCosimplicial jones_model(const FiniteSimplicialSet& x, int P, int qmax = -1,
                              long cap = kDefaultSimplexCap);

// cosimplicial identities on the selection maps, levels up to P
IdentityReport check_coface_identities(int P);

struct CochainCototal {
    // level p = normalized cochains of X^{p+1} (cochain degree q stored at
    // -q), faces = coface pullbacks, degeneracies = codegeneracy pullbacks
    SimplicialDGModule sim;
    // cototal D = sum (-1)^i d_i* + (-1)^p delta, conormalized
    Normalized norm;
};

CochainCototal cototal(const JonesCosimplicial& j, const Field& F);

// Betti numbers of the conormalized cototal at cohomological degrees
// 0..mmax, with stability flags: stable means the dimension agrees with
// the level bound lowered by one and m < P - dim X.
// Throws NotSimplyConnectedProxy when H_1(X) != 0 over F.
std::map<int, std::pair<int, bool>> loop_betti(const FiniteSimplicialSet& x, const Field& F, int P,
                                               int mmax, long cap = kDefaultSimplexCap);

}  // namespace halg
