#pragma once

// Line-oriented algebra description files shared by the library and the
// command line: field, flavor, generators with degrees, differentials as
// polynomial expressions in the generators, truncation bounds.

#include <iosfwd>

#include "halg/oalg.hpp"

namespace halg {

struct AlgebraFile {
    AlgebraSpec spec;
    AlgebraBounds bounds{0, 0};
    bool has_weight = false;
    bool has_degree = false;
};

// field Q | F<p>; flavor commutative | associative; generator <name> <deg>;
// d <name> = <poly>; max_weight <n>; max_degree <n>; '#' comments
AlgebraFile parse_algebra(std::istream& in);
AlgebraFile parse_algebra_string(const std::string& text);

// polynomial: +/- separated terms, each a '*'-separated product of
// rational literals and generator names with optional '^' powers
std::vector<std::pair<Monomial, Scalar>> parse_poly(const AlgebraSpec& spec,
                                                    const std::string& expr, int line);

Field parse_field(const std::string& name);

}  // namespace halg
