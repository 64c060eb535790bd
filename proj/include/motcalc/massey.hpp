#pragma once

#include <string>
#include <vector>

#include "motcalc/cobar.hpp"

// Triple Massey products <a, b, c> in the truncated cobar complex, with
// nullhomotopies found by linear solves and indeterminacy reported in full.

namespace motcalc {

// A cocycle with its trigrade, in slot coordinates of a CobarComplex.
struct Cocycle {
    int s = 0;
    int t = 0;
    int w = 0;
    BitVector vec;
};

struct MasseyResult {
    bool defined = false;
    std::string error;     // set when a product fails to vanish
    Trigrade deg;          // degree of the value: s = sa+sb+sc-1, t/w additive
    BitVector value;       // class coordinates in the cohomology basis at deg
    // basis of the indeterminacy subspace a*Ext + Ext*c, as class coordinates
    std::vector<BitVector> indeterminacy;
};

MasseyResult massey_triple(const CobarComplex& cx, const Cocycle& a, const Cocycle& b,
                           const Cocycle& c);

// Exhaustive check: enumerate every pair of bounding cochains and collect
// the set of value classes.  Returns the affine-difference span, which must
// equal the indeterminacy subspace.  Only usable when the nullhomotopy
// spaces are small; `max_bits` caps the enumeration.
std::vector<BitVector> massey_bruteforce_span(const CobarComplex& cx, const Cocycle& a,
                                              const Cocycle& b, const Cocycle& c,
                                              int max_bits = 18);

// Convenience: the first cohomology class at (s,t,w) as a cocycle (throws
// if the group vanishes); index selects among basis classes.
Cocycle cohomology_class(const CobarComplex& cx, int s, int t, int w, int index = 0);

// Cup product of classes, returned as class coordinates at the target.
BitVector class_product(const CobarComplex& cx, const Cocycle& a, const Cocycle& b);

}  // namespace motcalc
