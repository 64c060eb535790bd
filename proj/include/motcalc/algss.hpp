#pragma once

#include <string>
#include <vector>

#include "motcalc/chart.hpp"
#include "motcalc/modules.hpp"

// The Tate-splitting computations: decompose truncated lens modules into
// B//B0 summands, predict the direct-sum Ext, and verify the splitting
// against the computed chart at desk scale.
//
// The inverse limit over deeper and deeper stunted spectra is represented
// by truncation stability: splitting_check resolves a cell range padded
// well beyond the comparison window (one extra period per homological
// degree of slack) so that the window content has stabilized, and the
// window is compared per trigrade.  The charts are those of the suspended
// module Sigma^{1,0} L, whose cell s sits in (s, floor(s/2)).

namespace motcalc {

enum class SplitPair { kq, wko, bpgl1, wbp1 };

SplitPair split_pair_from_algebras(AlgebraName b, AlgebraName b0);
AlgebraName split_algebra(SplitPair p);
AlgebraName split_subalgebra(SplitPair p);

struct SplitSummand {
    Bidegree shift;   // suspension (sigma, omega)
    int cell = 0;     // generating cell of the lens range it is attached to
};

struct SplitPrediction {
    SplitPair pair;
    CellRange cells;
    std::vector<SplitSummand> summands;
    // cells whose formula-level action leaves the range (truncation debt)
    std::vector<int> remainder;
};

// One suspension per cell of the range on which every generator of B acts
// trivially (formula level): the kq pair contributes (4i, 2i) from cells
// 4i; the wko pair (8i, 4i) from cells 8i and (8i-1, 4i-1) from cells
// 8i+1; the exterior pairs analogously with half the period.
SplitPrediction free_summand_shifts(CellRange cells, SplitPair pair);

// Tower dots of the predicted direct sum inside a window.  h0-type pairs
// give vertical F2[tau][h0] towers (tau-expanded downward in weight);
// w0-type pairs give climbing F2[w0] towers of single F2 dots.
bool split_tower_vertical(SplitPair p);
int predicted_dim(const std::vector<SplitSummand>& summands, SplitPair p, int s, int t, int w);

struct SplitWindow {
    int stem_lo = 0;
    int stem_hi = 0;
    int s_max = 6;
    int w_lo = -12;
    int w_hi = 8;
};

struct SplitReport {
    bool pass = false;
    std::vector<SplitSummand> summands;  // summands entering the window
    std::vector<std::string> lines;      // per-trigrade table rows `s t w computed predicted`
    std::vector<std::string> mismatches;
    std::string text() const;
};

// Verifies per-trigrade rank equality between the computed Ext of the
// (suspended, internally padded) lens module over B and the predicted
// direct sum of shifted Ext-over-B0 towers, on the given window.
SplitReport splitting_check(CellRange cells, SplitPair pair, SplitWindow window);

// Truncation stability: enlarging the range one period adds exactly the
// predicted new summands and changes nothing in the common window.
bool truncation_stable(CellRange cells, SplitPair pair, SplitWindow window);

// Degree argument of the collapse: within the predicted dots, no pair of
// dots differs by the algebraic-spectral-sequence differential trigrade
// (-1, -1, 0).
bool no_differential_pairs(const std::vector<SplitSummand>& summands, SplitPair p,
                           SplitWindow window);

}  // namespace motcalc
