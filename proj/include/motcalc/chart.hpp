#pragma once

#include <map>
#include <string>
#include <vector>

#include "motcalc/f2core.hpp"

namespace motcalc {

struct ChartDot {
    Trigrade deg;
    std::string name;
};

struct ChartEdge {
    std::string label;  // h0, h1, h2, tau, or an operator name
    int src = 0;        // dot indices
    int dst = 0;
};

// Trigraded set of dots with product/periodicity edges.
struct ExtChart {
    std::vector<ChartDot> dots;
    std::vector<ChartEdge> edges;

    std::map<Trigrade, int> dot_counts() const;
    // Dot counts restricted to a stem/filtration window.
    std::map<Trigrade, int> dot_counts(int stem_lo, int stem_hi, int s_max) const;

    int find_dot(Trigrade deg) const;  // first dot at deg, or -1

    void sort_canonical();
};

// Per-trigrade multiset equality of two charts inside a window, with a
// human-readable mismatch list.
struct ChartDiff {
    bool equal = true;
    std::vector<std::string> mismatches;
};

ChartDiff compare_dots(const ExtChart& a, const ExtChart& b, int stem_lo, int stem_hi,
                       int s_max);

// Edge multisets keyed by (label, source trigrade, target trigrade).
ChartDiff compare_edges(const ExtChart& a, const ExtChart& b, int stem_lo, int stem_hi,
                        int s_max);

// The doubling functor on charts: classical dot (s, t) -> (s, 2t, t), edge
// labels h_i -> h_{i+1}.  Image dots satisfy stem + filtration - 2*weight = 0.
ExtChart regrade_double(const ExtChart& classical);

}  // namespace motcalc
