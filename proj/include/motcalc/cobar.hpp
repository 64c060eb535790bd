#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "motcalc/chart.hpp"
#include "motcalc/modules.hpp"
#include "motcalc/resolution.hpp"

// Cobar-complex oracle: the reduced cotensor complex of the dual coalgebra,
// computing the same Ext as the minimal resolutions but by an independent
// route.  Dual-side elements are graded homologically; a tau coefficient on
// the dual side lowers the weight by one.

namespace motcalc {

// A coalgebra given by a finite alphabet of non-unit basis elements with a
// reduced coproduct table.
struct CobarContext {
    Ground ground = Ground::F2;
    int max_t = 0;
    std::vector<Bidegree> deg;
    std::vector<std::string> names;
    // reduced coproduct of element k: sum of tau^c (left x right)
    std::vector<std::vector<std::tuple<int, int, int>>> coproduct;
};

// Dual coalgebra of a named finite subalgebra, from its multiplication.
CobarContext cobar_dual(AlgebraName alg, int max_t);

// Degree-truncated Milnor-basis duals of the full Steenrod algebras.
enum class MilnorKind { classical, motivic, ctau };
CobarContext cobar_milnor(MilnorKind kind, int max_t);

// Dual comodule of a finitely presented module.
struct CobarComodule {
    std::vector<Bidegree> deg;
    std::vector<std::string> names;
    // reduced coaction on cell j: sum of tau^c (alphabet element x cell)
    std::vector<std::vector<std::tuple<int, int, int>>> coaction;
};

CobarComodule dual_comodule(const CobarContext& ctx, const FPModule& m);
CobarComodule trivial_comodule();

class CobarComplex {
public:
    CobarComplex(CobarContext ctx, CobarComodule com, Bounds bounds);

    const CobarContext& context() const { return ctx_; }
    Bounds bounds() const { return bounds_; }

    // basis element of C^s at (t,w): word of alphabet letters, a comodule
    // cell, and a tau power c with sum(w_i) + w_cell - c = w
    struct Elem {
        std::vector<int> word;
        int cell = 0;
        int c = 0;
        friend bool operator<(const Elem& a, const Elem& b)
        {
            if (a.word != b.word) return a.word < b.word;
            if (a.cell != b.cell) return a.cell < b.cell;
            return a.c < b.c;
        }
    };

    struct Slot {
        std::vector<Elem> basis;
        std::map<Elem, int> index;
    };

    const Slot& slot(int s, int t, int w) const;
    const BitMatrix& d_matrix(int s, int t, int w) const;  // C^s -> C^{s+1}

    // F2 dimension of the cohomology at (s, t, w).
    int cohomology_dim(int s, int t, int w) const;

    // Cocycle representatives at (s,t,w): vectors in slot coordinates whose
    // classes form a basis of the cohomology.
    std::vector<BitVector> cohomology_basis(int s, int t, int w) const;

    // Reduce a cocycle modulo coboundaries (coordinates of the class in the
    // cohomology basis returned above).
    BitVector class_of(int s, int t, int w, const BitVector& cocycle) const;

    // Concatenation product C^p (x) C^q -> C^{p+q} for the trivial
    // comodule; inputs in slot coordinates.
    BitVector product(int sa, int ta, int wa, const BitVector& a, int sb, int tb, int wb,
                      const BitVector& b) const;

private:
    CobarContext ctx_;
    CobarComodule com_;
    Bounds bounds_;
    mutable std::map<std::tuple<int, int, int>, Slot> slot_cache_;
    mutable std::map<std::tuple<int, int, int>, BitMatrix> dmat_cache_;
};

// Cohomology dot counts over a window, for oracle comparisons.
std::map<Trigrade, int> cobar_cohomology(const CobarComplex& cx, int s_max, int t_lo,
                                         int t_hi, int w_lo, int w_hi);

}  // namespace motcalc
