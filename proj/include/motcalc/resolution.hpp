#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "motcalc/chart.hpp"
#include "motcalc/modules.hpp"
#include "motcalc/steenrod.hpp"

// Minimal free resolutions over the finite subalgebras, trigraded slot by
// slot.  Over the ground M2 each trihomogeneous piece is an F2 vector
// space; tau acts as a weight -1 endomorphism.  Minimality is with respect
// to the ideal generated by the Steenrod generators together with (tau):
// differential entries may be tau-multiples of generators but never carry
// a tau^0 unit.

namespace motcalc {

struct Bounds {
    int max_s = 10;
    int max_t = 20;
};

struct ResGen {
    int s = 0;
    Bidegree deg;
    std::string name;
};

// d(gen) = sum of coeff * target, coeff an element of the algebra with tau
// powers.  For s = 0 the targets are module generators and the coefficients
// are ground coefficients embedded as tau^c * 1.
struct ResEntry {
    int target = 0;
    AlgebraElement coeff;
};

class Resolution {
public:
    Resolution(FPModule m, Bounds b);

    const FPModule& module() const { return module_; }
    AlgebraName algebra() const { return module_.algebra; }
    Bounds bounds() const { return bounds_; }

    int stages() const { return int(gens_.size()); }
    const std::vector<ResGen>& gens(int s) const { return gens_[s]; }
    const std::vector<ResEntry>& differential(int s, int i) const { return diff_[s][i]; }

    // True when no differential entry carries a tau^0 unit coefficient.
    bool is_minimal() const;

    // Verifies d(d(gen)) = 0 for every generator, recomputed from scratch.
    bool dd_is_zero() const;

    // F2 dimension of Ext^{s,t,w} computed from the dual complex, honouring
    // tau torsion.
    int ext_f2_dim(int s, int t, int w) const;

    // Whether (s, t) lies inside the reliable region.
    bool complete_for(int s, int t) const { return s <= bounds_.max_s && t <= bounds_.max_t; }

    // --- slot machinery (shared with the chain-map lifter) ---

    // Basis element of a slot of F_s (or of the module when s = -1):
    // tau^c * word * gen, word indexed into the algebra basis (unused when
    // s = -1).
    struct SlotElem {
        int gen = 0;
        int word = 0;
        int c = 0;
        friend bool operator<(const SlotElem& a, const SlotElem& b)
        {
            if (a.gen != b.gen) return a.gen < b.gen;
            if (a.word != b.word) return a.word < b.word;
            return a.c < b.c;
        }
    };

    struct Slot {
        std::vector<SlotElem> basis;
        std::map<std::tuple<int, int, int>, int> index;  // (gen, word, c) -> column
    };

    const Slot& slot(int s, int t, int w) const;

    // Image of a slot basis element of F_s under d, as coordinates in
    // slot(s-1, t, w).
    BitVector apply_d(int s, int t, int w, const SlotElem& e) const;

    // Matrix of d : F_s(t,w) -> F_{s-1}(t,w); rows = target basis, cols =
    // source basis.
    const BitMatrix& d_matrix(int s, int t, int w) const;

private:
    void build();
    void extend(int s);  // build F_{s+1} covering ker(d_s)
    void name_stage(int s);
    std::vector<std::pair<int, int>> act_word(const Word& u, int cell, int tau) const;

    FPModule module_;
    Bounds bounds_;
    const SubalgebraPresentation* pres_;
    std::vector<Bidegree> word_degs_;

    std::vector<std::vector<ResGen>> gens_;
    std::vector<std::vector<std::vector<ResEntry>>> diff_;
    std::vector<std::vector<std::vector<int>>> op_tables_;

    mutable std::map<std::tuple<int, int, int>, Slot> slot_cache_;
    mutable std::map<std::tuple<int, int, int>, BitMatrix> dmat_cache_;
};

// One dot per resolution generator; h_i-product edges by Yoneda composition
// with lifted chain maps against the resolution of the trivial module.
ExtChart ext_chart(const Resolution& r, bool with_edges = true);

// Edge label for an Ext^1 class of the given algebra at the given bidegree.
std::string h_label(AlgebraName alg, Bidegree deg);

}  // namespace motcalc
