#pragma once

#include <optional>
#include <string>
#include <vector>

#include "motcalc/steenrod.hpp"

// Constructors for the graded modules the computations run over: stunted
// lens spectra, the finite complexes V(0), C(eta), C = L^1_{-2}, their
// Ctau reductions, suspensions and smash products.
//
// Cell convention: the stunted lens module on cells bottom..top has one
// generator per integer dimension d.  Even cells v^k sit in (2k, k) and odd
// cells u v^k in (2k+1, k+1); with these weights the Voevodsky action
// formulas carry no tau coefficient at all (the u^2 = tau v relation lives
// in the ring structure, not the module).  The floor(s/2)-weight picture of
// the suspended spectrum used by the spectral-sequence modules is
// suspend(lens_module(...), {1,0}), whose cell s sits in (s, floor(s/2)).

namespace motcalc {

struct CellRange {
    int bottom = 0;
    int top = 0;

    int size() const { return top - bottom + 1; }
    bool contains(int d) const { return bottom <= d && d <= top; }
};

// One action entry: op_gen applied to generator src equals
// tau^tau_pow * (generator dst).
struct ActionTriple {
    int op_gen = 0;
    int src = 0;
    int dst = 0;
    int tau_pow = 0;
};

struct FPModule {
    Ground ground = Ground::F2;
    AlgebraName algebra = AlgebraName::A1_cl;
    std::vector<std::string> gen_names;
    std::vector<Bidegree> gen_degrees;
    std::vector<ActionTriple> action;

    std::size_t rank() const { return gen_names.size(); }

    // All triples for one algebra generator as a dense coefficient table
    // indexed [src][dst]; -1 means zero, otherwise the tau power.
    std::vector<std::vector<int>> action_table(int op_gen) const;

    // Action of an arbitrary algebra element on generator src, as a list of
    // (dst, tau_pow) pairs collected mod 2.
    std::vector<std::pair<int, int>> act(const AlgebraElement& e, int src) const;

    // Checks that every action entry respects bidegrees exactly and that
    // every rewriting rule of the algebra holds on the action matrices.
    // Returns an error description, or nullopt when the module is valid.
    std::optional<std::string> validate() const;
};

enum class LensVariant { motivic, ctau };

// Stunted lens module.  The motivic variant is a module over A(1)_mot (or
// another M2-algebra via `over`); the ctau variant is a module over
// Abar(1) (or another F2-algebra).  `over` must name an algebra whose
// generators are Steenrod squares or Milnor primitives known to the lens
// action formulas.
FPModule lens_module(CellRange range, LensVariant variant);
FPModule lens_module(CellRange range, LensVariant variant, AlgebraName over);

// Classical analogue with all weights zero, over A0_cl/A1_cl.
FPModule lens_module_classical(CellRange range, AlgebraName over);

enum class ComplexName { V0, Ceta, C, V0_smash_C };

// Finite complexes over the algebra `over` (default: motivic over A1_mot;
// classical algebras give the weight-zero variants; Ctau-linear algebras
// give the tau = 0 variants).
FPModule finite_complex(ComplexName name);
FPModule finite_complex(ComplexName name, AlgebraName over);

// Trivial one-generator module F2 / M2 over the given algebra.
FPModule trivial_module(AlgebraName over);

FPModule suspend(const FPModule& m, Bidegree shift);

// Sets tau = 0 in all action coefficients (dropping entries with a positive
// tau power) and replaces the algebra by its Ctau-linear counterpart where
// one is defined.
FPModule ctau_reduce(const FPModule& m);

// Tensor product with the Cartan diagonal action, over the small
// subalgebras only (generators must be Sq1/Sq2-shaped squares or exterior
// primitives).
FPModule smash(const FPModule& a, const FPModule& b);

// Whether two modules are isomorphic by a generator bijection that matches
// degrees and action triples exactly (up to renaming).
bool isomorphic_by_renaming(const FPModule& a, const FPModule& b);

// Nontriviality of the formula-level Sq^{2^i} action on lens cell d
// (range-independent congruence test).
bool lens_op_nontrivial(int d, int op_log2);  // op_log2: 0 -> Sq1, 1 -> Sq2, 2 -> Sq4

}  // namespace motcalc
