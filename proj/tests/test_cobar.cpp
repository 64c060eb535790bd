#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>

#include "motcalc/cobar.hpp"
#include "motcalc/massey.hpp"

using namespace motcalc;

namespace {

// dot/dim comparison of the two Ext engines on a window
bool oracles_agree(const FPModule& m, int s_max, int t_max, const char* what)
{
    Resolution r(m, {s_max + 1, t_max});
    CobarComplex cx(cobar_dual(m.algebra, t_max), dual_comodule(cobar_dual(m.algebra, t_max), m),
                    {s_max, t_max});
    int t_lo = 0;
    for (Bidegree d : m.gen_degrees) t_lo = std::min(t_lo, d.t);
    bool ok = true;
    for (int s = 0; s <= s_max; ++s)
        for (int t = t_lo; t <= t_max; ++t) {
            // weight window generous around the achievable band
            for (int w = t_lo - s_max - 2; w <= t_max; ++w) {
                int a = r.ext_f2_dim(s, t, w);
                int b = cx.cohomology_dim(s, t, w);
                if (a != b) {
                    std::cout << what << ": mismatch at s=" << s << " t=" << t << " w=" << w
                              << ": resolution " << a << " vs cobar " << b << "\n";
                    ok = false;
                }
            }
        }
    return ok;
}

}  // namespace

TEST_CASE("cobar over A0_cl dual gives the h0 tower")
{
    CobarContext ctx = cobar_dual(AlgebraName::A0_cl, 10);
    CobarComplex cx(ctx, trivial_comodule(), {8, 10});
    for (int s = 0; s <= 6; ++s) CHECK(cx.cohomology_dim(s, s, 0) == 1);
    CHECK(cx.cohomology_dim(2, 3, 0) == 0);
}

TEST_CASE("oracle equivalence: trivial modules")
{
    CHECK(oracles_agree(trivial_module(AlgebraName::A0_cl), 6, 10, "A0_cl/F2"));
    CHECK(oracles_agree(trivial_module(AlgebraName::A1_cl), 6, 14, "A1_cl/F2"));
    CHECK(oracles_agree(trivial_module(AlgebraName::Abar1), 5, 20, "Abar1/F2"));
    CHECK(oracles_agree(trivial_module(AlgebraName::EQ0Q1), 5, 12, "EQ0Q1/M2"));
}

TEST_CASE("oracle equivalence: V(0) and C over A1_cl")
{
    CHECK(oracles_agree(finite_complex(ComplexName::V0, AlgebraName::A1_cl), 5, 12, "A1_cl/V0"));
    CHECK(oracles_agree(finite_complex(ComplexName::C, AlgebraName::A1_cl), 4, 10, "A1_cl/C"));
}

TEST_CASE("oracle equivalence: motivic A(1) trivial module")
{
    CHECK(oracles_agree(trivial_module(AlgebraName::A1_mot), 5, 12, "A1_mot/F2"));
}

TEST_CASE("Koszul dual of E(Q0,Q1): polynomial on two towers")
{
    CobarContext ctx = cobar_dual(AlgebraName::EQ0Q1, 14);
    CobarComplex cx(ctx, trivial_comodule(), {6, 14});
    // F2[tau][h0, v1]: dims at (i+j, i+3j, j) equal 1 (top of tau tower)
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) {
            if (i + j > 6 || i + 3 * j > 14) continue;
            CHECK(cx.cohomology_dim(i + j, i + 3 * j, j) == 1);
        }
    CHECK(cx.cohomology_dim(1, 2, 1) == 0);
}

TEST_CASE("truncated motivic Milnor dual: h classes")
{
    CobarContext ctx = cobar_milnor(MilnorKind::motivic, 8);
    CobarComplex cx(ctx, trivial_comodule(), {4, 8});
    CHECK(cx.cohomology_dim(1, 1, 0) == 1);  // h0 = [tau_0]
    CHECK(cx.cohomology_dim(1, 2, 1) == 1);  // h1 = [xi_1]
    CHECK(cx.cohomology_dim(1, 4, 2) == 1);  // h2 = [xi_1^2]
    CHECK(cx.cohomology_dim(1, 8, 4) == 1);  // h3 = [xi_1^4]
    CHECK(cx.cohomology_dim(1, 3, 1) == 0);  // [tau_1] bounds/dies: not Ext
    // h0 h1 = 0 motivically
    CHECK(cx.cohomology_dim(2, 3, 1) == 0);
}

TEST_CASE("massey degree bookkeeping: <a,0,c> contains 0")
{
    CobarContext ctx = cobar_dual(AlgebraName::A1_cl, 10);
    CobarComplex cx(ctx, trivial_comodule(), {6, 10});
    Cocycle h0 = cohomology_class(cx, 1, 1, 0);
    Cocycle zero{1, 2, 0, BitVector(cx.slot(1, 2, 0).basis.size())};
    MasseyResult r = massey_triple(cx, h0, zero, h0);
    REQUIRE(r.defined);
    CHECK(r.deg == Trigrade{2, 4, 0});
    CHECK(r.value.is_zero());
}
