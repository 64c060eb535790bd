#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>

#include "motcalc/algss.hpp"

using namespace motcalc;

TEST_CASE("free summand shifts: kq case")
{
    SplitPrediction p = free_summand_shifts({-8, 7}, SplitPair::kq);
    REQUIRE(p.summands.size() == 4);
    // shifts (4i, 2i) for -2 <= i <= 1
    for (int i = -2; i <= 1; ++i) {
        CHECK(p.summands[std::size_t(i + 2)].shift == Bidegree{4 * i, 2 * i});
    }
}

TEST_CASE("free summand shifts: wko case")
{
    SplitPrediction p = free_summand_shifts({-16, 7}, SplitPair::wko);
    REQUIRE(p.summands.size() == 6);
    // shifts (8i-1, 4i-1) and (8i, 4i) for -2 <= i <= 0
    std::vector<Bidegree> expect = {{-17, -9}, {-16, -8}, {-9, -5},
                                    {-8, -4},  {-1, -1},  {0, 0}};
    for (std::size_t k = 0; k < expect.size(); ++k) CHECK(p.summands[k].shift == expect[k]);
}

TEST_CASE("free summand shifts: empty range and remainder")
{
    SplitPrediction p = free_summand_shifts({3, 2}, SplitPair::kq);
    CHECK(p.summands.empty());

    SplitPrediction q = free_summand_shifts({-8, 7}, SplitPair::kq);
    // top cells with action leaving the range are reported
    CHECK(!q.remainder.empty());
}

TEST_CASE("prediction against itself is an exact match")
{
    SplitWindow win{-8, 8, 6, -9, 5};
    auto summands = free_summand_shifts({-8, 7}, SplitPair::kq).summands;
    for (int s = 0; s <= win.s_max; ++s)
        for (int stem = win.stem_lo; stem <= win.stem_hi; ++stem)
            for (int w = win.w_lo; w <= win.w_hi; ++w) {
                int a = predicted_dim(summands, SplitPair::kq, s, stem + s, w);
                int b = predicted_dim(summands, SplitPair::kq, s, stem + s, w);
                CHECK(a == b);
            }
}

TEST_CASE("kq splitting check passes in stems -8..8")
{
    SplitWindow win{-8, 8, 8, -9, 5};
    SplitReport rep = splitting_check({-8, 7}, SplitPair::kq, win);
    if (!rep.pass)
        for (auto& m : rep.mismatches) std::cout << "kq " << m << "\n";
    CHECK(rep.pass);
    CHECK(no_differential_pairs(rep.summands, SplitPair::kq, win));
}

TEST_CASE("wko splitting check passes in stems -16..8")
{
    SplitWindow win{-16, 8, 6, -12, 9};
    SplitReport rep = splitting_check({-16, 7}, SplitPair::wko, win);
    if (!rep.pass)
        for (auto& m : rep.mismatches) std::cout << "wko " << m << "\n";
    CHECK(rep.pass);
    CHECK(no_differential_pairs(rep.summands, SplitPair::wko, win));
}

TEST_CASE("BPGL<1> splitting: towers every two stems")
{
    SplitWindow win{-4, 4, 5, -7, 3};
    SplitReport rep = splitting_check({-4, 3}, SplitPair::bpgl1, win);
    if (!rep.pass)
        for (auto& m : rep.mismatches) std::cout << "bpgl1 " << m << "\n";
    CHECK(rep.pass);
    // summands at every even stem in the window
    int even = 0;
    for (auto& sm : rep.summands)
        if (sm.shift.t % 2 == 0) ++even;
    CHECK(even == int(rep.summands.size()));
}

TEST_CASE("wBP<1> splitting: paired summands (4i-1,2i-1) and (4i,2i)")
{
    SplitWindow win{-8, 4, 5, -8, 5};
    SplitReport rep = splitting_check({-8, 3}, SplitPair::wbp1, win);
    if (!rep.pass)
        for (auto& m : rep.mismatches) std::cout << "wbp1 " << m << "\n";
    CHECK(rep.pass);
}

TEST_CASE("truncation stability in the kq window")
{
    SplitWindow win{-8, 8, 5, -9, 5};
    CHECK(truncation_stable({-8, 7}, SplitPair::kq, win));
}
