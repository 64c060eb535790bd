#include "motcalc/algss.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "motcalc/resolution.hpp"

namespace motcalc {

SplitPair split_pair_from_algebras(AlgebraName b, AlgebraName b0)
{
    if (b == AlgebraName::A1_mot && b0 == AlgebraName::A0_mot) return SplitPair::kq;
    if (b == AlgebraName::Abar1 && b0 == AlgebraName::Abar0) return SplitPair::wko;
    if (b == AlgebraName::EQ0Q1 && b0 == AlgebraName::EQ0) return SplitPair::bpgl1;
    if (b == AlgebraName::EP1P2 && b0 == AlgebraName::EP1) return SplitPair::wbp1;
    throw std::invalid_argument("unsupported splitting pair");
}

AlgebraName split_algebra(SplitPair p)
{
    switch (p) {
        case SplitPair::kq: return AlgebraName::A1_mot;
        case SplitPair::wko: return AlgebraName::Abar1;
        case SplitPair::bpgl1: return AlgebraName::EQ0Q1;
        case SplitPair::wbp1: return AlgebraName::EP1P2;
    }
    throw std::invalid_argument("bad pair");
}

AlgebraName split_subalgebra(SplitPair p)
{
    switch (p) {
        case SplitPair::kq: return AlgebraName::A0_mot;
        case SplitPair::wko: return AlgebraName::Abar0;
        case SplitPair::bpgl1: return AlgebraName::EQ0;
        case SplitPair::wbp1: return AlgebraName::EP1;
    }
    throw std::invalid_argument("bad pair");
}

bool split_tower_vertical(SplitPair p)
{
    // Ext over the A(0)-type subalgebras is an h0 tower (vertical over
    // F2[tau]); over the Sq2-exterior subalgebras it is a climbing w0 tower.
    return p == SplitPair::kq || p == SplitPair::bpgl1;
}

namespace {

// Every generator of B acts trivially on cell c at the formula level.
bool trivial_cell(SplitPair p, int c)
{
    auto m = [&](int k) { return ((c % k) + k) % k; };
    switch (p) {
        case SplitPair::kq: return m(2) == 0 && m(4) != 2;   // Sq1, Sq2
        case SplitPair::wko: return m(8) <= 1;               // Sq2, Sq4
        case SplitPair::bpgl1: return m(2) == 0;             // Q0, Q1
        case SplitPair::wbp1: return m(4) <= 1;              // P1, P2
    }
    return false;
}

int cell_w(int c)
{
    if (c % 2 == 0) return c / 2;
    int k = c >= 0 ? c / 2 : (c - 1) / 2;
    return k + 1;
}

// Even trivial cells contribute at their own position; odd trivial cells
// contribute the companion summand of the pair two cells lower.
Bidegree summand_shift(int c)
{
    if (c % 2 == 0) return {c, c / 2};
    return {c - 2, cell_w(c - 2) - 1};
}

int split_period(SplitPair p)
{
    switch (p) {
        case SplitPair::kq: return 4;
        case SplitPair::wko: return 8;
        case SplitPair::bpgl1: return 2;
        case SplitPair::wbp1: return 4;
    }
    return 4;
}

}  // namespace

SplitPrediction free_summand_shifts(CellRange cells, SplitPair pair)
{
    SplitPrediction pred;
    pred.pair = pair;
    pred.cells = cells;
    for (int c = cells.bottom; c <= cells.top; ++c) {
        if (trivial_cell(pair, c)) pred.summands.push_back({summand_shift(c), c});
        for (int op = 0; op < 3; ++op) {
            if (!lens_op_nontrivial(c, op)) continue;
            if (!cells.contains(c + (1 << op))) {
                pred.remainder.push_back(c);
                break;
            }
        }
    }
    std::sort(pred.summands.begin(), pred.summands.end(),
              [](const SplitSummand& a, const SplitSummand& b) { return a.shift < b.shift; });
    return pred;
}

int predicted_dim(const std::vector<SplitSummand>& summands, SplitPair p, int s, int t, int w)
{
    int n = 0;
    for (const SplitSummand& sm : summands) {
        if (split_tower_vertical(p)) {
            // Sigma^{sigma,omega} M2[h0]: dots (s, sigma+s, omega), tau-expanded down
            if (t - s == sm.shift.t && w <= sm.shift.w) ++n;
        } else {
            // Sigma^{sigma,omega} F2[w0]: dots (s, sigma+2s, omega+s)
            if (t == sm.shift.t + 2 * s && w == sm.shift.w + s) ++n;
        }
    }
    return n;
}

namespace {

std::vector<SplitSummand> window_summands(SplitPair pair, SplitWindow win)
{
    // every summand with a dot inside the window; climbing towers enter
    // from below the stem range
    std::vector<SplitSummand> out;
    int reach = split_tower_vertical(pair) ? 0 : win.s_max;
    for (int c = win.stem_lo - reach - 2; c <= win.stem_hi + 2; ++c) {
        if (!trivial_cell(pair, c)) continue;
        SplitSummand cand{summand_shift(c), c};
        bool hit = false;
        for (int s = 0; s <= win.s_max && !hit; ++s) {
            int stem = split_tower_vertical(pair) ? cand.shift.t : cand.shift.t + s;
            if (stem >= win.stem_lo && stem <= win.stem_hi) hit = true;
        }
        if (hit) out.push_back(cand);
    }
    std::sort(out.begin(), out.end(),
              [](const SplitSummand& a, const SplitSummand& b) { return a.shift < b.shift; });
    return out;
}

Resolution padded_resolution(CellRange cells, SplitPair pair, SplitWindow win)
{
    // pad the bottom so boundary deformation clears the window, and the top
    // so the top-truncation stubs stay above it
    int period = split_period(pair);
    int slope = split_tower_vertical(pair) ? 2 : 4;
    int bottom = std::min(cells.bottom, win.stem_lo - win.s_max * slope - 2 * period);
    int top = std::max(cells.top, win.stem_hi + 2 * win.s_max + 2 * period);
    AlgebraName alg = split_algebra(pair);
    FPModule lens;
    if (presentation(alg).ground == Ground::M2)
        lens = lens_module({bottom, top}, LensVariant::motivic, alg);
    else
        lens = lens_module({bottom, top}, LensVariant::ctau, alg);
    Bounds b{win.s_max + 2, win.stem_hi + win.s_max + 4};
    return Resolution(suspend(lens, {1, 0}), b);
}

}  // namespace

std::string SplitReport::text() const
{
    std::ostringstream os;
    os << "s t w computed predicted\n";
    for (const std::string& l : lines) os << l << "\n";
    for (const std::string& m : mismatches) os << "mismatch: " << m << "\n";
    os << (pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

SplitReport splitting_check(CellRange cells, SplitPair pair, SplitWindow win)
{
    SplitReport rep;
    rep.summands = window_summands(pair, win);
    Resolution r = padded_resolution(cells, pair, win);

    rep.pass = true;
    for (int s = 0; s <= win.s_max; ++s) {
        for (int stem = win.stem_lo; stem <= win.stem_hi; ++stem) {
            int t = stem + s;
            if (t > r.bounds().max_t - 2) continue;
            for (int w = win.w_lo; w <= win.w_hi; ++w) {
                int dim = r.ext_f2_dim(s, t, w);
                int pred = predicted_dim(rep.summands, pair, s, t, w);
                if (dim == 0 && pred == 0) continue;
                std::ostringstream os;
                os << s << " " << t << " " << w << " " << dim << " " << pred;
                rep.lines.push_back(os.str());
                if (dim != pred) {
                    rep.pass = false;
                    rep.mismatches.push_back(os.str());
                }
            }
        }
    }
    return rep;
}

bool truncation_stable(CellRange cells, SplitPair pair, SplitWindow win)
{
    SplitReport a = splitting_check(cells, pair, win);
    CellRange wider{cells.bottom - split_period(pair) * 2, cells.top};
    SplitReport b = splitting_check(wider, pair, win);
    return a.pass == b.pass && a.lines == b.lines;
}

bool no_differential_pairs(const std::vector<SplitSummand>& summands, SplitPair p,
                           SplitWindow win)
{
    // A differential of the filtration spectral sequence moves a class to a
    // strictly lower filtration summand and changes (s, t, w) by
    // (-1, -1, 0).  Pairs within one summand are not differentials.  Assert
    // that no cross-summand pair in the filtration-decreasing direction has
    // the differential trigrade.
    struct Dot {
        Trigrade deg;
        int sigma;
    };
    std::vector<Dot> dots;
    for (const SplitSummand& sm : summands) {
        std::vector<SplitSummand> one = {sm};
        for (int s = 0; s <= win.s_max; ++s)
            for (int stem = win.stem_lo; stem <= win.stem_hi; ++stem)
                for (int w = win.w_lo; w <= win.w_hi; ++w)
                    if (predicted_dim(one, p, s, stem + s, w) > 0)
                        dots.push_back({{s, stem + s, w}, sm.shift.t});
    }
    for (const Dot& a : dots)
        for (const Dot& b : dots) {
            if (b.sigma >= a.sigma) continue;  // filtration must decrease
            if (b.deg.s == a.deg.s - 1 && b.deg.t == a.deg.t - 1 && b.deg.w == a.deg.w)
                return false;
        }
    return true;
}

}  // namespace motcalc
