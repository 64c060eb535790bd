#include "motcalc/resolution.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace motcalc {

namespace {

// Per-level degree table: all (gen, word) combinations keyed by topological
// degree, with their c = 0 weight.
struct Combo {
    int gen;
    int word;  // -1 for the module level (identity only)
    int w0;
};

}  // namespace

Resolution::Resolution(FPModule m, Bounds b) : module_(std::move(m)), bounds_(b)
{
    pres_ = &presentation(module_.algebra);
    word_degs_.reserve(pres_->basis.size());
    for (const Word& w : pres_->basis) word_degs_.push_back(pres_->word_degree(w));
    for (std::size_t g = 0; g < pres_->gen_names.size(); ++g)
        op_tables_.push_back(module_.action_table(int(g)));
    build();
}

std::vector<std::pair<int, int>> Resolution::act_word(const Word& u, int cell, int tau) const
{
    std::vector<std::pair<int, int>> cur = {{cell, tau}};
    for (auto it = u.rbegin(); it != u.rend(); ++it) {
        std::vector<std::pair<int, int>> next;
        for (auto [g, c] : cur) {
            const auto& row = op_tables_[*it][std::size_t(g)];
            for (std::size_t d = 0; d < row.size(); ++d) {
                if (row[d] < 0) continue;
                std::pair<int, int> v{int(d), c + row[d]};
                auto f = std::find(next.begin(), next.end(), v);
                if (f != next.end())
                    next.erase(f);
                else
                    next.push_back(v);
            }
        }
        cur = std::move(next);
    }
    if (module_.ground == Ground::F2) {
        std::vector<std::pair<int, int>> kept;
        for (auto v : cur)
            if (v.second == 0) kept.push_back(v);
        cur = std::move(kept);
    }
    return cur;
}

const Resolution::Slot& Resolution::slot(int s, int t, int w) const
{
    auto key = std::make_tuple(s, t, w);
    auto it = slot_cache_.find(key);
    if (it != slot_cache_.end()) return it->second;

    Slot sl;
    bool m2 = module_.ground == Ground::M2;
    if (s < 0) {
        for (std::size_t j = 0; j < module_.rank(); ++j) {
            Bidegree d = module_.gen_degrees[j];
            if (d.t != t) continue;
            int c = w - d.w;  // tau^c * cell has weight d.w + c
            if (c < 0) continue;
            if (!m2 && c != 0) continue;
            sl.basis.push_back({int(j), 0, c});
        }
    } else {
        const auto& gs = gens_[s];
        for (std::size_t i = 0; i < gs.size(); ++i) {
            for (std::size_t u = 0; u < pres_->basis.size(); ++u) {
                if (gs[i].deg.t + word_degs_[u].t != t) continue;
                int c = w - gs[i].deg.w - word_degs_[u].w;
                if (c < 0) continue;
                if (!m2 && c != 0) continue;
                sl.basis.push_back({int(i), int(u), c});
            }
        }
    }
    std::sort(sl.basis.begin(), sl.basis.end());
    for (std::size_t k = 0; k < sl.basis.size(); ++k)
        sl.index[{sl.basis[k].gen, sl.basis[k].word, sl.basis[k].c}] = int(k);
    return slot_cache_.emplace(key, std::move(sl)).first->second;
}

BitVector Resolution::apply_d(int s, int t, int w, const SlotElem& e) const
{
    const Slot& target = slot(s - 1, t, w);
    BitVector out(target.basis.size());
    const Word& u = pres_->basis[e.word];

    auto toggle_coord = [&](int gen, int word, int c) {
        auto it = target.index.find({gen, word, c});
        if (it == target.index.end())
            throw std::logic_error("apply_d: image coordinate missing from target slot");
        out.flip(std::size_t(it->second));
    };

    if (s == 0) {
        // d_0(gen) lands in the module; entries are ground coefficients.
        for (const ResEntry& entry : diff_[0][e.gen]) {
            for (const Term& term : entry.coeff.terms) {
                assert(term.word.empty());
                for (auto [cell, c] : act_word(u, entry.target, term.tau_pow + e.c))
                    toggle_coord(cell, 0, c);
            }
        }
    } else {
        for (const ResEntry& entry : diff_[s][e.gen]) {
            AlgebraElement prod =
                pres_->multiply(AlgebraElement::single(e.c, u), entry.coeff);
            for (const Term& term : prod.terms) {
                if (module_.ground == Ground::F2 && term.tau_pow > 0) continue;
                auto wit = std::lower_bound(pres_->basis.begin(), pres_->basis.end(), term.word,
                                            [&](const Word& a, const Word& b) {
                                                Bidegree da = pres_->word_degree(a);
                                                Bidegree db = pres_->word_degree(b);
                                                if (da != db) return da < db;
                                                return a < b;
                                            });
                assert(wit != pres_->basis.end() && *wit == term.word);
                toggle_coord(entry.target, int(wit - pres_->basis.begin()), term.tau_pow);
            }
        }
    }
    return out;
}

const BitMatrix& Resolution::d_matrix(int s, int t, int w) const
{
    auto key = std::make_tuple(s, t, w);
    auto it = dmat_cache_.find(key);
    if (it != dmat_cache_.end()) return it->second;

    const Slot& src = slot(s, t, w);
    const Slot& dst = slot(s - 1, t, w);
    BitMatrix m(dst.basis.size(), src.basis.size());
    for (std::size_t j = 0; j < src.basis.size(); ++j) {
        BitVector img = apply_d(s, t, w, src.basis[j]);
        for (std::size_t r = 0; r < dst.basis.size(); ++r)
            if (img.get(r)) m.set(r, j, true);
    }
    return dmat_cache_.emplace(key, std::move(m)).first->second;
}

void Resolution::build()
{
    // Stage 0: minimal generators of the module itself, i.e. a basis of
    // M / (J + tau) M.  Process slots in (t asc, w asc) order.
    gens_.emplace_back();
    diff_.emplace_back();

    int t_lo = 0, t_hi = 0;
    if (!module_.gen_degrees.empty()) {
        t_lo = t_hi = module_.gen_degrees[0].t;
        for (Bidegree d : module_.gen_degrees) {
            t_lo = std::min(t_lo, d.t);
            t_hi = std::max(t_hi, d.t);
        }
    }

    for (int t = t_lo; t <= std::min(t_hi, bounds_.max_t); ++t) {
        std::vector<int> ws;
        for (std::size_t j = 0; j < module_.rank(); ++j)
            if (module_.gen_degrees[j].t == t) ws.push_back(module_.gen_degrees[j].w);
        if (ws.empty()) continue;
        std::sort(ws.begin(), ws.end());
        ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
        for (int w : ws) {
            const Slot& msl = slot(-1, t, w);
            if (msl.basis.empty()) continue;
            // coverage by B * (gens so far)
            EchelonSpace cov(msl.basis.size());
            {
                const Slot& fsl = slot(0, t, w);
                for (const SlotElem& e : fsl.basis) cov.insert(apply_d(0, t, w, e));
            }
            for (const SlotElem& e : msl.basis) {
                if (e.c != 0) continue;  // tau-multiples never minimal generators
                BitVector v(msl.basis.size());
                v.set(std::size_t(msl.index.at({e.gen, e.word, e.c})), true);
                BitVector red = cov.reduce(v);
                if (red.is_zero()) continue;
                // new stage-0 generator mapping to the reduced class
                ResGen g;
                g.s = 0;
                g.deg = {t, w};
                gens_[0].push_back(g);
                std::vector<ResEntry> entries;
                for (std::size_t k = 0; k < msl.basis.size(); ++k) {
                    if (!red.get(k)) continue;
                    const SlotElem& b = msl.basis[k];
                    entries.push_back({b.gen, AlgebraElement::single(b.c, {})});
                }
                diff_[0].push_back(std::move(entries));
                slot_cache_.erase(std::make_tuple(0, t, w));
                dmat_cache_.erase(std::make_tuple(0, t, w));
                cov.insert(red);
            }
        }
    }
    name_stage(0);

    for (int s = 0; s < bounds_.max_s; ++s) extend(s);
}

void Resolution::extend(int s)
{
    gens_.emplace_back();
    diff_.emplace_back();

    // Degrees where F_s has slot content, with the c = 0 weight span.
    std::map<int, std::pair<int, int>> t_to_wspan;
    for (const ResGen& g : gens_[std::size_t(s)]) {
        for (std::size_t u = 0; u < pres_->basis.size(); ++u) {
            int t = g.deg.t + word_degs_[u].t;
            int w0 = g.deg.w + word_degs_[u].w;
            if (t > bounds_.max_t) continue;
            auto it = t_to_wspan.find(t);
            if (it == t_to_wspan.end())
                t_to_wspan[t] = {w0, w0};
            else {
                it->second.first = std::min(it->second.first, w0);
                it->second.second = std::max(it->second.second, w0);
            }
        }
    }

    for (auto& [t, span] : t_to_wspan) {
        for (int w = span.first; w <= span.second; ++w) {
            const Slot& src = slot(s, t, w);
            if (src.basis.empty()) continue;
            const BitMatrix& A = d_matrix(s, t, w);
            std::vector<BitVector> kernel = kernel_basis(A);
            if (kernel.empty()) continue;

            EchelonSpace cov(src.basis.size());
            {
                const Slot& next = slot(s + 1, t, w);
                for (const SlotElem& e : next.basis)
                    cov.insert(apply_d(s + 1, t, w, e));
            }
            bool added = false;
            for (BitVector& k : kernel) {
                BitVector red = cov.reduce(k);
                if (red.is_zero()) continue;
                ResGen g;
                g.s = s + 1;
                g.deg = {t, w};
                gens_[std::size_t(s + 1)].push_back(g);
                std::vector<ResEntry> entries;
                std::map<int, AlgebraElement> per_target;
                for (std::size_t kk = 0; kk < src.basis.size(); ++kk) {
                    if (!red.get(kk)) continue;
                    const SlotElem& b = src.basis[kk];
                    per_target[b.gen] =
                        per_target[b.gen] + AlgebraElement::single(b.c, pres_->basis[b.word]);
                }
                for (auto& [tgt, coeff] : per_target) entries.push_back({tgt, coeff});
                diff_[std::size_t(s + 1)].push_back(std::move(entries));
                cov.insert(red);
                added = true;
            }
            if (added) {
                slot_cache_.erase(std::make_tuple(s + 1, t, w));
                dmat_cache_.erase(std::make_tuple(s + 1, t, w));
            }
        }
    }
    name_stage(s + 1);
}

void Resolution::name_stage(int s)
{
    std::map<std::pair<int, int>, int> counter;
    for (ResGen& g : gens_[std::size_t(s)]) {
        int j = counter[{g.deg.t, g.deg.w}]++;
        g.name = "g" + std::to_string(s) + "(" + std::to_string(g.deg.t) + "," +
                 std::to_string(g.deg.w) + ")";
        if (j > 0) g.name += "." + std::to_string(j);
    }
}

bool Resolution::is_minimal() const
{
    for (std::size_t s = 1; s < diff_.size(); ++s)
        for (const auto& entries : diff_[s])
            for (const ResEntry& e : entries)
                for (const Term& term : e.coeff.terms)
                    if (term.word.empty() && term.tau_pow == 0) return false;
    return true;
}

bool Resolution::dd_is_zero() const
{
    for (int s = 2; s < stages(); ++s) {
        for (std::size_t i = 0; i < gens_[std::size_t(s)].size(); ++i) {
            const ResGen& g = gens_[std::size_t(s)][i];
            const Slot& src = slot(s, g.deg.t, g.deg.w);
            BitVector img = apply_d(s, g.deg.t, g.deg.w,
                                    src.basis[std::size_t(src.index.at({int(i), 0, 0}))]);
            // apply d once more
            const Slot& mid = slot(s - 1, g.deg.t, g.deg.w);
            BitVector out(slot(s - 2, g.deg.t, g.deg.w).basis.size());
            for (std::size_t k = 0; k < mid.basis.size(); ++k)
                if (img.get(k)) out ^= apply_d(s - 1, g.deg.t, g.deg.w, mid.basis[k]);
            if (!out.is_zero()) return false;
        }
    }
    return true;
}

int Resolution::ext_f2_dim(int s, int t, int w) const
{
    if (s < 0 || s >= stages()) return 0;
    // Dual slot at stage q: pairs (gen, e) with t_gen = t, w_gen - e = w,
    // e >= 0 (F2 ground: e = 0).  delta is composition with d.
    bool m2 = module_.ground == Ground::M2;
    auto dual_basis = [&](int q) {
        std::vector<std::pair<int, int>> basis;  // (gen index, e)
        if (q < 0 || q >= stages()) return basis;
        for (std::size_t i = 0; i < gens_[std::size_t(q)].size(); ++i) {
            const ResGen& g = gens_[std::size_t(q)][i];
            if (g.deg.t != t) continue;
            int e = g.deg.w - w;
            if (e < 0) continue;
            if (!m2 && e != 0) continue;
            basis.emplace_back(int(i), e);
        }
        return basis;
    };
    auto delta_matrix = [&](int q, const std::vector<std::pair<int, int>>& from,
                            const std::vector<std::pair<int, int>>& to) {
        // rows: to (stage q+1 duals), cols: from (stage q duals)
        BitMatrix m(to.size(), from.size());
        std::map<std::pair<int, int>, int> to_index;
        for (std::size_t r = 0; r < to.size(); ++r) to_index[to[r]] = int(r);
        for (std::size_t cidx = 0; cidx < from.size(); ++cidx) {
            auto [gi, e] = from[cidx];
            // delta(tau^e gi*) = sum over g' with d(g') having a tau^c unit
            // component on gi
            if (q + 1 >= stages()) continue;
            for (std::size_t gp = 0; gp < gens_[std::size_t(q + 1)].size(); ++gp) {
                for (const ResEntry& entry : diff_[std::size_t(q + 1)][gp]) {
                    if (entry.target != gi) continue;
                    for (const Term& term : entry.coeff.terms) {
                        if (!term.word.empty()) continue;
                        auto it = to_index.find({int(gp), e + term.tau_pow});
                        if (it != to_index.end()) {
                            bool cur = m.get(std::size_t(it->second), cidx);
                            m.set(std::size_t(it->second), cidx, !cur);
                        }
                    }
                }
            }
        }
        return m;
    };

    auto b_prev = dual_basis(s - 1);
    auto b_cur = dual_basis(s);
    auto b_next = dual_basis(s + 1);
    if (b_cur.empty()) return 0;
    BitMatrix out = delta_matrix(s, b_cur, b_next);
    BitMatrix in = delta_matrix(s - 1, b_prev, b_cur);
    std::size_t ker = b_cur.size() - rank(out);
    return int(ker - rank(in));
}

namespace {

struct LabelEntry {
    Bidegree deg;
    const char* label;
};

}  // namespace

std::string h_label(AlgebraName alg, Bidegree deg)
{
    switch (alg) {
        case AlgebraName::A0_cl:
        case AlgebraName::A0_mot:
            if (deg.t == 1) return "h0";
            break;
        case AlgebraName::A1_cl:
            if (deg.t == 1) return "h0";
            if (deg.t == 2) return "h1";
            break;
        case AlgebraName::A1_mot:
            if (deg == Bidegree{1, 0}) return "h0";
            if (deg == Bidegree{2, 1}) return "h1";
            break;
        case AlgebraName::Abar0:
        case AlgebraName::EP1:
            if (deg == Bidegree{2, 1}) return "h1";
            break;
        case AlgebraName::Abar1:
            if (deg == Bidegree{2, 1}) return "h1";
            if (deg == Bidegree{4, 2}) return "h2";
            break;
        case AlgebraName::EP1P2:
            if (deg == Bidegree{2, 1}) return "h1";
            if (deg == Bidegree{6, 3}) return "h21";
            break;
        case AlgebraName::EQ0:
            if (deg == Bidegree{1, 0}) return "h0";
            break;
        case AlgebraName::EQ0Q1:
            if (deg == Bidegree{1, 0}) return "h0";
            if (deg == Bidegree{4, 1}) return "v1";
            break;
    }
    return "e(" + std::to_string(deg.t) + "," + std::to_string(deg.w) + ")";
}

namespace {

// Chain-map lift of the dual class of generator g0 in stage s0 of r,
// against the resolution rk of the trivial module over the same algebra.
// Returns, for each stage-(s0+1) generator g of r, the tau^0 coefficients
// of X_1(g) on the stage-1 generators of rk.
//
// X_0 : F_{s0} -> B sends g0 to 1 and every other generator to 0; X_{i+1}
// solves d X_{i+1} = X_i d slot by slot.
class YonedaLift {
public:
    YonedaLift(const Resolution& r, const Resolution& rk) : r_(r), rk_(rk) {}

    // products h * (g0 dual) for all stage-1 duals h of rk; returns pairs
    // (rk stage-1 gen index, r stage-(s0+1) gen index) with coefficient 1.
    std::vector<std::pair<int, int>> products(int s0, int g0)
    {
        std::vector<std::pair<int, int>> out;
        if (s0 + 1 >= r_.stages() || rk_.stages() < 2) return out;
        Bidegree shift = r_.gens(s0)[std::size_t(g0)].deg;

        // X_1(g) for stage-(s0+1) generators g: element of F1(rk) in the
        // slot at deg(g) - shift satisfying d(X1(g)) = X0(d g), where
        // X0 reads off the tau^0 unit coefficient of g0 in d(g)... X0(dg)
        // is an element of F0(rk) = B.
        for (std::size_t gi = 0; gi < r_.gens(s0 + 1).size(); ++gi) {
            const ResGen& g = r_.gens(s0 + 1)[std::size_t(gi)];
            int t = g.deg.t - shift.t;
            int w = g.deg.w - shift.w;
            if (t > rk_.bounds().max_t) continue;
            // X0(dg) in F0(rk): collect coefficient of g0 among entries
            AlgebraElement rhs_elt;
            for (const ResEntry& e : r_.differential(s0 + 1, int(gi)))
                if (e.target == g0) rhs_elt = rhs_elt + e.coeff;
            if (rhs_elt.is_zero()) continue;

            // coordinates of rhs in slot(0, t, w) of rk
            const Resolution::Slot& f0 = rk_.slot(0, t, w);
            const Resolution::Slot& f1 = rk_.slot(1, t, w);
            if (f1.basis.empty()) continue;
            BitVector rhs(f0.basis.size());
            bool representable = true;
            for (const Term& term : rhs_elt.terms) {
                if (rk_.module().ground == Ground::F2 && term.tau_pow > 0) continue;
                int widx = word_index(term.word);
                auto it = f0.index.find({0, widx, term.tau_pow});
                if (it == f0.index.end()) {
                    representable = false;
                    break;
                }
                rhs.flip(std::size_t(it->second));
            }
            if (!representable) continue;
            auto x1 = solve(rk_.d_matrix(1, t, w), rhs);
            if (!x1) continue;  // outside resolved range
            for (std::size_t k = 0; k < f1.basis.size(); ++k) {
                if (!x1->get(k)) continue;
                const auto& e = f1.basis[k];
                if (e.word == 0 && e.c == 0) out.emplace_back(e.gen, int(gi));
            }
        }
        return out;
    }

private:
    int word_index(const Word& w) const
    {
        const auto& pres = presentation(rk_.algebra());
        for (std::size_t i = 0; i < pres.basis.size(); ++i)
            if (pres.basis[i] == w) return int(i);
        throw std::logic_error("word_index: not a basis word");
    }

    const Resolution& r_;
    const Resolution& rk_;
};

}  // namespace

ExtChart ext_chart(const Resolution& r, bool with_edges)
{
    ExtChart chart;
    std::map<std::pair<int, int>, int> dot_index;  // (s, gen idx) -> dot
    for (int s = 0; s < r.stages(); ++s) {
        for (std::size_t i = 0; i < r.gens(s).size(); ++i) {
            const ResGen& g = r.gens(s)[i];
            dot_index[{s, int(i)}] = int(chart.dots.size());
            chart.dots.push_back({{s, g.deg.t, g.deg.w}, g.name});
        }
    }
    if (!with_edges) return chart;

    Resolution rk(trivial_module(r.algebra()), r.bounds());
    YonedaLift lift(r, rk);
    for (int s = 0; s + 1 < r.stages(); ++s) {
        for (std::size_t i = 0; i < r.gens(s).size(); ++i) {
            for (auto [hk, gj] : lift.products(s, int(i))) {
                Bidegree hdeg = rk.gens(1)[std::size_t(hk)].deg;
                chart.edges.push_back({h_label(r.algebra(), hdeg), dot_index[{s, int(i)}],
                                       dot_index[{s + 1, gj}]});
            }
        }
    }
    return chart;
}

}  // namespace motcalc
