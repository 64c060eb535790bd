#include "motcalc/cobar.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace motcalc {

CobarContext cobar_dual(AlgebraName alg, int max_t)
{
    const auto& pres = presentation(alg);
    CobarContext ctx;
    ctx.ground = pres.ground;
    ctx.max_t = max_t;

    // alphabet: non-unit basis words within the truncation
    std::vector<Word> alphabet;
    for (const Word& w : pres.basis) {
        if (w.empty()) continue;
        if (pres.word_degree(w).t > max_t) continue;
        alphabet.push_back(w);
        ctx.deg.push_back(pres.word_degree(w));
        ctx.names.push_back(pres.render_word(w) + "*");
    }
    auto find = [&](const Word& w) -> int {
        for (std::size_t i = 0; i < alphabet.size(); ++i)
            if (alphabet[i] == w) return int(i);
        return -1;
    };

    ctx.coproduct.resize(alphabet.size());
    // Delta(w*) has a tau^c u* x v* term for each product u v = tau^c w + ...
    for (std::size_t u = 0; u < alphabet.size(); ++u) {
        for (std::size_t v = 0; v < alphabet.size(); ++v) {
            AlgebraElement prod = pres.multiply(AlgebraElement::single(0, alphabet[u]),
                                                AlgebraElement::single(0, alphabet[v]));
            for (const Term& term : prod.terms) {
                int k = find(term.word);
                if (k < 0) continue;
                ctx.coproduct[std::size_t(k)].push_back({term.tau_pow, int(u), int(v)});
            }
        }
    }
    return ctx;
}

namespace {

// Milnor-basis monomial xi^R tau^E (E a bitmask); classical uses only R.
struct MilnorMono {
    std::vector<int> r;
    unsigned e = 0;
    int tau = 0;

    friend bool operator<(const MilnorMono& a, const MilnorMono& b)
    {
        if (a.r != b.r) return a.r < b.r;
        if (a.e != b.e) return a.e < b.e;
        return a.tau < b.tau;
    }
    friend bool operator==(const MilnorMono& a, const MilnorMono& b)
    {
        return a.r == b.r && a.e == b.e && a.tau == b.tau;
    }
};

void trim(MilnorMono& m)
{
    while (!m.r.empty() && m.r.back() == 0) m.r.pop_back();
}

Bidegree milnor_degree(MilnorKind kind, const MilnorMono& m)
{
    Bidegree d{0, 0};
    for (std::size_t i = 0; i < m.r.size(); ++i) {
        long long n = (long long)i + 1;
        if (kind == MilnorKind::classical)
            d.t += m.r[i] * int((1LL << n) - 1);
        else {
            d.t += m.r[i] * int((1LL << (n + 1)) - 2);
            d.w += m.r[i] * int((1LL << n) - 1);
        }
    }
    for (unsigned i = 0; i < 16; ++i) {
        if (!(m.e & (1u << i))) continue;
        d.t += int((1LL << (i + 1)) - 1);
        d.w += int((1LL << i) - 1);
    }
    d.w -= m.tau;  // dual side: tau lowers weight
    return d;
}

// Multiply monomials; exterior overlaps rewrite by tau_n^2 = tau xi_{n+1}
// (motivic) or vanish (ctau).  Classical has no exterior part.
std::vector<MilnorMono> milnor_mul(MilnorKind kind, MilnorMono a, const MilnorMono& b)
{
    MilnorMono out;
    out.r.resize(std::max(a.r.size(), b.r.size()), 0);
    for (std::size_t i = 0; i < out.r.size(); ++i) {
        int ra = i < a.r.size() ? a.r[i] : 0;
        int rb = i < b.r.size() ? b.r[i] : 0;
        out.r[i] = ra + rb;
    }
    out.tau = a.tau + b.tau;
    unsigned overlap = a.e & b.e;
    out.e = a.e ^ b.e;
    if (overlap) {
        if (kind != MilnorKind::motivic) return {};
        // each tau_n^2 becomes tau xi_{n+1} (exponent slot r[n])
        for (unsigned i = 0; i < 16; ++i) {
            if (!(overlap & (1u << i))) continue;
            if (out.r.size() < i + 1) out.r.resize(i + 1, 0);
            out.r[i] += 1;
            out.tau += 1;
        }
    }
    trim(out);
    return {out};
}

}  // namespace

CobarContext cobar_milnor(MilnorKind kind, int max_t)
{
    CobarContext ctx;
    ctx.ground = kind == MilnorKind::motivic ? Ground::M2 : Ground::F2;
    ctx.max_t = max_t;

    // enumerate basis monomials with 1 <= t <= max_t, tau exponent 0
    std::vector<MilnorMono> alphabet;
    std::function<void(MilnorMono, std::size_t)> rec_xi = [&](MilnorMono m, std::size_t i) {
        long long xt =
            kind == MilnorKind::classical ? (1LL << (i + 1)) - 1 : (1LL << (i + 2)) - 2;
        if (xt > max_t) {
            if (kind == MilnorKind::classical) {
                trim(m);
                int t = milnor_degree(kind, m).t;
                if (t >= 1 && t <= max_t) alphabet.push_back(m);
                return;
            }
            std::function<void(MilnorMono, unsigned)> rec_tau = [&](MilnorMono mm, unsigned j) {
                long long tt = (1LL << (j + 1)) - 1;
                if (tt > max_t || j >= 16) {
                    trim(mm);
                    int t = milnor_degree(kind, mm).t;
                    if (t >= 1 && t <= max_t) alphabet.push_back(mm);
                    return;
                }
                rec_tau(mm, j + 1);
                if (milnor_degree(kind, mm).t + tt <= max_t) {
                    mm.e |= (1u << j);
                    rec_tau(mm, j + 1);
                }
            };
            rec_tau(m, 0);
            return;
        }
        for (int k = 0;; ++k) {
            MilnorMono mm = m;
            if (mm.r.size() < i + 1) mm.r.resize(i + 1, 0);
            mm.r[i] = k;
            if (milnor_degree(kind, mm).t > max_t) break;
            rec_xi(mm, i + 1);
        }
    };
    rec_xi({}, 0);
    std::sort(alphabet.begin(), alphabet.end(), [&](const MilnorMono& a, const MilnorMono& b) {
        Bidegree da = milnor_degree(kind, a), db = milnor_degree(kind, b);
        if (!(da == db)) return da < db;
        return a < b;
    });
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());

    auto find = [&](const MilnorMono& m) -> int {
        for (std::size_t i = 0; i < alphabet.size(); ++i)
            if (alphabet[i] == m) return int(i);
        return -1;
    };

    auto name_of = [&](const MilnorMono& m) {
        std::string s;
        for (std::size_t i = 0; i < m.r.size(); ++i) {
            if (!m.r[i]) continue;
            s += (kind == MilnorKind::classical ? "z" : "x") + std::to_string(i + 1);
            if (m.r[i] > 1) s += "^" + std::to_string(m.r[i]);
        }
        for (unsigned j = 0; j < 16; ++j)
            if (m.e & (1u << j)) s += "t" + std::to_string(j);
        return s.empty() ? std::string("1") : s;
    };

    for (const MilnorMono& m : alphabet) {
        ctx.deg.push_back(milnor_degree(kind, m));
        ctx.names.push_back(name_of(m));
    }

    auto gen_coproduct = [&](bool is_tau, std::size_t n) {
        std::vector<std::pair<MilnorMono, MilnorMono>> out;
        if (!is_tau) {
            // Delta(xi_n) = sum_{i=0..n} xi_{n-i}^{2^i} (x) xi_i
            for (std::size_t i = 0; i <= n; ++i) {
                MilnorMono l, r;
                if (n - i > 0) {
                    l.r.resize(n - i, 0);
                    l.r[n - i - 1] = 1 << i;
                }
                if (i > 0) {
                    r.r.resize(i, 0);
                    r.r[i - 1] = 1;
                }
                out.push_back({l, r});
            }
        } else {
            // Delta(tau_n) = tau_n (x) 1 + sum_{i=0..n} xi_{n-i}^{2^i} (x) tau_i
            MilnorMono l0;
            l0.e = 1u << n;
            out.push_back({l0, {}});
            for (std::size_t i = 0; i <= n; ++i) {
                MilnorMono l, r;
                if (n - i > 0) {
                    l.r.resize(n - i, 0);
                    l.r[n - i - 1] = 1 << i;
                }
                r.e = 1u << i;
                out.push_back({l, r});
            }
        }
        return out;
    };

    ctx.coproduct.resize(alphabet.size());
    for (std::size_t k = 0; k < alphabet.size(); ++k) {
        const MilnorMono& m = alphabet[k];
        std::vector<std::tuple<int, MilnorMono, MilnorMono>> terms = {{0, {}, {}}};
        auto fold_factor = [&](const std::vector<std::pair<MilnorMono, MilnorMono>>& cop) {
            std::vector<std::tuple<int, MilnorMono, MilnorMono>> next;
            for (auto& [c, l, r] : terms) {
                for (auto& [dl, dr] : cop) {
                    auto ls = milnor_mul(kind, l, dl);
                    auto rs = milnor_mul(kind, r, dr);
                    for (const MilnorMono& lm : ls)
                        for (const MilnorMono& rm : rs) {
                            MilnorMono lm2 = lm, rm2 = rm;
                            int tau = c + lm2.tau + rm2.tau;
                            lm2.tau = 0;
                            rm2.tau = 0;
                            next.push_back({tau, lm2, rm2});
                        }
                }
            }
            terms = std::move(next);
        };
        for (std::size_t i = 0; i < m.r.size(); ++i) {
            auto cop = gen_coproduct(false, i + 1);
            for (int rep = 0; rep < m.r[i]; ++rep) fold_factor(cop);
        }
        for (unsigned j = 0; j < 16; ++j)
            if (m.e & (1u << j)) fold_factor(gen_coproduct(true, j));

        std::map<std::tuple<int, MilnorMono, MilnorMono>, int> count;
        for (auto& t : terms) count[t]++;
        for (auto& [t, c] : count) {
            if (c % 2 == 0) continue;
            auto& [tau, l, r] = t;
            if (milnor_degree(kind, l).t == 0 || milnor_degree(kind, r).t == 0) continue;
            int li = find(l), ri = find(r);
            if (li < 0 || ri < 0) continue;  // outside truncation
            ctx.coproduct[k].push_back({tau, li, ri});
        }
    }
    return ctx;
}

CobarComodule trivial_comodule()
{
    CobarComodule com;
    com.deg = {{0, 0}};
    com.names = {"1"};
    com.coaction.resize(1);
    return com;
}

CobarComodule dual_comodule(const CobarContext& ctx, const FPModule& m)
{
    const auto& pres = presentation(m.algebra);
    CobarComodule com;
    com.deg = m.gen_degrees;
    com.names = m.gen_names;
    com.coaction.resize(m.rank());

    auto find = [&](const std::string& name) -> int {
        for (std::size_t i = 0; i < ctx.names.size(); ++i)
            if (ctx.names[i] == name) return int(i);
        return -1;
    };

    // <nu(m_j*), b (x) m_i*> = <m_j*, b m_i>
    for (const Word& w : pres.basis) {
        if (w.empty()) continue;
        int b = find(pres.render_word(w) + "*");
        if (b < 0) continue;
        AlgebraElement elt = AlgebraElement::single(0, w);
        for (std::size_t i = 0; i < m.rank(); ++i) {
            for (auto [j, c] : m.act(elt, int(i)))
                com.coaction[std::size_t(j)].push_back({c, b, int(i)});
        }
    }
    return com;
}

CobarComplex::CobarComplex(CobarContext ctx, CobarComodule com, Bounds bounds)
    : ctx_(std::move(ctx)), com_(std::move(com)), bounds_(bounds)
{
}

const CobarComplex::Slot& CobarComplex::slot(int s, int t, int w) const
{
    auto key = std::make_tuple(s, t, w);
    auto it = slot_cache_.find(key);
    if (it != slot_cache_.end()) return it->second;

    Slot sl;
    bool m2 = ctx_.ground == Ground::M2;
    int min_cell_t = 0;
    for (Bidegree d : com_.deg) min_cell_t = std::min(min_cell_t, d.t);
    std::vector<int> word;
    std::function<void(int, int, int)> rec = [&](int pos, int tt, int ww) {
        if (pos == s) {
            for (std::size_t cell = 0; cell < com_.deg.size(); ++cell) {
                if (tt + com_.deg[cell].t != t) continue;
                int c = ww + com_.deg[cell].w - w;
                if (c < 0) continue;
                if (!m2 && c != 0) continue;
                sl.basis.push_back({word, int(cell), c});
            }
            return;
        }
        for (std::size_t a = 0; a < ctx_.deg.size(); ++a) {
            if (tt + ctx_.deg[a].t > t - min_cell_t) continue;
            word.push_back(int(a));
            rec(pos + 1, tt + ctx_.deg[a].t, ww + ctx_.deg[a].w);
            word.pop_back();
        }
    };
    rec(0, 0, 0);
    std::sort(sl.basis.begin(), sl.basis.end());
    for (std::size_t k = 0; k < sl.basis.size(); ++k) sl.index[sl.basis[k]] = int(k);
    return slot_cache_.emplace(key, std::move(sl)).first->second;
}

const BitMatrix& CobarComplex::d_matrix(int s, int t, int w) const
{
    auto key = std::make_tuple(s, t, w);
    auto it = dmat_cache_.find(key);
    if (it != dmat_cache_.end()) return it->second;

    const Slot& src = slot(s, t, w);
    const Slot& dst = slot(s + 1, t, w);
    BitMatrix m(dst.basis.size(), src.basis.size());
    for (std::size_t j = 0; j < src.basis.size(); ++j) {
        const Elem& e = src.basis[j];
        auto toggle = [&](Elem x) {
            auto f = dst.index.find(x);
            if (f == dst.index.end())
                throw std::logic_error("cobar differential left the slot");
            m.set(std::size_t(f->second), j, !m.get(std::size_t(f->second), j));
        };
        for (std::size_t i = 0; i < e.word.size(); ++i) {
            for (auto [c, l, r] : ctx_.coproduct[std::size_t(e.word[i])]) {
                Elem x = e;
                x.word[i] = l;
                x.word.insert(x.word.begin() + long(i) + 1, r);
                x.c += c;
                if (ctx_.ground == Ground::F2 && x.c != 0) continue;
                toggle(std::move(x));
            }
        }
        for (auto [c, b, cell] : com_.coaction[std::size_t(e.cell)]) {
            Elem x = e;
            x.word.push_back(b);
            x.cell = cell;
            x.c += c;
            if (ctx_.ground == Ground::F2 && x.c != 0) continue;
            toggle(std::move(x));
        }
    }
    return dmat_cache_.emplace(key, std::move(m)).first->second;
}

int CobarComplex::cohomology_dim(int s, int t, int w) const
{
    const Slot& cur = slot(s, t, w);
    if (cur.basis.empty()) return 0;
    const BitMatrix& out = d_matrix(s, t, w);
    std::size_t ker = cur.basis.size() - rank(out);
    if (s == 0) return int(ker);
    const BitMatrix& in = d_matrix(s - 1, t, w);
    return int(ker - rank(in));
}

std::vector<BitVector> CobarComplex::cohomology_basis(int s, int t, int w) const
{
    const Slot& cur = slot(s, t, w);
    std::vector<BitVector> out;
    if (cur.basis.empty()) return out;
    auto kb = kernel_basis(d_matrix(s, t, w));
    EchelonSpace bd(cur.basis.size());
    if (s > 0) {
        const BitMatrix& in = d_matrix(s - 1, t, w);
        const Slot& prev = slot(s - 1, t, w);
        for (std::size_t j = 0; j < prev.basis.size(); ++j) {
            BitVector img(cur.basis.size());
            for (std::size_t r = 0; r < cur.basis.size(); ++r)
                if (in.get(r, j)) img.set(r, true);
            bd.insert(img);
        }
    }
    EchelonSpace span(cur.basis.size());
    for (BitVector& v : kb) {
        BitVector red = bd.reduce(v);
        if (!red.is_zero() && span.insert(red)) out.push_back(v);
    }
    return out;
}

BitVector CobarComplex::class_of(int s, int t, int w, const BitVector& cocycle) const
{
    const Slot& cur = slot(s, t, w);
    EchelonSpace bd(cur.basis.size());
    if (s > 0) {
        const BitMatrix& in = d_matrix(s - 1, t, w);
        const Slot& prev = slot(s - 1, t, w);
        for (std::size_t j = 0; j < prev.basis.size(); ++j) {
            BitVector img(cur.basis.size());
            for (std::size_t r = 0; r < cur.basis.size(); ++r)
                if (in.get(r, j)) img.set(r, true);
            bd.insert(img);
        }
    }
    auto basis = cohomology_basis(s, t, w);
    BitVector target = bd.reduce(cocycle);
    BitMatrix m(cur.basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        BitVector rb = bd.reduce(basis[j]);
        for (std::size_t r = 0; r < cur.basis.size(); ++r)
            if (rb.get(r)) m.set(r, j, true);
    }
    auto x = solve(m, target);
    if (!x) throw std::logic_error("class_of: vector is not a cocycle class");
    return *x;
}

BitVector CobarComplex::product(int sa, int ta, int wa, const BitVector& a, int sb, int tb,
                                int wb, const BitVector& b) const
{
    const Slot& A = slot(sa, ta, wa);
    const Slot& B = slot(sb, tb, wb);
    const Slot& C = slot(sa + sb, ta + tb, wa + wb);
    BitVector out(C.basis.size());
    for (std::size_t i = 0; i < A.basis.size(); ++i) {
        if (!a.get(i)) continue;
        if (A.basis[i].cell != 0 || A.basis[i].c < 0)
            throw std::logic_error("cobar product requires a trivial left factor");
        for (std::size_t j = 0; j < B.basis.size(); ++j) {
            if (!b.get(j)) continue;
            Elem e;
            e.word = A.basis[i].word;
            e.word.insert(e.word.end(), B.basis[j].word.begin(), B.basis[j].word.end());
            e.cell = B.basis[j].cell;
            e.c = A.basis[i].c + B.basis[j].c;
            auto f = C.index.find(e);
            if (f == C.index.end()) throw std::logic_error("cobar product left the slot");
            out.flip(std::size_t(f->second));
        }
    }
    return out;
}

std::map<Trigrade, int> cobar_cohomology(const CobarComplex& cx, int s_max, int t_lo,
                                         int t_hi, int w_lo, int w_hi)
{
    std::map<Trigrade, int> out;
    for (int s = 0; s <= s_max; ++s)
        for (int t = t_lo; t <= t_hi; ++t)
            for (int w = w_lo; w <= w_hi; ++w) {
                int d = cx.cohomology_dim(s, t, w);
                if (d) out[{s, t, w}] = d;
            }
    return out;
}

}  // namespace motcalc
