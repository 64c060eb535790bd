#include "motcalc/massey.hpp"

#include <stdexcept>

namespace motcalc {

namespace {

// Solve d u = p in the slot one cobar degree below p; p must be a boundary.
std::optional<BitVector> bound(const CobarComplex& cx, int s, int t, int w, const BitVector& p)
{
    // d : C^{s-1} -> C^s
    return solve(cx.d_matrix(s - 1, t, w), p);
}

BitVector zero_like(const CobarComplex& cx, int s, int t, int w)
{
    return BitVector(cx.slot(s, t, w).basis.size());
}

}  // namespace

Cocycle cohomology_class(const CobarComplex& cx, int s, int t, int w, int index)
{
    auto basis = cx.cohomology_basis(s, t, w);
    if (index >= int(basis.size()))
        throw std::out_of_range("cohomology_class: no such class at the given trigrade");
    return {s, t, w, basis[std::size_t(index)]};
}

BitVector class_product(const CobarComplex& cx, const Cocycle& a, const Cocycle& b)
{
    BitVector p = cx.product(a.s, a.t, a.w, a.vec, b.s, b.t, b.w, b.vec);
    return cx.class_of(a.s + b.s, a.t + b.t, a.w + b.w, p);
}

MasseyResult massey_triple(const CobarComplex& cx, const Cocycle& a, const Cocycle& b,
                           const Cocycle& c)
{
    MasseyResult res;
    res.deg = {a.s + b.s + c.s - 1, a.t + b.t + c.t, a.w + b.w + c.w};

    // nullhomotopies u, v with d u = a b, d v = b c
    BitVector ab = cx.product(a.s, a.t, a.w, a.vec, b.s, b.t, b.w, b.vec);
    BitVector bc = cx.product(b.s, b.t, b.w, b.vec, c.s, c.t, c.w, c.vec);
    auto u = bound(cx, a.s + b.s, a.t + b.t, a.w + b.w, ab);
    if (!u) {
        res.error = "product [a][b] is not a coboundary";
        return res;
    }
    auto v = bound(cx, b.s + c.s, b.t + c.t, b.w + c.w, bc);
    if (!v) {
        res.error = "product [b][c] is not a coboundary";
        return res;
    }
    res.defined = true;

    // value = a v + u c
    Cocycle uu{a.s + b.s - 1, a.t + b.t, a.w + b.w, *u};
    Cocycle vv{b.s + c.s - 1, b.t + c.t, b.w + c.w, *v};
    BitVector av = cx.product(a.s, a.t, a.w, a.vec, vv.s, vv.t, vv.w, vv.vec);
    BitVector uc = cx.product(uu.s, uu.t, uu.w, uu.vec, c.s, c.t, c.w, c.vec);
    av ^= uc;
    res.value = cx.class_of(res.deg.s, res.deg.t, res.deg.w, av);

    // indeterminacy: a * H(v-degree) + H(u-degree) * c
    EchelonSpace span(std::size_t(
        cx.cohomology_basis(res.deg.s, res.deg.t, res.deg.w).size()));
    auto add = [&](const BitVector& cls) {
        if (span.insert(cls)) res.indeterminacy.push_back(cls);
    };
    for (const BitVector& z : cx.cohomology_basis(vv.s, vv.t, vv.w)) {
        BitVector p = cx.product(a.s, a.t, a.w, a.vec, vv.s, vv.t, vv.w, z);
        add(cx.class_of(res.deg.s, res.deg.t, res.deg.w, p));
    }
    for (const BitVector& z : cx.cohomology_basis(uu.s, uu.t, uu.w)) {
        BitVector p = cx.product(uu.s, uu.t, uu.w, z, c.s, c.t, c.w, c.vec);
        add(cx.class_of(res.deg.s, res.deg.t, res.deg.w, p));
    }
    return res;
}

std::vector<BitVector> massey_bruteforce_span(const CobarComplex& cx, const Cocycle& a,
                                              const Cocycle& b, const Cocycle& c, int max_bits)
{
    MasseyResult base = massey_triple(cx, a, b, c);
    if (!base.defined) throw std::logic_error("massey_bruteforce_span: bracket undefined");

    BitVector ab = cx.product(a.s, a.t, a.w, a.vec, b.s, b.t, b.w, b.vec);
    BitVector bc = cx.product(b.s, b.t, b.w, b.vec, c.s, c.t, c.w, c.vec);
    int su = a.s + b.s - 1, tu = a.t + b.t, wu = a.w + b.w;
    int sv = b.s + c.s - 1, tv = b.t + c.t, wv = b.w + c.w;
    BitVector u0 = *bound(cx, su + 1, tu, wu, ab);
    BitVector v0 = *bound(cx, sv + 1, tv, wv, bc);
    auto ku = kernel_basis(cx.d_matrix(su, tu, wu));
    auto kv = kernel_basis(cx.d_matrix(sv, tv, wv));
    if (int(ku.size() + kv.size()) > max_bits)
        throw std::length_error("massey_bruteforce_span: nullhomotopy space too large");

    std::vector<BitVector> diffs;
    EchelonSpace span(cx.cohomology_basis(base.deg.s, base.deg.t, base.deg.w).size());
    std::size_t n = ku.size() + kv.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        BitVector u = u0, v = v0;
        for (std::size_t i = 0; i < ku.size(); ++i)
            if (mask & (std::size_t(1) << i)) u ^= ku[i];
        for (std::size_t i = 0; i < kv.size(); ++i)
            if (mask & (std::size_t(1) << (ku.size() + i))) v ^= kv[i];
        BitVector val = cx.product(a.s, a.t, a.w, a.vec, sv, tv, wv, v);
        val ^= cx.product(su, tu, wu, u, c.s, c.t, c.w, c.vec);
        BitVector cls = cx.class_of(base.deg.s, base.deg.t, base.deg.w, val);
        cls ^= base.value;
        if (span.insert(cls)) diffs.push_back(cls);
    }
    return diffs;
}

}  // namespace motcalc
