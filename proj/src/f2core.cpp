#include "motcalc/f2core.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace motcalc {

std::size_t BitVector::lowest_set() const
{
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i]) {
            std::size_t b = std::size_t(std::countr_zero(words_[i]));
            std::size_t idx = i * 64 + b;
            return idx < n_ ? idx : npos;
        }
    }
    return npos;
}

void BitMatrix::append_row(const BitVector& v)
{
    assert(v.size() == cols_);
    row_data_.push_back(v);
    ++rows_;
}

BitVector BitMatrix::apply(const BitVector& v) const
{
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::apply: size mismatch");
    BitVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        bool acc = false;
        for (std::size_t c = 0; c < cols_; ++c)
            if (row_data_[r].get(c) && v.get(c)) acc = !acc;
        out.set(r, acc);
    }
    return out;
}

RrefResult rref(const BitMatrix& m)
{
    RrefResult res;
    res.reduced = m;
    BitMatrix& a = res.reduced;
    std::size_t pr = 0;  // next pivot row
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        std::size_t sel = std::size_t(-1);
        for (std::size_t r = pr; r < m.rows(); ++r) {
            if (a.get(r, c)) {
                sel = r;
                break;
            }
        }
        if (sel == std::size_t(-1)) continue;
        if (sel != pr) std::swap(a.row(sel), a.row(pr));
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != pr && a.get(r, c)) a.row(r) ^= a.row(pr);
        res.pivots.push_back(c);
        ++pr;
    }
    res.rank = pr;
    return res;
}

std::size_t rank(const BitMatrix& m)
{
    return rref(m).rank;
}

std::vector<BitVector> kernel_basis(const BitMatrix& m)
{
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;

    std::vector<BitVector> basis;
    for (std::size_t free_c = 0; free_c < m.cols(); ++free_c) {
        if (is_pivot[free_c]) continue;
        BitVector v(m.cols());
        v.set(free_c, true);
        for (std::size_t pr = 0; pr < r.pivots.size(); ++pr)
            if (r.reduced.get(pr, free_c)) v.set(r.pivots[pr], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b)
{
    if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
    // Eliminate on [m | b] tracking the augmented column separately.
    BitMatrix a = m;
    BitVector rhs = b;
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> pivot_row;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        std::size_t sel = std::size_t(-1);
        for (std::size_t r = pr; r < m.rows(); ++r)
            if (a.get(r, c)) {
                sel = r;
                break;
            }
        if (sel == std::size_t(-1)) continue;
        if (sel != pr) {
            std::swap(a.row(sel), a.row(pr));
            bool t = rhs.get(sel);
            rhs.set(sel, rhs.get(pr));
            rhs.set(pr, t);
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != pr && a.get(r, c)) {
                a.row(r) ^= a.row(pr);
                if (rhs.get(pr)) rhs.flip(r);
            }
        }
        pivots.push_back(c);
        pivot_row.push_back(pr);
        ++pr;
    }
    // Inconsistent if some zero row has rhs 1.
    for (std::size_t r = pr; r < m.rows(); ++r)
        if (rhs.get(r)) return std::nullopt;

    BitVector x(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (rhs.get(pivot_row[i])) x.set(pivots[i], true);
    return x;
}

BitVector EchelonSpace::reduce(BitVector v) const
{
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivot_of_row_[i])) v ^= rows_[i];
    return v;
}

bool EchelonSpace::insert(BitVector v)
{
    v = reduce(std::move(v));
    std::size_t p = v.lowest_set();
    if (p == BitVector::npos) return false;
    // Keep earlier rows reduced against the new one.
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].get(p)) rows_[i] ^= v;
    rows_.push_back(std::move(v));
    pivot_of_row_.push_back(p);
    return true;
}

}  // namespace motcalc
