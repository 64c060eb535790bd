#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Exact linear algebra over F2 plus the grading bookkeeping shared by all
// other modules.
//
// Grading conventions used throughout this library:
//  - Bidegree (t, w): topological degree t and motivic weight w.  Classical
//    (non-motivic) objects live at w = 0.
//  - Trigrade (s, t, w): homological filtration s, internal degree t, weight
//    w.  The stem is t - s.
//  - The ground parameter tau has bidegree (0, -1): multiplying a class by
//    tau^c lowers its weight by c.

namespace motcalc {

struct Bidegree {
    int t = 0;
    int w = 0;

    friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.t + b.t, a.w + b.w}; }
    friend Bidegree operator-(Bidegree a, Bidegree b) { return {a.t - b.t, a.w - b.w}; }
    friend bool operator==(Bidegree a, Bidegree b) { return a.t == b.t && a.w == b.w; }
    friend bool operator!=(Bidegree a, Bidegree b) { return !(a == b); }
    friend bool operator<(Bidegree a, Bidegree b)
    {
        return a.t != b.t ? a.t < b.t : a.w < b.w;
    }
};

struct Trigrade {
    int s = 0;
    int t = 0;
    int w = 0;

    int stem() const { return t - s; }

    friend Trigrade operator+(Trigrade a, Trigrade b)
    {
        return {a.s + b.s, a.t + b.t, a.w + b.w};
    }
    friend bool operator==(Trigrade a, Trigrade b)
    {
        return a.s == b.s && a.t == b.t && a.w == b.w;
    }
    friend bool operator!=(Trigrade a, Trigrade b) { return !(a == b); }
    friend bool operator<(Trigrade a, Trigrade b)
    {
        if (a.s != b.s) return a.s < b.s;
        if (a.t != b.t) return a.t < b.t;
        return a.w < b.w;
    }
};

// Dense bit vector, 64 bits per word.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v)
    {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= m;
        else
            words_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

    void operator^=(const BitVector& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] ^= o.words_[i];
    }
    bool is_zero() const
    {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }
    // Index of lowest set bit, or npos.
    static constexpr std::size_t npos = std::size_t(-1);
    std::size_t lowest_set() const;

    friend bool operator==(const BitVector& a, const BitVector& b)
    {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

private:
    std::size_t n_ = 0;
    std::vector<uint64_t> words_;
};

// Dense packed F2 matrix.  Deterministic pivoting (lowest row, lowest
// column) so downstream chart output is reproducible bit for bit.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_data_(rows, BitVector(cols))
    {
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return row_data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { row_data_[r].set(c, v); }
    BitVector& row(std::size_t r) { return row_data_[r]; }
    const BitVector& row(std::size_t r) const { return row_data_[r]; }

    void append_row(const BitVector& v);

    // m * v, where v has size cols().
    BitVector apply(const BitVector& v) const;

    friend bool operator==(const BitMatrix& a, const BitMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_data_ == b.row_data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVector> row_data_;
};

struct RrefResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column per pivot row
    BitMatrix reduced;
};

RrefResult rref(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

// Basis of { v : m v = 0 }.  Size is cols - rank.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

// Solves m x = b; absent exactly when b is not in the column space.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

// Incremental row-space container: reduce vectors against an accumulating
// echelon basis.  Used for quotient-space bookkeeping in resolutions.
class EchelonSpace {
public:
    explicit EchelonSpace(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    // Reduces v against the basis; returns the remainder.
    BitVector reduce(BitVector v) const;

    // Reduce and, if a nonzero remainder is left, add it to the basis.
    // Returns true when the vector enlarged the space.
    bool insert(BitVector v);

    bool contains(const BitVector& v) const { return reduce(v).is_zero(); }

private:
    std::size_t dim_;
    std::vector<BitVector> rows_;             // echelon rows
    std::vector<std::size_t> pivot_of_row_;   // pivot column of each row
};

}  // namespace motcalc
