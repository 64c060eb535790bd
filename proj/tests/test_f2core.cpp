#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "motcalc/f2core.hpp"

using namespace motcalc;

namespace {

BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows)
{
    std::size_t r = rows.size();
    std::size_t c = rows.begin()->size();
    BitMatrix m(r, c);
    std::size_t i = 0;
    for (auto& row : rows) {
        std::size_t j = 0;
        for (int v : row) m.set(i, j++, v != 0);
        ++i;
    }
    return m;
}

BitMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c)
{
    BitMatrix m(r, c);
    std::bernoulli_distribution bit(0.4);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, bit(rng));
    return m;
}

}  // namespace

TEST_CASE("rref identity and zero")
{
    BitMatrix id = from_rows({{1, 0}, {0, 1}});
    auto r = rref(id);
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});

    BitMatrix z(2, 2);
    auto rz = rref(z);
    CHECK(rz.rank == 0);
    CHECK(rz.pivots.empty());
}

TEST_CASE("rref rank-one matrix")
{
    // [[1,1],[1,1]] row-reduces to a single pivot in column 0
    BitMatrix m = from_rows({{1, 1}, {1, 1}});
    auto r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref is idempotent")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        BitMatrix m = random_matrix(rng, 6, 9);
        auto r1 = rref(m);
        auto r2 = rref(r1.reduced);
        CHECK(r1.reduced == r2.reduced);
    }
}

TEST_CASE("kernel basis basics")
{
    BitMatrix id = from_rows({{1, 0}, {0, 1}});
    CHECK(kernel_basis(id).empty());

    BitMatrix z(3, 3);
    CHECK(kernel_basis(z).size() == 3);

    BitMatrix row = from_rows({{1, 1}});
    auto k = kernel_basis(row);
    REQUIRE(k.size() == 1);
    CHECK(k[0].get(0));
    CHECK(k[0].get(1));
}

TEST_CASE("solve basics")
{
    BitMatrix id = from_rows({{1, 0}, {0, 1}});
    BitVector b(2);
    b.set(0, true);
    auto x = solve(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    BitMatrix z(2, 2);
    CHECK(!solve(z, b).has_value());

    // [[1,1],[0,1]] x = [1,0]; verify by back-substitution
    BitMatrix m = from_rows({{1, 1}, {0, 1}});
    BitVector b2(2);
    b2.set(0, true);
    auto x2 = solve(m, b2);
    REQUIRE(x2.has_value());
    CHECK(m.apply(*x2) == b2);
}

TEST_CASE("rank + kernel = cols on random matrices")
{
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t r = 1 + rng() % 8;
        std::size_t c = 1 + rng() % 8;
        BitMatrix m = random_matrix(rng, r, c);
        auto k = kernel_basis(m);
        CHECK(rank(m) + k.size() == c);
        for (const BitVector& v : k) CHECK(m.apply(v).is_zero());
    }
}

TEST_CASE("solve succeeds iff b in column space")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t r = 1 + rng() % 7;
        std::size_t c = 1 + rng() % 7;
        BitMatrix m = random_matrix(rng, r, c);
        BitVector b(r);
        for (std::size_t i = 0; i < r; ++i) b.set(i, rng() & 1);

        // rank test against augmented matrix
        BitMatrix aug(r, c + 1);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < c; ++j) aug.set(i, j, m.get(i, j));
            aug.set(i, c, b.get(i));
        }
        bool solvable = rank(aug) == rank(m);
        auto x = solve(m, b);
        CHECK(x.has_value() == solvable);
        if (x) CHECK(m.apply(*x) == b);
    }
}

TEST_CASE("echelon space insert/reduce")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t dim = 1 + rng() % 10;
        EchelonSpace sp(dim);
        BitMatrix rows(0, dim);
        for (int i = 0; i < 6; ++i) {
            BitVector v(dim);
            for (std::size_t j = 0; j < dim; ++j) v.set(j, rng() & 1);
            rows.append_row(v);
            sp.insert(v);
            CHECK(sp.rank() == rank(rows));
            CHECK(sp.contains(v));
        }
    }
}
