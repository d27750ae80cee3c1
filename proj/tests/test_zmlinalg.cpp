#include "checks.hpp"

#include "trizp/errors.hpp"

#include <doctest.h>

using namespace trizp;

namespace {

SolutionModule span_of(Residue m, std::size_t cols, std::vector<Vec> rows) {
    return SolutionModule(MatrixZm(Modulus(m), cols, rows));
}

}  // namespace

TEST_CASE("modulus rejects even and tiny values") {
    CHECK_THROWS_AS(Modulus(4), EvenModulusError);
    CHECK_THROWS_AS(Modulus(2), InvalidArgument);
    CHECK_THROWS_AS(Modulus(1), InvalidArgument);
    CHECK_NOTHROW(Modulus(15));
    try {
        Modulus bad(4);
    } catch (const EvenModulusError& e) {
        CHECK(std::string(e.what()).find("2-torsion-free") != std::string::npos);
    }
}

TEST_CASE("modulus arithmetic reduces into [0, m)") {
    const Modulus m(9);
    CHECK(m.reduce(-1) == 8);
    CHECK(m.add(5, 7) == 3);
    CHECK(m.sub(2, 5) == 6);
    CHECK(m.mul(4, 7) == 1);
    CHECK(m.neg(0) == 0);
    CHECK(m.neg(3) == 6);
}

TEST_CASE("normalizing unit maps a residue to its gcd with m") {
    for (Residue mv : {3, 9, 15, 21, 45}) {
        const Modulus m(mv);
        for (Residue a = 0; a < mv; ++a) {
            const Residue u = normalizing_unit(a, m);
            CHECK(gcd_residue(u, mv) == 1);
            const Residue g = a == 0 ? 0 : gcd_residue(a, mv);
            CHECK(m.mul(u, a) == g);
        }
    }
}

TEST_CASE("howell form of diag(3, 3) mod 9 spans 9 elements") {
    const auto s = span_of(9, 2, {{3, 0}, {0, 3}});
    CHECK(s.cardinality() == 9);
    CHECK(s.generators().rows() == 2);
    CHECK(s.generators().at(0, 0) == 3);
    CHECK(s.generators().at(1, 1) == 3);
}

TEST_CASE("kernel of [3] mod 9 has three elements") {
    const auto k = kernel(MatrixZm(Modulus(9), 1, std::vector<Vec>{{3}}));
    CHECK(k.cardinality() == 3);
    CHECK(member(Vec{3}, k));
    CHECK(member(Vec{6}, k));
    CHECK_FALSE(member(Vec{1}, k));
}

TEST_CASE("membership respects zero divisors") {
    const auto s = span_of(9, 1, {{3}});
    CHECK_FALSE(member(Vec{1}, s));
    CHECK(member(Vec{6}, s));
    CHECK(member(Vec{0}, s));
}

TEST_CASE("projection of span{[3,1]} mod 9 onto the second coordinate is everything") {
    const auto s = span_of(9, 2, {{3, 1}});
    CHECK(s.cardinality() == 9);
    const std::vector<std::size_t> coords{1};
    const auto p = module_project(s, coords);
    CHECK(p.cardinality() == 9);
    CHECK(p == SolutionModule::full(Modulus(9), 1));
}

TEST_CASE("annihilator rows are recovered (Howell property)") {
    // span{[3, 1]} mod 9 contains 3*[3,1] = [0, 3]; a plain echelon form
    // with the single row [3, 1] would miss that [0, 3] is a member.
    const auto s = span_of(9, 2, {{3, 1}});
    CHECK(member(Vec{0, 3}, s));
    CHECK_FALSE(member(Vec{0, 1}, s));
    CHECK(s.generators().rows() == 2);
}

TEST_CASE("canonical form is independent of generator order and redundancy") {
    const auto a = span_of(15, 3, {{5, 3, 0}, {0, 6, 9}, {10, 0, 3}});
    const auto b = span_of(15, 3, {{10, 0, 3}, {5, 3, 0}, {0, 6, 9}, {0, 12, 3}, {15, 30, 45}});
    CHECK(a == b);
    CHECK(a.generators() == b.generators());
}

TEST_CASE("zero and full modules") {
    const Modulus m(15);
    CHECK(SolutionModule::zero(m, 3).cardinality() == 1);
    CHECK(SolutionModule::full(m, 3).cardinality() == 3375);
    CHECK(kernel(MatrixZm(m, 0, 2)) == SolutionModule::full(m, 2));
    CHECK(kernel(MatrixZm::identity(m, 2)) == SolutionModule::zero(m, 2));
}

TEST_CASE("cardinality beyond 64 bits is exact") {
    const auto s = SolutionModule::full(Modulus(1'000'003), 5);
    CHECK(s.cardinality_string() == "1000015000090000270000405000243");
}

TEST_CASE("module sum, subset and separating generator") {
    const auto a = span_of(9, 2, {{3, 0}});
    const auto b = span_of(9, 2, {{0, 1}});
    const auto sum = module_sum(a, b);
    CHECK(sum.cardinality() == 27);
    CHECK(module_subset(a, sum));
    CHECK(module_subset(b, sum));
    CHECK_FALSE(module_subset(sum, a));
    const auto w = first_non_member(sum, a);
    REQUIRE(w.has_value());
    CHECK_FALSE(member(*w, a));
    CHECK_FALSE(first_non_member(a, sum).has_value());
}

TEST_CASE("dimension and modulus mismatches throw") {
    const auto a = span_of(9, 2, {{3, 0}});
    CHECK_THROWS_AS(module_sum(a, span_of(9, 3, {{1, 0, 0}})), DimensionMismatch);
    CHECK_THROWS_AS(module_subset(a, span_of(15, 2, {{1, 0}})), ModulusMismatch);
    const std::vector<std::size_t> bad{2};
    CHECK_THROWS_AS(module_project(a, bad), InvalidArgument);
}

TEST_CASE("member enumeration honours the bound") {
    const auto s = SolutionModule::full(Modulus(3), 7);
    CHECK_THROWS_AS(for_each_member(s, 1000, [](const Vec&) {}), EnumerationBoundExceeded);
    std::size_t n = 0;
    for_each_member(SolutionModule::full(Modulus(3), 6), 1000, [&](const Vec&) { ++n; });
    CHECK(n == 729);
}

TEST_CASE("matrix products and transpose") {
    const Modulus m(9);
    const MatrixZm a(m, 2, std::vector<Vec>{{1, 2}, {3, 4}});
    const MatrixZm b(m, 2, std::vector<Vec>{{5, 6}, {7, 8}});
    const auto c = a.multiply(b);
    CHECK(c.row_vec(0) == Vec{1, 4});  // 19, 22
    CHECK(c.row_vec(1) == Vec{7, 5});  // 43, 50
    CHECK(a.transpose().row_vec(0) == Vec{1, 3});
    CHECK(a.multiply(Vec{1, 1}) == Vec{3, 7});
}

TEST_CASE("random small matrices agree with exhaustive enumeration") {
    std::mt19937_64 rng(20240611);
    for (std::int64_t m : {3, 9, 15}) {
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
            const auto a = checks::random_matrix(rng, rows, cols, m);
            const auto err = checks::compare_linalg(a, cols, m);
            INFO(err);
            CHECK(err.empty());
        }
    }
}

TEST_CASE("kernel is annihilated and orthogonal-sum cardinality holds") {
    // |ker A| * |im A| = m^n for A: Z_m^n -> Z_m^r.
    std::mt19937_64 rng(7);
    for (std::int64_t m : {9, 15, 21}) {
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
            const auto a = checks::random_matrix(rng, rows, cols, m);
            const auto mat = checks::to_matrix(a, cols, m);
            const auto ker = kernel(mat);
            for (std::size_t r = 0; r < ker.generators().rows(); ++r) {
                const auto y = mat.multiply(ker.generators().row(r));
                CHECK(std::all_of(y.begin(), y.end(), [](Residue v) { return v == 0; }));
            }
            const auto image = SolutionModule(mat.transpose());
            BigCount total = 1;
            for (std::size_t j = 0; j < cols; ++j) total *= m;
            CHECK(ker.cardinality() * image.cardinality() == total);
        }
    }
}
