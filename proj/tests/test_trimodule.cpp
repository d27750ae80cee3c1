#include "checks.hpp"

#include "trizp/errors.hpp"
#include "trizp/trimodule.hpp"

#include <doctest.h>

using namespace trizp;

namespace {

const Modulus m3(3);

TriangularRing tri_z3() {
    const auto z3 = ring_zm(m3);
    return make_triangular(z3, Bimodule::regular(z3), z3);
}

oracle::MatrixRep block_model() {
    // Tri(Mat2, 2x1 columns, Mat1) inside 3x3 matrices.
    oracle::MatrixRep r;
    r.m = 3;
    r.n = 3;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            r.basis.push_back(oracle::unit(3, i, j));
            r.pos.emplace_back(i, j);
        }
    for (std::size_t i = 0; i < 2; ++i) {
        r.basis.push_back(oracle::unit(3, i, 2));
        r.pos.emplace_back(i, 2);
    }
    r.basis.push_back(oracle::unit(3, 2, 2));
    r.pos.emplace_back(2, 2);
    return r;
}

}  // namespace

TEST_CASE("zero bimodule is not faithful; witness is the unity") {
    const auto z3 = ring_zm(m3);
    const auto f = check_faithful(Bimodule::zero(z3, z3));
    CHECK(f.kind == Faithfulness::Kind::left_witness);
    REQUIRE(f.witness.has_value());
    CHECK(f.witness->coords == Vec{1});
    CHECK_THROWS_AS(make_triangular(z3, Bimodule::zero(z3, z3), z3), NotFaithful);
}

TEST_CASE("regular and column bimodules are faithful") {
    const auto z3 = ring_zm(m3);
    CHECK(check_faithful(Bimodule::regular(z3)).ok());
    CHECK(check_faithful(Bimodule::scalar_columns(m3, 2)).ok());
    CHECK(check_faithful(Bimodule::matrix_block(m3, 2, 1)).ok());
    CHECK(check_faithful(Bimodule::regular(ring_upper_triangular(m3, 2))).ok());
}

TEST_CASE("one-sided faithfulness failures name the side") {
    // Z3 (+) Z3 acting on Z3 through its first factor only: (0, 1) kills M.
    const auto z3 = ring_zm(m3);
    const auto p = ring_product(z3, z3);
    const auto m = Bimodule::make(p, z3, 1, {{{1}}, {{0}}}, {{{1}}}, "first factor");
    const auto f = check_faithful(m);
    CHECK(f.kind == Faithfulness::Kind::left_witness);
    REQUIRE(f.witness.has_value());
    CHECK_FALSE(p.is_zero(*f.witness));
    CHECK(f.witness->coords[0] == 0);

    const auto mr = Bimodule::make(z3, p, 1, {{{1}}}, {{{0}, {1}}}, "second factor");
    const auto fr = check_faithful(mr);
    CHECK(fr.kind == Faithfulness::Kind::right_witness);
    REQUIRE(fr.witness.has_value());
    CHECK(fr.witness->coords[1] == 0);
    CHECK_THROWS_AS(make_triangular(p, m, z3), NotFaithful);
}

TEST_CASE("bimodule validation") {
    const auto z3 = ring_zm(m3);
    CHECK_THROWS_AS(Bimodule::make(z3, z3, 1, {{{2}}}, {{{1}}}, "not unital"), NotUnitalModule);
    CHECK_THROWS_AS(Bimodule::make(z3, z3, 1, {{{1}}}, {{{2}}}, "not unital"), NotUnitalModule);
}

TEST_CASE("Tri(Z3, Z3, Z3) is UT(2)/Z3") {
    const auto t = tri_z3();
    CHECK(t.ring.same_structure(ring_upper_triangular(m3, 2)));
    CHECK(checks::compare_ring(t.ring, oracle::tri_scalar(3, 1)).empty());
    CHECK(t.p.coords == Vec{1, 0, 0});
    CHECK(t.q.coords == Vec{0, 0, 1});
    CHECK(t.m_block.begin == 1);
    CHECK(t.m_block.size == 1);
}

TEST_CASE("triangular rings match their matrix models") {
    const auto z9 = ring_zm(Modulus(9));
    CHECK(checks::compare_ring(make_triangular(z9, Bimodule::regular(z9), z9).ring,
                               oracle::tri_scalar(9, 1))
              .empty());
    const auto z3 = ring_zm(m3);
    const auto t2 = make_triangular(z3, Bimodule::scalar_columns(m3, 2), z3);
    CHECK(t2.ring.rank() == 4);
    CHECK(checks::compare_ring(t2.ring, oracle::tri_scalar(3, 2)).empty());
    const auto tb = make_triangular(ring_matrices(m3, 2), Bimodule::matrix_block(m3, 2, 1),
                                    ring_matrices(m3, 1));
    CHECK(tb.ring.rank() == 7);
    CHECK(checks::compare_ring(tb.ring, block_model()).empty());
}

TEST_CASE("constructor rejects mismatched pieces") {
    const auto z3 = ring_zm(m3);
    const auto z9 = ring_zm(Modulus(9));
    CHECK_THROWS_AS(make_triangular(z9, Bimodule::regular(z3), z3), Error);
    CHECK_THROWS_AS(make_triangular(ring_matrices(m3, 2), Bimodule::regular(z3), z3), RingMismatch);
}

TEST_CASE("Peirce decomposition") {
    const auto t = tri_z3();
    const auto& r = t.ring;
    const auto one = peirce(r.one(), t);
    CHECK(one.pxp == t.p);
    CHECK(r.is_zero(one.pxq));
    CHECK(one.qxq == t.q);
    const auto pp = peirce(t.p, t);
    CHECK(pp.pxp == t.p);
    CHECK(r.is_zero(pp.pxq));
    CHECK(r.is_zero(pp.qxq));
    const auto e12 = r.basis(1);
    const auto pe = peirce(e12, t);
    CHECK(r.is_zero(pe.pxp));
    CHECK(pe.pxq == e12);
    CHECK(r.is_zero(pe.qxq));
    for (const auto& x : all_elements(r)) {
        CHECK(r.is_zero(peirce_qxp(x, t)));
        const auto parts = peirce(x, t);
        CHECK(r.add(r.add(parts.pxp, parts.pxq), parts.qxq) == x);
    }
}

TEST_CASE("P and Q are complementary idempotents") {
    const auto z3 = ring_zm(m3);
    const auto t = make_triangular(z3, Bimodule::scalar_columns(m3, 2), z3);
    const auto& r = t.ring;
    CHECK(is_idempotent(r, t.p));
    CHECK(is_idempotent(r, t.q));
    CHECK(r.add(t.p, t.q) == r.one());
    CHECK(r.is_zero(r.mul(t.p, t.q)));
    CHECK(r.is_zero(r.mul(t.q, t.p)));
}

TEST_CASE("trivial extension multiplication") {
    const auto t = tri_z3();
    const auto ext = trivial_extension(t.ring);
    CHECK(ext.rank() == 6);
    CHECK(ext.order() == 729u);
    CHECK(checks::compare_ring(ext, oracle::trivial_extension(oracle::tri_scalar(3, 1))).empty());
    const auto unit = ext.element({1, 0, 1, 0, 0, 0});
    CHECK(unit == ext.one());
    for (const auto& x : all_elements(ext)) CHECK(ext.mul(unit, x) == x);
    const auto m1 = ext.element({0, 0, 0, 1, 2, 0});
    const auto m2 = ext.element({0, 0, 0, 2, 1, 1});
    CHECK(ext.is_zero(ext.mul(m1, m2)));
}
