#include "checks.hpp"

#include "trizp/conditions.hpp"
#include "trizp/errors.hpp"
#include "trizp/funcmap.hpp"

#include <doctest.h>

#include <random>

using namespace trizp;

namespace {

const Modulus m3(3);

FiniteRing ut2() { return ring_upper_triangular(m3, 2); }

using IntMat = oracle::IntMat;

// Random unit upper-triangular change of basis and its inverse.
std::pair<IntMat, IntMat> random_unitriangular(std::size_t k, std::int64_t m, std::mt19937_64& rng) {
    IntMat b(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        b[i][i] = 1;
        for (std::size_t j = i + 1; j < k; ++j) b[i][j] = static_cast<std::int64_t>(rng() % m);
    }
    // Solve b * inv = I column by column, back substitution.
    IntMat inv(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t i = k; i-- > 0;) {
            std::int64_t s = i == c ? 1 : 0;
            for (std::size_t j = i + 1; j < k; ++j) s -= b[i][j] * inv[j][c];
            inv[i][c] = oracle::mod(s, m);
        }
    return {b, inv};
}

IntMat matmul(const IntMat& a, const IntMat& b, std::int64_t m) {
    IntMat c(a.size(), std::vector<std::int64_t>(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] = oracle::mod(c[i][j] + a[i][k] * b[k][j], m);
    return c;
}

Vec column(const IntMat& a, std::size_t j) {
    Vec v;
    for (const auto& r : a) v.push_back(r[j]);
    return v;
}

// The same ring written in the basis given by the columns of b.
FiniteRing rebase(const FiniteRing& r, const IntMat& b, const IntMat& inv) {
    const std::size_t k = r.rank();
    const auto m = r.modulus().value();
    StructureConstants sc(k, std::vector<Vec>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const auto prod = r.mul(r.element(column(b, i)), r.element(column(b, j))).coords;
            sc[i][j] = oracle::mat_vec(inv, prod, m);
        }
    return FiniteRing::make(r.modulus(), k, sc, oracle::mat_vec(inv, r.one().coords, m), r.label() + "'");
}

AdditiveMap rebase_map(const AdditiveMap& f, const FiniteRing& target, const IntMat& b, const IntMat& inv) {
    const auto m = f.ring().modulus().value();
    IntMat fm = f.matrix().to_rows();
    const auto conj = matmul(matmul(inv, fm, m), b, m);
    return {target, MatrixZm(target.modulus(), target.rank(), conj)};
}

struct Predicates {
    bool centralizer, jordan_centralizer, derivation, jordan_derivation, gen_derivation,
        gen_jordan_derivation;
    friend bool operator==(const Predicates&, const Predicates&) = default;
};

Predicates evaluate(const AdditiveMap& f) {
    return {is_centralizer(f),          is_jordan_centralizer(f),
            is_derivation(f),           is_jordan_derivation(f),
            is_generalized_derivation(f), is_generalized_jordan_derivation(f)};
}

}  // namespace

TEST_CASE("inner derivation by e12 on UT(2)/Z3") {
    const auto r = ut2();
    const auto e11 = r.basis(0), e12 = r.basis(1), e22 = r.basis(2);
    const auto d = inner_derivation(r, e12);
    CHECK(d(e11) == r.neg(e12));
    CHECK(d(e22) == e12);
    CHECK(r.is_zero(d(e12)));
    CHECK(is_derivation(d));
    CHECK(is_jordan_derivation(d));
}

TEST_CASE("right multiplication by e12") {
    const auto r = ut2();
    const auto e11 = r.basis(0), e12 = r.basis(1);
    const auto f = right_mult(r, e12);
    CHECK(f(e11) == e12);
    CHECK_FALSE(is_centralizer(f));
    CHECK_FALSE(is_jordan_centralizer(f));
    CHECK(is_generalized_derivation(f));
    CHECK_FALSE(is_derivation(f));
    CHECK_FALSE(is_jordan_generalized_derivation(f));
    const auto v = centralizer_violation(f);
    REQUIRE(v.has_value());
}

TEST_CASE("left multiplication by a central element is a centralizer") {
    const auto r = ut2();
    const auto c = r.scale(2, r.one());
    CHECK(is_centralizer(left_mult(r, c)));
    CHECK(left_mult(r, c) == right_mult(r, c));
    CHECK_FALSE(derivation_violation(inner_derivation(r, r.basis(1))).has_value());
}

TEST_CASE("map construction and arithmetic") {
    const auto r = ut2();
    CHECK_THROWS_AS(AdditiveMap::from_vec(r, Vec{1, 2, 3}), DimensionMismatch);
    const auto f = AdditiveMap::from_vec(r, Vec{0, 0, 0, 2, 0, 1, 0, 0, 0});
    CHECK(f == inner_derivation(r, r.basis(1)));
    CHECK(f.to_vec() == Vec{0, 0, 0, 2, 0, 1, 0, 0, 0});
    CHECK(f + AdditiveMap::zero(r) == f);
    CHECK((f - f) == AdditiveMap::zero(r));
    CHECK(AdditiveMap::identity(r)(r.basis(1)) == r.basis(1));
    CHECK(format_map(AdditiveMap::identity(r)) == "[[1,0,0],[0,1,0],[0,0,1]]");
    CHECK_THROWS_AS(f + AdditiveMap::zero(ring_zm(m3)), RingMismatch);
}

TEST_CASE("is_jgd_via examples") {
    const auto r = ut2();
    const auto d = inner_derivation(r, r.basis(1));
    CHECK(is_jgd_via(d, d));
    const auto c = r.scale(2, r.one());
    CHECK(is_jgd_via(right_mult(r, c), AdditiveMap::zero(r)));
    CHECK_FALSE(is_jgd_via(right_mult(r, r.basis(1)), AdditiveMap::zero(r)));
    CHECK_FALSE(is_jgd_via(right_mult(r, r.basis(1)), d));
    CHECK_THROWS_AS(is_jgd_via(d, right_mult(r, r.basis(1))), DeltaNotJordanDerivation);
    CHECK_THROWS_AS(is_jgd_via(d, AdditiveMap::zero(ring_zm(m3))), RingMismatch);
}

TEST_CASE("is_jgd_via against every Jordan derivation by brute force") {
    // tau = right_mult(e12) admits no Jordan derivation delta at all.
    const auto r = ut2();
    const auto tau = right_mult(r, r.basis(1));
    const auto jd = solve({ConditionKind::jordan_derivation_id}, r);
    bool any = false;
    for_each_member(jd, 1000, [&](const Vec& v) {
        any |= is_jgd_via(tau, AdditiveMap::from_vec(r, v));
    });
    CHECK_FALSE(any);
}

TEST_CASE("is_jordan_generalized_derivation examples") {
    const auto r = ut2();
    CHECK(is_jordan_generalized_derivation(inner_derivation(r, r.basis(1))));
    CHECK(is_jordan_generalized_derivation(right_mult(r, r.scale(2, r.one()))));
    CHECK_FALSE(is_jordan_generalized_derivation(right_mult(r, r.basis(1))));
}

TEST_CASE("predicates agree with the brute-force oracle on all maps of UT(2)/Z3") {
    const auto r = ut2();
    const auto rep = oracle::tri_scalar(3, 1);
    std::size_t der = 0, jder = 0, jc = 0;
    bool agree = true;
    for (const auto& fm : oracle::all_maps(rep)) {
        const auto f = AdditiveMap::from_vec(r, fm);
        const bool d = is_derivation(f), jd = is_jordan_derivation(f), c = is_jordan_centralizer(f);
        agree &= d == oracle::derivation(rep, fm) && jd == oracle::jordan_derivation(rep, fm) &&
                 c == oracle::jordan_centralizer(rep, fm);
        der += d;
        jder += jd;
        jc += c;
    }
    CHECK(agree);
    CHECK(der == 9);
    CHECK(jder == 9);
    CHECK(jc == 3);
}

TEST_CASE("predicate chain on solver-produced maps") {
    std::mt19937_64 rng(5);
    for (const auto& r : {ut2(), ring_upper_triangular(Modulus(9), 2), ring_matrices(m3, 2)}) {
        std::vector<AdditiveMap> sample;
        for (auto kind : {ConditionKind::derivation_id, ConditionKind::gen_derivation_id,
                          ConditionKind::jordan_centralizer_id, ConditionKind::gen_jordan_derivation_id}) {
            const auto s = solve({kind}, r);
            for (const auto& g : decode_maps(s, r)) sample.push_back(g);
        }
        for (const auto& f : sample) {
            const auto p = evaluate(f);
            if (p.centralizer) CHECK(p.jordan_centralizer);
            if (p.derivation) {
                CHECK(p.jordan_derivation);
                CHECK(p.gen_derivation);
            }
            if (p.gen_derivation) CHECK(p.gen_jordan_derivation);
        }
    }
}

TEST_CASE("predicates are invariant under a change of basis") {
    std::mt19937_64 rng(11);
    for (const auto& r : {ut2(), ring_matrices(m3, 2), ring_upper_triangular(Modulus(9), 2)}) {
        const auto k = r.rank();
        const auto m = r.modulus().value();
        for (int trial = 0; trial < 3; ++trial) {
            const auto [b, inv] = random_unitriangular(k, m, rng);
            const auto r2 = rebase(r, b, inv);
            std::vector<AdditiveMap> maps;
            for (std::size_t i = 0; i < k; ++i) {
                maps.push_back(right_mult(r, r.basis(i)));
                maps.push_back(left_mult(r, r.basis(i)));
                maps.push_back(inner_derivation(r, r.basis(i)));
            }
            maps.push_back(AdditiveMap::identity(r));
            for (const auto& f : maps) CHECK(evaluate(f) == evaluate(rebase_map(f, r2, b, inv)));
        }
    }
}
