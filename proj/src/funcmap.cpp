#include "trizp/funcmap.hpp"

#include "trizp/conditions.hpp"
#include "trizp/errors.hpp"

#include <functional>
#include <sstream>

namespace trizp {

AdditiveMap::AdditiveMap(FiniteRing ring, MatrixZm matrix)
    : ring_(std::move(ring)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != ring_.rank() || matrix_.cols() != ring_.rank())
        throw DimensionMismatch("additive map matrix must be " + std::to_string(ring_.rank()) +
                                "x" + std::to_string(ring_.rank()));
    if (!(matrix_.modulus() == ring_.modulus()))
        throw ModulusMismatch("additive map matrix has the wrong modulus");
}

AdditiveMap AdditiveMap::zero(const FiniteRing& ring) {
    return {ring, MatrixZm(ring.modulus(), ring.rank(), ring.rank())};
}

AdditiveMap AdditiveMap::identity(const FiniteRing& ring) {
    return {ring, MatrixZm::identity(ring.modulus(), ring.rank())};
}

AdditiveMap AdditiveMap::from_vec(const FiniteRing& ring, std::span<const Residue> entries) {
    const std::size_t k = ring.rank();
    if (entries.size() != k * k)
        throw DimensionMismatch("additive map needs " + std::to_string(k * k) + " entries, got " +
                                std::to_string(entries.size()));
    MatrixZm m(ring.modulus(), k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m.set(i, j, entries[i * k + j]);
    return {ring, std::move(m)};
}

Element AdditiveMap::apply(const Element& x) const {
    ring_.check(x);
    return Element{matrix_.multiply(x.coords)};
}

AdditiveMap AdditiveMap::operator+(const AdditiveMap& other) const {
    if (!ring_.same_structure(other.ring_)) throw RingMismatch("sum of maps on different rings");
    MatrixZm m = matrix_;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, m.at(i, j) + other.matrix_.at(i, j));
    return {ring_, std::move(m)};
}

AdditiveMap AdditiveMap::operator-(const AdditiveMap& other) const {
    if (!ring_.same_structure(other.ring_))
        throw RingMismatch("difference of maps on different rings");
    MatrixZm m = matrix_;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, m.at(i, j) - other.matrix_.at(i, j));
    return {ring_, std::move(m)};
}

AdditiveMap left_mult(const FiniteRing& ring, const Element& c) {
    return {ring, ring.left_mult_matrix(c)};
}

AdditiveMap right_mult(const FiniteRing& ring, const Element& c) {
    return {ring, ring.right_mult_matrix(c)};
}

AdditiveMap inner_derivation(const FiniteRing& ring, const Element& w) {
    return left_mult(ring, w) - right_mult(ring, w);
}

namespace {

using PairIdentity = std::function<bool(const Element&, const Element&)>;

std::optional<BasisPair> first_failing_basis_pair(const FiniteRing& ring, const PairIdentity& ok) {
    for (std::size_t i = 0; i < ring.rank(); ++i)
        for (std::size_t j = 0; j < ring.rank(); ++j)
            if (!ok(ring.basis(i), ring.basis(j))) return BasisPair{i, j};
    return std::nullopt;
}

}  // namespace

std::optional<BasisPair> centralizer_violation(const AdditiveMap& f) {
    const auto& R = f.ring();
    return first_failing_basis_pair(R, [&](const Element& x, const Element& y) {
        const auto lhs = f(R.mul(x, y));
        return lhs == R.mul(x, f(y)) && lhs == R.mul(f(x), y);
    });
}

bool is_centralizer(const AdditiveMap& f) { return !centralizer_violation(f); }

bool is_jordan_centralizer(const AdditiveMap& f) {
    const auto& R = f.ring();
    return !first_failing_basis_pair(R, [&](const Element& x, const Element& y) {
        return f(R.add(R.mul(x, y), R.mul(y, x))) == R.add(R.mul(x, f(y)), R.mul(f(y), x));
    });
}

std::optional<BasisPair> derivation_violation(const AdditiveMap& f) {
    const auto& R = f.ring();
    return first_failing_basis_pair(R, [&](const Element& x, const Element& y) {
        return f(R.mul(x, y)) == R.add(R.mul(f(x), y), R.mul(x, f(y)));
    });
}

bool is_derivation(const AdditiveMap& f) { return !derivation_violation(f); }

namespace {

// delta(x) y + x delta(y) + delta(y) x + y delta(x)
Element jordan_leibniz(const FiniteRing& R, const AdditiveMap& d, const Element& x,
                       const Element& y) {
    return R.add(R.add(R.mul(d(x), y), R.mul(x, d(y))), R.add(R.mul(d(y), x), R.mul(y, d(x))));
}

}  // namespace

bool is_jordan_derivation(const AdditiveMap& f) {
    const auto& R = f.ring();
    return !first_failing_basis_pair(R, [&](const Element& x, const Element& y) {
        return f(R.add(R.mul(x, y), R.mul(y, x))) == jordan_leibniz(R, f, x, y);
    });
}

bool is_generalized_derivation(const AdditiveMap& f) {
    const auto& R = f.ring();
    const auto f1 = f(R.one());
    return !first_failing_basis_pair(R, [&](const Element& x, const Element& y) {
        const auto rhs = R.sub(R.add(R.mul(f(x), y), R.mul(x, f(y))), R.mul(x, f1, y));
        return f(R.mul(x, y)) == rhs;
    });
}

bool is_generalized_jordan_derivation(const AdditiveMap& f) {
    const auto& R = f.ring();
    const auto f1 = f(R.one());
    return !first_failing_basis_pair(R, [&](const Element& x, const Element& y) {
        const auto rhs =
            R.sub(jordan_leibniz(R, f, x, y), R.add(R.mul(x, f1, y), R.mul(y, f1, x)));
        return f(R.add(R.mul(x, y), R.mul(y, x))) == rhs;
    });
}

bool is_jgd_via(const AdditiveMap& tau, const AdditiveMap& delta) {
    if (!tau.ring().same_structure(delta.ring()))
        throw RingMismatch("is_jgd_via: tau and delta act on different rings");
    if (!is_jordan_derivation(delta))
        throw DeltaNotJordanDerivation("is_jgd_via: delta is not a Jordan derivation");
    const auto& R = tau.ring();
    return !first_failing_basis_pair(R, [&](const Element& x, const Element& y) {
        const auto rhs = R.add(R.add(R.mul(x, tau(y)), R.mul(delta(x), y)),
                               R.add(R.mul(tau(y), x), R.mul(y, delta(x))));
        return tau(R.add(R.mul(x, y), R.mul(y, x))) == rhs;
    });
}

bool is_jordan_generalized_derivation(const AdditiveMap& tau) {
    return member(tau.to_vec(), jgd_tau_module(tau.ring()));
}

std::string format_map(const AdditiveMap& f) {
    std::ostringstream os;
    os << '[';
    const auto& m = f.matrix();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "," : "") << '[';
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m.at(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace trizp
