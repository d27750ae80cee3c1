#pragma once

#include "trizp/ringcore.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>

namespace trizp {

/// An additive self-map of a ring, stored as the k x k matrix over Z_m whose
/// column j is the image of basis_j. Over a free Z_m-module every such
/// matrix is additive and every additive map has one.
///
/// The flattened form used by the solvers is row-major: entry (i, j) lives at
/// index i * k + j.
class AdditiveMap {
public:
    AdditiveMap(FiniteRing ring, MatrixZm matrix);

    static AdditiveMap zero(const FiniteRing& ring);
    static AdditiveMap identity(const FiniteRing& ring);
    static AdditiveMap from_vec(const FiniteRing& ring, std::span<const Residue> entries);

    const FiniteRing& ring() const noexcept { return ring_; }
    const MatrixZm& matrix() const noexcept { return matrix_; }
    Vec to_vec() const { return matrix_.data(); }

    Element apply(const Element& x) const;
    Element operator()(const Element& x) const { return apply(x); }

    AdditiveMap operator+(const AdditiveMap& other) const;
    AdditiveMap operator-(const AdditiveMap& other) const;

    friend bool operator==(const AdditiveMap& a, const AdditiveMap& b) {
        return a.ring_.same_structure(b.ring_) && a.matrix_ == b.matrix_;
    }

private:
    FiniteRing ring_;
    MatrixZm matrix_;
};

/// X -> cX
AdditiveMap left_mult(const FiniteRing& ring, const Element& c);
/// X -> Xc
AdditiveMap right_mult(const FiniteRing& ring, const Element& c);
/// X -> WX - XW
AdditiveMap inner_derivation(const FiniteRing& ring, const Element& w);

// Identity predicates. Each identity is additive in x and in y separately,
// so checking ordered basis pairs decides it for all pairs.
bool is_centralizer(const AdditiveMap& f);
bool is_jordan_centralizer(const AdditiveMap& f);
bool is_derivation(const AdditiveMap& f);
bool is_jordan_derivation(const AdditiveMap& f);
bool is_generalized_derivation(const AdditiveMap& f);
bool is_generalized_jordan_derivation(const AdditiveMap& f);

/// tau(xy + yx) = x tau(y) + delta(x) y + tau(y) x + y delta(x) on all pairs.
/// Throws DeltaNotJordanDerivation if delta is not a Jordan derivation.
bool is_jgd_via(const AdditiveMap& tau, const AdditiveMap& delta);

/// Existential form: some Jordan derivation delta makes is_jgd_via hold.
/// Decided by projecting the joint (delta, tau) solution module onto the
/// tau coordinates and testing membership.
bool is_jordan_generalized_derivation(const AdditiveMap& tau);

/// Basis pair (i, j) on which the named identity fails, for diagnostics.
using BasisPair = std::pair<std::size_t, std::size_t>;
std::optional<BasisPair> centralizer_violation(const AdditiveMap& f);
std::optional<BasisPair> derivation_violation(const AdditiveMap& f);

std::string format_map(const AdditiveMap& f);

}  // namespace trizp
