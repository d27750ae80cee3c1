#pragma once

#include "trizp/zmlinalg.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace trizp {

/// Default cap on the number of ring elements any exhaustive walk may visit.
inline constexpr std::uint64_t default_enumeration_bound = 1000;

/// Coordinates of a ring element in the ring's additive basis.
struct Element {
    Vec coords;

    friend auto operator<=>(const Element&, const Element&) = default;
};

/// struct_consts[i][j] = coordinates of basis_i * basis_j.
using StructureConstants = std::vector<std::vector<Vec>>;

/// A finite unital ring whose additive group is the free Z_m-module of rank k.
///
/// Instances are immutable handles; copies share the validated tables.
class FiniteRing {
public:
    /// Validates associativity on all basis triples and two-sided unity on
    /// all basis elements. Throws NotAssociative / NoUnity naming a witness,
    /// DimensionMismatch on malformed tables.
    static FiniteRing make(Modulus m, std::size_t rank, StructureConstants sc, Vec unity,
                           std::string label);

    const Modulus& modulus() const noexcept { return data_->mod; }
    std::size_t rank() const noexcept { return data_->rank; }
    const std::string& label() const noexcept { return data_->label; }
    const StructureConstants& structure_constants() const noexcept { return data_->sc; }

    /// m^k, or nullopt if it does not fit in 64 bits.
    std::optional<std::uint64_t> order() const noexcept;

    Element zero() const { return Element{Vec(rank(), 0)}; }
    Element one() const { return Element{data_->unity}; }
    Element basis(std::size_t i) const;
    Element element(Vec coords) const;

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element scale(Residue s, const Element& a) const;
    Element mul(const Element& a, const Element& b) const;
    Element mul(const Element& a, const Element& b, const Element& c) const {
        return mul(mul(a, b), c);
    }

    /// Matrix of y -> c*y (column j = c * basis_j).
    MatrixZm left_mult_matrix(const Element& c) const;
    /// Matrix of y -> y*c.
    MatrixZm right_mult_matrix(const Element& c) const;

    bool is_zero(const Element& a) const;
    /// Throws RingMismatch unless a has this ring's rank.
    void check(const Element& a) const;

    /// Same modulus and structure tables (labels ignored).
    bool same_structure(const FiniteRing& other) const;
    bool same_instance(const FiniteRing& other) const noexcept { return data_ == other.data_; }

private:
    struct Data {
        Modulus mod;
        std::size_t rank;
        StructureConstants sc;
        Vec unity;
        std::string label;
    };
    explicit FiniteRing(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

    std::shared_ptr<const Data> data_;
};

// Built-in families over Z_m.
FiniteRing ring_zm(Modulus m);
/// Full n x n matrices, basis e_ij in row-major order.
FiniteRing ring_matrices(Modulus m, std::size_t n);
/// Upper-triangular n x n matrices, basis e_ij (i <= j) in row-major order.
FiniteRing ring_upper_triangular(Modulus m, std::size_t n);
FiniteRing ring_product(const FiniteRing& a, const FiniteRing& b);

enum class BuiltinFamily { zm, matrices, upper_triangular };
FiniteRing builtin_ring(BuiltinFamily family, Modulus m, std::size_t n = 1);

/// Visits every element in lexicographic coordinate order (coordinate 0 most
/// significant). Throws EnumerationBoundExceeded if the order exceeds bound.
void for_each_element(const FiniteRing& ring, std::uint64_t bound,
                      const std::function<void(const Element&)>& fn);
std::vector<Element> all_elements(const FiniteRing& ring,
                                  std::uint64_t bound = default_enumeration_bound);

/// Visits the pairs (X, Y) with XY = YX = 0, lexicographic in (X, Y).
void for_each_zero_product_pair(const FiniteRing& ring, std::uint64_t bound,
                                const std::function<void(const Element&, const Element&)>& fn);
std::vector<std::pair<Element, Element>> zero_product_pairs(
    const FiniteRing& ring, std::uint64_t bound = default_enumeration_bound);

/// {c : c b_i = b_i c for every basis element b_i}.
SolutionModule center(const FiniteRing& ring);
bool is_central(const FiniteRing& ring, const Element& c);
bool is_idempotent(const FiniteRing& ring, const Element& e);

std::string format_element(const Element& e);

}  // namespace trizp
