#pragma once

#include "trizp/ringcore.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trizp {

/// An (R, S)-bimodule M that is free of rank k_M over Z_m.
///
/// left_action[a][b] = coordinates of r_a * m_b,
/// right_action[b][c] = coordinates of m_b * s_c.
class Bimodule {
public:
    /// Checks unitality and the three associativity laws on basis triples.
    static Bimodule make(FiniteRing left_ring, FiniteRing right_ring, std::size_t rank,
                         std::vector<std::vector<Vec>> left_action,
                         std::vector<std::vector<Vec>> right_action, std::string label);

    /// A ring as a bimodule over itself.
    static Bimodule regular(const FiniteRing& ring);
    /// Z_m^n with Z_m acting by scalars on both sides.
    static Bimodule scalar_columns(Modulus m, std::size_t n);
    /// n x p matrices over Z_m as a (Mat_n, Mat_p)-bimodule.
    static Bimodule matrix_block(Modulus m, std::size_t n, std::size_t p);
    static Bimodule zero(const FiniteRing& left_ring, const FiniteRing& right_ring);

    const FiniteRing& left_ring() const noexcept { return left_; }
    const FiniteRing& right_ring() const noexcept { return right_; }
    const Modulus& modulus() const noexcept { return left_.modulus(); }
    std::size_t rank() const noexcept { return rank_; }
    const std::string& label() const noexcept { return label_; }
    const std::vector<std::vector<Vec>>& left_action() const noexcept { return left_action_; }
    const std::vector<std::vector<Vec>>& right_action() const noexcept { return right_action_; }

    Vec act_left(const Element& r, const Vec& m) const;
    Vec act_right(const Vec& m, const Element& s) const;

private:
    Bimodule(FiniteRing l, FiniteRing r, std::size_t rank, std::vector<std::vector<Vec>> la,
             std::vector<std::vector<Vec>> ra, std::string label)
        : left_(std::move(l)),
          right_(std::move(r)),
          rank_(rank),
          left_action_(std::move(la)),
          right_action_(std::move(ra)),
          label_(std::move(label)) {}

    FiniteRing left_;
    FiniteRing right_;
    std::size_t rank_;
    std::vector<std::vector<Vec>> left_action_;
    std::vector<std::vector<Vec>> right_action_;
    std::string label_;
};

struct Faithfulness {
    enum class Kind { ok, left_witness, right_witness };
    Kind kind = Kind::ok;
    /// Nonzero r with rM = 0 (left) or s with Ms = 0 (right).
    std::optional<Element> witness;

    bool ok() const noexcept { return kind == Kind::ok; }
};

/// Decides faithfulness on both sides. r M = 0 is linear in r, so the
/// annihilator is a kernel and the witness is its first Howell generator.
Faithfulness check_faithful(const Bimodule& m);

struct BlockRange {
    std::size_t begin = 0;
    std::size_t size = 0;
};

/// Tri(R, M, S) stored as a flat FiniteRing with block metadata.
/// Coordinates are laid out as [R-block | M-block | S-block].
struct TriangularRing {
    FiniteRing ring;
    Element p;
    Element q;
    BlockRange r_block;
    BlockRange m_block;
    BlockRange s_block;
};

/// Throws ModulusMismatch, RingMismatch (M is over other rings) or
/// NotFaithful (with witness).
TriangularRing make_triangular(const FiniteRing& r, const Bimodule& m, const FiniteRing& s);

struct PeirceParts {
    Element pxp;
    Element pxq;
    Element qxq;
};

PeirceParts peirce(const Element& x, const TriangularRing& t);
/// QXP; zero for every element of a triangular ring.
Element peirce_qxp(const Element& x, const TriangularRing& t);

/// T(A, M) = A (+) M with (a1, m1)(a2, m2) = (a1 a2, a1 m2 + m1 a2).
/// M must be an (A, A)-bimodule; faithfulness is not required.
FiniteRing trivial_extension(const FiniteRing& a, const Bimodule& m);
inline FiniteRing trivial_extension(const FiniteRing& a) {
    return trivial_extension(a, Bimodule::regular(a));
}

}  // namespace trizp
