#pragma once

// Exact linear algebra over Z/mZ for odd m. Everything that solves a
// functional condition ends up here: constraint rows are reduced to Howell
// normal form, kernels are read off an augmented Howell form, and module
// comparisons are plain matrix comparisons of canonical forms.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace trizp {

using Residue = std::int64_t;
using Vec = std::vector<Residue>;
using BigCount = boost::multiprecision::cpp_int;

/// Odd modulus m >= 3. Oddness is what makes every Z_m-module 2-torsion free.
class Modulus {
public:
    static constexpr Residue max_value = Residue{1} << 31;

    explicit Modulus(Residue m);

    Residue value() const noexcept { return m_; }

    Residue reduce(Residue x) const noexcept {
        Residue r = x % m_;
        return r < 0 ? r + m_ : r;
    }
    Residue add(Residue a, Residue b) const noexcept { return reduce(a + b); }
    Residue sub(Residue a, Residue b) const noexcept { return reduce(a - b); }
    Residue mul(Residue a, Residue b) const noexcept { return reduce(a * b); }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : m_ - a; }

    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    Residue m_;
};

/// Dense row-major matrix with entries reduced mod m.
class MatrixZm {
public:
    MatrixZm(Modulus m, std::size_t rows, std::size_t cols);
    MatrixZm(Modulus m, std::size_t cols, const std::vector<Vec>& rows);

    static MatrixZm identity(Modulus m, std::size_t n);

    const Modulus& modulus() const noexcept { return mod_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Residue v) { data_[r * cols_ + c] = mod_.reduce(v); }

    std::span<const Residue> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    Vec row_vec(std::size_t r) const;
    Vec column(std::size_t c) const;
    std::vector<Vec> to_rows() const;
    const Vec& data() const noexcept { return data_; }

    MatrixZm transpose() const;
    Vec multiply(std::span<const Residue> x) const;
    MatrixZm multiply(const MatrixZm& other) const;

    /// Appends a row, reducing its entries mod m.
    void append_row(std::span<const Residue> row);

    friend bool operator==(const MatrixZm&, const MatrixZm&) = default;

private:
    Modulus mod_;
    std::size_t rows_;
    std::size_t cols_;
    Vec data_;
};

/// Incrementally maintained Howell basis of a row span in Z_m^n.
///
/// Rows are kept in echelon form with one row per pivot column, the pivot
/// normalized to a divisor of m. Each time a pivot row is installed its
/// annihilator multiple (m / pivot) * row is reduced back in, which gives
/// the Howell property: the rows with pivot >= c span every element of the
/// module whose first c coordinates vanish.
class HowellBasis {
public:
    HowellBasis(Modulus m, std::size_t cols);

    std::size_t cols() const noexcept { return cols_; }
    const Modulus& modulus() const noexcept { return mod_; }

    void insert(std::span<const Residue> row);
    void insert_all(const MatrixZm& rows);

    /// Reduces x against the basis; true iff x lies in the span.
    bool contains(std::span<const Residue> x) const;

    /// Canonical Howell normal form (entries above pivots reduced).
    MatrixZm canonical() const;

private:
    Modulus mod_;
    std::size_t cols_;
    std::vector<std::optional<Vec>> pivots_;
};

/// Howell normal form of the row span of a.
MatrixZm howell_form(const MatrixZm& a);

/// A submodule of Z_m^n, stored by its Howell-canonical generators.
class SolutionModule {
public:
    explicit SolutionModule(const MatrixZm& generators);
    static SolutionModule zero(Modulus m, std::size_t ambient_dim);
    static SolutionModule full(Modulus m, std::size_t ambient_dim);

    std::size_t ambient_dim() const noexcept { return generators_.cols(); }
    const MatrixZm& generators() const noexcept { return generators_; }
    const Modulus& modulus() const noexcept { return generators_.modulus(); }
    const BigCount& cardinality() const noexcept { return cardinality_; }
    std::string cardinality_string() const { return cardinality_.str(); }

    friend bool operator==(const SolutionModule& a, const SolutionModule& b) {
        return a.generators_ == b.generators_;
    }

private:
    MatrixZm generators_;
    BigCount cardinality_;
};

/// {x : a x = 0 (mod m)}.
SolutionModule kernel(const MatrixZm& a);

bool member(std::span<const Residue> x, const SolutionModule& s);
bool module_subset(const SolutionModule& s1, const SolutionModule& s2);
SolutionModule module_project(const SolutionModule& s, std::span<const std::size_t> coords);
SolutionModule module_sum(const SolutionModule& a, const SolutionModule& b);

/// Generator of s1 outside s2, if any.
std::optional<Vec> first_non_member(const SolutionModule& s1, const SolutionModule& s2);

/// Visits every element of s exactly once (mixed-radix walk over the Howell
/// generators, coefficient i ranging over [0, m / pivot_i)). Throws
/// EnumerationBoundExceeded if the cardinality exceeds bound.
template <class Fn>
void for_each_member(const SolutionModule& s, std::uint64_t bound, Fn&& fn);

// Scalar helpers over Z_m shared with the ring layer.
Residue gcd_residue(Residue a, Residue b);
/// Unit u with u * a = gcd(a, m) (mod m).
Residue normalizing_unit(Residue a, const Modulus& m);

namespace detail {
std::vector<Residue> pivot_orders(const MatrixZm& howell);
void throw_enumeration_bound(const BigCount& card, std::uint64_t bound);
}  // namespace detail

template <class Fn>
void for_each_member(const SolutionModule& s, std::uint64_t bound, Fn&& fn) {
    if (s.cardinality() > bound) detail::throw_enumeration_bound(s.cardinality(), bound);
    const auto& gens = s.generators();
    const auto& mod = s.modulus();
    const auto orders = detail::pivot_orders(gens);
    const std::size_t n = s.ambient_dim();
    std::vector<Residue> coeff(gens.rows(), 0);
    Vec x(n, 0);
    while (true) {
        fn(std::as_const(x));
        std::size_t i = 0;
        for (; i < coeff.size(); ++i) {
            ++coeff[i];
            for (std::size_t c = 0; c < n; ++c) x[c] = mod.add(x[c], gens.at(i, c));
            if (coeff[i] < orders[i]) break;
            // wrapped; orders[i] * row i is an annihilator, not necessarily 0
            for (std::size_t c = 0; c < n; ++c)
                x[c] = mod.sub(x[c], mod.mul(orders[i] % mod.value(), gens.at(i, c)));
            coeff[i] = 0;
        }
        if (i == coeff.size()) return;
    }
}

}  // namespace trizp
