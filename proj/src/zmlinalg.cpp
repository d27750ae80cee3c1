#include "trizp/zmlinalg.hpp"

#include "trizp/errors.hpp"

#include <numeric>
#include <tuple>

namespace trizp {

namespace {

struct ExtGcd {
    Residue g, s, t;  // s*a + t*b = g
};

ExtGcd ext_gcd(Residue a, Residue b) {
    Residue old_r = a, r = b;
    Residue old_s = 1, s = 0;
    Residue old_t = 0, t = 1;
    while (r != 0) {
        const Residue q = old_r / r;
        std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
        std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
        std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
    }
    return {old_r, old_s, old_t};
}

void scale_into(Vec& v, Residue k, const Modulus& m) {
    for (auto& x : v) x = m.mul(x, k);
}

bool is_zero(std::span<const Residue> v) {
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace

Modulus::Modulus(Residue m) : m_(m) {
    if (m < 3 || m >= max_value)
        throw InvalidArgument("modulus must lie in [3, 2^31), got " + std::to_string(m));
    if (m % 2 == 0)
        throw EvenModulusError("modulus " + std::to_string(m) +
                               " is even; rings must be 2-torsion-free (odd modulus required)");
}

Residue gcd_residue(Residue a, Residue b) { return std::gcd(a, b); }

Residue normalizing_unit(Residue a, const Modulus& m) {
    const Residue mv = m.value();
    a = m.reduce(a);
    if (a == 0) return 1;
    const Residue g = std::gcd(a, mv);
    const Residue mp = mv / g;
    Residue u = 1;
    if (mp > 1) {
        auto e = ext_gcd((a / g) % mp, mp);
        u = ((e.s % mp) + mp) % mp;
    }
    // lift u from Z_{m/g} to a unit of Z_m
    while (std::gcd(u, mv) != 1) u += mp;
    return u % mv;
}

// ---------------------------------------------------------------- MatrixZm

MatrixZm::MatrixZm(Modulus m, std::size_t rows, std::size_t cols)
    : mod_(m), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

MatrixZm::MatrixZm(Modulus m, std::size_t cols, const std::vector<Vec>& rows)
    : mod_(m), rows_(0), cols_(cols) {
    data_.reserve(rows.size() * cols);
    for (const auto& r : rows) append_row(r);
}

MatrixZm MatrixZm::identity(Modulus m, std::size_t n) {
    MatrixZm id(m, n, n);
    for (std::size_t i = 0; i < n; ++i) id.set(i, i, 1);
    return id;
}

Vec MatrixZm::row_vec(std::size_t r) const {
    auto s = row(r);
    return Vec(s.begin(), s.end());
}

Vec MatrixZm::column(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

std::vector<Vec> MatrixZm::to_rows() const {
    std::vector<Vec> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vec(r));
    return out;
}

MatrixZm MatrixZm::transpose() const {
    MatrixZm t(mod_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = at(r, c);
    return t;
}

Vec MatrixZm::multiply(std::span<const Residue> x) const {
    if (x.size() != cols_)
        throw DimensionMismatch("matrix-vector product: expected length " + std::to_string(cols_) +
                                ", got " + std::to_string(x.size()));
    Vec y(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        Residue acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc = mod_.reduce(acc + at(r, c) * x[c]);
        y[r] = acc;
    }
    return y;
}

MatrixZm MatrixZm::multiply(const MatrixZm& other) const {
    if (other.rows_ != cols_) throw DimensionMismatch("matrix product: inner dimensions differ");
    if (!(other.mod_ == mod_)) throw ModulusMismatch("matrix product: moduli differ");
    MatrixZm out(mod_, rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Residue a = at(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < other.cols_; ++c)
                out.data_[r * other.cols_ + c] =
                    mod_.reduce(out.data_[r * other.cols_ + c] + a * other.at(k, c));
        }
    return out;
}

void MatrixZm::append_row(std::span<const Residue> row) {
    if (row.size() != cols_)
        throw DimensionMismatch("row of length " + std::to_string(row.size()) +
                                " appended to matrix with " + std::to_string(cols_) + " columns");
    for (auto x : row) data_.push_back(mod_.reduce(x));
    ++rows_;
}

// ------------------------------------------------------------- HowellBasis

HowellBasis::HowellBasis(Modulus m, std::size_t cols) : mod_(m), cols_(cols), pivots_(cols) {}

void HowellBasis::insert(std::span<const Residue> row) {
    if (row.size() != cols_) throw DimensionMismatch("HowellBasis::insert: wrong row length");
    const Residue mv = mod_.value();
    std::vector<Vec> pending;
    pending.emplace_back(row.begin(), row.end());
    for (auto& x : pending.back()) x = mod_.reduce(x);

    while (!pending.empty()) {
        Vec v = std::move(pending.back());
        pending.pop_back();
        for (std::size_t c = 0; c < cols_; ++c) {
            if (v[c] == 0) continue;
            auto& slot = pivots_[c];
            if (!slot) {
                scale_into(v, normalizing_unit(v[c], mod_), mod_);
                Vec ann = v;
                scale_into(ann, mv / v[c], mod_);
                slot = std::move(v);
                if (!is_zero(ann)) pending.push_back(std::move(ann));
                break;
            }
            Vec& h = *slot;
            const Residue a = h[c];
            const Residue b = v[c];
            if (b % a == 0) {
                const Residue q = b / a;
                for (std::size_t j = c; j < cols_; ++j) v[j] = mod_.sub(v[j], mod_.mul(q, h[j]));
                continue;
            }
            // [s t; b/g -a/g] is unimodular: replace (h, v) by (s h + t v, (b/g) h - (a/g) v)
            const auto e = ext_gcd(a, b);
            const Residue ag = a / e.g, bg = b / e.g;
            Vec nh(cols_), nv(cols_);
            for (std::size_t j = 0; j < cols_; ++j) {
                nh[j] = mod_.reduce(e.s * h[j] + e.t * v[j]);
                nv[j] = mod_.reduce(bg * h[j] - ag * v[j]);
            }
            Vec ann = nh;
            scale_into(ann, mv / nh[c], mod_);
            h = std::move(nh);
            v = std::move(nv);
            if (!is_zero(ann)) pending.push_back(std::move(ann));
        }
    }
}

void HowellBasis::insert_all(const MatrixZm& rows) {
    for (std::size_t r = 0; r < rows.rows(); ++r) insert(rows.row(r));
}

bool HowellBasis::contains(std::span<const Residue> x) const {
    if (x.size() != cols_) throw DimensionMismatch("HowellBasis::contains: wrong vector length");
    Vec v(x.begin(), x.end());
    for (auto& e : v) e = mod_.reduce(e);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c] == 0) continue;
        if (!pivots_[c]) return false;
        const Vec& h = *pivots_[c];
        if (v[c] % h[c] != 0) return false;
        const Residue q = v[c] / h[c];
        for (std::size_t j = c; j < cols_; ++j) v[j] = mod_.sub(v[j], mod_.mul(q, h[j]));
    }
    return true;
}

MatrixZm HowellBasis::canonical() const {
    std::vector<Vec> rows;
    std::vector<std::size_t> piv_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (pivots_[c]) {
            rows.push_back(*pivots_[c]);
            piv_cols.push_back(c);
        }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::size_t c = piv_cols[i];
        const Vec& h = rows[i];
        for (std::size_t r = 0; r < i; ++r) {
            const Residue q = rows[r][c] / h[c];
            if (q == 0) continue;
            for (std::size_t j = c; j < cols_; ++j)
                rows[r][j] = mod_.sub(rows[r][j], mod_.mul(q, h[j]));
        }
    }
    return MatrixZm(mod_, cols_, rows);
}

MatrixZm howell_form(const MatrixZm& a) {
    HowellBasis basis(a.modulus(), a.cols());
    basis.insert_all(a);
    return basis.canonical();
}

// ---------------------------------------------------------- SolutionModule

namespace detail {

std::vector<Residue> pivot_orders(const MatrixZm& howell) {
    std::vector<Residue> orders;
    orders.reserve(howell.rows());
    const Residue m = howell.modulus().value();
    for (std::size_t r = 0; r < howell.rows(); ++r) {
        auto row = howell.row(r);
        Residue lead = 0;
        for (auto x : row)
            if (x != 0) {
                lead = x;
                break;
            }
        orders.push_back(lead == 0 ? 1 : m / lead);
    }
    return orders;
}

void throw_enumeration_bound(const BigCount& card, std::uint64_t bound) {
    throw EnumerationBoundExceeded("module of cardinality " + card.str() +
                                   " exceeds enumeration bound " + std::to_string(bound));
}

}  // namespace detail

SolutionModule::SolutionModule(const MatrixZm& generators)
    : generators_(howell_form(generators)), cardinality_(1) {
    for (auto o : detail::pivot_orders(generators_)) cardinality_ *= o;
}

SolutionModule SolutionModule::zero(Modulus m, std::size_t ambient_dim) {
    return SolutionModule(MatrixZm(m, 0, ambient_dim));
}

SolutionModule SolutionModule::full(Modulus m, std::size_t ambient_dim) {
    return SolutionModule(MatrixZm::identity(m, ambient_dim));
}

SolutionModule kernel(const MatrixZm& a) {
    const auto& mod = a.modulus();
    const std::size_t n = a.cols();
    const MatrixZm h = howell_form(a);
    const std::size_t r = h.rows();
    // Rows [h^T | I]: a combination with coefficients x is (h x, x), so the
    // part of the span vanishing on the first r columns is exactly the kernel.
    HowellBasis aug(mod, r + n);
    Vec row(r + n);
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(row.begin(), row.end(), 0);
        for (std::size_t i = 0; i < r; ++i) row[i] = h.at(i, j);
        row[r + j] = 1;
        aug.insert(row);
    }
    const MatrixZm full = aug.canonical();
    MatrixZm ker(mod, 0, n);
    for (std::size_t i = 0; i < full.rows(); ++i) {
        auto fr = full.row(i);
        if (!is_zero(fr.first(r))) continue;
        ker.append_row(fr.subspan(r));
    }
    return SolutionModule(ker);
}

bool member(std::span<const Residue> x, const SolutionModule& s) {
    if (x.size() != s.ambient_dim())
        throw DimensionMismatch("member: vector length " + std::to_string(x.size()) +
                                " but module ambient dimension " + std::to_string(s.ambient_dim()));
    const auto& g = s.generators();
    const auto& mod = s.modulus();
    Vec v(x.begin(), x.end());
    for (auto& e : v) e = mod.reduce(e);
    std::vector<std::optional<std::size_t>> row_of_pivot(v.size());
    for (std::size_t r = 0; r < g.rows(); ++r) {
        auto row = g.row(r);
        for (std::size_t c = 0; c < row.size(); ++c)
            if (row[c] != 0) {
                row_of_pivot[c] = r;
                break;
            }
    }
    for (std::size_t c = 0; c < v.size(); ++c) {
        if (v[c] == 0) continue;
        if (!row_of_pivot[c]) return false;
        const auto h = g.row(*row_of_pivot[c]);
        if (v[c] % h[c] != 0) return false;
        const Residue q = v[c] / h[c];
        for (std::size_t j = c; j < v.size(); ++j) v[j] = mod.sub(v[j], mod.mul(q, h[j]));
    }
    return true;
}

std::optional<Vec> first_non_member(const SolutionModule& s1, const SolutionModule& s2) {
    if (s1.ambient_dim() != s2.ambient_dim())
        throw DimensionMismatch("module comparison: ambient dimensions differ");
    if (!(s1.modulus() == s2.modulus())) throw ModulusMismatch("module comparison: moduli differ");
    const auto& g = s1.generators();
    for (std::size_t r = 0; r < g.rows(); ++r)
        if (!member(g.row(r), s2)) return g.row_vec(r);
    return std::nullopt;
}

bool module_subset(const SolutionModule& s1, const SolutionModule& s2) {
    return !first_non_member(s1, s2).has_value();
}

SolutionModule module_project(const SolutionModule& s, std::span<const std::size_t> coords) {
    for (auto c : coords)
        if (c >= s.ambient_dim())
            throw InvalidArgument("module_project: coordinate " + std::to_string(c) +
                                  " out of range for ambient dimension " +
                                  std::to_string(s.ambient_dim()));
    const auto& g = s.generators();
    MatrixZm p(s.modulus(), g.rows(), coords.size());
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t j = 0; j < coords.size(); ++j) p.set(r, j, g.at(r, coords[j]));
    return SolutionModule(p);
}

SolutionModule module_sum(const SolutionModule& a, const SolutionModule& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("module_sum: ambient dimensions differ");
    if (!(a.modulus() == b.modulus())) throw ModulusMismatch("module_sum: moduli differ");
    MatrixZm both = a.generators();
    for (std::size_t r = 0; r < b.generators().rows(); ++r) both.append_row(b.generators().row(r));
    return SolutionModule(both);
}

}  // namespace trizp
