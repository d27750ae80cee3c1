#include "trizp/ringcore.hpp"

#include "trizp/errors.hpp"

#include <sstream>

namespace trizp {

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t l) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(l) + ")";
}

}  // namespace

std::string format_element(const Element& e) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < e.coords.size(); ++i) os << (i ? "," : "") << e.coords[i];
    os << ']';
    return os.str();
}

FiniteRing FiniteRing::make(Modulus m, std::size_t rank, StructureConstants sc, Vec unity,
                            std::string label) {
    if (rank == 0) throw InvalidArgument("ring rank must be positive");
    if (sc.size() != rank) throw DimensionMismatch("structure constants: expected " +
                                                   std::to_string(rank) + " rows");
    for (auto& row : sc) {
        if (row.size() != rank) throw DimensionMismatch("structure constants: ragged table");
        for (auto& v : row) {
            if (v.size() != rank)
                throw DimensionMismatch("structure constants: product vector of wrong length");
            for (auto& x : v) x = m.reduce(x);
        }
    }
    if (unity.size() != rank) throw DimensionMismatch("unity vector of wrong length");
    for (auto& x : unity) x = m.reduce(x);

    FiniteRing ring(std::make_shared<const Data>(
        Data{m, rank, std::move(sc), std::move(unity), std::move(label)}));

    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j)
            for (std::size_t l = 0; l < rank; ++l) {
                const auto bi = ring.basis(i), bj = ring.basis(j), bl = ring.basis(l);
                if (ring.mul(ring.mul(bi, bj), bl) != ring.mul(bi, ring.mul(bj, bl)))
                    throw NotAssociative("ring '" + ring.label() +
                                         "' is not associative on basis triple " + triple(i, j, l));
            }
    const auto one = ring.one();
    for (std::size_t i = 0; i < rank; ++i) {
        const auto bi = ring.basis(i);
        if (ring.mul(one, bi) != bi || ring.mul(bi, one) != bi)
            throw NoUnity("unity " + format_element(one) + " of ring '" + ring.label() +
                          "' fails on basis element " + std::to_string(i));
    }
    return ring;
}

std::optional<std::uint64_t> FiniteRing::order() const noexcept {
    std::uint64_t n = 1;
    const auto m = static_cast<std::uint64_t>(modulus().value());
    for (std::size_t i = 0; i < rank(); ++i) {
        if (n > UINT64_MAX / m) return std::nullopt;
        n *= m;
    }
    return n;
}

Element FiniteRing::basis(std::size_t i) const {
    if (i >= rank()) throw InvalidArgument("basis index out of range");
    Element e = zero();
    e.coords[i] = 1;
    return e;
}

Element FiniteRing::element(Vec coords) const {
    if (coords.size() != rank())
        throw RingMismatch("element with " + std::to_string(coords.size()) +
                           " coordinates for ring '" + label() + "' of rank " +
                           std::to_string(rank()));
    for (auto& x : coords) x = modulus().reduce(x);
    return Element{std::move(coords)};
}

void FiniteRing::check(const Element& a) const {
    if (a.coords.size() != rank())
        throw RingMismatch("element " + format_element(a) + " does not belong to ring '" +
                           label() + "' of rank " + std::to_string(rank()));
}

bool FiniteRing::is_zero(const Element& a) const {
    check(a);
    for (auto x : a.coords)
        if (x != 0) return false;
    return true;
}

Element FiniteRing::add(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element r = zero();
    for (std::size_t i = 0; i < rank(); ++i) r.coords[i] = modulus().add(a.coords[i], b.coords[i]);
    return r;
}

Element FiniteRing::sub(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element r = zero();
    for (std::size_t i = 0; i < rank(); ++i) r.coords[i] = modulus().sub(a.coords[i], b.coords[i]);
    return r;
}

Element FiniteRing::neg(const Element& a) const {
    check(a);
    Element r = zero();
    for (std::size_t i = 0; i < rank(); ++i) r.coords[i] = modulus().neg(a.coords[i]);
    return r;
}

Element FiniteRing::scale(Residue s, const Element& a) const {
    check(a);
    Element r = zero();
    for (std::size_t i = 0; i < rank(); ++i) r.coords[i] = modulus().mul(s, a.coords[i]);
    return r;
}

Element FiniteRing::mul(const Element& a, const Element& b) const {
    check(a);
    check(b);
    const std::size_t k = rank();
    const auto& mod = modulus();
    const auto& sc = data_->sc;
    Vec acc(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (a.coords[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j) {
            if (b.coords[j] == 0) continue;
            const Residue w = mod.mul(a.coords[i], b.coords[j]);
            const Vec& p = sc[i][j];
            for (std::size_t l = 0; l < k; ++l)
                if (p[l] != 0) acc[l] = mod.reduce(acc[l] + w * p[l]);
        }
    }
    return Element{std::move(acc)};
}

MatrixZm FiniteRing::left_mult_matrix(const Element& c) const {
    MatrixZm out(modulus(), rank(), rank());
    for (std::size_t j = 0; j < rank(); ++j) {
        const auto col = mul(c, basis(j));
        for (std::size_t i = 0; i < rank(); ++i) out.set(i, j, col.coords[i]);
    }
    return out;
}

MatrixZm FiniteRing::right_mult_matrix(const Element& c) const {
    MatrixZm out(modulus(), rank(), rank());
    for (std::size_t j = 0; j < rank(); ++j) {
        const auto col = mul(basis(j), c);
        for (std::size_t i = 0; i < rank(); ++i) out.set(i, j, col.coords[i]);
    }
    return out;
}

bool FiniteRing::same_structure(const FiniteRing& other) const {
    return modulus() == other.modulus() && rank() == other.rank() &&
           data_->sc == other.data_->sc && data_->unity == other.data_->unity;
}

// ---------------------------------------------------------------- builtins

FiniteRing ring_zm(Modulus m) {
    return FiniteRing::make(m, 1, {{Vec{1}}}, Vec{1}, "Z" + std::to_string(m.value()));
}

namespace {

// Subring of n x n matrices spanned by the units e_ij for the listed (i, j).
FiniteRing matrix_units_ring(Modulus m, std::size_t n,
                             const std::vector<std::pair<std::size_t, std::size_t>>& units,
                             std::string label) {
    const std::size_t k = units.size();
    auto index_of = [&](std::size_t i, std::size_t j) -> std::optional<std::size_t> {
        for (std::size_t t = 0; t < k; ++t)
            if (units[t] == std::pair{i, j}) return t;
        return std::nullopt;
    };
    StructureConstants sc(k, std::vector<Vec>(k, Vec(k, 0)));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            if (units[a].second == units[b].first) {
                auto idx = index_of(units[a].first, units[b].second);
                if (!idx) throw InvalidArgument("matrix unit set is not closed under products");
                sc[a][b][*idx] = 1;
            }
    Vec unity(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
        auto idx = index_of(i, i);
        if (!idx) throw InvalidArgument("matrix unit set lacks a diagonal unit");
        unity[*idx] = 1;
    }
    return FiniteRing::make(m, k, std::move(sc), std::move(unity), std::move(label));
}

}  // namespace

FiniteRing ring_matrices(Modulus m, std::size_t n) {
    if (n == 0) throw InvalidArgument("matrix size must be positive");
    std::vector<std::pair<std::size_t, std::size_t>> units;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) units.emplace_back(i, j);
    return matrix_units_ring(m, n, units,
                             "Mat" + std::to_string(n) + "(Z" + std::to_string(m.value()) + ")");
}

FiniteRing ring_upper_triangular(Modulus m, std::size_t n) {
    if (n == 0) throw InvalidArgument("matrix size must be positive");
    std::vector<std::pair<std::size_t, std::size_t>> units;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) units.emplace_back(i, j);
    return matrix_units_ring(m, n, units,
                             "UT" + std::to_string(n) + "(Z" + std::to_string(m.value()) + ")");
}

FiniteRing ring_product(const FiniteRing& a, const FiniteRing& b) {
    if (!(a.modulus() == b.modulus())) throw ModulusMismatch("direct product: moduli differ");
    const std::size_t ka = a.rank(), kb = b.rank(), k = ka + kb;
    StructureConstants sc(k, std::vector<Vec>(k, Vec(k, 0)));
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < ka; ++j)
            for (std::size_t l = 0; l < ka; ++l) sc[i][j][l] = a.structure_constants()[i][j][l];
    for (std::size_t i = 0; i < kb; ++i)
        for (std::size_t j = 0; j < kb; ++j)
            for (std::size_t l = 0; l < kb; ++l)
                sc[ka + i][ka + j][ka + l] = b.structure_constants()[i][j][l];
    Vec unity = a.one().coords;
    const auto ub = b.one().coords;
    unity.insert(unity.end(), ub.begin(), ub.end());
    return FiniteRing::make(a.modulus(), k, std::move(sc), std::move(unity),
                            a.label() + "x" + b.label());
}

FiniteRing builtin_ring(BuiltinFamily family, Modulus m, std::size_t n) {
    switch (family) {
        case BuiltinFamily::zm: return ring_zm(m);
        case BuiltinFamily::matrices: return ring_matrices(m, n);
        case BuiltinFamily::upper_triangular: return ring_upper_triangular(m, n);
    }
    throw InvalidArgument("unknown builtin ring family");
}

// ------------------------------------------------------------- enumeration

void for_each_element(const FiniteRing& ring, std::uint64_t bound,
                      const std::function<void(const Element&)>& fn) {
    const auto order = ring.order();
    if (!order || *order > bound)
        throw EnumerationBoundExceeded("ring '" + ring.label() + "' has order " +
                                       (order ? std::to_string(*order) : std::string(">2^64")) +
                                       ", above the enumeration bound " + std::to_string(bound));
    const Residue m = ring.modulus().value();
    Element x = ring.zero();
    const std::size_t k = ring.rank();
    while (true) {
        fn(x);
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++x.coords[pos] < m) break;
            x.coords[pos] = 0;
            if (pos == 0) return;
        }
    }
}

std::vector<Element> all_elements(const FiniteRing& ring, std::uint64_t bound) {
    std::vector<Element> out;
    for_each_element(ring, bound, [&](const Element& e) { out.push_back(e); });
    return out;
}

void for_each_zero_product_pair(const FiniteRing& ring, std::uint64_t bound,
                                const std::function<void(const Element&, const Element&)>& fn) {
    const auto elements = all_elements(ring, bound);
    for (const auto& x : elements) {
        const auto left = ring.left_mult_matrix(x);
        const auto right = ring.right_mult_matrix(x);
        // stacked [L_X; R_X]: Y is paired with X iff both products vanish
        MatrixZm both = left;
        for (std::size_t r = 0; r < right.rows(); ++r) both.append_row(right.row(r));
        for (const auto& y : elements) {
            bool zero = true;
            for (std::size_t r = 0; r < both.rows() && zero; ++r) {
                Residue acc = 0;
                auto row = both.row(r);
                for (std::size_t c = 0; c < row.size(); ++c)
                    acc = ring.modulus().reduce(acc + row[c] * y.coords[c]);
                zero = ring.modulus().reduce(acc) == 0;
            }
            if (zero) fn(x, y);
        }
    }
}

std::vector<std::pair<Element, Element>> zero_product_pairs(const FiniteRing& ring,
                                                            std::uint64_t bound) {
    std::vector<std::pair<Element, Element>> out;
    for_each_zero_product_pair(ring, bound,
                               [&](const Element& x, const Element& y) { out.emplace_back(x, y); });
    return out;
}

// ------------------------------------------------------------------ center

SolutionModule center(const FiniteRing& ring) {
    // c b_i - b_i c = (R_{b_i} - L_{b_i}) c, linear in c
    const std::size_t k = ring.rank();
    MatrixZm system(ring.modulus(), 0, k);
    Vec row(k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto bi = ring.basis(i);
        const auto r = ring.right_mult_matrix(bi);
        const auto l = ring.left_mult_matrix(bi);
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t c = 0; c < k; ++c) row[c] = r.at(a, c) - l.at(a, c);
            system.append_row(row);
        }
    }
    return kernel(system);
}

bool is_central(const FiniteRing& ring, const Element& c) {
    for (std::size_t i = 0; i < ring.rank(); ++i) {
        const auto bi = ring.basis(i);
        if (ring.mul(c, bi) != ring.mul(bi, c)) return false;
    }
    return true;
}

bool is_idempotent(const FiniteRing& ring, const Element& e) { return ring.mul(e, e) == e; }

}  // namespace trizp
