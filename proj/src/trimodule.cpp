#include "trizp/trimodule.hpp"

#include "trizp/errors.hpp"

namespace trizp {

namespace {

using ActionTable = std::vector<std::vector<Vec>>;

Vec accumulate_action(const ActionTable& table, const Vec& ring_coords, const Vec& module_coords,
                      bool ring_first, std::size_t rank, const Modulus& mod) {
    Vec out(rank, 0);
    for (std::size_t a = 0; a < ring_coords.size(); ++a) {
        if (ring_coords[a] == 0) continue;
        for (std::size_t b = 0; b < module_coords.size(); ++b) {
            if (module_coords[b] == 0) continue;
            const Residue w = mod.mul(ring_coords[a], module_coords[b]);
            const Vec& img = ring_first ? table[a][b] : table[b][a];
            for (std::size_t l = 0; l < rank; ++l) out[l] = mod.reduce(out[l] + w * img[l]);
        }
    }
    return out;
}

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

void check_table(const ActionTable& t, std::size_t outer, std::size_t inner, std::size_t rank,
                 const char* what) {
    if (t.size() != outer) throw DimensionMismatch(std::string(what) + ": wrong number of rows");
    for (const auto& row : t) {
        if (row.size() != inner) throw DimensionMismatch(std::string(what) + ": ragged table");
        for (const auto& v : row)
            if (v.size() != rank)
                throw DimensionMismatch(std::string(what) + ": image vector of wrong length");
    }
}

}  // namespace

Bimodule Bimodule::make(FiniteRing left_ring, FiniteRing right_ring, std::size_t rank,
                        ActionTable left_action, ActionTable right_action, std::string label) {
    if (!(left_ring.modulus() == right_ring.modulus()))
        throw ModulusMismatch("bimodule '" + label + "': left and right rings have different moduli");
    const auto& mod = left_ring.modulus();
    const std::size_t kr = left_ring.rank(), ks = right_ring.rank();
    check_table(left_action, kr, rank, rank, "left action");
    check_table(right_action, rank, ks, rank, "right action");
    for (auto* t : {&left_action, &right_action})
        for (auto& row : *t)
            for (auto& v : row)
                for (auto& x : v) x = mod.reduce(x);

    Bimodule bm(std::move(left_ring), std::move(right_ring), rank, std::move(left_action),
                std::move(right_action), std::move(label));
    const auto& R = bm.left_;
    const auto& S = bm.right_;

    for (std::size_t b = 0; b < rank; ++b) {
        const Vec mb = unit_vec(rank, b);
        if (bm.act_left(R.one(), mb) != mb)
            throw NotUnitalModule("bimodule '" + bm.label_ + "': 1_R * m_" + std::to_string(b) +
                                  " != m_" + std::to_string(b));
        if (bm.act_right(mb, S.one()) != mb)
            throw NotUnitalModule("bimodule '" + bm.label_ + "': m_" + std::to_string(b) +
                                  " * 1_S != m_" + std::to_string(b));
    }
    for (std::size_t b = 0; b < rank; ++b) {
        const Vec mb = unit_vec(rank, b);
        for (std::size_t i = 0; i < kr; ++i)
            for (std::size_t j = 0; j < kr; ++j) {
                const auto ri = R.basis(i), rj = R.basis(j);
                if (bm.act_left(R.mul(ri, rj), mb) != bm.act_left(ri, bm.act_left(rj, mb)))
                    throw NotAssociative("bimodule '" + bm.label_ + "': (r r')m != r(r'm)");
            }
        for (std::size_t i = 0; i < ks; ++i)
            for (std::size_t j = 0; j < ks; ++j) {
                const auto si = S.basis(i), sj = S.basis(j);
                if (bm.act_right(mb, S.mul(si, sj)) != bm.act_right(bm.act_right(mb, si), sj))
                    throw NotAssociative("bimodule '" + bm.label_ + "': m(s s') != (m s)s'");
            }
        for (std::size_t i = 0; i < kr; ++i)
            for (std::size_t j = 0; j < ks; ++j) {
                const auto ri = R.basis(i);
                const auto sj = S.basis(j);
                if (bm.act_right(bm.act_left(ri, mb), sj) != bm.act_left(ri, bm.act_right(mb, sj)))
                    throw NotAssociative("bimodule '" + bm.label_ + "': (r m)s != r(m s)");
            }
    }
    return bm;
}

Vec Bimodule::act_left(const Element& r, const Vec& m) const {
    left_.check(r);
    if (m.size() != rank_) throw DimensionMismatch("bimodule element of wrong length");
    return accumulate_action(left_action_, r.coords, m, true, rank_, modulus());
}

Vec Bimodule::act_right(const Vec& m, const Element& s) const {
    right_.check(s);
    if (m.size() != rank_) throw DimensionMismatch("bimodule element of wrong length");
    return accumulate_action(right_action_, s.coords, m, false, rank_, modulus());
}

Bimodule Bimodule::regular(const FiniteRing& ring) {
    const auto& sc = ring.structure_constants();
    return make(ring, ring, ring.rank(), sc, sc, ring.label());
}

Bimodule Bimodule::scalar_columns(Modulus m, std::size_t n) {
    const auto zm = ring_zm(m);
    ActionTable left(1, std::vector<Vec>(n)), right(n, std::vector<Vec>(1));
    for (std::size_t b = 0; b < n; ++b) {
        left[0][b] = unit_vec(n, b);
        right[b][0] = unit_vec(n, b);
    }
    return make(zm, zm, n, std::move(left), std::move(right),
                "Z" + std::to_string(m.value()) + "^" + std::to_string(n));
}

Bimodule Bimodule::matrix_block(Modulus m, std::size_t n, std::size_t p) {
    const auto rl = ring_matrices(m, n);
    const auto rr = ring_matrices(m, p);
    const std::size_t k = n * p;
    ActionTable left(n * n, std::vector<Vec>(k, Vec(k, 0)));
    ActionTable right(k, std::vector<Vec>(p * p, Vec(k, 0)));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < p; ++j)
                    if (b == i) left[a * n + b][i * p + j][a * p + j] = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < p; ++j)
            for (std::size_t c = 0; c < p; ++c)
                for (std::size_t d = 0; d < p; ++d)
                    if (j == c) right[i * p + j][c * p + d][i * p + d] = 1;
    return make(rl, rr, k, std::move(left), std::move(right),
                "M" + std::to_string(n) + "x" + std::to_string(p) + "(Z" +
                    std::to_string(m.value()) + ")");
}

Bimodule Bimodule::zero(const FiniteRing& left_ring, const FiniteRing& right_ring) {
    return make(left_ring, right_ring, 0, ActionTable(left_ring.rank()), ActionTable{}, "0");
}

Faithfulness check_faithful(const Bimodule& m) {
    const auto& mod = m.modulus();
    const std::size_t km = m.rank();
    {
        // row (b, l): coefficient of r_a in coordinate l of r * m_b
        const std::size_t kr = m.left_ring().rank();
        MatrixZm sys(mod, 0, kr);
        Vec row(kr);
        for (std::size_t b = 0; b < km; ++b)
            for (std::size_t l = 0; l < km; ++l) {
                for (std::size_t a = 0; a < kr; ++a) row[a] = m.left_action()[a][b][l];
                sys.append_row(row);
            }
        const auto ann = kernel(sys);
        if (ann.generators().rows() > 0)
            return {Faithfulness::Kind::left_witness, Element{ann.generators().row_vec(0)}};
    }
    {
        const std::size_t ks = m.right_ring().rank();
        MatrixZm sys(mod, 0, ks);
        Vec row(ks);
        for (std::size_t b = 0; b < km; ++b)
            for (std::size_t l = 0; l < km; ++l) {
                for (std::size_t c = 0; c < ks; ++c) row[c] = m.right_action()[b][c][l];
                sys.append_row(row);
            }
        const auto ann = kernel(sys);
        if (ann.generators().rows() > 0)
            return {Faithfulness::Kind::right_witness, Element{ann.generators().row_vec(0)}};
    }
    return {};
}

TriangularRing make_triangular(const FiniteRing& r, const Bimodule& m, const FiniteRing& s) {
    if (!(r.modulus() == m.modulus()) || !(s.modulus() == m.modulus()))
        throw ModulusMismatch("Tri(R, M, S): components have different moduli");
    if (!m.left_ring().same_structure(r))
        throw RingMismatch("Tri(R, M, S): M is not a left module over '" + r.label() + "'");
    if (!m.right_ring().same_structure(s))
        throw RingMismatch("Tri(R, M, S): M is not a right module over '" + s.label() + "'");
    const auto faithful = check_faithful(m);
    if (!faithful.ok()) {
        const bool left = faithful.kind == Faithfulness::Kind::left_witness;
        throw NotFaithful(std::string("bimodule '") + m.label() + "' is not faithful as a " +
                          (left ? "left R" : "right S") + "-module; annihilating witness " +
                          format_element(*faithful.witness));
    }

    const std::size_t kr = r.rank(), km = m.rank(), ks = s.rank();
    const std::size_t k = kr + km + ks;
    const std::size_t om = kr, os = kr + km;
    StructureConstants sc(k, std::vector<Vec>(k, Vec(k, 0)));
    for (std::size_t i = 0; i < kr; ++i) {
        for (std::size_t j = 0; j < kr; ++j)
            for (std::size_t l = 0; l < kr; ++l) sc[i][j][l] = r.structure_constants()[i][j][l];
        for (std::size_t b = 0; b < km; ++b)
            for (std::size_t l = 0; l < km; ++l) sc[i][om + b][om + l] = m.left_action()[i][b][l];
    }
    for (std::size_t b = 0; b < km; ++b)
        for (std::size_t c = 0; c < ks; ++c)
            for (std::size_t l = 0; l < km; ++l) sc[om + b][os + c][om + l] = m.right_action()[b][c][l];
    for (std::size_t i = 0; i < ks; ++i)
        for (std::size_t j = 0; j < ks; ++j)
            for (std::size_t l = 0; l < ks; ++l) sc[os + i][os + j][os + l] = s.structure_constants()[i][j][l];

    Vec p(k, 0), q(k, 0);
    const auto one_r = r.one().coords, one_s = s.one().coords;
    std::copy(one_r.begin(), one_r.end(), p.begin());
    std::copy(one_s.begin(), one_s.end(), q.begin() + static_cast<std::ptrdiff_t>(os));
    Vec unity(k, 0);
    for (std::size_t i = 0; i < k; ++i) unity[i] = m.modulus().add(p[i], q[i]);

    auto ring = FiniteRing::make(m.modulus(), k, std::move(sc), std::move(unity),
                                 "Tri(" + r.label() + "," + m.label() + "," + s.label() + ")");
    return TriangularRing{ring, Element{p}, Element{q}, {0, kr}, {om, km}, {os, ks}};
}

PeirceParts peirce(const Element& x, const TriangularRing& t) {
    const auto& R = t.ring;
    return {R.mul(t.p, x, t.p), R.mul(t.p, x, t.q), R.mul(t.q, x, t.q)};
}

Element peirce_qxp(const Element& x, const TriangularRing& t) {
    return t.ring.mul(t.q, x, t.p);
}

FiniteRing trivial_extension(const FiniteRing& a, const Bimodule& m) {
    if (!(a.modulus() == m.modulus())) throw ModulusMismatch("trivial extension: moduli differ");
    if (!m.left_ring().same_structure(a) || !m.right_ring().same_structure(a))
        throw RingMismatch("trivial extension: M is not an (A, A)-bimodule over '" + a.label() + "'");
    const std::size_t ka = a.rank(), km = m.rank(), k = ka + km;
    StructureConstants sc(k, std::vector<Vec>(k, Vec(k, 0)));
    for (std::size_t i = 0; i < ka; ++i) {
        for (std::size_t j = 0; j < ka; ++j)
            for (std::size_t l = 0; l < ka; ++l) sc[i][j][l] = a.structure_constants()[i][j][l];
        for (std::size_t b = 0; b < km; ++b)
            for (std::size_t l = 0; l < km; ++l) {
                sc[i][ka + b][ka + l] = m.left_action()[i][b][l];
                sc[ka + b][i][ka + l] = m.right_action()[b][i][l];
            }
    }
    Vec unity = a.one().coords;
    unity.resize(k, 0);
    return FiniteRing::make(a.modulus(), k, std::move(sc), std::move(unity),
                            "T(" + a.label() + "," + m.label() + ")");
}

}  // namespace trizp
