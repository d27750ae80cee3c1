#include "trizp/theorems.hpp"

#include "trizp/errors.hpp"

#include <functional>
#include <random>

namespace trizp {

void CheckRecord::add(std::string name, bool passed, std::string witness) {
    checks.push_back({std::move(name), passed, passed ? std::string{} : std::move(witness)});
}

bool CheckRecord::all_passed() const noexcept { return first_failure() == nullptr; }

const NamedCheck* CheckRecord::find(std::string_view name) const noexcept {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

const NamedCheck* CheckRecord::first_failure() const noexcept {
    for (const auto& c : checks)
        if (!c.passed) return &c;
    return nullptr;
}

const SolutionModule* VerificationReport::module(std::string_view n) const noexcept {
    for (const auto& m : modules)
        if (m.name == n) return &m.module;
    return nullptr;
}

// ------------------------------------------------------------- centralizers

namespace {

SolutionModule maps_from_center(const FiniteRing& ring, bool left) {
    const auto c = center(ring);
    const std::size_t k = ring.rank();
    MatrixZm gens(ring.modulus(), 0, k * k);
    for (std::size_t r = 0; r < c.generators().rows(); ++r) {
        const Element g{c.generators().row_vec(r)};
        gens.append_row((left ? left_mult(ring, g) : right_mult(ring, g)).to_vec());
    }
    return SolutionModule(gens);
}

}  // namespace

SolutionModule centralizer_module(const FiniteRing& ring) { return maps_from_center(ring, true); }

SolutionModule central_right_mult_module(const FiniteRing& ring) {
    return maps_from_center(ring, false);
}

CentralizerCertificate certify_centralizer(const AdditiveMap& phi,
                                           const SolutionModule& zp_solutions) {
    if (!member(phi.to_vec(), zp_solutions))
        throw NotASolution("map " + format_map(phi) +
                           " does not satisfy the zero-product centralizer condition");
    const auto& R = phi.ring();
    CentralizerCertificate cert;
    cert.c = phi(R.one());
    cert.c_central = is_central(R, cert.c);
    cert.equals_left_mult = phi == left_mult(R, cert.c);
    cert.equals_right_mult = phi == right_mult(R, cert.c);
    if (!cert.valid())
        throw TheoremViolated("centralizer certificate",
                              "phi=" + format_map(phi) + " phi(1)=" + format_element(cert.c) +
                                  (cert.c_central ? "" : " not central") +
                                  (cert.equals_left_mult ? "" : " phi != left_mult(phi(1))") +
                                  (cert.equals_right_mult ? "" : " phi != right_mult(phi(1))"));
    return cert;
}

CentralizerCertificate certify_centralizer(const AdditiveMap& phi, const TriangularRing& t,
                                           const SolveOptions& opts) {
    return certify_centralizer(phi, solve({ConditionKind::zp_centralizer}, t.ring, opts));
}

// ------------------------------------------------------ identity evaluation

namespace {

using ElementPair = std::pair<Element, Element>;

class IdentityWalker {
public:
    IdentityWalker(const TriangularRing& t, const DiagnosticOptions& opts) : t_(t) {
        const auto order = t.ring.order();
        if (order && *order <= opts.exhaustive_bound) {
            elements_ = all_elements(t.ring, *order);
        } else {
            // first sample_size elements in lexicographic order
            const Residue m = t.ring.modulus().value();
            Element x = t.ring.zero();
            for (std::size_t n = 0; n < opts.sample_size; ++n) {
                elements_.push_back(x);
                std::size_t pos = x.coords.size();
                while (pos > 0) {
                    --pos;
                    if (++x.coords[pos] < m) break;
                    x.coords[pos] = 0;
                }
            }
        }
    }

    void unary(CheckRecord& rec, std::string name,
               const std::function<ElementPair(const Element&)>& sides) const {
        for (const auto& x : elements_) {
            auto [lhs, rhs] = sides(x);
            if (lhs != rhs) {
                rec.add(std::move(name), false,
                        "X=" + format_element(x) + " lhs=" + format_element(lhs) +
                            " rhs=" + format_element(rhs));
                return;
            }
        }
        rec.add(std::move(name), true);
    }

    void binary(CheckRecord& rec, std::string name,
                const std::function<ElementPair(const Element&, const Element&)>& sides) const {
        for (const auto& x : elements_)
            for (const auto& y : elements_) {
                auto [lhs, rhs] = sides(x, y);
                if (lhs != rhs) {
                    rec.add(std::move(name), false,
                            "X=" + format_element(x) + " Y=" + format_element(y) +
                                " lhs=" + format_element(lhs) + " rhs=" + format_element(rhs));
                    return;
                }
            }
        rec.add(std::move(name), true);
    }

private:
    const TriangularRing& t_;
    std::vector<Element> elements_;
};

}  // namespace

CheckRecord peirce_diagnostics_centralizer(const AdditiveMap& phi, const TriangularRing& t,
                                           const DiagnosticOptions& opts) {
    const auto& R = t.ring;
    const auto& P = t.p;
    const auto& Q = t.q;
    const auto zero = R.zero();
    auto pxp = [&](const Element& x) { return R.mul(P, x, P); };
    auto pxq = [&](const Element& x) { return R.mul(P, x, Q); };
    auto qxq = [&](const Element& x) { return R.mul(Q, x, Q); };
    const auto phiP = phi(P), phiQ = phi(Q), phi1 = phi(R.one());

    IdentityWalker walk(t, opts);
    CheckRecord rec;
    walk.unary(rec, "c2", [&](const Element& x) {
        return ElementPair{R.mul(P, phi(qxq(x)), P), zero};
    });
    walk.unary(rec, "c3", [&](const Element& x) {
        return ElementPair{R.mul(P, phi(qxq(x)), Q), zero};
    });
    walk.unary(rec, "c4", [&](const Element& x) {
        const auto v = phi(pxp(x));
        return ElementPair{R.add(R.mul(Q, v, Q), R.mul(P, v, Q)), zero};
    });
    walk.unary(rec, "c6", [&](const Element& x) {
        return ElementPair{R.mul(P, phi(pxq(x)), P), zero};
    });
    walk.unary(rec, "c8", [&](const Element& y) {
        return ElementPair{R.mul(Q, phi(pxq(y)), Q), zero};
    });
    walk.binary(rec, "c9", [&](const Element& x, const Element& y) {
        return ElementPair{R.mul(P, phi(R.mul(pxp(x), pxq(y))), Q),
                           R.mul(R.mul(P, phi(pxp(x)), P), pxq(y))};
    });
    walk.unary(rec, "c10", [&](const Element& y) {
        return ElementPair{R.mul(P, phi(pxq(y)), Q), R.mul(R.mul(P, phiP, P), pxq(y))};
    });
    walk.unary(rec, "c11", [&](const Element& x) {
        return ElementPair{R.mul(P, phi(pxp(x)), P), R.mul(R.mul(P, phiP, P), pxp(x))};
    });
    walk.binary(rec, "c12", [&](const Element& x, const Element& y) {
        return ElementPair{R.mul(P, phi(R.mul(pxq(x), qxq(y))), Q),
                           R.mul(pxq(x), R.mul(Q, phi(qxq(y)), Q))};
    });
    walk.unary(rec, "c13", [&](const Element& x) {
        return ElementPair{R.mul(P, phi(pxq(x)), Q), R.mul(pxq(x), R.mul(Q, phiQ, Q))};
    });
    walk.unary(rec, "c14", [&](const Element& y) {
        return ElementPair{R.mul(Q, phi(qxq(y)), Q), R.mul(qxq(y), R.mul(Q, phiQ, Q))};
    });
    walk.unary(rec, "c15", [&](const Element& x) {
        return ElementPair{R.mul(R.mul(P, phiP, P), pxq(x)), R.mul(pxq(x), R.mul(Q, phiQ, Q))};
    });
    walk.unary(rec, "c16", [&](const Element& x) {
        return ElementPair{R.mul(R.mul(P, phiP, P), pxp(x)), R.mul(pxp(x), R.mul(P, phiP, P))};
    });
    walk.unary(rec, "c17", [&](const Element& x) {
        return ElementPair{R.mul(R.mul(Q, phiQ, Q), qxq(x)), R.mul(qxq(x), R.mul(Q, phiQ, Q))};
    });
    walk.unary(rec, "c18", [&](const Element& x) {
        return ElementPair{R.mul(x, phi1), R.mul(phi1, x)};
    });
    walk.unary(rec, "c18_phi", [&](const Element& x) {
        return ElementPair{phi(x), R.mul(phi1, x)};
    });
    return rec;
}

// ----------------------------------------------------------- decomposition

namespace {

AdditiveMap build_delta_cap(const AdditiveMap& delta, const TriangularRing& t, Element& w) {
    const auto& R = t.ring;
    w = R.mul(t.p, delta(t.p), t.q);
    return delta + inner_derivation(R, w);
}

[[noreturn]] void violated(const std::string& step, const std::string& witness) {
    throw TheoremViolated(step, witness);
}

}  // namespace

TauDecomposition decompose_tau(const AdditiveMap& tau, const AdditiveMap& delta,
                               const TriangularRing& t, const SolveOptions& opts) {
    const auto& R = t.ring;
    if (!tau.ring().same_structure(R) || !delta.ring().same_structure(R))
        throw RingMismatch("decompose_tau: maps are not defined on the triangular ring");
    if (auto v = find_violation({ConditionKind::zp_self}, delta, nullptr, opts))
        throw PreconditionViolated("delta violates ZP_SELF at X=" + format_element(v->x) +
                                   " Y=" + format_element(v->y));
    if (auto v = find_violation({ConditionKind::zp_pair}, tau, &delta, opts))
        throw PreconditionViolated("(delta, tau) violates ZP_PAIR at X=" + format_element(v->x) +
                                   " Y=" + format_element(v->y));

    CheckRecord checks;
    Element w;
    const auto cap = build_delta_cap(delta, t, w);

    const auto corner = R.mul(t.p, cap(t.p), t.q);
    checks.add("P_Delta(P)_Q_zero", R.is_zero(corner), format_element(corner));
    if (!R.is_zero(corner)) violated("P Delta(P) Q = 0", format_element(corner));

    const auto cap_one = cap(R.one());
    const bool cap_one_central = is_central(R, cap_one);
    checks.add("Delta(1)_central", cap_one_central, format_element(cap_one));
    if (!cap_one_central) violated("Delta(1) central", format_element(cap_one));

    const auto delta_prime = cap - right_mult(R, cap_one);
    const auto dp_bad = derivation_violation(delta_prime);
    checks.add("Delta_prime_derivation", !dp_bad, format_map(delta_prime));
    if (dp_bad) violated("Delta' derivation", format_map(delta_prime));

    const auto d = delta_prime - inner_derivation(R, w);
    const auto d_bad = derivation_violation(d);
    checks.add("d_derivation", !d_bad, format_map(d));
    if (d_bad) violated("d derivation", format_map(d));

    const auto delta_one = delta(R.one());
    const bool delta_split = delta == d + right_mult(R, delta_one);
    checks.add("delta_equals_d_plus_right_mult_delta1", delta_split, format_map(delta));
    if (!delta_split) violated("delta = d + R_{delta(1)}", format_map(delta));

    const auto phi = tau - delta;
    const auto cert = certify_centralizer(phi, solve({ConditionKind::zp_centralizer}, R, opts));
    checks.add("phi_centralizer", cert.valid());

    const auto tau_one = tau(R.one());
    const bool tau_one_central = is_central(R, tau_one);
    checks.add("tau(1)_central", tau_one_central, format_element(tau_one));
    if (!tau_one_central) violated("tau(1) central", format_element(tau_one));

    const bool reassembled = tau == d + right_mult(R, tau_one);
    checks.add("tau_equals_d_plus_right_mult_tau1", reassembled, format_map(tau));
    if (!reassembled) violated("tau = d + R_{tau(1)}", format_map(tau));

    return TauDecomposition{w,         cap,      delta_prime, d,      phi,
                            delta_one, tau_one,  cert,        checks};
}

CheckRecord peirce_diagnostics_delta(const AdditiveMap& delta, const TriangularRing& t,
                                     const DiagnosticOptions& opts) {
    const auto& R = t.ring;
    const auto& P = t.p;
    const auto& Q = t.q;
    Element w;
    const auto D = build_delta_cap(delta, t, w);
    auto pap = [&](const Element& x) { return R.mul(P, x, P); };
    auto paq = [&](const Element& x) { return R.mul(P, x, Q); };
    auto qaq = [&](const Element& x) { return R.mul(Q, x, Q); };
    const auto DP = D(P), DQ = D(Q), D1 = D(R.one());
    const auto pDPp = R.mul(P, DP, P);
    const auto qDQq = R.mul(Q, DQ, Q);

    CheckRecord rec;
    const auto corner = R.mul(P, DP, Q);
    rec.add("P_Delta(P)_Q_zero", R.is_zero(corner), "P Delta(P) Q=" + format_element(corner));

    IdentityWalker walk(t, opts);
    walk.unary(rec, "j2", [&](const Element& a) {
        const auto v = D(qaq(a));
        return ElementPair{v, R.mul(Q, v, Q)};
    });
    walk.unary(rec, "j3", [&](const Element& a) {
        const auto v = D(pap(a));
        return ElementPair{v, R.mul(P, v, P)};
    });
    walk.unary(rec, "j4", [&](const Element& b) {
        const auto v = D(paq(b));
        return ElementPair{v, R.mul(P, v, Q)};
    });
    walk.binary(rec, "j5", [&](const Element& a, const Element& b) {
        const auto lhs = R.mul(P, D(R.mul(pap(a), paq(b))), Q);
        const auto rhs = R.sub(R.add(R.mul(pap(a), R.mul(P, D(paq(b)), Q)),
                                     R.mul(R.mul(P, D(pap(a)), P), paq(b))),
                               R.mul(R.mul(pap(a), paq(b)), qDQq));
        return ElementPair{lhs, rhs};
    });
    walk.unary(rec, "j5_exchange", [&](const Element& b) {
        return ElementPair{R.mul(pDPp, paq(b)), R.mul(paq(b), qDQq)};
    });
    walk.binary(rec, "j6", [&](const Element& a, const Element& b) {
        const auto lhs = R.mul(P, D(R.mul(paq(a), qaq(b))), Q);
        const auto rhs = R.sub(R.add(R.mul(R.mul(P, D(paq(a)), Q), qaq(b)),
                                     R.mul(paq(a), R.mul(Q, D(qaq(b)), Q))),
                               R.mul(R.mul(paq(a), qDQq), qaq(b)));
        return ElementPair{lhs, rhs};
    });
    walk.binary(rec, "j7", [&](const Element& a, const Element& b) {
        const auto lhs = R.mul(P, D(R.mul(pap(a), pap(b))), P);
        const auto rhs = R.sub(R.add(R.mul(pap(a), R.mul(P, D(pap(b)), P)),
                                     R.mul(R.mul(P, D(pap(a)), P), pap(b))),
                               R.mul(R.mul(pap(a), pDPp), pap(b)));
        return ElementPair{lhs, rhs};
    });
    walk.binary(rec, "j8", [&](const Element& a, const Element& b) {
        const auto lhs = R.mul(Q, D(R.mul(qaq(a), qaq(b))), Q);
        const auto rhs = R.sub(R.add(R.mul(R.mul(Q, D(qaq(a)), Q), qaq(b)),
                                     R.mul(qaq(a), R.mul(Q, D(qaq(b)), Q))),
                               R.mul(R.mul(qaq(a), qDQq), qaq(b)));
        return ElementPair{lhs, rhs};
    });
    walk.unary(rec, "corner_commute_P", [&](const Element& a) {
        return ElementPair{R.mul(pap(a), pDPp), R.mul(pDPp, pap(a))};
    });
    walk.unary(rec, "corner_commute_Q", [&](const Element& a) {
        return ElementPair{R.mul(qDQq, qaq(a)), R.mul(qaq(a), qDQq)};
    });
    const auto split = R.add(pDPp, qDQq);
    rec.add("Delta(1)_corner_split", D1 == split,
            "Delta(1)=" + format_element(D1) + " PDelta(P)P+QDelta(Q)Q=" + format_element(split));
    walk.unary(rec, "j9", [&](const Element& a) {
        return ElementPair{R.mul(a, D1), R.mul(D1, a)};
    });
    return rec;
}

// --------------------------------------------------------------- verifiers

void compare_modules(CheckRecord& record, std::string name, const SolutionModule& a,
                     const SolutionModule& b) {
    if (auto w = first_non_member(a, b)) {
        record.add(std::move(name), false, "generator of left not in right: " + format_element({*w}));
        return;
    }
    if (auto w = first_non_member(b, a)) {
        record.add(std::move(name), false, "generator of right not in left: " + format_element({*w}));
        return;
    }
    record.add(std::move(name), a == b,
               "mutual inclusion holds but canonical forms differ (cardinalities " +
                   a.cardinality_string() + " vs " + b.cardinality_string() + ")");
}

namespace {

void merge(CheckRecord& into, const CheckRecord& from, const std::string& prefix) {
    for (const auto& c : from.checks) into.add(prefix + c.name, c.passed, c.witness);
}

Vec random_member(const SolutionModule& s, std::mt19937_64& rng) {
    const auto& g = s.generators();
    const auto& mod = s.modulus();
    Vec x(s.ambient_dim(), 0);
    for (std::size_t r = 0; r < g.rows(); ++r) {
        const Residue c = static_cast<Residue>(rng() % static_cast<std::uint64_t>(mod.value()));
        for (std::size_t j = 0; j < x.size(); ++j) x[j] = mod.add(x[j], mod.mul(c, g.at(r, j)));
    }
    return x;
}

}  // namespace

VerificationReport verify_theorem_3_1(const TriangularRing& t, const VerifyOptions& opts) {
    const auto& R = t.ring;
    VerificationReport rep{"zero-product-centralizers", R.label(), {}, {}};
    const auto zp = solve({ConditionKind::zp_centralizer}, R, opts.solve);
    const auto cz = centralizer_module(R);
    rep.modules.push_back({"zp_centralizer_solutions", zp});
    rep.modules.push_back({"centralizers", cz});
    compare_modules(rep.checks, "solutions_equal_centralizers", zp, cz);

    const auto gens = decode_maps(zp, R);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string tag = "generator_" + std::to_string(i) + "_";
        try {
            certify_centralizer(gens[i], zp);
            rep.checks.add(tag + "certified", true);
        } catch (const TheoremViolated& e) {
            rep.checks.add(tag + "certified", false, e.witness());
        }
        merge(rep.checks, peirce_diagnostics_centralizer(gens[i], t, opts.diagnostics), tag);
    }
    return rep;
}

VerificationReport verify_theorem_4_1(const TriangularRing& t, const VerifyOptions& opts) {
    const auto& R = t.ring;
    VerificationReport rep{"zero-product-generalized-derivations", R.label(), {}, {}};
    const auto derivations = solve({ConditionKind::derivation_id}, R, opts.solve);
    const auto m_i = module_sum(derivations, central_right_mult_module(R));
    const auto m_ii = solve({ConditionKind::zp_self}, R, opts.solve);
    const auto m_iii = jgd_tau_module(R, opts.solve);
    const auto m_iv = tau_solutions_of_pair_condition(R, opts.solve);
    rep.modules.push_back({"M_i", m_i});
    rep.modules.push_back({"M_ii", m_ii});
    rep.modules.push_back({"M_iii", m_iii});
    rep.modules.push_back({"M_iv", m_iv});

    const std::array<const SolutionModule*, 4> ms{&m_i, &m_ii, &m_iii, &m_iv};
    const std::array<const char*, 4> names{"i", "ii", "iii", "iv"};
    for (std::size_t a = 0; a < ms.size(); ++a)
        for (std::size_t b = a + 1; b < ms.size(); ++b)
            compare_modules(rep.checks, std::string("M_") + names[a] + "_equals_M_" + names[b],
                            *ms[a], *ms[b]);

    // Forward direction on random (d, c): d + R_c lies in every module.
    std::mt19937_64 rng(opts.seed);
    const auto central_right = central_right_mult_module(R);
    bool forward_ok = true;
    std::string forward_witness;
    for (std::size_t s = 0; s < opts.random_samples && forward_ok; ++s) {
        Vec v = random_member(derivations, rng);
        const Vec c = random_member(central_right, rng);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = R.modulus().add(v[j], c[j]);
        for (std::size_t k = 1; k < ms.size(); ++k)
            if (!member(v, *ms[k])) {
                forward_ok = false;
                forward_witness = "d + R_c = " + format_element({v}) + " not in M_" + names[k];
                break;
            }
    }
    rep.checks.add("forward_direction_random_samples", forward_ok, forward_witness);

    // Jordan derivations of a triangular ring are derivations.
    const auto jd = solve({ConditionKind::jordan_derivation_id}, R, opts.solve);
    bool jd_ok = true;
    std::string jd_witness;
    for (const auto& g : decode_maps(jd, R))
        if (!is_derivation(g)) {
            jd_ok = false;
            jd_witness = format_map(g);
            break;
        }
    rep.checks.add("jordan_derivations_are_derivations", jd_ok, jd_witness);
    return rep;
}

VerificationReport verify_corollaries(const TriangularRing& t, const VerifyOptions& opts) {
    const auto& R = t.ring;
    VerificationReport rep{"corollaries", R.label(), {}, {}};
    const auto cz = centralizer_module(R);
    const auto jc = solve({ConditionKind::jordan_centralizer_id}, R, opts.solve);
    const auto zp = solve({ConditionKind::zp_centralizer}, R, opts.solve);
    const auto xyx = solve({ConditionKind::xyx_id}, R, opts.solve);
    rep.modules.push_back({"centralizers", cz});
    rep.modules.push_back({"jordan_centralizers", jc});
    rep.modules.push_back({"zp_centralizer_solutions", zp});
    rep.modules.push_back({"xyx_solutions", xyx});
    compare_modules(rep.checks, "a_jordan_centralizers_equal_centralizers", jc, cz);
    compare_modules(rep.checks, "a_zp_solutions_equal_centralizers", zp, cz);
    compare_modules(rep.checks, "b_xyx_solutions_equal_centralizers", xyx, cz);

    const auto ext = trivial_extension(R);
    const auto ext_jd = solve({ConditionKind::jordan_derivation_id}, ext, opts.solve);
    const auto ext_d = solve({ConditionKind::derivation_id}, ext, opts.solve);
    rep.modules.push_back({"trivial_extension_jordan_derivations", ext_jd});
    rep.modules.push_back({"trivial_extension_derivations", ext_d});
    const auto jd_not_d = first_non_member(ext_jd, ext_d);
    rep.checks.add("c_jordan_derivations_subset_derivations", !jd_not_d,
                   jd_not_d ? format_element({*jd_not_d}) : "");
    const auto d_not_jd = first_non_member(ext_d, ext_jd);
    rep.checks.add("c_derivations_subset_jordan_derivations", !d_not_jd,
                   d_not_jd ? format_element({*d_not_jd}) : "");

    // Right multiplication by a corner unit: a generalized derivation whose
    // value at 1 is not central.
    const auto corner = R.basis(t.m_block.begin);
    const auto rm = right_mult(R, corner);
    rep.checks.add("d_corner_right_mult_is_generalized_derivation", is_generalized_derivation(rm),
                   format_map(rm));
    rep.checks.add("d_corner_right_mult_value_at_one_not_central", !is_central(R, rm(R.one())),
                   format_element(rm(R.one())));
    rep.checks.add("d_corner_right_mult_not_jordan_generalized_derivation",
                   !member(rm.to_vec(), jgd_tau_module(R, opts.solve)), format_map(rm));
    return rep;
}

}  // namespace trizp
