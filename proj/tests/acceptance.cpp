// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Reference answers come from the brute-force oracle.

#include "checks.hpp"

#include "trizp/errors.hpp"
#include "trizp/theorems.hpp"
#include "trizp/workspace.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace trizp;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

TriangularRing tri(Residue m, std::size_t columns = 1) {
    const auto z = ring_zm(Modulus(m));
    return make_triangular(
        z, columns == 1 ? Bimodule::regular(z) : Bimodule::scalar_columns(Modulus(m), columns), z);
}

std::set<Vec> members(const SolutionModule& s) { return checks::members(s); }

// 1. ZP_CENTRALIZER = brute-force filter of all 3^9 maps = {left_mult(c) : c central}.
Outcome criterion_1() {
    Outcome o;
    const auto t = tri(3);
    const auto rep = oracle::tri_scalar(3, 1);
    const auto zp = oracle::zero_product_pairs(rep);
    std::set<Vec> filtered;
    for (const auto& f : oracle::all_maps(rep))
        if (oracle::zp_centralizer(rep, zp, f)) filtered.insert(f);
    std::set<Vec> left_mults;
    for (const auto& c : oracle::center(rep)) left_mults.insert(oracle::mult_map(rep, c, true));

    const auto s = solve({ConditionKind::zp_centralizer}, t.ring);
    o.require(members(s) == filtered, "solver module differs from brute-force filter");
    o.require(filtered == left_mults, "brute-force filter differs from central left multiplications");
    o.require(s.cardinality() == 3, "cardinality " + s.cardinality_string() + " != 3");
    o.require(s == centralizer_module(t.ring), "solver module differs from centralizer module");
    return o;
}

// 2. JORDAN_CENTRALIZER_ID and XYX_ID give the centralizer module.
Outcome criterion_2() {
    Outcome o;
    const auto t = tri(3);
    const auto rep = oracle::tri_scalar(3, 1);
    const auto cz = centralizer_module(t.ring);
    const auto jc = solve({ConditionKind::jordan_centralizer_id}, t.ring);
    const auto xyx = solve({ConditionKind::xyx_id}, t.ring);
    o.require(jc == cz, "JORDAN_CENTRALIZER_ID module differs from centralizers");
    o.require(xyx == cz, "XYX_ID module differs from centralizers");
    std::set<Vec> ref_jc, ref_xyx;
    for (const auto& f : oracle::all_maps(rep)) {
        if (oracle::jordan_centralizer(rep, f)) ref_jc.insert(f);
        if (oracle::xyx(rep, f)) ref_xyx.insert(f);
    }
    o.require(members(jc) == ref_jc, "JORDAN_CENTRALIZER_ID differs from brute force");
    o.require(members(xyx) == ref_xyx, "XYX_ID differs from brute force");
    return o;
}

// 3. M_i = M_ii = M_iii = M_iv on three triangular rings.
Outcome criterion_3(const TriangularRing& t) {
    Outcome o;
    const auto rep = verify_theorem_4_1(t);
    const auto* a = rep.module("M_i");
    for (const char* n : {"M_ii", "M_iii", "M_iv"}) {
        const auto* b = rep.module(n);
        o.require(a && b && *a == *b, std::string("M_i differs from ") + n);
    }
    if (const auto* f = rep.checks.first_failure()) o.require(false, f->name + ": " + f->witness);
    if (o.ok) o.detail = "|M| = " + a->cardinality_string();
    return o;
}

// 4. Every generator pair of the joint module decomposes and reassembles.
Outcome criterion_4() {
    Outcome o;
    const auto t = tri(3);
    const auto& r = t.ring;
    const auto joint = solve_joint({ConditionKind::zp_self}, {ConditionKind::zp_pair}, r);
    for (std::size_t g = 0; g < joint.generators().rows() && o.ok; ++g) {
        const auto [delta, tau] = decode_joint(joint.generators().row(g), r);
        try {
            const auto dec = decompose_tau(tau, delta, t);
            o.require(dec.checks.all_passed(), "generator " + std::to_string(g) + " failed a check");
            o.require(dec.d + right_mult(r, dec.tau_one) == tau,
                      "generator " + std::to_string(g) + ": d + R_tau(1) != tau");
        } catch (const Error& e) {
            o.require(false, "generator " + std::to_string(g) + ": " + e.what());
        }
    }
    if (o.ok) o.detail = std::to_string(joint.generators().rows()) + " generators";
    return o;
}

// 5. Right multiplication by the corner unit.
Outcome criterion_5() {
    Outcome o;
    const auto t = tri(3);
    const auto x = t.ring.basis(t.m_block.begin);
    const auto f = right_mult(t.ring, x);
    o.require(is_generalized_derivation(f), "not a generalized derivation");
    o.require(!is_jordan_generalized_derivation(f), "is a Jordan generalized derivation");
    return o;
}

// 6. Jordan derivations equal derivations on T(T, T).
Outcome criterion_6() {
    Outcome o;
    const auto ext = trivial_extension(tri(3).ring);
    o.require(ext.order() == 729u && ext.rank() == 6, "trivial extension has the wrong size");
    const auto jd = solve({ConditionKind::jordan_derivation_id}, ext);
    const auto d = solve({ConditionKind::derivation_id}, ext);
    o.require(module_subset(jd, d), "a Jordan derivation is not a derivation");
    o.require(module_subset(d, jd), "a derivation is not a Jordan derivation");
    if (o.ok) o.detail = "|D| = " + d.cardinality_string();
    return o;
}

// 7. Linear algebra against exhaustive enumeration.
Outcome criterion_7() {
    Outcome o;
    std::mt19937_64 rng(424242);
    std::size_t count = 0;
    for (std::int64_t m : {3, 9, 15})
        for (int i = 0; i < 70 && o.ok; ++i) {
            const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
            const auto err = checks::compare_linalg(checks::random_matrix(rng, rows, cols, m), cols, m);
            o.require(err.empty(), err);
            ++count;
        }
    if (o.ok) o.detail = std::to_string(count) + " matrices";
    return o;
}

// 8. Peirce diagnostics on every solution, and a failing non-solution.
Outcome criterion_8() {
    Outcome o;
    const auto t = tri(3);
    const auto& r = t.ring;
    std::size_t maps = 0;
    const auto require_names = [&](const CheckRecord& rec, std::initializer_list<const char*> names) {
        for (const char* n : names) {
            const auto* c = rec.find(n);
            o.require(c != nullptr, std::string("diagnostic ") + n + " missing");
            if (c) o.require(c->passed, std::string("diagnostic ") + n + " failed: " + c->witness);
        }
        if (const auto* f = rec.first_failure()) o.require(false, f->name + ": " + f->witness);
    };
    for_each_member(solve({ConditionKind::zp_centralizer}, r), 1000, [&](const Vec& v) {
        ++maps;
        require_names(peirce_diagnostics_centralizer(AdditiveMap::from_vec(r, v), t),
                      {"c2", "c3", "c4", "c6", "c8", "c9", "c10", "c11", "c12", "c13", "c14", "c15"});
    });
    for_each_member(solve({ConditionKind::zp_self}, r), 1000, [&](const Vec& v) {
        ++maps;
        require_names(peirce_diagnostics_delta(AdditiveMap::from_vec(r, v), t),
                      {"j2", "j3", "j4", "j5", "j6", "j7"});
    });
    // X -> X e11 first fails a two-variable identity.
    const auto bad = peirce_diagnostics_centralizer(right_mult(r, r.basis(0)), t);
    const auto* f = bad.first_failure();
    o.require(f != nullptr, "non-solution passed every diagnostic");
    if (f) {
        o.require(f->name == "c9", "expected c9 to fail first, got " + f->name);
        o.require(f->witness.find("X=") != std::string::npos && f->witness.find("Y=") != std::string::npos,
                  "failing diagnostic has no witness pair");
    }
    if (o.ok) o.detail = std::to_string(maps) + " solutions; non-solution fails " + f->name + " at " + f->witness;
    return o;
}

// 9. Guards: modulus 4 and unfaithful bimodules.
Outcome criterion_9() {
    Outcome o;
    try {
        Modulus m(4);
        o.require(false, "modulus 4 accepted");
    } catch (const EvenModulusError& e) {
        o.require(std::string(e.what()).find("2-torsion-free") != std::string::npos,
                  "modulus-4 error does not cite 2-torsion-freeness");
    }
    try {
        FiniteRing::make(Modulus(4), 1, {{{1}}}, {1}, "Z4");
        o.require(false, "ring over Z4 accepted");
    } catch (const EvenModulusError&) {
    }

    const auto cfg = std::filesystem::temp_directory_path() / "trizp_acceptance_mod4.yaml";
    std::ofstream(cfg) << "modulus: 4\nrings:\n  - {name: Z4, builtin: Zm}\ntasks: []\n";
    std::ostringstream log;
    cli::RunFlags flags;
    flags.out_dir = std::filesystem::temp_directory_path() / "trizp_acceptance_mod4";
    const int rc = cli::run(cli::Command::report, cfg, flags, log);
    o.require(rc == cli::exit_config_error, "modulus-4 config exit code " + std::to_string(rc));
    o.require(log.str().find("2-torsion-free") != std::string::npos, "CLI message does not cite 2-torsion-freeness");
    std::filesystem::remove(cfg);

    const auto z3 = ring_zm(Modulus(3));
    const auto expect_rejected = [&](const Bimodule& m, const FiniteRing& left, const char* what) {
        try {
            make_triangular(left, m, z3);
            o.require(false, std::string(what) + " accepted");
        } catch (const NotFaithful& e) {
            o.require(std::string(e.what()).find("witness [") != std::string::npos,
                      std::string(what) + " rejected without a witness");
        }
    };
    expect_rejected(Bimodule::zero(z3, z3), z3, "zero bimodule");
    const auto p = ring_product(z3, z3);
    expect_rejected(Bimodule::make(p, z3, 1, {{{1}}, {{0}}}, {{{1}}}, "first factor"), p,
                    "non-faithful bimodule");
    const auto f = check_faithful(Bimodule::zero(z3, z3));
    o.require(f.kind == Faithfulness::Kind::left_witness && f.witness && f.witness->coords == Vec{1},
              "zero bimodule witness is not the unity");
    return o;
}

struct Criterion {
    std::string name;
    double limit_seconds;  // 0 = no limit
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"1 zero-product centralizers on Tri(Z3,Z3,Z3)", 10, criterion_1},
        {"2 Jordan and XYX centralizers on Tri(Z3,Z3,Z3)", 10, criterion_2},
        {"3a four characterizations agree on Tri(Z3,Z3,Z3)", 60, [] { return criterion_3(tri(3)); }},
        {"3b four characterizations agree on Tri(Z9,Z9,Z9)", 60, [] { return criterion_3(tri(9)); }},
        {"3c four characterizations agree on Tri(Z3,Z3^2,Z3)", 60, [] { return criterion_3(tri(3, 2)); }},
        {"4 tau decomposition round trip", 0, criterion_4},
        {"5 corner right multiplication", 0, criterion_5},
        {"6 Jordan derivations are derivations on T(T,T)", 120, criterion_6},
        {"7 linear algebra oracle", 0, criterion_7},
        {"8 Peirce diagnostics", 0, criterion_8},
        {"9 2-torsion and faithfulness guards", 0, criterion_9},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs > c.limit_seconds && out.ok) {
            out.ok = false;
            out.detail = "exceeded time limit";
        }
        failed += !out.ok;
        std::printf("%s criterion %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", c.name.c_str(), secs,
                    out.detail.empty() ? "" : ": ", out.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
