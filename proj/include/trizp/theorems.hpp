#pragma once

// Constructive verification of the structure theorems for additive maps on
// triangular rings that are controlled by zero products:
//
//  * a map with X phi(Y) + phi(Y) X = 0 whenever XY = YX = 0 is
//    multiplication by a central element;
//  * tau paired with such a delta has the form tau(X) = d(X) + X tau(1) with
//    d a derivation and tau(1) central, and the four characterizations of
//    that class coincide.
//
// Every verifier returns a report of named checks instead of throwing, so
// the CLI can serialize failures. The constructive routines
// (certify_centralizer, decompose_tau) throw TheoremViolated on failure.

#include "trizp/conditions.hpp"
#include "trizp/trimodule.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trizp {

struct NamedCheck {
    std::string name;
    bool passed = true;
    std::string witness;  // empty when passed
};

struct CheckRecord {
    std::vector<NamedCheck> checks;

    void add(std::string name, bool passed, std::string witness = {});
    bool all_passed() const noexcept;
    const NamedCheck* find(std::string_view name) const noexcept;
    const NamedCheck* first_failure() const noexcept;
};

struct DiagnosticOptions {
    /// Walk all elements (and element pairs) when the ring order is at most this.
    std::uint64_t exhaustive_bound = default_enumeration_bound;
    /// Otherwise use the first this-many elements in canonical order.
    std::size_t sample_size = 200;
};

struct CentralizerCertificate {
    Element c;  // phi(1)
    bool c_central = false;
    bool equals_left_mult = false;
    bool equals_right_mult = false;

    bool valid() const noexcept { return c_central && equals_left_mult && equals_right_mult; }
};

/// {X -> cX : c central}, as a module over single-map coordinates.
SolutionModule centralizer_module(const FiniteRing& ring);
/// {X -> Xc : c central}.
SolutionModule central_right_mult_module(const FiniteRing& ring);

/// Throws NotASolution unless phi lies in zp_solutions, and TheoremViolated
/// if the certificate does not hold.
CentralizerCertificate certify_centralizer(const AdditiveMap& phi, const SolutionModule& zp_solutions);
CentralizerCertificate certify_centralizer(const AdditiveMap& phi, const TriangularRing& t,
                                           const SolveOptions& opts = {});

/// Evaluates the corner identities that a zero-product centralizer map
/// satisfies (Pphi(QXQ)P = 0, Pphi(PXP)P = Pphi(P)PXP, ...), one named
/// check per identity, c2 ... c18.
CheckRecord peirce_diagnostics_centralizer(const AdditiveMap& phi, const TriangularRing& t,
                                           const DiagnosticOptions& opts = {});

struct TauDecomposition {
    Element w;              // P delta(P) Q
    AdditiveMap delta_cap;  // X -> delta(X) + WX - XW, so that P Delta(P) Q = 0
    AdditiveMap delta_prime;  // X -> Delta(X) - X Delta(1)
    AdditiveMap d;          // X -> Delta'(X) - WX + XW
    AdditiveMap phi;        // tau - delta
    Element delta_one;
    Element tau_one;
    CentralizerCertificate phi_certificate;
    CheckRecord checks;
};

/// Runs the constructive chain W -> Delta -> Delta' -> d -> phi -> tau.
/// Throws PreconditionViolated unless delta satisfies ZP_SELF and (delta, tau)
/// satisfies ZP_PAIR; throws TheoremViolated(step, witness) if a step fails.
TauDecomposition decompose_tau(const AdditiveMap& tau, const AdditiveMap& delta,
                               const TriangularRing& t, const SolveOptions& opts = {});

/// Corner identities for Delta built from delta: j2, j3, j4, j5, j6, j7,
/// j8, the Delta(P)/Delta(Q) exchange identity, corner commutation and j9.
CheckRecord peirce_diagnostics_delta(const AdditiveMap& delta, const TriangularRing& t,
                                     const DiagnosticOptions& opts = {});

struct NamedModule {
    std::string name;
    SolutionModule module;
};

struct VerificationReport {
    std::string name;
    std::string ring_label;
    std::vector<NamedModule> modules;
    CheckRecord checks;

    bool passed() const noexcept { return checks.all_passed(); }
    const SolutionModule* module(std::string_view name) const noexcept;
};

/// Records equality of two modules, with a separating generator on failure.
void compare_modules(CheckRecord& record, std::string name, const SolutionModule& a,
                     const SolutionModule& b);

struct VerifyOptions {
    SolveOptions solve;
    DiagnosticOptions diagnostics;
    /// Seed for the randomized forward-direction spot checks.
    std::uint64_t seed = 1;
    std::size_t random_samples = 16;
};

VerificationReport verify_theorem_3_1(const TriangularRing& t, const VerifyOptions& opts = {});
VerificationReport verify_theorem_4_1(const TriangularRing& t, const VerifyOptions& opts = {});
VerificationReport verify_corollaries(const TriangularRing& t, const VerifyOptions& opts = {});

}  // namespace trizp
