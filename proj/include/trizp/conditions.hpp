#pragma once

#include "trizp/funcmap.hpp"

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace trizp {

/// The functional conditions the solver understands.
///
///   kind                       gating                       unknowns
///   ZP_CENTRALIZER             XY = YX = 0                  phi
///   ZP_SELF                    XY = YX = 0                  tau
///   ZP_PAIR                    XY = YX = 0                  (delta, tau)
///   JORDAN_CENTRALIZER_ID      all basis pairs              phi
///   XYX_ID                     all elements X, basis Y      phi
///   DERIVATION_ID              all basis pairs              delta
///   JORDAN_DERIVATION_ID       all basis pairs              delta
///   GEN_DERIVATION_ID          all basis pairs              delta
///   GEN_JORDAN_DERIVATION_ID   all basis pairs              delta
///   JGD_VIA_ID                 all basis pairs              (delta, tau)
///
/// Joint unknowns are laid out as [delta entries | tau entries], each block
/// the row-major flattening of the k x k map matrix. The joint kinds state
/// only their own identity; pair them with the delta-side condition through
/// solve_joint.
enum class ConditionKind {
    zp_centralizer,
    zp_self,
    zp_pair,
    jordan_centralizer_id,
    xyx_id,
    derivation_id,
    jordan_derivation_id,
    gen_derivation_id,
    gen_jordan_derivation_id,
    jgd_via_id,
};

enum class Gating { zero_product_pairs, basis_pairs, elements_by_basis };
enum class Unknowns { single, joint };

struct ConditionSpec {
    ConditionKind kind;

    Gating gating() const noexcept;
    Unknowns unknowns() const noexcept;
    std::string_view name() const noexcept;

    /// Accepts the upper-case names in the table above.
    static ConditionSpec parse(std::string_view name);
    static const std::vector<ConditionSpec>& all();

    friend bool operator==(const ConditionSpec&, const ConditionSpec&) = default;
};

struct SolveOptions {
    std::uint64_t enumeration_bound = default_enumeration_bound;
    /// Worker threads for compilation; the result does not depend on it.
    unsigned workers = 1;
    /// When false, compile returns every generated row unreduced.
    bool deduplicate = true;
};

std::size_t unknown_count(const ConditionSpec& spec, const FiniteRing& ring);

/// Constraint matrix A with: unknown maps satisfy the condition iff
/// vec(unknowns) lies in ker A. Each gated pair contributes k rows; with
/// deduplication the rows are returned in Howell normal form.
MatrixZm compile(const ConditionSpec& spec, const FiniteRing& ring, const SolveOptions& opts = {});

SolutionModule solve(const ConditionSpec& spec, const FiniteRing& ring,
                     const SolveOptions& opts = {});

/// Joint (delta, tau) solutions: delta satisfies the single-unknown
/// delta_condition and (delta, tau) satisfies the joint pair_condition.
SolutionModule solve_joint(const ConditionSpec& delta_condition, const ConditionSpec& pair_condition,
                           const FiniteRing& ring, const SolveOptions& opts = {});

/// Coordinates [k^2, 2k^2) of a joint module.
SolutionModule project_tau(const SolutionModule& joint, const FiniteRing& ring);
/// Coordinates [0, k^2) of a joint module.
SolutionModule project_delta(const SolutionModule& joint, const FiniteRing& ring);

/// tau for which some delta satisfies ZP_SELF with (delta, tau) satisfying ZP_PAIR.
SolutionModule tau_solutions_of_pair_condition(const FiniteRing& ring,
                                               const SolveOptions& opts = {});
/// tau for which some Jordan derivation delta satisfies JGD_VIA_ID.
SolutionModule jgd_tau_module(const FiniteRing& ring, const SolveOptions& opts = {});

std::vector<AdditiveMap> decode_maps(const SolutionModule& module, const FiniteRing& ring);
/// Splits a joint vector into (delta, tau).
std::pair<AdditiveMap, AdditiveMap> decode_joint(std::span<const Residue> v, const FiniteRing& ring);

struct ConditionViolation {
    Element x;
    Element y;
    Element residual;  // the nonzero value the condition requires to vanish
};

/// Direct evaluation of the condition over its whole gating set. For joint
/// kinds delta must be supplied; for single kinds it is ignored.
std::optional<ConditionViolation> find_violation(const ConditionSpec& spec, const AdditiveMap& f,
                                                 const AdditiveMap* delta = nullptr,
                                                 const SolveOptions& opts = {});
inline bool holds(const ConditionSpec& spec, const AdditiveMap& f,
                  const AdditiveMap* delta = nullptr, const SolveOptions& opts = {}) {
    return !find_violation(spec, f, delta, opts);
}

}  // namespace trizp
