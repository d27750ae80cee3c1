#include "trizp/conditions.hpp"

#include "trizp/errors.hpp"

#include <array>
#include <thread>

namespace trizp {

namespace {

struct KindInfo {
    ConditionKind kind;
    std::string_view name;
    Gating gating;
    Unknowns unknowns;
};

constexpr std::array<KindInfo, 10> kind_table{{
    {ConditionKind::zp_centralizer, "ZP_CENTRALIZER", Gating::zero_product_pairs, Unknowns::single},
    {ConditionKind::zp_self, "ZP_SELF", Gating::zero_product_pairs, Unknowns::single},
    {ConditionKind::zp_pair, "ZP_PAIR", Gating::zero_product_pairs, Unknowns::joint},
    {ConditionKind::jordan_centralizer_id, "JORDAN_CENTRALIZER_ID", Gating::basis_pairs,
     Unknowns::single},
    {ConditionKind::xyx_id, "XYX_ID", Gating::elements_by_basis, Unknowns::single},
    {ConditionKind::derivation_id, "DERIVATION_ID", Gating::basis_pairs, Unknowns::single},
    {ConditionKind::jordan_derivation_id, "JORDAN_DERIVATION_ID", Gating::basis_pairs,
     Unknowns::single},
    {ConditionKind::gen_derivation_id, "GEN_DERIVATION_ID", Gating::basis_pairs, Unknowns::single},
    {ConditionKind::gen_jordan_derivation_id, "GEN_JORDAN_DERIVATION_ID", Gating::basis_pairs,
     Unknowns::single},
    {ConditionKind::jgd_via_id, "JGD_VIA_ID", Gating::basis_pairs, Unknowns::joint},
}};

const KindInfo& info(ConditionKind k) {
    for (const auto& i : kind_table)
        if (i.kind == k) return i;
    throw InvalidArgument("unknown condition kind");
}

// One summand coef * left * f_slot(arg) * right of a condition instance.
// Slot 0 is the single unknown or delta; slot 1 is tau.
struct Term {
    Residue coef;
    int slot;
    Element arg;
    std::optional<Element> left;
    std::optional<Element> right;
};

constexpr int kDelta = 0;
constexpr int kTau = 1;

// Every condition is "sum of terms = 0" for each gated (x, y).
std::vector<Term> expand(ConditionKind kind, const FiniteRing& R, const Element& x,
                         const Element& y) {
    const auto xy = R.mul(x, y);
    const auto yx = R.mul(y, x);
    const auto one = R.one();
    switch (kind) {
        case ConditionKind::zp_centralizer:
            // X phi(Y) + phi(Y) X
            return {{1, 0, y, x, {}}, {1, 0, y, {}, x}};
        case ConditionKind::zp_self:
            // X tau(Y) + tau(X) Y + Y tau(X) + tau(Y) X
            return {{1, 0, y, x, {}}, {1, 0, x, {}, y}, {1, 0, x, y, {}}, {1, 0, y, {}, x}};
        case ConditionKind::zp_pair:
            // X tau(Y) + delta(X) Y + Y delta(X) + tau(Y) X
            return {{1, kTau, y, x, {}},
                    {1, kDelta, x, {}, y},
                    {1, kDelta, x, y, {}},
                    {1, kTau, y, {}, x}};
        case ConditionKind::jordan_centralizer_id:
            // phi(xy + yx) - x phi(y) - phi(y) x
            return {{1, 0, R.add(xy, yx), {}, {}}, {-1, 0, y, x, {}}, {-1, 0, y, {}, x}};
        case ConditionKind::xyx_id:
            // phi(xyx) - x phi(y) x
            return {{1, 0, R.mul(xy, x), {}, {}}, {-1, 0, y, x, x}};
        case ConditionKind::derivation_id:
            // d(xy) - d(x) y - x d(y)
            return {{1, 0, xy, {}, {}}, {-1, 0, x, {}, y}, {-1, 0, y, x, {}}};
        case ConditionKind::jordan_derivation_id:
            // d(xy + yx) - d(x) y - x d(y) - d(y) x - y d(x)
            return {{1, 0, R.add(xy, yx), {}, {}},
                    {-1, 0, x, {}, y},
                    {-1, 0, y, x, {}},
                    {-1, 0, y, {}, x},
                    {-1, 0, x, y, {}}};
        case ConditionKind::gen_derivation_id:
            // d(xy) - d(x) y - x d(y) + x d(1) y
            return {{1, 0, xy, {}, {}}, {-1, 0, x, {}, y}, {-1, 0, y, x, {}}, {1, 0, one, x, y}};
        case ConditionKind::gen_jordan_derivation_id:
            // Jordan identity + x d(1) y + y d(1) x
            return {{1, 0, R.add(xy, yx), {}, {}},
                    {-1, 0, x, {}, y},
                    {-1, 0, y, x, {}},
                    {-1, 0, y, {}, x},
                    {-1, 0, x, y, {}},
                    {1, 0, one, x, y},
                    {1, 0, one, y, x}};
        case ConditionKind::jgd_via_id:
            // tau(xy + yx) - x tau(y) - delta(x) y - tau(y) x - y delta(x)
            return {{1, kTau, R.add(xy, yx), {}, {}},
                    {-1, kTau, y, x, {}},
                    {-1, kDelta, x, {}, y},
                    {-1, kTau, y, {}, x},
                    {-1, kDelta, x, y, {}}};
    }
    throw InvalidArgument("unknown condition kind");
}

using GatedPairs = std::vector<std::pair<Element, Element>>;

GatedPairs gated_pairs(Gating gating, const FiniteRing& R, std::uint64_t bound) {
    GatedPairs out;
    switch (gating) {
        case Gating::zero_product_pairs:
            return zero_product_pairs(R, bound);
        case Gating::basis_pairs:
            for (std::size_t i = 0; i < R.rank(); ++i)
                for (std::size_t j = 0; j < R.rank(); ++j) out.emplace_back(R.basis(i), R.basis(j));
            return out;
        case Gating::elements_by_basis:
            for_each_element(R, bound, [&](const Element& x) {
                for (std::size_t j = 0; j < R.rank(); ++j) out.emplace_back(x, R.basis(j));
            });
            return out;
    }
    return out;
}

// Column offsets of each slot inside the unknown vector.
struct Layout {
    std::size_t width;
    std::array<std::size_t, 2> offset;
};

// Appends the k rows contributed by one gated pair. The coefficient of
// entry (i, j) of slot s in output coordinate r is
//   coef * arg_j * (left * b_i * right)_r.
void emit_rows(const FiniteRing& R, const std::vector<Term>& terms, const Layout& layout,
               std::vector<Vec>& rows) {
    const std::size_t k = R.rank();
    const auto& mod = R.modulus();
    std::vector<Vec> block(k, Vec(layout.width, 0));
    for (const auto& t : terms) {
        for (std::size_t i = 0; i < k; ++i) {
            auto v = R.basis(i);
            if (t.left) v = R.mul(*t.left, v);
            if (t.right) v = R.mul(v, *t.right);
            for (std::size_t r = 0; r < k; ++r) {
                if (v.coords[r] == 0) continue;
                const Residue w = mod.mul(mod.reduce(t.coef), v.coords[r]);
                const std::size_t base = layout.offset[static_cast<std::size_t>(t.slot)] + i * k;
                for (std::size_t j = 0; j < k; ++j)
                    if (t.arg.coords[j] != 0)
                        block[r][base + j] = mod.reduce(block[r][base + j] + w * t.arg.coords[j]);
            }
        }
    }
    for (auto& row : block) rows.push_back(std::move(row));
}

void accumulate(const ConditionSpec& spec, const FiniteRing& R, const Layout& layout,
                const SolveOptions& opts, HowellBasis* howell, MatrixZm* raw) {
    const auto pairs = gated_pairs(spec.gating(), R, opts.enumeration_bound);
    if (!howell) {
        std::vector<Vec> rows;
        for (const auto& [x, y] : pairs) emit_rows(R, expand(spec.kind, R, x, y), layout, rows);
        for (const auto& r : rows) raw->append_row(r);
        return;
    }
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(opts.workers, pairs.size() / 64 + 1));
    if (workers == 1) {
        std::vector<Vec> rows;
        for (const auto& [x, y] : pairs) {
            rows.clear();
            emit_rows(R, expand(spec.kind, R, x, y), layout, rows);
            for (const auto& r : rows) howell->insert(r);
        }
        return;
    }
    // Each worker reduces a contiguous chunk; merging canonical forms gives
    // the same span, hence the same canonical result, for any worker count.
    std::vector<HowellBasis> partial(workers, HowellBasis(R.modulus(), layout.width));
    {
        std::vector<std::jthread> threads;
        const std::size_t chunk = (pairs.size() + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w)
            threads.emplace_back([&, w] {
                std::vector<Vec> rows;
                const std::size_t lo = w * chunk, hi = std::min(pairs.size(), lo + chunk);
                for (std::size_t p = lo; p < hi; ++p) {
                    rows.clear();
                    emit_rows(R, expand(spec.kind, R, pairs[p].first, pairs[p].second), layout,
                              rows);
                    for (const auto& r : rows) partial[w].insert(r);
                }
            });
    }
    for (const auto& part : partial) howell->insert_all(part.canonical());
}

Layout single_layout(const FiniteRing& R) {
    const std::size_t k2 = R.rank() * R.rank();
    return {k2, {0, 0}};
}

Layout joint_layout(const FiniteRing& R) {
    const std::size_t k2 = R.rank() * R.rank();
    return {2 * k2, {0, k2}};
}

}  // namespace

Gating ConditionSpec::gating() const noexcept { return info(kind).gating; }
Unknowns ConditionSpec::unknowns() const noexcept { return info(kind).unknowns; }
std::string_view ConditionSpec::name() const noexcept { return info(kind).name; }

ConditionSpec ConditionSpec::parse(std::string_view name) {
    for (const auto& i : kind_table)
        if (i.name == name) return {i.kind};
    throw InvalidArgument("unknown condition kind '" + std::string(name) + "'");
}

const std::vector<ConditionSpec>& ConditionSpec::all() {
    static const std::vector<ConditionSpec> specs = [] {
        std::vector<ConditionSpec> v;
        for (const auto& i : kind_table) v.push_back({i.kind});
        return v;
    }();
    return specs;
}

std::size_t unknown_count(const ConditionSpec& spec, const FiniteRing& ring) {
    const std::size_t k2 = ring.rank() * ring.rank();
    return spec.unknowns() == Unknowns::joint ? 2 * k2 : k2;
}

MatrixZm compile(const ConditionSpec& spec, const FiniteRing& ring, const SolveOptions& opts) {
    const Layout layout = spec.unknowns() == Unknowns::joint ? joint_layout(ring) : single_layout(ring);
    if (!opts.deduplicate) {
        MatrixZm raw(ring.modulus(), 0, layout.width);
        accumulate(spec, ring, layout, opts, nullptr, &raw);
        return raw;
    }
    HowellBasis basis(ring.modulus(), layout.width);
    accumulate(spec, ring, layout, opts, &basis, nullptr);
    return basis.canonical();
}

SolutionModule solve(const ConditionSpec& spec, const FiniteRing& ring, const SolveOptions& opts) {
    return kernel(compile(spec, ring, opts));
}

SolutionModule solve_joint(const ConditionSpec& delta_condition, const ConditionSpec& pair_condition,
                           const FiniteRing& ring, const SolveOptions& opts) {
    if (delta_condition.unknowns() != Unknowns::single)
        throw InvalidArgument("solve_joint: delta condition must have a single unknown");
    if (pair_condition.unknowns() != Unknowns::joint)
        throw InvalidArgument("solve_joint: pair condition must have joint unknowns");
    const Layout layout = joint_layout(ring);
    HowellBasis basis(ring.modulus(), layout.width);
    // delta-side rows occupy the delta block only
    accumulate(delta_condition, ring, Layout{layout.width, {0, 0}}, opts, &basis, nullptr);
    accumulate(pair_condition, ring, layout, opts, &basis, nullptr);
    return kernel(basis.canonical());
}

namespace {

std::vector<std::size_t> block_coords(std::size_t begin, std::size_t size) {
    std::vector<std::size_t> c(size);
    for (std::size_t i = 0; i < size; ++i) c[i] = begin + i;
    return c;
}

}  // namespace

SolutionModule project_tau(const SolutionModule& joint, const FiniteRing& ring) {
    const std::size_t k2 = ring.rank() * ring.rank();
    if (joint.ambient_dim() != 2 * k2) throw DimensionMismatch("project_tau: not a joint module");
    const auto coords = block_coords(k2, k2);
    return module_project(joint, coords);
}

SolutionModule project_delta(const SolutionModule& joint, const FiniteRing& ring) {
    const std::size_t k2 = ring.rank() * ring.rank();
    if (joint.ambient_dim() != 2 * k2) throw DimensionMismatch("project_delta: not a joint module");
    const auto coords = block_coords(0, k2);
    return module_project(joint, coords);
}

SolutionModule tau_solutions_of_pair_condition(const FiniteRing& ring, const SolveOptions& opts) {
    return project_tau(solve_joint({ConditionKind::zp_self}, {ConditionKind::zp_pair}, ring, opts),
                       ring);
}

SolutionModule jgd_tau_module(const FiniteRing& ring, const SolveOptions& opts) {
    return project_tau(
        solve_joint({ConditionKind::jordan_derivation_id}, {ConditionKind::jgd_via_id}, ring, opts),
        ring);
}

std::vector<AdditiveMap> decode_maps(const SolutionModule& module, const FiniteRing& ring) {
    const std::size_t k2 = ring.rank() * ring.rank();
    if (module.ambient_dim() != k2)
        throw DimensionMismatch("decode_maps: module is not over single-map coordinates");
    std::vector<AdditiveMap> out;
    for (std::size_t r = 0; r < module.generators().rows(); ++r)
        out.push_back(AdditiveMap::from_vec(ring, module.generators().row(r)));
    return out;
}

std::pair<AdditiveMap, AdditiveMap> decode_joint(std::span<const Residue> v, const FiniteRing& ring) {
    const std::size_t k2 = ring.rank() * ring.rank();
    if (v.size() != 2 * k2) throw DimensionMismatch("decode_joint: expected 2k^2 entries");
    return {AdditiveMap::from_vec(ring, v.first(k2)), AdditiveMap::from_vec(ring, v.subspan(k2))};
}

std::optional<ConditionViolation> find_violation(const ConditionSpec& spec, const AdditiveMap& f,
                                                 const AdditiveMap* delta,
                                                 const SolveOptions& opts) {
    const auto& R = f.ring();
    if (spec.unknowns() == Unknowns::joint) {
        if (!delta) throw InvalidArgument(std::string(spec.name()) + " needs a delta map");
        if (!delta->ring().same_structure(R))
            throw RingMismatch("find_violation: delta and tau act on different rings");
    }
    std::optional<ConditionViolation> found;
    auto visit = [&](const Element& x, const Element& y) {
        if (found) return;
        Element total = R.zero();
        for (const auto& t : expand(spec.kind, R, x, y)) {
            const AdditiveMap& map = (spec.unknowns() == Unknowns::joint && t.slot == kDelta) ? *delta : f;
            auto v = map(t.arg);
            if (t.left) v = R.mul(*t.left, v);
            if (t.right) v = R.mul(v, *t.right);
            total = R.add(total, R.scale(t.coef, v));
        }
        if (!R.is_zero(total)) found = ConditionViolation{x, y, total};
    };
    if (spec.gating() == Gating::zero_product_pairs) {
        for_each_zero_product_pair(R, opts.enumeration_bound, visit);
    } else {
        for (const auto& [x, y] : gated_pairs(spec.gating(), R, opts.enumeration_bound)) {
            visit(x, y);
            if (found) break;
        }
    }
    return found;
}

}  // namespace trizp
