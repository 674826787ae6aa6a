#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trg/core.hpp"
#include "trg/rowgraph.hpp"

namespace trg {

inline constexpr int kRegistryVersion = 1;
/// Largest order accepted by any sweep.
inline constexpr int kMaxOrder = 64;

struct NRange {
    int lo;
    int hi;
};

/// Throws InvalidRange unless 2 <= lo <= hi <= kMaxOrder.
void check_range(NRange range);

enum class FilterKind {
    All,       // every valid spec
    Bounded,   // maximum row sum at most two
    Shape,     // |alpha| = k1 and |beta| = k2 exactly
    Boundary,  // |alpha| = |beta| = 2 and i1 + j2 = i2 + j1 = n
};

struct SpecFilter {
    FilterKind kind = FilterKind::All;
    int k1 = 0;  // Shape only
    int k2 = 0;

    static SpecFilter all() { return {}; }
    static SpecFilter bounded() { return {FilterKind::Bounded}; }
    static SpecFilter shape(int k1, int k2) { return {FilterKind::Shape, k1, k2}; }
    static SpecFilter boundary() { return {FilterKind::Boundary}; }

    bool accepts(const ToeplitzSpec& spec) const;
};

/// Calls visit for every valid spec with order in range, |alpha| <= max_k1,
/// |beta| <= max_k2 (negative means unlimited) that passes filter, in
/// lexicographic (n, alpha, beta) order, each exactly once.
void enumerate_specs(NRange range, int max_k1, int max_k2, const SpecFilter& filter,
                     const std::function<void(const ToeplitzSpec&)>& visit);

std::vector<ToeplitzSpec> collect_specs(NRange range, int max_k1, int max_k2,
                                        const SpecFilter& filter);

// --- verification -------------------------------------------------------------

struct Counterexample {
    std::string subject;  // the swept case, e.g. "T_6⟨1,3;2,5⟩" or "ST_9⟨3,6⟩"
    std::string expected;
    std::string observed;
};

struct TheoremReport {
    int registry_version = kRegistryVersion;
    std::string theorem_id;
    NRange n_range{2, 2};
    std::string domain;  // description of the swept parameter space
    std::size_t checked = 0;
    std::size_t passed = 0;
    std::vector<Counterexample> counterexamples;  // first `cap` failures
    std::size_t cap = 10;

    bool ok() const { return passed == checked; }
};

struct VerifyOptions {
    std::size_t counterexample_cap = 10;
    /// Orders are swept on up to this many threads; results are merged in
    /// order so reports do not depend on it.
    int threads = 1;
    /// Largest order for sweeps over every spec (3^(n-1) of them).
    int all_specs_max_n = 16;
};

/// Registry of checkable statements, in a fixed order.
const std::vector<std::string_view>& theorem_registry();

/// Sweeps the statement's domain within range and compares the closed-form
/// prediction with the brute-force oracle. Deterministic for fixed arguments.
/// Throws UnknownTheorem, or InvalidRange for a bad range (including an
/// every-spec sweep beyond options.all_specs_max_n).
TheoremReport verify(std::string_view theorem_id, NRange range, const VerifyOptions& options = {});

// --- catalog --------------------------------------------------------------------

struct CatalogRow {
    ToeplitzSpec spec;
    bool in_t_le2;
    bool triangle_free;
    std::string components;  // StructureSummary::encoding()
    std::vector<int> gamma;
};

CatalogRow catalog_row(const ToeplitzSpec& spec);

void catalog(NRange range, const SpecFilter& filter,
             const std::function<void(const CatalogRow&)>& visit);

}  // namespace trg
