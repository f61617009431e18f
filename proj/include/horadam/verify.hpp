#pragma once

// Grid-sweep verification: evaluate identities over parameter sets and
// index ranges, tally outcomes, keep a bounded list of failure witnesses.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "horadam/identities.hpp"

namespace horadam {

struct IndexRange {
    Index lo = 0;
    Index hi = 0;

    std::size_t size() const noexcept { return hi < lo ? 0 : static_cast<std::size_t>(hi - lo + 1); }
    std::string to_string() const;
};

inline constexpr std::size_t kDefaultWitnessLimit = 20;

struct GridSpec {
    std::vector<PresetSpec> parameter_sets;
    IndexRange m_range{-6, 8};
    IndexRange n_range{-6, 8};
    IndexRange r_range{-3, 5};
    IndexRange k_range{0, 6};
    /// Unset means the whole registry.
    std::optional<std::vector<IdentityId>> identity_filter;
    /// Reported separately and excluded from the zero-violation verdict.
    std::vector<IdentityId> quarantine;
    std::size_t witness_limit = kDefaultWitnessLimit;
    unsigned jobs = 0;  // 0: hardware concurrency
    Index index_guard = kDefaultIndexGuard;

    /// Throws ConfigError.
    void validate() const;
    std::vector<IdentityId> identities() const;
    bool is_quarantined(IdentityId id) const;
};

/// The standard sweep: the classic presets, G(3,7), and custom sets with
/// q = 2, q = -3, p = 3, rational and Gaussian entries.
GridSpec default_grid();

/// Key-value config, one `key = value` per line, `#` comments:
///   params = fibonacci, g(3,7), custom(1,2,3,-1)
///   m = -6..8   n = ...   r = ...   k = 0..6
///   identities = kernel-eq-10, lemma-2.1      (omit for all)
///   quarantine = neg-index-eq-8-as-printed
///   witness_limit = 20   jobs = 4   max_index = 100000
/// Keys not given keep their default_grid() value. Throws ConfigError.
GridSpec parse_grid_config(std::string_view text);
GridSpec load_grid_config(const std::string& path);

struct Witness {
    std::string params;
    Indices indices;
    Scalar lhs;
    Scalar rhs;
};

struct IdentityTally {
    IdentityId id;
    bool quarantined = false;
    std::size_t parameter_sets = 0;  // applicable sets swept
    std::size_t pass = 0;
    std::size_t skip = 0;
    std::size_t violation = 0;
    std::map<std::string, std::size_t> skip_reasons;
    std::vector<Witness> witnesses;

    std::size_t instances() const noexcept { return pass + skip + violation; }
};

struct VerificationReport {
    std::vector<IdentityTally> tallies;
    std::size_t grid_cardinality = 0;
    double wall_seconds = 0.0;

    std::size_t violations() const;              // excluding quarantined identities
    std::size_t quarantined_violations() const;
    bool ok() const { return violations() == 0; }
    const IdentityTally* find(std::string_view id) const;

    std::string to_json() const;
    std::string to_table() const;
};

/// Deterministic for a given spec regardless of `jobs`.
VerificationReport run_grid(const GridSpec& spec);

/// Number of instances the spec evaluates for one identity.
std::size_t identity_cardinality(const GridSpec& spec, IdentityId id);

struct BenchmarkRow {
    Index k = 0;
    bool equal = false;
    double sum_seconds = 0.0;     // direct summation side, memoized terms
    double closed_seconds = 0.0;  // closed side, companion-matrix terms
    double speedup() const { return closed_seconds > 0 ? sum_seconds / closed_seconds : 0.0; }
};

/// Times both sides of `id` at each k. Each side is evaluated on a fresh
/// context. Rows whose sides disagree carry equal = false and zero timings.
/// Throws PreconditionUnmet when an instance is outside the identity's
/// hypotheses.
std::vector<BenchmarkRow> benchmark(IdentityId id, const HoradamParams& params, const std::vector<Index>& k_values,
                                    Indices base = {});

}  // namespace horadam
