#pragma once

// The identity catalog. Each entry pairs a direct O(k) evaluation of the
// summation side with its closed form, and where applicable a second route
// through the generic lemma combinators or through the general identity it
// specializes.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <variant>
#include <vector>

#include "horadam/lemma.hpp"
#include "horadam/numeric.hpp"
#include "horadam/sequence.hpp"

namespace horadam {

enum class TermMode {
    Memoized,  // two-sided term stores
    Fast,      // term_fast per index (companion-matrix power)
};

enum class Classic { Fibonacci, Lucas, Pell, Jacobsthal };

/// Term access for one parameter set. Owns the w/u/v stores, the classic
/// sequences used by preset displays, and a cache of solved lemma configs.
/// Not thread-safe; give each worker its own context.
class EvalContext {
public:
    explicit EvalContext(HoradamParams params, TermMode mode = TermMode::Memoized,
                         Index guard = kDefaultIndexGuard);

    EvalContext(const EvalContext&) = delete;
    EvalContext& operator=(const EvalContext&) = delete;

    const HoradamParams& params() const noexcept { return params_; }
    TermMode mode() const noexcept { return mode_; }
    Index guard() const noexcept { return guard_; }
    const Scalar& e() const noexcept { return e_; }

    const Scalar& w(Index n);
    const Scalar& u(Index n);
    const Scalar& v(Index n);
    /// F_n, L_n, P_n or J_n, independent of the context's own parameters.
    const Scalar& classic(Classic which, Index n);

    HoradamSequence& w_sequence() { return w_; }
    HoradamSequence& u_sequence() { return u_; }
    HoradamSequence& v_sequence() { return v_; }

    /// The relation w_m = x w_{m-alpha} + y Y_{m-beta} solved for (x, y),
    /// where Y is w itself or u. Cached; rethrows the cached
    /// PreconditionUnmet for unsolvable shapes.
    const LemmaConfig& solved_config(Index alpha, Index beta, bool two_sequence);

private:
    const Scalar& fast_term(std::unordered_map<Index, Scalar>& cache, const HoradamParams& params, Index n);

    HoradamParams params_;
    TermMode mode_;
    Index guard_;
    Scalar e_;
    HoradamSequence w_;
    HoradamSequence u_;
    HoradamSequence v_;
    std::unordered_map<Index, Scalar> fast_w_, fast_u_, fast_v_;
    std::map<Classic, HoradamSequence> classic_;
    std::map<std::tuple<Index, Index, bool>, std::variant<LemmaConfig, std::string>> configs_;
};

struct Indices {
    Index m = 0;
    Index n = 0;
    Index r = 0;
    Index k = 0;

    friend bool operator==(const Indices&, const Indices&) = default;
};

/// Bit set over {m, n, r, k}.
using IndexSet = std::uint8_t;
inline constexpr IndexSet kUsesM = 1;
inline constexpr IndexSet kUsesN = 2;
inline constexpr IndexSet kUsesR = 4;
inline constexpr IndexSet kUsesK = 8;

std::string index_set_to_string(IndexSet set);

enum class Family { Kernel, NegativeIndex, Lemma, Theorem, Particular, Display };

std::string_view family_name(Family family);

struct SidePair {
    Scalar lhs;
    Scalar rhs;
};

using SideFn = std::function<Scalar(EvalContext&, const Indices&)>;
using GuardFn = std::function<void(EvalContext&, const Indices&)>;
using PairFn = std::function<SidePair(EvalContext&, const Indices&)>;
using AppliesFn = std::function<bool(const HoradamParams&)>;

/// A preset display read as the general identity at mapped indices.
struct Specialization {
    std::string general_id;
    std::function<Indices(const Indices&)> map_indices;
};

struct IdentityDef {
    std::string id;           // stable kebab-case name
    std::string anchor;       // equation label it mirrors
    std::string statement;    // plain-text formula
    IndexSet indices = 0;     // free indices
    std::string preconditions;
    Family family = Family::Theorem;
    AppliesFn applies;        // parameter families; empty means all
    std::string applies_to;   // human form of `applies`
    GuardFn guard;            // throws PreconditionUnmet
    SideFn lhs;
    SideFn rhs;
    PairFn via_lemma;         // same identity through a lemma combinator, same scale
    std::optional<Specialization> general;
    bool quarantined = false; // known misprint kept for reference
    std::string note;
};

class IdentityId {
public:
    explicit IdentityId(std::size_t index) : index_(index) {}
    std::size_t index() const noexcept { return index_; }
    const IdentityDef& def() const;
    const std::string& name() const { return def().id; }

    friend bool operator==(IdentityId, IdentityId) = default;

private:
    std::size_t index_;
};

/// The full catalog, built once. Immutable after first use.
const std::vector<IdentityDef>& registry();
std::vector<IdentityId> all_identities();
std::optional<IdentityId> find_identity(std::string_view name);
/// Throws ConfigError for unknown names.
IdentityId identity(std::string_view name);

struct IdentityInstance {
    IdentityId id;
    HoradamParams params;
    Indices indices;
};

struct Pass {
    Scalar value;
};
struct PreconditionSkip {
    std::string reason;
};
struct Violated {
    Scalar lhs;
    Scalar rhs;
};

using CheckOutcome = std::variant<Pass, PreconditionSkip, Violated>;

enum class RhsCorruption { None, Negate };

bool applies(const IdentityDef& def, const HoradamParams& params);

/// Evaluates both sides and compares exactly. Hypothesis failures, vanishing
/// denominators and non-matching parameter families come back as
/// PreconditionSkip. Throws std::invalid_argument when k < 0 for an identity
/// that uses k.
CheckOutcome check(IdentityId id, EvalContext& ctx, const Indices& indices,
                   RhsCorruption corruption = RhsCorruption::None);
CheckOutcome check(const IdentityInstance& instance);

/// Both sides without comparison; throws PreconditionUnmet / DivisionByZero.
SidePair evaluate(IdentityId id, EvalContext& ctx, const Indices& indices);

}  // namespace horadam
