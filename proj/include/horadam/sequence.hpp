#pragma once

// Horadam sequences w_n(a, b; p, q): w_0 = a, w_1 = b,
// w_n = p w_{n-1} - q w_{n-2}, extended to negative n by running the
// recurrence backwards.

#include <cstdint>
#include <deque>
#include <string>
#include <string_view>
#include <vector>

#include "horadam/numeric.hpp"

namespace horadam {

using Index = std::int64_t;

inline constexpr Index kDefaultIndexGuard = 100'000;

class HoradamParams {
public:
    /// Throws InvalidParams when p or q is zero.
    HoradamParams(Scalar a, Scalar b, Scalar p, Scalar q);

    const Scalar& a() const noexcept { return a_; }
    const Scalar& b() const noexcept { return b_; }
    const Scalar& p() const noexcept { return p_; }
    const Scalar& q() const noexcept { return q_; }

    /// u_n(p, q) = w_n(1, p; p, q)
    HoradamParams fundamental() const { return {1, p_, p_, q_}; }
    /// v_n(p, q) = w_n(2, p; p, q)
    HoradamParams primordial() const { return {2, p_, p_, q_}; }

    /// "custom(a,b,p,q)" in the scalar grammar.
    std::string to_string() const;

    friend bool operator==(const HoradamParams&, const HoradamParams&) = default;

private:
    Scalar a_, b_, p_, q_;
};

/// Lazily extended two-sided term store. Extension walks one step at a time
/// from the cached frontier, so every cached triple satisfies the recurrence.
///
/// Not thread-safe: term() mutates the store. Confine an instance to one
/// thread; distinct instances are independent.
class HoradamSequence {
public:
    explicit HoradamSequence(HoradamParams params, Index guard = kDefaultIndexGuard);

    /// Exact w_n. The reference stays valid for the lifetime of the sequence.
    /// Throws IndexGuardExceeded when |n| > guard().
    const Scalar& term(Index n);
    const Scalar& operator()(Index n) { return term(n); }

    const HoradamParams& params() const noexcept { return params_; }
    Index guard() const noexcept { return guard_; }

    /// Cached window [lowest, highest]; always contains 0 and 1.
    Index lowest_cached() const noexcept { return -static_cast<Index>(backward_.size()); }
    Index highest_cached() const noexcept { return static_cast<Index>(forward_.size()) - 1; }

private:
    HoradamParams params_;
    Index guard_;
    Scalar q_inverse_;
    std::deque<Scalar> forward_;   // w_0, w_1, w_2, ...
    std::deque<Scalar> backward_;  // w_{-1}, w_{-2}, ...
};

/// O(log |n|) evaluation by powering the companion matrix [[p, -q], [1, 0]]
/// (or its inverse for n < 0). Stateless.
Scalar term_fast(const HoradamParams& params, Index n, Index guard = kDefaultIndexGuard);

/// e = p a b - q a^2 - b^2
Scalar compute_e(const HoradamParams& params);

/// w together with u and v sharing its p, q, and the constant e.
struct SequenceTriple {
    explicit SequenceTriple(const HoradamParams& params, Index guard = kDefaultIndexGuard);

    HoradamSequence w;
    HoradamSequence u;
    HoradamSequence v;
    Scalar e;
};

enum class PresetKind { Fibonacci, Lucas, Pell, Jacobsthal, G, U, V, Custom };

/// A named parameter family plus its arguments: G takes (a, b), U and V take
/// (p, q), Custom takes (a, b, p, q); the classic presets take none.
struct PresetSpec {
    PresetKind kind = PresetKind::Fibonacci;
    std::vector<Scalar> args;

    HoradamParams params() const;
    /// Token form accepted by parse_preset: "pell", "g(3,7)", "custom(1,2,3,-1)".
    std::string to_string() const;
};

std::string_view preset_name(PresetKind kind);
std::size_t preset_arity(PresetKind kind);
/// Throws UnknownPreset.
PresetKind preset_kind(std::string_view name);

/// Parses "fibonacci", "g(3,7)", "u(1,-1)", "custom(0,1,2,-1)", ...
/// Throws UnknownPreset for an unknown name, ParseError for bad arguments.
PresetSpec parse_preset(std::string_view token);

SequenceTriple preset(const PresetSpec& spec, Index guard = kDefaultIndexGuard);

/// u_{-n} = -q^{1-n} u_{n-2}
Scalar negative_index_u(SequenceTriple& triple, Index n);

/// v_{-n} = q^{-n} v_n. The reciprocal power is the form the backward
/// recurrence confirms; `v_{-n} = q^n v_n` only holds when q^{2n} = 1.
Scalar negative_index_v(SequenceTriple& triple, Index n);

/// w_{-n} = q^{-n} (a u_n - b u_{n-1}) / (a u_n + (b - p a) u_{n-1}) w_n.
/// Throws PreconditionUnmet when the denominator vanishes.
Scalar negative_index_w(SequenceTriple& triple, Index n);

/// (a u_n - b u_{n-1}) / (a u_n + (b - p a) u_{n-1}), the cofactor shared by
/// every formula that trades w_{-n} for w_n.
Scalar reflection_ratio(const HoradamParams& params, HoradamSequence& u, Index n);

}  // namespace horadam
