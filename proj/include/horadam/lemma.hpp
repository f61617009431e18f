#pragma once

// Generic weighted-sum combinators for sequences tied by a relation
//
//     X_m = x X_{m - alpha} + y Y_{m - beta}
//
// Every summation identity in the library is one of these evaluated on a
// concrete (x, y, alpha, beta). Each combinator comes as a pair: the literal
// O(k) sum and the closed form it telescopes to.

#include <functional>
#include <string>

#include "horadam/numeric.hpp"
#include "horadam/sequence.hpp"

namespace horadam {

struct LemmaConfig {
    Scalar x;
    Scalar y;
    Index alpha = 0;
    Index beta = 0;
    std::reference_wrapper<HoradamSequence> X;
    std::reference_wrapper<HoradamSequence> Y;

    bool single_sequence() const noexcept { return &X.get() == &Y.get(); }

    /// (y, x, beta, alpha): the same relation read with the roles exchanged.
    /// Only meaningful for single-sequence configs.
    LemmaConfig swapped() const;
};

inline constexpr Index kDefaultProbeRadius = 8;

/// Builds a config and probes the relation for m in [-radius, radius].
/// Throws PreconditionUnmet when x or y vanishes or the probe fails.
LemmaConfig make_lemma_config(Scalar x, Scalar y, Index alpha, Index beta, HoradamSequence& X, HoradamSequence& Y,
                              Index probe_radius = kDefaultProbeRadius);

/// Solves for the (x, y) that make X_m = x X_{m-alpha} + y Y_{m-beta} hold,
/// using the equations at m = 0 and m = 1. X and Y must share p and q; then
/// two consecutive equations pin the relation for every m. Throws
/// PreconditionUnmet when the system is singular or a coefficient vanishes.
LemmaConfig solve_lemma_config(Index alpha, Index beta, HoradamSequence& X, HoradamSequence& Y,
                               Index probe_radius = kDefaultProbeRadius);

enum class SumWeighting { Plain, Binomial };

/// sum_{j=0}^{k} c_j * ratio^j * term(start + step * j), with c_j = 1 or
/// C(k, j). The power of `ratio` is built incrementally.
template <class Term>
Scalar weighted_sum(Index k, const Scalar& ratio, Index start, Index step, Term&& term,
                    SumWeighting weighting = SumWeighting::Plain) {
    Scalar total;
    Scalar power(1);
    mpz_class coefficient = 1;
    for (Index j = 0; j <= k; ++j) {
        Scalar summand = power * term(start + step * j);
        if (weighting == SumWeighting::Binomial) summand *= Scalar(Rational(coefficient, 1));
        total += summand;
        if (j == k) break;
        power *= ratio;
        if (weighting == SumWeighting::Binomial) {
            coefficient *= static_cast<unsigned long>(k - j);
            coefficient /= static_cast<unsigned long>(j + 1);
        }
    }
    return total;
}

/// Whether a combinator is evaluated in its stated form or in the equivalent
/// form obtained by scaling with the k-th weight power and reversing j.
enum class LemmaForm { Standard, Equivalent };

// --- Two-sequence telescoping sum --------------------------------------------
//   Standard:   y sum Y_{m-k alpha-beta+alpha j} / x^j = X_m / x^k - x X_{m-(k+1)alpha}
//   Equivalent: y sum x^j Y_{m-beta-alpha j}           = X_m - x^{k+1} X_{m-(k+1)alpha}

Scalar lemma1_sum(const LemmaConfig& cfg, Index m, Index k, LemmaForm form = LemmaForm::Standard);
Scalar lemma1_closed(const LemmaConfig& cfg, Index m, Index k, LemmaForm form = LemmaForm::Standard);

// --- Single-sequence sums, four variants --------------------------------------
//   DivX       y sum X_{m-k alpha-beta+alpha j}/x^j            = X_m/x^k - x X_{m-(k+1)alpha}
//   DivY       x sum X_{m-k beta-alpha+beta j}/y^j             = X_m/y^k - y X_{m-(k+1)beta}
//   NegYOverX  sum X_{m-(beta-alpha)k+alpha+(beta-alpha)j}/(-y/x)^j
//                                                              = x X_m/(-y/x)^k + y X_{m-(k+1)(beta-alpha)}
//   NegXOverY  the NegYOverX form with the roles exchanged.
// Equivalent forms rescale by the k-th weight power and reverse the sum.

enum class Lemma3Variant { DivX = 1, DivY = 2, NegYOverX = 3, NegXOverY = 4 };

Scalar lemma3_sum(const LemmaConfig& cfg, Lemma3Variant variant, Index m, Index k,
                  LemmaForm form = LemmaForm::Standard);
Scalar lemma3_closed(const LemmaConfig& cfg, Lemma3Variant variant, Index m, Index k,
                     LemmaForm form = LemmaForm::Standard);

/// m at which the variant collapses to its "particular" display
/// (first summand index 0 for the standard form; for equivalent forms the
/// index that makes the closed form start from X_beta / X_alpha / X_{-alpha} /
/// X_{-beta}).
Index lemma3_particular_m(const LemmaConfig& cfg, Lemma3Variant variant, Index k, LemmaForm form);

// --- Single-sequence binomial sums -------------------------------------------
//   XOverY    sum C(k,j) (x/y)^j X_{m-k beta+(beta-alpha)j} = X_m / y^k
//   NegY      sum C(k,j) X_{m+(alpha-beta)k+beta j}/(-y)^j  = (-x/y)^k X_m
//   NegX      sum C(k,j) X_{m+(beta-alpha)k+alpha j}/(-x)^j = (-y/x)^k X_m
//   YOverX    sum C(k,j) (y/x)^j X_{m-k alpha+(alpha-beta)j} = X_m / x^k

enum class Lemma5Variant { XOverY = 1, NegY = 2, NegX = 3, YOverX = 4 };

Scalar lemma5_sum(const LemmaConfig& cfg, Lemma5Variant variant, Index m, Index k);
Scalar lemma5_closed(const LemmaConfig& cfg, Lemma5Variant variant, Index m, Index k);

/// m at which the first summand index is 0.
Index lemma5_particular_m(const LemmaConfig& cfg, Lemma5Variant variant, Index k);

}  // namespace horadam
