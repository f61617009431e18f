#pragma once

// Shared vocabulary for the catalog translation units.

#include <vector>

#include "horadam/error.hpp"
#include "horadam/identities.hpp"

namespace horadam::catalog {

using Ctx = EvalContext;
using Ix = Indices;

inline const Scalar& nonzero(const Scalar& value, const char* tag) {
    if (value.is_zero()) throw PreconditionUnmet(tag);
    return value;
}

inline void exclude(bool excluded, const char* tag) {
    if (excluded) throw PreconditionUnmet(tag);
}

inline Scalar pow(const Scalar& base, Index exponent) { return int_pow(base, exponent); }

/// (-1)^e as a scalar.
inline Scalar sign_pow(Index exponent) { return (exponent % 2 == 0) ? Scalar(1) : Scalar(-1); }

inline auto w_of(Ctx& c) {
    return [&c](Index i) -> const Scalar& { return c.w(i); };
}
inline auto u_of(Ctx& c) {
    return [&c](Index i) -> const Scalar& { return c.u(i); };
}
inline auto classic_of(Ctx& c, Classic which) {
    return [&c, which](Index i) -> const Scalar& { return c.classic(which, i); };
}

/// (a u_n - b u_{n-1}) / (a u_n + (b - p a) u_{n-1}) through the context.
inline Scalar reflection(Ctx& c, Index n) {
    const auto& prm = c.params();
    const Scalar denominator = prm.a() * c.u(n) + (prm.b() - prm.p() * prm.a()) * c.u(n - 1);
    nonzero(denominator, "a*u_n+(b-p*a)*u_{n-1}!=0");
    return (prm.a() * c.u(n) - prm.b() * c.u(n - 1)) / denominator;
}

AppliesFn only(PresetKind kind);
/// p = 1, q = -1 (Horadam's G(a, b)).
AppliesFn g_family();
AppliesFn q_is(Scalar q);

Specialization same_indices(std::string general_id);

void add_kernel(std::vector<IdentityDef>& out);
void add_lemmas(std::vector<IdentityDef>& out);
void add_weighted(std::vector<IdentityDef>& out);
void add_binomial(std::vector<IdentityDef>& out);

}  // namespace horadam::catalog
