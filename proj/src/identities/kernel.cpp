// Base relations between w, u and v, and the negative-subscript formulas.

#include "catalog.hpp"

namespace horadam::catalog {

void add_kernel(std::vector<IdentityDef>& out) {
    out.push_back({
        .id = "kernel-eq-10",
        .anchor = "eq.fuxige6",
        .statement = "w_{m+r} = u_r w_m - q u_{r-1} w_{m-1}",
        .indices = kUsesM | kUsesR,
        .family = Family::Kernel,
        .lhs = [](Ctx& c, const Ix& ix) { return c.w(ix.m + ix.r); },
        .rhs =
            [](Ctx& c, const Ix& ix) {
                return c.u(ix.r) * c.w(ix.m) - c.params().q() * c.u(ix.r - 1) * c.w(ix.m - 1);
            },
    });

    out.push_back({
        .id = "kernel-eq-11",
        .anchor = "eq.w7u7hr6",
        .statement = "v_r w_m = w_{m+r} + q^r w_{m-r}",
        .indices = kUsesM | kUsesR,
        .family = Family::Kernel,
        .lhs = [](Ctx& c, const Ix& ix) { return c.v(ix.r) * c.w(ix.m); },
        .rhs = [](Ctx& c, const Ix& ix) { return c.w(ix.m + ix.r) + pow(c.params().q(), ix.r) * c.w(ix.m - ix.r); },
    });

    out.push_back({
        .id = "kernel-eq-12",
        .anchor = "eq.vx6b1t4 (where e=pab-qa^2-b^2)",
        .statement = "w_{n-r} w_{m+n+r} = w_n w_{m+n} + q^{n-r} e u_{r-1} u_{m+r-1}, e=pab-qa^2-b^2",
        .indices = kUsesM | kUsesN | kUsesR,
        .family = Family::Kernel,
        .lhs = [](Ctx& c, const Ix& ix) { return c.w(ix.n - ix.r) * c.w(ix.m + ix.n + ix.r); },
        .rhs =
            [](Ctx& c, const Ix& ix) {
                return c.w(ix.n) * c.w(ix.m + ix.n) +
                       pow(c.params().q(), ix.n - ix.r) * c.e() * c.u(ix.r - 1) * c.u(ix.m + ix.r - 1);
            },
    });

    out.push_back({
        .id = "neg-index-eq-7",
        .anchor = "u negative-index formula",
        .statement = "u_{-n} = -q^{-n+1} u_{n-2}",
        .indices = kUsesN,
        .family = Family::NegativeIndex,
        .lhs = [](Ctx& c, const Ix& ix) { return c.u(-ix.n); },
        .rhs = [](Ctx& c, const Ix& ix) { return -pow(c.params().q(), 1 - ix.n) * c.u(ix.n - 2); },
    });

    out.push_back({
        .id = "neg-index-eq-8",
        .anchor = "v negative-index formula, exponent validated by the backward recurrence",
        .statement = "v_{-n} = q^{-n} v_n",
        .indices = kUsesN,
        .family = Family::NegativeIndex,
        .lhs = [](Ctx& c, const Ix& ix) { return c.v(-ix.n); },
        .rhs = [](Ctx& c, const Ix& ix) { return pow(c.params().q(), -ix.n) * c.v(ix.n); },
        .note = "printed exponent +n is kept as neg-index-eq-8-as-printed",
    });

    out.push_back({
        .id = "neg-index-eq-8-as-printed",
        .anchor = "v negative-index formula as printed",
        .statement = "v_{-n} = q^n v_n",
        .indices = kUsesN,
        .family = Family::NegativeIndex,
        .lhs = [](Ctx& c, const Ix& ix) { return c.v(-ix.n); },
        .rhs = [](Ctx& c, const Ix& ix) { return pow(c.params().q(), ix.n) * c.v(ix.n); },
        .quarantined = true,
        .note = "holds only when q^{2n} = 1",
    });

    out.push_back({
        .id = "neg-index-eq-9",
        .anchor = "w negative-index formula, with the q^{-n} factor the backward recurrence requires",
        .statement = "w_{-n} = q^{-n} (a u_n - b u_{n-1}) / (a u_n + (b - pa) u_{n-1}) w_n",
        .indices = kUsesN,
        .preconditions = "a u_n + (b - pa) u_{n-1} != 0",
        .family = Family::NegativeIndex,
        .guard = [](Ctx& c, const Ix& ix) { (void)reflection(c, ix.n); },
        .lhs = [](Ctx& c, const Ix& ix) { return c.w(-ix.n); },
        .rhs =
            [](Ctx& c, const Ix& ix) { return pow(c.params().q(), -ix.n) * reflection(c, ix.n) * c.w(ix.n); },
        .note = "printed form omits q^{-n}; kept as neg-index-eq-9-as-printed",
    });

    out.push_back({
        .id = "neg-index-eq-9-as-printed",
        .anchor = "w negative-index formula as printed",
        .statement = "w_{-n} = (a u_n - b u_{n-1}) / (a u_n + (b - pa) u_{n-1}) w_n",
        .indices = kUsesN,
        .preconditions = "a u_n + (b - pa) u_{n-1} != 0",
        .family = Family::NegativeIndex,
        .guard = [](Ctx& c, const Ix& ix) { (void)reflection(c, ix.n); },
        .lhs = [](Ctx& c, const Ix& ix) { return c.w(-ix.n); },
        .rhs = [](Ctx& c, const Ix& ix) { return reflection(c, ix.n) * c.w(ix.n); },
        .quarantined = true,
        .note = "off by the factor q^{-n}",
    });
}

}  // namespace horadam::catalog
