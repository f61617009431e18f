// Binomial weighted sums. Both theorems read the binomial lemma on a
// single-sequence relation: the addition formula (x = u_r, y = -q u_{r-1},
// alpha = r, beta = r+1) and the reflection formula (x = 1/v_r, y = q^r/v_r,
// alpha = -r, beta = r).

#include <string>

#include "catalog.hpp"

namespace horadam::catalog {

namespace {

constexpr IndexSet kMRK = kUsesM | kUsesR | kUsesK;
constexpr IndexSet kRK = kUsesR | kUsesK;

constexpr SumWeighting kBinomial = SumWeighting::Binomial;

SidePair lemma5(const LemmaConfig& cfg, Lemma5Variant variant, Index m, Index k, const Scalar& scale = Scalar(1)) {
    return {scale * lemma5_sum(cfg, variant, m, k), scale * lemma5_closed(cfg, variant, m, k)};
}

LemmaConfig addition_config(Ctx& c, Index r) {
    return make_lemma_config(c.u(r), -c.params().q() * c.u(r - 1), r, r + 1, c.w_sequence(), c.w_sequence());
}

LemmaConfig reflection_config(Ctx& c, Index r) {
    const Scalar& v = nonzero(c.v(r), "v_r!=0");
    return make_lemma_config(v.reciprocal(), pow(c.params().q(), r) / v, -r, r, c.w_sequence(), c.w_sequence());
}

// ---------------------------------------------------------------------------

void guard_first(Ctx& c, const Ix& ix) {
    exclude(ix.r == 0, "r!=0");
    nonzero(c.u(ix.r - 1), "u_{r-1}!=0");
}
void guard_second(Ctx& c, const Ix& ix) {
    exclude(ix.r == 1, "r!=1");
    nonzero(c.u(ix.r - 2), "u_{r-2}!=0");
}
void guard_third(Ctx& c, const Ix& ix) {
    exclude(ix.r == -1, "r!=-1");
    nonzero(c.u(ix.r), "u_r!=0");
}

Scalar first_scale(Ctx& c, Index r, Index k) { return pow(-c.params().q() * c.u(r - 1), k); }
Scalar first_ratio(Ctx& c, Index r) { return -c.u(r) / (c.params().q() * c.u(r - 1)); }
Scalar second_weight(Ctx& c, Index r) { return c.params().q() * c.u(r - 2); }

SidePair first_via(Ctx& c, Index r, Index m, Index k) {
    return lemma5(addition_config(c, r), Lemma5Variant::XOverY, m, k, first_scale(c, r, k));
}
SidePair second_via(Ctx& c, Index r, Index m, Index k) {
    return lemma5(addition_config(c, r - 1), Lemma5Variant::NegY, m, k);
}
SidePair third_via(Ctx& c, Index r, Index m, Index k) {
    return lemma5(addition_config(c, r), Lemma5Variant::NegX, m, k);
}

void add_addition_binomial(std::vector<IdentityDef>& out) {
    out.push_back({
        .id = "thm-binomial-f9x35z3",
        .anchor = "eq.f9x35z3",
        .statement = "(-q u_{r-1})^k sum_{j=0}^k C(k,j) (-u_r/(q u_{r-1}))^j w_{m-k(r+1)+j} = w_m, r != 0",
        .indices = kMRK,
        .preconditions = "r != 0, u_{r-1} != 0",
        .family = Family::Theorem,
        .guard = guard_first,
        .lhs =
            [](Ctx& c, const Ix& ix) {
                return first_scale(c, ix.r, ix.k) *
                       weighted_sum(ix.k, first_ratio(c, ix.r), ix.m - ix.k * (ix.r + 1), 1, w_of(c), kBinomial);
            },
        .rhs = [](Ctx& c, const Ix& ix) { return c.w(ix.m); },
        .via_lemma = [](Ctx& c, const Ix& ix) { return first_via(c, ix.r, ix.m, ix.k); },
    });
    out.push_back({
        .id = "thm-binomial-f9x35z3-particular",
        .anchor = "eq.f9x35z3 (in particular)",
        .statement = "(-q u_{r-1})^k sum_{j=0}^k C(k,j) (-u_r/(q u_{r-1}))^j w_j = w_{k(r+1)}",
        .indices = kRK,
        .preconditions = "r != 0, u_{r-1} != 0",
        .family = Family::Particular,
        .guard = guard_first,
        .lhs =
            [](Ctx& c, const Ix& ix) {
                return first_scale(c, ix.r, ix.k) * weighted_sum(ix.k, first_ratio(c, ix.r), 0, 1, w_of(c), kBinomial);
            },
        .rhs = [](Ctx& c, const Ix& ix) { return c.w(ix.k * (ix.r + 1)); },
        .via_lemma = [](Ctx& c, const Ix& ix) { return first_via(c, ix.r, ix.k * (ix.r + 1), ix.k); },
    });
    out.push_back({
        .id = "thm-binomial-f9x35z3-vajda",
        .anchor = "eq.f9x35z3 at r=1, q=-1 (Vajda's identity)",
        .statement = "sum_{j=0}^k C(k,j) p^j w_{m-2k+j} = w_m, q = -1",
        .indices = kUsesM | kUsesK,
        .family = Family::Display,
        .applies = q_is(Scalar(-1)),
        .applies_to = "q=-1",
        .lhs =
            [](Ctx& c, const Ix& ix) {
                return weighted_sum(ix.k, c.params().p(), ix.m - 2 * ix.k, 1, w_of(c), kBinomial);
            },
        .rhs = [](Ctx& c, const Ix& ix) { return c.w(ix.m); },
        .general = Specialization{"thm-binomial-f9x35z3",
                                  [](const Ix& ix) { return Ix{.m = ix.m, .n = 0, .r = 1, .k = ix.k}; }},
    });
    out.push_back({
        .id = "intro-horadam",
        .anchor = "Horadam's binomial identity (generalized by eq.f9x35z3)",
        .statement = "(-q)^k sum_{j=0}^k C(k,j) (-p/q)^j w_j = w_{2k}",
        .indices = kUsesK,
        .family = Family::Display,
        .lhs =
            [](Ctx& c, const Ix& ix) {
                const Scalar& q = c.params().q();
                return pow(-q, ix.k) * weighted_sum(ix.k, -c.params().p() / q, 0, 1, w_of(c), kBinomial);
            },
        .rhs = [](Ctx& c, const Ix& ix) { return c.w(2 * ix.k); },
        .general = Specialization{"thm-binomial-f9x35z3",
                                  [](const Ix& ix) { return Ix{.m = 2 * ix.k, .n = 0, .r = 1, .k = ix.k}; }},
    });

    out.push_back({
        .id = "thm-binomial-r5w2cg1",
        .anchor = "eq.r5w2cg1",
        .statement = "sum_{j=0}^k C(k,j) w_{m-k+rj}/(q u_{r-2})^j = (u_{r-1}/(q u_{r-2}))^k w_m, r != 1",
        .indices = kMRK,
        .preconditions = "r != 1, u_{r-2} != 0",
        .family = Family::Theorem,
        .guard = guard_second,
        .lhs =
            [](Ctx& c, const Ix& ix) {
                return weighted_sum(ix.k, second_weight(c, ix.r).reciprocal(), ix.m - ix.k, ix.r, w_of(c), kBinomial);
            },
        .rhs =
            [](Ctx& c, const Ix& ix) { return pow(c.u(ix.r - 1) / second_weight(c, ix.r), ix.k) * c.w(ix.m); },
        .via_lemma = [](Ctx& c, const Ix& ix) { return second_via(c, ix.r, ix.m, ix.k); },
    });
    out.push_back({
        .id = "eq-wbtbfxw",
        .anchor = "eq.wbtbfxw",
        .statement = "sum_{j=0}^k C(k,j) w_{rj}/(q u_{r-2})^j = (u_{r-1}/(q u_{r-2}))^k w_k",
        .indices = kRK,
        .preconditions = "r != 1, u_{r-2} != 0",
        .family = Family::Particular,
        .guard = guard_second,
        .lhs =
            [](Ctx& c, const Ix& ix) {
                return weighted_sum(ix.k, second_weight(c, ix.r).reciprocal(), 0, ix.r, w_of(c), kBinomial);
            },
        .rhs =
            [](Ctx& c, const Ix& ix) { return pow(c.u(ix.r - 1) / second_weight(c, ix.r), ix.k) * c.w(ix.k); },
        .via_lemma = [](Ctx& c, const Ix& ix) { return second_via(c, ix.r, ix.k, ix.k); },
    });

    // Displays of eq.wbtbfxw. The weight is sign/S_{r-1} per step.
    struct Display {
        const char* name;
        const char* statement;
        AppliesFn applies;
        const char* applies_to;
        Rational sign;  // -1 or -1/2
        Classic u_like; // S with S_{r-1} = u_{r-2} up to the sign
        bool sequence_is_w;
    };
    const Display displays[] = {
        {"g", "sum_{j=0}^k (-1)^j C(k,j) G_{rj}/F_{r-1}^j = (-1)^k (F_r/F_{r-1})^k G_k", g_family(), "g(a,b)",
         Rational(-1), Classic::Fibonacci, true},
        {"pell", "sum_{j=0}^k (-1)^j C(k,j) P_{rj}/P_{r-1}^j = (-1)^k (P_r/P_{r-1})^k P_k", only(PresetKind::Pell),
         "pell", Rational(-1), Classic::Pell, false},
        {"jacobsthal",
         "sum_{j=0}^k ((-1)^j/2^j) C(k,j) J_{rj}/J_{r-1}^j = ((-1)^k/2^k) (J_r/J_{r-1})^k J_k",
         only(PresetKind::Jacobsthal), "jacobsthal", Rational(-1, 2), Classic::Jacobsthal, false},
    };
    for (const Display& d : displays) {
        const std::string tag = d.u_like == Classic::Fibonacci ? "F_{r-1}!=0"
                                : d.u_like == Classic::Pell    ? "P_{r-1}!=0"
                                                               : "J_{r-1}!=0";
        auto seq = [d](Ctx& c, Index i) -> const Scalar& {
            return d.sequence_is_w ? c.w(i) : c.classic(d.u_like, i);
        };
        out.push_back({
            .id = "eq-wbtbfxw-" + std::string(d.name),
            .anchor = "eq.wbtbfxw (" + std::string(d.name) + " version)",
            .statement = d.statement,
            .indices = kRK,
            .preconditions = tag,
            .family = Family::Display,
            .applies = d.applies,
            .applies_to = d.applies_to,
            .guard = [d, tag](Ctx& c, const Ix& ix) { nonzero(c.classic(d.u_like, ix.r - 1), tag.c_str()); },
            .lhs =
                [d, seq](Ctx& c, const Ix& ix) {
                    const Scalar step = Scalar(d.sign) / c.classic(d.u_like, ix.r - 1);
                    return weighted_sum(ix.k, step, 0, ix.r, [&](Index i) -> const Scalar& { return seq(c, i); },
                                        kBinomial);
                },
            .rhs =
                [d, seq](Ctx& c, const Ix& ix) {
                    const Scalar ratio = c.classic(d.u_like, ix.r) / c.classic(d.u_like, ix.r - 1);
                    return pow(Scalar(d.sign), ix.k) * pow(ratio, ix.k) * seq(c, ix.k);
                },
            .general = same_indices("eq-wbtbfxw"),
        });
    }

    out.push_back({
        .id = "thm-binomial-fxtzfk3",
        .anchor = "eq.fxtzfk3",
        .statement = "sum_{j=0}^k (-1)^j C(k,j) w_{m+k+rj}/u_r^j = (q u_{r-1}/u_r)^k w_m, r != -1",
        .indices = kMRK,
        .preconditions = "r != -1, u_r != 0",
        .family = Family::Theorem,
        .guard = guard_third,
        .lhs =
            [](Ctx& c, const Ix& ix) {
                return weighted_sum(ix.k, -c.u(ix.r).reciprocal(), ix.m + ix.k, ix.r, w_of(c), kBinomial);
            },
        .rhs =
            [](Ctx& c, const Ix& ix) {
                return pow(c.params().q() * c.u(ix.r - 1) / c.u(ix.r), ix.k) * c.w(ix.m);
            },
        .via_lemma = [](Ctx& c, const Ix& ix) { return third_via(c, ix.r, ix.m, ix.k); },
    });
    out.push_back({
        .id = "thm-binomial-fxtzfk3-particular",
        .anchor = "eq.fxtzfk3 (in particular)",
        .statement = "sum_{j=0}^k (-1)^j C(k,j) w_{rj}/u_r^j = "
                     "(u_{r-1}/u_r)^k (a u_k - b u_{k-1})/(a u_k + (b - pa) u_{k-1}) w_k",
        .indices = kRK,
        .preconditions = "r != -1, u_r != 0, a u_k + (b - pa) u_{k-1} != 0",
        .family = Family::Particular,
        .guard =
            [](Ctx& c, const Ix& ix) {
                guard_third(c, ix);
                (void)reflection(c, ix.k);
            },
        .lhs =
            [](Ctx& c, const Ix& ix) {
                return weighted_sum(ix.k, -c.u(ix.r).reciprocal(), 0, ix.r, w_of(c), kBinomial);
            },
        .rhs =
            [](Ctx& c, const Ix& ix) {
                return pow(c.u(ix.r - 1) / c.u(ix.r), ix.k) * reflection(c, ix.k) * c.w(ix.k);
            },
        .via_lemma = [](Ctx& c, const Ix& ix) { return third_via(c, ix.r, -ix.k, ix.k); },
    });
    out.push_back({
        .id = "intro-stanica-g",
        .anchor = "eq.fxtzfk3 (G version, generalizing Stanica's identity)",
        .statement = "sum_{j=0}^k (-1)^j C(k,j) G_{rj}/F_{r+1}^j = "
                     "(F_r/F_{r+1})^k (G_0 F_{k+1} - G_1 F_k)/(G_0 F_{k-1} + G_1 F_k) G_k",
        .indices = kRK,
        .preconditions = "F_{r+1} != 0, G_0 F_{k-1} + G_1 F_k != 0",
        .family = Family::Display,
        .applies = g_family(),
        .applies_to = "g(a,b)",
        .guard =
            [](Ctx& c, const Ix& ix) {
                exclude(ix.r == -1, "r!=-1");
                nonzero(c.classic(Classic::Fibonacci, ix.r + 1), "F_{r+1}!=0");
                nonzero(c.params().a() * c.classic(Classic::Fibonacci, ix.k - 1) +
                            c.params().b() * c.classic(Classic::Fibonacci, ix.k),
                        "G_0F_{k-1}+G_1F_k!=0");
            },
        .lhs =
            [](Ctx& c, const Ix& ix) {
                return weighted_sum(ix.k, -c.classic(Classic::Fibonacci, ix.r + 1).reciprocal(), 0, ix.r, w_of(c),
                                    kBinomial);
            },
        .rhs =
            [](Ctx& c, const Ix& ix) {
                auto F = [&c](Index i) -> const Scalar& { return c.classic(Classic::Fibonacci, i); };
                const Scalar& g0 = c.params().a();
                const Scalar& g1 = c.params().b();
                return pow(F(ix.r) / F(ix.r + 1), ix.k) * (g0 * F(ix.k + 1) - g1 * F(ix.k)) /
                       (g0 * F(ix.k - 1) + g1 * F(ix.k)) * c.w(ix.k);
            },
        .general = same_indices("thm-binomial-fxtzfk3-particular"),
    });
    out.push_back({
        .id = "intro-stanica",
        .anchor = "Stanica's identity (first identity of Cor. 15)",
        .statement = "sum_{j=0}^k (-1)^j C(k,j) F_j = -F_k",
        .indices = kUsesK,
        .family = Family::Display,
        .applies = only(PresetKind::Fibonacci),
        .applies_to = "fibonacci",
        .lhs = [](Ctx& c, const Ix& ix) { return weighted_sum(ix.k, Scalar(-1), 0, 1, w_of(c), kBinomial); },
        .rhs = [](Ctx& c, const Ix& ix) { return -c.w(ix.k); },
        .general = Specialization{"thm-binomial-fxtzfk3-particular",
                                  [](const Ix& ix) { return Ix{.m = 0, .n = 0, .r = 1, .k = ix.k}; }},
    });
}

// ---------------------------------------------------------------------------

Scalar reflection_sum(Ctx& c, Index r, Index start, Index k) {
    return weighted_sum(k, -c.v(r).reciprocal(), start, r, w_of(c), kBinomial);
}

/// Value of the corrected d00yx5i right side; the printed form carries an
/// extra (-1)^k.
Scalar d00yx5i_rhs(Ctx& c, const Ix& ix) {
    return pow(c.params().q(), ix.r * ix.k) * c.w(ix.m) / pow(c.v(ix.r), ix.k);
}
Scalar xf5dcmx_rhs(Ctx& c, const Ix& ix) {
    return reflection(c, ix.k * ix.r) * c.w(ix.k * ix.r) / pow(c.v(ix.r), ix.k);
}
Scalar xf5dcmx_g_rhs(Ctx& c, const Ix& ix) {
    auto F = [&c](Index i) -> const Scalar& { return c.classic(Classic::Fibonacci, i); };
    const Scalar& g0 = c.params().a();
    const Scalar& g1 = c.params().b();
    const Index kr = ix.k * ix.r;
    return (F(kr + 1) * g0 - F(kr) * g1) / (F(kr + 1) * g0 + F(kr) * (g1 - g0)) * c.w(kr) / pow(c.v(ix.r), ix.k);
}

void guard_xf5dcmx(Ctx& c, const Ix& ix) {
    nonzero(c.v(ix.r), "v_r!=0");
    (void)reflection(c, ix.k * ix.r);
}
void guard_xf5dcmx_g(Ctx& c, const Ix& ix) {
    nonzero(c.v(ix.r), "L_r!=0");
    const Index kr = ix.k * ix.r;
    const Scalar& g0 = c.params().a();
    nonzero(c.classic(Classic::Fibonacci, kr + 1) * g0 + c.classic(Classic::Fibonacci, kr) * (c.params().b() - g0),
            "F_{kr+1}G_0+F_{kr}(G_1-G_0)!=0");
}

// d00yx5i reverses the j order of the NegX form: scale by (-v_r)^{-k}.
SidePair d00yx5i_via(Ctx& c, Index r, Index m, Index k) {
    auto cfg = reflection_config(c, r);
    return lemma5(cfg, Lemma5Variant::NegX, m, k, pow(-c.v(r), -k));
}

void add_reflection_binomial(std::vector<IdentityDef>& out) {
    auto e6_via = [](Ctx& c, Index r, Index m, Index k) {
        return lemma5(reflection_config(c, r), Lemma5Variant::XOverY, m, k);
    };
    auto k1_via = [](Ctx& c, Index r, Index m, Index k) {
        return lemma5(reflection_config(c, r), Lemma5Variant::NegY, m, k);
    };

    out.push_back({
        .id = "thm-binomial-e6qnu1m",
        .anchor = "eq.e6qnu1m",
        .statement = "sum_{j=0}^k C(k,j) w_{m-kr+2rj}/q^{rj} = (v_r/q^r)^k w_m",
        .indices = kMRK,
        .family = Family::Theorem,
        .lhs =
            [](Ctx& c, const Ix& ix) {
                return weighted_sum(ix.k, pow(c.params().q(), -ix.r), ix.m - ix.k * ix.r, 2 * ix.r, w_of(c), kBinomial);
            },
        .rhs = [](Ctx& c, const Ix& ix) { return pow(c.v(ix.r) / pow(c.params().q(), ix.r), ix.k) * c.w(ix.m); },
        .via_lemma = [e6_via](Ctx& c, const Ix& ix) { return e6_via(c, ix.r, ix.m, ix.k); },
    });
    out.push_back({
        .id = "thm-binomial-e6qnu1m-particular",
        .anchor = "eq.e6qnu1m (in particular)",
        .statement = "sum_{j=0}^k C(k,j) w_{2rj}/q^{rj} = (v_r/q^r)^k w_{rk}",
        .indices = kRK,
        .family = Family::Particular,
        .lhs =
            [](Ctx& c, const Ix& ix) {
                return weighted_sum(ix.k, pow(c.params().q(), -ix.r), 0, 2 * ix.r, w_of(c), kBinomial);
            },
        .rhs =
            [](Ctx& c, const Ix& ix) { return pow(c.v(ix.r) / pow(c.params().q(), ix.r), ix.k) * c.w(ix.r * ix.k); },
        .via_lemma = [e6_via](Ctx& c, const Ix& ix) { return e6_via(c, ix.r, ix.r * ix.k, ix.k); },
    });
    out.push_back({
        .id = "thm-binomial-e6qnu1m-g",
        .anchor = "eq.e6qnu1m at p=1=-q",
        .statement = "sum_{j=0}^k (-1)^{rj} C(k,j) G_{m-kr+2rj} = (-1)^{rk} L_r^k G_m",
        .indices = kMRK,
        .family = Family::Display,
        .applies = g_family(),
        .applies_to = "g(a,b)",
        .lhs =
            [](Ctx& c, const Ix& ix) {
                return weighted_sum(ix.k, sign_pow(ix.r), ix.m - ix.k * ix.r, 2 * ix.r, w_of(c), kBinomial);
            },
        .rhs =
            [](Ctx& c, const Ix& ix) {
                return sign_pow(ix.r * ix.k) * pow(c.classic(Classic::Lucas, ix.r), ix.k) * c.w(ix.m);
            },
        .general = same_indices("thm-binomial-e6qnu1m"),
    });

    out.push_back({
        .id = "thm-binomial-k130vx8",
        .anchor = "eq.k130vx8",
        .statement = "sum_{j=0}^k C(k,j) (-v_r/q^r)^j w_{m-2kr+rj} = w_m/(-q^r)^k",
        .indices = kMRK,
        .family = Family::Theorem,
        .lhs =
            [](Ctx& c, const Ix& ix) {
                return weighted_sum(ix.k, -c.v(ix.r) / pow(c.params().q(), ix.r), ix.m - 2 * ix.k * ix.r, ix.r,
                                    w_of(c), kBinomial);
            },
        .rhs = [](Ctx& c, const Ix& ix) { return c.w(ix.m) / pow(-pow(c.params().q(), ix.r), ix.k); },
        .via_lemma = [k1_via](Ctx& c, const Ix& ix) { return k1_via(c, ix.r, ix.m, ix.k); },
    });
    out.push_back({
        .id = "thm-binomial-k130vx8-particular",
        .anchor = "eq.k130vx8 (in particular)",
        .statement = "sum_{j=0}^k C(k,j) (-v_r/q^r)^j w_{rj} = w_{2kr}/(-q^r)^k",
        .indices = kRK,
        .family = Family::Particular,
        .lhs =
            [](Ctx& c, const Ix& ix) {
                return weighted_sum(ix.k, -c.v(ix.r) / pow(c.params().q(), ix.r), 0, ix.r, w_of(c), kBinomial);
            },
        .rhs = [](Ctx& c, const Ix& ix) { return c.w(2 * ix.k * ix.r) / pow(-pow(c.params().q(), ix.r), ix.k); },
        .via_lemma = [k1_via](Ctx& c, const Ix& ix) { return k1_via(c, ix.r, 2 * ix.k * ix.r, ix.k); },
    });

    const auto guard_v = [](Ctx& c, const Ix& ix) { nonzero(c.v(ix.r), "v_r!=0"); };
    const char* corrected = "printed form has an extra (-1)^k that contradicts k=1 against v_r w_{m+r} = "
                            "w_{m+2r} + q^r w_m; the printed form is kept quarantined";

    out.push_back({
        .id = "thm-binomial-d00yx5i",
        .anchor = "eq.d00yx5i, sign as validated",
        .statement = "sum_{j=0}^k (-1)^j C(k,j) w_{m+kr+rj}/v_r^j = q^{rk} w_m/v_r^k",
        .indices = kMRK,
        .preconditions = "v_r != 0",
        .family = Family::Theorem,
        .guard = guard_v,
        .lhs = [](Ctx& c, const Ix& ix) { return reflection_sum(c, ix.r, ix.m + ix.k * ix.r, ix.k); },
        .rhs = d00yx5i_rhs,
        .via_lemma = [](Ctx& c, const Ix& ix) { return d00yx5i_via(c, ix.r, ix.m, ix.k); },
        .note = corrected,
    });
    out.push_back({
        .id = "thm-binomial-d00yx5i-as-printed",
        .anchor = "eq.d00yx5i as printed",
        .statement = "sum_{j=0}^k (-1)^j C(k,j) w_{m+kr+rj}/v_r^j = (-1)^k q^{rk} w_m/v_r^k",
        .indices = kMRK,
        .preconditions = "v_r != 0",
        .family = Family::Theorem,
        .guard = guard_v,
        .lhs = [](Ctx& c, const Ix& ix) { return reflection_sum(c, ix.r, ix.m + ix.k * ix.r, ix.k); },
        .rhs = [](Ctx& c, const Ix& ix) { return sign_pow(ix.k) * d00yx5i_rhs(c, ix); },
        .quarantined = true,
        .note = "holds only for even k or vanishing w_m",
    });

    out.push_back({
        .id = "eq-xf5dcmx",
        .anchor = "eq.xf5dcmx, sign as validated",
        .statement = "sum_{j=0}^k (-1)^j C(k,j) w_{rj}/v_r^j = "
                     "((a u_{kr} - b u_{kr-1})/(a u_{kr} + (b - pa) u_{kr-1})) w_{kr}/v_r^k",
        .indices = kRK,
        .preconditions = "v_r != 0, a u_{kr} + (b - pa) u_{kr-1} != 0",
        .family = Family::Particular,
        .guard = guard_xf5dcmx,
        .lhs = [](Ctx& c, const Ix& ix) { return reflection_sum(c, ix.r, 0, ix.k); },
        .rhs = xf5dcmx_rhs,
        .via_lemma = [](Ctx& c, const Ix& ix) { return d00yx5i_via(c, ix.r, -ix.k * ix.r, ix.k); },
        .note = corrected,
    });
    out.push_back({
        .id = "eq-xf5dcmx-as-printed",
        .anchor = "eq.xf5dcmx as printed",
        .statement = "sum_{j=0}^k (-1)^j C(k,j) w_{rj}/v_r^j = "
                     "(-1)^k ((a u_{kr} - b u_{kr-1})/(a u_{kr} + (b - pa) u_{kr-1})) w_{kr}/v_r^k",
        .indices = kRK,
        .preconditions = "v_r != 0, a u_{kr} + (b - pa) u_{kr-1} != 0",
        .family = Family::Particular,
        .guard = guard_xf5dcmx,
        .lhs = [](Ctx& c, const Ix& ix) { return reflection_sum(c, ix.r, 0, ix.k); },
        .rhs = [](Ctx& c, const Ix& ix) { return sign_pow(ix.k) * xf5dcmx_rhs(c, ix); },
        .quarantined = true,
        .note = "holds only for even k or vanishing sum",
    });

    out.push_back({
        .id = "eq-xf5dcmx-g",
        .anchor = "eq.xf5dcmx at p=1=-q, sign as validated",
        .statement = "sum_{j=0}^k (-1)^j C(k,j) G_{rj}/L_r^j = "
                     "(F_{kr+1} G_0 - F_{kr} G_1)/(F_{kr+1} G_0 + F_{kr} (G_1 - G_0)) G_{kr}/L_r^k",
        .indices = kRK,
        .preconditions = "L_r != 0, F_{kr+1} G_0 + F_{kr} (G_1 - G_0) != 0",
        .family = Family::Display,
        .applies = g_family(),
        .applies_to = "g(a,b)",
        .guard = guard_xf5dcmx_g,
        .lhs = [](Ctx& c, const Ix& ix) { return reflection_sum(c, ix.r, 0, ix.k); },
        .rhs = xf5dcmx_g_rhs,
        .general = same_indices("eq-xf5dcmx"),
        .note = corrected,
    });
    out.push_back({
        .id = "eq-xf5dcmx-g-as-printed",
        .anchor = "eq.xf5dcmx at p=1=-q as printed",
        .statement = "sum_{j=0}^k (-1)^j C(k,j) G_{rj}/L_r^j = "
                     "(-1)^k (F_{kr+1} G_0 - F_{kr} G_1)/(F_{kr+1} G_0 + F_{kr} (G_1 - G_0)) G_{kr}/L_r^k",
        .indices = kRK,
        .preconditions = "L_r != 0, F_{kr+1} G_0 + F_{kr} (G_1 - G_0) != 0",
        .family = Family::Display,
        .applies = g_family(),
        .applies_to = "g(a,b)",
        .guard = guard_xf5dcmx_g,
        .lhs = [](Ctx& c, const Ix& ix) { return reflection_sum(c, ix.r, 0, ix.k); },
        .rhs = [](Ctx& c, const Ix& ix) { return sign_pow(ix.k) * xf5dcmx_g_rhs(c, ix); },
        .quarantined = true,
        .note = "holds only for even k or vanishing sum",
    });
}

}  // namespace

void add_binomial(std::vector<IdentityDef>& out) {
    add_addition_binomial(out);
    add_reflection_binomial(out);
}

}  // namespace horadam::catalog
