// Non-binomial weighted sums: the two-sequence theorems built on the
// telescoping lemma and the single-sequence theorems built on its four
// variants, with their preset displays.

#include <string>

#include "catalog.hpp"

namespace horadam::catalog {

namespace {

SidePair scaled(const Scalar& scale, const Scalar& lhs, const Scalar& rhs) { return {scale * lhs, scale * rhs}; }

// w_m = u_r w_{m-r} - q u_{r-1} w_{m-r-1}
LemmaConfig addition_config(Ctx& c, Index r) {
    return make_lemma_config(c.u(r), -c.params().q() * c.u(r - 1), r, r + 1, c.w_sequence(), c.w_sequence());
}

// w_m = (1/v_r) w_{m+r} + (q^r/v_r) w_{m-r}
LemmaConfig reflection_config(Ctx& c, Index r) {
    const Scalar& v = nonzero(c.v(r), "v_r!=0");
    return make_lemma_config(v.reciprocal(), pow(c.params().q(), r) / v, -r, r, c.w_sequence(), c.w_sequence());
}

// ---------------------------------------------------------------------------
// sum (w_r/(q w_{r-1}))^j w_{m+r-k+j}

Scalar shift_ratio(Ctx& c, Index r) { return c.w(r) / (c.params().q() * c.w(r - 1)); }

// u_m = (q w_{r-1}/w_r) u_{m-1} + (1/w_r) w_{m+r}
SidePair shift_via_lemma(Ctx& c, Index r, Index m, Index k) {
    const Scalar& wr = nonzero(c.w(r), "w_r!=0");
    auto cfg = make_lemma_config(c.params().q() * c.w(r - 1) / wr, wr.reciprocal(), 1, -r, c.u_sequence(),
                                 c.w_sequence());
    return scaled(wr, lemma1_sum(cfg, m, k), lemma1_closed(cfg, m, k));
}

struct ShiftDisplay {
    const char* name;
    PresetKind preset;
    Classic seq;    // the sequence being summed
    Classic cofac;  // u-analogue appearing on the right
    const char* letters;
};

void add_shift_theorem(std::vector<IdentityDef>& out) {
    out.push_back({
        .id = "thm-xvb2v42",
        .anchor = "thm.xvb2v42",
        .statement = "sum_{j=0}^k (w_r/(q w_{r-1}))^j w_{m+r-k+j} = (w_r/(q w_{r-1}))^k u_m w_r - q u_{m-k-1} w_{r-1}",
        .indices = kUsesM | kUsesR | kUsesK,
        .preconditions = "w_{r-1} != 0",
        .family = Family::Theorem,
        .guard = [](Ctx& c, const Ix& ix) { nonzero(c.w(ix.r - 1), "w_{r-1}!=0"); },
        .lhs = [](Ctx& c, const Ix& ix) { return weighted_sum(ix.k, shift_ratio(c, ix.r), ix.m + ix.r - ix.k, 1, w_of(c)); },
        .rhs =
            [](Ctx& c, const Ix& ix) {
                return pow(shift_ratio(c, ix.r), ix.k) * c.u(ix.m) * c.w(ix.r) -
                       c.params().q() * c.u(ix.m - ix.k - 1) * c.w(ix.r - 1);
            },
        .via_lemma = [](Ctx& c, const Ix& ix) { return shift_via_lemma(c, ix.r, ix.m, ix.k); },
    });

    out.push_back({
        .id = "thm-xvb2v42-particular",
        .anchor = "thm.xvb2v42 (in particular)",
        .statement = "q^{r-1} sum_{j=0}^k (w_r/(q w_{r-1}))^j w_j = (w_r/(q w_{r-1}))^k q^{r-1} u_{k-r} w_r + u_{r-1} w_{r-1}",
        .indices = kUsesR | kUsesK,
        .preconditions = "w_{r-1} != 0",
        .family = Family::Particular,
        .guard = [](Ctx& c, const Ix& ix) { nonzero(c.w(ix.r - 1), "w_{r-1}!=0"); },
        .lhs =
            [](Ctx& c, const Ix& ix) {
                return pow(c.params().q(), ix.r - 1) * weighted_sum(ix.k, shift_ratio(c, ix.r), 0, 1, w_of(c));
            },
        .rhs =
            [](Ctx& c, const Ix& ix) {
                return pow(shift_ratio(c, ix.r), ix.k) * pow(c.params().q(), ix.r - 1) * c.u(ix.k - ix.r) * c.w(ix.r) +
                       c.u(ix.r - 1) * c.w(ix.r - 1);
            },
        .via_lemma =
            [](Ctx& c, const Ix& ix) {
                auto sides = shift_via_lemma(c, ix.r, ix.k - ix.r, ix.k);
                return scaled(pow(c.params().q(), ix.r - 1), sides.lhs, sides.rhs);
            },
    });

    const ShiftDisplay displays[] = {
        {"fibonacci", PresetKind::Fibonacci, Classic::Fibonacci, Classic::Fibonacci, "F"},
        {"lucas", PresetKind::Lucas, Classic::Lucas, Classic::Fibonacci, "L"},
        {"pell", PresetKind::Pell, Classic::Pell, Classic::Pell, "P"},
    };
    for (const ShiftDisplay& d : displays) {
        const std::string S = d.letters;
        const std::string U = d.cofac == Classic::Pell ? "P" : "F";
        const std::string tag = S + "_{r-1}!=0";
        auto ratio = [d](Ctx& c, Index r) {
            return c.classic(d.seq, r) / nonzero(c.classic(d.seq, r - 1), "S_{r-1}!=0");
        };
        out.push_back({
            .id = "thm-xvb2v42-" + std::string(d.name),
            .anchor = "thm.xvb2v42 (" + std::string(d.name) + " version)",
            .statement = "sum_{j=0}^k (-1)^j (" + S + "_r/" + S + "_{r-1})^j " + S + "_{m+r-k+j} = (-1)^k (" + S +
                         "_r/" + S + "_{r-1})^k " + U + "_{m+1} " + S + "_r + " + U + "_{m-k} " + S + "_{r-1}",
            .indices = kUsesM | kUsesR | kUsesK,
            .preconditions = tag,
            .family = Family::Display,
            .applies = only(d.preset),
            .applies_to = d.name,
            .guard = [d, tag](Ctx& c, const Ix& ix) { nonzero(c.classic(d.seq, ix.r - 1), tag.c_str()); },
            .lhs =
                [d, ratio](Ctx& c, const Ix& ix) {
                    return weighted_sum(ix.k, -ratio(c, ix.r), ix.m + ix.r - ix.k, 1, classic_of(c, d.seq));
                },
            .rhs =
                [d, ratio](Ctx& c, const Ix& ix) {
                    return sign_pow(ix.k) * pow(ratio(c, ix.r), ix.k) * c.classic(d.cofac, ix.m + 1) *
                               c.classic(d.seq, ix.r) +
                           c.classic(d.cofac, ix.m - ix.k) * c.classic(d.seq, ix.r - 1);
                },
            .general = same_indices("thm-xvb2v42"),
        });
        out.push_back({
            .id = "thm-xvb2v42-" + std::string(d.name) + "-particular",
            .anchor = "thm.xvb2v42 (" + std::string(d.name) + " version, in particular)",
            .statement = "sum_{j=0}^k (-1)^j (" + S + "_r/" + S + "_{r-1})^j " + S + "_{r+j} = (-1)^k (" + S + "_r/" +
                         S + "_{r-1})^k " + U + "_{k+1} " + S + "_r",
            .indices = kUsesR | kUsesK,
            .preconditions = tag,
            .family = Family::Display,
            .applies = only(d.preset),
            .applies_to = d.name,
            .guard = [d, tag](Ctx& c, const Ix& ix) { nonzero(c.classic(d.seq, ix.r - 1), tag.c_str()); },
            .lhs =
                [d, ratio](Ctx& c, const Ix& ix) {
                    return weighted_sum(ix.k, -ratio(c, ix.r), ix.r, 1, classic_of(c, d.seq));
                },
            .rhs =
                [d, ratio](Ctx& c, const Ix& ix) {
                    return sign_pow(ix.k) * pow(ratio(c, ix.r), ix.k) * c.classic(d.cofac, ix.k + 1) *
                           c.classic(d.seq, ix.r);
                },
            .general = Specialization{"thm-xvb2v42",
                                      [](const Ix& ix) { return Ix{.m = ix.k, .n = 0, .r = ix.r, .k = ix.k}; }},
        });
    }
}

// ---------------------------------------------------------------------------
// q^{n-r} e u_{r-1} sum u_{...}/(w_n/w_{n-r})^j

void product_guard(Ctx& c, const Ix& ix) {
    nonzero(c.w(ix.n), "w_n!=0");
    nonzero(c.w(ix.n - ix.r), "w_{n-r}!=0");
}

Scalar product_ratio(Ctx& c, const Ix& ix) { return c.w(ix.n) / c.w(ix.n - ix.r); }

Scalar product_factor(Ctx& c, const Ix& ix) { return pow(c.params().q(), ix.n - ix.r) * c.e() * c.u(ix.r - 1); }

// w_m = (w_n/w_{n-r}) w_{m-r} + (q^{n-r} e u_{r-1}/w_{n-r}) u_{m-n-1}
SidePair product_via_lemma(Ctx& c, const Ix& ix, Index m) {
    const Scalar& base = c.w(ix.n - ix.r);
    auto cfg = make_lemma_config(product_ratio(c, ix), product_factor(c, ix) / base, ix.r, ix.n + 1, c.w_sequence(),
                                 c.u_sequence());
    return scaled(base, lemma1_sum(cfg, m, ix.k), lemma1_closed(cfg, m, ix.k));
}

void add_product_theorem(std::vector<IdentityDef>& out) {
    constexpr IndexSet kNRK = kUsesN | kUsesR | kUsesK;

    out.push_back({
        .id = "thm-ybopnqn",
        .anchor = "thm.ybopnqn",
        .statement = "q^{n-r} e u_{r-1} sum_{j=0}^k u_{m-(n+1)-kr+rj}/(w_n/w_{n-r})^j = "
                     "w_m w_{n-r}/(w_n/w_{n-r})^k - w_n w_{m-(k+1)r}",
        .indices = kUsesM | kNRK,
        .preconditions = "w_n != 0, w_{n-r} != 0",
        .family = Family::Theorem,
        .guard = product_guard,
        .lhs =
            [](Ctx& c, const Ix& ix) {
                return product_factor(c, ix) * weighted_sum(ix.k, product_ratio(c, ix).reciprocal(),
                                                            ix.m - (ix.n + 1) - ix.k * ix.r, ix.r, u_of(c));
            },
        .rhs =
            [](Ctx& c, const Ix& ix) {
                return c.w(ix.m) * c.w(ix.n - ix.r) / pow(product_ratio(c, ix), ix.k) -
                       c.w(ix.n) * c.w(ix.m - (ix.k + 1) * ix.r);
            },
        .via_lemma = [](Ctx& c, const Ix& ix) { return product_via_lemma(c, ix, ix.m); },
    });

    out.push_back({
        .id = "eq-ndpr9xm",
        .anchor = "eq.ndpr9xm",
        .statement = "q^{n-r} e u_{r-1} sum_{j=0}^k u_{rj}/(w_n/w_{n-r})^j = "
                     "w_{n+kr+1} w_{n-r}/(w_n/w_{n-r})^k - w_n w_{n-r+1}",
        .indices = kNRK,
        .preconditions = "w_n != 0, w_{n-r} != 0",
        .family = Family::Particular,
        .guard = product_guard,
        .lhs =
            [](Ctx& c, const Ix& ix) {
                return product_factor(c, ix) *
                       weighted_sum(ix.k, product_ratio(c, ix).reciprocal(), 0, ix.r, u_of(c));
            },
        .rhs =
            [](Ctx& c, const Ix& ix) {
                return c.w(ix.n + ix.k * ix.r + 1) * c.w(ix.n - ix.r) / pow(product_ratio(c, ix), ix.k) -
                       c.w(ix.n) * c.w(ix.n - ix.r + 1);
            },
        .via_lemma = [](Ctx& c, const Ix& ix) { return product_via_lemma(c, ix, ix.n + ix.k * ix.r + 1); },
    });

    // Displays read the named sequences directly. For G the summed
    // sequence is F (u for p=1, q=-1), and G itself is w.
    struct Display {
        const char* name;
        const char* statement;
        AppliesFn applies;
        const char* applies_to;
        // factor in front of the sum, the u-analogue, and the sequence itself
        std::function<Scalar(Ctx&, const Ix&)> factor;
        Classic u_like;
        std::function<const Scalar&(Ctx&, Index)> seq;
    };
    const Display displays[] = {
        {"g",
         "(-1)^{n-r} (G_0 G_1 + G_0^2 - G_1^2) F_r sum_{j=0}^k F_{rj+1}/(G_n/G_{n-r})^j = "
         "G_{n+kr+1} G_{n-r}/(G_n/G_{n-r})^k - G_n G_{n-r+1}",
         g_family(), "g(a,b)",
         [](Ctx& c, const Ix& ix) {
             const Scalar& g0 = c.params().a();
             const Scalar& g1 = c.params().b();
             return sign_pow(ix.n - ix.r) * (g0 * g1 + g0 * g0 - g1 * g1) * c.classic(Classic::Fibonacci, ix.r);
         },
         Classic::Fibonacci, [](Ctx& c, Index i) -> const Scalar& { return c.w(i); }},
        {"pell",
         "(-1)^{n-r-1} P_r sum_{j=0}^k P_{rj+1}/(P_n/P_{n-r})^j = P_{n+kr+1} P_{n-r}/(P_n/P_{n-r})^k - P_n P_{n-r+1}",
         only(PresetKind::Pell), "pell",
         [](Ctx& c, const Ix& ix) { return sign_pow(ix.n - ix.r - 1) * c.classic(Classic::Pell, ix.r); },
         Classic::Pell, [](Ctx& c, Index i) -> const Scalar& { return c.classic(Classic::Pell, i); }},
        {"jacobsthal",
         "(-1)^{n-r-1} 2^{n-r} J_r sum_{j=0}^k J_{rj+1}/(J_n/J_{n-r})^j = "
         "J_{n+kr+1} J_{n-r}/(J_n/J_{n-r})^k - J_n J_{n-r+1}",
         only(PresetKind::Jacobsthal), "jacobsthal",
         [](Ctx& c, const Ix& ix) {
             return sign_pow(ix.n - ix.r - 1) * pow(2, ix.n - ix.r) * c.classic(Classic::Jacobsthal, ix.r);
         },
         Classic::Jacobsthal, [](Ctx& c, Index i) -> const Scalar& { return c.classic(Classic::Jacobsthal, i); }},
    };
    for (const Display& d : displays) {
        auto seq = d.seq;
        auto ratio = [seq](Ctx& c, const Ix& ix) { return seq(c, ix.n) / seq(c, ix.n - ix.r); };
        out.push_back({
            .id = "eq-ndpr9xm-" + std::string(d.name),
            .anchor = "eq.ndpr9xm (" + std::string(d.name) + " version)",
            .statement = d.statement,
            .indices = kNRK,
            .preconditions = "S_n != 0, S_{n-r} != 0",
            .family = Family::Display,
            .applies = d.applies,
            .applies_to = d.applies_to,
            .guard =
                [seq](Ctx& c, const Ix& ix) {
                    nonzero(seq(c, ix.n), "S_n!=0");
                    nonzero(seq(c, ix.n - ix.r), "S_{n-r}!=0");
                },
            .lhs =
                [factor = d.factor, u_like = d.u_like, ratio](Ctx& c, const Ix& ix) {
                    // sum_{j} S'_{rj+1} / ratio^j
                    return factor(c, ix) * weighted_sum(ix.k, ratio(c, ix).reciprocal(), 1, ix.r,
                                                        classic_of(c, u_like));
                },
            .rhs =
                [seq, ratio](Ctx& c, const Ix& ix) {
                    return seq(c, ix.n + ix.k * ix.r + 1) * seq(c, ix.n - ix.r) / pow(ratio(c, ix), ix.k) -
                           seq(c, ix.n) * seq(c, ix.n - ix.r + 1);
                },
            .general = same_indices("eq-ndpr9xm"),
        });
    }
}

// ---------------------------------------------------------------------------
// Addition-formula theorem: x = u_r, y = -q u_{r-1}, alpha = r, beta = r+1.

void add_addition_theorem(std::vector<IdentityDef>& out) {
    constexpr IndexSet kMRK = kUsesM | kUsesR | kUsesK;
    constexpr IndexSet kRK = kUsesR | kUsesK;

    auto guard_first = [](Ctx& c, const Ix& ix) {
        exclude(ix.r == -1, "r!=-1");
        nonzero(c.u(ix.r), "u_r!=0");
    };
    auto guard_second = [](Ctx& c, const Ix& ix) {
        exclude(ix.r == 1, "r!=1");
        nonzero(c.u(ix.r - 2), "u_{r-2}!=0");
    };
    auto guard_third = [](Ctx& c, const Ix& ix) {
        exclude(ix.r == 0, "r!=0");
        nonzero(c.u(ix.r - 1), "u_{r-1}!=0");
        nonzero(c.u(ix.r), "u_r!=0");
    };

    // q u_r^k u_{r-1} sum w_{...}/u_r^j
    auto first_lhs = [](Ctx& c, Index r, Index start, Index k) {
        return c.params().q() * pow(c.u(r), k) * c.u(r - 1) * weighted_sum(k, c.u(r).reciprocal(), start, r, w_of(c));
    };
    auto first_via = [](Ctx& c, Index r, Index m, Index k) {
        auto cfg = addition_config(c, r);
        return scaled(-pow(c.u(r), k), lemma3_sum(cfg, Lemma3Variant::DivX, m, k),
                      lemma3_closed(cfg, Lemma3Variant::DivX, m, k));
    };

    out.push_back({
        .id = "thm-weighted-vybd467",
        .anchor = "eq.vybd467",
        .statement = "q u_r^k u_{r-1} sum_{j=0}^k w_{m-kr-r-1+rj}/u_r^j = u_r^{k+1} w_{m-kr-r} - w_m, r != -1",
        .indices = kMRK,
        .preconditions = "r != -1, u_r != 0",
        .family = Family::Theorem,
        .guard = guard_first,
        .lhs = [first_lhs](Ctx& c, const Ix& ix) { return first_lhs(c, ix.r, ix.m - ix.k * ix.r - ix.r - 1, ix.k); },
        .rhs =
            [](Ctx& c, const Ix& ix) {
                return pow(c.u(ix.r), ix.k + 1) * c.w(ix.m - ix.k * ix.r - ix.r) - c.w(ix.m);
            },
        .via_lemma = [first_via](Ctx& c, const Ix& ix) { return first_via(c, ix.r, ix.m, ix.k); },
    });
    out.push_back({
        .id = "thm-weighted-vybd467-particular",
        .anchor = "eq.vybd467 (in particular)",
        .statement = "q u_r^k u_{r-1} sum_{j=0}^k w_{rj}/u_r^j = b u_r^{k+1} - w_{kr+r+1}",
        .indices = kRK,
        .preconditions = "r != -1, u_r != 0",
        .family = Family::Particular,
        .guard = guard_first,
        .lhs = [first_lhs](Ctx& c, const Ix& ix) { return first_lhs(c, ix.r, 0, ix.k); },
        .rhs =
            [](Ctx& c, const Ix& ix) {
                return c.params().b() * pow(c.u(ix.r), ix.k + 1) - c.w(ix.k * ix.r + ix.r + 1);
            },
        .via_lemma = [first_via](Ctx& c, const Ix& ix) { return first_via(c, ix.r, ix.k * ix.r + ix.r + 1, ix.k); },
    });

    // u_{r-1} sum w_{...}/(-q u_{r-2})^j; read on the relation at r-1.
    auto second_weight = [](Ctx& c, Index r) { return -c.params().q() * c.u(r - 2); };
    auto second_via = [](Ctx& c, Index r, Index m, Index k) {
        auto cfg = addition_config(c, r - 1);
        return SidePair{lemma3_sum(cfg, Lemma3Variant::DivY, m, k), lemma3_closed(cfg, Lemma3Variant::DivY, m, k)};
    };

    out.push_back({
        .id = "thm-weighted-vwqo0w9",
        .anchor = "eq.vwqo0w9",
        .statement = "u_{r-1} sum_{j=0}^k w_{m-kr-r+1+rj}/(-q u_{r-2})^j = "
                     "w_m/(-q u_{r-2})^k + q u_{r-2} w_{m-(k+1)r}, r != 1",
        .indices = kMRK,
        .preconditions = "r != 1, u_{r-2} != 0",
        .family = Family::Theorem,
        .guard = guard_second,
        .lhs =
            [second_weight](Ctx& c, const Ix& ix) {
                return c.u(ix.r - 1) * weighted_sum(ix.k, second_weight(c, ix.r).reciprocal(),
                                                    ix.m - ix.k * ix.r - ix.r + 1, ix.r, w_of(c));
            },
        .rhs =
            [second_weight](Ctx& c, const Ix& ix) {
                return c.w(ix.m) / pow(second_weight(c, ix.r), ix.k) +
                       c.params().q() * c.u(ix.r - 2) * c.w(ix.m - (ix.k + 1) * ix.r);
            },
        .via_lemma = [second_via](Ctx& c, const Ix& ix) { return second_via(c, ix.r, ix.m, ix.k); },
    });
    out.push_back({
        .id = "thm-weighted-vwqo0w9-particular",
        .anchor = "eq.vwqo0w9 (in particular)",
        .statement = "u_{r-1} sum_{j=0}^k w_{rj}/(-q u_{r-2})^j = w_{kr+r-1}/(-q u_{r-2})^k + (ap - b) u_{r-2}",
        .indices = kRK,
        .preconditions = "r != 1, u_{r-2} != 0",
        .family = Family::Particular,
        .guard = guard_second,
        .lhs =
            [second_weight](Ctx& c, const Ix& ix) {
                return c.u(ix.r - 1) * weighted_sum(ix.k, second_weight(c, ix.r).reciprocal(), 0, ix.r, w_of(c));
            },
        .rhs =
            [second_weight](Ctx& c, const Ix& ix) {
                const auto& prm = c.params();
                return c.w(ix.k * ix.r + ix.r - 1) / pow(second_weight(c, ix.r), ix.k) +
                       (prm.a() * prm.p() - prm.b()) * c.u(ix.r - 2);
            },
        .via_lemma = [second_via](Ctx& c, const Ix& ix) { return second_via(c, ix.r, ix.k * ix.r + ix.r - 1, ix.k); },
    });
    out.push_back({
        .id = "thm-weighted-vwqo0w9-particular-g",
        .anchor = "eq.vwqo0w9 (G special case)",
        .statement = "F_r sum_{j=0}^k G_{rj}/F_{r-1}^j = G_{kr+r-1}/F_{r-1}^k - F_{r-1} (G_1 - G_0)",
        .indices = kRK,
        .preconditions = "r != 1, F_{r-1} != 0",
        .family = Family::Display,
        .applies = g_family(),
        .applies_to = "g(a,b)",
        .guard =
            [](Ctx& c, const Ix& ix) {
                exclude(ix.r == 1, "r!=1");
                nonzero(c.classic(Classic::Fibonacci, ix.r - 1), "F_{r-1}!=0");
            },
        .lhs =
            [](Ctx& c, const Ix& ix) {
                const Scalar& f = c.classic(Classic::Fibonacci, ix.r - 1);
                return c.classic(Classic::Fibonacci, ix.r) * weighted_sum(ix.k, f.reciprocal(), 0, ix.r, w_of(c));
            },
        .rhs =
            [](Ctx& c, const Ix& ix) {
                const Scalar& f = c.classic(Classic::Fibonacci, ix.r - 1);
                return c.w(ix.k * ix.r + ix.r - 1) / pow(f, ix.k) - f * (c.params().b() - c.params().a());
            },
        .general = same_indices("thm-weighted-vwqo0w9-particular"),
    });

    // sum w_{...}/(q u_{r-1}/u_r)^j
    auto third_weight = [](Ctx& c, Index r) { return c.params().q() * c.u(r - 1) / c.u(r); };
    auto third_via = [](Ctx& c, Index r, Index m, Index k) {
        auto cfg = addition_config(c, r);
        return SidePair{lemma3_sum(cfg, Lemma3Variant::NegYOverX, m, k),
                        lemma3_closed(cfg, Lemma3Variant::NegYOverX, m, k)};
    };

    out.push_back({
        .id = "thm-weighted-utwljqu",
        .anchor = "eq.utwljqu",
        .statement = "sum_{j=0}^k w_{m-k+r+j}/(q u_{r-1}/u_r)^j = "
                     "u_r w_m/(q u_{r-1}/u_r)^k - q u_{r-1} w_{m-k-1}, r != 0",
        .indices = kMRK,
        .preconditions = "r != 0, u_{r-1} != 0, u_r != 0",
        .family = Family::Theorem,
        .guard = guard_third,
        .lhs =
            [third_weight](Ctx& c, const Ix& ix) {
                return weighted_sum(ix.k, third_weight(c, ix.r).reciprocal(), ix.m - ix.k + ix.r, 1, w_of(c));
            },
        .rhs =
            [third_weight](Ctx& c, const Ix& ix) {
                return c.u(ix.r) * c.w(ix.m) / pow(third_weight(c, ix.r), ix.k) -
                       c.params().q() * c.u(ix.r - 1) * c.w(ix.m - ix.k - 1);
            },
        .via_lemma = [third_via](Ctx& c, const Ix& ix) { return third_via(c, ix.r, ix.m, ix.k); },
    });
    out.push_back({
        .id = "eq-btkvoap",
        .anchor = "eq.btkvoap",
        .statement = "sum_{j=0}^k w_j/(q u_{r-1}/u_r)^j = u_r w_{k-r}/(q u_{r-1}/u_r)^k - "
                     "(1/q^r) (a u_{r+1} - b u_r)/(a u_{r+1} + (b - pa) u_r) u_{r-1} w_{r+1}",
        .indices = kRK,
        .preconditions = "r != 0, u_{r-1} != 0, u_r != 0, a u_{r+1} + (b - pa) u_r != 0",
        .family = Family::Particular,
        .guard =
            [guard_third](Ctx& c, const Ix& ix) {
                guard_third(c, ix);
                (void)reflection(c, ix.r + 1);
            },
        .lhs =
            [third_weight](Ctx& c, const Ix& ix) {
                return weighted_sum(ix.k, third_weight(c, ix.r).reciprocal(), 0, 1, w_of(c));
            },
        .rhs =
            [third_weight](Ctx& c, const Ix& ix) {
                return c.u(ix.r) * c.w(ix.k - ix.r) / pow(third_weight(c, ix.r), ix.k) -
                       reflection(c, ix.r + 1) * c.u(ix.r - 1) * c.w(ix.r + 1) / pow(c.params().q(), ix.r);
            },
        .via_lemma = [third_via](Ctx& c, const Ix& ix) { return third_via(c, ix.r, ix.k - ix.r, ix.k); },
    });

    // Displays of eq.btkvoap.
    out.push_back({
        .id = "eq-btkvoap-g",
        .anchor = "eq.btkvoap (G version)",
        .statement = "sum_{j=0}^k (-1)^j G_j/(F_r/F_{r+1})^j = (-1)^k F_{r+1}/(F_r/F_{r+1})^k G_{k-r} - "
                     "(-1)^r (F_{r+2} G_0 - F_{r+1} G_1)/(F_{r+2} G_0 + F_{r+1} (G_1 - G_0)) F_r G_{r+1}",
        .indices = kRK,
        .preconditions = "r != 0, F_r != 0, F_{r+1} != 0, F_{r+2} G_0 + F_{r+1} (G_1 - G_0) != 0",
        .family = Family::Display,
        .applies = g_family(),
        .applies_to = "g(a,b)",
        .guard =
            [](Ctx& c, const Ix& ix) {
                exclude(ix.r == 0, "r!=0");
                nonzero(c.classic(Classic::Fibonacci, ix.r), "F_r!=0");
                nonzero(c.classic(Classic::Fibonacci, ix.r + 1), "F_{r+1}!=0");
                const Scalar& g0 = c.params().a();
                const Scalar& g1 = c.params().b();
                nonzero(c.classic(Classic::Fibonacci, ix.r + 2) * g0 + c.classic(Classic::Fibonacci, ix.r + 1) * (g1 - g0),
                        "F_{r+2}G_0+F_{r+1}(G_1-G_0)!=0");
            },
        .lhs =
            [](Ctx& c, const Ix& ix) {
                const Scalar ratio = c.classic(Classic::Fibonacci, ix.r) / c.classic(Classic::Fibonacci, ix.r + 1);
                return weighted_sum(ix.k, -ratio.reciprocal(), 0, 1, w_of(c));
            },
        .rhs =
            [](Ctx& c, const Ix& ix) {
                auto F = [&c](Index i) -> const Scalar& { return c.classic(Classic::Fibonacci, i); };
                const Scalar& g0 = c.params().a();
                const Scalar& g1 = c.params().b();
                const Scalar ratio = F(ix.r) / F(ix.r + 1);
                const Scalar cofactor = (F(ix.r + 2) * g0 - F(ix.r + 1) * g1) / (F(ix.r + 2) * g0 + F(ix.r + 1) * (g1 - g0));
                return sign_pow(ix.k) * F(ix.r + 1) / pow(ratio, ix.k) * c.w(ix.k - ix.r) -
                       sign_pow(ix.r) * cofactor * F(ix.r) * c.w(ix.r + 1);
            },
        .general = same_indices("eq-btkvoap"),
    });
    out.push_back({
        .id = "eq-btkvoap-pell",
        .anchor = "eq.btkvoap (Pell version)",
        .statement = "sum_{j=0}^k (-1)^j P_j/(P_r/P_{r+1})^j = (-1)^k P_{r+1} P_{k-r}/(P_r/P_{r+1})^k + (-1)^r P_r P_{r+1}",
        .indices = kRK,
        .preconditions = "r != 0, P_r != 0",
        .family = Family::Display,
        .applies = only(PresetKind::Pell),
        .applies_to = "pell",
        .guard =
            [](Ctx& c, const Ix& ix) {
                exclude(ix.r == 0, "r!=0");
                nonzero(c.classic(Classic::Pell, ix.r), "P_r!=0");
                nonzero(c.classic(Classic::Pell, ix.r + 1), "P_{r+1}!=0");
            },
        .lhs =
            [](Ctx& c, const Ix& ix) {
                const Scalar ratio = c.classic(Classic::Pell, ix.r) / c.classic(Classic::Pell, ix.r + 1);
                return weighted_sum(ix.k, -ratio.reciprocal(), 0, 1, classic_of(c, Classic::Pell));
            },
        .rhs =
            [](Ctx& c, const Ix& ix) {
                auto P = [&c](Index i) -> const Scalar& { return c.classic(Classic::Pell, i); };
                const Scalar ratio = P(ix.r) / P(ix.r + 1);
                return sign_pow(ix.k) * P(ix.r + 1) * P(ix.k - ix.r) / pow(ratio, ix.k) +
                       sign_pow(ix.r) * P(ix.r) * P(ix.r + 1);
            },
        .general = same_indices("eq-btkvoap"),
    });
    out.push_back({
        .id = "eq-btkvoap-jacobsthal",
        .anchor = "eq.btkvoap (Jacobsthal version)",
        .statement = "sum_{j=0}^k ((-1)^j/2^j) J_j/(J_r/J_{r+1})^j = "
                     "((-1)^k/2^k) J_{r+1} J_{k-r}/(J_r/J_{r+1})^k + ((-1)^r/2^r) J_r J_{r+1}",
        .indices = kRK,
        .preconditions = "r != 0, J_r != 0",
        .family = Family::Display,
        .applies = only(PresetKind::Jacobsthal),
        .applies_to = "jacobsthal",
        .guard =
            [](Ctx& c, const Ix& ix) {
                exclude(ix.r == 0, "r!=0");
                nonzero(c.classic(Classic::Jacobsthal, ix.r), "J_r!=0");
                nonzero(c.classic(Classic::Jacobsthal, ix.r + 1), "J_{r+1}!=0");
            },
        .lhs =
            [](Ctx& c, const Ix& ix) {
                const Scalar ratio = c.classic(Classic::Jacobsthal, ix.r) / c.classic(Classic::Jacobsthal, ix.r + 1);
                const Scalar step = Scalar(Rational(-1, 2)) / ratio;
                return weighted_sum(ix.k, step, 0, 1, classic_of(c, Classic::Jacobsthal));
            },
        .rhs =
            [](Ctx& c, const Ix& ix) {
                auto J = [&c](Index i) -> const Scalar& { return c.classic(Classic::Jacobsthal, i); };
                const Scalar ratio = J(ix.r) / J(ix.r + 1);
                const Scalar minus_half(Rational(-1, 2));
                return pow(minus_half, ix.k) * J(ix.r + 1) * J(ix.k - ix.r) / pow(ratio, ix.k) +
                       pow(minus_half, ix.r) * J(ix.r) * J(ix.r + 1);
            },
        .general = same_indices("eq-btkvoap"),
    });
}

// ---------------------------------------------------------------------------
// Reflection theorem: x = 1/v_r, y = q^r/v_r, alpha = -r, beta = r.

void add_reflection_theorem(std::vector<IdentityDef>& out) {
    constexpr IndexSet kMRK = kUsesM | kUsesR | kUsesK;
    constexpr IndexSet kRK = kUsesR | kUsesK;

    auto guard_v = [](Ctx& c, const Ix& ix) { nonzero(c.v(ix.r), "v_r!=0"); };
    auto first_weight = [](Ctx& c, Index r) { return pow(c.params().q(), r) / c.v(r); };
    auto via = [](Ctx& c, Index r, Lemma3Variant variant, LemmaForm form, Index m, Index k, const Scalar& scale) {
        auto cfg = reflection_config(c, r);
        return scaled(scale, lemma3_sum(cfg, variant, m, k, form), lemma3_closed(cfg, variant, m, k, form));
    };

    out.push_back({
        .id = "thm-weighted-u5k6v3w",
        .anchor = "eq.u5k6v3w",
        .statement = "sum_{j=0}^k w_{m-kr+r+rj}/(q^r/v_r)^j = v_r w_m/(q^r/v_r)^k - q^r w_{m-(k+1)r}",
        .indices = kMRK,
        .preconditions = "v_r != 0",
        .family = Family::Theorem,
        .guard = guard_v,
        .lhs =
            [first_weight](Ctx& c, const Ix& ix) {
                return weighted_sum(ix.k, first_weight(c, ix.r).reciprocal(), ix.m - ix.k * ix.r + ix.r, ix.r, w_of(c));
            },
        .rhs =
            [first_weight](Ctx& c, const Ix& ix) {
                return c.v(ix.r) * c.w(ix.m) / pow(first_weight(c, ix.r), ix.k) -
                       pow(c.params().q(), ix.r) * c.w(ix.m - (ix.k + 1) * ix.r);
            },
        .via_lemma =
            [via](Ctx& c, const Ix& ix) {
                return via(c, ix.r, Lemma3Variant::DivY, LemmaForm::Standard, ix.m, ix.k, c.v(ix.r));
            },
    });
    out.push_back({
        .id = "thm-weighted-u5k6v3w-particular",
        .anchor = "eq.u5k6v3w (in particular)",
        .statement = "sum_{j=0}^k w_{rj}/(q^r/v_r)^j = v_r w_{kr-r}/(q^r/v_r)^k - "
                     "(1/q^r) (a u_{2r} - b u_{2r-1})/(a u_{2r} + (b - pa) u_{2r-1}) w_{2r}",
        .indices = kRK,
        .preconditions = "v_r != 0, a u_{2r} + (b - pa) u_{2r-1} != 0",
        .family = Family::Particular,
        .guard =
            [guard_v](Ctx& c, const Ix& ix) {
                guard_v(c, ix);
                (void)reflection(c, 2 * ix.r);
            },
        .lhs =
            [first_weight](Ctx& c, const Ix& ix) {
                return weighted_sum(ix.k, first_weight(c, ix.r).reciprocal(), 0, ix.r, w_of(c));
            },
        .rhs =
            [first_weight](Ctx& c, const Ix& ix) {
                return c.v(ix.r) * c.w(ix.k * ix.r - ix.r) / pow(first_weight(c, ix.r), ix.k) -
                       reflection(c, 2 * ix.r) * c.w(2 * ix.r) / pow(c.params().q(), ix.r);
            },
        .via_lemma =
            [via](Ctx& c, const Ix& ix) {
                return via(c, ix.r, Lemma3Variant::DivY, LemmaForm::Standard, ix.k * ix.r - ix.r, ix.k, c.v(ix.r));
            },
    });

    out.push_back({
        .id = "thm-weighted-x6yh3ef",
        .anchor = "eq.x6yh3ef",
        .statement = "v_r^k q^r sum_{j=0}^k w_{m-r+rj}/v_r^j = v_r^{k+1} w_m - w_{m+(k+1)r}",
        .indices = kMRK,
        .preconditions = "v_r != 0",
        .family = Family::Theorem,
        .guard = guard_v,
        .lhs =
            [](Ctx& c, const Ix& ix) {
                return pow(c.v(ix.r), ix.k) * pow(c.params().q(), ix.r) *
                       weighted_sum(ix.k, c.v(ix.r).reciprocal(), ix.m - ix.r, ix.r, w_of(c));
            },
        .rhs =
            [](Ctx& c, const Ix& ix) {
                return pow(c.v(ix.r), ix.k + 1) * c.w(ix.m) - c.w(ix.m + (ix.k + 1) * ix.r);
            },
        .via_lemma =
            [via](Ctx& c, const Ix& ix) {
                return via(c, ix.r, Lemma3Variant::DivX, LemmaForm::Equivalent, ix.m, ix.k, pow(c.v(ix.r), ix.k + 1));
            },
    });
    out.push_back({
        .id = "thm-weighted-x6yh3ef-particular",
        .anchor = "eq.x6yh3ef (in particular)",
        .statement = "v_r^k q^r sum_{j=0}^k w_{rj}/v_r^j = v_r^{k+1} w_r - w_{(k+2)r}",
        .indices = kRK,
        .preconditions = "v_r != 0",
        .family = Family::Particular,
        .guard = guard_v,
        .lhs =
            [](Ctx& c, const Ix& ix) {
                return pow(c.v(ix.r), ix.k) * pow(c.params().q(), ix.r) *
                       weighted_sum(ix.k, c.v(ix.r).reciprocal(), 0, ix.r, w_of(c));
            },
        .rhs = [](Ctx& c, const Ix& ix) { return pow(c.v(ix.r), ix.k + 1) * c.w(ix.r) - c.w((ix.k + 2) * ix.r); },
        .via_lemma =
            [via](Ctx& c, const Ix& ix) {
                return via(c, ix.r, Lemma3Variant::DivX, LemmaForm::Equivalent, ix.r, ix.k, pow(c.v(ix.r), ix.k + 1));
            },
    });

    auto neg_q = [](Ctx& c, Index r) { return -pow(c.params().q(), r); };
    out.push_back({
        .id = "thm-weighted-is4vgui",
        .anchor = "eq.is4vgui",
        .statement = "v_r sum_{j=0}^k w_{m-2kr-r+2rj}/(-q^r)^j = w_m/(-q^r)^k + q^r w_{m-2(k+1)r}",
        .indices = kMRK,
        .family = Family::Theorem,
        .lhs =
            [neg_q](Ctx& c, const Ix& ix) {
                return c.v(ix.r) *
                       weighted_sum(ix.k, neg_q(c, ix.r).reciprocal(), ix.m - 2 * ix.k * ix.r - ix.r, 2 * ix.r, w_of(c));
            },
        .rhs =
            [neg_q](Ctx& c, const Ix& ix) {
                return c.w(ix.m) / pow(neg_q(c, ix.r), ix.k) +
                       pow(c.params().q(), ix.r) * c.w(ix.m - 2 * (ix.k + 1) * ix.r);
            },
        .via_lemma =
            [via](Ctx& c, const Ix& ix) {
                return via(c, ix.r, Lemma3Variant::NegYOverX, LemmaForm::Standard, ix.m, ix.k, c.v(ix.r));
            },
    });
    out.push_back({
        .id = "thm-weighted-is4vgui-particular",
        .anchor = "eq.is4vgui (in particular)",
        .statement = "v_r sum_{j=0}^k w_{2rj}/(-q^r)^j = w_{(2k+1)r}/(-q^r)^k + "
                     "(a u_r - b u_{r-1})/(a u_r + (b - pa) u_{r-1}) w_r",
        .indices = kRK,
        .preconditions = "a u_r + (b - pa) u_{r-1} != 0",
        .family = Family::Particular,
        .guard = [](Ctx& c, const Ix& ix) { (void)reflection(c, ix.r); },
        .lhs =
            [neg_q](Ctx& c, const Ix& ix) {
                return c.v(ix.r) * weighted_sum(ix.k, neg_q(c, ix.r).reciprocal(), 0, 2 * ix.r, w_of(c));
            },
        .rhs =
            [neg_q](Ctx& c, const Ix& ix) {
                return c.w((2 * ix.k + 1) * ix.r) / pow(neg_q(c, ix.r), ix.k) + reflection(c, ix.r) * c.w(ix.r);
            },
        .via_lemma =
            [via](Ctx& c, const Ix& ix) {
                return via(c, ix.r, Lemma3Variant::NegYOverX, LemmaForm::Standard, (2 * ix.k + 1) * ix.r, ix.k,
                           c.v(ix.r));
            },
    });
}

}  // namespace

void add_weighted(std::vector<IdentityDef>& out) {
    add_shift_theorem(out);
    add_product_theorem(out);
    add_addition_theorem(out);
    add_reflection_theorem(out);
}

}  // namespace horadam::catalog
