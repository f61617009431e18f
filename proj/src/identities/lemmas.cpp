// Lemma forms checked on a Horadam instance. The relation is
// w_m = x w_{m-alpha} + y Y_{m-beta} with alpha = r, beta = n and (x, y)
// solved exactly from the sequence; Y = u for the two-sequence lemma and
// Y = w otherwise.

#include <string>

#include "catalog.hpp"

namespace horadam::catalog {

namespace {

constexpr IndexSet kGeneral = kUsesM | kUsesN | kUsesR | kUsesK;
constexpr IndexSet kParticular = kUsesN | kUsesR | kUsesK;
constexpr const char* kRelation = "w_m = x w_{m-r} + y Y_{m-n} solvable with x, y != 0";

const LemmaConfig& config(Ctx& c, const Ix& ix, bool two_sequence) {
    return c.solved_config(ix.r, ix.n, two_sequence);
}

void add_lemma1(std::vector<IdentityDef>& out) {
    struct Row {
        const char* id;
        const char* anchor;
        const char* statement;
        LemmaForm form;
        bool particular;
    };
    const Row rows[] = {
        {"lemma-2.1", "lem.u4bqbkc", "y sum_{j=0}^k Y_{m-k alpha-beta+alpha j}/x^j = X_m/x^k - x X_{m-(k+1)alpha}",
         LemmaForm::Standard, false},
        {"lemma-2.1-particular", "lem.u4bqbkc (in particular)",
         "y sum_{j=0}^k Y_{alpha j}/x^j = X_{k alpha+beta}/x^k - x X_{beta-alpha}", LemmaForm::Standard, true},
        {"lemma-2.1-t347olg", "eq.t347olg", "y sum_{j=0}^k x^j Y_{m-beta-j alpha} = X_m - x^{k+1} X_{m-(k+1)alpha}",
         LemmaForm::Equivalent, false},
        {"lemma-2.1-t347olg-particular", "eq.t347olg (in particular)",
         "y sum_{j=0}^k x^j Y_{-j alpha} = X_beta - x^{k+1} X_{beta-(k+1)alpha}", LemmaForm::Equivalent, true},
    };
    for (const Row& row : rows) {
        auto at_m = [form = row.form, particular = row.particular](const LemmaConfig& cfg, const Ix& ix) {
            if (!particular) return ix.m;
            return form == LemmaForm::Standard ? ix.k * cfg.alpha + cfg.beta : cfg.beta;
        };
        out.push_back({
            .id = row.id,
            .anchor = row.anchor,
            .statement = std::string(row.statement) + "  [X=w, Y=u, alpha=r, beta=n]",
            .indices = row.particular ? kParticular : kGeneral,
            .preconditions = kRelation,
            .family = Family::Lemma,
            .guard = [](Ctx& c, const Ix& ix) { (void)config(c, ix, true); },
            .lhs =
                [form = row.form, at_m](Ctx& c, const Ix& ix) {
                    const auto& cfg = config(c, ix, true);
                    return lemma1_sum(cfg, at_m(cfg, ix), ix.k, form);
                },
            .rhs =
                [form = row.form, at_m](Ctx& c, const Ix& ix) {
                    const auto& cfg = config(c, ix, true);
                    return lemma1_closed(cfg, at_m(cfg, ix), ix.k, form);
                },
        });
    }
}

void add_lemma3(std::vector<IdentityDef>& out) {
    struct Row {
        const char* id;
        const char* anchor;
        const char* statement;
        Lemma3Variant variant;
        LemmaForm form;
    };
    const Row rows[] = {
        {"lemma-2.3-mxyb9zk", "eq.mxyb9zk",
         "y sum_{j=0}^k X_{m-k alpha-beta+alpha j}/x^j = X_m/x^k - x X_{m-(k+1)alpha}", Lemma3Variant::DivX,
         LemmaForm::Standard},
        {"lemma-2.3-cgldajj", "eq.cgldajj",
         "x sum_{j=0}^k X_{m-k beta-alpha+beta j}/y^j = X_m/y^k - y X_{m-(k+1)beta}", Lemma3Variant::DivY,
         LemmaForm::Standard},
        {"lemma-2.3-n2n4ec3", "eq.n2n4ec3",
         "sum_{j=0}^k X_{m-(beta-alpha)k+alpha+(beta-alpha)j}/(-y/x)^j = x X_m/(-y/x)^k + y X_{m-(k+1)(beta-alpha)}",
         Lemma3Variant::NegYOverX, LemmaForm::Standard},
        {"lemma-2.3-c522g7v", "eq.c522g7v",
         "sum_{j=0}^k X_{m-(alpha-beta)k+beta+(alpha-beta)j}/(-x/y)^j = y X_m/(-x/y)^k + x X_{m-(k+1)(alpha-beta)}",
         Lemma3Variant::NegXOverY, LemmaForm::Standard},
        {"lemma-2.3-awbhgnm", "eq.awbhgnm", "y sum_{j=0}^k x^j X_{m-beta-alpha j} = X_m - x^{k+1} X_{m-(k+1)alpha}",
         Lemma3Variant::DivX, LemmaForm::Equivalent},
        {"lemma-2.3-jjikwds", "eq.jjikwds", "x sum_{j=0}^k y^j X_{m-alpha-beta j} = X_m - y^{k+1} X_{m-(k+1)beta}",
         Lemma3Variant::DivY, LemmaForm::Equivalent},
        {"lemma-2.3-n2n4ec3-equivalent", "eq.n2n4ec3 (equivalent form)",
         "sum_{j=0}^k X_{m+alpha-(beta-alpha)j}/(-x/y)^j = x X_m + y/(-x/y)^k X_{m-(k+1)(beta-alpha)}",
         Lemma3Variant::NegYOverX, LemmaForm::Equivalent},
        {"lemma-2.3-c522g7v-equivalent", "eq.c522g7v (equivalent form)",
         "sum_{j=0}^k X_{m+beta-(alpha-beta)j}/(-y/x)^j = y X_m + x/(-y/x)^k X_{m-(k+1)(alpha-beta)}",
         Lemma3Variant::NegXOverY, LemmaForm::Equivalent},
    };
    for (const Row& row : rows) {
        for (bool particular : {false, true}) {
            auto at_m = [row, particular](const LemmaConfig& cfg, const Ix& ix) {
                return particular ? lemma3_particular_m(cfg, row.variant, ix.k, row.form) : ix.m;
            };
            out.push_back({
                .id = std::string(row.id) + (particular ? "-particular" : ""),
                .anchor = std::string(row.anchor) + (particular ? " (in particular)" : ""),
                .statement = std::string(row.statement) +
                             (particular ? "  [at the m that starts the sum at index 0]" : "") +
                             "  [X=w, alpha=r, beta=n]",
                .indices = particular ? kParticular : kGeneral,
                .preconditions = kRelation,
                .family = Family::Lemma,
                .guard = [](Ctx& c, const Ix& ix) { (void)config(c, ix, false); },
                .lhs =
                    [row, at_m](Ctx& c, const Ix& ix) {
                        const auto& cfg = config(c, ix, false);
                        return lemma3_sum(cfg, row.variant, at_m(cfg, ix), ix.k, row.form);
                    },
                .rhs =
                    [row, at_m](Ctx& c, const Ix& ix) {
                        const auto& cfg = config(c, ix, false);
                        return lemma3_closed(cfg, row.variant, at_m(cfg, ix), ix.k, row.form);
                    },
            });
        }
    }
}

void add_lemma5(std::vector<IdentityDef>& out) {
    struct Row {
        const char* id;
        const char* anchor;
        const char* statement;
        Lemma5Variant variant;
    };
    const Row rows[] = {
        {"lemma-2.5-nrzg4pd", "eq.nrzg4pd", "sum_{j=0}^k C(k,j) (x/y)^j X_{m-k beta+(beta-alpha)j} = X_m/y^k",
         Lemma5Variant::XOverY},
        {"lemma-2.5-h6kcv7w", "eq.h6kcv7w", "sum_{j=0}^k C(k,j) X_{m+(alpha-beta)k+beta j}/(-y)^j = (-x/y)^k X_m",
         Lemma5Variant::NegY},
        {"lemma-2.5-fnwrzi3", "eq.fnwrzi3", "sum_{j=0}^k C(k,j) X_{m+(beta-alpha)k+alpha j}/(-x)^j = (-y/x)^k X_m",
         Lemma5Variant::NegX},
        {"lemma-2.5-swapped", "lem.i84yg3s (y/x form)",
         "sum_{j=0}^k C(k,j) (y/x)^j X_{m-k alpha+(alpha-beta)j} = X_m/x^k", Lemma5Variant::YOverX},
    };
    for (const Row& row : rows) {
        for (bool particular : {false, true}) {
            auto at_m = [row, particular](const LemmaConfig& cfg, const Ix& ix) {
                return particular ? lemma5_particular_m(cfg, row.variant, ix.k) : ix.m;
            };
            out.push_back({
                .id = std::string(row.id) + (particular ? "-particular" : ""),
                .anchor = std::string(row.anchor) + (particular ? " (in particular)" : ""),
                .statement = std::string(row.statement) +
                             (particular ? "  [at the m that starts the sum at index 0]" : "") +
                             "  [X=w, alpha=r, beta=n]",
                .indices = particular ? kParticular : kGeneral,
                .preconditions = kRelation,
                .family = Family::Lemma,
                .guard = [](Ctx& c, const Ix& ix) { (void)config(c, ix, false); },
                .lhs =
                    [row, at_m](Ctx& c, const Ix& ix) {
                        const auto& cfg = config(c, ix, false);
                        return lemma5_sum(cfg, row.variant, at_m(cfg, ix), ix.k);
                    },
                .rhs =
                    [row, at_m](Ctx& c, const Ix& ix) {
                        const auto& cfg = config(c, ix, false);
                        return lemma5_closed(cfg, row.variant, at_m(cfg, ix), ix.k);
                    },
            });
        }
    }
}

}  // namespace

void add_lemmas(std::vector<IdentityDef>& out) {
    add_lemma1(out);
    add_lemma3(out);
    add_lemma5(out);
}

}  // namespace horadam::catalog
