#include "horadam/lemma.hpp"

#include "horadam/error.hpp"

namespace horadam {

LemmaConfig LemmaConfig::swapped() const { return {y, x, beta, alpha, Y, X}; }

LemmaConfig make_lemma_config(Scalar x, Scalar y, Index alpha, Index beta, HoradamSequence& X, HoradamSequence& Y,
                              Index probe_radius) {
    if (x.is_zero()) throw PreconditionUnmet("x!=0");
    if (y.is_zero()) throw PreconditionUnmet("y!=0");
    LemmaConfig cfg{std::move(x), std::move(y), alpha, beta, X, Y};
    for (Index m = -probe_radius; m <= probe_radius; ++m) {
        if (!(X(m) == cfg.x * X(m - alpha) + cfg.y * Y(m - beta))) throw PreconditionUnmet("relation probe");
    }
    return cfg;
}

LemmaConfig solve_lemma_config(Index alpha, Index beta, HoradamSequence& X, HoradamSequence& Y,
                               Index probe_radius) {
    // [X_{-alpha}   Y_{-beta}  ] [x]   [X_0]
    // [X_{1-alpha}  Y_{1-beta} ] [y] = [X_1]
    const Scalar& a11 = X(-alpha);
    const Scalar& a12 = Y(-beta);
    const Scalar& a21 = X(1 - alpha);
    const Scalar& a22 = Y(1 - beta);
    const Scalar det = a11 * a22 - a12 * a21;
    if (det.is_zero()) throw PreconditionUnmet("relation determined");
    Scalar x = (X(0) * a22 - a12 * X(1)) / det;
    Scalar y = (a11 * X(1) - a21 * X(0)) / det;
    return make_lemma_config(std::move(x), std::move(y), alpha, beta, X, Y, probe_radius);
}

Scalar lemma1_sum(const LemmaConfig& cfg, Index m, Index k, LemmaForm form) {
    auto& Y = cfg.Y.get();
    auto term = [&Y](Index i) -> const Scalar& { return Y(i); };
    if (form == LemmaForm::Standard) {
        return cfg.y * weighted_sum(k, cfg.x.reciprocal(), m - k * cfg.alpha - cfg.beta, cfg.alpha, term);
    }
    return cfg.y * weighted_sum(k, cfg.x, m - cfg.beta, -cfg.alpha, term);
}

Scalar lemma1_closed(const LemmaConfig& cfg, Index m, Index k, LemmaForm form) {
    auto& X = cfg.X.get();
    const Index tail = m - (k + 1) * cfg.alpha;
    if (form == LemmaForm::Standard) return X(m) / int_pow(cfg.x, k) - cfg.x * X(tail);
    return X(m) - int_pow(cfg.x, k + 1) * X(tail);
}

namespace {

// The NegYOverX sums; NegXOverY is the same read on the swapped config.
Scalar neg_ratio_sum(const LemmaConfig& cfg, Index m, Index k, LemmaForm form) {
    auto& X = cfg.X.get();
    auto term = [&X](Index i) -> const Scalar& { return X(i); };
    const Index gap = cfg.beta - cfg.alpha;
    const Scalar neg_y_over_x = -cfg.y / cfg.x;
    if (form == LemmaForm::Standard) {
        return weighted_sum(k, neg_y_over_x.reciprocal(), m - gap * k + cfg.alpha, gap, term);
    }
    // sum X_{m+alpha-(beta-alpha)j} / (-x/y)^j
    return weighted_sum(k, neg_y_over_x, m + cfg.alpha, -gap, term);
}

Scalar neg_ratio_closed(const LemmaConfig& cfg, Index m, Index k, LemmaForm form) {
    auto& X = cfg.X.get();
    const Index tail = m - (k + 1) * (cfg.beta - cfg.alpha);
    const Scalar neg_y_over_x = -cfg.y / cfg.x;
    if (form == LemmaForm::Standard) return cfg.x * X(m) / int_pow(neg_y_over_x, k) + cfg.y * X(tail);
    // x X_m + y / (-x/y)^k X_tail, and 1/(-x/y) = -y/x
    return cfg.x * X(m) + cfg.y * int_pow(neg_y_over_x, k) * X(tail);
}

void require_single(const LemmaConfig& cfg) {
    if (!cfg.single_sequence()) throw PreconditionUnmet("single-sequence relation");
}

}  // namespace

Scalar lemma3_sum(const LemmaConfig& cfg, Lemma3Variant variant, Index m, Index k, LemmaForm form) {
    require_single(cfg);
    switch (variant) {
        case Lemma3Variant::DivX: return lemma1_sum(cfg, m, k, form);
        case Lemma3Variant::DivY: return lemma1_sum(cfg.swapped(), m, k, form);
        case Lemma3Variant::NegYOverX: return neg_ratio_sum(cfg, m, k, form);
        case Lemma3Variant::NegXOverY: return neg_ratio_sum(cfg.swapped(), m, k, form);
    }
    return {};
}

Scalar lemma3_closed(const LemmaConfig& cfg, Lemma3Variant variant, Index m, Index k, LemmaForm form) {
    require_single(cfg);
    switch (variant) {
        case Lemma3Variant::DivX: return lemma1_closed(cfg, m, k, form);
        case Lemma3Variant::DivY: return lemma1_closed(cfg.swapped(), m, k, form);
        case Lemma3Variant::NegYOverX: return neg_ratio_closed(cfg, m, k, form);
        case Lemma3Variant::NegXOverY: return neg_ratio_closed(cfg.swapped(), m, k, form);
    }
    return {};
}

Index lemma3_particular_m(const LemmaConfig& cfg, Lemma3Variant variant, Index k, LemmaForm form) {
    const Index a = cfg.alpha;
    const Index b = cfg.beta;
    const bool standard = form == LemmaForm::Standard;
    switch (variant) {
        case Lemma3Variant::DivX: return standard ? k * a + b : b;
        case Lemma3Variant::DivY: return standard ? k * b + a : a;
        case Lemma3Variant::NegYOverX: return standard ? (b - a) * k - a : -a;
        case Lemma3Variant::NegXOverY: return standard ? (a - b) * k - b : -b;
    }
    return 0;
}

namespace {

// XOverY: sum C(k,j) (x/y)^j X_{m-k beta+(beta-alpha)j} = X_m / y^k
Scalar binomial_ratio_sum(const LemmaConfig& cfg, Index m, Index k) {
    auto& X = cfg.X.get();
    return weighted_sum(k, cfg.x / cfg.y, m - k * cfg.beta, cfg.beta - cfg.alpha,
                        [&X](Index i) -> const Scalar& { return X(i); }, SumWeighting::Binomial);
}

Scalar binomial_ratio_closed(const LemmaConfig& cfg, Index m, Index k) {
    return cfg.X.get()(m) / int_pow(cfg.y, k);
}

// NegY: sum C(k,j) X_{m+(alpha-beta)k+beta j} / (-y)^j = (-x/y)^k X_m
Scalar binomial_neg_sum(const LemmaConfig& cfg, Index m, Index k) {
    auto& X = cfg.X.get();
    return weighted_sum(k, (-cfg.y).reciprocal(), m + (cfg.alpha - cfg.beta) * k, cfg.beta,
                        [&X](Index i) -> const Scalar& { return X(i); }, SumWeighting::Binomial);
}

Scalar binomial_neg_closed(const LemmaConfig& cfg, Index m, Index k) {
    return int_pow(-cfg.x / cfg.y, k) * cfg.X.get()(m);
}

}  // namespace

Scalar lemma5_sum(const LemmaConfig& cfg, Lemma5Variant variant, Index m, Index k) {
    require_single(cfg);
    switch (variant) {
        case Lemma5Variant::XOverY: return binomial_ratio_sum(cfg, m, k);
        case Lemma5Variant::NegY: return binomial_neg_sum(cfg, m, k);
        case Lemma5Variant::NegX: return binomial_neg_sum(cfg.swapped(), m, k);
        case Lemma5Variant::YOverX: return binomial_ratio_sum(cfg.swapped(), m, k);
    }
    return {};
}

Scalar lemma5_closed(const LemmaConfig& cfg, Lemma5Variant variant, Index m, Index k) {
    require_single(cfg);
    switch (variant) {
        case Lemma5Variant::XOverY: return binomial_ratio_closed(cfg, m, k);
        case Lemma5Variant::NegY: return binomial_neg_closed(cfg, m, k);
        case Lemma5Variant::NegX: return binomial_neg_closed(cfg.swapped(), m, k);
        case Lemma5Variant::YOverX: return binomial_ratio_closed(cfg.swapped(), m, k);
    }
    return {};
}

Index lemma5_particular_m(const LemmaConfig& cfg, Lemma5Variant variant, Index k) {
    switch (variant) {
        case Lemma5Variant::XOverY: return k * cfg.beta;
        case Lemma5Variant::NegY: return (cfg.beta - cfg.alpha) * k;
        case Lemma5Variant::NegX: return (cfg.alpha - cfg.beta) * k;
        case Lemma5Variant::YOverX: return k * cfg.alpha;
    }
    return 0;
}

}  // namespace horadam
