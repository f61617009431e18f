#include <stdexcept>
#include <unordered_set>

#include "catalog.hpp"

namespace horadam {

namespace {

HoradamParams classic_params(Classic which) {
    switch (which) {
        case Classic::Fibonacci: return PresetSpec{PresetKind::Fibonacci, {}}.params();
        case Classic::Lucas: return PresetSpec{PresetKind::Lucas, {}}.params();
        case Classic::Pell: return PresetSpec{PresetKind::Pell, {}}.params();
        case Classic::Jacobsthal: return PresetSpec{PresetKind::Jacobsthal, {}}.params();
    }
    throw std::logic_error("unknown classic sequence");
}

}  // namespace

EvalContext::EvalContext(HoradamParams params, TermMode mode, Index guard)
    : params_(std::move(params)),
      mode_(mode),
      guard_(guard),
      e_(compute_e(params_)),
      w_(params_, guard),
      u_(params_.fundamental(), guard),
      v_(params_.primordial(), guard) {}

const Scalar& EvalContext::fast_term(std::unordered_map<Index, Scalar>& cache, const HoradamParams& params,
                                     Index n) {
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, term_fast(params, n, guard_)).first;
    return it->second;
}

const Scalar& EvalContext::w(Index n) {
    return mode_ == TermMode::Fast ? fast_term(fast_w_, params_, n) : w_(n);
}

const Scalar& EvalContext::u(Index n) {
    return mode_ == TermMode::Fast ? fast_term(fast_u_, u_.params(), n) : u_(n);
}

const Scalar& EvalContext::v(Index n) {
    return mode_ == TermMode::Fast ? fast_term(fast_v_, v_.params(), n) : v_(n);
}

const Scalar& EvalContext::classic(Classic which, Index n) {
    auto it = classic_.find(which);
    if (it == classic_.end()) it = classic_.emplace(which, HoradamSequence(classic_params(which), guard_)).first;
    return it->second(n);
}

const LemmaConfig& EvalContext::solved_config(Index alpha, Index beta, bool two_sequence) {
    const auto key = std::make_tuple(alpha, beta, two_sequence);
    auto it = configs_.find(key);
    if (it == configs_.end()) {
        try {
            it = configs_.emplace(key, solve_lemma_config(alpha, beta, w_, two_sequence ? u_ : w_)).first;
        } catch (const PreconditionUnmet& err) {
            it = configs_.emplace(key, err.tag()).first;
        }
    }
    if (const auto* reason = std::get_if<std::string>(&it->second)) throw PreconditionUnmet(*reason);
    return std::get<LemmaConfig>(it->second);
}

std::string index_set_to_string(IndexSet set) {
    std::string out;
    if (set & kUsesM) out += 'm';
    if (set & kUsesN) out += 'n';
    if (set & kUsesR) out += 'r';
    if (set & kUsesK) out += 'k';
    return out.empty() ? "-" : out;
}

std::string_view family_name(Family family) {
    switch (family) {
        case Family::Kernel: return "kernel";
        case Family::NegativeIndex: return "negative-index";
        case Family::Lemma: return "lemma";
        case Family::Theorem: return "theorem";
        case Family::Particular: return "particular";
        case Family::Display: return "display";
    }
    return "?";
}

namespace catalog {

AppliesFn only(PresetKind kind) {
    return [target = PresetSpec{kind, {}}.params()](const HoradamParams& params) { return params == target; };
}

AppliesFn g_family() {
    return [](const HoradamParams& params) { return params.p() == Scalar(1) && params.q() == Scalar(-1); };
}

AppliesFn q_is(Scalar q) {
    return [q = std::move(q)](const HoradamParams& params) { return params.q() == q; };
}

Specialization same_indices(std::string general_id) {
    return {std::move(general_id), [](const Indices& ix) { return ix; }};
}

}  // namespace catalog

namespace {

std::vector<IdentityDef> build_registry() {
    std::vector<IdentityDef> out;
    catalog::add_kernel(out);
    catalog::add_lemmas(out);
    catalog::add_weighted(out);
    catalog::add_binomial(out);

    std::unordered_set<std::string> seen;
    for (const auto& def : out) {
        if (!seen.insert(def.id).second) throw std::logic_error("duplicate identity id " + def.id);
        if (!def.lhs || !def.rhs) throw std::logic_error("identity without evaluators: " + def.id);
    }
    for (const auto& def : out) {
        if (def.general && !seen.contains(def.general->general_id)) {
            throw std::logic_error("unknown general identity " + def.general->general_id + " for " + def.id);
        }
    }
    return out;
}

}  // namespace

const std::vector<IdentityDef>& registry() {
    static const std::vector<IdentityDef> entries = build_registry();
    return entries;
}

const IdentityDef& IdentityId::def() const { return registry().at(index_); }

std::vector<IdentityId> all_identities() {
    std::vector<IdentityId> ids;
    ids.reserve(registry().size());
    for (std::size_t i = 0; i < registry().size(); ++i) ids.emplace_back(i);
    return ids;
}

std::optional<IdentityId> find_identity(std::string_view name) {
    const auto& entries = registry();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].id == name) return IdentityId(i);
    }
    return std::nullopt;
}

IdentityId identity(std::string_view name) {
    if (auto id = find_identity(name)) return *id;
    throw ConfigError("unknown identity '" + std::string(name) + "'");
}

bool applies(const IdentityDef& def, const HoradamParams& params) { return !def.applies || def.applies(params); }

SidePair evaluate(IdentityId id, EvalContext& ctx, const Indices& indices) {
    const IdentityDef& def = id.def();
    if ((def.indices & kUsesK) != 0 && indices.k < 0) {
        throw std::invalid_argument("k must be non-negative for " + def.id);
    }
    if (!applies(def, ctx.params())) throw PreconditionUnmet("applies to " + def.applies_to);
    if (def.guard) def.guard(ctx, indices);
    return {def.lhs(ctx, indices), def.rhs(ctx, indices)};
}

CheckOutcome check(IdentityId id, EvalContext& ctx, const Indices& indices, RhsCorruption corruption) {
    SidePair sides;
    try {
        sides = evaluate(id, ctx, indices);
    } catch (const PreconditionUnmet& err) {
        return PreconditionSkip{err.tag()};
    } catch (const DivisionByZero&) {
        return PreconditionSkip{"non-vanishing denominator"};
    }
    if (corruption == RhsCorruption::Negate) sides.rhs = -sides.rhs;
    if (sides.lhs == sides.rhs) return Pass{std::move(sides.lhs)};
    return Violated{std::move(sides.lhs), std::move(sides.rhs)};
}

CheckOutcome check(const IdentityInstance& instance) {
    EvalContext ctx(instance.params);
    return check(instance.id, ctx, instance.indices);
}

}  // namespace horadam
