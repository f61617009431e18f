#include "horadam/sequence.hpp"

#include <array>
#include <cstdlib>

#include "horadam/error.hpp"

namespace horadam {

HoradamParams::HoradamParams(Scalar a, Scalar b, Scalar p, Scalar q)
    : a_(std::move(a)), b_(std::move(b)), p_(std::move(p)), q_(std::move(q)) {
    if (p_.is_zero()) throw InvalidParams("p must be non-zero");
    if (q_.is_zero()) throw InvalidParams("q must be non-zero");
}

std::string HoradamParams::to_string() const {
    return "custom(" + format_scalar(a_) + "," + format_scalar(b_) + "," + format_scalar(p_) + "," +
           format_scalar(q_) + ")";
}

HoradamSequence::HoradamSequence(HoradamParams params, Index guard)
    : params_(std::move(params)), guard_(guard), q_inverse_(params_.q().reciprocal()) {
    forward_.push_back(params_.a());
    forward_.push_back(params_.b());
}

const Scalar& HoradamSequence::term(Index n) {
    if (n > guard_ || n < -guard_) throw IndexGuardExceeded(n, guard_);
    if (n >= 0) {
        while (highest_cached() < n) {
            const std::size_t top = forward_.size();
            forward_.push_back(params_.p() * forward_[top - 1] - params_.q() * forward_[top - 2]);
        }
        return forward_[static_cast<std::size_t>(n)];
    }
    while (lowest_cached() > n) {
        // w_{j} = (p w_{j+1} - w_{j+2}) / q
        const Index j = lowest_cached() - 1;
        const Scalar& next = term(j + 1);
        const Scalar& after = term(j + 2);
        backward_.push_back((params_.p() * next - after) * q_inverse_);
    }
    return backward_[static_cast<std::size_t>(-n - 1)];
}

namespace {

using Matrix = std::array<Scalar, 4>;  // row-major 2x2

Matrix multiply(const Matrix& l, const Matrix& r) {
    return {l[0] * r[0] + l[1] * r[2], l[0] * r[1] + l[1] * r[3],
            l[2] * r[0] + l[3] * r[2], l[2] * r[1] + l[3] * r[3]};
}

}  // namespace

Scalar term_fast(const HoradamParams& params, Index n, Index guard) {
    if (n > guard || n < -guard) throw IndexGuardExceeded(n, guard);
    if (n == 0) return params.a();
    if (n == 1) return params.b();

    // Forward step maps (w_{j+1}, w_j) to (w_{j+2}, w_{j+1}).
    Matrix base;
    std::uint64_t steps = 0;
    if (n > 0) {
        base = {params.p(), -params.q(), 1, 0};
        steps = static_cast<std::uint64_t>(n);
    } else {
        const Scalar q_inv = params.q().reciprocal();
        base = {0, 1, -q_inv, params.p() * q_inv};
        steps = static_cast<std::uint64_t>(-n);
    }

    Matrix power = {1, 0, 0, 1};
    while (steps != 0) {
        if (steps & 1U) power = multiply(power, base);
        steps >>= 1U;
        if (steps != 0) base = multiply(base, base);
    }
    // power * (w_1, w_0)^T = (w_{n+1}, w_n)^T
    return power[2] * params.b() + power[3] * params.a();
}

Scalar compute_e(const HoradamParams& params) {
    const Scalar& a = params.a();
    const Scalar& b = params.b();
    return params.p() * a * b - params.q() * a * a - b * b;
}

SequenceTriple::SequenceTriple(const HoradamParams& params, Index guard)
    : w(params, guard), u(params.fundamental(), guard), v(params.primordial(), guard), e(compute_e(params)) {}

std::string_view preset_name(PresetKind kind) {
    switch (kind) {
        case PresetKind::Fibonacci: return "fibonacci";
        case PresetKind::Lucas: return "lucas";
        case PresetKind::Pell: return "pell";
        case PresetKind::Jacobsthal: return "jacobsthal";
        case PresetKind::G: return "g";
        case PresetKind::U: return "u";
        case PresetKind::V: return "v";
        case PresetKind::Custom: return "custom";
    }
    return "custom";
}

std::size_t preset_arity(PresetKind kind) {
    switch (kind) {
        case PresetKind::G:
        case PresetKind::U:
        case PresetKind::V: return 2;
        case PresetKind::Custom: return 4;
        default: return 0;
    }
}

PresetKind preset_kind(std::string_view name) {
    for (auto kind : {PresetKind::Fibonacci, PresetKind::Lucas, PresetKind::Pell, PresetKind::Jacobsthal,
                      PresetKind::G, PresetKind::U, PresetKind::V, PresetKind::Custom}) {
        if (preset_name(kind) == name) return kind;
    }
    throw UnknownPreset(std::string(name));
}

HoradamParams PresetSpec::params() const {
    if (args.size() != preset_arity(kind)) {
        throw InvalidParams("preset '" + std::string(preset_name(kind)) + "' takes " +
                            std::to_string(preset_arity(kind)) + " arguments, got " + std::to_string(args.size()));
    }
    switch (kind) {
        case PresetKind::Fibonacci: return {0, 1, 1, -1};
        case PresetKind::Lucas: return {2, 1, 1, -1};
        case PresetKind::Pell: return {0, 1, 2, -1};
        case PresetKind::Jacobsthal: return {0, 1, 1, -2};
        case PresetKind::G: return {args[0], args[1], 1, -1};
        case PresetKind::U: return {1, args[0], args[0], args[1]};
        case PresetKind::V: return {2, args[0], args[0], args[1]};
        case PresetKind::Custom: return {args[0], args[1], args[2], args[3]};
    }
    throw UnknownPreset("?");
}

std::string PresetSpec::to_string() const {
    std::string out(preset_name(kind));
    if (args.empty()) return out;
    out += '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i != 0) out += ',';
        out += format_scalar(args[i]);
    }
    return out + ')';
}

PresetSpec parse_preset(std::string_view token) {
    const auto open = token.find('(');
    PresetSpec spec;
    spec.kind = preset_kind(token.substr(0, open));
    if (open != std::string_view::npos) {
        if (token.back() != ')') throw ParseError("expected ')'", token.size());
        std::size_t start = open + 1;
        const std::size_t end = token.size() - 1;
        while (start <= end) {
            std::size_t comma = token.find(',', start);
            if (comma == std::string_view::npos || comma > end) comma = end;
            try {
                spec.args.push_back(parse_scalar(token.substr(start, comma - start)));
            } catch (const ParseError& err) {
                throw ParseError("bad preset argument", start + err.position());
            }
            start = comma + 1;
        }
    }
    if (spec.args.size() != preset_arity(spec.kind)) {
        throw ParseError("preset '" + std::string(preset_name(spec.kind)) + "' takes " +
                             std::to_string(preset_arity(spec.kind)) + " arguments",
                         open == std::string_view::npos ? token.size() : open);
    }
    return spec;
}

SequenceTriple preset(const PresetSpec& spec, Index guard) { return SequenceTriple(spec.params(), guard); }

Scalar negative_index_u(SequenceTriple& triple, Index n) {
    const Scalar& q = triple.u.params().q();
    return -int_pow(q, 1 - n) * triple.u(n - 2);
}

Scalar negative_index_v(SequenceTriple& triple, Index n) {
    return int_pow(triple.v.params().q(), -n) * triple.v(n);
}

Scalar reflection_ratio(const HoradamParams& params, HoradamSequence& u, Index n) {
    const Scalar& a = params.a();
    const Scalar& b = params.b();
    Scalar denominator = a * u(n) + (b - params.p() * a) * u(n - 1);
    if (denominator.is_zero()) throw PreconditionUnmet("a*u_n+(b-p*a)*u_{n-1}!=0");
    return (a * u(n) - b * u(n - 1)) / denominator;
}

Scalar negative_index_w(SequenceTriple& triple, Index n) {
    const HoradamParams& params = triple.w.params();
    return int_pow(params.q(), -n) * reflection_ratio(params, triple.u, n) * triple.w(n);
}

}  // namespace horadam
