#include "horadam/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <exception>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "horadam/error.hpp"

namespace horadam {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string_view trim(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

/// Splits on commas outside parentheses.
std::vector<std::string> split_list(std::string_view text) {
    std::vector<std::string> items;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        const char c = i < text.size() ? text[i] : ',';
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            auto item = trim(text.substr(start, i - start));
            if (!item.empty()) items.emplace_back(item);
            start = i + 1;
        }
    }
    return items;
}

Index parse_index(std::string_view text, std::string_view key) {
    text = trim(text);
    Index value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw ConfigError("'" + std::string(key) + "': expected an integer, got '" + std::string(text) + "'");
    }
    return value;
}

IndexRange parse_range(std::string_view text, std::string_view key) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const Index v = parse_index(text, key);
        return {v, v};
    }
    return {parse_index(text.substr(0, dots), key), parse_index(text.substr(dots + 2), key)};
}

std::vector<IdentityId> parse_identity_list(std::string_view text) {
    std::vector<IdentityId> ids;
    for (const auto& name : split_list(text)) ids.push_back(identity(name));
    return ids;
}

struct TaskResult {
    IdentityTally tally{IdentityId(0)};
    std::exception_ptr error;
};

template <class F>
void for_each_instance(const GridSpec& spec, IndexSet used, F&& visit) {
    auto range_of = [&](IndexSet bit, const IndexRange& r) { return (used & bit) ? r : IndexRange{0, 0}; };
    const IndexRange m = range_of(kUsesM, spec.m_range);
    const IndexRange n = range_of(kUsesN, spec.n_range);
    const IndexRange r = range_of(kUsesR, spec.r_range);
    const IndexRange k = range_of(kUsesK, spec.k_range);
    for (Index im = m.lo; im <= m.hi; ++im)
        for (Index in = n.lo; in <= n.hi; ++in)
            for (Index ir = r.lo; ir <= r.hi; ++ir)
                for (Index ik = k.lo; ik <= k.hi; ++ik) visit(Indices{im, in, ir, ik});
}

void sweep(const GridSpec& spec, IdentityId id, const PresetSpec& set, IdentityTally& tally) {
    EvalContext ctx(set.params(), TermMode::Memoized, spec.index_guard);
    const std::string label = set.to_string();
    for_each_instance(spec, id.def().indices, [&](const Indices& ix) {
        CheckOutcome outcome;
        try {
            outcome = check(id, ctx, ix);
        } catch (const IndexGuardExceeded&) {
            outcome = PreconditionSkip{"index guard exceeded"};
        }
        if (std::holds_alternative<Pass>(outcome)) {
            ++tally.pass;
        } else if (const auto* skip = std::get_if<PreconditionSkip>(&outcome)) {
            ++tally.skip;
            ++tally.skip_reasons[skip->reason];
        } else {
            auto& bad = std::get<Violated>(outcome);
            ++tally.violation;
            if (tally.witnesses.size() < spec.witness_limit) {
                tally.witnesses.push_back({label, ix, std::move(bad.lhs), std::move(bad.rhs)});
            }
        }
    });
}

nlohmann::json indices_json(const Indices& ix, IndexSet used) {
    nlohmann::json out = nlohmann::json::object();
    if (used & kUsesM) out["m"] = ix.m;
    if (used & kUsesN) out["n"] = ix.n;
    if (used & kUsesR) out["r"] = ix.r;
    if (used & kUsesK) out["k"] = ix.k;
    return out;
}

}  // namespace

std::string IndexRange::to_string() const { return std::to_string(lo) + ".." + std::to_string(hi); }

void GridSpec::validate() const {
    for (const auto* range : {&m_range, &n_range, &r_range, &k_range}) {
        if (range->size() == 0) throw ConfigError("empty index range " + range->to_string());
    }
    if (k_range.lo < 0) throw ConfigError("k range must be non-negative, got " + k_range.to_string());
    if (index_guard <= 0) throw ConfigError("max_index must be positive");
}

std::vector<IdentityId> GridSpec::identities() const { return identity_filter ? *identity_filter : all_identities(); }

bool GridSpec::is_quarantined(IdentityId id) const {
    return std::find(quarantine.begin(), quarantine.end(), id) != quarantine.end();
}

GridSpec default_grid() {
    GridSpec spec;
    for (const char* token : {"fibonacci", "lucas", "pell", "jacobsthal", "g(3,7)", "custom(1,2,3,2)",
                              "custom(2,-1,1,-3)", "custom(1/2,3,-2,5)", "custom(1+1i,2,1+1i,-1i)"}) {
        spec.parameter_sets.push_back(parse_preset(token));
    }
    for (IdentityId id : all_identities()) {
        if (id.def().quarantined) spec.quarantine.push_back(id);
    }
    return spec;
}

GridSpec parse_grid_config(std::string_view text) {
    GridSpec spec = default_grid();
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        try {
            if (key == "params") {
                spec.parameter_sets.clear();
                for (const auto& token : split_list(value)) spec.parameter_sets.push_back(parse_preset(token));
            } else if (key == "m") {
                spec.m_range = parse_range(value, key);
            } else if (key == "n") {
                spec.n_range = parse_range(value, key);
            } else if (key == "r") {
                spec.r_range = parse_range(value, key);
            } else if (key == "k") {
                spec.k_range = parse_range(value, key);
            } else if (key == "identities") {
                spec.identity_filter = parse_identity_list(value);
            } else if (key == "quarantine") {
                spec.quarantine = parse_identity_list(value);
            } else if (key == "witness_limit") {
                spec.witness_limit = static_cast<std::size_t>(std::max<Index>(0, parse_index(value, key)));
            } else if (key == "jobs") {
                spec.jobs = static_cast<unsigned>(std::max<Index>(0, parse_index(value, key)));
            } else if (key == "max_index") {
                spec.index_guard = parse_index(value, key);
            } else {
                throw ConfigError("unknown key '" + key + "'");
            }
        } catch (const ConfigError& err) {
            throw ConfigError("line " + std::to_string(line_no) + ": " + err.what());
        } catch (const Error& err) {  // preset and scalar parse failures
            throw ConfigError("line " + std::to_string(line_no) + ": " + err.what());
        }
    }
    spec.validate();
    return spec;
}

GridSpec load_grid_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open grid config '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_grid_config(buffer.str());
}

std::size_t identity_cardinality(const GridSpec& spec, IdentityId id) {
    const IndexSet used = id.def().indices;
    std::size_t per_set = 1;
    if (used & kUsesM) per_set *= spec.m_range.size();
    if (used & kUsesN) per_set *= spec.n_range.size();
    if (used & kUsesR) per_set *= spec.r_range.size();
    if (used & kUsesK) per_set *= spec.k_range.size();
    std::size_t sets = 0;
    for (const auto& set : spec.parameter_sets) sets += applies(id.def(), set.params()) ? 1 : 0;
    return per_set * sets;
}

VerificationReport run_grid(const GridSpec& spec) {
    spec.validate();
    const auto start = Clock::now();
    const std::vector<IdentityId> ids = spec.identities();

    struct Task {
        std::size_t identity_slot;
        std::size_t set;
    };
    std::vector<Task> tasks;
    VerificationReport report;
    report.tallies.reserve(ids.size());
    for (std::size_t slot = 0; slot < ids.size(); ++slot) {
        IdentityTally tally{ids[slot]};
        tally.quarantined = spec.is_quarantined(ids[slot]);
        for (std::size_t s = 0; s < spec.parameter_sets.size(); ++s) {
            if (!applies(ids[slot].def(), spec.parameter_sets[s].params())) continue;
            ++tally.parameter_sets;
            tasks.push_back({slot, s});
        }
        report.grid_cardinality += identity_cardinality(spec, ids[slot]);
        report.tallies.push_back(std::move(tally));
    }

    std::vector<TaskResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < tasks.size(); t = next++) {
            auto& result = results[t];
            result.tally = IdentityTally{ids[tasks[t].identity_slot]};
            try {
                sweep(spec, ids[tasks[t].identity_slot], spec.parameter_sets[tasks[t].set], result.tally);
            } catch (...) {
                result.error = std::current_exception();
            }
        }
    };
    unsigned jobs = spec.jobs != 0 ? spec.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(tasks.size(), 1)));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    }

    // Merge in task order so the report does not depend on scheduling.
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        if (results[t].error) std::rethrow_exception(results[t].error);
        IdentityTally& into = report.tallies[tasks[t].identity_slot];
        IdentityTally& part = results[t].tally;
        into.pass += part.pass;
        into.skip += part.skip;
        into.violation += part.violation;
        for (const auto& [reason, count] : part.skip_reasons) into.skip_reasons[reason] += count;
        for (auto& w : part.witnesses) {
            if (into.witnesses.size() < spec.witness_limit) into.witnesses.push_back(std::move(w));
        }
    }
    report.wall_seconds = seconds_since(start);
    return report;
}

std::size_t VerificationReport::violations() const {
    std::size_t total = 0;
    for (const auto& t : tallies) total += t.quarantined ? 0 : t.violation;
    return total;
}

std::size_t VerificationReport::quarantined_violations() const {
    std::size_t total = 0;
    for (const auto& t : tallies) total += t.quarantined ? t.violation : 0;
    return total;
}

const IdentityTally* VerificationReport::find(std::string_view id) const {
    for (const auto& t : tallies) {
        if (t.id.name() == id) return &t;
    }
    return nullptr;
}

std::string VerificationReport::to_json() const {
    nlohmann::json doc;
    doc["grid_cardinality"] = grid_cardinality;
    doc["wall_seconds"] = wall_seconds;
    doc["violations"] = violations();
    doc["quarantined_violations"] = quarantined_violations();
    auto& list = doc["identities"] = nlohmann::json::array();
    for (const auto& t : tallies) {
        const IdentityDef& def = t.id.def();
        nlohmann::json entry{
            {"identity", def.id},
            {"anchor", def.anchor},
            {"quarantined", t.quarantined},
            {"parameter_sets", t.parameter_sets},
            {"pass", t.pass},
            {"skip", t.skip},
            {"violation", t.violation},
            {"skip_reasons", t.skip_reasons},
        };
        auto& witnesses = entry["witnesses"] = nlohmann::json::array();
        for (const auto& w : t.witnesses) {
            witnesses.push_back({{"params", w.params},
                                 {"indices", indices_json(w.indices, def.indices)},
                                 {"lhs", format_scalar(w.lhs)},
                                 {"rhs", format_scalar(w.rhs)}});
        }
        list.push_back(std::move(entry));
    }
    return doc.dump(2);
}

std::string VerificationReport::to_table() const {
    std::size_t width = 8;
    for (const auto& t : tallies) width = std::max(width, t.id.name().size());
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(width)) << "identity" << std::right << std::setw(6) << "sets"
        << std::setw(10) << "pass" << std::setw(10) << "skip" << std::setw(11) << "violation" << "\n";
    for (const auto& t : tallies) {
        out << std::left << std::setw(static_cast<int>(width)) << t.id.name() << std::right << std::setw(6)
            << t.parameter_sets << std::setw(10) << t.pass << std::setw(10) << t.skip << std::setw(11)
            << t.violation;
        if (t.quarantined) out << "  (quarantined)";
        out << "\n";
    }
    out << "identities: " << tallies.size() << "  instances: " << grid_cardinality
        << "  violations: " << violations() << "  quarantined violations: " << quarantined_violations()
        << "  wall: " << std::fixed << std::setprecision(2) << wall_seconds << "s\n";
    return out.str();
}

std::vector<BenchmarkRow> benchmark(IdentityId id, const HoradamParams& params, const std::vector<Index>& k_values,
                                    Indices base) {
    const IdentityDef& def = id.def();
    if (!applies(def, params)) throw PreconditionUnmet("applies to " + def.applies_to);
    std::vector<BenchmarkRow> rows;
    for (Index k : k_values) {
        if (k < 0) throw std::invalid_argument("k must be non-negative");
        Indices ix = base;
        ix.k = k;

        EvalContext sum_ctx(params, TermMode::Memoized, std::max<Index>(kDefaultIndexGuard, 4 * k + 64));
        if (def.guard) def.guard(sum_ctx, ix);
        auto t0 = Clock::now();
        Scalar lhs = def.lhs(sum_ctx, ix);
        const double sum_seconds = seconds_since(t0);

        EvalContext closed_ctx(params, TermMode::Fast, std::max<Index>(kDefaultIndexGuard, 4 * k + 64));
        if (def.guard) def.guard(closed_ctx, ix);
        t0 = Clock::now();
        Scalar rhs = def.rhs(closed_ctx, ix);
        const double closed_seconds = seconds_since(t0);

        BenchmarkRow row{.k = k, .equal = lhs == rhs};
        if (row.equal) {
            row.sum_seconds = sum_seconds;
            row.closed_seconds = closed_seconds;
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace horadam
