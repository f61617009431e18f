#include "horadam/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "horadam/error.hpp"
#include "horadam/identities.hpp"
#include "horadam/verify.hpp"

namespace horadam {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

struct ParamFlags {
    std::string preset;
    std::string a, b, p, q;
    CLI::Option* preset_opt = nullptr;
    CLI::Option* coeff_opts[4] = {};

    void attach(CLI::App& cmd) {
        preset_opt = cmd.add_option("--preset", preset, "fibonacci, lucas, pell, jacobsthal, g(a,b), u(p,q), v(p,q)");
        coeff_opts[0] = cmd.add_option("--a", a, "w_0");
        coeff_opts[1] = cmd.add_option("--b", b, "w_1");
        coeff_opts[2] = cmd.add_option("--p", p, "recurrence coefficient p");
        coeff_opts[3] = cmd.add_option("--q", q, "recurrence coefficient q");
    }

    HoradamParams resolve() const {
        const auto given = std::count_if(std::begin(coeff_opts), std::end(coeff_opts),
                                         [](const CLI::Option* o) { return o->count() > 0; });
        if (preset_opt->count() > 0) {
            if (given > 0) throw UsageError("--preset cannot be combined with --a/--b/--p/--q");
            return parse_preset(preset).params();
        }
        if (given != 4) throw UsageError("give --preset or all of --a --b --p --q");
        return HoradamParams(parse_scalar(a), parse_scalar(b), parse_scalar(p), parse_scalar(q));
    }
};

struct IndexFlags {
    Index values[4] = {};
    CLI::Option* opts[4] = {};
    static constexpr const char* kNames[4] = {"--m", "--n", "--r", "--k"};
    static constexpr IndexSet kBits[4] = {kUsesM, kUsesN, kUsesR, kUsesK};

    void attach(CLI::App& cmd, bool with_k = true) {
        for (int i = 0; i < 4; ++i) {
            if (i == 3 && !with_k) continue;
            opts[i] = cmd.add_option(kNames[i], values[i]);
        }
    }

    /// Rejects flags the identity does not use and demands the ones it does.
    Indices resolve(const IdentityDef& def, IndexSet ignore = 0) const {
        for (int i = 0; i < 4; ++i) {
            if (!opts[i] || (kBits[i] & ignore)) continue;
            const bool used = (def.indices & kBits[i]) != 0;
            if (used && opts[i]->count() == 0) {
                throw UsageError(def.id + " requires " + kNames[i]);
            }
            if (!used && opts[i]->count() > 0) {
                throw UsageError(def.id + " does not use " + std::string(kNames[i]) + " (indices: " +
                                 index_set_to_string(def.indices) + ")");
            }
        }
        return {values[0], values[1], values[2], values[3]};
    }
};

std::string describe(const Indices& ix, IndexSet used) {
    std::ostringstream out;
    const char* sep = "";
    auto put = [&](IndexSet bit, const char* name, Index v) {
        if (used & bit) {
            out << sep << name << "=" << v;
            sep = " ";
        }
    };
    put(kUsesM, "m", ix.m);
    put(kUsesN, "n", ix.n);
    put(kUsesR, "r", ix.r);
    put(kUsesK, "k", ix.k);
    return out.str();
}

int cmd_term(const ParamFlags& params, Index n, Index guard, std::ostream& out) {
    HoradamSequence seq(params.resolve(), guard);
    out << format_scalar(seq(n)) << "\n";
    return kExitOk;
}

int cmd_identities(std::ostream& out) {
    for (IdentityId id : all_identities()) {
        const IdentityDef& def = id.def();
        out << def.id << "\t" << def.anchor << "\t[" << index_set_to_string(def.indices) << "]\t"
            << (def.preconditions.empty() ? "none" : def.preconditions);
        if (!def.applies_to.empty()) out << "\tapplies to " << def.applies_to;
        if (def.quarantined) out << "\tquarantined";
        out << "\n";
    }
    return kExitOk;
}

int cmd_check(const std::string& name, const ParamFlags& params, const IndexFlags& flags, Index guard,
              std::ostream& out) {
    const IdentityId id = identity(name);
    const Indices ix = flags.resolve(id.def());
    EvalContext ctx(params.resolve(), TermMode::Memoized, guard);
    const CheckOutcome outcome = check(id, ctx, ix);
    if (const auto* pass = std::get_if<Pass>(&outcome)) {
        out << "PASS lhs=rhs=" << format_scalar(pass->value) << "\n";
        return kExitOk;
    }
    if (const auto* skip = std::get_if<PreconditionSkip>(&outcome)) {
        out << "SKIP precondition " << skip->reason << "\n";
        return kExitOk;
    }
    const auto& bad = std::get<Violated>(outcome);
    out << "FAIL lhs=" << format_scalar(bad.lhs) << " rhs=" << format_scalar(bad.rhs) << "\n";
    return kExitViolation;
}

struct VerifyFlags {
    std::string grid;
    std::string out_path;
    std::vector<std::string> quarantine;
    unsigned jobs = 0;
    std::size_t witness_limit = kDefaultWitnessLimit;
    CLI::Option* jobs_opt = nullptr;
    CLI::Option* witness_opt = nullptr;
    CLI::Option* max_index_opt = nullptr;
};

int cmd_verify(const VerifyFlags& flags, Index guard, std::ostream& out, std::ostream& err) {
    GridSpec spec = flags.grid.empty() ? default_grid() : load_grid_config(flags.grid);
    for (const auto& name : flags.quarantine) {
        const IdentityId id = identity(name);
        if (!spec.is_quarantined(id)) spec.quarantine.push_back(id);
    }
    if (flags.jobs_opt->count() > 0) spec.jobs = flags.jobs;
    if (flags.witness_opt->count() > 0) spec.witness_limit = flags.witness_limit;
    if (flags.max_index_opt->count() > 0) spec.index_guard = guard;

    const VerificationReport report = run_grid(spec);
    out << report.to_table();
    if (!flags.out_path.empty()) {
        std::ofstream file(flags.out_path);
        if (!file) throw ConfigError("cannot write '" + flags.out_path + "'");
        file << report.to_json() << "\n";
    }
    for (const auto& t : report.tallies) {
        if (t.violation == 0 || t.quarantined) continue;
        for (const auto& w : t.witnesses) {
            err << "violation " << t.id.name() << " " << w.params << " " << describe(w.indices, t.id.def().indices)
                << " lhs=" << format_scalar(w.lhs) << " rhs=" << format_scalar(w.rhs) << "\n";
        }
    }
    return report.ok() ? kExitOk : kExitViolation;
}

int cmd_bench(const std::string& name, const ParamFlags& params, const IndexFlags& flags,
              const std::vector<Index>& k_values, std::ostream& out, std::ostream& err) {
    const IdentityId id = identity(name);
    if ((id.def().indices & kUsesK) == 0) throw UsageError(name + " has no summation length k to benchmark");
    const Indices base = flags.resolve(id.def(), kUsesK);
    const auto rows = benchmark(id, params.resolve(), k_values, base);

    out << std::setw(10) << "k" << std::setw(14) << "sum_s" << std::setw(14) << "closed_s" << std::setw(12)
        << "speedup" << "  equal\n";
    int code = kExitOk;
    for (const auto& row : rows) {
        out << std::setw(10) << row.k;
        if (row.equal) {
            out << std::scientific << std::setprecision(3) << std::setw(14) << row.sum_seconds << std::setw(14)
                << row.closed_seconds << std::fixed << std::setprecision(1) << std::setw(12) << row.speedup()
                << "  yes\n";
        } else {
            out << std::setw(14) << "-" << std::setw(14) << "-" << std::setw(12) << "-" << "  no\n";
            err << "sides differ at k=" << row.k << "; no timing reported\n";
            code = kExitViolation;
        }
    }
    return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact checks of weighted Horadam-sequence sums", "horadam-cli"};
    app.require_subcommand(1, 1);
    Index guard = kDefaultIndexGuard;

    auto* term = app.add_subcommand("term", "print w_n for a parameter set");
    ParamFlags term_params;
    term_params.attach(*term);
    Index term_n = 0;
    term->add_option("--n", term_n, "index")->required();
    term->add_option("--max-index", guard, "largest |n| the term store will reach");

    auto* identities = app.add_subcommand("identities", "list the identity catalog");

    auto* chk = app.add_subcommand("check", "evaluate one identity instance");
    std::string check_id;
    ParamFlags check_params;
    IndexFlags check_indices;
    chk->add_option("--id", check_id, "identity id (see `identities`)")->required();
    check_params.attach(*chk);
    check_indices.attach(*chk);
    chk->add_option("--max-index", guard, "largest |n| the term store will reach");

    auto* verify = app.add_subcommand("verify", "sweep the identity grid");
    VerifyFlags verify_flags;
    verify->add_option("--grid", verify_flags.grid, "grid config file (default grid when omitted)");
    verify->add_option("--out", verify_flags.out_path, "write the JSON report here");
    verify->add_option("--quarantine", verify_flags.quarantine, "identity ids reported separately")->delimiter(',');
    verify_flags.jobs_opt = verify->add_option("--jobs", verify_flags.jobs, "worker threads (0: all cores)");
    verify_flags.witness_opt = verify->add_option("--witness-limit", verify_flags.witness_limit,
                                                  "failure witnesses kept per identity");
    verify_flags.max_index_opt = verify->add_option("--max-index", guard, "largest |n| the term store will reach");

    auto* bench = app.add_subcommand("bench", "time the summation side against the closed form");
    std::string bench_id;
    ParamFlags bench_params;
    IndexFlags bench_indices;
    std::vector<Index> bench_k{1000, 10000};
    bench->add_option("--id", bench_id, "identity id")->required();
    bench_params.attach(*bench);
    bench_indices.attach(*bench, false);
    bench->add_option("--k", bench_k, "comma-separated summation lengths")->delimiter(',');

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (term->parsed()) return cmd_term(term_params, term_n, guard, out);
        if (identities->parsed()) return cmd_identities(out);
        if (chk->parsed()) return cmd_check(check_id, check_params, check_indices, guard, out);
        if (verify->parsed()) return cmd_verify(verify_flags, guard, out, err);
        if (bench->parsed()) return cmd_bench(bench_id, bench_params, bench_indices, bench_k, out, err);
    } catch (const PreconditionUnmet& e) {
        err << "error: precondition " << e.tag() << " is not met\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace horadam
