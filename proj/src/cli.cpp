#include "bip/cli.hpp"

#include "bip/check.hpp"
#include "bip/error.hpp"
#include "bip/json.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace bip {

namespace {

std::vector<int> parse_generators(const std::string& text)
{
    std::vector<int> gens;
    if (text.empty() || text == "-")
        return gens;
    std::string token;
    auto flush = [&] {
        if (token.empty())
            throw PreconditionViolated("malformed generator list: " + text);
        gens.push_back(std::stoi(token));
        token.clear();
    };
    const bool commas = text.find(',') != std::string::npos;
    for (char c : text) {
        if (c == ',') {
            flush();
        } else if (c >= '0' && c <= '9') {
            token += c;
            if (!commas)
                flush();
        } else {
            throw PreconditionViolated("malformed generator list: " + text);
        }
    }
    if (commas)
        flush();
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
}

struct Options
{
    int n = 0;
    std::uint64_t seed = 1;
    int workers = 1;
    long long sample = -1;
    bool json_out = false;
    bool dot = false;
    bool reduced = false;
    bool timing = false;
};

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Bruhat interval polytopes, computed combinatorially", "bip"};
    app.require_subcommand(1);
    Options opt;
    auto common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", opt.json_out, "JSON output (default)");
        cmd->add_flag("--dot", opt.dot, "DOT output where supported");
    };

    std::string w_text, u_text, v_text, x_text, gens_text, theorem, oracle_kind;

    auto* interval = app.add_subcommand("interval", "Bruhat interval [e,w]");
    interval->add_option("w", w_text)->required();
    common(interval);

    auto* skeleton = app.add_subcommand("skeleton", "Edges of Q_w as the poset P_w");
    skeleton->add_option("w", w_text)->required();
    common(skeleton);

    auto* gamma_cmd = app.add_subcommand("gamma", "The graph Gamma~_w(u), or Gamma_w(u) with --reduced");
    gamma_cmd->add_option("w", w_text)->required();
    gamma_cmd->add_option("u", u_text)->required();
    gamma_cmd->add_flag("--reduced", opt.reduced, "Transitive reduction");
    common(gamma_cmd);

    auto* class_cmd = app.add_subcommand("class", "Equivalence class [x]_w");
    class_cmd->add_option("w", w_text)->required();
    class_cmd->add_option("x", x_text)->required();
    common(class_cmd);

    auto* join_cmd = app.add_subcommand("join", "Join in P_w");
    auto* meet_cmd = app.add_subcommand("meet", "Meet in P_w");
    for (auto* cmd : {join_cmd, meet_cmd}) {
        cmd->add_option("w", w_text)->required();
        cmd->add_option("u", u_text)->required();
        cmd->add_option("v", v_text)->required();
        common(cmd);
    }

    auto* mwi = app.add_subcommand("mwi", "Bruhat maximum of S_n(I) in [e,w]");
    mwi->add_option("w", w_text)->required();
    mwi->add_option("I", gens_text, "Generator indices, e.g. 1,3 or 13")->required();
    common(mwi);

    auto* mixed = app.add_subcommand("mixed-meet", "Bruhat maximum of [e,u]_R and [e,v]");
    mixed->add_option("u", u_text)->required();
    mixed->add_option("v", v_text)->required();
    common(mixed);

    auto* hvector = app.add_subcommand("hvector", "f- and h-vectors of Q_w");
    hvector->add_option("w", w_text)->required();
    common(hvector);

    auto* smooth = app.add_subcommand("smooth", "Smoothness of the generic torus orbit closure");
    smooth->add_option("w", w_text)->required();
    common(smooth);

    auto* chains = app.add_subcommand("chains", "Number of maximal chains of P_w");
    chains->add_option("w", w_text)->required();
    common(chains);

    auto* oracle = app.add_subcommand("oracle", "Exact convex hull computations");
    oracle->add_option("kind", oracle_kind)->required()->check(CLI::IsMember({"edges", "faces"}));
    oracle->add_option("w", w_text)->required();
    common(oracle);

    auto* check_cmd = app.add_subcommand("check", "Verify a theorem over all or sampled w");
    check_cmd->add_option("theorem", theorem)->required();
    check_cmd->add_option("--n", opt.n, "Largest rank");
    check_cmd->add_option("--seed", opt.seed, "Sampling seed");
    check_cmd->add_option("--workers", opt.workers, "Worker threads")->check(CLI::Range(1, 256));
    check_cmd->add_option("--sample", opt.sample, "Instances per sampled rank")->check(CLI::NonNegativeNumber);
    check_cmd->add_flag("--timing", opt.timing, "Include wall time in the report");
    common(check_cmd);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    auto P = [](const std::string& s) { return Permutation::parse(s); };
    auto dot_unsupported = [&](const char* name) {
        if (opt.dot)
            throw PreconditionViolated(std::string("--dot is not available for ") + name);
    };
    if (opt.dot && opt.json_out) {
        err << "--dot and --json are exclusive\n";
        return kExitUsage;
    }

    try {
        if (interval->parsed()) {
            const auto poset = bruhat_lower_interval(P(w_text));
            if (opt.dot)
                out << to_dot(poset, "[e," + poset.top.to_string() + "]");
            else
                emit(out, to_json(poset));
        } else if (skeleton->parsed()) {
            const Skeleton sk(P(w_text));
            if (opt.dot)
                out << to_dot(sk.poset(), "P_" + sk.w().to_string());
            else
                emit(out, to_json(sk));
        } else if (gamma_cmd->parsed()) {
            const auto w = P(w_text);
            const auto u = P(u_text);
            const auto g = opt.reduced ? gamma(w, u) : gamma_tilde(w, u);
            const std::string name = std::string(opt.reduced ? "Gamma" : "Gamma~") + "_" + w.to_string() + "(" +
                                     u.to_string() + ")";
            if (opt.dot) {
                out << to_dot(g, name);
            } else {
                auto j = to_json(g);
                j["w"] = w.to_string();
                j["u"] = u.to_string();
                emit(out, j);
            }
        } else if (class_cmd->parsed()) {
            dot_unsupported("class");
            const auto c = theta_class(P(w_text), P(x_text));
            auto j = to_json(c);
            j["x"] = P(x_text).to_string();
            emit(out, j);
        } else if (join_cmd->parsed() || meet_cmd->parsed()) {
            dot_unsupported(join_cmd->parsed() ? "join" : "meet");
            const auto w = P(w_text);
            const ThetaStructure ts(w);
            const bool is_join = join_cmd->parsed();
            const auto r = is_join ? ts.join(P(u_text), P(v_text)) : ts.meet(P(u_text), P(v_text));
            emit(out, {{"w", w.to_string()},
                       {"u", P(u_text).to_string()},
                       {"v", P(v_text).to_string()},
                       {is_join ? "join" : "meet", r.to_string()}});
        } else if (mwi->parsed()) {
            dot_unsupported("mwi");
            const auto w = P(w_text);
            const auto gens = parse_generators(gens_text);
            for (int i : gens)
                if (i < 1 || i >= w.rank())
                    throw PreconditionViolated("generator index out of range: " + std::to_string(i));
            emit(out, {{"w", w.to_string()}, {"I", gens}, {"m", parabolic_max(w, gens).to_string()}});
        } else if (mixed->parsed()) {
            dot_unsupported("mixed-meet");
            emit(out, {{"u", P(u_text).to_string()},
                       {"v", P(v_text).to_string()},
                       {"mixed_meet", mixed_meet(P(u_text), P(v_text)).to_string()}});
        } else if (hvector->parsed()) {
            dot_unsupported("hvector");
            emit(out, face_vector_json(Skeleton(P(w_text))));
        } else if (smooth->parsed()) {
            dot_unsupported("smooth");
            const auto w = P(w_text);
            const auto s = is_smooth_generic_orbit(w);
            auto j = to_json(s);
            j["w"] = w.to_string();
            j["smooth"] = s.at_w;
            emit(out, j);
        } else if (chains->parsed()) {
            dot_unsupported("chains");
            const auto w = P(w_text);
            emit(out, {{"w", w.to_string()}, {"chains", maximal_chain_count(w).str()}});
        } else if (oracle->parsed()) {
            dot_unsupported("oracle");
            const auto w = P(w_text);
            if (oracle_kind == "edges")
                emit(out, to_json(oracle_edges(w), w));
            else
                emit(out, to_json(face_lattice(w), w));
        } else if (check_cmd->parsed()) {
            dot_unsupported("check");
            CheckOptions co;
            if (opt.n > 0)
                co.n_max = opt.n;
            co.seed = opt.seed;
            co.workers = opt.workers;
            if (opt.sample >= 0)
                co.sample = opt.sample;
            const auto report = check(theorem, co);
            emit(out, to_json(report, opt.timing));
            return report.pass() ? kExitOk : kExitVerificationFailed;
        }
    } catch (const InternalDisagreement& e) {
        err << "verification failed: " << e.what() << '\n';
        return kExitVerificationFailed;
    } catch (const CriteriaDisagree& e) {
        err << "verification failed: " << e.what() << '\n';
        return kExitVerificationFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

} // namespace bip
