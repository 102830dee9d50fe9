#pragma once

#include <zerosum/zerosum.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace zerosum::cli {

enum Exit : int { kOk = 0, kFails = 1, kUsage = 2, kCapped = 3 };

namespace detail {

struct Output {
    std::optional<std::string> json_path;  // set: JSON requested; empty string means stdout
    std::optional<std::string> csv_path;

    void attach(CLI::App* app, bool csv) {
        app->add_option_function<std::string>("--json", [this](const std::string& p) { json_path = p; }, "emit JSON (to file if given)")
            ->expected(0, 1);
        if (csv)
            app->add_option_function<std::string>("--csv", [this](const std::string& p) { csv_path = p; }, "emit CSV (to file if given)")
                ->expected(0, 1);
    }

    /// JSON/CSV to a file leaves the text report on stdout.
    void emit(std::ostream& out, const std::string& text, const json& j, const std::string& csv = {}) const {
        bool text_needed = true;
        auto write = [&](const std::optional<std::string>& path, const std::string& body) {
            if (!path) return;
            if (path->empty()) {
                out << body;
                text_needed = false;
                return;
            }
            std::ofstream f(*path);
            if (!f) fail(ErrorCode::ParseError, "cannot write " + *path);
            f << body;
        };
        write(json_path, j.dump(2) + "\n");
        write(csv_path, csv);
        if (text_needed) out << text;
    }
};

struct DomainFlags {
    std::optional<std::int64_t> wlen, wlen_min, wlen_max, slen_extra, max_order;
    std::int64_t set_min = 2, set_max = 4, nsets = 2, samples = 0, weight_samples = 200, max_failures = -1;
    std::int64_t instance_cap = 50'000'000;
    std::uint64_t seed = 1;
    bool no_symmetry = false;

    void attach(CLI::App* app) {
        app->add_option("--wlen", wlen, "weight length (sets both bounds)");
        app->add_option("--wlen-min", wlen_min, "smallest weight length");
        app->add_option("--wlen-max", wlen_max, "largest weight length");
        app->add_option("--slen-extra", slen_extra, "extra sequence length beyond the minimal one");
        app->add_option("--max-order", max_order, "all isomorphism types up to this order");
        app->add_option("--set-min", set_min, "smallest set size");
        app->add_option("--set-max", set_max, "largest set size");
        app->add_option("--nsets", nsets, "number of summand sets");
        app->add_option("--samples", samples, "pseudorandom sequences per weight choice (0 = exhaustive)");
        app->add_option("--weight-samples", weight_samples, "weight draws when the weight space is too large to enumerate");
        app->add_option("--seed", seed, "sampling seed");
        app->add_option("--max-failures", max_failures, "failures kept in the report (< 0 keeps all)");
        app->add_option("--cap-instances", instance_cap, "abort when the domain is larger");
        app->add_flag("--no-symmetry", no_symmetry, "disable translation reduction");
    }
};

struct Common {
    std::string group;
    int threads = 0;
    Index davenport_cap = kDefaultDavenportCap;
    std::int64_t search_cap = verify::kDefaultSearchCap;
    std::string modulus = "order";
};

inline std::vector<Group> parse_group_list(const std::string& s) {
    std::vector<Group> out;
    for (auto part : zerosum::detail::split_top(s, ',')) out.push_back(parse_group(part));
    return out;
}

inline std::string set_text(const GSet& s) { return s.to_string(); }

inline json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) fail(ErrorCode::ParseError, "cannot read " + path);
    try {
        return json::parse(f);
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, path + ": " + e.what());
    }
}

inline int status_exit(Status s) {
    switch (s) {
        case Status::Fails: return kFails;
        case Status::UndecidedCapped: return kCapped;
        default: return kOk;
    }
}

inline bool needs_instance_data(verify::StatementId id) {
    using verify::StatementId;
    return id != StatementId::LEM_DSTAR_SUBADD && id != StatementId::PROP_DUAL && id != StatementId::PROP_ALIGN;
}

}  // namespace detail

/// Runs one command line (argv without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace verify;
    CLI::App app{"Weighted zero-sum computations over finite abelian groups", "zerosum"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "zerosum 1.0");

    detail::Common c;
    detail::Output o;
    detail::DomainFlags dom;
    std::string seq, weights, seq_prime, set_a, set_b, a0, subgroup, instance_file, mode, statement;
    std::vector<std::string> sets;
    std::optional<std::int64_t> n, t, h;
    std::int64_t cap = -1;
    bool all = false;

    auto add_group = [&](CLI::App* s, bool required) {
        auto* opt = s->add_option("--group", c.group, "group spec, e.g. c2xc4");
        if (required) opt->required();
    };
    auto add_threads = [&](CLI::App* s) {
        s->add_option("--threads", c.threads, "worker threads (default: ZEROSUM_THREADS or hardware)");
    };

    auto* info_cmd = app.add_subcommand("group-info", "order, exponent, d* and subgroup count");
    add_group(info_cmd, true);
    o.attach(info_cmd, false);

    auto* sumset_cmd = app.add_subcommand("sumset", "sum of sets, optionally weighted");
    add_group(sumset_cmd, true);
    sumset_cmd->add_option("--set", sets, "set literal, e.g. \"{0,1}\"; repeat for each summand")->required();
    sumset_cmd->add_option("--weights", weights, "one weight per set");
    o.attach(sumset_cmd, false);

    auto* sigma_cmd = app.add_subcommand("sigma", "weighted subsequence sums");
    add_group(sigma_cmd, true);
    sigma_cmd->add_option("--seq", seq, "sequence literal, e.g. \"0^3,1^3,2^3\"")->required();
    sigma_cmd->add_option("--weights", weights, "weight literal, e.g. \"1^1,-1^1,0^1\"")->required();
    sigma_cmd->add_option("--n", n, "subsequence length");
    sigma_cmd->add_option("--mode", mode, "n | upto | from | all (default: n when --n is given, else all)")
        ->check(CLI::IsMember({"n", "upto", "from", "all"}));
    o.attach(sigma_cmd, true);

    auto* part_cmd = app.add_subcommand("setpartition", "balanced or enumerated n-setpartitions");
    add_group(part_cmd, true);
    part_cmd->add_option("--seq", seq, "sequence literal")->required();
    part_cmd->add_option("--n", n, "number of blocks")->required();
    part_cmd->add_flag("--all", all, "enumerate every setpartition up to block order");
    part_cmd->add_option("--cap", cap, "enumeration cap");
    o.attach(part_cmd, false);

    auto* inv_cmd = app.add_subcommand("invariants", "d*(G), D(G) and ell(G)");
    add_group(inv_cmd, true);
    inv_cmd->add_option("--davenport-cap", c.davenport_cap, "largest order for exact D(G)");
    add_threads(inv_cmd);
    o.attach(inv_cmd, false);

    auto add_check_flags = [&](CLI::App* s) {
        s->add_option("--statement", statement, "statement id, e.g. CONJ_HAMIDOUNE")->required();
        s->add_option("--davenport-cap", c.davenport_cap, "largest order for exact D(G)");
        s->add_option("--cap-search", c.search_cap, "witness search budget");
        s->add_option("--modulus", c.modulus, "order | exponent")->check(CLI::IsMember({"order", "exponent"}));
        add_threads(s);
        dom.attach(s);
        o.attach(s, true);
    };

    auto* verify_cmd = app.add_subcommand("verify", "check one instance, or sweep when no instance data is given");
    add_group(verify_cmd, false);
    add_check_flags(verify_cmd);
    verify_cmd->add_option("--seq", seq, "sequence S");
    verify_cmd->add_option("--weights", weights, "weights W");
    verify_cmd->add_option("--n", n, "length n");
    verify_cmd->add_option("--seq-prime", seq_prime, "second sequence S'");
    verify_cmd->add_option("--set-a", set_a, "set A");
    verify_cmd->add_option("--set-b", set_b, "set B");
    verify_cmd->add_option("--a0", a0, "element a0 of A");
    verify_cmd->add_option("--subgroup", subgroup, "subgroup given by its element set");
    verify_cmd->add_option("--t", t, "t for COR_HAM_VAR");
    verify_cmd->add_option("--height", h, "h for COR_SPUD");
    verify_cmd->add_option("--sets", sets, "sets for AP_STRUCT; repeat");
    verify_cmd->add_option("--instance", instance_file, "instance JSON file");

    auto* sweep_cmd = app.add_subcommand("sweep", "exhaustive or sampled sweep of a statement");
    add_group(sweep_cmd, false);
    add_check_flags(sweep_cmd);

    auto* repro_cmd = app.add_subcommand("reproduce-examples", "EX1 at p = 7, 11 and EX2 at 2^r = 4, 8 with exact missing sets");
    o.attach(repro_cmd, false);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    auto domain_of = [&](StatementId id) {
        (void)id;
        SweepDomain d;
        if (!c.group.empty()) d.groups = detail::parse_group_list(c.group);
        else if (dom.max_order) d.max_order = *dom.max_order;
        else fail(ErrorCode::MissingField, "sweep needs --group or --max-order");
        d.wlen_min = dom.wlen ? dom.wlen : dom.wlen_min;
        d.wlen_max = dom.wlen ? dom.wlen : dom.wlen_max;
        d.slen_extra = dom.slen_extra;
        d.set_min = dom.set_min;
        d.set_max = dom.set_max;
        d.nsets = dom.nsets;
        d.samples = dom.samples;
        d.weight_samples = dom.weight_samples;
        d.seed = dom.seed;
        d.symmetry = !dom.no_symmetry;
        d.instance_cap = dom.instance_cap;
        d.search_cap = c.search_cap;
        d.modulus = parse_modulus(c.modulus);
        d.davenport_cap = c.davenport_cap;
        d.max_failures = dom.max_failures;
        return d;
    };

    auto run_sweep = [&](StatementId id) {
        const SweepReport r = sweep(id, domain_of(id), c.threads);
        const json j = r.to_json();
        std::ostringstream text;
        text << "statement: " << name(id) << "\n"
             << "instances: " << r.counts.total() << "\n"
             << "holds: " << r.counts.holds << "\n"
             << "fails: " << r.counts.fails << "\n"
             << "hypothesis_not_met: " << r.counts.hyp_not_met << "\n"
             << "undecided_capped: " << r.counts.undecided << "\n";
        for (std::size_t i = 0; i < r.failures.size(); ++i)
            text << "failure " << i + 1 << ": " << r.failures[i].first.to_json().dump() << "\n";
        std::ostringstream csv;
        csv << "statement,instances,holds,fails,hyp_not_met,undecided\n"
            << name(id) << ',' << r.counts.total() << ',' << r.counts.holds << ',' << r.counts.fails << ','
            << r.counts.hyp_not_met << ',' << r.counts.undecided << "\n";
        o.emit(out, text.str(), j, csv.str());
        if (r.counts.fails) return static_cast<int>(kFails);
        return r.counts.undecided ? static_cast<int>(kCapped) : static_cast<int>(kOk);
    };

    try {
        if (info_cmd->parsed()) {
            const Group G = parse_group(c.group);
            const auto lat = subgroup_lattice(G);
            json j = group_json(G);
            j["dstar"] = dstar(G);
            j["subgroups"] = lat->size();
            std::ostringstream text;
            text << "group: " << G.spec() << "\norder: " << G.order() << "\nexponent: " << G.exponent()
                 << "\nrank: " << G.rank() << "\ndstar: " << dstar(G) << "\nsubgroups: " << lat->size() << "\n";
            o.emit(out, text.str(), j);
            return kOk;
        }
        if (sumset_cmd->parsed()) {
            const Group G = parse_group(c.group);
            std::vector<GSet> parts;
            for (auto& s : sets) parts.push_back(parse_gset(G, s));
            GSet total(G);
            json j{{"group", G.spec()}};
            if (!weights.empty()) {
                const WeightSeq w = parse_weights(G, weights);
                if (w.size() != parts.size()) fail(ErrorCode::LengthMismatch, "need one weight per set");
                total = partition_wsum(w, Setpartition{parts});
                j["weights"] = weights_json(w);
            } else {
                total = sumset(parts);
            }
            j["sets"] = json::array();
            for (auto& p : parts) j["sets"].push_back(gset_json(p));
            j["sum"] = gset_json(total);
            j["size"] = total.size();
            o.emit(out, total.to_string() + "\n", j);
            return kOk;
        }
        if (sigma_cmd->parsed()) {
            const Group G = parse_group(c.group);
            const GSequence S = parse_sequence(G, seq);
            const WeightSeq W = parse_weights(G, weights);
            if (mode.empty()) mode = n ? "n" : "all";
            if (mode != "all" && !n) fail(ErrorCode::BadN, "--mode " + mode + " needs --n");
            GSet r(G);
            if (mode == "n") r = sigma_n(W, S, *n);
            else if (mode == "upto") r = sigma_upto(W, S, *n);
            else if (mode == "from") r = sigma_from(W, S, *n);
            else r = sigma_all(W, S);
            json j{{"group", G.spec()}, {"W", weights_json(W)}, {"S", sequence_json(S)}, {"mode", mode}};
            if (n) j["n"] = *n;
            j["sigma"] = gset_json(r);
            std::string csv = "element\n";
            for (auto& e : r.element_strings()) csv += "\"" + e + "\"\n";
            o.emit(out, r.to_string() + "\n", j, csv);
            return kOk;
        }
        if (part_cmd->parsed()) {
            const Group G = parse_group(c.group);
            const GSequence S = parse_sequence(G, seq);
            std::vector<Setpartition> ps;
            if (all) ps = enum_setpartitions(S, *n, cap);
            else ps.push_back(balanced_setpartition(S, *n));
            json j{{"group", G.spec()}, {"S", sequence_json(S)}, {"n", *n}, {"setpartitions", json::array()}};
            std::string text;
            for (auto& p : ps) {
                j["setpartitions"].push_back(setpartition_json(p));
                text += p.to_string() + "\n";
            }
            o.emit(out, text, j);
            return kOk;
        }
        if (inv_cmd->parsed()) {
            const Group G = parse_group(c.group);
            const InvariantReport r = invariants(G, c.davenport_cap, resolve_threads(c.threads));
            json j{{"group", G.spec()}, {"order", G.order()}, {"dstar", r.dstar}};
            j["davenport"] = r.davenport ? json(*r.davenport) : json(nullptr);
            j["ell"] = r.ell ? json(*r.ell) : json(nullptr);
            j["witness_zsf"] = r.witness_zsf ? json(r.witness_zsf->to_string()) : json(nullptr);
            std::ostringstream text;
            text << "group: " << G.spec() << "\ndstar: " << r.dstar << "\n";
            int code = kOk;
            if (r.davenport) {
                const bool ok = r.dstar + 1 <= *r.davenport && *r.davenport <= static_cast<std::int64_t>(G.order());
                j["bounds"] = ok ? "holds" : "fails";
                text << "davenport: " << *r.davenport << "\nell: " << *r.ell << "\nwitness_zsf: " << r.witness_zsf->to_string()
                     << "\nbounds: " << (ok ? "holds" : "fails") << "\n";
                if (!ok) code = kFails;
            } else {
                text << "davenport: above cap " << c.davenport_cap << "\n";
            }
            o.emit(out, text.str(), j);
            return code;
        }
        if (repro_cmd->parsed()) {
            json j = json::array();
            std::ostringstream text;
            int code = kOk;
            auto report = [&](const char* label, StatementId id, const Instance& in) {
                const Verdict v = check_instance(id, in);
                const json& w = v.witness;
                j.push_back(json{{"example", label},
                                 {"group", in.group.spec()},
                                 {"W", weights_json(*in.W)},
                                 {"S", in.S->to_string()},
                                 {"n", in.W->size()},
                                 {"sigma", w.value("sigma", json::array())},
                                 {"missing", w.value("missing", json::array())},
                                 {"status", to_string(v.status)}});
                GSet sig = gset_from_json(in.group, w.value("sigma", json::array()));
                text << label << " " << in.group.spec() << ": Sigma_" << in.W->size() << "(W,S) = " << sig.to_string()
                     << ", missing " << sig.complement().to_string() << " [" << to_string(v.status) << "]\n";
                if (v.status != Status::Holds) code = kFails;
            };
            for (std::int64_t p : {7, 11}) report("EX1", StatementId::EX1, example1_instance(p));
            for (int r : {2, 3}) report("EX2", StatementId::EX2, example2_instance(r));
            o.emit(out, text.str(), j);
            return code;
        }

        const StatementId id = parse_statement(statement);
        if (sweep_cmd->parsed()) return run_sweep(id);

        // verify: a single instance when data is supplied, else a sweep over the domain.
        const bool has_data = !seq.empty() || !set_a.empty() || !sets.empty() || !instance_file.empty();
        if (detail::needs_instance_data(id) && !has_data) return run_sweep(id);

        Instance in;
        if (!instance_file.empty()) {
            in = Instance::from_json(detail::read_json_file(instance_file));
        } else {
            if (c.group.empty()) fail(ErrorCode::MissingField, "verify needs --group or --instance");
            in = Instance(parse_group(c.group));
            const Group& G = in.group;
            if (!seq.empty()) in.S = parse_sequence(G, seq);
            if (!weights.empty()) in.W = parse_weights(G, weights);
            in.n = n;
            if (!seq_prime.empty()) in.S_prime = parse_sequence(G, seq_prime);
            if (!set_a.empty()) in.A = parse_gset(G, set_a);
            if (!set_b.empty()) in.B = parse_gset(G, set_b);
            if (!a0.empty()) in.a0 = G.parse_element(a0);
            if (!subgroup.empty()) in.H = as_subgroup(parse_gset(G, subgroup));
            in.t = t;
            in.h = h;
            if (!sets.empty()) {
                in.sets.emplace();
                for (auto& s : sets) in.sets->push_back(parse_gset(G, s));
            }
            in.modulus = parse_modulus(c.modulus);
        }
        const Verdict v = check_instance(id, in, CheckOptions{c.search_cap, c.davenport_cap});
        json j{{"statement", std::string(name(id))}, {"instance", in.to_json()}, {"verdict", v.to_json()},
               {"registry_anchor", std::string(info(id).anchor)}};
        std::ostringstream text;
        text << "statement: " << name(id) << "\nstatus: " << to_string(v.status) << "\nwitness: " << v.witness.dump() << "\n";
        o.emit(out, text.str(), j, "statement,status\n" + std::string(name(id)) + "," + to_string(v.status) + "\n");
        return detail::status_exit(v.status);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::CapExceeded:
            case ErrorCode::GroupTooLarge:
            case ErrorCode::DomainTooLarge: return kCapped;
            default: return kUsage;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace zerosum::cli
