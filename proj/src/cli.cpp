#include "mall/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mall/bdd.hpp"
#include "mall/bdd_slicing.hpp"
#include "mall/error.hpp"
#include "mall/export.hpp"
#include "mall/proof.hpp"
#include "mall/reductions.hpp"
#include "mall/slicing.hpp"

namespace mall::cli {

namespace {

struct UsageError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

enum class Format { Json, Dot, Text };

struct Settings {
    bool oracle = false;
    std::size_t max_vars = 22;
    std::size_t max_withs = 20;
    Format format = Format::Json;
    bool exit_status = true;
    bool local = false;
    std::string order;
};

// An argument naming an existing file is read from disk; anything else is
// taken as inline text.
std::string load(const std::string &arg) {
    std::error_code ec;
    if(!std::filesystem::is_regular_file(arg, ec))
        return arg;
    std::ifstream in(arg, std::ios::binary);
    if(!in)
        throw IoError("cannot read " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    if(in.bad())
        throw IoError("cannot read " + arg);
    return buf.str();
}

OrdInstance load_instance(const std::string &arg) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(load(arg));
    } catch(const nlohmann::json::parse_error &e) {
        throw ParseError(e.byte, "invalid line graph JSON");
    }
    return ord_instance_from_json(j);
}

class Runner {
public:
    Runner(const Settings &settings, std::ostream &out) : s_(settings), out_(out) {}

    int answer(bool yes) const { return yes || !s_.exit_status ? kYes : kNo; }

    void emit(const Json &j, const std::string &text) const {
        if(s_.format == Format::Text)
            out_ << text << '\n';
        else if(s_.format == Format::Json)
            out_ << j.dump(2) << '\n';
        else
            throw UsageError("--format dot is only available for BDD-valued results");
    }

    void emit_bdd(const Json &j, const Bdd &b) const {
        if(s_.format == Format::Dot)
            out_ << to_dot(b);
        else
            emit(j, print_bdd(b));
    }

    int check_proof(const std::string &p) {
        const Proof proof = parse_proof(load(p));
        const auto violations = validate_proof(proof);
        Json j;
        j["valid"] = violations.empty();
        j["conclusion"] = print_sequent(proof.conclusion());
        j["violations"] = Json::array();
        std::string text = violations.empty() ? "valid: " + print_sequent(proof.conclusion()) : "invalid";
        for(const RuleViolation &v : violations) {
            j["violations"].push_back(to_json(v));
            text += "\n  " + print_violation(v);
        }
        emit(j, text);
        return answer(violations.empty());
    }

    int slice(const std::string &p) {
        const Proof proof = parse_proof(load(p));
        const Slicing sl = slicing(proof, {s_.max_withs});
        Json j;
        j["conclusion"] = print_sequent(sl.conclusion);
        j["linkings"] = sl.linkings.size();
        j["slicing"] = to_json(sl);
        std::string text = print_sequent(sl.conclusion);
        for(const Linking &l : sl.linkings) {
            text += "\n ";
            for(const DualPair &pair : l.pairs())
                text += " " + print_pair(pair);
        }
        emit(j, text);
        return kYes;
    }

    int bdd_slice(const std::string &p) {
        const Proof proof = parse_proof(load(p));
        BddSlicing sl;
        if(s_.local) {
            require_valid(proof);
            sl.conclusion = proof.conclusion();
            for(const DualPair &pair : dual_pairs(sl.conclusion))
                sl.entries.emplace(pair, bdd_slicing_local(proof, pair));
        } else {
            sl = bdd_slicing(proof);
        }
        Json j;
        j["conclusion"] = print_sequent(sl.conclusion);
        j["entries"] = to_json(sl);
        std::string text = print_sequent(sl.conclusion);
        for(const auto &[pair, bdd] : sl.entries)
            text += "\n  " + print_pair(pair) + " " + print_bdd(bdd);
        emit(j, text);
        return kYes;
    }

    int proof_equivalence(const std::string &a, const std::string &b) {
        const Proof p = parse_proof(load(a));
        const Proof q = parse_proof(load(b));
        const bool eq = s_.oracle ? proof_equiv_oracle(p, q, {s_.max_withs})
                                  : proof_equiv(p, q, {Exec::Parallel, s_.local});
        return boolean("equivalent", eq);
    }

    int bdd_equivalence(const std::string &a, const std::string &b) {
        const Bdd x = parse_bdd(load(a));
        const Bdd y = parse_bdd(load(b));
        const bool eq = s_.oracle ? bdd_equiv_oracle(x, y, OracleOptions{s_.max_vars, Exec::Parallel}) : bdd_equiv(x, y);
        return boolean("equivalent", eq);
    }

    int bdd_eval(const std::string &a, const std::vector<std::string> &assignments) {
        const Bdd b = parse_bdd(load(a));
        Valuation v;
        for(const std::string &item : assignments) {
            std::stringstream ss(item);
            std::string part;
            while(std::getline(ss, part, ',')) {
                if(part.empty())
                    continue;
                const auto eq = part.find('=');
                const std::string bit = eq == std::string::npos ? "" : part.substr(eq + 1);
                if(eq == std::string::npos || (bit != "0" && bit != "1") || !is_identifier(part.substr(0, eq)))
                    throw UsageError("assignment '" + part + "' is not of the form VAR=0|1");
                v.set(part.substr(0, eq), bit == "1");
            }
        }
        const bool value = eval(b, v);
        Json j;
        j["value"] = value ? 1 : 0;
        emit(j, value ? "1" : "0");
        return answer(value);
    }

    int bdd_negate(const std::string &a) {
        const Bdd b = negate(parse_bdd(load(a)));
        Json j;
        j["bdd"] = print_bdd(b);
        emit_bdd(j, b);
        return kYes;
    }

    int bdd_dnf(const std::string &a) {
        const std::vector<Monomial> ms = to_monomials(parse_bdd(load(a)));
        Json j;
        j["monomials"] = Json::array();
        for(const Monomial &m : ms)
            j["monomials"].push_back(to_json(m));
        j["dnf"] = print_dnf(ms);
        emit(j, print_dnf(ms));
        return kYes;
    }

    int encode(const std::string &a) {
        const Bdd phi = parse_bdd(load(a));
        const VarOrder order = s_.order.empty() ? infer_order(phi) : parse_order(s_.order);
        const Proof proof = encode_obdd(phi, order);
        Json j;
        j["order"] = order.variables();
        j["conclusion"] = print_sequent(proof.conclusion());
        j["proof"] = print_proof(proof);
        emit(j, print_proof(proof));
        return kYes;
    }

    int reduce_ord(const std::string &a) {
        const OrdInstance inst = load_instance(a);
        const OrdReduction red = ord_to_obdd(inst);
        const bool eq = s_.oracle ? bdd_equiv_oracle(red.rewired, red.plain, OracleOptions{s_.max_vars, Exec::Parallel})
                                  : bdd_equiv(red.rewired, red.plain);
        const bool before = ord_oracle(inst);
        Json j;
        j["equivalent"] = eq;
        j["f_before_s"] = before;
        std::string text = std::string("equivalent: ") + (eq ? "true" : "false") +
                           "\nf_before_s: " + (before ? "true" : "false") +
                           "\nrewired: " + print_bdd(red.rewired) + "\nplain: " + print_bdd(red.plain);
        emit(j, text);
        return answer(eq);
    }

    int ord(const std::string &a) { return boolean("f_before_s", ord_oracle(load_instance(a))); }

private:
    int boolean(const char *key, bool value) {
        Json j;
        j[key] = value;
        emit(j, value ? "true" : "false");
        return answer(value);
    }

    static VarOrder parse_order(const std::string &text) {
        std::vector<std::string> vars;
        std::stringstream ss(text);
        std::string v;
        while(std::getline(ss, v, ','))
            if(!v.empty())
                vars.push_back(v);
        return VarOrder(std::move(vars));
    }

    // For an oBDD every root-to-leaf walk reads the same sequence.
    static VarOrder infer_order(const Bdd &b) {
        std::vector<std::string> vars;
        const Bdd *n = &b;
        while(!n->is_leaf()) {
            if(n->selector().is_constant())
                throw PreconditionError("not an oBDD: constant selector in " + print_bdd(b));
            vars.push_back(n->selector().name());
            n = &n->then_branch();
        }
        return VarOrder(std::move(vars));
    }

    const Settings &s_;
    std::ostream &out_;
};

int fail(std::ostream &out, std::ostream &err, const std::string &kind, const std::string &message,
         std::optional<std::size_t> offset = std::nullopt) {
    Json j;
    j["error"]["kind"] = kind;
    j["error"]["message"] = message;
    if(offset)
        j["error"]["offset"] = *offset;
    out << j.dump(2) << '\n';
    err << "error: " << message << '\n';
    return kError;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Settings s;
    std::string format = "json";
    std::function<int(Runner &)> action;

    CLI::App app{"Decide MALL- proof equivalence through BDD slicings", "mallequiv"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_flag("--oracle", s.oracle, "Use the brute-force implementation");
    app.add_option("--max-vars", s.max_vars, "Valuation cap of the BDD oracle")->capture_default_str();
    app.add_option("--max-withs", s.max_withs, "With-connective cap of the slicing oracle")->capture_default_str();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
    app.add_flag("--exit-status,!--no-exit-status", s.exit_status, "Map yes/no answers to exit codes 0/1");

    std::string a, b;
    std::vector<std::string> rest;
    auto unary = [&](const char *name, const char *help, const char *what, int (Runner::*fn)(const std::string &)) {
        auto *cmd = app.add_subcommand(name, help);
        cmd->add_option(what, a, what)->required();
        cmd->callback([&, fn] { action = [&, fn](Runner &r) { return (r.*fn)(a); }; });
        return cmd;
    };
    auto binary = [&](const char *name, const char *help, int (Runner::*fn)(const std::string &, const std::string &)) {
        auto *cmd = app.add_subcommand(name, help);
        cmd->add_option("first", a, "first input")->required();
        cmd->add_option("second", b, "second input")->required();
        cmd->callback([&, fn] { action = [&, fn](Runner &r) { return (r.*fn)(a, b); }; });
        return cmd;
    };

    unary("check-proof", "Validate a proof term", "proof", &Runner::check_proof);
    unary("slice", "Explicit slicing of a proof", "proof", &Runner::slice);
    unary("bdd-slice", "BDD slicing of a proof", "proof", &Runner::bdd_slice)
        ->add_flag("--local", s.local, "Use the node-by-node translation");
    binary("proof-equiv", "Decide equivalence of two proofs", &Runner::proof_equivalence)
        ->add_flag("--local", s.local, "Use the node-by-node translation");
    binary("bdd-equiv", "Decide equivalence of two BDDs", &Runner::bdd_equivalence);
    {
        auto *cmd = app.add_subcommand("bdd-eval", "Evaluate a BDD under VAR=0|1 assignments");
        cmd->add_option("bdd", a, "bdd")->required();
        cmd->add_option("assignments", rest, "VAR=0|1 items, space or comma separated");
        cmd->callback([&] { action = [&](Runner &r) { return r.bdd_eval(a, rest); }; });
    }
    unary("bdd-negate", "Negate a BDD by flipping its leaves", "bdd", &Runner::bdd_negate);
    unary("bdd-dnf", "Sum-of-monomials form of a BDD", "bdd", &Runner::bdd_dnf);
    unary("encode-obdd", "Encode an oBDD as a proof", "bdd", &Runner::encode)
        ->add_option("--order", s.order, "Comma-separated variables, outermost first");
    unary("reduce-ord", "Reduce a vertex-order instance to oBDD equivalence", "instance", &Runner::reduce_ord);
    unary("ord-oracle", "Decide a vertex-order instance directly", "instance", &Runner::ord);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch(const CLI::CallForHelp &) {
        out << app.help();
        return kYes;
    } catch(const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kYes;
    } catch(const CLI::ParseError &e) {
        return fail(out, err, "usage", e.what());
    }
    s.format = format == "dot" ? Format::Dot : format == "text" ? Format::Text : Format::Json;

    try {
        Runner runner(s, out);
        return action(runner);
    } catch(const ParseError &e) {
        return fail(out, err, "parse", e.what(), e.position());
    } catch(const CapExceeded &e) {
        return fail(out, err, "cap", e.what());
    } catch(const PreconditionError &e) {
        return fail(out, err, "precondition", e.what());
    } catch(const IoError &e) {
        return fail(out, err, "io", e.what());
    } catch(const UsageError &e) {
        return fail(out, err, "usage", e.what());
    }
}

} // namespace mall::cli
