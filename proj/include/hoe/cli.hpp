#pragma once

#include "hoe/zoo.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>

namespace hoe::cli {

/// Bad arguments or unreadable input; maps to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::size_t degree_bound = 4;
    std::size_t degree = 4;
    std::size_t confluence_degree = 8;
    std::string sign_variant = "auto";
    std::string format = "text";
};

struct Outcome {
    std::string command;
    std::string input;
    Report report;
    std::optional<std::string> sign_resolution;
    std::vector<std::string> assertions;
    std::map<std::string, std::string> results;
};

inline SourceFile load_source(const std::string& input)
{
    if (input.rfind("zoo:", 0) == 0) {
        const ZooEntry* z = find_zoo_entry(input.substr(4));
        if (!z) throw InputError("unknown zoo entry '" + input.substr(4) + "'");
        return z->source();
    }
    if (!std::filesystem::is_regular_file(input)) throw InputError("cannot open '" + input + "'");
    return parse_source_file(input);
}

namespace detail {

inline void fail_with(Outcome& o, const VerificationFailure& ex, const std::string& prefix)
{
    o.report.merge(ex.partial(), prefix);
    o.report.add(prefix + ex.equation(), false, ex.witness());
}

inline void check_hopf(Outcome& o, const Assembled& a, const Options&)
{
    if (!a.hopf) throw InputError("input has no delta, counit and antipode lines");
    o.report.merge(hopf_axiom_suite(*a.hopf));
    o.results["cocommutative"] = a.hopf->cocommutative() ? "true" : "false";
}

inline void check_ore(Outcome& o, const Assembled& a, const Options&)
{
    if (!a.ore) throw InputError("input has no Ore extension");
    o.report.merge(validate_ore(*a.ore));
}

inline void normalize_cmd(Outcome& o, const Assembled& a, const Options&)
{
    if (!a.candidate) throw InputError("input has neither deltaX nor hoe lines");
    try {
        NormalizationResult n = normalize(*a.candidate);
        o.report.merge(n.report);
        o.report.log = n.log;
        o.results["beta"] = n.beta.to_string();
        o.results["deltaX"] = n.output.delta_x.to_string();
        o.results["S(x)"] = n.antipode_x.to_string();
        o.results["x"] = n.to_input.image(n.output.ore.x()).to_string();
    } catch (const VerificationFailure& ex) {
        fail_with(o, ex, "");
    } catch (const HigherDegreeTerm& ex) {
        o.report.add("Delta(x) has degree <= 1 in x on each side", false, ex.what());
    }
}

inline void check_hoe(Outcome& o, const Assembled& a, const Options& opt)
{
    std::optional<OreExt> ore;
    std::optional<HOEData> data;
    if (a.hoe) {
        ore = *a.ore;
        data = *a.hoe;
    } else if (a.candidate) {
        try {
            NormalizationResult n = normalize(*a.candidate);
            o.report.merge(n.report, "normalize: ");
            o.report.log = n.log;
            ore = n.output.ore;
            data = derive_hoe_data(n.output);
        } catch (const VerificationFailure& ex) {
            fail_with(o, ex, "normalize: ");
            return;
        } catch (const HigherDegreeTerm& ex) {
            o.report.add("normalize: Delta(x) has degree <= 1 in x on each side", false, ex.what());
            return;
        }
    } else {
        throw InputError("input has neither deltaX nor hoe lines");
    }
    SignResolution sr = resolve_sign(*ore, *data, opt.degree_bound);
    o.sign_resolution = sr.label();
    const Report* chosen = &sr.commutator;
    if (opt.sign_variant == "displayed" || (opt.sign_variant == "auto" && !sr.commutator_agrees && sr.displayed_agrees))
        chosen = &sr.displayed;
    o.results["sign_variant"] = chosen == &sr.displayed ? "displayed" : "commutator";
    o.results["beta"] = data->beta.to_string();
    o.results["w"] = data->w.to_string();
    o.report.merge(*chosen, "structure: ");
    o.report.merge(sr.ground, "ground truth: ");
}

inline void domain_cmd(Outcome& o, const Assembled& a, const Options& opt)
{
    o.report.merge(domain_evidence(a.R, opt.degree));
    for (const auto& [k, v] : o.report.metadata) o.results[k] = v;
}

using Handler = void (*)(Outcome&, const Assembled&, const Options&);

inline const std::map<std::string, Handler>& handlers()
{
    static const std::map<std::string, Handler> h{{"check-hopf", check_hopf},
                                                  {"check-ore", check_ore},
                                                  {"check-hoe", check_hoe},
                                                  {"normalize", normalize_cmd},
                                                  {"domain-evidence", domain_cmd}};
    return h;
}

} // namespace detail

/// Assembles the input and runs one command. Input problems throw; failed
/// mathematical checks land in the report.
inline Outcome run_command(const std::string& command, const std::string& input, const Options& opt)
{
    auto it = detail::handlers().find(command);
    if (it == detail::handlers().end()) throw InputError("unknown command '" + command + "'");
    Outcome o;
    o.command = command;
    o.input = input;
    SourceFile sf = load_source(input);
    o.assertions = sf.assertions;
    std::optional<Assembled> a;
    try {
        a = assemble(sf, AssembleOptions{opt.confluence_degree});
    } catch (const ConfluenceFailure& ex) {
        o.report.add("confluence to degree " + std::to_string(opt.confluence_degree), false, ex.what());
        return o;
    }
    o.report.add("confluence to degree " + std::to_string(opt.confluence_degree), true);
    it->second(o, *a, opt);
    return o;
}

inline nlohmann::ordered_json to_json(const Outcome& o)
{
    nlohmann::ordered_json j;
    j["command"] = o.command;
    j["input"] = o.input;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : o.report.checks) {
        nlohmann::ordered_json cj{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
        if (!c.witness.empty()) cj["witness"] = c.witness;
        j["checks"].push_back(cj);
    }
    j["verdict"] = o.report.verdict() ? "pass" : "fail";
    if (o.sign_resolution) j["sign_resolution"] = *o.sign_resolution;
    j["log"] = o.report.log;
    j["assertions"] = o.assertions;
    if (!o.results.empty()) j["results"] = o.results;
    return j;
}

inline std::string to_text(const Outcome& o)
{
    std::string out = o.command + " " + o.input + "\n";
    out += o.report.to_text();
    if (o.sign_resolution) out += "sign resolution: " + *o.sign_resolution + "\n";
    for (const auto& l : o.report.log) out += "log: " + l + "\n";
    for (const auto& [k, v] : o.results) out += k + " = " + v + "\n";
    for (const auto& a : o.assertions) out += "assumed (not verified): " + a + "\n";
    return out;
}

/// Full command-line entry point; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hopf Ore extension checker"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--degree-bound", opt.degree_bound, "degree bound for sampled identities")->capture_default_str();
    app.add_option("--sign-variant", opt.sign_variant, "reading of the delta relation")
        ->check(CLI::IsMember({"displayed", "commutator", "auto"}))
        ->capture_default_str();
    app.add_option("--format", opt.format, "report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    app.add_option("--confluence-degree", opt.confluence_degree, "confluence certification degree")
        ->capture_default_str();

    std::string input, command;
    for (const auto& [name, h] : detail::handlers()) {
        (void)h;
        auto* sub = app.add_subcommand(name, name + " on a file or zoo:NAME");
        sub->add_option("input", input, "source file or zoo:NAME")->required();
        if (name == "domain-evidence")
            sub->add_option("--degree", opt.degree, "degree bound for products")->capture_default_str();
        sub->callback([&command, n = name] { command = n; });
    }
    std::string zoo_name, zoo_action = "print";
    auto* zoo = app.add_subcommand("zoo", "list, print or check a built-in entry");
    zoo->add_option("name", zoo_name, "entry name");
    zoo->add_option("action", zoo_action, "print or a command name")->capture_default_str();
    zoo->add_option("--degree", opt.degree, "degree bound for domain-evidence")->capture_default_str();
    zoo->callback([&command] { command = "zoo"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (command == "zoo") {
            if (zoo_name.empty()) {
                for (const auto& e : zoo_entries()) out << e.name << "  " << e.description << "\n";
                return 0;
            }
            const ZooEntry* z = find_zoo_entry(zoo_name);
            if (!z) throw InputError("unknown zoo entry '" + zoo_name + "'");
            if (zoo_action == "print") {
                out << print_source(z->source());
                return 0;
            }
            command = zoo_action;
            input = "zoo:" + z->name;
        }
        Outcome o = run_command(command, input, opt);
        if (opt.format == "json")
            out << to_json(o).dump(2) << "\n";
        else
            out << to_text(o);
        return o.report.verdict() ? 0 : 1;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
    } catch (const AssemblyError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const UnorientableRelation& e) {
        err << "error: " << e.what() << "\n";
    } catch (const InvalidStructure& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << "\n";
    }
    return 2;
}

} // namespace hoe::cli
