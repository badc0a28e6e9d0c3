/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pushhom/families.hh>
#include <pushhom/hom.hh>
#include <pushhom/io.hh>
#include <pushhom/isomorphism.hh>
#include <pushhom/push.hh>
#include <pushhom/sparse_coloring.hh>
#include <pushhom/verify.hh>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace pushhom;
using nlohmann::json;
using std::string;

namespace
{
    enum ExitCode
    {
        exit_pass = 0,
        exit_fail = 1,
        exit_usage = 2,
        exit_budget = 3
    };

    struct BudgetFlags
    {
        std::uint64_t nodes = SearchBudget{}.node_limit;
        double secs = SearchBudget{}.time_limit_seconds;
        std::optional<std::uint64_t> seed;

        auto add_to(CLI::App * app) -> void
        {
            app->add_option("--budget-nodes", nodes, "search node limit per check");
            app->add_option("--budget-secs", secs, "wall time limit per check");
            app->add_option("--seed", seed, "random seed");
        }

        auto budget() const -> SearchBudget
        {
            return SearchBudget{nodes, secs, seed};
        }
    };

    // every witness passes through here before it is printed
    auto checked(bool ok, const string & what) -> void
    {
        if (! ok)
            throw std::logic_error("refusing to print unverified " + what);
    }

    auto print(const json & j) -> void
    {
        std::cout << j.dump(2) << std::endl;
    }

    auto exit_for(SearchVerdict v) -> int
    {
        return v == SearchVerdict::budget_exhausted ? exit_budget : exit_pass;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Push homomorphisms of oriented graphs"};
    app.require_subcommand(1);
    int code = exit_pass;

    // verify
    auto verify = app.add_subcommand("verify", "run a named verification suite");
    string suite, json_path;
    int max_n = 5;
    BudgetFlags verify_budget;
    verify->add_option("suite", suite, "suite name")->required();
    verify->add_option("--json", json_path, "also write the report here");
    verify->add_option("--max-n", max_n, "largest order for exhaustive suites")->check(CLI::Range(1, 6));
    verify_budget.add_to(verify);
    verify->callback([&] {
        VerifyOptions options;
        options.budget = verify_budget.budget();
        options.seed = verify_budget.seed.value_or(1);
        options.max_n = max_n;
        VerdictReport report;
        try {
            report = run_suite(suite, options);
        }
        catch (const std::invalid_argument & e) {
            std::cerr << e.what() << std::endl;
            code = exit_usage;
            return;
        }
        auto j = report.to_json();
        print(j);
        if (! json_path.empty())
            std::ofstream{json_path} << j.dump(2) << '\n';
        switch (report.status()) {
        case CheckStatus::pass: code = exit_pass; break;
        case CheckStatus::fail: code = exit_fail; break;
        case CheckStatus::budget_exhausted: code = exit_budget; break;
        }
    });

    // chroma
    auto chroma = app.add_subcommand("chroma", "push or oriented chromatic number");
    string chroma_kind, chroma_file;
    int max_k = 8;
    BudgetFlags chroma_budget;
    chroma->add_option("kind", chroma_kind)->required()->check(CLI::IsMember({"push", "oriented"}));
    chroma->add_option("graph", chroma_file)->required();
    chroma->add_option("--max-k", max_k, "largest target order tried")->check(CLI::Range(0, 64));
    chroma_budget.add_to(chroma);
    chroma->callback([&] {
        auto g = read_graph_file(chroma_file);
        auto r = chroma_kind == "push" ? push_chromatic_number(g, max_k, chroma_budget.budget())
                                       : oriented_chromatic_number(g, max_k, chroma_budget.budget());
        if (r.witness)
            checked(is_push_hom_witness(g, *r.target, *r.witness) && (chroma_kind == "push" || r.witness->push_vector.empty()), "colouring");
        auto j = chromatic_json(r);
        j["kind"] = chroma_kind;
        print(j);
        code = r.value ? exit_pass : r.budget_exhausted ? exit_budget : exit_fail;
    });

    // equiv
    auto equiv = app.add_subcommand("equiv", "decide push equivalence");
    string equiv_g, equiv_h;
    equiv->add_option("first", equiv_g)->required();
    equiv->add_option("second", equiv_h)->required();
    equiv->callback([&] {
        auto g = read_graph_file(equiv_g), h = read_graph_file(equiv_h);
        auto cert = push_equivalent(g, h);
        json j{{"schemaVersion", schema_version}, {"equivalent", cert.has_value()}};
        if (cert) {
            checked(is_isomorphism(push(g, cert->push_vector), h, cert->isomorphism.mapping), "push equivalence");
            j["certificate"] = equivalence_json(*cert);
        }
        print(j);
    });

    // split
    auto split = app.add_subcommand("split", "find a split certificate");
    string split_file;
    split->add_option("graph", split_file)->required();
    split->callback([&] {
        auto g = read_graph_file(split_file);
        auto cert = find_split(g);
        json j{{"schemaVersion", schema_version}, {"splitable", cert.has_value()}};
        if (cert) {
            checked(is_valid_split(g, *cert), "split");
            auto t = split_graph(g, *cert);
            j["firstHalf"] = cert->first_half;
            j["partner"] = cert->partner;
            j["splitGraph"] = emit_graph(t);
            j["splitOrder"] = t.order();
            j["verified"] = true;
        }
        print(j);
    });

    // hom
    auto hom = app.add_subcommand("hom", "search for a homomorphism");
    string hom_g, hom_h;
    bool hom_push = false;
    BudgetFlags hom_budget;
    hom->add_option("source", hom_g)->required();
    hom->add_option("target", hom_h)->required();
    hom->add_flag("--push", hom_push, "allow pushing the source");
    hom_budget.add_to(hom);
    hom->callback([&] {
        auto g = read_graph_file(hom_g), h = read_graph_file(hom_h);
        json j{{"schemaVersion", schema_version}, {"push", hom_push}};
        SearchVerdict v;
        if (hom_push) {
            auto r = find_push_hom(g, h, hom_budget.budget());
            v = r.verdict;
            j["nodes"] = r.nodes;
            if (r.witness) {
                checked(is_push_hom_witness(g, h, *r.witness), "push homomorphism");
                j["witness"] = witness_json(h, *r.witness);
            }
        }
        else {
            auto r = find_hom(g, h, hom_budget.budget());
            v = r.verdict;
            j["nodes"] = r.nodes;
            if (r.mapping) {
                checked(is_homomorphism(g, h, *r.mapping), "homomorphism");
                j["witness"] = witness_json(h, PushHomWitness{PushVector{}, *r.mapping});
            }
        }
        j["verdict"] = to_string(v);
        print(j);
        code = exit_for(v);
    });

    // families gen / validate, with gen also at top level
    string gen_name;
    std::vector<long> gen_params;
    std::uint64_t gen_seed = 1;
    auto gen_callback = [&] {
        std::cout << emit_graph(generate_family(gen_name, gen_params, gen_seed));
    };
    auto add_gen = [&](CLI::App * parent) {
        auto gen = parent->add_subcommand("gen", "emit a named family member");
        gen->add_option("name", gen_name)->required()->check(CLI::IsMember(family_names()));
        gen->add_option("params", gen_params, "numeric parameters");
        gen->add_option("--seed", gen_seed, "random seed");
        gen->callback(gen_callback);
    };
    auto families = app.add_subcommand("families", "generate or validate named graphs");
    families->require_subcommand(1);
    add_gen(families);
    add_gen(&app);
    auto validate = families->add_subcommand("validate", "property report for a gadget");
    string validate_name;
    validate->add_option("name", validate_name)->required()->check(CLI::IsMember({"paley-plus", "b0", "y-gadget"}));
    validate->callback([&] {
        auto report = validate_name == "paley-plus" ? validate_paley_plus(paley_plus())
            : validate_name == "b0"                 ? validate_b0(b0())
                                                    : validate_y_gadget(y_gadget());
        json j{{"schemaVersion", schema_version}, {"gadget", report.name}, {"pass", report.all_pass()}, {"checks", json::object()}};
        for (auto & [name, ok] : report.checks)
            j["checks"][name] = ok;
        print(j);
        code = report.all_pass() ? exit_pass : exit_fail;
    });

    // color
    auto color = app.add_subcommand("color", "constructive push colouring");
    string color_kind, color_file;
    bool audit = false;
    BudgetFlags color_budget;
    color->add_option("kind", color_kind)->required()->check(CLI::IsMember({"sparse", "outerplanar5"}));
    color->add_option("graph", color_file)->required();
    color->add_flag("--audit", audit, "print the discharging rows instead");
    color_budget.add_to(color);
    color->callback([&] {
        auto g = read_graph_file(color_file);
        if (audit) {
            auto report = discharge_audit(g);
            json rows = json::array();
            for (auto & r : report.rows)
                rows.push_back({{"vertex", r.vertex}, {"degree", r.degree},
                    {"degStar", std::to_string(r.charge.numerator()) + "/" + std::to_string(r.charge.denominator())}});
            print({{"schemaVersion", schema_version}, {"rows", rows}, {"minimumAtLeastEightThirds", report.minimum_at_least_eight_thirds}});
            return;
        }
        try {
            auto cert = color_kind == "sparse" ? push_color_to_paley(g) : color_outerplanar_g5(g, color_budget.budget());
            checked(verify_certificate(g, cert) && (cert.trace.empty() || replay_trace(g, cert.trace)), "colouring");
            auto j = witness_json(cert.target, cert.witness);
            j["reductions"] = cert.trace.size();
            print(j);
        }
        catch (const ColoringError & e) {
            string what = e.what();
            std::cerr << what << std::endl;
            code = what.find("budget") != string::npos ? exit_budget : what.find("needs") != string::npos ? exit_usage : exit_fail;
        }
    });

    // push
    auto push_cmd = app.add_subcommand("push", "apply a push vector");
    string push_g, push_file;
    push_cmd->add_option("graph", push_g)->required();
    push_cmd->add_option("pushes", push_file)->required();
    push_cmd->callback([&] {
        auto g = read_graph_file(push_g);
        auto s = parse_push_vector(read_file(push_file));
        s.mask(g.order());
        std::cout << emit_graph(push(g, s));
    });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int r = app.exit(e);
        return r == 0 ? exit_pass : exit_usage;
    }
    catch (const GraphError & e) {
        std::cerr << "error: " << e.what() << std::endl;
        return exit_usage;
    }
    catch (const std::runtime_error & e) {
        std::cerr << "error: " << e.what() << std::endl;
        return exit_usage;
    }
    return code;
}
