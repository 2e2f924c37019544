/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minorcsp/catalogue.hh>
#include <minorcsp/gadgets.hh>
#include <minorcsp/graphs.hh>
#include <minorcsp/io.hh>
#include <minorcsp/occurrence.hh>
#include <minorcsp/random.hh>
#include <minorcsp/solvers.hh>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace minorcsp;

namespace
{
    enum Exit
    {
        exit_ok = 0,
        exit_false = 1,
        exit_usage = 2,
        exit_sat = 10,
        exit_unsat = 20,
        exit_not_in_class = 30
    };

    auto read_file(const std::string & path) -> std::string
    {
        std::ifstream in(path);
        if (! in)
            throw Error(ErrorCode::BadInput, "cannot read " + path);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    }

    auto read_json(const std::string & path) -> Json
    {
        try {
            return Json::parse(read_file(path));
        }
        catch (const Json::parse_error & e) {
            throw Error(ErrorCode::BadInput, path + ": " + e.what());
        }
    }

    auto load_pattern(const std::string & spec) -> AugmentedPattern
    {
        if (std::filesystem::exists(spec))
            return pattern_from_json(read_json(spec));
        return make_named(spec);
    }

    auto load_instance(const std::string & path) -> LabelledInstance
    {
        return instance_from_json(read_json(path));
    }

    auto load_cnf(const std::string & path) -> Cnf
    {
        return parse_dimacs(read_file(path));
    }

    auto parse_variant(const std::string & s) -> GadgetVariant
    {
        if (s == "standard")
            return GadgetVariant::Standard;
        if (s == "gc")
            return GadgetVariant::GloballyConsistent;
        throw Error(ErrorCode::BadInput, "variant must be standard or gc");
    }

    auto emit(const Json & j, bool human) -> void
    {
        if (! human) {
            std::cout << j.dump() << "\n";
            return;
        }
        if (j.is_object())
            for (auto & [k, v] : j.items())
                std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        else
            std::cout << j.dump(2) << "\n";
    }

    auto decomposition_json(const Instance & inst) -> Json
    {
        auto g = constraint_graph(inst);
        Json pieces = Json::array();
        for (auto & comp : connected_components(g))
            pieces.push_back(decomposition_to_json(tutte_decompose(induced_subgraph(g, comp))));
        return pieces;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Forbidden patterns, topological minors and tractable classes of binary CSPs" };
    app.require_subcommand(1);

    bool human = false;
    app.add_flag("--human", human, "Print key: value lines instead of JSON");

    std::string pattern_spec, instance_path, target_path, relation = "auto", cnf_path, variant = "standard", method = "auto";
    bool witness = false, no_fast = false, emit_decomposition = false, with_tm = false;
    int pivot_bound = 2, gen_vars = 5, gen_dom = 3;
    double density = 0.5;
    std::uint64_t seed = 0;
    std::vector<int> subdivide_parts;

    auto add_occurrence = [&] (CLI::App * c) {
        c->add_option("--pattern", pattern_spec, "Catalogue key or pattern JSON file")->required();
        auto inst = c->add_option("--instance", instance_path, "Instance JSON file");
        auto tgt = c->add_option("--target", target_path, "Target pattern JSON file");
        inst->excludes(tgt);
        c->add_option("--relation", relation, "Instance relation for augmented patterns")
            ->check(CLI::IsMember({ "auto", "none", "neq" }));
        c->add_flag("--witness", witness, "Include the witness");
    };

    auto check_sp = app.add_subcommand("check-sp", "Sub-pattern occurrence; exit 0 if found, 1 if not");
    add_occurrence(check_sp);
    auto check_tm = app.add_subcommand("check-tm", "Topological-minor occurrence; exit 0 if found, 1 if not");
    add_occurrence(check_tm);
    check_tm->add_flag("--no-fast-paths", no_fast, "Always search subdivisions");

    auto classify_cmd = app.add_subcommand("classify", "Membership in the implemented tractable classes");
    classify_cmd->add_option("--instance", instance_path)->required();
    classify_cmd->add_option("--pivot-bound", pivot_bound)->check(CLI::Range(0, 6));
    classify_cmd->add_flag("--emit-decomposition", emit_decomposition);

    auto solve_cmd = app.add_subcommand("solve", "Solve; exit 10 SAT, 20 UNSAT, 30 not in the class");
    solve_cmd->add_option("--instance", instance_path)->required();
    solve_cmd->add_option("--method", method)->check(CLI::IsMember(
                { "auto", "bruteforce", "mac", "acyclic", "articulation", "tutte", "ac-class", "sac-class" }));
    solve_cmd->add_flag("--emit-decomposition", emit_decomposition);

    auto ac_cmd = app.add_subcommand("ac", "Arc-consistent closure");
    ac_cmd->add_option("--instance", instance_path)->required();
    auto sac_cmd = app.add_subcommand("sac", "Singleton arc-consistent closure");
    sac_cmd->add_option("--instance", instance_path)->required();

    auto subdivide_cmd = app.add_subcommand("subdivide", "Subdivide a pattern at two parts");
    subdivide_cmd->add_option("--pattern", pattern_spec)->required();
    subdivide_cmd->add_option("--parts", subdivide_parts)->required()->expected(2);

    auto gen = app.add_subcommand("gen", "Generators");
    gen->require_subcommand(1);
    auto gen_gadget = gen->add_subcommand("sat-gadget", "Gadget instance for a 3-CNF formula");
    gen_gadget->add_option("--cnf", cnf_path, "DIMACS file")->required();
    gen_gadget->add_option("--variant", variant)->check(CLI::IsMember({ "standard", "gc" }));
    auto gen_random_cmd = gen->add_subcommand("random", "Seeded random instance");
    gen_random_cmd->add_option("--vars", gen_vars)->check(CLI::Range(0, 1000));
    gen_random_cmd->add_option("--dom", gen_dom)->check(CLI::Range(1, 1000));
    gen_random_cmd->add_option("--density", density);
    gen_random_cmd->add_option("--seed", seed);

    auto verify_cmd = app.add_subcommand("verify-gadget", "Compare SAT, path and TM for a formula; exit 0 if they agree");
    verify_cmd->add_option("--cnf", cnf_path)->required();
    verify_cmd->add_option("--variant", variant)->check(CLI::IsMember({ "standard", "gc" }));
    verify_cmd->add_flag("--tm", with_tm, "Also run the exact topological-minor test");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (check_sp->parsed() || check_tm->parsed()) {
            auto p = load_pattern(pattern_spec);
            AugmentedPattern q;
            LabelledInstance li;
            bool from_instance = ! instance_path.empty();
            if (from_instance) {
                li = load_instance(instance_path);
                q.pattern = pattern_from_instance(li.instance);
                bool need = ! p.relation.tuples.empty();
                if (relation == "neq" || (relation == "auto" && need && p.relation.arity == 2))
                    q.relation = instance_relation(RelationSpec{ RelationKind::Neq, {} }, li.instance);
            }
            else if (! target_path.empty())
                q = pattern_from_json(read_json(target_path));
            else
                throw Error(ErrorCode::BadInput, "give --instance or --target");

            std::optional<TmWitness> w;
            if (check_sp->parsed()) {
                if (auto e = find_sub_pattern(p, q))
                    w = TmWitness{ {}, *e };
            }
            else {
                TmOptions options;
                options.fast_paths = ! no_fast;
                w = occurs_tm(p, q, options);
            }

            Json out{ { "found", w.has_value() } };
            if (w && witness)
                out["witness"] = check_sp->parsed() ? Json{ { "map", embedding_to_json(w->embedding) } } : witness_to_json(*w);
            emit(out, human);
            return w ? exit_ok : exit_false;
        }

        if (classify_cmd->parsed()) {
            auto li = load_instance(instance_path);
            auto out = class_report_to_json(classify(li.instance, pivot_bound));
            if (emit_decomposition)
                out["decomposition"] = decomposition_json(li.instance);
            emit(out, human);
            return exit_ok;
        }

        if (solve_cmd->parsed()) {
            auto li = load_instance(instance_path);
            std::string used = method == "auto" ? classify(li.instance).recommended : method;
            SolveResult r;
            try {
                r = solve_with(li.instance, used);
            }
            catch (const Error & e) {
                if (e.code() == ErrorCode::NotInClass || e.code() == ErrorCode::NotAcyclic) {
                    std::cerr << e.what() << "\n";
                    emit(Json{ { "status", "NOT_IN_CLASS" }, { "method", used } }, human);
                    return exit_not_in_class;
                }
                throw;
            }
            Json out{ { "status", r.status == Status::Sat ? "SAT" : "UNSAT" }, { "method", used },
                { "stats", { { "nodes", r.stats.nodes }, { "propagations", r.stats.propagations }, { "subcalls", r.stats.subcalls } } } };
            if (r.assignment)
                out["assignment"] = assignment_to_json(li, *r.assignment);
            if (emit_decomposition)
                out["decomposition"] = decomposition_json(li.instance);
            emit(out, human);
            return r.status == Status::Sat ? exit_sat : exit_unsat;
        }

        if (ac_cmd->parsed() || sac_cmd->parsed()) {
            auto li = load_instance(instance_path);
            auto j = ac_cmd->parsed() ? establish_ac(li.instance) : establish_sac(li.instance);
            LabelledInstance out{ j, {} };
            for (Var v = 0 ; v < j.size() ; ++v) {
                std::vector<Json> labels;
                auto & before = li.instance.domain(v);
                for (auto a : j.domain(v))
                    labels.push_back(li.labels[v][std::lower_bound(before.begin(), before.end(), a) - before.begin()]);
                out.labels.push_back(labels);
            }
            emit(instance_to_json(out), human);
            return exit_ok;
        }

        if (subdivide_cmd->parsed()) {
            auto p = load_pattern(pattern_spec);
            auto s = subdivide(p.pattern, subdivide_parts.at(0), subdivide_parts.at(1));
            emit(pattern_to_json(AugmentedPattern{ s, p.relation }), human);
            return exit_ok;
        }

        if (gen_gadget->parsed()) {
            auto g = build_gadget(load_cnf(cnf_path), parse_variant(variant));
            auto out = instance_to_json(g.instance);
            Json roles = Json::object();
            for (auto & [v, r] : g.roles)
                roles[std::to_string(v)] = r;
            out["roles"] = roles;
            out["start"] = g.start;
            out["finish"] = g.finish;
            emit(out, human);
            return exit_ok;
        }

        if (gen_random_cmd->parsed()) {
            emit(instance_to_json(gen_random(gen_vars, gen_dom, density, seed)), human);
            return exit_ok;
        }

        if (verify_cmd->parsed()) {
            auto r = verify_gadget(load_cnf(cnf_path), parse_variant(variant), with_tm);
            emit(gadget_report_to_json(r), human);
            return r.agree ? exit_ok : exit_false;
        }
    }
    catch (const Error & e) {
        std::cerr << "minorcsp: " << e.what() << "\n";
        return e.code() == ErrorCode::NotInClass ? exit_not_in_class : exit_usage;
    }
    catch (const std::exception & e) {
        std::cerr << "minorcsp: " << e.what() << "\n";
        return exit_usage;
    }

    return exit_usage;
}
