/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minorcsp/catalogue.hh>
#include <minorcsp/graphs.hh>
#include <minorcsp/occurrence.hh>
#include <minorcsp/random.hh>
#include <minorcsp/solvers.hh>

#include "oracles.hh"

#include <doctest.h>

using namespace minorcsp;

namespace
{
    auto neq_triangle() -> Instance
    {
        Instance inst;
        for (auto n : { "a", "b", "c" })
            inst.add_variable(n, { 0, 1 });
        for (auto [u, v] : { Edge{ 0, 1 }, Edge{ 1, 2 }, Edge{ 0, 2 } })
            inst.constrain(u, v, { { 0, 1 }, { 1, 0 } });
        return inst;
    }

    auto check_result(const Instance & inst, const SolveResult & r) -> void
    {
        bool want = oracle::solve(inst).has_value();
        CHECK((r.status == Status::Sat) == want);
        if (r.status == Status::Sat) {
            REQUIRE(r.assignment);
            CHECK(satisfies(inst, *r.assignment));
        }
    }

    auto code_of(auto && f) -> std::optional<ErrorCode>
    {
        try {
            f();
        }
        catch (const Error & e) {
            return e.code();
        }
        return std::nullopt;
    }
}

TEST_CASE("instance basics")
{
    Instance inst;
    inst.add_variable("x", { 0, 1, 2 });
    inst.add_variable("y", { 0, 1 });
    inst.constrain(1, 0, { { 0, 2 }, { 1, 1 } });
    CHECK(inst.allowed(0, 2, 1, 0));
    CHECK(! inst.allowed(0, 0, 1, 0));
    CHECK(inst.allowed_pairs(0, 1) == std::set<ValuePair>{ { 1, 1 }, { 2, 0 } });
    CHECK(inst.constrained(0, 1));
    inst.restrict_pair(0, 1, { { 1, 1 } });
    CHECK(inst.allowed_pairs(0, 1) == std::set<ValuePair>{ { 1, 1 } });

    Instance full;
    full.add_variable("x", { 0, 1 });
    full.add_variable("y", { 0, 1 });
    full.constrain(0, 1, { { 0, 0 }, { 0, 1 }, { 1, 0 }, { 1, 1 } });
    full.normalise();
    CHECK(full.relations().empty());
    CHECK(! full.constrained(0, 1));
}

TEST_CASE("brute force")
{
    CHECK(brute_force_solve(neq_triangle()).status == Status::Unsat);
    Instance empty;
    CHECK(brute_force_solve(empty).status == Status::Sat);
    Instance big;
    for (int v = 0 ; v < 8 ; ++v)
        big.add_variable("x" + std::to_string(v), { 0, 1, 2, 3, 4, 5, 6, 7, 8, 9 });
    CHECK(code_of([&] { brute_force_solve(big, 1000); }) == ErrorCode::CapExceeded);
}

TEST_CASE("arc consistency matches the naive fixpoint")
{
    Rng rng(19);
    for (int round = 0 ; round < 300 ; ++round) {
        auto inst = random_instance(rng, { rng.between(1, 6), 3, 0.5, 0.5, true });
        auto ac = establish_ac(inst);
        CHECK(ac.domains() == oracle::arc_consistent_domains(inst));
        CHECK(establish_ac(ac) == ac);
        if (! ac.has_empty_domain())
            for (Var u = 0 ; u < ac.size() ; ++u)
                for (Var v = 0 ; v < ac.size() ; ++v)
                    if (u != v)
                        for (auto a : ac.domain(u)) {
                            bool support = false;
                            for (auto b : ac.domain(v))
                                support = support || ac.allowed(u, a, v, b);
                            CHECK(support);
                        }
    }
}

TEST_CASE("singleton arc consistency")
{
    auto sac = establish_sac(neq_triangle());
    CHECK(sac.has_empty_domain());
    CHECK(! establish_ac(neq_triangle()).has_empty_domain());

    Rng rng(21);
    for (int round = 0 ; round < 200 ; ++round) {
        auto inst = random_instance(rng, { rng.between(1, 6), 3, 0.6, 0.45, false });
        auto s = establish_sac(inst);
        auto a = establish_ac(inst);
        for (Var v = 0 ; v < inst.size() ; ++v) {
            for (auto x : s.domain(v))
                CHECK(a.in_domain(v, x));
            if (! s.has_empty_domain())
                for (auto x : s.domain(v))
                    CHECK(! establish_ac(assign(s, v, x)).has_empty_domain());
        }
        // every value in a solution survives
        if (auto sol = oracle::solve(inst))
            for (Var v = 0 ; v < inst.size() ; ++v)
                CHECK(s.in_domain(v, (*sol)[v]));
    }
}

TEST_CASE("solvers agree with enumeration")
{
    Rng rng(27);
    int sat = 0;
    for (int round = 0 ; round < 250 ; ++round) {
        auto inst = random_instance(rng, { rng.between(1, 7), 3, rng.real() * 0.7, 0.45, true });
        check_result(inst, brute_force_solve(inst));
        check_result(inst, mac_solve(inst));
        check_result(inst, solve_articulation(inst));
        check_result(inst, solve_tutte_scheme(inst));
        if (is_acyclic(constraint_graph(inst)))
            check_result(inst, solve_acyclic(inst));
        else
            CHECK(code_of([&] { solve_acyclic(inst); }) == ErrorCode::NotAcyclic);
        sat += oracle::solve(inst).has_value();
    }
    CHECK(sat > 40);
    CHECK(sat < 230);
}

TEST_CASE("scheme leaf solvers are called on pieces")
{
    Rng rng(28);
    for (int round = 0 ; round < 60 ; ++round) {
        auto inst = random_instance(rng, { 7, 2, 0.35, 0.4, false });
        int calls = 0, biggest = 0;
        auto leaf = [&] (const Instance & piece) {
            ++calls;
            biggest = std::max(biggest, piece.size());
            return brute_force_solve(piece);
        };
        check_result(inst, solve_articulation(inst, leaf));
        check_result(inst, solve_tutte_scheme(inst, leaf));
        CHECK(biggest <= inst.size());
    }
}

TEST_CASE("AC decides the K_neq class")
{
    Rng rng(33);
    int members = 0;
    for (int round = 0 ; round < 400 && members < 60 ; ++round) {
        auto inst = random_instance(rng, { rng.between(2, 5), 3, 0.6, 0.5, true });
        auto code = code_of([&] { decide_ac_class(inst); });
        bool member = forbids({ make_k_neq() }, inst, Mode::TopologicalMinor, RelationSpec{ RelationKind::Neq, {} }).forbidden;
        if (! member) {
            CHECK(code == ErrorCode::NotInClass);
            continue;
        }
        ++members;
        auto r = decide_ac_class(inst);
        check_result(inst, r);
        CHECK((r.status == Status::Sat) == ! establish_ac(inst).has_empty_domain());
    }
    CHECK(members >= 20);
}

TEST_CASE("SAC decides the C3_neq class")
{
    Rng rng(34);
    int members = 0;
    for (int round = 0 ; round < 400 && members < 60 ; ++round) {
        auto inst = random_instance(rng, { rng.between(2, 5), 3, 0.6, 0.5, true });
        bool member = forbids({ make_c3_neq() }, inst, Mode::TopologicalMinor, RelationSpec{ RelationKind::Neq, {} }).forbidden;
        if (! member) {
            CHECK(code_of([&] { decide_sac_class(inst); }) == ErrorCode::NotInClass);
            continue;
        }
        ++members;
        auto r = decide_sac_class(inst);
        check_result(inst, r);
        CHECK((r.status == Status::Sat) == ! establish_sac(inst).has_empty_domain());
    }
    CHECK(members >= 20);
}

TEST_CASE("polymorphisms")
{
    Operation max2{ 2, { 0, 1 }, {} };
    Operation first{ 2, { 0, 1 }, {} };
    for (int a = 0 ; a < 2 ; ++a)
        for (int b = 0 ; b < 2 ; ++b) {
            max2.table[{ a, b }] = std::max(a, b);
            first.table[{ a, b }] = a;
        }
    auto t = neq_triangle();
    CHECK(check_polymorphism(first, t));
    CHECK(! check_polymorphism(max2, t));

    Operation partial = max2;
    partial.table.erase({ 1, 1 });
    CHECK(code_of([&] { check_polymorphism(partial, t); }) == ErrorCode::PartialTable);
    Instance other;
    other.add_variable("x", { 0, 1, 2 });
    CHECK(code_of([&] { check_polymorphism(max2, other); }) == ErrorCode::DomainMismatch);

    Rng rng(36);
    for (int round = 0 ; round < 100 ; ++round) {
        auto inst = random_instance(rng, { rng.between(2, 4), 2, 0.7, 0.5, false });
        bool want = true;
        for (auto & [uv, rel] : inst.relations())
            want = want && oracle::closed_under(max2, inst.allowed_pairs(uv.first, uv.second));
        CHECK(check_polymorphism(max2, inst) == want);
    }
}

TEST_CASE("classify")
{
    auto r = classify(neq_triangle());
    CHECK(! r.acyclic);
    CHECK(r.forb_tm_c3_neq);
    CHECK(r.recommended == "tutte");

    Instance path;
    for (auto n : { "a", "b", "c" })
        path.add_variable(n, { 0, 1 });
    path.constrain(0, 1, { { 0, 1 }, { 1, 0 } });
    path.constrain(1, 2, { { 0, 1 }, { 1, 0 } });
    r = classify(path);
    CHECK(r.acyclic);
    CHECK(r.recommended == "acyclic");
    CHECK(r.forb_sp_pivot.size() == 2);

    for (auto m : { "bruteforce", "mac", "acyclic", "articulation", "tutte" })
        CHECK(solve_with(path, m).status == Status::Sat);
    CHECK(code_of([&] { solve_with(path, "nonesuch"); }) == ErrorCode::BadInput);
}
