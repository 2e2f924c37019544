/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minorcsp/catalogue.hh>
#include <minorcsp/graphs.hh>
#include <minorcsp/occurrence.hh>
#include <minorcsp/solvers.hh>

#include <algorithm>
#include <stdexcept>

using namespace minorcsp;

namespace
{
    auto neq() -> RelationSpec
    {
        return RelationSpec{ RelationKind::Neq, {} };
    }

    auto forbidden_tm(const AugmentedPattern & p, const Instance & inst, bool with_neq) -> bool
    {
        return forbids({ p }, inst, Mode::TopologicalMinor, with_neq ? std::optional{ neq() } : std::nullopt).forbidden;
    }

    auto forbidden_sp(const AugmentedPattern & p, const Instance & inst, bool with_neq) -> bool
    {
        return forbids({ p }, inst, Mode::SubPattern, with_neq ? std::optional{ neq() } : std::nullopt).forbidden;
    }

    /// Assign the least variable, re-establish arc consistency, and recurse on each connected piece.
    auto extract(const Instance & inst, const std::vector<Var> & vars, Assignment & s, SolveStats & stats) -> bool
    {
        if (vars.empty())
            return true;
        ++stats.nodes;

        Var v = vars.front();
        for (auto a : inst.domain(v)) {
            auto j = establish_ac(assign(inst, v, a), &stats);
            if (j.has_empty_domain())
                continue;

            std::vector<Var> rest(vars.begin() + 1, vars.end());
            auto g = induced_subgraph(constraint_graph(j), rest);
            bool ok = true;
            auto saved = s;
            s[v] = a;
            for (auto & comp : connected_components(g))
                if (! extract(j, comp, s, stats)) {
                    ok = false;
                    break;
                }
            if (ok)
                return true;
            s = saved;
        }
        return false;
    }
}

auto minorcsp::decide_ac_class(const Instance & inst) -> SolveResult
{
    if (! forbidden_tm(make_k_neq(), inst, true))
        throw Error(ErrorCode::NotInClass, "K_neq occurs as a topological minor");

    SolveResult result;
    auto j = establish_ac(inst, &result.stats);
    if (j.has_empty_domain())
        return result;

    Assignment s(inst.size(), 0);
    for (auto & comp : connected_components(constraint_graph(j)))
        if (! extract(j, comp, s, result.stats))
            throw std::logic_error("arc-consistent class member without a solution");

    if (! satisfies(inst, s))
        throw std::logic_error("assembled assignment does not satisfy the instance");
    result.status = Status::Sat;
    result.assignment = s;
    return result;
}

auto minorcsp::decide_sac_class(const Instance & inst) -> SolveResult
{
    if (! forbidden_tm(make_c3_neq(), inst, true))
        throw Error(ErrorCode::NotInClass, "PG(C3)_neq occurs as a topological minor");

    SolveResult result;
    auto j = establish_sac(inst, &result.stats);
    if (j.has_empty_domain())
        return result;

    Assignment s(inst.size(), 0);
    for (Var v = 0 ; v < j.size() ; ++v) {
        bool placed = false;
        for (auto a : j.domain(v)) {
            ++result.stats.nodes;
            auto next = establish_sac(assign(j, v, a), &result.stats);
            if (! next.has_empty_domain()) {
                j = next;
                s[v] = a;
                placed = true;
                break;
            }
        }
        if (! placed)
            throw std::logic_error("singleton arc-consistent class member without a solution");
    }

    if (! satisfies(inst, s))
        throw std::logic_error("assembled assignment does not satisfy the instance");
    result.status = Status::Sat;
    result.assignment = s;
    return result;
}

auto minorcsp::check_polymorphism(const Operation & f, const Instance & inst) -> bool
{
    auto domain = f.domain;
    std::sort(domain.begin(), domain.end());
    for (Var v = 0 ; v < inst.size() ; ++v)
        if (inst.domain(v) != domain)
            throw Error(ErrorCode::DomainMismatch, "domain of " + inst.name(v) + " differs from the operation's domain");
    if (! f.is_total())
        throw Error(ErrorCode::PartialTable, "operation table is not total");

    int k = f.arity;
    for (auto & [key, rel] : inst.relations()) {
        std::vector<ValuePair> pairs(rel.begin(), rel.end());
        if (pairs.empty())
            continue;
        std::vector<unsigned> idx(k, 0);
        std::vector<int> xs(k), ys(k);
        while (true) {
            for (int i = 0 ; i < k ; ++i) {
                xs[i] = pairs[idx[i]].first;
                ys[i] = pairs[idx[i]].second;
            }
            if (! rel.contains({ *f.apply(xs), *f.apply(ys) }))
                return false;
            int i = k - 1;
            while (i >= 0 && ++idx[i] == pairs.size())
                idx[i--] = 0;
            if (i < 0)
                break;
        }
    }
    return true;
}

auto minorcsp::classify(const Instance & inst, int pivot_bound) -> ClassReport
{
    ClassReport r;
    r.acyclic = is_acyclic(constraint_graph(inst));
    r.forb_tm_k = forbidden_tm(make_named("K"), inst, false);
    r.forb_tm_l = forbidden_tm(make_named("L"), inst, false);
    r.forb_tm_k_neq = forbidden_tm(make_k_neq(), inst, true);
    r.forb_tm_c3_neq = forbidden_tm(make_c3_neq(), inst, true);
    for (int k = 1 ; k <= pivot_bound ; ++k) {
        r.forb_sp_pivot.emplace_back(k, forbidden_sp(make_named("pivot:" + std::to_string(k)), inst, false));
        r.forb_sp_pivot_neq.emplace_back(k, forbidden_sp(make_pivot_neq(k), inst, true));
    }

    if (r.acyclic)
        r.recommended = "acyclic";
    else if (r.forb_tm_k)
        r.recommended = "articulation";
    else if (r.forb_tm_l)
        r.recommended = "tutte";
    else if (r.forb_tm_k_neq)
        r.recommended = "ac-class";
    else if (r.forb_tm_c3_neq)
        r.recommended = "sac-class";
    else
        r.recommended = "mac";
    return r;
}

auto minorcsp::solve_with(const Instance & inst, const std::string & method) -> SolveResult
{
    if (method == "auto")
        return solve_with(inst, classify(inst).recommended);
    if (method == "bruteforce")
        return brute_force_solve(inst);
    if (method == "mac")
        return mac_solve(inst);
    if (method == "acyclic")
        return solve_acyclic(inst);
    if (method == "articulation")
        return solve_articulation(inst);
    if (method == "tutte")
        return solve_tutte_scheme(inst);
    if (method == "ac-class")
        return decide_ac_class(inst);
    if (method == "sac-class")
        return decide_sac_class(inst);
    throw Error(ErrorCode::BadInput, "unknown method " + method);
}
