/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minorcsp/graphs.hh>
#include <minorcsp/solvers.hh>

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <stdexcept>

using namespace minorcsp;

namespace
{
    auto constrained_neighbours(const Instance & inst) -> std::vector<std::vector<Var>>
    {
        std::vector<std::vector<Var>> result(inst.size());
        for (auto & [key, _] : inst.relations()) {
            result[key.first].push_back(key.second);
            result[key.second].push_back(key.first);
        }
        for (auto & r : result)
            std::sort(r.begin(), r.end());
        return result;
    }

    auto with_domains(const Instance & inst, const std::vector<std::vector<Value>> & domains) -> Instance
    {
        Instance result = inst;
        for (Var v = 0 ; v < inst.size() ; ++v)
            if (domains[v] != inst.domain(v))
                result.set_domain(v, domains[v]);
        result.normalise();
        return result;
    }
}

auto minorcsp::brute_force_cap() -> long long
{
    if (auto s = std::getenv("MINORCSP_CAP")) {
        try {
            std::size_t used = 0;
            long long cap = std::stoll(s, &used);
            if (used == std::string(s).size() && cap > 0)
                return cap;
        }
        catch (const std::exception &) {
        }
    }
    return default_brute_force_cap;
}

auto minorcsp::brute_force_solve(const Instance & inst) -> SolveResult
{
    return brute_force_solve(inst, brute_force_cap());
}

auto minorcsp::brute_force_solve(const Instance & inst, long long cap) -> SolveResult
{
    SolveResult result;
    if (inst.size() == 0) {
        result.status = Status::Sat;
        result.assignment = Assignment{};
        return result;
    }
    if (inst.has_empty_domain())
        return result;

    long long product = 1;
    for (auto & d : inst.domains()) {
        product *= (long long)(d.size());
        if (product > cap)
            throw Error(ErrorCode::CapExceeded, "search space exceeds " + std::to_string(cap));
    }

    int n = inst.size();
    std::vector<unsigned> idx(n, 0);
    Assignment s(n);
    while (true) {
        ++result.stats.nodes;
        for (int v = 0 ; v < n ; ++v)
            s[v] = inst.domain(v)[idx[v]];
        if (satisfies(inst, s)) {
            result.status = Status::Sat;
            result.assignment = s;
            return result;
        }
        int v = n - 1;
        while (v >= 0 && ++idx[v] == inst.domain(v).size())
            idx[v--] = 0;
        if (v < 0)
            return result;
    }
}

auto minorcsp::establish_ac(const Instance & inst, SolveStats * stats) -> Instance
{
    auto domains = inst.domains();
    auto nbrs = constrained_neighbours(inst);

    std::deque<std::pair<Var, Var>> queue;
    std::set<std::pair<Var, Var>> queued;
    for (Var u = 0 ; u < inst.size() ; ++u)
        for (auto v : nbrs[u]) {
            queue.emplace_back(u, v);
            queued.emplace(u, v);
        }

    while (! queue.empty()) {
        auto [u, v] = queue.front();
        queue.pop_front();
        queued.erase({ u, v });
        if (stats)
            ++stats->propagations;

        std::vector<Value> kept;
        for (auto a : domains[u])
            if (std::any_of(domains[v].begin(), domains[v].end(), [&] (Value b) { return inst.allowed(u, a, v, b); }))
                kept.push_back(a);

        if (kept.size() != domains[u].size()) {
            domains[u] = kept;
            for (auto w : nbrs[u])
                if (w != v && queued.emplace(w, u).second)
                    queue.emplace_back(w, u);
        }
    }

    return with_domains(inst, domains);
}

auto minorcsp::assign(const Instance & inst, Var v, Value a) -> Instance
{
    auto domains = inst.domains();
    domains[v] = inst.in_domain(v, a) ? std::vector<Value>{ a } : std::vector<Value>{};
    for (Var u = 0 ; u < inst.size() ; ++u) {
        if (u == v)
            continue;
        std::vector<Value> kept;
        for (auto b : domains[u])
            if (inst.allowed(v, a, u, b))
                kept.push_back(b);
        domains[u] = kept;
    }
    return with_domains(inst, domains);
}

auto minorcsp::establish_sac(const Instance & inst, SolveStats * stats) -> Instance
{
    Instance current = establish_ac(inst, stats);
    bool changed = true;
    while (changed && ! current.has_empty_domain()) {
        changed = false;
        for (Var v = 0 ; v < current.size() && ! changed ; ++v)
            for (auto a : current.domain(v)) {
                if (stats)
                    ++stats->subcalls;
                if (establish_ac(assign(current, v, a), stats).has_empty_domain()) {
                    auto d = current.domain(v);
                    d.erase(std::find(d.begin(), d.end(), a));
                    current.set_domain(v, d);
                    current = establish_ac(current, stats);
                    changed = true;
                    break;
                }
            }
    }

    if (current.has_empty_domain()) {
        auto domains = current.domains();
        for (auto & d : domains)
            d.clear();
        return with_domains(current, domains);
    }
    return current;
}

namespace
{
    auto mac(const Instance & inst, SolveStats & stats) -> std::optional<Assignment>
    {
        ++stats.nodes;
        auto j = establish_ac(inst, &stats);
        if (j.has_empty_domain())
            return std::nullopt;

        Var branch = -1;
        for (Var v = 0 ; v < j.size() ; ++v)
            if (j.domain(v).size() > 1 && (branch == -1 || j.domain(v).size() < j.domain(branch).size()))
                branch = v;

        if (branch == -1) {
            Assignment s(j.size());
            for (Var v = 0 ; v < j.size() ; ++v)
                s[v] = j.domain(v).front();
            if (satisfies(j, s))
                return s;
            return std::nullopt;
        }

        for (auto a : j.domain(branch))
            if (auto s = mac(assign(j, branch, a), stats))
                return s;
        return std::nullopt;
    }
}

auto minorcsp::mac_solve(const Instance & inst) -> SolveResult
{
    SolveResult result;
    if (inst.has_empty_domain())
        return result;
    if (auto s = mac(inst, result.stats)) {
        result.status = Status::Sat;
        result.assignment = s;
    }
    return result;
}

auto minorcsp::solve_acyclic(const Instance & inst) -> SolveResult
{
    auto g = constraint_graph(inst);
    if (! is_acyclic(g))
        throw Error(ErrorCode::NotAcyclic, "constraint graph has a cycle");

    SolveResult result;
    if (inst.has_empty_domain())
        return result;

    auto domains = inst.domains();
    Assignment s(inst.size(), 0);

    for (auto & comp : connected_components(g)) {
        std::vector<Var> order{ comp.front() };
        std::map<Var, Var> parent{ { comp.front(), -1 } };
        for (unsigned i = 0 ; i < order.size() ; ++i)
            for (auto w : neighbours(g, order[i]))
                if (! parent.contains(w)) {
                    parent[w] = order[i];
                    order.push_back(w);
                }

        for (auto i = order.rbegin() ; i != order.rend() ; ++i) {
            Var c = *i, p = parent[c];
            if (p == -1)
                continue;
            ++result.stats.propagations;
            std::vector<Value> kept;
            for (auto a : domains[p])
                if (std::any_of(domains[c].begin(), domains[c].end(), [&] (Value b) { return inst.allowed(p, a, c, b); }))
                    kept.push_back(a);
            domains[p] = kept;
            if (kept.empty())
                return result;
        }

        for (auto v : order) {
            ++result.stats.nodes;
            Var p = parent[v];
            auto & d = domains[v];
            auto i = std::find_if(d.begin(), d.end(), [&] (Value a) { return p == -1 || inst.allowed(p, s[p], v, a); });
            if (i == d.end())
                throw std::logic_error("directional arc consistency left an unsupported value");
            s[v] = *i;
        }
    }

    result.status = Status::Sat;
    result.assignment = s;
    return result;
}
