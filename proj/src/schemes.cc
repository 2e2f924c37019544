/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minorcsp/graphs.hh>
#include <minorcsp/solvers.hh>

#include <algorithm>
#include <stdexcept>

using namespace minorcsp;

namespace
{
    /// A piece eliminated by a scheme: its variables, the retained separator, and one solution per separator assignment.
    struct Eliminated
    {
        std::vector<Var> vars;
        std::vector<Var> separator;
        std::map<std::vector<Value>, Assignment> solutions;
    };

    auto remaining_graph(const Instance & inst, const std::vector<bool> & alive) -> Graph
    {
        auto g = constraint_graph(inst);
        std::set<int> gone;
        for (Var v = 0 ; v < inst.size() ; ++v)
            if (! alive[v])
                gone.insert(v);
        return remove_vertices(g, gone);
    }

    auto alive_vars(const std::vector<bool> & alive) -> std::vector<Var>
    {
        std::vector<Var> result;
        for (Var v = 0 ; v < Var(alive.size()) ; ++v)
            if (alive[v])
                result.push_back(v);
        return result;
    }

    /**
     * Solves the piece on vars once for each allowed assignment of the separator.
     * Returns the surviving separator assignments and records the solutions.
     */
    auto solve_piece(const Instance & inst, const std::vector<Var> & vars, const std::vector<Var> & separator,
            const LeafSolver & leaf, SolveStats & stats, Eliminated & record) -> std::set<std::vector<Value>>
    {
        std::vector<int> sep_index;
        for (auto x : separator)
            sep_index.push_back(int(std::find(vars.begin(), vars.end(), x) - vars.begin()));

        std::vector<std::vector<Value>> candidates;
        if (separator.size() == 1)
            for (auto a : inst.domain(separator[0]))
                candidates.push_back({ a });
        else
            for (auto & [a, b] : inst.allowed_pairs(separator[0], separator[1]))
                candidates.push_back({ a, b });

        std::set<std::vector<Value>> survivors;
        auto base = subinstance(inst, vars);
        for (auto & c : candidates) {
            auto sub = base;
            for (unsigned i = 0 ; i < separator.size() ; ++i)
                sub.set_domain(sep_index[i], { c[i] });
            ++stats.subcalls;
            auto r = leaf(sub);
            if (r.status == Status::Sat) {
                survivors.insert(c);
                record.solutions.emplace(c, *r.assignment);
            }
        }
        record.vars = vars;
        record.separator = separator;
        return survivors;
    }

    auto finish(const Instance & inst, std::vector<bool> & alive, const std::vector<Eliminated> & eliminated,
            const LeafSolver & leaf, SolveResult & result) -> SolveResult
    {
        auto vars = alive_vars(alive);
        Assignment s(inst.size(), 0);
        if (! vars.empty()) {
            ++result.stats.subcalls;
            auto r = leaf(subinstance(inst, vars));
            if (r.status != Status::Sat)
                return result;
            for (unsigned i = 0 ; i < vars.size() ; ++i)
                s[vars[i]] = (*r.assignment)[i];
        }

        for (auto e = eliminated.rbegin() ; e != eliminated.rend() ; ++e) {
            std::vector<Value> key;
            for (auto x : e->separator)
                key.push_back(s[x]);
            auto & sol = e->solutions.at(key);
            for (unsigned i = 0 ; i < e->vars.size() ; ++i)
                s[e->vars[i]] = sol[i];
        }

        result.status = Status::Sat;
        result.assignment = s;
        return result;
    }
}

auto minorcsp::solve_articulation(const Instance & input, const LeafSolver & leaf) -> SolveResult
{
    SolveResult result;
    if (input.has_empty_domain())
        return result;

    Instance inst = input;
    std::vector<bool> alive(inst.size(), true);
    std::vector<Eliminated> eliminated;

    while (true) {
        auto g = remaining_graph(inst, alive);
        auto cut = articulation_vertices(g);
        if (cut.empty())
            break;

        std::vector<int> leaf_block;
        Var a = -1;
        for (auto & b : blocks(g)) {
            std::vector<int> in_cut;
            for (auto v : b)
                if (cut.contains(v))
                    in_cut.push_back(v);
            if (in_cut.size() == 1) {
                leaf_block = b;
                a = in_cut[0];
                break;
            }
        }
        if (a == -1)
            throw std::logic_error("no leaf block despite an articulation vertex");

        Eliminated record;
        auto survivors = solve_piece(inst, leaf_block, { a }, leaf, result.stats, record);
        std::vector<Value> d;
        for (auto & s : survivors)
            d.push_back(s[0]);
        inst.set_domain(a, d);
        if (d.empty())
            return result;

        std::erase(record.vars, a);
        std::vector<Var> piece = leaf_block;
        for (auto & [key, sol] : record.solutions) {
            Assignment trimmed;
            for (unsigned i = 0 ; i < piece.size() ; ++i)
                if (piece[i] != a)
                    trimmed.push_back(sol[i]);
            sol = trimmed;
        }
        for (auto v : record.vars)
            alive[v] = false;
        eliminated.push_back(std::move(record));
    }

    return finish(inst, alive, eliminated, leaf, result);
}

auto minorcsp::solve_tutte_scheme(const Instance & input, const LeafSolver & leaf) -> SolveResult
{
    SolveResult result;
    if (input.has_empty_domain())
        return result;

    Instance inst = input;
    std::vector<bool> alive(inst.size(), true);
    std::vector<Eliminated> eliminated;

    while (true) {
        auto g = remaining_graph(inst, alive);

        std::optional<std::pair<std::vector<int>, std::vector<int>>> chosen;
        for (auto & comp : connected_components(g)) {
            auto tree = tutte_decompose(induced_subgraph(g, comp));
            if (tree.nodes.size() < 2)
                continue;
            std::vector<int> degree(tree.nodes.size(), 0);
            for (auto & arc : tree.arcs) {
                ++degree[arc.a];
                ++degree[arc.b];
            }
            for (unsigned i = 0 ; i < tree.nodes.size() && ! chosen ; ++i) {
                if (degree[i] != 1)
                    continue;
                auto & arc = *std::find_if(tree.arcs.begin(), tree.arcs.end(),
                        [&] (auto & x) { return x.a == int(i) || x.b == int(i); });
                auto & vs = tree.nodes[i].vertices;
                if (vs.size() > arc.separator.size())
                    chosen = { vs, arc.separator };
            }
            if (chosen)
                break;
        }
        if (! chosen)
            break;

        auto & [piece, separator] = *chosen;
        Eliminated record;
        auto survivors = solve_piece(inst, piece, separator, leaf, result.stats, record);
        if (survivors.empty())
            return result;

        if (separator.size() == 1) {
            std::vector<Value> d;
            for (auto & s : survivors)
                d.push_back(s[0]);
            inst.set_domain(separator[0], d);
        }
        else {
            std::set<ValuePair> keep;
            for (auto & s : survivors)
                keep.emplace(s[0], s[1]);
            inst.restrict_pair(separator[0], separator[1], keep);
        }

        std::vector<Var> gone;
        std::vector<unsigned> positions;
        for (unsigned i = 0 ; i < piece.size() ; ++i)
            if (std::find(separator.begin(), separator.end(), piece[i]) == separator.end()) {
                gone.push_back(piece[i]);
                positions.push_back(i);
            }
        for (auto & [key, sol] : record.solutions) {
            Assignment trimmed;
            for (auto i : positions)
                trimmed.push_back(sol[i]);
            sol = trimmed;
        }
        record.vars = gone;
        for (auto v : gone)
            alive[v] = false;
        eliminated.push_back(std::move(record));
    }

    return finish(inst, alive, eliminated, leaf, result);
}
