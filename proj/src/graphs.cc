/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minorcsp/graphs.hh>

#include <algorithm>
#include <functional>
#include <numeric>

using namespace minorcsp;

namespace
{
    auto adjacency(const Graph & g) -> std::map<int, std::vector<int>>
    {
        std::map<int, std::vector<int>> adj;
        for (auto v : g.vertices)
            adj[v];
        for (auto & [a, b] : g.edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        for (auto & [_, n] : adj)
            std::sort(n.begin(), n.end());
        return adj;
    }

    auto count_components(const Graph & g) -> int
    {
        return int(connected_components(g).size());
    }
}

auto minorcsp::constraint_graph(const Pattern & p) -> Graph
{
    Graph g;
    g.vertices = p.parts();
    for (auto & [a, b] : p.negative())
        g.edges.insert(make_edge(p.part_of(a), p.part_of(b)));
    return g;
}

auto minorcsp::constraint_graph(const Instance & inst) -> Graph
{
    Graph g;
    for (Var v = 0 ; v < inst.size() ; ++v)
        g.vertices.push_back(v);
    for (auto & [key, _] : inst.relations())
        if (inst.constrained(key.first, key.second))
            g.edges.insert(key);
    return g;
}

auto minorcsp::connected_components(const Graph & g) -> std::vector<std::vector<int>>
{
    auto adj = adjacency(g);
    std::set<int> seen;
    std::vector<std::vector<int>> result;
    for (auto v : g.vertices) {
        if (seen.contains(v))
            continue;
        std::vector<int> comp, stack{ v };
        seen.insert(v);
        while (! stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (auto y : adj[x])
                if (seen.insert(y).second)
                    stack.push_back(y);
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(comp);
    }
    return result;
}

auto minorcsp::is_connected(const Graph & g) -> bool
{
    return count_components(g) <= 1;
}

auto minorcsp::is_acyclic(const Graph & g) -> bool
{
    return int(g.edges.size()) + count_components(g) == int(g.vertices.size());
}

auto minorcsp::induced_subgraph(const Graph & g, const std::vector<int> & vertices) -> Graph
{
    std::set<int> keep(vertices.begin(), vertices.end());
    Graph h;
    h.vertices.assign(keep.begin(), keep.end());
    for (auto & e : g.edges)
        if (keep.contains(e.first) && keep.contains(e.second))
            h.edges.insert(e);
    return h;
}

auto minorcsp::remove_vertices(const Graph & g, const std::set<int> & gone) -> Graph
{
    std::vector<int> keep;
    for (auto v : g.vertices)
        if (! gone.contains(v))
            keep.push_back(v);
    return induced_subgraph(g, keep);
}

auto minorcsp::articulation_vertices(const Graph & g) -> std::set<int>
{
    std::set<int> result;
    int base = count_components(g);
    for (auto v : g.vertices) {
        auto h = remove_vertices(g, { v });
        bool isolated = neighbours(g, v).empty();
        if (count_components(h) > base - (isolated ? 1 : 0))
            result.insert(v);
    }
    return result;
}

auto minorcsp::blocks(const Graph & g) -> std::vector<std::vector<int>>
{
    auto adj = adjacency(g);
    std::map<int, int> disc, low;
    std::vector<Edge> stack;
    std::vector<std::vector<int>> result;
    int time = 0;

    std::function<void (int, int)> dfs = [&] (int v, int parent) {
        disc[v] = low[v] = ++time;
        for (auto w : adj[v]) {
            if (! disc.contains(w)) {
                stack.emplace_back(v, w);
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    std::set<int> block;
                    while (true) {
                        auto e = stack.back();
                        stack.pop_back();
                        block.insert(e.first);
                        block.insert(e.second);
                        if (e == Edge{ v, w })
                            break;
                    }
                    result.emplace_back(block.begin(), block.end());
                }
            }
            else if (w != parent && disc[w] < disc[v]) {
                stack.emplace_back(v, w);
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };

    for (auto v : g.vertices)
        if (! disc.contains(v)) {
            if (adj[v].empty()) {
                disc[v] = ++time;
                result.push_back({ v });
            }
            else
                dfs(v, -1);
        }

    std::sort(result.begin(), result.end());
    return result;
}

namespace
{
    struct TmSearch
    {
        const Graph & h;
        const Graph & g;
        std::map<int, std::vector<int>> gadj;
        std::vector<int> hverts;
        std::vector<Edge> hedges;
        std::map<int, int> hdeg;

        std::map<int, int> branch;
        std::set<int> used_g;
        std::map<Edge, std::vector<int>> paths;

        TmSearch(const Graph & a, const Graph & b) :
            h(a), g(b), gadj(adjacency(b))
        {
            // highest degree first, then id
            for (auto & [x, y] : h.edges) {
                ++hdeg[x];
                ++hdeg[y];
            }
            hverts = h.vertices;
            std::stable_sort(hverts.begin(), hverts.end(), [&] (int x, int y) { return hdeg[x] > hdeg[y]; });
            hedges.assign(h.edges.begin(), h.edges.end());
        }

        auto route(unsigned e) -> bool
        {
            if (e == hedges.size())
                return true;
            auto [u, v] = hedges[e];
            int from = branch.at(u), to = branch.at(v);
            std::vector<int> path{ from };

            std::function<bool (int)> extend = [&] (int x) -> bool {
                for (auto y : gadj[x]) {
                    if (y == to) {
                        path.push_back(y);
                        paths[hedges[e]] = path;
                        if (route(e + 1))
                            return true;
                        paths.erase(hedges[e]);
                        path.pop_back();
                        continue;
                    }
                    if (used_g.contains(y))
                        continue;
                    used_g.insert(y);
                    path.push_back(y);
                    if (extend(y))
                        return true;
                    path.pop_back();
                    used_g.erase(y);
                }
                return false;
            };
            return extend(from);
        }

        auto place(unsigned i) -> bool
        {
            if (i == hverts.size())
                return route(0);
            int x = hverts[i];
            for (auto y : g.vertices) {
                if (used_g.contains(y) || int(gadj[y].size()) < hdeg[x])
                    continue;
                branch[x] = y;
                used_g.insert(y);
                if (place(i + 1))
                    return true;
                used_g.erase(y);
                branch.erase(x);
            }
            return false;
        }
    };
}

auto minorcsp::graph_topological_minor(const Graph & h, const Graph & g, const GraphMinorLimits & limits)
    -> std::optional<TopologicalMinorWitness>
{
    if (int(h.vertices.size()) > limits.max_h || int(g.vertices.size()) > limits.max_g)
        throw Error(ErrorCode::SizeLimitExceeded, "graph topological minor test beyond "
                + std::to_string(limits.max_h) + "/" + std::to_string(limits.max_g) + " vertices");
    if (h.vertices.size() > g.vertices.size() || h.edges.size() > g.edges.size())
        return std::nullopt;
    if (! is_acyclic(h) && is_acyclic(g))
        return std::nullopt;

    TmSearch s(h, g);
    if (! s.place(0))
        return std::nullopt;
    return TopologicalMinorWitness{ s.branch, s.paths };
}

auto minorcsp::verify_topological_minor(const Graph & h, const Graph & g, const TopologicalMinorWitness & w) -> bool
{
    std::set<int> images;
    for (auto v : h.vertices) {
        auto i = w.branch.find(v);
        if (i == w.branch.end() || ! std::binary_search(g.vertices.begin(), g.vertices.end(), i->second))
            return false;
        if (! images.insert(i->second).second)
            return false;
    }

    std::set<int> interior;
    for (auto & e : h.edges) {
        auto i = w.paths.find(e);
        if (i == w.paths.end())
            return false;
        auto & path = i->second;
        if (path.size() < 2 || path.front() != w.branch.at(e.first) || path.back() != w.branch.at(e.second))
            return false;
        for (unsigned k = 0 ; k + 1 < path.size() ; ++k)
            if (! g.edges.contains(make_edge(path[k], path[k + 1])))
                return false;
        for (unsigned k = 1 ; k + 1 < path.size() ; ++k) {
            if (images.contains(path[k]))
                return false;
            if (! interior.insert(path[k]).second)
                return false;
        }
    }
    return w.paths.size() == h.edges.size();
}

auto minorcsp::part_disjoint_positive_path(const Instance & inst, InstancePoint src, InstancePoint dst,
        const std::set<InstancePoint> * usable) -> std::optional<std::vector<InstancePoint>>
{
    auto ok = [&] (InstancePoint x) {
        return inst.in_domain(x.first, x.second) && (! usable || usable->contains(x));
    };
    if (! ok(src) || ! ok(dst))
        return std::nullopt;
    if (src == dst)
        return std::vector<InstancePoint>{ src };

    std::vector<bool> visited(inst.size(), false);
    std::vector<InstancePoint> path{ src };
    visited[src.first] = true;

    std::function<bool (InstancePoint)> dfs = [&] (InstancePoint x) -> bool {
        for (Var v = 0 ; v < inst.size() ; ++v) {
            if (visited[v])
                continue;
            for (auto b : inst.domain(v)) {
                InstancePoint y{ v, b };
                if (! ok(y) || ! inst.allowed(x.first, x.second, v, b))
                    continue;
                if (y == dst) {
                    path.push_back(y);
                    return true;
                }
                if (v == dst.first)
                    continue;
                visited[v] = true;
                path.push_back(y);
                if (dfs(y))
                    return true;
                path.pop_back();
                visited[v] = false;
            }
        }
        return false;
    };

    if (dfs(src))
        return path;
    return std::nullopt;
}
