/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minorcsp/graphs.hh>

#include <algorithm>

using namespace minorcsp;

namespace
{
    auto smallest(std::vector<std::vector<int>> comps) -> std::vector<int>
    {
        return *std::min_element(comps.begin(), comps.end(), [] (auto & a, auto & b) {
                return std::pair{ a.size(), a } < std::pair{ b.size(), b };
                });
    }

    /// Least separator of order one, then two, with the smallest component it cuts off.
    auto find_separation(const Graph & g) -> std::optional<Separation>
    {
        for (auto v : g.vertices) {
            auto comps = connected_components(remove_vertices(g, { v }));
            if (comps.size() > 1)
                return Separation{ { v }, smallest(comps) };
        }
        for (unsigned i = 0 ; i < g.vertices.size() ; ++i)
            for (unsigned j = i + 1 ; j < g.vertices.size() ; ++j) {
                int x = g.vertices[i], y = g.vertices[j];
                auto comps = connected_components(remove_vertices(g, { x, y }));
                if (comps.size() > 1)
                    return Separation{ { x, y }, smallest(comps) };
            }
        return std::nullopt;
    }

    struct Builder
    {
        const Graph & original;
        DecompositionTree tree;

        auto node_with(int first, int last, const std::vector<int> & sep) -> int
        {
            for (int i = first ; i < last ; ++i)
                if (std::all_of(sep.begin(), sep.end(), [&] (int v) {
                            return std::binary_search(tree.nodes[i].vertices.begin(), tree.nodes[i].vertices.end(), v); }))
                    return i;
            return first;
        }

        auto build(const Graph & torso) -> void
        {
            auto kind = TorsoKind::Small;
            std::optional<Separation> sep;
            if (is_cycle(torso))
                kind = TorsoKind::Cycle;
            else if (torso.vertices.size() > 3 && ! (sep = find_separation(torso)))
                kind = TorsoKind::ThreeConnected;

            if (! sep) {
                DecompositionNode n;
                n.vertices = torso.vertices;
                n.torso_edges = torso.edges;
                for (auto & e : torso.edges)
                    if (! original.edges.contains(e))
                        n.virtual_edges.insert(e);
                n.kind = kind;
                tree.nodes.push_back(std::move(n));
                return;
            }

            std::set<int> side(sep->side.begin(), sep->side.end());
            std::vector<int> a = sep->side, b;
            a.insert(a.end(), sep->separator.begin(), sep->separator.end());
            for (auto v : torso.vertices)
                if (! side.contains(v))
                    b.push_back(v);

            auto ga = induced_subgraph(torso, a), gb = induced_subgraph(torso, b);
            if (sep->separator.size() == 2) {
                auto e = make_edge(sep->separator[0], sep->separator[1]);
                ga.edges.insert(e);
                gb.edges.insert(e);
            }

            int start_a = int(tree.nodes.size());
            build(ga);
            int start_b = int(tree.nodes.size());
            build(gb);
            int end = int(tree.nodes.size());

            tree.arcs.push_back(DecompositionArc{ node_with(start_a, start_b, sep->separator),
                    node_with(start_b, end, sep->separator), sep->separator });
        }
    };
}

auto minorcsp::torso_kind_name(TorsoKind k) -> const char *
{
    switch (k) {
        case TorsoKind::ThreeConnected: return "THREE_CONNECTED";
        case TorsoKind::Cycle:          return "CYCLE";
        case TorsoKind::Small:          return "SMALL";
    }
    return "?";
}

auto minorcsp::is_cycle(const Graph & g) -> bool
{
    if (g.vertices.size() < 3 || g.edges.size() != g.vertices.size() || ! is_connected(g))
        return false;
    for (auto v : g.vertices)
        if (neighbours(g, v).size() != 2)
            return false;
    return true;
}

auto minorcsp::is_three_connected(const Graph & g) -> bool
{
    return g.vertices.size() >= 4 && is_connected(g) && ! find_separation(g);
}

auto minorcsp::two_separations(const Graph & g) -> std::vector<Separation>
{
    std::vector<Separation> result;
    auto cut = articulation_vertices(g);
    int base = int(connected_components(g).size());
    for (auto v : cut) {
        auto comps = connected_components(remove_vertices(g, { v }));
        result.push_back(Separation{ { v }, smallest(comps) });
    }
    for (unsigned i = 0 ; i < g.vertices.size() ; ++i)
        for (unsigned j = i + 1 ; j < g.vertices.size() ; ++j) {
            int x = g.vertices[i], y = g.vertices[j];
            if (cut.contains(x) || cut.contains(y))
                continue;
            auto comps = connected_components(remove_vertices(g, { x, y }));
            if (int(comps.size()) > base)
                result.push_back(Separation{ { x, y }, smallest(comps) });
        }
    return result;
}

auto minorcsp::tutte_decompose(const Graph & g) -> DecompositionTree
{
    if (! is_connected(g))
        throw Error(ErrorCode::Disconnected, "Tutte decomposition needs a connected graph");
    Builder b{ g, {} };
    b.build(g);
    return b.tree;
}
