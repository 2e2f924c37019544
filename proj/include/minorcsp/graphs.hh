/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINORCSP_GUARD_GRAPHS_HH
#define MINORCSP_GUARD_GRAPHS_HH 1

#include <minorcsp/instance.hh>
#include <minorcsp/pattern.hh>

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace minorcsp
{
    auto constraint_graph(const Pattern &) -> Graph;
    auto constraint_graph(const Instance &) -> Graph;

    auto is_acyclic(const Graph &) -> bool;
    auto articulation_vertices(const Graph &) -> std::set<int>;
    auto connected_components(const Graph &) -> std::vector<std::vector<int>>;
    auto is_connected(const Graph &) -> bool;
    auto induced_subgraph(const Graph &, const std::vector<int> & vertices) -> Graph;
    auto remove_vertices(const Graph &, const std::set<int> & gone) -> Graph;

    /// Blocks (biconnected components, bridges included) as vertex sets.
    auto blocks(const Graph &) -> std::vector<std::vector<int>>;

    struct TopologicalMinorWitness
    {
        std::map<int, int> branch;
        /// One path per edge of H, from branch(u) to branch(v) for the edge (u, v).
        std::map<Edge, std::vector<int>> paths;
    };

    struct GraphMinorLimits
    {
        int max_h = 8;
        int max_g = 24;
    };

    /// Throws SizeLimitExceeded beyond the limits.
    auto graph_topological_minor(const Graph & h, const Graph & g,
            const GraphMinorLimits & = GraphMinorLimits{}) -> std::optional<TopologicalMinorWitness>;

    auto verify_topological_minor(const Graph & h, const Graph & g, const TopologicalMinorWitness &) -> bool;

    enum class TorsoKind
    {
        ThreeConnected,
        Cycle,
        Small
    };

    auto torso_kind_name(TorsoKind) -> const char *;

    struct DecompositionNode
    {
        std::vector<int> vertices;
        std::set<Edge> torso_edges;
        std::set<Edge> virtual_edges;
        TorsoKind kind = TorsoKind::Small;
    };

    struct DecompositionArc
    {
        int a = 0, b = 0;
        std::vector<int> separator;
    };

    struct DecompositionTree
    {
        std::vector<DecompositionNode> nodes;
        std::vector<DecompositionArc> arcs;
    };

    /// Throws Disconnected.
    auto tutte_decompose(const Graph &) -> DecompositionTree;

    struct Separation
    {
        std::vector<int> separator;
        std::vector<int> side;
    };

    /// Every separator of order one or two, each with the vertex set of one component it cuts off.
    auto two_separations(const Graph &) -> std::vector<Separation>;

    auto is_three_connected(const Graph &) -> bool;
    auto is_cycle(const Graph &) -> bool;

    using InstancePoint = std::pair<Var, Value>;

    /**
     * Path of allowed pairs visiting each variable at most once. An optional
     * filter restricts the usable points.
     */
    auto part_disjoint_positive_path(const Instance &, InstancePoint src, InstancePoint dst,
            const std::set<InstancePoint> * usable = nullptr) -> std::optional<std::vector<InstancePoint>>;
}

#endif
