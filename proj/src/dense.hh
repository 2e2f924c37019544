/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINORCSP_GUARD_SRC_DENSE_HH
#define MINORCSP_GUARD_SRC_DENSE_HH 1

#include <minorcsp/occurrence.hh>
#include <minorcsp/pattern.hh>

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace minorcsp::detail
{
    inline constexpr std::uint8_t pos_bit = 1, neg_bit = 2;

    /// Index-based copy of a pattern for the search routines.
    struct Dense
    {
        int n = 0;
        int parts = 0;
        std::vector<PointId> point_id;
        std::map<PointId, int> index_of;
        std::vector<PartId> part_id;
        std::vector<int> part;
        std::vector<std::vector<int>> members;
        std::vector<std::uint8_t> adj;
        std::vector<std::uint8_t> part_adj;
        std::vector<std::vector<int>> neighbours;
        int arity = 0;
        std::vector<std::vector<int>> tuples;
        std::set<std::vector<int>> tuple_set;

        auto edge(int x, int y) const -> std::uint8_t
        {
            return adj[x * n + y];
        }

        auto part_edge(int u, int v) const -> std::uint8_t
        {
            return part_adj[u * parts + v];
        }
    };

    auto densify(const Pattern &, const Relation * = nullptr) -> Dense;

    /// Point map as indices, or empty if none.
    auto search_hom(const Dense & p, const Dense & q, bool injective_points, SearchStats * stats) -> std::optional<std::vector<int>>;

    auto invariant(const Dense &) -> std::vector<long long>;

    auto isomorphic(const Dense & a, const Dense & b) -> bool;

    /// Breadth-first subdivision enumeration with isomorphism dedup that respects the relation.
    auto enumerate(const AugmentedPattern &, int max_parts,
            const std::function<bool (const Pattern &, const std::vector<std::pair<PartId, PartId>> &)> & callback,
            SearchStats * stats) -> void;
}

#endif
