/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINORCSP_GUARD_PATTERN_HH
#define MINORCSP_GUARD_PATTERN_HH 1

#include <minorcsp/error.hh>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace minorcsp
{
    using PointId = int;
    using PartId = int;

    /// Unordered pair, stored with first <= second.
    using Edge = std::pair<int, int>;

    auto make_edge(int a, int b) -> Edge;

    class Pattern
    {
        private:
            std::vector<PointId> _points;
            std::map<PointId, PartId> _part_of;
            std::set<Edge> _positive, _negative;

        public:
            Pattern() = default;

            /// Validating constructor; throws SamePartEdge or UnknownPoint.
            Pattern(std::map<PointId, PartId> part_of, std::set<Edge> positive, std::set<Edge> negative);

            auto points() const -> const std::vector<PointId> &
            {
                return _points;
            }

            auto part_map() const -> const std::map<PointId, PartId> &
            {
                return _part_of;
            }

            auto positive() const -> const std::set<Edge> &
            {
                return _positive;
            }

            auto negative() const -> const std::set<Edge> &
            {
                return _negative;
            }

            auto has_point(PointId) const -> bool;
            auto part_of(PointId) const -> PartId;
            auto parts() const -> std::vector<PartId>;
            auto members(PartId) const -> std::vector<PointId>;
            auto has_part(PartId) const -> bool;

            auto point_count() const -> int
            {
                return int(_points.size());
            }

            auto part_count() const -> int;

            auto has_positive(PointId, PointId) const -> bool;
            auto has_negative(PointId, PointId) const -> bool;

            auto max_point_id() const -> PointId;
            auto max_part_id() const -> PartId;

            auto is_negative() const -> bool
            {
                return _positive.empty();
            }

            auto operator== (const Pattern &) const -> bool = default;
    };

    auto make_pattern(const std::vector<PointId> & points, const std::map<PointId, PartId> & part_of,
            const std::vector<Edge> & positive, const std::vector<Edge> & negative) -> Pattern;

    /// Copy with the positive edges removed.
    auto negative_reduct(const Pattern &) -> Pattern;

    auto is_complete(const Pattern &) -> bool;

    /// Edges between two parts, as (point in U, point in V) in the stored edge order.
    auto edges_between(const Pattern &, PartId u, PartId v, bool positive) -> std::vector<std::pair<PointId, PointId>>;

    /// Subdivision at parts u and v. The identity when no edge joins them.
    auto subdivide(const Pattern &, PartId u, PartId v) -> Pattern;

    struct Relation
    {
        int arity = 0;
        std::set<std::vector<PointId>> tuples;

        auto operator== (const Relation &) const -> bool = default;
    };

    struct AugmentedPattern
    {
        Pattern pattern;
        Relation relation;

        auto operator== (const AugmentedPattern &) const -> bool = default;
    };

    /// Throws ArityMismatch or UnknownPoint.
    auto augment(const Pattern &, int arity, const std::set<std::vector<PointId>> & tuples) -> AugmentedPattern;

    /// Total operation table D^k -> D. Absent entries make it partial.
    struct Operation
    {
        int arity = 0;
        std::vector<int> domain;
        std::map<std::vector<int>, int> table;

        auto apply(const std::vector<int> &) const -> std::optional<int>;
        auto is_total() const -> bool;
    };

    enum class RelationKind
    {
        Neq,
        Polymorphism
    };

    struct RelationSpec
    {
        RelationKind kind = RelationKind::Neq;
        Operation operation;

        auto arity() const -> int
        {
            return kind == RelationKind::Neq ? 2 : operation.arity + 1;
        }
    };

    struct Graph
    {
        std::vector<int> vertices;
        std::set<Edge> edges;

        auto operator== (const Graph &) const -> bool = default;
    };

    /// Throws BadInput on self-loops or undeclared endpoints.
    auto make_graph(std::vector<int> vertices, const std::vector<Edge> & edges) -> Graph;

    auto neighbours(const Graph &, int v) -> std::vector<int>;
}

#endif
