/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINORCSP_GUARD_OCCURRENCE_HH
#define MINORCSP_GUARD_OCCURRENCE_HH 1

#include <minorcsp/instance.hh>
#include <minorcsp/pattern.hh>

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace minorcsp
{
    struct Embedding
    {
        std::map<PointId, PointId> point_map;

        auto operator== (const Embedding &) const -> bool = default;
    };

    struct TmWitness
    {
        std::vector<std::pair<PartId, PartId>> steps;
        Embedding embedding;

        auto operator== (const TmWitness &) const -> bool = default;
    };

    struct SearchStats
    {
        long long nodes = 0;
        long long subdivisions = 0;
    };

    struct SubPatternOptions
    {
        /// Also require distinct points to map to distinct points.
        bool injective_points = false;
        SearchStats * stats = nullptr;
    };

    /// Part-preserving homomorphism. Throws ArityMismatch if the source has a relation the target cannot match.
    auto find_sub_pattern(const AugmentedPattern & p, const AugmentedPattern & q,
            const SubPatternOptions & = SubPatternOptions{}) -> std::optional<Embedding>;
    auto find_sub_pattern(const Pattern & p, const Pattern & q,
            const SubPatternOptions & = SubPatternOptions{}) -> std::optional<Embedding>;

    auto verify_embedding(const AugmentedPattern & p, const AugmentedPattern & q, const Embedding &) -> bool;
    auto verify_embedding(const Pattern & p, const Pattern & q, const Embedding &) -> bool;

    auto are_isomorphic(const Pattern &, const Pattern &) -> bool;

    /// Colour-refinement invariant; isomorphic patterns get equal values.
    auto pattern_invariant(const Pattern &) -> std::vector<long long>;

    struct Subdivision
    {
        Pattern pattern;
        std::vector<std::pair<PartId, PartId>> steps;
    };

    /**
     * Every subdivision with at most max_parts parts, once per isomorphism class,
     * in order of depth. The callback returns false to stop.
     */
    auto enumerate_subdivisions(const Pattern &, int max_parts,
            const std::function<bool (const Subdivision &)> & callback) -> void;

    auto enumerate_subdivisions(const Pattern &, int max_parts) -> std::vector<Subdivision>;

    struct TmOptions
    {
        bool fast_paths = true;
        /// Part bound for the subdivision search; -1 means the exact bound parts(Q).
        int max_parts = -1;
        SearchStats * stats = nullptr;
    };

    auto occurs_tm(const AugmentedPattern & p, const AugmentedPattern & q, const TmOptions & = TmOptions{}) -> std::optional<TmWitness>;
    auto occurs_tm(const Pattern & p, const Pattern & q, const TmOptions & = TmOptions{}) -> std::optional<TmWitness>;

    auto replay_steps(const Pattern &, const std::vector<std::pair<PartId, PartId>> & steps) -> Pattern;

    auto verify_tm_witness(const AugmentedPattern & p, const AugmentedPattern & q, const TmWitness &) -> bool;
    auto verify_tm_witness(const Pattern & p, const Pattern & q, const TmWitness &) -> bool;

    /// True iff the pattern, with positive edges removed, maps into some star pattern.
    auto is_star_like(const Pattern &) -> bool;

    /**
     * Stronger condition under which a negative pattern maps into every one of
     * its subdivisions, so that TM and SP occurrence coincide in every target:
     * acyclic parts and at most one part that has a point on two negative edges
     * or negative edges to more than two parts.
     */
    auto is_strictly_star_like(const Pattern &) -> bool;

    /// Every point on exactly one negative edge, no positive edges, at most one edge per part pair.
    auto is_pg_form(const Pattern &) -> bool;

    enum class Mode
    {
        SubPattern,
        TopologicalMinor
    };

    struct ForbidsResult
    {
        bool forbidden = true;
        int violating_index = -1;
        std::optional<TmWitness> witness;
    };

    auto forbids(const std::vector<AugmentedPattern> & s, const Instance &, Mode,
            const std::optional<RelationSpec> & rel = std::nullopt, const TmOptions & = TmOptions{}) -> ForbidsResult;
}

#endif
