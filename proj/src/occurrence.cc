/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "dense.hh"

#include <minorcsp/graphs.hh>
#include <minorcsp/occurrence.hh>

#include <algorithm>
#include <stdexcept>

using namespace minorcsp;
using namespace minorcsp::detail;

namespace
{
    struct HomSearch
    {
        const Dense & p;
        const Dense & q;
        bool injective;
        SearchStats * stats;

        std::vector<int> order;
        std::vector<std::vector<std::pair<int, std::uint8_t>>> back_edges;
        std::vector<std::vector<int>> completes;
        std::vector<bool> first_of_part;

        std::vector<int> map_point, map_part;
        std::vector<bool> part_used, point_used;
        std::vector<int> mapped_parts;

        HomSearch(const Dense & a, const Dense & b, bool inj, SearchStats * s) :
            p(a), q(b), injective(inj), stats(s)
        {
            // parts: most links to already chosen parts first, then (size, id)
            std::vector<bool> placed(p.parts, false);
            std::vector<int> part_order;
            for (int round = 0 ; round < p.parts ; ++round) {
                int best = -1, best_links = -1;
                for (int u = 0 ; u < p.parts ; ++u) {
                    if (placed[u])
                        continue;
                    int links = 0;
                    for (auto w : part_order)
                        if (p.part_edge(u, w))
                            ++links;
                    auto key = [&] (int x) { return std::pair{ p.members[x].size(), x }; };
                    if (links > best_links || (links == best_links && key(u) < key(best))) {
                        best = u;
                        best_links = links;
                    }
                }
                placed[best] = true;
                part_order.push_back(best);
            }

            std::vector<int> position(p.n, -1);
            for (auto u : part_order)
                for (unsigned i = 0 ; i < p.members[u].size() ; ++i) {
                    int x = p.members[u][i];
                    position[x] = int(order.size());
                    order.push_back(x);
                    first_of_part.push_back(i == 0);
                }

            back_edges.resize(p.n);
            for (int i = 0 ; i < p.n ; ++i) {
                int x = order[i];
                for (auto y : p.neighbours[x])
                    if (position[y] < i)
                        back_edges[i].emplace_back(y, p.edge(x, y));
            }

            completes.resize(p.n);
            for (unsigned t = 0 ; t < p.tuples.size() ; ++t) {
                int last = 0;
                for (auto x : p.tuples[t])
                    last = std::max(last, position[x]);
                completes[last].push_back(int(t));
            }

            map_point.assign(p.n, -1);
            map_part.assign(p.parts, -1);
            part_used.assign(q.parts, false);
            point_used.assign(q.n, false);
        }

        auto part_fits(int u, int w) const -> bool
        {
            for (auto v : mapped_parts) {
                auto need = p.part_edge(u, v);
                if ((q.part_edge(w, map_part[v]) & need) != need)
                    return false;
            }
            return true;
        }

        auto point_fits(int i, int y) const -> bool
        {
            for (auto & [z, bits] : back_edges[i])
                if ((q.edge(y, map_point[z]) & bits) != bits)
                    return false;
            return true;
        }

        auto tuples_fit(int i) const -> bool
        {
            std::vector<int> image;
            for (auto t : completes[i]) {
                image.clear();
                for (auto x : p.tuples[t])
                    image.push_back(map_point[x]);
                if (! q.tuple_set.contains(image))
                    return false;
            }
            return true;
        }

        auto try_points(int i, int w) -> bool
        {
            int x = order[i];
            for (auto y : q.members[w]) {
                if (injective && point_used[y])
                    continue;
                if (stats)
                    ++stats->nodes;
                map_point[x] = y;
                if (point_fits(i, y) && tuples_fit(i)) {
                    point_used[y] = true;
                    if (run(i + 1))
                        return true;
                    point_used[y] = false;
                }
                map_point[x] = -1;
            }
            return false;
        }

        auto run(int i) -> bool
        {
            if (i == p.n)
                return true;

            int x = order[i];
            int u = p.part[x];
            if (! first_of_part[i])
                return try_points(i, map_part[u]);

            for (int w = 0 ; w < q.parts ; ++w) {
                if (part_used[w] || ! part_fits(u, w))
                    continue;
                if (injective && q.members[w].size() < p.members[u].size())
                    continue;
                part_used[w] = true;
                map_part[u] = w;
                mapped_parts.push_back(u);
                if (try_points(i, w))
                    return true;
                mapped_parts.pop_back();
                map_part[u] = -1;
                part_used[w] = false;
            }
            return false;
        }
    };

    auto to_embedding(const Dense & p, const Dense & q, const std::vector<int> & m) -> Embedding
    {
        Embedding e;
        for (int x = 0 ; x < p.n ; ++x)
            e.point_map.emplace(p.point_id[x], q.point_id[m[x]]);
        return e;
    }

    auto relation_of(const AugmentedPattern & a) -> const Relation *
    {
        return &a.relation;
    }

    auto check_arity(const AugmentedPattern & p, const AugmentedPattern & q) -> void
    {
        if (p.relation.tuples.empty())
            return;
        if (q.relation.arity != p.relation.arity)
            throw Error(ErrorCode::ArityMismatch, "source relation has arity " + std::to_string(p.relation.arity)
                    + ", target has " + std::to_string(q.relation.arity));
    }

    auto plain(const Pattern & p) -> AugmentedPattern
    {
        return AugmentedPattern{ p, Relation{} };
    }

    auto part_graph(const Pattern & p) -> Graph
    {
        Graph g;
        g.vertices = p.parts();
        for (auto & [a, b] : p.negative())
            g.edges.insert(make_edge(p.part_of(a), p.part_of(b)));
        return g;
    }

    /// Negative pattern in which every point meets exactly one negative edge.
    auto graph_fast_path(const Pattern & p, const Pattern & q) -> std::optional<std::optional<TmWitness>>
    {
        auto h = part_graph(p);
        auto g = constraint_graph(q);
        std::optional<TopologicalMinorWitness> tm;
        try {
            tm = graph_topological_minor(h, g);
        }
        catch (const Error & e) {
            if (e.code() == ErrorCode::SizeLimitExceeded)
                return std::nullopt;
            throw;
        }
        if (! tm)
            return std::optional<TmWitness>{ };

        TmWitness w;
        std::map<PartId, int> image = tm->branch;
        Pattern current = p;
        for (auto & [e, path] : tm->paths) {
            auto [a, b] = e;
            PartId cur = a;
            for (unsigned i = 1 ; i + 1 < path.size() ; ++i) {
                PartId z = current.max_part_id() + 1;
                current = subdivide(current, cur, b);
                w.steps.emplace_back(cur, b);
                image[z] = path[i];
                cur = z;
            }
        }

        for (auto & [x, y] : current.negative()) {
            auto candidates = edges_between(q, image.at(current.part_of(x)), image.at(current.part_of(y)), false);
            if (candidates.empty())
                throw std::logic_error("graph fast path produced a path without a negative edge");
            w.embedding.point_map[x] = candidates.front().first;
            w.embedding.point_map[y] = candidates.front().second;
        }

        if (! verify_tm_witness(p, q, w))
            throw std::logic_error("graph fast path produced an invalid witness");
        return std::optional<TmWitness>{ w };
    }
}

auto minorcsp::detail::search_hom(const Dense & p, const Dense & q, bool injective_points, SearchStats * stats) -> std::optional<std::vector<int>>
{
    if (p.parts > q.parts)
        return std::nullopt;
    if (injective_points && p.n > q.n)
        return std::nullopt;
    if (! p.tuples.empty() && p.arity != q.arity)
        return std::nullopt;

    HomSearch s(p, q, injective_points, stats);
    if (! s.run(0))
        return std::nullopt;
    return s.map_point;
}

auto minorcsp::find_sub_pattern(const AugmentedPattern & p, const AugmentedPattern & q,
        const SubPatternOptions & options) -> std::optional<Embedding>
{
    check_arity(p, q);
    auto dp = densify(p.pattern, relation_of(p));
    auto dq = densify(q.pattern, relation_of(q));
    auto m = search_hom(dp, dq, options.injective_points, options.stats);
    if (! m)
        return std::nullopt;
    return to_embedding(dp, dq, *m);
}

auto minorcsp::find_sub_pattern(const Pattern & p, const Pattern & q,
        const SubPatternOptions & options) -> std::optional<Embedding>
{
    return find_sub_pattern(plain(p), plain(q), options);
}

auto minorcsp::verify_embedding(const AugmentedPattern & p, const AugmentedPattern & q, const Embedding & e) -> bool
{
    auto & src = p.pattern;
    auto & dst = q.pattern;
    for (auto x : src.points()) {
        auto i = e.point_map.find(x);
        if (i == e.point_map.end() || ! dst.has_point(i->second))
            return false;
    }
    if (e.point_map.size() != src.points().size())
        return false;

    auto & h = e.point_map;
    for (auto x : src.points())
        for (auto y : src.points())
            if ((src.part_of(x) == src.part_of(y)) != (dst.part_of(h.at(x)) == dst.part_of(h.at(y))))
                return false;

    for (auto & [x, y] : src.positive())
        if (! dst.has_positive(h.at(x), h.at(y)))
            return false;
    for (auto & [x, y] : src.negative())
        if (! dst.has_negative(h.at(x), h.at(y)))
            return false;

    if (! p.relation.tuples.empty()) {
        if (p.relation.arity != q.relation.arity)
            return false;
        for (auto & t : p.relation.tuples) {
            std::vector<PointId> image;
            for (auto x : t)
                image.push_back(h.at(x));
            if (! q.relation.tuples.contains(image))
                return false;
        }
    }
    return true;
}

auto minorcsp::verify_embedding(const Pattern & p, const Pattern & q, const Embedding & e) -> bool
{
    return verify_embedding(plain(p), plain(q), e);
}

auto minorcsp::replay_steps(const Pattern & p, const std::vector<std::pair<PartId, PartId>> & steps) -> Pattern
{
    Pattern current = p;
    for (auto & [u, v] : steps)
        current = subdivide(current, u, v);
    return current;
}

auto minorcsp::verify_tm_witness(const AugmentedPattern & p, const AugmentedPattern & q, const TmWitness & w) -> bool
{
    Pattern s;
    try {
        s = replay_steps(p.pattern, w.steps);
    }
    catch (const Error &) {
        return false;
    }
    return verify_embedding(AugmentedPattern{ s, p.relation }, q, w.embedding);
}

auto minorcsp::verify_tm_witness(const Pattern & p, const Pattern & q, const TmWitness & w) -> bool
{
    return verify_tm_witness(plain(p), plain(q), w);
}

auto minorcsp::occurs_tm(const AugmentedPattern & p, const AugmentedPattern & q, const TmOptions & options) -> std::optional<TmWitness>
{
    check_arity(p, q);

    int bound = q.pattern.part_count();
    bool truncated = false;
    if (options.max_parts >= 0 && options.max_parts < bound) {
        bound = options.max_parts;
        truncated = true;
    }

    bool has_relation = ! p.relation.tuples.empty();
    if (options.fast_paths && ! has_relation && ! truncated) {
        if (is_pg_form(p.pattern)) {
            if (auto r = graph_fast_path(p.pattern, q.pattern))
                return *r;
        }
        else if (p.pattern.is_negative() && is_strictly_star_like(p.pattern)) {
            if (auto e = find_sub_pattern(p, q, SubPatternOptions{ false, options.stats }))
                return TmWitness{ {}, *e };
            return std::nullopt;
        }
    }

    auto dq = densify(q.pattern, relation_of(q));
    std::optional<TmWitness> result;
    detail::enumerate(p, bound, [&] (const Pattern & s, const std::vector<std::pair<PartId, PartId>> & steps) {
            auto ds = densify(s, relation_of(p));
            if (auto m = search_hom(ds, dq, false, options.stats)) {
                result = TmWitness{ steps, to_embedding(ds, dq, *m) };
                return false;
            }
            return true;
            }, options.stats);

    if (! result && truncated)
        throw Error(ErrorCode::BudgetExceeded, "no occurrence within " + std::to_string(bound) + " parts; the exact bound is "
                + std::to_string(q.pattern.part_count()));
    return result;
}

auto minorcsp::occurs_tm(const Pattern & p, const Pattern & q, const TmOptions & options) -> std::optional<TmWitness>
{
    return occurs_tm(plain(p), plain(q), options);
}

auto minorcsp::is_pg_form(const Pattern & p) -> bool
{
    if (! p.is_negative())
        return false;
    std::map<PointId, int> degree;
    std::set<Edge> part_pairs;
    for (auto & [a, b] : p.negative()) {
        ++degree[a];
        ++degree[b];
        if (! part_pairs.insert(make_edge(p.part_of(a), p.part_of(b))).second)
            return false;
    }
    for (auto x : p.points())
        if (degree[x] != 1)
            return false;
    return true;
}

namespace
{
    struct StarShape
    {
        bool acyclic;
        int branching_parts;
        int distinguished_parts;
    };

    auto star_shape(const Pattern & p) -> StarShape
    {
        auto g = part_graph(p);
        StarShape s{ is_acyclic(g), 0, 0 };

        std::map<PointId, std::set<PartId>> reaches;
        std::map<PointId, int> degree;
        for (auto & [a, b] : p.negative()) {
            reaches[a].insert(p.part_of(b));
            reaches[b].insert(p.part_of(a));
            ++degree[a];
            ++degree[b];
        }

        for (auto u : p.parts()) {
            bool many_neighbours = neighbours(g, u).size() > 2;
            bool branching = false, shared = false;
            for (auto x : p.members(u)) {
                if (reaches[x].size() > 1)
                    branching = true;
                if (degree[x] > 1)
                    shared = true;
            }
            if (many_neighbours || branching)
                ++s.branching_parts;
            if (many_neighbours || shared)
                ++s.distinguished_parts;
        }
        return s;
    }
}

auto minorcsp::is_star_like(const Pattern & p) -> bool
{
    auto s = star_shape(p);
    return s.acyclic && s.branching_parts <= 1;
}

auto minorcsp::is_strictly_star_like(const Pattern & p) -> bool
{
    auto s = star_shape(p);
    return s.acyclic && s.distinguished_parts <= 1;
}

auto minorcsp::forbids(const std::vector<AugmentedPattern> & s, const Instance & inst, Mode mode,
        const std::optional<RelationSpec> & rel, const TmOptions & options) -> ForbidsResult
{
    bool need_relation = std::any_of(s.begin(), s.end(), [] (auto & p) { return ! p.relation.tuples.empty(); });

    AugmentedPattern q{ pattern_from_instance(inst), Relation{} };
    if (need_relation) {
        if (! rel)
            throw Error(ErrorCode::ArityMismatch, "augmented pattern but no instance relation");
        for (auto & p : s)
            if (! p.relation.tuples.empty() && p.relation.arity != rel->arity())
                throw Error(ErrorCode::ArityMismatch, "pattern relation arity " + std::to_string(p.relation.arity)
                        + " against " + std::to_string(rel->arity()));
        q.relation = instance_relation(*rel, inst);
    }

    for (unsigned i = 0 ; i < s.size() ; ++i) {
        std::optional<TmWitness> w;
        if (mode == Mode::SubPattern) {
            if (auto e = find_sub_pattern(s[i], q, SubPatternOptions{ false, options.stats }))
                w = TmWitness{ {}, *e };
        }
        else
            w = occurs_tm(s[i], q, options);

        if (w)
            return ForbidsResult{ false, int(i), w };
    }
    return ForbidsResult{};
}
