/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "dense.hh"

#include <algorithm>
#include <tuple>

using namespace minorcsp;
using namespace minorcsp::detail;

namespace
{
    auto mix(std::uint64_t h, std::uint64_t v) -> std::uint64_t
    {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h * 0x100000001b3ULL;
    }

    using Steps = std::vector<std::pair<PartId, PartId>>;
}

auto minorcsp::detail::densify(const Pattern & p, const Relation * rel) -> Dense
{
    Dense d;
    d.n = p.point_count();
    d.point_id = p.points();
    for (int i = 0 ; i < d.n ; ++i)
        d.index_of.emplace(d.point_id[i], i);

    d.part_id = p.parts();
    d.parts = int(d.part_id.size());
    std::map<PartId, int> part_index;
    for (int i = 0 ; i < d.parts ; ++i)
        part_index.emplace(d.part_id[i], i);

    d.part.resize(d.n);
    d.members.resize(d.parts);
    for (int i = 0 ; i < d.n ; ++i) {
        d.part[i] = part_index.at(p.part_of(d.point_id[i]));
        d.members[d.part[i]].push_back(i);
    }

    d.adj.assign(d.n * d.n, 0);
    d.part_adj.assign(d.parts * d.parts, 0);
    auto add = [&] (const std::set<Edge> & edges, std::uint8_t bit) {
        for (auto & [a, b] : edges) {
            int x = d.index_of.at(a), y = d.index_of.at(b);
            d.adj[x * d.n + y] |= bit;
            d.adj[y * d.n + x] |= bit;
            d.part_adj[d.part[x] * d.parts + d.part[y]] |= bit;
            d.part_adj[d.part[y] * d.parts + d.part[x]] |= bit;
        }
    };
    add(p.positive(), pos_bit);
    add(p.negative(), neg_bit);

    d.neighbours.resize(d.n);
    for (int x = 0 ; x < d.n ; ++x)
        for (int y = 0 ; y < d.n ; ++y)
            if (d.adj[x * d.n + y])
                d.neighbours[x].push_back(y);

    if (rel && ! rel->tuples.empty()) {
        d.arity = rel->arity;
        for (auto & t : rel->tuples) {
            std::vector<int> u;
            for (auto x : t) {
                auto i = d.index_of.find(x);
                if (i == d.index_of.end())
                    throw Error(ErrorCode::UnknownPoint, "relation mentions point " + std::to_string(x));
                u.push_back(i->second);
            }
            d.tuples.push_back(u);
            d.tuple_set.insert(u);
        }
    }
    else if (rel)
        d.arity = rel->arity;

    return d;
}

auto minorcsp::detail::invariant(const Dense & d) -> std::vector<long long>
{
    long long pos = 0, neg = 0;
    for (int x = 0 ; x < d.n ; ++x)
        for (int y = x + 1 ; y < d.n ; ++y) {
            pos += (d.edge(x, y) & pos_bit) ? 1 : 0;
            neg += (d.edge(x, y) & neg_bit) ? 1 : 0;
        }

    std::vector<long long> result{ d.n, d.parts, pos, neg, (long long)(d.tuples.size()) };

    std::vector<int> in_tuple(d.n, 0);
    for (auto & t : d.tuples)
        for (unsigned i = 0 ; i < t.size() ; ++i)
            in_tuple[t[i]] += 1 << std::min<unsigned>(i, 20);

    std::vector<long long> colour(d.n);
    {
        std::vector<std::tuple<int, int, int, int>> sig(d.n);
        for (int x = 0 ; x < d.n ; ++x) {
            int pd = 0, nd = 0;
            for (auto y : d.neighbours[x]) {
                pd += (d.edge(x, y) & pos_bit) ? 1 : 0;
                nd += (d.edge(x, y) & neg_bit) ? 1 : 0;
            }
            sig[x] = { int(d.members[d.part[x]].size()), pd, nd, in_tuple[x] };
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int x = 0 ; x < d.n ; ++x)
            colour[x] = std::lower_bound(sorted.begin(), sorted.end(), sig[x]) - sorted.begin();
        std::uint64_t h = 0;
        for (auto & [a, b, c, e] : sorted)
            h = mix(mix(mix(mix(h, a), b), c), e);
        result.push_back((long long)(h));
    }

    long long classes = -1;
    for (int round = 0 ; round < d.n ; ++round) {
        std::vector<std::vector<long long>> sig(d.n);
        for (int x = 0 ; x < d.n ; ++x) {
            std::vector<long long> adjacent, same;
            for (auto y : d.neighbours[x])
                adjacent.push_back(colour[y] * 4 + d.edge(x, y));
            for (auto y : d.members[d.part[x]])
                if (y != x)
                    same.push_back(colour[y]);
            std::sort(adjacent.begin(), adjacent.end());
            std::sort(same.begin(), same.end());
            sig[x].push_back(colour[x]);
            sig[x].push_back(-1);
            sig[x].insert(sig[x].end(), adjacent.begin(), adjacent.end());
            sig[x].push_back(-2);
            sig[x].insert(sig[x].end(), same.begin(), same.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int x = 0 ; x < d.n ; ++x)
            colour[x] = std::lower_bound(sorted.begin(), sorted.end(), sig[x]) - sorted.begin();

        std::uint64_t h = 0;
        for (auto & s : sorted)
            for (auto v : s)
                h = mix(h, std::uint64_t(v));
        result.push_back((long long)(h));

        if ((long long)(sorted.size()) == classes)
            break;
        classes = sorted.size();
    }

    std::vector<long long> histogram(colour.begin(), colour.end());
    std::sort(histogram.begin(), histogram.end());
    result.insert(result.end(), histogram.begin(), histogram.end());

    std::vector<std::vector<long long>> part_colours(d.parts);
    for (int x = 0 ; x < d.n ; ++x)
        part_colours[d.part[x]].push_back(colour[x]);
    for (auto & c : part_colours)
        std::sort(c.begin(), c.end());
    std::sort(part_colours.begin(), part_colours.end());
    std::uint64_t h = 0;
    for (auto & c : part_colours) {
        for (auto v : c)
            h = mix(h, std::uint64_t(v));
        h = mix(h, ~0ULL);
    }
    result.push_back((long long)(h));

    return result;
}

auto minorcsp::detail::isomorphic(const Dense & a, const Dense & b) -> bool
{
    if (a.n != b.n || a.parts != b.parts || a.tuples.size() != b.tuples.size())
        return false;
    if (! a.tuples.empty() && a.arity != b.arity)
        return false;
    if (invariant(a) != invariant(b))
        return false;
    return search_hom(a, b, true, nullptr).has_value();
}

auto minorcsp::detail::enumerate(const AugmentedPattern & start, int max_parts,
        const std::function<bool (const Pattern &, const Steps &)> & callback,
        SearchStats * stats) -> void
{
    const Relation * rel = start.relation.tuples.empty() ? nullptr : &start.relation;

    if (start.pattern.part_count() > max_parts)
        return;

    std::map<std::vector<long long>, std::vector<Dense>> seen;
    std::vector<std::pair<Pattern, Steps>> level{ { start.pattern, {} } };
    {
        auto d = densify(start.pattern, rel);
        seen[invariant(d)].push_back(std::move(d));
    }

    while (! level.empty()) {
        for (auto & [p, steps] : level) {
            if (stats)
                ++stats->subdivisions;
            if (! callback(p, steps))
                return;
        }

        if (level.front().first.part_count() >= max_parts)
            return;

        std::vector<std::pair<Pattern, Steps>> next;
        for (auto & [p, steps] : level) {
            auto parts = p.parts();
            for (unsigned i = 0 ; i < parts.size() ; ++i)
                for (unsigned j = i + 1 ; j < parts.size() ; ++j) {
                    if (edges_between(p, parts[i], parts[j], true).empty() && edges_between(p, parts[i], parts[j], false).empty())
                        continue;
                    auto s = subdivide(p, parts[i], parts[j]);
                    auto d = densify(s, rel);
                    auto inv = invariant(d);
                    auto & bucket = seen[inv];
                    bool dup = false;
                    for (auto & other : bucket)
                        if (search_hom(d, other, true, nullptr)) {
                            dup = true;
                            break;
                        }
                    if (dup)
                        continue;
                    bucket.push_back(std::move(d));
                    auto more = steps;
                    more.emplace_back(parts[i], parts[j]);
                    next.emplace_back(std::move(s), std::move(more));
                }
        }
        level = std::move(next);
    }
}

auto minorcsp::pattern_invariant(const Pattern & p) -> std::vector<long long>
{
    return invariant(densify(p));
}

auto minorcsp::are_isomorphic(const Pattern & a, const Pattern & b) -> bool
{
    return isomorphic(densify(a), densify(b));
}

auto minorcsp::enumerate_subdivisions(const Pattern & p, int max_parts,
        const std::function<bool (const Subdivision &)> & callback) -> void
{
    if (max_parts < p.part_count())
        throw Error(ErrorCode::PreconditionViolated, "max_parts is below the part count");
    detail::enumerate(AugmentedPattern{ p, Relation{} }, max_parts, [&] (const Pattern & s, const Steps & steps) {
            return callback(Subdivision{ s, steps });
            }, nullptr);
}

auto minorcsp::enumerate_subdivisions(const Pattern & p, int max_parts) -> std::vector<Subdivision>
{
    std::vector<Subdivision> result;
    enumerate_subdivisions(p, max_parts, [&] (const Subdivision & s) {
            result.push_back(s);
            return true;
            });
    return result;
}
