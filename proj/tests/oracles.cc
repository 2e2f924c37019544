/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "oracles.hh"

#include <algorithm>
#include <functional>

using namespace minorcsp;

auto oracle::sub_pattern(const AugmentedPattern & a, const AugmentedPattern & b) -> bool
{
    auto & p = a.pattern;
    auto & q = b.pattern;
    auto & xs = p.points();
    auto & ys = q.points();
    std::map<PointId, PointId> h;

    auto consistent = [&] (unsigned i) {
        PointId x = xs[i];
        for (unsigned j = 0 ; j < i ; ++j) {
            PointId z = xs[j];
            if ((p.part_of(x) == p.part_of(z)) != (q.part_of(h[x]) == q.part_of(h[z])))
                return false;
            if (p.has_positive(x, z) && ! q.has_positive(h[x], h[z]))
                return false;
            if (p.has_negative(x, z) && ! q.has_negative(h[x], h[z]))
                return false;
        }
        return true;
    };

    auto relation_ok = [&] {
        if (a.relation.tuples.empty())
            return true;
        if (a.relation.arity != b.relation.arity)
            return false;
        for (auto & t : a.relation.tuples) {
            std::vector<PointId> image;
            for (auto x : t)
                image.push_back(h[x]);
            if (! b.relation.tuples.contains(image))
                return false;
        }
        return true;
    };

    std::function<bool (unsigned)> go = [&] (unsigned i) -> bool {
        if (i == xs.size())
            return relation_ok();
        for (auto y : ys) {
            h[xs[i]] = y;
            if (consistent(i) && go(i + 1))
                return true;
        }
        h.erase(xs[i]);
        return false;
    };
    return go(0);
}

auto oracle::sub_pattern(const Pattern & p, const Pattern & q) -> bool
{
    return sub_pattern(AugmentedPattern{ p, {} }, AugmentedPattern{ q, {} });
}

auto oracle::topological_minor(const Pattern & p, const Pattern & q) -> bool
{
    if (sub_pattern(p, q))
        return true;
    if (p.part_count() >= q.part_count())
        return false;
    auto parts = p.parts();
    for (unsigned i = 0 ; i < parts.size() ; ++i)
        for (unsigned j = i + 1 ; j < parts.size() ; ++j) {
            if (edges_between(p, parts[i], parts[j], true).empty() && edges_between(p, parts[i], parts[j], false).empty())
                continue;
            if (topological_minor(subdivide(p, parts[i], parts[j]), q))
                return true;
        }
    return false;
}

auto oracle::star_like(const Pattern & p) -> bool
{
    int branches = std::max(1, p.part_count()), length = std::max(1, p.part_count());
    std::map<PointId, PartId> part_of{ { 0, 0 } };
    std::set<Edge> neg;
    PointId next = 1;
    PartId part = 1;
    for (int b = 0 ; b < branches ; ++b) {
        PointId prev = 0;
        for (int l = 0 ; l < length ; ++l, ++part) {
            PointId in = next++;
            part_of[in] = part;
            neg.insert(make_edge(prev, in));
            if (l + 1 < length) {
                prev = next++;
                part_of[prev] = part;
            }
        }
    }
    return sub_pattern(negative_reduct(p), Pattern(part_of, {}, neg));
}

auto oracle::graph_topological_minor(const Graph & h, const Graph & g) -> bool
{
    auto subgraph = [&] (const Graph & s) {
        if (s.vertices.size() > g.vertices.size())
            return false;
        std::vector<int> targets = g.vertices;
        std::vector<int> pick(s.vertices.size());
        std::function<bool (unsigned, std::vector<bool> &)> go = [&] (unsigned i, std::vector<bool> & used) -> bool {
            if (i == s.vertices.size()) {
                std::map<int, int> m;
                for (unsigned k = 0 ; k < s.vertices.size() ; ++k)
                    m[s.vertices[k]] = targets[pick[k]];
                for (auto & [a, b] : s.edges)
                    if (! g.edges.contains(make_edge(m[a], m[b])))
                        return false;
                return true;
            }
            for (unsigned t = 0 ; t < targets.size() ; ++t) {
                if (used[t])
                    continue;
                used[t] = true;
                pick[i] = t;
                if (go(i + 1, used))
                    return true;
                used[t] = false;
            }
            return false;
        };
        std::vector<bool> used(targets.size(), false);
        return go(0, used);
    };

    std::function<bool (const Graph &)> search = [&] (const Graph & s) -> bool {
        if (subgraph(s))
            return true;
        if (s.vertices.size() >= g.vertices.size())
            return false;
        int fresh = s.vertices.empty() ? 0 : s.vertices.back() + 1;
        for (auto & e : s.edges) {
            Graph t = s;
            t.edges.erase(e);
            t.vertices.push_back(fresh);
            t.edges.insert(make_edge(e.first, fresh));
            t.edges.insert(make_edge(fresh, e.second));
            if (search(t))
                return true;
        }
        return false;
    };
    return search(h);
}

auto oracle::solve(const Instance & inst) -> std::optional<Assignment>
{
    Assignment s(inst.size());
    std::function<bool (int)> go = [&] (int v) -> bool {
        if (v == inst.size()) {
            for (int x = 0 ; x < inst.size() ; ++x)
                for (int y = x + 1 ; y < inst.size() ; ++y)
                    if (! inst.allowed(x, s[x], y, s[y]))
                        return false;
            return true;
        }
        for (auto a : inst.domain(v)) {
            s[v] = a;
            if (go(v + 1))
                return true;
        }
        return false;
    };
    if (go(0))
        return s;
    return std::nullopt;
}

auto oracle::arc_consistent_domains(const Instance & inst) -> std::vector<std::vector<Value>>
{
    auto d = inst.domains();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0 ; u < inst.size() ; ++u)
            for (int v = 0 ; v < inst.size() ; ++v) {
                if (u == v || ! inst.constrained(u, v))
                    continue;
                std::vector<Value> kept;
                for (auto a : d[u]) {
                    bool support = false;
                    for (auto b : d[v])
                        if (inst.allowed(u, a, v, b))
                            support = true;
                    if (support)
                        kept.push_back(a);
                }
                if (kept != d[u]) {
                    d[u] = kept;
                    changed = true;
                }
            }
    }
    return d;
}

auto oracle::satisfiable(const Cnf & f) -> bool
{
    std::vector<bool> x(f.n + 1, false);
    std::function<bool (int)> go = [&] (int i) -> bool {
        if (i > f.n) {
            for (auto & c : f.clauses) {
                bool sat = false;
                for (auto l : c)
                    if (x[std::abs(l)] == (l > 0))
                        sat = true;
                if (! sat)
                    return false;
            }
            return true;
        }
        x[i] = false;
        if (go(i + 1))
            return true;
        x[i] = true;
        return go(i + 1);
    };
    return go(1);
}

auto oracle::closed_under(const Operation & f, const std::set<ValuePair> & relation) -> bool
{
    std::vector<ValuePair> r(relation.begin(), relation.end());
    std::vector<ValuePair> chosen;
    std::function<bool ()> go = [&] () -> bool {
        if (int(chosen.size()) == f.arity) {
            std::vector<int> xs, ys;
            for (auto & [a, b] : chosen) {
                xs.push_back(a);
                ys.push_back(b);
            }
            return relation.contains({ f.table.at(xs), f.table.at(ys) });
        }
        for (auto & t : r) {
            chosen.push_back(t);
            bool ok = go();
            chosen.pop_back();
            if (! ok)
                return false;
        }
        return true;
    };
    return go();
}

auto oracle::isomorphic(const Pattern & a, const Pattern & b) -> bool
{
    if (a.point_count() != b.point_count() || a.positive().size() != b.positive().size()
            || a.negative().size() != b.negative().size() || a.part_count() != b.part_count())
        return false;
    auto & xs = a.points();
    auto & ys = b.points();
    std::vector<PointId> image(xs.size());
    std::set<PointId> used;

    // bijection built point by point; each new pair is checked against every earlier one
    std::function<bool (unsigned)> go = [&] (unsigned i) -> bool {
        if (i == xs.size())
            return true;
        for (auto y : ys) {
            if (used.contains(y))
                continue;
            bool ok = true;
            for (unsigned j = 0 ; j < i && ok ; ++j) {
                auto x = xs[i], z = xs[j], w = image[j];
                ok = (a.part_of(x) == a.part_of(z)) == (b.part_of(y) == b.part_of(w))
                    && a.has_positive(x, z) == b.has_positive(y, w)
                    && a.has_negative(x, z) == b.has_negative(y, w);
            }
            if (! ok)
                continue;
            image[i] = y;
            used.insert(y);
            if (go(i + 1))
                return true;
            used.erase(y);
        }
        return false;
    };
    return go(0);
}

auto oracle::count_subdivision_classes(const Pattern & p, int max_parts) -> int
{
    std::vector<Pattern> all;
    std::function<void (const Pattern &)> go = [&] (const Pattern & s) {
        all.push_back(s);
        if (s.part_count() >= max_parts)
            return;
        auto parts = s.parts();
        for (unsigned i = 0 ; i < parts.size() ; ++i)
            for (unsigned j = i + 1 ; j < parts.size() ; ++j)
                if (! edges_between(s, parts[i], parts[j], true).empty() || ! edges_between(s, parts[i], parts[j], false).empty())
                    go(subdivide(s, parts[i], parts[j]));
    };
    go(p);

    std::vector<Pattern> classes;
    for (auto & s : all)
        if (std::none_of(classes.begin(), classes.end(), [&] (auto & c) { return isomorphic(c, s); }))
            classes.push_back(s);
    return int(classes.size());
}
