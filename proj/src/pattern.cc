/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minorcsp/pattern.hh>

#include <algorithm>

using namespace minorcsp;

auto minorcsp::error_code_name(ErrorCode c) -> const char *
{
    switch (c) {
        case ErrorCode::SamePartEdge:         return "SamePartEdge";
        case ErrorCode::UnknownPoint:         return "UnknownPoint";
        case ErrorCode::UnknownPart:          return "UnknownPart";
        case ErrorCode::SamePart:             return "SamePart";
        case ErrorCode::UnknownName:          return "UnknownName";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::ArityMismatch:        return "ArityMismatch";
        case ErrorCode::PartialTable:         return "PartialTable";
        case ErrorCode::DomainMismatch:       return "DomainMismatch";
        case ErrorCode::CapExceeded:          return "CapExceeded";
        case ErrorCode::NotAcyclic:           return "NotAcyclic";
        case ErrorCode::NotInClass:           return "NotInClass";
        case ErrorCode::Disconnected:         return "Disconnected";
        case ErrorCode::SizeLimitExceeded:    return "SizeLimitExceeded";
        case ErrorCode::BudgetExceeded:       return "BudgetExceeded";
        case ErrorCode::BadDensity:           return "BadDensity";
        case ErrorCode::BadInput:             return "BadInput";
    }
    return "?";
}

Error::Error(ErrorCode c, const std::string & message) :
    std::runtime_error(std::string(error_code_name(c)) + ": " + message),
    _code(c)
{
}

auto minorcsp::make_edge(int a, int b) -> Edge
{
    return a <= b ? Edge{ a, b } : Edge{ b, a };
}

Pattern::Pattern(std::map<PointId, PartId> part_of, std::set<Edge> positive, std::set<Edge> negative) :
    _part_of(std::move(part_of))
{
    for (auto & [p, _] : _part_of)
        _points.push_back(p);

    auto check = [&] (const std::set<Edge> & in, std::set<Edge> & out) {
        for (auto & [a, b] : in) {
            if (! _part_of.contains(a) || ! _part_of.contains(b))
                throw Error(ErrorCode::UnknownPoint, "edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
            if (_part_of.at(a) == _part_of.at(b))
                throw Error(ErrorCode::SamePartEdge, "edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
            out.insert(make_edge(a, b));
        }
    };
    check(positive, _positive);
    check(negative, _negative);
}

auto minorcsp::make_pattern(const std::vector<PointId> & points, const std::map<PointId, PartId> & part_of,
        const std::vector<Edge> & positive, const std::vector<Edge> & negative) -> Pattern
{
    std::map<PointId, PartId> parts;
    for (auto p : points) {
        auto i = part_of.find(p);
        if (i == part_of.end())
            throw Error(ErrorCode::UnknownPoint, "point " + std::to_string(p) + " has no part");
        parts.emplace(p, i->second);
    }
    for (auto & [p, _] : part_of)
        if (! parts.contains(p))
            throw Error(ErrorCode::UnknownPoint, "part given for undeclared point " + std::to_string(p));

    return Pattern(parts, std::set<Edge>(positive.begin(), positive.end()), std::set<Edge>(negative.begin(), negative.end()));
}

auto Pattern::has_point(PointId p) const -> bool
{
    return _part_of.contains(p);
}

auto Pattern::part_of(PointId p) const -> PartId
{
    auto i = _part_of.find(p);
    if (i == _part_of.end())
        throw Error(ErrorCode::UnknownPoint, std::to_string(p));
    return i->second;
}

auto Pattern::parts() const -> std::vector<PartId>
{
    std::set<PartId> s;
    for (auto & [_, u] : _part_of)
        s.insert(u);
    return { s.begin(), s.end() };
}

auto Pattern::part_count() const -> int
{
    return int(parts().size());
}

auto Pattern::has_part(PartId u) const -> bool
{
    return std::any_of(_part_of.begin(), _part_of.end(), [&] (auto & e) { return e.second == u; });
}

auto Pattern::members(PartId u) const -> std::vector<PointId>
{
    std::vector<PointId> result;
    for (auto & [p, q] : _part_of)
        if (q == u)
            result.push_back(p);
    return result;
}

auto Pattern::has_positive(PointId a, PointId b) const -> bool
{
    return _positive.contains(make_edge(a, b));
}

auto Pattern::has_negative(PointId a, PointId b) const -> bool
{
    return _negative.contains(make_edge(a, b));
}

auto Pattern::max_point_id() const -> PointId
{
    return _points.empty() ? -1 : _points.back();
}

auto Pattern::max_part_id() const -> PartId
{
    PartId m = -1;
    for (auto & [_, u] : _part_of)
        m = std::max(m, u);
    return m;
}

auto minorcsp::negative_reduct(const Pattern & p) -> Pattern
{
    return Pattern(p.part_map(), {}, p.negative());
}

auto minorcsp::is_complete(const Pattern & p) -> bool
{
    auto & pts = p.points();
    for (unsigned i = 0 ; i < pts.size() ; ++i)
        for (unsigned j = i + 1 ; j < pts.size() ; ++j) {
            if (p.part_of(pts[i]) == p.part_of(pts[j]))
                continue;
            if (p.has_positive(pts[i], pts[j]) == p.has_negative(pts[i], pts[j]))
                return false;
        }
    return true;
}

auto minorcsp::edges_between(const Pattern & p, PartId u, PartId v, bool positive) -> std::vector<std::pair<PointId, PointId>>
{
    std::vector<std::pair<PointId, PointId>> result;
    for (auto & [a, b] : positive ? p.positive() : p.negative()) {
        auto pa = p.part_of(a), pb = p.part_of(b);
        if (pa == u && pb == v)
            result.emplace_back(a, b);
        else if (pa == v && pb == u)
            result.emplace_back(b, a);
    }
    std::sort(result.begin(), result.end());
    return result;
}

auto minorcsp::subdivide(const Pattern & p, PartId u, PartId v) -> Pattern
{
    if (! p.has_part(u))
        throw Error(ErrorCode::UnknownPart, std::to_string(u));
    if (! p.has_part(v))
        throw Error(ErrorCode::UnknownPart, std::to_string(v));
    if (u == v)
        throw Error(ErrorCode::SamePart, std::to_string(u));

    auto pos = edges_between(p, u, v, true);
    auto neg = edges_between(p, u, v, false);
    if (pos.empty() && neg.empty())
        return p;

    auto part_of = p.part_map();
    auto positive = p.positive();
    auto negative = p.negative();
    PointId next = p.max_point_id() + 1;
    PartId z = p.max_part_id() + 1;

    for (auto & [x, y] : pos) {
        positive.erase(make_edge(x, y));
        PointId m = next++;
        part_of[m] = z;
        positive.insert(make_edge(x, m));
        positive.insert(make_edge(m, y));
    }

    for (auto & [x, y] : neg) {
        negative.erase(make_edge(x, y));
        PointId m1 = next++, m2 = next++;
        part_of[m1] = z;
        part_of[m2] = z;
        negative.insert(make_edge(x, m1));
        negative.insert(make_edge(m2, y));
    }

    return Pattern(part_of, positive, negative);
}

auto minorcsp::augment(const Pattern & p, int arity, const std::set<std::vector<PointId>> & tuples) -> AugmentedPattern
{
    if (arity < 1)
        throw Error(ErrorCode::ArityMismatch, "arity must be at least one");
    for (auto & t : tuples) {
        if (int(t.size()) != arity)
            throw Error(ErrorCode::ArityMismatch, "tuple of size " + std::to_string(t.size()));
        for (auto x : t)
            if (! p.has_point(x))
                throw Error(ErrorCode::UnknownPoint, std::to_string(x));
    }
    return AugmentedPattern{ p, Relation{ arity, tuples } };
}

auto Operation::apply(const std::vector<int> & args) const -> std::optional<int>
{
    auto i = table.find(args);
    if (i == table.end())
        return std::nullopt;
    return i->second;
}

auto Operation::is_total() const -> bool
{
    if (arity < 1)
        return false;
    std::vector<int> idx(arity, 0), args(arity);
    if (domain.empty())
        return true;
    while (true) {
        for (int i = 0 ; i < arity ; ++i)
            args[i] = domain[idx[i]];
        auto r = apply(args);
        if (! r || std::find(domain.begin(), domain.end(), *r) == domain.end())
            return false;
        int i = arity - 1;
        while (i >= 0 && ++idx[i] == int(domain.size()))
            idx[i--] = 0;
        if (i < 0)
            return true;
    }
}

auto minorcsp::make_graph(std::vector<int> vertices, const std::vector<Edge> & edges) -> Graph
{
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    Graph g;
    g.vertices = vertices;
    for (auto & [a, b] : edges) {
        if (a == b)
            throw Error(ErrorCode::BadInput, "self-loop at " + std::to_string(a));
        if (! std::binary_search(vertices.begin(), vertices.end(), a) || ! std::binary_search(vertices.begin(), vertices.end(), b))
            throw Error(ErrorCode::BadInput, "edge endpoint is not a vertex");
        g.edges.insert(make_edge(a, b));
    }
    return g;
}

auto minorcsp::neighbours(const Graph & g, int v) -> std::vector<int>
{
    std::vector<int> result;
    for (auto & [a, b] : g.edges) {
        if (a == v)
            result.push_back(b);
        else if (b == v)
            result.push_back(a);
    }
    std::sort(result.begin(), result.end());
    return result;
}
