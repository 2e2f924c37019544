/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minorcsp/instance.hh>

#include <algorithm>

using namespace minorcsp;

namespace
{
    auto oriented(Var u, Var v) -> std::pair<Var, Var>
    {
        return u < v ? std::pair{ u, v } : std::pair{ v, u };
    }

    auto flip(const std::set<ValuePair> & s) -> std::set<ValuePair>
    {
        std::set<ValuePair> result;
        for (auto & [a, b] : s)
            result.emplace(b, a);
        return result;
    }
}

auto Instance::add_variable(std::string name, std::vector<Value> domain) -> Var
{
    std::sort(domain.begin(), domain.end());
    domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
    if (! domain.empty() && domain.front() < 0)
        throw Error(ErrorCode::BadInput, "negative value in domain of " + name);
    _names.push_back(std::move(name));
    _domains.push_back(std::move(domain));
    return Var(_names.size() - 1);
}

auto Instance::in_domain(Var v, Value a) const -> bool
{
    auto & d = _domains.at(v);
    return std::binary_search(d.begin(), d.end(), a);
}

auto Instance::constrain(Var u, Var v, const std::set<ValuePair> & allowed) -> void
{
    if (u == v || u < 0 || v < 0 || u >= size() || v >= size())
        throw Error(ErrorCode::BadInput, "bad constraint scope");
    for (auto & [a, b] : allowed)
        if (! in_domain(u, a) || ! in_domain(v, b))
            throw Error(ErrorCode::BadInput, "allowed pair outside the domains of " + _names[u] + ", " + _names[v]);

    auto key = oriented(u, v);
    auto pairs = u < v ? allowed : flip(allowed);
    auto i = _relations.find(key);
    if (i == _relations.end())
        _relations.emplace(key, pairs);
    else {
        std::set<ValuePair> both;
        std::set_intersection(i->second.begin(), i->second.end(), pairs.begin(), pairs.end(), std::inserter(both, both.end()));
        i->second = both;
    }
}

auto Instance::restrict_pair(Var u, Var v, const std::set<ValuePair> & keep) -> void
{
    auto current = allowed_pairs(u, v);
    std::set<ValuePair> both;
    std::set_intersection(current.begin(), current.end(), keep.begin(), keep.end(), std::inserter(both, both.end()));
    auto key = oriented(u, v);
    _relations[key] = u < v ? both : flip(both);
}

auto Instance::set_domain(Var v, std::vector<Value> domain) -> void
{
    std::sort(domain.begin(), domain.end());
    domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
    _domains.at(v) = std::move(domain);
    for (auto & [key, rel] : _relations) {
        if (key.first != v && key.second != v)
            continue;
        for (auto i = rel.begin() ; i != rel.end() ; ) {
            if (in_domain(key.first, i->first) && in_domain(key.second, i->second))
                ++i;
            else
                i = rel.erase(i);
        }
    }
}

auto Instance::allowed(Var u, Value a, Var v, Value b) const -> bool
{
    if (u == v)
        return a == b;
    auto i = _relations.find(oriented(u, v));
    if (i == _relations.end())
        return true;
    return u < v ? i->second.contains({ a, b }) : i->second.contains({ b, a });
}

auto Instance::allowed_pairs(Var u, Var v) const -> std::set<ValuePair>
{
    std::set<ValuePair> result;
    for (auto a : domain(u))
        for (auto b : domain(v))
            if (allowed(u, a, v, b))
                result.emplace(a, b);
    return result;
}

auto Instance::constrained(Var u, Var v) const -> bool
{
    auto i = _relations.find(oriented(u, v));
    if (i == _relations.end())
        return false;
    auto [x, y] = i->first;
    long long count = 0;
    for (auto & [a, b] : i->second)
        if (in_domain(x, a) && in_domain(y, b))
            ++count;
    return count < (long long)(domain(x).size()) * (long long)(domain(y).size());
}

auto Instance::max_domain_size() const -> int
{
    int m = 0;
    for (auto & d : _domains)
        m = std::max(m, int(d.size()));
    return m;
}

auto Instance::has_empty_domain() const -> bool
{
    return std::any_of(_domains.begin(), _domains.end(), [] (auto & d) { return d.empty(); });
}

auto Instance::normalise() -> void
{
    for (auto i = _relations.begin() ; i != _relations.end() ; ) {
        auto [u, v] = i->first;
        auto & rel = i->second;
        for (auto j = rel.begin() ; j != rel.end() ; ) {
            if (in_domain(u, j->first) && in_domain(v, j->second))
                ++j;
            else
                j = rel.erase(j);
        }
        if ((long long)(rel.size()) == (long long)(domain(u).size()) * (long long)(domain(v).size()))
            i = _relations.erase(i);
        else
            ++i;
    }
}

auto minorcsp::normalised(Instance i) -> Instance
{
    i.normalise();
    return i;
}

auto minorcsp::subinstance(const Instance & inst, const std::vector<Var> & vars) -> Instance
{
    Instance result;
    for (auto v : vars)
        result.add_variable(inst.name(v), inst.domain(v));
    for (unsigned i = 0 ; i < vars.size() ; ++i)
        for (unsigned j = i + 1 ; j < vars.size() ; ++j)
            if (inst.constrained(vars[i], vars[j]))
                result.constrain(i, j, inst.allowed_pairs(vars[i], vars[j]));
    return result;
}

auto minorcsp::satisfies(const Instance & inst, const Assignment & s) -> bool
{
    if (int(s.size()) != inst.size())
        return false;
    for (Var v = 0 ; v < inst.size() ; ++v)
        if (! inst.in_domain(v, s[v]))
            return false;
    for (auto & [key, rel] : inst.relations())
        if (! rel.contains({ s[key.first], s[key.second] }))
            return false;
    return true;
}

auto minorcsp::microstructure(const Instance & inst) -> Microstructure
{
    Microstructure m;
    std::map<PointId, PartId> part_of;
    for (Var v = 0 ; v < inst.size() ; ++v)
        for (auto a : inst.domain(v)) {
            PointId p = PointId(m.point_label.size());
            m.point_label.emplace_back(v, a);
            m.point_id.emplace(std::pair{ v, a }, p);
            part_of.emplace(p, v);
        }

    std::set<Edge> pos, neg;
    for (PointId x = 0 ; x < PointId(m.point_label.size()) ; ++x)
        for (PointId y = x + 1 ; y < PointId(m.point_label.size()) ; ++y) {
            auto [u, a] = m.point_label[x];
            auto [v, b] = m.point_label[y];
            if (u == v)
                continue;
            (inst.allowed(u, a, v, b) ? pos : neg).emplace(x, y);
        }

    m.pattern = Pattern(part_of, pos, neg);
    return m;
}

auto minorcsp::pattern_from_instance(const Instance & inst) -> Pattern
{
    return microstructure(inst).pattern;
}

auto minorcsp::pattern_from_graph(const Graph & g) -> Pattern
{
    std::map<PointId, PartId> part_of;
    std::set<Edge> neg;
    PointId next = 0;
    for (auto & [a, b] : g.edges) {
        part_of[next] = a;
        part_of[next + 1] = b;
        neg.emplace(next, next + 1);
        next += 2;
    }
    return Pattern(part_of, {}, neg);
}

auto minorcsp::instance_relation(const RelationSpec & spec, const Instance & inst) -> Relation
{
    auto m = microstructure(inst);
    Relation r;
    r.arity = spec.arity();

    if (spec.kind == RelationKind::Neq) {
        auto n = PointId(m.point_label.size());
        for (PointId x = 0 ; x < n ; ++x)
            for (PointId y = 0 ; y < n ; ++y)
                if (x != y)
                    r.tuples.insert({ x, y });
        return r;
    }

    auto & op = spec.operation;
    int k = op.arity;
    if (k < 1)
        throw Error(ErrorCode::ArityMismatch, "operation arity must be at least one");

    for (Var v = 0 ; v < inst.size() ; ++v) {
        auto & d = inst.domain(v);
        if (d.empty())
            continue;
        std::vector<unsigned> idx(k, 0);
        std::vector<int> args(k);
        while (true) {
            for (int i = 0 ; i < k ; ++i)
                args[i] = d[idx[i]];
            auto res = op.apply(args);
            if (! res)
                throw Error(ErrorCode::PartialTable, "no entry for a tuple over the domain of " + inst.name(v));
            if (inst.in_domain(v, *res)) {
                std::vector<PointId> t;
                for (auto a : args)
                    t.push_back(m.point_id.at({ v, a }));
                t.push_back(m.point_id.at({ v, *res }));
                r.tuples.insert(t);
            }
            int i = k - 1;
            while (i >= 0 && ++idx[i] == d.size())
                idx[i--] = 0;
            if (i < 0)
                break;
        }
    }
    return r;
}

auto minorcsp::augmented_microstructure(const Instance & inst, const RelationSpec & spec) -> AugmentedPattern
{
    return AugmentedPattern{ pattern_from_instance(inst), instance_relation(spec, inst) };
}
