/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minorcsp/random.hh>

using namespace minorcsp;

auto Rng::real() -> double
{
    return double(next() >> 11) * 0x1.0p-53;
}

auto Rng::below(std::uint64_t n) -> std::uint64_t
{
    if (n == 0)
        return 0;
    std::uint64_t threshold = (0 - n) % n;
    while (true) {
        auto r = next();
        if (r >= threshold)
            return r % n;
    }
}

auto Rng::between(int lo, int hi) -> int
{
    return lo + int(below(std::uint64_t(hi - lo + 1)));
}

auto Rng::chance(double p) -> bool
{
    return real() < p;
}

auto minorcsp::gen_random(int vars, int dom, double density, std::uint64_t seed) -> Instance
{
    if (! (density >= 0.0 && density <= 1.0))
        throw Error(ErrorCode::BadDensity, "density must lie in [0, 1]");
    if (vars < 0 || dom < 1)
        throw Error(ErrorCode::BadInput, "need vars >= 0 and dom >= 1");

    Rng rng(seed);
    Instance inst;
    std::vector<Value> domain;
    for (int a = 0 ; a < dom ; ++a)
        domain.push_back(a);
    for (int v = 0 ; v < vars ; ++v)
        inst.add_variable("x" + std::to_string(v), domain);

    std::vector<ValuePair> all;
    for (int a = 0 ; a < dom ; ++a)
        for (int b = 0 ; b < dom ; ++b)
            all.emplace_back(a, b);

    for (int u = 0 ; u < vars ; ++u)
        for (int v = u + 1 ; v < vars ; ++v) {
            if (! rng.chance(density))
                continue;
            std::vector<ValuePair> picked;
            for (auto & pr : all)
                if (rng.chance(0.5))
                    picked.push_back(pr);
            if (picked.size() == all.size())
                picked.erase(picked.begin() + rng.below(picked.size()));
            else if (picked.empty() && all.size() > 1)
                picked.push_back(all[rng.below(all.size())]);
            inst.constrain(u, v, { picked.begin(), picked.end() });
        }
    return inst;
}

auto minorcsp::random_instance(Rng & rng, const RandomInstanceShape & shape) -> Instance
{
    Instance inst;
    for (int v = 0 ; v < shape.vars ; ++v) {
        int size = shape.vary_domain_sizes ? rng.between(1, shape.dom) : shape.dom;
        std::vector<Value> domain;
        for (int a = 0 ; a < size ; ++a)
            domain.push_back(a);
        inst.add_variable("x" + std::to_string(v), domain);
    }

    for (int u = 0 ; u < shape.vars ; ++u)
        for (int v = u + 1 ; v < shape.vars ; ++v) {
            if (! rng.chance(shape.density))
                continue;
            std::set<ValuePair> allowed;
            for (auto a : inst.domain(u))
                for (auto b : inst.domain(v))
                    if (! rng.chance(shape.tightness))
                        allowed.emplace(a, b);
            inst.constrain(u, v, allowed);
        }
    inst.normalise();
    return inst;
}

auto minorcsp::random_pattern(Rng & rng, const RandomPatternShape & shape) -> Pattern
{
    std::map<PointId, PartId> part_of;
    PointId next = 0;
    for (int u = 0 ; u < shape.parts ; ++u) {
        int size = rng.between(1, shape.max_points_per_part);
        for (int i = 0 ; i < size ; ++i)
            part_of[next++] = u;
    }

    std::set<Edge> pos, neg;
    for (PointId x = 0 ; x < next ; ++x)
        for (PointId y = x + 1 ; y < next ; ++y) {
            if (part_of[x] == part_of[y])
                continue;
            if (rng.chance(shape.positive))
                pos.emplace(x, y);
            if (rng.chance(shape.negative))
                neg.emplace(x, y);
        }
    return Pattern(part_of, pos, neg);
}

auto minorcsp::random_graph(Rng & rng, int vertices, double edge_probability) -> Graph
{
    Graph g;
    for (int v = 0 ; v < vertices ; ++v)
        g.vertices.push_back(v);
    for (int u = 0 ; u < vertices ; ++u)
        for (int v = u + 1 ; v < vertices ; ++v)
            if (rng.chance(edge_probability))
                g.edges.emplace(u, v);
    return g;
}

auto minorcsp::random_cnf(Rng & rng, int n, int m) -> Cnf
{
    Cnf f;
    f.n = n;
    for (int r = 0 ; r < m ; ++r) {
        std::array<int, 3> c{};
        for (auto & l : c) {
            l = rng.between(1, n);
            if (rng.chance(0.5))
                l = -l;
        }
        f.clauses.push_back(c);
    }
    return f;
}
