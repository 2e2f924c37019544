/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minorcsp/catalogue.hh>
#include <minorcsp/instance.hh>

#include <algorithm>

using namespace minorcsp;
using namespace minorcsp::names;

namespace
{
    auto build(const std::vector<PartId> & part_of_point, const std::vector<Edge> & pos, const std::vector<Edge> & neg) -> Pattern
    {
        std::map<PointId, PartId> parts;
        for (PointId p = 0 ; p < PointId(part_of_point.size()) ; ++p)
            parts[p] = part_of_point[p];
        return Pattern(parts, { pos.begin(), pos.end() }, { neg.begin(), neg.end() });
    }

    auto parse_positive(const std::string & s) -> int
    {
        std::size_t used = 0;
        int k = 0;
        try {
            k = std::stoi(s, &used);
        }
        catch (const std::exception &) {
            throw Error(ErrorCode::UnknownName, "bad parameter '" + s + "'");
        }
        if (used != s.size() || k < 1)
            throw Error(ErrorCode::UnknownName, "bad parameter '" + s + "'");
        return k;
    }
}

auto minorcsp::make_j() -> Pattern
{
    return build({ 0, 1, 2 }, {}, { { j_a, j_c }, { j_b, j_c } });
}

auto minorcsp::make_k() -> Pattern
{
    return build({ k_A, k_A, k_B, k_B, k_C }, {}, { { k_a1, k_b1 }, { k_a2, k_c }, { k_b2, k_c } });
}

auto minorcsp::make_l() -> Pattern
{
    return build({ 0, 1, 2, 3 }, {}, { { 0, 1 }, { 1, 2 }, { 2, 3 } });
}

auto minorcsp::make_c3() -> Pattern
{
    return pattern_from_graph(make_graph({ 0, 1, 2 }, { { 0, 1 }, { 1, 2 }, { 0, 2 } }));
}

auto minorcsp::make_m() -> Pattern
{
    return build({ 0, 0, 1, 1, 2, 2, 3, 3 },
            { { m_a1, m_b1 }, { m_a1, m_b2 }, { m_a2, m_b1 }, { m_b1, m_c1 }, { m_c1, m_d1 }, { m_c1, m_d2 }, { m_c2, m_d1 } },
            { { m_a2, m_b2 }, { m_c2, m_d2 } });
}

auto minorcsp::make_e() -> Pattern
{
    return build({ 0, 0, 0, 1, 1, 1 },
            { { e_lt, e_rt }, { e_lm, e_rm }, { e_lt, e_rm }, { e_lm, e_rt }, { e_lt, e_rb }, { e_lb, e_rt } },
            {});
}

auto minorcsp::make_m_prime() -> Pattern
{
    return build({ 0, 0, 0, 1, 1, 1, 2 },
            { { e_lt, e_rt }, { e_lm, e_rm }, { e_lt, e_rm }, { e_lm, e_rt }, { e_lt, e_rb }, { e_lb, e_rt },
              { e_lt, e_apex }, { e_rt, e_apex } },
            { { e_lb, e_rb }, { e_lm, e_rb }, { e_lb, e_rm } });
}

auto minorcsp::make_pivot(int k) -> Pattern
{
    if (k < 1)
        throw Error(ErrorCode::PreconditionViolated, "pivot length must be at least one");

    std::vector<PartId> part_of{ 0, 0 };
    std::vector<Edge> neg;
    for (int branch = 0 ; branch < 3 ; ++branch) {
        PointId prev = branch < 2 ? 0 : 1;
        for (int j = 1 ; j <= k ; ++j) {
            PartId part = 1 + branch * k + (j - 1);
            PointId in = PointId(part_of.size());
            part_of.push_back(part);
            neg.push_back(make_edge(prev, in));
            if (j < k) {
                prev = PointId(part_of.size());
                part_of.push_back(part);
            }
        }
    }
    return build(part_of, {}, neg);
}

auto minorcsp::pivot_centre(int) -> std::pair<PointId, PointId>
{
    return { 0, 1 };
}

auto minorcsp::make_star(const std::vector<int> & branch_lengths) -> Pattern
{
    std::vector<PartId> part_of;
    std::vector<Edge> neg;
    PartId next_part = 1;
    for (auto len : branch_lengths) {
        if (len < 1)
            throw Error(ErrorCode::PreconditionViolated, "branch length must be at least one");
        PointId prev = PointId(part_of.size());
        part_of.push_back(0);
        for (int j = 1 ; j <= len ; ++j) {
            PartId part = next_part++;
            PointId in = PointId(part_of.size());
            part_of.push_back(part);
            neg.push_back(make_edge(prev, in));
            if (j < len) {
                prev = PointId(part_of.size());
                part_of.push_back(part);
            }
        }
    }
    return build(part_of, {}, neg);
}

auto minorcsp::make_pivot_neq(int k) -> AugmentedPattern
{
    auto [p, q] = pivot_centre(k);
    return augment(make_pivot(k), 2, { { p, q } });
}

auto minorcsp::make_k_neq() -> AugmentedPattern
{
    return augment(make_k(), 2, { { k_a1, k_a2 }, { k_b1, k_b2 } });
}

auto minorcsp::make_c3_neq() -> AugmentedPattern
{
    auto c3 = make_c3();
    std::set<std::vector<PointId>> tuples;
    for (auto u : c3.parts()) {
        auto m = c3.members(u);
        tuples.insert({ m[0], m[1] });
    }
    return augment(c3, 2, tuples);
}

auto minorcsp::make_j_prime_neq() -> AugmentedPattern
{
    // p = 0, q = 1, r1 = 2, r2 = 3
    return augment(build({ 0, 0, 1, 2 }, {}, { { 1, 2 }, { 0, 3 } }), 2, { { 0, 1 } });
}

auto minorcsp::make_polymorphism_pattern(int k) -> AugmentedPattern
{
    if (k < 1)
        throw Error(ErrorCode::ArityMismatch, "operation arity must be at least one");

    std::vector<PartId> part_of;
    std::vector<PointId> ps, qs;
    for (int i = 0 ; i <= k ; ++i) {
        ps.push_back(PointId(part_of.size()));
        part_of.push_back(0);
    }
    for (int i = 0 ; i <= k ; ++i) {
        qs.push_back(PointId(part_of.size()));
        part_of.push_back(1);
    }

    std::vector<Edge> pos;
    for (int i = 0 ; i < k ; ++i)
        pos.push_back(make_edge(ps[i], qs[i]));

    return augment(build(part_of, pos, { make_edge(ps[k], qs[k]) }), k + 1, { ps, qs });
}

auto minorcsp::make_fig1a() -> Pattern
{
    return build({ 0, 1, 2 }, { { 0, 1 } }, { { 0, 2 }, { 1, 2 } });
}

auto minorcsp::make_fig1b() -> Pattern
{
    return build({ 0, 1, 2, 2, 2 }, { { 0, 1 }, { 0, 2 }, { 1, 2 } }, { { 0, 3 }, { 1, 4 } });
}

auto minorcsp::make_fig1c() -> Pattern
{
    return build({ 0, 1 }, { { 0, 1 } }, { { 0, 1 } });
}

auto minorcsp::make_fig1d() -> Pattern
{
    return build({ 0, 1, 2, 2, 2 }, { { 0, 2 }, { 1, 2 } }, { { 0, 3 }, { 1, 4 } });
}

auto minorcsp::make_p2_extension(const Pattern & p0, PartId u1, PartId u2, PartId u3) -> Pattern
{
    auto parts = p0.parts();
    if (parts.size() != 3)
        throw Error(ErrorCode::PreconditionViolated, "P0 must have exactly three parts");
    std::vector<PartId> given{ u1, u2, u3 };
    std::sort(given.begin(), given.end());
    if (given != parts)
        throw Error(ErrorCode::PreconditionViolated, "U1, U2, U3 must be the parts of P0");
    if (edges_between(p0, u1, u2, false).size() > 1)
        throw Error(ErrorCode::PreconditionViolated, "more than one negative edge between U1 and U2");
    if (edges_between(p0, u2, u3, false).size() > 1)
        throw Error(ErrorCode::PreconditionViolated, "more than one negative edge between U2 and U3");
    if (! edges_between(p0, u1, u3, false).empty() || ! edges_between(p0, u1, u3, true).empty())
        throw Error(ErrorCode::PreconditionViolated, "edge between U1 and U3");

    auto part_of = p0.part_map();
    auto neg = p0.negative();
    PointId next = p0.max_point_id() + 1;
    PartId u4 = p0.max_part_id() + 1;
    PointId p1 = next++, p2 = next++, q1 = next++, q2 = next++, r1 = next++, r2 = next++;
    part_of[p1] = u1;
    part_of[p2] = u1;
    part_of[q1] = u4;
    part_of[q2] = u4;
    part_of[r1] = u3;
    part_of[r2] = u3;
    neg.insert(make_edge(p1, r1));
    neg.insert(make_edge(p2, q1));
    neg.insert(make_edge(q2, r2));
    return Pattern(part_of, p0.positive(), neg);
}

auto minorcsp::make_p2_extension(const Pattern & p0) -> Pattern
{
    auto parts = p0.parts();
    if (parts.size() != 3)
        throw Error(ErrorCode::PreconditionViolated, "P0 must have exactly three parts");

    std::string last_reason;
    for (int mid = 0 ; mid < 3 ; ++mid) {
        std::vector<PartId> ends;
        for (int i = 0 ; i < 3 ; ++i)
            if (i != mid)
                ends.push_back(parts[i]);
        try {
            return make_p2_extension(p0, ends[0], parts[mid], ends[1]);
        }
        catch (const Error & e) {
            last_reason = e.what();
        }
    }
    throw Error(ErrorCode::PreconditionViolated, "no choice of U2 works; last: " + last_reason);
}

auto minorcsp::make_named(const std::string & key) -> AugmentedPattern
{
    auto plain = [] (Pattern p) { return AugmentedPattern{ std::move(p), Relation{} }; };

    if (key == "C3")
        return plain(make_c3());
    if (key == "J")
        return plain(make_j());
    if (key == "K")
        return plain(make_k());
    if (key == "L")
        return plain(make_l());
    if (key == "M")
        return plain(make_m());
    if (key == "Mprime")
        return plain(make_m_prime());
    if (key == "E")
        return plain(make_e());
    if (key == "K_neq")
        return make_k_neq();
    if (key == "C3_neq")
        return make_c3_neq();
    if (key == "J_prime_neq")
        return make_j_prime_neq();
    if (key == "fig1a")
        return plain(make_fig1a());
    if (key == "fig1b")
        return plain(make_fig1b());
    if (key == "fig1c")
        return plain(make_fig1c());
    if (key == "fig1d")
        return plain(make_fig1d());
    if (key.starts_with("pivot:"))
        return plain(make_pivot(parse_positive(key.substr(6))));
    if (key.starts_with("pivot_neq:"))
        return make_pivot_neq(parse_positive(key.substr(10)));
    if (key.starts_with("poly:"))
        return make_polymorphism_pattern(parse_positive(key.substr(5)));

    throw Error(ErrorCode::UnknownName, key);
}

auto minorcsp::catalogue_keys() -> std::vector<std::string>
{
    return { "C3", "J", "K", "K_neq", "C3_neq", "J_prime_neq", "L", "M", "Mprime", "E",
        "fig1a", "fig1b", "fig1c", "fig1d", "pivot:k", "pivot_neq:k", "poly:k" };
}
