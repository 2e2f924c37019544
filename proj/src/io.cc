/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minorcsp/io.hh>

#include <algorithm>

using namespace minorcsp;

namespace
{
    auto bad(const std::string & what) -> Error
    {
        return Error(ErrorCode::BadInput, what);
    }

    auto as_int(const Json & j, const std::string & what) -> int
    {
        if (j.is_number_integer())
            return j.get<int>();
        if (j.is_string()) {
            auto s = j.get<std::string>();
            try {
                std::size_t used = 0;
                int v = std::stoi(s, &used);
                if (used == s.size())
                    return v;
            }
            catch (const std::exception &) {
            }
        }
        throw bad(what + " must be an integer");
    }

    auto edge_list(const Json & j, const std::string & what) -> std::set<Edge>
    {
        std::set<Edge> result;
        if (j.is_null())
            return result;
        if (! j.is_array())
            throw bad(what + " must be an array");
        for (auto & e : j) {
            if (! e.is_array() || e.size() != 2)
                throw bad(what + " entries must be pairs");
            result.insert(make_edge(as_int(e[0], what), as_int(e[1], what)));
        }
        return result;
    }

    auto edges_json(const std::set<Edge> & edges) -> Json
    {
        Json a = Json::array();
        for (auto & [x, y] : edges)
            a.push_back({ x, y });
        return a;
    }

    auto label_text(const Json & j) -> std::string
    {
        return j.is_string() ? j.get<std::string>() : j.dump();
    }
}

auto minorcsp::default_labels(const Instance & inst) -> std::vector<std::vector<Json>>
{
    std::vector<std::vector<Json>> result;
    for (Var v = 0 ; v < inst.size() ; ++v) {
        std::vector<Json> l;
        for (auto a : inst.domain(v))
            l.push_back(a);
        result.push_back(l);
    }
    return result;
}

auto minorcsp::pattern_to_json(const Pattern & p) -> Json
{
    return pattern_to_json(AugmentedPattern{ p, Relation{} });
}

auto minorcsp::pattern_to_json(const AugmentedPattern & a) -> Json
{
    auto & p = a.pattern;
    Json j;
    j["points"] = p.points();
    Json parts = Json::array();
    auto ids = p.parts();
    for (auto u : ids)
        parts.push_back(p.members(u));
    j["parts"] = parts;
    bool contiguous = true;
    for (unsigned i = 0 ; i < ids.size() ; ++i)
        if (ids[i] != int(i))
            contiguous = false;
    if (! contiguous)
        j["part_ids"] = ids;
    j["positive"] = edges_json(p.positive());
    j["negative"] = edges_json(p.negative());
    if (a.relation.arity > 0) {
        Json tuples = Json::array();
        for (auto & t : a.relation.tuples)
            tuples.push_back(t);
        j["relation"] = { { "arity", a.relation.arity }, { "tuples", tuples } };
    }
    return j;
}

auto minorcsp::pattern_from_json(const Json & j) -> AugmentedPattern
{
    if (! j.is_object())
        throw bad("pattern must be an object");
    if (! j.contains("points") || ! j["points"].is_array())
        throw bad("pattern needs a points array");
    if (! j.contains("parts") || ! j["parts"].is_array())
        throw bad("pattern needs a parts array");

    std::vector<PointId> points;
    for (auto & x : j["points"])
        points.push_back(as_int(x, "point"));

    std::vector<PartId> ids;
    if (j.contains("part_ids")) {
        for (auto & x : j["part_ids"])
            ids.push_back(as_int(x, "part id"));
        if (ids.size() != j["parts"].size())
            throw bad("part_ids and parts differ in length");
    }
    else
        for (unsigned i = 0 ; i < j["parts"].size() ; ++i)
            ids.push_back(int(i));

    std::map<PointId, PartId> part_of;
    for (unsigned i = 0 ; i < j["parts"].size() ; ++i) {
        auto & members = j["parts"][i];
        if (! members.is_array() || members.empty())
            throw bad("every part must be a nonempty array");
        for (auto & x : members) {
            auto pt = as_int(x, "point");
            if (! part_of.emplace(pt, ids[i]).second)
                throw bad("point " + std::to_string(pt) + " is in two parts");
        }
    }

    auto p = make_pattern(points, part_of,
            [&] { auto s = edge_list(j.value("positive", Json()), "positive"); return std::vector<Edge>(s.begin(), s.end()); }(),
            [&] { auto s = edge_list(j.value("negative", Json()), "negative"); return std::vector<Edge>(s.begin(), s.end()); }());

    if (j.contains("relation") && ! j["relation"].is_null()) {
        auto & r = j["relation"];
        int arity = as_int(r.value("arity", Json()), "relation arity");
        std::set<std::vector<PointId>> tuples;
        for (auto & t : r.value("tuples", Json::array())) {
            std::vector<PointId> tuple;
            for (auto & x : t)
                tuple.push_back(as_int(x, "relation point"));
            tuples.insert(tuple);
        }
        return augment(p, arity, tuples);
    }
    return AugmentedPattern{ p, Relation{} };
}

auto minorcsp::instance_to_json(const Instance & inst) -> Json
{
    return instance_to_json(LabelledInstance{ inst, default_labels(inst) });
}

auto minorcsp::instance_to_json(const LabelledInstance & li) -> Json
{
    auto & inst = li.instance;
    auto label = [&] (Var v, Value a) -> Json {
        auto & d = inst.domain(v);
        auto i = std::lower_bound(d.begin(), d.end(), a) - d.begin();
        if (v < Var(li.labels.size()) && i < (long)(li.labels[v].size()))
            return li.labels[v][i];
        return a;
    };

    Json vars = Json::array();
    for (Var v = 0 ; v < inst.size() ; ++v) {
        Json d = Json::array();
        for (auto a : inst.domain(v))
            d.push_back(label(v, a));
        vars.push_back({ { "name", inst.name(v) }, { "domain", d } });
    }

    Json cons = Json::array();
    for (auto & [key, rel] : inst.relations()) {
        Json allowed = Json::array();
        for (auto & [a, b] : rel)
            allowed.push_back({ label(key.first, a), label(key.second, b) });
        cons.push_back({ { "scope", { key.first, key.second } }, { "allowed", allowed } });
    }
    return { { "variables", vars }, { "constraints", cons } };
}

auto minorcsp::instance_from_json(const Json & j) -> LabelledInstance
{
    if (! j.is_object() || ! j.contains("variables") || ! j["variables"].is_array())
        throw bad("instance needs a variables array");

    LabelledInstance li;
    std::vector<std::map<std::string, Value>> value_of;
    std::map<std::string, Var> by_name;

    for (auto & var : j["variables"]) {
        if (! var.is_object() || ! var.contains("domain") || ! var["domain"].is_array())
            throw bad("every variable needs a domain array");
        auto name = var.value("name", "x" + std::to_string(li.instance.size()));
        auto & labels = var["domain"];

        bool numeric = std::all_of(labels.begin(), labels.end(), [] (auto & x) {
                return x.is_number_integer() && x.template get<long long>() >= 0 && x.template get<long long>() < (1LL << 30); });

        std::map<std::string, Value> values;
        std::vector<std::pair<Value, Json>> ordered;
        for (unsigned i = 0 ; i < labels.size() ; ++i) {
            Value a = numeric ? labels[i].get<int>() : int(i);
            if (! values.emplace(label_text(labels[i]), a).second)
                throw bad("repeated value in the domain of " + name);
            ordered.emplace_back(a, labels[i]);
        }
        std::sort(ordered.begin(), ordered.end(), [] (auto & x, auto & y) { return x.first < y.first; });

        std::vector<Value> domain;
        std::vector<Json> sorted_labels;
        for (auto & [a, l] : ordered) {
            domain.push_back(a);
            sorted_labels.push_back(l);
        }
        Var v = li.instance.add_variable(name, domain);
        by_name.emplace(name, v);
        value_of.push_back(values);
        li.labels.push_back(sorted_labels);
    }

    auto var_of = [&] (const Json & x) -> Var {
        if (x.is_string() && by_name.contains(x.get<std::string>()))
            return by_name.at(x.get<std::string>());
        int v = as_int(x, "scope entry");
        if (v < 0 || v >= li.instance.size())
            throw bad("scope names an unknown variable");
        return v;
    };

    for (auto & c : j.value("constraints", Json::array())) {
        if (! c.is_object() || ! c.contains("scope") || ! c["scope"].is_array() || c["scope"].size() != 2)
            throw bad("every constraint needs a two-variable scope");
        Var u = var_of(c["scope"][0]), v = var_of(c["scope"][1]);
        if (u == v)
            throw bad("constraint scope repeats a variable");
        std::set<ValuePair> allowed;
        for (auto & pr : c.value("allowed", Json::array())) {
            if (! pr.is_array() || pr.size() != 2)
                throw bad("allowed entries must be pairs");
            auto a = value_of[u].find(label_text(pr[0]));
            auto b = value_of[v].find(label_text(pr[1]));
            if (a == value_of[u].end() || b == value_of[v].end())
                throw bad("allowed pair mentions a value outside the domain");
            allowed.emplace(a->second, b->second);
        }
        li.instance.constrain(u, v, allowed);
    }
    return li;
}

auto minorcsp::graph_to_json(const Graph & g) -> Json
{
    return { { "vertices", g.vertices }, { "edges", edges_json(g.edges) } };
}

auto minorcsp::graph_from_json(const Json & j) -> Graph
{
    if (! j.is_object() || ! j.contains("vertices") || ! j["vertices"].is_array())
        throw bad("graph needs a vertices array");
    std::vector<int> vs;
    for (auto & v : j["vertices"])
        vs.push_back(as_int(v, "vertex"));
    auto es = edge_list(j.value("edges", Json::array()), "edges");
    return make_graph(vs, { es.begin(), es.end() });
}

auto minorcsp::embedding_to_json(const Embedding & e) -> Json
{
    Json m = Json::object();
    for (auto & [x, y] : e.point_map)
        m[std::to_string(x)] = std::to_string(y);
    return m;
}

auto minorcsp::witness_to_json(const TmWitness & w) -> Json
{
    Json steps = Json::array();
    for (auto & [u, v] : w.steps)
        steps.push_back({ std::to_string(u), std::to_string(v) });
    return { { "steps", steps }, { "map", embedding_to_json(w.embedding) } };
}

auto minorcsp::witness_from_json(const Json & j) -> TmWitness
{
    if (! j.is_object())
        throw bad("witness must be an object");
    TmWitness w;
    auto steps = j.value("steps", Json::array());
    auto map = j.value("map", Json::object());
    for (auto & s : steps) {
        if (! s.is_array() || s.size() != 2)
            throw bad("steps must be pairs");
        w.steps.emplace_back(as_int(s[0], "step part"), as_int(s[1], "step part"));
    }
    for (auto & [k, v] : map.items())
        w.embedding.point_map[as_int(Json(k), "map key")] = as_int(v, "map value");
    return w;
}

auto minorcsp::decomposition_to_json(const DecompositionTree & t) -> Json
{
    Json nodes = Json::array();
    for (unsigned i = 0 ; i < t.nodes.size() ; ++i) {
        auto & n = t.nodes[i];
        nodes.push_back({ { "id", i }, { "vertices", n.vertices }, { "kind", torso_kind_name(n.kind) },
                { "torso_edges", edges_json(n.torso_edges) }, { "virtual_edges", edges_json(n.virtual_edges) } });
    }
    Json arcs = Json::array();
    for (auto & a : t.arcs)
        arcs.push_back({ { "a", a.a }, { "b", a.b }, { "separator", a.separator } });

    std::function<Json (int, int)> nest = [&] (int node, int parent) -> Json {
        Json children = Json::array();
        for (auto & a : t.arcs) {
            int other = a.a == node ? a.b : a.b == node ? a.a : -1;
            if (other == -1 || other == parent)
                continue;
            auto child = nest(other, node);
            child["separator"] = a.separator;
            children.push_back(child);
        }
        return { { "node", node }, { "vertices", t.nodes[node].vertices }, { "children", children } };
    };

    Json j{ { "nodes", nodes }, { "arcs", arcs } };
    if (! t.nodes.empty())
        j["tree"] = nest(0, -1);
    return j;
}

auto minorcsp::assignment_to_json(const LabelledInstance & li, const Assignment & s) -> Json
{
    Json j = Json::object();
    for (Var v = 0 ; v < li.instance.size() && v < Var(s.size()) ; ++v) {
        auto & d = li.instance.domain(v);
        auto i = std::lower_bound(d.begin(), d.end(), s[v]) - d.begin();
        j[li.instance.name(v)] = (v < Var(li.labels.size()) && i < (long)(li.labels[v].size())) ? li.labels[v][i] : Json(s[v]);
    }
    return j;
}

auto minorcsp::class_report_to_json(const ClassReport & r) -> Json
{
    Json pivots = Json::object(), pivots_neq = Json::object();
    for (auto & [k, b] : r.forb_sp_pivot)
        pivots[std::to_string(k)] = b;
    for (auto & [k, b] : r.forb_sp_pivot_neq)
        pivots_neq[std::to_string(k)] = b;
    return {
        { "acyclic", r.acyclic },
        { "forb_tm_K", r.forb_tm_k },
        { "forb_tm_L", r.forb_tm_l },
        { "forb_tm_K_neq", r.forb_tm_k_neq },
        { "forb_tm_C3_neq", r.forb_tm_c3_neq },
        { "forb_sp_pivot", pivots },
        { "forb_sp_pivot_neq", pivots_neq },
        { "recommended", r.recommended }
    };
}

auto minorcsp::gadget_report_to_json(const GadgetReport & r) -> Json
{
    Json j{ { "sat", r.sat }, { "path", r.path }, { "agree", r.agree } };
    j["tm"] = r.tm ? Json(*r.tm) : Json();
    return j;
}
