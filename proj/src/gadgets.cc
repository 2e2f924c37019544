/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minorcsp/catalogue.hh>
#include <minorcsp/gadgets.hh>
#include <minorcsp/graphs.hh>
#include <minorcsp/occurrence.hh>
#include <minorcsp/solvers.hh>

#include <algorithm>
#include <sstream>

using namespace minorcsp;

auto minorcsp::validate_cnf(const Cnf & f) -> void
{
    if (f.n < 1)
        throw Error(ErrorCode::BadInput, "a formula needs at least one variable");
    if (f.clauses.empty())
        throw Error(ErrorCode::BadInput, "a formula needs at least one clause");
    for (auto & c : f.clauses)
        for (auto l : c)
            if (l == 0 || l > f.n || l < -f.n)
                throw Error(ErrorCode::BadInput, "literal " + std::to_string(l) + " out of range");
}

auto minorcsp::parse_dimacs(const std::string & text) -> Cnf
{
    std::istringstream in(text);
    std::string line;
    Cnf f;
    int declared = -1;
    std::vector<int> pending;

    while (std::getline(in, line)) {
        std::istringstream words(line);
        std::string first;
        if (! (words >> first) || first == "c" || first[0] == 'c' || first[0] == '%')
            continue;
        if (first == "p") {
            std::string kind;
            if (! (words >> kind >> f.n >> declared) || kind != "cnf")
                throw Error(ErrorCode::BadInput, "bad header: " + line);
            continue;
        }
        if (declared < 0)
            throw Error(ErrorCode::BadInput, "clause before the header");

        std::istringstream all(line);
        std::string word;
        while (all >> word) {
            int l = 0;
            try {
                std::size_t used = 0;
                l = std::stoi(word, &used);
                if (used != word.size())
                    throw std::invalid_argument(word);
            }
            catch (const std::exception &) {
                throw Error(ErrorCode::BadInput, "bad literal '" + word + "'");
            }
            if (l != 0) {
                pending.push_back(l);
                continue;
            }
            if (pending.size() != 3)
                throw Error(ErrorCode::BadInput, "clause with " + std::to_string(pending.size()) + " literals");
            f.clauses.push_back({ pending[0], pending[1], pending[2] });
            pending.clear();
        }
    }

    if (declared < 0)
        throw Error(ErrorCode::BadInput, "missing 'p cnf' header");
    if (! pending.empty())
        throw Error(ErrorCode::BadInput, "unterminated clause");
    if (int(f.clauses.size()) != declared)
        throw Error(ErrorCode::BadInput, "header declares " + std::to_string(declared) + " clauses, found "
                + std::to_string(f.clauses.size()));
    validate_cnf(f);
    return f;
}

auto minorcsp::to_dimacs(const Cnf & f) -> std::string
{
    std::ostringstream out;
    out << "p cnf " << f.n << " " << f.clauses.size() << "\n";
    for (auto & c : f.clauses)
        out << c[0] << " " << c[1] << " " << c[2] << " 0\n";
    return out.str();
}

auto minorcsp::truth_table_sat(const Cnf & f) -> bool
{
    validate_cnf(f);
    for (long long bits = 0 ; bits < (1LL << f.n) ; ++bits) {
        auto value = [&] (int l) {
            bool x = (bits >> (std::abs(l) - 1)) & 1;
            return l > 0 ? x : ! x;
        };
        if (std::all_of(f.clauses.begin(), f.clauses.end(), [&] (auto & c) {
                    return value(c[0]) || value(c[1]) || value(c[2]); }))
            return true;
    }
    return false;
}

namespace
{
    struct Layout
    {
        Instance inst;
        std::map<Var, std::string> roles;
        std::map<std::pair<Var, Var>, std::set<ValuePair>> positive;
        std::vector<Var> p;
        std::vector<std::vector<Var>> v, vbar;

        auto add(const std::string & name, std::vector<Value> domain) -> Var
        {
            auto x = inst.add_variable(name, std::move(domain));
            roles[x] = name;
            return x;
        }

        auto link(Var x, Value a, Var y, Value b) -> void
        {
            if (x < y)
                positive[{ x, y }].emplace(a, b);
            else
                positive[{ y, x }].emplace(b, a);
        }

        /// Every pair not linked above becomes disallowed.
        auto complete() -> void
        {
            for (Var x = 0 ; x < inst.size() ; ++x)
                for (Var y = x + 1 ; y < inst.size() ; ++y) {
                    auto i = positive.find({ x, y });
                    inst.constrain(x, y, i == positive.end() ? std::set<ValuePair>{} : i->second);
                }
        }
    };

    auto lay_out(const Cnf & f, bool ends_have_middle) -> Layout
    {
        validate_cnf(f);
        int n = f.n, m = int(f.clauses.size());
        Layout l;

        std::vector<Value> end_domain{ top, bottom };
        if (ends_have_middle)
            end_domain.push_back(middle);

        for (int i = 0 ; i <= n + m ; ++i)
            l.p.push_back(l.add("p" + std::to_string(i), (i == 0 || i == n + m) ? end_domain : std::vector<Value>{ 0 }));

        l.v.assign(n + 1, std::vector<Var>(m + 1, -1));
        l.vbar = l.v;
        for (int i = 1 ; i <= n ; ++i)
            for (int r = 1 ; r <= m ; ++r) {
                auto suffix = std::to_string(i) + "_" + std::to_string(r);
                l.v[i][r] = l.add("v" + suffix, { chain_lane, clause_lane });
                l.vbar[i][r] = l.add("vbar" + suffix, { chain_lane, clause_lane });
            }

        auto p_value = [&] (int i) { return (i == 0 || i == n + m) ? top : 0; };

        for (int i = 1 ; i <= n ; ++i)
            for (auto & lane : { l.v[i], l.vbar[i] }) {
                Var prev = l.p[i - 1];
                Value prev_value = p_value(i - 1);
                for (int r = 1 ; r <= m ; ++r) {
                    l.link(prev, prev_value, lane[r], chain_lane);
                    prev = lane[r];
                    prev_value = chain_lane;
                }
                l.link(prev, prev_value, l.p[i], p_value(i));
            }

        for (int r = 1 ; r <= m ; ++r) {
            std::set<Var> literal_parts;
            for (auto lit : f.clauses[r - 1])
                literal_parts.insert(lit > 0 ? l.vbar[lit][r] : l.v[-lit][r]);
            for (auto x : literal_parts) {
                l.link(l.p[n + r - 1], p_value(n + r - 1), x, clause_lane);
                l.link(x, clause_lane, l.p[n + r], p_value(n + r));
            }
        }
        return l;
    }
}

auto minorcsp::build_sat_gadget(const Cnf & f) -> Gadget
{
    auto l = lay_out(f, false);
    Var p0 = l.p.front(), pl = l.p.back();

    Var u = l.add("u", { top, bottom });
    Var w = l.add("w", { top, bottom });
    l.link(u, top, p0, top);
    l.link(u, top, p0, bottom);
    l.link(u, bottom, p0, top);
    l.link(pl, top, w, top);
    l.link(pl, top, w, bottom);
    l.link(pl, bottom, w, top);
    l.complete();

    Gadget g;
    g.instance = l.inst;
    g.pattern = make_m();
    g.start = p0;
    g.finish = pl;
    g.roles = l.roles;
    for (Var x = 0 ; x < g.instance.size() ; ++x)
        for (auto a : g.instance.domain(x))
            g.original_points.emplace(x, a);
    return g;
}

auto minorcsp::build_gc_gadget(const Cnf & f) -> Gadget
{
    auto l = lay_out(f, true);
    Var p0 = l.p.front(), pl = l.p.back();

    // E with p_{n+m} on the left and p_0 on the right
    std::vector<std::pair<Value, Value>> e{ { top, top }, { middle, middle }, { top, middle }, { middle, top },
        { top, bottom }, { bottom, top } };
    for (auto & [a, b] : e)
        l.link(pl, a, p0, b);
    l.complete();

    Gadget g;
    for (Var x = 0 ; x < l.inst.size() ; ++x)
        for (auto a : l.inst.domain(x))
            g.original_points.emplace(x, a);
    g.instance = make_globally_consistent(l.inst);
    g.pattern = make_m_prime();
    g.start = p0;
    g.finish = pl;
    g.roles = l.roles;
    return g;
}

auto minorcsp::build_gadget(const Cnf & f, GadgetVariant variant) -> Gadget
{
    return variant == GadgetVariant::Standard ? build_sat_gadget(f) : build_gc_gadget(f);
}

auto minorcsp::make_globally_consistent(const Instance & inst, GlobalConsistencyMap * map) -> Instance
{
    int n = inst.size();
    std::vector<std::vector<Value>> domains = inst.domains();
    std::vector<Value> next(n, 0);
    for (Var v = 0 ; v < n ; ++v)
        next[v] = domains[v].empty() ? 0 : domains[v].back() + 1;

    // family[(v, a)][v'] = b(v, a, v')
    std::map<std::pair<Var, Value>, std::map<Var, Value>> family;
    for (Var v = 0 ; v < n ; ++v)
        for (auto a : inst.domain(v))
            for (Var x = 0 ; x < n ; ++x) {
                if (x == v)
                    continue;
                Value b = next[x]++;
                domains[x].push_back(b);
                family[{ v, a }][x] = b;
                if (map)
                    map->origin[{ x, b }] = { v, a };
            }

    Instance result;
    for (Var v = 0 ; v < n ; ++v)
        result.add_variable(inst.name(v), domains[v]);

    for (Var x = 0 ; x < n ; ++x)
        for (Var y = x + 1 ; y < n ; ++y) {
            auto allowed = inst.allowed_pairs(x, y);
            for (auto & [origin, members] : family) {
                auto [v, a] = origin;
                if (v == x)
                    allowed.emplace(a, members.at(y));
                else if (v == y)
                    allowed.emplace(members.at(x), a);
                else
                    allowed.emplace(members.at(x), members.at(y));
            }
            result.constrain(x, y, allowed);
        }

    result.normalise();
    return result;
}

auto minorcsp::is_globally_consistent(const Instance & inst) -> bool
{
    for (Var v = 0 ; v < inst.size() ; ++v)
        for (auto a : inst.domain(v))
            if (brute_force_solve(assign(inst, v, a)).status != Status::Sat)
                return false;
    return true;
}

auto minorcsp::gadget_path(const Gadget & g) -> std::optional<std::vector<std::pair<Var, Value>>>
{
    // the direct start-finish pair does not count; the GC variant allows it
    auto inst = g.instance;
    inst.restrict_pair(g.start, g.finish, {});
    return part_disjoint_positive_path(inst, { g.start, top }, { g.finish, top }, &g.original_points);
}

auto minorcsp::verify_gadget(const Cnf & f, GadgetVariant variant, bool with_tm, const GadgetCheckLimits & limits) -> GadgetReport
{
    GadgetReport r;
    r.sat = truth_table_sat(f);
    auto g = build_gadget(f, variant);
    r.path = gadget_path(g).has_value();
    if (with_tm) {
        if (g.instance.size() > limits.max_tm_parts)
            throw Error(ErrorCode::SizeLimitExceeded, "TM check asked for on " + std::to_string(g.instance.size())
                    + " parts; the limit is " + std::to_string(limits.max_tm_parts));
        r.tm = occurs_tm(g.pattern, pattern_from_instance(g.instance)).has_value();
    }
    r.agree = r.sat == r.path && (! r.tm || *r.tm == r.sat);
    return r;
}
