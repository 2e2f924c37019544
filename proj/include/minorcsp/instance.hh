/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINORCSP_GUARD_INSTANCE_HH
#define MINORCSP_GUARD_INSTANCE_HH 1

#include <minorcsp/pattern.hh>

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace minorcsp
{
    using Var = int;
    using Value = int;
    using ValuePair = std::pair<Value, Value>;

    /**
     * Binary CSP. Variables are 0 .. n-1. Each unordered pair {u, v} with u < v
     * has at most one stored relation, oriented (value of u, value of v).
     * An absent pair is the trivial constraint.
     */
    class Instance
    {
        private:
            std::vector<std::string> _names;
            std::vector<std::vector<Value>> _domains;
            std::map<std::pair<Var, Var>, std::set<ValuePair>> _relations;

        public:
            Instance() = default;

            auto add_variable(std::string name, std::vector<Value> domain) -> Var;

            /// Intersects with any relation already on the pair.
            auto constrain(Var u, Var v, const std::set<ValuePair> & allowed) -> void;

            /// Removes every pair not in the given set, treating an absent relation as full.
            auto restrict_pair(Var u, Var v, const std::set<ValuePair> & keep) -> void;

            auto set_domain(Var v, std::vector<Value> domain) -> void;

            auto size() const -> int
            {
                return int(_names.size());
            }

            auto name(Var v) const -> const std::string &
            {
                return _names.at(v);
            }

            auto names() const -> const std::vector<std::string> &
            {
                return _names;
            }

            auto domain(Var v) const -> const std::vector<Value> &
            {
                return _domains.at(v);
            }

            auto domains() const -> const std::vector<std::vector<Value>> &
            {
                return _domains;
            }

            auto relations() const -> const std::map<std::pair<Var, Var>, std::set<ValuePair>> &
            {
                return _relations;
            }

            auto in_domain(Var v, Value a) const -> bool;

            auto allowed(Var u, Value a, Var v, Value b) const -> bool;

            /// True iff the relation on {u, v}, within the current domains, is not the full product.
            auto constrained(Var u, Var v) const -> bool;

            /// The allowed pairs for (u, v) within the domains, oriented as asked.
            auto allowed_pairs(Var u, Var v) const -> std::set<ValuePair>;

            auto max_domain_size() const -> int;

            auto has_empty_domain() const -> bool;

            /// Drops out-of-domain pairs and full-product relations. Idempotent.
            auto normalise() -> void;

            auto operator== (const Instance &) const -> bool = default;
    };

    auto normalised(Instance) -> Instance;

    /// Subinstance on the given variables, in the given order.
    auto subinstance(const Instance &, const std::vector<Var> & vars) -> Instance;

    using Assignment = std::vector<Value>;

    auto satisfies(const Instance &, const Assignment &) -> bool;

    /// The complete pattern PI(I) plus the point numbering used for it.
    struct Microstructure
    {
        Pattern pattern;
        std::vector<std::pair<Var, Value>> point_label;
        std::map<std::pair<Var, Value>, PointId> point_id;
    };

    auto microstructure(const Instance &) -> Microstructure;

    auto pattern_from_instance(const Instance &) -> Pattern;

    auto pattern_from_graph(const Graph &) -> Pattern;

    /// Tuples over the points of PI(I), numbered as in microstructure().
    auto instance_relation(const RelationSpec &, const Instance &) -> Relation;

    auto augmented_microstructure(const Instance &, const RelationSpec &) -> AugmentedPattern;
}

#endif
