/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINORCSP_GUARD_GADGETS_HH
#define MINORCSP_GUARD_GADGETS_HH 1

#include <minorcsp/instance.hh>
#include <minorcsp/pattern.hh>

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace minorcsp
{
    /// Literals are signed 1-based variable indices.
    struct Cnf
    {
        int n = 0;
        std::vector<std::array<int, 3>> clauses;
    };

    /// Throws BadInput.
    auto validate_cnf(const Cnf &) -> void;

    /// DIMACS with a "p cnf" header and three literals per clause; throws BadInput.
    auto parse_dimacs(const std::string & text) -> Cnf;

    auto to_dimacs(const Cnf &) -> std::string;

    auto truth_table_sat(const Cnf &) -> bool;

    // Values used in the gadgets.
    inline constexpr Value top = 0, bottom = 1, middle = 2;
    inline constexpr Value chain_lane = 0, clause_lane = 1;

    enum class GadgetVariant
    {
        Standard,
        GloballyConsistent
    };

    struct Gadget
    {
        Instance instance;
        Pattern pattern;
        Var start = -1, finish = -1;
        std::map<Var, std::string> roles;
        /// The points present before make_globally_consistent.
        std::set<std::pair<Var, Value>> original_points;
    };

    auto build_sat_gadget(const Cnf &) -> Gadget;
    auto build_gc_gadget(const Cnf &) -> Gadget;
    auto build_gadget(const Cnf &, GadgetVariant) -> Gadget;

    struct GlobalConsistencyMap
    {
        /// New value -> (v, a) whose family it belongs to.
        std::map<std::pair<Var, Value>, std::pair<Var, Value>> origin;
    };

    auto make_globally_consistent(const Instance &, GlobalConsistencyMap * = nullptr) -> Instance;

    /// Every point extends to a solution, checked by brute force.
    auto is_globally_consistent(const Instance &) -> bool;

    /// Positive path from start's top to finish's top through other parts, within original points.
    auto gadget_path(const Gadget &) -> std::optional<std::vector<std::pair<Var, Value>>>;

    struct GadgetReport
    {
        bool sat = false;
        bool path = false;
        std::optional<bool> tm;
        bool agree = false;
    };

    struct GadgetCheckLimits
    {
        int max_tm_parts = 7;
    };

    /// Throws SizeLimitExceeded when a TM check is asked for beyond the limit.
    auto verify_gadget(const Cnf &, GadgetVariant, bool with_tm,
            const GadgetCheckLimits & = GadgetCheckLimits{}) -> GadgetReport;
}

#endif
