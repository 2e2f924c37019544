/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINORCSP_GUARD_SOLVERS_HH
#define MINORCSP_GUARD_SOLVERS_HH 1

#include <minorcsp/instance.hh>
#include <minorcsp/pattern.hh>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace minorcsp
{
    enum class Status
    {
        Sat,
        Unsat
    };

    struct SolveStats
    {
        long long nodes = 0;
        long long propagations = 0;
        long long subcalls = 0;
    };

    struct SolveResult
    {
        Status status = Status::Unsat;
        std::optional<Assignment> assignment;
        SolveStats stats;
    };

    /// Default cap on the product of the domain sizes; MINORCSP_CAP overrides.
    inline constexpr long long default_brute_force_cap = 10000000;

    auto brute_force_cap() -> long long;

    /// Throws CapExceeded.
    auto brute_force_solve(const Instance &) -> SolveResult;
    auto brute_force_solve(const Instance &, long long cap) -> SolveResult;

    /// Unique largest arc-consistent subinstance, normalised.
    auto establish_ac(const Instance &, SolveStats * = nullptr) -> Instance;
    auto establish_sac(const Instance &, SolveStats * = nullptr) -> Instance;

    /// Fixes v = a and removes incompatible values elsewhere; v keeps the single value a.
    auto assign(const Instance &, Var v, Value a) -> Instance;

    auto mac_solve(const Instance &) -> SolveResult;

    /// Throws NotAcyclic.
    auto solve_acyclic(const Instance &) -> SolveResult;

    using LeafSolver = std::function<SolveResult (const Instance &)>;

    auto solve_articulation(const Instance &, const LeafSolver & = mac_solve) -> SolveResult;

    auto solve_tutte_scheme(const Instance &, const LeafSolver & = mac_solve) -> SolveResult;

    /// Throws NotInClass unless the K_neq class membership holds.
    auto decide_ac_class(const Instance &) -> SolveResult;

    /// Throws NotInClass unless the PG(C3)_neq class membership holds.
    auto decide_sac_class(const Instance &) -> SolveResult;

    /// Throws DomainMismatch unless every domain equals the table's domain.
    auto check_polymorphism(const Operation &, const Instance &) -> bool;

    struct ClassReport
    {
        bool acyclic = false;
        bool forb_tm_k = false;
        bool forb_tm_l = false;
        bool forb_tm_k_neq = false;
        bool forb_tm_c3_neq = false;
        std::vector<std::pair<int, bool>> forb_sp_pivot;
        std::vector<std::pair<int, bool>> forb_sp_pivot_neq;
        std::string recommended;
    };

    auto classify(const Instance &, int pivot_bound = 2) -> ClassReport;

    /// Dispatch by name: auto, bruteforce, mac, acyclic, articulation, tutte, ac-class, sac-class.
    auto solve_with(const Instance &, const std::string & method) -> SolveResult;
}

#endif
