/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINORCSP_GUARD_CATALOGUE_HH
#define MINORCSP_GUARD_CATALOGUE_HH 1

#include <minorcsp/pattern.hh>

#include <string>
#include <vector>

namespace minorcsp
{
    /**
     * Point and part numbering of the named patterns, so tests and callers
     * can refer to individual points.
     */
    namespace names
    {
        // J: three singleton parts, negatives (a,c), (b,c).
        inline constexpr PointId j_a = 0, j_b = 1, j_c = 2;

        // K: A = {a1, a2}, B = {b1, b2}, C = {c}.
        inline constexpr PointId k_a1 = 0, k_a2 = 1, k_b1 = 2, k_b2 = 3, k_c = 4;
        inline constexpr PartId k_A = 0, k_B = 1, k_C = 2;

        // M: parts A, B, C, D of two points each; index 1 is the top point.
        inline constexpr PointId m_a1 = 0, m_a2 = 1, m_b1 = 2, m_b2 = 3, m_c1 = 4, m_c2 = 5, m_d1 = 6, m_d2 = 7;

        // E and M': left part {t, m, b}, right part {t, m, b}, apex.
        inline constexpr PointId e_lt = 0, e_lm = 1, e_lb = 2, e_rt = 3, e_rm = 4, e_rb = 5, e_apex = 6;
    }

    auto make_j() -> Pattern;
    auto make_k() -> Pattern;
    auto make_l() -> Pattern;
    auto make_c3() -> Pattern;
    auto make_m() -> Pattern;
    auto make_e() -> Pattern;
    auto make_m_prime() -> Pattern;

    /// The PG construction of a star with three branches of length k, two central points merged.
    auto make_pivot(int k) -> Pattern;

    /// Central points of make_pivot(k): the merged one first.
    auto pivot_centre(int k) -> std::pair<PointId, PointId>;

    auto make_pivot_neq(int k) -> AugmentedPattern;
    auto make_k_neq() -> AugmentedPattern;
    auto make_c3_neq() -> AugmentedPattern;
    auto make_j_prime_neq() -> AugmentedPattern;

    /// Two parts U = {p_1..p_{k+1}}, V = {q_1..q_{k+1}} with the relation tuples (p..), (q..).
    auto make_polymorphism_pattern(int k) -> AugmentedPattern;

    auto make_fig1a() -> Pattern;
    auto make_fig1b() -> Pattern;
    auto make_fig1c() -> Pattern;
    auto make_fig1d() -> Pattern;

    /// The PG construction of a star whose centre has the given branch lengths, no merging.
    auto make_star(const std::vector<int> & branch_lengths) -> Pattern;

    /// Extension by a fourth part and three negative edges; throws PreconditionViolated.
    auto make_p2_extension(const Pattern & p0, PartId u1, PartId u2, PartId u3) -> Pattern;

    /// As above, taking U2 as the part adjacent to both others.
    auto make_p2_extension(const Pattern & p0) -> Pattern;

    /// Keys: C3, J, K, K_neq, C3_neq, J_prime_neq, L, M, Mprime, E, fig1a..fig1d, pivot:k, pivot_neq:k.
    auto make_named(const std::string & key) -> AugmentedPattern;

    auto catalogue_keys() -> std::vector<std::string>;
}

#endif
