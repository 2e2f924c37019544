/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINORCSP_GUARD_RANDOM_HH
#define MINORCSP_GUARD_RANDOM_HH 1

#include <minorcsp/gadgets.hh>
#include <minorcsp/instance.hh>
#include <minorcsp/pattern.hh>

#include <cstdint>
#include <random>

namespace minorcsp
{
    /**
     * std::mt19937_64 with draws taken straight from its 64-bit output, so
     * sequences do not depend on a standard library's distribution code.
     * Reals use the top 53 bits; integers below n use rejection sampling.
     */
    class Rng
    {
        private:
            std::mt19937_64 _engine;

        public:
            explicit Rng(std::uint64_t seed) :
                _engine(seed)
            {
            }

            auto next() -> std::uint64_t
            {
                return _engine();
            }

            auto real() -> double;
            auto below(std::uint64_t n) -> std::uint64_t;
            auto between(int lo, int hi) -> int;
            auto chance(double p) -> bool;
    };

    /// Throws BadDensity unless density lies in [0, 1].
    auto gen_random(int vars, int dom, double density, std::uint64_t seed) -> Instance;

    struct RandomInstanceShape
    {
        int vars = 4;
        int dom = 2;
        double density = 0.5;
        double tightness = 0.5;
        bool vary_domain_sizes = false;
    };

    auto random_instance(Rng &, const RandomInstanceShape &) -> Instance;

    struct RandomPatternShape
    {
        int parts = 3;
        int max_points_per_part = 2;
        double positive = 0.3;
        double negative = 0.3;
    };

    auto random_pattern(Rng &, const RandomPatternShape &) -> Pattern;

    auto random_graph(Rng &, int vertices, double edge_probability) -> Graph;

    auto random_cnf(Rng &, int n, int m) -> Cnf;
}

#endif
