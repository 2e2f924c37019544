/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINORCSP_GUARD_IO_HH
#define MINORCSP_GUARD_IO_HH 1

#include <minorcsp/gadgets.hh>
#include <minorcsp/graphs.hh>
#include <minorcsp/instance.hh>
#include <minorcsp/occurrence.hh>
#include <minorcsp/pattern.hh>
#include <minorcsp/solvers.hh>

#include <json.hpp>

#include <vector>

namespace minorcsp
{
    using Json = nlohmann::json;

    /// An instance plus the external label of every value.
    struct LabelledInstance
    {
        Instance instance;
        std::vector<std::vector<Json>> labels;
    };

    auto default_labels(const Instance &) -> std::vector<std::vector<Json>>;

    auto pattern_to_json(const AugmentedPattern &) -> Json;
    auto pattern_to_json(const Pattern &) -> Json;
    /// Throws BadInput, SamePartEdge, UnknownPoint.
    auto pattern_from_json(const Json &) -> AugmentedPattern;

    auto instance_to_json(const LabelledInstance &) -> Json;
    auto instance_to_json(const Instance &) -> Json;
    auto instance_from_json(const Json &) -> LabelledInstance;

    auto graph_to_json(const Graph &) -> Json;
    auto graph_from_json(const Json &) -> Graph;

    auto witness_to_json(const TmWitness &) -> Json;
    auto witness_from_json(const Json &) -> TmWitness;
    auto embedding_to_json(const Embedding &) -> Json;

    auto decomposition_to_json(const DecompositionTree &) -> Json;

    auto assignment_to_json(const LabelledInstance &, const Assignment &) -> Json;

    auto class_report_to_json(const ClassReport &) -> Json;

    auto gadget_report_to_json(const GadgetReport &) -> Json;
}

#endif
