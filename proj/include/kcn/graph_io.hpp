#pragma once

#include <filesystem>

#include "kcn/graph.hpp"

namespace kcn {

// `source,target,weight` rows, keyword text, sorted; isolated nodes are
// not representable in this format.
void write_edge_csv(const WeightedKcn& graph, const std::filesystem::path& path);
WeightedKcn read_edge_csv(const std::filesystem::path& path);

// GraphML with a string `keyword` node attribute and an integer `weight`
// edge attribute. The reader accepts files written by write_graphml.
void write_graphml(const WeightedKcn& graph, const std::filesystem::path& path);
WeightedKcn read_graphml(const std::filesystem::path& path);

// Plain-text native store used between the build and report stages;
// keeps window, article count, isolated nodes, and weights exactly.
void write_kcn_file(const WeightedKcn& graph, const std::filesystem::path& path);
WeightedKcn read_kcn_file(const std::filesystem::path& path);

}  // namespace kcn
