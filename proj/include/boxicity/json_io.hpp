#pragma once

#include "boxicity/boxes.hpp"
#include "boxicity/certificate.hpp"
#include "boxicity/families.hpp"
#include "boxicity/folded.hpp"
#include "boxicity/graph.hpp"
#include "boxicity/interval.hpp"

#include "json.hpp"

#include <stdexcept>

namespace boxicity {

using Json = nlohmann::json;

/// Structurally invalid JSON document for one of the formats below.
class FormatError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// {"n": int, "edges": [[u, v], ...]}
[[nodiscard]] auto edge_list_json(const Graph &g) -> Json;
[[nodiscard]] auto graph_from_edge_list_json(const Json &j) -> Graph;

// {"intervals": {"v": [l, r], ...}}
[[nodiscard]] auto interval_model_json(const IntervalModel &m) -> Json;
[[nodiscard]] auto interval_model_from_json(const Json &j) -> IntervalModel;

// {"d": int, "boxes": {"v": ["full" | [l, r], ...], ...}}
[[nodiscard]] auto box_representation_json(const BoxRepresentation &b) -> Json;
[[nodiscard]] auto box_representation_from_json(const Json &j) -> BoxRepresentation;

// {"split_graph6": str, "fold_map": [host vertex per split vertex]}
[[nodiscard]] auto folded_cover_json(const FoldedCover &f) -> Json;
[[nodiscard]] auto folded_cover_from_json(const Json &j) -> FoldedCover;

// {"k": int, "colors": [int per vertex]}
[[nodiscard]] auto acyclic_coloring_json(const AcyclicColoring &c) -> Json;
[[nodiscard]] auto acyclic_coloring_from_json(const Json &j) -> AcyclicColoring;

// {"parameter": "box"|"localbox"|"unionbox", "value": int, "host_graph6": str,
//  "complement_cover": {"class": "C"|"Cbar", "bags": [[[u, v], ...], ...]},
//  "stats": {"t": int, "s": int}}
[[nodiscard]] auto certificate_json(const Certificate &c) -> Json;
[[nodiscard]] auto certificate_from_json(const Json &j) -> Certificate;

} // namespace boxicity
