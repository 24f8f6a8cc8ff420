#pragma once

#include <string>
#include <string_view>

#include "knotwidth/branchwidth.hpp"
#include "knotwidth/bubble.hpp"
#include "knotwidth/diagram.hpp"
#include "knotwidth/sphere_sketch.hpp"
#include "knotwidth/torus_map.hpp"

namespace knotwidth {

// Each document carries "format": "<name>.v1". Readers throw ParseError on
// malformed JSON, a wrong format tag or missing fields.

std::string diagram_to_json(const Diagram& d);
Diagram diagram_from_json(std::string_view text);

std::string decomposition_to_json(const BranchDecomposition& bd);
BranchDecomposition decomposition_from_json(std::string_view text);

std::string sketch_to_json(const SphereDecompositionSketch& s);

std::string torus_map_to_json(const TorusMap& t);
TorusMap torus_map_from_json(std::string_view text);

// Without a "rotation" field the rotation system is derived from the polylines.
std::string trace_to_json(const DoubleBubbleTrace& tr);
DoubleBubbleTrace trace_from_json(std::string_view text);

// Whole-file helpers; throw Error when the file cannot be read or written.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace knotwidth
