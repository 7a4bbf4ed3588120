#pragma once

#include "ncd/parking_tree.hpp"
#include "ncd/partition.hpp"
#include "ncd/plane_tree.hpp"

#include <string>

namespace ncd {

// Circle representation: solid gray polygons for the blocks, dashed light
// polygons for the Kreweras dual on the interleaved primed points, labels
// outside the circle.
std::string render_circle_svg(const NoncrossingPartition& pi, bool with_dual = true);

// Labeled plane tree, root on top, labels mid-edge, black/white vertices by
// depth parity.
std::string render_labeled_tree_svg(const LabeledPlaneTree& t);

// Parking tree with labels inside the vertices and DFS numbers alongside.
std::string render_parking_tree_svg(const DParkingTree& t);

} // namespace ncd
