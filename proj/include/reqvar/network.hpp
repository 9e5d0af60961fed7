#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "reqvar/building.hpp"

namespace reqvar {

// Finite-difference thermal network assembled from a BuildingSpec. Zone air nodes
// come first (spec order), then wall sub-nodes in assembly/layer order.
// Outdoor and ground are boundary nodes and are not part of the state.
struct NetworkModel {
    BuildingSpec spec;
    std::vector<std::string> node_names;
    Eigen::VectorXd capacitance;  // J/K
    // Symmetric; off-diagonals are -G_ij, diagonals sum every conductance touching
    // the node, boundary conductances included. Ventilation is not included.
    Eigen::MatrixXd conductance;
    Eigen::VectorXd to_outdoor;   // W/K per node (walls and windows)
    Eigen::VectorXd to_ground;    // W/K per node
    Eigen::VectorXd solar_gain;   // m2 of effective aperture per node
    std::size_t heated_node = 0;  // heater and ventilation act on this zone

    std::size_t node_count() const noexcept { return static_cast<std::size_t>(capacitance.size()); }
    std::size_t zone_count() const noexcept { return spec.zones.size(); }
};

// Throws ConstructionError when a zone cannot reach the outdoor node.
NetworkModel build_thermal_network(const BuildingSpec& spec);

}  // namespace reqvar
