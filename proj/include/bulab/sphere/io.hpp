#pragma once

#include <string>

#include "json.hpp"

#include "bulab/sphere/mesh.hpp"
#include "bulab/sphere/zero_search.hpp"

namespace bulab::sphere {

// {vertices: [[x,y,z]...], faces: [[i,j,k]...], level}
nlohmann::json mesh_to_json(const IcosphereMesh& mesh);

// {point, residual, cell_diameter, iterations, status, map, lambda, f_source}
nlohmann::json certificate_to_json(const ZeroCertificate& cert,
                                   const std::string& map_name, Complex lambda,
                                   const std::string& f_source);

}  // namespace bulab::sphere
