#include "bulab/sphere/io.hpp"

namespace bulab::sphere {

nlohmann::json mesh_to_json(const IcosphereMesh& mesh) {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : mesh.vertices) verts.push_back({v.x(), v.y(), v.z()});
  nlohmann::json faces = nlohmann::json::array();
  for (const auto& f : mesh.faces) faces.push_back({f[0], f[1], f[2]});
  return {{"vertices", std::move(verts)},
          {"faces", std::move(faces)},
          {"level", mesh.level}};
}

nlohmann::json certificate_to_json(const ZeroCertificate& cert,
                                   const std::string& map_name, Complex lambda,
                                   const std::string& f_source) {
  return {{"point", {cert.point.x(), cert.point.y(), cert.point.z()}},
          {"residual", cert.residual},
          {"cell_diameter", cert.cell_diameter},
          {"iterations", cert.iterations},
          {"status", cert.ok ? "OK" : "FAILED"},
          {"map", map_name},
          {"lambda", {lambda.real(), lambda.imag()}},
          {"f_source", f_source}};
}

}  // namespace bulab::sphere
