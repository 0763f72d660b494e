#include "bulab/cli/commands.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>

#include "bulab/algebra/grading.hpp"
#include "bulab/algebra/spectrum.hpp"
#include "bulab/errors.hpp"
#include "bulab/freegroup/group_algebra.hpp"
#include "bulab/freegroup/io.hpp"
#include "bulab/freegroup/norm.hpp"
#include "bulab/freegroup/quotient.hpp"
#include "bulab/sphere/io.hpp"
#include "bulab/sphere/symmetrize.hpp"
#include "bulab/sphere/zero_search.hpp"
#include "bulab/tolerances.hpp"
#include "bulab/version.hpp"

namespace bulab::cli {

namespace {

using algebra::Complex;
using nlohmann::json;

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start_)
        .count();
  }

 private:
  using Clock = std::chrono::steady_clock;
  Clock::time_point start_ = Clock::now();
};

// Shortest round-trip rendering; std::to_string would flatten small
// residuals to 0.000000 in the CSV output.
std::string csv_num(double v) {
  std::array<char, 32> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

RunReport finish(const json& config, json results, const Stopwatch& watch,
                 std::string csv, int exit_code) {
  RunReport report;
  report.document = {{"config", config},
                     {"results", std::move(results)},
                     {"meta",
                      {{"versions", {{"bulab", kVersion}}},
                       {"wall_clock_ms", watch.ms()}}}};
  report.csv = std::move(csv);
  report.exit_code = exit_code;
  return report;
}

Complex lambda_from_config(const json& config, int order) {
  if (!config.contains("lambda") || !config["lambda"].is_array() ||
      config["lambda"].size() != 2)
    throw ConfigError("config needs lambda: [re, im]");
  const Complex lambda(config["lambda"][0].get<double>(),
                       config["lambda"][1].get<double>());
  if (!algebra::is_admissible_root(lambda, order, tol().root_of_unity))
    throw ConfigError("lambda is not a root of unity of order " +
                      std::to_string(order) + " (or equals 1)");
  return lambda;
}

std::vector<std::uint64_t> seeds_from_config(const json& config) {
  std::vector<std::uint64_t> seeds;
  if (config.contains("seeds"))
    for (const auto& s : config["seeds"]) seeds.push_back(s.get<std::uint64_t>());
  return seeds;
}

json mesh_info(const sphere::IcosphereMesh& mesh) {
  return {{"level", mesh.level},
          {"vertices", mesh.vertex_count()},
          {"faces", mesh.faces.size()},
          {"max_edge_length", mesh.max_edge_length()}};
}

void maybe_dump_mesh(const json& config, const sphere::IcosphereMesh& mesh) {
  if (!config.contains("mesh_out")) return;
  std::ofstream out(config["mesh_out"].get<std::string>());
  if (!out) throw ConfigError("cannot open mesh_out for writing");
  out << sphere::mesh_to_json(mesh).dump(2) << '\n';
}

// Distance from p to the nearest fixed point of the map on the sphere, or
// infinity when the map moves every point. Flags certificates that landed
// on a rotation axis, where the symmetrized sum collapses for any
// admissible lambda.
double fixed_point_distance(const sphere::FiniteOrderMap& map,
                            const Eigen::Vector3d& p) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(
      0.5 * (map.matrix() + map.matrix().transpose()));
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 3; ++k) {
    if (std::abs(solver.eigenvalues()[k] - 1.0) > 1e-9) continue;
    Eigen::Vector3d axis = solver.eigenvectors().col(k);
    if ((map.matrix() * axis - axis).norm() > 1e-9) continue;
    axis.normalize();
    best = std::min({best, (p - axis).norm(), (p + axis).norm()});
  }
  return best;
}

}  // namespace

sphere::FiniteOrderMap map_from_config(const json& map_spec) {
  if (!map_spec.is_object() || !map_spec.contains("kind"))
    throw ConfigError("map spec needs a kind");
  const std::string kind = map_spec["kind"].get<std::string>();
  if (kind == "antipodal") return sphere::FiniteOrderMap::antipodal();
  if (kind == "rotoreflect4") return sphere::FiniteOrderMap::rotoreflect4();
  if (kind == "rotation") {
    const int n = map_spec.value("n", 0);
    Eigen::Vector3d axis(0, 0, 1);
    if (map_spec.contains("axis")) {
      const auto& a = map_spec["axis"];
      if (!a.is_array() || a.size() != 3)
        throw ConfigError("rotation axis must be [x, y, z]");
      axis = Eigen::Vector3d(a[0].get<double>(), a[1].get<double>(),
                             a[2].get<double>());
    }
    return sphere::FiniteOrderMap::rotation(n, axis);
  }
  if (kind == "matrix") {
    const auto& rows = map_spec.at("rows");
    Eigen::Matrix3d m;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m(r, c) = rows.at(r).at(c).get<double>();
    return sphere::FiniteOrderMap::from_matrix(m, map_spec.at("order").get<int>());
  }
  throw ConfigError("unknown map kind: " + kind);
}

std::string map_name(const json& map_spec) {
  const std::string kind = map_spec.value("kind", "?");
  if (kind == "rotation")
    return "rotation-" + std::to_string(map_spec.value("n", 0));
  return kind;
}

RunReport cmd_borsuk(const json& config) {
  Stopwatch watch;
  const sphere::FiniteOrderMap map = map_from_config(config.at("map"));
  const Complex lambda = lambda_from_config(config, map.order());
  const double tolerance = config.value("tol", 1e-6);
  const int level = config.value("level", 3);

  sphere::ZeroSearchOptions options;
  options.level = level;
  options.cells_per_round = config.value("cells", 0);
  options.max_rounds = config.value("rounds", 0);

  std::vector<std::pair<json, std::string>> cases;  // (case id, source)
  if (config.contains("f")) {
    cases.emplace_back(nullptr, config["f"].get<std::string>());
  }
  for (std::uint64_t seed : seeds_from_config(config))
    cases.emplace_back(seed, sphere::random_trig_polynomial(seed));
  if (cases.empty())
    throw ConfigError("config needs 'f' or a non-empty 'seeds' list");

  const sphere::SymmetricMesh sym =
      sphere::symmetrize_mesh(sphere::build_icosphere(level), map);
  maybe_dump_mesh(config, sym.mesh);

  json case_results = json::array();
  std::string csv = "case,round,best_residual\n";
  int failed = 0;
  double max_residual = 0.0;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const auto& [id, source] = cases[c];
    const sphere::FunctionExpr f = sphere::FunctionExpr::parse(source);
    const sphere::ZeroCertificate cert =
        sphere::find_zero_on(sym, f, map, lambda, tolerance, options);
    if (!cert.ok) ++failed;
    max_residual = std::max(max_residual, cert.residual);

    json entry = {{"seed", id},
                  {"certificate", sphere::certificate_to_json(
                                      cert, map_name(config["map"]), lambda,
                                      source)}};
    const double fixed_dist = fixed_point_distance(map, cert.point);
    if (std::isfinite(fixed_dist))
      entry["trivial_fixed_point_zero"] = fixed_dist < 1e-6;
    case_results.push_back(std::move(entry));

    for (std::size_t r = 0; r < cert.residual_trace.size(); ++r)
      csv += std::to_string(c) + "," + std::to_string(r + 1) + "," +
             csv_num(cert.residual_trace[r]) + "\n";
  }

  json results = {{"mesh", mesh_info(sym.mesh)},
                  {"cases", std::move(case_results)},
                  {"summary",
                   {{"total", cases.size()},
                    {"failed", failed},
                    {"max_residual", max_residual},
                    {"tol", tolerance}}}};
  return finish(config, std::move(results), watch, std::move(csv),
                failed == 0 ? 0 : 1);
}

RunReport cmd_grade(const json& config) {
  Stopwatch watch;
  const sphere::FiniteOrderMap map = map_from_config(config.at("map"));
  const Complex lambda = lambda_from_config(config, map.order());
  const int level = config.value("level", 3);
  std::vector<int> powers = {1, 2, 3};
  if (config.contains("powers")) powers = config["powers"].get<std::vector<int>>();

  std::vector<std::pair<json, std::string>> cases;
  if (config.contains("f")) cases.emplace_back(nullptr, config["f"].get<std::string>());
  for (std::uint64_t seed : seeds_from_config(config))
    cases.emplace_back(seed, sphere::random_trig_polynomial(seed));
  if (cases.empty())
    throw ConfigError("config needs 'f' or a non-empty 'seeds' list");

  const sphere::SymmetricMesh sym =
      sphere::symmetrize_mesh(sphere::build_icosphere(level), map);
  maybe_dump_mesh(config, sym.mesh);
  const double edge = sym.mesh.max_edge_length();
  const int n = sym.action.order();

  json case_results = json::array();
  std::string csv = "case,record,degree,power,value\n";
  bool all_ok = true;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const auto& [id, source] = cases[c];
    const sphere::FunctionExpr expr = sphere::FunctionExpr::parse(source);
    const algebra::SampledFunction f = sphere::sample(expr, sym.mesh);
    const algebra::GradingDecomposition dec =
        algebra::decompose(f, sym.action, lambda);

    json entry;
    entry["seed"] = id;
    entry["f"] = source;

    // Reconstruction.
    algebra::SampledFunction sum = dec.components[0];
    for (int j = 1; j < n; ++j) sum += dec.components[j];
    const double recon = algebra::sup_distance(sum, f);
    const double recon_bound = tol().reconstruction * (1.0 + f.sup_norm());
    entry["reconstruction"] = {{"residual", recon}, {"bound", recon_bound}};
    if (recon > recon_bound) all_ok = false;
    csv += std::to_string(c) + ",reconstruction,,," + csv_num(recon) + "\n";

    // Idempotence and the eigenvector relation, per component.
    json comps = json::array();
    for (int j = 0; j < n; ++j) {
      const algebra::SampledFunction& g = dec.components[j];
      const algebra::SampledFunction twice =
          algebra::project_component(g, sym.action, j, lambda);
      const double idem = algebra::sup_distance(twice, g);
      algebra::SampledFunction eig = algebra::apply_grading_operator(g, sym.action);
      eig -= algebra::root_powers(lambda, n)[j] * g;
      const double eig_res = eig.sup_norm();
      const double idem_bound = tol().idempotence * (1.0 + f.sup_norm());
      const double eig_bound = tol().eigen_relation * (1.0 + f.sup_norm());
      if (idem > idem_bound || eig_res > eig_bound) all_ok = false;
      comps.push_back({{"degree", j},
                       {"sup_norm", g.sup_norm()},
                       {"idempotence_residual", idem},
                       {"eigen_residual", eig_res}});
      csv += std::to_string(c) + ",idempotence," + std::to_string(j) + ",," +
             csv_num(idem) + "\n";
    }
    entry["components"] = std::move(comps);

    const algebra::ProductGradingReport products =
        algebra::check_product_grading(dec, dec, sym.action);
    entry["product_grading"] = {{"max_residual", products.max_residual},
                                {"passed", products.passed}};
    if (!products.passed) all_ok = false;

    // Hull-of-spectrum test on powers of each nontrivial component.
    json hulls = json::array();
    for (int j = 1; j < n; ++j) {
      const algebra::SampledFunction& g = dec.components[j];
      if (g.sup_norm() <= tol().reconstruction * (1.0 + f.sup_norm())) {
        hulls.push_back({{"degree", j}, {"vacuous", true}});
        continue;
      }
      for (int k : powers) {
        const auto test = algebra::hull_contains_zero(
            algebra::spectrum(g.pointwise_pow(k)), edge);
        if (!test.contains) all_ok = false;
        hulls.push_back({{"degree", j},
                         {"power", k},
                         {"distance", test.signed_distance},
                         {"contains_zero", test.contains},
                         {"boundary_tolerance", edge}});
        csv += std::to_string(c) + ",hull_distance," + std::to_string(j) + "," +
               std::to_string(k) + "," + csv_num(test.signed_distance) +
               "\n";
      }
    }
    entry["hull_tests"] = std::move(hulls);
    case_results.push_back(std::move(entry));
  }

  json results = {{"mesh", mesh_info(sym.mesh)},
                  {"order", n},
                  {"cases", std::move(case_results)},
                  {"summary", {{"passed", all_ok}}}};
  return finish(config, std::move(results), watch, std::move(csv),
                all_ok ? 0 : 1);
}

RunReport cmd_freegroup(const json& config) {
  Stopwatch watch;
  const int max_length = config.value("max_length", 6);
  std::vector<int> radii = {4, 6};
  if (config.contains("radii")) radii = config["radii"].get<std::vector<int>>();
  const int iterations = config.value("iterations", tol().power_iterations);
  const std::uint64_t seed = config.value("seed", 1);

  const freegroup::PartitionSpec s3 = freegroup::build_s3_partition();
  const freegroup::PartitionSpec parity = freegroup::build_parity_partition();
  bool all_ok = true;

  // Exhaustive partition axiom check: class(uv) == class(u) * class(v).
  const std::vector<freegroup::Word> words =
      freegroup::enumerate_reduced_words(max_length);
  long long pair_count = 0;
  bool partition_ok = true;
  for (const auto& u : words) {
    for (const auto& v : words) {
      ++pair_count;
      const freegroup::Word uv = freegroup::multiply(u, v);
      if (s3.class_of(uv) != s3.compose(s3.class_of(u), s3.class_of(v)) ||
          parity.class_of(uv) !=
              parity.compose(parity.class_of(u), parity.class_of(v))) {
        partition_ok = false;
      }
    }
  }
  if (!partition_ok) all_ok = false;

  // The commutator witness.
  const freegroup::Word b = "yxYX";
  const freegroup::Permutation image_b = s3.quotient().evaluate(b);
  const bool b_ok = image_b.order() == 3 && !s3.quotient().in_stabilizer(b) &&
                    s3.quotient().orbit(0).size() == 3;
  if (!b_ok) all_ok = false;

  // Grading of the group algebra on seeded elements: exact component sums
  // and exact product supports.
  json grading_cases = json::array();
  std::vector<std::uint64_t> grading_seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  if (config.contains("grading_seeds"))
    grading_seeds = config["grading_seeds"].get<std::vector<std::uint64_t>>();
  for (std::uint64_t s : grading_seeds) {
    const freegroup::GroupAlgebraElement a = freegroup::random_element(s);
    const auto comps = freegroup::homogeneous_components(a, s3);
    freegroup::GroupAlgebraElement sum;
    for (const auto& [cls, comp] : comps) sum += comp;
    bool ok = sum == a;
    for (const auto& [ca, xa] : comps) {
      for (const auto& [cb, xb] : comps) {
        const auto prod = freegroup::convolve(xa, xb);
        for (const auto& [w, coeff] : prod.terms())
          if (s3.class_of(w) != s3.compose(ca, cb)) ok = false;
      }
    }
    if (!ok) all_ok = false;
    grading_cases.push_back({{"seed", s}, {"exact", ok}});
  }

  // Norm sweeps: the Kesten element table plus any configured elements.
  std::vector<std::pair<std::string, freegroup::GroupAlgebraElement>> sweep;
  sweep.emplace_back("kesten", freegroup::kesten_element());
  if (config.contains("elements")) {
    int idx = 0;
    for (const auto& lit : config["elements"])
      sweep.emplace_back("element-" + std::to_string(idx++),
                         freegroup::element_from_json(lit));
  }

  std::string csv = "element,R,lower,upper\n";
  json norm_tables = json::array();
  for (const auto& [name, element] : sweep) {
    json rows = json::array();
    double previous = 0.0;
    bool monotone = true;
    for (int radius : radii) {
      const freegroup::NormEstimate est =
          freegroup::truncated_norm(element, radius, iterations, seed);
      if (est.lower + 1e-9 < previous) monotone = false;
      previous = est.lower;
      if (est.lower > est.upper + 1e-9) all_ok = false;
      rows.push_back(freegroup::norm_estimate_to_json(est, element));
      csv += name + "," + std::to_string(radius) + "," +
             csv_num(est.lower) + "," + csv_num(est.upper) + "\n";
    }
    if (!monotone) all_ok = false;
    norm_tables.push_back(
        {{"name", name}, {"rows", std::move(rows)}, {"monotone", monotone}});
  }

  // Component norm inequality on seeded elements under both partitions.
  json inequality_cases = json::array();
  std::vector<std::uint64_t> ineq_seeds = {1, 2, 3, 4, 5};
  if (config.contains("inequality_seeds"))
    ineq_seeds = config["inequality_seeds"].get<std::vector<std::uint64_t>>();
  const int ineq_radius = config.value("inequality_radius", 6);
  for (std::uint64_t s : ineq_seeds) {
    const freegroup::GroupAlgebraElement a = freegroup::random_element(s);
    double max_ratio = 0.0;
    bool ok = true;
    for (const freegroup::PartitionSpec* p : {&parity, &s3}) {
      const auto rep =
          freegroup::check_norm_inequality(a, *p, ineq_radius, iterations, seed);
      if (!rep.all_ok) ok = false;
      for (const auto& row : rep.rows)
        max_ratio = std::max(max_ratio, row.empirical_ratio);
    }
    if (!ok) all_ok = false;
    inequality_cases.push_back(
        {{"seed", s}, {"rigorous_ok", ok}, {"max_empirical_ratio", max_ratio}});
  }

  json results = {
      {"partition_check",
       {{"max_length", max_length},
        {"pairs", pair_count},
        {"passed", partition_ok}}},
      {"commutator_witness",
       {{"word", b},
        {"class", image_b.cycle_string()},
        {"class_order", image_b.order()},
        {"in_stabilizer", s3.quotient().in_stabilizer(b)},
        {"cover_index", s3.quotient().orbit(0).size()},
        {"passed", b_ok}}},
      {"algebra_grading", std::move(grading_cases)},
      {"norm_tables", std::move(norm_tables)},
      {"norm_inequality", std::move(inequality_cases)},
      {"summary", {{"passed", all_ok}}}};
  return finish(config, std::move(results), watch, std::move(csv),
                all_ok ? 0 : 1);
}

}  // namespace bulab::cli
