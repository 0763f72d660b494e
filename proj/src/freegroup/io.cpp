#include "bulab/freegroup/io.hpp"

#include "bulab/errors.hpp"

namespace bulab::freegroup {

nlohmann::json element_to_json(const GroupAlgebraElement& a) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [w, c] : a.terms())
    out.push_back({{"word", w}, {"re", c.real()}, {"im", c.imag()}});
  return out;
}

GroupAlgebraElement element_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ConfigError("element literal must be a JSON array");
  GroupAlgebraElement a;
  for (const auto& term : j) {
    const std::string word = term.at("word").get<std::string>();
    if (!is_reduced(word))
      throw ConfigError("element word is not reduced: " + word);
    a.add(word, Complex(term.value("re", 0.0), term.value("im", 0.0)));
  }
  return a;
}

nlohmann::json norm_estimate_to_json(const NormEstimate& est,
                                     const GroupAlgebraElement& a) {
  return {{"element", element_to_json(a)},
          {"R", est.radius},
          {"lower", est.lower},
          {"upper", est.upper},
          {"iterations", est.iterations},
          {"rayleigh_delta", est.rayleigh_delta},
          {"seed", est.seed}};
}

}  // namespace bulab::freegroup
