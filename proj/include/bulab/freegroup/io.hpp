#pragma once

#include "json.hpp"

#include "bulab/freegroup/group_algebra.hpp"
#include "bulab/freegroup/norm.hpp"

namespace bulab::freegroup {

// Element literal: [{word, re, im}, ...] with words over {x, X, y, Y}.
nlohmann::json element_to_json(const GroupAlgebraElement& a);
GroupAlgebraElement element_from_json(const nlohmann::json& j);

// {element, R, lower, upper, iterations, rayleigh_delta, seed}
nlohmann::json norm_estimate_to_json(const NormEstimate& est,
                                     const GroupAlgebraElement& a);

}  // namespace bulab::freegroup
