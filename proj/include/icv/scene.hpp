#pragma once

#include <string>

#include "icv/infconv.hpp"
#include "icv/subdiff.hpp"

namespace icv {

// A CLI problem instance: the body F, the target region, an optional
// perturbation table, the convolution kernel phi (gauge of F by default), and
// sampling-plan overrides. Parsed from JSON; unknown keys are rejected.
class Scene {
public:
    Scene(std::size_t dimension, ConvexBody F, Region omega, FieldPtr J, FieldPtr phi,
          SamplingPlan plan);

    std::size_t dimension;
    ConvexBody F;
    Region omega;
    FieldPtr J;    // may be null
    FieldPtr phi;  // never null
    SamplingPlan plan;

    Gauge gauge;  // gauge of F
    FieldPtr f;   // J + delta_Omega or the plain indicator
    InfConvolution T;
};

Scene parse_scene(const std::string& json_text, const std::string& origin);
Scene load_scene(const std::string& path);

}  // namespace icv
