#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minkradii/json_io.hpp"

namespace minkradii::cli {

using json_io::Json;

enum class Suite {
  Chains,
  RadiusRatios,
  BreadthSplit,
  RatioBounds,
  SimplexEquality,
  PlanarTriangle,
  InclusionChain,
  CompleteSimplex,
};

std::optional<Suite> suite_from_string(const std::string& name);
const char* to_string(Suite s);
std::vector<std::string> suite_names();

/// One instance handed to a suite. `ratio` is the r of the breadth split.
struct Instance {
  VPolytope body;
  VPolytope gauge;
  Rational ratio{1, 2};
  std::vector<Vector> directions;
};

struct Outcome {
  bool pass = true;
  Json result;
};

/// Evaluates one suite on one instance. Hypothesis failures surface as Error.
Outcome run_suite(Suite suite, const Instance& inst);

/// Seeded random instance for trial `index`; dim 0 alternates between 2 and 3.
Instance random_instance(Suite suite, std::uint64_t seed, std::size_t index, std::size_t dim);

/// Directions used by the breadth split when none are given: ±e_i and the
/// vertices of C − C.
std::vector<Vector> default_directions(const VPolytope& c);

struct ExploreStats {
  std::size_t trials = 0;
  std::size_t candidates = 0;  ///< S and −S per trial
  std::size_t complete = 0;
  std::size_t strictly_inside = 0;
  std::size_t all_concentric = 0;
  Json hits = Json::array();
};

/// Samples complete simplex/gauge pairs and looks for one that satisfies every
/// concentricity predicate while n/s(C) < R/r < n·s(C) holds strictly.
ExploreStats explore(std::size_t trials, std::uint64_t seed, std::size_t dim);

}  // namespace minkradii::cli
