#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gausseer/query.hpp"
#include "gausseer/record.hpp"
#include "gausseer/taxonomy.hpp"

namespace gausseer::testing {

/// What the generator wrote into a log, in the form the parser must recover.
struct PlantedTruth {
  std::string title;
  std::set<std::string> elements;
  std::vector<AtomSite> atom_sites;
  std::set<std::string> methods;
  std::set<std::string> basis_sets;
  std::set<std::string> job_types;
  int charge = 0;
  int multiplicity = 1;
  double energy = 0.0;
  std::optional<int> degrees_of_freedom;
  std::set<std::string> flags;
};

struct SyntheticLog {
  std::string path;
  std::string text;
  PlantedTruth truth;
};

/// Produces GaussianLog-lite files with randomized routes (print levels,
/// case, wrapping, keyword options, ignored keywords), several orientation
/// blocks, repeated SCF lines and presence-flag trigger lines.
class LogGenerator {
 public:
  explicit LogGenerator(std::uint64_t seed) : rng_(seed) {}

  SyntheticLog next();

 private:
  int uniform(int lo, int hi);
  bool chance(double p);
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }

  std::mt19937_64 rng_;
  int serial_ = 0;
};

/// Parsed records of `n` generated logs with ids 1..n.
std::vector<GaussianRecord> synthetic_corpus(std::size_t n, std::uint64_t seed);

/// Random queries drawn against `corpus` so that a useful share of them hit.
class QueryGenerator {
 public:
  QueryGenerator(std::uint64_t seed, const std::vector<GaussianRecord>& corpus,
                 const Taxonomy& taxonomy)
      : rng_(seed), corpus_(corpus), taxonomy_(taxonomy) {}

  Query next();

  /// A base query plus 0..2 refinements taken from categories of `corpus`.
  Query next_with_refinements();

 private:
  std::string random_clause(AttributeKind kind);

  std::mt19937_64 rng_;
  const std::vector<GaussianRecord>& corpus_;
  const Taxonomy& taxonomy_;
};

}  // namespace gausseer::testing
