#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "epigraph/distribution.hpp"
#include "epigraph/formula.hpp"
#include "epigraph/value_set.hpp"

namespace epigraph {

struct EngineOptions {
  enum class Mode { Auto, Worlds, Marginals };
  Mode mode = Mode::Auto;
  bool allow_large = false;  // lift the guards below
  int max_world_args = 6;
  double max_models = 1e8;
};

// Distinct achievable marginal tuples over `args`, rows sorted lexicographically.
// Entries are numerators over the grid denominator.
struct MarginalTable {
  std::vector<int> args;
  std::vector<std::int32_t> cells;  // row-major, args.size() per row

  std::size_t width() const { return args.size(); }
  std::size_t rows() const { return width() ? cells.size() / width() : (has_empty_row ? 1 : 0); }
  const std::int32_t* row(std::size_t i) const { return cells.data() + i * width(); }
  bool empty() const { return rows() == 0; }
  bool has_empty_row = false;  // projection onto no arguments of a consistent set
};

// Upper bound on |Dist(n, 1/D grid)|, the number of compositions of D into 2^n parts.
double estimated_model_count(int n, std::int64_t denominator);

// True when every term in the formulas has a probability fixed by a single
// argument's marginal (literals and constants, up to equivalence).
bool marginal_determined(std::span<const Formula> formulas);

// Sat(phi, pi) over n arguments. pi must be reasonable and contain Num(phi).
class Model {
 public:
  Model(std::vector<Formula> phi, int n, ValueSet pi, EngineOptions opts = {});
  ~Model();
  Model(Model&&) noexcept;
  Model& operator=(Model&&) noexcept;

  int arity() const { return n_; }
  const ValueSet& value_set() const { return pi_; }
  std::int64_t denominator() const { return den_; }
  bool marginal_mode() const { return marginal_; }
  const std::vector<Formula>& formulas() const { return phi_; }

  bool consistent() const;
  // Canonically first member: lexicographically least mass vector in world
  // mode; in marginal mode the nested-set realization of the least marginal vector.
  std::optional<BeliefDistribution> witness() const;
  // Every member, canonical order. Always a world-level enumeration.
  DistributionSet distributions() const;
  MarginalTable project(const std::vector<int>& args) const;
  std::vector<std::int32_t> range(int arg) const;  // achievable marginal numerators of one argument

 private:
  struct Impl;
  std::vector<Formula> phi_;
  int n_;
  ValueSet pi_;
  std::int64_t den_;
  EngineOptions opts_;
  bool marginal_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace epigraph
