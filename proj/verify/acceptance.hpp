#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rsurf::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // counts on success, first failure otherwise
};

struct Options {
  std::uint64_t seed = 20240611;
  int random_classes = 1000;
  int random_forms = 500;
  int bfs_bound = 5;
};

CriterionResult root_cardinalities(const Options& opt);
CriterionResult table_k5_reproduction(const Options& opt);
CriterionResult small_tables_reproduction(const Options& opt);
CriterionResult smcg_outputs(const Options& opt);
CriterionResult rank_equality(const Options& opt);
CriterionResult braid_abelianizations(const Options& opt);
CriterionResult reduction_soundness(const Options& opt);
CriterionResult balanced_to_packing_check(const Options& opt);
CriterionResult upper_bound_calculus(const Options& opt);
CriterionResult base_change_round_trip(const Options& opt);

// All ten, in order. Exceptions inside a criterion are caught and reported
// as a failure of that criterion.
std::vector<CriterionResult> run_all(const Options& opt);

}  // namespace rsurf::acceptance
