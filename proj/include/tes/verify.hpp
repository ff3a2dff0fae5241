#ifndef TES_VERIFY_HPP
#define TES_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace tes::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on success, first failure otherwise
};

// ---- trees ----
CheckResult check_catalan(int max_order);
CheckResult check_duplicial_relations(int total_order);
CheckResult check_mirror(int total_order);
CheckResult check_mu_identity(int max_order);
CheckResult check_mu_associativity(int total_order, int cases, std::uint64_t seed);
CheckResult check_decompositions_oracle(int max_order);
CheckResult check_over_factorize(int max_order);
CheckResult check_codec_roundtrip(int max_order, int cases, std::uint64_t seed);

// ---- series groups ----
enum class GroupId {
  OverMonoid,
  UnderMonoid,
  DifDup,
  DifAs,
  LambdaUnder,
  RhoOver,
  Alpha,
  SemidirectOver,
  SemidirectUnder,
};
std::string group_name(GroupId g);

CheckResult check_group_axioms(GroupId g, int trunc, int triples, std::uint64_t seed);
CheckResult check_action_axioms(int trunc, int cases, std::uint64_t seed);
CheckResult check_closure_constants(int trunc, int cases, std::uint64_t seed);
CheckResult check_cocycle(int trunc, int cases, std::uint64_t seed);
CheckResult check_action_vs_composition_witness(int trunc);
CheckResult check_dif_action_formula(int trunc, int cases, std::uint64_t seed);
CheckResult check_alpha_closure(int trunc, int cases, std::uint64_t seed);
CheckResult check_alpha_multiplicativity(int max_order, int cases, std::uint64_t seed);
CheckResult check_factor_roundtrip(int trunc, int cases, std::uint64_t seed);
CheckResult check_projection_homomorphism(int trunc, int cases, std::uint64_t seed);
CheckResult check_sections(int trunc, int cases, std::uint64_t seed);
CheckResult check_compose_power_expansion(int trunc, int cases, std::uint64_t seed);
CheckResult check_as_classic_oracle(int trunc, int cases, std::uint64_t seed);

// ---- Hopf algebras ----
CheckResult check_golden_tables();
CheckResult check_coassociativity(int max_grading);
CheckResult check_counit_axioms(int max_grading);
CheckResult check_antipode(int max_grading);
CheckResult check_comodule_axioms(int max_order);
CheckResult check_rho_coactions(int max_order);
CheckResult check_ddif_coincides(int max_order);
CheckResult check_alpha_two_routes(int max_order);
CheckResult check_fdb_abelianization(int max_n);
CheckResult check_cocommutativity_dichotomy();
CheckResult check_hopf_morphisms(int max_n);
CheckResult check_projection_identities(int max_order);

// ---- duality ----
CheckResult check_duality(GroupId g, int trunc, int pairs, std::uint64_t seed);

struct Options {
  int n = 4;
  int cases = 8;
  std::uint64_t seed = 42;
};

/// suite is one of trees, groups, hopf, duality, all.
std::vector<CheckResult> run_suite(const std::string& suite, const Options& opt);

}  // namespace tes::verify

#endif
