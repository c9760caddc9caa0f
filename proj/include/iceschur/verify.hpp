/*
 * verify.hpp
 * ----------
 * Symbolic certification of the lattice-model identities at small rank.
 *
 * Each check compares two exact polynomials and returns a Verdict. Where a
 * printed formula is known to admit more than one reading (an exponent of
 * rho versus delta, the orientation of a product of differences), a check
 * evaluates every candidate reading and records which ones hold; the suite
 * then requires one resolution to hold uniformly across all instances.
 */
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "iceschur/combinatorics.hpp"
#include "iceschur/json_io.hpp"
#include "iceschur/lattice.hpp"
#include "iceschur/polynomial.hpp"

namespace iceschur {

enum class VerdictStatus { kPass, kFail, kPassWithErratum };

std::string_view status_name(VerdictStatus s);

struct Verdict {
  std::string identity;
  // Sorted-key JSON object, e.g. {"lambda": [2,1], "n": 2}.
  Json params = Json::object();
  VerdictStatus status = VerdictStatus::kPass;
  // LHS - RHS of the first failing comparison; set iff status is kFail.
  std::optional<Polynomial> witness;
  // Comma-separated tags of errata whose printed reading failed.
  std::string erratum_tag;
  // Tag -> readings that held in this instance.
  std::map<std::string, std::set<std::string>> readings;
  std::string detail;
};

Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);
// One compact JSON object per line.
std::string to_jsonl(const std::vector<Verdict>& verdicts);

// Reading names shared by the exponent checks.
inline constexpr const char* kReadingRho = "rho";
inline constexpr const char* kReadingDelta = "delta";
inline constexpr const char* kReadingW0Rho = "w0(rho)";
inline constexpr const char* kReadingW0Delta = "w0(delta)";

// Erratum tags.
inline constexpr const char* kTagRhoDelta = "rho-vs-delta";
inline constexpr const char* kTagRhoDeltaInf = "rho-vs-delta-inf";
inline constexpr const char* kTagBde = "rho-vs-delta-bde";
inline constexpr const char* kTagVanishingSign = "vanishing-sign";
inline constexpr const char* kTagDecompSign = "decomp-sign";

// Lattice settings shared by the lattice-side checks; the defaults are the
// frozen grammar and unmodified weights. Negative controls swap them out.
struct LatticeSetup {
  VertexGrammar grammar = VertexGrammar::standard();
  std::optional<VertexClass> perturb_class;
  Polynomial perturb_delta = Polynomial(1);

  WeightTable apply(const WeightTable& table) const;
  LatticeSystem system(const Partition& lambda, int n, const WeightTable& table, int cols = 0) const;
};

// Named presets: "gamma", "gammagamma", "gamma_inf", "dual_top", "ones".
VertexWeights free_fermion_preset(const std::string& name);
Verdict check_free_fermion(const std::string& preset);
Verdict check_free_fermion(const std::string& name, const VertexWeights& w);

// u weights forced by v and w in the six YBE relations.
VertexWeights ybe_required_u(const VertexWeights& v, const VertexWeights& w);

// Row lemma: u = v_GG(1,2), v = v_G(1,1), w = v_G(2,1). An optional delta is
// added to one u weight as a negative control.
Verdict check_ybe_lemma(std::optional<VertexClass> perturb_u = std::nullopt);
// Column crossing with u = (1,1,a2-a1,0,1,1), v = v_G(1,1), w = v_G(1,2).
Verdict check_ybe_column(std::optional<VertexClass> perturb_u = std::nullopt);

Verdict check_tokuyama(const Partition& lambda, int n, const LatticeSetup& setup = {});
// Determinant, tableau sum and lattice quotient agree.
Verdict check_constructions(const Partition& lambda, int n, const LatticeSetup& setup = {});
Verdict check_t_specializations(const Partition& lambda, int n, const LatticeSetup& setup = {});
// Weight at t = 0 of the state with the given GT pattern equals expected.
Verdict check_t_zero_state(const Partition& lambda, int n, const GTPattern& pattern,
                           const Polynomial& expected);
Verdict check_vanishing(const Partition& lambda, const Partition& mu, int n,
                        const LatticeSetup& setup = {});
Verdict check_lascoux_mcnamara(const Partition& lambda, int n, const LatticeSetup& setup = {});
Verdict check_schubert(const Partition& lambda, int n, int m);
Verdict check_sigma_symmetry(const Partition& lambda, int n, int i);
Verdict check_dual_cauchy(int n, int m, bool with_split = true);

// z^e for an exponent vector e over z_1..z_k.
Polynomial z_power(const std::vector<int>& e);
// The four exponent candidates of length n.
std::vector<int> exponent_reading(const std::string& reading, int n);

struct SuiteConfig {
  // Any of: free_fermion, ybe, tokuyama, constructions, t_special,
  // vanishing, lascoux_mcnamara, schubert, sigma, dual_cauchy; "all".
  std::set<std::string> suites = {"all"};
  int max_n = 3;
  // lambda_1 bound of the sweep box; lambda has at most n parts.
  int box_cols = 3;
  LatticeSetup setup;
};

std::vector<std::string> suite_names();

// Runs the configured checks, appends one erratum-ledger verdict per tag
// seen, and sorts by identity then parameters.
std::vector<Verdict> run_suite(const SuiteConfig& config);

// One verdict per erratum tag seen: the readings that held in every
// instance. An empty intersection is a FAIL.
std::vector<Verdict> erratum_ledger(const std::vector<Verdict>& verdicts);

bool any_fail(const std::vector<Verdict>& verdicts);

}  // namespace iceschur
