// Acceptance report: one PASS/FAIL line per criterion, exit 1 if any fails.
//
//   acceptance [--skip-cli]

#include <array>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "iceschur/schur.hpp"
#include "iceschur/verify.hpp"

namespace {

using namespace iceschur;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Tally {
  int pass = 0, erratum = 0, fail = 0;
  std::string first_fail;

  void add(const Verdict& v) {
    switch (v.status) {
      case VerdictStatus::kPass: ++pass; break;
      case VerdictStatus::kPassWithErratum: ++erratum; break;
      case VerdictStatus::kFail:
        if (fail++ == 0) first_fail = v.identity + " " + v.params.dump() + ": " + v.detail;
        break;
    }
  }
  int total() const { return pass + erratum + fail; }
  std::string summary() const {
    std::ostringstream os;
    os << total() << " instances, " << pass << " PASS, " << erratum << " PASS_WITH_ERRATUM, " << fail
       << " FAIL";
    if (fail) os << " (first: " << first_fail << ")";
    return os.str();
  }
};

std::vector<std::pair<Partition, int>> sweep(int max_n, int cols) {
  std::vector<std::pair<Partition, int>> out;
  for (int n = 1; n <= max_n; ++n) {
    for (const Partition& p : partitions_in_box(n, cols)) out.emplace_back(p, n);
  }
  return out;
}

std::string join(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : "|") + x;
  return "{" + out + "}";
}

// Readings of one tag that held in every verdict carrying it.
std::set<std::string> uniform(const std::vector<Verdict>& verdicts, const std::string& tag) {
  for (const Verdict& l : erratum_ledger(verdicts)) {
    if (l.params.at("tag") == tag) return l.readings.at(tag);
  }
  return {};
}

// ------------------------------------------------------------ criteria

Outcome grammar_conformance() {
  Outcome o;
  const Verdict ff = check_free_fermion("gamma");
  Tally tk;
  long states = 0, bad_counts = 0;
  for (const auto& [lam, n] : sweep(3, 2)) {
    tk.add(check_tokuyama(lam, n));
    const LatticeSystem s = build_system(lam, n, WeightTable::gamma(std::nullopt));
    for (const LatticeState& st : enumerate_states_dfs(s)) {
      ++states;
      bad_counts += state_profile(st).count_a2b1c1 != n * (n - 1) / 2;
    }
  }
  o.pass = ff.status == VerdictStatus::kPass && tk.fail == 0 && tk.erratum == 0 && bad_counts == 0;
  o.detail = "free-fermion " + std::string(status_name(ff.status)) + "; tokuyama " + tk.summary() +
             "; a2+b1+c1 = n(n-1)/2 on " + std::to_string(states - bad_counts) + "/" +
             std::to_string(states) + " states";
  return o;
}

Outcome tokuyama_sweep() {
  Tally t;
  for (const auto& [lam, n] : sweep(3, 3)) t.add(check_tokuyama(lam, n));
  return {t.fail == 0 && t.erratum == 0, t.summary()};
}

Outcome constructions_sweep() {
  Tally t;
  for (const auto& [lam, n] : sweep(3, 3)) t.add(check_constructions(lam, n));
  return {t.fail == 0 && t.erratum == 0, t.summary()};
}

Outcome t_minus_one() {
  int ok = 0, total = 0;
  std::string first;
  for (const auto& [lam, n] : sweep(3, 3)) {
    const LatticeSystem s = build_system(lam, n, WeightTable::gamma(BigRational(-1)));
    std::vector<int> mu = lam.padded(n);
    for (int i = 0; i < n; ++i) mu[i] += n - 1 - i;
    ++total;
    if (partition_function(s) == alternant(mu, n)) {
      ++ok;
    } else if (first.empty()) {
      first = " (first mismatch: lambda=(" + lam.to_string() + "), n=" + std::to_string(n) + ")";
    }
  }
  return {ok == total, "Z(t=-1) = +A_{lambda+delta} on " + std::to_string(ok) + "/" +
                           std::to_string(total) + " instances" + first};
}

Outcome t_zero() {
  auto z = [](int i) { return Polynomial::z(i); };
  auto a = [](int j) { return Polynomial::alpha(j); };
  const Polynomial example = z(1) * z(1) * z(2) * (z(1) + a(6)) * (z(2) + a(2)) * (z(2) + a(1)) *
                             (z(3) + a(3)) * (z(3) + a(2)) * (z(3) + a(1));
  const Verdict ex = check_t_zero_state(Partition({4, 2}), 3, GTPattern{{{7, 4, 1}, {5, 3}, {4}}}, example);
  std::vector<Verdict> vs;
  Tally t;
  for (const auto& [lam, n] : sweep(3, 3)) {
    vs.push_back(check_t_specializations(lam, n));
    t.add(vs.back());
  }
  const std::set<std::string> res = uniform(vs, kTagRhoDelta);
  const bool delta_reading = res.count(kReadingW0Delta) > 0;
  const bool printed_fails = res.count(kReadingW0Rho) == 0;
  Outcome o;
  o.pass = ex.status == VerdictStatus::kPass && t.fail == 0 && delta_reading;
  o.detail = "worked state weight " + std::string(status_name(ex.status)) + "; sweep " + t.summary() +
             "; uniform reading " + join(res) + " (printed z^{w0(rho)} " +
             (printed_fails ? "fails, erratum rho-vs-delta recorded" : "holds") + ")";
  return o;
}

Outcome vanishing() {
  std::vector<Verdict> vs;
  Tally t;
  int outside = 0, equal = 0;
  const auto box = partitions_in_box(3, 3);
  for (const Partition& lam : box) {
    for (const Partition& mu : box) {
      if (lam == mu || !lam.contained_in(mu)) {
        vs.push_back(check_vanishing(lam, mu, 3));
        t.add(vs.back());
        (lam == mu ? equal : outside)++;
      }
    }
  }
  const Polynomial calib = substitute(schur_det(Partition({1}), 1).value, alpha_mu_bindings(Partition({1}), 1));
  const bool calib_ok = calib == Polynomial::alpha(1) - Polynomial::alpha(2);
  const std::set<std::string> res = uniform(vs, kTagVanishingSign);
  Outcome o;
  o.pass = t.fail == 0 && res.size() == 1 && calib_ok;
  o.detail = std::to_string(outside) + " pairs with lambda not in mu, " + std::to_string(equal) +
             " with lambda = mu; " + t.summary() + "; orientation " + join(res) +
             "; n=1 calibration s_(1)(-a_2|a) = " + (calib_ok ? "a1-a2" : to_text(calib));
  return o;
}

Outcome lascoux_mcnamara() {
  std::vector<Verdict> vs;
  Tally t;
  int literal = 0, literal_n1 = 0;
  for (const auto& [lam, n] : sweep(3, 3)) {
    vs.push_back(check_lascoux_mcnamara(lam, n));
    t.add(vs.back());
    if (vs.back().readings.at(kTagRhoDeltaInf).count(kReadingDelta)) (n == 1 ? literal_n1 : literal)++;
  }
  const std::set<std::string> res = uniform(vs, kTagRhoDeltaInf);
  const std::set<std::string> bde = uniform(vs, kTagBde);
  // Row order z1..zn top to bottom is the one under which the Tokuyama and
  // t=-1 statements hold as written; there the delta exponent is reversed.
  Outcome o;
  o.pass = t.fail == 0 && res == std::set<std::string>{kReadingW0Delta};
  o.detail = t.summary() + "; uniform exponent " + join(res) +
             " = z^delta with the spectral order reversed; z^delta in row order z1..zn holds on " +
             std::to_string(literal_n1) + " n=1 and " + std::to_string(literal) +
             " n>=2 instances; column counts " + join(bde);
  return o;
}

Outcome schubert() {
  Tally t;
  for (const Partition& lam : partitions_in_box(2, 2)) t.add(check_schubert(lam, 2, 2));
  for (const Partition& lam : partitions_in_box(1, 3)) t.add(check_schubert(lam, 1, 3));
  return {t.fail == 0 && t.erratum == 0, t.summary()};
}

Outcome sigma() {
  const Verdict ex = check_sigma_symmetry(Partition({3, 1}), 5, 4);
  const bool case_ok = ex.params.at("case") == "i" && ex.params.at("mu") == Json::array({3});
  Tally cor, other;
  for (const Partition& lam : partitions_in_box(2, 2)) {
    const int l = lam.length();
    for (int i = 1; i <= 2; ++i) {
      for (int n = std::max(l, 1); n <= l + i + 1; ++n) {
        const Verdict v = check_sigma_symmetry(lam, n, i);
        (v.params.at("corollary") == true ? cor : other).add(v);
      }
    }
  }
  Outcome o;
  o.pass = case_ok && ex.status != VerdictStatus::kFail && cor.fail == 0 && cor.erratum == 0 &&
           other.fail == 0;
  std::string ex_text = std::string(status_name(ex.status));
  if (!ex.erratum_tag.empty()) ex_text += " [" + ex.erratum_tag + ": (a_{i+1} - a_i) factor holds negated]";
  o.detail = "example case " + ex.params.at("case").get<std::string>() + ", mu=" +
             ex.params.value("mu", Json()).dump() + ", decomposition " + ex_text + "; corollary " +
             cor.summary() + "; other instances " + other.summary();
  return o;
}

Outcome dual_cauchy() {
  Tally t;
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}}) {
    t.add(check_dual_cauchy(n, m, n == 2 && m == 2));
  }
  return {t.fail == 0 && t.erratum == 0, t.summary() + "; split-system mechanics at (2,2)"};
}

Outcome ybe() {
  const Verdict row = check_ybe_lemma();
  const Verdict col = check_ybe_column();
  int caught = 0;
  for (VertexClass c : kAllClasses) {
    caught += check_ybe_lemma(c).status == VerdictStatus::kFail;
    caught += check_ybe_column(c).status == VerdictStatus::kFail;
  }
  Outcome o;
  o.pass = row.status == VerdictStatus::kPass && col.status == VerdictStatus::kPass && caught == 12;
  o.detail = "row lemma " + std::string(status_name(row.status)) + " (" + row.detail + "), column " +
             std::string(status_name(col.status)) + " (" + col.detail + "), wiring " +
             kRowWiring.to_string() + "; perturbed controls failing " + std::to_string(caught) + "/12";
  return o;
}

std::string run_cli(const std::string& args, int& code) {
  const std::string cmd = std::string(ICE_SCHUR_BIN) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    code = -1;
    return {};
  }
  std::string out;
  std::array<char, 65536> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  code = pclose(pipe);
  return out;
}

Outcome determinism() {
  int c1 = 0, c2 = 0;
  const std::string a = run_cli("verify --suite all", c1);
  const std::string b = run_cli("verify --suite all", c2);
  long lines = 0;
  for (char ch : a) lines += ch == '\n';
  Outcome o;
  o.pass = c1 == 0 && c2 == 0 && !a.empty() && a == b;
  o.detail = std::to_string(lines) + " JSONL lines, " + std::to_string(a.size()) + " bytes, " +
             (a == b ? "byte-identical" : "outputs differ") + ", exit codes " + std::to_string(c1) +
             "/" + std::to_string(c2);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const bool skip_cli = argc > 1 && std::strcmp(argv[1], "--skip-cli") == 0;
  struct Criterion {
    int id;
    const char* name;
    double budget;  // seconds, 0 = none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "grammar conformance", 10, grammar_conformance},
      {2, "Tokuyama-type formula", 60, tokuyama_sweep},
      {3, "tableau = determinant = lattice", 60, constructions_sweep},
      {4, "t = -1 specialization", 0, t_minus_one},
      {5, "t = 0 specialization", 0, t_zero},
      {6, "vanishing", 60, vanishing},
      {7, "t = infinity (Lascoux-McNamara)", 0, lascoux_mcnamara},
      {8, "Schubert equivalence", 30, schubert},
      {9, "sigma_i symmetry", 120, sigma},
      {10, "dual Cauchy", 120, dual_cauchy},
      {11, "Yang-Baxter", 0, ybe},
      {12, "determinism", 0, determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    if (c.id == 12 && skip_cli) {
      std::cout << "[SKIP] 12 determinism: --skip-cli\n";
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
    if (c.budget > 0 && d.count() > c.budget) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.budget)) + " s budget";
    }
    failed += !o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << ": " << o.detail << " ("
              << std::fixed << std::setprecision(2) << d.count() << " s)\n"
              << std::flush;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed\n" : "all criteria passed\n");
  return failed ? 1 : 0;
}
