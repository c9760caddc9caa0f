// ice-schur: command-line front end for the factorial Schur / ice library.
//
// Exit codes: 0 success, 1 identity failure, 2 resource limit, 64 usage.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "iceschur/json_io.hpp"
#include "iceschur/schur.hpp"
#include "iceschur/verify.hpp"

namespace {

using namespace iceschur;

constexpr int kExitFail = 1;
constexpr int kExitResource = 2;
constexpr int kExitUsage = 64;

struct Options {
  std::string lambda;
  int n = 1;
  std::string method = "determinant";
  std::string t = "t";
  std::string format = "json";
  std::vector<std::string> suites;
  int max_n = 3;
  int box = 3;
  std::string as = "gt";
  long state = 0;
};

TMode parse_t(const std::string& text) {
  if (text == "t" || text.empty()) return std::nullopt;
  return parse_rational(text);
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check_bounds(int n, const Partition& lambda) {
  if (n < 1 || n > kMaxZ) throw UsageError("--n must be between 1 and " + std::to_string(kMaxZ));
  if (lambda.length() > n) throw UsageError("lambda has more than n parts");
}

int cmd_compute(const Options& o) {
  const Partition lambda = Partition::parse(o.lambda);
  check_bounds(o.n, lambda);
  SchurResult r;
  switch (parse_method(o.method)) {
    case SchurMethod::kDeterminant: r = schur_det(lambda, o.n); break;
    case SchurMethod::kTableau: r = schur_tableau(lambda, o.n); break;
    case SchurMethod::kLattice: r = schur_lattice(lambda, o.n, parse_t(o.t)); break;
  }
  if (o.format == "text") {
    std::cout << to_text(r.value) << "\n";
  } else {
    std::cout << to_json(r).dump() << "\n";
  }
  return 0;
}

int cmd_verify(const Options& o) {
  SuiteConfig cfg;
  if (!o.suites.empty()) cfg.suites = {o.suites.begin(), o.suites.end()};
  if (o.max_n < 0 || o.max_n > 4) throw UsageError("--max-n must be between 0 and 4");
  if (o.box < 0 || o.box > 4) throw UsageError("--box must be between 0 and 4");
  cfg.max_n = o.max_n;
  cfg.box_cols = o.box;
  const std::vector<Verdict> verdicts = run_suite(cfg);
  if (o.format == "text") {
    for (const Verdict& v : verdicts) {
      std::cout << status_name(v.status) << "  " << v.identity << " " << v.params.dump();
      if (!v.erratum_tag.empty()) std::cout << "  [" << v.erratum_tag << "]";
      std::cout << "\n";
    }
  } else {
    std::cout << to_jsonl(verdicts);
  }
  return any_fail(verdicts) ? kExitFail : 0;
}

int cmd_enumerate(const Options& o) {
  const Partition lambda = Partition::parse(o.lambda);
  check_bounds(o.n, lambda);
  Json out = Json::array();
  if (o.as == "tableaux") {
    long k = 0;
    for (const Tableau& t : enumerate_ssyt(lambda, o.n)) {
      out.push_back({{"index", k++}, {"tableau", to_json(t)}});
    }
  } else {
    const LatticeSystem s = build_system(lambda, o.n, WeightTable::gamma(parse_t(o.t)));
    long k = 0;
    for (const GTPattern& g : enumerate_strict_gt(shifted_top_row(lambda, o.n))) {
      Json item = {{"index", k++}, {"gt", to_json(g)}};
      if (o.as == "states") {
        Json st = state_to_json(s, state_from_pattern(s, g));
        for (auto& [key, value] : st.items()) item[key] = value;
      } else if (o.as == "staircases") {
        item["staircase"] = to_json(gt_to_staircase(g, lambda, o.n));
      } else if (o.as != "gt") {
        throw UsageError("--as must be one of gt, states, tableaux, staircases");
      }
      out.push_back(std::move(item));
    }
  }
  if (o.format == "text") {
    for (const Json& item : out) std::cout << item.dump() << "\n";
  } else {
    std::cout << out.dump() << "\n";
  }
  return 0;
}

int cmd_render(const Options& o) {
  const Partition lambda = Partition::parse(o.lambda);
  check_bounds(o.n, lambda);
  const LatticeSystem s = build_system(lambda, o.n, WeightTable::gamma(parse_t(o.t)));
  const auto states = enumerate_states(s);
  if (o.state < 0 || o.state >= static_cast<long>(states.size())) {
    throw UsageError("state index " + std::to_string(o.state) + " out of range (" +
                     std::to_string(states.size()) + " states)");
  }
  const LatticeState& st = states[o.state];
  std::cout << "state " << o.state << " of " << states.size() << ", lambda=("
            << lambda.to_string() << "), n=" << o.n << "\n"
            << "gt: " << state_pattern(s, st).to_string() << "\n"
            << render_state(s, st)
            << "weight: " << to_text(state_weight(s, st)) << "\n";
  return 0;
}

void apply_term_cap_env() {
  const char* env = std::getenv("ICE_SCHUR_TERM_CAP");
  if (env == nullptr || *env == '\0') return;
  try {
    std::size_t pos = 0;
    const unsigned long long cap = std::stoull(env, &pos);
    if (pos != std::string(env).size() || cap == 0) throw std::invalid_argument(env);
    set_term_cap(cap);
  } catch (const std::exception&) {
    throw UsageError(std::string("ICE_SCHUR_TERM_CAP must be a positive integer, got '") + env + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Factorial Schur functions from free-fermionic six-vertex models"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"json", "text"};

  auto* compute = app.add_subcommand("compute", "compute s_lambda(z|a) by one construction");
  compute->add_option("--lambda", o.lambda, "partition, comma separated; empty string for the empty partition")->required();
  compute->add_option("--n", o.n, "number of spectral parameters")->required();
  compute->add_option("--method", o.method, "determinant | tableau | lattice")
      ->check(CLI::IsMember({"determinant", "det", "tableau", "lattice"}));
  compute->add_option("--t", o.t, "deformation parameter for the lattice method: t or a rational");
  compute->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "run identity certification suites");
  verify->add_option("--suite", o.suites, "suite name (repeatable); default all");
  verify->add_option("--max-n", o.max_n, "largest n in the sweep");
  verify->add_option("--box", o.box, "largest part in the sweep");
  verify->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* enumerate = app.add_subcommand("enumerate", "list lattice states and their bijective images");
  enumerate->add_option("--lambda", o.lambda)->required();
  enumerate->add_option("--n", o.n)->required();
  enumerate->add_option("--as", o.as, "gt | states | tableaux | staircases")
      ->check(CLI::IsMember({"gt", "states", "tableaux", "staircases"}));
  enumerate->add_option("--t", o.t);
  enumerate->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* render = app.add_subcommand("render", "draw one lattice state");
  render->add_option("--lambda", o.lambda)->required();
  render->add_option("--n", o.n)->required();
  render->add_option("--state", o.state, "state index in GT order");
  render->add_option("--t", o.t);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    apply_term_cap_env();
    if (*compute) return cmd_compute(o);
    if (*verify) return cmd_verify(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*render) return cmd_render(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::kResourceLimit: return kExitResource;
      case ErrorCode::kInternal:
      case ErrorCode::kNotDivisible: return kExitFail;
      default: return kExitUsage;
    }
  }
  return kExitUsage;
}
