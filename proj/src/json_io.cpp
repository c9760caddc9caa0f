#include "iceschur/json_io.hpp"

#include <algorithm>

namespace iceschur {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::kInvalidArgument, std::string("missing JSON field '") + key + "'");
  }
  return j.at(key);
}

std::vector<std::vector<int>> int_rows(const Json& j) {
  try {
    return j.get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, e.what());
  }
}

}  // namespace

Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json exps = Json::object();
    for (int slot = 0; slot < kSlotCount; ++slot) {
      if (int e = m.exponent_at(slot)) exps[Variable::from_slot(slot).name()] = e;
    }
    out.push_back({{"coeff", to_string(c)}, {"exps", exps}});
  }
  return out;
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kInvalidArgument, "polynomial JSON must be an array");
  Polynomial::TermMap terms;
  for (const Json& t : j) {
    Monomial m;
    for (const auto& [name, e] : field(t, "exps").items()) {
      m.set_exponent(Variable::parse(name), e.get<int>());
    }
    terms[m] += parse_rational(field(t, "coeff").get<std::string>());
  }
  return Polynomial::from_terms(std::move(terms));
}

// Trailing zeros are dropped so that (1) and (1,0) serialize identically.
Json to_json(const Partition& p) {
  std::vector<int> parts = p.parts();
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return parts;
}

Partition partition_from_json(const Json& j) {
  try {
    return Partition(j.get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, e.what());
  }
}

Json to_json(const Tableau& t) { return t.rows; }
Tableau tableau_from_json(const Json& j) { return Tableau{int_rows(j)}; }

Json to_json(const GTPattern& g) { return g.rows; }
GTPattern gt_from_json(const Json& j) { return GTPattern{int_rows(j)}; }

Json to_json(const Staircase& s) { return s.columns; }
Staircase staircase_from_json(const Json& j) { return Staircase{int_rows(j)}; }

Json to_json(const Permutation& w) { return w.images(); }

Permutation permutation_from_json(const Json& j) {
  try {
    return Permutation(j.get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, e.what());
  }
}

Json to_json(const SchurResult& r) {
  return {{"lambda", to_json(r.lambda)},
          {"n", r.n},
          {"method", std::string(method_name(r.method))},
          {"value", to_json(r.value)}};
}

SchurResult schur_result_from_json(const Json& j) {
  SchurResult r;
  r.lambda = partition_from_json(field(j, "lambda"));
  r.n = field(j, "n").get<int>();
  r.method = parse_method(field(j, "method").get<std::string>());
  r.value = polynomial_from_json(field(j, "value"));
  return r;
}

Json state_to_json(const LatticeSystem& s, const LatticeState& st) {
  Json columns = Json::array();
  for (int c = s.cols; c >= 1; --c) columns.push_back(c);
  Json classes = Json::array();
  for (const auto& row : st.classes) {
    Json line = Json::array();
    for (auto it = row.rbegin(); it != row.rend(); ++it) line.push_back(std::string(class_name(*it)));
    classes.push_back(std::move(line));
  }
  return {{"gt", to_json(state_pattern(s, st))},
          {"columns", columns},
          {"classes", classes},
          {"weight", to_json(state_weight(s, st))}};
}

LatticeState state_from_json(const Json& j) {
  LatticeState st;
  for (const Json& line : field(j, "classes")) {
    std::vector<VertexClass> row;
    for (const Json& c : line) row.push_back(parse_class(c.get<std::string>()));
    std::reverse(row.begin(), row.end());
    st.classes.push_back(std::move(row));
  }
  return st;
}

}  // namespace iceschur
