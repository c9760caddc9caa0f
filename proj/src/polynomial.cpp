#include "iceschur/polynomial.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <utility>

namespace iceschur {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotDivisible: return "NotDivisible";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kResourceLimit: return "ResourceLimit";
    case ErrorCode::kShapeTooLong: return "ShapeTooLong";
    case ErrorCode::kShapeOutOfBox: return "ShapeOutOfBox";
    case ErrorCode::kNotStrict: return "NotStrict";
    case ErrorCode::kTopRowMismatch: return "TopRowMismatch";
    case ErrorCode::kShiftBudgetExceeded: return "ShiftBudgetExceeded";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Variable

Variable Variable::z(int index) {
  if (index < 1 || index > kMaxZ) {
    throw Error(ErrorCode::kIndexOutOfRange, "z index " + std::to_string(index));
  }
  return Variable(VarKind::kZ, index);
}

Variable Variable::alpha(int index) {
  if (index < 1 || index > kMaxAlpha) {
    throw Error(ErrorCode::kShiftBudgetExceeded, "alpha index " + std::to_string(index));
  }
  return Variable(VarKind::kAlpha, index);
}

Variable Variable::parse(const std::string& name) {
  if (name == "t") return t();
  if (name.size() >= 2 && (name[0] == 'z' || name[0] == 'a')) {
    int idx = 0;
    for (std::size_t k = 1; k < name.size(); ++k) {
      if (name[k] < '0' || name[k] > '9') {
        throw Error(ErrorCode::kInvalidArgument, "bad variable name '" + name + "'");
      }
      idx = idx * 10 + (name[k] - '0');
    }
    return name[0] == 'z' ? z(idx) : alpha(idx);
  }
  throw Error(ErrorCode::kInvalidArgument, "bad variable name '" + name + "'");
}

Variable Variable::from_slot(int slot) {
  if (slot < kMaxZ) return z(slot + 1);
  if (slot < kMaxZ + kMaxAlpha) return alpha(slot - kMaxZ + 1);
  return t();
}

int Variable::slot() const {
  switch (kind_) {
    case VarKind::kZ: return index_ - 1;
    case VarKind::kAlpha: return kMaxZ + index_ - 1;
    case VarKind::kT: return kMaxZ + kMaxAlpha;
  }
  return -1;
}

std::string Variable::name() const {
  switch (kind_) {
    case VarKind::kZ: return "z" + std::to_string(index_);
    case VarKind::kAlpha: return "a" + std::to_string(index_);
    case VarKind::kT: return "t";
  }
  return "?";
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Variable v, int exponent) {
  Monomial m;
  m.set_exponent(v, exponent);
  return m;
}

void Monomial::set_exponent(Variable v, int e) {
  if (e < 0 || e > 255) throw Error(ErrorCode::kResourceLimit, "exponent out of range");
  exps_[v.slot()] = static_cast<std::uint8_t>(e);
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (int s = 0; s < kSlotCount; ++s) {
    if (exps_[s] > other.exps_[s]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q;
  for (int s = 0; s < kSlotCount; ++s) q.exps_[s] = other.exps_[s] - exps_[s];
  return q;
}

Monomial Monomial::with_swapped(Variable a, Variable b) const {
  Monomial m = *this;
  std::swap(m.exps_[a.slot()], m.exps_[b.slot()]);
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (int s = 0; s < kSlotCount; ++s) {
    int e = exps_[s] + other.exps_[s];
    if (e > 255) throw Error(ErrorCode::kResourceLimit, "exponent overflow");
    m.exps_[s] = static_cast<std::uint8_t>(e);
  }
  return m;
}

// ---------------------------------------------------------------- term cap

namespace {
std::atomic<std::size_t> g_term_cap{kDefaultTermCap};

void check_cap(std::size_t count) {
  if (count > g_term_cap.load(std::memory_order_relaxed)) {
    throw Error(ErrorCode::kResourceLimit,
                "polynomial exceeds term cap of " + std::to_string(g_term_cap.load()));
  }
}
}  // namespace

std::size_t term_cap() { return g_term_cap.load(std::memory_order_relaxed); }
void set_term_cap(std::size_t cap) { g_term_cap.store(cap, std::memory_order_relaxed); }

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(long value) {
  if (value != 0) terms_.emplace(Monomial{}, BigRational(value));
}

// Rationals built from a numerator/denominator pair are not reduced by GMP,
// and arithmetic on unreduced values is undefined; reduce at every entry point.
namespace {

BigRational canonical(const BigRational& q) {
  BigRational out = q;
  out.canonicalize();
  return out;
}

}  // namespace

Polynomial::Polynomial(const BigRational& value) {
  const BigRational q = canonical(value);
  if (q != 0) terms_.emplace(Monomial{}, q);
}

Polynomial Polynomial::var(Variable v) { return monomial(Monomial::of(v), 1); }

Polynomial Polynomial::monomial(const Monomial& m, const BigRational& coeff) {
  Polynomial p;
  const BigRational q = canonical(coeff);
  if (q != 0) p.terms_.emplace(m, q);
  return p;
}

Polynomial Polynomial::from_terms(TermMap terms) {
  for (auto& kv : terms) kv.second.canonicalize();
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  check_cap(terms.size());
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

BigRational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigRational(0) : it->second;
}

int Polynomial::degree_in(Variable v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

Term Polynomial::leading_term() const {
  if (terms_.empty()) throw Error(ErrorCode::kInvalidArgument, "leading term of zero");
  return {terms_.begin()->first, terms_.begin()->second};
}

Polynomial Polynomial::coefficient_of(Variable v, int k) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    if (m.exponent(v) != k) continue;
    Monomial r = m;
    r.set_exponent(v, 0);
    out.terms_.emplace_hint(out.terms_.end(), r, c);
  }
  return out;
}

void Polynomial::add_term(const Monomial& m, const BigRational& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  check_cap(terms_.size());
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  check_cap(terms_.size());
  return *this;
}

void Polynomial::add_scaled(const Polynomial& other, const BigRational& coeff, const Monomial& m) {
  const BigRational q = canonical(coeff);
  if (q == 0) return;
  for (const auto& [om, oc] : other.terms_) add_term(om * m, oc * q);
  check_cap(terms_.size());
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  if (a.is_zero() || b.is_zero()) return out;
  const Polynomial& small = a.term_count() <= b.term_count() ? a : b;
  const Polynomial& large = &small == &a ? b : a;
  for (const auto& [m, c] : small.terms_) {
    for (const auto& [lm, lc] : large.terms_) out.add_term(m * lm, c * lc);
    check_cap(out.terms_.size());
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial operator-(Polynomial a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

Polynomial pow(const Polynomial& base, int exponent) {
  if (exponent < 0) throw Error(ErrorCode::kInvalidArgument, "negative exponent");
  Polynomial result(1);
  for (int k = 0; k < exponent; ++k) result *= base;
  return result;
}

// ------------------------------------------------------------- operations

Polynomial substitute(const Polynomial& p, const Bindings& bindings) {
  if (bindings.empty()) return p;
  // powers[slot][e] = binding(slot)^e, grown on demand
  std::map<int, std::vector<Polynomial>> powers;
  for (const auto& [v, image] : bindings) powers[v.slot()] = {Polynomial(1), image};

  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Monomial kept;
    Polynomial factor(1);
    for (int s = 0; s < kSlotCount; ++s) {
      int e = m.exponent_at(s);
      if (e == 0) continue;
      auto it = powers.find(s);
      if (it == powers.end()) {
        kept.set_exponent(Variable::from_slot(s), e);
        continue;
      }
      auto& table = it->second;
      while (static_cast<int>(table.size()) <= e) table.push_back(table.back() * table[1]);
      factor *= table[e];
    }
    out.add_scaled(factor, c, kept);
  }
  return out;
}

Polynomial swap_variables(const Polynomial& p, Variable a, Variable b) {
  Polynomial::TermMap swapped;
  for (const auto& [m, c] : p.terms()) swapped.emplace(m.with_swapped(a, b), c);
  return Polynomial::from_terms(std::move(swapped));
}

Polynomial exact_divide(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw Error(ErrorCode::kDivisionByZero, "exact_divide by zero");
  const Term lead = den.leading_term();
  Polynomial quotient;
  Polynomial rem = num;
  while (!rem.is_zero()) {
    const Term r = rem.leading_term();
    if (!lead.monomial.divides(r.monomial)) {
      throw Error(ErrorCode::kNotDivisible,
                  "remainder leading term " + to_text(Polynomial::monomial(r.monomial, r.coeff)));
    }
    Monomial qm = lead.monomial.quotient_of(r.monomial);
    BigRational qc = r.coeff / lead.coeff;
    quotient.add_scaled(Polynomial(1), qc, qm);
    rem.add_scaled(den, -qc, qm);
  }
  return quotient;
}

Polynomial divided_difference(int i, const Polynomial& p, std::span<const Variable> alphabet) {
  if (i < 1 || i >= static_cast<int>(alphabet.size())) {
    throw Error(ErrorCode::kIndexOutOfRange, "divided difference index " + std::to_string(i));
  }
  const Variable x = alphabet[i - 1];
  const Variable y = alphabet[i];
  // x^a y^b -> (x^a y^b - x^b y^a)/(x - y)
  //         = sign * (xy)^min * sum_{k} x^k y^{|a-b|-1-k}
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    int ea = m.exponent(x);
    int eb = m.exponent(y);
    if (ea == eb) continue;
    Monomial base = m;
    int lo = std::min(ea, eb);
    int gap = std::abs(ea - eb);
    base.set_exponent(x, lo);
    base.set_exponent(y, lo);
    BigRational sc = ea > eb ? c : BigRational(-c);
    for (int k = 0; k < gap; ++k) {
      Monomial term = base;
      term.set_exponent(x, lo + k);
      term.set_exponent(y, lo + gap - 1 - k);
      out.add_scaled(Polynomial(1), sc, term);
    }
  }
  return out;
}

bool is_symmetric(const Polynomial& p, std::span<const Variable> alphabet) {
  for (std::size_t k = 0; k + 1 < alphabet.size(); ++k) {
    if (swap_variables(p, alphabet[k], alphabet[k + 1]) != p) return false;
  }
  return true;
}

std::vector<Variable> z_alphabet(int n) {
  std::vector<Variable> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back(Variable::z(i));
  return out;
}

std::string to_string(const BigRational& value) {
  const BigRational q = canonical(value);
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRational parse_rational(const std::string& text) {
  BigRational q;
  if (q.set_str(text, 10) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "bad rational '" + text + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorCode::kDivisionByZero, "rational with zero denominator");
  q.canonicalize();
  return q;
}

std::string to_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    for (int s = 0; s < kSlotCount; ++s) {
      int e = m.exponent_at(s);
      if (e != 0) os << " * " << Variable::from_slot(s).name() << '^' << e;
    }
  }
  return os.str();
}

}  // namespace iceschur
