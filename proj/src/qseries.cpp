#include "thetaq/qseries.hpp"

#include <sstream>
#include <stdexcept>

#include "thetaq/intmath.hpp"

namespace thetaq {

QSeries::QSeries(int64_t denom, int64_t prec) : denom_(denom), prec_(prec) {
  if (denom < 1) throw std::domain_error("QSeries: denominator must be positive");
}

QSeries QSeries::constant(const CycNumber& c, int64_t prec) {
  QSeries out(1, prec);
  out.set_coeff(0, c);
  return out;
}

QSeries QSeries::monomial(const CycNumber& c, int64_t num, int64_t den,
                          int64_t prec) {
  QSeries out(den, prec);
  out.set_coeff(num, c);
  return out;
}

int64_t QSeries::conductor() const {
  int64_t L = 1;
  for (const auto& [m, c] : terms_) L = lcm_i64(L, c.conductor());
  return L;
}

int64_t QSeries::valuation_key() const {
  return terms_.empty() ? prec_ : terms_.begin()->first;
}

void QSeries::set_coeff(int64_t key, const CycNumber& c) {
  if (key >= prec_)
    throw std::domain_error("QSeries::set_coeff: key at or beyond precision");
  if (c.is_zero())
    terms_.erase(key);
  else
    terms_[key] = c;
}

CycNumber QSeries::coeff_key(int64_t m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CycNumber::zero() : it->second;
}

QSeries QSeries::rescaled_to_denom(int64_t new_denom) const {
  if (new_denom == denom_) return *this;
  if (new_denom % denom_ != 0)
    throw std::domain_error("QSeries::rescaled_to_denom: not a multiple");
  int64_t r = new_denom / denom_;
  QSeries out(new_denom, prec_ * r);
  for (const auto& [m, c] : terms_) out.terms_[m * r] = c;
  return out;
}

QSeries QSeries::reduced_grid() const {
  int64_t g = denom_;
  for (const auto& [m, c] : terms_) {
    g = gcd_i64(g, m);
    if (g == 1) return *this;
  }
  if (g == 1 || g == 0) return *this;
  QSeries out(denom_ / g, ceil_div(prec_, g));
  for (const auto& [m, c] : terms_) out.terms_[m / g] = c;
  return out;
}

QSeries QSeries::truncated(int64_t new_prec) const {
  if (new_prec > prec_)
    throw std::domain_error("QSeries::truncated: cannot raise precision");
  QSeries out(denom_, new_prec);
  for (const auto& [m, c] : terms_) {
    if (m >= new_prec) break;
    out.terms_[m] = c;
  }
  return out;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  if (terms_.empty()) os << "0";
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool simple = c.is_rational() && c.rational_value() >= 0;
    if (simple)
      os << c.to_string();
    else
      os << "(" << c.to_string() << ")";
    if (m != 0) {
      if (denom_ == 1 && m == 1)
        os << "*q";
      else if (denom_ == 1)
        os << "*q^" << m;
      else
        os << "*q^(" << m << "/" << denom_ << ")";
    }
  }
  os << " + O(q^";
  if (denom_ == 1)
    os << prec_;
  else
    os << "(" << prec_ << "/" << denom_ << ")";
  os << ")";
  return os.str();
}

namespace {

// put f and g on a common grid
void common_grid(const QSeries& f, const QSeries& g, QSeries& fo, QSeries& go) {
  int64_t D = lcm_i64(f.denom(), g.denom());
  fo = f.rescaled_to_denom(D);
  go = g.rescaled_to_denom(D);
}

}  // namespace

QSeries qs_add(const QSeries& f, const QSeries& g) {
  QSeries a(1, 1), b(1, 1);
  common_grid(f, g, a, b);
  QSeries out(a.denom(), std::min(a.prec(), b.prec()));
  for (const auto& [m, c] : a.terms()) {
    if (m >= out.prec()) break;
    out.set_coeff(m, c);
  }
  for (const auto& [m, c] : b.terms()) {
    if (m >= out.prec()) break;
    out.set_coeff(m, out.coeff_key(m) + c);
  }
  return out;
}

QSeries qs_neg(const QSeries& f) {
  QSeries out(f.denom(), f.prec());
  for (const auto& [m, c] : f.terms()) out.set_coeff(m, -c);
  return out;
}

QSeries qs_sub(const QSeries& f, const QSeries& g) {
  return qs_add(f, qs_neg(g));
}

QSeries qs_mul(const QSeries& f, const QSeries& g) {
  QSeries a(1, 1), b(1, 1);
  common_grid(f, g, a, b);
  // Laurent precision rule: prec = min(P_f + v_g, P_g + v_f)
  int64_t prec = std::min(a.prec() + b.valuation_key(),
                          b.prec() + a.valuation_key());
  QSeries out(a.denom(), prec);
  std::map<int64_t, CycNumber> acc;
  for (const auto& [mf, cf] : a.terms()) {
    for (const auto& [mg, cg] : b.terms()) {
      if (mf + mg >= prec) break;
      auto it = acc.find(mf + mg);
      if (it == acc.end())
        acc.emplace(mf + mg, cf * cg);
      else
        it->second += cf * cg;
    }
  }
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.set_coeff(m, c);
  return out;
}

QSeries qs_scale(const QSeries& f, const CycNumber& c) {
  QSeries out(f.denom(), f.prec());
  if (c.is_zero()) return out;
  for (const auto& [m, x] : f.terms()) out.set_coeff(m, c * x);
  return out;
}

QSeries qs_pow(const QSeries& f, int64_t k) {
  if (k < 1) throw std::domain_error("qs_pow: exponent must be >= 1");
  QSeries out = f;
  for (int64_t i = 1; i < k; ++i) out = qs_mul(out, f);
  return out;
}

QSeries qs_inv(const QSeries& f, int64_t target_prec) {
  if (f.known_zero())
    throw std::domain_error("qs_inv: no known leading coefficient");
  int64_t v = f.valuation_key();
  // f determines its inverse only below prec - 2v
  int64_t prec = std::min(target_prec, f.prec() - 2 * v);
  QSeries out(f.denom(), prec);
  CycNumber lead_inv = f.terms().begin()->second.inverse();
  // unit part u with f = q^(v/D) * (c0 + ...) and u = 1/(c0 + ...):
  // sum_{t <= j} a_{v+t} u_{j-t} = [j == 0]
  std::map<int64_t, CycNumber> u;  // key j, coefficient u_j
  int64_t jmax = prec + v;         // output keys are -v + j < prec
  if (0 < jmax) u.emplace(0, lead_inv);
  for (int64_t j = 1; j < jmax; ++j) {
    CycNumber s = CycNumber::zero();
    for (auto it = std::next(f.terms().begin()); it != f.terms().end(); ++it) {
      int64_t t = it->first - v;
      if (t > j) break;
      auto ut = u.find(j - t);
      if (ut != u.end()) s += it->second * ut->second;
    }
    if (!s.is_zero()) u.emplace(j, -(lead_inv * s));
  }
  for (const auto& [j, c] : u)
    if (!c.is_zero()) out.set_coeff(j - v, c);
  return out;
}

QSeries qs_subst(const QSeries& f, const SubstSpec& spec) {
  if (spec.scale < 1) throw std::domain_error("qs_subst: scale must be >= 1");
  int64_t new_denom = f.denom() * spec.scale;
  QSeries out(new_denom, f.prec());
  if (spec.twist == 0) {
    for (const auto& [m, c] : f.terms()) out.set_coeff(m, c);
    return out;
  }
  for (const auto& [m, c] : f.terms()) {
    CycNumber root = CycNumber::zeta(new_denom, spec.twist * m);
    out.set_coeff(m, root * c);
  }
  return out;
}

QSeries scale_exponents(const QSeries& f, int64_t r) {
  if (r < 1) throw std::domain_error("scale_exponents: r must be >= 1");
  QSeries out(f.denom(), f.prec() * r);
  for (const auto& [m, c] : f.terms()) out.set_coeff(m * r, c);
  return out;
}

QSeries twist_q(const QSeries& f, int64_t c, int64_t j) {
  if (c < 1) throw std::domain_error("twist_q: root order must be >= 1");
  int64_t order = c * f.denom();
  QSeries out(f.denom(), f.prec());
  for (const auto& [m, x] : f.terms()) {
    CycNumber root = CycNumber::zeta(order, j * m);
    out.set_coeff(m, root * x);
  }
  return out;
}

namespace {

// view a fractional-grid series with integer support as integer-grid
QSeries integer_grid_view(const QSeries& f, const char* who) {
  if (f.denom() == 1) return f;
  for (const auto& [m, c] : f.terms())
    if (m % f.denom() != 0)
      throw std::domain_error(std::string(who) + ": fractional support");
  QSeries out(1, ceil_div(f.prec(), f.denom()));
  for (const auto& [m, c] : f.terms()) out.set_coeff(m / f.denom(), c);
  return out;
}

}  // namespace

QSeries extract_arithmetic(const QSeries& f, int64_t l) {
  if (l < 1) throw std::domain_error("extract_arithmetic: l must be >= 1");
  QSeries g = integer_grid_view(f, "extract_arithmetic");
  QSeries out(1, ceil_div(g.prec(), l));
  for (const auto& [n, c] : g.terms())
    if (n % l == 0) out.set_coeff(n / l, c);
  return out;
}

QSeries legendre_twist(const QSeries& f, int64_t l) {
  if (!is_odd_prime(l))
    throw std::domain_error("legendre_twist: l must be an odd prime");
  QSeries g = integer_grid_view(f, "legendre_twist");
  QSeries out(1, g.prec());
  for (const auto& [n, c] : g.terms()) {
    int s = jacobi_symbol(n, l);
    if (s == 1)
      out.set_coeff(n, c);
    else if (s == -1)
      out.set_coeff(n, -c);
  }
  return out;
}

CycNumber coefficient_at(const QSeries& f, const Rational& e) {
  Rational bound(f.prec(), f.denom());
  bound.canonicalize();
  if (e >= bound)
    throw std::domain_error("coefficient_at: exponent beyond precision");
  Rational key = e * f.denom();
  key.canonicalize();
  if (key.get_den() != 1) return CycNumber::zero();
  if (!key.get_num().fits_slong_p())
    throw std::domain_error("coefficient_at: exponent out of range");
  return f.coeff_key(key.get_num().get_si());
}

bool overlap_equal(const QSeries& f, const QSeries& g) {
  QSeries a(1, 1), b(1, 1);
  common_grid(f, g, a, b);
  int64_t window = std::min(a.prec(), b.prec());
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (true) {
    while (ia != a.terms().end() && ia->first >= window) ia = a.terms().end();
    while (ib != b.terms().end() && ib->first >= window) ib = b.terms().end();
    bool ea = ia == a.terms().end();
    bool eb = ib == b.terms().end();
    if (ea && eb) return true;
    if (ea != eb) return false;
    if (ia->first != ib->first) return false;
    if (ia->second != ib->second) return false;
    ++ia;
    ++ib;
  }
}

bool equal_to_power(const QSeries& f, const QSeries& g, int64_t int_powers) {
  if (f.prec() < int_powers * f.denom()) return false;
  if (g.prec() < int_powers * g.denom()) return false;
  return overlap_equal(f.truncated(int_powers * f.denom()),
                       g.truncated(int_powers * g.denom()));
}

}  // namespace thetaq
