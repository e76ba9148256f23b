#include "logarr/core/univariate.hpp"

#include <sstream>
#include <stdexcept>

namespace logarr {

UPoly::UPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat UPoly::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

Rat UPoly::operator()(const Rat& x) const {
  Rat r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rat& s) {
  for (auto& v : c_) v *= s;
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(r));
}

UPoly UPoly::pow(int e) const {
  UPoly r = constant(1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

UPoly UPoly::compose(const UPoly& q) const {
  UPoly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + constant(*it);
  return r;
}

UPoly UPoly::divide_exact(const UPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Rat> rem = c_;
  const int dd = d.degree();
  const int qd = degree() - dd;
  if (qd < 0) {
    if (!is_zero()) throw std::domain_error("polynomial division leaves a remainder");
    return {};
  }
  std::vector<Rat> q(static_cast<std::size_t>(qd + 1));
  for (int k = qd; k >= 0; --k) {
    const Rat f = rem[static_cast<std::size_t>(k + dd)] / d.c_.back();
    q[static_cast<std::size_t>(k)] = f;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= f * d.c_[static_cast<std::size_t>(j)];
  }
  for (const auto& v : rem)
    if (v != 0) throw std::domain_error("polynomial division leaves a remainder");
  return UPoly(std::move(q));
}

std::vector<std::int64_t> UPoly::integer_coeffs() const {
  std::vector<std::int64_t> out;
  out.reserve(c_.size());
  for (const auto& v : c_) out.push_back(to_int64(v));
  return out;
}

std::string UPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    Rat a = c_[k];
    if (a == 0) continue;
    if (!first) os << (a < 0 ? " - " : " + ");
    else if (a < 0) os << "-";
    if (a < 0) a = -a;
    if (k == 0 || a != 1) os << a.get_str();
    if (k > 0) {
      if (a != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

UPoly binomial_poly(const UPoly& p, int k) {
  UPoly r = UPoly::constant(1);
  Rat fact = 1;
  for (int j = 0; j < k; ++j) {
    r = r * (p - UPoly::constant(j));
    fact *= j + 1;
  }
  return r * Rat(1 / fact);
}

Rat gen_binomial(long e, long j) {
  if (j < 0) return 0;
  Rat r = 1;
  for (long i = 0; i < j; ++i) {
    r *= Rat(e - i);
    r /= Rat(i + 1);
  }
  return r;
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const int, Rat>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(int e, const Rat& c) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(int min_exp, const std::vector<Rat>& coeffs) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(min_exp + static_cast<int>(i), coeffs[i]);
  return p;
}

Rat LaurentPoly::operator[](int e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Rat(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (t_.empty()) throw std::logic_error("min_exponent of zero Laurent polynomial");
  return t_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (t_.empty()) throw std::logic_error("max_exponent of zero Laurent polynomial");
  return t_.rbegin()->first;
}

void LaurentPoly::add_term(int e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rat& s) {
  if (s == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [e, c] : t_) c *= s;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : t_) r.t_.emplace(e + k, c);
  return r;
}

Rat LaurentPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (const auto& [e, c] : t_) {
    Rat p = 1;
    if (e >= 0) {
      for (int i = 0; i < e; ++i) p *= x;
    } else {
      for (int i = 0; i < -e; ++i) p /= x;
    }
    r += c * p;
  }
  return r;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c0] : t_) {
    Rat a = c0;
    if (!first) os << (a < 0 ? " - " : " + ");
    else if (a < 0) os << "-";
    if (a < 0) a = -a;
    if (e == 0 || a != 1) os << a.get_str();
    if (e != 0) {
      if (a != 1) os << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

LaurentPoly one_minus_x_pow(int k) {
  LaurentPoly r;
  for (int j = 0; j <= k; ++j) r.add_term(j, Rat(binomial(k, j)) * ((j % 2) ? -1 : 1));
  return r;
}

}  // namespace logarr
