#include "twloop/scalars.hpp"

#include <sstream>
#include <stdexcept>

namespace twloop {

namespace {

void check_order(int r) {
  if (r < 1 || r > 3) throw std::invalid_argument("unsupported root-of-unity order");
}

}  // namespace

Cyc::Cyc(int r) : r_(r) { check_order(r); }

Cyc::Cyc(int r, const Rat& a, const Rat& b) : r_(r), a_(a), b_(b) {
  check_order(r);
  // mpq_class(p, q) does not reduce, and comparisons assume lowest terms
  a_.canonicalize();
  b_.canonicalize();
  if (r <= 2 && b_ != 0) throw std::invalid_argument("xi-component must vanish for r <= 2");
}

Cyc Cyc::xi(int r) {
  switch (r) {
    case 1: return Cyc(1, 1);
    case 2: return Cyc(2, -1);
    case 3: return Cyc(3, Rat(0), Rat(1));
  }
  throw std::invalid_argument("unsupported root-of-unity order");
}

Cyc Cyc::xi_pow(int r, long n) {
  long e = ((n % r) + r) % r;
  Cyc out(r, 1);
  for (long i = 0; i < e; ++i) out = out * xi(r);
  return out;
}

bool Cyc::is_positive() const { return a_ > 0 || (a_ == 0 && b_ > 0); }

void Cyc::check(const Cyc& o) const {
  if (r_ != o.r_) throw std::invalid_argument("mismatched root-of-unity order");
}

Cyc Cyc::operator+(const Cyc& o) const {
  check(o);
  Cyc out(r_);
  out.a_ = a_ + o.a_;
  out.b_ = b_ + o.b_;
  return out;
}

Cyc Cyc::operator-(const Cyc& o) const {
  check(o);
  Cyc out(r_);
  out.a_ = a_ - o.a_;
  out.b_ = b_ - o.b_;
  return out;
}

Cyc Cyc::operator-() const {
  Cyc out(r_);
  out.a_ = -a_;
  out.b_ = -b_;
  return out;
}

Cyc Cyc::operator*(const Cyc& o) const {
  check(o);
  Cyc out(r_);
  if (r_ <= 2) {
    out.a_ = a_ * o.a_;
    return out;
  }
  // xi^2 = -1 - xi
  Rat bd = b_ * o.b_;
  out.a_ = a_ * o.a_ - bd;
  out.b_ = a_ * o.b_ + b_ * o.a_ - bd;
  return out;
}

Cyc Cyc::inv() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(xi)");
  Cyc out(r_);
  if (r_ <= 2) {
    out.a_ = 1 / a_;
    return out;
  }
  // (a + b xi)(a + b xi^2) = a^2 - ab + b^2
  Rat norm = a_ * a_ - a_ * b_ + b_ * b_;
  out.a_ = (a_ - b_) / norm;
  out.b_ = -b_ / norm;
  return out;
}

Cyc Cyc::pow(long n) const {
  Cyc base = n < 0 ? inv() : *this;
  unsigned long e = n < 0 ? -n : n;
  Cyc out(r_, 1);
  while (e) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

Cyc Cyc::omega_bar() const {
  if (r_ <= 2) return *this;
  Cyc out(r_);
  out.a_ = a_ - b_;
  out.b_ = -b_;
  return out;
}

std::string Cyc::str() const {
  std::ostringstream os;
  if (b_ == 0) {
    os << a_.get_str();
  } else if (a_ == 0) {
    os << b_.get_str() << "*xi";
  } else {
    os << "(" << a_.get_str() << (b_ > 0 ? "+" : "") << b_.get_str() << "*xi)";
  }
  return os.str();
}

Laurent::Laurent(const Cyc& c) : r_(c.r()) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

Laurent Laurent::constant(int r, const Rat& q) { return Laurent(Cyc(r, q)); }

Laurent Laurent::monomial(const Cyc& c, int n) {
  Laurent out(c.r());
  if (!c.is_zero()) out.terms_.emplace(n, c);
  return out;
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
}

Cyc Laurent::coeff(int n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? Cyc(r_) : it->second;
}

void Laurent::add_term(int n, const Cyc& c) {
  if (c.r() != r_) throw std::invalid_argument("mismatched root-of-unity order");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(n, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Laurent::check(const Laurent& o) const {
  if (r_ != o.r_) throw std::invalid_argument("mismatched root-of-unity order");
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent out = *this;
  out += o;
  return out;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  check(o);
  for (const auto& [n, c] : o.terms_) add_term(n, c);
  return *this;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent out = *this;
  out -= o;
  return out;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  check(o);
  for (const auto& [n, c] : o.terms_) add_term(n, -c);
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent out(r_);
  for (const auto& [n, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), n, -c);
  return out;
}

Laurent Laurent::operator*(const Laurent& o) const {
  check(o);
  Laurent out(r_);
  for (const auto& [n, c] : terms_)
    for (const auto& [m, d] : o.terms_) out.add_term(n + m, c * d);
  return out;
}

Laurent Laurent::operator*(const Cyc& c) const {
  if (c.r() != r_) throw std::invalid_argument("mismatched root-of-unity order");
  Laurent out(r_);
  if (c.is_zero()) return out;
  for (const auto& [n, d] : terms_) out.terms_.emplace_hint(out.terms_.end(), n, d * c);
  return out;
}

Laurent Laurent::shift(int k) const {
  Laurent out(r_);
  for (const auto& [n, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), n + k, c);
  return out;
}

Laurent Laurent::pow(long n) const {
  Laurent base = n < 0 ? inv_unit() : *this;
  unsigned long e = n < 0 ? -n : n;
  Laurent out = constant(r_, 1);
  while (e) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return out;
}

Laurent Laurent::sigma_prime() const {
  if (r_ == 1) return *this;
  Laurent out(r_);
  for (const auto& [n, c] : terms_)
    out.terms_.emplace_hint(out.terms_.end(), n, c * Cyc::xi_pow(r_, -n));
  return out;
}

Laurent Laurent::sigma_prime(int times) const {
  Laurent out = *this;
  int t = ((times % r_) + r_) % r_;
  for (int i = 0; i < t; ++i) out = out.sigma_prime();
  return out;
}

Laurent Laurent::omega_prime() const {
  if (r_ <= 2) return *this;
  Laurent out(r_);
  for (const auto& [n, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), n, c.omega_bar());
  return out;
}

Laurent Laurent::inv_unit() const {
  if (!is_unit()) throw std::domain_error("Laurent polynomial is not a unit");
  const auto& [n, c] = *terms_.begin();
  return monomial(c.inv(), -n);
}

bool Laurent::is_gamma_fixed() const { return sigma_prime() == *this && omega_prime() == *this; }

bool Laurent::has_rational_coeffs() const {
  for (const auto& [n, c] : terms_)
    if (!c.is_rational()) return false;
  return true;
}

int Laurent::deg_max() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
int Laurent::deg_min() const { return terms_.empty() ? 0 : terms_.begin()->first; }

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    if (n != 0) os << "*z^(" << n << "/" << r_ << ")";
  }
  return os.str();
}

DegStats deg_stats(const Laurent& s) {
  return DegStats{s.deg_max(), s.deg_min(), s.spread()};
}

}  // namespace twloop
