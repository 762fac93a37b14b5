#pragma once
// Exact scalars: Q(xi) for xi a primitive r-th root of unity (r = 1, 2, 3)
// and Laurent polynomials in z^{1/r} over it.

#include <gmpxx.h>

#include <map>
#include <string>
#include <tuple>

namespace twloop {

using Rat = mpq_class;

// a + b*xi.  For r <= 2 the b slot is always zero and xi is +1 or -1.
class Cyc {
 public:
  Cyc() = default;
  explicit Cyc(int r);
  Cyc(int r, const Rat& a, const Rat& b = 0);
  Cyc(int r, long a) : Cyc(r, Rat(a)) {}

  static Cyc xi(int r);
  static Cyc xi_pow(int r, long n);

  int r() const { return r_; }
  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  // positive in the sense of the leading nonzero component
  bool is_positive() const;

  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator-() const;
  Cyc operator*(const Cyc& o) const;
  Cyc operator/(const Cyc& o) const { return *this * o.inv(); }
  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
  Cyc inv() const;
  Cyc pow(long n) const;

  // xi -> xi^{-1}
  Cyc omega_bar() const;

  bool operator==(const Cyc& o) const { return r_ == o.r_ && a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const Cyc& o) const { return !(*this == o); }
  bool operator<(const Cyc& o) const {
    return std::tie(a_, b_) < std::tie(o.a_, o.b_);
  }

  std::string str() const;

 private:
  void check(const Cyc& o) const;
  int r_ = 1;
  Rat a_ = 0;
  Rat b_ = 0;
};

// sum of c_n z^{n/r}
class Laurent {
 public:
  using Terms = std::map<int, Cyc>;

  Laurent() = default;
  explicit Laurent(int r) : r_(r) {}
  Laurent(const Cyc& c);
  static Laurent constant(int r, const Rat& q);
  static Laurent monomial(const Cyc& c, int n);
  static Laurent zmono(int r, int n) { return monomial(Cyc(r, 1), n); }

  int r() const { return r_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  Cyc coeff(int n) const;
  void add_term(int n, const Cyc& c);

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator*(const Cyc& c) const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  // multiply by z^{k/r}
  Laurent shift(int k) const;
  Laurent pow(long n) const;  // negative n requires a unit

  Laurent sigma_prime() const;
  Laurent sigma_prime(int times) const;
  Laurent omega_prime() const;

  bool is_unit() const { return terms_.size() == 1; }
  Laurent inv_unit() const;
  bool is_gamma_fixed() const;
  // sigma'(s) = -s
  bool is_sigma_odd() const { return sigma_prime() == -*this; }
  bool has_rational_coeffs() const;

  // max exponent, min exponent, spread; all zero for s = 0
  int deg_max() const;
  int deg_min() const;
  int spread() const { return deg_max() - deg_min(); }

  bool operator==(const Laurent& o) const { return r_ == o.r_ && terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void check(const Laurent& o) const;
  int r_ = 1;
  Terms terms_;
};

struct DegStats {
  int M = 0;
  int m = 0;
  int k = 0;
  bool operator==(const DegStats&) const = default;
};

DegStats deg_stats(const Laurent& s);

}  // namespace twloop
