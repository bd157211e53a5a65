#pragma once

#include <cassert>
#include <cmath>
#include <complex>
#include <vector>

namespace cpl {

/// Truncated Taylor scalar: value plus coordinate partials up to `order` (<= 3)
/// in `dim` variables. Arithmetic propagates derivatives exactly, so component
/// functions written against Jet yield machine-precision jets of any derived
/// quantity. Mixed partials are stored fully and kept symmetric by
/// construction.
class Jet {
 public:
  Jet() = default;

  Jet(double v, int dim, int order) : v_(v), dim_(dim), order_(order) { alloc(); }

  static Jet constant(double v, int dim, int order) { return Jet(v, dim, order); }

  /// Coordinate seed: value v, d/dx_i = 1.
  static Jet variable(double v, int i, int dim, int order) {
    Jet j(v, dim, order);
    if (order >= 1) j.g_[i] = 1.0;
    return j;
  }

  int dim() const { return dim_; }
  int order() const { return order_; }
  double value() const { return v_; }
  double& value() { return v_; }

  double d1(int i) const { return order_ >= 1 ? g_[i] : 0.0; }
  double d2(int i, int j) const { return order_ >= 2 ? h_[i * dim_ + j] : 0.0; }
  double d3(int i, int j, int k) const {
    return order_ >= 3 ? t_[(i * dim_ + j) * dim_ + k] : 0.0;
  }

  double& d1ref(int i) { return g_[i]; }
  double& d2ref(int i, int j) { return h_[i * dim_ + j]; }
  double& d3ref(int i, int j, int k) { return t_[(i * dim_ + j) * dim_ + k]; }

  /// d/dx_i as a jet of one order lower.
  Jet extract_d(int i) const {
    assert(order_ >= 1);
    Jet r(d1(i), dim_, order_ - 1);
    if (r.order_ >= 1)
      for (int a = 0; a < dim_; ++a) r.g_[a] = d2(i, a);
    if (r.order_ >= 2)
      for (int a = 0; a < dim_; ++a)
        for (int b = 0; b < dim_; ++b) r.h_[a * dim_ + b] = d3(i, a, b);
    return r;
  }

  Jet truncate(int new_order) const {
    if (new_order >= order_) return *this;
    Jet r(v_, dim_, new_order);
    if (new_order >= 1) r.g_ = g_;
    if (new_order >= 2) r.h_ = h_;
    return r;
  }

  Jet operator-() const {
    Jet r = *this;
    r.v_ = -r.v_;
    for (auto& x : r.g_) x = -x;
    for (auto& x : r.h_) x = -x;
    for (auto& x : r.t_) x = -x;
    return r;
  }

  Jet& operator+=(const Jet& o) {
    match(o);
    v_ += o.v_;
    for (size_t i = 0; i < g_.size(); ++i) g_[i] += o.g_[i];
    for (size_t i = 0; i < h_.size(); ++i) h_[i] += o.h_[i];
    for (size_t i = 0; i < t_.size(); ++i) t_[i] += o.t_[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    match(o);
    v_ -= o.v_;
    for (size_t i = 0; i < g_.size(); ++i) g_[i] -= o.g_[i];
    for (size_t i = 0; i < h_.size(); ++i) h_[i] -= o.h_[i];
    for (size_t i = 0; i < t_.size(); ++i) t_[i] -= o.t_[i];
    return *this;
  }
  Jet& operator+=(double c) {
    v_ += c;
    return *this;
  }
  Jet& operator-=(double c) {
    v_ -= c;
    return *this;
  }
  Jet& operator*=(double c) {
    v_ *= c;
    for (auto& x : g_) x *= c;
    for (auto& x : h_) x *= c;
    for (auto& x : t_) x *= c;
    return *this;
  }
  Jet& operator/=(double c) { return (*this) *= (1.0 / c); }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator+(Jet a, double c) { return a += c; }
  friend Jet operator+(double c, Jet a) { return a += c; }
  friend Jet operator-(Jet a, double c) { return a -= c; }
  friend Jet operator-(double c, const Jet& a) { return (-a) += c; }
  friend Jet operator*(Jet a, double c) { return a *= c; }
  friend Jet operator*(double c, Jet a) { return a *= c; }
  friend Jet operator/(Jet a, double c) { return a /= c; }
  friend Jet operator/(double c, const Jet& a) { return Jet::constant(c, a.dim_, a.order_) / a; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    a.match(b);
    const int m = a.dim_;
    Jet r(a.v_ * b.v_, m, a.order_);
    if (r.order_ >= 1)
      for (int i = 0; i < m; ++i) r.g_[i] = a.v_ * b.g_[i] + b.v_ * a.g_[i];
    if (r.order_ >= 2)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          r.h_[i * m + j] = a.v_ * b.h_[i * m + j] + b.v_ * a.h_[i * m + j] +
                            a.g_[i] * b.g_[j] + a.g_[j] * b.g_[i];
    if (r.order_ >= 3)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          for (int k = 0; k < m; ++k)
            r.t_[(i * m + j) * m + k] =
                a.v_ * b.t_[(i * m + j) * m + k] + b.v_ * a.t_[(i * m + j) * m + k] +
                a.g_[i] * b.h_[j * m + k] + a.g_[j] * b.h_[i * m + k] +
                a.g_[k] * b.h_[i * m + j] + b.g_[i] * a.h_[j * m + k] +
                b.g_[j] * a.h_[i * m + k] + b.g_[k] * a.h_[i * m + j];
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) { return a * b.reciprocal(); }

  /// Chain rule for a scalar function with outer derivatives f0..f3 at value().
  Jet compose(double f0, double f1, double f2, double f3) const {
    const int m = dim_;
    Jet r(f0, m, order_);
    if (order_ >= 1)
      for (int i = 0; i < m; ++i) r.g_[i] = f1 * g_[i];
    if (order_ >= 2)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          r.h_[i * m + j] = f1 * h_[i * m + j] + f2 * g_[i] * g_[j];
    if (order_ >= 3)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          for (int k = 0; k < m; ++k)
            r.t_[(i * m + j) * m + k] =
                f1 * t_[(i * m + j) * m + k] +
                f2 * (g_[i] * h_[j * m + k] + g_[j] * h_[i * m + k] + g_[k] * h_[i * m + j]) +
                f3 * g_[i] * g_[j] * g_[k];
    return r;
  }

  Jet reciprocal() const {
    const double v = v_;
    return compose(1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v), -6.0 / (v * v * v * v));
  }

  bool finite() const {
    if (!std::isfinite(v_)) return false;
    for (double x : g_)
      if (!std::isfinite(x)) return false;
    for (double x : h_)
      if (!std::isfinite(x)) return false;
    for (double x : t_)
      if (!std::isfinite(x)) return false;
    return true;
  }

 private:
  void alloc() {
    if (order_ >= 1) g_.assign(dim_, 0.0);
    if (order_ >= 2) h_.assign(size_t(dim_) * dim_, 0.0);
    if (order_ >= 3) t_.assign(size_t(dim_) * dim_ * dim_, 0.0);
  }
  void match(const Jet& o) const {
    assert(dim_ == o.dim_ && order_ == o.order_);
    (void)o;
  }

  double v_ = 0.0;
  int dim_ = 0;
  int order_ = 0;
  std::vector<double> g_, h_, t_;
};

inline Jet sqrt(const Jet& a) {
  const double v = a.value(), s = std::sqrt(v);
  return a.compose(s, 0.5 / s, -0.25 / (s * v), 0.375 / (s * v * v));
}
inline Jet exp(const Jet& a) {
  const double e = std::exp(a.value());
  return a.compose(e, e, e, e);
}
inline Jet log(const Jet& a) {
  const double v = a.value();
  return a.compose(std::log(v), 1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
}
inline Jet sin(const Jet& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.compose(s, c, -s, -c);
}
inline Jet cos(const Jet& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.compose(c, -s, -c, s);
}
inline Jet pow(const Jet& a, int k) {
  if (k == 0) return Jet::constant(1.0, a.dim(), a.order());
  if (k < 0) return pow(a, -k).reciprocal();
  Jet r = a;
  for (int i = 1; i < k; ++i) r = r * a;
  return r;
}
inline Jet pow(const Jet& a, double p) {
  const double v = a.value();
  return a.compose(std::pow(v, p), p * std::pow(v, p - 1), p * (p - 1) * std::pow(v, p - 2),
                   p * (p - 1) * (p - 2) * std::pow(v, p - 3));
}

/// Complex scalar over the jet ring; enough for characteristic polynomial work.
struct CJet {
  Jet re, im;

  CJet() = default;
  CJet(Jet r, Jet i) : re(std::move(r)), im(std::move(i)) {}
  static CJet constant(std::complex<double> z, int dim, int order) {
    return CJet(Jet::constant(z.real(), dim, order), Jet::constant(z.imag(), dim, order));
  }

  std::complex<double> value() const { return {re.value(), im.value()}; }

  friend CJet operator+(const CJet& a, const CJet& b) { return {a.re + b.re, a.im + b.im}; }
  friend CJet operator-(const CJet& a, const CJet& b) { return {a.re - b.re, a.im - b.im}; }
  friend CJet operator*(const CJet& a, const CJet& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CJet operator*(const CJet& a, double c) { return {a.re * c, a.im * c}; }
  CJet conj() const { return {re, -im}; }
};

}  // namespace cpl
