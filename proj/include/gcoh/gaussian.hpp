#pragma once

// Exact complex numbers a + bi with a, b rational.

#include <gmpxx.h>

#include <ostream>
#include <string>

namespace gcoh {

struct GaussianRational {
  mpq_class re = 0, im = 0;

  GaussianRational() = default;
  GaussianRational(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }
  GaussianRational(long r) : re(r), im(0) {}

  GaussianRational conj() const { return {re, -im}; }
  /// |z|^2, always a nonnegative rational.
  mpq_class norm() const { return re * re + im * im; }
  bool is_real() const { return im == 0; }
  bool is_nonnegative_real() const { return im == 0 && re >= 0; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
  GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::string to_string() const { return re.get_str() + (im < 0 ? "-" : "+") + mpq_class(abs(im)).get_str() + "i"; }
  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }
};

}  // namespace gcoh
