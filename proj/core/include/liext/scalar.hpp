#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace liext {

/// Exact rational number (GMP-backed).
using Rat = boost::multiprecision::mpq_rational;

enum class Mode { exact, approx };

/// Mode-tagged scalar. Both modes share one rational carrier: binary doubles
/// embed losslessly into Q, so an approx value is an exact rational whose
/// zero tests are tolerance-based instead of strict.
///
/// approx is contagious: any arithmetic involving an approx operand yields
/// an approx result.
class Scalar {
public:
  Scalar() : v_(0), mode_(Mode::exact) {}
  Scalar(int v) : v_(v), mode_(Mode::exact) {}
  Scalar(long v) : v_(v), mode_(Mode::exact) {}
  Scalar(Rat v) : v_(std::move(v)), mode_(Mode::exact) {}
  Scalar(Rat v, Mode m) : v_(std::move(v)), mode_(m) {}

  static Scalar exact(Rat v) { return Scalar(std::move(v), Mode::exact); }
  static Scalar approx(double v) { return Scalar(Rat(v), Mode::approx); }

  /// Parse "p/q" or a decimal integer literal (exact mode).
  static Scalar parse_rational(const std::string& s);

  const Rat& value() const { return v_; }
  Mode mode() const { return mode_; }
  bool is_exact() const { return mode_ == Mode::exact; }
  double to_double() const { return v_.convert_to<double>(); }

  /// Zero test: strict in exact mode, |v| <= tol in approx mode.
  bool is_zero(double tol = 0.0) const;

  /// "p/q" (or "p" for integers) in exact mode, shortest round-trip decimal otherwise.
  std::string str() const;

  Scalar operator-() const { return Scalar(-v_, mode_); }
  friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(a.v_ + b.v_, join(a, b)); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(a.v_ - b.v_, join(a, b)); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return Scalar(a.v_ * b.v_, join(a, b)); }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return Scalar(a.v_ / b.v_, join(a, b)); }
  Scalar& operator+=(const Scalar& b) { v_ += b.v_; mode_ = join(*this, b); return *this; }
  Scalar& operator-=(const Scalar& b) { v_ -= b.v_; mode_ = join(*this, b); return *this; }
  Scalar& operator*=(const Scalar& b) { v_ *= b.v_; mode_ = join(*this, b); return *this; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

private:
  static Mode join(const Scalar& a, const Scalar& b) {
    return (a.mode_ == Mode::approx || b.mode_ == Mode::approx) ? Mode::approx : Mode::exact;
  }
  Rat v_;
  Mode mode_;
};

/// Shortest decimal that round-trips the double (deterministic formatting).
std::string format_double(double v);

} // namespace liext
