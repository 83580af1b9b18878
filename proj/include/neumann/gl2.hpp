#pragma once

// Exact 2x2 unimodular integer matrices, their projective classes in
// PGL(2,Z), and the fractional-linear action on the projective line P(Z).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace neumann {

using Integer = mpz_class;

Integer to_integer(std::int64_t n);

int compare(const Integer& x, const Integer& y);

/// Row-major 2x2 integer matrix [[a, b], [c, d]] with determinant +1 or -1.
class IntMat2 {
 public:
  /// Throws NotUnimodular unless |ad - bc| = 1.
  IntMat2(Integer a, Integer b, Integer c, Integer d);

  static IntMat2 identity();

  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }
  const Integer& c() const noexcept { return c_; }
  const Integer& d() const noexcept { return d_; }

  int det() const noexcept { return det_; }

  IntMat2 operator*(const IntMat2& rhs) const;
  IntMat2 operator-() const;

  /// Exact inverse in GL(2,Z).
  IntMat2 inverse() const;

  /// Scalar multiple by +1 or -1.
  IntMat2 scaled(int sign) const;

  bool is_identity() const;
  bool is_minus_identity() const;
  bool is_scalar() const { return is_identity() || is_minus_identity(); }

  bool operator==(const IntMat2& rhs) const;
  std::strong_ordering operator<=>(const IntMat2& rhs) const;

 private:
  struct Unchecked {};
  IntMat2(Unchecked, Integer a, Integer b, Integer c, Integer d, int det);

  Integer a_, b_, c_, d_;
  int det_;
};

IntMat2 mat(const Integer& a, const Integer& b, const Integer& c,
            const Integer& d);

/// A coprime column (p, q) up to sign; a vertex of the distant graph.
/// Canonical sign: q > 0, or q = 0 and p > 0. (1, 0) is infinity.
class PVertex {
 public:
  /// Canonicalizes the sign. Throws NotCoprime if gcd(p, q) != 1.
  PVertex(Integer p, Integer q);

  static PVertex infinity();

  const Integer& p() const noexcept { return p_; }
  const Integer& q() const noexcept { return q_; }

  bool is_infinity() const { return q_ == 0; }

  /// max(|p|, |q|)
  Integer height() const;

  /// "p/q", or "∞" when requested for infinity.
  std::string label(bool infinity_symbol = false) const;

  bool operator==(const PVertex& rhs) const;
  /// Canonical order: by q, then by p. Infinity comes first.
  std::strong_ordering operator<=>(const PVertex& rhs) const;

 private:
  Integer p_, q_;
};

/// Projective class {A, -A} of a unimodular matrix, stored by its canonical
/// representative: c > 0, or c = 0 and a > 0.
class ProjMat2 {
 public:
  explicit ProjMat2(const IntMat2& m);

  static ProjMat2 identity();

  const IntMat2& rep() const noexcept { return rep_; }
  int det() const noexcept { return rep_.det(); }
  bool is_identity() const { return rep_.is_identity(); }

  /// First column of the representative, i.e. the image of infinity.
  PVertex column() const;

  /// max over |entries| of the representative.
  Integer height() const;

  bool operator==(const ProjMat2& rhs) const { return rep_ == rhs.rep_; }
  std::strong_ordering operator<=>(const ProjMat2& rhs) const {
    return rep_ <=> rhs.rep_;
  }

 private:
  IntMat2 rep_;
};

ProjMat2 compose(const ProjMat2& x, const ProjMat2& y);
ProjMat2 invert(const ProjMat2& x);
ProjMat2 power(const ProjMat2& x, std::int64_t n);
PVertex act(const ProjMat2& x, const PVertex& v);

/// Unit cross determinant |p1 q2 - q1 p2| = 1.
bool adjacent(const PVertex& u, const PVertex& v);

enum class BaseGenerator { Tau, Omega, Nu };

/// tau: z+1, omega: -1/z, nu: -z.
ProjMat2 base_generator(BaseGenerator g);

std::ostream& operator<<(std::ostream& os, const IntMat2& m);
std::ostream& operator<<(std::ostream& os, const ProjMat2& m);
std::ostream& operator<<(std::ostream& os, const PVertex& v);

}  // namespace neumann
