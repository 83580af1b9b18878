#include "neumann/gl2.hpp"

#include <utility>

#include "neumann/errors.hpp"

namespace neumann {

namespace {

std::strong_ordering cmp_order(const Integer& x, const Integer& y) {
  const int r = cmp(x, y);
  if (r < 0) return std::strong_ordering::less;
  if (r > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Integer abs_value(const Integer& x) { return abs(x); }

}  // namespace

Integer to_integer(std::int64_t n) { return Integer(static_cast<long>(n)); }

int compare(const Integer& x, const Integer& y) { return cmp(x, y); }

IntMat2::IntMat2(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const Integer det = a_ * d_ - b_ * c_;
  if (det == 1) {
    det_ = 1;
  } else if (det == -1) {
    det_ = -1;
  } else {
    throw NotUnimodular("determinant " + det.get_str() + " is not +-1");
  }
}

IntMat2::IntMat2(Unchecked, Integer a, Integer b, Integer c, Integer d,
                 int det)
    : a_(std::move(a)),
      b_(std::move(b)),
      c_(std::move(c)),
      d_(std::move(d)),
      det_(det) {}

IntMat2 IntMat2::identity() { return {Unchecked{}, 1, 0, 0, 1, 1}; }

IntMat2 IntMat2::operator*(const IntMat2& rhs) const {
  return {Unchecked{},
          Integer(a_ * rhs.a_ + b_ * rhs.c_),
          Integer(a_ * rhs.b_ + b_ * rhs.d_),
          Integer(c_ * rhs.a_ + d_ * rhs.c_),
          Integer(c_ * rhs.b_ + d_ * rhs.d_),
          det_ * rhs.det_};
}

IntMat2 IntMat2::operator-() const {
  return {Unchecked{}, Integer(-a_), Integer(-b_), Integer(-c_), Integer(-d_),
          det_};
}

IntMat2 IntMat2::inverse() const {
  // adj(A) / det(A)
  if (det_ == 1) return {Unchecked{}, d_, Integer(-b_), Integer(-c_), a_, 1};
  return {Unchecked{}, Integer(-d_), b_, c_, Integer(-a_), -1};
}

IntMat2 IntMat2::scaled(int sign) const { return sign < 0 ? -*this : *this; }

bool IntMat2::is_identity() const {
  return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1;
}

bool IntMat2::is_minus_identity() const {
  return a_ == -1 && b_ == 0 && c_ == 0 && d_ == -1;
}

bool IntMat2::operator==(const IntMat2& rhs) const {
  return a_ == rhs.a_ && b_ == rhs.b_ && c_ == rhs.c_ && d_ == rhs.d_;
}

std::strong_ordering IntMat2::operator<=>(const IntMat2& rhs) const {
  if (auto r = cmp_order(a_, rhs.a_); r != 0) return r;
  if (auto r = cmp_order(b_, rhs.b_); r != 0) return r;
  if (auto r = cmp_order(c_, rhs.c_); r != 0) return r;
  return cmp_order(d_, rhs.d_);
}

IntMat2 mat(const Integer& a, const Integer& b, const Integer& c,
            const Integer& d) {
  return IntMat2(a, b, c, d);
}

PVertex::PVertex(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
  if (g != 1) {
    throw NotCoprime("(" + p_.get_str() + ", " + q_.get_str() +
                     ") is not a coprime pair");
  }
  if (sgn(q_) < 0 || (q_ == 0 && sgn(p_) < 0)) {
    p_ = -p_;
    q_ = -q_;
  }
}

PVertex PVertex::infinity() { return {1, 0}; }

Integer PVertex::height() const {
  Integer ap = abs_value(p_), aq = abs_value(q_);
  return ap > aq ? ap : aq;
}

std::string PVertex::label(bool infinity_symbol) const {
  if (infinity_symbol && is_infinity()) return "∞";
  return p_.get_str() + "/" + q_.get_str();
}

bool PVertex::operator==(const PVertex& rhs) const {
  return p_ == rhs.p_ && q_ == rhs.q_;
}

std::strong_ordering PVertex::operator<=>(const PVertex& rhs) const {
  if (auto r = cmp_order(q_, rhs.q_); r != 0) return r;
  return cmp_order(p_, rhs.p_);
}

namespace {

IntMat2 canonical(const IntMat2& m) {
  const int sc = sgn(m.c());
  if (sc > 0 || (sc == 0 && sgn(m.a()) > 0)) return m;
  return -m;
}

}  // namespace

ProjMat2::ProjMat2(const IntMat2& m) : rep_(canonical(m)) {}

ProjMat2 ProjMat2::identity() { return ProjMat2(IntMat2::identity()); }

PVertex ProjMat2::column() const { return PVertex(rep_.a(), rep_.c()); }

Integer ProjMat2::height() const {
  Integer h = abs_value(rep_.a());
  for (const Integer* x : {&rep_.b(), &rep_.c(), &rep_.d()}) {
    Integer ax = abs_value(*x);
    if (ax > h) h = ax;
  }
  return h;
}

ProjMat2 compose(const ProjMat2& x, const ProjMat2& y) {
  return ProjMat2(x.rep() * y.rep());
}

ProjMat2 invert(const ProjMat2& x) { return ProjMat2(x.rep().inverse()); }

ProjMat2 power(const ProjMat2& x, std::int64_t n) {
  IntMat2 base = n < 0 ? x.rep().inverse() : x.rep();
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1
                          : static_cast<std::uint64_t>(n);
  IntMat2 result = IntMat2::identity();
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return ProjMat2(result);
}

PVertex act(const ProjMat2& x, const PVertex& v) {
  const IntMat2& m = x.rep();
  return PVertex(Integer(m.a() * v.p() + m.b() * v.q()),
                 Integer(m.c() * v.p() + m.d() * v.q()));
}

bool adjacent(const PVertex& u, const PVertex& v) {
  const Integer cross = u.p() * v.q() - u.q() * v.p();
  return cross == 1 || cross == -1;
}

ProjMat2 base_generator(BaseGenerator g) {
  switch (g) {
    case BaseGenerator::Tau:
      return ProjMat2(mat(1, 1, 0, 1));
    case BaseGenerator::Omega:
      return ProjMat2(mat(0, -1, 1, 0));
    case BaseGenerator::Nu:
      return ProjMat2(mat(-1, 0, 0, 1));
  }
  return ProjMat2::identity();
}

std::ostream& operator<<(std::ostream& os, const IntMat2& m) {
  return os << "[[" << m.a() << ", " << m.b() << "], [" << m.c() << ", "
            << m.d() << "]]";
}

std::ostream& operator<<(std::ostream& os, const ProjMat2& m) {
  return os << "±" << m.rep();
}

std::ostream& operator<<(std::ostream& os, const PVertex& v) {
  return os << "(" << v.p() << ", " << v.q() << ")";
}

}  // namespace neumann
