#pragma once

#include <map>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "groups.hpp"

namespace noncomm {

// Element of the group algebra of a cyclic group of order m over Q(zeta_m):
// coefficient of g^j at position j, multiplication by convolution mod g^m = 1.
class CyclicAlgebraElement {
 public:
  explicit CyclicAlgebraElement(int m)
      : m_(m), c_(static_cast<std::size_t>(m), CycloNum(Rational(0), m)) {
    if (m < 1) throw RangeError("cyclic group order must be positive");
  }

  static CyclicAlgebraElement identity(int m) {
    CyclicAlgebraElement e(m);
    e.c_[0] = CycloNum(Rational(1), m);
    return e;
  }

  static CyclicAlgebraElement generator_power(int m, long j, const CycloNum& coef) {
    CyclicAlgebraElement e(m);
    e.c_[static_cast<std::size_t>(((j % m) + m) % m)] = coef;
    return e;
  }

  int order() const { return m_; }
  const std::vector<CycloNum>& coeffs() const { return c_; }
  const CycloNum& coeff(int j) const { return c_.at(static_cast<std::size_t>(j)); }
  void set_coeff(int j, const CycloNum& v) { c_.at(static_cast<std::size_t>(j)) = v; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend CyclicAlgebraElement operator+(const CyclicAlgebraElement& a,
                                        const CyclicAlgebraElement& b) {
    a.check_order(b);
    CyclicAlgebraElement out = a;
    for (int j = 0; j < a.m_; ++j)
      out.c_[static_cast<std::size_t>(j)] += b.c_[static_cast<std::size_t>(j)];
    return out;
  }

  friend CyclicAlgebraElement operator-(const CyclicAlgebraElement& a,
                                        const CyclicAlgebraElement& b) {
    a.check_order(b);
    CyclicAlgebraElement out = a;
    for (int j = 0; j < a.m_; ++j)
      out.c_[static_cast<std::size_t>(j)] -= b.c_[static_cast<std::size_t>(j)];
    return out;
  }

  friend CyclicAlgebraElement operator*(const CyclicAlgebraElement& a,
                                        const CyclicAlgebraElement& b) {
    a.check_order(b);
    CyclicAlgebraElement out(a.m_);
    for (int i = 0; i < a.m_; ++i) {
      if (a.c_[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 0; j < a.m_; ++j) {
        const int k = (i + j) % a.m_;
        out.c_[static_cast<std::size_t>(k)] +=
            a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
      }
    }
    return out;
  }

  friend CyclicAlgebraElement operator*(const CycloNum& s, const CyclicAlgebraElement& a) {
    CyclicAlgebraElement out = a;
    for (auto& x : out.c_) x = s * x;
    return out;
  }

  friend bool operator==(const CyclicAlgebraElement& a, const CyclicAlgebraElement& b) {
    return a.m_ == b.m_ && a.c_ == b.c_;
  }
  friend bool operator!=(const CyclicAlgebraElement& a, const CyclicAlgebraElement& b) {
    return !(a == b);
  }

 private:
  void check_order(const CyclicAlgebraElement& o) const {
    if (m_ != o.m_) throw ShapeError("cyclic group orders differ");
  }

  int m_;
  std::vector<CycloNum> c_;
};

// The character projectors e_i = (1/m) sum_j zeta_m^{-ij} g^j of a cyclic
// reflection stabilizer whose generator has determinant zeta_m. Construction
// certifies e_i e_j = delta_ij e_i and sum_i e_i = 1.
inline std::vector<CyclicAlgebraElement> idempotents(int m) {
  if (m < 2 || m > 24) throw RangeError("idempotent order must be in [2, 24]");
  std::vector<CyclicAlgebraElement> es;
  es.reserve(static_cast<std::size_t>(m));
  const CycloNum inv_m(Rational(1, m), m);
  for (int i = 0; i < m; ++i) {
    CyclicAlgebraElement e(m);
    for (int j = 0; j < m; ++j)
      e.set_coeff(j, inv_m * CycloNum::zeta(m, -static_cast<long>(i) * j));
    es.push_back(std::move(e));
  }
  const CyclicAlgebraElement zero(m);
  CyclicAlgebraElement total(m);
  for (int i = 0; i < m; ++i) {
    total = total + es[static_cast<std::size_t>(i)];
    for (int j = 0; j < m; ++j) {
      const auto prod = es[static_cast<std::size_t>(i)] * es[static_cast<std::size_t>(j)];
      const auto& expect = (i == j) ? es[static_cast<std::size_t>(i)] : zero;
      if (prod != expect)
        throw CertificationError("idempotent orthogonality failed at (" + std::to_string(i) +
                                 ", " + std::to_string(j) + ")");
    }
  }
  if (total != CyclicAlgebraElement::identity(m))
    throw CertificationError("idempotent completeness failed");
  return es;
}

// Group algebra of an enumerated reflection group over Q, as a sparse map.
using ReflectionAlgebraElement = std::map<GroupElement, Rational>;

inline ReflectionAlgebraElement convolve(const ReflectionAlgebraElement& a,
                                         const ReflectionAlgebraElement& b) {
  ReflectionAlgebraElement out;
  for (const auto& [g, cg] : a)
    for (const auto& [h, ch] : b) {
      const Rational c = cg * ch;
      auto [it, fresh] = out.emplace(compose(g, h), c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

// |W|^{-1} sum_w w, certified idempotent by convolution over the whole group
// and absorbed by every element.
inline ReflectionAlgebraElement symmetrizer(const GroupSpec& spec) {
  const auto elements = enumerate_group(spec, Action::Linear);
  const Rational share(1, static_cast<long>(elements.size()));
  ReflectionAlgebraElement e;
  for (const auto& w : elements) e.emplace(w, share);
  if (convolve(e, e) != e) throw CertificationError("symmetrizer is not idempotent");
  for (const auto& w : elements) {
    ReflectionAlgebraElement left{{w, Rational(1)}};
    if (convolve(left, e) != e)
      throw CertificationError("symmetrizer not absorbed", w.to_string());
  }
  return e;
}

}  // namespace noncomm
