#include "mubtomo/gf.hpp"

#include <stdexcept>

namespace mubtomo::gf {

namespace {

int degree_of_order(int order) {
  switch (order) {
    case 3: return 1;
    case 9: return 2;
    case 27: return 3;
    default:
      throw std::invalid_argument("gf: order must be one of 3, 9, 27");
  }
}

int eval_mod3(const std::vector<int>& poly, int x) {
  int acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = (acc * x + *it) % 3;
  return acc;
}

}  // namespace

std::string to_string(const FieldElement& e) {
  static const char* pow_names[3] = {"", "t", "t^2"};
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (e.c[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || e.c[i] != 1) s += std::to_string(e.c[i]);
    s += pow_names[i];
  }
  return s.empty() ? "0" : s;
}

FieldSpec::FieldSpec(int order, std::vector<int> modulus,
                     std::vector<FieldElement> enumeration)
    : order_(order),
      degree_(degree_of_order(order)),
      modulus_(std::move(modulus)),
      enumeration_(std::move(enumeration)) {
  if (static_cast<int>(modulus_.size()) != degree_ + 1 || modulus_.back() != 1)
    throw std::invalid_argument("gf: modulus must be monic of degree n");
  for (int c : modulus_)
    if (c < 0 || c > 2)
      throw std::invalid_argument("gf: modulus coefficients must lie in {0,1,2}");
  // Degree 1 is always irreducible; degrees 2 and 3 are irreducible exactly
  // when there is no root in GF(3).
  if (degree_ >= 2) {
    for (int x = 0; x < 3; ++x)
      if (eval_mod3(modulus_, x) == 0)
        throw std::invalid_argument("gf: modulus is reducible over GF(3)");
  }
  if (static_cast<int>(enumeration_.size()) != order_)
    throw std::invalid_argument("gf: enumeration must list every element once");
  if (!enumeration_.front().is_zero())
    throw std::invalid_argument("gf: enumeration must start with zero");
  for (int i = 0; i < order_; ++i) {
    require_member(enumeration_[i]);
    for (int j = i + 1; j < order_; ++j)
      if (enumeration_[i] == enumeration_[j])
        throw std::invalid_argument("gf: enumeration has duplicate elements");
  }
}

const FieldSpec& FieldSpec::gf(int order) {
  static const FieldSpec gf3{3, {0, 1}, [] {
                               std::vector<FieldElement> e;
                               for (int c0 = 0; c0 < 3; ++c0)
                                 e.push_back({{c0, 0, 0}, 3});
                               return e;
                             }()};
  // t^2 + t + 2, elements ordered {0, a, 2a, 1, 1+a, 1+2a, 2, 2+a, 2+2a}
  static const FieldSpec gf9{9, {2, 1, 1}, [] {
                               std::vector<FieldElement> e;
                               for (int c0 = 0; c0 < 3; ++c0)
                                 for (int c1 = 0; c1 < 3; ++c1)
                                   e.push_back({{c0, c1, 0}, 9});
                               return e;
                             }()};
  // t^3 + 2t + 1, coefficient triples lexicographic on (c2, c1, c0)
  static const FieldSpec gf27{27, {1, 2, 0, 1}, [] {
                                std::vector<FieldElement> e;
                                for (int c2 = 0; c2 < 3; ++c2)
                                  for (int c1 = 0; c1 < 3; ++c1)
                                    for (int c0 = 0; c0 < 3; ++c0)
                                      e.push_back({{c0, c1, c2}, 27});
                                return e;
                              }()};
  switch (order) {
    case 3: return gf3;
    case 9: return gf9;
    case 27: return gf27;
    default:
      throw std::invalid_argument("gf: order must be one of 3, 9, 27");
  }
}

void FieldSpec::require_member(const FieldElement& a) const {
  if (a.order != order_)
    throw std::invalid_argument("gf: mixed-field operands");
  for (int i = 0; i < 3; ++i) {
    if (a.c[i] < 0 || a.c[i] > 2)
      throw std::invalid_argument("gf: coefficient outside {0,1,2}");
    if (i >= degree_ && a.c[i] != 0)
      throw std::invalid_argument("gf: coefficient above field degree");
  }
}

int FieldSpec::index_of(const FieldElement& e) const {
  require_member(e);
  for (int i = 0; i < order_; ++i)
    if (enumeration_[i] == e) return i;
  throw std::invalid_argument("gf: element not in enumeration");
}

FieldElement FieldSpec::from_coeffs(std::array<int, 3> coeffs) const {
  FieldElement e{{coeffs[0] % 3, coeffs[1] % 3, coeffs[2] % 3}, order_};
  require_member(e);
  return e;
}

FieldElement FieldSpec::add(const FieldElement& a, const FieldElement& b) const {
  require_member(a);
  require_member(b);
  FieldElement out{{}, order_};
  for (int i = 0; i < 3; ++i) out.c[i] = (a.c[i] + b.c[i]) % 3;
  return out;
}

FieldElement FieldSpec::neg(const FieldElement& a) const {
  require_member(a);
  FieldElement out{{}, order_};
  for (int i = 0; i < 3; ++i) out.c[i] = (3 - a.c[i]) % 3;
  return out;
}

FieldElement FieldSpec::mul(const FieldElement& a, const FieldElement& b) const {
  require_member(a);
  require_member(b);
  // schoolbook product, then fold high powers down with
  // t^n = -(m_0 + m_1 t + ... + m_{n-1} t^{n-1})
  std::array<int, 5> prod{};
  for (int i = 0; i < degree_; ++i)
    for (int j = 0; j < degree_; ++j)
      prod[i + j] = (prod[i + j] + a.c[i] * b.c[j]) % 3;
  for (int k = 2 * degree_ - 2; k >= degree_; --k) {
    const int carry = prod[k];
    if (carry == 0) continue;
    prod[k] = 0;
    for (int i = 0; i < degree_; ++i)
      prod[k - degree_ + i] = (prod[k - degree_ + i] + (3 - modulus_[i]) * carry) % 3;
  }
  FieldElement out{{}, order_};
  for (int i = 0; i < degree_; ++i) out.c[i] = prod[i];
  return out;
}

int FieldSpec::trace(const FieldElement& a) const {
  require_member(a);
  FieldElement power = a;  // a^(3^k)
  FieldElement acc = a;
  for (int k = 1; k < degree_; ++k) {
    power = mul(mul(power, power), power);
    acc = add(acc, power);
  }
  if (acc.c[1] != 0 || acc.c[2] != 0)
    throw std::logic_error("gf: trace left the prime subfield");
  return acc.c[0];
}

}  // namespace mubtomo::gf
