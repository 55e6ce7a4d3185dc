#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

// Exact arithmetic in GF(3), GF(9) and GF(27), including the field trace
// used as the omega-exponent of the basis construction.
namespace mubtomo::gf {

// Element of GF(3^n) as polynomial coefficients over GF(3): c[0] + c[1]*t +
// c[2]*t^2. Coefficients above degree n-1 are zero.
struct FieldElement {
  std::array<int, 3> c{0, 0, 0};
  int order = 3;

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
  bool operator==(const FieldElement&) const = default;
};

std::string to_string(const FieldElement& e);

class FieldSpec {
 public:
  // order in {3, 9, 27}; modulus: monic polynomial over GF(3), coefficients
  // ascending, degree n; enumeration: all field elements in the index order
  // used for basis/vector/component labels, zero first.
  FieldSpec(int order, std::vector<int> modulus,
            std::vector<FieldElement> enumeration);

  // Canonical fields: GF(9) is built modulo t^2 + t + 2 with enumeration
  // {0, a, 2a, 1, 1+a, 1+2a, 2, 2+a, 2+2a}; GF(27) modulo t^3 + 2t + 1 with
  // the coefficient triples ordered lexicographically on (c2, c1, c0).
  static const FieldSpec& gf(int order);

  int order() const { return order_; }
  int degree() const { return degree_; }
  const std::vector<int>& modulus() const { return modulus_; }
  const std::vector<FieldElement>& enumeration() const { return enumeration_; }

  const FieldElement& element(int index) const { return enumeration_[index]; }
  int index_of(const FieldElement& e) const;

  FieldElement from_coeffs(std::array<int, 3> coeffs) const;
  FieldElement zero() const { return from_coeffs({0, 0, 0}); }
  FieldElement one() const { return from_coeffs({1, 0, 0}); }

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  // Tr(a) = a + a^3 (+ a^9); always lands in the prime subfield and is
  // returned as its integer label in {0, 1, 2}.
  int trace(const FieldElement& a) const;

  bool operator==(const FieldSpec&) const = default;

 private:
  void require_member(const FieldElement& a) const;

  int order_;
  int degree_;
  std::vector<int> modulus_;
  std::vector<FieldElement> enumeration_;
};

inline const std::vector<FieldElement>& enumerate(const FieldSpec& spec) {
  return spec.enumeration();
}

}  // namespace mubtomo::gf
