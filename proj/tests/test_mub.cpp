#include <doctest.h>

#include <cmath>

#include "mubtomo/io.hpp"
#include "mubtomo/mub.hpp"

using namespace mubtomo;
using cxla::Cx;
using cxla::Matrix;
using cxla::kOmega;

namespace {

constexpr double kAmp3 = 0.57735026918962576451;  // 1/sqrt(3)

// The three single-qutrit bases beyond the computational one, as exact
// omega-exponent grids (basis -> vector -> component exponent).
mub::Basis fixture_basis(const char* label, const int exponents[3][3]) {
  Matrix m(3, 3);
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) m(l, k) = kAmp3 * kOmega[exponents[k][l]];
  return mub::Basis{label, 3, m, mub::Provenance::explicit_fixture};
}

std::vector<mub::Basis> single_qutrit_fixtures() {
  // B1: (1,1,1), (1,w,w*), (1,w*,w)
  static const int b1[3][3] = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
  // B2: (w,1,1), (1,w,1), (1,1,w)
  static const int b2[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  // B3: (w*,1,1), (1,w*,1), (1,1,w*)
  static const int b3[3][3] = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
  return {fixture_basis("B1", b1), fixture_basis("B2", b2), fixture_basis("B3", b3)};
}

}  // namespace

TEST_SUITE_BEGIN("mub");

TEST_CASE("d=3 construction has the expected first exponential basis") {
  const auto set = mub::build_field_mubs(gf::FieldSpec::gf(3));
  REQUIRE(set.bases.size() == 4);

  // basis "1" (r = 0): columns (1,1,1), (1,w,w*), (1,w*,w) over sqrt(3)
  const auto& b = set.bases[1];
  REQUIRE(b.label == "1");
  const int expected[3][3] = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      CHECK(std::abs(b.vectors(l, k) - kAmp3 * kOmega[expected[k][l]]) < 1e-15);
}

TEST_CASE("basis counts are d+1") {
  CHECK(mub::build_field_mubs(gf::FieldSpec::gf(3)).bases.size() == 4);
  CHECK(mub::build_field_mubs(gf::FieldSpec::gf(9)).bases.size() == 10);
  CHECK(mub::build_field_mubs(gf::FieldSpec::gf(27)).bases.size() == 28);
}

TEST_CASE("field-constructed sets verify unbiased") {
  for (int order : {3, 9, 27}) {
    const auto set = mub::build_field_mubs(gf::FieldSpec::gf(order));
    const auto report = mub::verify_unbiased(set);
    CHECK(report.all_pass);
    CHECK(report.max_deviation < 1e-12);
    CHECK(report.cross.size() ==
          set.bases.size() * (set.bases.size() - 1) / 2);
  }
}

TEST_CASE("a duplicated basis fails exactly on the duplicated pair") {
  auto set = mub::build_field_mubs(gf::FieldSpec::gf(3));
  set.bases.push_back(set.bases[0]);  // computational basis twice
  const auto report = mub::verify_unbiased(set);
  CHECK(!report.all_pass);
  int failing = 0;
  for (const auto& chk : report.cross)
    if (!chk.pass) {
      ++failing;
      CHECK(chk.i == 0);
      CHECK(chk.j == 4);
      CHECK(chk.deviation == doctest::Approx(1.0 - 1.0 / 3.0));
    }
  CHECK(failing == 1);
}

TEST_CASE("projectors") {
  const auto set = mub::build_field_mubs(gf::FieldSpec::gf(3));

  const auto std_proj = mub::projectors(set.bases[0]);
  REQUIRE(std_proj.size() == 3);
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(std_proj[k](i, j) == (i == k && j == k ? Cx{1.0, 0.0} : Cx{}));

  // uniform-amplitude basis: all projector diagonals are 1/3
  const auto proj1 = mub::projectors(set.bases[1]);
  for (const auto& p : proj1)
    for (int i = 0; i < 3; ++i)
      CHECK(p(i, i).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  // completeness at every order
  for (int order : {3, 9, 27}) {
    const auto s = mub::build_field_mubs(gf::FieldSpec::gf(order));
    for (const auto& basis : s.bases) {
      Matrix sum(order, order);
      for (const auto& p : mub::projectors(basis)) sum = cxla::add(sum, p);
      CHECK(cxla::frobenius_distance(sum, Matrix::identity(order)) < 1e-12);
    }
  }

  // non-orthonormal input is rejected
  mub::Basis bad{"bad", 3, Matrix(3, 3), mub::Provenance::explicit_fixture};
  bad.vectors(0, 0) = 1.0;
  bad.vectors(0, 1) = 1.0;
  bad.vectors(2, 2) = 1.0;
  CHECK_THROWS_AS(mub::projectors(bad), std::invalid_argument);
}

TEST_CASE("d=3 construction matches the explicit fixtures up to phase and permutation") {
  const auto set = mub::build_field_mubs(gf::FieldSpec::gf(3));
  const auto fixtures = single_qutrit_fixtures();

  std::vector<bool> fixture_used(fixtures.size(), false);
  for (int i = 1; i <= 3; ++i) {
    int hits = 0;
    for (size_t f = 0; f < fixtures.size(); ++f) {
      const auto match = mub::match_up_to_phase(set.bases[i], fixtures[f], 1e-12);
      if (match.matched) {
        ++hits;
        CHECK(!fixture_used[f]);
        fixture_used[f] = true;
        CHECK(match.deviation < 1e-12);
      }
    }
    CHECK(hits == 1);
  }
}

TEST_CASE("match_up_to_phase rejects genuinely different bases") {
  const auto set = mub::build_field_mubs(gf::FieldSpec::gf(3));
  CHECK(mub::match_up_to_phase(set.bases[0], set.bases[0]).matched);
  CHECK(!mub::match_up_to_phase(set.bases[0], set.bases[1]).matched);
  CHECK(!mub::match_up_to_phase(set.bases[1], set.bases[2]).matched);
}

TEST_CASE("construction is deterministic") {
  const auto a = mub::build_field_mubs(gf::FieldSpec::gf(9));
  const auto b = mub::build_field_mubs(gf::FieldSpec::gf(9));
  REQUIRE(a.bases.size() == b.bases.size());
  for (size_t i = 0; i < a.bases.size(); ++i) {
    CHECK(a.bases[i].label == b.bases[i].label);
    CHECK(a.bases[i].vectors == b.bases[i].vectors);  // bit-identical
  }
}

TEST_CASE("mub set file round-trips bit-exactly") {
  const auto set = mub::build_field_mubs(gf::FieldSpec::gf(9));
  const auto j = io::mub_set_to_json(set);
  const auto text = j.dump();
  const auto back = io::mub_set_from_json(io::json::parse(text));
  REQUIRE(back.dim == set.dim);
  REQUIRE(back.bases.size() == set.bases.size());
  for (size_t i = 0; i < set.bases.size(); ++i) {
    CHECK(back.bases[i].label == set.bases[i].label);
    CHECK(back.bases[i].vectors == set.bases[i].vectors);
  }
  REQUIRE(back.field.has_value());
  CHECK(back.field->order() == 9);
  CHECK(back.field->modulus() == std::vector<int>{2, 1, 1});
  CHECK(back.field->enumeration() == set.field->enumeration());
}

TEST_SUITE_END();
