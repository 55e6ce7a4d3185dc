#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "mubtomo/ent.hpp"
#include "mubtomo/gates.hpp"
#include "mubtomo/rng.hpp"

using namespace mubtomo;
using cxla::Cx;
using cxla::CVec;
using cxla::Matrix;
using ent::EntClass;

namespace {

CVec kron_vec(const CVec& a, const CVec& b) {
  CVec out(a.size() * b.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

CVec max_entangled9() {
  CVec v(9);
  const double amp = 1.0 / std::sqrt(3.0);
  v[0] = amp;  // |00>
  v[4] = amp;  // |11>
  v[8] = amp;  // |22>
  return v;
}

}  // namespace

TEST_SUITE_BEGIN("ent");

TEST_CASE("schmidt_rank on known states") {
  const double amp = 1.0 / std::sqrt(3.0);
  const CVec plus{amp, amp, amp};
  const CVec zero{1, 0, 0};

  CHECK(ent::schmidt_rank(kron_vec(zero, plus), 3, 3) == 1);
  CHECK(ent::schmidt_rank(max_entangled9(), 3, 3) == 3);

  CVec two(9);
  two[0] = std::sqrt(0.5);  // |00>
  two[4] = std::sqrt(0.5);  // |11>
  CHECK(ent::schmidt_rank(two, 3, 3) == 2);

  CHECK_THROWS_AS(ent::schmidt_rank(zero, 3, 3), std::invalid_argument);
}

TEST_CASE("schmidt_rank is invariant under local unitaries") {
  rng::Rng rng(13);
  auto random_local = [&] {
    Matrix g(3, 3);
    for (auto& e : g.data()) e = rng.normal_complex();
    return cxla::hermitian_eig(
               cxla::scale(0.5, cxla::add(g, cxla::dagger(g))))
        .vectors;
  };
  for (const CVec& v : {max_entangled9(), kron_vec({1, 0, 0}, {0, 1, 0})}) {
    const int rank = ent::schmidt_rank(v, 3, 3);
    for (int trial = 0; trial < 5; ++trial) {
      const auto u = cxla::kron(random_local(), random_local());
      CHECK(ent::schmidt_rank(cxla::apply(u, v), 3, 3) == rank);
    }
  }
}

TEST_CASE("classify_vector over two and three qutrits") {
  const CVec zero{1, 0, 0};

  const auto c2 = ent::classify_vector(max_entangled9(), 2);
  CHECK(c2.cls == EntClass::genuinely_entangled);
  CHECK(c2.schmidt_ranks == std::vector<int>{3});

  const auto sep3 = ent::classify_vector(kron_vec(kron_vec(zero, zero), zero), 3);
  CHECK(sep3.cls == EntClass::fully_separable);
  CHECK(sep3.schmidt_ranks == std::vector<int>{1, 1, 1});

  // (|00>+|11>+|22>)/sqrt3 on qutrits 1,2 with qutrit 3 split off
  const auto bi = ent::classify_vector(kron_vec(max_entangled9(), zero), 3);
  CHECK(bi.cls == EntClass::biseparable);
  CHECK(bi.biseparable_partition == 3);
  CHECK(bi.schmidt_ranks == std::vector<int>{3, 3, 1});

  CVec ghz(27);
  ghz[0] = ghz[13] = ghz[26] = 1.0 / std::sqrt(3.0);  // |000>+|111>+|222>
  const auto g = ent::classify_vector(ghz, 3);
  CHECK(g.cls == EntClass::genuinely_entangled);
  for (int r : g.schmidt_ranks) CHECK(r == 3);

  CHECK_THROWS_AS(ent::classify_vector(zero, 1), std::invalid_argument);
}

TEST_CASE("two-qutrit field set has structure (4,6)") {
  const auto set = mub::build_field_mubs(gf::FieldSpec::gf(9));
  const auto c = ent::census(set);
  CHECK(c.separable == 4);
  CHECK(c.biseparable == 0);
  CHECK(c.genuinely_entangled == 6);
  CHECK(c.per_basis.size() == 10);
  for (const auto& b : c.per_basis) CHECK(b.uniform);
}

TEST_CASE("table II set: entangled bases are exactly the rows with X gates") {
  const auto& table = gates::builtin_table(2);
  const auto set =
      gates::table_mub_set(table, gates::Convention::left_applied_first);
  const auto c = ent::census(set);
  CHECK(c.separable == 4);
  CHECK(c.biseparable == 0);
  CHECK(c.genuinely_entangled == 6);

  for (const auto& bc : c.per_basis) {
    if (bc.label == "1") {
      CHECK(bc.cls == EntClass::fully_separable);
      continue;
    }
    const auto row = std::find_if(table.rows.begin(), table.rows.end(),
                                  [&](const auto& r) { return r.label == bc.label; });
    REQUIRE(row != table.rows.end());
    const bool has_x = row->word.find('X') != std::string::npos;
    CHECK(bc.cls == (has_x ? EntClass::genuinely_entangled
                           : EntClass::fully_separable));
  }
}

TEST_CASE("product words classify fully separable") {
  for (const char* text : {"F1^-1 F2^-1 F3^-1", "F1^-1 R1 F3^-1", "R2 F2^-1"}) {
    const auto basis = gates::basis_from_word(
        text, gates::parse_word(text, 3), gates::Convention::left_applied_first);
    for (int k = 0; k < basis.dim; ++k)
      CHECK(ent::classify_vector(basis.vectors.col(k), 3).cls ==
            EntClass::fully_separable);
  }
}

TEST_CASE("table III census is (0,12,16); adding the computational basis gives (1,12,16)") {
  const auto set = gates::table_mub_set(gates::builtin_table(3),
                                        gates::Convention::left_applied_first);
  const auto c = ent::census(set);
  CHECK(c.separable == 0);
  CHECK(c.biseparable == 12);
  CHECK(c.genuinely_entangled == 16);
  for (const auto& b : c.per_basis) CHECK(b.uniform);

  auto with_std = set.bases;
  with_std.insert(with_std.begin(), mub::standard_basis(27, "std"));
  const auto cs = ent::census(with_std, 3);
  CHECK(cs.separable == 1);
  CHECK(cs.biseparable == 12);
  CHECK(cs.genuinely_entangled == 16);
}

TEST_CASE("three-qutrit field set census") {
  const auto set = mub::build_field_mubs(gf::FieldSpec::gf(27));
  const auto c = ent::census(set);
  CHECK(c.separable == 2);
  CHECK(c.biseparable == 6);
  CHECK(c.genuinely_entangled == 20);
  // counts sum to the number of bases
  CHECK(c.separable + c.biseparable + c.genuinely_entangled == 28);
}

TEST_CASE("census counts are invariant under basis order") {
  const auto set = mub::build_field_mubs(gf::FieldSpec::gf(9));
  auto shuffled = set.bases;
  std::rotate(shuffled.begin(), shuffled.begin() + 3, shuffled.end());
  std::swap(shuffled[0], shuffled[5]);
  const auto a = ent::census(set.bases, 2);
  const auto b = ent::census(shuffled, 2);
  CHECK(a.separable == b.separable);
  CHECK(a.biseparable == b.biseparable);
  CHECK(a.genuinely_entangled == b.genuinely_entangled);
}

TEST_CASE("classification is definitionally consistent at n=3") {
  const auto set = gates::table_mub_set(gates::builtin_table(3),
                                        gates::Convention::left_applied_first);
  for (const auto& basis : set.bases)
    for (int k = 0; k < basis.dim; ++k) {
      const auto vc = ent::classify_vector(basis.vectors.col(k), 3);
      const int ones = static_cast<int>(
          std::count(vc.schmidt_ranks.begin(), vc.schmidt_ranks.end(), 1));
      if (vc.cls == EntClass::fully_separable) CHECK(ones == 3);
      if (vc.cls == EntClass::genuinely_entangled) CHECK(ones == 0);
      if (vc.cls == EntClass::biseparable) {
        CHECK(ones == 1);
        CHECK(vc.schmidt_ranks[vc.biseparable_partition - 1] == 1);
      }
    }
}

TEST_CASE("census rejects single qutrits") {
  const auto set = mub::build_field_mubs(gf::FieldSpec::gf(3));
  CHECK_THROWS_AS(ent::census(set), std::invalid_argument);
}

TEST_SUITE_END();
