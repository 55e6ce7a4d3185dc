#include <doctest.h>

#include "mubtomo/ent.hpp"
#include "mubtomo/gates.hpp"
#include "mubtomo/tomo.hpp"

using namespace mubtomo;

// The OpenMP kernels must reproduce the serial reference bit for bit:
// per-item results go into preallocated slots and are folded in a fixed
// order, so scheduling cannot change any double.
TEST_SUITE_BEGIN("parallel");

TEST_CASE("unbiasedness scan: serial and parallel reports are identical") {
  const auto set = mub::build_field_mubs(gf::FieldSpec::gf(27));
  const auto serial = mub::verify_unbiased(set, tol::kEq, Exec::serial);
  const auto parallel = mub::verify_unbiased(set, tol::kEq, Exec::parallel);

  CHECK(serial.max_deviation == parallel.max_deviation);
  CHECK(serial.worst_i == parallel.worst_i);
  CHECK(serial.worst_j == parallel.worst_j);
  REQUIRE(serial.cross.size() == parallel.cross.size());
  for (size_t p = 0; p < serial.cross.size(); ++p) {
    CHECK(serial.cross[p].deviation == parallel.cross[p].deviation);
    CHECK(serial.cross[p].pass == parallel.cross[p].pass);
  }
  for (size_t p = 0; p < serial.self.size(); ++p)
    CHECK(serial.self[p].deviation == parallel.self[p].deviation);
}

TEST_CASE("table verification: serial and parallel agree on every verdict") {
  for (int id : {2, 3}) {
    const auto s = gates::verify_table(gates::builtin_table(id), std::nullopt,
                                       gates::PhaseVariant::standard, tol::kEq,
                                       Exec::serial);
    const auto p = gates::verify_table(gates::builtin_table(id), std::nullopt,
                                       gates::PhaseVariant::standard, tol::kEq,
                                       Exec::parallel);
    CHECK(s.pairs_passed == p.pairs_passed);
    CHECK(s.max_deviation == p.max_deviation);
    REQUIRE(s.per_row.size() == p.per_row.size());
    for (size_t r = 0; r < s.per_row.size(); ++r) {
      CHECK(s.per_row[r].unbiased_vs_all == p.per_row[r].unbiased_vs_all);
      CHECK(s.per_row[r].deviation == p.per_row[r].deviation);
      CHECK(s.per_row[r].worst_pair == p.per_row[r].worst_pair);
    }
  }
}

TEST_CASE("census: serial and parallel agree per basis") {
  const auto set = mub::build_field_mubs(gf::FieldSpec::gf(27));
  const auto s = ent::census(set.bases, 3, Exec::serial);
  const auto p = ent::census(set.bases, 3, Exec::parallel);
  CHECK(s.separable == p.separable);
  CHECK(s.biseparable == p.biseparable);
  CHECK(s.genuinely_entangled == p.genuinely_entangled);
  REQUIRE(s.per_basis.size() == p.per_basis.size());
  for (size_t b = 0; b < s.per_basis.size(); ++b) {
    CHECK(s.per_basis[b].cls == p.per_basis[b].cls);
    CHECK(s.per_basis[b].uniform == p.per_basis[b].uniform);
    CHECK(s.per_basis[b].ranks_summary == p.per_basis[b].ranks_summary);
  }
}

TEST_CASE("batched trials: identical errors regardless of policy") {
  const auto set = mub::build_field_mubs(gf::FieldSpec::gf(9));
  const auto s = tomo::batch_errors(set, 200, 16, 99, Exec::serial);
  const auto p = tomo::batch_errors(set, 200, 16, 99, Exec::parallel);
  CHECK(s == p);

  const auto rs = tomo::batch_error_ratios(set, 100, 10000, 8, 7, Exec::serial);
  const auto rp = tomo::batch_error_ratios(set, 100, 10000, 8, 7, Exec::parallel);
  CHECK(rs == rp);
}

TEST_SUITE_END();
