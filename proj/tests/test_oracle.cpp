#include "doctest.h"

#include <random>

#include "nilorb/oracle.hpp"
#include "nilorb/verify.hpp"

using namespace nilorb;

TEST_CASE("exact rational matrix layer") {
  CMat a(2, 2);
  a(0, 0) = QI(1);
  a(0, 1) = QI(Rational(1), Rational(1, 2));  // 1 + (1/2)i
  a(1, 0) = QI(0, 1);
  a(1, 1) = QI(-3);
  CHECK(a.conj_transpose()(1, 0) == QI(Rational(1), Rational(-1, 2)));
  CHECK((a * CMat::identity(2)) == a);
  CHECK(qi_rank(a) == 2);
  CMat singular(2, 2);
  singular(0, 0) = QI(1);
  singular(0, 1) = QI(2);
  singular(1, 0) = QI(3);
  singular(1, 1) = QI(6);
  CHECK(qi_rank(singular) == 1);
}

TEST_CASE("hermitian inertia") {
  CMat g(3, 3);
  g(0, 0) = QI(2);
  g(1, 1) = QI(-5);
  g(2, 2) = QI(Rational(1, 3));
  auto in = hermitian_inertia(g);
  CHECK(in.positive == 2);
  CHECK(in.negative == 1);
  CHECK(in.zero == 0);

  // zero diagonal: hyperbolic plane has signature (1,1)
  CMat h(2, 2);
  h(0, 1) = QI(1);
  h(1, 0) = QI(1);
  in = hermitian_inertia(h);
  CHECK(in.positive == 1);
  CHECK(in.negative == 1);

  // i-antisymmetric off-diagonal Hermitian pair, again (1,1)
  CMat k(2, 2);
  k(0, 1) = QI(0, 1);
  k(1, 0) = QI(0, -1);
  in = hermitian_inertia(k);
  CHECK(in.positive == 1);
  CHECK(in.negative == 1);
}

TEST_CASE("standard representation satisfies the bracket relations") {
  for (int d = 1; d <= 8; ++d) CHECK_NOTHROW(require_bracket(standard_rep(d), "test"));
}

TEST_CASE("invariant form existence grid") {
  for (int d = 1; d <= 12; ++d) {
    const bool odd = d % 2 != 0;
    // over R: symmetric on odd-dimensional modules, alternating on even
    CHECK_NOTHROW(invariant_form_on_Sd(d, odd ? FormKind::Symmetric : FormKind::SkewSymmetric,
                                       Domain::R));
    CHECK_THROWS_AS(invariant_form_on_Sd(d, odd ? FormKind::SkewSymmetric : FormKind::Symmetric,
                                         Domain::R),
                    oracle_error);
    // over C: both bilinear kinds by parity, both sesquilinear kinds always
    CHECK_NOTHROW(invariant_form_on_Sd(d, FormKind::Hermitian, Domain::C));
    CHECK_NOTHROW(invariant_form_on_Sd(d, FormKind::SkewHermitian, Domain::C));
    // over H: Hermitian on odd, skew-Hermitian on even
    CHECK_NOTHROW(invariant_form_on_Sd(d, odd ? FormKind::Hermitian : FormKind::SkewHermitian,
                                       Domain::H));
    CHECK_THROWS_AS(invariant_form_on_Sd(d, odd ? FormKind::SkewHermitian : FormKind::Hermitian,
                                         Domain::H),
                    oracle_error);
    CHECK_THROWS_AS(invariant_form_on_Sd(d, FormKind::Symmetric, Domain::H), oracle_error);
  }
}

TEST_CASE("invariant forms are invariant and of the right symmetry") {
  for (int d = 1; d <= 6; ++d) {
    const auto t = standard_rep(d);
    const bool odd = d % 2 != 0;
    const auto g = invariant_form_on_Sd(d, odd ? FormKind::Symmetric : FormKind::SkewSymmetric,
                                        Domain::R);
    // bilinear invariance: X^T G + G X = 0 for X in the sl2 image
    for (const auto* x : {&t.e, &t.h, &t.f})
      CHECK((x->transpose() * g + g * (*x)).is_zero());
    if (odd) CHECK(g == g.transpose());
    else CHECK(g == QI(-1) * g.transpose());
  }
  // odd-dimensional symmetric forms normalize to signature +1
  for (int d : {1, 3, 5, 7}) {
    const auto g = invariant_form_on_Sd(d, FormKind::Symmetric, Domain::R);
    const auto in = hermitian_inertia(g);
    CHECK(in.positive - in.negative == 1);
  }
}

TEST_CASE("centralizer dimension against direct counts") {
  // so(2,1): regular orbit, centralizer of e is 1-dimensional
  auto model = build_model(so(2, 1), FinePartition(Partition::from_parts({3}),
                                                   FineFlavor::OddOnly, {{3, {1, 0}}}));
  CHECK(centralizer_dim(model, CentralizeSet::none()) == 3);
  CHECK(centralizer_dim(model, CentralizeSet::just_e()) == 1);
  CHECK(centralizer_dim(model, CentralizeSet::triple()) == 0);  // z(s) is the center

  // sl(2,H): the whole algebra has dim 15, the [2] orbit has dim 8
  auto hm = build_model(sl_h(2), Partition::from_parts({2}));
  CHECK(centralizer_dim(hm, CentralizeSet::none()) == 15);
  CHECK(centralizer_dim(hm, CentralizeSet::just_e()) == 7);

  // a centralizer basis really commutes with e
  const auto basis = centralizer_basis(model, CentralizeSet::just_e());
  CHECK(basis.size() == 1);
  for (const auto& x : basis) CHECK(commutator(x, model.rep_e).is_zero());
}

TEST_CASE("compactness oracle on known verdicts") {
  CHECK(compact_oracle(build_model(so(2, 1), FinePartition(Partition::from_parts({3}),
                                                           FineFlavor::OddOnly, {{3, {1, 0}}}))));
  CHECK_FALSE(compact_oracle(build_model(
      su(2, 2), FinePartition(Partition::from_parts({2, 2}), FineFlavor::All, {{2, {1, 1}}}))));
  CHECK(compact_oracle(build_model(
      su(2, 2), FinePartition(Partition::from_parts({2, 2}), FineFlavor::All, {{2, {2, 0}}}))));
  CHECK(compact_oracle(build_model(sp_h(1, 1), FinePartition(Partition::from_parts({2}),
                                                             FineFlavor::OddOnly, {}))));
  CHECK_FALSE(compact_oracle(build_model(sl_r(3), Partition::from_parts({2, 1}))));
}

TEST_CASE("cayley transform round trips exactly") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = 2 + trial % 4;
    const auto n = static_cast<std::size_t>(d);
    auto t = standard_rep(d);
    // conjugate by a random integer unitriangular L*U (always invertible)
    CMat lower = CMat::identity(n), upper = CMat::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        lower(i, j) = QI(entry(rng));
        upper(j, i) = QI(entry(rng));
      }
    const CMat c = lower * upper;
    const CMat cinv = qi_inverse(c);
    t = Sl2Triple{c * t.e * cinv, c * t.h * cinv, c * t.f * cinv};
    require_bracket(t, "conjugated");
    const auto ct = cayley(t);
    require_bracket(ct, "cayley image");
    const auto back = cayley_inverse(ct);
    CHECK(back.e == t.e);
    CHECK(back.h == t.h);
    CHECK(back.f == t.f);
  }
}

TEST_CASE("oracle sweep on a small slice") {
  const auto report = verify_forms({sl_r(3), su(2, 1), so(3, 2), sp_r(4), ustar_h(2), sl_c(3)});
  for (const auto& issue : report.issues)
    MESSAGE(to_string(issue.form), " ", issue.label, ": ", issue.what);
  CHECK(report.ok());
  CHECK(report.labels_checked > 10);
}
