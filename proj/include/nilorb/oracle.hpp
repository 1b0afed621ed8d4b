#pragma once

// Brute-force verification layer: explicit matrix models of the labelled
// nilpotent elements, invariant Gram matrices obtained by exact linear
// solves, centralizer dimensions as null-space dimensions, compactness via
// the trace form, and the Cayley-transform identities.  Everything runs
// over Q(i); quaternionic models use the 2n-dimensional complex realization
// with basis (e_1..e_n, je_1..je_n) and the antilinear structure map
// v -> J conj(v), J = [[0,-I],[I,0]].

#include <optional>
#include <vector>

#include "nilorb/classical.hpp"
#include "nilorb/exact.hpp"

namespace nilorb {

struct oracle_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Domain { R, C, H };
enum class FormKind { None, Symmetric, SkewSymmetric, Hermitian, SkewHermitian };

// ---- standard irreducible sl2 representations -------------------------------

struct Sl2Triple {
  CMat e, h, f;
};

// d-dimensional simple module with integer matrices: h diagonal,
// e(k,k+1) = k(d-k), f(k+1,k) = 1.
inline Sl2Triple standard_rep(int d) {
  if (d < 1) throw validation_error("representation dimension must be positive");
  const auto n = static_cast<std::size_t>(d);
  Sl2Triple t{CMat(n, n), CMat(n, n), CMat(n, n)};
  for (std::size_t k = 0; k < n; ++k) t.h(k, k) = QI(d - 1 - 2 * static_cast<long>(k));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    t.e(k, k + 1) = QI(static_cast<long>(k + 1) * (d - 1 - static_cast<long>(k)));
    t.f(k + 1, k) = QI(1);
  }
  return t;
}

inline void require_bracket(const Sl2Triple& t, const char* who) {
  const CMat two_e = QI(2) * t.e, two_f = QI(2) * t.f;
  if (!(commutator(t.h, t.e) == two_e) || !((QI(-1) * commutator(t.h, t.f)) == two_f) ||
      !(commutator(t.e, t.f) == t.h))
    throw oracle_error(std::string(who) + ": sl2 bracket relations violated");
}

// ---- linear constraint systems over the realified unknowns ------------------

namespace detail {

enum class Op { A, ConjA, TransposeA, ConjTransposeA };

struct Term {
  CMat left;   // P in P * op(A) * Q
  CMat right;  // Q
  Op op = Op::A;
};

// Appends to `sys` the realified rows of the matrix equation sum(terms) = 0,
// where the unknown A is m x m.  Unknown layout: for complex unknowns, entry
// (i,j) occupies slots 2(im+j) (real part) and 2(im+j)+1 (imaginary part);
// for real unknowns, slot im+j.
inline void add_matrix_equation(LinearSystem& sys, std::size_t m, bool complex_unknowns,
                                const std::vector<Term>& terms) {
  const std::size_t out_rows = terms.front().left.rows();
  const std::size_t out_cols = terms.front().right.cols();
  for (std::size_t r = 0; r < out_rows; ++r)
    for (std::size_t c = 0; c < out_cols; ++c) {
      // coefficient of A_ij and of conj(A_ij) in the (r,c) output entry
      std::vector<QI> coef(m * m), dcoef(m * m);
      for (const auto& t : terms) {
        const bool conj = t.op == Op::ConjA || t.op == Op::ConjTransposeA;
        const bool tr = t.op == Op::TransposeA || t.op == Op::ConjTransposeA;
        for (std::size_t i = 0; i < m; ++i) {
          const QI pri = t.left(r, i);
          if (pri.is_zero()) continue;
          for (std::size_t j = 0; j < m; ++j) {
            const QI w = pri * t.right(j, c);
            if (w.is_zero()) continue;
            // P * A^T * Q picks up A(j,i) where the plain product picks A(i,j).
            const std::size_t slot = tr ? j * m + i : i * m + j;
            (conj ? dcoef : coef)[slot] += w;
          }
        }
      }
      bool any = false;
      for (std::size_t s = 0; s < m * m; ++s)
        if (!coef[s].is_zero() || !dcoef[s].is_zero()) {
          any = true;
          break;
        }
      if (!any) continue;
      if (complex_unknowns) {
        auto& re_row = sys.new_row();
        for (std::size_t s = 0; s < m * m; ++s) {
          re_row[2 * s] = coef[s].re + dcoef[s].re;
          re_row[2 * s + 1] = -coef[s].im + dcoef[s].im;
        }
        auto& im_row = sys.new_row();
        for (std::size_t s = 0; s < m * m; ++s) {
          im_row[2 * s] = coef[s].im + dcoef[s].im;
          im_row[2 * s + 1] = coef[s].re - dcoef[s].re;
        }
      } else {
        auto& re_row = sys.new_row();
        for (std::size_t s = 0; s < m * m; ++s) re_row[s] = coef[s].re + dcoef[s].re;
        auto& im_row = sys.new_row();
        bool im_any = false;
        for (std::size_t s = 0; s < m * m; ++s) {
          im_row[s] = coef[s].im + dcoef[s].im;
          if (im_row[s] != 0) im_any = true;
        }
        (void)im_any;
      }
    }
}

inline CMat vector_to_matrix(const std::vector<Rational>& v, std::size_t m,
                             bool complex_unknowns) {
  CMat a(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t s = i * m + j;
      a(i, j) = complex_unknowns ? QI(v[2 * s], v[2 * s + 1]) : QI(v[s]);
    }
  return a;
}

}  // namespace detail

// Rank over Q(i) by Gaussian elimination.
inline std::size_t qi_rank(CMat m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(rank, c), m(piv, c));
    const QI p = m(rank, col);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      const QI f = m(r, col) / p;
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

// ---- invariant forms on the simple modules ----------------------------------

// Gram matrix of the (unique up to scale) invariant form of the given kind on
// the d-dimensional simple module over the given scalar domain:
//   R: Symmetric (odd d), SkewSymmetric (even d)         -> d x d, rational
//   C: Symmetric (odd), SkewSymmetric (even), Hermitian / SkewHermitian (all)
//   H: Hermitian (odd d), SkewHermitian (even d)         -> 2d x 2d realization
// Absent (d, kind, domain) combinations throw.  Signed kinds are normalized
// to signature +1 (odd-d Symmetric over R, odd-d Hermitian over C and H);
// the remaining kinds get a fixed deterministic scale.
inline CMat invariant_form_on_Sd(int d, FormKind kind, Domain domain) {
  if (kind == FormKind::None) throw validation_error("a form kind is required");
  const auto rep = standard_rep(d);
  const auto dd = static_cast<std::size_t>(d);
  const bool quat = domain == Domain::H;
  if (quat && kind != FormKind::Hermitian && kind != FormKind::SkewHermitian)
    throw oracle_error("no invariant form of this kind: bilinear kinds do not arise over H");
  if (domain == Domain::R && (kind == FormKind::Hermitian || kind == FormKind::SkewHermitian))
    throw oracle_error("no invariant form of this kind: Hermitian kinds do not arise over R");

  const std::size_t m = quat ? 2 * dd : dd;
  const bool hermitian_kind = kind == FormKind::Hermitian || kind == FormKind::SkewHermitian;
  // Bilinear kinds admit a real-entry representative (the representation
  // matrices are real), so real unknowns suffice there.
  const bool complex_unknowns = hermitian_kind;
  LinearSystem sys(complex_unknowns ? 2 * m * m : m * m);

  const CMat id = CMat::identity(m);
  auto realized = [&](const CMat& x) {
    return quat ? CMat::block_diag({x, x}) : x;
  };
  using detail::Op;
  using detail::Term;
  for (const CMat* x : {&rep.e, &rep.h, &rep.f}) {
    const CMat rx = realized(*x);
    // Invariance of the form with Gram G: rx^T G + G rx = 0 (the
    // representation matrices are real, so the bilinear and sesquilinear
    // conditions coincide).
    detail::add_matrix_equation(sys, m, complex_unknowns,
                                {Term{rx.transpose(), id, Op::A}, Term{id, rx, Op::A}});
  }
  // Symmetry constraint.
  const QI minus1 = QI(-1);
  switch (kind) {
    case FormKind::Symmetric:
      detail::add_matrix_equation(sys, m, complex_unknowns,
                                  {Term{id, id, Op::A}, Term{minus1 * id, id, Op::TransposeA}});
      break;
    case FormKind::SkewSymmetric:
      detail::add_matrix_equation(sys, m, complex_unknowns,
                                  {Term{id, id, Op::A}, Term{id, id, Op::TransposeA}});
      break;
    case FormKind::Hermitian:
      detail::add_matrix_equation(
          sys, m, complex_unknowns,
          {Term{id, id, Op::A}, Term{minus1 * id, id, Op::ConjTransposeA}});
      break;
    case FormKind::SkewHermitian:
      detail::add_matrix_equation(sys, m, complex_unknowns,
                                  {Term{id, id, Op::A}, Term{id, id, Op::ConjTransposeA}});
      break;
    case FormKind::None:
      break;
  }
  if (quat) {
    // Compatibility with the quaternionic structure: J^T G J = conj(G).
    CMat J(m, m);
    for (std::size_t k = 0; k < dd; ++k) {
      J(k, dd + k) = QI(-1);
      J(dd + k, k) = QI(1);
    }
    detail::add_matrix_equation(sys, m, complex_unknowns,
                                {Term{J.transpose(), J, Op::A}, Term{minus1 * id, id, Op::ConjA}});
  }

  const auto basis = sys.kernel_basis();
  if (basis.empty()) throw oracle_error("no invariant form of this kind on S_" + std::to_string(d));
  if (basis.size() != 1)
    throw oracle_error("invariant form solution space is not one-dimensional on S_" +
                       std::to_string(d));
  CMat g = detail::vector_to_matrix(basis[0], m, complex_unknowns);

  // Deterministic scale: first nonzero entry gets real part 1 (imaginary
  // part 1 when the entry is purely imaginary).
  QI lead;
  for (std::size_t i = 0; i < m && lead.is_zero(); ++i)
    for (std::size_t j = 0; j < m && lead.is_zero(); ++j) lead = g(i, j);
  const Rational scale = lead.re != 0 ? lead.re : lead.im;
  g = QI(Rational(1) / scale) * g;
  // Signature normalization for the signed kinds.
  const bool signed_kind =
      (domain == Domain::R && kind == FormKind::Symmetric && d % 2 != 0) ||
      (kind == FormKind::Hermitian && d % 2 != 0);
  if (signed_kind) {
    const auto inertia = hermitian_inertia(g);
    if (inertia.zero != 0) throw oracle_error("invariant form unexpectedly degenerate");
    if (inertia.positive < inertia.negative) g = QI(-1) * g;
    const auto fixed = hermitian_inertia(g);
    const std::size_t expect = quat ? 2 : 1;
    if (fixed.positive - fixed.negative != expect)
      throw oracle_error("invariant form signature normalization failed");
  }
  return g;
}

// ---- Gram matrices of the multiplicity-space forms ---------------------------

inline CMat theta_diag(int p, int q) {
  CMat m(static_cast<std::size_t>(p + q), static_cast<std::size_t>(p + q));
  for (int k = 0; k < p; ++k) m(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) = QI(1);
  for (int k = 0; k < q; ++k)
    m(static_cast<std::size_t>(p + k), static_cast<std::size_t>(p + k)) = QI(-1);
  return m;
}

inline CMat theta_alternating(int r) {
  if (r % 2 != 0) throw oracle_error("alternating multiplicity form needs even multiplicity");
  const auto n = static_cast<std::size_t>(r);
  CMat m(n, n);
  for (std::size_t k = 0; k < n / 2; ++k) {
    m(k, n / 2 + k) = QI(1);
    m(n / 2 + k, k) = QI(-1);
  }
  return m;
}

// ---- matrix models -----------------------------------------------------------

struct MatrixModel {
  Domain domain = Domain::R;
  std::size_t dim = 0;  // matrix size of the realization (2n over H)
  CMat rep_e, rep_h, rep_f;
  std::optional<CMat> gram;
  FormKind form_kind = FormKind::None;
  std::optional<CMat> quaternion_J;  // present iff domain == H
  bool trace_zero = false;           // sl/su-type trace constraint
  long algebra_real_dim = 0;         // dim_R of the real form being modelled
};

namespace detail {

// Quaternionic matrix P + Q j, kept as its two complex components.
struct QuatMat {
  CMat p, q;
};

// Complex 2N realization of the Gram of a quaternionic form with matrix
// P + Qj: the complex-sesquilinear component on coordinates (a, b).
inline CMat quat_gram_realization(const QuatMat& m) {
  const std::size_t n = m.p.rows();
  CMat g(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g(i, j) = m.p(i, j);
      g(i, n + j) = m.q(i, j);
      g(n + i, j) = -m.q(i, j).conj();
      g(n + i, n + j) = m.p(i, j).conj();
    }
  return g;
}

// Splits the complex realization of a quaternionic Gram back into (P, Q),
// checking the block structure.
inline QuatMat quat_gram_components(const CMat& g) {
  const std::size_t n = g.rows() / 2;
  QuatMat m{CMat(n, n), CMat(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m.p(i, j) = g(i, j);
      m.q(i, j) = g(i, n + j);
      if (!(g(n + i, j) == -m.q(i, j).conj()) || !(g(n + i, n + j) == m.p(i, j).conj()))
        throw oracle_error("quaternionic Gram realization has the wrong block structure");
    }
  return m;
}

// Tensor of quaternionic forms where the left factor is a real matrix.
inline QuatMat quat_kron_real_left(const CMat& theta, const QuatMat& delta) {
  return {CMat::kron(theta, delta.p), CMat::kron(theta, delta.q)};
}
// Tensor with left factor j I_r: j (P + Qj) = -conj(Q) + conj(P) j.
inline QuatMat quat_kron_j_left(int r, const QuatMat& delta) {
  const CMat id = CMat::identity(static_cast<std::size_t>(r));
  return {CMat::kron(id, QI(-1) * delta.q.conj()), CMat::kron(id, delta.p.conj())};
}

inline CMat standard_J(std::size_t n) {
  CMat j(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    j(k, n + k) = QI(-1);
    j(n + k, k) = QI(1);
  }
  return j;
}

}  // namespace detail

// Builds the block-diagonal matrix model of the nilpotent labelled by `rec`
// in the given classical form, with the family's invariant Gram matrix.
// All structural identities are re-checked exactly before returning.
inline MatrixModel build_model(const RealFormId& raw, const OrbitRecord& rec) {
  const RealFormId id = normalize(raw);
  MatrixModel model;
  model.algebra_real_dim = real_dimension(id);
  const auto& mult = rec.partition.multiplicities();
  auto split_at = [&](int d) -> std::pair<int, int> {
    return rec.fine->split_at(d);
  };

  std::vector<CMat> rep_blocks_e, rep_blocks_h, rep_blocks_f, gram_blocks;

  // Summands ordered by decreasing part size.
  std::vector<std::pair<int, int>> summands(mult.rbegin(), mult.rend());

  switch (id.family) {
    case Family::SL_R:
    case Family::SL_C:
      model.domain = id.family == Family::SL_R ? Domain::R : Domain::C;
      model.trace_zero = true;
      break;
    case Family::SL_H:
      model.domain = Domain::H;
      model.trace_zero = true;
      break;
    case Family::SU:
      model.domain = Domain::C;
      model.form_kind = FormKind::Hermitian;
      model.trace_zero = true;
      break;
    case Family::SO:
      model.domain = Domain::R;
      model.form_kind = FormKind::Symmetric;
      break;
    case Family::SO_C:
      model.domain = Domain::C;
      model.form_kind = FormKind::Symmetric;
      break;
    case Family::SP_R:
      model.domain = Domain::R;
      model.form_kind = FormKind::SkewSymmetric;
      break;
    case Family::SP_C:
      model.domain = Domain::C;
      model.form_kind = FormKind::SkewSymmetric;
      break;
    case Family::SP_H:
      model.domain = Domain::H;
      model.form_kind = FormKind::Hermitian;
      break;
    case Family::USTAR_H:
      model.domain = Domain::H;
      model.form_kind = FormKind::SkewHermitian;
      break;
    default:
      throw validation_error("build_model handles classical families only");
  }

  for (auto [d, m] : summands) {
    const auto rep = standard_rep(d);
    const CMat im = CMat::identity(static_cast<std::size_t>(m));
    const CMat block_e = CMat::kron(im, rep.e);
    const CMat block_h = CMat::kron(im, rep.h);
    const CMat block_f = CMat::kron(im, rep.f);
    const bool odd = d % 2 != 0;

    if (model.domain != Domain::H) {
      rep_blocks_e.push_back(block_e);
      rep_blocks_h.push_back(block_h);
      rep_blocks_f.push_back(block_f);
      switch (id.family) {
        case Family::SL_R:
        case Family::SL_C:
          break;
        case Family::SU: {
          auto [p, q] = split_at(d);
          gram_blocks.push_back(CMat::kron(
              theta_diag(p, q), invariant_form_on_Sd(d, FormKind::Hermitian, Domain::C)));
          break;
        }
        case Family::SO: {
          if (odd) {
            auto [p, q] = split_at(d);
            gram_blocks.push_back(CMat::kron(
                theta_diag(p, q), invariant_form_on_Sd(d, FormKind::Symmetric, Domain::R)));
          } else {
            gram_blocks.push_back(CMat::kron(
                theta_alternating(m), invariant_form_on_Sd(d, FormKind::SkewSymmetric, Domain::R)));
          }
          break;
        }
        case Family::SO_C: {
          if (odd)
            gram_blocks.push_back(CMat::kron(
                theta_diag(m, 0), invariant_form_on_Sd(d, FormKind::Symmetric, Domain::C)));
          else
            gram_blocks.push_back(CMat::kron(
                theta_alternating(m), invariant_form_on_Sd(d, FormKind::SkewSymmetric, Domain::C)));
          break;
        }
        case Family::SP_R: {
          if (!odd) {
            auto [p, q] = split_at(d);
            gram_blocks.push_back(CMat::kron(
                theta_diag(p, q), invariant_form_on_Sd(d, FormKind::SkewSymmetric, Domain::R)));
          } else {
            gram_blocks.push_back(CMat::kron(
                theta_alternating(m), invariant_form_on_Sd(d, FormKind::Symmetric, Domain::R)));
          }
          break;
        }
        case Family::SP_C: {
          if (!odd)
            gram_blocks.push_back(CMat::kron(
                theta_diag(m, 0), invariant_form_on_Sd(d, FormKind::SkewSymmetric, Domain::C)));
          else
            gram_blocks.push_back(CMat::kron(
                theta_alternating(m), invariant_form_on_Sd(d, FormKind::Symmetric, Domain::C)));
          break;
        }
        default:
          throw std::logic_error("unreachable");
      }
      continue;
    }

    // Quaternionic families: realize each summand over C^(2 m d).
    rep_blocks_e.push_back(CMat::block_diag({block_e, block_e}));
    rep_blocks_h.push_back(CMat::block_diag({block_h, block_h}));
    rep_blocks_f.push_back(CMat::block_diag({block_f, block_f}));
    if (id.family == Family::SL_H) continue;
    const FormKind delta_kind = odd ? FormKind::Hermitian : FormKind::SkewHermitian;
    const detail::QuatMat delta =
        detail::quat_gram_components(invariant_form_on_Sd(d, delta_kind, Domain::H));
    detail::QuatMat block;
    if (id.family == Family::SP_H) {
      if (odd) {
        auto [p, q] = split_at(d);
        block = detail::quat_kron_real_left(theta_diag(p, q), delta);
      } else {
        block = detail::quat_kron_j_left(m, delta);
      }
    } else {  // USTAR_H
      if (!odd) {
        auto [p, q] = split_at(d);
        block = detail::quat_kron_real_left(theta_diag(p, q), delta);
      } else {
        block = detail::quat_kron_j_left(m, delta);
      }
    }
    gram_blocks.push_back(detail::quat_gram_realization(block));
  }

  model.rep_e = CMat::block_diag(rep_blocks_e);
  model.rep_h = CMat::block_diag(rep_blocks_h);
  model.rep_f = CMat::block_diag(rep_blocks_f);
  model.dim = model.rep_e.rows();
  if (model.domain == Domain::H) {
    std::vector<CMat> j_blocks;
    for (auto [d, m] : summands)
      j_blocks.push_back(
          detail::standard_J(static_cast<std::size_t>(m) * static_cast<std::size_t>(d)));
    model.quaternion_J = CMat::block_diag(j_blocks);
  }
  if (model.form_kind != FormKind::None) model.gram = CMat::block_diag(gram_blocks);

  // ---- structural checks, all exact ----
  require_bracket({model.rep_e, model.rep_h, model.rep_f}, "build_model");
  if (model.quaternion_J) {
    const CMat& J = *model.quaternion_J;
    for (const CMat* x : {&model.rep_e, &model.rep_h, &model.rep_f})
      if (!((*x * J) == (J * x->conj())))
        throw oracle_error("representation is not quaternion-linear");
  }
  if (model.gram) {
    const CMat& g = *model.gram;
    if (qi_rank(g) != model.dim) throw oracle_error("Gram matrix is singular");
    switch (model.form_kind) {
      case FormKind::Symmetric:
        if (!(g == g.transpose())) throw oracle_error("Gram is not symmetric");
        break;
      case FormKind::SkewSymmetric:
        if (!(g == QI(-1) * g.transpose())) throw oracle_error("Gram is not alternating");
        break;
      case FormKind::Hermitian:
        if (!(g == g.conj_transpose())) throw oracle_error("Gram is not Hermitian");
        break;
      case FormKind::SkewHermitian:
        if (!(g == QI(-1) * g.conj_transpose())) throw oracle_error("Gram is not skew-Hermitian");
        break;
      case FormKind::None:
        break;
    }
    for (const CMat* x : {&model.rep_e, &model.rep_h, &model.rep_f}) {
      // Gram-skew condition; representation matrices are real, so the
      // bilinear and sesquilinear versions agree.
      if (!((x->transpose() * g + g * x->conj()).is_zero()))
        throw oracle_error("representation does not preserve the form");
    }
    // Signature realizations for the definite-signed families.
    if (id.family == Family::SO || id.family == Family::SU) {
      const auto inertia = hermitian_inertia(g);
      if (inertia.positive != static_cast<std::size_t>(id.p) ||
          inertia.negative != static_cast<std::size_t>(id.q))
        throw oracle_error("Gram signature does not match (p,q)");
    }
    if (id.family == Family::SP_H) {
      const auto inertia = hermitian_inertia(g);
      if (inertia.positive != 2 * static_cast<std::size_t>(id.p) ||
          inertia.negative != 2 * static_cast<std::size_t>(id.q))
        throw oracle_error("realized Gram signature does not match (2p,2q)");
    }
  }

  return model;
}

inline MatrixModel build_model(const RealFormId& id, const FinePartition& fine) {
  const RealFormId norm = normalize(id);
  validate_label(norm, fine);
  OrbitRecord rec{norm, fine.base(), fine, component_count(norm, fine),
                  orbit_dimension(norm, fine.base())};
  return build_model(norm, rec);
}
inline MatrixModel build_model(const RealFormId& id, const Partition& base) {
  const RealFormId norm = normalize(id);
  validate_label(norm, base);
  OrbitRecord rec{norm, base, std::nullopt, component_count(norm, base),
                  orbit_dimension(norm, base)};
  return build_model(norm, rec);
}

// Which of e, h, f to centralize.
struct CentralizeSet {
  bool e = false, h = false, f = false;
  static CentralizeSet just_e() { return {true, false, false}; }
  static CentralizeSet triple() { return {true, true, true}; }
  static CentralizeSet none() { return {}; }
};

namespace detail {

inline LinearSystem algebra_membership_system(const MatrixModel& model,
                                              const CentralizeSet& gens) {
  const std::size_t m = model.dim;
  const bool complex_unknowns = model.domain != Domain::R;
  LinearSystem sys(complex_unknowns ? 2 * m * m : m * m);
  const CMat id = CMat::identity(m);
  const QI minus1 = QI(-1);
  auto commute_with = [&](const CMat& x) {
    add_matrix_equation(sys, m, complex_unknowns,
                        {Term{id, x, Op::A}, Term{minus1 * x, id, Op::A}});
  };
  if (gens.e) commute_with(model.rep_e);
  if (gens.h) commute_with(model.rep_h);
  if (gens.f) commute_with(model.rep_f);
  if (model.gram) {
    const CMat& g = *model.gram;
    const bool sesquilinear =
        model.form_kind == FormKind::Hermitian || model.form_kind == FormKind::SkewHermitian;
    add_matrix_equation(sys, m, complex_unknowns,
                        {Term{id, g, Op::TransposeA},
                         Term{g, id, sesquilinear ? Op::ConjA : Op::A}});
  }
  if (model.quaternion_J) {
    const CMat& J = *model.quaternion_J;
    add_matrix_equation(sys, m, complex_unknowns,
                        {Term{id, J, Op::A}, Term{minus1 * J, id, Op::ConjA}});
  }
  if (model.trace_zero) {
    auto& re_row = sys.new_row();
    for (std::size_t k = 0; k < m; ++k)
      re_row[complex_unknowns ? 2 * (k * m + k) : k * m + k] = 1;
    if (complex_unknowns) {
      auto& im_row = sys.new_row();
      for (std::size_t k = 0; k < m; ++k) im_row[2 * (k * m + k) + 1] = 1;
    }
  }
  return sys;
}

}  // namespace detail

// Real dimension of {A in the modelled algebra : [A, x] = 0 for chosen x}.
inline long centralizer_dim(const MatrixModel& model, const CentralizeSet& gens) {
  return static_cast<long>(detail::algebra_membership_system(model, gens).kernel_dimension());
}

// Basis (as matrices) of the centralizer.
inline std::vector<CMat> centralizer_basis(const MatrixModel& model, const CentralizeSet& gens) {
  const bool complex_unknowns = model.domain != Domain::R;
  std::vector<CMat> out;
  for (const auto& v : detail::algebra_membership_system(model, gens).kernel_basis())
    out.push_back(detail::vector_to_matrix(v, model.dim, complex_unknowns));
  return out;
}

// Compactness of the reductive Levi factor z(e,h,f): the trace form
// Q(X) = Re tr(X^2) must be negative definite on it.
inline bool compact_oracle(const MatrixModel& model) {
  const auto basis = centralizer_basis(model, CentralizeSet::triple());
  const std::size_t k = basis.size();
  CMat b(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t c = a; c < k; ++c) {
      const QI t = (basis[a] * basis[c]).trace();
      b(a, c) = QI(t.re);
      b(c, a) = QI(t.re);
    }
  const auto inertia = hermitian_inertia(b);
  return inertia.positive == 0 && inertia.zero == 0;
}

// ---- Cayley transforms -------------------------------------------------------

// Cayley transform between sl2-triples: e' = (e+f+ih)/2, h' = i(e-f),
// f' = (e+f-ih)/2.  Both directions preserve the bracket relations as
// universal matrix identities, and they compose to the identity.
inline Sl2Triple cayley(const Sl2Triple& t) {
  require_bracket(t, "cayley");
  const QI half(Rational(1, 2));
  const QI i = QI::unit_i();
  Sl2Triple out;
  out.e = half * (t.e + t.f + i * t.h);
  out.h = i * (t.e - t.f);
  out.f = half * (t.e + t.f - i * t.h);
  require_bracket(out, "cayley output");
  return out;
}

// Inverse transform: e = (e'+f'-ih')/2, h = i(f'-e'), f = (e'+f'+ih')/2.
inline Sl2Triple cayley_inverse(const Sl2Triple& t) {
  require_bracket(t, "cayley_inverse");
  const QI half(Rational(1, 2));
  const QI i = QI::unit_i();
  Sl2Triple out;
  out.e = half * (t.e + t.f - i * t.h);
  out.h = i * (t.f - t.e);
  out.f = half * (t.e + t.f + i * t.h);
  require_bracket(out, "cayley_inverse output");
  return out;
}

}  // namespace nilorb
