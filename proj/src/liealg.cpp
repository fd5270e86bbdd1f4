#include "lie4/liealg.hpp"

#include <stdexcept>

namespace lie4 {

namespace {

Rational trace2(const Mat& m) { return m[0][0] + m[1][1]; }
Rational det2(const Mat& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

Mat add2(const Mat& a, const Mat& b) {
  Mat out(2, Vec(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = a[i][j] + b[i][j];
  return out;
}

// sigma(e_a ^ e_b) for the symmetric-tensor bracket on a 3-space: the columns
// of q indexed by the cyclic complement, with sign.
Vec sigma_pair(const Mat& q, int a, int b) {
  static constexpr int kComplement[3][3] = {{-1, 2, 1}, {2, -1, 0}, {1, 0, -1}};
  static constexpr int kSign[3][3] = {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
  Vec out(3, Rational(0));
  if (a == b) return out;
  const int col = kComplement[a][b];
  for (int k = 0; k < 3; ++k) out[k] = Rational(kSign[a][b]) * q[k][col];
  return out;
}

}  // namespace

StructureConstants::StructureConstants(int dim) : dim_(dim) {
  if (dim < 2 || dim > 4)
    throw std::invalid_argument("StructureConstants: dim must be 2..4");
  c_.assign(pair_count(dim) * dim, Rational(0));
}

std::size_t StructureConstants::pair_index(int i, int j, int dim) {
  // lexicographic over i < j
  std::size_t idx = 0;
  for (int a = 0; a < i; ++a) idx += dim - a - 1;
  return idx + (j - i - 1);
}

const Rational& StructureConstants::coeff(int i, int j, int k) const {
  return c_[pair_index(i, j, dim_) * dim_ + k];
}

void StructureConstants::set_coeff(int i, int j, int k, const Rational& value) {
  if (!(0 <= i && i < j && j < dim_ && 0 <= k && k < dim_))
    throw std::out_of_range("StructureConstants::set_coeff: bad indices");
  c_[pair_index(i, j, dim_) * dim_ + k] = value;
}

Vec StructureConstants::bracket_basis(int i, int j) const {
  Vec out(dim_, Rational(0));
  if (i == j) return out;
  const Rational sign = i < j ? Rational(1) : Rational(-1);
  if (i > j) std::swap(i, j);
  for (int k = 0; k < dim_; ++k) out[k] = sign * coeff(i, j, k);
  return out;
}

Vec StructureConstants::bracket(const Vec& x, const Vec& y) const {
  Vec out(dim_, Rational(0));
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j] == 0 || i == j) continue;
      const Vec bij = bracket_basis(i, j);
      const Rational f = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) out[k] += f * bij[k];
    }
  }
  return out;
}

StructureConstants StructureConstants::change_basis(const Mat& g) const {
  auto gi = inverse(g);
  if (!gi) throw std::invalid_argument("change_basis: matrix not invertible");
  StructureConstants out(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      Vec gx(dim_), gy(dim_);
      for (int r = 0; r < dim_; ++r) {
        gx[r] = g[r][i];
        gy[r] = g[r][j];
      }
      const Vec v = mat_vec(*gi, bracket(gx, gy));
      for (int k = 0; k < dim_; ++k) out.set_coeff(i, j, k, v[k]);
    }
  }
  return out;
}

StructureConstants StructureConstants::scaled(const Rational& lambda) const {
  StructureConstants out(dim_);
  for (std::size_t t = 0; t < c_.size(); ++t) out.c_[t] = lambda * c_[t];
  return out;
}

std::vector<Rational> jacobi_defect(const StructureConstants& sc) {
  const int n = sc.dim();
  std::vector<Rational> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        Vec ek(n, Rational(0)), ei(n, Rational(0)), ej(n, Rational(0));
        ei[i] = 1;
        ej[j] = 1;
        ek[k] = 1;
        const Vec a = sc.bracket(sc.bracket_basis(i, j), ek);
        const Vec b = sc.bracket(sc.bracket_basis(j, k), ei);
        const Vec c = sc.bracket(sc.bracket_basis(k, i), ej);
        for (int m = 0; m < n; ++m) out.push_back(a[m] + b[m] + c[m]);
      }
    }
  }
  return out;
}

bool jacobi_holds(const StructureConstants& sc) {
  for (const auto& x : jacobi_defect(sc)) {
    if (x != 0) return false;
  }
  return true;
}

Dim3Decomposition decompose_dim3(const StructureConstants& sc,
                                 const Rational& volume) {
  if (sc.dim() != 3) throw std::invalid_argument("decompose_dim3: dim != 3");
  if (volume == 0) throw std::invalid_argument("decompose_dim3: zero volume");
  // Columns of W: omega(e2^e3), omega(e3^e1), omega(e1^e2).
  Mat w(3, Vec(3));
  const Vec col0 = sc.bracket_basis(1, 2);
  const Vec col1 = sc.bracket_basis(2, 0);
  const Vec col2 = sc.bracket_basis(0, 1);
  for (int k = 0; k < 3; ++k) {
    w[k][0] = col0[k];
    w[k][1] = col1[k];
    w[k][2] = col2[k];
  }
  Mat m(3, Vec(3)), q(3, Vec(3)), s(3, Vec(3));
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) m[a][b] = w[a][b] / volume;
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      q[a][b] = (m[a][b] + m[b][a]) / 2;
      s[a][b] = (m[a][b] - m[b][a]) / 2;
    }
  }
  Dim3Decomposition d;
  d.q = q;
  d.u = {volume * s[1][2], volume * s[2][0], volume * s[0][1]};
  return d;
}

StructureConstants assemble_dim3(const Dim3Decomposition& d,
                                 const Rational& volume) {
  if (volume == 0) throw std::invalid_argument("assemble_dim3: zero volume");
  Mat m = d.q;
  m[1][2] += d.u[0] / volume;
  m[2][1] -= d.u[0] / volume;
  m[2][0] += d.u[1] / volume;
  m[0][2] -= d.u[1] / volume;
  m[0][1] += d.u[2] / volume;
  m[1][0] -= d.u[2] / volume;
  StructureConstants sc(3);
  for (int k = 0; k < 3; ++k) {
    sc.set_coeff(1, 2, k, volume * m[k][0]);
    sc.set_coeff(0, 2, k, -volume * m[k][1]);
    sc.set_coeff(0, 1, k, volume * m[k][2]);
  }
  return sc;
}

Vec contract_q_u(const Dim3Decomposition& d) { return mat_vec(d.q, d.u); }

std::pair<int, std::vector<Vec>> derived_algebra(const StructureConstants& sc) {
  std::vector<Vec> rows;
  const int n = sc.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) rows.push_back(sc.bracket_basis(i, j));
  }
  auto basis = row_space_basis(std::move(rows));
  return {static_cast<int>(basis.size()), std::move(basis)};
}

namespace {

// Coordinates of v in the span of basis (rows); nullopt when outside.
std::optional<Vec> coords_in(const std::vector<Vec>& basis, const Vec& v) {
  const std::size_t n = v.size();
  Mat m(n, Vec(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c) {
    for (std::size_t r = 0; r < n; ++r) m[r][c] = basis[c][r];
  }
  return solve(std::move(m), v);
}

// Structure constants of the bracket restricted to the span of basis;
// nullopt when the span is not closed under the bracket.
std::optional<StructureConstants> restricted(const StructureConstants& sc,
                                             const std::vector<Vec>& basis) {
  const int d = static_cast<int>(basis.size());
  if (d < 2) return std::nullopt;
  StructureConstants out(d);
  for (int r = 0; r < d; ++r) {
    for (int s = r + 1; s < d; ++s) {
      auto co = coords_in(basis, sc.bracket(basis[r], basis[s]));
      if (!co) return std::nullopt;
      for (int k = 0; k < d; ++k) out.set_coeff(r, s, k, (*co)[k]);
    }
  }
  return out;
}

bool restricted_is_abelian(const StructureConstants& sc,
                           const std::vector<Vec>& basis) {
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::size_t s = r + 1; s < basis.size(); ++s) {
      for (const auto& x : sc.bracket(basis[r], basis[s])) {
        if (x != 0) return false;
      }
    }
  }
  return true;
}

std::size_t killing_rank(const StructureConstants& sub) {
  const int d = sub.dim();
  // ad matrices in the subalgebra's own basis
  std::vector<Mat> ad(d, Mat(d, Vec(d, Rational(0))));
  for (int r = 0; r < d; ++r) {
    for (int s = 0; s < d; ++s) {
      const Vec v = sub.bracket_basis(r, s);
      for (int k = 0; k < d; ++k) ad[r][k][s] = v[k];
    }
  }
  Mat killing(d, Vec(d, Rational(0)));
  for (int r = 0; r < d; ++r) {
    for (int s = 0; s < d; ++s) {
      const Mat prod = mat_mul(ad[r], ad[s]);
      Rational tr(0);
      for (int k = 0; k < d; ++k) tr += prod[k][k];
      killing[r][s] = tr;
    }
  }
  return rank(killing);
}

DerivedType derived_type_of(const StructureConstants& sc,
                            const std::vector<Vec>& basis) {
  const int d = static_cast<int>(basis.size());
  switch (d) {
    case 0: return DerivedType::Zero;
    case 1: return DerivedType::Ab1;
    case 2:
      return restricted_is_abelian(sc, basis) ? DerivedType::Ab2
                                              : DerivedType::Other;
    case 3: {
      if (restricted_is_abelian(sc, basis)) return DerivedType::Ab3;
      auto sub = restricted(sc, basis);
      if (!sub) return DerivedType::Other;
      auto [dd, dbasis] = derived_algebra(*sub);
      if (dd == 1) {
        // two-step: the derived line must bracket to zero with everything
        bool two_step = true;
        for (int s = 0; s < 3 && two_step; ++s) {
          Vec es(3, Rational(0));
          es[s] = 1;
          for (const auto& x : sub->bracket(dbasis[0], es)) {
            if (x != 0) { two_step = false; break; }
          }
        }
        if (two_step) return DerivedType::He3;
      }
      if (killing_rank(*sub) == 3) return DerivedType::Sl2;
      return DerivedType::Other;
    }
    default: return DerivedType::Other;
  }
}

int center_dimension(const StructureConstants& sc) {
  const int n = sc.dim();
  Mat m;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      Vec row(n);
      for (int i = 0; i < n; ++i) row[i] = sc.bracket_basis(i, j)[k];
      m.push_back(std::move(row));
    }
  }
  return static_cast<int>(kernel_basis(std::move(m)).size());
}

// The two-dimensional-abelian-derived test for C4: ad induces
// tau: V/D -> End(D); generic points have a two-dimensional commuting image
// containing an element with squarefree characteristic polynomial.
bool is_c4_generic(const StructureConstants& sc, const std::vector<Vec>& dbasis) {
  const int n = sc.dim();
  // complete the derived basis to a full basis by standard vectors
  std::vector<Vec> full = dbasis;
  std::vector<int> lifts;
  for (int t = 0; t < n && full.size() < static_cast<std::size_t>(n); ++t) {
    Vec et(n, Rational(0));
    et[t] = 1;
    std::vector<Vec> probe = full;
    probe.push_back(et);
    if (row_space_basis(probe).size() > full.size()) {
      full.push_back(et);
      lifts.push_back(t);
    }
  }
  if (lifts.size() != 2) return false;
  std::vector<Mat> tau;
  for (int t : lifts) {
    Vec et(n, Rational(0));
    et[t] = 1;
    Mat mt(2, Vec(2));
    for (int j = 0; j < 2; ++j) {
      auto co = coords_in(dbasis, sc.bracket(et, dbasis[j]));
      if (!co) return false;  // derived not an ideal: not a Lie point
      mt[0][j] = (*co)[0];
      mt[1][j] = (*co)[1];
    }
    tau.push_back(std::move(mt));
  }
  // image must be exactly two-dimensional
  Mat flat = {{tau[0][0][0], tau[0][0][1], tau[0][1][0], tau[0][1][1]},
              {tau[1][0][0], tau[1][0][1], tau[1][1][0], tau[1][1][1]}};
  if (rank(flat) != 2) return false;
  // commutativity of the image
  if (mat_mul(tau[0], tau[1]) != mat_mul(tau[1], tau[0])) return false;
  // discriminant of a tau_1 + b tau_2 as a quadratic form in (a, b); it must
  // not vanish identically, which certifies a diagonalizable element with
  // distinct eigenvalues.
  const Rational t1 = trace2(tau[0]), t2 = trace2(tau[1]);
  const Rational d1 = det2(tau[0]), d2 = det2(tau[1]);
  const Rational mixed = det2(add2(tau[0], tau[1])) - d1 - d2;
  const Rational qa = t1 * t1 - 4 * d1;
  const Rational qb = 2 * t1 * t2 - 4 * mixed;
  const Rational qc = t2 * t2 - 4 * d2;
  return !(qa == 0 && qb == 0 && qc == 0);
}

}  // namespace

LieProfile classify(const StructureConstants& sc) {
  LieProfile p;
  p.jacobi_ok = jacobi_holds(sc);
  auto [ddim, dbasis] = derived_algebra(sc);
  p.derived_dim = ddim;
  p.is_abelian = (ddim == 0);
  p.derived_type = derived_type_of(sc, dbasis);
  p.center_dim = center_dimension(sc);
  if (!p.jacobi_ok) {
    p.component = Component::NotLie;
    return p;
  }
  p.component = Component::Boundary;
  if (sc.dim() != 4) return p;
  switch (p.derived_type) {
    case DerivedType::Sl2: {
      // gl2 points: one-dimensional center complementary to the derived algebra
      if (p.center_dim == 1) {
        Mat m;
        for (int j = 0; j < 4; ++j) {
          for (int k = 0; k < 4; ++k) {
            Vec row(4);
            for (int i = 0; i < 4; ++i) row[i] = sc.bracket_basis(i, j)[k];
            m.push_back(std::move(row));
          }
        }
        auto center = kernel_basis(std::move(m));
        std::vector<Vec> all = dbasis;
        all.insert(all.end(), center.begin(), center.end());
        if (row_space_basis(all).size() == 4) p.component = Component::C1;
      }
      break;
    }
    case DerivedType::He3:
      p.component = Component::C2;
      break;
    case DerivedType::Ab3:
      p.component = Component::C3;
      break;
    case DerivedType::Ab2:
      if (is_c4_generic(sc, dbasis)) p.component = Component::C4;
      break;
    default:
      break;
  }
  return p;
}

std::string to_string(DerivedType t) {
  switch (t) {
    case DerivedType::Zero: return "zero";
    case DerivedType::Ab1: return "ab1";
    case DerivedType::Ab2: return "ab2";
    case DerivedType::Ab3: return "ab3";
    case DerivedType::He3: return "he3";
    case DerivedType::Sl2: return "sl2";
    case DerivedType::Other: return "other";
  }
  return "?";
}

std::string to_string(Component c) {
  switch (c) {
    case Component::C1: return "C1";
    case Component::C2: return "C2";
    case Component::C3: return "C3";
    case Component::C4: return "C4";
    case Component::Boundary: return "boundary";
    case Component::NotLie: return "not_lie";
  }
  return "?";
}

// ----- builders -----

StructureConstants make_c1(const Mat& q, const Rational& lambda, const Vec& w) {
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (q[a][b] != q[b][a])
        throw std::invalid_argument("make_c1: q must be symmetric");
    }
  }
  StructureConstants sc(4);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const Vec v = sigma_pair(q, i, j);
      for (int k = 0; k < 3; ++k) sc.set_coeff(i, j, k, lambda * v[k]);
    }
  }
  // [e_i, e_4] = -sigma(w ^ e_i)
  for (int i = 0; i < 3; ++i) {
    Vec v(3, Rational(0));
    for (int a = 0; a < 3; ++a) {
      if (w[a] == 0) continue;
      const Vec sp = sigma_pair(q, a, i);
      for (int k = 0; k < 3; ++k) v[k] += w[a] * sp[k];
    }
    for (int k = 0; k < 3; ++k) sc.set_coeff(i, 3, k, -v[k]);
  }
  return sc;
}

StructureConstants make_c2(const Rational& rho, const Mat& B) {
  if (B[1][0] != 0 || B[2][0] != 0)
    throw std::invalid_argument("make_c2: B must preserve the line <e1>");
  if (B[0][0] != B[1][1] + B[2][2])
    throw std::invalid_argument("make_c2: trace condition violated");
  StructureConstants sc(4);
  sc.set_coeff(1, 2, 0, rho);
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) sc.set_coeff(i, 3, k, -B[k][i]);
  }
  return sc;
}

StructureConstants make_c3(const Mat& A) {
  StructureConstants sc(4);
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) sc.set_coeff(i, 3, k, -A[k][i]);
  }
  return sc;
}

StructureConstants make_c4(const Rational& t, const Vec& phi, const Mat& m,
                           const Vec& s, const Vec& w) {
  if (m[0][0] + m[1][1] != 0)
    throw std::invalid_argument("make_c4: m must be traceless");
  StructureConstants sc(4);
  const auto tau = [&](int which) {
    Mat out(2, Vec(2, Rational(0)));
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) out[a][b] = t * phi[which] * m[a][b];
      out[a][a] += s[which];
    }
    return out;
  };
  const Mat tau3 = tau(0), tau4 = tau(1);
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) {
      sc.set_coeff(i, 2, k, -tau3[k][i]);
      sc.set_coeff(i, 3, k, -tau4[k][i]);
    }
  }
  sc.set_coeff(2, 3, 0, w[0]);
  sc.set_coeff(2, 3, 1, w[1]);
  return sc;
}

// ----- samplers -----

namespace {

Rational draw(Rng& rng) { return Rational(rng.next_int(-5, 5)); }

StructureConstants draw_c1(Rng& rng) {
  Mat q(3, Vec(3));
  for (int a = 0; a < 3; ++a) {
    for (int b = a; b < 3; ++b) q[a][b] = q[b][a] = draw(rng);
  }
  const Rational lambda = draw(rng);
  Vec w = {draw(rng), draw(rng), draw(rng)};
  return make_c1(q, lambda, w);
}

StructureConstants draw_c2(Rng& rng) {
  const Rational rho = draw(rng);
  Mat b(3, Vec(3, Rational(0)));
  b[0][1] = draw(rng);
  b[0][2] = draw(rng);
  b[1][1] = draw(rng);
  b[1][2] = draw(rng);
  b[2][1] = draw(rng);
  b[2][2] = draw(rng);
  b[0][0] = b[1][1] + b[2][2];
  return make_c2(rho, b);
}

StructureConstants draw_c3(Rng& rng) {
  Mat a(3, Vec(3));
  for (auto& row : a) {
    for (auto& x : row) x = draw(rng);
  }
  return make_c3(a);
}

StructureConstants draw_c4(Rng& rng) {
  const Rational t = draw(rng);
  Vec phi = {draw(rng), draw(rng)};
  Mat m(2, Vec(2));
  m[0][0] = draw(rng);
  m[0][1] = draw(rng);
  m[1][0] = draw(rng);
  m[1][1] = -m[0][0];
  Vec s = {draw(rng), draw(rng)};
  Vec w = {draw(rng), draw(rng)};
  return make_c4(t, phi, m, s, w);
}

StructureConstants draw_component(Component tag, Rng& rng) {
  switch (tag) {
    case Component::C1: return draw_c1(rng);
    case Component::C2: return draw_c2(rng);
    case Component::C3: return draw_c3(rng);
    case Component::C4: return draw_c4(rng);
    default:
      throw std::invalid_argument("sample: tag must be one of C1..C4");
  }
}

}  // namespace

StructureConstants sample_c1(std::uint64_t seed) {
  Rng rng(seed);
  return draw_c1(rng);
}
StructureConstants sample_c2(std::uint64_t seed) {
  Rng rng(seed);
  return draw_c2(rng);
}
StructureConstants sample_c3(std::uint64_t seed) {
  Rng rng(seed);
  return draw_c3(rng);
}
StructureConstants sample_c4(std::uint64_t seed) {
  Rng rng(seed);
  return draw_c4(rng);
}

StructureConstants sample_component(Component tag, std::uint64_t seed) {
  Rng rng(seed);
  return draw_component(tag, rng);
}

std::optional<StructureConstants> sample_generic(Component tag,
                                                 std::uint64_t seed,
                                                 int max_attempts) {
  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    StructureConstants sc = draw_component(tag, rng);
    if (classify(sc).component == tag) return sc;
  }
  return std::nullopt;
}

Mat random_invertible(Rng& rng, int n) {
  for (;;) {
    Mat g(n, Vec(n));
    for (auto& row : g) {
      for (auto& x : row) x = Rational(rng.next_int(-3, 3));
    }
    if (rank(g) == static_cast<std::size_t>(n)) return g;
  }
}

}  // namespace lie4
