#include "hsqm/landau.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "hsqm/error.hpp"
#include "hsqm/parallel.hpp"

namespace hsqm {

namespace {

bool finite_all(std::initializer_list<double> xs) {
  return std::all_of(xs.begin(), xs.end(), [](double x) { return std::isfinite(x); });
}

double sector_exponent(double hbar, double omega, double beta) { return beta * hbar * omega; }

void require_positive_sectors(const ChiralFrequencies& f, const char* who) {
  if (!(f.Omega_plus > 0.0) || !(f.Omega_minus > 0.0)) {
    throw InvalidParameter(std::string(who) + ": needs Omega_plus > 0 and Omega_minus > 0 (got " +
                           std::to_string(f.Omega_plus) + ", " + std::to_string(f.Omega_minus) + ")");
  }
}

void require_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw InvalidParameter("beta must be positive and finite");
}

// Glauber state e^{-|z|^2/2} sum z^k/sqrt(k!) |k>, truncated.
Vector glauber(FockSpace space, cplx z) {
  Vector g(space.dim());
  for (int k = 0; k < space.dim(); ++k) g(k) = displacement_element(k, 0, z);
  return g;
}

// Ladder on the left index of a row-major vectorized sector, applied to
// every column of `c` (rows) or row (cols).
Matrix lower_rows(const Matrix& c, int n) {
  Matrix out = Matrix::Zero(c.rows(), c.cols());
  for (int i = 0; i + 1 < n; ++i) {
    for (int m = 0; m < n; ++m) out.row(vec_index(i, m, n)) = std::sqrt(i + 1.0) * c.row(vec_index(i + 1, m, n));
  }
  return out;
}

Matrix raise_rows(const Matrix& c, int n) {
  Matrix out = Matrix::Zero(c.rows(), c.cols());
  for (int i = 1; i < n; ++i) {
    for (int m = 0; m < n; ++m) out.row(vec_index(i, m, n)) = std::sqrt(static_cast<double>(i)) * c.row(vec_index(i - 1, m, n));
  }
  return out;
}

// (1/pi) int |z><z| (x) |z><z| d^2z restricted to levels < block, as a
// block^2 x block^2 matrix on B2.
Matrix sector_resolution(int block, const QuadratureScheme& q) {
  const auto nodes = q.plane_nodes(2.0);
  Matrix samples(static_cast<Eigen::Index>(block) * block, static_cast<Eigen::Index>(nodes.size()));
  Eigen::VectorXd weights(static_cast<Eigen::Index>(nodes.size()));
  parallel_for(nodes.size(), [&](std::size_t k) {
    const auto col = static_cast<Eigen::Index>(k);
    const cplx z = std::polar(std::sqrt(nodes[k].t), nodes[k].phi);
    Vector g(block);
    for (int i = 0; i < block; ++i) g(i) = displacement_element(i, 0, z);
    for (int i = 0; i < block; ++i) {
      for (int j = 0; j < block; ++j) samples(vec_index(i, j, block), col) = g(i) * std::conj(g(j));
    }
    weights(col) = nodes[k].weight / (2.0 * std::numbers::pi);
  });
  return samples * weights.asDiagonal() * samples.adjoint();
}

}  // namespace

void LandauParams::validate() const {
  if (!finite_all({mass, omega0, omega_c, theta, hbar})) throw InvalidParameter("LandauParams: non-finite field");
  if (!(mass > 0.0)) throw InvalidParameter("LandauParams: mass must be positive");
  if (omega0 < 0.0) throw InvalidParameter("LandauParams: omega0 must be non-negative");
  if (!(omega_c > 0.0)) throw InvalidParameter("LandauParams: omega_c must be positive");
  if (theta < 0.0) throw InvalidParameter("LandauParams: theta must be non-negative");
  if (!(hbar > 0.0)) throw InvalidParameter("LandauParams: hbar must be positive");
}

ChiralFrequencies chiral_frequencies(const LandauParams& p) {
  p.validate();
  ChiralFrequencies f{};
  f.Omega = std::sqrt(p.omega0 * p.omega0 + p.omega_c * p.omega_c / 4.0);
  const double q = p.mass * f.Omega * p.theta / 4.0;
  const double disc = 1.0 - p.mass * p.omega_c * p.theta / 2.0 + q * q;
  if (!(disc > 0.0)) {
    throw InvalidParameter("chiral_frequencies: 1 - M omega_c theta/2 + (M Omega theta/4)^2 = " +
                           std::to_string(disc) + " is not positive");
  }
  const double mo = p.mass * f.Omega / p.hbar;
  f.zeta = std::pow(mo * mo / disc, 0.25);
  f.Omega_tilde = f.Omega * std::sqrt(disc);
  f.omega_c_tilde = p.omega_c * (1.0 - (p.omega_c / 4.0 + p.omega0 * p.omega0 / p.omega_c) * p.mass * p.theta);
  f.Omega_plus = f.Omega_tilde + f.omega_c_tilde / 2.0;
  f.Omega_minus = f.Omega_tilde - f.omega_c_tilde / 2.0;
  if (f.Omega_minus < 0.0 || f.Omega_plus < 0.0) {
    throw InvalidParameter("chiral_frequencies: negative chiral frequency (Omega_plus = " +
                           std::to_string(f.Omega_plus) + ", Omega_minus = " + std::to_string(f.Omega_minus) +
                           "); theta outside the admissible range");
  }
  return f;
}

Eigen::MatrixXd spectrum(const LandauParams& p, int n_max) {
  if (n_max < 0) throw InvalidParameter("spectrum: n_max must be non-negative");
  const ChiralFrequencies f = chiral_frequencies(p);
  Eigen::MatrixXd e(n_max + 1, n_max + 1);
  for (int np = 0; np <= n_max; ++np) {
    for (int nm = 0; nm <= n_max; ++nm) {
      e(np, nm) = p.hbar * f.Omega_plus * (np + 0.5) + p.hbar * f.Omega_minus * (nm + 0.5);
    }
  }
  return e;
}

TensorState::TensorState(FockSpace space, Matrix coeffs) : space_(space), c_(std::move(coeffs)) {
  const Eigen::Index n2 = static_cast<Eigen::Index>(space.dim()) * space.dim();
  if (c_.rows() != n2 || c_.cols() != n2) throw DimensionError("TensorState: coefficient block must be N^2 x N^2");
  if (!c_.allFinite()) throw InvalidParameter("TensorState: non-finite coefficient");
}

TensorState TensorState::basis(FockSpace space, int n_plus, int m_plus, int n_minus, int m_minus) {
  const int n = space.dim();
  for (int i : {n_plus, m_plus, n_minus, m_minus}) {
    if (i < 0 || i >= n) throw InvalidParameter("TensorState::basis: index outside [0, N)");
  }
  Matrix c = Matrix::Zero(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(n) * n);
  c(vec_index(n_plus, m_plus, n), vec_index(n_minus, m_minus, n)) = 1.0;
  return TensorState(space, std::move(c));
}

TensorState TensorState::product(const HSOperator& plus, const HSOperator& minus) {
  if (!(plus.space() == minus.space())) throw DimensionError("TensorState::product: sector spaces differ");
  return TensorState(plus.space(), plus.vec() * minus.vec().transpose());
}

cplx TensorState::operator()(int n_plus, int m_plus, int n_minus, int m_minus) const {
  const int n = space_.dim();
  return c_(vec_index(n_plus, m_plus, n), vec_index(n_minus, m_minus, n));
}

TensorState TensorState::operator+(const TensorState& rhs) const {
  if (!(space_ == rhs.space_)) throw DimensionError("TensorState: spaces differ");
  return TensorState(space_, c_ + rhs.c_);
}

TensorState TensorState::operator-(const TensorState& rhs) const {
  if (!(space_ == rhs.space_)) throw DimensionError("TensorState: spaces differ");
  return TensorState(space_, c_ - rhs.c_);
}

TensorState TensorState::operator*(cplx s) const { return TensorState(space_, c_ * s); }

cplx tensor_inner(const TensorState& x, const TensorState& y) {
  if (!(x.space() == y.space())) throw DimensionError("tensor_inner: spaces differ");
  return (x.coeffs().conjugate().cwiseProduct(y.coeffs())).sum();
}

double tensor_norm(const TensorState& x) { return x.coeffs().norm(); }

TensorState TensorSuperOp::apply(const TensorState& x) const {
  if (!(plus.space() == x.space()) || !(minus.space() == x.space())) {
    throw DimensionError("TensorSuperOp: state space differs from operator space");
  }
  const Matrix& c = x.coeffs();
  return TensorState(x.space(), plus.to_dense() * c + c * minus.to_dense().transpose());
}

TensorSuperOp hamiltonian_op(const LandauParams& p, FockSpace space) {
  const ChiralFrequencies f = chiral_frequencies(p);
  const Operator hp = osc_hamiltonian(space, p.hbar * f.Omega_plus);
  const Operator hm = osc_hamiltonian(space, p.hbar * f.Omega_minus);
  return TensorSuperOp{left_action(hp), left_action(hm)};
}

TensorState apply_ladder(ChiralLadder which, const TensorState& x) {
  const int n = x.space().dim();
  const Matrix& c = x.coeffs();
  switch (which) {
    case ChiralLadder::APlus:
      return TensorState(x.space(), lower_rows(c, n));
    case ChiralLadder::APlusDag:
      return TensorState(x.space(), raise_rows(c, n));
    case ChiralLadder::AMinus:
      return TensorState(x.space(), lower_rows(c.transpose(), n).transpose());
    case ChiralLadder::AMinusDag:
      return TensorState(x.space(), raise_rows(c.transpose(), n).transpose());
  }
  throw InvalidParameter("apply_ladder: unknown ladder");
}

double ladder_algebra_residual(FockSpace space, int block) {
  if (block < 1 || block >= space.dim()) throw InvalidParameter("ladder_algebra_residual: block outside [1, N)");
  using L = ChiralLadder;
  auto commutator = [](L a, L b, const TensorState& x) {
    return apply_ladder(a, apply_ladder(b, x)) - apply_ladder(b, apply_ladder(a, x));
  };
  double worst = 0.0;
  for (int np = 0; np < block; ++np) {
    for (int mp = 0; mp < block; ++mp) {
      for (int nm = 0; nm < block; ++nm) {
        for (int mm = 0; mm < block; ++mm) {
          const TensorState x = TensorState::basis(space, np, mp, nm, mm);
          worst = std::max(worst, tensor_norm(commutator(L::APlus, L::APlusDag, x) - x));
          worst = std::max(worst, tensor_norm(commutator(L::AMinus, L::AMinusDag, x) - x));
          worst = std::max(worst, tensor_norm(commutator(L::APlus, L::AMinusDag, x)));
          worst = std::max(worst, tensor_norm(commutator(L::AMinus, L::APlusDag, x)));
        }
      }
    }
  }
  return worst;
}

TensorState tensor_cs(const LandauParams& p, FockSpace space, cplx z_plus, cplx z_minus) {
  p.validate();
  const double safe = std::sqrt(static_cast<double>(space.dim())) / 4.0;
  if (std::abs(z_plus) > safe || std::abs(z_minus) > safe) {
    throw InvalidParameter("tensor_cs: |z| exceeds safe radius " + std::to_string(safe));
  }
  const Vector gp = glauber(space, z_plus);
  const Vector gm = glauber(space, z_minus);
  const HSOperator plus(space, gp * gp.adjoint());
  const HSOperator minus(space, gm * gm.adjoint());
  return TensorState::product(plus, minus);
}

PartitionFunctions partition(const LandauParams& p, double beta) {
  require_beta(beta);
  const ChiralFrequencies f = chiral_frequencies(p);
  require_positive_sectors(f, "partition");
  auto z = [&](double omega) {
    const double x = sector_exponent(p.hbar, omega, beta);
    return std::exp(-x / 2.0) / -std::expm1(-x);
  };
  return PartitionFunctions{z(f.Omega_plus), z(f.Omega_minus)};
}

double husimi(const LandauParams& p, double beta, cplx z_plus, cplx z_minus) {
  require_beta(beta);
  const ChiralFrequencies f = chiral_frequencies(p);
  require_positive_sectors(f, "husimi");
  auto q = [&](double omega, cplx z) {
    const double c = -std::expm1(-sector_exponent(p.hbar, omega, beta));
    return c * std::exp(-c * std::norm(z));
  };
  return q(f.Omega_plus, z_plus) * q(f.Omega_minus, z_minus);
}

double husimi_trace_residual(const LandauParams& p, double beta, const QuadratureScheme& q) {
  require_beta(beta);
  const ChiralFrequencies f = chiral_frequencies(p);
  require_positive_sectors(f, "husimi_trace_residual");
  const double cp = -std::expm1(-sector_exponent(p.hbar, f.Omega_plus, beta));
  const double cm = -std::expm1(-sector_exponent(p.hbar, f.Omega_minus, beta));
  const auto np = q.plane_nodes(cp);
  const auto nm = q.plane_nodes(cm);
  // d^2z = dt dphi / 2 per sector, and the 1/pi^2 normalization.
  const double scale = 1.0 / (4.0 * std::numbers::pi * std::numbers::pi);
  std::vector<double> partial(np.size());
  parallel_for(np.size(), [&](std::size_t i) {
    const cplx zp = std::polar(std::sqrt(np[i].t), np[i].phi);
    double acc = 0.0;
    for (const PlaneNode& m : nm) acc += m.weight * husimi(p, beta, zp, std::polar(std::sqrt(m.t), m.phi));
    partial[i] = np[i].weight * acc;
  });
  double total = 0.0;
  for (double v : partial) total += v;
  return std::abs(scale * total - 1.0);
}

double tensor_resolution_residual(FockSpace space, const QuadratureScheme& q) {
  q.require_covers(space);
  const int block = space.dim() / 4 + 1;
  // The product rule over (z+, z-) assembles exactly kron(R, R) from the
  // per-sector sums, whose spectrum is {r_i r_j}.
  const Matrix r = sector_resolution(block, q);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(r, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = eig.eigenvalues();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    for (Eigen::Index j = 0; j < ev.size(); ++j) worst = std::max(worst, std::abs(ev(i) * ev(j) - 1.0));
  }
  return worst;
}

double sector_hilbert_resolution_residual(FockSpace space, const QuadratureScheme& q) {
  q.require_covers(space);
  const int block = space.dim() / 4 + 1;
  const auto nodes = q.plane_nodes();
  Matrix acc = Matrix::Zero(block, block);
  for (const PlaneNode& nd : nodes) {
    const cplx z = std::polar(std::sqrt(nd.t), nd.phi);
    Vector g(block);
    for (int i = 0; i < block; ++i) g(i) = displacement_element(i, 0, z);
    acc += (nd.weight / (2.0 * std::numbers::pi)) * (g * g.adjoint());
  }
  return (acc - Matrix::Identity(block, block)).cwiseAbs().maxCoeff();
}

cplx lll_state(int m, cplx z) {
  if (m < 0) throw InvalidParameter("lll_state: m must be non-negative");
  const double log_norm = -0.5 * (std::log(2.0 * std::numbers::pi) + std::lgamma(m + 1.0));
  return std::exp(log_norm - std::norm(z) / 4.0) * std::pow(z / std::sqrt(2.0), m);
}

cplx lll_overlap(int m, cplx z) {
  if (m < 0) throw InvalidParameter("lll_overlap: m must be non-negative");
  return std::exp(-std::norm(z) / 2.0 - 0.5 * std::lgamma(m + 1.0)) * std::pow(z, m);
}

HSOperator lll_coherent(FockSpace space, cplx z) {
  Matrix x = Matrix::Zero(space.dim(), space.dim());
  for (int m = 0; m < space.dim(); ++m) x(0, m) = std::conj(lll_overlap(m, z));
  return HSOperator(space, std::move(x));
}

SuperOp lll_projector(FockSpace space) {
  Matrix p0 = Matrix::Zero(space.dim(), space.dim());
  p0(0, 0) = 1.0;
  return vee(Operator(space, std::move(p0)), Operator::identity(space));
}

cplx projector_kernel(FockSpace space, cplx z, cplx z_prime) {
  const SuperOp p0 = lll_projector(space);
  const cplx element = hs_inner(lll_coherent(space, z), p0(lll_coherent(space, z_prime)));
  return std::exp(0.5 * (std::norm(z) + std::norm(z_prime))) * element;
}

cplx reproducing_kernel(cplx z, cplx z_bar_prime) { return std::exp(z * z_bar_prime); }

cplx project_hol(const HolFunction& f, const QuadratureScheme& q, cplx z) {
  const auto nodes = q.plane_nodes();
  cplx acc = 0.0;
  for (const PlaneNode& nd : nodes) {
    const cplx w = std::polar(std::sqrt(nd.t), nd.phi);
    acc += nd.weight * std::exp(z * std::conj(w) - nd.t) * f(w);
  }
  return acc / (2.0 * std::numbers::pi);
}

namespace {

struct UncertaintyOps {
  Matrix x, y, px, py;
};

// Dense superoperators in the row-major vectorization of one sector.
UncertaintyOps uncertainty_ops(const LandauParams& p, FockSpace space) {
  p.validate();
  if (!(p.theta > 0.0)) throw InvalidParameter("uncertainty_report: theta must be positive");
  const Matrix a = annihilation(space).matrix();
  const Matrix ad = creation(space).matrix();
  const Matrix id = Matrix::Identity(space.dim(), space.dim());
  // psi -> psi M is kron(I, M^T); psi -> C psi is kron(C, I).
  auto right = [&](const Matrix& m) { return vee_matrix(id, m.adjoint()); };
  auto comm = [&](const Matrix& c) { return Matrix(vee_matrix(c, id) - right(c)); };
  const double sx = std::sqrt(p.theta / 2.0);
  const double sp = p.hbar / std::sqrt(2.0 * p.theta);
  const cplx i(0.0, 1.0);
  return UncertaintyOps{sx * right(a + ad), i * sx * right(ad - a), -i * sp * comm(a - ad), -sp * comm(a + ad)};
}

UncertaintyReport assemble(double mx, double my, double mpx, double mpy, double sx, double sy, double spx,
                           double spy) {
  UncertaintyReport r{};
  r.mean_x = mx;
  r.mean_y = my;
  r.mean_px = mpx;
  r.mean_py = mpy;
  r.var_x = sx - mx * mx;
  r.var_y = sy - my * my;
  r.var_px = spx - mpx * mpx;
  r.var_py = spy - mpy * mpy;
  r.dx_dy = std::sqrt(r.var_x * r.var_y);
  r.dx_dpx = std::sqrt(r.var_x * r.var_px);
  r.dy_dpy = std::sqrt(r.var_y * r.var_py);
  r.dpx_dpy = std::sqrt(r.var_px * r.var_py);
  return r;
}

void require_normalized(double norm) {
  if (std::abs(norm - 1.0) > 1e-8) throw InvalidParameter("uncertainty_report: state must be normalized");
}

}  // namespace

UncertaintyReport uncertainty_report(const LandauParams& p, const HSOperator& state) {
  require_normalized(hs_norm(state));
  const UncertaintyOps ops = uncertainty_ops(p, state.space());
  const Vector v = state.vec();
  auto moments = [&](const Matrix& s, double& mean, double& second) {
    const Vector ov = s * v;
    mean = v.dot(ov).real();
    second = ov.squaredNorm();
  };
  double m[4], s[4];
  moments(ops.x, m[0], s[0]);
  moments(ops.y, m[1], s[1]);
  moments(ops.px, m[2], s[2]);
  moments(ops.py, m[3], s[3]);
  return assemble(m[0], m[1], m[2], m[3], s[0], s[1], s[2], s[3]);
}

UncertaintyReport uncertainty_report(const LandauParams& p, const TensorState& state) {
  require_normalized(tensor_norm(state));
  const UncertaintyOps ops = uncertainty_ops(p, state.space());
  const Matrix& c = state.coeffs();
  auto moments = [&](const Matrix& s, double& mean, double& second) {
    const Matrix oc = c * s.transpose();
    mean = (c.conjugate().cwiseProduct(oc)).sum().real();
    second = oc.squaredNorm();
  };
  double m[4], s[4];
  moments(ops.x, m[0], s[0]);
  moments(ops.y, m[1], s[1]);
  moments(ops.px, m[2], s[2]);
  moments(ops.py, m[3], s[3]);
  return assemble(m[0], m[1], m[2], m[3], s[0], s[1], s[2], s[3]);
}

UncertaintyReport uncertainty_report(const LandauParams& p, FockSpace space) {
  return uncertainty_report(p, TensorState::basis(space, 0, 0, 0, 0));
}

}  // namespace hsqm
