#include "cliff/spinor.hpp"

#include <cmath>
#include <stdexcept>

namespace cliff {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
constexpr cplx kI{0.0, 1.0};

cplx gaussian_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  return {re, n(rng)};
}

TwoSpinor random_spinor(std::mt19937_64& rng) {
  const cplx a = gaussian_complex(rng);
  return TwoSpinor(a, gaussian_complex(rng));
}

FourVector random_vector(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  FourVector x;
  x.x0 = n(rng);
  x.x1 = n(rng);
  x.x2 = n(rng);
  x.x3 = n(rng);
  return x;
}

// Random mixed state: convex combination of two random pure states.
Mat2 random_density(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto pure = [&rng]() {
    TwoSpinor s = random_spinor(rng);
    s.normalize();
    return qubit_density(s(0), s(1));
  };
  const double t = u(rng);
  return t * pure() + (1.0 - t) * pure();
}

}  // namespace

Mat2 pauli(int j) {
  Mat2 m;
  switch (j) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -kI, kI, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw std::out_of_range("Pauli index must be 0..3");
  }
  return m;
}

Mat2 vector_to_herm(const FourVector& x) {
  Mat2 X;
  X << cplx(x.x0 + x.x3, 0), cplx(x.x1, -x.x2), cplx(x.x1, x.x2), cplx(x.x0 - x.x3, 0);
  return X;
}

FourVector herm_to_vector(const Mat2& X, double tol) {
  if ((X - X.adjoint()).norm() > tol * (1.0 + X.norm())) throw std::invalid_argument("matrix is not Hermitian");
  FourVector x;
  x.x0 = 0.5 * (X(0, 0) + X(1, 1)).real();
  x.x3 = 0.5 * (X(0, 0) - X(1, 1)).real();
  x.x1 = 0.5 * (X(0, 1) + X(1, 0)).real();
  x.x2 = 0.5 * (X(1, 0) - X(0, 1)).imag();
  return x;
}

Mat2 sl2c_act(const Mat2& a, const Mat2& X) {
  if (std::abs(a.determinant() - 1.0) > kDetTolerance) throw std::invalid_argument("det a deviates from 1");
  return a * X * a.adjoint();
}

Mat2 random_sl2c(std::mt19937_64& rng) {
  Mat2 m;
  do {
    for (int i = 0; i < 4; ++i) m(i / 2, i % 2) = gaussian_complex(rng);
  } while (std::abs(m.determinant()) < 1e-3);
  return m / std::sqrt(m.determinant());
}

Eigen::Vector4cd spinor_outer(const TwoSpinor& xi, const TwoSpinor& xi_dot) {
  const cplx a = xi(0), b = xi(1), ad = xi_dot(0), bd = xi_dot(1);
  Eigen::Vector4cd x;
  x(0) = kInvSqrt2 * (a * ad + b * bd);
  x(1) = kInvSqrt2 * (a * bd + b * ad);
  x(2) = -kI * kInvSqrt2 * (a * bd - b * ad);
  x(3) = kInvSqrt2 * (a * ad - b * bd);
  return x;
}

FourVector real_four_vector(const Eigen::Vector4cd& v, double tol) {
  if (v.imag().cwiseAbs().maxCoeff() > tol * (1.0 + v.norm())) throw std::invalid_argument("four-vector is not real");
  return {v(0).real(), v(1).real(), v(2).real(), v(3).real()};
}

TwoSpinor twistor_incidence(const FourVector& x, const TwoSpinor& pi) {
  Mat2 m;
  m << cplx(x.x0 + x.x3, 0), cplx(x.x1, x.x2), cplx(x.x1, x.x2), cplx(x.x0 - x.x3, 0);
  return (kI * kInvSqrt2) * (m * pi);
}

double twistor_norm(const Twistor& z) {
  return 2.0 * (z.omega.dot(z.pi)).real();  // dot conjugates its first argument
}

Eigen::Matrix4cd twistor_form() {
  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  h.block<2, 2>(0, 2) = Mat2::Identity();
  h.block<2, 2>(2, 0) = Mat2::Identity();
  return h;
}

FormSignature twistor_signature() {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(twistor_form());
  FormSignature s;
  for (int i = 0; i < 4; ++i) {
    const double ev = solver.eigenvalues()(i);
    if (ev > 1e-12) ++s.positive;
    else if (ev < -1e-12) ++s.negative;
    else ++s.zero;
  }
  return s;
}

Mat2 qubit_density(cplx a, cplx b) {
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-9) throw std::invalid_argument("qubit amplitudes are not normalized");
  Mat2 rho;
  rho << std::norm(a), a * std::conj(b), b * std::conj(a), std::norm(b);
  return rho;
}

Eigen::Vector3d bloch_vector(const Mat2& rho) {
  Eigen::Vector3d P;
  for (int j = 1; j <= 3; ++j) P(j - 1) = (rho * pauli(j)).trace().real();
  return P;
}

Mat2 density_from_bloch(const Eigen::Vector3d& P) {
  if (P.norm() > 1.0 + 1e-12) throw std::invalid_argument("Bloch vector longer than 1");
  Mat2 rho = pauli(0);
  for (int j = 1; j <= 3; ++j) rho += P(j - 1) * pauli(j);
  return 0.5 * rho;
}

double purity(const Mat2& rho) { return (rho * rho).trace().real(); }

DoubleCoverReport sl2c_double_cover_check(int samples, std::mt19937_64& rng) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  DoubleCoverReport rep;
  rep.samples = samples;
  const Mat2 X0 = vector_to_herm(random_vector(rng));
  rep.identity_ok = (sl2c_act(Mat2::Identity(), X0) - X0).norm() <= 1e-12 * (1.0 + X0.norm());
  for (int s = 0; s < samples; ++s) {
    const Mat2 a1 = random_sl2c(rng);
    const Mat2 a2 = random_sl2c(rng);
    const Mat2 X = vector_to_herm(random_vector(rng));
    const double scale = 1.0 + X.norm();
    const double comp = (sl2c_act(a1, sl2c_act(a2, X)) - sl2c_act(a1 * a2, X)).norm() /
                        (scale * (1.0 + (a1 * a2).squaredNorm()) * (1.0 + a2.squaredNorm()));
    const double sign = (sl2c_act(-a1, X) - sl2c_act(a1, X)).norm() / (scale * (1.0 + a1.squaredNorm()));
    rep.max_error = std::max({rep.max_error, comp, sign});
    if (comp <= 1e-9) ++rep.composition_ok;
    if (sign <= 1e-9) ++rep.sign_ok;
    // a1 and a2 are independent samples, hence a2 != ±a1; their maps must
    // differ on one of the four basis matrices.
    double diff = 0;
    for (int j = 0; j < 4; ++j) diff = std::max(diff, (sl2c_act(a1, pauli(j)) - sl2c_act(a2, pauli(j))).norm());
    if (diff > 1e-6) ++rep.distinct_ok;
  }
  return rep;
}

std::vector<NumericCheck> numeric_property_checks(int samples, std::mt19937_64& rng) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  std::vector<NumericCheck> out;

  NumericCheck det{"det invariance", samples, 0, 1e-9, 0};
  NumericCheck sign{"a and -a act identically", samples, 0, 1e-9, 0};
  for (int s = 0; s < samples; ++s) {
    const Mat2 a = random_sl2c(rng);
    const Mat2 X = vector_to_herm(random_vector(rng));
    const Mat2 Xp = sl2c_act(a, X);
    const double d0 = X.determinant().real();
    const double err = std::abs(Xp.determinant() - d0) / (1.0 + std::abs(d0));
    det.worst = std::max(det.worst, err);
    if (err <= det.tolerance) ++det.passed;
    const double serr = (sl2c_act(-a, X) - Xp).norm() / (1.0 + Xp.norm());
    sign.worst = std::max(sign.worst, serr);
    if (serr <= sign.tolerance) ++sign.passed;
  }
  out.push_back(det);
  out.push_back(sign);

  NumericCheck null{"null outer product", samples, 0, 1e-12, 0};
  for (int s = 0; s < samples; ++s) {
    const TwoSpinor xi = random_spinor(rng);
    const FourVector x = real_four_vector(spinor_outer(xi, xi.conjugate()));
    const double err = std::abs(x.interval()) / std::max(x.norm2(), 1e-300);
    null.worst = std::max(null.worst, err);
    if (err <= null.tolerance) ++null.passed;
  }
  out.push_back(null);

  NumericCheck round{"Bloch round trip", samples, 0, 1e-12, 0};
  NumericCheck pur{"purity identity", samples, 0, 1e-12, 0};
  for (int s = 0; s < samples; ++s) {
    const Mat2 rho = random_density(rng);
    const Eigen::Vector3d P = bloch_vector(rho);
    const double rerr = (density_from_bloch(P) - rho).norm();
    round.worst = std::max(round.worst, rerr);
    if (rerr <= round.tolerance) ++round.passed;
    const double perr = std::abs(purity(rho) - 0.5 * (1.0 + P.squaredNorm()));
    pur.worst = std::max(pur.worst, perr);
    if (perr <= pur.tolerance) ++pur.passed;
  }
  out.push_back(round);
  out.push_back(pur);
  return out;
}

}  // namespace cliff
