#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace cliff {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using TwoSpinor = Eigen::Vector2cd;

struct FourVector {
  double x0 = 0, x1 = 0, x2 = 0, x3 = 0;
  double interval() const { return x0 * x0 - x1 * x1 - x2 * x2 - x3 * x3; }
  double norm2() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }
};

/// Pauli spin basis σ0..σ3.
Mat2 pauli(int j);

/// X = x^μ σ_μ = [[x0+x3, x1-ix2], [x1+ix2, x0-x3]].
Mat2 vector_to_herm(const FourVector& x);
/// Inverse of vector_to_herm; throws if X is not Hermitian to `tol`.
FourVector herm_to_vector(const Mat2& X, double tol = 1e-9);

inline constexpr double kDetTolerance = 1e-9;

/// X' = a X a*; requires |det a - 1| <= 1e-9.
Mat2 sl2c_act(const Mat2& a, const Mat2& X);

/// Random element of SL(2,C): a Gaussian matrix scaled by 1/sqrt(det).
Mat2 random_sl2c(std::mt19937_64& rng);

/// Components x^0..x^3 of the spintensor ξ^λ ξ^ν̇ (with the 1/√2 factors).
Eigen::Vector4cd spinor_outer(const TwoSpinor& xi, const TwoSpinor& xi_dot);
/// Real part of a complex four-vector; throws if an imaginary part exceeds tol.
FourVector real_four_vector(const Eigen::Vector4cd& v, double tol = 1e-9);

/// ω = (i/√2) [[x0+x3, x1+ix2], [x1+ix2, x0-x3]] π, the displayed incidence matrix.
TwoSpinor twistor_incidence(const FourVector& x, const TwoSpinor& pi);

struct Twistor {
  TwoSpinor omega;
  TwoSpinor pi;
};

/// ω·π̄ + ω̄·π = Z† H Z with H = [[0, I], [I, 0]].
double twistor_norm(const Twistor& z);
Eigen::Matrix4cd twistor_form();
struct FormSignature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
FormSignature twistor_signature();

/// ρ = [[|a|², a b*], [b a*, |b|²]]; requires |a|²+|b|² = 1 within 1e-9.
Mat2 qubit_density(cplx a, cplx b);
/// P_j = Tr(ρ σ_j).
Eigen::Vector3d bloch_vector(const Mat2& rho);
/// ρ = (σ0 + P·σ)/2; requires |P| <= 1 (within 1e-12).
Mat2 density_from_bloch(const Eigen::Vector3d& P);
double purity(const Mat2& rho);

struct DoubleCoverReport {
  int samples = 0;
  int composition_ok = 0;
  int sign_ok = 0;
  int distinct_ok = 0;
  bool identity_ok = false;
  double max_error = 0;
  bool ok() const {
    return identity_ok && composition_ok == samples && sign_ok == samples && distinct_ok == samples;
  }
};

/// Properties of a ~ g_a: identity, g_{a1} g_{a2} = g_{a1 a2}, g_a = g_{-a}, and
/// g_a != g_{a'} for a' != ±a, on seeded samples.
DoubleCoverReport sl2c_double_cover_check(int samples, std::mt19937_64& rng);

struct NumericCheck {
  std::string name;
  int samples = 0;
  int passed = 0;
  double tolerance = 0;
  double worst = 0;
  bool ok() const { return samples > 0 && passed == samples; }
};

/// Sampled identities of the numeric layer: det invariance, a ≡ -a, null
/// outer products, Bloch round trip and the purity identity.
std::vector<NumericCheck> numeric_property_checks(int samples, std::mt19937_64& rng);

}  // namespace cliff
