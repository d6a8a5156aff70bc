#pragma once

// Dimension-generic identities between extrinsic data of an isometric
// embedding into a sphere and intrinsic conformal invariants.

#include "confinv/closedform.hpp"

#include <optional>

namespace confinv {

/// Extrinsic data of an embedding of an n-manifold with constant norms.
/// mean_sq = |H|^2, second_sq = |alpha|^2. The mean-curvature energy is
/// volume * mean_sq (sometimes written Phi, sometimes Psi).
struct ExtrinsicData {
  int n = 0;
  Value mean_sq;
  Value second_sq;
  Value volume;
};

struct WDPair {
  Value W;
  Value D;
};

/// n(n-1) + mean_sq - second_sq.
Value gauss_scalar(int n, const Value& mean_sq, const Value& second_sq);

/// W = (n^2 + mean_sq) vol, D = (n + second_sq) vol for n >= 2;
/// W = D = vol * mean_sq for curves.
WDPair wd_from_extrinsic(const ExtrinsicData& d);

/// Scaling factor 1 + mean_sq/n^2 that makes the class realizer minimal.
Value c2_min(int n, const Value& mean_sq);

/// Volume of the unit n-sphere, 2 pi^((n+1)/2) / Gamma((n+1)/2), exact.
ClosedFormValue unit_sphere_volume(int n);

/// n(n-1) omega_n^(2/n).
ClosedFormValue aubin_bound(int n);

struct YamabeAubin {
  Value lambda;
  Value aubin;
  bool within_bound = false;
};

inline constexpr double kAubinTolerance = 1e-10;

/// lambda = scalar * volume^(2/n) against the Aubin bound, n >= 3.
YamabeAubin yamabe_and_aubin(int n, const Value& scalar, const Value& volume);

struct LowDimSigma {
  Value sigma;
  std::optional<Value> W;  // set for n = 1 (the convention W = D = 2 pi)
  std::optional<Value> D;
};

/// n = 1: sigma 0 with W = D = 2 pi. n = 2: 8 pi chi / sqrt(W_opt).
LowDimSigma sigma_low_dim(int n, long chi, const Value& w_opt = Value());

}  // namespace confinv
