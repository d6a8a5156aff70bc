#include "confinv/invariants.hpp"

namespace confinv {

namespace {

void require_non_negative(const Value& v, const char* what) {
  if (v.eval() < 0) throw DomainError(std::string(what) + " must be non-negative");
}

BigInt factorial(long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace

Value gauss_scalar(int n, const Value& mean_sq, const Value& second_sq) {
  if (n < 1) throw DomainError("dimension must be at least 1");
  require_non_negative(mean_sq, "mean_sq");
  require_non_negative(second_sq, "second_sq");
  return Value(static_cast<long>(n) * (n - 1)) + mean_sq - second_sq;
}

WDPair wd_from_extrinsic(const ExtrinsicData& d) {
  if (d.n < 1) throw DomainError("dimension must be at least 1");
  require_non_negative(d.mean_sq, "mean_sq");
  require_non_negative(d.second_sq, "second_sq");
  if (d.n == 1) {
    Value w = d.volume * d.mean_sq;
    return {w, w};
  }
  const long n = d.n;
  return {(Value(n * n) + d.mean_sq) * d.volume, (Value(n) + d.second_sq) * d.volume};
}

Value c2_min(int n, const Value& mean_sq) {
  if (n < 2) throw DomainError("c2_min needs n >= 2");
  require_non_negative(mean_sq, "mean_sq");
  return Value(1) + mean_sq / Value(static_cast<long>(n) * n);
}

ClosedFormValue unit_sphere_volume(int n) {
  if (n < 1) throw DomainError("sphere dimension must be at least 1");
  if (n % 2 == 1) {
    // Gamma(m) = (m-1)! with m = (n+1)/2.
    const long m = (n + 1) / 2;
    return ClosedFormValue(Rational(2) / Rational(factorial(m - 1))) * ClosedFormValue::pi(m);
  }
  // Gamma(m + 1/2) = (2m)! sqrt(pi) / (4^m m!) with m = n/2.
  const long m = n / 2;
  BigInt four_m;
  mpz_ui_pow_ui(four_m.get_mpz_t(), 4, static_cast<unsigned long>(m));
  Rational c = Rational(2 * four_m * factorial(m)) / Rational(factorial(2 * m));
  return ClosedFormValue(c) * ClosedFormValue::pi(m);
}

ClosedFormValue aubin_bound(int n) {
  if (n < 3) throw DomainError("Aubin bound needs n >= 3");
  return ClosedFormValue(Rational(static_cast<long>(n) * (n - 1))) *
         unit_sphere_volume(n).pow(Rational(2, n));
}

YamabeAubin yamabe_and_aubin(int n, const Value& scalar, const Value& volume) {
  if (n < 3) throw DomainError("Yamabe quotient needs n >= 3");
  if (!(volume.eval() > 0)) throw DomainError("volume must be positive");
  YamabeAubin out;
  out.lambda = scalar * volume.pow(Rational(2, n));
  out.aubin = Value(aubin_bound(n));
  out.within_bound = out.lambda.eval() <= out.aubin.eval() + HighFloat(kAubinTolerance);
  return out;
}

LowDimSigma sigma_low_dim(int n, long chi, const Value& w_opt) {
  if (n == 1) {
    Value two_pi = ClosedFormValue(Rational(2)) * ClosedFormValue::pi();
    return {Value(0), two_pi, two_pi};
  }
  if (n != 2) throw DomainError("sigma_low_dim handles n = 1 and n = 2 only");
  if (chi == 0) return {Value(0), std::nullopt, std::nullopt};
  if (!(w_opt.eval() > 0)) throw DomainError("W_opt must be positive");
  Value eight_pi_chi = ClosedFormValue(Rational(8 * chi)) * ClosedFormValue::pi();
  return {eight_pi_chi / w_opt.sqrt(), std::nullopt, std::nullopt};
}

}  // namespace confinv
