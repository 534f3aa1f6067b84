#include "lts/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lts/constructions.hpp"
#include "lts/errors.hpp"

namespace lts {

ResidueSet::ResidueSet(std::uint32_t modulus, std::span<const std::uint32_t> members) : modulus_(modulus) {
  if (modulus < 2) throw Error(ErrorCode::OutOfRange, "modulus must be at least 2");
  members_.reserve(members.size());
  for (auto v : members) members_.push_back(v % modulus);
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

ResidueSet::ResidueSet(std::uint32_t modulus, std::initializer_list<std::uint32_t> members)
    : ResidueSet(modulus, std::span<const std::uint32_t>(members.begin(), members.size())) {}

ResidueSet ResidueSet::whole_group(std::uint32_t modulus) {
  std::vector<std::uint32_t> all(modulus);
  for (std::uint32_t i = 0; i < modulus; ++i) all[i] = i;
  return ResidueSet(modulus, all);
}

ResidueSet sumset(const ResidueSet& a, const ResidueSet& b) {
  if (a.modulus() != b.modulus()) {
    throw Error(ErrorCode::ModulusMismatch,
                std::to_string(a.modulus()) + " vs " + std::to_string(b.modulus()));
  }
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptyOperand, "sumset of an empty set");
  const auto m = a.modulus();
  std::vector<std::uint8_t> hit(m, 0);
  for (auto x : a.members()) {
    for (auto y : b.members()) hit[(x + y) % m] = 1;
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t r = 0; r < m; ++r) {
    if (hit[r]) out.push_back(r);
  }
  return ResidueSet(m, out);
}

ResidueSet restricted_sumset(const ResidueSet& a) {
  const auto m = a.modulus();
  const auto& xs = a.members();
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) out.push_back((xs[i] + xs[j]) % m);
  }
  return ResidueSet(m, out);
}

double average_value_ratio(double z) {
  return z * (1.0 - z) * (3.0 - 2.0 * z) / (4.0 * z * z - 6.0 * z + 3.0);
}

TauResult tau(double tolerance) {
  if (!(tolerance > 0.0)) throw Error(ErrorCode::OutOfRange, "tolerance must be positive");
  constexpr double lo = 0.5;
  constexpr double hi = 1.0;
  constexpr int grid = 1000;
  const double step = (hi - lo) / grid;

  // Coarse scan first; the bracketing search then runs around the best node.
  int best = 0;
  for (int i = 1; i <= grid; ++i) {
    if (average_value_ratio(lo + i * step) > average_value_ratio(lo + best * step)) best = i;
  }
  double left = std::max(lo, lo + (best - 1) * step);
  double right = std::min(hi, lo + (best + 1) * step);

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = right - inv_phi * (right - left);
  double x2 = left + inv_phi * (right - left);
  double f1 = average_value_ratio(x1);
  double f2 = average_value_ratio(x2);
  while (right - left > tolerance) {
    if (f1 < f2) {
      left = x1;
      x1 = x2;
      f1 = f2;
      x2 = left + inv_phi * (right - left);
      f2 = average_value_ratio(x2);
    } else {
      right = x2;
      x2 = x1;
      f2 = f1;
      x1 = right - inv_phi * (right - left);
      f1 = average_value_ratio(x1);
    }
  }
  double z = 0.5 * (left + right);
  return TauResult{z, average_value_ratio(z)};
}

LowerBoundConstants lower_bound_constants(double tau_value) {
  if (!(tau_value > 0.0 && tau_value <= 1.0)) {
    throw Error(ErrorCode::OutOfRange, "tau must lie in (0, 1], got " + std::to_string(tau_value));
  }
  auto edge_coeff = [](double t) {
    double half_b = t / 6.0;
    double s = -half_b + std::sqrt(half_b * half_b + t / 3.0);
    return s / 2.0;
  };
  LowerBoundConstants out;
  out.edge_bound_coeff = edge_coeff(tau_value);
  out.xi_sp_coeff = (0.5 - out.edge_bound_coeff) / 3.0;
  out.naive_coeff = edge_coeff(1.0);
  return out;
}

BoundsReport bounds_report(double tolerance) {
  auto t = tau(tolerance);
  auto c = lower_bound_constants(t.tau);
  return BoundsReport{t.tau, t.argmax_z, c.edge_bound_coeff, c.xi_sp_coeff, c.naive_coeff};
}

DensityPoint construction_density(std::uint32_t p) {
  auto sys = spreading_6p3(p);
  DensityPoint d;
  d.n = sys.n();
  d.m = sys.size();
  d.ratio = static_cast<double>(d.m) / static_cast<double>(d.n * d.n);
  return d;
}

}  // namespace lts
