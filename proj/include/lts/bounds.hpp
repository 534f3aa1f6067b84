#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace lts {

// Subset of Z_modulus.
class ResidueSet {
 public:
  // Members are reduced mod `modulus`. Throws OutOfRange when modulus < 2.
  ResidueSet(std::uint32_t modulus, std::span<const std::uint32_t> members);
  ResidueSet(std::uint32_t modulus, std::initializer_list<std::uint32_t> members);

  static ResidueSet whole_group(std::uint32_t modulus);

  std::uint32_t modulus() const noexcept { return modulus_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  // Sorted, distinct.
  const std::vector<std::uint32_t>& members() const noexcept { return members_; }

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  std::uint32_t modulus_;
  std::vector<std::uint32_t> members_;
};

// {x + y : x in a, y in b}. Throws ModulusMismatch, EmptyOperand.
ResidueSet sumset(const ResidueSet& a, const ResidueSet& b);

// {x + y : x != y in a}; empty when |a| <= 1.
ResidueSet restricted_sumset(const ResidueSet& a);

// z(1-z)(3-2z) / (4z^2 - 6z + 3).
double average_value_ratio(double z);

struct TauResult {
  double argmax_z = 0.0;
  double tau = 0.0;
};

// Maximum of average_value_ratio on [1/2, 1] to within `tolerance` in z.
TauResult tau(double tolerance = 1e-8);

struct LowerBoundConstants {
  double edge_bound_coeff = 0.0;  // uncovered pairs < coeff * n^2
  double xi_sp_coeff = 0.0;       // spreading systems have > coeff * n^2 triples
  double naive_coeff = 0.0;       // edge coefficient from the plain Val(T) <= n-3 bound, (sqrt(13)-1)/12
};

// Positive root s of s^2 + (t/3)s - t/3 = 0; edge coefficient s/2 and
// triple coefficient (1/2 - s/2)/3. Throws OutOfRange unless 0 < t <= 1.
LowerBoundConstants lower_bound_constants(double tau_value);

struct BoundsReport {
  double tau = 0.0;
  double argmax_z = 0.0;
  double edge_bound_coeff = 0.0;
  double xi_sp_coeff = 0.0;
  double naive_coeff = 0.0;
};

BoundsReport bounds_report(double tolerance = 1e-8);

struct DensityPoint {
  std::size_t n = 0;
  std::size_t m = 0;
  double ratio = 0.0;  // m / n^2
};

// Size of the spreading 6p+3 construction relative to n^2. Throws NotOddPrime.
DensityPoint construction_density(std::uint32_t p);

}  // namespace lts
