#pragma once

#include "hermlie/hermitian.hpp"
#include "hermlie/normal_forms.hpp"
#include "hermlie/shear.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace hermlie {

/// Deterministic source of small integers and rationals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int integer(int lo, int hi);
  /// p/q with |p| <= max_num, 1 <= q <= max_den.
  Scalar rational(int max_num = 4, int max_den = 3);
  Scalar nonzero_rational(int max_num = 4, int max_den = 3);
  bool coin() { return integer(0, 1) == 1; }
  Vector vector(std::size_t n, int max_num = 4, int max_den = 3);
  Vector nonzero_vector(std::size_t n, int max_num = 4, int max_den = 3);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Random invertible matrix commuting with the standard J on Q^dim.
Matrix random_complex_linear(Rng& rng, std::size_t dim);

/// Random metric compatible with J: S = P^{-T} A^T A P^{-1} for P = adapted_basis(J)
/// and a random complex-linear invertible A.
Metric random_compatible_metric(Rng& rng, const ComplexStructure& j);

enum class ShearProfile { Nilpotent, TypeI, TypeII, TypeIII, Mixed };
std::string profile_name(ShearProfile p);
/// Throws InvalidInput on an unknown name.
ShearProfile parse_profile(const std::string& name);

struct GeneratedShear {
  PreShearData data;
  Metric metric;
  ComplexStructure j;
  ShearProfile profile;  // the profile actually used after any fallback
};

/// Complex shear data with a compatible metric, deterministic in `seed`.
/// Normal-form profiles are conjugated by a random complex-linear change of
/// basis and the normal-form metric is transported along it.  Profiles that
/// need more room than `dim` allows fall back: Mixed -> TypeIII (dim 4),
/// anything but Nilpotent -> TypeI (dim 2).
GeneratedShear random_complex_shear(std::uint64_t seed, ShearProfile profile, std::size_t dim = 6);

/// Random parameters for the normal-form constructors.
KahlerNormalForm random_kahler_params(Rng& rng, KahlerType type, int s, int r, int ell);
TypeIINormalForm random_typeII_params(Rng& rng, int s, int ell, int m);

}  // namespace hermlie
