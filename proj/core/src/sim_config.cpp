#include "diraclab/sim_config.hpp"

namespace diraclab {

const SimConfig& SimConfig::validated() const {
  auto fail = [](const std::string& field, const std::string& why) {
    throw std::invalid_argument("SimConfig." + field + ": " + why);
  };
  if (!(m > 0.0)) fail("m", "mass must be positive");
  if (!(L > 0.0)) fail("L", "interval length must be positive");
  if (R < 1) fail("R", "mode cutoff must be at least 1");
  if (N < 4 * (2 * R + 1))
    fail("N", "grid must oversample the mode band: need N >= 4(2R+1) = " +
                  std::to_string(4 * (2 * R + 1)));
  if (!(t0 < t1)) fail("t1", "requires t0 < t1");
  if (!(t1 < tf)) fail("tf", "requires t1 < tf");
  if (!std::isfinite(q)) fail("q", "charge must be finite");
  return *this;
}

}  // namespace diraclab
