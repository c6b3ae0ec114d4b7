#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tangle/state.hpp"

namespace tangle {

struct FamilyParams {
  double p = 0.0;
  double phi = 0.0;
};

// sqrt(p)|a> - e^{i phi} sqrt(1-p)|b>; a and b must be orthonormal.
PureState superposition(const PureState& a, const PureState& b, double p, double phi);

PureState ghz3();      // (|000> + |111>)/sqrt2
PureState w3();        // (|001> + |010> + |100>)/sqrt3
PureState ghz4();      // (|0000> + |1111>)/sqrt2
PureState w4();        // X⊗X⊗X⊗X |W~4> = (|1000> + |0100> + |0010> + |0001>)/2
PureState wtilde4();   // (|0111> + |1011> + |1101> + |1110>)/2
PureState phi2();      // (sqrt2|1111> + |1000> + |0100> + |0010> + |0001>)/sqrt6
PureState phi3();      // (|1111> + |1100> + |0010> + |0001>)/2
PureState g3();        // (|0000> + |1110>)/sqrt2
PureState psi1_app();  // (GHZ3 + W3)/sqrt2
PureState psi2_app();  // (GHZ3 - W3)/sqrt2

PureState z3(double p, double phi);     // superposition(GHZ3, W3)
PureState z4(double p, double phi);     // superposition(GHZ4, W4)
PureState z_app(double p, double phi);  // superposition(psi1_app, psi2_app)

// Registry lookup. Families (Z3, Z4, Z_app) require params; fixed states reject them.
PureState named_state(std::string_view name, std::optional<FamilyParams> params = std::nullopt);
const std::vector<std::string_view>& named_state_names();
bool is_family(std::string_view name);

// p|GHZ4><GHZ4| + (1-p)|W4><W4|
DensityMatrix rho4(double p);
// p|psi1_app><psi1_app| + (1-p)|psi2_app><psi2_app|
DensityMatrix pi_app(double p);

void check_probability(double p, std::string_view what = "p");

}  // namespace tangle
