#pragma once

#include <string_view>
#include <vector>

#include "integrate.h"
#include "quantum.h"

namespace zerocross {

// One adiabatic zero crossing plus the phase integral of omega accumulated
// since the previous crossing (unused on the first entry).
struct Crossing {
    BogoliubovPair pair;
    double Phi_before = 0.0;
};

struct CrossingPlan {
    std::vector<Crossing> crossings;
};

BogoliubovPair identity_pair();

// Composition of two crossings separated by phase Phi:
//   U+ = w+ u+ e^{i Phi} + w-* u- e^{-i Phi}
//   U- = w- u+ e^{i Phi} + w+* u- e^{-i Phi}
// u is the earlier crossing. Preserves |U+|^2 - |U-|^2 = 1.
BogoliubovPair compose_two(const BogoliubovPair& u, const BogoliubovPair& w, double Phi);

// Mean amplification of the adiabatic energy ratio, beta = 1 + 2 |u-|^2.
double beta_of(const BogoliubovPair& pair);

struct BetaExtremes {
    double beta_min = 1.0;
    double beta_max = 1.0;
};

// Range of beta_of(compose_two(u, w, Phi)) over the inter-crossing phase:
// beta_min/max = 1 + 2 (|w+ u-| -+ |w- u+|)^2.
BetaExtremes beta_extremes(const BogoliubovPair& u, const BogoliubovPair& w);

// Left fold of compose_two over the crossings; empty plan gives the
// identity pair.
BogoliubovPair compose_plan(const CrossingPlan& plan);

// Amplification for an arbitrary initial state, beta + delta-beta with
//   delta-beta = { [omega0^2 xx - pp] Re(u+ u-) + omega0 xp_sym Im(u+ u-) }
//               / mean energy.
// The moments need not satisfy the uncertainty bound (sudden-limit
// idealizations like pp = 0 are allowed); only E > 0 is required.
double beta_general(const BogoliubovPair& pair, const MomentState& moments, double omega0);

// Plan document: {"crossings":[{"u_plus":[re,im],"u_minus":[re,im],
// "phi_before":x}, ...]}. Rejects unknown structure, non-finite numbers,
// negative phases, and pairs violating the Bogoliubov constraint.
CrossingPlan parse_plan(std::string_view text);

}
