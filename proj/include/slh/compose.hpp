// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "slh/slh_model.hpp"

namespace slh {

// Parallel composition: ports of g1 followed by ports of g2, Hamiltonians
// added.  Both models must live on the same registry (embed() first).
SLHModel concatenate(const SLHModel& g1, const SLHModel& g2);

// Feed every output of g1 into the matching input of g2.  Port counts and
// registries must agree.  Besides the cascaded scattering and coupling this
// picks up the interconnection Hamiltonian
//   omega += (M - M^dag) / 2i,   M = coupling2^dag * scattering2 * coupling1,
// which is what makes loop-induced detunings appear in composed networks.
SLHModel series(const SLHModel& g2, const SLHModel& g1);

// Re-express g on a larger registry: couplings and Hamiltonian blocks are
// permuted/zero-padded into the target's mode ordering.  Every mode of g must
// exist in target.
SLHModel embed(const SLHModel& g, const ModeRegistry& target);

// m pass-through channels (S = I, no coupling, no Hamiltonian).
SLHModel identity_channels(const ModeRegistry& registry, Index ports);

// Static (coupling-free) network with the given unitary scattering.
SLHModel static_network(const ModeRegistry& registry, Matrix scattering);

// Channel permutation: input k exits on port destination[k].
SLHModel permutation_network(const ModeRegistry& registry,
                             const std::vector<Index>& destination);

}  // namespace slh
