// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fedring/crypto/group.hpp"
#include "fedring/rng.hpp"

namespace fedring::crypto {

struct KeyPair {
    Scalar sk;
    GroupElement pk;  // g^sk
};

/// Fresh signing pair; sk uniform in [1, q-1].
KeyPair keygen(const GroupParams& group, Rng& rng);

}  // namespace fedring::crypto
