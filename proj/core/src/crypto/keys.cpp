// SPDX-License-Identifier: Apache-2.0
#include "fedring/crypto/keys.hpp"

namespace fedring::crypto {

KeyPair keygen(const GroupParams& group, Rng& rng) {
    (void)group;  // the base point is fixed by the group choice
    KeyPair kp;
    kp.sk = random_nonzero_scalar(rng);
    kp.pk = scalarmult_base(kp.sk);
    return kp;
}

}  // namespace fedring::crypto
