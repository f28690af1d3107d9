//! Sets α = 1 in the two-variable identities and checks them against their
//! one-variable forms.

use mock_theta::verifier::{specialization_check, IdentityId};

fn main() {
    for (bi, uni) in IdentityId::SPECIALIZATIONS {
        let r = specialization_check(bi, uni, 40);
        println!("{bi:<10} -> {uni:<8} {:?}", r.status);
    }
}
