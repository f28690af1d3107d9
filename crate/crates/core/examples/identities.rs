//! The identity catalog with the builders each side reads.

use mock_theta::verifier::IdentityId;

fn main() {
    for id in IdentityId::ALL {
        println!("{:<11} {}", id.tag(), id.describe());
        for c in id.comparisons() {
            let names = |s: &[_]| s.iter().map(|b: &mock_theta::verifier::BuilderId| b.name()).collect::<Vec<_>>().join(", ");
            println!("{:>13} left [{}] right [{}]", c.label, names(c.left.builders()), names(c.right.builders()));
        }
    }
}
