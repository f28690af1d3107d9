//! Compares, size by size, the signed sum over an involution's domain with
//! the sum over its unpaired elements and with the coefficient read off the
//! generating products.

use mock_theta::involution::Involution;
use mock_theta::verifier::cancellation_check;

fn main() {
    for which in Involution::ALL {
        println!("{which}");
        for n in 0..=12 {
            let r = cancellation_check(which, n);
            println!("  n={n:>2} direct {:<16} unpaired {:<16} analytic {:<16} {:?}", r.direct.to_string(), r.unpaired.to_string(), r.analytic.to_string(), r.status);
        }
    }
}
