//! Audits the three involutions on every bipartition up to a size bound and
//! prints the census for each size.

use mock_theta::involution::{audit, Involution};

fn main() {
    let n_max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    for which in Involution::ALL {
        println!("{which}");
        for n in 0..=n_max {
            let r = audit(which, n);
            println!(
                "  n={n:>2} domain {:>6} paired {:>6} excluded {:>3} survivors {:>3} signed sum {}  {}",
                r.domain_size,
                r.paired_count,
                r.excluded_total(),
                r.survivor_count,
                r.signed_total,
                if r.passed() { "ok" } else { "VIOLATIONS" }
            );
        }
    }
}
