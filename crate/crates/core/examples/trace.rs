//! Follows single bipartitions through the involutions, including the long
//! staircase pair with five odd parts.

use mock_theta::involution::{trace, Involution};
use mock_theta::partition::Bipartition;

fn show(which: Involution, lam: &str, mu: &str) {
    let x = Bipartition::new(lam.parse().unwrap(), mu.parse().unwrap());
    match trace(which, &x) {
        Ok(t) => print!("{t}"),
        Err(e) => println!("{which} {x}: {e}"),
    }
}

fn main() {
    show(Involution::Psi, "9,7,5,3,1", "16,15,8,6,2");
    show(Involution::Phi, "1", "5,1");
    show(Involution::Upsilon, "1", "3");
    show(Involution::Psi, "1", "3,0");
    show(Involution::Phi, "2", "1");
}
