//! Corrupts one coefficient of one builder and shows where the suite notices.

use mock_theta::verifier::{verify_all_with, BuilderId, Fault, Workshop};

fn main() {
    let fault = Fault { builder: BuilderId::NegQQInf, power: 7, delta: 1 };
    println!("injecting {fault:?}");
    for r in verify_all_with(&Workshop::with_fault(fault), 30, 16) {
        if let Some(m) = &r.first_mismatch {
            println!("{:<10} fails at q^{}: {} vs {}", r.id.tag(), m.power, m.left, m.right);
        }
    }
}
