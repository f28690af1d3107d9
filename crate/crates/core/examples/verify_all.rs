//! Runs every registered identity at the default orders.

use mock_theta::verifier::verify_all;

fn main() {
    let (n1, n2) = (100, 40);
    let reports = verify_all(n1, n2);
    for r in &reports {
        let mark = if r.passed() { "pass" } else { "FAIL" };
        println!("{:<11} order {:>3}  {mark}  {:>6} ms", r.id.tag(), r.order, r.elapsed_ms);
        if let Some(m) = &r.first_mismatch {
            println!("    first mismatch at q^{} ({}): {} vs {}", m.power, m.component, m.left, m.right);
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    println!("{} identities, {failed} failed", reports.len());
}
