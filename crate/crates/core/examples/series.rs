//! Prints the three mock theta functions, their two-variable forms and a few
//! products.

use mock_theta::qseries::{builders, pochhammer, QPochhammer};

fn main() {
    let n = 12;
    println!("f(q)        = {}", builders::mock_f(n));
    println!("φ(q)        = {}", builders::mock_phi(n));
    println!("ψ(q)        = {}", builders::mock_psi(n));
    println!("φ(-q)       = {}", builders::mock_phi(n).twist_q_negate());
    println!("f(αq;q)     = {}", builders::mock_f_alpha(6, true));
    println!("φ(-αq;-q)   = {}", builders::mock_phi_alpha(6, true));
    println!("ψ(-αq;-q)   = {}", builders::mock_psi_alpha(6, true));
    println!("(q;q)_∞     = {}", pochhammer::q_q_inf(n));
    println!("theta       = {}", builders::theta_gauss(30));

    let p: QPochhammer = "(-aq;q^2)_3".parse().expect("valid product");
    println!("(-αq;q²)_3  = {}", p.biseries(8));
    println!("f(q) as JSON: {}", builders::mock_f(6).to_json());
}
