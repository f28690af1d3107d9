//! Lists small members of each partition class and tabulates the counts the
//! identities are stated in.

use mock_theta::partition::{self, PartitionClass};

fn main() {
    for cls in PartitionClass::ALL {
        let members: Vec<String> = partition::enumerate(cls, 6).iter().map(|p| p.to_string()).collect();
        println!("{:>4}(6) = {:>2}: {}", cls.tag(), members.len(), members.join(" "));
    }
    let pdo = partition::counts_up_to(PartitionClass::Pdo, 20);
    let parity = partition::pdo_length_parity_up_to(20);
    println!("\n  n  p_do  even  odd");
    for n in 1..=20 {
        println!("{n:>3} {:>5} {:>5} {:>4}", pdo[n], parity[n].even_count, parity[n].odd_count);
    }
}
