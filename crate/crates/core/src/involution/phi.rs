//! `Φ` on `(DO ∖ {∅}) × D`.
//!
//! Part I trades the smallest even part of `μ` against the leading run of
//! consecutive odd parts of `λ`. What Part I cannot pair is `(Q_k, μ)` with
//! `s_e(μ) > 2k`; Part II grows or shrinks the staircase.

use super::{Outcome, Rule};
use crate::partition::{staircase, staircase_index, stats, Bipartition, MaybePart, Partition};

fn part(x: MaybePart) -> u32 {
    x.part().expect("guard ensures the part exists")
}

/// `((1), μ)` with `s_o(μ) + 1 < s_e(μ)`.
fn merge_excluded(bp: &Bipartition) -> bool {
    let st = stats(&bp.second);
    bp.first.parts() == [1] && st.s_o.part().is_some() && st.s_o.plus(1) < st.s_e
}

pub(super) fn matching_rules(bp: &Bipartition) -> Vec<Rule> {
    let (lam, mu) = (&bp.first, &bp.second);
    let ls = stats(lam);
    let ms = stats(mu);
    let c = ls.c as u32;
    let lam_c = lam.parts()[ls.c - 1];
    let k = staircase_index(lam);
    let merge = merge_excluded(bp);

    let mut rules = Vec::new();
    let mut add = |hit: bool, r: Rule| {
        if hit {
            rules.push(r);
        }
    };
    add(k.is_some() && mu.is_empty(), Rule::PhiExcludedStaircase);
    add(merge, Rule::PhiExcludedMerge);
    add(ms.s_e <= 2 * c, Rule::PhiIa);
    add(ms.s_e > 2 * c && lam_c > 1, Rule::PhiIb);
    if let Some(k) = k {
        let part_two = ms.s_e > 2 * k && !mu.is_empty();
        let bound = ms.s_o.plus(2 * k - 1);
        add(part_two && !merge && ms.s_e > bound, Rule::PhiIIa);
        add(part_two && ms.s_e <= bound, Rule::PhiIIb);
    }
    rules
}

pub(super) fn fire(rule: Rule, bp: &Bipartition) -> Outcome {
    let (lam, mu) = (&bp.first, &bp.second);
    let ls = stats(lam);
    let ms = stats(mu);
    let paired = |a: Partition, b: Partition| Outcome::Paired(Bipartition::new(a, b));
    match rule {
        Rule::PhiExcludedStaircase => Outcome::Excluded { companion: None },
        Rule::PhiExcludedMerge => {
            let so = part(ms.s_o);
            let companion = mu.without_part(so).expect("s_o is a part").with_part(so + 1);
            Outcome::Excluded { companion: Some(companion) }
        }
        Rule::PhiIa => {
            let se = part(ms.s_e);
            paired(lam.shift_leading(se as usize / 2, 2), mu.without_part(se).expect("s_e is a part"))
        }
        Rule::PhiIb => {
            let c = ls.c;
            paired(lam.shift_leading(c, -2), mu.with_part(2 * c as u32))
        }
        Rule::PhiIIa => {
            let k = staircase_index(lam).expect("Part II acts on staircases");
            let so = part(ms.s_o);
            let rest = mu.without_part(so).expect("s_o is a part");
            paired(staircase(k - 1), rest.with_part(so + 2 * k - 1))
        }
        Rule::PhiIIb => {
            let k = staircase_index(lam).expect("Part II acts on staircases");
            let se = part(ms.s_e);
            let rest = mu.without_part(se).expect("s_e is a part");
            paired(staircase(k + 1), rest.with_part(se - (2 * k + 1)))
        }
        other => unreachable!("{other} is not a Φ rule"),
    }
}

#[cfg(test)]
mod tests {
    use crate::involution::{phi, Outcome};
    use crate::partition::Bipartition;

    fn bp(a: &str, b: &str) -> Bipartition {
        Bipartition::new(a.parse().unwrap(), b.parse().unwrap())
    }

    #[test]
    fn run_ending_above_one_goes_to_part_i() {
        // c((7)) = 1 and λ_c = 7 > 1.
        let out = phi(&bp("7", "")).unwrap();
        assert_eq!(out.outcome, Outcome::Paired(bp("5", "2")));
    }

    #[test]
    fn staircase_with_large_even_part_splits() {
        // (Q_2, (8)): s_e = 8 > 4, s_o absent, so the 8 splits into 5 + 3.
        let out = phi(&bp("3,1", "8")).unwrap();
        assert_eq!(out.outcome, Outcome::Paired(bp("5,3,1", "3")));
        let back = phi(&bp("5,3,1", "3")).unwrap();
        assert_eq!(back.outcome, Outcome::Paired(bp("3,1", "8")));
    }
}
