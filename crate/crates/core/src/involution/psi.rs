//! `Ψ` on `(OC ∖ {∅}) × D0`.
//!
//! Part I trades a repeated part of `λ` against the smallest odd part of `μ`.
//! The repeated part used is the smallest one: exchanging the largest
//! repeated part is not self-inverse, e.g. `((3,3,1),(5,1))` would go to
//! `((3,3,1,1),(5))` and come back as `((3,1,1),(5,3))`. Only staircases are
//! left unpaired by Part I; Parts II and III handle them through the zero
//! part and the smallest even part of `μ`.

use super::{Outcome, Rule};
use crate::partition::{staircase, staircase_index, stats, Bipartition, MaybePart, Partition};

fn part(x: MaybePart) -> u32 {
    x.part().expect("guard ensures the part exists")
}

/// `((1), μ)` with `s_e(μ) + 1 < s_o(μ)`, the zero part counting as even.
fn merge_excluded(bp: &Bipartition) -> bool {
    let st = stats(&bp.second);
    bp.first.parts() == [1] && st.s_e.part().is_some() && st.s_e.plus(1) < st.s_o
}

pub(super) fn matching_rules(bp: &Bipartition) -> Vec<Rule> {
    let (lam, mu) = (&bp.first, &bp.second);
    let r = stats(lam).r_min;
    let ms = stats(mu);
    let so = ms.s_o;
    let k = staircase_index(lam);
    let merge = merge_excluded(bp);

    let mut rules = Vec::new();
    let mut add = |hit: bool, rule: Rule| {
        if hit {
            rules.push(rule);
        }
    };
    add(k.is_some() && mu.is_empty(), Rule::PsiExcludedStaircase);
    add(merge, Rule::PsiExcludedMerge);
    match k {
        None => {
            add(so > r, Rule::PsiIa);
            add(so <= r, Rule::PsiIb);
        }
        Some(k) => {
            add(so <= 2 * k - 1, Rule::PsiIb);
            let zero = mu.has_zero();
            add(so > 2 * k - 1 && zero && !merge, Rule::PsiIIa);
            add(!zero && so == 2 * k + 1, Rule::PsiIIb);
            let part_three = !zero && so > 2 * k + 1 && !mu.is_empty();
            let bound = ms.s_e.plus(2 * k - 1);
            add(part_three && !merge && so > bound, Rule::PsiIIIa);
            add(part_three && so.part().is_some() && so <= bound, Rule::PsiIIIb);
        }
    }
    rules
}

pub(super) fn fire(rule: Rule, bp: &Bipartition) -> Outcome {
    let (lam, mu) = (&bp.first, &bp.second);
    let ms = stats(mu);
    let paired = |a: Partition, b: Partition| Outcome::Paired(Bipartition::new(a, b));
    let k = || staircase_index(lam).expect("Parts II and III act on staircases");
    match rule {
        Rule::PsiExcludedStaircase => Outcome::Excluded { companion: None },
        Rule::PsiExcludedMerge => {
            let se = part(ms.s_e);
            let companion = mu.without_part(se).expect("s_e is a part").with_part(se + 1);
            Outcome::Excluded { companion: Some(companion) }
        }
        Rule::PsiIa => {
            let r = part(stats(lam).r_min);
            paired(lam.without_part(r).expect("r is a part"), mu.with_part(r))
        }
        Rule::PsiIb => {
            let so = part(ms.s_o);
            paired(lam.with_part(so), mu.without_part(so).expect("s_o is a part"))
        }
        Rule::PsiIIa => {
            let k = k();
            paired(staircase(k - 1), mu.without_zero().with_part(2 * k - 1))
        }
        Rule::PsiIIb => {
            let k = k();
            let rest = mu.without_part(2 * k + 1).expect("s_o = 2k+1 is a part");
            paired(staircase(k + 1), rest.with_part(0))
        }
        Rule::PsiIIIa => {
            let k = k();
            let se = part(ms.s_e);
            let rest = mu.without_part(se).expect("s_e is a part");
            paired(staircase(k - 1), rest.with_part(se + 2 * k - 1))
        }
        Rule::PsiIIIb => {
            let k = k();
            let so = part(ms.s_o);
            let rest = mu.without_part(so).expect("s_o is a part");
            paired(staircase(k + 1), rest.with_part(so - (2 * k + 1)))
        }
        other => unreachable!("{other} is not a Ψ rule"),
    }
}

#[cfg(test)]
mod tests {
    use crate::involution::{psi, Outcome, Rule};
    use crate::partition::Bipartition;

    fn bp(a: &str, b: &str) -> Bipartition {
        Bipartition::new(a.parse().unwrap(), b.parse().unwrap())
    }

    #[test]
    fn smallest_repeated_part_round_trips() {
        let x = bp("3,3,1", "5,1");
        let out = psi(&x).unwrap();
        assert_eq!(out.rule, Rule::PsiIb);
        let Outcome::Paired(y) = out.outcome else { panic!() };
        assert_eq!(y, bp("3,3,1,1", "5"));
        assert_eq!(psi(&y).unwrap().outcome, Outcome::Paired(x));
    }

    #[test]
    fn zero_part_moves_the_staircase() {
        let out = psi(&bp("3,1", "5,0")).unwrap();
        assert_eq!((out.rule, out.outcome), (Rule::PsiIIa, Outcome::Paired(bp("1", "5,3"))));
        let back = psi(&bp("1", "5,3")).unwrap();
        assert_eq!((back.rule, back.outcome), (Rule::PsiIIb, Outcome::Paired(bp("3,1", "5,0"))));
    }
}
