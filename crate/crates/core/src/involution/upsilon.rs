//! `Υ` on `P × D`.
//!
//! The auxiliary set `U` holds `(∅, μ)` and `((1^k), μ)` with `s(μ) > k`; the
//! rest is `V`. On `V` the map trades the smallest part of `μ` against the
//! column of largest parts of `λ`. On `U`, `((1^k), μ)` and `(∅, μ ∪ {k})` are
//! partners: for even `k` they cancel, for odd `k` both survive and stand for
//! `μ ∪ {k} ∈ Pdo`.

use super::{Outcome, Rule};
use crate::partition::{stats, Bipartition, MaybePart, Partition};

fn all_ones(p: &Partition) -> bool {
    p.parts().iter().all(|&x| x == 1)
}

fn in_u(bp: &Bipartition) -> bool {
    let s = stats(&bp.second).s;
    bp.first.is_empty() || (all_ones(&bp.first) && s > bp.first.len() as u32)
}

pub(super) fn matching_rules(bp: &Bipartition) -> Vec<Rule> {
    let (lam, mu) = (&bp.first, &bp.second);
    let s = stats(mu).s;
    let m = stats(lam).m as u32;
    let k = lam.len() as u32;
    let u = in_u(bp);
    let s_even = s.part().is_some_and(|x| x % 2 == 0);
    let s_odd = s.part().is_some_and(|x| x % 2 == 1);

    let mut rules = Vec::new();
    let mut add = |hit: bool, r: Rule| {
        if hit {
            rules.push(r);
        }
    };
    add(lam.is_empty() && mu.is_empty(), Rule::UpsExcludedEmpty);
    add(lam.is_empty() && s_even, Rule::UpsUSplit);
    add(lam.is_empty() && s_odd, Rule::UpsSurvivorEmpty);
    add(u && !lam.is_empty() && k % 2 == 0, Rule::UpsUMerge);
    add(u && !lam.is_empty() && k % 2 == 1, Rule::UpsSurvivorOnes);
    add(!u && s <= m, Rule::UpsV1);
    add(!u && s > m, Rule::UpsV2);
    rules
}

pub(super) fn fire(rule: Rule, bp: &Bipartition) -> Outcome {
    let (lam, mu) = (&bp.first, &bp.second);
    let paired = |a: Partition, b: Partition| Outcome::Paired(Bipartition::new(a, b));
    match rule {
        Rule::UpsExcludedEmpty => Outcome::Excluded { companion: None },
        Rule::UpsV1 => {
            let MaybePart::Part(s) = stats(mu).s else { unreachable!("V1 needs s(μ) finite") };
            paired(lam.shift_leading(s as usize, 1), mu.without_part(s).expect("s(μ) is a part"))
        }
        Rule::UpsV2 => {
            let m = stats(lam).m;
            paired(lam.shift_leading(m, -1), mu.with_part(m as u32))
        }
        Rule::UpsUMerge => paired(Partition::empty(), mu.with_part(lam.len() as u32)),
        Rule::UpsUSplit => {
            let s = stats(mu).s.part().expect("μ is nonempty");
            let ones = Partition::new(vec![1; s as usize]).expect("ones");
            paired(ones, mu.without_part(s).expect("s(μ) is a part"))
        }
        Rule::UpsSurvivorEmpty => Outcome::Survivor { companion: mu.clone() },
        Rule::UpsSurvivorOnes => Outcome::Survivor { companion: mu.with_part(lam.len() as u32) },
        other => unreachable!("{other} is not a Υ rule"),
    }
}
