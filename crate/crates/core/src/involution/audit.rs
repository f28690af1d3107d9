use std::collections::BTreeMap;

use serde::Serialize;

use super::{Involution, Outcome, Rule};
use crate::partition::{self, staircase_index, stats, Bipartition, Partition};
use crate::qseries::series::serialize_poly;
use crate::qseries::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub input: String,
    pub description: String,
}

/// Exhaustive check of one map on every domain element of size `n`.
#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub involution: Involution,
    pub n: u32,
    pub domain_size: usize,
    pub paired_count: usize,
    /// Keyed by rule label.
    pub excluded_counts: BTreeMap<&'static str, usize>,
    pub survivor_count: usize,
    /// Companions of exclusions and survivors, sorted.
    pub companions: Vec<Partition>,
    /// Signed, α-weighted sum over the whole domain.
    #[serde(serialize_with = "serialize_poly")]
    pub signed_total: Poly,
    /// The same sum over excluded and surviving elements only.
    #[serde(serialize_with = "serialize_poly")]
    pub unpaired_total: Poly,
    pub violations: Vec<Violation>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn excluded_total(&self) -> usize {
        self.excluded_counts.values().sum()
    }
}

fn term(w: super::Weight) -> Poly {
    Poly::monomial(w.sign(), w.alpha as usize)
}

/// The signed, α-weighted sum over the domain of size `n`, computed over
/// every element and over excluded and surviving elements only.
pub fn signed_sums(which: Involution, n: u32) -> (Poly, Poly) {
    let mut all = Poly::default();
    let mut unpaired = Poly::default();
    for x in which.domain(n) {
        let t = term(which.weight(&x));
        if which.apply(&x).expect("domain element").image().is_none() {
            unpaired = &unpaired + &t;
        }
        all = &all + &t;
    }
    (all, unpaired)
}

pub fn audit(which: Involution, n: u32) -> AuditReport {
    let domain = which.domain(n);
    let mut report = AuditReport {
        involution: which,
        n,
        domain_size: domain.len(),
        paired_count: 0,
        excluded_counts: BTreeMap::new(),
        survivor_count: 0,
        companions: Vec::new(),
        signed_total: Poly::default(),
        unpaired_total: Poly::default(),
        violations: Vec::new(),
    };
    let mut fail = |x: &Bipartition, description: String| {
        report.violations.push(Violation { input: x.to_string(), description });
    };
    let mut companions = Vec::new();
    let mut staircases = 0usize;
    let mut merges = 0usize;
    let mut paired = 0usize;
    let mut survivors = 0usize;
    let mut excluded: BTreeMap<&'static str, usize> = BTreeMap::new();
    let mut signed_total = Poly::default();
    let mut unpaired_total = Poly::default();

    for x in &domain {
        let w = which.weight(x);
        signed_total = &signed_total + &term(w);

        let rules = which.matching_rules(x).expect("domain elements pass the domain check");
        if rules.len() != 1 {
            let labels: Vec<_> = rules.iter().map(|r| r.label()).collect();
            fail(x, format!("expected exactly one rule, found {labels:?}"));
            continue;
        }
        if which == Involution::Phi {
            check_phi_run(x, &mut fail);
        }
        let out = which.apply(x).expect("domain element");
        match &out.outcome {
            Outcome::Paired(y) => {
                paired += 1;
                check_pair(which, x, out.rule, y, &mut fail);
            }
            Outcome::Excluded { companion } => {
                *excluded.entry(out.rule.label()).or_default() += 1;
                unpaired_total = &unpaired_total + &term(w);
                match companion {
                    None => {
                        staircases += usize::from(out.rule != Rule::UpsExcludedEmpty);
                        let ok = match out.rule {
                            Rule::UpsExcludedEmpty => x.first.is_empty() && x.second.is_empty(),
                            _ => x.second.is_empty() && staircase_index(&x.first).is_some(),
                        };
                        if !ok {
                            fail(x, "exclusion without companion is not (Q_k, ∅)".to_string());
                        }
                        let k = staircase_index(&x.first).unwrap_or(0);
                        if w.negative != (k % 2 == 1) || w.alpha != 0 {
                            fail(x, format!("staircase weight should be (-1)^{k}, got {w:?}"));
                        }
                    }
                    Some(c) => {
                        merges += 1;
                        check_companion(which, x, c, w, true, &mut fail);
                        companions.push(c.clone());
                    }
                }
            }
            Outcome::Survivor { companion } => {
                survivors += 1;
                unpaired_total = &unpaired_total + &term(w);
                check_companion(which, x, companion, w, false, &mut fail);
                companions.push(companion.clone());
            }
        }
    }

    if signed_total != unpaired_total {
        fail(
            &Bipartition::new(Partition::empty(), Partition::empty()),
            format!("signed sum {signed_total} differs from unpaired sum {unpaired_total}"),
        );
    }

    census(which, n, staircases, merges, survivors, &excluded, &mut companions, &mut fail);

    report.paired_count = paired;
    report.excluded_counts = excluded;
    report.survivor_count = survivors;
    report.companions = companions;
    report.signed_total = signed_total;
    report.unpaired_total = unpaired_total;
    report
}

fn check_pair(
    which: Involution,
    x: &Bipartition,
    rule: Rule,
    y: &Bipartition,
    fail: &mut impl FnMut(&Bipartition, String),
) {
    if y.size() != x.size() {
        fail(x, format!("image {y} has size {}, not {}", y.size(), x.size()));
    }
    if let Err(e) = which.check_domain(y) {
        fail(x, format!("image {y} leaves the domain: {e}"));
        return;
    }
    if which.sign_statistic(x) == which.sign_statistic(y) {
        fail(x, format!("image {y} has the same sign statistic"));
    }
    let (wx, wy) = (which.weight(x), which.weight(y));
    if wx.alpha != wy.alpha {
        fail(x, format!("conserved quantity changes: {} vs {} at image {y}", wx.alpha, wy.alpha));
    }
    if wx.negative == wy.negative {
        fail(x, format!("image {y} carries the same sign"));
    }
    let back = which.apply(y).expect("image is in the domain");
    if back.outcome != Outcome::Paired(x.clone()) {
        fail(x, format!("image {y} does not map back: got {:?}", back.outcome));
    }
    if back.rule.partner() != Some(rule) {
        fail(x, format!("image {y} uses rule {}, expected the partner of {rule}", back.rule));
    }
}

/// A merged or surviving element must stand for a companion of the same
/// size, in the right class, whose `α^{l(ν)}` matches the element's weight.
fn check_companion(
    which: Involution,
    x: &Bipartition,
    c: &Partition,
    w: super::Weight,
    cancels: bool,
    fail: &mut impl FnMut(&Bipartition, String),
) {
    let cls = which.companion_class();
    if !partition::is_member(c, cls) {
        fail(x, format!("companion {c} is not in {cls}"));
    }
    if c.size() != x.size() {
        fail(x, format!("companion {c} has the wrong size"));
    }
    if w.alpha != c.len() as u32 {
        fail(x, format!("weight α^{} does not match l({c}) = {}", w.alpha, c.len()));
    }
    if w.negative != cancels {
        fail(x, format!("companion {c} carries the wrong sign"));
    }
}

/// A `Φ` element whose leading odd run ends at 1 with `s_e(μ) > 2c(λ)` must
/// be a staircase.
fn check_phi_run(x: &Bipartition, fail: &mut impl FnMut(&Bipartition, String)) {
    let ls = stats(&x.first);
    let last = x.first.parts()[ls.c - 1];
    if last == 1 && stats(&x.second).s_e > 2 * ls.c as u32 && staircase_index(&x.first) != Some(ls.c as u32) {
        fail(x, "run ends at 1 but λ is not a staircase".to_string());
    }
}

#[allow(clippy::too_many_arguments)]
fn census(
    which: Involution,
    n: u32,
    staircases: usize,
    merges: usize,
    survivors: usize,
    excluded: &BTreeMap<&'static str, usize>,
    companions: &mut Vec<Partition>,
    fail: &mut impl FnMut(&Bipartition, String),
) {
    let whole = Bipartition::new(Partition::empty(), Partition::empty());
    let square = n > 0 && (1..=n).any(|k| k * k == n);
    let mut want = partition::enumerate(which.companion_class(), n);
    match which {
        Involution::Upsilon => {
            let empty = excluded.get(Rule::UpsExcludedEmpty.label()).copied().unwrap_or(0);
            if empty != usize::from(n == 0) {
                fail(&whole, format!("{empty} copies of (∅,∅) at n = {n}"));
            }
            if survivors != 2 * want.len() {
                fail(&whole, format!("{survivors} survivors, expected 2·p_do({n}) = {}", 2 * want.len()));
            }
            want = want.into_iter().flat_map(|p| [p.clone(), p]).collect();
        }
        Involution::Phi | Involution::Psi => {
            if staircases != usize::from(square) {
                fail(&whole, format!("{staircases} staircase exclusions at n = {n}"));
            }
            if merges != want.len() {
                fail(&whole, format!("{merges} merge exclusions, expected {}", want.len()));
            }
            if survivors != 0 {
                fail(&whole, format!("{survivors} survivors; only Υ has survivors"));
            }
        }
    }
    companions.sort();
    want.sort();
    if *companions != want {
        fail(&whole, format!("companions {companions:?} are not a bijection onto {}({n})", which.companion_class()));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_audits_pass() {
        for which in Involution::ALL {
            for n in 0..=12 {
                let r = audit(which, n);
                assert!(r.passed(), "{which} n={n}: {:?}", r.violations);
                assert_eq!(r.paired_count % 2, 0);
            }
        }
    }

    #[test]
    fn worked_censuses() {
        let u = audit(Involution::Upsilon, 4);
        assert_eq!((u.domain_size, u.paired_count, u.survivor_count), (14, 12, 2));
        let p = audit(Involution::Phi, 7);
        assert_eq!((p.paired_count, p.excluded_total()), (10, 1));
        assert_eq!(p.companions, vec!["5,2".parse().unwrap()]);
        let s = audit(Involution::Psi, 4);
        assert_eq!((s.paired_count, s.excluded_counts.get("excluded-merge")), (10, Some(&1)));
        assert_eq!(s.excluded_counts.get("excluded-staircase"), Some(&1));
        assert_eq!(s.companions, vec!["3,1".parse().unwrap()]);
    }
}
