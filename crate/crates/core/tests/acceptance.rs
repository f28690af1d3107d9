//! Acceptance run: one line per criterion, nonzero exit when any fails.

use std::process::ExitCode;
use std::sync::OnceLock;
use std::time::Instant;

use mock_theta::involution::{audit, Involution, Outcome};
use mock_theta::partition::{self, Bipartition, PartitionClass};
use mock_theta::qseries::AnySeries;
use mock_theta::verifier::{
    cancellation_check, specialization_check, verify_all, verify_all_with, BuilderId, Fault, IdentityId,
    SideRef, Workshop,
};
use rayon::prelude::*;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn identity_suite() -> Check {
    let reports = verify_all(100, 40);
    let bad: Vec<_> = reports.iter().filter(|r| !r.passed()).map(|r| format!("{}: {:?}", r.id, r.first_mismatch)).collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("{} identities exact to q^100 (univariate) and q^40 (bivariate)", reports.len()))
}

fn audits() -> Check {
    let jobs: Vec<_> = Involution::ALL.iter().flat_map(|&w| (0..=24).map(move |n| (w, n))).collect();
    let reports: Vec<_> = jobs.par_iter().map(|&(w, n)| audit(w, n)).collect();
    let bad: Vec<_> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{} n={}: {}", r.involution, r.n, r.violations[0].description))
        .collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    let elements: usize = reports.iter().map(|r| r.domain_size).sum();
    Ok(format!("Υ, Φ, Ψ for n ≤ 24: {elements} domain elements, no violations"))
}

fn bp(s: &str) -> Bipartition {
    let (a, b) = s.split_once('|').unwrap();
    Bipartition::new(a.parse().unwrap(), b.parse().unwrap())
}

fn pairs(which: Involution, list: &[(&str, &str)]) -> Result<(), String> {
    for (x, y) in list {
        let (x, y) = (bp(x), bp(y));
        let fwd = which.apply(&x).map_err(|e| e.to_string())?.outcome;
        let back = which.apply(&y).map_err(|e| e.to_string())?.outcome;
        ensure(fwd == Outcome::Paired(y.clone()) && back == Outcome::Paired(x.clone()), || {
            format!("{which}: {x} <-> {y} not reproduced ({fwd:?})")
        })?;
    }
    Ok(())
}

fn companion(which: Involution, x: &str, want: &str) -> Result<(), String> {
    let out = which.apply(&bp(x)).map_err(|e| e.to_string())?;
    let got = out.companion().map(|c| c.to_string());
    ensure(got.as_deref() == Some(want), || format!("{which}: {x} companion {got:?}, expected {want}"))
}

fn worked_examples() -> Check {
    let u = audit(Involution::Upsilon, 4);
    ensure(u.domain_size == 14 && u.survivor_count == 2, || format!("Υ n=4 census {u:?}"))?;
    pairs(
        Involution::Upsilon,
        &[("3|1", "4|"), ("2,1|1", "3,1|"), ("1,1,1|1", "2,1,1|"), ("1|2,1", "2|2"), ("2,2|", "1,1|2"), ("|4", "1,1,1,1|")],
    )?;
    companion(Involution::Upsilon, "1|3", "(3,1)")?;
    companion(Involution::Upsilon, "|3,1", "(3,1)")?;

    let p = audit(Involution::Phi, 7);
    ensure(p.domain_size == 11 && p.paired_count == 10, || format!("Φ n=7 census {p:?}"))?;
    pairs(
        Involution::Phi,
        &[("5|2", "7|"), ("5,1|1", "3,1|2,1"), ("1|6", "3,1|3"), ("1|4,2", "3|4"), ("1|3,2,1", "3|3,1")],
    )?;
    companion(Involution::Phi, "1|5,1", "(5,2)")?;

    let s = audit(Involution::Psi, 4);
    ensure(s.domain_size == 12 && s.paired_count == 10, || format!("Ψ n=4 census {s:?}"))?;
    pairs(
        Involution::Psi,
        &[("1|3", "3,1|0"), ("1,1,1|1", "1,1,1,1|"), ("1|2,1", "1,1|2"), ("1|2,1,0", "1,1|2,0"), ("1,1,1|1,0", "1,1,1,1|0")],
    )?;
    companion(Involution::Psi, "1|3,0", "(3,1)")?;

    pairs(Involution::Psi, &[("9,7,5,3,1|16,15,8,6,2", "7,5,3,1|16,15,11,8,6")])?;
    ensure(partition::enumerate(PartitionClass::Pdo, 4).len() == 1, || "p_do(4) != 1".into())?;
    Ok("censuses at n = 4, 7, 4, all listed pairs and companions, closing staircase pair".into())
}

fn cross_oracle() -> Check {
    let jobs: Vec<_> = Involution::ALL.iter().flat_map(|&w| (0..=30).map(move |n| (w, n))).collect();
    let reports: Vec<_> = jobs.par_iter().map(|&(w, n)| cancellation_check(w, n)).collect();
    let bad: Vec<_> = reports
        .iter()
        .filter(|r| !r.status.is_pass())
        .map(|r| format!("{} n={}: direct {} unpaired {} analytic {}", r.involution, r.n, r.direct, r.unpaired, r.analytic))
        .collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("{} coefficients: enumeration, unpaired terms and product builders agree", reports.len()))
}

fn specialization() -> Check {
    let bad: Vec<_> = IdentityId::SPECIALIZATIONS
        .iter()
        .map(|&(bi, uni)| (bi, uni, specialization_check(bi, uni, 40)))
        .filter(|(_, _, r)| !r.passed())
        .map(|(bi, uni, r)| format!("{bi} -> {uni}: {:?} {:?}", r.first_mismatch, r.error))
        .collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("{} bivariate identities reduce to their univariate forms at α = 1 to q^40", IdentityId::SPECIALIZATIONS.len()))
}

/// Unfaulted series, shared by every location check.
fn clean() -> &'static Workshop {
    static CLEAN: OnceLock<Workshop> = OnceLock::new();
    CLEAN.get_or_init(Workshop::new)
}

fn true_location(fault: Fault, id: IdentityId, order: usize) -> Option<usize> {
    let build = |ws: &Workshop, s: SideRef| -> AnySeries { s.build(&ws.side(s.builders(), order)).expect("builds") };
    let bad = clean().faulted_copy(fault);
    id.comparisons()
        .iter()
        .flat_map(|c| [c.left, c.right])
        .filter_map(|s| build(clean(), s).first_mismatch(&build(&bad, s)).map(|m| m.power))
        .min()
}

fn locate(fault: Fault, n1: usize, n2: usize) -> Result<(), String> {
    let reports = verify_all_with(&clean().faulted_copy(fault), n1, n2);
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
    ensure(!failed.is_empty(), || format!("{fault:?} unnoticed"))?;
    for r in failed {
        let got = r.first_mismatch.as_ref().map(|m| m.power);
        let want = true_location(fault, r.id, r.order);
        ensure(got.is_some() && got == want && got >= Some(fault.power), || {
            format!("{fault:?}: {} reports {got:?}, sides differ first at {want:?}", r.id)
        })?;
    }
    Ok(())
}

/// Every coefficient of every builder at reduced orders, then the top
/// coefficient of every builder at the full orders.
fn fault_detection() -> Check {
    let (n1, n2) = (30, 16);
    let mut faults = Vec::new();
    for (i, &builder) in BuilderId::ALL.iter().enumerate() {
        let top = if builder.is_bivariate() { n2 } else { n1 };
        for power in 1..=top {
            faults.push((Fault { builder, power, delta: if (i + power) % 2 == 0 { 1 } else { -3 } }, n1, n2));
        }
    }
    let small = faults.len();
    for builder in BuilderId::ALL {
        let power = if builder.is_bivariate() { 40 } else { 100 };
        faults.push((Fault { builder, power, delta: 1 }, 100, 40));
    }
    faults.par_iter().try_for_each(|&(f, a, b)| locate(f, a, b))?;
    Ok(format!("{small} faults at orders (30, 16) and {} at (100, 40), all located", faults.len() - small))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("identity suite", identity_suite),
        ("involution audits", audits),
        ("worked examples", worked_examples),
        ("cross-oracle coherence", cross_oracle),
        ("specialization at α = 1", specialization),
        ("fault detection", fault_detection),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {} {name} ({secs:.1}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
