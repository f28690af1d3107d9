//! The identity registry and the machinery that checks each identity
//! coefficient by coefficient.
//!
//! Every side of every comparison declares up front which builders it reads
//! (see [`SideRef::builders`]); [`Workshop::pair`] refuses to run a
//! comparison whose two sides share one, so no builder is ever checked
//! against itself.

mod identities;
mod workshop;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

pub use identities::{Comparison, Hand, IdentityId, SideRef};
pub use workshop::{BuilderId, Fault, Side, Workshop};

use crate::involution::{signed_sums, Involution};
use crate::qseries::series::serialize_poly;
use crate::qseries::{CoeffValue, Poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn is_pass(self) -> bool {
        self == Status::Pass
    }
}

/// Lowest disagreeing power, with the comparison it was found in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocatedMismatch {
    pub component: &'static str,
    pub power: usize,
    pub left: CoeffValue,
    pub right: CoeffValue,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub id: IdentityId,
    pub order: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<LocatedMismatch>,
    /// Set when a side could not be built at all, e.g. a corrupted product
    /// whose constant term is no longer invertible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub elapsed_ms: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status.is_pass()
    }
}

pub fn verify(id: IdentityId, order: usize) -> VerifyReport {
    verify_with(&Workshop::new(), id, order)
}

/// Checks `id` to `order` with series drawn from `ws`.
pub fn verify_with(ws: &Workshop, id: IdentityId, order: usize) -> VerifyReport {
    let start = Instant::now();
    let mut first_mismatch = None;
    let mut error = None;
    for c in id.comparisons() {
        let (ls, rs) = ws.pair(c.left.builders(), c.right.builders(), order);
        let built = c.left.build(&ls).and_then(|l| Ok((l, c.right.build(&rs)?)));
        match built {
            Ok((l, r)) => {
                if let Some(m) = l.first_mismatch(&r) {
                    let earlier = first_mismatch.as_ref().is_none_or(|f: &LocatedMismatch| m.power < f.power);
                    if earlier {
                        first_mismatch = Some(LocatedMismatch {
                            component: c.label,
                            power: m.power,
                            left: m.left,
                            right: m.right,
                        });
                    }
                }
            }
            Err(e) => {
                error.get_or_insert_with(|| format!("{}: {e}", c.label));
            }
        }
    }
    let status = if first_mismatch.is_none() && error.is_none() { Status::Pass } else { Status::Fail };
    VerifyReport { id, order, status, first_mismatch, error, elapsed_ms: start.elapsed().as_millis() as u64 }
}

/// Every registered identity, univariate ones to `order_uni` and bivariate
/// ones to `order_bi`, in registry order.
pub fn verify_all(order_uni: usize, order_bi: usize) -> Vec<VerifyReport> {
    verify_all_with(&Workshop::new(), order_uni, order_bi)
}

pub fn verify_all_with(ws: &Workshop, order_uni: usize, order_bi: usize) -> Vec<VerifyReport> {
    IdentityId::ALL
        .par_iter()
        .map(|&id| verify_with(ws, id, if id.is_bivariate() { order_bi } else { order_uni }))
        .collect()
}

/// Substitutes `α = 1` into both sides of the bivariate identity `bi` and
/// compares them with the matching sides of the univariate identity `uni`.
pub fn specialization_check(bi: IdentityId, uni: IdentityId, order: usize) -> VerifyReport {
    let start = Instant::now();
    let ws = Workshop::new();
    let mut first_mismatch = None;
    let mut error = None;
    for (label, hand) in [("left", Hand::Left), ("right", Hand::Right)] {
        let b = SideRef { id: bi, hand, at_one: true };
        let u = SideRef { id: uni, hand, at_one: false };
        let built = b
            .build(&ws.side(b.builders(), order))
            .and_then(|l| Ok((l, u.build(&ws.side(u.builders(), order))?)));
        match built {
            Ok((l, r)) => {
                if let Some(m) = l.first_mismatch(&r) {
                    first_mismatch.get_or_insert(LocatedMismatch {
                        component: label,
                        power: m.power,
                        left: m.left,
                        right: m.right,
                    });
                }
            }
            Err(e) => {
                error.get_or_insert_with(|| format!("{label}: {e}"));
            }
        }
    }
    let status = if first_mismatch.is_none() && error.is_none() { Status::Pass } else { Status::Fail };
    VerifyReport { id: bi, order, status, first_mismatch, error, elapsed_ms: start.elapsed().as_millis() as u64 }
}

/// The signed, α-weighted sum over one map's domain at size `n`, computed
/// over all elements, over the unpaired ones only, and read off the product
/// of builders that generates the domain.
#[derive(Debug, Clone, Serialize)]
pub struct CancellationReport {
    pub involution: Involution,
    pub n: u32,
    #[serde(serialize_with = "serialize_poly")]
    pub direct: Poly,
    #[serde(serialize_with = "serialize_poly")]
    pub unpaired: Poly,
    #[serde(serialize_with = "serialize_poly")]
    pub analytic: Poly,
    pub status: Status,
}

pub fn cancellation_check(which: Involution, n: u32) -> CancellationReport {
    let (direct, unpaired) = signed_sums(which, n);
    let analytic = analytic_coefficient(which, n);
    let status = if direct == unpaired && unpaired == analytic { Status::Pass } else { Status::Fail };
    CancellationReport { involution: which, n, direct, unpaired, analytic, status }
}

/// `Υ`: `(-αq;q)_∞ f(αq;q)`; `Φ`: `(-αq;q)_∞ (φ(-αq;-q) - 1)`;
/// `Ψ`: `(-α;q)_∞ ψ(-αq;-q)`. The `-1` for `Φ` drops the `λ = ∅` terms,
/// which are outside its domain.
fn analytic_coefficient(which: Involution, n: u32) -> Poly {
    use crate::qseries::{builders, pochhammer, BiSeries};
    let order = n as usize;
    let product = match which {
        Involution::Upsilon => &pochhammer::neg_alpha_q_q_inf(order) * &builders::mock_f_alpha(order, true),
        Involution::Phi => {
            let phi = &builders::mock_phi_alpha(order, true) - &BiSeries::one(order);
            &pochhammer::neg_alpha_q_q_inf(order) * &phi
        }
        Involution::Psi => &pochhammer::neg_alpha_q_inf(order) * &builders::mock_psi_alpha(order, true),
    };
    product.coeff(order).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_orders_pass() {
        for r in verify_all(12, 8) {
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn sides_declare_disjoint_builders() {
        for id in IdentityId::ALL {
            for c in id.comparisons() {
                let (l, r) = (c.left.builders(), c.right.builders());
                assert!(l.iter().all(|b| !r.contains(b)), "{id} {}", c.label);
                assert!(!l.is_empty() && !r.is_empty());
            }
        }
    }

    #[test]
    #[should_panic(expected = "appears on both sides")]
    fn overlapping_sides_are_refused() {
        Workshop::new().pair(&[BuilderId::MockF], &[BuilderId::MockF, BuilderId::QQInf], 4);
    }

    #[test]
    fn every_builder_is_exercised() {
        for b in BuilderId::ALL {
            let used = IdentityId::ALL
                .iter()
                .flat_map(|id| id.comparisons())
                .any(|c| c.left.builders().contains(&b) || c.right.builders().contains(&b));
            assert!(used, "{b} appears in no identity");
        }
    }

    #[test]
    fn fault_is_located() {
        let ws = Workshop::with_fault(Fault { builder: BuilderId::PdoCounts, power: 5, delta: 1 });
        let r = verify_with(&ws, IdentityId::Pi1, 10);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.first_mismatch.unwrap().power, 5);
    }

    #[test]
    fn tags_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.tag().parse::<IdentityId>().unwrap(), id);
        }
        for b in BuilderId::ALL {
            assert_eq!(b.name().parse::<BuilderId>().unwrap(), b);
        }
        assert!("NOPE".parse::<IdentityId>().is_err());
    }

    #[test]
    fn cancellation_examples() {
        let p = cancellation_check(Involution::Phi, 7);
        assert!(p.status.is_pass(), "{p:?}");
        assert_eq!(p.direct, Poly::monomial(-1, 2));
        let u = cancellation_check(Involution::Upsilon, 0);
        assert_eq!(u.direct, Poly::constant(1));
        assert!(u.status.is_pass());
        let s = cancellation_check(Involution::Psi, 4);
        assert!(s.status.is_pass(), "{s:?}");
    }
}
