//! Signed partition sums equal to the mock theta functions: each function is
//! rebuilt here from a partition census, independently of its defining sum.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::poly::Poly;
use super::series::{BiSeries, Series};
use super::AnySeries;
use crate::error::{Error, Result};
use crate::partition::{self, PartitionClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InterpretationId {
    /// `1 + Σ_{λ∈P} (-1)^{r(λ)} q^{|λ|}`.
    F,
    /// `1 + Σ_{λ∈DO} (-1)^{(λ₁+1)/2} q^{|λ|}`.
    Phi,
    /// `Σ_{λ∈OC} (-1)^{l(λ)} q^{|λ|}`.
    Psi,
    /// As `F` with weight `α^{λ₁}`.
    FG,
    /// As `Phi` with weight `α^{(λ₁+1)/2 - l(λ)}`.
    PhiG,
    /// As `Psi` with weight `α^{l(λ) - (λ₁+1)/2}`.
    PsiG,
}

impl InterpretationId {
    pub const ALL: [InterpretationId; 6] = [
        InterpretationId::F,
        InterpretationId::Phi,
        InterpretationId::Psi,
        InterpretationId::FG,
        InterpretationId::PhiG,
        InterpretationId::PsiG,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            InterpretationId::F => "INT_F",
            InterpretationId::Phi => "INT_PHI",
            InterpretationId::Psi => "INT_PSI",
            InterpretationId::FG => "INT_F_G",
            InterpretationId::PhiG => "INT_PHI_G",
            InterpretationId::PsiG => "INT_PSI_G",
        }
    }

    pub fn is_bivariate(self) -> bool {
        matches!(self, InterpretationId::FG | InterpretationId::PhiG | InterpretationId::PsiG)
    }
}

impl fmt::Display for InterpretationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for InterpretationId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        InterpretationId::ALL
            .into_iter()
            .find(|id| id.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unknown { kind: "interpretation", name: s.to_string() })
    }
}

pub fn signed_interpretation(id: InterpretationId, order: usize) -> AnySeries {
    match id {
        InterpretationId::F => AnySeries::Uni(rank_sum(order).substitute_alpha(super::AlphaTarget::One)),
        InterpretationId::FG => AnySeries::Bi(rank_sum(order)),
        InterpretationId::Phi => AnySeries::Uni(distinct_odd_sum(order).substitute_alpha(super::AlphaTarget::One)),
        InterpretationId::PhiG => AnySeries::Bi(distinct_odd_sum(order)),
        InterpretationId::Psi => AnySeries::Uni(gapless_odd_sum(order).substitute_alpha(super::AlphaTarget::One)),
        InterpretationId::PsiG => AnySeries::Bi(gapless_odd_sum(order)),
    }
}

/// `1 + Σ_{λ∈P} (-1)^{r(λ)} α^{λ₁} q^{|λ|}`. There are far too many partitions
/// of 100 to walk, so the signed counts by largest part come from the box
/// recurrence in [`partition::signed_rank_by_largest`].
fn rank_sum(order: usize) -> BiSeries {
    let table = partition::signed_rank_by_largest(order as u32);
    let coeffs = table
        .into_iter()
        .map(|row| Poly::new(row.into_iter().map(BigInt::from).collect()))
        .collect();
    BiSeries::from_coeffs(coeffs)
}

fn add_term(s: &mut BiSeries, size: u32, negative: bool, alpha: u32) {
    let c = s.coeff_mut(size as usize);
    *c = &*c + &Poly::monomial(if negative { -1 } else { 1 }, alpha as usize);
}

fn distinct_odd_sum(order: usize) -> BiSeries {
    let mut s = BiSeries::one(order);
    partition::for_each_up_to(PartitionClass::DO, order as u32, |p| {
        if p.is_empty() {
            return;
        }
        let half = (p.largest() + 1) / 2;
        let l = p.len() as u32;
        assert!(half >= l, "distinct odd parts force (λ₁+1)/2 ≥ l(λ), failed for {p}");
        add_term(&mut s, p.size(), half % 2 == 1, half - l);
    });
    s
}

fn gapless_odd_sum(order: usize) -> BiSeries {
    let mut s = BiSeries::zero(order);
    partition::for_each_up_to(PartitionClass::OC, order as u32, |p| {
        if p.is_empty() {
            return;
        }
        let half = (p.largest() + 1) / 2;
        let l = p.len() as u32;
        assert!(l >= half, "odd parts without gaps force l(λ) ≥ (λ₁+1)/2, failed for {p}");
        add_term(&mut s, p.size(), l % 2 == 1, l - half);
    });
    s
}

/// Univariate form of [`signed_interpretation`] for the three univariate ids.
pub fn signed_interpretation_uni(id: InterpretationId, order: usize) -> Result<Series> {
    match signed_interpretation(id, order) {
        AnySeries::Uni(s) => Ok(s),
        AnySeries::Bi(_) => Err(Error::NotUnivariate),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::builders;

    fn walked_rank_sum(order: u32) -> BiSeries {
        let mut s = BiSeries::zero(order as usize);
        partition::for_each_up_to(PartitionClass::P, order, |p| {
            let r = partition::rank(p).unwrap();
            add_term(&mut s, p.size(), r % 2 != 0, p.largest());
        });
        s
    }

    #[test]
    fn rank_recurrence_matches_walk() {
        assert_eq!(rank_sum(22), walked_rank_sum(22));
    }

    #[test]
    fn examples() {
        assert_eq!(signed_interpretation_uni(InterpretationId::F, 6).unwrap(), builders::mock_f(6));
        let psi = signed_interpretation_uni(InterpretationId::Psi, 3).unwrap();
        assert_eq!(psi.coeff(1), &BigInt::from(-1));
        // DO partitions of 4: only (3,1), sign (-1)^2, α^0.
        let AnySeries::Bi(phi) = signed_interpretation(InterpretationId::PhiG, 4) else { panic!() };
        assert_eq!(phi.coeff(4), &Poly::constant(1));
    }

    #[test]
    fn twisted_phi_matches_distinct_odd_sum() {
        let s = signed_interpretation_uni(InterpretationId::Phi, 20).unwrap();
        assert_eq!(s, builders::mock_phi(20).twist_q_negate());
    }

    #[test]
    fn parse_ids() {
        assert_eq!("INT_PSI_G".parse::<InterpretationId>().unwrap(), InterpretationId::PsiG);
        assert!("INT_X".parse::<InterpretationId>().is_err());
    }
}
