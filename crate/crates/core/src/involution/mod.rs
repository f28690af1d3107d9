//! The three sign-reversing involutions `Υ` on `P × D`, `Φ` on `DO × D` and
//! `Ψ` on `OC × D0`.
//!
//! Each map is written as a list of rules whose guards are evaluated
//! independently of one another, so that the audit can confirm exactly one
//! rule fires for every domain element. Where an exclusion overlaps a paired
//! rule (staircase `Q_1 = (1)` inputs of `Φ` and `Ψ`), the paired rule's guard
//! carries the negated exclusion: exclusions take precedence.

mod audit;
mod phi;
mod psi;
mod trace;
mod upsilon;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use audit::{audit, signed_sums, AuditReport, Violation};
pub use trace::{trace, trace_line, TraceReport};

use crate::error::{Error, Result};
use crate::partition::{self, Bipartition, Partition, PartitionClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Involution {
    Upsilon,
    Phi,
    Psi,
}

impl Involution {
    pub const ALL: [Involution; 3] = [Involution::Upsilon, Involution::Phi, Involution::Psi];

    pub fn name(self) -> &'static str {
        match self {
            Involution::Upsilon => "upsilon",
            Involution::Phi => "phi",
            Involution::Psi => "psi",
        }
    }

    /// Classes of `λ` and `μ`.
    pub fn classes(self) -> (PartitionClass, PartitionClass) {
        match self {
            Involution::Upsilon => (PartitionClass::P, PartitionClass::D),
            Involution::Phi => (PartitionClass::DO, PartitionClass::D),
            Involution::Psi => (PartitionClass::OC, PartitionClass::D0),
        }
    }

    /// `Φ` and `Ψ` act on nonempty `λ` only: the empty `λ` is the constant
    /// term of `φ` (and `ψ` has none), so it sits outside their sign sums.
    pub fn allows_empty_first(self) -> bool {
        self == Involution::Upsilon
    }

    pub fn check_domain(self, bp: &Bipartition) -> Result<()> {
        let (a, b) = self.classes();
        let fail = |reason: String| Err(Error::Domain { map: self, reason });
        if !partition::is_member(&bp.first, a) {
            return fail(format!("λ = {} is not in {a}", bp.first));
        }
        if !partition::is_member(&bp.second, b) {
            return fail(format!("μ = {} is not in {b}", bp.second));
        }
        if bp.first.is_empty() && !self.allows_empty_first() {
            return fail("λ must be nonempty".to_string());
        }
        Ok(())
    }

    /// Every domain element of total size `n`, in enumeration order.
    pub fn domain(self, n: u32) -> Vec<Bipartition> {
        let (a, b) = self.classes();
        let mut all = partition::enumerate_bipartitions(a, b, n);
        if !self.allows_empty_first() {
            all.retain(|bp| !bp.first.is_empty());
        }
        all
    }

    /// The class companions of this map's exclusions or survivors live in.
    pub fn companion_class(self) -> PartitionClass {
        match self {
            Involution::Phi => PartitionClass::Pde,
            Involution::Upsilon | Involution::Psi => PartitionClass::Pdo,
        }
    }

    /// All rules whose guards hold for `bp`. A well-formed map returns
    /// exactly one.
    pub fn matching_rules(self, bp: &Bipartition) -> Result<Vec<Rule>> {
        self.check_domain(bp)?;
        Ok(match self {
            Involution::Upsilon => upsilon::matching_rules(bp),
            Involution::Phi => phi::matching_rules(bp),
            Involution::Psi => psi::matching_rules(bp),
        })
    }

    pub fn apply(self, bp: &Bipartition) -> Result<MapOutcome> {
        let rules = self.matching_rules(bp)?;
        let rule = *rules.first().expect("every domain element matches a rule");
        let outcome = match self {
            Involution::Upsilon => upsilon::fire(rule, bp),
            Involution::Phi => phi::fire(rule, bp),
            Involution::Psi => psi::fire(rule, bp),
        };
        Ok(MapOutcome { rule, outcome })
    }

    /// Sign and α-exponent of `bp` in this map's signed generating function.
    ///
    /// - `Υ`: `(-1)^{r(λ)} α^{λ₁ + l(μ)}`
    /// - `Φ`: `(-1)^{(λ₁+1)/2} α^{(λ₁+1)/2 - l(λ) + l(μ)}`
    /// - `Ψ`: `(-1)^{l(λ)} α^{l(λ) - (λ₁+1)/2 + l(μ)}`, the zero part of `μ`
    ///   counting towards `l(μ)`.
    ///
    /// The α-exponent is the quantity each map preserves.
    pub fn weight(self, bp: &Bipartition) -> Weight {
        let lam = &bp.first;
        let l = lam.len() as u32;
        let half = (lam.largest() + 1) / 2;
        match self {
            Involution::Upsilon => Weight {
                negative: (lam.largest() + l) % 2 == 1,
                alpha: lam.largest() + bp.second.len() as u32,
            },
            Involution::Phi => Weight {
                negative: half % 2 == 1,
                alpha: half - l + bp.second.len() as u32,
            },
            Involution::Psi => Weight {
                negative: l % 2 == 1,
                alpha: l - half + bp.second.len_with_zero() as u32,
            },
        }
    }

    /// The parity statistic each map flips.
    pub fn sign_statistic(self, bp: &Bipartition) -> u32 {
        let lam = &bp.first;
        match self {
            Involution::Upsilon => (lam.largest() + lam.len() as u32) % 2,
            Involution::Phi => ((lam.largest() + 1) / 2) % 2,
            Involution::Psi => lam.len() as u32 % 2,
        }
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Involution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "upsilon" | "υ" => Ok(Involution::Upsilon),
            "phi" | "φ" => Ok(Involution::Phi),
            "psi" | "ψ" => Ok(Involution::Psi),
            _ => Err(Error::Unknown { kind: "involution", name: s.to_string() }),
        }
    }
}

/// `±α^alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Weight {
    pub negative: bool,
    pub alpha: u32,
}

impl Weight {
    pub fn sign(self) -> i64 {
        if self.negative {
            -1
        } else {
            1
        }
    }
}

/// The rule that decides a domain element's fate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Rule {
    /// `(∅, ∅)`, the constant term.
    UpsExcludedEmpty,
    /// `s(μ) ≤ m(λ)`: a part of `μ` is spread over the top of `λ`.
    UpsV1,
    /// `s(μ) > m(λ)`: the top column of the largest parts moves to `μ`.
    UpsV2,
    /// `((1^k), μ)`, `k` even: the ones merge into a part `k` of `μ`.
    UpsUMerge,
    /// `(∅, ν)`, `s(ν)` even: the smallest part becomes `λ = (1^{s(ν)})`.
    UpsUSplit,
    /// `(∅, ν)` with `s(ν)` odd.
    UpsSurvivorEmpty,
    /// `((1^k), μ)` with `k` odd.
    UpsSurvivorOnes,
    PhiIa,
    PhiIb,
    PhiIIa,
    PhiIIb,
    PhiExcludedStaircase,
    PhiExcludedMerge,
    PsiIa,
    PsiIb,
    PsiIIa,
    PsiIIb,
    PsiIIIa,
    PsiIIIb,
    PsiExcludedStaircase,
    PsiExcludedMerge,
}

impl Rule {
    pub fn label(self) -> &'static str {
        match self {
            Rule::UpsExcludedEmpty => "excluded-empty",
            Rule::UpsV1 => "Ups-V1",
            Rule::UpsV2 => "Ups-V2",
            Rule::UpsUMerge => "Ups-U-merge",
            Rule::UpsUSplit => "Ups-U-split",
            Rule::UpsSurvivorEmpty => "survivor-empty",
            Rule::UpsSurvivorOnes => "survivor-ones",
            Rule::PhiIa => "Phi-I-a",
            Rule::PhiIb => "Phi-I-b",
            Rule::PhiIIa => "Phi-II-a",
            Rule::PhiIIb => "Phi-II-b",
            Rule::PhiExcludedStaircase | Rule::PsiExcludedStaircase => "excluded-staircase",
            Rule::PhiExcludedMerge | Rule::PsiExcludedMerge => "excluded-merge",
            Rule::PsiIa => "Psi-I-a",
            Rule::PsiIb => "Psi-I-b",
            Rule::PsiIIa => "Psi-II-a",
            Rule::PsiIIb => "Psi-II-b",
            Rule::PsiIIIa => "Psi-III-a",
            Rule::PsiIIIb => "Psi-III-b",
        }
    }

    /// The rule that must fire on the image of a paired element.
    pub fn partner(self) -> Option<Rule> {
        Some(match self {
            Rule::UpsV1 => Rule::UpsV2,
            Rule::UpsV2 => Rule::UpsV1,
            Rule::UpsUMerge => Rule::UpsUSplit,
            Rule::UpsUSplit => Rule::UpsUMerge,
            Rule::PhiIa => Rule::PhiIb,
            Rule::PhiIb => Rule::PhiIa,
            Rule::PhiIIa => Rule::PhiIIb,
            Rule::PhiIIb => Rule::PhiIIa,
            Rule::PsiIa => Rule::PsiIb,
            Rule::PsiIb => Rule::PsiIa,
            Rule::PsiIIa => Rule::PsiIIb,
            Rule::PsiIIb => Rule::PsiIIa,
            Rule::PsiIIIa => Rule::PsiIIIb,
            Rule::PsiIIIb => Rule::PsiIIIa,
            _ => return None,
        })
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Paired(Bipartition),
    /// Left out of the involution. `companion` is the partition the element
    /// cancels against or stands for; staircases and `(∅, ∅)` have none.
    Excluded { companion: Option<Partition> },
    /// Unpaired element of `Υ`'s auxiliary set, standing for `companion ∈ Pdo`.
    Survivor { companion: Partition },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapOutcome {
    pub rule: Rule,
    pub outcome: Outcome,
}

impl MapOutcome {
    pub fn kind(&self) -> &'static str {
        match self.outcome {
            Outcome::Paired(_) => "Paired",
            Outcome::Excluded { .. } => "Excluded",
            Outcome::Survivor { .. } => "Survivor",
        }
    }

    pub fn image(&self) -> Option<&Bipartition> {
        match &self.outcome {
            Outcome::Paired(b) => Some(b),
            _ => None,
        }
    }

    pub fn companion(&self) -> Option<&Partition> {
        match &self.outcome {
            Outcome::Excluded { companion } => companion.as_ref(),
            Outcome::Survivor { companion } => Some(companion),
            Outcome::Paired(_) => None,
        }
    }
}

pub fn upsilon(bp: &Bipartition) -> Result<MapOutcome> {
    Involution::Upsilon.apply(bp)
}

pub fn phi(bp: &Bipartition) -> Result<MapOutcome> {
    Involution::Phi.apply(bp)
}

pub fn psi(bp: &Bipartition) -> Result<MapOutcome> {
    Involution::Psi.apply(bp)
}
