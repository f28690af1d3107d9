use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::workshop::{BuilderId as B, Side};
use crate::error::{Error, Result};
use crate::qseries::{AlphaTarget, AnySeries, BiSeries, Poly, Series};

/// The closed registry of identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    R1,
    R2,
    Gauss,
    FineMid,
    FineRight,
    Pi1,
    Add1,
    Add2,
    Bp,
    Pi2,
    Pi3,
    Rg1,
    Rg2,
    Pi1G,
    Pi2G,
    Pi3G,
    IntF,
    IntPhi,
    IntPsi,
    IntFG,
    IntPhiG,
    IntPsiG,
    SpecA1R1,
    SpecA1R2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hand {
    Left,
    Right,
}

/// One side of a registered identity, optionally with `α = 1` substituted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SideRef {
    pub id: IdentityId,
    pub hand: Hand,
    pub at_one: bool,
}

/// A labelled comparison. Most identities have one; the `α = 1` coherence
/// identities have two.
#[derive(Debug, Clone, Copy)]
pub struct Comparison {
    pub label: &'static str,
    pub left: SideRef,
    pub right: SideRef,
}

const fn side(id: IdentityId, hand: Hand) -> SideRef {
    SideRef { id, hand, at_one: false }
}

const fn at_one(id: IdentityId, hand: Hand) -> SideRef {
    SideRef { id, hand, at_one: true }
}

impl IdentityId {
    pub const ALL: [IdentityId; 24] = [
        IdentityId::R1,
        IdentityId::R2,
        IdentityId::Gauss,
        IdentityId::FineMid,
        IdentityId::FineRight,
        IdentityId::Pi1,
        IdentityId::Add1,
        IdentityId::Add2,
        IdentityId::Bp,
        IdentityId::Pi2,
        IdentityId::Pi3,
        IdentityId::Rg1,
        IdentityId::Rg2,
        IdentityId::Pi1G,
        IdentityId::Pi2G,
        IdentityId::Pi3G,
        IdentityId::IntF,
        IdentityId::IntPhi,
        IdentityId::IntPsi,
        IdentityId::IntFG,
        IdentityId::IntPhiG,
        IdentityId::IntPsiG,
        IdentityId::SpecA1R1,
        IdentityId::SpecA1R2,
    ];

    /// Bivariate identities paired with the univariate ones they reduce to
    /// at `α = 1`.
    pub const SPECIALIZATIONS: [(IdentityId, IdentityId); 8] = [
        (IdentityId::Rg1, IdentityId::R1),
        (IdentityId::Rg2, IdentityId::R2),
        (IdentityId::Pi1G, IdentityId::Pi1),
        (IdentityId::Pi2G, IdentityId::Add1),
        (IdentityId::Pi3G, IdentityId::Add2),
        (IdentityId::IntFG, IdentityId::IntF),
        (IdentityId::IntPhiG, IdentityId::IntPhi),
        (IdentityId::IntPsiG, IdentityId::IntPsi),
    ];

    pub fn tag(self) -> &'static str {
        match self {
            IdentityId::R1 => "R1",
            IdentityId::R2 => "R2",
            IdentityId::Gauss => "GAUSS",
            IdentityId::FineMid => "FINE_MID",
            IdentityId::FineRight => "FINE_RIGHT",
            IdentityId::Pi1 => "PI1",
            IdentityId::Add1 => "ADD1",
            IdentityId::Add2 => "ADD2",
            IdentityId::Bp => "BP",
            IdentityId::Pi2 => "PI2",
            IdentityId::Pi3 => "PI3",
            IdentityId::Rg1 => "RG1",
            IdentityId::Rg2 => "RG2",
            IdentityId::Pi1G => "PI1G",
            IdentityId::Pi2G => "PI2G",
            IdentityId::Pi3G => "PI3G",
            IdentityId::IntF => "INT_F",
            IdentityId::IntPhi => "INT_PHI",
            IdentityId::IntPsi => "INT_PSI",
            IdentityId::IntFG => "INT_F_G",
            IdentityId::IntPhiG => "INT_PHI_G",
            IdentityId::IntPsiG => "INT_PSI_G",
            IdentityId::SpecA1R1 => "SPEC_A1_R1",
            IdentityId::SpecA1R2 => "SPEC_A1_R2",
        }
    }

    /// One-line statement of what is compared.
    pub fn describe(self) -> &'static str {
        match self {
            IdentityId::R1 => "φ(-q) - 2ψ(-q) = f(q)",
            IdentityId::R2 => "φ(-q) + 2ψ(-q) = (q;q)_∞ / (-q;q)_∞²",
            IdentityId::Gauss => "Σ_{k∈ℤ} (-1)^k q^{k²} = (q;q)_∞ / (-q;q)_∞",
            IdentityId::FineMid => "1 + Σ (-1)^{k-1} q^k / (-q;q)_k = f(q)",
            IdentityId::FineRight => "1 + Σ (-1)^{k-1} q^k (-q^{k+1};q)_∞ / (-q;q)_∞ = f(q)",
            IdentityId::Pi1 => "(-q;q)_∞ f(q) = 1 + 2 Σ p_do(n) q^n",
            IdentityId::Add1 => "(-q;q)_∞ φ(-q) = 1 + Σ p_do(n) q^n + Σ_{k≥1} (-1)^k q^{k²}",
            IdentityId::Add2 => "2(-q;q)_∞ ψ(-q) = -Σ p_do(n) q^n + Σ_{k≥1} (-1)^k q^{k²}",
            IdentityId::Bp => "Σ (p^e_do(n) - p^o_do(n)) q^n = Σ_{k≥1} (-1)^k q^{k²}",
            IdentityId::Pi2 => "(-q;q)_∞ φ(-q) = 1 + 2 Σ p^e_do(n) q^n",
            IdentityId::Pi3 => "(-q;q)_∞ ψ(-q) = -Σ p^o_do(n) q^n",
            IdentityId::Rg1 => "φ(-αq;-q) - (1+α) ψ(-αq;-q) = f(αq;q)",
            IdentityId::Rg2 => "φ(-αq;-q) + (1+α) ψ(-αq;-q) = (q;q)_∞ / ((-q;q)_∞ (-αq;q)_∞)",
            IdentityId::Pi1G => "(-αq;q)_∞ f(αq;q) = 1 + 2 Σ_{ν∈Pdo} α^{l(ν)} q^{|ν|}",
            IdentityId::Pi2G => {
                "(-αq;q)_∞ φ(-αq;-q) = 1 + Σ_{ν∈Pdo} α^{l(ν)} q^{|ν|} + Σ_{k≥1} (-1)^k q^{k²}"
            }
            IdentityId::Pi3G => "(-α;q)_∞ ψ(-αq;-q) = -Σ_{ν∈Pdo} α^{l(ν)} q^{|ν|} + Σ_{k≥1} (-1)^k q^{k²}",
            IdentityId::IntF => "1 + Σ_{λ∈P} (-1)^{r(λ)} q^{|λ|} = f(q)",
            IdentityId::IntPhi => "1 + Σ_{λ∈DO} (-1)^{(λ₁+1)/2} q^{|λ|} = φ(-q)",
            IdentityId::IntPsi => "Σ_{λ∈OC, λ≠∅} (-1)^{l(λ)} q^{|λ|} = ψ(-q)",
            IdentityId::IntFG => "1 + Σ_{λ∈P} (-1)^{r(λ)} α^{λ₁} q^{|λ|} = f(αq;q)",
            IdentityId::IntPhiG => "1 + Σ_{λ∈DO} (-1)^{(λ₁+1)/2} α^{(λ₁+1)/2-l(λ)} q^{|λ|} = φ(-αq;-q)",
            IdentityId::IntPsiG => "Σ_{λ∈OC, λ≠∅} (-1)^{l(λ)} α^{l(λ)-(λ₁+1)/2} q^{|λ|} = ψ(-αq;-q)",
            IdentityId::SpecA1R1 => "RG1 at α = 1 against both sides of R1",
            IdentityId::SpecA1R2 => "RG2 at α = 1 against both sides of R2",
        }
    }

    /// Whether verification builds bivariate series, which sets the order
    /// used by [`super::verify_all`].
    pub fn is_bivariate(self) -> bool {
        matches!(
            self,
            IdentityId::Rg1
                | IdentityId::Rg2
                | IdentityId::Pi1G
                | IdentityId::Pi2G
                | IdentityId::Pi3G
                | IdentityId::IntFG
                | IdentityId::IntPhiG
                | IdentityId::IntPsiG
                | IdentityId::SpecA1R1
                | IdentityId::SpecA1R2
        )
    }

    /// The comparisons that make up this identity.
    pub fn comparisons(self) -> Vec<Comparison> {
        use Hand::{Left, Right};
        let cross = |bi, uni| {
            vec![
                Comparison { label: "left at α = 1", left: at_one(bi, Left), right: side(uni, Right) },
                Comparison { label: "right at α = 1", left: at_one(bi, Right), right: side(uni, Left) },
            ]
        };
        match self {
            // The left sides of R1 and RG1 are equal to the right sides of
            // each other at α = 1, and comparing across keeps the builders of
            // each comparison disjoint (R2 and RG2 share `(q;q)_∞`).
            IdentityId::SpecA1R1 => cross(IdentityId::Rg1, IdentityId::R1),
            IdentityId::SpecA1R2 => cross(IdentityId::Rg2, IdentityId::R2),
            id => vec![Comparison { label: "sides", left: side(id, Left), right: side(id, Right) }],
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.tag())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unknown { kind: "identity", name: s.to_string() })
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

impl SideRef {
    /// Every builder this side is allowed to touch.
    pub fn builders(self) -> &'static [B] {
        use Hand::{Left, Right};
        use IdentityId as I;
        match (self.id, self.hand) {
            (I::R1 | I::R2, Left) => &[B::MockPhi, B::MockPsi],
            (I::R1, Right) => &[B::MockF],
            (I::R2, Right) => &[B::QQInf, B::NegQQInf],
            (I::Gauss, Left) => &[B::ThetaGaussTwoSided],
            (I::Gauss, Right) => &[B::QQInf, B::NegQQInf],
            (I::FineMid, Left) => &[B::FineMid],
            (I::FineRight, Left) => &[B::FineRight],
            (I::FineMid | I::FineRight, Right) => &[B::MockF],
            (I::Pi1, Left) => &[B::NegQQInf, B::MockF],
            (I::Pi1, Right) => &[B::PdoCounts],
            (I::Add1 | I::Pi2, Left) => &[B::NegQQInf, B::MockPhi],
            (I::Add2 | I::Pi3, Left) => &[B::NegQQInf, B::MockPsi],
            (I::Add1 | I::Add2, Right) => &[B::PdoCounts, B::ThetaGauss],
            (I::Bp, Left) => &[B::PdoEven, B::PdoOdd],
            (I::Bp, Right) => &[B::ThetaGauss],
            (I::Pi2, Right) => &[B::PdoEven],
            (I::Pi3, Right) => &[B::PdoOdd],
            (I::Rg1 | I::Rg2, Left) => &[B::MockPhiAlpha, B::MockPsiAlpha],
            (I::Rg1, Right) => &[B::MockFAlpha],
            (I::Rg2, Right) => &[B::QQInf, B::NegQQInf, B::NegAlphaQQInf],
            (I::Pi1G, Left) => &[B::NegAlphaQQInf, B::MockFAlpha],
            (I::Pi2G, Left) => &[B::NegAlphaQQInf, B::MockPhiAlpha],
            (I::Pi3G, Left) => &[B::NegAlphaQInf, B::MockPsiAlpha],
            (I::Pi1G, Right) => &[B::PdoByLength],
            (I::Pi2G | I::Pi3G, Right) => &[B::PdoByLength, B::ThetaGauss],
            (I::IntF, Left) => &[B::IntF],
            (I::IntPhi, Left) => &[B::IntPhi],
            (I::IntPsi, Left) => &[B::IntPsi],
            (I::IntFG, Left) => &[B::IntFG],
            (I::IntPhiG, Left) => &[B::IntPhiG],
            (I::IntPsiG, Left) => &[B::IntPsiG],
            (I::IntF, Right) => &[B::MockF],
            (I::IntPhi, Right) => &[B::MockPhi],
            (I::IntPsi, Right) => &[B::MockPsi],
            (I::IntFG, Right) => &[B::MockFAlpha],
            (I::IntPhiG, Right) => &[B::MockPhiAlpha],
            (I::IntPsiG, Right) => &[B::MockPsiAlpha],
            (I::SpecA1R1 | I::SpecA1R2, _) => &[],
        }
    }

    /// Builds this side from the builders it declared.
    pub fn build(self, s: &Side<'_>) -> Result<AnySeries> {
        let built = raw(self.id, self.hand, s)?;
        Ok(match (built, self.at_one) {
            (AnySeries::Bi(b), true) => AnySeries::Uni(b.substitute_alpha(AlphaTarget::One)),
            (other, _) => other,
        })
    }
}

fn raw(id: IdentityId, hand: Hand, s: &Side<'_>) -> Result<AnySeries> {
    use Hand::{Left, Right};
    use IdentityId as I;
    let n = s.order();
    let one = Series::one(n);
    let one_bi = BiSeries::one(n);
    let tw = |b| s.uni(b).twist_q_negate();
    let one_plus_alpha = Poly::from_ints(&[1, 1]);
    Ok(match (id, hand) {
        (I::R1, Left) => (&tw(B::MockPhi) - &tw(B::MockPsi).scale_int(2)).into(),
        (I::R2, Left) => (&tw(B::MockPhi) + &tw(B::MockPsi).scale_int(2)).into(),
        (I::R1 | I::FineMid | I::FineRight | I::IntF, Right) => s.uni(B::MockF).into(),
        (I::R2, Right) => {
            let d = s.uni(B::NegQQInf);
            (&s.uni(B::QQInf) * &(&d * &d).reciprocal()?).into()
        }
        (I::Gauss, Left) => s.uni(B::ThetaGaussTwoSided).into(),
        (I::Gauss, Right) => (&s.uni(B::QQInf) * &s.uni(B::NegQQInf).reciprocal()?).into(),
        (I::FineMid, Left) => s.uni(B::FineMid).into(),
        (I::FineRight, Left) => s.uni(B::FineRight).into(),
        (I::Pi1, Left) => (&s.uni(B::NegQQInf) * &s.uni(B::MockF)).into(),
        (I::Pi1, Right) => (&one + &s.uni(B::PdoCounts).scale_int(2)).into(),
        (I::Add1 | I::Pi2, Left) => (&s.uni(B::NegQQInf) * &tw(B::MockPhi)).into(),
        (I::Add2, Left) => (&s.uni(B::NegQQInf) * &tw(B::MockPsi)).scale_int(2).into(),
        (I::Pi3, Left) => (&s.uni(B::NegQQInf) * &tw(B::MockPsi)).into(),
        (I::Add1, Right) => (&(&one + &s.uni(B::PdoCounts)) + &s.uni(B::ThetaGauss)).into(),
        (I::Add2, Right) => (&s.uni(B::ThetaGauss) - &s.uni(B::PdoCounts)).into(),
        (I::Bp, Left) => (&s.uni(B::PdoEven) - &s.uni(B::PdoOdd)).into(),
        (I::Bp, Right) => s.uni(B::ThetaGauss).into(),
        (I::Pi2, Right) => (&one + &s.uni(B::PdoEven).scale_int(2)).into(),
        (I::Pi3, Right) => s.uni(B::PdoOdd).negate().into(),
        (I::Rg1, Left) => {
            (&s.bi(B::MockPhiAlpha) - &s.bi(B::MockPsiAlpha).scale_poly(&one_plus_alpha)).into()
        }
        (I::Rg2, Left) => {
            (&s.bi(B::MockPhiAlpha) + &s.bi(B::MockPsiAlpha).scale_poly(&one_plus_alpha)).into()
        }
        (I::Rg1 | I::IntFG, Right) => s.bi(B::MockFAlpha).into(),
        (I::Rg2, Right) => {
            let d = &s.bi(B::NegQQInf) * &s.bi(B::NegAlphaQQInf);
            (&s.bi(B::QQInf) * &d.reciprocal()?).into()
        }
        (I::Pi1G, Left) => (&s.bi(B::NegAlphaQQInf) * &s.bi(B::MockFAlpha)).into(),
        (I::Pi2G, Left) => (&s.bi(B::NegAlphaQQInf) * &s.bi(B::MockPhiAlpha)).into(),
        // ψ(-αq;-q) has no constant term, so the q^n coefficient of
        // (-α;q)_∞ first matters at q^{n+1}. Both sides go one power further
        // so that every coefficient of the product builder is checked.
        (I::Pi3G, Left) => {
            let mut coeffs = s.bi(B::NegAlphaQInf).coeffs().to_vec();
            coeffs.push(Poly::default());
            (&BiSeries::from_coeffs(coeffs) * &s.at(n + 1).bi(B::MockPsiAlpha)).into()
        }
        (I::Pi1G, Right) => (&one_bi + &s.bi(B::PdoByLength).scale_int(2)).into(),
        (I::Pi2G, Right) => (&(&one_bi + &s.bi(B::PdoByLength)) + &s.bi(B::ThetaGauss)).into(),
        (I::Pi3G, Right) => {
            let up = s.at(n + 1);
            (&up.bi(B::ThetaGauss) - &up.bi(B::PdoByLength)).into()
        }
        (I::IntF, Left) => s.uni(B::IntF).into(),
        (I::IntPhi, Left) => s.uni(B::IntPhi).into(),
        (I::IntPsi, Left) => s.uni(B::IntPsi).into(),
        (I::IntFG, Left) => s.bi(B::IntFG).into(),
        (I::IntPhiG, Left) => s.bi(B::IntPhiG).into(),
        (I::IntPsiG, Left) => s.bi(B::IntPsiG).into(),
        (I::IntPhi, Right) => tw(B::MockPhi).into(),
        (I::IntPsi, Right) => tw(B::MockPsi).into(),
        (I::IntPhiG, Right) => s.bi(B::MockPhiAlpha).into(),
        (I::IntPsiG, Right) => s.bi(B::MockPsiAlpha).into(),
        (I::SpecA1R1 | I::SpecA1R2, _) => unreachable!("coherence identities compare sides of other identities"),
    })
}
