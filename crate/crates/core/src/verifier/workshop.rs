//! Every series an identity side can be made of, built on demand, cached, and
//! optionally corrupted at one coefficient.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{self, PartitionClass};
use crate::qseries::{builders, pochhammer, AnySeries, BiSeries, InterpretationId, Poly, Series};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BuilderId {
    MockF,
    MockPhi,
    MockPsi,
    /// `f(αq;q)`.
    MockFAlpha,
    /// `φ(-αq;-q)`.
    MockPhiAlpha,
    /// `ψ(-αq;-q)`.
    MockPsiAlpha,
    /// `Σ_{k≥1} (-1)^k q^{k²}`.
    ThetaGauss,
    /// `Σ_{k∈ℤ} (-1)^k q^{k²}`.
    ThetaGaussTwoSided,
    FineMid,
    FineRight,
    /// `(q;q)_∞`.
    QQInf,
    /// `(-q;q)_∞`.
    NegQQInf,
    /// `(-αq;q)_∞`.
    NegAlphaQQInf,
    /// `(-α;q)_∞`.
    NegAlphaQInf,
    /// `Σ p_do(n) q^n`.
    PdoCounts,
    /// `Σ p^e_do(n) q^n`.
    PdoEven,
    /// `Σ p^o_do(n) q^n`.
    PdoOdd,
    /// `Σ_{ν∈Pdo} α^{l(ν)} q^{|ν|}`.
    PdoByLength,
    IntF,
    IntPhi,
    IntPsi,
    IntFG,
    IntPhiG,
    IntPsiG,
}

impl BuilderId {
    pub const ALL: [BuilderId; 24] = [
        BuilderId::MockF,
        BuilderId::MockPhi,
        BuilderId::MockPsi,
        BuilderId::MockFAlpha,
        BuilderId::MockPhiAlpha,
        BuilderId::MockPsiAlpha,
        BuilderId::ThetaGauss,
        BuilderId::ThetaGaussTwoSided,
        BuilderId::FineMid,
        BuilderId::FineRight,
        BuilderId::QQInf,
        BuilderId::NegQQInf,
        BuilderId::NegAlphaQQInf,
        BuilderId::NegAlphaQInf,
        BuilderId::PdoCounts,
        BuilderId::PdoEven,
        BuilderId::PdoOdd,
        BuilderId::PdoByLength,
        BuilderId::IntF,
        BuilderId::IntPhi,
        BuilderId::IntPsi,
        BuilderId::IntFG,
        BuilderId::IntPhiG,
        BuilderId::IntPsiG,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuilderId::MockF => "mock_f",
            BuilderId::MockPhi => "mock_phi",
            BuilderId::MockPsi => "mock_psi",
            BuilderId::MockFAlpha => "mock_f_alpha",
            BuilderId::MockPhiAlpha => "mock_phi_alpha_twisted",
            BuilderId::MockPsiAlpha => "mock_psi_alpha_twisted",
            BuilderId::ThetaGauss => "theta_gauss",
            BuilderId::ThetaGaussTwoSided => "theta_gauss_two_sided",
            BuilderId::FineMid => "fine_mid",
            BuilderId::FineRight => "fine_right",
            BuilderId::QQInf => "q_q_inf",
            BuilderId::NegQQInf => "neg_q_q_inf",
            BuilderId::NegAlphaQQInf => "neg_alpha_q_q_inf",
            BuilderId::NegAlphaQInf => "neg_alpha_q_inf",
            BuilderId::PdoCounts => "pdo_counts",
            BuilderId::PdoEven => "pdo_even",
            BuilderId::PdoOdd => "pdo_odd",
            BuilderId::PdoByLength => "pdo_by_length",
            BuilderId::IntF => "int_f",
            BuilderId::IntPhi => "int_phi",
            BuilderId::IntPsi => "int_psi",
            BuilderId::IntFG => "int_f_g",
            BuilderId::IntPhiG => "int_phi_g",
            BuilderId::IntPsiG => "int_psi_g",
        }
    }

    pub fn is_bivariate(self) -> bool {
        matches!(
            self,
            BuilderId::MockFAlpha
                | BuilderId::MockPhiAlpha
                | BuilderId::MockPsiAlpha
                | BuilderId::NegAlphaQQInf
                | BuilderId::NegAlphaQInf
                | BuilderId::PdoByLength
                | BuilderId::IntFG
                | BuilderId::IntPhiG
                | BuilderId::IntPsiG
        )
    }

    fn build(self, order: usize) -> AnySeries {
        let n = order as u32;
        let counts = |v: Vec<u64>| {
            let mut s = Series::from_coeffs(v.into_iter().map(BigInt::from).collect());
            *s.coeff_mut(0) = BigInt::from(0);
            s
        };
        let parity = |even: bool| {
            let table = partition::pdo_length_parity_up_to(n);
            Series::from_coeffs(
                table.into_iter().map(|c| BigInt::from(if even { c.even_count } else { c.odd_count })).collect(),
            )
        };
        let interp = |id| crate::qseries::signed_interpretation(id, order);
        match self {
            BuilderId::MockF => builders::mock_f(order).into(),
            BuilderId::MockPhi => builders::mock_phi(order).into(),
            BuilderId::MockPsi => builders::mock_psi(order).into(),
            BuilderId::MockFAlpha => builders::mock_f_alpha(order, true).into(),
            BuilderId::MockPhiAlpha => builders::mock_phi_alpha(order, true).into(),
            BuilderId::MockPsiAlpha => builders::mock_psi_alpha(order, true).into(),
            BuilderId::ThetaGauss => builders::theta_gauss(order).into(),
            BuilderId::ThetaGaussTwoSided => builders::theta_gauss_two_sided(order).into(),
            BuilderId::FineMid => builders::fine_mid(order).into(),
            BuilderId::FineRight => builders::fine_right(order).into(),
            BuilderId::QQInf => pochhammer::q_q_inf(order).into(),
            BuilderId::NegQQInf => pochhammer::neg_q_q_inf(order).into(),
            BuilderId::NegAlphaQQInf => pochhammer::neg_alpha_q_q_inf(order).into(),
            BuilderId::NegAlphaQInf => pochhammer::neg_alpha_q_inf(order).into(),
            BuilderId::PdoCounts => counts(partition::counts_up_to(PartitionClass::Pdo, n)).into(),
            BuilderId::PdoEven => parity(true).into(),
            BuilderId::PdoOdd => parity(false).into(),
            BuilderId::PdoByLength => {
                let table = partition::length_census(PartitionClass::Pdo, n);
                let coeffs =
                    table.into_iter().map(|row| Poly::new(row.into_iter().map(BigInt::from).collect())).collect();
                BiSeries::from_coeffs(coeffs).into()
            }
            BuilderId::IntF => interp(InterpretationId::F),
            BuilderId::IntPhi => interp(InterpretationId::Phi),
            BuilderId::IntPsi => interp(InterpretationId::Psi),
            BuilderId::IntFG => interp(InterpretationId::FG),
            BuilderId::IntPhiG => interp(InterpretationId::PhiG),
            BuilderId::IntPsiG => interp(InterpretationId::PsiG),
        }
    }
}

impl fmt::Display for BuilderId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for BuilderId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BuilderId::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::Unknown { kind: "builder", name: s.to_string() })
    }
}

/// Adds `delta` to the coefficient of `q^power` (its constant α-term for a
/// bivariate builder) every time `builder` is built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Fault {
    pub builder: BuilderId,
    pub power: usize,
    pub delta: i64,
}

impl Fault {
    fn apply(&self, s: &mut AnySeries) {
        if self.power > s.order() {
            return;
        }
        match s {
            AnySeries::Uni(x) => *x.coeff_mut(self.power) += self.delta,
            AnySeries::Bi(x) => {
                let c = x.coeff_mut(self.power);
                *c = &*c + &Poly::constant(self.delta);
            }
        }
    }
}

/// Builds and caches series for one verification run.
#[derive(Default)]
pub struct Workshop {
    fault: Option<Fault>,
    cache: Mutex<HashMap<(BuilderId, usize), AnySeries>>,
}

impl Workshop {
    pub fn new() -> Self {
        Workshop::default()
    }

    pub fn with_fault(fault: Fault) -> Self {
        Workshop { fault: Some(fault), ..Workshop::default() }
    }

    /// A faulted workshop that starts from everything `self` has already
    /// built, except the faulted builder.
    pub fn faulted_copy(&self, fault: Fault) -> Self {
        let mut cache = self.cache.lock().expect("cache lock").clone();
        cache.retain(|&(b, _), _| b != fault.builder);
        Workshop { fault: Some(fault), cache: Mutex::new(cache) }
    }

    pub fn fault(&self) -> Option<Fault> {
        self.fault
    }

    fn get(&self, b: BuilderId, order: usize) -> AnySeries {
        if let Some(s) = self.cache.lock().expect("cache lock").get(&(b, order)) {
            return s.clone();
        }
        let mut s = b.build(order);
        if let Some(f) = self.fault.filter(|f| f.builder == b) {
            f.apply(&mut s);
        }
        self.cache.lock().expect("cache lock").insert((b, order), s.clone());
        s
    }

    /// Scopes for the two sides of one comparison. Panics when the declared
    /// builder sets overlap: a side may never be checked against itself.
    pub fn pair<'a>(
        &'a self,
        left: &'static [BuilderId],
        right: &'static [BuilderId],
        order: usize,
    ) -> (Side<'a>, Side<'a>) {
        if let Some(b) = left.iter().find(|b| right.contains(b)) {
            panic!("builder {b} appears on both sides of one comparison");
        }
        (self.side(left, order), self.side(right, order))
    }

    /// A scope without the disjointness requirement, for coherence checks
    /// that compare two identities rather than two sides of one.
    pub fn side<'a>(&'a self, allowed: &'static [BuilderId], order: usize) -> Side<'a> {
        Side { ws: self, allowed, order }
    }
}

/// The builders one side of a comparison may use.
pub struct Side<'a> {
    ws: &'a Workshop,
    allowed: &'static [BuilderId],
    order: usize,
}

impl Side<'_> {
    pub fn order(&self) -> usize {
        self.order
    }

    /// The same builders at another order.
    pub fn at(&self, order: usize) -> Side<'_> {
        Side { ws: self.ws, allowed: self.allowed, order }
    }

    fn get(&self, b: BuilderId) -> AnySeries {
        assert!(self.allowed.contains(&b), "builder {b} is not declared for this side");
        self.ws.get(b, self.order)
    }

    pub fn uni(&self, b: BuilderId) -> Series {
        match self.get(b) {
            AnySeries::Uni(s) => s,
            AnySeries::Bi(_) => panic!("{b} is bivariate"),
        }
    }

    pub fn bi(&self, b: BuilderId) -> BiSeries {
        match self.get(b) {
            AnySeries::Bi(s) => s,
            AnySeries::Uni(s) => s.lift(),
        }
    }
}
