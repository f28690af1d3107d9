//! Direct-summation builders for the mock theta functions and the companion
//! series in their identities.
//!
//! Every sum here has an `n`-th summand whose lowest term is at least
//! `q^(n²)`, so summation stops once `n² > order`. Denominators are carried
//! incrementally: the `n`-th partial product is divided into the summand one
//! factor at a time.

use num_bigint::BigInt;

use super::pochhammer::{self, Monomial};
use super::series::{BiSeries, Series};
use crate::error::{Error, Result};

fn max_index(order: usize) -> u32 {
    let mut n = 0u32;
    while ((n + 1) * (n + 1)) as usize <= order {
        n += 1;
    }
    n
}

/// `f(q) = Σ q^{n²} / (-q;q)_n²`.
pub fn mock_f(order: usize) -> Series {
    let mut total = Series::zero(order);
    for n in 0..=max_index(order) {
        let mut term = Series::monomial(order, (n * n) as usize, BigInt::from(1));
        for i in 1..=n as usize {
            term.div_factor(false, 0, i);
            term.div_factor(false, 0, i);
        }
        total = &total + &term;
    }
    total
}

/// `φ(q) = Σ q^{n²} / (-q²;q²)_n`.
pub fn mock_phi(order: usize) -> Series {
    let mut total = Series::zero(order);
    for n in 0..=max_index(order) {
        let mut term = Series::monomial(order, (n * n) as usize, BigInt::from(1));
        for i in 1..=n as usize {
            term.div_factor(false, 0, 2 * i);
        }
        total = &total + &term;
    }
    total
}

/// `ψ(q) = Σ_{n≥1} q^{n²} / (q;q²)_n`.
pub fn mock_psi(order: usize) -> Series {
    let mut total = Series::zero(order);
    for n in 1..=max_index(order) {
        let mut term = Series::monomial(order, (n * n) as usize, BigInt::from(1));
        for i in 0..n as usize {
            term.div_factor(true, 0, 2 * i + 1);
        }
        total = &total + &term;
    }
    total
}

/// Divides by the factor `1 - m` for a monomial `m = ±α^i q^j`, `j ≥ 1`.
fn div_one_minus(s: &mut BiSeries, m: Monomial) -> Result<()> {
    if m.q == 0 {
        return Err(Error::NonUnitConstant);
    }
    s.div_factor(!m.negative, m.alpha, m.q as usize);
    Ok(())
}

/// The base of a two-variable function: `q` or `-q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Base {
    Q,
    NegQ,
}

impl Base {
    fn monomial(self) -> Monomial {
        Monomial::new(self == Base::NegQ, 0, 1)
    }
}

/// `f(a;Q) = Σ Q^{n²-n} a^n / ((-Q;Q)_n (-a;Q)_n)`; `a` needs a positive
/// power of q for the result to be a series with polynomial coefficients.
pub fn andrews_f(a: Monomial, base: Base, order: usize) -> Result<BiSeries> {
    let bq = base.monomial();
    let mut total = BiSeries::zero(order);
    for n in 0.. {
        let lead = bq.pow(n * n - n).times(a.pow(n));
        if lead.q as usize > order {
            break;
        }
        let mut term: BiSeries = lead.series(order);
        for i in 1..=n {
            div_one_minus(&mut term, bq.pow(i).neg())?;
        }
        for i in 0..n {
            div_one_minus(&mut term, a.times(bq.pow(i)).neg())?;
        }
        total = &total + &term;
    }
    Ok(total)
}

/// `φ(a;Q) = Σ Q^{n²} / (-aQ;Q²)_n`.
pub fn andrews_phi(a: Monomial, base: Base, order: usize) -> Result<BiSeries> {
    let bq = base.monomial();
    let mut total = BiSeries::zero(order);
    for n in 0..=max_index(order) {
        let mut term: BiSeries = bq.pow(n * n).series(order);
        for i in 0..n {
            div_one_minus(&mut term, a.times(bq.pow(2 * i + 1)).neg())?;
        }
        total = &total + &term;
    }
    Ok(total)
}

/// `ψ(a;Q) = Σ_{n≥1} Q^{n²} / (a;Q²)_n`.
pub fn andrews_psi(a: Monomial, base: Base, order: usize) -> Result<BiSeries> {
    let bq = base.monomial();
    let mut total = BiSeries::zero(order);
    for n in 1..=max_index(order) {
        let mut term: BiSeries = bq.pow(n * n).series(order);
        for i in 0..n {
            div_one_minus(&mut term, a.times(bq.pow(2 * i)))?;
        }
        total = &total + &term;
    }
    Ok(total)
}

const ALPHA_Q: Monomial = Monomial::new(false, 1, 1);

/// `f(αq;q) = Σ α^n q^{n²} / ((-q;q)_n (-αq;q)_n)`. The twisted form is the
/// same function.
pub fn mock_f_alpha(order: usize, _twisted: bool) -> BiSeries {
    andrews_f(ALPHA_Q, Base::Q, order).expect("αq has a positive q-power")
}

/// `φ(αq;q)`, or `φ(-αq;-q) = Σ (-1)^n q^{n²} / (-αq²;q²)_n` when twisted.
pub fn mock_phi_alpha(order: usize, twisted: bool) -> BiSeries {
    let built = if twisted {
        andrews_phi(ALPHA_Q.neg(), Base::NegQ, order)
    } else {
        andrews_phi(ALPHA_Q, Base::Q, order)
    };
    built.expect("αq has a positive q-power")
}

/// `ψ(αq;q)`, or `ψ(-αq;-q) = Σ (-1)^n q^{n²} / (-αq;q²)_n` when twisted.
pub fn mock_psi_alpha(order: usize, twisted: bool) -> BiSeries {
    let built = if twisted {
        andrews_psi(ALPHA_Q.neg(), Base::NegQ, order)
    } else {
        andrews_psi(ALPHA_Q, Base::Q, order)
    };
    built.expect("αq has a positive q-power")
}

/// `Σ_{k≥1} (-1)^k q^{k²}`.
pub fn theta_gauss(order: usize) -> Series {
    let mut s = Series::zero(order);
    for k in 1..=max_index(order) as usize {
        *s.coeff_mut(k * k) = BigInt::from(if k % 2 == 0 { 1 } else { -1 });
    }
    s
}

/// `Σ_{k∈ℤ} (-1)^k q^{k²} = 1 + 2 Σ_{k≥1} (-1)^k q^{k²}`.
pub fn theta_gauss_two_sided(order: usize) -> Series {
    &Series::one(order) + &theta_gauss(order).scale_int(2)
}

/// `1 + Σ_{k≥1} (-1)^{k-1} q^k / (-q;q)_k`.
pub fn fine_mid(order: usize) -> Series {
    let mut total = Series::one(order);
    let mut recip = Series::one(order);
    for k in 1..=order {
        recip.div_factor(false, 0, k);
        let term = recip.shift(k);
        total = if k % 2 == 1 { &total + &term } else { &total - &term };
    }
    total
}

/// `1 + (1/(-q;q)_∞) Σ_{k≥1} (-1)^{k-1} q^k (-q^{k+1};q)_∞`.
pub fn fine_right(order: usize) -> Series {
    let mut sum = Series::zero(order);
    for k in 1..=order {
        let tail = pochhammer::QPochhammer::infinite(Monomial::q(k as u32 + 1).neg(), Monomial::q(1))
            .series(order)
            .expect("univariate product");
        let term = tail.shift(k);
        sum = if k % 2 == 1 { &sum + &term } else { &sum - &term };
    }
    let inv = pochhammer::neg_q_q_inf(order).reciprocal().expect("unit constant term");
    &Series::one(order) + &(&inv * &sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{self, PartitionClass};
    use crate::qseries::poly::Poly;
    use crate::qseries::series::AlphaTarget;

    fn uni(c: &[i64]) -> Series {
        Series::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// 1 + Σ_{λ ≠ ∅} (-1)^{rank} q^{|λ|} by walking every partition.
    fn rank_walk(order: u32) -> Series {
        let mut s = Series::zero(order as usize);
        partition::for_each_up_to(PartitionClass::P, order, |p| {
            let r = partition::rank(p).unwrap();
            *s.coeff_mut(p.size() as usize) += if r % 2 == 0 { 1 } else { -1 };
        });
        s
    }

    #[test]
    fn mock_f_low_order() {
        let expected = uni(&[1, 1, -2, 3, -3, 3, -5]);
        assert_eq!(rank_walk(6), expected);
        assert_eq!(mock_f(6), expected);
        assert_eq!(mock_f(30), rank_walk(30));
    }

    #[test]
    fn mock_psi_and_phi_leading_terms() {
        let psi = mock_psi(5);
        assert_eq!((psi.coeff(0), psi.coeff(1)), (&BigInt::from(0), &BigInt::from(1)));
        assert_eq!(mock_phi(0), Series::one(0));
        assert_eq!(mock_f(0), Series::one(0));
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta_gauss(10), uni(&[0, -1, 0, 0, 1, 0, 0, 0, 0, -1, 0]));
        assert_eq!(theta_gauss_two_sided(4), uni(&[1, -2, 0, 0, 2]));
    }

    #[test]
    fn gauss_product_form() {
        let n = 100;
        let rhs = &pochhammer::q_q_inf(n) * &pochhammer::neg_q_q_inf(n).reciprocal().unwrap();
        assert_eq!(theta_gauss_two_sided(n), rhs);
    }

    #[test]
    fn twisted_alpha_leading_terms() {
        let phi = mock_phi_alpha(6, true);
        assert_eq!(phi.coeff(1), &Poly::constant(-1));
        assert_eq!(phi.coeff(2), &Poly::default());
        assert_eq!(phi.coeff(4), &Poly::constant(1));
        let psi = mock_psi_alpha(6, true);
        assert_eq!(psi.coeff(2), &Poly::from_ints(&[0, 1]));
        assert_eq!(mock_f_alpha(6, false).coeff(0), &Poly::constant(1));
    }

    #[test]
    fn specializations_at_alpha_one() {
        let n = 40;
        assert_eq!(mock_phi_alpha(n, true).substitute_alpha(AlphaTarget::One), mock_phi(n).twist_q_negate());
        assert_eq!(mock_psi_alpha(n, true).substitute_alpha(AlphaTarget::One), mock_psi(n).twist_q_negate());
        assert_eq!(mock_f_alpha(n, false).substitute_alpha(AlphaTarget::One), mock_f(n));
        assert_eq!(mock_phi_alpha(n, false).substitute_alpha(AlphaTarget::One), mock_phi(n));
        assert_eq!(mock_psi_alpha(n, false).substitute_alpha(AlphaTarget::One), mock_psi(n));
    }

    #[test]
    fn alpha_degree_bound_holds() {
        for twisted in [false, true] {
            assert!(mock_f_alpha(25, twisted).alpha_degree_bounded());
            assert!(mock_phi_alpha(25, twisted).alpha_degree_bounded());
            assert!(mock_psi_alpha(25, twisted).alpha_degree_bounded());
        }
        assert!(pochhammer::neg_alpha_q_q_inf(25).alpha_degree_bounded());
    }

    #[test]
    fn fine_forms_match_f() {
        assert_eq!(fine_mid(60), mock_f(60));
        assert_eq!(fine_right(60), mock_f(60));
    }

    #[test]
    fn andrews_f_needs_q_in_argument() {
        assert!(andrews_f(Monomial::new(false, 1, 0), Base::Q, 4).is_err());
    }
}
