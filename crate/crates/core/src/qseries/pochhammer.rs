//! q-Pochhammer products `(a;b)_n = (1-a)(1-ab)⋯(1-ab^{n-1})` as truncated
//! series, where `a` and `b` are signed monomials `±α^i q^j`.

use std::fmt;
use std::str::FromStr;

use super::series::{BiSeries, Coefficient, PowerSeries, Series};
use crate::error::{Error, Result};

/// One factor `1 + sign·α^alpha·q^power`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Factor {
    pub negative: bool,
    pub alpha: u32,
    pub power: u32,
}

impl Factor {
    pub fn plus(alpha: u32, power: u32) -> Self {
        Factor { negative: false, alpha, power }
    }

    pub fn minus(alpha: u32, power: u32) -> Self {
        Factor { negative: true, alpha, power }
    }
}

/// A signed monomial `±α^alpha q^q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Monomial {
    pub negative: bool,
    pub alpha: u32,
    pub q: u32,
}

impl Monomial {
    pub const fn new(negative: bool, alpha: u32, q: u32) -> Self {
        Monomial { negative, alpha, q }
    }

    /// `q^k`.
    pub const fn q(k: u32) -> Self {
        Monomial::new(false, 0, k)
    }

    pub const fn neg(self) -> Self {
        Monomial { negative: !self.negative, ..self }
    }

    pub const fn times(self, other: Monomial) -> Monomial {
        Monomial {
            negative: self.negative != other.negative,
            alpha: self.alpha + other.alpha,
            q: self.q + other.q,
        }
    }

    pub fn pow(self, k: u32) -> Monomial {
        Monomial { negative: self.negative && k % 2 == 1, alpha: self.alpha * k, q: self.q * k }
    }

    /// The series `±α^alpha q^q` at the given order.
    pub fn series<C: Coefficient>(self, order: usize) -> PowerSeries<C> {
        let mut out = PowerSeries::<C>::zero(order);
        if self.q as usize <= order {
            out.coeff_mut(self.q as usize).add_alpha_shifted(&C::one(), self.alpha, self.negative);
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Length {
    Finite(u32),
    Infinite,
}

/// `(a; base)_length`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QPochhammer {
    pub a: Monomial,
    pub base: Monomial,
    pub length: Length,
}

impl QPochhammer {
    pub fn new(a: Monomial, base: Monomial, length: Length) -> Result<Self> {
        if base.q == 0 && length == Length::Infinite {
            return Err(Error::Parse("an infinite product needs a base with a positive power of q".into()));
        }
        Ok(QPochhammer { a, base, length })
    }

    pub fn finite(a: Monomial, base: Monomial, n: u32) -> Self {
        QPochhammer { a, base, length: Length::Finite(n) }
    }

    pub fn infinite(a: Monomial, base: Monomial) -> Self {
        assert!(base.q > 0, "infinite product needs a q-power in the base");
        QPochhammer { a, base, length: Length::Infinite }
    }

    /// The factors `1 - a·base^m` that are not `≡ 1` modulo `q^(order+1)`.
    pub fn factors(&self, order: usize) -> Vec<Factor> {
        let mut out = Vec::new();
        let mut m = 0u32;
        loop {
            if let Length::Finite(n) = self.length {
                if m >= n {
                    break;
                }
            }
            let term = self.a.times(self.base.pow(m));
            // q-powers never decrease along the product.
            if term.q as usize > order {
                break;
            }
            out.push(Factor { negative: !term.negative, alpha: term.alpha, power: term.q });
            m += 1;
        }
        out
    }

    pub fn uses_alpha(&self) -> bool {
        self.a.alpha > 0 || self.base.alpha > 0
    }

    pub fn series(&self, order: usize) -> Result<Series> {
        if self.uses_alpha() {
            return Err(Error::NotUnivariate);
        }
        Ok(product(&self.factors(order), order))
    }

    pub fn biseries(&self, order: usize) -> BiSeries {
        product(&self.factors(order), order)
    }
}

/// Exact truncated product of `1 ± α^a q^b` factors.
pub fn product<C: Coefficient>(factors: &[Factor], order: usize) -> PowerSeries<C> {
    let mut s = PowerSeries::<C>::one(order);
    for f in factors {
        s.mul_factor(f.negative, f.alpha, f.power as usize);
    }
    s
}

/// `(q;q)_∞`.
pub fn q_q_inf(order: usize) -> Series {
    product(&QPochhammer::infinite(Monomial::q(1), Monomial::q(1)).factors(order), order)
}

/// `(-q;q)_∞`.
pub fn neg_q_q_inf(order: usize) -> Series {
    product(&QPochhammer::infinite(Monomial::q(1).neg(), Monomial::q(1)).factors(order), order)
}

/// `(-q;q)_n`.
pub fn neg_q_q(n: u32, order: usize) -> Series {
    product(&QPochhammer::finite(Monomial::q(1).neg(), Monomial::q(1), n).factors(order), order)
}

/// `(-q²;q²)_n`.
pub fn neg_q2_q2(n: u32, order: usize) -> Series {
    product(&QPochhammer::finite(Monomial::q(2).neg(), Monomial::q(2), n).factors(order), order)
}

/// `(q;q²)_n`.
pub fn q_q2(n: u32, order: usize) -> Series {
    product(&QPochhammer::finite(Monomial::q(1), Monomial::q(2), n).factors(order), order)
}

const ALPHA_Q: Monomial = Monomial::new(false, 1, 1);
const ALPHA: Monomial = Monomial::new(false, 1, 0);

/// `(-αq;q)_∞`.
pub fn neg_alpha_q_q_inf(order: usize) -> BiSeries {
    QPochhammer::infinite(ALPHA_Q.neg(), Monomial::q(1)).biseries(order)
}

/// `(-α;q)_∞`.
pub fn neg_alpha_q_inf(order: usize) -> BiSeries {
    QPochhammer::infinite(ALPHA.neg(), Monomial::q(1)).biseries(order)
}

/// `(-αq²;q²)_n`.
pub fn neg_alpha_q2_q2(n: u32, order: usize) -> BiSeries {
    QPochhammer::finite(Monomial::new(true, 1, 2), Monomial::q(2), n).biseries(order)
}

/// `(-αq;q²)_n`.
pub fn neg_alpha_q_q2(n: u32, order: usize) -> BiSeries {
    QPochhammer::finite(ALPHA_Q.neg(), Monomial::q(2), n).biseries(order)
}

/// `(α;q²)_n`.
pub fn alpha_q2(n: u32, order: usize) -> BiSeries {
    QPochhammer::finite(ALPHA, Monomial::q(2), n).biseries(order)
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        if self.alpha == 0 && self.q == 0 {
            return f.write_str("1");
        }
        match self.alpha {
            0 => {}
            1 => f.write_str("α")?,
            a => write!(f, "α^{a}")?,
        }
        match self.q {
            0 => {}
            1 => f.write_str("q")?,
            k => write!(f, "q^{k}")?,
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// `[-](1 | a[^i] | α[^i] | q[^j] | a[^i]q[^j] …)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("monomial `{s}`"));
        let mut rest = s.trim();
        let mut m = Monomial::new(false, 0, 0);
        if let Some(r) = rest.strip_prefix('-') {
            m.negative = true;
            rest = r;
        }
        if rest == "1" {
            return Ok(m);
        }
        if rest.is_empty() {
            return Err(bad());
        }
        let mut chars = rest.chars().peekable();
        while let Some(c) = chars.next() {
            let mut exp = 1u32;
            if chars.peek() == Some(&'^') {
                chars.next();
                let mut digits = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                exp = digits.parse().map_err(|_| bad())?;
            }
            match c {
                'a' | 'α' => m.alpha += exp,
                'q' => m.q += exp,
                _ => return Err(bad()),
            }
        }
        Ok(m)
    }
}

impl FromStr for QPochhammer {
    type Err = Error;

    /// `(a;b)_n` or `(a;b)_inf`, e.g. `(-aq;q)_inf` or `(q;q^2)_5`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("pochhammer `{s}`: expected (a;b)_n or (a;b)_inf"));
        let s = s.trim();
        let (body, len) = s.rsplit_once(")_").ok_or_else(bad)?;
        let body = body.strip_prefix('(').ok_or_else(bad)?;
        let (a, b) = body.split_once(';').ok_or_else(bad)?;
        let length = match len.trim() {
            "inf" | "∞" => Length::Infinite,
            n => Length::Finite(n.parse().map_err(|_| bad())?),
        };
        QPochhammer::new(a.parse()?, b.parse()?, length)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::poly::Poly;
    use num_bigint::BigInt;

    fn uni(c: &[i64]) -> Series {
        Series::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn euler_product_low_order() {
        assert_eq!(q_q_inf(7), uni(&[1, -1, -1, 0, 0, 1, 0, 1]));
    }

    #[test]
    fn finite_products() {
        assert_eq!(neg_q_q(2, 4), uni(&[1, 1, 1, 1, 0]));
        assert_eq!(neg_q2_q2(1, 3), uni(&[1, 0, 1, 0]));
        assert_eq!(q_q2(2, 4), uni(&[1, -1, 0, -1, 1]));
    }

    #[test]
    fn distinct_parts_weighted_by_length() {
        // q^3: (3) and (2,1).
        let s = neg_alpha_q_q_inf(3);
        assert_eq!(s.coeff(3), &Poly::from_ints(&[0, 1, 1]));
        let z = neg_alpha_q_inf(2);
        assert_eq!(z.coeff(0), &Poly::from_ints(&[1, 1]));
        assert_eq!(z.coeff(2), &Poly::from_ints(&[0, 1, 1]));
        assert_eq!(alpha_q2(1, 1).coeff(0), &Poly::from_ints(&[1, -1]));
    }

    #[test]
    fn parse_and_build() {
        let p: QPochhammer = "(-aq;q)_inf".parse().unwrap();
        assert_eq!(p.biseries(12), neg_alpha_q_q_inf(12));
        let p: QPochhammer = "(q;q^2)_3".parse().unwrap();
        assert_eq!(p.series(9).unwrap(), q_q2(3, 9));
        let twisted: QPochhammer = "(q;-q)_2".parse().unwrap();
        // (1 - q)(1 + q^2)
        assert_eq!(twisted.series(3).unwrap(), uni(&[1, -1, 1, -1]));
        assert!("(-aq;q)_inf".parse::<QPochhammer>().unwrap().series(3).is_err());
        assert!("(q;1)_inf".parse::<QPochhammer>().is_err());
        assert!("q;q".parse::<QPochhammer>().is_err());
        assert_eq!("-α^2q^3".parse::<Monomial>().unwrap(), Monomial::new(true, 2, 3));
    }
}
