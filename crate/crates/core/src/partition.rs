//! Partitions, their statistics, the partition classes that appear in the
//! mock theta identities, and exhaustive enumeration of those classes.
//!
//! A partition is stored as a weakly decreasing list of positive parts plus a
//! flag for a single zero part. The zero part only ever shows up for members
//! of `D0`, the distinct-parts class where one part of size `0` is allowed.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A part size that may be missing, ordered above every actual part.
///
/// Smallest odd/even part and the repeated-part statistics are `Absent` when no
/// qualifying part exists; every comparison then treats them as `+∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MaybePart {
    Part(u32),
    Absent,
}

impl MaybePart {
    pub fn part(self) -> Option<u32> {
        match self {
            MaybePart::Part(p) => Some(p),
            MaybePart::Absent => None,
        }
    }

    pub fn is_absent(self) -> bool {
        self == MaybePart::Absent
    }

    /// `self + k`, absorbing into `Absent`.
    pub fn plus(self, k: u32) -> MaybePart {
        match self {
            MaybePart::Part(p) => MaybePart::Part(p + k),
            MaybePart::Absent => MaybePart::Absent,
        }
    }
}

impl From<Option<u32>> for MaybePart {
    fn from(v: Option<u32>) -> Self {
        v.map_or(MaybePart::Absent, MaybePart::Part)
    }
}

impl PartialEq<u32> for MaybePart {
    fn eq(&self, other: &u32) -> bool {
        *self == MaybePart::Part(*other)
    }
}

impl PartialOrd<u32> for MaybePart {
    fn partial_cmp(&self, other: &u32) -> Option<Ordering> {
        Some(self.cmp(&MaybePart::Part(*other)))
    }
}

impl fmt::Display for MaybePart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MaybePart::Part(p) => write!(f, "{p}"),
            MaybePart::Absent => f.write_str("∞"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
    has_zero: bool,
}

impl Partition {
    /// Builds a partition from weakly decreasing positive parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?}: parts must be positive (use with_zero for a zero part)"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?}: parts must be weakly decreasing"
            )));
        }
        Ok(Partition { parts, has_zero: false })
    }

    /// Same as [`Partition::new`] with the zero part present.
    pub fn with_zero(parts: Vec<u32>) -> Result<Self> {
        let mut p = Partition::new(parts)?;
        p.has_zero = true;
        Ok(p)
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>, has_zero: bool) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition { parts, has_zero }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn has_zero(&self) -> bool {
        self.has_zero
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of positive parts, `l(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Number of parts including the zero part. This is the exponent of α a
    /// `D0` member picks up from `(-α;q)_∞`.
    pub fn len_with_zero(&self) -> usize {
        self.parts.len() + usize::from(self.has_zero)
    }

    /// True when there are no positive parts and no zero part.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty() && !self.has_zero
    }

    /// Largest part, `0` for the empty partition.
    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn contains_part(&self, x: u32) -> bool {
        if x == 0 {
            self.has_zero
        } else {
            self.parts.binary_search_by(|p| x.cmp(p)).is_ok()
        }
    }

    /// Adds one part of size `x` (a zero part when `x == 0`).
    pub fn with_part(&self, x: u32) -> Partition {
        let mut out = self.clone();
        if x == 0 {
            out.has_zero = true;
        } else {
            let at = out.parts.partition_point(|&p| p >= x);
            out.parts.insert(at, x);
        }
        out
    }

    /// Removes one copy of `x`; `None` when `x` is not a part.
    pub fn without_part(&self, x: u32) -> Option<Partition> {
        let mut out = self.clone();
        if x == 0 {
            if !out.has_zero {
                return None;
            }
            out.has_zero = false;
        } else {
            let at = out.parts.iter().position(|&p| p == x)?;
            out.parts.remove(at);
        }
        Some(out)
    }

    pub fn without_zero(&self) -> Partition {
        Partition { parts: self.parts.clone(), has_zero: false }
    }

    /// Adds `delta` to each of the first `k` parts. Callers guarantee the
    /// result stays weakly decreasing and positive.
    pub(crate) fn shift_leading(&self, k: usize, delta: i64) -> Partition {
        let mut parts = self.parts.clone();
        for p in parts.iter_mut().take(k) {
            *p = u32::try_from(i64::from(*p) + delta).expect("part stays nonnegative");
        }
        parts.retain(|&p| p > 0);
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        Partition { parts, has_zero: self.has_zero }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("(")?;
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        if self.has_zero {
            if !first {
                f.write_str(",")?;
            }
            f.write_str("0")?;
        }
        f.write_str(")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses comma-separated decreasing parts; a trailing `0` is the zero part.
/// The empty string, `∅` and `()` all denote the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if body.is_empty() || body == "∅" {
            return Ok(Partition::empty());
        }
        let mut parts = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("part `{}`: {e}", t.trim())))
            })
            .collect::<Result<Vec<u32>>>()?;
        let has_zero = parts.last() == Some(&0);
        if has_zero {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "`{s}`: only a single trailing zero part is allowed"
            )));
        }
        let mut p = Partition::new(parts)?;
        p.has_zero = has_zero;
        Ok(p)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    pub fn size(&self) -> u32 {
        self.first.size() + self.second.size()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

impl Serialize for Bipartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PartitionClass {
    /// All partitions.
    P,
    /// Distinct positive parts.
    D,
    /// Distinct parts, one zero part allowed.
    D0,
    /// Distinct odd parts.
    DO,
    /// Odd parts without gaps.
    OC,
    /// Distinct parts, smallest part odd.
    Pdo,
    /// Distinct parts, smallest part even.
    Pde,
}

impl PartitionClass {
    pub const ALL: [PartitionClass; 7] = [
        PartitionClass::P,
        PartitionClass::D,
        PartitionClass::D0,
        PartitionClass::DO,
        PartitionClass::OC,
        PartitionClass::Pdo,
        PartitionClass::Pde,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            PartitionClass::P => "P",
            PartitionClass::D => "D",
            PartitionClass::D0 => "D0",
            PartitionClass::DO => "DO",
            PartitionClass::OC => "OC",
            PartitionClass::Pdo => "Pdo",
            PartitionClass::Pde => "Pde",
        }
    }
}

impl fmt::Display for PartitionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for PartitionClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PartitionClass::ALL
            .into_iter()
            .find(|c| c.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unknown { kind: "partition class", name: s.to_string() })
    }
}

/// Dyson's rank, largest part minus number of parts. The empty partition has
/// rank zero.
pub fn rank(p: &Partition) -> Result<i64> {
    if p.has_zero() {
        return Err(Error::ZeroPartRank);
    }
    Ok(i64::from(p.largest()) - p.len() as i64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Stats {
    /// Number of positive parts.
    pub l: usize,
    pub largest: u32,
    /// Multiplicity of the largest part.
    pub m: usize,
    /// Smallest part; the zero part counts.
    pub s: MaybePart,
    pub s_o: MaybePart,
    /// Smallest even part; the zero part counts as an even part of size 0.
    pub s_e: MaybePart,
    /// Length of the leading run `λ₁, λ₁-2, λ₁-4, …` of odd parts.
    pub c: usize,
    /// Largest part occurring at least twice.
    pub r_p: MaybePart,
    /// Smallest part occurring at least twice. This is the repeated part the
    /// `Psi` involution exchanges with `μ`.
    pub r_min: MaybePart,
}

impl Serialize for MaybePart {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            MaybePart::Part(p) => s.serialize_u32(*p),
            MaybePart::Absent => s.serialize_none(),
        }
    }
}

pub fn stats(p: &Partition) -> Stats {
    let parts = p.parts();
    let largest = p.largest();
    let m = parts.iter().take_while(|&&x| x == largest).count();
    let smallest_odd = parts.iter().rev().copied().find(|x| x % 2 == 1);
    let smallest_even = if p.has_zero() {
        Some(0)
    } else {
        parts.iter().rev().copied().find(|x| x % 2 == 0)
    };
    let s = if p.has_zero() { Some(0) } else { parts.last().copied() };
    let c = if largest % 2 == 1 {
        parts
            .iter()
            .enumerate()
            .take_while(|&(i, &x)| i64::from(x) == i64::from(largest) - 2 * i as i64)
            .count()
    } else {
        0
    };
    let repeated = || parts.windows(2).filter(|w| w[0] == w[1]).map(|w| w[0]);
    Stats {
        l: parts.len(),
        largest,
        m,
        s: s.into(),
        s_o: smallest_odd.into(),
        s_e: smallest_even.into(),
        c,
        r_p: repeated().next().into(),
        r_min: repeated().next_back().into(),
    }
}

/// The staircase `Q_k = (2k-1, 2k-3, …, 1)`, a partition of `k²`.
pub fn staircase(k: u32) -> Partition {
    Partition::from_parts_unchecked((1..=k).rev().map(|i| 2 * i - 1).collect(), false)
}

/// `Some(k)` when `p` is the staircase `Q_k` (no zero part).
pub fn staircase_index(p: &Partition) -> Option<u32> {
    if p.has_zero() {
        return None;
    }
    let k = p.len() as u32;
    p.parts()
        .iter()
        .zip((1..=k).rev())
        .all(|(&x, i)| x == 2 * i - 1)
        .then_some(k)
}

fn strictly_decreasing(parts: &[u32]) -> bool {
    parts.windows(2).all(|w| w[0] > w[1])
}

pub fn is_member(p: &Partition, cls: PartitionClass) -> bool {
    if p.has_zero() && cls != PartitionClass::D0 {
        return false;
    }
    let parts = p.parts();
    match cls {
        PartitionClass::P => true,
        PartitionClass::D | PartitionClass::D0 => strictly_decreasing(parts),
        PartitionClass::DO => strictly_decreasing(parts) && parts.iter().all(|x| x % 2 == 1),
        PartitionClass::OC => {
            parts.iter().all(|x| x % 2 == 1)
                && parts.windows(2).all(|w| w[0] - w[1] <= 2)
                && parts.last().is_none_or(|&x| x == 1)
        }
        PartitionClass::Pdo => strictly_decreasing(parts) && parts.last().is_some_and(|x| x % 2 == 1),
        PartitionClass::Pde => strictly_decreasing(parts) && parts.last().is_some_and(|x| x % 2 == 0),
    }
}

/// Walks every member of `cls` with size at most `max`, parents before
/// children and larger next parts first. For partitions of one fixed size
/// this is decreasing lexicographic order. `D0` is walked as `D`; callers
/// double it.
fn walk(cls: PartitionClass, max: u32, visit: &mut dyn FnMut(&[u32], u32)) {
    fn accept(cls: PartitionClass, parts: &[u32]) -> bool {
        match cls {
            PartitionClass::Pdo => parts.last().is_some_and(|x| x % 2 == 1),
            PartitionClass::Pde => parts.last().is_some_and(|x| x % 2 == 0),
            PartitionClass::OC => parts.last().is_none_or(|&x| x == 1),
            _ => true,
        }
    }

    fn rec(
        cls: PartitionClass,
        max: u32,
        prefix: &mut Vec<u32>,
        size: u32,
        visit: &mut dyn FnMut(&[u32], u32),
    ) {
        if accept(cls, prefix) {
            visit(prefix, size);
        }
        let room = max - size;
        let last = prefix.last().copied();
        let mut push = |x: u32, prefix: &mut Vec<u32>| {
            prefix.push(x);
            rec(cls, max, prefix, size + x, visit);
            prefix.pop();
        };
        match cls {
            PartitionClass::P => {
                let hi = last.unwrap_or(u32::MAX).min(room);
                for x in (1..=hi).rev() {
                    push(x, prefix);
                }
            }
            PartitionClass::D | PartitionClass::D0 | PartitionClass::Pdo | PartitionClass::Pde => {
                let hi = last.map_or(room, |l| (l - 1).min(room));
                for x in (1..=hi).rev() {
                    push(x, prefix);
                }
            }
            PartitionClass::DO => {
                let hi = last.map_or(room, |l| l.saturating_sub(2).min(room));
                for x in (1..=hi).rev().filter(|x| x % 2 == 1) {
                    push(x, prefix);
                }
            }
            PartitionClass::OC => {
                // After a part x the parts x-2, …, 1 are still owed, ((x-1)/2)² in all.
                let fits = |x: u32| x + ((x - 1) / 2).pow(2) <= room;
                match last {
                    None => {
                        for x in (1..=room).rev().filter(|x| x % 2 == 1 && fits(*x)) {
                            push(x, prefix);
                        }
                    }
                    Some(l) => {
                        if fits(l) {
                            push(l, prefix);
                        }
                        if l >= 3 && fits(l - 2) {
                            push(l - 2, prefix);
                        }
                    }
                }
            },
        }
    }

    let mut prefix = Vec::new();
    rec(cls, max, &mut prefix, 0, visit);
}

/// Calls `visit` for every member of `cls` of size at most `max`, in walk
/// order (`D0` members come as a zero-free twin followed by its zero-part
/// variant).
pub fn for_each_up_to(cls: PartitionClass, max: u32, mut visit: impl FnMut(&Partition)) {
    walk(cls, max, &mut |parts, _| {
        let p = Partition::from_parts_unchecked(parts.to_vec(), false);
        if cls == PartitionClass::D0 {
            let z = Partition::from_parts_unchecked(parts.to_vec(), true);
            visit(&p);
            visit(&z);
        } else {
            visit(&p);
        }
    });
}

/// All members of `cls` of size `n`, in decreasing lexicographic order.
pub fn enumerate(cls: PartitionClass, n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    walk(cls, n, &mut |parts, size| {
        if size == n {
            out.push(Partition::from_parts_unchecked(parts.to_vec(), false));
            if cls == PartitionClass::D0 {
                out.push(Partition::from_parts_unchecked(parts.to_vec(), true));
            }
        }
    });
    out
}

/// Number of members of `cls` of each size `0..=max`.
pub fn counts_up_to(cls: PartitionClass, max: u32) -> Vec<u64> {
    let mut counts = vec![0u64; max as usize + 1];
    let factor = if cls == PartitionClass::D0 { 2 } else { 1 };
    walk(cls, max, &mut |_, size| counts[size as usize] += factor);
    counts
}

/// Members of `cls` counted by size and number of positive parts:
/// `table[n][l]`.
pub fn length_census(cls: PartitionClass, max: u32) -> Vec<Vec<u64>> {
    let mut table = vec![Vec::new(); max as usize + 1];
    walk(cls, max, &mut |parts, size| {
        let row = &mut table[size as usize];
        if row.len() <= parts.len() {
            row.resize(parts.len() + 1, 0);
        }
        row[parts.len()] += 1;
    });
    if cls == PartitionClass::D0 {
        for v in table.iter_mut().flatten() {
            *v *= 2;
        }
    }
    table
}

/// Every `(λ, μ)` with `λ ∈ first`, `μ ∈ second` and `|λ| + |μ| = n`, ordered
/// by `|λ|` descending and then by the per-class orders.
pub fn enumerate_bipartitions(
    first: PartitionClass,
    second: PartitionClass,
    n: u32,
) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        let lams = enumerate(first, a);
        if lams.is_empty() {
            continue;
        }
        let mus = enumerate(second, n - a);
        for lam in &lams {
            for mu in &mus {
                out.push(Bipartition::new(lam.clone(), mu.clone()));
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct LengthParityCount {
    pub even_count: u64,
    pub odd_count: u64,
}

/// `p^e_do(n)` and `p^o_do(n)`: partitions of `n` into distinct parts with odd
/// smallest part, split by the parity of the number of parts.
pub fn count_pdo_by_length_parity(n: u32) -> LengthParityCount {
    pdo_length_parity_up_to(n)[n as usize]
}

pub fn pdo_length_parity_up_to(max: u32) -> Vec<LengthParityCount> {
    let mut out = vec![LengthParityCount::default(); max as usize + 1];
    walk(PartitionClass::Pdo, max, &mut |parts, size| {
        let slot = &mut out[size as usize];
        if parts.len() % 2 == 0 {
            slot.even_count += 1;
        } else {
            slot.odd_count += 1;
        }
    });
    out
}

/// Signed rank counts of all partitions, grouped by largest part:
/// `table[n][a] = Σ (-1)^{a - l(λ)}` over `λ ⊢ n` with `λ₁ = a`.
///
/// Counted through the box decomposition instead of a walk: a partition with
/// largest part `a` and `l` parts is its first row and column (a hook of
/// `a + l - 1` cells) plus an arbitrary partition inside an `(l-1) × (a-1)`
/// box. Box counts come from `G(m; j, b) = G(m; j-1, b) + G(m-j; j, b-1)`.
pub fn signed_rank_by_largest(max: u32) -> Vec<Vec<i128>> {
    let n = max as usize;
    let mut table = vec![vec![0i128; n + 1]; n + 1];
    table[0][0] = 1;
    // layer[b][m] = partitions of m with at most j parts, each at most b.
    let mut layer: Vec<Vec<i128>> = (0..=n)
        .map(|_| {
            let mut row = vec![0; n + 1];
            row[0] = 1;
            row
        })
        .collect();
    for j in 0..n {
        if j > 0 {
            let mut next = vec![vec![0i128; n + 1]; n + 1];
            for b in 0..=n {
                for m in 0..=n {
                    let mut v = layer[b][m];
                    if b > 0 && m >= j {
                        v += next[b - 1][m - j];
                    }
                    next[b][m] = v;
                }
            }
            layer = next;
        }
        // l = j + 1 parts, largest a = b + 1.
        let l = j + 1;
        for a in 1..=n {
            let hook = a + l - 1;
            if hook > n {
                break;
            }
            let sign = if (a + l) % 2 == 0 { 1 } else { -1 };
            for m in 0..=(n - hook) {
                table[hook + m][a] += sign * layer[a - 1][m];
            }
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&p("3")).unwrap(), 2);
        assert_eq!(rank(&Partition::empty()).unwrap(), 0);
        assert_eq!(rank(&p("2,2")).unwrap(), 0);
        assert_eq!(rank(&p("3,0")), Err(Error::ZeroPartRank));
    }

    #[test]
    fn stats_examples() {
        assert_eq!(stats(&p("11,9,7,3")).c, 3);
        let z = stats(&p("3,0"));
        assert_eq!((z.s_e, z.s_o, z.s), (MaybePart::Part(0), MaybePart::Part(3), MaybePart::Part(0)));
        let t = stats(&p("5,2"));
        assert_eq!((t.s_o, t.s_e, t.r_p), (MaybePart::Part(5), MaybePart::Part(2), MaybePart::Absent));
        let r = stats(&p("5,5,3,3,1"));
        assert_eq!((r.r_p, r.r_min, r.m), (MaybePart::Part(5), MaybePart::Part(3), 2));
        let e = stats(&Partition::empty());
        assert_eq!((e.l, e.largest, e.s, e.c), (0, 0, MaybePart::Absent, 0));
        assert_eq!(stats(&p("4,3,1")).c, 0);
    }

    #[test]
    fn staircases() {
        assert_eq!(staircase(3), p("5,3,1"));
        assert_eq!(staircase(0), Partition::empty());
        assert_eq!(staircase(5).size(), 25);
        assert_eq!(staircase_index(&p("9,7,5,3,1")), Some(5));
        assert_eq!(staircase_index(&p("7,5,3")), None);
        assert_eq!(staircase_index(&Partition::empty()), Some(0));
    }

    #[test]
    fn membership_examples() {
        assert!(is_member(&p("3,1"), PartitionClass::Pdo));
        assert!(is_member(&p("1,1,1"), PartitionClass::OC));
        assert!(!is_member(&p("5,1"), PartitionClass::OC));
        assert!(is_member(&p("3,1,0"), PartitionClass::D0));
        assert!(!is_member(&p("3,1,0"), PartitionClass::D));
        assert!(!is_member(&Partition::empty(), PartitionClass::Pdo));
        assert!(is_member(&Partition::empty(), PartitionClass::OC));
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate(PartitionClass::Pdo, 4), vec![p("3,1")]);
        assert_eq!(enumerate(PartitionClass::Pde, 7), vec![p("5,2")]);
        assert_eq!(enumerate(PartitionClass::D, 0), vec![Partition::empty()]);
        assert_eq!(enumerate(PartitionClass::D0, 2), vec![p("2"), p("2,0")]);
        assert_eq!(enumerate(PartitionClass::OC, 4), vec![p("3,1"), p("1,1,1,1")]);
        assert_eq!(
            enumerate(PartitionClass::D, 7),
            vec![p("7"), p("6,1"), p("5,2"), p("4,3"), p("4,2,1")]
        );
    }

    #[test]
    fn enumeration_is_complete_against_filtered_p() {
        for n in 0..=16 {
            let all = enumerate(PartitionClass::P, n);
            for cls in PartitionClass::ALL {
                let got = enumerate(cls, n);
                assert!(got.iter().all(|x| is_member(x, cls) && x.size() == n));
                let mut want: Vec<Partition> =
                    all.iter().filter(|x| is_member(x, cls)).cloned().collect();
                if cls == PartitionClass::D0 {
                    want = want
                        .into_iter()
                        .flat_map(|x| {
                            let z = x.with_part(0);
                            [x, z]
                        })
                        .collect();
                }
                assert_eq!(got, want, "{cls} at {n}");
                assert_eq!(counts_up_to(cls, n)[n as usize], got.len() as u64);
            }
        }
    }

    #[test]
    fn bipartition_census_examples() {
        let pd = enumerate_bipartitions(PartitionClass::P, PartitionClass::D, 4);
        assert_eq!(pd.len(), 14);
        let even = pd.iter().filter(|b| rank(&b.first).unwrap() % 2 == 0).count();
        assert_eq!((even, pd.len() - even), (8, 6));

        let dod = enumerate_bipartitions(PartitionClass::DO, PartitionClass::D, 7);
        let mod4 = |r: u32| {
            dod.iter().filter(|b| !b.first.is_empty() && b.first.largest() % 4 == r).count()
        };
        assert_eq!((mod4(1), mod4(3)), (6, 5));

        // The printed census for OC × D0 at n = 4 omits (Q_2, ∅) = ((3,1), ∅);
        // the full domain has six of each parity.
        let ocd = enumerate_bipartitions(PartitionClass::OC, PartitionClass::D0, 4);
        let nonempty: Vec<_> = ocd.iter().filter(|b| !b.first.is_empty()).collect();
        let odd = nonempty.iter().filter(|b| b.first.len() % 2 == 1).count();
        assert_eq!((odd, nonempty.len() - odd), (6, 6));
        let without_staircase = nonempty
            .iter()
            .filter(|b| b.first.len() % 2 == 0 && !(b.second.is_empty() && staircase_index(&b.first).is_some()))
            .count();
        assert_eq!(without_staircase, 5);
    }

    #[test]
    fn pdo_length_parity_examples() {
        assert_eq!(count_pdo_by_length_parity(4), LengthParityCount { even_count: 1, odd_count: 0 });
        assert_eq!(count_pdo_by_length_parity(1), LengthParityCount { even_count: 0, odd_count: 1 });
        assert_eq!(count_pdo_by_length_parity(2), LengthParityCount { even_count: 0, odd_count: 0 });
        for n in 1..=20 {
            let c = count_pdo_by_length_parity(n);
            assert_eq!(c.even_count + c.odd_count, enumerate(PartitionClass::Pdo, n).len() as u64);
        }
    }

    #[test]
    fn d0_doubles_d() {
        for n in 1..=20 {
            assert_eq!(
                enumerate(PartitionClass::D0, n).len(),
                2 * enumerate(PartitionClass::D, n).len()
            );
        }
    }

    #[test]
    fn staircase_is_unique_do_and_oc_member() {
        for k in 0..=8u32 {
            let both: Vec<_> = enumerate(PartitionClass::DO, k * k)
                .into_iter()
                .filter(|x| is_member(x, PartitionClass::OC))
                .collect();
            assert_eq!(both, vec![staircase(k)]);
        }
    }

    #[test]
    fn stats_consistency() {
        for n in 0..=14 {
            for x in enumerate(PartitionClass::D0, n).into_iter().chain(enumerate(PartitionClass::P, n)) {
                let st = stats(&x);
                assert_eq!(st.s, st.s_o.min(st.s_e), "{x}");
                if is_member(&x, PartitionClass::DO) && !x.is_empty() {
                    assert!(st.c >= 1);
                }
            }
        }
    }

    #[test]
    fn signed_rank_table_matches_walk() {
        let table = signed_rank_by_largest(22);
        for n in 0..=22u32 {
            let mut want = vec![0i128; 23];
            for x in enumerate(PartitionClass::P, n) {
                let r = rank(&x).unwrap();
                want[x.largest() as usize] += if r % 2 == 0 { 1 } else { -1 };
            }
            assert_eq!(table[n as usize], want, "n = {n}");
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("3,0").to_string(), "(3,0)");
        assert_eq!(p("0").to_string(), "(0)");
        assert_eq!(p("").to_string(), "∅");
        assert_eq!(p("(5,2)").parts(), &[5, 2]);
        assert!("1,3".parse::<Partition>().is_err());
        assert!("3,0,0".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
        let b = Bipartition::new(p("1"), p("3,0"));
        assert_eq!(b.to_string(), "((1),(3,0))");
    }
}
