use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{GammaError, Result};

/// A positive integer modulus `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u32);

impl Modulus {
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 {
            Err(GammaError::ZeroModulus)
        } else {
            Ok(Modulus(m))
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn divides(self, n: u32) -> bool {
        n.is_multiple_of(self.0)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn parse_parts(what: &'static str, s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let part: u32 = tok.parse().map_err(|_| GammaError::Parse {
                what,
                input: s.to_string(),
                reason: format!("{tok:?} is not a non-negative integer"),
            })?;
            if part == 0 {
                return Err(GammaError::Parse {
                    what,
                    input: s.to_string(),
                    reason: "parts must be positive".into(),
                });
            }
            Ok(part)
        })
        .collect()
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// Compares part sequences so that lexicographically larger sequences come first.
pub fn lex_descending(a: &[u32], b: &[u32]) -> Ordering {
    b.cmp(a)
}

/// A weakly decreasing sequence of positive integers. The empty partition is `∅`.
///
/// Zero parts are never stored; every constructor canonicalizes to descending order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts `parts` into descending order; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(GammaError::Parse {
                what: "partition",
                input: format!("{parts:?}"),
                reason: "parts must be positive".into(),
            });
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    /// Builds a partition from arbitrary non-negative parts, dropping zeros.
    pub fn from_nonneg(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`, or `∅` when `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// `(1^r)`.
    pub fn column(r: usize) -> Self {
        Partition(vec![1; r])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    /// `(value, count)` pairs in descending order of value.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// The multiset union `self ∪ other`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] >= other.0[j] {
                parts.push(self.0[i]);
                i += 1;
            } else {
                parts.push(other.0[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.0[i..]);
        parts.extend_from_slice(&other.0[j..]);
        Partition(parts)
    }

    /// The multiset difference `self \ other`, if `other` is contained in `self`.
    pub fn difference(&self, other: &Partition) -> Option<Partition> {
        let mut rest = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &p in &self.0 {
            if j < other.0.len() && other.0[j] == p {
                j += 1;
            } else {
                rest.push(p);
            }
        }
        (j == other.0.len()).then_some(Partition(rest))
    }

    pub fn all_divisible_by(&self, m: Modulus) -> bool {
        self.0.iter().all(|&p| m.divides(p))
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    /// Sum of the first `l` parts, treating missing parts as 0.
    pub fn prefix_sum(&self, l: usize) -> u32 {
        self.0.iter().take(l).sum()
    }
}

impl FromStr for Partition {
    type Err = GammaError;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts("partition", s)?)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

/// An ordered finite sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(GammaError::Parse {
                what: "composition",
                input: format!("{parts:?}"),
                reason: "parts must be positive".into(),
            });
        }
        Ok(Composition(parts))
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(!parts.contains(&0));
        Composition(parts)
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    /// The weakly decreasing rearrangement of the parts.
    pub fn type_of(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `self # other`.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// `(m·c₁, …, m·c_s)`.
    pub fn scale(&self, m: Modulus) -> Composition {
        Composition(self.0.iter().map(|&p| p * m.get()).collect())
    }

    /// Running sums `c₁, c₁+c₂, …`.
    pub fn prefix_sums(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().scan(0u32, |acc, &p| {
            *acc += p;
            Some(*acc)
        })
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition(p.0)
    }
}

impl FromStr for Composition {
    type Err = GammaError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Composition(parse_parts("composition", s)?))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

/// `type_of(δ # ξ)`.
pub fn union(delta: &Composition, xi: &Composition) -> Partition {
    delta.concat(xi).type_of()
}

/// A pair `(λ | mμ)`; the second partition is stored literally with every part divisible by `m`.
///
/// Also serves as the index of the basis monomial `h_λ e_{mμ}`. Ordering is the canonical
/// display order: total size ascending, then `λ` and `mμ` lexicographically descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairPartition {
    first: Partition,
    second: Partition,
    modulus: Modulus,
}

impl PairPartition {
    pub fn new(first: Partition, second: Partition, modulus: Modulus) -> Result<Self> {
        if let Some(&bad) = second.parts().iter().find(|&&p| !modulus.divides(p)) {
            return Err(GammaError::NotDivisible {
                part: bad,
                modulus: modulus.get(),
            });
        }
        Ok(PairPartition {
            first,
            second,
            modulus,
        })
    }

    pub(crate) fn new_unchecked(first: Partition, second: Partition, modulus: Modulus) -> Self {
        debug_assert!(second.all_divisible_by(modulus));
        PairPartition {
            first,
            second,
            modulus,
        }
    }

    /// `(∅ | ∅)`, the index of the unit.
    pub fn unit(modulus: Modulus) -> Self {
        Self::new_unchecked(Partition::empty(), Partition::empty(), modulus)
    }

    /// Parses the `λ|mμ` text form, e.g. `5,1,1,1|3,3`, `|3`, `5|`.
    pub fn parse(s: &str, modulus: Modulus) -> Result<Self> {
        let (left, right) = s.split_once('|').ok_or_else(|| GammaError::Parse {
            what: "pair of partitions",
            input: s.to_string(),
            reason: "expected the form `λ|mμ`".into(),
        })?;
        Self::new(left.parse()?, right.parse()?, modulus)
    }

    pub fn first(&self) -> &Partition {
        &self.first
    }

    pub fn second(&self) -> &Partition {
        &self.second
    }

    /// Same as [`first`](Self::first), under the basis-monomial reading `h_λ e_{mμ}`.
    pub fn h_index(&self) -> &Partition {
        &self.first
    }

    /// Same as [`second`](Self::second).
    pub fn e_index(&self) -> &Partition {
        &self.second
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// `|λ| + |mμ|`.
    pub fn size(&self) -> u32 {
        self.first.size() + self.second.size()
    }

    pub fn degree(&self) -> u32 {
        self.size()
    }

    /// Key of the product `h_λ e_{mμ} · h_δ e_{mν} = h_{λ∪δ} e_{mμ∪mν}`.
    pub fn merge(&self, other: &PairPartition) -> PairPartition {
        debug_assert_eq!(self.modulus, other.modulus);
        PairPartition {
            first: self.first.union(&other.first),
            second: self.second.union(&other.second),
            modulus: self.modulus,
        }
    }
}

impl Ord for PairPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| lex_descending(self.first.parts(), other.first.parts()))
            .then_with(|| lex_descending(self.second.parts(), other.second.parts()))
            .then_with(|| self.modulus.cmp(&other.modulus))
    }
}

impl PartialOrd for PairPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PairPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.first, self.second)
    }
}

/// Index of the canonical basis of Γ^(m).
pub type BasisKey = PairPartition;

/// A finite, non-empty sequence of partitions `A = (δ⁽¹⁾, …, δ⁽ʳ⁾)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionSequence(Vec<Partition>);

impl PartitionSequence {
    pub fn new(entries: Vec<Partition>) -> Self {
        assert!(
            !entries.is_empty(),
            "a partition sequence has at least one entry"
        );
        PartitionSequence(entries)
    }

    pub fn entries(&self) -> &[Partition] {
        &self.0
    }

    /// `len(A)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for PartitionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if p.is_empty() {
                f.write_str("∅")?;
            } else {
                write!(f, "({p})")?;
            }
        }
        f.write_str(")")
    }
}
