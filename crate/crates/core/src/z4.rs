//! Arithmetic over Z4 and the reference sets of admissible generator columns.
//!
//! A generator column is admissible when it has an odd digit and its first
//! odd digit is 1. The full reference set `Ω` holds all `(4ⁿ − 2ⁿ)/2` such
//! columns; the half-run reference set `Ω₀` keeps the ones whose last digit
//! is even. Both are listed in lexicographic order of their digit strings.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A column vector over Z4, written externally as a compact digit string
/// (`"1220"` is `(1,2,2,0)′`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z4Vector(Vec<u8>);

impl Z4Vector {
    /// Builds a vector from arbitrary integers, reducing each mod 4.
    pub fn new<I: IntoIterator<Item = i64>>(digits: I) -> Result<Self> {
        let digits: Vec<u8> = digits.into_iter().map(|d| d.rem_euclid(4) as u8).collect();
        if digits.len() < 2 {
            return Err(Error::InvalidDimension(digits.len()));
        }
        Ok(Z4Vector(digits))
    }

    /// The all-zero vector of length `n`.
    pub fn zero(n: usize) -> Self {
        Z4Vector(vec![0; n])
    }

    /// The vector `(1, 0, …, 0)′`.
    pub fn leading_unit(n: usize) -> Self {
        let mut d = vec![0; n];
        d[0] = 1;
        Z4Vector(d)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    /// Position of this vector in the lexicographic listing of all `4ⁿ`
    /// vectors (first digit most significant).
    pub fn index(&self) -> usize {
        self.0.iter().fold(0usize, |acc, &d| acc * 4 + d as usize)
    }

    /// Inverse of [`Z4Vector::index`].
    pub fn from_index(n: usize, mut index: usize) -> Self {
        let mut d = vec![0u8; n];
        for slot in d.iter_mut().rev() {
            *slot = (index % 4) as u8;
            index /= 4;
        }
        Z4Vector(d)
    }

    /// `u′g` reduced mod 4.
    pub fn dot(&self, other: &Z4Vector) -> u8 {
        debug_assert_eq!(self.len(), other.len());
        let s: u32 = self.0.iter().zip(&other.0).map(|(&a, &b)| a as u32 * b as u32).sum();
        (s % 4) as u8
    }

    pub fn add(&self, other: &Z4Vector) -> Z4Vector {
        Z4Vector(self.0.iter().zip(&other.0).map(|(&a, &b)| (a + b) % 4).collect())
    }

    pub fn sub(&self, other: &Z4Vector) -> Z4Vector {
        Z4Vector(self.0.iter().zip(&other.0).map(|(&a, &b)| (a + 4 - b) % 4).collect())
    }

    pub fn neg(&self) -> Z4Vector {
        Z4Vector(self.0.iter().map(|&a| (4 - a) % 4).collect())
    }

    pub fn scale(&self, c: u8) -> Z4Vector {
        Z4Vector(self.0.iter().map(|&a| (a * (c % 4)) % 4).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    /// True when every digit is 0 or 2.
    pub fn is_all_even(&self) -> bool {
        self.0.iter().all(|&d| d % 2 == 0)
    }

    /// Bit `j` set iff digit `j` is odd.
    pub(crate) fn parity_mask(&self) -> u64 {
        self.0.iter().enumerate().fold(0u64, |m, (j, &d)| m | (((d & 1) as u64) << j))
    }

    pub fn last(&self) -> u8 {
        *self.0.last().expect("vectors have length >= 2")
    }
}

impl fmt::Display for Z4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.0 {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Z4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z4Vector({self})")
    }
}

impl FromStr for Z4Vector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .trim()
            .chars()
            .map(|c| match c {
                '0'..='3' => Ok(c as u8 - b'0'),
                _ => Err(Error::InvalidDigits(s.to_string())),
            })
            .collect::<Result<Vec<u8>>>()?;
        if digits.len() < 2 {
            return Err(Error::InvalidDigits(s.to_string()));
        }
        Ok(Z4Vector(digits))
    }
}

impl Serialize for Z4Vector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Z4Vector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a whitespace- or comma-separated list of digit strings.
pub fn parse_vectors(text: &str) -> Result<Vec<Z4Vector>> {
    text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).map(str::parse).collect()
}

/// All `4ⁿ` vectors of length `n` in lexicographic order.
pub fn delta(n: usize) -> impl Iterator<Item = Z4Vector> {
    (0..1usize << (2 * n)).map(move |i| Z4Vector::from_index(n, i))
}

/// Which reference set a complement or design is drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReferenceKind {
    /// `Ω`, used for `2^{2n}`-run designs.
    Full,
    /// `Ω₀` (last digit even), used for `2^{2n−1}`-run designs.
    LastEven,
}

impl ReferenceKind {
    /// Number of members, `(4ⁿ − 2ⁿ)/2` or `4ⁿ⁻¹ − 2ⁿ⁻¹`.
    pub fn size(self, n: usize) -> usize {
        match self {
            ReferenceKind::Full => ((1usize << (2 * n)) - (1usize << n)) / 2,
            ReferenceKind::LastEven => (1usize << (2 * n - 2)) - (1usize << (n - 1)),
        }
    }

    pub fn admits(self, g: &Z4Vector) -> bool {
        is_valid_column(g) && (self == ReferenceKind::Full || g.last().is_multiple_of(2))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceSet {
    pub n: usize,
    pub kind: ReferenceKind,
    pub vectors: Vec<Z4Vector>,
}

impl ReferenceSet {
    pub fn new(n: usize, kind: ReferenceKind) -> Result<Self> {
        match kind {
            ReferenceKind::Full => enumerate_omega(n),
            ReferenceKind::LastEven => enumerate_omega0(n),
        }
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn contains(&self, g: &Z4Vector) -> bool {
        g.len() == self.n && self.kind.admits(g)
    }
}

/// `Ω`: every admissible column in lexicographic order.
pub fn enumerate_omega(n: usize) -> Result<ReferenceSet> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    let vectors = delta(n).filter(is_valid_column).collect();
    Ok(ReferenceSet { n, kind: ReferenceKind::Full, vectors })
}

/// `Ω₀`: members of `Ω` whose last digit is 0 or 2.
pub fn enumerate_omega0(n: usize) -> Result<ReferenceSet> {
    let mut set = enumerate_omega(n)?;
    set.vectors.retain(|g| g.last() % 2 == 0);
    set.kind = ReferenceKind::LastEven;
    Ok(set)
}

/// True iff `g` has an odd digit and its first odd digit is 1.
pub fn is_valid_column(g: &Z4Vector) -> bool {
    g.digits().iter().find(|&&d| d % 2 == 1) == Some(&1)
}

/// True iff one vector is `c` times the other mod 4 for some `c ∈ {1,2,3}`.
pub fn are_multiples(g: &Z4Vector, h: &Z4Vector) -> Result<bool> {
    if g.len() != h.len() {
        return Err(Error::LengthMismatch { left: g.len(), right: h.len() });
    }
    Ok((1..4).any(|c| g.scale(c) == *h || h.scale(c) == *g))
}

/// The unused generator columns `S̄`, together with the optional column that
/// contributes a single Gray column in odd-factor designs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplementSet {
    pub n: usize,
    pub reference_kind: ReferenceKind,
    pub vectors: Vec<Z4Vector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub odd_role: Option<Z4Vector>,
}

impl ComplementSet {
    /// Validates membership in the reference set and pairwise distinctness.
    pub fn new(n: usize, reference_kind: ReferenceKind, vectors: Vec<Z4Vector>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDimension(n));
        }
        let mut seen = HashSet::new();
        for g in &vectors {
            if g.len() != n {
                return Err(Error::LengthMismatch { left: g.len(), right: n });
            }
            if !reference_kind.admits(g) {
                return Err(Error::InvalidSelection(format!("{g} is not in the reference set")));
            }
            if !seen.insert(g) {
                return Err(Error::InvalidSelection(format!("{g} (duplicate)")));
            }
        }
        Ok(ComplementSet { n, reference_kind, vectors, odd_role: None })
    }

    /// Designates the member that plays the `g_{s+1}` role.
    pub fn with_odd_role(mut self, g: Z4Vector) -> Result<Self> {
        if !self.vectors.contains(&g) {
            return Err(Error::InvalidSelection(format!("{g} (odd role must belong to the set)")));
        }
        self.odd_role = Some(g);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn is_even(&self) -> bool {
        is_even_set(&self.vectors)
    }

    /// Members other than the odd-role column, in order.
    pub fn paired_members(&self) -> impl Iterator<Item = &Z4Vector> {
        self.vectors.iter().filter(move |g| Some(*g) != self.odd_role.as_ref())
    }
}

/// Set difference `reference \ selected`, in reference order.
pub fn complement(selected: &[Z4Vector], reference: &ReferenceSet) -> Result<ComplementSet> {
    let mut chosen = HashSet::with_capacity(selected.len());
    for g in selected {
        if !reference.contains(g) {
            return Err(Error::InvalidSelection(format!("{g} is not in the reference set")));
        }
        chosen.insert(g);
    }
    let vectors = reference.vectors.iter().filter(|g| !chosen.contains(g)).cloned().collect();
    Ok(ComplementSet { n: reference.n, reference_kind: reference.kind, vectors, odd_role: None })
}

/// True iff every pairwise sum has only even digits, i.e. all members share
/// one parity pattern.
pub fn is_even_set(vectors: &[Z4Vector]) -> bool {
    match vectors.first() {
        None => true,
        Some(first) => {
            let p = first.parity_mask();
            vectors.iter().all(|g| g.parity_mask() == p)
        }
    }
}

/// The first `size` vectors `(1, g̃′)′` where `g̃` runs over the all-even
/// `(n−1)`-vectors in lexicographic order.
pub fn build_even_set(n: usize, size: usize) -> Result<ComplementSet> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    let cap = 1usize << (n - 1);
    if size == 0 || size > cap {
        return Err(Error::Infeasible(format!(
            "an even set of size {size} exists only for 1 <= size <= 2^(n-1) = {cap}"
        )));
    }
    let vectors = (0..size)
        .map(|i| {
            let mut d = vec![1u8];
            // bit (n-2-j) of i selects digit 2 at position j+1
            d.extend((0..n - 1).map(|j| if (i >> (n - 2 - j)) & 1 == 1 { 2 } else { 0 }));
            Z4Vector(d)
        })
        .collect();
    Ok(ComplementSet { n, reference_kind: ReferenceKind::Full, vectors, odd_role: None })
}
