//! Regular two-level designs generated by a binary matrix `B`, the
//! selection criteria for choosing `B`, and the end-to-end minimum
//! aberration pipeline.
//!
//! An even complement can always be brought to the form
//! `[1 1′; 0 2B]`: a leading column `(1, 0, …, 0)′` followed by columns
//! `(1, 2b_j′)′`. The regular design `d` generated by `B` then decides
//! optimality. Even factor counts minimize `A_{2r−1}(d) + A_{2r}(d)` for
//! `r = 2, 3, …`; odd counts minimize `E_{2r}(d)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinatorics::{binomial, Combinations};
use crate::error::{Error, Result};
use crate::gray::{construct, halve, GeneratorMatrix, Parity};
use crate::sign_matrix::SignMatrix;
use crate::wlp::{wlp_distance, WordLengthPattern};
use crate::z4::{ComplementSet, ReferenceKind, ReferenceSet, Z4Vector};

/// Longest supported column length; keeps the single-digit token notation
/// unambiguous.
pub const MAX_B_ROWS: usize = 9;

/// `(n−1) × m` binary matrix. Column `j` is a bitmask with bit `h − 1` set
/// when position `h` holds a 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    masks: Vec<u32>,
}

impl BinaryMatrix {
    /// Columns must be nonnull, distinct and fit in `rows` bits.
    pub fn new(rows: usize, masks: Vec<u32>) -> Result<Self> {
        if rows == 0 || rows > MAX_B_ROWS {
            return Err(Error::InvalidBNotation(format!("{rows} rows; supported range is 1..={MAX_B_ROWS}")));
        }
        for (i, &m) in masks.iter().enumerate() {
            if m == 0 {
                return Err(Error::InvalidBNotation("null column".into()));
            }
            if m >> rows != 0 {
                return Err(Error::InvalidBNotation(format!("column {} uses a position beyond {rows}", token(m))));
            }
            if masks[..i].contains(&m) {
                return Err(Error::InvalidBNotation(format!("column {} repeated", token(m))));
            }
        }
        Ok(BinaryMatrix { rows, masks })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns `m`.
    pub fn cols(&self) -> usize {
        self.masks.len()
    }

    pub fn masks(&self) -> &[u32] {
        &self.masks
    }

    /// Entry at position `h` (1-based) of column `j` (0-based).
    pub fn entry(&self, h: usize, j: usize) -> u8 {
        (self.masks[j] >> (h - 1) & 1) as u8
    }

    /// Bitmask of the `i`-th binary vector `x` in lexicographic order
    /// (`x₁` most significant), in the same bit layout as the columns.
    pub fn x_mask(&self, i: usize) -> u32 {
        (0..self.rows).fold(0u32, |acc, h| acc | (((i >> (self.rows - 1 - h)) & 1) as u32) << h)
    }

    /// Rank over GF(2).
    pub fn rank(&self) -> usize {
        let mut basis: Vec<u32> = Vec::new();
        for &m in &self.masks {
            let mut v = m;
            for &b in &basis {
                v = v.min(v ^ b);
            }
            if v != 0 {
                basis.push(v);
                basis.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
        basis.len()
    }

    /// Same columns in ascending mask order.
    pub fn canonical(&self) -> BinaryMatrix {
        let mut masks = self.masks.clone();
        masks.sort_unstable();
        BinaryMatrix { rows: self.rows, masks }
    }

    /// `[B B]`.
    pub fn doubled(&self) -> BinaryMatrix {
        let mut masks = self.masks.clone();
        masks.extend_from_slice(&self.masks);
        BinaryMatrix { rows: self.rows, masks }
    }
}

fn token(mask: u32) -> String {
    (0..32).filter(|h| mask >> h & 1 == 1).map(|h| char::from(b'1' + h as u8)).collect()
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self.masks.iter().map(|&m| token(m)).collect();
        write!(f, "[{}]", tokens.join(" "))
    }
}

/// Parses token notation such as `"1 2 12 3"` or `"[1 2 12 3]"` into a
/// matrix with `rows` rows.
pub fn parse_b_notation(text: &str, rows: usize) -> Result<BinaryMatrix> {
    let trimmed = text.trim().trim_start_matches('[').trim_end_matches(']');
    let mut masks = Vec::new();
    for tok in trimmed.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
        let mut mask = 0u32;
        for ch in tok.chars() {
            let h = ch
                .to_digit(10)
                .filter(|&h| h >= 1 && h as usize <= rows)
                .ok_or_else(|| Error::InvalidBNotation(format!("{tok:?}: position {ch:?} is outside 1..={rows}")))?;
            if mask >> (h - 1) & 1 == 1 {
                return Err(Error::InvalidBNotation(format!("{tok:?}: position {h} repeated")));
            }
            mask |= 1 << (h - 1);
        }
        masks.push(mask);
    }
    BinaryMatrix::new(rows, masks)
}

#[derive(Serialize, Deserialize)]
struct BJson {
    rows: usize,
    columns: String,
}

impl Serialize for BinaryMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        BJson { rows: self.rows, columns: self.to_string() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BinaryMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = BJson::deserialize(deserializer)?;
        parse_b_notation(&raw.columns, raw.rows).map_err(D::Error::custom)
    }
}

/// The `2^{n−1}`-run regular design generated by `B`: run `x` (lexicographic)
/// has entry `(−1)^{x′b_j}` in factor `j`.
pub fn regular_design(b: &BinaryMatrix) -> SignMatrix {
    let runs = 1usize << b.rows();
    let rows: Vec<Vec<i8>> = (0..runs)
        .map(|i| {
            let x = b.x_mask(i);
            b.masks().iter().map(|&m| if (x & m).count_ones().is_multiple_of(2) { 1 } else { -1 }).collect()
        })
        .collect();
    let mut d = SignMatrix::from_rows(&rows).expect("entries are ±1");
    if b.cols() == 0 {
        d = SignMatrix::ones(runs, 0);
    }
    d
}

/// Word counts `A₀ … A_m` of a regular design.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularWlp {
    terms: Vec<u64>,
}

impl RegularWlp {
    /// `A_k(d)`, zero beyond `m`.
    pub fn a(&self, k: usize) -> u64 {
        self.terms.get(k).copied().unwrap_or(0)
    }

    pub fn m(&self) -> usize {
        self.terms.len() - 1
    }

    /// `(A₃, …, A_m)`.
    pub fn from_three(&self) -> Vec<u64> {
        (3..=self.m()).map(|k| self.a(k)).collect()
    }

    /// Total number of words including the empty one.
    pub fn total(&self) -> u64 {
        self.terms.iter().sum()
    }
}

/// Counts the column subsets of each size whose XOR is zero, by walking all
/// `2^m` subsets in Gray-code order.
pub fn regular_wlp(b: &BinaryMatrix) -> RegularWlp {
    let m = b.cols();
    let mut terms = vec![0u64; m + 1];
    terms[0] = 1;
    let (mut acc, mut size) = (0u32, 0usize);
    for i in 1u64..(1u64 << m) {
        let j = i.trailing_zeros() as usize;
        acc ^= b.masks()[j];
        // bit j flips in the Gray code of i
        if (i ^ (i >> 1)) >> j & 1 == 1 {
            size += 1;
        } else {
            size -= 1;
        }
        if acc == 0 {
            terms[size] += 1;
        }
    }
    RegularWlp { terms }
}

/// `(A₃+A₄, A₅+A₆, …)` for `r = 2..=max(2, ⌊(m+1)/2⌋)`.
pub fn theorem2_key(b: &BinaryMatrix) -> Vec<u128> {
    let w = regular_wlp(b);
    let top = b.cols().div_ceil(2).max(2);
    (2..=top).map(|r| (w.a(2 * r - 1) + w.a(2 * r)) as u128).collect()
}

fn e2r_from(w: &RegularWlp, m: usize, r: usize) -> u128 {
    (0..=2 * r)
        .filter(|&k| k <= m)
        .map(|k| {
            let choose = r - k.div_ceil(2);
            binomial((m - k) as u64, choose as u64) * (1u128 << k) * w.a(k) as u128
        })
        .sum()
}

/// `E_{2r}(d) = Σ_{k=0}^{2r} C(m−k, ⌊r−k/2⌋)·2^k·A_k(d)`, with the binomial
/// taken as zero when its lower index exceeds the upper.
pub fn e2r(b: &BinaryMatrix, r: usize) -> u128 {
    e2r_from(&regular_wlp(b), b.cols(), r)
}

/// `(E₄, E₆, …, E_{2·max(2,m)})`.
pub fn odd_key(b: &BinaryMatrix) -> Vec<u128> {
    let w = regular_wlp(b);
    (2..=b.cols().max(2)).map(|r| e2r_from(&w, b.cols(), r)).collect()
}

/// Selection key for the given parity.
pub fn criterion_key(b: &BinaryMatrix, parity: Parity) -> Vec<u128> {
    match parity {
        Parity::Even => theorem2_key(b),
        Parity::Odd => odd_key(b),
    }
}

/// `[1 | d; −1 | −d]`: a leading factor separating the two halves, then the
/// design and its mirror image.
pub fn foldover(d: &SignMatrix) -> SignMatrix {
    let mut rows = Vec::with_capacity(2 * d.runs());
    for r in d.to_rows() {
        let mut top = vec![1i8];
        top.extend(&r);
        rows.push(top);
    }
    for r in d.to_rows() {
        let mut bottom = vec![-1i8];
        bottom.extend(r.iter().map(|x| -x));
        rows.push(bottom);
    }
    SignMatrix::from_rows(&rows).expect("entries are ±1")
}

/// Outcome of the foldover identities for one `B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoldCheck {
    /// Every odd-length word count of both foldovers vanishes.
    pub odd_terms_vanish: bool,
    /// `A_{2r}(d̃) = A_{2r−1}(d) + A_{2r}(d)`.
    pub pair_sums: bool,
    /// `A₂(d̃₀) = m`.
    pub a2_doubled: bool,
    /// `A_{2r}(d̃₀) = E_{2r}(d)`.
    pub e2r: bool,
}

impl FoldCheck {
    pub fn all(&self) -> bool {
        self.odd_terms_vanish && self.pair_sums && self.a2_doubled && self.e2r
    }
}

/// Computes the foldovers of `d` and of `d₀` (generated by `[B B]`), takes
/// their WLPs through the distance route, and compares against the regular
/// WLP and `E_{2r}` of `d`.
pub fn fold_wlp_identities(b: &BinaryMatrix) -> Result<FoldCheck> {
    let m = b.cols();
    let w = regular_wlp(b);
    let folded = wlp_distance(&foldover(&regular_design(b)))?;
    let folded0 = wlp_distance(&foldover(&regular_design(&b.doubled())))?;
    let int = |p: &WordLengthPattern, k: usize| -> Option<u128> {
        if k > p.k_max() {
            return Some(0);
        }
        p.integer_term(k).and_then(|v| num_traits::ToPrimitive::to_u128(&v))
    };
    let odd_terms_vanish = (1..=folded.k_max()).step_by(2).all(|k| int(&folded, k) == Some(0))
        && (1..=folded0.k_max()).step_by(2).all(|k| int(&folded0, k) == Some(0));
    let pair_sums = (1..=(m + 2) / 2).all(|r| int(&folded, 2 * r) == Some((w.a(2 * r - 1) + w.a(2 * r)) as u128));
    let a2_doubled = int(&folded0, 2) == Some(m as u128);
    let e2r_ok = (2..=m.max(2)).all(|r| int(&folded0, 2 * r) == Some(e2r_from(&w, m, r)));
    Ok(FoldCheck { odd_terms_vanish, pair_sums, a2_doubled, e2r: e2r_ok })
}

/// All `B` with `m` distinct nonnull columns of length `n − 1`, columns in
/// ascending mask order, matrices in lexicographic order of their masks.
pub fn enumerate_b(n: usize, m: usize) -> Result<Vec<BinaryMatrix>> {
    if n < 2 || n - 1 > MAX_B_ROWS {
        return Err(Error::InvalidDimension(n));
    }
    let pool = (1usize << (n - 1)) - 1;
    if m == 0 || m > pool {
        return Err(Error::OutOfRegime(format!("m = {m} columns; need 1..={pool} for n = {n}")));
    }
    Ok(Combinations::new(pool, m)
        .map(|idx| BinaryMatrix { rows: n - 1, masks: idx.into_iter().map(|i| i as u32 + 1).collect() })
        .collect())
}

/// The chosen `B` with its criterion key and how many candidates share it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BSelection {
    pub b: BinaryMatrix,
    pub parity: Parity,
    pub key: Vec<u128>,
    /// Number of enumerated `B` attaining the same key.
    pub optimal_count: usize,
    pub candidates: usize,
}

/// Minimizes the parity's criterion key over [`enumerate_b`]`(n, def − 1)`;
/// ties go to the lexicographically smallest mask sequence.
pub fn select_b(n: usize, deficiency: usize, parity: Parity) -> Result<BSelection> {
    let cap = 1usize << (n.saturating_sub(1));
    if n < 2 || deficiency < 2 || deficiency > cap {
        return Err(Error::OutOfRegime(format!("deficiency {deficiency} needs 2..={cap} for n = {n}")));
    }
    let candidates = enumerate_b(n, deficiency - 1)?;
    let keys: Vec<Vec<u128>> = candidates.par_iter().map(|b| criterion_key(b, parity)).collect();
    let best =
        (0..candidates.len()).min_by(|&i, &j| keys[i].cmp(&keys[j]).then(i.cmp(&j))).expect("at least one candidate");
    let optimal_count = keys.iter().filter(|k| *k == &keys[best]).count();
    Ok(BSelection {
        b: candidates[best].clone(),
        parity,
        key: keys[best].clone(),
        optimal_count,
        candidates: candidates.len(),
    })
}

/// `S̄` read off `[1 1′; 0 2B]`: `(1, 0, …, 0)′` then `(1, 2b_j′)′` for each
/// column in order.
pub fn sbar_from_b(b: &BinaryMatrix, n: usize, kind: ReferenceKind) -> Result<ComplementSet> {
    if b.rows() + 1 != n {
        return Err(Error::LengthMismatch { left: b.rows() + 1, right: n });
    }
    let mut vectors = vec![Z4Vector::leading_unit(n)];
    for &m in b.masks() {
        let digits = std::iter::once(1i64).chain((0..n - 1).map(|h| 2 * ((m >> h) & 1) as i64));
        vectors.push(Z4Vector::new(digits)?);
    }
    ComplementSet::new(n, kind, vectors)
}

/// A minimum aberration design together with everything that produced it.
#[derive(Clone, Debug)]
pub struct MaDesign {
    pub n: usize,
    pub runs: usize,
    pub factors: usize,
    pub parity: Parity,
    pub reference_kind: ReferenceKind,
    pub deficiency: usize,
    pub selection: Option<BSelection>,
    pub complement: ComplementSet,
    pub generator: GeneratorMatrix,
    pub design: SignMatrix,
    pub wlp: WordLengthPattern,
}

impl MaDesign {
    pub fn halved(&self) -> bool {
        self.reference_kind == ReferenceKind::LastEven
    }

    pub fn b(&self) -> Option<&BinaryMatrix> {
        self.selection.as_ref().map(|s| &s.b)
    }
}

/// Valid factor counts for `n` and a run size, as an inclusive range.
pub fn factor_range(n: usize, runs: usize) -> Result<(ReferenceKind, usize, usize)> {
    if !(2..=15).contains(&n) {
        return Err(Error::InvalidDimension(n));
    }
    let kind = if runs == 1usize << (2 * n) {
        ReferenceKind::Full
    } else if runs == 1usize << (2 * n - 1) {
        ReferenceKind::LastEven
    } else {
        return Err(Error::OutOfRegime(format!(
            "runs must be {} or {} for n = {n}, got {runs}",
            1usize << (2 * n),
            1usize << (2 * n - 1)
        )));
    };
    let v = kind.size(n);
    let half = 1usize << (n - 1);
    let lo = (2 * v.saturating_sub(half)).max(2);
    Ok((kind, lo, 2 * v))
}

/// Builds an MA design in `q` factors and `runs ∈ {4ⁿ, 4ⁿ/2}` runs.
pub fn ma_design(n: usize, runs: usize, q: usize) -> Result<MaDesign> {
    let (kind, lo, hi) = factor_range(n, runs)?;
    if q < lo || q > hi {
        return Err(Error::OutOfRegime(format!(
            "q = {q} is outside the supported range {lo}..={hi} for n = {n} and {runs} runs"
        )));
    }
    let parity = Parity::of(q);
    let v = kind.size(n);
    let s = q / 2;
    let deficiency = v - s;
    let reference = ReferenceSet::new(n, kind)?;
    let (complement, selection) = match deficiency {
        0 => (ComplementSet::new(n, kind, vec![])?, None),
        1 => (ComplementSet::new(n, kind, vec![Z4Vector::leading_unit(n)])?, None),
        _ => {
            let sel = select_b(n, deficiency, parity)?;
            (sbar_from_b(&sel.b, n, kind)?, Some(sel))
        }
    };
    let complement = match parity {
        Parity::Even => complement,
        Parity::Odd => complement.with_odd_role(Z4Vector::leading_unit(n))?,
    };
    let mut columns: Vec<Z4Vector> =
        reference.vectors.iter().filter(|g| !complement.vectors.contains(g)).cloned().collect();
    if let Some(g) = &complement.odd_role {
        columns.push(g.clone());
    }
    let generator = GeneratorMatrix::new(n, columns)?;
    let full = construct(&generator, parity)?;
    let design = match kind {
        ReferenceKind::Full => full,
        ReferenceKind::LastEven => halve(&full, &generator)?,
    };
    let wlp = wlp_distance(&design)?;
    Ok(MaDesign {
        n,
        runs,
        factors: q,
        parity,
        reference_kind: kind,
        deficiency,
        selection,
        complement,
        generator,
        design,
        wlp,
    })
}

/// One row of the table of optimal `B` for even factor counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OptimalBRow {
    pub deficiency: usize,
    pub b: BinaryMatrix,
    pub key: Vec<u128>,
    pub optimal_count: usize,
}

/// Optimal `B` for every deficiency `2..=2^{n−1}` under the even-count
/// criterion, for `n ∈ {3, 4, 5}`.
pub fn table1(n: usize) -> Result<Vec<OptimalBRow>> {
    if !(3..=5).contains(&n) {
        return Err(Error::Unsupported(format!("table for n = {n}; supported n are 3, 4 and 5")));
    }
    (2..=1usize << (n - 1))
        .map(|def| {
            let sel = select_b(n, def, Parity::Even)?;
            Ok(OptimalBRow { deficiency: def, b: sel.b, key: sel.key, optimal_count: sel.optimal_count })
        })
        .collect()
}

/// Lexicographic comparison of two keys.
pub fn compare_keys(a: &[u128], b: &[u128]) -> Ordering {
    a.cmp(b)
}

impl FromStr for BinaryMatrix {
    type Err = Error;

    /// Infers the row count from the largest position mentioned.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s.chars().filter_map(|c| c.to_digit(10)).max().unwrap_or(1).max(1) as usize;
        parse_b_notation(s, rows)
    }
}
