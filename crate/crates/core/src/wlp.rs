//! Aliasing indices, wordlength patterns, resolution, projectivity and
//! moment criteria for ±1 arrays, all in exact arithmetic.
//!
//! Two routes compute the wordlength pattern:
//!
//! * [`wlp_direct`] enumerates every column subset and sums squared Schur
//!   means. It works for any design.
//! * [`wlp_distance`] uses the distance distribution of the rows. When the
//!   distances from every run to all runs have the same distribution (true
//!   for Gray-map designs, where `θ′_u θ_w = σ_{u−w}`), the MacWilliams
//!   identity gives `N²·A_k = N·Σ_u K_k(d_u; q)`, with `K_k` the binary
//!   Krawtchouk polynomial and `d_u` the distance of run `u` from run 0.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::Fraction;
use crate::sign_matrix::SignMatrix;

/// `A₀ … A_{k_max}` of a design, each held as an integer numerator over `N²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordLengthPattern {
    runs: usize,
    factors: usize,
    numerators: Vec<BigUint>,
}

impl WordLengthPattern {
    pub(crate) fn from_numerators(runs: usize, factors: usize, numerators: Vec<BigUint>) -> Self {
        WordLengthPattern { runs, factors, numerators }
    }

    pub fn runs(&self) -> usize {
        self.runs
    }

    pub fn factors(&self) -> usize {
        self.factors
    }

    /// Largest `k` available.
    pub fn k_max(&self) -> usize {
        self.numerators.len() - 1
    }

    /// The common denominator `N²`.
    pub fn denominator(&self) -> BigUint {
        BigUint::from(self.runs) * BigUint::from(self.runs)
    }

    /// `N²·A_k`.
    pub fn numerator(&self, k: usize) -> &BigUint {
        &self.numerators[k]
    }

    pub fn numerators(&self) -> &[BigUint] {
        &self.numerators
    }

    /// `A_k` as a reduced fraction.
    pub fn term(&self, k: usize) -> Fraction {
        Fraction::new(BigInt::from(self.numerators[k].clone()), BigInt::from(self.denominator()))
    }

    /// `A_k` when it is a whole number.
    pub fn integer_term(&self, k: usize) -> Option<BigUint> {
        let den = self.denominator();
        (&self.numerators[k] % &den).is_zero().then(|| &self.numerators[k] / den)
    }

    /// `A_k` as a `u64`, panicking if it is fractional or too large. Test
    /// and example convenience.
    pub fn integer_u64(&self, k: usize) -> u64 {
        self.integer_term(k).and_then(|v| v.to_u64()).unwrap_or_else(|| panic!("A_{k} = {} is not a u64", self.term(k)))
    }

    /// Same pattern cut back to `A₀ … A_k`.
    pub fn truncated(&self, k: usize) -> WordLengthPattern {
        let k = k.min(self.k_max());
        WordLengthPattern { runs: self.runs, factors: self.factors, numerators: self.numerators[..=k].to_vec() }
    }

    /// Smallest `k ≥ 1` with `A_k > 0`.
    pub fn first_nonzero(&self) -> Option<usize> {
        (1..self.numerators.len()).find(|&k| !self.numerators[k].is_zero())
    }

    /// Lexicographic comparison of `(A_start, A_{start+1}, …)` over the
    /// common range of `k`, as exact rationals.
    pub fn cmp_from(&self, other: &WordLengthPattern, start: usize) -> Ordering {
        let (da, db) = (self.denominator(), other.denominator());
        let top = self.k_max().min(other.k_max());
        for k in start..=top {
            let ord = (&self.numerators[k] * &db).cmp(&(&other.numerators[k] * &da));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for WordLengthPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 1..=self.k_max() {
            let t = self.term(k);
            if t.is_integer() {
                writeln!(f, "A{k} = {t}")?;
            } else {
                writeln!(f, "A{k} = {t} ({:.6})", t.to_f64())?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct WlpJson {
    runs: usize,
    factors: usize,
    #[serde(rename = "A")]
    a: Vec<Fraction>,
}

impl Serialize for WordLengthPattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        WlpJson { runs: self.runs, factors: self.factors, a: (1..=self.k_max()).map(|k| self.term(k)).collect() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WordLengthPattern {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = WlpJson::deserialize(deserializer)?;
        let n2 = BigInt::from(raw.runs) * BigInt::from(raw.runs);
        let mut numerators = vec![BigUint::from(raw.runs) * BigUint::from(raw.runs)];
        for t in &raw.a {
            let scaled = t.numer() * &n2;
            if !(&scaled % t.denom()).is_zero() || scaled.is_negative() {
                return Err(D::Error::custom(format!("{t} is not a nonnegative multiple of 1/N^2")));
            }
            numerators.push((scaled / t.denom()).to_biguint().expect("nonnegative"));
        }
        Ok(WordLengthPattern { runs: raw.runs, factors: raw.factors, numerators })
    }
}

fn check_subset(d: &SignMatrix, h: &[usize]) -> Result<()> {
    if h.is_empty() {
        return Err(Error::InvalidSubset("empty column subset".into()));
    }
    for (i, &c) in h.iter().enumerate() {
        if c >= d.factors() {
            return Err(Error::InvalidSubset(format!("column {c} out of range 0..{}", d.factors())));
        }
        if h[..i].contains(&c) {
            return Err(Error::InvalidSubset(format!("column {c} repeated")));
        }
    }
    Ok(())
}

fn schur_sum(d: &SignMatrix, h: &[usize]) -> i64 {
    let mut acc = vec![0u64; d.words()];
    for &c in h {
        for (a, b) in acc.iter_mut().zip(d.column_bits(c)) {
            *a ^= b;
        }
    }
    let pop: u32 = acc.iter().map(|w| w.count_ones()).sum();
    d.runs() as i64 - 2 * pop as i64
}

/// `ρ_k(H; D) = |mean of the Schur product of the columns in H|`.
pub fn aliasing_index(d: &SignMatrix, h: &[usize]) -> Result<Rational64> {
    check_subset(d, h)?;
    Ok(Rational64::new(schur_sum(d, h).abs(), d.runs() as i64))
}

/// Depth-first walk over all subsets of size `1..=k_max`, feeding each
/// subset's Schur sum `N − 2·popcount` to `visit(size, sum)`.
fn for_each_subset_sum<F>(d: &SignMatrix, k_max: usize, first: usize, visit: &mut F)
where
    F: FnMut(usize, i64),
{
    let w = d.words();
    let q = d.factors();
    let runs = d.runs() as i64;
    // stack[l] holds the XOR of the first l+1 chosen columns
    let mut stack = vec![0u64; w * k_max];
    stack[..w].copy_from_slice(d.column_bits(first));
    let pop: u32 = stack[..w].iter().map(|x| x.count_ones()).sum();
    visit(1, runs - 2 * pop as i64);
    if k_max == 1 {
        return;
    }
    #[allow(clippy::too_many_arguments)]
    fn rec<F: FnMut(usize, i64)>(
        d: &SignMatrix,
        stack: &mut [u64],
        depth: usize,
        start: usize,
        k_max: usize,
        q: usize,
        w: usize,
        runs: i64,
        visit: &mut F,
    ) {
        if depth + 1 == k_max {
            let parent = &stack[(depth - 1) * w..depth * w];
            for c in start..q {
                let col = d.column_bits(c);
                let pop: u32 = parent.iter().zip(col).map(|(a, b)| (a ^ b).count_ones()).sum();
                visit(depth + 1, runs - 2 * pop as i64);
            }
            return;
        }
        for c in start..q {
            let col = d.column_bits(c);
            let mut pop = 0u32;
            {
                let (done, rest) = stack.split_at_mut(depth * w);
                let parent = &done[(depth - 1) * w..];
                for ((slot, a), b) in rest[..w].iter_mut().zip(parent).zip(col) {
                    *slot = a ^ b;
                    pop += slot.count_ones();
                }
            }
            visit(depth + 1, runs - 2 * pop as i64);
            rec(d, stack, depth + 1, c + 1, k_max, q, w, runs, visit);
        }
    }
    rec(d, &mut stack, 1, first + 1, k_max, q, w, runs, visit);
}

/// Exact `A₁ … A_{k_max}` by enumerating all `C(q, k)` column subsets.
pub fn wlp_direct(d: &SignMatrix, k_max: usize) -> Result<WordLengthPattern> {
    let q = d.factors();
    if k_max == 0 || k_max > q {
        return Err(Error::KOutOfRange { k_max, factors: q });
    }
    let sums = (0..q)
        .into_par_iter()
        .map(|first| {
            let mut acc = vec![0u128; k_max + 1];
            for_each_subset_sum(d, k_max, first, &mut |k, s| acc[k] += (s * s) as u128);
            acc
        })
        .reduce(
            || vec![0u128; k_max + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let n2 = (d.runs() * d.runs()) as u128;
    let mut numerators: Vec<BigUint> = sums.into_iter().map(BigUint::from).collect();
    numerators[0] = BigUint::from(n2);
    Ok(WordLengthPattern::from_numerators(d.runs(), q, numerators))
}

/// Largest `|Schur sum|` over all `k`-subsets, stopping early at `N`.
fn max_schur_sum(d: &SignMatrix, k: usize) -> i64 {
    let runs = d.runs() as i64;
    let q = d.factors();
    if k == 0 || k > q {
        return 0;
    }
    let mut best = 0i64;
    for first in 0..q {
        if best == runs {
            break;
        }
        for_each_subset_sum(d, k, first, &mut |size, s| {
            if size == k {
                best = best.max(s.abs());
            }
        });
    }
    best
}

/// `ρ_{k,max}(D)`.
pub fn max_aliasing(d: &SignMatrix, k: usize) -> Result<Rational64> {
    if k == 0 || k > d.factors() {
        return Err(Error::KOutOfRange { k_max: k, factors: d.factors() });
    }
    Ok(Rational64::new(max_schur_sum(d, k), d.runs() as i64))
}

/// Row sums `σ_u`, in row order.
pub fn row_sums(d: &SignMatrix) -> Vec<i64> {
    let q = d.factors() as i64;
    d.row_weights().into_iter().map(|w| q - 2 * w as i64).collect()
}

/// Hamming distance of every run from run 0.
fn distances_from_first(rw: usize, packed: &[u64], runs: usize) -> Vec<usize> {
    let first = &packed[..rw];
    (0..runs)
        .map(|r| packed[r * rw..(r + 1) * rw].iter().zip(first).map(|(a, b)| (a ^ b).count_ones() as usize).sum())
        .collect()
}

/// True iff, for every run, the distances to all runs have the same
/// distribution as the distances from run 0. This is the property the
/// distance route relies on, and it holds whenever `θ′_u θ_w = σ_{u−w}`.
pub fn is_group_invariant(d: &SignMatrix) -> bool {
    let (rw, packed) = d.row_packed();
    let runs = d.runs();
    let q = d.factors();
    let reference = histogram(&distances_from_first(rw, &packed, runs), q);
    (1..runs).into_par_iter().all(|w| {
        let row = &packed[w * rw..(w + 1) * rw];
        let mut h = vec![0usize; q + 1];
        for r in 0..runs {
            let dist: u32 = packed[r * rw..(r + 1) * rw].iter().zip(row).map(|(a, b)| (a ^ b).count_ones()).sum();
            h[dist as usize] += 1;
        }
        h == reference
    })
}

fn histogram(xs: &[usize], q: usize) -> Vec<usize> {
    let mut h = vec![0usize; q + 1];
    for &x in xs {
        h[x] += 1;
    }
    h
}

/// Binary Krawtchouk values `K_k(x; q)` for `k = 0..=q`, computed per `x`
/// on demand and cached.
#[derive(Clone, Debug)]
pub struct Krawtchouk {
    q: usize,
    rows: Vec<Option<Vec<BigInt>>>,
}

impl Krawtchouk {
    pub fn new(q: usize) -> Self {
        Krawtchouk { q, rows: vec![None; q + 1] }
    }

    /// Table with every `x ∈ 0..=q` filled in.
    pub fn full(q: usize) -> Self {
        let mut t = Krawtchouk::new(q);
        for x in 0..=q {
            t.ensure(x);
        }
        t
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// `(k+1)K_{k+1} = (q − 2x)K_k − (q − k + 1)K_{k−1}`, `K₀ = 1`.
    fn compute(q: usize, x: usize) -> Vec<BigInt> {
        let mut out = Vec::with_capacity(q + 1);
        out.push(BigInt::one());
        if q == 0 {
            return out;
        }
        let a = q as i64 - 2 * x as i64;
        out.push(BigInt::from(a));
        for k in 1..q {
            let next = (&out[k] * a - &out[k - 1] * (q as i64 - k as i64 + 1)) / (k as i64 + 1);
            out.push(next);
        }
        out
    }

    pub fn ensure(&mut self, x: usize) {
        if self.rows[x].is_none() {
            self.rows[x] = Some(Self::compute(self.q, x));
        }
    }

    /// `K_k(x; q)` for all `k`; `x` must have been filled in.
    pub fn row(&self, x: usize) -> &[BigInt] {
        self.rows[x].as_deref().expect("Krawtchouk row not computed")
    }

    pub fn value(&mut self, k: usize, x: usize) -> BigInt {
        self.ensure(x);
        self.row(x)[k].clone()
    }
}

/// WLP from a histogram of run distances, `hist[x]` runs at distance `x`
/// from run 0.
pub(crate) fn wlp_from_distance_histogram(
    runs: usize,
    hist: &[usize],
    table: &Krawtchouk,
) -> Result<WordLengthPattern> {
    let q = table.q();
    let mut totals = vec![BigInt::zero(); q + 1];
    for (x, &count) in hist.iter().enumerate() {
        if count == 0 {
            continue;
        }
        for (t, kv) in totals.iter_mut().zip(table.row(x)) {
            *t += kv * count;
        }
    }
    let numerators = totals
        .into_iter()
        .enumerate()
        .map(|(k, t)| {
            (t * runs)
                .to_biguint()
                .ok_or_else(|| Error::Inconsistent(format!("negative A_{k} from the distance route")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WordLengthPattern::from_numerators(runs, q, numerators))
}

fn distance_histogram(d: &SignMatrix) -> Result<Vec<usize>> {
    if !d.is_known_group_invariant() && !is_group_invariant(d) {
        return Err(Error::NotGroupInvariant);
    }
    let (rw, packed) = d.row_packed();
    Ok(histogram(&distances_from_first(rw, &packed, d.runs()), d.factors()))
}

/// Full exact WLP `A₀ … A_q` through the distance distribution.
pub fn wlp_distance(d: &SignMatrix) -> Result<WordLengthPattern> {
    let hist = distance_histogram(d)?;
    let mut table = Krawtchouk::new(d.factors());
    for (x, &c) in hist.iter().enumerate() {
        if c > 0 {
            table.ensure(x);
        }
    }
    wlp_from_distance_histogram(d.runs(), &hist, &table)
}

/// Same as [`wlp_distance`] with a caller-supplied table, for repeated use
/// at one factor count.
pub fn wlp_distance_with(d: &SignMatrix, table: &Krawtchouk) -> Result<WordLengthPattern> {
    if table.q() != d.factors() {
        return Err(Error::LengthMismatch { left: table.q(), right: d.factors() });
    }
    let hist = distance_histogram(d)?;
    wlp_from_distance_histogram(d.runs(), &hist, table)
}

/// `R(D) = r + 1 − ρ_{r,max}`, or unbounded when no column subset is aliased.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Resolution {
    Finite(Rational64),
    Unbounded,
}

impl fmt::Display for Resolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Resolution::Finite(r) => {
                let v = *r.numer() as f64 / *r.denom() as f64;
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{r} ({v})")
                }
            }
            Resolution::Unbounded => write!(f, "unbounded"),
        }
    }
}

impl Serialize for Resolution {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Resolution::Finite(r) => Fraction::new(*r.numer(), *r.denom()).serialize(serializer),
            Resolution::Unbounded => serializer.serialize_str("unbounded"),
        }
    }
}

impl<'de> Deserialize<'de> for Resolution {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Word(String),
            Pair(Fraction),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Word(w) if w == "unbounded" => Ok(Resolution::Unbounded),
            Raw::Word(w) => Err(D::Error::custom(format!("unexpected resolution {w:?}"))),
            Raw::Pair(f) => {
                let (n, d) = (f.numer().to_i64(), f.denom().to_i64());
                match (n, d) {
                    (Some(n), Some(d)) => Ok(Resolution::Finite(Rational64::new(n, d))),
                    _ => Err(D::Error::custom("resolution out of range")),
                }
            }
        }
    }
}

/// Resolution of any design. Group-invariant designs locate the first
/// aliased order through the distance route; the maximum aliasing at that
/// order is always found by direct enumeration.
pub fn resolution(d: &SignMatrix) -> Resolution {
    let q = d.factors();
    let r = if d.is_known_group_invariant() || is_group_invariant(d) {
        match wlp_distance(d).ok().and_then(|w| w.first_nonzero()) {
            Some(r) => r,
            None => return Resolution::Unbounded,
        }
    } else {
        match (1..=q).find(|&k| max_schur_sum(d, k) > 0) {
            Some(r) => r,
            None => return Resolution::Unbounded,
        }
    };
    let rho = Rational64::new(max_schur_sum(d, r), d.runs() as i64);
    Resolution::Finite(Rational64::from_integer(r as i64 + 1) - rho)
}

/// True iff every `p`-column projection contains all `2^p` sign patterns.
pub fn projectivity_at_least(d: &SignMatrix, p: usize) -> bool {
    let q = d.factors();
    if p == 0 {
        return true;
    }
    if p > q {
        return false;
    }
    let w = d.words();
    let runs = d.runs();
    let mut all_rows = vec![u64::MAX; w];
    if !runs.is_multiple_of(64) {
        all_rows[w - 1] = (1u64 << (runs % 64)) - 1;
    }
    // masks for each partial sign pattern: 2^depth row sets
    fn rec(d: &SignMatrix, masks: &[Vec<u64>], start: usize, depth: usize, p: usize) -> bool {
        if depth == p {
            return true;
        }
        let q = d.factors();
        // need p - depth more columns from start..q
        for c in start..=q - (p - depth) {
            let col = d.column_bits(c);
            let mut next = Vec::with_capacity(masks.len() * 2);
            let mut covered = true;
            for m in masks {
                let plus: Vec<u64> = m.iter().zip(col).map(|(a, b)| a & !b).collect();
                let minus: Vec<u64> = m.iter().zip(col).map(|(a, b)| a & b).collect();
                if plus.iter().all(|x| *x == 0) || minus.iter().all(|x| *x == 0) {
                    covered = false;
                    break;
                }
                next.push(plus);
                next.push(minus);
            }
            if !covered || !rec(d, &next, c + 1, depth + 1, p) {
                return false;
            }
        }
        true
    }
    let _ = w;
    rec(d, &[all_rows], 0, 0, p)
}

/// Power moments of row sums and of row scalar products.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MomentVector {
    /// First order held in the vectors below (always 3).
    pub k_min: usize,
    /// `m_k = Σ_u σ_u^k`.
    pub row_sum_moments: Vec<BigInt>,
    /// `M_k = Σ_u Σ_w (θ′_u θ_w)^k`, computed only for small designs.
    pub scalar_product_moments: Option<Vec<BigInt>>,
}

impl MomentVector {
    pub fn m(&self, k: usize) -> &BigInt {
        &self.row_sum_moments[k - self.k_min]
    }

    pub fn big_m(&self, k: usize) -> Option<&BigInt> {
        self.scalar_product_moments.as_ref().map(|v| &v[k - self.k_min])
    }
}

/// `Σ (value_i)^k · weight_i`, in `i128` when it fits and arbitrary
/// precision otherwise.
pub(crate) fn power_sum(values: &[(i64, u64)], k: u32) -> BigInt {
    let fast = values.iter().try_fold(0i128, |acc, &(v, c)| {
        let p = (v as i128).checked_pow(k)?;
        acc.checked_add(p.checked_mul(c as i128)?)
    });
    match fast {
        Some(v) => BigInt::from(v),
        None => values.iter().map(|&(v, c)| num_traits::pow(BigInt::from(v), k as usize) * c).sum(),
    }
}

/// Largest run count for which `M_k` is computed naively.
pub const NAIVE_MOMENT_RUN_LIMIT: usize = 256;

/// `m_k` for `k = 3..=k_max`, plus `M_k` when `N ≤ 256`. For group-invariant
/// designs `M_k = N·m_k` is checked.
pub fn moments(d: &SignMatrix, k_max: usize) -> Result<MomentVector> {
    if k_max < 3 {
        return Err(Error::KOutOfRange { k_max, factors: d.factors() });
    }
    let sums: Vec<(i64, u64)> = row_sums(d).into_iter().map(|s| (s, 1)).collect();
    let m: Vec<BigInt> = (3..=k_max).map(|k| power_sum(&sums, k as u32)).collect();
    let big_m = if d.runs() <= NAIVE_MOMENT_RUN_LIMIT {
        let (rw, packed) = d.row_packed();
        let q = d.factors() as i64;
        let mut counts = vec![0u64; d.factors() + 1];
        for u in 0..d.runs() {
            for w in 0..d.runs() {
                let dist: u32 = packed[u * rw..(u + 1) * rw]
                    .iter()
                    .zip(&packed[w * rw..(w + 1) * rw])
                    .map(|(a, b)| (a ^ b).count_ones())
                    .sum();
                counts[dist as usize] += 1;
            }
        }
        let products: Vec<(i64, u64)> =
            counts.iter().enumerate().filter(|(_, &c)| c > 0).map(|(x, &c)| (q - 2 * x as i64, c)).collect();
        Some((3..=k_max).map(|k| power_sum(&products, k as u32)).collect::<Vec<_>>())
    } else {
        None
    };
    if let Some(bm) = &big_m {
        if d.is_known_group_invariant() {
            for (i, (mk, bmk)) in m.iter().zip(bm).enumerate() {
                if &(mk * d.runs()) != bmk {
                    return Err(Error::Inconsistent(format!(
                        "M_{} = {bmk} but N*m_{} = {}",
                        i + 3,
                        i + 3,
                        mk * d.runs()
                    )));
                }
            }
        }
    }
    Ok(MomentVector { k_min: 3, row_sum_moments: m, scalar_product_moments: big_m })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gray::{construct_even, construct_odd, GeneratorMatrix};
    use crate::sign_matrix::full_factorial;
    use crate::z4::parse_vectors;

    fn qc(n: usize, cols: &str) -> SignMatrix {
        construct_even(&GeneratorMatrix::new(n, parse_vectors(cols).unwrap()).unwrap()).unwrap()
    }

    /// Naive reference: every subset, products entry by entry.
    fn naive_wlp(d: &SignMatrix, k_max: usize) -> Vec<u128> {
        let rows = d.to_rows();
        let mut out = vec![0u128; k_max + 1];
        for k in 1..=k_max {
            for h in crate::combinatorics::Combinations::new(d.factors(), k) {
                let s: i64 = rows.iter().map(|r| h.iter().map(|&c| r[c] as i64).product::<i64>()).sum();
                out[k] += (s * s) as u128;
            }
        }
        out[0] = (d.runs() * d.runs()) as u128;
        out
    }

    #[test]
    fn aliasing_cases() {
        let d = SignMatrix::from_rows(&[vec![1, 1], vec![-1, -1], vec![1, 1], vec![-1, -1]]).unwrap();
        assert_eq!(aliasing_index(&d, &[0, 1]).unwrap(), Rational64::from_integer(1));
        let f = full_factorial(2);
        assert_eq!(aliasing_index(&f, &[0, 1]).unwrap(), Rational64::from_integer(0));
        assert!(aliasing_index(&f, &[]).is_err());
        assert!(aliasing_index(&f, &[2]).is_err());
        assert!(aliasing_index(&f, &[0, 0]).is_err());

        let d = qc(2, "10 11");
        for h in crate::combinatorics::Combinations::new(4, 3) {
            let rho = aliasing_index(&d, &h).unwrap();
            assert!(rho == Rational64::new(0, 1) || rho == Rational64::new(1, 2), "{rho}");
        }
    }

    #[test]
    fn direct_matches_naive() {
        for d in [qc(2, "10 11"), qc(2, "01 10 11 12"), full_factorial(4)] {
            let k = d.factors().min(4);
            let w = wlp_direct(&d, k).unwrap();
            let naive = naive_wlp(&d, k);
            for kk in 0..=k {
                assert_eq!(w.numerator(kk), &BigUint::from(naive[kk]), "k = {kk}");
            }
        }
        let f = full_factorial(2);
        let w = wlp_direct(&f, 2).unwrap();
        assert!(w.numerator(1).is_zero() && w.numerator(2).is_zero());
        assert!(wlp_direct(&f, 0).is_err());
        assert!(wlp_direct(&f, 3).is_err());
    }

    #[test]
    fn row_sums_cases() {
        assert_eq!(row_sums(&full_factorial(2)), vec![2, 0, 0, -2]);
        let d = qc(2, "01 10");
        assert_eq!(row_sums(&d)[0], 4);
        let g = GeneratorMatrix::new(2, parse_vectors("01 10").unwrap()).unwrap();
        assert_eq!(row_sums(&construct_odd(&g).unwrap())[0], 3);
    }

    #[test]
    fn distance_route_on_full_factorial() {
        let w = wlp_distance(&full_factorial(2)).unwrap();
        assert_eq!(w.term(0), Fraction::integer(1));
        assert!(w.term(1).is_zero() && w.term(2).is_zero());
    }

    #[test]
    fn distance_route_rejects_non_invariant() {
        let d = SignMatrix::from_rows(&[vec![1, 1, 1], vec![1, -1, -1], vec![-1, 1, -1], vec![-1, -1, -1]]).unwrap();
        assert!(!is_group_invariant(&d));
        assert!(matches!(wlp_distance(&d), Err(Error::NotGroupInvariant)));
    }

    #[test]
    fn krawtchouk_matches_generating_function() {
        // K_k(x; q) is the coefficient of z^k in (1 − z)^x (1 + z)^{q − x}
        let q = 9;
        for x in 0..=q {
            let mut poly = vec![BigInt::one()];
            for i in 0..q {
                let sign = if i < x { -1 } else { 1 };
                let mut next = vec![BigInt::zero(); poly.len() + 1];
                for (j, c) in poly.iter().enumerate() {
                    next[j] += c;
                    next[j + 1] += c * sign;
                }
                poly = next;
            }
            let mut t = Krawtchouk::new(q);
            for k in 0..=q {
                assert_eq!(t.value(k, x), poly[k], "k={k} x={x}");
            }
        }
    }

    #[test]
    fn resolution_cases() {
        assert_eq!(resolution(&full_factorial(3)), Resolution::Unbounded);
        let dup = SignMatrix::from_rows(&[vec![1, 1], vec![-1, -1], vec![1, 1], vec![-1, -1]]).unwrap();
        assert_eq!(resolution(&dup), Resolution::Finite(Rational64::from_integer(2)));
        let d = qc(2, "01 10 11");
        match resolution(&d) {
            Resolution::Finite(r) => assert!(r >= Rational64::new(7, 2)),
            Resolution::Unbounded => panic!(),
        }
    }

    #[test]
    fn projectivity_cases() {
        assert!(projectivity_at_least(&full_factorial(2), 2));
        let dup = SignMatrix::from_rows(&[vec![1, 1], vec![-1, -1], vec![1, 1], vec![-1, -1]]).unwrap();
        assert!(!projectivity_at_least(&dup, 2));
        assert!(projectivity_at_least(&qc(2, "01 10 11 12 13 21"), 3));
        assert!(!projectivity_at_least(&full_factorial(2), 3));
    }

    #[test]
    fn moment_cases() {
        let m = moments(&full_factorial(2), 4).unwrap();
        assert_eq!(m.m(3), &BigInt::from(0));
        let d = qc(2, "01");
        let m = moments(&d, 5).unwrap();
        let direct: i64 = row_sums(&d).iter().map(|s| s.pow(3)).sum();
        assert_eq!(m.m(3), &BigInt::from(direct));
        assert_eq!(m.big_m(3).unwrap(), &(m.m(3) * 16));
        assert!(moments(&d, 2).is_err());
    }

    #[test]
    fn power_sum_falls_back_to_big() {
        let v = [(1000i64, 3u64)];
        let expected = num_traits::pow(BigInt::from(1000), 20) * 3;
        assert_eq!(power_sum(&v, 20), expected);
    }

    #[test]
    fn json_round_trip() {
        let w = wlp_distance(&qc(2, "01 10 11")).unwrap();
        let s = serde_json::to_string(&w).unwrap();
        assert!(s.starts_with(r#"{"runs":16,"factors":6,"A":[[0,1],[0,1],"#), "{s}");
        let back: WordLengthPattern = serde_json::from_str(&s).unwrap();
        assert_eq!(back, w);
    }
}
