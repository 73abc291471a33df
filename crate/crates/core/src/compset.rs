//! Complementary-set quantities: `σ̄_u`, `m̄_k`, `F₃`, the third-moment
//! bounds, and the combinatorial helpers used to analyse them (`α`, `β`,
//! even classes, regular-design row sums `λ_x`).
//!
//! Sums of the form `i^x + i^{−x}` are evaluated by table lookup on
//! `x mod 4`, giving `2, 0, −2, 0`.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gray::{construct, psi, GeneratorMatrix, Parity};
use crate::regsel::BinaryMatrix;
use crate::wlp::{power_sum, row_sums};
use crate::z4::{delta, ComplementSet, ReferenceKind, Z4Vector};

const COS: [i64; 4] = [2, 0, -2, 0];

/// `i^z + i^{−z}`.
pub fn cos_term(z: u8) -> i64 {
    COS[(z % 4) as usize]
}

/// `σ̄_u` for every `u ∈ Δ`, indexed by `u.index()`.
///
/// Even parity sums `i^{u′g} + i^{−u′g}` over all members. Odd parity
/// replaces the odd-role member's term by `ψ(u′g_{s+1})`.
pub fn sigma_bar(sbar: &ComplementSet, parity: Parity) -> Result<Vec<i64>> {
    let n = sbar.n;
    let odd = match parity {
        Parity::Even => None,
        Parity::Odd => Some(
            sbar.odd_role
                .as_ref()
                .ok_or_else(|| Error::InvalidSelection("odd parity needs a designated g_(s+1)".into()))?,
        ),
    };
    let members: Vec<&Z4Vector> = match odd {
        None => sbar.vectors.iter().collect(),
        Some(_) => sbar.paired_members().collect(),
    };
    Ok(delta(n)
        .map(|u| {
            let paired: i64 = members.iter().map(|g| cos_term(u.dot(g))).sum();
            paired + odd.map_or(0, |g| psi(u.dot(g) as i64) as i64)
        })
        .collect())
}

/// `δ_u` for every `u ∈ Δ`: true when all digits of `u` are even.
pub fn delta0_flags(n: usize) -> Vec<bool> {
    delta(n).map(|u| u.is_all_even()).collect()
}

/// Row sums `σ_u` of a design built from `generators`, without building it.
/// Used only when the generator list is too short for [`construct`].
fn sigma_from_formula(n: usize, generators: &[Z4Vector], parity: Parity) -> Vec<i64> {
    delta(n)
        .map(|u| {
            generators
                .iter()
                .enumerate()
                .map(|(j, g)| {
                    let z = u.dot(g) as i64;
                    let last = parity == Parity::Odd && j + 1 == generators.len();
                    psi(-z) as i64 + if last { 0 } else { psi(z) as i64 }
                })
                .sum()
        })
        .collect()
}

/// True iff `u` is one of the two runs exempted in the half-run setting:
/// first `n − 1` digits 0 and last digit 0 or 2.
fn is_null_like(u: &Z4Vector) -> bool {
    let d = u.digits();
    d[..d.len() - 1].iter().all(|&x| x == 0) && d[d.len() - 1].is_multiple_of(2)
}

/// Checks `σ_u = −(2ⁿδ_u + σ̄_u)` for nonnull `u`, using the row sums of the
/// design actually built from `S` (plus the odd-role column for odd
/// parity). At `u = 0` (and, for `Ω₀`, also at `u = 2eₙ`) it checks
/// `σ_u = 2s` or `2s + 1` instead.
pub fn lemma1_check(s: &[Z4Vector], sbar: &ComplementSet, parity: Parity) -> Result<bool> {
    let n = sbar.n;
    let reference = crate::z4::ReferenceSet::new(n, sbar.reference_kind)?;
    let mut union: HashSet<&Z4Vector> = HashSet::new();
    for g in s.iter().chain(&sbar.vectors) {
        if !reference.contains(g) || !union.insert(g) {
            return Err(Error::InvalidSelection(format!("{g} is outside the reference set or repeated")));
        }
    }
    if union.len() != reference.len() {
        return Err(Error::InvalidSelection(format!(
            "S and its complement cover {} of {} reference vectors",
            union.len(),
            reference.len()
        )));
    }
    let mut generators = s.to_vec();
    if parity == Parity::Odd {
        generators.push(
            sbar.odd_role
                .clone()
                .ok_or_else(|| Error::InvalidSelection("odd parity needs a designated g_(s+1)".into()))?,
        );
    }
    let enough = match parity {
        Parity::Even => !generators.is_empty(),
        Parity::Odd => generators.len() >= 2,
    };
    let sigma = if enough {
        let d = construct(&GeneratorMatrix::new(n, generators.clone())?, parity)?;
        row_sums(&d)
    } else {
        sigma_from_formula(n, &generators, parity)
    };
    let sbar_sums = sigma_bar(sbar, parity)?;
    let two_n = 1i64 << n;
    let null_value = 2 * s.len() as i64 + if parity == Parity::Odd { 1 } else { 0 };
    Ok(delta(n).enumerate().all(|(i, u)| {
        let exempt = u.is_zero() || (sbar.reference_kind == ReferenceKind::LastEven && is_null_like(&u));
        if exempt {
            sigma[i] == null_value
        } else {
            let d0 = if u.is_all_even() { two_n } else { 0 };
            sigma[i] == -(d0 + sbar_sums[i])
        }
    }))
}

/// Everything about one complement needed by the third-moment analysis.
#[derive(Clone, Debug)]
pub struct ComplementProfile {
    pub sbar: ComplementSet,
    pub parity: Parity,
    /// `σ̄_u`, or `σ̄_odd,u` for odd parity, indexed by `u.index()`.
    pub sigma_bar: Vec<i64>,
    pub delta0: Vec<bool>,
    pub even_classes: Vec<Vec<Z4Vector>>,
}

impl ComplementProfile {
    pub fn new(sbar: &ComplementSet, parity: Parity) -> Result<Self> {
        Ok(ComplementProfile {
            sbar: sbar.clone(),
            parity,
            sigma_bar: sigma_bar(sbar, parity)?,
            delta0: delta0_flags(sbar.n),
            even_classes: even_classes(&sbar.vectors),
        })
    }

    pub fn n(&self) -> usize {
        self.sbar.n
    }

    pub fn deficiency(&self) -> usize {
        self.sbar.len()
    }

    /// Class sizes `f₁, …, f_t`.
    pub fn class_sizes(&self) -> Vec<usize> {
        self.even_classes.iter().map(Vec::len).collect()
    }

    /// `Σ_{u∈Δ₀} σ̄_u²`.
    pub fn sum_sq_delta0(&self) -> i128 {
        self.sigma_bar.iter().zip(&self.delta0).filter(|(_, &d)| d).map(|(&s, _)| (s as i128).pow(2)).sum()
    }

    /// `Σ_{u∈Δ} σ̄_u³`.
    pub fn sum_cube(&self) -> i128 {
        self.sigma_bar.iter().map(|&s| (s as i128).pow(3)).sum()
    }

    /// `F₃ = 3·2ⁿ·Σ_{Δ₀} σ̄_u² + Σ_Δ σ̄_u³` (odd analogue for odd parity).
    pub fn f3(&self) -> i128 {
        3 * (1i128 << self.n()) * self.sum_sq_delta0() + self.sum_cube()
    }

    /// `m̄_k = Σ_u (2ⁿδ_u + σ̄_u)^k` for `k = 3..=k_max`.
    pub fn m_bar(&self, k_max: usize) -> Vec<BigInt> {
        let two_n = 1i64 << self.n();
        let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
        for (&s, &d) in self.sigma_bar.iter().zip(&self.delta0) {
            *counts.entry(s + if d { two_n } else { 0 }).or_default() += 1;
        }
        let values: Vec<(i64, u64)> = counts.into_iter().collect();
        (3..=k_max).map(|k| power_sum(&values, k as u32)).collect()
    }

    /// Diagnostic dump: `σ̄` keyed by digit string, the class partition,
    /// `F₃`, the bound and the gap between them.
    pub fn diagnostic_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Dump<'a> {
            n: usize,
            parity: Parity,
            complement: &'a ComplementSet,
            sigma_bar: BTreeMap<String, i64>,
            even_classes: &'a [Vec<Z4Vector>],
            f3: String,
            bound: String,
            gap: String,
        }
        let f3 = self.f3();
        let bound = theorem_bound(self.n(), self.deficiency(), self.parity);
        let dump = Dump {
            n: self.n(),
            parity: self.parity,
            complement: &self.sbar,
            sigma_bar: delta(self.n()).zip(&self.sigma_bar).map(|(u, &s)| (u.to_string(), s)).collect(),
            even_classes: &self.even_classes,
            f3: f3.to_string(),
            bound: bound.to_string(),
            gap: (bound - f3).to_string(),
        };
        let mut v = serde_json::to_value(dump).expect("profile serializes");
        // integers as JSON numbers, however large
        for key in ["f3", "bound", "gap"] {
            let s = v[key].as_str().unwrap().to_owned();
            v[key] = serde_json::Value::Number(s.parse().expect("decimal integer"));
        }
        v
    }
}

/// `m̄_k` for `k = 3..=k_max`.
pub fn m_bar(profile: &ComplementProfile, k_max: usize) -> Vec<BigInt> {
    profile.m_bar(k_max)
}

/// `F₃` of a profile.
pub fn f3(profile: &ComplementProfile) -> i128 {
    profile.f3()
}

/// Upper bound on `F₃`: `3·2^{2n+2}·def²` for even factor counts and
/// `3·2^{2n}·(2·def − 1)²` for odd ones. Zero when the complement is empty.
pub fn theorem_bound(n: usize, deficiency: usize, parity: Parity) -> i128 {
    if deficiency == 0 {
        return 0;
    }
    let d = deficiency as i128;
    match parity {
        Parity::Even => 3 * (1i128 << (2 * n + 2)) * d * d,
        Parity::Odd => 3 * (1i128 << (2 * n)) * (2 * d - 1).pow(2),
    }
}

/// `α(g) = 1` iff `g ≡ 0 (mod 4)`.
pub fn alpha(g: &[i64]) -> u8 {
    g.iter().all(|x| x.rem_euclid(4) == 0) as u8
}

/// `β_jkh = α(g_j+g_k+g_h) + α(g_j+g_k−g_h) + α(g_j−g_k+g_h) + α(g_j−g_k−g_h)`.
pub fn beta(gj: &Z4Vector, gk: &Z4Vector, gh: &Z4Vector) -> Result<u8> {
    if gj.len() != gk.len() || gj.len() != gh.len() {
        return Err(Error::LengthMismatch { left: gj.len(), right: gk.len().max(gh.len()) });
    }
    let combo = |a: i64, b: i64| -> Vec<i64> {
        (0..gj.len()).map(|i| gj.digits()[i] as i64 + a * gk.digits()[i] as i64 + b * gh.digits()[i] as i64).collect()
    };
    Ok(alpha(&combo(1, 1)) + alpha(&combo(1, -1)) + alpha(&combo(-1, 1)) + alpha(&combo(-1, -1)))
}

/// `Σ⁽³⁾ β_jkh` over all ordered triples of members (repeats allowed).
pub fn beta_triple_sum(vectors: &[Z4Vector]) -> Result<u64> {
    let mut total = 0u64;
    for a in vectors {
        for b in vectors {
            for c in vectors {
                total += beta(a, b, c)? as u64;
            }
        }
    }
    Ok(total)
}

/// Partition into classes whose pairwise sums are all-even (equivalently,
/// one parity pattern per class), in order of first appearance.
pub fn even_classes(vectors: &[Z4Vector]) -> Vec<Vec<Z4Vector>> {
    let mut keys: Vec<u64> = Vec::new();
    let mut classes: Vec<Vec<Z4Vector>> = Vec::new();
    for g in vectors {
        let p = g.parity_mask();
        match keys.iter().position(|&k| k == p) {
            Some(i) => classes[i].push(g.clone()),
            None => {
                keys.push(p);
                classes.push(vec![g.clone()]);
            }
        }
    }
    classes
}

/// `λ_x = Σ_j (−1)^{x′b_j}` for every binary `x` of length `n − 1`, `x`
/// in lexicographic order.
pub fn lambda_row_sums(b: &BinaryMatrix) -> Vec<i64> {
    (0..1usize << b.rows())
        .map(|i| {
            let x = b.x_mask(i);
            b.masks().iter().map(|&m| if (x & m).count_ones().is_multiple_of(2) { 1 } else { -1 }).sum()
        })
        .collect()
}
