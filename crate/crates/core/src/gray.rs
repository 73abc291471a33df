//! Gray-map binary images of quaternary linear codes.
//!
//! Row `u` of the design built from `G = [g₁ ⋯ g_s]` is
//! `(ψ(−u′g₁), ψ(u′g₁), …, ψ(−u′g_s), ψ(u′g_s))`, with `ψ` mapping
//! `0,1,2,3 ↦ +1,−1,−1,+1`. Odd factor counts drop the second column of the
//! last generator; half-run designs keep the rows with `uₙ ∈ {0, 1}`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sign_matrix::{RowIndex, SignMatrix};
use crate::z4::{is_valid_column, Z4Vector};

const PSI: [i8; 4] = [1, -1, -1, 1];

/// `ψ(z) = (iᶻ + i³⁻ᶻ)/(1 − i)`, which is always real and ±1.
pub fn psi(z: i64) -> i8 {
    PSI[z.rem_euclid(4) as usize]
}

/// The Gray image of one Z4 symbol: `0→(1,1), 1→(1,−1), 2→(−1,−1), 3→(−1,1)`.
pub fn gray_pair(z: i64) -> Result<(i8, i8)> {
    if !(0..4).contains(&z) {
        return Err(Error::InvalidDigits(z.to_string()));
    }
    Ok((psi(-z), psi(z)))
}

/// Whether a design has `2s` columns or `2s + 1` (last generator
/// contributes only its first Gray column).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(q: usize) -> Parity {
        if q.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorMatrix {
    pub n: usize,
    pub columns: Vec<Z4Vector>,
}

impl GeneratorMatrix {
    /// Checks that every column is admissible and no two are Z4 multiples.
    pub fn new(n: usize, columns: Vec<Z4Vector>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDimension(n));
        }
        let mut seen = HashSet::with_capacity(columns.len());
        for g in &columns {
            if g.len() != n {
                return Err(Error::LengthMismatch { left: g.len(), right: n });
            }
            if !is_valid_column(g) {
                return Err(Error::InvalidGenerator(format!(
                    "column {g} has no odd digit or its first odd digit is not 1"
                )));
            }
            // admissible columns are Z4 multiples of each other only when equal
            if !seen.insert(g) {
                return Err(Error::InvalidGenerator(format!("column {g} repeated")));
            }
        }
        Ok(GeneratorMatrix { n, columns })
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// True when the last row (over all columns) has only even entries.
    pub fn last_row_even(&self) -> bool {
        self.columns.iter().all(|g| g.last() % 2 == 0)
    }
}

fn build(g: &GeneratorMatrix, parity: Parity) -> SignMatrix {
    let n = g.n;
    let runs = 1usize << (2 * n);
    let s = g.columns.len();
    let factors = match parity {
        Parity::Even => 2 * s,
        Parity::Odd => 2 * s - 1,
    };
    let us: Vec<Z4Vector> = crate::z4::delta(n).collect();
    let mut m = SignMatrix::ones(runs, factors);
    for (j, col) in g.columns.iter().enumerate() {
        for (r, u) in us.iter().enumerate() {
            let z = u.dot(col) as i64;
            if psi(-z) == -1 {
                m.set_minus(r, 2 * j);
            }
            if 2 * j + 1 < factors && psi(z) == -1 {
                m.set_minus(r, 2 * j + 1);
            }
        }
    }
    m.with_row_index(RowIndex::Full { n }, true)
}

/// `2^{2n}`-run design in `2s` factors; `g_j` gives the adjacent column pair
/// `(ψ(−u′g_j), ψ(u′g_j))`.
pub fn construct_even(g: &GeneratorMatrix) -> Result<SignMatrix> {
    if g.is_empty() {
        return Err(Error::InvalidGenerator("need at least one column".into()));
    }
    Ok(build(g, Parity::Even))
}

/// `2^{2n}`-run design in `2s + 1` factors; the last column of `G` plays
/// `g_{s+1}` and contributes only `ψ(−u′g_{s+1})`.
pub fn construct_odd(g: &GeneratorMatrix) -> Result<SignMatrix> {
    if g.len() < 2 {
        return Err(Error::InvalidGenerator("odd construction needs s + 1 >= 2 columns".into()));
    }
    Ok(build(g, Parity::Odd))
}

pub fn construct(g: &GeneratorMatrix, parity: Parity) -> Result<SignMatrix> {
    match parity {
        Parity::Even => construct_even(g),
        Parity::Odd => construct_odd(g),
    }
}

/// Keeps the runs with `uₙ ∈ {0, 1}` after checking that run `u` and run
/// `u + 2eₙ` coincide everywhere.
pub fn halve(d: &SignMatrix, g: &GeneratorMatrix) -> Result<SignMatrix> {
    if !g.last_row_even() {
        return Err(Error::NotHalvable("last row of the generator matrix has an odd entry".into()));
    }
    let n = match d.row_index() {
        RowIndex::Full { n } if n == g.n => n,
        other => {
            return Err(Error::NotHalvable(format!(
                "design rows must be indexed by all of Z4^{}, found {other:?}",
                g.n
            )))
        }
    };
    if d.factors() != 2 * g.len() && d.factors() + 1 != 2 * g.len() {
        return Err(Error::NotHalvable(format!(
            "{} factors do not match a generator with {} columns",
            d.factors(),
            g.len()
        )));
    }
    let runs = d.runs();
    for c in 0..d.factors() {
        for r in (0..runs).filter(|r| r % 4 >= 2) {
            if d.get(r, c) != d.get(r - 2, c) {
                return Err(Error::Inconsistent(format!(
                    "halves differ at run {} factor {}",
                    Z4Vector::from_index(n, r),
                    c + 1
                )));
            }
        }
    }
    let keep: Vec<usize> = (0..runs).filter(|r| r % 4 < 2).collect();
    Ok(d.select_rows(&keep).with_row_index(RowIndex::Half { n }, true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::z4::{enumerate_omega, parse_vectors};

    fn gm(n: usize, cols: &str) -> GeneratorMatrix {
        GeneratorMatrix::new(n, parse_vectors(cols).unwrap()).unwrap()
    }

    #[test]
    fn psi_values() {
        assert_eq!(psi(0), 1);
        assert_eq!(psi(1), -1);
        assert_eq!(psi(2), -1);
        assert_eq!(psi(3), 1);
        assert_eq!(psi(-1), 1);
        assert_eq!(psi(7), 1);
    }

    #[test]
    fn gray_map_table() {
        assert_eq!(gray_pair(0).unwrap(), (1, 1));
        assert_eq!(gray_pair(1).unwrap(), (1, -1));
        assert_eq!(gray_pair(2).unwrap(), (-1, -1));
        assert_eq!(gray_pair(3).unwrap(), (-1, 1));
        assert!(gray_pair(4).is_err());
        for z in 0..4 {
            assert_eq!(gray_pair(z).unwrap(), (psi(-z), psi(z)));
        }
    }

    #[test]
    fn generator_validation() {
        assert!(GeneratorMatrix::new(2, parse_vectors("01 02").unwrap()).is_err());
        assert!(GeneratorMatrix::new(2, parse_vectors("01 01").unwrap()).is_err());
        assert!(GeneratorMatrix::new(2, parse_vectors("30").unwrap()).is_err());
        assert!(GeneratorMatrix::new(2, parse_vectors("010").unwrap()).is_err());
    }

    #[test]
    fn even_construction_rows() {
        let d = construct_even(&gm(2, "01")).unwrap();
        assert_eq!((d.runs(), d.factors()), (16, 2));
        let r0 = d.row_of(&"00".parse().unwrap()).unwrap();
        assert_eq!(d.row(r0), vec![1, 1]);
        let r1 = d.row_of(&"01".parse().unwrap()).unwrap();
        assert_eq!(d.row(r1), vec![1, -1]);
        assert!(construct_even(&GeneratorMatrix { n: 2, columns: vec![] }).is_err());
    }

    #[test]
    fn odd_construction_rows() {
        let g = gm(2, "01 10");
        let d = construct_odd(&g).unwrap();
        assert_eq!((d.runs(), d.factors()), (16, 3));
        assert_eq!(d.row(d.row_of(&"00".parse().unwrap()).unwrap()), vec![1, 1, 1]);
        let row = d.row(d.row_of(&"10".parse().unwrap()).unwrap());
        assert_eq!(row[2], psi(-1));
        assert_eq!(row[2], 1);
        assert!(construct_odd(&gm(2, "01")).is_err());
    }

    #[test]
    fn halving() {
        let g = gm(2, "10 12");
        let d = construct_even(&g).unwrap();
        let h = halve(&d, &g).unwrap();
        assert_eq!((h.runs(), h.factors()), (8, 4));
        assert!(matches!(halve(&construct_even(&gm(2, "01")).unwrap(), &gm(2, "01")), Err(Error::NotHalvable(_))));
        let odd = construct_odd(&g).unwrap();
        assert_eq!(halve(&odd, &g).unwrap().factors(), 3);
    }

    #[test]
    fn halving_detects_mismatched_rows() {
        // a design whose rows are not paired: the generator claims even last row
        // but the matrix comes from a different generator
        let g_even = gm(2, "10");
        let d = construct_even(&gm(2, "11")).unwrap();
        assert!(matches!(halve(&d, &g_even), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn full_omega_design_shape() {
        let omega = enumerate_omega(2).unwrap();
        let d = construct_even(&GeneratorMatrix::new(2, omega.vectors).unwrap()).unwrap();
        assert_eq!((d.runs(), d.factors()), (16, 12));
    }
}
