//! Design records on disk: one JSON record and one CSV matrix per design,
//! named `qc_n{n}_N{runs}_q{q}.json` / `.csv`, each written atomically.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gray::{construct, halve, GeneratorMatrix, Parity};
use crate::regsel::{BinaryMatrix, MaDesign};
use crate::sign_matrix::SignMatrix;
use crate::wlp::{resolution, wlp_distance, Resolution, WordLengthPattern};
use crate::z4::Z4Vector;

/// Everything needed to rebuild a design and check it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignRecord {
    pub n: usize,
    pub runs: usize,
    pub factors: usize,
    pub parity: Parity,
    pub halved: bool,
    /// Generator columns in design order; for odd counts the last one
    /// contributes a single column.
    pub generator: Vec<Z4Vector>,
    pub complement: Vec<Z4Vector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<BinaryMatrix>,
    pub wlp: WordLengthPattern,
    pub resolution: Resolution,
    pub version: String,
}

impl DesignRecord {
    /// Record for a pipeline design. Computes its resolution.
    pub fn from_design(ma: &MaDesign) -> Self {
        DesignRecord {
            n: ma.n,
            runs: ma.runs,
            factors: ma.factors,
            parity: ma.parity,
            halved: ma.halved(),
            generator: ma.generator.columns.clone(),
            complement: ma.complement.vectors.clone(),
            b: ma.b().cloned(),
            wlp: ma.wlp.clone(),
            resolution: resolution(&ma.design),
            version: env!("CARGO_PKG_VERSION").to_owned(),
        }
    }

    /// Rebuilds the design from the stored generator.
    pub fn rebuild(&self) -> Result<SignMatrix> {
        let g = GeneratorMatrix::new(self.n, self.generator.clone())?;
        let full = construct(&g, self.parity)?;
        let d = if self.halved { halve(&full, &g)? } else { full };
        if d.runs() != self.runs || d.factors() != self.factors {
            return Err(Error::Inconsistent(format!(
                "stored shape {}x{} but generator gives {}x{}",
                self.runs,
                self.factors,
                d.runs(),
                d.factors()
            )));
        }
        Ok(d)
    }

    /// Fails unless the WLP recomputed from the generator equals the stored one.
    pub fn verify(&self) -> Result<()> {
        let w = wlp_distance(&self.rebuild()?)?;
        if w != self.wlp {
            return Err(Error::Inconsistent("stored WLP differs from the recomputed one".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Base file name for a design.
pub fn file_stem(n: usize, runs: usize, q: usize) -> String {
    format!("qc_n{n}_N{runs}_q{q}")
}

fn write_atomic(path: &Path, write: impl FnOnce(&mut BufWriter<&File>) -> Result<()>) -> Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let tmp = tempfile::NamedTempFile::new_in(dir)?;
    {
        let mut w = BufWriter::new(tmp.as_file());
        write(&mut w)?;
        w.flush()?;
    }
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

/// Writes `<stem>.json` and `<stem>.csv` into `dir` (created if missing).
pub fn write_design(dir: &Path, ma: &MaDesign, header: bool) -> Result<(PathBuf, PathBuf, DesignRecord)> {
    std::fs::create_dir_all(dir)?;
    let stem = file_stem(ma.n, ma.runs, ma.factors);
    let record = DesignRecord::from_design(ma);
    let json_path = dir.join(format!("{stem}.json"));
    let csv_path = dir.join(format!("{stem}.csv"));
    let text = record.to_json()?;
    write_atomic(&json_path, |w| Ok(w.write_all(text.as_bytes())?))?;
    write_atomic(&csv_path, |w| ma.design.write_csv(w, header))?;
    Ok((json_path, csv_path, record))
}

pub fn read_record(path: &Path) -> Result<DesignRecord> {
    DesignRecord::from_json(&std::fs::read_to_string(path)?)
}

pub fn read_design_csv(path: &Path) -> Result<SignMatrix> {
    SignMatrix::read_csv(BufReader::new(File::open(path)?))
}
