//! Deterministic artifact emission: CSV data files (17 significant digits),
//! JSON summaries, and the run manifest with a content hash.

use crate::asymptotics::{EffectiveProfileSeries, PhaseDiagnostics};
use crate::real::japanese;
use crate::solver::RunRecord;
use crate::{Result, Scalar};
use sha2::{Digest, Sha256};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

/// Every float is emitted with 17 significant digits so that re-parsing is
/// lossless and hashes are reproducible.
pub fn fmt_float(x: Scalar) -> String {
    format!("{x:.16e}")
}

pub struct Emitter {
    dir: PathBuf,
    pub files: Vec<PathBuf>,
}

impl Emitter {
    pub fn new(dir: &Path) -> Result<Self> {
        std::fs::create_dir_all(dir)?;
        Ok(Emitter {
            dir: dir.to_path_buf(),
            files: Vec::new(),
        })
    }

    pub fn write(&mut self, name: &str, contents: &str) -> Result<PathBuf> {
        let path = self.dir.join(name);
        std::fs::write(&path, contents)?;
        self.files.push(path.clone());
        Ok(path)
    }

    /// SHA-256 over the emitted data files, in emission order.
    pub fn content_hash(&self) -> Result<String> {
        let mut hasher = Sha256::new();
        for f in &self.files {
            hasher.update(std::fs::read(f)?);
        }
        Ok(hex_string(&hasher.finalize()))
    }
}

fn hex_string(bytes: &[u8]) -> String {
    let mut s = String::with_capacity(2 * bytes.len());
    for b in bytes {
        let _ = write!(s, "{b:02x}");
    }
    s
}

/// Time-series CSV for a run record (modulation columns blank when absent).
pub fn timeseries_csv(record: &RunRecord) -> String {
    let mut out = String::from(
        "t,energy,momentum,invariant,sup_u1,sup_u2,sup_du1,boundary_mass,ell,q,q_dot,ell_dot,defect_q,defect_ell\n",
    );
    let opt = |v: Option<Scalar>| v.map(fmt_float).unwrap_or_default();
    for s in &record.samples {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            fmt_float(s.t),
            fmt_float(s.energy),
            fmt_float(s.momentum),
            fmt_float(s.invariant),
            fmt_float(s.sup_u1),
            fmt_float(s.sup_u2),
            fmt_float(s.sup_du1),
            fmt_float(s.boundary_mass),
            opt(s.ell),
            opt(s.q),
            opt(s.q_dot),
            opt(s.ell_dot),
            opt(s.defect_q),
            opt(s.defect_ell),
        );
    }
    out
}

/// Spectral snapshot CSV: ξ, Re g, Im g (sorted by ξ).
pub fn spectral_csv(g: &crate::dft::SpectralFunction) -> String {
    let mut out = String::from("xi,re_g,im_g\n");
    for (xi, v) in g.sorted() {
        let _ = writeln!(out, "{},{},{}", fmt_float(xi), fmt_float(v.re), fmt_float(v.im));
    }
    out
}

/// Combined profile diagnostics: t, ξ, |g^#|, arg g^#, Λ, θ over a band.
pub fn profile_diagnostics_csv(
    series: &EffectiveProfileSeries,
    diags: &PhaseDiagnostics,
    band: impl Fn(Scalar) -> bool,
    times: &[Scalar],
) -> String {
    let mut out = String::from("t,xi,abs_g,arg_g,weighted_abs,lambda,theta\n");
    for &t in times {
        let i = series
            .times
            .iter()
            .enumerate()
            .min_by(|a, b| (a.1 - t).abs().partial_cmp(&(b.1 - t).abs()).unwrap())
            .map(|(i, _)| i)
            .unwrap();
        let g = &series.profiles[i];
        for (k, &xi) in g.freqs().iter().enumerate() {
            if !band(xi) {
                continue;
            }
            let v = g.values()[k];
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                fmt_float(series.times[i]),
                fmt_float(xi),
                fmt_float(v.norm()),
                fmt_float(v.arg()),
                fmt_float(japanese(xi).powf(1.5) * v.norm()),
                fmt_float(diags.lambda[i][k]),
                fmt_float(diags.theta[i]),
            );
        }
    }
    out
}

/// Aggregate sweep table.
pub fn aggregate_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&r.join(","));
        out.push('\n');
    }
    out
}
