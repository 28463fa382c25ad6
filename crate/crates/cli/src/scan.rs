//! Census scans over ranges of moduli: a rayon pool computes, results are
//! merged in ascending `(matrix, n)` order, and the cache file is appended by
//! the calling thread only.

use std::collections::{BTreeMap, HashMap};
use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use catlattice::lattice::orbit_census_with;
use catlattice::{euler_product, Budget, Mat2Z};

use crate::CliError;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Accepts `a..b` and `a..=b`, both inclusive.
pub fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: u64 = lo.trim().parse().map_err(|e| format!("bad range start: {e}"))?;
    let hi: u64 = hi.trim().parse().map_err(|e| format!("bad range end: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok((lo, hi))
}

/// One cache line.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScanRecord {
    pub matrix: String,
    pub n: u64,
    pub census: Value,
    pub timestamp: u64,
    pub version: String,
}

impl ScanRecord {
    /// Stdout form. The timestamp stays in the cache so output is
    /// reproducible, and `Z_n` is expanded here from the cycle counts so cached
    /// and fresh records print identically.
    pub fn output_line(&self, with_matrix: bool, poly_limit: u64) -> String {
        let mut census = self.census.clone();
        let cycles = cycle_counts(&census);
        let degree: u64 = cycles.iter().map(|(l, k)| l * k).sum();
        census["zn_poly"] = if degree <= poly_limit {
            catlattice::json::coeff_strings(&euler_product(&cycles))
        } else {
            Value::Null
        };
        if with_matrix {
            serde_json::json!({ "matrix": self.matrix, "n": self.n, "census": census }).to_string()
        } else {
            census.to_string()
        }
    }
}

fn cycle_counts(census: &Value) -> BTreeMap<u64, u64> {
    census["cycles"]
        .as_object()
        .map(|o| {
            o.iter()
                .filter_map(|(l, k)| Some((l.parse().ok()?, k.as_u64()?)))
                .collect()
        })
        .unwrap_or_default()
}

pub struct ScanOptions {
    pub moduli: Vec<u64>,
    pub jobs: usize,
    pub cache: Option<PathBuf>,
    pub budget: Budget,
}

type Key = (String, u64);

fn load_cache(path: &PathBuf) -> Result<HashMap<Key, ScanRecord>, CliError> {
    let mut out = HashMap::new();
    let file = match std::fs::File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(out),
        Err(e) => return Err(CliError::Io(format!("cannot read cache {}: {e}", path.display()))),
    };
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| CliError::Io(format!("cache {}: {e}", path.display())))?;
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<ScanRecord>(&line) {
            // records from other versions are stale and ignored
            Ok(r) if r.version == VERSION => {
                out.entry((r.matrix.clone(), r.n)).or_insert(r);
            }
            Ok(_) => {}
            Err(e) => eprintln!("catlattice: skipping malformed cache line {}: {e}", i + 1),
        }
    }
    Ok(out)
}

pub fn run(matrices: &[Mat2Z], opts: &ScanOptions) -> Result<Vec<ScanRecord>, CliError> {
    for &n in &opts.moduli {
        opts.budget.check(n)?;
    }
    let cached = match &opts.cache {
        Some(p) => load_cache(p)?,
        None => HashMap::new(),
    };
    let jobs: Vec<(usize, Mat2Z, u64)> = matrices
        .iter()
        .enumerate()
        .flat_map(|(i, m)| opts.moduli.iter().map(move |&n| (i, m.clone(), n)))
        .collect();
    let missing: Vec<&(usize, Mat2Z, u64)> =
        jobs.iter().filter(|(_, m, n)| !cached.contains_key(&(m.to_string(), *n))).collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| CliError::Io(format!("thread pool: {e}")))?;
    let timestamp = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
    let fresh: Vec<ScanRecord> = pool.install(|| {
        missing
            .par_iter()
            .map(|(_, m, n)| {
                let c = orbit_census_with(m, *n, opts.budget)?;
                Ok(ScanRecord {
                    matrix: m.to_string(),
                    n: *n,
                    census: c.to_json(0),
                    timestamp,
                    version: VERSION.to_string(),
                })
            })
            .collect::<Result<Vec<_>, catlattice::Error>>()
    })?;

    if let Some(path) = &opts.cache {
        if !fresh.is_empty() {
            let mut f = OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .map_err(|e| CliError::Io(format!("cannot write cache {}: {e}", path.display())))?;
            for r in &fresh {
                let line = serde_json::to_string(r).expect("record serialises");
                writeln!(f, "{line}").map_err(|e| CliError::Io(format!("cache write: {e}")))?;
            }
        }
    }

    let mut fresh: HashMap<Key, ScanRecord> =
        fresh.into_iter().map(|r| ((r.matrix.clone(), r.n), r)).collect();
    let mut cached = cached;
    Ok(jobs
        .iter()
        .map(|(_, m, n)| {
            let key = (m.to_string(), *n);
            let rec = fresh.remove(&key).or_else(|| cached.remove(&key));
            // the same (matrix, n) twice on the command line
            rec.unwrap_or_else(|| {
                ScanRecord {
                    matrix: key.0.clone(),
                    n: *n,
                    census: orbit_census_with(m, *n, opts.budget)
                        .map(|c| c.to_json(0))
                        .unwrap_or(Value::Null),
                    timestamp,
                    version: VERSION.to_string(),
                }
            })
        })
        .collect())
}

pub fn to_csv(records: &[ScanRecord], with_matrix: bool) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["n", "ord", "per", "invertible", "periodic_points", "cycles"];
    if with_matrix {
        header.insert(0, "matrix");
    }
    let io = |e: csv::Error| CliError::Io(format!("csv: {e}"));
    w.write_record(&header).map_err(io)?;
    for r in records {
        let c = &r.census;
        let lengths: Vec<(u64, u64)> = cycle_counts(c).into_iter().collect();
        let periodic: u64 = lengths.iter().map(|(l, k)| l * k).sum();
        let cycle_text = lengths.iter().map(|(l, k)| format!("{l}:{k}")).collect::<Vec<_>>().join(" ");
        let mut row = vec![
            r.n.to_string(),
            c["ord"].to_string(),
            c["per"].to_string(),
            c["invertible"].to_string(),
            periodic.to_string(),
            cycle_text,
        ];
        if with_matrix {
            row.insert(0, r.matrix.clone());
        }
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| CliError::Io(format!("csv: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..5"), Ok((2, 5)));
        assert_eq!(parse_range("2..=5"), Ok((2, 5)));
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("5").is_err());
    }
}
