//! On-disk store of power matrices.
//!
//! One text file per (structure hash, n): the dimension, `n`, then the
//! row-major entries, one decimal integer per line.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;

#[derive(Clone, Debug)]
pub struct MatrixCache {
    dir: PathBuf,
}

impl MatrixCache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(|e| Error::Cache(format!("{}: {e}", dir.display())))?;
        Ok(MatrixCache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, hash: &str, n: usize) -> PathBuf {
        self.dir.join(format!("{hash}-{n}.mat"))
    }

    /// Returns the stored matrix, or `None` when absent or unreadable.
    pub fn load(&self, hash: &str, n: usize, dim: usize) -> Option<ExactMatrix> {
        let text = fs::read_to_string(self.path(hash, n)).ok()?;
        let mut lines = text.lines();
        let d: usize = lines.next()?.trim().parse().ok()?;
        let m: usize = lines.next()?.trim().parse().ok()?;
        if d != dim || m != n {
            return None;
        }
        let data: Option<Vec<BigInt>> = lines.map(|l| l.trim().parse().ok()).collect();
        ExactMatrix::from_int(dim, dim, data?).ok()
    }

    pub fn store(&self, hash: &str, n: usize, m: &ExactMatrix) -> Result<()> {
        let data = m
            .int_data()
            .ok_or_else(|| Error::Cache("only integer matrices are cached".into()))?;
        let mut body = format!("{}\n{n}\n", m.rows());
        for x in data {
            body.push_str(&x.to_string());
            body.push('\n');
        }
        let fin = self.path(hash, n);
        let tmp = self
            .dir
            .join(format!("{hash}-{n}.mat.{}.tmp", std::process::id()));
        let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", fin.display()));
        let mut f = fs::File::create(&tmp).map_err(io)?;
        f.write_all(body.as_bytes()).map_err(io)?;
        drop(f);
        fs::rename(&tmp, &fin).map_err(io)
    }
}
