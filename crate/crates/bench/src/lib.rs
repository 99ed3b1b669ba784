//! Shared inputs for the benchmarks.

use std::sync::Arc;

use hopfpow_core::group::{alternating_group, symmetric_group};
use hopfpow_core::hopf::HopfAlgebraData;
use hopfpow_core::matched_pair::{double_pair, from_factorizable_symmetric};
use hopfpow_core::{PowerMatrixFamily, Result};

/// Small and mid-sized algebras, named as on the command line.
pub fn algebras() -> Result<Vec<(&'static str, Arc<HopfAlgebraData>)>> {
    let s3 = symmetric_group(3)?;
    let s4 = symmetric_group(4)?;
    let a4 = alternating_group(4)?;
    Ok(vec![
        ("group:S4", Arc::new(HopfAlgebraData::group_algebra(&s4)?)),
        (
            "double:S3",
            Arc::new(HopfAlgebraData::bismash(&double_pair(&s3)?)?),
        ),
        (
            "bismash:S4",
            Arc::new(HopfAlgebraData::bismash(&from_factorizable_symmetric(4)?)?),
        ),
        (
            "double:A4",
            Arc::new(HopfAlgebraData::bismash(&double_pair(&a4)?)?),
        ),
    ])
}

/// A fresh family, so nothing is memoized between iterations.
pub fn family(h: &Arc<HopfAlgebraData>) -> PowerMatrixFamily {
    PowerMatrixFamily::new(h.clone())
}
