//! Turns a parsed spec into algebras and power-matrix families.

use std::path::PathBuf;
use std::sync::Arc;

use hopfpow_core::group::{alternating_group, cyclic_group, symmetric_group, FiniteGroup};
use hopfpow_core::hopf::{HopfAlgebraData, MatrixCache};
use hopfpow_core::matched_pair::{
    double_pair, from_factorizable_alternating, from_factorizable_symmetric, MatchedPair,
};
use hopfpow_core::{PowerMatrixFamily, Result};

use crate::spec::{AlgebraSpec, GroupFamily, GroupName};

/// Environment variable naming the cache directory when `--cache-dir` is absent.
pub const CACHE_ENV: &str = "HOPFPOW_CACHE_DIR";

/// A built algebra together with what the checks need to know about it.
pub struct Built {
    pub spec: AlgebraSpec,
    pub family: Arc<PowerMatrixFamily>,
    /// The underlying group for `group:`, `dualgroup:` and `double:`.
    pub group: Option<FiniteGroup>,
    /// The matched pair behind `double:` and `bismash:`.
    pub pair: Option<MatchedPair>,
    /// Factors of a tensor product.
    pub factors: Option<(Arc<Built>, Arc<Built>)>,
}

impl Built {
    pub fn algebra(&self) -> &HopfAlgebraData {
        self.family.algebra()
    }

    pub fn dim(&self) -> usize {
        self.family.dim()
    }
}

pub fn make_group(g: &GroupName) -> Result<FiniteGroup> {
    match g.family {
        GroupFamily::Symmetric => symmetric_group(g.k),
        GroupFamily::Alternating => alternating_group(g.k),
        GroupFamily::Cyclic => cyclic_group(g.k),
    }
}

/// Resolves the cache directory from the flag, then the environment.
pub fn cache_dir(flag: Option<PathBuf>) -> Option<PathBuf> {
    flag.or_else(|| {
        std::env::var_os(CACHE_ENV)
            .filter(|v| !v.is_empty())
            .map(PathBuf::from)
    })
}

#[derive(Clone, Debug, Default)]
pub struct Builder {
    cache: Option<MatrixCache>,
}

impl Builder {
    pub fn new(cache_dir: Option<PathBuf>) -> Result<Self> {
        let cache = cache_dir.map(MatrixCache::new).transpose()?;
        Ok(Builder { cache })
    }

    fn family(&self, h: HopfAlgebraData) -> Arc<PowerMatrixFamily> {
        Arc::new(PowerMatrixFamily::new(h).with_cache(self.cache.clone()))
    }

    pub fn build(&self, spec: &AlgebraSpec) -> Result<Built> {
        let leaf = |h: HopfAlgebraData, group: Option<FiniteGroup>| Built {
            spec: spec.clone(),
            family: self.family(h),
            group,
            pair: None,
            factors: None,
        };
        Ok(match spec {
            AlgebraSpec::Group(g) => {
                let g = make_group(g)?;
                leaf(HopfAlgebraData::group_algebra(&g)?, Some(g))
            }
            AlgebraSpec::DualGroup(g) => {
                let g = make_group(g)?;
                leaf(HopfAlgebraData::dual_group_algebra(&g)?, Some(g))
            }
            AlgebraSpec::Double(g) => {
                let g = make_group(g)?;
                let mp = double_pair(&g)?;
                Built {
                    pair: Some(mp.clone()),
                    ..leaf(HopfAlgebraData::bismash(&mp)?, Some(g))
                }
            }
            AlgebraSpec::Bismash(g) => {
                let mp = match g.family {
                    GroupFamily::Alternating => from_factorizable_alternating(g.k)?,
                    _ => from_factorizable_symmetric(g.k)?,
                };
                Built {
                    pair: Some(mp.clone()),
                    ..leaf(HopfAlgebraData::bismash(&mp)?, None)
                }
            }
            AlgebraSpec::Tensor(a, b) => {
                let a = Arc::new(self.build(a)?);
                let b = Arc::new(self.build(b)?);
                let h = HopfAlgebraData::tensor(a.algebra(), b.algebra())?;
                Built {
                    spec: spec.clone(),
                    family: self.family(h),
                    group: None,
                    pair: None,
                    factors: Some((a, b)),
                }
            }
            AlgebraSpec::Dual(a) => {
                // transposes of the inner family's matrices
                let inner = self.build(a)?;
                let fam = PowerMatrixFamily::dual_of(inner.family.clone())?
                    .with_cache(self.cache.clone());
                Built {
                    spec: spec.clone(),
                    family: Arc::new(fam),
                    group: None,
                    pair: None,
                    factors: None,
                }
            }
            AlgebraSpec::Op(a) => {
                let inner = self.build(a)?;
                leaf(HopfAlgebraData::opposite(inner.algebra())?, None)
            }
        })
    }
}

/// Builds with the default (uncached) builder.
pub fn build(spec: &AlgebraSpec) -> Result<Built> {
    Builder::default().build(spec)
}
