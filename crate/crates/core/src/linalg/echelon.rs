//! Incremental fraction-free row reduction over the integers.
//!
//! Rows are inserted one at a time and reduced against the current pivot
//! rows by cross-multiplication, then divided by their content. Pivot rows
//! are kept primitive with a positive pivot entry. In reduced mode every
//! pivot row is also zero in every other row's pivot column, which makes
//! the result a canonical integer-scaled reduced row echelon form.

use num_bigint::BigInt;

use super::scalar::IntScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Mode {
    Echelon,
    Reduced,
}

pub(crate) struct Echelon<T> {
    width: usize,
    mode: Mode,
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
    pivot_row: Vec<Option<usize>>,
}

struct Overflow;

impl<T: IntScalar> Echelon<T> {
    fn new(width: usize, mode: Mode) -> Self {
        Echelon {
            width,
            mode,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: vec![None; width],
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// `target = target * pm - src * xm`, clearing `target[col]`.
    ///
    /// `src` must be zero left of `col`.
    fn eliminate(target: &mut [T], src: &[T], col: usize) -> Result<(), Overflow> {
        let p = &src[col];
        let x = target[col].clone();
        let g = p.gcd(&x);
        let pm = p.div_exact(&g);
        let xm = x.div_exact(&g);
        if pm.is_one() {
            for j in col..target.len() {
                if !src[j].is_zero() {
                    target[j] = T::mul_sub(&target[j], &pm, &src[j], &xm).ok_or(Overflow)?;
                }
            }
        } else {
            for j in 0..target.len() {
                if !src[j].is_zero() || !target[j].is_zero() {
                    target[j] = T::mul_sub(&target[j], &pm, &src[j], &xm).ok_or(Overflow)?;
                }
            }
            make_primitive(target)?;
        }
        debug_assert!(target[col].is_zero());
        Ok(())
    }

    /// Inserts a row; returns whether it increased the rank.
    fn insert(&mut self, mut v: Vec<T>) -> Result<bool, Overflow> {
        debug_assert_eq!(v.len(), self.width);
        let mut lead = None;
        for c in 0..self.width {
            if v[c].is_zero() {
                continue;
            }
            match self.pivot_row[c] {
                Some(r) => Self::eliminate(&mut v, &self.rows[r], c)?,
                None if self.mode == Mode::Echelon => {
                    lead = Some(c);
                    break;
                }
                None => {}
            }
        }
        // later eliminations may cancel an earlier non-pivot entry
        if self.mode == Mode::Reduced {
            lead = v.iter().position(|x| !x.is_zero());
        }
        let Some(lead) = lead else {
            return Ok(false);
        };
        make_primitive(&mut v)?;
        if v[lead].is_negative() {
            for e in v.iter_mut() {
                *e = e.neg().ok_or(Overflow)?;
            }
        }
        if self.mode == Mode::Reduced {
            for r in 0..self.rows.len() {
                if !self.rows[r][lead].is_zero() {
                    let mut row = std::mem::take(&mut self.rows[r]);
                    let res =
                        Self::eliminate(&mut row, &v, lead).and_then(|_| make_primitive(&mut row));
                    self.rows[r] = row;
                    res?;
                }
            }
        }
        self.pivot_row[lead] = Some(self.rows.len());
        self.pivots.push(lead);
        self.rows.push(v);
        Ok(true)
    }

    /// Adds a row already known to be a pivot row consistent with the current state.
    fn seed(&mut self, v: Vec<T>, pivot: usize) {
        self.pivot_row[pivot] = Some(self.rows.len());
        self.pivots.push(pivot);
        self.rows.push(v);
    }
}

fn make_primitive<T: IntScalar>(v: &mut [T]) -> Result<(), Overflow> {
    let mut g = T::zero();
    for e in v.iter() {
        if !e.is_zero() {
            g = g.gcd(e);
            if g.is_one() {
                return Ok(());
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return Ok(());
    }
    for e in v.iter_mut() {
        if !e.is_zero() {
            *e = e.div_exact(&g);
        }
    }
    Ok(())
}

/// Integer row echelon data, rows sorted by pivot column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntEchelon {
    pub width: usize,
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
}

fn run<T: IntScalar>(
    width: usize,
    mode: Mode,
    seeds: &[(Vec<BigInt>, usize)],
    rows: &[Vec<BigInt>],
    stop_at_full: bool,
) -> Option<IntEchelon> {
    let conv = |r: &Vec<BigInt>| -> Option<Vec<T>> { r.iter().map(T::from_big).collect() };
    let mut e = Echelon::<T>::new(width, mode);
    for (r, p) in seeds {
        e.seed(conv(r)?, *p);
    }
    for r in rows {
        if stop_at_full && e.rank() == width {
            break;
        }
        if e.insert(conv(r)?).is_err() {
            return None;
        }
    }
    let mut order: Vec<usize> = (0..e.rows.len()).collect();
    order.sort_by_key(|&i| e.pivots[i]);
    let mut rows = std::mem::take(&mut e.rows);
    Some(IntEchelon {
        width,
        pivots: order.iter().map(|&i| e.pivots[i]).collect(),
        rows: order
            .iter()
            .map(|&i| {
                std::mem::take(&mut rows[i])
                    .iter()
                    .map(IntScalar::to_big)
                    .collect()
            })
            .collect(),
    })
}

/// Reduces `rows` (each of length `width`), trying `i64` before `BigInt`.
///
/// `seeds` are rows already in the requested form, with their pivot columns.
pub(crate) fn reduce_rows(
    width: usize,
    mode: Mode,
    seeds: &[(Vec<BigInt>, usize)],
    rows: &[Vec<BigInt>],
) -> IntEchelon {
    let stop = mode == Mode::Echelon;
    run::<i64>(width, mode, seeds, rows, stop).unwrap_or_else(|| {
        run::<BigInt>(width, mode, seeds, rows, stop).expect("BigInt never overflows")
    })
}
