//! Dense matrices over a [`RingContext`], acting on row vectors from the
//! right.
//!
//! Text format: one row per line, entries separated by `|`, each entry an
//! element literal.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{RingContext, RingElement};
use crate::skew::same_ring;

#[derive(Clone)]
pub struct Matrix {
    ctx: Arc<RingContext>,
    rows: usize,
    cols: usize,
    entries: Vec<RingElement>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ctx, &other.ctx)
            && self.rows == other.rows
            && self.cols == other.cols
            && self.entries == other.entries
    }
}

impl Eq for Matrix {}

impl Matrix {
    pub fn new(
        ctx: &Arc<RingContext>,
        rows: usize,
        cols: usize,
        entries: Vec<RingElement>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        if !entries.iter().all(|e| ctx.contains(e)) {
            return Err(Error::ContextMismatch);
        }
        Ok(Matrix {
            ctx: ctx.clone(),
            rows,
            cols,
            entries,
        })
    }

    /// Builds from row vectors; all rows must have length `cols`.
    pub fn from_rows(
        ctx: &Arc<RingContext>,
        cols: usize,
        rows: Vec<Vec<RingElement>>,
    ) -> Result<Self> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Dimension {
                    expected: cols,
                    got: r.len(),
                });
            }
            entries.extend(r);
        }
        Matrix::new(ctx, nrows, cols, entries)
    }

    pub fn zeros(ctx: &Arc<RingContext>, rows: usize, cols: usize) -> Self {
        Matrix {
            ctx: ctx.clone(),
            rows,
            cols,
            entries: vec![ctx.zero(); rows * cols],
        }
    }

    pub fn identity(ctx: &Arc<RingContext>, n: usize) -> Self {
        let mut m = Matrix::zeros(ctx, n, n);
        for i in 0..n {
            m.entries[i * n + i] = ctx.one();
        }
        m
    }

    pub fn context(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: RingElement) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[RingElement] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<RingElement>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<RingElement> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RingElement::is_zero)
    }

    pub fn map(&self, f: impl Fn(&RingElement) -> RingElement) -> Matrix {
        Matrix {
            entries: self.entries.iter().map(f).collect(),
            ..self.clone()
        }
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        if !same_ring(&self.ctx, &other.ctx) {
            return Err(Error::ContextMismatch);
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension {
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.ctx.add(a, b))
            .collect();
        Ok(Matrix {
            entries,
            ..self.clone()
        })
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if !same_ring(&self.ctx, &other.ctx) {
            return Err(Error::ContextMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::Dimension {
                expected: self.cols,
                got: other.rows,
            });
        }
        let rows = (0..self.rows)
            .map(|i| vec_mul_unchecked(&self.ctx, self.row(i), other))
            .collect();
        Matrix::from_rows(&self.ctx, other.cols, rows)
    }

    /// `v·M` for a row vector `v`.
    pub fn left_mul_vector(&self, v: &[RingElement]) -> Result<Vec<RingElement>> {
        if v.len() != self.rows {
            return Err(Error::Dimension {
                expected: self.rows,
                got: v.len(),
            });
        }
        Ok(vec_mul_unchecked(&self.ctx, v, self))
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let rows = (0..self.rows)
            .map(|i| cols.iter().map(|&j| self.get(i, j).clone()).collect())
            .collect();
        Matrix::from_rows(&self.ctx, cols.len(), rows).expect("consistent shape")
    }

    /// A maximal set of linearly independent columns, chosen greedily from
    /// the last column backwards. Only meaningful over a field.
    pub fn independent_columns(&self) -> Result<Vec<usize>> {
        if !self.ctx.is_field() {
            return Err(Error::WrongRingKind("a field coefficient ring"));
        }
        let ctx = &self.ctx;
        // echelon basis of accepted columns: (pivot row, reduced column)
        let mut basis: Vec<(usize, Vec<RingElement>)> = Vec::new();
        let mut chosen = Vec::new();
        for j in (0..self.cols).rev() {
            let mut col = self.column(j);
            for (pivot, b) in &basis {
                if !col[*pivot].is_zero() {
                    let factor = col[*pivot].clone();
                    for (c, bv) in col.iter_mut().zip(b) {
                        *c = ctx.sub(c, &ctx.mul(&factor, bv));
                    }
                }
            }
            if let Some(pivot) = col.iter().position(|c| !c.is_zero()) {
                let inv = ctx.invert(&col[pivot]).expect("nonzero field element");
                let col: Vec<_> = col.iter().map(|c| ctx.mul(&inv, c)).collect();
                basis.push((pivot, col));
                chosen.push(j);
            }
        }
        chosen.sort_unstable();
        Ok(chosen)
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.independent_columns()?.len())
    }

    pub fn parse(ctx: &Arc<RingContext>, text: &str) -> Result<Matrix> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.split('|')
                    .map(|e| ctx.parse_element(e))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let cols = rows.first().map_or(0, Vec::len);
        Matrix::from_rows(ctx, cols, rows)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = self
                .row(i)
                .iter()
                .map(|e| self.ctx.format_element(e))
                .collect();
            out.push_str(&line.join(" | "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| self.ctx.pretty(e)).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Aligned human-readable rendering.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|e| self.ctx.pretty(e)).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>width$}", cells[i * self.cols + j]))
                .collect();
            writeln!(f, "[ {} ]", row.join("  "))?;
        }
        Ok(())
    }
}

fn vec_mul_unchecked(ctx: &RingContext, v: &[RingElement], m: &Matrix) -> Vec<RingElement> {
    let mut out = vec![ctx.zero(); m.cols];
    for (i, vi) in v.iter().enumerate() {
        if vi.is_zero() {
            continue;
        }
        for (j, o) in out.iter_mut().enumerate() {
            *o = ctx.add(o, &ctx.mul(vi, m.get(i, j)));
        }
    }
    out
}

pub fn add_vectors(ctx: &RingContext, a: &[RingElement], b: &[RingElement]) -> Vec<RingElement> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| ctx.add(x, y)).collect()
}

pub fn sub_vectors(ctx: &RingContext, a: &[RingElement], b: &[RingElement]) -> Vec<RingElement> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| ctx.sub(x, y)).collect()
}

/// `α·v`.
pub fn scale_vector(ctx: &RingContext, alpha: &RingElement, v: &[RingElement]) -> Vec<RingElement> {
    v.iter().map(|x| ctx.mul(alpha, x)).collect()
}

pub fn is_zero_vector(v: &[RingElement]) -> bool {
    v.iter().all(RingElement::is_zero)
}
