//! Generator matrices of `RM(d, m)` built by evaluating reduced monomials.

use num_traits::ToPrimitive;

use super::field::{build_field, FieldTable};
use super::{odometer, Caps};
use crate::dims::CodeParams;
use crate::error::{Error, Result};

/// Rows are evaluations of the reduced monomials `X^alpha`, `|alpha| <= d`,
/// in graded lexicographic order (degree ascending, then `alpha`
/// descending, so `x_1` precedes `x_2`). Columns are the points of `A^m`
/// in lexicographic order of their coordinate indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    params: CodeParams,
    field: FieldTable,
    rows: Vec<Vec<u8>>,
    row_labels: Vec<Vec<u8>>,
    column_labels: Vec<Vec<u8>>,
}

pub fn rm_generator_matrix(params: &CodeParams, caps: &Caps) -> Result<GeneratorMatrix> {
    let field = build_field(params.q())?;
    let points = params.length();
    if points.to_u64().is_none_or(|n| n > caps.max_points) {
        return Err(Error::CapExceeded {
            what: "point",
            count: points.to_string(),
            cap: caps.max_points.to_string(),
        });
    }
    let rho = params.rho();
    if rho.to_u64().is_none_or(|k| k > caps.max_rows) {
        return Err(Error::CapExceeded {
            what: "row",
            count: rho.to_string(),
            cap: caps.max_rows.to_string(),
        });
    }

    let q = params.q() as u8;
    let m = params.m() as usize;
    let column_labels: Vec<Vec<u8>> = odometer(q, m).collect();
    let mut row_labels: Vec<Vec<u8>> = odometer(q, m).filter(|a| degree(a) <= params.d()).collect();
    row_labels.sort_by(|a, b| degree(a).cmp(&degree(b)).then_with(|| b.cmp(a)));

    let rows = row_labels
        .iter()
        .map(|alpha| {
            column_labels
                .iter()
                .map(|pt| {
                    pt.iter()
                        .zip(alpha)
                        .fold(1u8, |acc, (&x, &e)| field.mul(acc, field.pow(x, e as u64)))
                })
                .collect()
        })
        .collect();

    Ok(GeneratorMatrix {
        params: *params,
        field,
        rows,
        row_labels,
        column_labels,
    })
}

fn degree(alpha: &[u8]) -> i64 {
    alpha.iter().map(|&a| a as i64).sum()
}

impl GeneratorMatrix {
    pub fn params(&self) -> &CodeParams {
        &self.params
    }

    pub fn field(&self) -> &FieldTable {
        &self.field
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Exponent tuples of the monomials, one per row.
    pub fn row_labels(&self) -> &[Vec<u8>] {
        &self.row_labels
    }

    /// Points of `A^m` as coordinate index tuples, one per column.
    pub fn column_labels(&self) -> &[Vec<u8>] {
        &self.column_labels
    }

    /// Dimension of the message space.
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Code length.
    pub fn n(&self) -> usize {
        self.column_labels.len()
    }

    /// `msg * G`.
    pub fn encode(&self, msg: &[u8]) -> Vec<u8> {
        assert_eq!(msg.len(), self.k(), "message length");
        let f = &self.field;
        let mut out = vec![0u8; self.n()];
        for (&c, row) in msg.iter().zip(&self.rows) {
            if c == 0 {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(c, g));
            }
        }
        out
    }

    /// Row rank over the field by Gaussian elimination.
    pub fn rank(&self) -> usize {
        rank(&self.field, self.rows.clone())
    }
}

pub(crate) fn rank(f: &FieldTable, mut rows: Vec<Vec<u8>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = f.inv(rows[r][c]).expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let factor = row[c];
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                *x = f.sub(*x, f.mul(factor, p));
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}
