//! Sparse Gaussian elimination over the coefficient field.

use std::cmp::Ordering;

use crate::poly::{Field, Scalar};

/// Sparse vector: strictly increasing indices, no zero entries.
pub(crate) type SparseVec = Vec<(usize, Scalar)>;

/// `a + c*b`
fn axpy(a: &SparseVec, c: &Scalar, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => Ordering::Less,
            _ => Ordering::Greater,
        };
        match ord {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((b[j].0, c.mul(&b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let v = a[i].1.add(&c.mul(&b[j].1));
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Reduced row echelon form; returns `(pivot column, row)` with each row's
/// pivot entry equal to one and no other row touching a pivot column.
fn rref(rows: Vec<SparseVec>) -> Vec<(usize, SparseVec)> {
    let mut pivots: Vec<(usize, SparseVec)> = Vec::new();
    let mut by_col: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    for mut row in rows {
        // forward reduction: leading columns of stored rows are distinct
        let mut k = 0;
        while k < row.len() {
            let col = row[k].0;
            match by_col.get(&col) {
                Some(&p) => {
                    let c = row[k].1.neg();
                    row = axpy(&row, &c, &pivots[p].1);
                }
                None => k += 1,
            }
        }
        if row.is_empty() {
            continue;
        }
        let inv = row[0].1.inv().expect("nonzero");
        let row: SparseVec = row.into_iter().map(|(j, v)| (j, v.mul(&inv))).collect();
        by_col.insert(row[0].0, pivots.len());
        pivots.push((row[0].0, row));
    }
    // back substitution, largest pivot column first
    pivots.sort_by_key(|p| p.0);
    let cols: Vec<usize> = pivots.iter().map(|p| p.0).collect();
    for a in (0..pivots.len()).rev() {
        let mut row = std::mem::take(&mut pivots[a].1);
        let mut k = 1;
        while k < row.len() {
            let col = row[k].0;
            match cols.binary_search(&col) {
                Ok(b) if b > a => {
                    let c = row[k].1.neg();
                    row = axpy(&row, &c, &pivots[b].1);
                }
                _ => k += 1,
            }
        }
        pivots[a].1 = row;
    }
    pivots
}

/// Basis of `{v : sum_j v_j * columns[j] = 0}`, as sparse vectors indexed by column.
pub(crate) fn kernel(columns: &[SparseVec], field: Field) -> Vec<SparseVec> {
    let n = columns.len();
    let nrows = columns
        .iter()
        .filter_map(|c| c.last().map(|e| e.0 + 1))
        .max()
        .unwrap_or(0);
    let mut rows: Vec<SparseVec> = vec![Vec::new(); nrows];
    for (j, col) in columns.iter().enumerate() {
        for (i, v) in col {
            rows[*i].push((j, v.clone()));
        }
    }
    let pivots = rref(rows);
    let mut is_pivot = vec![false; n];
    for p in &pivots {
        is_pivot[p.0] = true;
    }
    // entries of free column f in each pivot row
    let mut free_entries: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
    for (pc, row) in &pivots {
        for (j, v) in row.iter().skip(1) {
            free_entries[*j].push((*pc, v.neg()));
        }
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = std::mem::take(&mut free_entries[f]);
            v.push((f, field.one()));
            v.sort_by_key(|e| e.0);
            v
        })
        .collect()
}
