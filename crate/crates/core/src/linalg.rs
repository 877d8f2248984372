//! Dense linear algebra over GF(2^ℓ).

use crate::finite_field::{Elem, FieldCtx};

pub type Row = Vec<Elem>;

/// Reduced row echelon form in place (pivots normalised to 1, zero rows dropped).
/// Returns the pivot columns.
pub fn rref(ctx: &FieldCtx, rows: &mut Vec<Row>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = ctx.inv(rows[r][c]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = ctx.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            let f = row[c];
            if i != r && !f.is_zero() {
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x += ctx.mul(f, y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(ctx: &FieldCtx, rows: &[Row], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(ctx, &mut m, ncols).len()
}

/// Basis of `{x : Σ_j row_j x_j = 0 for every row}`.
pub fn kernel(ctx: &FieldCtx, rows: &[Row], ncols: usize) -> Vec<Row> {
    let mut m = rows.to_vec();
    let pivots = rref(ctx, &mut m, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Elem::ZERO; ncols];
            v[free] = Elem::ONE;
            for (row, &p) in m.iter().zip(&pivots) {
                // characteristic 2: −a = a
                v[p] = row[free];
            }
            v
        })
        .collect()
}

pub fn dot(ctx: &FieldCtx, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter().zip(b).fold(Elem::ZERO, |acc, (&x, &y)| acc + ctx.mul(x, y))
}

pub fn scale(ctx: &FieldCtx, a: &[Elem], s: Elem) -> Row {
    a.iter().map(|&x| ctx.mul(x, s)).collect()
}
