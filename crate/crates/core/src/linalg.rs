//! Dense Gaussian elimination over a [`Field`].

use crate::galois::{Elem, Field};

/// Outcome of solving `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Elem>),
    /// Consistent with free variables; carries the solution with all free variables zero.
    Underdetermined(Vec<Elem>),
    Inconsistent,
}

/// Reduces `m` in place to reduced row echelon form and returns the pivot
/// columns. Zero rows are dropped.
pub fn rref(f: &Field, m: &mut Vec<Vec<Elem>>) -> Vec<usize> {
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = f.inv(m[r][c]).expect("pivot is nonzero");
        for v in m[r].iter_mut() {
            *v = f.mul(*v, inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c];
            for (v, &pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v = f.sub(*v, f.mul(factor, pv));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    pivots
}

pub fn rank(f: &Field, m: &[Vec<Elem>]) -> usize {
    let mut w = m.to_vec();
    rref(f, &mut w).len()
}

/// A basis of the right kernel `{x : M x = 0}` for a matrix with `ncols` columns.
pub fn kernel(f: &Field, m: &[Vec<Elem>], ncols: usize) -> Vec<Vec<Elem>> {
    let mut w = m.to_vec();
    let pivots = rref(f, &mut w);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Elem::ZERO; ncols];
        v[free] = Elem::ONE;
        for (row, &pc) in w.iter().zip(&pivots) {
            v[pc] = f.neg(row[free]);
        }
        out.push(v);
    }
    out
}

pub fn solve(f: &Field, a: &[Vec<Elem>], b: &[Elem]) -> Solution {
    let ncols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Elem>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            let mut r = row.clone();
            r.push(rhs);
            r
        })
        .collect();
    let pivots = rref(f, &mut aug);
    if pivots.last() == Some(&ncols) {
        return Solution::Inconsistent;
    }
    let mut x = vec![Elem::ZERO; ncols];
    for (row, &pc) in aug.iter().zip(&pivots) {
        x[pc] = row[ncols];
    }
    if pivots.len() == ncols {
        Solution::Unique(x)
    } else {
        Solution::Underdetermined(x)
    }
}

/// Whether two row sets span the same space.
pub fn row_space_equal(f: &Field, a: &[Vec<Elem>], b: &[Vec<Elem>]) -> bool {
    let ra = rank(f, a);
    if ra != rank(f, b) {
        return false;
    }
    let mut both = a.to_vec();
    both.extend_from_slice(b);
    rank(f, &both) == ra
}

/// Matrix-vector product `M x`.
pub fn mat_vec(f: &Field, m: &[Vec<Elem>], x: &[Elem]) -> Vec<Elem> {
    m.iter().map(|row| row.iter().zip(x).fold(Elem::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))).collect()
}
