//! Small exact linear algebra helpers.
//!
//! Two tiers are enough for this crate: fraction-free integer elimination for
//! rank and span-membership questions about hyperplane normals (entries stay
//! tiny for matrices of this size), and rational row reduction for rank
//! computations on larger stacked matrices.

use num::{BigRational, Zero};

/// Row-reduction state over the integers, fraction-free (Bareiss-style
/// pivoting is unnecessary at these sizes; plain cross-multiplication
/// elimination keeps everything in `i64`).
#[derive(Clone, Debug)]
pub struct IntRowSpace {
    rows: Vec<Vec<i64>>, // in echelon form, each row led by its pivot column
    pivots: Vec<usize>,
}

impl IntRowSpace {
    pub fn new() -> Self {
        IntRowSpace { rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows; returns the reduced vector.
    fn reduce(&self, mut v: Vec<i64>) -> Vec<i64> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p] != 0 {
                let (a, b) = (row[p], v[p]);
                let g = gcd_i64(a, b);
                let (ma, mb) = (a / g, b / g);
                for (x, y) in v.iter_mut().zip(row) {
                    *x = *x * ma - y * mb;
                }
            }
        }
        // keep entries small
        let g = v.iter().fold(0i64, |acc, &x| gcd_i64(acc, x));
        if g > 1 {
            for x in v.iter_mut() {
                *x /= g;
            }
        }
        v
    }

    /// Returns true if `v` lies in the span of the inserted rows.
    pub fn contains(&self, v: &[i64]) -> bool {
        self.reduce(v.to_vec()).iter().all(|&x| x == 0)
    }

    /// Inserts `v`; returns true if it enlarged the span.
    pub fn insert(&mut self, v: &[i64]) -> bool {
        let r = self.reduce(v.to_vec());
        match r.iter().position(|&x| x != 0) {
            None => false,
            Some(p) => {
                self.rows.push(r);
                self.pivots.push(p);
                true
            }
        }
    }
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Rank of an integer matrix.
pub fn int_rank(rows: &[Vec<i64>]) -> usize {
    let mut sp = IntRowSpace::new();
    for r in rows {
        sp.insert(r);
    }
    sp.rank()
}

/// Incremental rational row space, used for rank computations where the
/// intermediate entries may not stay small.
#[derive(Clone, Debug, Default)]
pub struct RatRowSpace {
    rows: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
}

impl RatRowSpace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, v: &[BigRational]) -> bool {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    *x = &*x - &c * y;
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(p) => {
                let c = v[p].clone();
                for x in v.iter_mut() {
                    *x = &*x / &c;
                }
                self.rows.push(v);
                self.pivots.push(p);
                true
            }
        }
    }
}

/// Solves `sum_i x_i rows[i] = target` exactly, if possible.
///
/// Returns the coefficient vector when `target` lies in the span of `rows`.
pub fn solve_int_combination(rows: &[Vec<i64>], target: &[i64]) -> Option<Vec<BigRational>> {
    use crate::q;
    let n = target.len();
    let k = rows.len();
    // augmented transpose system: columns are the rows, RHS is target
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|j| {
            let mut row: Vec<BigRational> = (0..k).map(|i| q(rows[i][j])).collect();
            row.push(q(target[j]));
            row
        })
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; k];
    let mut r = 0;
    for c in 0..k {
        if let Some(pr) = (r..n).find(|&i| !m[i][c].is_zero()) {
            m.swap(r, pr);
            let inv = m[r][c].clone();
            for x in m[r].iter_mut() {
                *x = &*x / &inv;
            }
            for i in 0..n {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    let (head, tail) = m.split_at_mut(i.max(r));
                    let (ri, rr) = if i < r {
                        (&mut head[i], &tail[0])
                    } else {
                        (&mut tail[0], &head[r])
                    };
                    for (x, y) in ri.iter_mut().zip(rr.iter()) {
                        *x = &*x - &f * y;
                    }
                }
            }
            pivot_of_col[c] = Some(r);
            r += 1;
        }
    }
    // consistency: rows below r must have zero RHS
    for row in m.iter().skip(r) {
        if !row[k].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); k];
    for (c, p) in pivot_of_col.iter().enumerate() {
        if let Some(pr) = p {
            x[c] = m[*pr][k].clone();
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn int_row_space_rank_and_membership() {
        let mut sp = IntRowSpace::new();
        assert!(sp.insert(&[1, 0, -1]));
        assert!(sp.insert(&[0, 1, 1]));
        assert!(!sp.insert(&[1, 1, 0]));
        assert_eq!(sp.rank(), 2);
        assert!(sp.contains(&[2, -1, -3]));
        assert!(!sp.contains(&[0, 0, 1]));
    }

    #[test]
    fn combination_solver() {
        let rows = vec![vec![1, 0], vec![1, 1]];
        let x = solve_int_combination(&rows, &[3, 2]).unwrap();
        assert_eq!(x, vec![crate::q(1), crate::q(2)]);
        assert!(solve_int_combination(&vec![vec![1, 0]], &[0, 1]).is_none());
    }
}
