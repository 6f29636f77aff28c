//! Exact rational linear algebra on small dense matrices.

use crate::ratio::Rat;
use crate::Int;

/// Row-major rational matrix.
pub type Mat = Vec<Vec<Rat>>;

pub fn from_int_rows(rows: &[Vec<Int>]) -> Mat {
    rows.iter()
        .map(|r| r.iter().map(|&x| Rat::from_int(x)).collect())
        .collect()
}

/// Solve `A x = b` by Gaussian elimination. Returns `None` if inconsistent;
/// otherwise one solution with free variables set to zero, plus the column
/// rank (so callers with independent columns know the solution is unique).
pub fn solve(a: &Mat, b: &[Rat]) -> Option<(Vec<Rat>, usize)> {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    assert_eq!(b.len(), m);
    let mut aug: Vec<Vec<Rat>> = (0..m)
        .map(|i| {
            let mut row = a[i].clone();
            row.push(b[i]);
            row
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..m).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(row, p);
        let inv = Rat::ONE.div(aug[row][col]);
        for x in aug[row].iter_mut() {
            *x = x.mul(inv);
        }
        for r in 0..m {
            if r != row && !aug[r][col].is_zero() {
                let f = aug[r][col];
                for c in 0..=n {
                    let sub = aug[row][c].mul(f);
                    aug[r][c] = aug[r][c].sub(sub);
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == m {
            break;
        }
    }

    // Inconsistent if a zero row has nonzero rhs.
    for r in row..m {
        if !aug[r][n].is_zero() {
            return None;
        }
    }

    let mut x = vec![Rat::ZERO; n];
    for (r, &col) in pivot_cols.iter().enumerate() {
        x[col] = aug[r][n];
    }
    Some((x, pivot_cols.len()))
}

/// Inverse of a square rational matrix, if invertible.
pub fn inverse(a: &Mat) -> Option<Mat> {
    let n = a.len();
    let mut aug: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row = a[i].clone();
            for j in 0..n {
                row.push(if i == j { Rat::ONE } else { Rat::ZERO });
            }
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, p);
        let inv = Rat::ONE.div(aug[col][col]);
        for x in aug[col].iter_mut() {
            *x = x.mul(inv);
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col];
                for c in 0..2 * n {
                    let sub = aug[col][c].mul(f);
                    aug[r][c] = aug[r][c].sub(sub);
                }
            }
        }
    }
    Some((0..n).map(|i| aug[i][n..].to_vec()).collect())
}

pub fn mat_vec(a: &Mat, v: &[Rat]) -> Vec<Rat> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(Rat::ZERO, |acc, (&x, &y)| acc.add(x.mul(y)))
        })
        .collect()
}

pub fn det(a: &Mat) -> Rat {
    let n = a.len();
    let mut m = a.to_vec();
    let mut d = Rat::ONE;
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::ZERO;
        };
        if p != col {
            m.swap(col, p);
            d = d.neg();
        }
        d = d.mul(m[col][col]);
        let inv = Rat::ONE.div(m[col][col]);
        for r in col + 1..n {
            if !m[r][col].is_zero() {
                let f = m[r][col].mul(inv);
                for c in col..n {
                    let sub = m[col][c].mul(f);
                    m[r][c] = m[r][c].sub(sub);
                }
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_unique() {
        // x + y = 3, x - y = 1  =>  (2, 1)
        let a = from_int_rows(&[vec![1, 1], vec![1, -1]]);
        let (x, rank) = solve(&a, &[Rat::from_int(3), Rat::from_int(1)]).unwrap();
        assert_eq!(rank, 2);
        assert_eq!(x, vec![Rat::from_int(2), Rat::from_int(1)]);
    }

    #[test]
    fn solve_inconsistent() {
        let a = from_int_rows(&[vec![1, 1], vec![2, 2]]);
        assert!(solve(&a, &[Rat::from_int(1), Rat::from_int(3)]).is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = from_int_rows(&[vec![1, 1], vec![0, 1]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_vec(&inv, &[Rat::from_int(3), Rat::from_int(1)]), vec![
            Rat::from_int(2),
            Rat::from_int(1)
        ]);
        assert_eq!(det(&a), Rat::ONE);
    }
}
