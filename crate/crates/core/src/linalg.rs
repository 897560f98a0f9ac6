//! Exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use crate::rational::{height, Rational};

/// Dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .filter(|&c| !v[c].is_zero())
                    .map(|c| self.get(r, c) * &v[c])
                    .sum()
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduces to reduced row echelon form in place and returns the pivot
    /// columns. Among the candidate rows of each column, the entry of
    /// smallest bit height is chosen as pivot.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let best = (r..self.rows)
                .filter(|&i| !self.get(i, c).is_zero())
                .min_by_key(|&i| height(self.get(i, c)));
            let Some(best) = best else { continue };
            self.swap_rows(r, best);
            let inv = self.get(r, c).recip();
            for k in c..self.cols {
                let v = self.get(r, k) * &inv;
                self.set(r, k, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let factor = self.get(i, c).clone();
                for k in c..self.cols {
                    if self.get(r, k).is_zero() {
                        continue;
                    }
                    let v = self.get(i, k) - &factor * self.get(r, k);
                    self.set(i, k, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }
}

/// A basis of `{v : A v = 0}`, one vector per free column, each with a `1`
/// in its free column.
pub fn nullspace(a: &Matrix) -> Vec<Vec<Rational>> {
    let mut m = a.clone();
    let pivots = m.rref();
    let free: Vec<usize> = (0..a.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); a.cols];
            v[f] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.get(row, f).clone();
            }
            v
        })
        .collect()
}

/// Outcome of solving `A x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solve {
    /// A solution; `unique` is false when `A` has a nontrivial kernel.
    Solved {
        x: Vec<Rational>,
        unique: bool,
    },
    Inconsistent,
}

pub fn solve(a: &Matrix, b: &[Rational]) -> Solve {
    assert_eq!(b.len(), a.rows);
    let mut aug = Matrix::zeros(a.rows, a.cols + 1);
    for r in 0..a.rows {
        for c in 0..a.cols {
            aug.set(r, c, a.get(r, c).clone());
        }
        aug.set(r, a.cols, b[r].clone());
    }
    let pivots = aug.rref();
    if pivots.last() == Some(&a.cols) {
        return Solve::Inconsistent;
    }
    let mut x = vec![Rational::zero(); a.cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug.get(row, a.cols).clone();
    }
    Solve::Solved {
        x,
        unique: pivots.len() == a.cols,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    #[test]
    fn nullspace_of_rank_one() {
        let a = m(&[&[1, 1, 0], &[2, 2, 0]]);
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(a.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        assert!(nullspace(&m(&[&[2, 1], &[1, 3]])).is_empty());
    }

    #[test]
    fn solve_cases() {
        let a = m(&[&[2, 1], &[1, 3]]);
        match solve(&a, &[int(3), int(5)]) {
            Solve::Solved { x, unique } => {
                assert!(unique);
                assert_eq!(x, vec![rat(4, 5), rat(7, 5)]);
            }
            other => panic!("{other:?}"),
        }
        let singular = m(&[&[1, 1], &[1, 1]]);
        assert_eq!(solve(&singular, &[int(1), int(2)]), Solve::Inconsistent);
        assert!(matches!(
            solve(&singular, &[int(1), int(1)]),
            Solve::Solved { unique: false, .. }
        ));
    }

    proptest! {
        #[test]
        fn nullspace_vectors_are_killed(
            entries in prop::collection::vec(-4i64..5, 12),
            rows in 1usize..4,
        ) {
            let cols = 12 / 3;
            let data: Vec<Vec<Rational>> = entries
                .chunks(cols)
                .take(rows)
                .map(|r| r.iter().map(|&v| rat(v, 1 + (v.abs() % 3))).collect())
                .collect();
            let a = Matrix::from_rows(data);
            let ns = nullspace(&a);
            prop_assert_eq!(ns.len() + a.rank(), cols);
            for v in &ns {
                prop_assert!(a.mul_vec(v).iter().all(Zero::is_zero));
            }
        }
    }
}
