//! Dense matrices over [`RationalFn`] with exact linear algebra.

use super::poly::Poly;
use super::ratfn::RationalFn;
use super::ExactError;
use std::fmt;
use std::ops::{Index, IndexMut};

/// Dense matrix over rational functions.  Columns are inputs: `(M v)_i =
/// sum_j M[(i, j)] v_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RFMatrix {
    rows: usize,
    cols: usize,
    data: Vec<RationalFn>,
}

impl RFMatrix {
    pub fn zeros(rows: usize, cols: usize) -> RFMatrix {
        RFMatrix {
            rows,
            cols,
            data: vec![RationalFn::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> RFMatrix {
        let mut m = RFMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = RationalFn::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn add(&self, other: &RFMatrix) -> RFMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        RFMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &RFMatrix) -> RFMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        RFMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &RationalFn) -> RFMatrix {
        RFMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &RFMatrix) -> Result<RFMatrix, ExactError> {
        if self.cols != other.rows {
            return Err(ExactError::Dimensions(
                self.rows,
                self.cols,
                other.rows,
                other.cols,
            ));
        }
        let mut out = RFMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] = &out[(i, j)] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product; basis `(i, j)` of the tensor product maps to flat
    /// index `i * other.cols + j` on inputs (and correspondingly on rows).
    pub fn kron(&self, other: &RFMatrix) -> RFMatrix {
        let mut out = RFMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = &other[(k, l)];
                        if b.is_zero() {
                            continue;
                        }
                        out[(i * other.rows + k, j * other.cols + l)] = a * b;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    /// If the matrix is `c * I`, return `c`.
    pub fn as_scalar_multiple_of_identity(&self) -> Option<RationalFn> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let c = self[(0, 0)].clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i == j {
                    if self[(i, j)] != c {
                        return None;
                    }
                } else if !self[(i, j)].is_zero() {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn map(&self, f: impl Fn(&RationalFn) -> RationalFn) -> RFMatrix {
        RFMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<E>(
        &self,
        mut f: impl FnMut(&RationalFn) -> Result<RationalFn, E>,
    ) -> Result<RFMatrix, E> {
        let mut data = Vec::with_capacity(self.data.len());
        for e in &self.data {
            data.push(f(e)?);
        }
        Ok(RFMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Solve `A x = b` for the unique solution of a (possibly
    /// overdetermined) consistent system; errors if the system is singular,
    /// inconsistent or underdetermined.
    pub fn solve_unique(&self, rhs: &RFMatrix) -> Result<RFMatrix, ExactError> {
        if rhs.rows != self.rows {
            return Err(ExactError::Dimensions(
                self.rows, self.cols, rhs.rows, rhs.cols,
            ));
        }
        let n = self.cols;
        // Clear denominators row by row, then run fraction-free (Bareiss)
        // elimination on the polynomial matrix.
        let width = n + rhs.cols;
        let mut m: Vec<Vec<Poly>> = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut lcm = Poly::one();
            let mut row_fns: Vec<RationalFn> = Vec::with_capacity(width);
            for j in 0..n {
                row_fns.push(self[(i, j)].clone());
            }
            for j in 0..rhs.cols {
                row_fns.push(rhs[(i, j)].clone());
            }
            for f in &row_fns {
                let d = f.denominator();
                let g = lcm.gcd(d);
                lcm = lcm.mul(&d.exact_div(&g));
            }
            // Denominators divide the accumulated lcm by construction.
            let row = row_fns
                .iter()
                .map(|f| f.numerator().mul(&lcm.exact_div(f.denominator())))
                .collect();
            m.push(row);
        }

        let rows = m.len();
        let mut prev = Poly::one();
        let mut pivot_cols = Vec::new();
        let mut r = 0usize;
        for c in 0..n {
            // Lowest-total-degree nonzero pivot to control blow-up.
            let Some(p) = (r..rows)
                .filter(|&i| !m[i][c].is_zero())
                .min_by_key(|&i| (m[i][c].total_degree(), m[i][c].num_terms()))
            else {
                continue;
            };
            m.swap(r, p);
            for i in 0..rows {
                if i == r {
                    continue;
                }
                // Bareiss step keeps entries polynomial.
                let mut new_row = Vec::with_capacity(width);
                for j in 0..width {
                    let t = m[i][j]
                        .mul(&m[r][c])
                        .sub(&m[i][c].mul(&m[r][j]));
                    new_row.push(t.exact_div(&prev));
                }
                m[i] = new_row;
            }
            prev = m[r][c].clone();
            pivot_cols.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }

        if pivot_cols.len() < n {
            return Err(ExactError::BadSystem(format!(
                "rank {} < unknowns {n}",
                pivot_cols.len()
            )));
        }
        // Consistency of the remaining rows.
        for i in r..rows {
            for j in 0..width {
                if j < n {
                    debug_assert!(m[i][j].is_zero());
                }
                if j >= n && !m[i][j].is_zero() {
                    return Err(ExactError::BadSystem("inconsistent system".into()));
                }
            }
        }

        let mut x = RFMatrix::zeros(n, rhs.cols);
        for (ri, &c) in pivot_cols.iter().enumerate() {
            for j in 0..rhs.cols {
                x[(c, j)] = RationalFn::new(m[ri][n + j].clone(), m[ri][c].clone());
            }
        }
        Ok(x)
    }

    /// Matrix inverse through the exact solver.
    pub fn inverse(&self) -> Result<RFMatrix, ExactError> {
        assert!(self.is_square());
        self.solve_unique(&RFMatrix::identity(self.rows))
    }

    pub fn transpose(&self) -> RFMatrix {
        let mut out = RFMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &RFMatrix) -> RFMatrix {
        assert_eq!(self.rows, other.rows);
        let mut out = RFMatrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }
}

impl Index<(usize, usize)> for RFMatrix {
    type Output = RationalFn;
    fn index(&self, (i, j): (usize, usize)) -> &RationalFn {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RFMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut RationalFn {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for RFMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[ ")?;
            for j in 0..self.cols {
                write!(f, "{}", self[(i, j)])?;
                if j + 1 < self.cols {
                    write!(f, ", ")?;
                }
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}
