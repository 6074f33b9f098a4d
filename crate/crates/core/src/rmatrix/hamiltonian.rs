//! Local corner-transfer-matrix Hamiltonians and their `q -> 0` closed
//! forms.
//!
//! On the alternating lattice the CTM Hamiltonian is a sum of three local
//! pieces acting on two or three adjacent positions; each is built from the
//! value and slope of the spin-basis R-matrix at `zeta = 1` and becomes
//! diagonal with small-integer spectrum in the crystal limit.

use super::qzero::rbar_series;
use crate::exact::rfmatrix::RFMatrix;
use crate::exact::ExactError;
use num_traits::{ToPrimitive, Zero};

/// `{a}_b`: reflects `a` back below the ceiling `b`.
pub fn brace(a: i64, b: i64) -> i64 {
    if a <= b {
        a
    } else {
        2 * b - a
    }
}

/// Diagonal value of the three-site piece on `u_i^(n) (x) u_j^(m) (x)
/// u_k^(n)` in the crystal limit.
pub fn h1(m: u8, n: u8, i: i64, j: i64, k: i64) -> i64 {
    let (m, n) = (m as i64, n as i64);
    let s = i + j;
    if s <= m && s <= n {
        brace(k + j, n)
    } else if m <= s && s <= n {
        brace(k + i + 2 * j - m, n)
    } else if n <= s && s <= m {
        brace(k + n - i, n)
    } else {
        brace(k + n - m + j, n)
    }
}

/// Diagonal value of the three-site piece on `u_i^(m) (x) u_j^(n) (x)
/// u_k^(m)` in the crystal limit.
pub fn h2(m: u8, n: u8, i: i64, j: i64, k: i64) -> i64 {
    let (m, n) = (m as i64, n as i64);
    let s = j + k;
    if s <= m && s <= n {
        brace(i + j, m)
    } else if m <= s && s <= n {
        brace(i + m - k, m)
    } else if n <= s && s <= m {
        brace(i + k + 2 * j - n, m)
    } else {
        brace(i + j + m - n, m)
    }
}

/// Diagonal value of the two-site piece on `u_i^(n) (x) u_j^(m)` in the
/// crystal limit.
pub fn h3(m: u8, n: u8, i: i64, j: i64) -> i64 {
    let (m, n) = (m as i64, n as i64);
    let s = i + j;
    if s <= m && s <= n {
        s
    } else if m <= s && s <= n {
        m
    } else if n <= s && s <= m {
        n
    } else {
        m + n - s
    }
}

/// Which of the three local pieces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HamiltonianKind {
    H1,
    H2,
    H3,
}

/// A local Hamiltonian: the symbolic matrix over rational functions of `q`
/// and the integer diagonal it degenerates to at `q -> 0`.
#[derive(Debug, Clone)]
pub struct LocalHamiltonian {
    pub kind: HamiltonianKind,
    pub m: u8,
    pub n: u8,
    pub matrix: RFMatrix,
    /// `q -> 0` diagonal, indexed like the tensor basis of `matrix`.
    pub q0_diagonal: Vec<i64>,
}

/// Build a local Hamiltonian symbolically from the R-matrix expansion and
/// extract its `q -> 0` diagonal.
///
/// * `H1 = (Rbar0^(m,n) (x) 1)(1 (x) Rbar1^(n,n))(Rbar0^(n,m) (x) 1)` on
///   `V^(n) (x) V^(m) (x) V^(n)`;
/// * `H2 = (1 (x) Rbar0^(m,n))(Rbar1^(m,m) (x) 1)(1 (x) Rbar0^(n,m))` on
///   `V^(m) (x) V^(n) (x) V^(m)`;
/// * `H3 = Rbar0^(m,n) Rbar1^(n,m)` on `V^(n) (x) V^(m)`.
pub fn local_hamiltonian(
    kind: HamiltonianKind,
    m: u8,
    n: u8,
) -> Result<LocalHamiltonian, ExactError> {
    let matrix = match kind {
        HamiltonianKind::H1 => {
            let (r0_nm, _) = rbar_series(n, m)?;
            let (r0_mn, _) = rbar_series(m, n)?;
            let (_, r1_nn) = rbar_series(n, n)?;
            let dn = n as usize + 1;
            let id_n = RFMatrix::identity(dn);
            let step1 = r0_nm.kron(&id_n);
            let step2 = RFMatrix::identity(m as usize + 1).kron(&r1_nn);
            let step3 = r0_mn.kron(&id_n);
            step3.mul(&step2.mul(&step1)?)?
        }
        HamiltonianKind::H2 => {
            let (r0_nm, _) = rbar_series(n, m)?;
            let (r0_mn, _) = rbar_series(m, n)?;
            let (_, r1_mm) = rbar_series(m, m)?;
            let dm = m as usize + 1;
            let id_m = RFMatrix::identity(dm);
            let step1 = id_m.kron(&r0_nm);
            let step2 = r1_mm.kron(&RFMatrix::identity(n as usize + 1));
            let step3 = id_m.kron(&r0_mn);
            step3.mul(&step2.mul(&step1)?)?
        }
        HamiltonianKind::H3 => {
            let (r0_mn, _) = rbar_series(m, n)?;
            let (_, r1_nm) = rbar_series(n, m)?;
            r0_mn.mul(&r1_nm)?
        }
    };
    let mut q0_diagonal = Vec::with_capacity(matrix.rows());
    for i in 0..matrix.rows() {
        let lim = matrix[(i, i)].limit_q_to_zero()?;
        assert!(lim.is_integer(), "crystal-limit diagonal is not an integer");
        q0_diagonal.push(lim.to_integer().to_i64().unwrap());
    }
    Ok(LocalHamiltonian {
        kind,
        m,
        n,
        matrix,
        q0_diagonal,
    })
}

impl LocalHamiltonian {
    /// Check that every off-diagonal entry vanishes as `q -> 0` (the
    /// crystal limit acts diagonally).
    pub fn q0_off_diagonal_vanishes(&self) -> Result<bool, ExactError> {
        for i in 0..self.matrix.rows() {
            for j in 0..self.matrix.cols() {
                if i == j {
                    continue;
                }
                if !self.matrix[(i, j)].limit_q_to_zero()?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The closed-form diagonal this Hamiltonian must match at `q -> 0`.
    pub fn closed_form_diagonal(&self) -> Vec<i64> {
        let (m, n) = (self.m, self.n);
        let (dm, dn) = (m as usize + 1, n as usize + 1);
        match self.kind {
            HamiltonianKind::H1 => {
                let mut out = Vec::with_capacity(dn * dm * dn);
                for i in 0..dn {
                    for j in 0..dm {
                        for k in 0..dn {
                            out.push(h1(m, n, i as i64, j as i64, k as i64));
                        }
                    }
                }
                out
            }
            HamiltonianKind::H2 => {
                let mut out = Vec::with_capacity(dm * dn * dm);
                for i in 0..dm {
                    for j in 0..dn {
                        for k in 0..dm {
                            out.push(h2(m, n, i as i64, j as i64, k as i64));
                        }
                    }
                }
                out
            }
            HamiltonianKind::H3 => {
                let mut out = Vec::with_capacity(dn * dm);
                for i in 0..dn {
                    for j in 0..dm {
                        out.push(h3(m, n, i as i64, j as i64));
                    }
                }
                out
            }
        }
    }

    /// The two-factor identity `Rbar0^(m,n) Rbar1^(n,m) = Rbar1^(m,n)
    /// Rbar0^(n,m)` behind the symmetric form of `H3`.
    pub fn h3_two_factor_identity(m: u8, n: u8) -> Result<bool, ExactError> {
        let (r0_mn, r1_mn) = rbar_series(m, n)?;
        let (r0_nm, r1_nm) = rbar_series(n, m)?;
        Ok(r0_mn.mul(&r1_nm)? == r1_mn.mul(&r0_nm)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brace_function() {
        assert_eq!(brace(3, 2), 1);
        assert_eq!(brace(2, 2), 2);
        assert_eq!(brace(0, 5), 0);
    }

    #[test]
    fn closed_form_spot_values() {
        // (m,n) = (6,2): h3(1,2) has n <= i+j = 3 <= m, so the value is n.
        assert_eq!(h3(6, 2, 1, 2), 2);
        // h1(0,1,2) with i+j = 1 below both levels: {k+j}_n = {3}_2 = 1.
        assert_eq!(h1(6, 2, 0, 1, 2), 1);
    }

    #[test]
    fn h3_matches_closed_form_2_1() {
        let h = local_hamiltonian(HamiltonianKind::H3, 2, 1).unwrap();
        assert_eq!(h.q0_diagonal, h.closed_form_diagonal());
        assert!(h.q0_off_diagonal_vanishes().unwrap());
    }

    #[test]
    fn h1_matches_closed_form_2_1() {
        let h = local_hamiltonian(HamiltonianKind::H1, 2, 1).unwrap();
        assert_eq!(h.q0_diagonal, h.closed_form_diagonal());
        assert!(h.q0_off_diagonal_vanishes().unwrap());
    }

    #[test]
    fn h2_matches_closed_form_2_1() {
        let h = local_hamiltonian(HamiltonianKind::H2, 2, 1).unwrap();
        assert_eq!(h.q0_diagonal, h.closed_form_diagonal());
        assert!(h.q0_off_diagonal_vanishes().unwrap());
    }

    #[test]
    fn h3_symmetric_form_2_1() {
        assert!(LocalHamiltonian::h3_two_factor_identity(2, 1).unwrap());
    }
}
