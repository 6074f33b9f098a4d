//! First-order expansion of matrices at `zeta = 1`.

use super::rfmatrix::RFMatrix;
use super::ExactError;

/// Expand a matrix around `zeta = 1` (i.e. `z = 1`, `w = 1`), returning the
/// value and the first `zeta`-derivative as matrices over rational
/// functions of `q` alone.
///
/// The derivative is taken through `z = zeta^2` (`d zeta = dz / 2 zeta`);
/// entries with a pole at `zeta = 1` are rejected.
pub fn series_at_one(m: &RFMatrix) -> Result<(RFMatrix, RFMatrix), ExactError> {
    let mut value = RFMatrix::zeros(m.rows(), m.cols());
    let mut slope = RFMatrix::zeros(m.rows(), m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let (v, s) = m[(i, j)].value_and_slope_at_one()?;
            value[(i, j)] = v;
            slope[(i, j)] = s;
        }
    }
    Ok((value, slope))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::{Poly, Var};
    use crate::exact::ratfn::RationalFn;
    use crate::exact::eval::eval_f64;

    #[test]
    fn constant_matrix_has_zero_slope() {
        let mut m = RFMatrix::zeros(2, 2);
        m[(0, 0)] = RationalFn::var(Var::Q);
        m[(1, 1)] = RationalFn::int(7);
        let (v, s) = series_at_one(&m).unwrap();
        assert_eq!(v, m);
        assert!(s.is_zero());
    }

    #[test]
    fn zeta_minus_one_scalar() {
        let mut m = RFMatrix::zeros(1, 1);
        m[(0, 0)] = RationalFn::from_poly(Poly::var(Var::W).sub(&Poly::one()));
        let (v, s) = series_at_one(&m).unwrap();
        assert!(v.is_zero());
        assert_eq!(s[(0, 0)], RationalFn::one());
    }

    #[test]
    fn chain_rule_through_z() {
        // d/dzeta of z^2 at zeta=1 is 4 (z = zeta^2, so z^2 = zeta^4).
        let mut m = RFMatrix::zeros(1, 1);
        m[(0, 0)] = RationalFn::from_poly(Poly::var_pow(Var::Z, 2));
        let (_, s) = series_at_one(&m).unwrap();
        assert_eq!(s[(0, 0)], RationalFn::int(4));
    }

    #[test]
    fn agrees_with_central_finite_differences() {
        // f(zeta) = (z - q^2)/(1 - z q^2) with z = zeta^2, at sample q.
        let f = RationalFn::new(
            Poly::var(Var::Z).sub(&Poly::var_pow(Var::Q, 2)),
            Poly::one().sub(&Poly::var(Var::Z).mul(&Poly::var_pow(Var::Q, 2))),
        );
        let mut m = RFMatrix::zeros(1, 1);
        m[(0, 0)] = f.clone();
        let (v, s) = series_at_one(&m).unwrap();
        for q0 in [-0.11, -0.2, 0.3, 0.47, -0.05] {
            let h = 1e-5f64;
            let up = eval_f64(&f, q0, (1.0 + h) * (1.0 + h)).unwrap();
            let dn = eval_f64(&f, q0, (1.0 - h) * (1.0 - h)).unwrap();
            let fd = (up - dn) / (2.0 * h);
            let sv = eval_f64(&s[(0, 0)], q0, 1.0).unwrap();
            let vv = eval_f64(&v[(0, 0)], q0, 1.0).unwrap();
            let exact_v = eval_f64(&f, q0, 1.0).unwrap();
            assert!((vv - exact_v).abs() < 1e-12);
            assert!(
                ((fd - sv) / sv.abs().max(1.0)).abs() < 1e-8,
                "q0 = {q0}: fd {fd} vs {sv}"
            );
        }
    }

    #[test]
    fn pole_at_one_rejected() {
        let mut m = RFMatrix::zeros(1, 1);
        m[(0, 0)] = RationalFn::new(Poly::one(), Poly::var(Var::Z).sub(&Poly::one()));
        assert!(series_at_one(&m).is_err());
    }
}
