//! Highest weight vectors and the projectors entering the R-matrix
//! expansion.

use super::evalmod::{coproduct_matrix, EvalModule, Gen};
use crate::exact::qsym::q_factorial;
use crate::exact::ratfn::RationalFn;
use crate::exact::rfmatrix::RFMatrix;
use crate::exact::ExactError;

/// The `U_1` highest weight vector `Omega_p` in `V_k (x) V_l`:
///
/// `Omega_p = sum_i (-1)^i q^((k+1-i)i) / ([i]! [p-i]!)  v_i (x) v_(p-i)`,
/// for `0 <= p <= min(k, l)`.
pub fn omega_vector(p: usize, k: u8, l: u8) -> RFMatrix {
    assert!(
        p <= k.min(l) as usize,
        "highest-weight label out of range: p = {p} for levels ({k}, {l})"
    );
    let (dk, dl) = (k as usize + 1, l as usize + 1);
    let mut v = RFMatrix::zeros(dk * dl, 1);
    for i in 0..=p {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let num = &RationalFn::int(sign) * &RationalFn::q_pow((k as i64 + 1 - i as i64) * i as i64);
        let den = &q_factorial(i as i64) * &q_factorial((p - i) as i64);
        v[(i * dl + (p - i), 0)] = &num / &den;
    }
    v
}

/// All projectors `P_p : V_k (x) V_l -> V_l (x) V_k`, `p = 0 ..= min(k,l)`.
///
/// `P_p` maps `Omega_p` to the corresponding highest weight vector of the
/// swapped product, kills the other `Omega_r`, and extends `U_1`-linearly.
/// Built by solving the base-change linear system over rational functions:
/// the vectors `(f_1^(coproduct))^t Omega_p` form a basis.
pub fn projectors(k: u8, l: u8) -> Result<Vec<RFMatrix>, ExactError> {
    let (mk, ml) = (EvalModule::new(k), EvalModule::new(l));
    let dim = mk.dim() * ml.dim();
    let f_in = coproduct_matrix(Gen::F1, &mk, &ml);
    let f_out = coproduct_matrix(Gen::F1, &ml, &mk);
    let pmax = k.min(l) as usize;

    let mut basis = RFMatrix::zeros(dim, dim);
    let mut images: Vec<RFMatrix> = Vec::with_capacity(dim);
    let mut tags = Vec::with_capacity(dim);
    let mut col = 0;
    for p in 0..=pmax {
        let mut vin = omega_vector(p, k, l);
        let mut vout = omega_vector(p, l, k);
        let string_len = k as usize + l as usize - 2 * p;
        for _ in 0..=string_len {
            for r in 0..dim {
                basis[(r, col)] = vin[(r, 0)].clone();
            }
            images.push(vout.clone());
            tags.push(p);
            col += 1;
            vin = f_in.mul(&vin)?;
            vout = f_out.mul(&vout)?;
        }
    }
    debug_assert_eq!(col, dim);

    let basis_inv = basis.inverse().map_err(|e| {
        ExactError::BadSystem(format!("projector base change is singular: {e}"))
    })?;
    let mut out = Vec::with_capacity(pmax + 1);
    for p in 0..=pmax {
        let mut targets = RFMatrix::zeros(dim, dim);
        for (c, img) in images.iter().enumerate() {
            if tags[c] == p {
                for r in 0..dim {
                    targets[(r, c)] = img[(r, 0)].clone();
                }
            }
        }
        out.push(targets.mul(&basis_inv)?);
    }
    Ok(out)
}

/// The single projector `P_p^(k,l)`.
pub fn projector(p: usize, k: u8, l: u8) -> Result<RFMatrix, ExactError> {
    let mut all = projectors(k, l)?;
    assert!(p < all.len(), "highest-weight label out of range");
    Ok(all.swap_remove(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::Var;

    #[test]
    fn omega_0_is_top_tensor_top() {
        let v = omega_vector(0, 2, 3);
        for r in 0..v.rows() {
            if r == 0 {
                assert!(v[(r, 0)].is_one());
            } else {
                assert!(v[(r, 0)].is_zero());
            }
        }
    }

    #[test]
    fn omega_1_1_1_explicit() {
        // Omega_1 = v_0 (x) v_1 - q v_1 (x) v_0 on levels (1, 1).
        let v = omega_vector(1, 1, 1);
        assert_eq!(v[(1, 0)], RationalFn::one());
        assert_eq!(v[(2, 0)], -RationalFn::var(Var::Q));
        assert!(v[(0, 0)].is_zero() && v[(3, 0)].is_zero());
    }

    #[test]
    fn omega_is_killed_by_raising() {
        for (k, l) in [(1, 1), (2, 1), (2, 3)] {
            let e = coproduct_matrix(Gen::E1, &EvalModule::new(k), &EvalModule::new(l));
            for p in 0..=(k.min(l) as usize) {
                let om = omega_vector(p, k, l);
                assert!(e.mul(&om).unwrap().is_zero(), "(k,l,p) = ({k},{l},{p})");
            }
        }
    }

    #[test]
    fn second_leg_raising_steps_down() {
        // (1 (x) e_1) Omega_p = Omega_(p-1).
        for (k, l) in [(2, 2), (3, 2)] {
            let mk = EvalModule::new(k);
            let ml = EvalModule::new(l);
            let dim = mk.dim() * ml.dim();
            // plain 1 (x) e_1, not the coproduct
            let mut e2 = RFMatrix::zeros(dim, dim);
            for i in 0..mk.dim() {
                for j in 0..ml.dim() {
                    for (c, t) in super::super::evalmod::chevalley_act(Gen::E1, &ml, j) {
                        e2[(i * ml.dim() + t, i * ml.dim() + j)] = c;
                    }
                }
            }
            for p in 1..=(k.min(l) as usize) {
                let om = omega_vector(p, k, l);
                let expect = omega_vector(p - 1, k, l);
                assert_eq!(e2.mul(&om).unwrap(), expect, "(k,l,p) = ({k},{l},{p})");
            }
        }
    }

    #[test]
    fn projector_resolution_and_kill() {
        let ps = projectors(1, 1).unwrap();
        // Resolution of identity applied to v_0 (x) v_0: the image swaps the
        // (identical) indices, so the sum acts as the identity there.
        let mut top = RFMatrix::zeros(4, 1);
        top[(0, 0)] = RationalFn::one();
        let sum = ps[0].add(&ps[1]);
        assert_eq!(sum.mul(&top).unwrap(), top);
        // P_1 kills Omega_0 and P_0 kills Omega_1.
        let om0 = omega_vector(0, 1, 1);
        let om1 = omega_vector(1, 1, 1);
        assert!(ps[1].mul(&om0).unwrap().is_zero());
        assert!(ps[0].mul(&om1).unwrap().is_zero());
        assert_eq!(ps[1].mul(&om1).unwrap(), omega_vector(1, 1, 1));
    }

    #[test]
    fn projectors_are_u1_linear() {
        // P_p commutes with the U_1 action: P f_1 = f_1' P.
        for (k, l) in [(1, 2), (2, 2)] {
            let f_in = coproduct_matrix(Gen::F1, &EvalModule::new(k), &EvalModule::new(l));
            let f_out = coproduct_matrix(Gen::F1, &EvalModule::new(l), &EvalModule::new(k));
            for p in projectors(k, l).unwrap() {
                assert_eq!(p.mul(&f_in).unwrap(), f_out.mul(&p).unwrap());
            }
        }
    }
}
