//! Floating-point checks that need the true spin-basis normalisation: the
//! fully normalised R-matrix, crossing symmetry, and unitarity.
//!
//! These live in `f64` because the spin-basis conjugation involves square
//! roots of q-binomials and the normalising factor is an infinite product;
//! the products are truncated (40 factors suffice far below 1e-12 for
//! |q| <= 0.5).

use super::rhat::rhat_projector;
use crate::exact::eval::eval_f64;
use crate::exact::qsym::q_binom;
use crate::exact::ExactError;
use num_rational::BigRational;
use num_traits::One;

/// Dense `f64` matrix, `rows x cols`, same basis conventions as the
/// exact matrices.
pub type NumMatrix = Vec<Vec<f64>>;

fn q_binom_f64(n: u8, j: usize, q0: f64) -> f64 {
    let f = q_binom(n as i64, j as i64);
    let one = BigRational::one();
    // q-binomials are w-free; evaluate through the f64 path directly.
    let _ = &one;
    eval_f64(&f, q0, 1.0).expect("q-binomial has no pole at generic q")
}

/// Spin-basis coefficient `c_j = sqrt(qbinom(n, j) q^(j(n-j)))`, real and
/// positive for real `q != 0`.
fn spin_coeff(n: u8, j: usize, q0: f64) -> f64 {
    let b = q_binom_f64(n, j, q0) * q0.powi((j as i32) * (n as i32 - j as i32));
    debug_assert!(b > 0.0, "spin-basis gauge must be positive");
    b.sqrt()
}

fn rhat_numeric(k: u8, l: u8, q0: f64, z0: f64) -> Result<NumMatrix, ExactError> {
    let r = rhat_projector(k, l)?;
    let dim = r.rows();
    let mut out = vec![vec![0.0; dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            if r[(i, j)].is_zero() {
                continue;
            }
            out[i][j] = eval_f64(&r[(i, j)], q0, z0)?;
        }
    }
    Ok(out)
}

/// The unnormalised spin-basis matrix at numeric `(q0, zeta0)`:
/// `(C_l^-1 (x) C_k^-1) Rhat(zeta0^2) (C_k (x) C_l)` with `C_n = diag(c_j
/// zeta^j)`.
pub fn rbar_numeric(k: u8, l: u8, q0: f64, zeta0: f64) -> Result<NumMatrix, ExactError> {
    let rh = rhat_numeric(k, l, q0, zeta0 * zeta0)?;
    let (dk, dl) = (k as usize + 1, l as usize + 1);
    let mut out = vec![vec![0.0; dk * dl]; dk * dl];
    for i in 0..dk {
        for j in 0..dl {
            for ip in 0..dk {
                for jp in 0..dl {
                    let e = rh[jp * dk + ip][i * dl + j];
                    if e == 0.0 {
                        continue;
                    }
                    let g = spin_coeff(k, i, q0) * spin_coeff(l, j, q0)
                        / (spin_coeff(k, ip, q0) * spin_coeff(l, jp, q0));
                    out[jp * dk + ip][i * dl + j] =
                        e * g * zeta0.powi(i as i32 - ip as i32);
                }
            }
        }
    }
    Ok(out)
}

/// Normalising scalar `kappa^(k,l)(zeta)` with the infinite products
/// truncated after `terms` factors of `q^4`.
pub fn kappa(k: u8, l: u8, q0: f64, zeta0: f64, terms: usize) -> f64 {
    let poch = |x: f64| -> f64 {
        let step = q0.powi(4);
        let mut acc = 1.0;
        let mut m = 1.0;
        for _ in 0..terms {
            acc *= 1.0 - x * m;
            m *= step;
        }
        acc
    };
    let a = q0.powi(2 + k as i32 + l as i32);
    let b = q0.powi(2 + (k as i32 - l as i32).abs());
    let z2 = zeta0 * zeta0;
    zeta0.powi(k.min(l) as i32) * poch(a * z2) * poch(b / z2) / (poch(a / z2) * poch(b * z2))
}

/// The fully normalised R-matrix `R = Rbar / kappa` in the spin basis at
/// numeric `(q0, zeta0)`.
pub fn r_u_basis_numeric(
    k: u8,
    l: u8,
    q0: f64,
    zeta0: f64,
    kappa_terms: usize,
) -> Result<NumMatrix, ExactError> {
    assert!(
        (-1.0..0.0).contains(&q0) && zeta0 > 0.0,
        "regime is -1 < q < 0, zeta > 0"
    );
    let kap = kappa(k, l, q0, zeta0, kappa_terms);
    let mut m = rbar_numeric(k, l, q0, zeta0)?;
    for row in &mut m {
        for e in row.iter_mut() {
            *e /= kap;
        }
    }
    Ok(m)
}

/// Component `R^(i,j)_(i',j')` with the convention `R(u_i (x) u_j) =
/// sum R^(i,j)_(i',j') u_(j') (x) u_(i')`.
fn comp(m: &NumMatrix, k: u8, l: u8, i: usize, j: usize, ip: usize, jp: usize) -> f64 {
    let _ = l;
    m[jp * (k as usize + 1) + ip][i * (l as usize + 1) + j]
}

/// Worst absolute crossing-symmetry residual:
/// `R^(k,l)(zeta)^(i,j)_(i',j') = R^(l,k)(-1/(q zeta))^(l-j',i)_(l-j,i')`.
pub fn crossing_residual(
    k: u8,
    l: u8,
    q0: f64,
    zeta0: f64,
    kappa_terms: usize,
) -> Result<f64, ExactError> {
    let r1 = r_u_basis_numeric(k, l, q0, zeta0, kappa_terms)?;
    let r2 = r_u_basis_numeric(l, k, q0, -1.0 / (q0 * zeta0), kappa_terms)?;
    let mut worst: f64 = 0.0;
    for i in 0..=k as usize {
        for j in 0..=l as usize {
            for ip in 0..=k as usize {
                for jp in 0..=l as usize {
                    let lhs = comp(&r1, k, l, i, j, ip, jp);
                    let rhs = comp(&r2, l, k, l as usize - jp, i, l as usize - j, ip);
                    worst = worst.max((lhs - rhs).abs());
                }
            }
        }
    }
    Ok(worst)
}

/// Worst absolute deviation of `R^(l,k)(1/zeta) . R^(k,l)(zeta)` from the
/// identity (the normalised unitarity property).
pub fn unitarity_residual_numeric(
    k: u8,
    l: u8,
    q0: f64,
    zeta0: f64,
    kappa_terms: usize,
) -> Result<f64, ExactError> {
    let r1 = r_u_basis_numeric(k, l, q0, zeta0, kappa_terms)?;
    let r2 = r_u_basis_numeric(l, k, q0, 1.0 / zeta0, kappa_terms)?;
    let dim = r1.len();
    let mut worst: f64 = 0.0;
    for i in 0..dim {
        for j in 0..dim {
            let mut acc = 0.0;
            for t in 0..dim {
                acc += r2[i][t] * r1[t][j];
            }
            let expect = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((acc - expect).abs());
        }
    }
    Ok(worst)
}
