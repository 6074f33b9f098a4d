//! The `q -> 0` combinatorial tables of the expanded R-matrix.
//!
//! The weight-basis matrix is conjugated into the spin basis through the
//! diagonal gauge `b_j = qbinom(n, j) q^(j(n-j))` (the square of the usual
//! coefficient): the squared gauge keeps every entry an honest rational
//! function, and since `b_j -> 1` as `q -> 0` its square root does too, so
//! the `q -> 0` tables are unchanged.  Odd powers of `zeta` ride on the
//! auxiliary square root `w`.

use super::rhat::rhat_projector;
use crate::exact::qsym::q_binom;
use crate::exact::ratfn::RationalFn;
use crate::exact::rfmatrix::RFMatrix;
use crate::exact::series::series_at_one;
use crate::exact::ExactError;
use num_traits::ToPrimitive;
use std::collections::BTreeMap;

fn gauge(n: u8, j: usize) -> RationalFn {
    &q_binom(n as i64, j as i64) * &RationalFn::q_pow(j as i64 * (n as i64 - j as i64))
}

/// The spin-basis matrix `Rbar^(k,l)(zeta)` in the squared-diagonal gauge,
/// over rational functions of `q`, `z`, `w`.
pub fn rbar_gauged(k: u8, l: u8) -> Result<RFMatrix, ExactError> {
    let r = rhat_projector(k, l)?;
    let (dk, dl) = (k as usize + 1, l as usize + 1);
    let mut out = RFMatrix::zeros(dk * dl, dk * dl);
    for i in 0..dk {
        for j in 0..dl {
            for ip in 0..dk {
                for jp in 0..dl {
                    let e = &r[(jp * dk + ip, i * dl + j)];
                    if e.is_zero() {
                        continue;
                    }
                    let g = &(&gauge(k, i) * &gauge(l, j))
                        / &(&gauge(k, ip) * &gauge(l, jp));
                    let zeta_shift =
                        RationalFn::w_pow(i as i64 - ip as i64);
                    out[(jp * dk + ip, i * dl + j)] = &(e * &g) * &zeta_shift;
                }
            }
        }
    }
    Ok(out)
}

/// First-order expansion of the spin-basis matrix at `zeta = 1`:
/// `(Rbar_0, Rbar_1)` over rational functions of `q` alone.
pub fn rbar_series(k: u8, l: u8) -> Result<(RFMatrix, RFMatrix), ExactError> {
    series_at_one(&rbar_gauged(k, l)?)
}

/// The `q -> 0` table of `Rbar_0` (order 0) or `Rbar_1` (order 1): each
/// input `(i, j)` maps to a list of `((i', j'), integer coefficient)`.
pub fn rbar_q0_table(
    k: u8,
    l: u8,
    order: u8,
) -> Result<BTreeMap<(usize, usize), Vec<((usize, usize), i64)>>, ExactError> {
    assert!(order <= 1, "only orders 0 and 1 exist");
    let (m0, m1) = rbar_series(k, l)?;
    let m = if order == 0 { m0 } else { m1 };
    let (dk, dl) = (k as usize + 1, l as usize + 1);
    let mut table = BTreeMap::new();
    for i in 0..dk {
        for j in 0..dl {
            let mut images = Vec::new();
            for ip in 0..dk {
                for jp in 0..dl {
                    let lim = m[(jp * dk + ip, i * dl + j)].limit_q_to_zero()?;
                    if !num_traits::Zero::is_zero(&lim) {
                        assert!(
                            lim.is_integer(),
                            "q -> 0 coefficient is not an integer: {lim}"
                        );
                        images.push(((ip, jp), lim.to_integer().to_i64().unwrap()));
                    }
                }
            }
            table.insert((i, j), images);
        }
    }
    Ok(table)
}

/// Closed-form image of `Rbar_0` at `q -> 0` on `u_i^(k) (x) u_j^(l)`,
/// returned as the output pair `(i', j')` meaning `u_(j')^(l) (x)
/// u_(i')^(k)`.  The four cases partition by where `i + j` sits relative to
/// the levels; on overlaps the applicable formulas coincide and the first
/// matching case is evaluated.
pub fn zerot_image(k: u8, l: u8, i: usize, j: usize) -> (usize, usize) {
    let (k, l) = (k as usize, l as usize);
    let s = i + j;
    if s <= k && s <= l {
        // sequence of values kept, levels swapped
        (j, i)
    } else if k <= s && s <= l {
        (k - i, 2 * i + j - k)
    } else if l <= s && s <= k {
        (i + 2 * j - l, l - j)
    } else {
        (j + k - l, i + l - k)
    }
}

/// Closed-form coefficient of `Rbar_1` at `q -> 0` on `u_i^(k) (x)
/// u_j^(l)` (the image indices agree with [`zerot_image`]).
pub fn rlimit2_coeff(k: u8, l: u8, i: usize, j: usize) -> i64 {
    let (k, l) = (k as i64, l as i64);
    let s = i as i64 + j as i64;
    if s <= k && s <= l {
        s
    } else if k <= s && s <= l {
        k
    } else if l <= s && s <= k {
        l
    } else {
        k + l - s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_cases_coincide() {
        // Where two of the four case conditions hold simultaneously, all
        // applicable formulas must give the same image and coefficient.
        for k in 0..=4u8 {
            for l in 0..=4u8 {
                for i in 0..=k as usize {
                    for j in 0..=l as usize {
                        let s = i + j;
                        let mut images = Vec::new();
                        let mut coeffs = Vec::new();
                        if s <= k as usize && s <= l as usize {
                            images.push((j, i));
                            coeffs.push(s as i64);
                        }
                        if k as usize <= s && s <= l as usize {
                            images.push((k as usize - i, 2 * i + j - k as usize));
                            coeffs.push(k as i64);
                        }
                        if l as usize <= s && s <= k as usize {
                            images.push((i + 2 * j - l as usize, l as usize - j));
                            coeffs.push(l as i64);
                        }
                        if s >= k as usize && s >= l as usize {
                            images.push((j + k as usize - l as usize, i + l as usize - k as usize));
                            coeffs.push(k as i64 + l as i64 - s as i64);
                        }
                        assert!(!images.is_empty());
                        assert!(
                            images.iter().all(|x| *x == images[0]),
                            "images disagree at (k,l,i,j)=({k},{l},{i},{j}): {images:?}"
                        );
                        assert!(coeffs.iter().all(|x| *x == coeffs[0]));
                    }
                }
            }
        }
    }

    #[test]
    fn spec_spot_values() {
        // (k,l) = (1,2), (i,j) = (1,1): second case, image u_2 (x) u_0.
        assert_eq!(zerot_image(1, 2, 1, 1), (0, 2));
        // (0,0) stays put for any levels.
        assert_eq!(zerot_image(3, 2, 0, 0), (0, 0));
        // order 1 at (2,2), (1,0): coefficient i+j = 1.
        assert_eq!(rlimit2_coeff(2, 2, 1, 0), 1);
    }

    #[test]
    fn tables_match_closed_forms_small() {
        for (k, l) in [(1u8, 1u8), (1, 2), (2, 1)] {
            let t0 = rbar_q0_table(k, l, 0).unwrap();
            let t1 = rbar_q0_table(k, l, 1).unwrap();
            for i in 0..=k as usize {
                for j in 0..=l as usize {
                    let img = zerot_image(k, l, i, j);
                    assert_eq!(
                        t0[&(i, j)],
                        vec![(img, 1)],
                        "(k,l,i,j) = ({k},{l},{i},{j})"
                    );
                    let c = rlimit2_coeff(k, l, i, j);
                    let expect: Vec<_> = if c == 0 { vec![] } else { vec![(img, c)] };
                    assert_eq!(t1[&(i, j)], expect, "(k,l,i,j) = ({k},{l},{i},{j})");
                }
            }
        }
    }
}
