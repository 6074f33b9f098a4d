//! Numeric and exact evaluation of rational functions.

use super::poly::rational_to_f64;
use super::ratfn::RationalFn;
use super::ExactError;
use num_rational::BigRational;
use num_traits::Zero;

/// Evaluation result: exact when possible, floating point otherwise.
#[derive(Debug, Clone, PartialEq)]
pub enum Number {
    Exact(BigRational),
    Float(f64),
}

impl Number {
    pub fn as_f64(&self) -> f64 {
        match self {
            Number::Exact(r) => rational_to_f64(r),
            Number::Float(x) => *x,
        }
    }
}

/// IEEE-double evaluation at `(q0, z0)`; `w` takes the value `sqrt(z0)`
/// (requires `z0 >= 0` when half-integer powers are present).
pub fn eval_f64(f: &RationalFn, q0: f64, z0: f64) -> Result<f64, ExactError> {
    let d = f.denominator().eval_f64(q0, z0);
    if d == 0.0 || !d.is_finite() {
        return Err(ExactError::PoleAtPoint);
    }
    Ok(f.numerator().eval_f64(q0, z0) / d)
}

/// Exact rational evaluation; only available when no `w` (sqrt of `z`) is
/// present.
pub fn eval_exact(
    f: &RationalFn,
    q0: &BigRational,
    z0: &BigRational,
) -> Result<BigRational, ExactError> {
    let d = f
        .denominator()
        .eval_exact(q0, z0)
        .ok_or(ExactError::WPresent)?;
    if d.is_zero() {
        return Err(ExactError::PoleAtPoint);
    }
    let n = f
        .numerator()
        .eval_exact(q0, z0)
        .ok_or(ExactError::WPresent)?;
    Ok(n / d)
}

/// Exact evaluation when the inputs are rational and the function is
/// `w`-free, floating point otherwise.
pub fn eval_numeric(f: &RationalFn, q0: &BigRational, z0: &BigRational) -> Result<Number, ExactError> {
    match eval_exact(f, q0, z0) {
        Ok(v) => Ok(Number::Exact(v)),
        Err(ExactError::WPresent) => {
            Ok(Number::Float(eval_f64(f, rational_to_f64(q0), rational_to_f64(z0))?))
        }
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::{Poly, Var};
    use crate::exact::qsym::{q_binom, q_int};
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn q_int_2_at_minus_half() {
        // [2] = q + 1/q at q = -1/2 is -5/2.
        let v = eval_exact(&q_int(2), &rat(-1, 2), &rat(1, 1)).unwrap();
        assert_eq!(v, rat(-5, 2));
    }

    #[test]
    fn simple_ratio_at_point() {
        // (z - q^2)/(1 - z q^2) at q = -1/2, z = 1 -> 1.
        let f = RationalFn::new(
            Poly::var(Var::Z).sub(&Poly::var_pow(Var::Q, 2)),
            Poly::one().sub(&Poly::var(Var::Z).mul(&Poly::var_pow(Var::Q, 2))),
        );
        assert_eq!(eval_exact(&f, &rat(-1, 2), &rat(1, 1)).unwrap(), rat(1, 1));
    }

    #[test]
    fn binom_4_2_exact_substitution() {
        // Oracle: substitute q = -1/3 into the frozen Laurent expansion
        // q^4 + q^2 + 2 + q^-2 + q^-4.
        let q0 = rat(-1, 3);
        let direct = eval_exact(&q_binom(4, 2), &q0, &rat(1, 1)).unwrap();
        let mut expect = BigRational::zero();
        for e in [4i64, 2, 0, -2, -4] {
            let term = if e >= 0 {
                num_traits::pow::pow(q0.clone(), e as usize)
            } else {
                num_traits::pow::pow(rat(-3, 1), (-e) as usize)
            };
            expect += term;
        }
        expect += rat(1, 1); // coefficient 2 on the constant term
        assert_eq!(direct, expect);
    }

    #[test]
    fn pole_detected() {
        let f = RationalFn::new(Poly::one(), Poly::var(Var::Z).sub(&Poly::one()));
        assert!(matches!(
            eval_exact(&f, &rat(1, 2), &rat(1, 1)),
            Err(ExactError::PoleAtPoint)
        ));
    }

    #[test]
    fn float_path_for_w() {
        // w at z = 4 evaluates to 2.
        let f = RationalFn::from_poly(Poly::var(Var::W));
        match eval_numeric(&f, &rat(0, 1), &rat(4, 1)).unwrap() {
            Number::Float(x) => assert!((x - 2.0).abs() < 1e-12),
            Number::Exact(_) => panic!("expected float path"),
        }
    }
}
