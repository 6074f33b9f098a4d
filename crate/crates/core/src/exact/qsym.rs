//! q-integers, q-factorials and q-binomial coefficients.
//!
//! `[a] = (q^a - q^-a)/(q - q^-1)`, a symmetric Laurent polynomial; the
//! factorials and binomials are built from it.  Everything is returned as a
//! reduced [`RationalFn`] (Laurent polynomials have pure `q`-power
//! denominators).

use super::poly::{Poly, Var};
use super::ratfn::RationalFn;

/// The q-integer `[a]`; `[-a] = -[a]` and `[0] = 0`.
pub fn q_int(a: i64) -> RationalFn {
    if a == 0 {
        return RationalFn::zero();
    }
    if a < 0 {
        return -q_int(-a);
    }
    // [a] = q^(a-1) + q^(a-3) + ... + q^(1-a)  =  (q^(2a-2) + ... + 1)/q^(a-1)
    let mut num = Poly::zero();
    for k in 0..a {
        num = num.add(&Poly::var_pow(Var::Q, (2 * k) as u32));
    }
    RationalFn::new(num, Poly::var_pow(Var::Q, (a - 1) as u32))
}

/// `[a]! = [a][a-1]...[1]`.
pub fn q_factorial(a: i64) -> RationalFn {
    assert!(a >= 0, "q-factorial of a negative integer");
    let mut acc = RationalFn::one();
    for k in 1..=a {
        acc = &acc * &q_int(k);
    }
    acc
}

/// Gaussian binomial `[a]! / ([b]! [a-b]!)`; rejects `b < 0` or `b > a`.
pub fn q_binom(a: i64, b: i64) -> RationalFn {
    assert!(
        (0..=a).contains(&b),
        "q-binomial out of range: ({a}, {b})"
    );
    &q_factorial(a) / &(&q_factorial(b) * &q_factorial(a - b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::{Poly, Var};

    fn q_pow(e: i64) -> RationalFn {
        RationalFn::q_pow(e)
    }

    #[test]
    fn small_q_integers() {
        assert_eq!(q_int(0), RationalFn::zero());
        assert_eq!(q_int(1), RationalFn::one());
        // [3] = q^2 + 1 + q^-2
        let expect = &(&q_pow(2) + &RationalFn::one()) + &q_pow(-2);
        assert_eq!(q_int(3), expect);
        assert_eq!(q_int(-3), -q_int(3));
    }

    #[test]
    fn defining_identity() {
        // [a] (q - q^-1) = q^a - q^-a
        for a in -6..=6 {
            let lhs = &q_int(a) * &(&q_pow(1) - &q_pow(-1));
            let rhs = &q_pow(a) - &q_pow(-a);
            assert_eq!(lhs, rhs, "a = {a}");
        }
    }

    #[test]
    fn binom_basics() {
        assert_eq!(q_binom(2, 1), q_int(2));
        for a in 0..=6 {
            assert_eq!(q_binom(a, 0), RationalFn::one());
            for b in 0..=a {
                assert_eq!(q_binom(a, b), q_binom(a, a - b), "({a},{b})");
            }
        }
    }

    #[test]
    fn binom_4_2_expansion() {
        // Frozen from the polynomial-division oracle in the factorial form:
        // q^4 + q^2 + 2 + q^-2 + q^-4.
        let mut num = Poly::zero();
        for (e, c) in [(8, 1), (6, 1), (4, 2), (2, 1), (0, 1)] {
            num = num.add(&Poly::var_pow(Var::Q, e).scale(
                &num_rational::BigRational::from_integer(num_bigint::BigInt::from(c)),
            ));
        }
        let expect = RationalFn::new(num, Poly::var_pow(Var::Q, 4));
        assert_eq!(q_binom(4, 2), expect);
    }

    #[test]
    fn binom_symmetric_under_q_inversion() {
        // Substituting q -> 1/q fixes the binomial: check by evaluating at
        // rational points.
        use num_rational::BigRational;
        let f = q_binom(5, 2);
        for (n, d) in [(1i64, 3i64), (-2, 5), (3, 7)] {
            let q0 = BigRational::new(n.into(), d.into());
            let qinv = BigRational::new(d.into(), n.into());
            let one = BigRational::from_integer(1.into());
            let a = crate::exact::eval::eval_exact(&f, &q0, &one).unwrap();
            let b = crate::exact::eval::eval_exact(&f, &qinv, &one).unwrap();
            assert_eq!(a, b);
        }
    }
}
