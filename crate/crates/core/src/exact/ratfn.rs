//! Reduced rational functions in `q`, `z`, `w` over the rationals.

use super::poly::{Poly, Var};
use super::ExactError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact rational function, kept in reduced canonical form: the gcd of
/// numerator and denominator is a unit and the denominator has leading
/// coefficient 1 under the fixed monomial order.  Equality of canonical
/// forms therefore decides equality of the functions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: Poly,
    den: Poly,
}

impl RationalFn {
    pub fn new(num: Poly, den: Poly) -> RationalFn {
        assert!(!den.is_zero(), "zero denominator");
        let mut f = RationalFn { num, den };
        f.reduce();
        f
    }

    pub fn from_poly(p: Poly) -> RationalFn {
        RationalFn {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn zero() -> RationalFn {
        RationalFn::from_poly(Poly::zero())
    }

    pub fn one() -> RationalFn {
        RationalFn::from_poly(Poly::one())
    }

    pub fn int(n: i64) -> RationalFn {
        RationalFn::from_poly(Poly::int(n))
    }

    pub fn rational(r: BigRational) -> RationalFn {
        RationalFn::from_poly(Poly::constant(r))
    }

    pub fn var(v: Var) -> RationalFn {
        RationalFn::from_poly(Poly::var(v))
    }

    /// `q^e` with `e` possibly negative.
    pub fn q_pow(e: i64) -> RationalFn {
        Self::var_ipow(Var::Q, e)
    }

    /// `z^e` with `e` possibly negative.
    pub fn z_pow(e: i64) -> RationalFn {
        Self::var_ipow(Var::Z, e)
    }

    /// `w^e` (i.e. `zeta^e`) with `e` possibly negative.
    pub fn w_pow(e: i64) -> RationalFn {
        Self::var_ipow(Var::W, e)
    }

    fn var_ipow(v: Var, e: i64) -> RationalFn {
        let p = Poly::var_pow(v, e.unsigned_abs() as u32);
        if e >= 0 {
            RationalFn::from_poly(p)
        } else {
            RationalFn::new(Poly::one(), p)
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// Constant value if the function is a constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_one() {
            self.num = self.num.exact_div(&g);
            self.den = self.den.exact_div(&g);
        }
        // Monic denominator fixes the representative among unit multiples.
        let (_, lc) = self.den.leading().expect("nonzero denominator");
        if !lc.is_one() {
            let inv = BigRational::one() / lc.clone();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn recip(&self) -> RationalFn {
        assert!(!self.is_zero(), "reciprocal of zero");
        RationalFn::new(self.den.clone(), self.num.clone())
    }

    /// Substitute `z -> 1/z` (and `w -> 1/w`).  Implemented by flipping the
    /// sign of all `w`-exponents and clearing with a common power.
    pub fn invert_z(&self) -> RationalFn {
        let wn = self.num.degree(Var::W).max(self.den.degree(Var::W));
        let flip = |p: &Poly| -> Poly {
            let mut out = Poly::zero();
            for (m, c) in p.terms() {
                let mut t = Poly::constant(c.clone());
                t = t.mul(&Poly::var_pow(Var::Q, m.q));
                t = t.mul(&Poly::var_pow(Var::W, wn - m.w));
                out = out.add(&t);
            }
            out
        };
        RationalFn::new(flip(&self.num), flip(&self.den))
    }

    pub fn derivative(&self, v: Var) -> RationalFn {
        let n = self
            .num
            .derivative(v)
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative(v)));
        let d = self.den.mul(&self.den);
        RationalFn::new(n, d)
    }

    /// Value and first `zeta`-derivative at `zeta = 1` (i.e. `z = w = 1`),
    /// as rational functions of `q` alone.
    pub fn value_and_slope_at_one(&self) -> Result<(RationalFn, RationalFn), ExactError> {
        let d1 = self.den.at_w_one();
        if d1.is_zero() {
            return Err(ExactError::PoleAtOne);
        }
        let n1 = self.num.at_w_one();
        let value = RationalFn::new(n1, d1.clone());
        let dn = self.num.derivative(Var::W).at_w_one();
        let dd = self.den.derivative(Var::W).at_w_one();
        let slope = RationalFn::new(
            dn.mul(&d1).sub(&self.num.at_w_one().mul(&dd)),
            d1.mul(&d1),
        );
        Ok((value, slope))
    }

    /// Limit as `q -> 0` for a function of `q` alone.
    pub fn limit_q_to_zero(&self) -> Result<BigRational, ExactError> {
        assert!(
            self.num.degree(Var::W) == 0 && self.den.degree(Var::W) == 0,
            "limit_q_to_zero requires a function of q alone"
        );
        if self.num.is_zero() {
            return Ok(BigRational::zero());
        }
        let on = self.num.q_order().unwrap();
        let od = self.den.q_order().unwrap();
        match on.cmp(&od) {
            std::cmp::Ordering::Greater => Ok(BigRational::zero()),
            std::cmp::Ordering::Equal => {
                let cn = self
                    .num
                    .q_lowest_coeff()
                    .as_constant()
                    .expect("q-only function");
                let cd = self
                    .den
                    .q_lowest_coeff()
                    .as_constant()
                    .expect("q-only function");
                Ok(cn / cd)
            }
            std::cmp::Ordering::Less => Err(ExactError::DivergentLimit),
        }
    }

    /// Total degree bound used for pivot selection.
    pub fn complexity(&self) -> u64 {
        self.num.total_degree() + self.den.total_degree()
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, other: &RationalFn) -> RationalFn {
        RationalFn::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, other: &RationalFn) -> RationalFn {
        RationalFn::new(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, other: &RationalFn) -> RationalFn {
        RationalFn::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }
}

impl Div for &RationalFn {
    type Output = RationalFn;
    fn div(self, other: &RationalFn) -> RationalFn {
        assert!(!other.is_zero(), "division by zero rational function");
        RationalFn::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFn {
            type Output = RationalFn;
            fn $m(self, other: RationalFn) -> RationalFn {
                (&self).$m(&other)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        -&self
    }
}

impl From<i64> for RationalFn {
    fn from(n: i64) -> RationalFn {
        RationalFn::int(n)
    }
}

impl From<BigInt> for RationalFn {
    fn from(n: BigInt) -> RationalFn {
        RationalFn::rational(BigRational::from_integer(n))
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
