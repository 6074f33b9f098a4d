//! Sparse multivariate polynomials over arbitrary-precision rationals.
//!
//! The coefficient ring for all symbolic R-matrix work is generated by the
//! deformation parameter `q`, the spectral variable `z`, and an auxiliary
//! square root `w` with `w^2 = z` (half-integer powers of the spectral
//! parameter appear in odd-level conjugations).  Internally we eliminate `z`
//! through that relation and store exponents in `(q, w)` only, so the ring
//! is an honest UFD and gcd computations stay ordinary.  A `z`-exponent of
//! `k` is a `w`-exponent of `2k`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Formal variables of the coefficient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    Q,
    /// Spectral variable, `z = w^2`.
    Z,
    /// Square root of the spectral variable.
    W,
    /// Auxiliary second spectral ratio, used by the Yang-Baxter check where
    /// two independent ratios appear at once.
    Y,
}

/// Monomial `q^q * w^w * y^y` (with `z = w^2` folded into the `w`
/// exponent).
///
/// Ordered by graded lexicographic order with `q` before `w` before `y`;
/// this is the fixed order used for canonical forms and pivot selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mono {
    pub q: u32,
    pub w: u32,
    pub y: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { q: 0, w: 0, y: 0 };

    fn total(&self) -> u64 {
        self.q as u64 + self.w as u64 + self.y as u64
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono {
            q: self.q + other.q,
            w: self.w + other.w,
            y: self.y + other.y,
        }
    }

    fn divides(&self, other: &Mono) -> bool {
        self.q <= other.q && self.w <= other.w && self.y <= other.y
    }

    fn div(&self, other: &Mono) -> Mono {
        Mono {
            q: self.q - other.q,
            w: self.w - other.w,
            y: self.y - other.y,
        }
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then(self.q.cmp(&other.q))
            .then(self.w.cmp(&other.w))
            .then(self.y.cmp(&other.y))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with `BigRational` coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    /// Nonzero terms only, keyed by monomial.
    terms: BTreeMap<Mono, BigRational>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::ONE, c);
        }
        Poly { terms }
    }

    pub fn int(n: i64) -> Poly {
        Poly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    /// The monomial `v^e`.
    pub fn var_pow(v: Var, e: u32) -> Poly {
        let m = match v {
            Var::Q => Mono { q: e, w: 0, y: 0 },
            Var::Z => Mono { q: 0, w: 2 * e, y: 0 },
            Var::W => Mono { q: 0, w: e, y: 0 },
            Var::Y => Mono { q: 0, w: 0, y: e },
        };
        let mut terms = BTreeMap::new();
        terms.insert(m, BigRational::one());
        Poly { terms }
    }

    pub fn var(v: Var) -> Poly {
        Poly::var_pow(v, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Mono::ONE)
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| *m == Mono::ONE)
    }

    /// Constant value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            Some(BigRational::zero())
        } else if self.is_constant() {
            self.terms.get(&Mono::ONE).cloned()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(|m| m.total()).max().unwrap_or(0)
    }

    pub fn degree(&self, v: Var) -> u32 {
        self.terms
            .keys()
            .map(|m| match v {
                Var::Q => m.q,
                Var::Z => m.w / 2,
                Var::W => m.w,
                Var::Y => m.y,
            })
            .max()
            .unwrap_or(0)
    }

    /// Leading term under the fixed monomial order.
    pub fn leading(&self) -> Option<(&Mono, &BigRational)> {
        self.terms.iter().next_back()
    }

    fn insert(&mut self, m: Mono, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(*m, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact division; panics if `other` does not divide `self`.
    ///
    /// Only called with divisors produced by gcd computations, where
    /// exactness is an invariant; failure indicates an internal bug.
    pub fn exact_div(&self, other: &Poly) -> Poly {
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        let (lm, lc) = other.leading().expect("division by zero polynomial");
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().unwrap();
            assert!(
                lm.divides(rm),
                "non-exact polynomial division (leading monomial)"
            );
            let m = rm.div(lm);
            let c = rc / lc;
            let mut t = Poly::zero();
            t.insert(m, c.clone());
            quot.insert(m, c);
            rem = rem.sub(&t.mul(other));
        }
        quot
    }

    /// Partial derivative.
    pub fn derivative(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            match v {
                Var::Q => {
                    if m.q > 0 {
                        out.insert(
                            Mono { q: m.q - 1, w: m.w, y: m.y },
                            c * BigRational::from_integer(BigInt::from(m.q)),
                        );
                    }
                }
                // d/dw, i.e. d/dzeta with z = zeta^2 already folded in.
                Var::W | Var::Z => {
                    if m.w > 0 {
                        out.insert(
                            Mono { q: m.q, w: m.w - 1, y: m.y },
                            c * BigRational::from_integer(BigInt::from(m.w)),
                        );
                    }
                }
                Var::Y => {
                    if m.y > 0 {
                        out.insert(
                            Mono { q: m.q, w: m.w, y: m.y - 1 },
                            c * BigRational::from_integer(BigInt::from(m.y)),
                        );
                    }
                }
            }
        }
        out
    }

    /// Substitute `w = 1` (hence `z = 1`), leaving a polynomial in `q`.
    pub fn at_w_one(&self) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.insert(Mono { q: m.q, w: 0, y: m.y }, c.clone());
        }
        out
    }

    /// True when every `w`-exponent is even (the polynomial lies in the
    /// subring generated by `q` and `z`) and no auxiliary `y` appears.
    pub fn is_w_free(&self) -> bool {
        self.terms.keys().all(|m| m.w % 2 == 0 && m.y == 0)
    }

    /// Evaluate over `f64`; `w` takes the value `sqrt(z0)`.
    pub fn eval_f64(&self, q0: f64, z0: f64) -> f64 {
        let w0 = z0.sqrt();
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            debug_assert_eq!(m.y, 0, "auxiliary variable has no numeric value");
            let c = rational_to_f64(c);
            acc += c * q0.powi(m.q as i32) * w0.powi(m.w as i32);
        }
        acc
    }

    /// Evaluate exactly at rational `(q0, z0)`; requires a `w`-free
    /// polynomial.
    pub fn eval_exact(&self, q0: &BigRational, z0: &BigRational) -> Option<BigRational> {
        if !self.is_w_free() {
            return None;
        }
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            acc += c * pow_rational(q0, m.q) * pow_rational(z0, m.w / 2);
        }
        Some(acc)
    }

    /// Order of vanishing in `q` (minimal `q`-exponent); `None` for zero.
    pub fn q_order(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.q).min()
    }

    /// Coefficient (a polynomial in `w`) of the lowest power of `q`.
    pub fn q_lowest_coeff(&self) -> Poly {
        let Some(ord) = self.q_order() else {
            return Poly::zero();
        };
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if m.q == ord {
                out.insert(Mono { q: 0, w: m.w, y: m.y }, c.clone());
            }
        }
        out
    }

    /// Clear coefficient denominators, returning an integer polynomial and
    /// the multiplier used.
    fn to_integer(&self) -> (IntPoly, BigInt) {
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = num_integer::lcm(lcm, c.denom().clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (*m, c.numer() * (&lcm / c.denom())))
            .collect();
        (IntPoly { terms }, lcm)
    }

    /// Greatest common divisor, normalised to be primitive over the
    /// integers with positive leading coefficient.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.normalized_primitive();
        }
        if other.is_zero() {
            return self.normalized_primitive();
        }
        let (a, _) = self.to_integer();
        let (b, _) = other.to_integer();
        let g = a.gcd(&b);
        g.to_poly()
    }

    fn normalized_primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let (a, _) = self.to_integer();
        a.primitive().to_poly()
    }
}

fn pow_rational(x: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

pub(crate) fn rational_to_f64(c: &BigRational) -> f64 {
    // Good enough for the numeric checks: split into quotient and remainder
    // to stay accurate for large numerators.
    let n = c.numer();
    let d = c.denom();
    let (q, r) = num_integer::Integer::div_rem(n, d);
    let qf: f64 = big_to_f64(&q);
    let rf: f64 = big_to_f64(&r) / big_to_f64(d);
    qf + rf
}

fn big_to_f64(n: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    n.to_f64().unwrap_or(f64::NAN)
}

// ---------------------------------------------------------------------------
// Integer polynomials: the gcd workhorse.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Default)]
struct IntPoly {
    terms: BTreeMap<Mono, BigInt>,
}

impl IntPoly {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn to_poly(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, BigRational::from_integer(c.clone())))
                .collect(),
        }
    }

    fn insert(&mut self, m: Mono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut out = IntPoly::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    fn sub(&self, other: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(*m, -c.clone());
        }
        out
    }

    fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::default();
        }
        IntPoly {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    fn degree(&self, v: Var) -> u32 {
        self.terms
            .keys()
            .map(|m| match v {
                Var::Q => m.q,
                Var::Y => m.y,
                _ => m.w,
            })
            .max()
            .unwrap_or(0)
    }

    /// View as univariate in `v`: map from exponent to coefficient.
    fn as_univariate(&self, v: Var) -> BTreeMap<u32, IntPoly> {
        let mut out: BTreeMap<u32, IntPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = match v {
                Var::Q => (m.q, Mono { q: 0, w: m.w, y: m.y }),
                Var::Y => (m.y, Mono { q: m.q, w: m.w, y: 0 }),
                _ => (m.w, Mono { q: m.q, w: 0, y: m.y }),
            };
            out.entry(e).or_default().insert(rest, c.clone());
        }
        out
    }

    fn from_univariate(v: Var, coeffs: &BTreeMap<u32, IntPoly>) -> IntPoly {
        let mut out = IntPoly::default();
        for (e, p) in coeffs {
            for (m, c) in &p.terms {
                let m2 = match v {
                    Var::Q => Mono { q: m.q + e, w: m.w, y: m.y },
                    Var::Y => Mono { q: m.q, w: m.w, y: m.y + e },
                    _ => Mono { q: m.q, w: m.w + e, y: m.y },
                };
                out.insert(m2, c.clone());
            }
        }
        out
    }

    fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = num_integer::gcd(g, c.abs());
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::default();
        }
        let mut c = self.int_content();
        if self.terms.iter().next_back().unwrap().1.is_negative() {
            c = -c;
        }
        IntPoly {
            terms: self.terms.iter().map(|(m, k)| (*m, k / &c)).collect(),
        }
    }

    fn exact_div(&self, other: &IntPoly) -> IntPoly {
        let mut rem = self.clone();
        let mut quot = IntPoly::default();
        let (lm, lc) = rem_leading(other).expect("integer division by zero polynomial");
        while !rem.is_zero() {
            let (rm, rc) = rem_leading(&rem).unwrap();
            assert!(lm.divides(&rm), "non-exact integer polynomial division");
            let (d, r) = num_integer::Integer::div_rem(&rc, &lc);
            assert!(r.is_zero(), "non-exact integer polynomial division");
            let m = rm.div(&lm);
            let mut t = IntPoly::default();
            t.insert(m, d.clone());
            quot.insert(m, d);
            rem = rem.sub(&t.mul(other));
        }
        quot
    }

    /// Multivariate gcd by primitive pseudo-remainder sequences, recursing
    /// through the (at most two) variables.
    fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        // Pick a main variable present in either operand.
        let v = if self.degree(Var::Q) > 0 || other.degree(Var::Q) > 0 {
            Var::Q
        } else if self.degree(Var::W) > 0 || other.degree(Var::W) > 0 {
            Var::W
        } else if self.degree(Var::Y) > 0 || other.degree(Var::Y) > 0 {
            Var::Y
        } else {
            // Both constants.
            let g = num_integer::gcd(
                self.terms.values().next().unwrap().abs(),
                other.terms.values().next().unwrap().abs(),
            );
            let mut out = IntPoly::default();
            out.insert(Mono::ONE, g);
            return out;
        };

        let ua = self.as_univariate(v);
        let ub = other.as_univariate(v);
        let cont_a = poly_content(&ua);
        let cont_b = poly_content(&ub);
        let cont_g = cont_a.gcd(&cont_b);

        let mut a = divide_univariate(&ua, &cont_a);
        let mut b = divide_univariate(&ub, &cont_b);
        if univ_degree(&a) < univ_degree(&b) {
            std::mem::swap(&mut a, &mut b);
        }
        // Primitive PRS.
        loop {
            if b.is_empty() {
                let pp = IntPoly::from_univariate(v, &a).primitive();
                return pp.mul(&cont_g).primitive_signed();
            }
            let r = pseudo_rem(v, &a, &b);
            a = b;
            b = make_primitive(&r);
        }
    }

    fn primitive_signed(&self) -> IntPoly {
        // Content was already handled; just fix the sign.
        if self.is_zero() {
            return IntPoly::default();
        }
        if self.terms.iter().next_back().unwrap().1.is_negative() {
            self.scale(&BigInt::from(-1))
        } else {
            self.clone()
        }
    }
}

fn rem_leading(p: &IntPoly) -> Option<(Mono, BigInt)> {
    p.terms.iter().next_back().map(|(m, c)| (*m, c.clone()))
}

type Univ = BTreeMap<u32, IntPoly>;

fn univ_degree(u: &Univ) -> u32 {
    u.keys().next_back().copied().unwrap_or(0)
}

fn poly_content(u: &Univ) -> IntPoly {
    let mut g = IntPoly::default();
    for c in u.values() {
        g = g.gcd(c);
    }
    g
}

fn divide_univariate(u: &Univ, d: &IntPoly) -> Univ {
    u.iter().map(|(e, c)| (*e, c.exact_div(d))).collect()
}

fn make_primitive(u: &Univ) -> Univ {
    let mut u: Univ = u
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| (*e, c.clone()))
        .collect();
    if u.is_empty() {
        return u;
    }
    let cont = poly_content(&u);
    u = divide_univariate(&u, &cont);
    u
}

/// Pseudo-remainder of `a` by `b` as univariate polynomials in `v`.
fn pseudo_rem(v: Var, a: &Univ, b: &Univ) -> Univ {
    let db = univ_degree(b);
    let lb = b.get(&db).cloned().unwrap_or_default();
    let mut r: Univ = a.clone();
    loop {
        let dr = match r.keys().next_back() {
            Some(d) => *d,
            None => return r,
        };
        if dr < db {
            return r;
        }
        let lr = r.get(&dr).cloned().unwrap();
        // r <- lb*r - lr * x^(dr-db) * b
        let mut out: Univ = BTreeMap::new();
        for (e, c) in &r {
            insert_univ(&mut out, *e, c.mul(&lb));
        }
        for (e, c) in b {
            insert_univ(&mut out, e + dr - db, c.mul(&lr).scale(&BigInt::from(-1)));
        }
        r = out
            .into_iter()
            .filter(|(_, c): &(u32, IntPoly)| !c.is_zero())
            .collect();
        let _ = v;
    }
}

fn insert_univ(u: &mut Univ, e: u32, p: IntPoly) {
    use std::collections::btree_map::Entry;
    match u.entry(e) {
        Entry::Vacant(en) => {
            if !p.is_zero() {
                en.insert(p);
            }
        }
        Entry::Occupied(mut en) => {
            let mut s = en.get().clone();
            for (m, c) in p.terms {
                s.insert(m, c);
            }
            if s.is_zero() {
                en.remove();
            } else {
                *en.get_mut() = s;
            }
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let cs = c.to_string();
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *m == Mono::ONE {
                write!(f, "{cs}")?;
                continue;
            }
            if !c.is_one() {
                write!(f, "{cs}*")?;
            }
            let mut parts = Vec::new();
            if m.q > 0 {
                parts.push(if m.q == 1 {
                    "q".to_string()
                } else {
                    format!("q^{}", m.q)
                });
            }
            let zexp = m.w / 2;
            let wexp = m.w % 2;
            if zexp > 0 {
                parts.push(if zexp == 1 {
                    "z".to_string()
                } else {
                    format!("z^{zexp}")
                });
            }
            if wexp > 0 {
                parts.push("w".to_string());
            }
            if m.y > 0 {
                parts.push(if m.y == 1 {
                    "y".to_string()
                } else {
                    format!("y^{}", m.y)
                });
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Poly {
        Poly::var(Var::Q)
    }
    fn z() -> Poly {
        Poly::var(Var::Z)
    }
    fn w() -> Poly {
        Poly::var(Var::W)
    }

    #[test]
    fn w_square_is_z() {
        assert_eq!(w().mul(&w()), z());
    }

    #[test]
    fn ring_axioms_spot() {
        let a = q().add(&z());
        let b = q().mul(&q()).sub(&Poly::int(3));
        let c = w().add(&Poly::int(1));
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = q().add(&Poly::int(1)).mul(&z().sub(&q().pow(2)));
        let b = q().add(&Poly::int(1));
        assert_eq!(a.exact_div(&b), z().sub(&q().pow(2)));
    }

    #[test]
    fn gcd_of_products() {
        let common = q().pow(2).add(&Poly::int(1));
        let a = common.mul(&z().add(&Poly::int(2)));
        let b = common.mul(&q().sub(&Poly::int(5)));
        let g = a.gcd(&b);
        assert_eq!(g, common);
    }

    #[test]
    fn gcd_mixed_vars() {
        let common = w().mul(&q()).add(&Poly::int(1));
        let a = common.mul(&common).mul(&q());
        let b = common.mul(&z());
        assert_eq!(a.gcd(&b), common);
    }

    #[test]
    fn derivative_chain_rule_via_w() {
        // d/dzeta of z = w^2 is 2w.
        let d = z().derivative(Var::W);
        assert_eq!(d, w().scale(&BigRational::from_integer(2.into())));
    }
}
