//! Principal evaluation modules and the Chevalley generator action.

use crate::exact::poly::Var;
use crate::exact::qsym::q_int;
use crate::exact::ratfn::RationalFn;
use crate::exact::rfmatrix::RFMatrix;

/// Chevalley generators of the quantum affine algebra (derived subalgebra).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    E0,
    E1,
    F0,
    F1,
    T0,
    T1,
}

impl Gen {
    pub const ALL: [Gen; 6] = [Gen::E0, Gen::E1, Gen::F0, Gen::F1, Gen::T0, Gen::T1];

    /// The Cartan element paired with this generator's index.
    fn cartan(self) -> Gen {
        match self {
            Gen::E0 | Gen::F0 | Gen::T0 => Gen::T0,
            Gen::E1 | Gen::F1 | Gen::T1 => Gen::T1,
        }
    }

    fn is_lowering(self) -> bool {
        matches!(self, Gen::F0 | Gen::F1)
    }

    fn is_raising(self) -> bool {
        matches!(self, Gen::E0 | Gen::E1)
    }
}

/// The level-`n` evaluation module with weight basis `v_0, ..., v_n` and a
/// formal spectral parameter.
#[derive(Debug, Clone)]
pub struct EvalModule {
    level: u8,
    spectral: RationalFn,
}

impl EvalModule {
    /// Module with the default formal spectral variable `z`.
    pub fn new(level: u8) -> EvalModule {
        EvalModule {
            level,
            spectral: RationalFn::var(Var::Z),
        }
    }

    pub fn with_spectral(level: u8, spectral: RationalFn) -> EvalModule {
        EvalModule { level, spectral }
    }

    pub fn level(&self) -> u8 {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.level as usize + 1
    }

    pub fn spectral(&self) -> &RationalFn {
        &self.spectral
    }

    /// Eigenvalue of `t_i` on `v_j`.
    pub fn t_eigenvalue(&self, gen: Gen, j: usize) -> RationalFn {
        let n = self.level as i64;
        let j = j as i64;
        match gen.cartan() {
            Gen::T1 => RationalFn::q_pow(n - 2 * j),
            Gen::T0 => RationalFn::q_pow(2 * j - n),
            _ => unreachable!(),
        }
    }
}

/// Action of a generator on the basis vector `v_j`, as a formal linear
/// combination `[(coefficient, target index)]`.
///
/// `f_1 v_j = [n-j] v_{j+1}`, `e_1 v_j = [j] v_{j-1}`,
/// `t_1 v_j = q^(n-2j) v_j`, and the affine generators act through
/// `e_0 = z f_1`, `f_0 = z^-1 e_1`, `t_0 = t_1^-1`.  Out-of-range targets
/// simply do not appear (their coefficient is zero).
pub fn chevalley_act(gen: Gen, module: &EvalModule, j: usize) -> Vec<(RationalFn, usize)> {
    assert!(j < module.dim(), "basis index out of range");
    let n = module.level as i64;
    let z = &module.spectral;
    match gen {
        Gen::F1 => {
            if j + 1 <= module.level as usize {
                vec![(q_int(n - j as i64), j + 1)]
            } else {
                vec![]
            }
        }
        Gen::E1 => {
            if j >= 1 {
                vec![(q_int(j as i64), j - 1)]
            } else {
                vec![]
            }
        }
        Gen::E0 => chevalley_act(Gen::F1, module, j)
            .into_iter()
            .map(|(c, t)| (&c * z, t))
            .collect(),
        Gen::F0 => chevalley_act(Gen::E1, module, j)
            .into_iter()
            .map(|(c, t)| (&c / z, t))
            .collect(),
        Gen::T0 | Gen::T1 => vec![(module.t_eigenvalue(gen, j), j)],
    }
    .into_iter()
    .filter(|(c, _)| !c.is_zero())
    .collect()
}

/// Matrix of the coproduct action of `gen` on `A (x) B`, on the flattened
/// basis `v_i (x) v_j -> i * dim(B) + j` (columns are inputs).
///
/// Coproduct: `e -> e(x)1 + t(x)e`, `f -> f(x)t^-1 + 1(x)f`, `t -> t(x)t`.
pub fn coproduct_matrix(gen: Gen, a: &EvalModule, b: &EvalModule) -> RFMatrix {
    let (da, db) = (a.dim(), b.dim());
    let mut m = RFMatrix::zeros(da * db, da * db);
    for i in 0..da {
        for j in 0..db {
            let col = i * db + j;
            if gen.is_raising() {
                for (c, t) in chevalley_act(gen, a, i) {
                    m[(t * db + j, col)] = &m[(t * db + j, col)] + &c;
                }
                let tv = a.t_eigenvalue(gen, i);
                for (c, t) in chevalley_act(gen, b, j) {
                    m[(i * db + t, col)] = &m[(i * db + t, col)] + &(&tv * &c);
                }
            } else if gen.is_lowering() {
                let tv_inv = b.t_eigenvalue(gen, j).recip();
                for (c, t) in chevalley_act(gen, a, i) {
                    m[(t * db + j, col)] = &m[(t * db + j, col)] + &(&c * &tv_inv);
                }
                for (c, t) in chevalley_act(gen, b, j) {
                    m[(i * db + t, col)] = &m[(i * db + t, col)] + &c;
                }
            } else {
                let c = &a.t_eigenvalue(gen, i) * &b.t_eigenvalue(gen, j);
                m[(col, col)] = c;
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f1_on_spin_half() {
        // f_1 v_0 = [1] v_1 = v_1 on the level-1 module.
        let m = EvalModule::new(1);
        let out = chevalley_act(Gen::F1, &m, 0);
        assert_eq!(out, vec![(RationalFn::one(), 1)]);
    }

    #[test]
    fn e1_kills_top_vector() {
        let m = EvalModule::new(2);
        assert!(chevalley_act(Gen::E1, &m, 0).is_empty());
    }

    #[test]
    fn e0_is_z_times_f1() {
        let m = EvalModule::new(1);
        let out = chevalley_act(Gen::E0, &m, 0);
        assert_eq!(out, vec![(RationalFn::var(Var::Z), 1)]);
    }

    #[test]
    fn t0_inverse_of_t1() {
        let m = EvalModule::new(3);
        for j in 0..4 {
            let t1 = m.t_eigenvalue(Gen::T1, j);
            let t0 = m.t_eigenvalue(Gen::T0, j);
            assert!((&t1 * &t0).is_one());
        }
    }
}
