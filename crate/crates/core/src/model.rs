//! The alternating-spin model parameters.

use serde::{Deserialize, Serialize};

/// Model parameters `(m, n)` with `m > n >= 1`: odd path positions carry
/// level-`n` letters, even positions level-`m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Model {
    m: u8,
    n: u8,
}

impl Model {
    /// Rejects the degenerate case `m <= n`.
    pub fn new(m: u8, n: u8) -> Result<Model, String> {
        if n < 1 || m <= n {
            return Err(format!("model requires m > n >= 1, got ({m}, {n})"));
        }
        Ok(Model { m, n })
    }

    pub fn m(&self) -> u8 {
        self.m
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    /// Level of the letter at position `s`: `n` at odd positions, `m` at
    /// even ones.
    pub fn level_at(&self, s: i64) -> u8 {
        if s.rem_euclid(2) == 1 {
            self.n
        } else {
            self.m
        }
    }

    /// Number of ground-state labels, `(m - n + 1)(n + 1)`.
    pub fn ground_count(&self) -> usize {
        (self.m as usize - self.n as usize + 1) * (self.n as usize + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Model::new(2, 1).is_ok());
        assert!(Model::new(6, 2).is_ok());
        assert!(Model::new(2, 2).is_err());
        assert!(Model::new(1, 2).is_err());
        assert!(Model::new(3, 0).is_err());
    }

    #[test]
    fn ground_count_matches_ranges() {
        let model = Model::new(6, 2).unwrap();
        assert_eq!(model.ground_count(), 15);
        assert_eq!(model.level_at(1), 2);
        assert_eq!(model.level_at(0), 6);
        assert_eq!(model.level_at(-1), 2);
        assert_eq!(model.level_at(-2), 6);
    }
}
