use crate::error::{GammaError, Result};

/// Limits on operations whose output grows factorially.
///
/// Counting operations (multinomials, the good-composition DP) are never guarded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guard {
    /// Longest partition whose rearrangements, `W(λ)` or `P_i` sets may be materialized.
    pub max_length: usize,
    /// Largest `n` for which all partitions of `n` are listed.
    pub max_size: u32,
    /// Largest dimension of the symbolic determinant.
    pub max_determinant: u32,
    /// Largest degree covered by verification sweeps.
    pub max_sweep_degree: u32,
}

impl Default for Guard {
    fn default() -> Self {
        Guard {
            max_length: 12,
            max_size: 40,
            max_determinant: 14,
            max_sweep_degree: 12,
        }
    }
}

impl Guard {
    /// A guard with every limit set to `limit`.
    pub fn uniform(limit: u32) -> Self {
        Guard {
            max_length: limit as usize,
            max_size: limit,
            max_determinant: limit,
            max_sweep_degree: limit,
        }
    }

    pub fn check_length(&self, what: &'static str, length: usize) -> Result<()> {
        check(what, length, self.max_length)
    }

    pub fn check_size(&self, what: &'static str, size: u32) -> Result<()> {
        check(what, size as usize, self.max_size as usize)
    }

    pub fn check_determinant(&self, d: u32) -> Result<()> {
        check("determinant", d as usize, self.max_determinant as usize)
    }

    pub fn check_sweep(&self, degree: u32) -> Result<()> {
        check("sweep", degree as usize, self.max_sweep_degree as usize)
    }
}

fn check(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(GammaError::GuardExceeded { what, size, limit })
    } else {
        Ok(())
    }
}
