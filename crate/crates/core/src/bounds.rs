use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Size limits for the brute-force parts of the engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// Largest group whose elements may be listed explicitly.
    pub enumeration: u64,
    /// Largest group whose full subgroup lattice may be built.
    pub lattice: u64,
    /// Largest point count of a semidirect product realized on a factor's
    /// element set.
    pub semidirect: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            enumeration: 10_000,
            lattice: 2_000,
            semidirect: 10_000,
        }
    }
}

impl Bounds {
    pub fn validate(&self) -> Result<()> {
        if self.enumeration == 0 || self.lattice == 0 || self.semidirect == 0 {
            return Err(Error::input("bounds must be positive"));
        }
        Ok(())
    }

    pub(crate) fn check(what: &'static str, bound: u64, needed: u64) -> Result<()> {
        if needed > bound {
            Err(Error::BoundExceeded {
                what,
                bound,
                needed,
            })
        } else {
            Ok(())
        }
    }
}
