//! Size guards for enumeration-heavy operations.
//!
//! Everything in this crate is exact and exhaustive, so every enumeration is
//! capped. The defaults keep all searches at desk scale; callers may raise
//! the caps explicitly when they know what they are paying for.

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Guard {
    /// Cap on the number of objects a single enumeration may produce.
    pub max_enumerated: u64,
    /// Cap on the group order for full subgroup-lattice enumeration.
    pub max_subgroup_order: u64,
    /// Cap on the group order for exhaustive O(n^3) axiom checks.
    pub max_exhaustive_group: u64,
    /// Cap on the group order for materializing a composition table
    /// (O(n^2) memory).
    pub max_table_order: u64,
}

impl Default for Guard {
    fn default() -> Self {
        Guard {
            max_enumerated: 1 << 24,
            max_subgroup_order: 200,
            max_exhaustive_group: 512,
            max_table_order: 4096,
        }
    }
}

impl Guard {
    pub fn check_enumeration(&self, what: &'static str, need: u128) -> Result<()> {
        if need > self.max_enumerated as u128 {
            Err(Error::GuardExceeded {
                what,
                need,
                limit: self.max_enumerated,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_subgroup_order(&self, what: &'static str, order: u64) -> Result<()> {
        if order > self.max_subgroup_order {
            Err(Error::GuardExceeded {
                what,
                need: order as u128,
                limit: self.max_subgroup_order,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_exhaustive(&self, what: &'static str, order: u128) -> Result<()> {
        if order > self.max_exhaustive_group as u128 {
            Err(Error::GuardExceeded {
                what,
                need: order,
                limit: self.max_exhaustive_group,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_table(&self, what: &'static str, order: u128) -> Result<()> {
        if order > self.max_table_order as u128 {
            Err(Error::GuardExceeded {
                what,
                need: order,
                limit: self.max_table_order,
            })
        } else {
            Ok(())
        }
    }
}
