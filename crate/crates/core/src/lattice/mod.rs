//! Dynamics of integer matrices on the division-point lattices
//! `L_n ≅ (Z/nZ)^2` of the torus.

mod census;
mod graph;
mod modmat;

pub use census::{
    direct_limit_factors, direct_limit_lcm, fixed_count_mod, minimal_count_period, ord,
    orbit_census, orbit_census_with, OrbitCensus,
};
pub use graph::{canonical_graph, canonical_graph_with, same_local_statistics, FunctionalGraphCanon};
pub use modmat::{reduce, Mat2Zn, MAX_MODULUS};

/// Default largest modulus for full enumeration of `L_n`.
pub const DEFAULT_BUDGET: u64 = 4096;

/// Upper bound on the modulus for operations that walk all `n^2` points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_n: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_n: DEFAULT_BUDGET }
    }
}

impl Budget {
    pub fn new(max_n: u64) -> Self {
        Budget { max_n }
    }

    pub fn check(&self, n: u64) -> crate::Result<()> {
        if n > self.max_n {
            Err(crate::Error::BudgetExceeded { n, budget: self.max_n })
        } else {
            Ok(())
        }
    }
}
