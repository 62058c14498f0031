//! Specialization of functions at rational values: fiber polynomials,
//! certified primitive points, density of the imprimitive locus, and the
//! search for a primitive function of given degree.

pub mod density;
pub mod fiber;
pub mod heights;
pub mod search;
pub mod specialize;

pub use density::{density_experiment, DensityReport, SampleMode};
pub use fiber::{fiber_polynomial, fiber_presentation, Presentation};
pub use heights::{height_ordered, HeightIterator};
pub use search::{find_primitive_function, FoundFunction, SearchBudget};
pub use specialize::{
    prospect, prospect_at, specialize, PrimitivePoint, ProspectLimits, ProspectReport, Specialization,
    SpecializationStatus, StatusCounts,
};

use crate::error::{Error, Result};

/// Runs `op` on a pool of `jobs` threads, or on the global pool.
pub(crate) fn with_jobs<R: Send>(jobs: Option<usize>, op: impl FnOnce() -> R + Send) -> Result<R> {
    match jobs {
        None => Ok(op()),
        Some(0) => Err(Error::InvalidInput("jobs must be positive".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map(|pool| pool.install(op))
            .map_err(|e| Error::InvalidInput(format!("thread pool: {e}"))),
    }
}
