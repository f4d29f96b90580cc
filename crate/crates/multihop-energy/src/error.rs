//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A scalar input violates its domain (negative noise power, zero rate, ...).
    #[error("invalid {name}: {value} ({requirement})")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        requirement: &'static str,
    },

    /// A node index lies outside 0..=N+1 for the given topology.
    #[error("node index {index} out of range for {node_count} nodes")]
    NodeIndexOutOfRange { index: usize, node_count: usize },

    /// Channel gain between a node and itself diverges (zero distance).
    #[error("channel gain is singular for node {0} paired with itself")]
    SingularGain(usize),

    /// A power allocation does not match the topology it is applied to.
    #[error("power allocation has {got} entries, expected {expected}")]
    AllocationLength { got: usize, expected: usize },

    /// The power recursion produced a negative entry. Cannot happen for a
    /// positive path-loss exponent; guarded defensively.
    #[error("power recursion produced a negative entry at node {node}")]
    NegativePower { node: usize },

    /// A bursty transmit power exceeded the f64 range even in the
    /// logarithmic evaluation domain.
    #[error("transmit power overflows f64 at burst factor {delta_t}")]
    PowerOverflow { delta_t: f64 },
}

/// Checks that `value` is finite and strictly positive.
pub(crate) fn ensure_positive(name: &'static str, value: f64) -> Result<()> {
    if !value.is_finite() || value <= 0.0 {
        return Err(Error::InvalidParameter {
            name,
            value,
            requirement: "must be finite and > 0",
        });
    }
    Ok(())
}

/// Checks that `value` is finite and non-negative.
pub(crate) fn ensure_non_negative(name: &'static str, value: f64) -> Result<()> {
    if !value.is_finite() || value < 0.0 {
        return Err(Error::InvalidParameter {
            name,
            value,
            requirement: "must be finite and >= 0",
        });
    }
    Ok(())
}
