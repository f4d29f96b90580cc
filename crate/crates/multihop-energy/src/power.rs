//! Per-node transmit power assignments.
//!
//! Two assignments are supported. The cooperative recursion makes every hop
//! of a wireless network sustain exactly the first-hop rate by discounting
//! the power already overheard from earlier transmissions:
//!
//! ```text
//! P_0 = (N + 1)^-alpha * P_ref
//! P_n = P_0 - sum_{k < n} (n + 1 - k)^-alpha * P_k
//! ```
//!
//! The equal assignment gives every node the source power `P_0`. It is the
//! exact solution for fixed networks, where receivers cannot combine
//! signals from non-adjacent nodes, and an achievable upper bound on the
//! transmit energy of wireless networks.

use crate::error::{ensure_positive, Error, Result};

/// How a power assignment was constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AllocationKind {
    /// Cooperative recursion; strictly decreasing per-node powers.
    Recursive,
    /// Every node transmits the source power.
    Equal,
}

/// Ordered per-node transmit powers `P_0 ..= P_N`, linear watts.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerAllocation {
    powers: Vec<f64>,
    kind: AllocationKind,
}

impl PowerAllocation {
    /// Wraps an explicit power vector. Mostly useful for tests and for
    /// probing the decode-and-forward rate of hand-picked assignments;
    /// the vector is tagged [`AllocationKind::Equal`].
    pub fn from_powers(powers: Vec<f64>) -> Result<Self> {
        if powers.is_empty() {
            return Err(Error::AllocationLength {
                got: 0,
                expected: 1,
            });
        }
        for &p in &powers {
            if !p.is_finite() || p < 0.0 {
                return Err(Error::InvalidParameter {
                    name: "power",
                    value: p,
                    requirement: "must be finite and >= 0",
                });
            }
        }
        Ok(Self {
            powers,
            kind: AllocationKind::Equal,
        })
    }

    pub fn powers(&self) -> &[f64] {
        &self.powers
    }

    pub fn kind(&self) -> AllocationKind {
        self.kind
    }

    /// Number of transmitting nodes, `N + 1`.
    pub fn len(&self) -> usize {
        self.powers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn relay_count(&self) -> usize {
        self.powers.len() - 1
    }

    pub fn total_power(&self) -> f64 {
        self.powers.iter().sum()
    }
}

/// Source power that makes the first hop sustain the reference rate:
/// `(N + 1)^-alpha * P_ref`.
pub fn source_power(relay_count: usize, alpha: f64, p_ref: f64) -> Result<f64> {
    ensure_positive("alpha", alpha)?;
    ensure_positive("p_ref", p_ref)?;
    Ok((relay_count as f64 + 1.0).powf(-alpha) * p_ref)
}

/// Continues the cooperative recursion from an explicit source power for
/// `node_count` nodes. The recursion coefficients depend only on index
/// differences, so the node count may exceed the hop count baked into
/// `p0`; sweeps over plotted node ranges use that freedom.
pub fn recursion_from_source(p0: f64, alpha: f64, node_count: usize) -> Result<Vec<f64>> {
    ensure_positive("alpha", alpha)?;
    ensure_positive("p0", p0)?;
    let mut powers = Vec::with_capacity(node_count);
    powers.push(p0);
    for n in 1..node_count {
        let mut discount = 0.0;
        for (k, &p) in powers.iter().enumerate() {
            discount += ((n + 1 - k) as f64).powf(-alpha) * p;
        }
        let p = p0 - discount;
        if p < 0.0 {
            return Err(Error::NegativePower { node: n });
        }
        powers.push(p);
    }
    Ok(powers)
}

/// Cooperative power assignment for `relay_count` relays. Plugged into the
/// decode-and-forward rate it restores exactly the single-hop reference
/// rate `C(P_ref / sigma^2)`.
pub fn recursive_allocation(
    relay_count: usize,
    alpha: f64,
    p_ref: f64,
) -> Result<PowerAllocation> {
    let p0 = source_power(relay_count, alpha, p_ref)?;
    let powers = recursion_from_source(p0, alpha, relay_count + 1)?;
    Ok(PowerAllocation {
        powers,
        kind: AllocationKind::Recursive,
    })
}

/// Equal power assignment: all `N + 1` nodes transmit the source power.
pub fn equal_allocation(relay_count: usize, alpha: f64, p_ref: f64) -> Result<PowerAllocation> {
    let p0 = source_power(relay_count, alpha, p_ref)?;
    Ok(PowerAllocation {
        powers: vec![p0; relay_count + 1],
        kind: AllocationKind::Equal,
    })
}
