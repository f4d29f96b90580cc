//! Network geometry, channel gains, and the decode-and-forward end-to-end rate.
//!
//! A network is a line of `N + 2` nodes: index 0 is the source, indices
//! `1..=N` are relays, and `N + 1` is the destination. Nodes are equally
//! spaced, so the distance between nodes `n` and `n'` is
//!
//! ```text
//! d(n, n') = |n' - n| / (N + 1) * d_sd
//! ```
//!
//! The link between two nodes attenuates with distance as a power law; the
//! power gain is `d^-alpha`. All rates are Shannon rates of a complex AWGN
//! channel, `C(x) = log2(1 + x)` bits per symbol.
//!
//! ## Example
//!
//! ```rust
//! use multihop_energy::channel::{capacity, NetworkTopology};
//! use multihop_energy::power::recursive_allocation;
//!
//! // Two-hop network, path loss exponent 3, unit noise power.
//! let topo = NetworkTopology::new(1, 3.0).unwrap();
//! let alloc = recursive_allocation(1, 3.0, 1.0).unwrap();
//!
//! // The recursive assignment sustains the single-hop reference rate.
//! let rate = topo.df_end_to_end_rate(&alloc).unwrap();
//! assert!((rate - capacity(1.0).unwrap()).abs() < 1e-12);
//! ```

use std::f64::consts::LN_2;

use crate::error::{ensure_positive, Error, Result};
use crate::power::PowerAllocation;

/// Shannon rate of a complex AWGN channel at linear SNR `snr`, in bits per
/// symbol: `log2(1 + snr)`. Strictly increasing and concave, zero at zero.
pub fn capacity(snr: f64) -> Result<f64> {
    if !snr.is_finite() || snr < 0.0 {
        return Err(Error::InvalidParameter {
            name: "snr",
            value: snr,
            requirement: "must be finite and >= 0",
        });
    }
    Ok(snr.ln_1p() / LN_2)
}

/// Linear SNR that sustains `rate` bits per symbol: `2^rate - 1`.
///
/// Inverse of [`capacity`]; evaluated as `expm1(rate * ln 2)` so it stays
/// accurate for rates far below one bit per symbol.
pub fn snr_for_rate(rate: f64) -> Result<f64> {
    if !rate.is_finite() || rate < 0.0 {
        return Err(Error::InvalidParameter {
            name: "rate",
            value: rate,
            requirement: "must be finite and >= 0",
        });
    }
    Ok((rate * LN_2).exp_m1())
}

/// Line network of a source, `relay_count` equally spaced relays, and a
/// destination.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NetworkTopology {
    relay_count: usize,
    path_loss_exponent: f64,
    noise_power: f64,
    source_dest_distance: f64,
}

impl NetworkTopology {
    /// Topology with unit noise power and unit source-destination distance.
    pub fn new(relay_count: usize, path_loss_exponent: f64) -> Result<Self> {
        Self::with_noise(relay_count, path_loss_exponent, 1.0, 1.0)
    }

    pub fn with_noise(
        relay_count: usize,
        path_loss_exponent: f64,
        noise_power: f64,
        source_dest_distance: f64,
    ) -> Result<Self> {
        ensure_positive("path_loss_exponent", path_loss_exponent)?;
        ensure_positive("noise_power", noise_power)?;
        ensure_positive("source_dest_distance", source_dest_distance)?;
        Ok(Self {
            relay_count,
            path_loss_exponent,
            noise_power,
            source_dest_distance,
        })
    }

    pub fn relay_count(&self) -> usize {
        self.relay_count
    }

    pub fn path_loss_exponent(&self) -> f64 {
        self.path_loss_exponent
    }

    pub fn noise_power(&self) -> f64 {
        self.noise_power
    }

    pub fn source_dest_distance(&self) -> f64 {
        self.source_dest_distance
    }

    /// Index of the destination node, `N + 1`.
    pub fn destination(&self) -> usize {
        self.relay_count + 1
    }

    /// Total number of nodes including source and destination.
    pub fn node_count(&self) -> usize {
        self.relay_count + 2
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index > self.destination() {
            return Err(Error::NodeIndexOutOfRange {
                index,
                node_count: self.node_count(),
            });
        }
        Ok(())
    }

    /// Distance between nodes `n` and `n2`: `|n2 - n| * d_sd / (N + 1)`.
    /// Symmetric in its arguments.
    pub fn node_distance(&self, n: usize, n2: usize) -> Result<f64> {
        self.check_index(n)?;
        self.check_index(n2)?;
        let hops = n.abs_diff(n2) as f64;
        Ok(hops * self.source_dest_distance / (self.relay_count as f64 + 1.0))
    }

    /// Power gain of the link between `n` and `n2`: `distance^-alpha`.
    ///
    /// Strictly decreasing in distance. The pair `n == n2` has zero
    /// distance and therefore no finite gain.
    pub fn channel_power_gain(&self, n: usize, n2: usize) -> Result<f64> {
        if n == n2 {
            self.check_index(n)?;
            return Err(Error::SingularGain(n));
        }
        let distance = self.node_distance(n, n2)?;
        Ok(distance.powf(-self.path_loss_exponent))
    }

    /// Maximum achievable end-to-end rate of the cooperative
    /// decode-and-forward protocol under `alloc`, in bits per symbol.
    ///
    /// Every receiving node `n` in `1..=N+1` accumulates the power of all
    /// earlier transmissions, and the protocol sustains the worst of the
    /// per-node rates:
    ///
    /// ```text
    /// R = min over n of C( sum_{k < n} gain(n, k) * P_k / sigma^2 )
    /// ```
    pub fn df_end_to_end_rate(&self, alloc: &PowerAllocation) -> Result<f64> {
        let expected = self.relay_count + 1;
        if alloc.len() != expected {
            return Err(Error::AllocationLength {
                got: alloc.len(),
                expected,
            });
        }
        let powers = alloc.powers();
        let mut min_rate = f64::INFINITY;
        for receiver in 1..=self.destination() {
            let mut accumulated = 0.0;
            for (transmitter, &power) in powers.iter().enumerate().take(receiver) {
                accumulated += self.channel_power_gain(receiver, transmitter)? * power;
            }
            let rate = capacity(accumulated / self.noise_power)?;
            if rate < min_rate {
                min_rate = rate;
            }
        }
        Ok(min_rate)
    }
}

/// Single-hop baseline every multi-hop configuration is normalized against:
/// reference power `P_ref` over `T_ref` channel symbols at unit distance,
/// which fixes the reference rate `R_ref = C(P_ref / sigma^2)` and the
/// payload `R_ref * T_ref` bits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceSystem {
    reference_power: f64,
    slot_count: f64,
    reference_rate: f64,
    noise_power: f64,
}

impl ReferenceSystem {
    /// Baseline from the reference transmit power.
    pub fn from_power(reference_power: f64, slot_count: f64, noise_power: f64) -> Result<Self> {
        ensure_positive("reference_power", reference_power)?;
        ensure_positive("slot_count", slot_count)?;
        ensure_positive("noise_power", noise_power)?;
        let reference_rate = capacity(reference_power / noise_power)?;
        Ok(Self {
            reference_power,
            slot_count,
            reference_rate,
            noise_power,
        })
    }

    /// Baseline from the reference rate; the power follows as
    /// `sigma^2 * (2^rate - 1)`.
    pub fn from_rate(reference_rate: f64, slot_count: f64, noise_power: f64) -> Result<Self> {
        ensure_positive("reference_rate", reference_rate)?;
        ensure_positive("slot_count", slot_count)?;
        ensure_positive("noise_power", noise_power)?;
        let reference_power = noise_power * snr_for_rate(reference_rate)?;
        Ok(Self {
            reference_power,
            slot_count,
            reference_rate,
            noise_power,
        })
    }

    pub fn reference_power(&self) -> f64 {
        self.reference_power
    }

    pub fn slot_count(&self) -> f64 {
        self.slot_count
    }

    pub fn reference_rate(&self) -> f64 {
        self.reference_rate
    }

    pub fn noise_power(&self) -> f64 {
        self.noise_power
    }

    /// Payload delivered over the full slot budget, in bits.
    pub fn payload_bits(&self) -> f64 {
        self.reference_rate * self.slot_count
    }
}
