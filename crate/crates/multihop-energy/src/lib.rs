//! Transmission-computation energy tradeoffs of multi-hop
//! decode-and-forward networks over AWGN links.
//!
//! Relaying a message over many short hops slashes the radiated energy,
//! because path loss is a power law in distance, but every extra hop adds
//! a receiver that has to decode. When the decoding cost per symbol grows
//! exponentially with the per-symbol rate, squeezing the payload into a
//! shorter burst trades transmit power against processing effort too.
//! This crate models both ends of that tradeoff for a line network of
//! equally spaced decode-and-forward relays, normalized against the
//! single-hop system delivering the same payload in the same slot budget:
//!
//! - [`channel`] — geometry, path-loss gains, Shannon capacity, and the
//!   cooperative decode-and-forward end-to-end rate;
//! - [`power`] — the recursive per-node power assignment that restores the
//!   reference rate on every hop, and the equal assignment of fixed
//!   networks;
//! - [`energy`] — bursty power scaling, normalized transmission and
//!   computation energies, complexity models, and the sum energy;
//! - [`optimize`] — closed-form and golden-section burst-factor optima,
//!   exhaustive network sizing, and tradeoff curves;
//! - [`sweeps`] — canned parameter sweeps emitting flat record streams;
//! - [`cli`] — the `multihop-energy` binary: subcommands, CSV/JSON.
//!
//! The `examples/` directory walks through each capability; start with
//! `power_assignment` and `bursty_transmission`.
//!
//! ```rust
//! use multihop_energy::energy::{evaluate_breakdown, BurstFactor, Scenario};
//!
//! // Reference rate 2 bits/symbol, one relay, full slot budget.
//! let scenario = Scenario::new(2.0);
//! let breakdown = evaluate_breakdown(1, BurstFactor::FULL, &scenario).unwrap();
//!
//! // Relaying beats the single-hop reference here.
//! assert!(breakdown.e_sum_norm < 1.0);
//! ```

pub mod channel;
pub mod cli;
pub mod energy;
pub mod error;
pub mod optimize;
pub mod power;
pub mod sweeps;

pub use channel::{capacity, snr_for_rate, NetworkTopology, ReferenceSystem};
pub use energy::{
    evaluate_breakdown, BurstFactor, ComplexityModel, EnergyBreakdown, NetworkKind, Scenario,
};
pub use error::{Error, Result};
pub use optimize::{
    brute_force_delta_oracle, optimal_burst_factor_comp, optimal_burst_factor_sum,
    optimal_relay_count, tradeoff_curve, BurstMode, OptimizationResult, TradeoffPoint,
};
pub use power::{
    equal_allocation, recursive_allocation, source_power, AllocationKind, PowerAllocation,
};
