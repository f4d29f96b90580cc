//! Normalized transmission, computation, and sum energies.
//!
//! Everything here is normalized against the single-hop reference system
//! that delivers the same payload in the same slot budget. A burst factor
//! `delta_t = T' / T_ref` in `(0, 1]` squeezes the payload into a fraction
//! of the slots, which conserves the delivered bits when the transmit
//! power grows to
//!
//! ```text
//! P' = sigma^2 * ((1 + P / sigma^2)^(1 / delta_t) - 1)
//! ```
//!
//! so that `delta_t * C(P' / sigma^2) = C(P / sigma^2)` holds exactly.
//! The per-node transmission energies sum to the normalized transmission
//! energy; the receiver-side decoding cost either grows exponentially with
//! the per-symbol rate (coded transmission) or linearly (uncoded, paid for
//! instead with an SNR gap on the transmit side). The two are combined
//! into a normalized sum energy through the reference ratio
//! `eta_ref(R_ref)` of computation to transmission energy in the
//! single-hop system.
//!
//! All exponentials of the form `(1 + x)^(1 / delta_t)` are evaluated as
//! `expm1(ln_1p(x) / delta_t)` so burst factors down to 1e-5 survive;
//! results beyond the f64 range surface as an overflow error.

use std::f64::consts::LN_2;

use crate::error::{ensure_non_negative, ensure_positive, Error, Result};
use crate::power::{recursive_allocation, PowerAllocation};

/// Converts a dB power ratio to linear scale: `10^(db / 10)`.
pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

/// Converts a linear power ratio to dB: `10 * log10(ratio)`.
pub fn linear_to_db(ratio: f64) -> f64 {
    10.0 * ratio.log10()
}

/// Fraction of the reference slot budget a node actually transmits in,
/// `T' / T_ref`, restricted to `(0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BurstFactor(f64);

impl BurstFactor {
    /// The full slot budget, `delta_t = 1`.
    pub const FULL: BurstFactor = BurstFactor(1.0);

    pub fn new(delta_t: f64) -> Result<Self> {
        if !delta_t.is_finite() || delta_t <= 0.0 || delta_t > 1.0 {
            return Err(Error::InvalidParameter {
                name: "delta_t",
                value: delta_t,
                requirement: "must lie in (0, 1]",
            });
        }
        Ok(Self(delta_t))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Receiver decoding cost as a function of the per-symbol rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ComplexityModel {
    /// Decoding cost per symbol `c1 * c3^(c2 * R)`, the trellis-style
    /// growth of coded transmission.
    Exponential { c1: f64, c2: f64, c3: f64 },
    /// Decoding cost per symbol proportional to `R` (uncoded transmission),
    /// paid for with the given SNR gap on the transmit side.
    Linear { snr_gap_db: f64 },
}

impl ComplexityModel {
    /// Default exponential model: `c1 = c2 = 1`, `c3 = 2`.
    pub fn exponential() -> Self {
        ComplexityModel::Exponential {
            c1: 1.0,
            c2: 1.0,
            c3: 2.0,
        }
    }

    /// Default linear model with a 5 dB SNR gap.
    pub fn linear() -> Self {
        ComplexityModel::Linear { snr_gap_db: 5.0 }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            ComplexityModel::Exponential { c1, c2, c3 } => {
                ensure_positive("c1", c1)?;
                ensure_positive("c2", c2)?;
                if !c3.is_finite() || c3 <= 1.0 {
                    return Err(Error::InvalidParameter {
                        name: "c3",
                        value: c3,
                        requirement: "must be finite and > 1",
                    });
                }
                Ok(())
            }
            ComplexityModel::Linear { snr_gap_db } => {
                ensure_non_negative("snr_gap_db", snr_gap_db)
            }
        }
    }

    /// Burst factor that minimizes the computation energy for this model.
    ///
    /// For the exponential model the stationary point of
    /// `delta_t * c3^(c2 R (1/delta_t - 1))` is `c2 ln(c3) R`, clamped to
    /// the full budget. Linear-complexity computation energy does not
    /// depend on the burst factor at all, and shortening the burst only
    /// raises the transmission energy, so the full budget is optimal.
    pub fn comp_optimal_burst(&self, r_ref: f64) -> Result<BurstFactor> {
        self.validate()?;
        ensure_positive("r_ref", r_ref)?;
        match *self {
            ComplexityModel::Exponential { c2, c3, .. } => {
                BurstFactor::new((c2 * c3.ln() * r_ref).min(1.0))
            }
            ComplexityModel::Linear { .. } => Ok(BurstFactor::FULL),
        }
    }
}

/// Whether receivers can combine signals from all earlier transmitters
/// (wireless) or only listen to their dedicated link (fixed).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NetworkKind {
    /// Cooperative accumulation; transmission energy follows the exact
    /// per-node sum over the recursive assignment.
    Wireless,
    /// No cooperation gain; transmission energy follows the equal-power
    /// closed form.
    Fixed,
}

/// Full parameter set of one energy evaluation, shared by the optimizers
/// and sweeps. All values are linear scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scenario {
    pub r_ref: f64,
    pub alpha: f64,
    pub sigma2: f64,
    pub eta1: f64,
    pub model: ComplexityModel,
    pub network: NetworkKind,
}

impl Scenario {
    /// Scenario at the common defaults: `alpha = 3`, `sigma^2 = 1`,
    /// `eta_ref(1) = 1`, exponential complexity, wireless network.
    pub fn new(r_ref: f64) -> Self {
        Self {
            r_ref,
            alpha: 3.0,
            sigma2: 1.0,
            eta1: 1.0,
            model: ComplexityModel::exponential(),
            network: NetworkKind::Wireless,
        }
    }

    pub fn validate(&self) -> Result<()> {
        ensure_positive("r_ref", self.r_ref)?;
        ensure_positive("alpha", self.alpha)?;
        ensure_positive("sigma2", self.sigma2)?;
        ensure_non_negative("eta1", self.eta1)?;
        self.model.validate()
    }

    /// Reference transmit power implied by the reference rate:
    /// `sigma^2 * (2^R_ref - 1)`.
    pub fn p_ref(&self) -> f64 {
        self.sigma2 * (self.r_ref * LN_2).exp_m1()
    }
}

/// All normalized energies of one network configuration, together with the
/// inputs that produced them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyBreakdown {
    pub e_tx_norm: f64,
    pub e_c_norm: f64,
    pub e_sum_norm: f64,
    pub delta_t: f64,
    pub relay_count: usize,
    pub eta: f64,
}

/// Transmit power a node needs to deliver the same bits in a `delta_t`
/// fraction of the slots. Equals `power` at `delta_t = 1` and grows
/// without bound as the burst shortens; rate conservation
/// `delta_t * C(P'/sigma^2) = C(P/sigma^2)` holds for every burst factor.
pub fn bursty_power(power: f64, sigma2: f64, delta_t: BurstFactor) -> Result<f64> {
    ensure_non_negative("power", power)?;
    ensure_positive("sigma2", sigma2)?;
    let dt = delta_t.get();
    if dt == 1.0 {
        return Ok(power);
    }
    let scaled = sigma2 * ((power / sigma2).ln_1p() / dt).exp_m1();
    if !scaled.is_finite() {
        return Err(Error::PowerOverflow { delta_t: dt });
    }
    Ok(scaled)
}

/// Normalized transmission energy of a network with the given per-node
/// assignment: `delta_t * sum_n P'_n(delta_t) / P_ref`.
///
/// At `delta_t = 1` this is just the total assigned power over the
/// reference power; it decreases strictly as the burst factor grows.
pub fn e_tx_norm_exact(
    alloc: &PowerAllocation,
    delta_t: BurstFactor,
    p_ref: f64,
    sigma2: f64,
) -> Result<f64> {
    ensure_positive("p_ref", p_ref)?;
    let mut total = 0.0;
    for &power in alloc.powers() {
        total += bursty_power(power, sigma2, delta_t)?;
    }
    Ok(delta_t.get() * total / p_ref)
}

/// Normalized transmission energy of the equal-power assignment in closed
/// form: `delta_t * (N+1)^(1-alpha) * P'_0(delta_t) / P_0`.
///
/// Exact for fixed networks; for wireless networks it bounds
/// [`e_tx_norm_exact`] over the recursive assignment from above. Equals
/// `(N+1)^(1-alpha)` at `delta_t = 1`.
pub fn e_tx_norm_fixed(
    relay_count: usize,
    alpha: f64,
    delta_t: BurstFactor,
    p_ref: f64,
    sigma2: f64,
) -> Result<f64> {
    ensure_positive("alpha", alpha)?;
    ensure_positive("p_ref", p_ref)?;
    let hops = relay_count as f64 + 1.0;
    let p0 = hops.powf(-alpha) * p_ref;
    let scaled = bursty_power(p0, sigma2, delta_t)?;
    Ok(delta_t.get() * hops.powf(1.0 - alpha) * scaled / p0)
}

/// Normalized computation energy of `N + 1` receivers decoding at the
/// burst rate `R_ref / delta_t`.
///
/// Exponential model: `delta_t * (N+1) * c3^(c2 R_ref (1/delta_t - 1))`,
/// which has its interior minimum at `delta_t = c2 ln(c3) R_ref`. Linear
/// model: the rate ratio cancels the shortened burst exactly, leaving
/// `N + 1` for every burst factor.
pub fn e_c_norm(
    relay_count: usize,
    delta_t: BurstFactor,
    r_ref: f64,
    model: &ComplexityModel,
) -> Result<f64> {
    model.validate()?;
    ensure_positive("r_ref", r_ref)?;
    let receivers = relay_count as f64 + 1.0;
    match *model {
        ComplexityModel::Exponential { c2, c3, .. } => {
            let dt = delta_t.get();
            let value = dt * receivers * (c2 * c3.ln() * r_ref * (1.0 / dt - 1.0)).exp();
            if !value.is_finite() {
                return Err(Error::PowerOverflow { delta_t: dt });
            }
            Ok(value)
        }
        ComplexityModel::Linear { .. } => Ok(receivers),
    }
}

/// Ratio of computation to transmission energy in the single-hop reference
/// system at rate `r_ref`, anchored by the system-specific value `eta1` at
/// rate 1.
///
/// The rate-R reference occupies the full slot budget, so its transmission
/// energy scales with `2^R - 1` while its computation energy scales with
/// `c3^(c2 R)` (exponential) or `R` (linear):
///
/// ```text
/// exponential: eta1 * c3^(c2 (R - 1)) / (2^R - 1)    (= eta1 * 2^(R-1) / (2^R - 1) at defaults)
/// linear:      eta1 * R / (2^R - 1)
/// ```
///
/// Both reduce to `eta1` at `R = 1`.
pub fn eta_ref(r_ref: f64, eta1: f64, model: &ComplexityModel) -> Result<f64> {
    model.validate()?;
    ensure_positive("r_ref", r_ref)?;
    ensure_non_negative("eta1", eta1)?;
    let tx_growth = (r_ref * LN_2).exp_m1();
    match *model {
        ComplexityModel::Exponential { c2, c3, .. } => {
            Ok(eta1 * (c2 * c3.ln() * (r_ref - 1.0)).exp() / tx_growth)
        }
        ComplexityModel::Linear { .. } => Ok(eta1 * r_ref / tx_growth),
    }
}

/// Normalized sum energy: the eta-weighted combination
/// `(e_c_norm * eta + e_tx_norm) / (1 + eta)`.
///
/// A convex combination, so the result always lies between the two
/// normalized energies.
pub fn e_sum_norm(e_c_norm: f64, e_tx_norm: f64, eta: f64) -> f64 {
    (e_c_norm * eta + e_tx_norm) / (1.0 + eta)
}

/// Evaluates the full energy breakdown of a network with `relay_count`
/// relays at burst factor `delta_t`.
///
/// Wireless networks use the exact per-node sum over the recursive
/// assignment, fixed networks the equal-power closed form. Under the
/// linear complexity model the network's transmission energy is scaled by
/// the SNR gap; the reference denominator stays at capacity-achieving
/// power.
pub fn evaluate_breakdown(
    relay_count: usize,
    delta_t: BurstFactor,
    scenario: &Scenario,
) -> Result<EnergyBreakdown> {
    scenario.validate()?;
    let p_ref = scenario.p_ref();
    let mut e_tx = match scenario.network {
        NetworkKind::Wireless => {
            let alloc = recursive_allocation(relay_count, scenario.alpha, p_ref)?;
            e_tx_norm_exact(&alloc, delta_t, p_ref, scenario.sigma2)?
        }
        NetworkKind::Fixed => e_tx_norm_fixed(
            relay_count,
            scenario.alpha,
            delta_t,
            p_ref,
            scenario.sigma2,
        )?,
    };
    if let ComplexityModel::Linear { snr_gap_db } = scenario.model {
        e_tx *= db_to_linear(snr_gap_db);
    }
    let e_c = e_c_norm(relay_count, delta_t, scenario.r_ref, &scenario.model)?;
    let eta = eta_ref(scenario.r_ref, scenario.eta1, &scenario.model)?;
    Ok(EnergyBreakdown {
        e_tx_norm: e_tx,
        e_c_norm: e_c,
        e_sum_norm: e_sum_norm(e_c, e_tx, eta),
        delta_t: delta_t.get(),
        relay_count,
        eta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::capacity;
    use std::f64::consts::LN_2;

    fn burst(dt: f64) -> BurstFactor {
        BurstFactor::new(dt).unwrap()
    }

    #[test]
    fn burst_factor_domain() {
        assert!(BurstFactor::new(0.0).is_err());
        assert!(BurstFactor::new(1.0 + 1e-12).is_err());
        assert!(BurstFactor::new(f64::NAN).is_err());
        assert_eq!(BurstFactor::new(1.0).unwrap().get(), 1.0);
        assert_eq!(BurstFactor::new(1e-5).unwrap().get(), 1e-5);
    }

    #[test]
    fn bursty_power_examples() {
        // Halving the slots at unit SNR squares the factor: (1+1)^2 - 1 = 3.
        assert!((bursty_power(1.0, 1.0, burst(0.5)).unwrap() - 3.0).abs() < 1e-12);

        // Full budget is the identity.
        assert_eq!(bursty_power(0.7, 1.0, BurstFactor::FULL).unwrap(), 0.7);

        // 1.125^2 - 1 = 0.265625.
        let p = bursty_power(0.125, 1.0, burst(0.5)).unwrap();
        assert!((p - 0.265625).abs() < 1e-12);
    }

    #[test]
    fn bursty_power_conserves_rate() {
        let p = bursty_power(0.125, 1.0, burst(0.5)).unwrap();
        let lhs = 0.5 * capacity(p).unwrap();
        let rhs = capacity(0.125).unwrap();
        assert!((lhs - rhs).abs() / rhs < 1e-12);
    }

    #[test]
    fn bursty_power_overflows_cleanly() {
        assert_eq!(
            bursty_power(1.0, 1.0, burst(1e-4)),
            Err(Error::PowerOverflow { delta_t: 1e-4 })
        );
        // Tiny powers survive tiny burst factors thanks to the log-domain
        // evaluation.
        let p = bursty_power(1e-6, 1.0, burst(1e-5)).unwrap();
        assert!(p.is_finite() && p > 1e-6);
    }

    #[test]
    fn e_tx_exact_examples() {
        // Single hop, R_ref = 1, half budget: 0.5 * ((1+1)^2 - 1) = 1.5.
        let alloc = PowerAllocation::from_powers(vec![1.0]).unwrap();
        let e = e_tx_norm_exact(&alloc, burst(0.5), 1.0, 1.0).unwrap();
        assert!((e - 1.5).abs() < 1e-12);

        // Two hops over the recursive assignment.
        let alloc = recursive_allocation(1, 3.0, 1.0).unwrap();
        let e = e_tx_norm_exact(&alloc, burst(0.5), 1.0, 1.0).unwrap();
        assert!((e - 0.24817).abs() < 1e-4);

        // The reference system reproduces itself.
        let alloc = PowerAllocation::from_powers(vec![1.0]).unwrap();
        let e = e_tx_norm_exact(&alloc, BurstFactor::FULL, 1.0, 1.0).unwrap();
        assert_eq!(e, 1.0);
    }

    #[test]
    fn e_tx_exact_at_full_budget_is_power_sum() {
        let alloc = recursive_allocation(3, 3.0, 1.0).unwrap();
        let e = e_tx_norm_exact(&alloc, BurstFactor::FULL, 1.0, 1.0).unwrap();
        assert!((e - alloc.total_power()).abs() < 1e-15);
    }

    #[test]
    fn e_tx_fixed_examples() {
        let e = e_tx_norm_fixed(1, 3.0, burst(0.5), 1.0, 1.0).unwrap();
        assert!((e - 0.265625).abs() < 1e-12);

        let e = e_tx_norm_fixed(1, 3.0, BurstFactor::FULL, 1.0, 1.0).unwrap();
        assert!((e - 0.25).abs() < 1e-15);

        // Low-rate reference at its computation-optimal burst factor.
        let r_ref = 0.1;
        let p_ref = (r_ref * LN_2).exp_m1();
        let e = e_tx_norm_fixed(1, 3.0, burst(LN_2 * r_ref), p_ref, 1.0).unwrap();
        assert!((e - 0.26563).abs() < 1e-4);
    }

    #[test]
    fn e_tx_fixed_bounds_exact_from_above() {
        for &dt in &[0.2, 0.5, 0.8, 1.0] {
            for relays in 0..5 {
                let alloc = recursive_allocation(relays, 3.0, 1.0).unwrap();
                let exact = e_tx_norm_exact(&alloc, burst(dt), 1.0, 1.0).unwrap();
                let fixed = e_tx_norm_fixed(relays, 3.0, burst(dt), 1.0, 1.0).unwrap();
                assert!(fixed >= exact - 1e-12, "dt {dt} relays {relays}");
            }
        }
    }

    #[test]
    fn e_c_examples() {
        let exp = ComplexityModel::exponential();

        // Minimum of the single-hop curve at R_ref = 1 sits at ln 2.
        let e = e_c_norm(0, burst(LN_2), 1.0, &exp).unwrap();
        assert!((e - 0.94208).abs() < 1e-4);

        // Full budget always gives N + 1.
        for relays in 0..4 {
            let e = e_c_norm(relays, BurstFactor::FULL, 2.3, &exp).unwrap();
            assert_eq!(e, relays as f64 + 1.0);
        }

        // Low-rate two-hop point.
        let e = e_c_norm(1, burst(0.1 * LN_2), 0.1, &exp).unwrap();
        assert!((e - 0.35160).abs() < 1e-4);

        // Linear complexity: the rate ratio cancels the burst factor.
        let lin = ComplexityModel::linear();
        let e = e_c_norm(2, burst(0.3), 7.7, &lin).unwrap();
        assert_eq!(e, 3.0);
    }

    #[test]
    fn e_c_overflow_and_domain_errors() {
        let exp = ComplexityModel::exponential();
        assert!(matches!(
            e_c_norm(0, burst(1e-5), 10.0, &exp),
            Err(Error::PowerOverflow { .. })
        ));
        assert!(e_c_norm(0, burst(0.5), 0.0, &exp).is_err());
    }

    #[test]
    fn eta_ref_examples() {
        let exp = ComplexityModel::exponential();
        assert!((eta_ref(1.0, 1.0, &exp).unwrap() - 1.0).abs() < 1e-15);
        assert!((eta_ref(2.0, 1.0, &exp).unwrap() - 2.0 / 3.0).abs() < 1e-14);

        let lin = ComplexityModel::linear();
        assert!((eta_ref(1.0, 1.0, &lin).unwrap() - 1.0).abs() < 1e-15);
        // R -> 0 limit of R / (2^R - 1) is 1 / ln 2.
        assert!((eta_ref(1e-9, 1.0, &lin).unwrap() - 1.0 / LN_2).abs() < 1e-6);

        assert!(eta_ref(0.0, 1.0, &exp).is_err());
    }

    #[test]
    fn eta_scales_linearly_with_anchor() {
        let exp = ComplexityModel::exponential();
        let one = eta_ref(1.7, 1.0, &exp).unwrap();
        let tenth = eta_ref(1.7, 0.1, &exp).unwrap();
        assert!((tenth - one * 0.1).abs() < 1e-15);
    }

    #[test]
    fn e_sum_is_convex_combination() {
        assert_eq!(e_sum_norm(1.0, 1.0, 0.37), 1.0);
        for &(c, t, eta) in &[(2.0, 0.3, 0.5), (0.1, 5.0, 2.0), (1.4, 1.4, 9.0)] {
            let s = e_sum_norm(c, t, eta);
            assert!(s >= c.min(t) - 1e-15 && s <= c.max(t) + 1e-15);
        }
    }

    #[test]
    fn e_sum_two_hop_high_rate_value() {
        // R_ref = 2, two hops, full budget, exponential model: the
        // recursive sum 1.875 * 3/8 over P_ref = 3 gives E_tx = 0.234375,
        // with E_c = 2 and eta = 2/3.
        let eta = eta_ref(2.0, 1.0, &ComplexityModel::exponential()).unwrap();
        let s = e_sum_norm(2.0, 0.234375, eta);
        assert!((s - 0.94062).abs() < 1e-4);
    }

    #[test]
    fn breakdown_reference_reproduces_itself() {
        for &r_ref in &[0.3, 1.0, 2.0, 5.0] {
            let scenario = Scenario::new(r_ref);
            let b = evaluate_breakdown(0, BurstFactor::FULL, &scenario).unwrap();
            assert!((b.e_sum_norm - 1.0).abs() < 1e-12, "r_ref {r_ref}");
        }
    }

    #[test]
    fn breakdown_two_hop_bursty_value() {
        let scenario = Scenario::new(1.0);
        let b = evaluate_breakdown(1, burst(LN_2), &scenario).unwrap();
        assert!((b.e_sum_norm - 1.06227).abs() < 1e-4);
        assert_eq!(b.relay_count, 1);
        assert_eq!(b.delta_t, LN_2);
    }

    #[test]
    fn breakdown_linear_fixed_low_rate_value() {
        let scenario = Scenario {
            model: ComplexityModel::linear(),
            network: NetworkKind::Fixed,
            ..Scenario::new(0.0001)
        };
        let b = evaluate_breakdown(1, BurstFactor::FULL, &scenario).unwrap();
        assert!((b.e_sum_norm - 1.50487).abs() < 1e-3);
    }

    #[test]
    fn breakdown_fields_are_consistent() {
        let scenario = Scenario {
            eta1: 0.1,
            ..Scenario::new(1.5)
        };
        let b = evaluate_breakdown(3, burst(0.9), &scenario).unwrap();
        let recombined = e_sum_norm(b.e_c_norm, b.e_tx_norm, b.eta);
        assert!((b.e_sum_norm - recombined).abs() < 1e-15);
    }

    #[test]
    fn db_conversions_round_trip() {
        for &db in &[-20.0, -3.0, 0.0, 5.0, 10.0] {
            assert!((linear_to_db(db_to_linear(db)) - db).abs() < 1e-12);
        }
        assert!((db_to_linear(5.0) - 3.1622776601683795).abs() < 1e-15);
    }
}
