//! How squeezing the payload into a shorter burst trades transmission
//! energy against computation energy.
//!
//! ```bash
//! cargo run --example bursty_transmission
//! ```

use std::f64::consts::LN_2;

use multihop_energy::energy::{evaluate_breakdown, BurstFactor, Scenario};
use multihop_energy::optimize::{optimal_burst_factor_comp, optimal_burst_factor_sum};

fn main() {
    let scenario = Scenario::new(1.0); // R_ref = 1, one relay below
    let relays = 1;

    println!("Normalized energies over the burst factor (N = {relays}, R_ref = 1)");
    println!(
        "{:>8}  {:>10}  {:>10}  {:>10}",
        "delta_t", "e_tx_norm", "e_c_norm", "e_sum_norm"
    );
    for &dt in &[0.3, 0.4, 0.5, 0.6, LN_2, 0.8, 0.9, 1.0] {
        let b = evaluate_breakdown(relays, BurstFactor::new(dt).unwrap(), &scenario).unwrap();
        println!(
            "{:>8.4}  {:>10.5}  {:>10.5}  {:>10.5}",
            dt, b.e_tx_norm, b.e_c_norm, b.e_sum_norm
        );
    }

    let comp_opt = optimal_burst_factor_comp(scenario.r_ref).unwrap();
    let sum_opt = optimal_burst_factor_sum(relays, &scenario).unwrap();
    let best = evaluate_breakdown(relays, sum_opt, &scenario).unwrap();

    println!();
    println!(
        "computation-optimal burst factor : {:.6} (= ln(2) * R_ref)",
        comp_opt.get()
    );
    println!(
        "sum-energy-optimal burst factor  : {:.6} -> e_sum_norm {:.6}",
        sum_opt.get(),
        best.e_sum_norm
    );
    println!(
        "full-budget sum energy           : {:.6}",
        evaluate_breakdown(relays, BurstFactor::FULL, &scenario)
            .unwrap()
            .e_sum_norm
    );
}
