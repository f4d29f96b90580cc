//! Sum-energy-optimal relay count across reference rates, for different
//! weights of computation versus transmission energy and for both
//! complexity models.
//!
//! ```bash
//! cargo run --example optimal_network
//! ```

use multihop_energy::energy::{db_to_linear, ComplexityModel, Scenario};
use multihop_energy::optimize::{optimal_relay_count, BurstMode};

fn main() {
    let rates: Vec<f64> = (1..=14).map(|k| 0.5 * k as f64).collect();

    for model in [ComplexityModel::exponential(), ComplexityModel::linear()] {
        let label = match model {
            ComplexityModel::Exponential { .. } => "exponential complexity",
            ComplexityModel::Linear { .. } => "linear complexity (5 dB SNR gap)",
        };
        println!("{label}, wireless network, alpha = 3");
        println!(
            "{:>6}  {:>22}  {:>22}  {:>22}",
            "R_ref",
            "eta1 =   0 dB (N, E)",
            "eta1 = -10 dB (N, E)",
            "eta1 = -20 dB (N, E)"
        );
        for &r_ref in &rates {
            print!("{r_ref:>6.1}");
            for eta1_db in [0.0, -10.0, -20.0] {
                let scenario = Scenario {
                    eta1: db_to_linear(eta1_db),
                    model,
                    ..Scenario::new(r_ref)
                };
                let result = optimal_relay_count(&scenario, 64, BurstMode::CompOpt).unwrap();
                print!(
                    "  {:>10} {:>11.5}",
                    result.best_n, result.breakdown.e_sum_norm
                );
            }
            println!();
        }
        println!();
    }
    println!("Emphasizing computation energy (higher eta1) shrinks the optimal");
    println!("network; higher reference rates grow it.");
}
