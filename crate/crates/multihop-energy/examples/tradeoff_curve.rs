//! Achievable transmission-computation energy pairs as the relay count
//! grows, for a low-rate and a high-rate payload.
//!
//! ```bash
//! cargo run --example tradeoff_curve
//! ```

use multihop_energy::energy::{NetworkKind, Scenario};
use multihop_energy::optimize::tradeoff_curve;

fn main() {
    for r_ref in [0.1, 2.0] {
        println!("R_ref = {r_ref}, relay counts 1..=10, alpha = 3");
        println!(
            "{:>4}  {:>22}  {:>22}",
            "N", "wireless (e_tx, e_c)", "fixed (e_tx, e_c)"
        );
        let wireless = tradeoff_curve(&Scenario::new(r_ref), 1..=10).unwrap();
        let fixed = tradeoff_curve(
            &Scenario {
                network: NetworkKind::Fixed,
                ..Scenario::new(r_ref)
            },
            1..=10,
        )
        .unwrap();
        for (w, f) in wireless.iter().zip(&fixed) {
            println!(
                "{:>4}  ({:>9.5}, {:>9.5})  ({:>9.5}, {:>9.5})",
                w.relay_count, w.e_tx_norm, w.e_c_norm, f.e_tx_norm, f.e_c_norm
            );
        }
        println!();
    }
    println!("More relays always buy transmit energy with computation energy;");
    println!("the fixed-network points sit right of the wireless ones because");
    println!("no cooperation gain can be exploited.");
}
