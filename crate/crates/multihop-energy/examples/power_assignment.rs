//! Per-node transmit powers of the cooperative recursion versus the equal
//! assignment, and the end-to-end rate both sustain.
//!
//! ```bash
//! cargo run --example power_assignment
//! ```

use multihop_energy::channel::{capacity, NetworkTopology};
use multihop_energy::energy::linear_to_db;
use multihop_energy::power::{equal_allocation, recursive_allocation};

fn main() {
    let relays = 4;
    let p_ref = 1.0;

    println!("Cooperative power assignment, {relays} relays, P_ref = {p_ref}");
    println!("{:>5}  {:>12}  {:>12}  {:>12}", "node", "alpha=3", "alpha=4", "alpha=5");
    let allocations: Vec<_> = [3.0, 4.0, 5.0]
        .iter()
        .map(|&alpha| recursive_allocation(relays, alpha, p_ref).expect("valid parameters"))
        .collect();
    for node in 0..=relays {
        print!("{node:>5}");
        for alloc in &allocations {
            print!("  {:>9.4} dB", linear_to_db(alloc.powers()[node] / p_ref));
        }
        println!();
    }

    // Every hop of the recursive assignment sustains exactly the
    // single-hop reference rate; equal powers can only do better.
    let alpha = 3.0;
    let topo = NetworkTopology::new(relays, alpha).unwrap();
    let recursive = recursive_allocation(relays, alpha, p_ref).unwrap();
    let equal = equal_allocation(relays, alpha, p_ref).unwrap();
    let r_ref = capacity(p_ref).unwrap();

    println!();
    println!("reference rate          : {r_ref:.6} bits/symbol");
    println!(
        "df rate, recursive      : {:.6} bits/symbol (total power {:.6})",
        topo.df_end_to_end_rate(&recursive).unwrap(),
        recursive.total_power(),
    );
    println!(
        "df rate, equal powers   : {:.6} bits/symbol (total power {:.6})",
        topo.df_end_to_end_rate(&equal).unwrap(),
        equal.total_power(),
    );
}
