//! Exports every bundled sweep preset (fig2..fig6) as CSV into
//! `target/figures/`, the same files the `reproduce` subcommand writes.
//!
//! ```bash
//! cargo run --example figure_data
//! ```

use multihop_energy::cli::run;
use multihop_energy::energy::{ComplexityModel, NetworkKind};
use multihop_energy::sweeps::{rate_grid_half_steps, reproduce_fig6};

fn main() {
    let dir = std::path::Path::new("target/figures");
    std::fs::create_dir_all(dir).expect("create output directory");

    for figure in ["fig2", "fig3", "fig4", "fig5", "fig6"] {
        let out = dir.join(format!("{figure}.csv"));
        let code = run([
            "multihop-energy",
            "reproduce",
            figure,
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(code, 0, "reproduce {figure} failed");
        let rows = std::fs::read_to_string(&out).unwrap().lines().count() - 1;
        println!("{:>24}  {rows:>4} rows", out.display());
    }

    // The same sweeps are available as plain record streams.
    let records = reproduce_fig6(
        &[0.0],
        &rate_grid_half_steps(),
        &[ComplexityModel::exponential()],
        &[NetworkKind::Wireless],
        64,
    )
    .unwrap();
    println!();
    println!("in-memory sweep: {} records, e.g. {:?}", records.len(), {
        let r = &records[4];
        (r.independent_value, r.outputs[0], r.outputs[4])
    });
}
