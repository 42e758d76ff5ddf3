//! Exact M over a coarse grid of the first state family.
//!
//! cargo run --release --example sweep_states > sweep.csv

use entropic_nc::pauli::table1_observables;
use entropic_nc::pipeline::{sweep, SweepAxis};
use entropic_nc::statevec::StateFamily;
use std::f64::consts::PI;

fn main() -> entropic_nc::Result<()> {
    let axis = SweepAxis::stepped(0.0, PI, 0.2)?;
    let result = sweep(StateFamily::S1, &axis, &axis, &table1_observables())?;
    print!("{}", result.to_csv());
    if let Some(best) = result.max_coarse() {
        eprintln!("max M_coarse {:.6} at ({:.2}, {:.2})", best.m_coarse, best.alpha, best.beta);
    }
    if let Some(best) = result.max_fine() {
        eprintln!("max M_fine {:.6} at ({:.2}, {:.2})", best.m_fine.unwrap_or(f64::NAN), best.alpha, best.beta);
    }
    eprintln!("infeasible points: {}", result.rows.iter().filter(|r| !r.lp_feasible).count());
    Ok(())
}
