//! Exact outcome distributions of every context in both conventions.

use entropic_nc::contexts::{joint_distribution_coarse, joint_distribution_fine, Convention};
use entropic_nc::pauli::table1_observables;
use entropic_nc::pipeline::CycleContexts;
use entropic_nc::reference::{ALPHA, BETA_S1};
use entropic_nc::statevec::prepare_state;
use entropic_nc::StatePrepSpec;

fn show(d: &entropic_nc::OutcomeDistribution) -> String {
    d.iter().map(|(l, p)| format!("{l}:{p:.4}")).collect::<Vec<_>>().join(" ")
}

fn main() -> entropic_nc::Result<()> {
    let state = prepare_state(&StatePrepSpec::s1(ALPHA, BETA_S1))?;
    let contexts = CycleContexts::new(&table1_observables(), Convention::Fine)?;
    for ctx in contexts.all() {
        println!("{ctx}");
        println!("  coarse {}", show(&joint_distribution_coarse(&state, ctx)?));
        println!("  fine   {}", show(&joint_distribution_fine(&state, ctx)?));
        for note in ctx.identity_axis_notes() {
            println!("  note: {note}");
        }
    }
    Ok(())
}
