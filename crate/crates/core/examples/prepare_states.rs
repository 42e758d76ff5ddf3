//! The two state families, their product factors and the U3 circuits
//! that prepare them.

use entropic_nc::reference::{ALPHA, BETA_S1, BETA_S2};
use entropic_nc::statevec::{apply_gates, prepare_state, synthesize_prep_circuit, QuantumState};
use entropic_nc::StatePrepSpec;

fn main() -> entropic_nc::Result<()> {
    for spec in [StatePrepSpec::s1(ALPHA, BETA_S1), StatePrepSpec::s2(ALPHA, BETA_S2)] {
        let state = prepare_state(&spec)?;
        let amps: Vec<String> = state.amplitudes().iter().map(|a| format!("{:+.5}", a.re)).collect();
        println!("{:?}({}, {}): [{}]", spec.family, spec.alpha, spec.beta, amps.join(", "));
        let gates = synthesize_prep_circuit(&spec)?;
        for g in &gates {
            println!("  {g:?}");
        }
        let rebuilt = apply_gates(&QuantumState::zero(2), &gates)?;
        println!("  distance after synthesis: {:.2e}", rebuilt.distance_up_to_phase(&state));
    }
    Ok(())
}
