//! Commutation structure of the two shipped observable cycles.
//!
//! cargo run --example pauli_cycles

use entropic_nc::pauli::{table1_observables, table2_observables, verify_cycle};

fn main() -> entropic_nc::Result<()> {
    for (name, set) in [("table1", table1_observables()), ("table2", table2_observables())] {
        let report = verify_cycle(&set)?;
        let texts: Vec<String> = set.iter().map(|p| p.to_string()).collect();
        println!("{name}: {}", texts.join(" "));
        println!("  adjacent commuting:     {:?}", report.adjacent_commuting);
        println!("  non-adjacent commuting: {:?}", report.nonadjacent_commuting);
        println!("  valid cycle: {}", report.is_valid_cycle());
    }
    let zz: entropic_nc::PauliString = "ZZ".parse()?;
    let xi: entropic_nc::PauliString = "XI".parse()?;
    println!("ZZ and XI commute: {}", zz.commutes(&xi)?);
    Ok(())
}
