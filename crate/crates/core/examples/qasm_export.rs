//! Write one OpenQASM 2.0 circuit per context of the second preset.
//!
//! cargo run --example qasm_export -- /tmp/circuits

use entropic_nc::config::ExperimentConfig;
use entropic_nc::pipeline::export_qasm_suite;
use std::path::PathBuf;

fn main() -> entropic_nc::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("entropic-nc-qasm"));
    let export = export_qasm_suite(&ExperimentConfig::preset_s2_table2(), &dir)?;
    for (ctx, path) in &export.written {
        println!("{:<10} {}", ctx.to_string(), path.display());
    }
    for (ctx, why) in &export.unsupported {
        println!("{:<10} unsupported: {why}", ctx.to_string());
    }
    if let Some((_, first)) = export.written.iter().find(|(c, _)| c.arity() == 2) {
        println!("\n{}", std::fs::read_to_string(first)?);
    }
    Ok(())
}
