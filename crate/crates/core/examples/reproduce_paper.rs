//! Stored hardware values against recomputation and ideal simulation.

fn main() -> entropic_nc::Result<()> {
    print!("{}", entropic_nc::pipeline::reproduce_paper()?.render());
    Ok(())
}
