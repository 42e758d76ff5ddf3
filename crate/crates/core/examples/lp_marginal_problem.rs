//! The marginal problem as a linear program: find a joint distribution over
//! five +-1 variables reproducing given cyclic pair marginals.

use entropic_nc::distribution::eigen_distribution;
use entropic_nc::nc::{lp_feasibility, model_marginals, pair_set_m, NcModel};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> entropic_nc::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let model = NcModel::random_dirichlet(5, 1.0, &mut rng);
    let pairs = model_marginals(&model).pairs;
    let fit = lp_feasibility(&pairs, 5, 1e-9)?;
    println!(
        "classical marginals: feasible = {}, witness error = {:.1e}",
        fit.feasible, fit.max_constraint_violation
    );

    // perfectly correlated chain, anticorrelated closing pair
    let corr = eigen_distribution(vec![0.5, 0.0, 0.0, 0.5]);
    let anti = eigen_distribution(vec![0.0, 0.5, 0.5, 0.0]);
    let boxes = vec![corr.clone(), corr.clone(), corr.clone(), corr, anti];
    let fit = lp_feasibility(&boxes, 5, 1e-9)?;
    println!(
        "contextual box: feasible = {}, total violation = {:.3}, M = {}",
        fit.feasible,
        fit.total_violation,
        pair_set_m(&boxes)?
    );
    Ok(())
}
