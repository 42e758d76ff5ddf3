//! Entropic noncontextuality tests for two-qubit cyclic measurement scenarios.
//!
//! The crate simulates the five cyclically commuting two-qubit observables
//! used in a contextuality experiment on superconducting hardware, evaluates
//! the cyclic entropic inequality `M <= 0` on exact or shot-sampled
//! statistics, and checks the classical side with an explicit
//! hidden-variable oracle and a marginal-problem LP.
//!
//! Module map:
//!
//! - [`pauli`]: Pauli strings, commutation, projectors, cycle verification
//! - [`statevec`]: pure states, the two state families, gates
//! - [`contexts`]: coarse and fine outcome distributions, basis changes
//! - [`entropy`]: Shannon entropies and the inequality value `M`
//! - [`nc`]: deterministic assignments, NC models, LP feasibility
//! - [`sampler`], [`noise`]: shot sampling, noise channels, noise fitting
//! - [`config`], [`report`], [`pipeline`], [`reference`]: file formats and
//!   end-to-end runs

pub mod config;
pub mod contexts;
pub mod distribution;
pub mod entropy;
pub mod error;
pub mod linalg;
pub mod nc;
pub mod noise;
pub mod pauli;
pub mod pipeline;
pub mod qasm;
pub mod reference;
pub mod report;
pub mod sampler;
pub mod statevec;

pub use contexts::{Convention, MeasurementContext};
pub use distribution::{OutcomeDistribution, OutcomeLabel};
pub use error::{Error, Result};
pub use pauli::PauliString;
pub use statevec::{QuantumState, StatePrepSpec};
