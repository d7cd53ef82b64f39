//! Monte Carlo estimates of normalized trace powers `tr((M M^T)^k) / r(n)`
//! for random matrix models whose limits are known exactly.

mod sample;
mod sim;
mod spec;

pub use sample::{
    build_graph_matrix_z2, normalized_traces, ordered_pairs, sample_haar_orthogonal,
    sample_zm_spectrum_proxy, MAX_GRAPH_N,
};
pub use sim::{
    compare, estimate_drd_chain, simulate, summarize, trial_rng, trial_traces, verdict, MomentRow,
    Scenario, SimulationConfig, SimulationReport,
};
pub use spec::{parse_exact_number, ChainHead, DistributionSpec, Sampler};
