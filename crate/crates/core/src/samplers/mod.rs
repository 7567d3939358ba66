//! Random generation: G(n, p), configuration-model multigraphs, Poisson
//! Galton–Watson trees, the geometric/exponential coupling and the two
//! contiguous giant-component constructions.

mod branching;
mod configuration;
mod coupling;
mod giant;
mod gnp;
mod params;

pub use branching::{
    pgw_reaches_level, pgw_survival_exact, pgw_survival_sandwich, sample_pgw_tree, PgwSampler,
    PgwTree, DEFAULT_TREE_CAP,
};
pub use configuration::{sample_configuration, sample_regular};
pub use coupling::{coupled_geom_exp, GeomExpCoupling};
pub use giant::{sample_general_giant, sample_young_giant, AnnotatedGiant, GiantModel};
pub use gnp::sample_gnp;
pub use params::{conjugate_mu, normal_inverse_cdf, GiantParams};
