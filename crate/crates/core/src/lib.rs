//! k-power graphs of finite groups.
//!
//! For a finite group `G` and an exponent `k >= 2`, the k-power graph
//! `P(G, k)` joins distinct `x` and `y` when `x^k = y` or `y^k = x`. This
//! crate builds those graphs for cyclic, symmetric, dihedral, generalized
//! quaternion and finite abelian product groups, evaluates closed forms for
//! their parameters, and checks each one against the graph itself.

pub mod analysis;
pub mod chair;
pub mod error;
pub mod export;
pub mod graph;
pub mod groups;
pub mod number_theory;
pub mod report;
pub mod verify;

pub use analysis::{analyze, AnalysisReport};
pub use error::{Error, Result};
pub use graph::{ComponentProfile, ComponentShape, DirectedKPowerGraph, KPowerGraph};
pub use groups::{ElementIndex, FiniteGroup, GroupSpec};
