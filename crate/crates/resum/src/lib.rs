//! Summation of divergent truncated power series.
//!
//! A series `a_0 + a_1 x + ... + a_k x^k` is mapped by a Borel-type transform with a control
//! parameter `u`, extrapolated by a self-similar iterated root and read off at infinity as the
//! amplitude `B` of `f ~ B x^beta`. The control parameter is fixed by optimization conditions,
//! and when several solutions exist one is picked by a coefficient-based criterion or by the
//! ridge cost functional.

pub mod approximant;
pub mod benchmarks;
pub mod difflog;
pub mod error;
pub mod numerics;
pub mod optimizer;
pub mod selector;
pub mod series;
pub mod transforms;

pub use approximant::{fit_iterated_root, marginal_amplitude, IteratedRootApproximant, MarginalAmplitude};
pub use error::{Error, Result};
pub use numerics::ScanGrid;
pub use optimizer::{
    analyze, AmplitudeCurve, Analysis, Condition, OptimizationSolution, RidgeFunctional, SolutionStatus,
};
pub use selector::{Criterion, Method, SelectionResult};
pub use series::{TargetAsymptotics, TruncatedSeries};
pub use transforms::{borel_point, TransformKind};
