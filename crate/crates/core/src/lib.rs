//! Numerical sets, numerical semigroups and their Young diagrams.
//!
//! Provides the set/diagram correspondence, the four glueing sums, duals and
//! (pseudo-)symmetric decompositions, exhaustive enumeration, brute-force
//! verification of the closed-form results, and diagram rendering.
//!
//! ```
//! use nsgs_core::{decompose_symmetric, diagram_of, dual, set_sum, NumericalSet, SumKind};
//!
//! let t: NumericalSet = "0 4 7 ->".parse()?;
//! let s = set_sum(&t, &dual(&t), SumKind::EndToEnd)?;
//! assert_eq!(s.to_string(), "0 4 7 8 10 11 12 14 ->");
//! assert_eq!(diagram_of(&t).rows(), &[2, 2, 1, 1, 1]);
//!
//! let d = decompose_symmetric(&s)?;
//! assert_eq!((d.summand, d.kind), (t, SumKind::EndToEnd));
//! # Ok::<(), nsgs_core::Error>(())
//! ```

pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod numset;
pub mod render;
pub mod sum;
pub mod symmetry;
pub mod verify;

pub use diagram::{
    column_hook_set, diagram_of, hook_grid, is_semigroup_via_hooks, numerical_set_of, HookGrid,
    YoungDiagram,
};
pub use enumerate::{
    enumerate_numerical_sets, enumerate_numerical_sets_capped, enumerate_semigroups, BoundMode,
    Caps, EnumBound,
};
pub use error::{Error, Result};
pub use numset::{GapSet, NumericalSet};
pub use render::{render, RenderFormat, RenderOptions};
pub use sum::{diagram_sum, predicted_gaps, self_sum_closure_counterexample, set_sum, SumKind};
pub use symmetry::{
    classify_ring, decompose_pseudo_symmetric, decompose_symmetric, dual, dual_sum_is_semigroup,
    is_pseudo_symmetric, is_symmetric, Decomposition, RingLabel,
};
pub use verify::{verify_theorem, Failure, Theorem, VerificationReport};
