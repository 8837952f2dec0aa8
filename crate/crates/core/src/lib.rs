//! Exact-arithmetic tools for cut and pair-cut cones of finite metrics.
//!
//! A metric on `V_n = {1, ..., n}` is stored as a vector of rationals over
//! the pairs `{i, j}` in lexicographic order. The crate decides membership
//! in the pair-cut cone by a closed-form inequality test, applies a
//! sufficient condition for the cut cone, settles either question exactly
//! with a rational simplex oracle, builds `ℓ₁` and `ℓ∞` embeddings, and
//! works with sphere-of-influence graphs.
//!
//! ```
//! use cutcone::{graph::{graph_metric, Family}, paircut::paircut_membership};
//!
//! let k6 = Family::Complete(6).build().unwrap();
//! let verdict = paircut_membership(&graph_metric(&k6).unwrap()).unwrap();
//! assert!(verdict.member);
//! ```

pub mod cut;
pub mod cut_algebra;
pub mod embedding;
pub mod error;
pub mod fullcut;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod metric;
pub mod oracle;
pub mod paircut;
pub mod random;
pub mod rational;
pub mod sig;

pub use cut::Cut;
pub use error::{Error, Result};
pub use matrix::RationalMatrix;
pub use metric::Metric;
pub use rational::Rational;

// The book's snippets run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/metrics.md")]
    mod metrics {}
    #[doc = include_str!("../../../book/src/paircut.md")]
    mod paircut {}
    #[doc = include_str!("../../../book/src/cutcone.md")]
    mod cutcone {}
    #[doc = include_str!("../../../book/src/kernel.md")]
    mod kernel {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/sig.md")]
    mod sig {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
