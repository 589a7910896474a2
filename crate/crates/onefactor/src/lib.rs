//! Signed enumeration of 1-factorizations of regular graphs.
//!
//! A 1-factorization of a `k`-regular graph splits its edges into `k` perfect
//! matchings; it exists exactly when the graph is edge colorable with `k`
//! colors. Fix the vertex order, draw the vertices on a cycle and the edges
//! as chords, and give every matching the sign of its crossing parity. The
//! headline fact this crate computes with: if the sum of `Π_i sgn(F_i)` over
//! all 1-factorizations of `G` does not vanish, then `G` is `k`-list edge
//! colorable (every assignment of `k`-element color lists to the edges admits
//! a proper coloring), and even edge `k`-paintable.
//!
//! Modules:
//!
//! - [`graph`] — representation, graph6 and bracket formats, validation;
//! - [`matching`] — crossing parities of single matchings, incremental and
//!   static, on a doubly linked unmatched-vertex list;
//! - [`engine`] — the signed enumeration itself;
//! - [`oracle`] — independent brute-force cross-checks at desk scale;
//! - [`nullstellensatz`] — exact coefficient extraction by grid evaluation,
//!   the algebraic identity behind the certificate;
//! - [`survey`] — batch classification with CSV/JSON reports;
//! - [`generate`], [`iso`] — small regular graph enumeration and isomorphism,
//!   used to build survey corpora;
//! - [`cli`] — the `onefactor` binary.
//!
//! The `examples/` directory walks through each capability; start with
//! `cargo run --example signsum`.

pub mod cli;
pub mod engine;
pub mod generate;
pub mod graph;
pub mod iso;
pub mod matching;
pub mod nullstellensatz;
pub mod oracle;
pub mod survey;

pub use engine::{weighted_sum, SignSumResult};
pub use graph::Graph;
pub use survey::{classify, Classification, Verdict};
