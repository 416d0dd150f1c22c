//! Vertex models over the Gaussian rationals.
//!
//! A vertex model assigns a weight to every multiset of edge colors; its
//! partition function sums, over all edge colorings of a graph, the product
//! of the weights seen at the vertices. This crate evaluates such partition
//! functions exactly, glues labeled graph fragments together, builds
//! connection matrices and checks their rank against the number of colors,
//! and verifies the symmetric-group identities (characters, hook lengths,
//! ranks of orbit-count matrices) that govern that rank growth.
//!
//! Everything is exact: scalars live in ℚ(i) and there is no floating point
//! anywhere.
//!
//! The modules, bottom-up:
//!
//! - [`exactalg`]: [`GaussianRational`] scalars and [`ExactMatrix`] rank.
//! - [`graphs`]: [`MultiGraph`], [`Fragment`], gluing and products,
//!   [`Permutation`], canonical forms.
//! - [`models`]: [`VertexModel`] and partition-function evaluation, both by
//!   brute force and by vertex elimination.
//! - [`symgroup`]: partitions, hook lengths, characters, `M_n(d)`.
//! - [`lab`]: fragment catalogs, connection matrices and the experiments
//!   that tie the pieces together.
//! - [`cli`]: the `vertexlab` command-line front end.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod cli;
pub mod error;
pub mod exactalg;
pub mod graphs;
pub mod lab;
pub mod models;
pub mod symgroup;

pub use error::{Error, Result};
pub use exactalg::{ExactMatrix, GaussianRational};
pub use graphs::{Fragment, MultiGraph, Permutation};
pub use models::VertexModel;
