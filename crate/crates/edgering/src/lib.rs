//! Edge polytopes, δ-polynomials and toric ideals of finite simple graphs.
//!
//! The crate is organized around four layers:
//!
//! * [`graph`]: simple graphs, cycle and subgraph detectors, and exhaustive
//!   enumeration of connected isomorphism classes on few vertices.
//! * [`exactla`]: big rationals, a rational
//!   simplex solver for feasibility and strict-positivity questions, and
//!   matrix ranks over ℚ and prime fields.
//! * [`polytope`]: edge polytopes `conv{ρ(e)}`, dilation lattice-point
//!   counts, δ-polynomials, degree/codegree, and full-dimensionalizing
//!   projections.
//! * [`toric`]: the toric ideal of a graph via monomial fibers: graded
//!   pieces, minimal generators, even-closed-walk binomials, and truncated
//!   Betti tables.
//!
//! On top of these, [`cli`] exposes graph analysis, corpus sweeps and the
//! lemma verifiers that the `edgering` binary drives.
//!
//! ```
//! use edgering::graph::SimpleGraph;
//! use edgering::polytope::edge_polytope;
//!
//! // The complete bipartite graph K_{2,3} on {1,2} ∪ {3,4,5}.
//! let g = SimpleGraph::new(5, &[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
//! let p = edge_polytope(&g).unwrap();
//! let delta = p.delta_polynomial().unwrap();
//! assert_eq!(delta.coefficients(), &[1, 2, 0, 0]); // δ(P, λ) = 1 + 2λ
//! assert_eq!(delta.degree(), 1);
//! assert_eq!(delta.codegree(), 3);
//! ```

pub mod cli;
pub mod exactla;
pub mod graph;
pub mod polytope;
pub mod toric;

#[cfg(doctest)]
mod book;
