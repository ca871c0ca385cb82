//! Combinatorial, homological and graded-module layer of protocork theory.
//!
//! A protocork is a compact 4-manifold built by plumbing 0-framed disk
//! bundles over spheres according to a bipartite signed multigraph whose
//! algebraic adjacency between the two vertex parts is the identity matrix.
//! This crate models that combinatorial layer exactly:
//!
//! * [`graph`]: plumbing graphs, validation, reflection, symmetry witnesses,
//!   isomorphism and enumeration up to simultaneous index permutations, and
//!   the induced signed-permutation actions on plumbing-torus classes.
//! * [`matrix`]: arbitrary-precision integer matrices, Smith normal form
//!   with unimodular transforms, cokernels, kernels and rational signatures.
//! * [`homology`]: exact homology of the three protocork handle
//!   decompositions and of the plumbing boundary, plus the bookkeeping that
//!   transfers those facts to an ambient closed 4-manifold.
//! * [`kirby`]: synthesis of the dotted-circle handle diagrams at the three
//!   stages, schematic text and SVG rendering, and the 0-framed surgery
//!   presentation of the boundary.
//! * [`cobordism`]: the explicit handle cobordisms W, Q, C and T between a
//!   protocork boundary and standard pieces, composition, and a greedy
//!   handle-cancellation verifier for algebraic triviality.
//! * [`floer`]: the standard monopole Floer package of a connected sum of
//!   S^1 x S^2 over Z[U], its splitting with a finite reduced part, grading
//!   and moduli-dimension calculators, and the surgery gate comparing the
//!   formal dimension against twice a U-torsion order.
//!
//! Everything is computed over Z (or Q where a signature or grading demands
//! it); no floating point is used anywhere.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cobordism;
pub mod floer;
pub mod graph;
pub mod homology;
pub mod kirby;
pub mod matrix;
