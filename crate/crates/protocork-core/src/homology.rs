//! Exact integer homology of the plumbing stages and their boundary.
//!
//! All groups come out of Smith normal forms of boundary or linking
//! matrices, so ranks and torsion are exact. The handle chain complex of a
//! stage has the framed knots in degree 2 and the dotted circles in degree
//! 1; the boundary 3-manifold is presented by the all-components surgery
//! linking matrix.

use crate::graph::ProtocorkGraph;
use crate::kirby::{build_diagram, chain_boundary_map, framed_linking, KirbyDiagram, Stage};
use crate::matrix::{cokernel, kernel_basis, symmetric_signature, AbelianGroup, IntMatrix};
use alloc::vec::Vec;

/// Homology of a 4-manifold given by a 1-/2-handle diagram, plus the
/// definite part sizes of its intersection form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomologyProfile {
    pub h0: AbelianGroup,
    pub h1: AbelianGroup,
    pub h2: AbelianGroup,
    pub h3: AbelianGroup,
    pub b_plus: usize,
    pub b_minus: usize,
}

/// Homology of the stage's 4-manifold. For stages 0 and 1 of a connected
/// graph this is H1 free of rank |E| - 2n + 1 with H2 = H3 = 0 and zero
/// intersection form; stage 1/2 keeps the same H1 and picks up a
/// hyperbolic H2 of rank 2n from the plumbed spheres.
pub fn protocork_homology(g: &ProtocorkGraph, stage: Stage) -> HomologyProfile {
    diagram_homology(&build_diagram(g, stage))
}

pub fn diagram_homology(d: &KirbyDiagram) -> HomologyProfile {
    let boundary = chain_boundary_map(d);
    let h1 = cokernel(&boundary);
    let kernel = kernel_basis(&boundary);
    let h2 = AbelianGroup::free(kernel.len());
    let (b_plus, b_minus) = intersection_signature(d, &kernel);
    HomologyProfile {
        h0: AbelianGroup::free(1),
        h1,
        h2,
        h3: AbelianGroup::free(0),
        b_plus,
        b_minus,
    }
}

/// Intersection form on H2 in the kernel basis: the framed linking matrix
/// restricted to cycles.
pub fn intersection_form(d: &KirbyDiagram) -> IntMatrix {
    let kernel = kernel_basis(&chain_boundary_map(d));
    restricted_form(&framed_linking(d), &kernel)
}

fn restricted_form(l: &IntMatrix, kernel: &[Vec<num_bigint::BigInt>]) -> IntMatrix {
    let dim = kernel.len();
    let mut form = IntMatrix::zeros(dim, dim);
    for r in 0..dim {
        for c in 0..dim {
            let mut acc = num_bigint::BigInt::from(0);
            for (i, vi) in kernel[r].iter().enumerate() {
                for (j, vj) in kernel[c].iter().enumerate() {
                    acc += vi * l.get(i, j) * vj;
                }
            }
            form.set(r, c, acc);
        }
    }
    form
}

fn intersection_signature(d: &KirbyDiagram, kernel: &[Vec<num_bigint::BigInt>]) -> (usize, usize) {
    if kernel.is_empty() {
        return (0, 0);
    }
    let form = restricted_form(&framed_linking(d), kernel);
    let (pos, neg, _zero) = symmetric_signature(&form);
    (pos, neg)
}

/// Presentation matrix of H1 of the boundary: generators are the meridians
/// of the A-vertices, B-vertices, and excess circles; relations are the
/// rows of the all-components linking matrix with every framing 0. The
/// vertex meridians pair by the identity block and everything else links
/// trivially, so the cokernel is free on the excess meridians.
pub fn boundary_presentation(g: &ProtocorkGraph) -> IntMatrix {
    crate::kirby::surgery_presentation(&build_diagram(g, Stage::Half)).linking
}

pub fn boundary_homology(g: &ProtocorkGraph) -> AbelianGroup {
    cokernel(&boundary_presentation(g))
}

/// Modeled intersection pairing of the plumbing tori inside the boundary:
/// the tori are pairwise disjoint, so the |E| x |E| pairing matrix is zero.
pub fn torus_pairing_matrix(g: &ProtocorkGraph) -> IntMatrix {
    IntMatrix::zeros(g.edge_count(), g.edge_count())
}

pub fn torus_intersection_check(g: &ProtocorkGraph) -> bool {
    torus_pairing_matrix(g).is_zero()
}

/// Cohomology bookkeeping for an ambient closed manifold M = X cup_Y N:
/// b+ transfers from X always; when H1(X) = 0, H1(M) vanishes, H2(M) has
/// rank b2(X) + b1(Y), and restriction is a spin-c bijection.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AmbientProfile {
    pub bplus_m: i64,
    pub h1_m_rank: Option<i64>,
    pub h2_m_rank: Option<i64>,
    pub spin_c_bijection: Option<bool>,
}

pub fn ambient_bookkeeping(
    bplus_x: i64,
    b2_x: i64,
    b1_y: i64,
    h1_x_is_zero: bool,
) -> AmbientProfile {
    if h1_x_is_zero {
        AmbientProfile {
            bplus_m: bplus_x,
            h1_m_rank: Some(0),
            h2_m_rank: Some(b2_x + b1_y),
            spin_c_bijection: Some(true),
        }
    } else {
        AmbientProfile { bplus_m: bplus_x, h1_m_rank: None, h2_m_rank: None, spin_c_bijection: None }
    }
}
