//! Explicit cobordisms between the plumbing boundary and standard pieces,
//! with algebraic triviality verification.
//!
//! A cobordism is an ordered handle list. Attachment data is purely
//! incidence-level: each handle stores integer intersection counts of its
//! attaching sphere with the belt spheres of earlier handles of one index
//! lower, plus counts against labeled curves of the source boundary. The
//! counts come from the construction rules, not from an embedding, and the
//! triviality check is chain-level handle cancellation on them.

use crate::graph::{EdgeId, ProtocorkGraph};
use crate::homology::HomologyProfile;
use crate::kirby::{build_diagram, KirbyDiagram, Origin, Stage};
use crate::matrix::{cokernel, kernel_basis, smith_form, AbelianGroup, IntMatrix};
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Boundary {
    S3,
    /// Connected sum of b1 copies of S1 x S2; curves are the labeled core
    /// circles available for later attachments.
    ConnSumS1S2 { b1: usize, curves: Vec<Origin> },
    /// Boundary of the plumbing on a graph, identified by canonical form.
    Protocork { canonical_hex: String, curves: Vec<Origin> },
}

/// One handle. attach is dense over the handles of index one lower that
/// appear earlier in the list; boundary_links hold counts against labeled
/// curves of the source boundary, and are resolved into attach entries
/// when cobordisms are composed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Handle {
    pub index: u8,
    pub label: Origin,
    pub attach: Vec<i64>,
    pub boundary_links: Vec<(Origin, i64)>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cobordism {
    pub source: Boundary,
    pub target: Boundary,
    pub handles: Vec<Handle>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CobordismError {
    Disconnected,
    NotSymmetric,
    HalfStage,
    BoundaryMismatch,
}

impl fmt::Display for CobordismError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CobordismError::Disconnected => write!(f, "graph must be connected"),
            CobordismError::NotSymmetric => write!(f, "graph must be symmetric"),
            CobordismError::HalfStage => write!(f, "only stages 0 and 1 bound a cork side"),
            CobordismError::BoundaryMismatch => {
                write!(f, "target of the first cobordism does not match source of the second")
            }
        }
    }
}

/// Curve labels the plumbing boundary exposes: one meridian per vertex
/// knot and one per excess circle.
fn protocork_boundary(g: &ProtocorkGraph) -> Boundary {
    let mut curves = Vec::new();
    for i in 1..=g.n() {
        curves.push(Origin::VertexA(i));
    }
    for j in 1..=g.n() {
        curves.push(Origin::VertexB(j));
    }
    for e in g.excess_edges() {
        curves.push(Origin::Excess(e));
    }
    Boundary::Protocork { canonical_hex: g.canonical_hex(), curves }
}

fn connected_sum_boundary(g: &ProtocorkGraph) -> Boundary {
    let excess = g.excess_edges();
    Boundary::ConnSumS1S2 {
        b1: excess.len(),
        curves: excess.into_iter().map(Origin::Excess).collect(),
    }
}

fn require_connected(g: &ProtocorkGraph) -> Result<(), CobordismError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(CobordismError::Disconnected)
    }
}

impl Cobordism {
    pub fn identity(boundary: Boundary) -> Cobordism {
        Cobordism { source: boundary.clone(), target: boundary, handles: Vec::new() }
    }

    pub fn handle_count(&self, index: u8) -> usize {
        self.handles.iter().filter(|h| h.index == index).count()
    }

    /// Euler characteristic relative to the source boundary.
    pub fn euler_characteristic(&self) -> i64 {
        self.handles.iter().map(|h| if h.index % 2 == 0 { 1 } else { -1 }).sum()
    }
}

/// The protocork of the given end, S3 -> Y: one 1-handle per dotted circle
/// of the stage diagram, one 0-framed 2-handle per framed knot, attach
/// entries from the diagram's chain boundary map.
pub fn protocork_as_cobordism(
    g: &ProtocorkGraph,
    stage: Stage,
) -> Result<Cobordism, CobordismError> {
    require_connected(g)?;
    if stage == Stage::Half {
        return Err(CobordismError::HalfStage);
    }
    let d = build_diagram(g, stage);
    Ok(diagram_handles(&d, g))
}

fn diagram_handles(d: &KirbyDiagram, g: &ProtocorkGraph) -> Cobordism {
    let boundary = crate::kirby::chain_boundary_map(d);
    let dotted = d.dotted_ids();
    let framed = d.framed_ids();
    let mut handles = Vec::with_capacity(d.components.len());
    for &id in &dotted {
        handles.push(Handle {
            index: 1,
            label: d.component(id).origin,
            attach: Vec::new(),
            boundary_links: Vec::new(),
        });
    }
    for (c, &id) in framed.iter().enumerate() {
        let attach = (0..dotted.len())
            .map(|r| i64::try_from(boundary.get(r, c).clone()).expect("small entry"))
            .collect();
        handles.push(Handle {
            index: 2,
            label: d.component(id).origin,
            attach,
            boundary_links: Vec::new(),
        });
    }
    Cobordism { source: Boundary::S3, target: protocork_boundary(g), handles }
}

/// W: #b1(S1 x S2) -> Y. n 1-handles for the B-vertex circles, then n
/// 2-handles along the A-vertex knots; the knots meet the new belt spheres
/// by the identity pairing and run over the source circles by the excess
/// threading counts.
pub fn build_w(g: &ProtocorkGraph) -> Result<Cobordism, CobordismError> {
    require_connected(g)?;
    let n = g.n();
    let excess = g.excess_edges();
    let mut handles = Vec::with_capacity(2 * n);
    for j in 1..=n {
        handles.push(Handle {
            index: 1,
            label: Origin::VertexB(j),
            attach: Vec::new(),
            boundary_links: Vec::new(),
        });
    }
    for i in 1..=n {
        let attach = (1..=n).map(|j| i64::from(i == j)).collect();
        let boundary_links = excess
            .iter()
            .filter(|&&e| g.edge(e).a == i)
            .map(|&e| (Origin::Excess(e), g.edge(e).sign.value()))
            .collect();
        handles.push(Handle { index: 2, label: Origin::VertexA(i), attach, boundary_links });
    }
    Ok(Cobordism { source: connected_sum_boundary(g), target: protocork_boundary(g), handles })
}

/// Q: Y -> #b1(S1 x S2). n 0-framed 2-handles meridional to the B-vertex
/// knots, then n 3-handles; the i-th attaching sphere meets the belt
/// sphere of the new i-th 2-handle once and the belt sphere of the
/// 2-handle attached along the i-th A-vertex knot once.
pub fn build_q(g: &ProtocorkGraph) -> Result<Cobordism, CobordismError> {
    require_connected(g)?;
    let n = g.n();
    let mut handles = Vec::with_capacity(2 * n);
    for i in 1..=n {
        handles.push(Handle {
            index: 2,
            label: Origin::VertexB(i),
            attach: Vec::new(),
            boundary_links: vec![(Origin::VertexB(i), 1)],
        });
    }
    for i in 1..=n {
        let attach = (1..=n).map(|j| i64::from(i == j)).collect();
        handles.push(Handle {
            index: 3,
            label: Origin::VertexA(i),
            attach,
            boundary_links: vec![(Origin::VertexA(i), 1)],
        });
    }
    Ok(Cobordism { source: protocork_boundary(g), target: connected_sum_boundary(g), handles })
}

/// C: Y -> S3. One 0-framed 2-handle meridional to each excess circle.
pub fn build_c(g: &ProtocorkGraph) -> Result<Cobordism, CobordismError> {
    require_connected(g)?;
    let handles = g
        .excess_edges()
        .into_iter()
        .map(|e| Handle {
            index: 2,
            label: Origin::Excess(e),
            attach: Vec::new(),
            boundary_links: vec![(Origin::Excess(e), 1)],
        })
        .collect();
    Ok(Cobordism { source: protocork_boundary(g), target: Boundary::S3, handles })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GammaKind {
    /// Curve of a diagonal excess edge; threads its own meridian once.
    Zigzag,
    /// Curve of an off-diagonal excess edge; threads its own meridian once
    /// and the meridian of each diagonal excess edge at its two endpoint
    /// indices.
    EightLoop,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GammaCurve {
    pub edge: EdgeId,
    pub kind: GammaKind,
    /// Excess edges whose meridians the curve threads, each once.
    pub threads: Vec<EdgeId>,
}

/// T: Y -> S3 for a symmetric graph; the attaching curves are permuted by
/// the boundary involution swapping the two vertex parts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TCobordism {
    pub cobordism: Cobordism,
    pub curves: Vec<GammaCurve>,
    /// tau_pairing[c] is the curve index tau maps curve c to.
    pub tau_pairing: Vec<usize>,
}

pub fn build_t(g: &ProtocorkGraph) -> Result<TCobordism, CobordismError> {
    require_connected(g)?;
    let pairing = g.symmetry_pairing().ok_or(CobordismError::NotSymmetric)?;
    let excess = g.excess_edges();
    let diagonal_excess: Vec<EdgeId> =
        excess.iter().copied().filter(|&e| g.edge(e).is_diagonal()).collect();
    let curves: Vec<GammaCurve> = excess
        .iter()
        .map(|&e| {
            let edge = g.edge(e);
            if edge.is_diagonal() {
                GammaCurve { edge: e, kind: GammaKind::Zigzag, threads: vec![e] }
            } else {
                let mut threads = vec![e];
                threads.extend(
                    diagonal_excess
                        .iter()
                        .copied()
                        .filter(|&d| [edge.a, edge.b].contains(&g.edge(d).a)),
                );
                threads.sort();
                GammaCurve { edge: e, kind: GammaKind::EightLoop, threads }
            }
        })
        .collect();
    let tau_pairing = curves
        .iter()
        .map(|c| {
            let partner = pairing[c.edge];
            excess.iter().position(|&e| e == partner).unwrap_or_else(|| {
                excess.iter().position(|&e| e == c.edge).unwrap()
            })
        })
        .collect();
    let handles = curves
        .iter()
        .map(|c| Handle {
            index: 2,
            label: Origin::Excess(c.edge),
            attach: Vec::new(),
            boundary_links: c.threads.iter().map(|&t| (Origin::Excess(t), 1)).collect(),
        })
        .collect();
    let cobordism =
        Cobordism { source: protocork_boundary(g), target: Boundary::S3, handles };
    Ok(TCobordism { cobordism, curves, tau_pairing })
}

/// Glues second after first. Boundary links of the second cobordism are
/// resolved against the first's handles of one index lower by label;
/// labels that stay unresolved must name curves of the combined source.
pub fn compose(first: &Cobordism, second: &Cobordism) -> Result<Cobordism, CobordismError> {
    if first.target != second.source {
        return Err(CobordismError::BoundaryMismatch);
    }
    let source_curves: Vec<Origin> = match &first.source {
        Boundary::S3 => Vec::new(),
        Boundary::ConnSumS1S2 { curves, .. } | Boundary::Protocork { curves, .. } => {
            curves.clone()
        }
    };
    let mut handles = first.handles.clone();
    for h in &second.handles {
        let lower: Vec<(usize, Origin)> = first
            .handles
            .iter()
            .enumerate()
            .filter(|(_, l)| l.index + 1 == h.index)
            .map(|(pos, l)| (pos, l.label))
            .collect();
        let mut resolved = vec![0i64; lower.len()];
        let mut kept_links = Vec::new();
        for &(label, count) in &h.boundary_links {
            if let Some(slot) = lower.iter().position(|&(_, l)| l == label) {
                resolved[slot] += count;
            } else if source_curves.contains(&label) {
                kept_links.push((label, count));
            } else {
                return Err(CobordismError::BoundaryMismatch);
            }
        }
        resolved.extend_from_slice(&h.attach);
        handles.push(Handle {
            index: h.index,
            label: h.label,
            attach: resolved,
            boundary_links: kept_links,
        });
    }
    Ok(Cobordism { source: first.source.clone(), target: second.target.clone(), handles })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HandleRef {
    pub position: usize,
    pub index: u8,
    pub label: Origin,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CancellationReport {
    pub trivial: bool,
    /// Cancelled (lower, upper) pairs in the order they were removed.
    pub trace: Vec<(HandleRef, HandleRef)>,
    pub survivors: Vec<HandleRef>,
}

struct LiveHandle {
    index: u8,
    label: Origin,
    attach: BTreeMap<usize, i64>,
    links: BTreeMap<Origin, i64>,
    alive: bool,
}

/// Greedy chain-level handle cancellation. A pair cancels when a handle
/// meets the belt sphere of a live handle of one index lower with total
/// count of absolute value 1; remaining handles of the upper index slide
/// over the cancelled handle (integer column operations on their attach
/// vectors and links), and entries of index-plus-two handles on the
/// cancelled upper handle are dropped with it. The answer is independent
/// of the cancellation order; the chooser only shapes the trace.
pub fn check_trivial(c: &Cobordism) -> CancellationReport {
    check_trivial_with(c, |_| 0)
}

pub fn check_trivial_with(
    c: &Cobordism,
    mut chooser: impl FnMut(&[(usize, usize)]) -> usize,
) -> CancellationReport {
    let mut live = materialize(c);
    let mut trace = Vec::new();
    loop {
        let candidates = cancellable_pairs(&live);
        if candidates.is_empty() {
            break;
        }
        let pick = chooser(&candidates);
        let (lo, up) = candidates[pick.min(candidates.len() - 1)];
        trace.push((handle_ref(&live, lo), handle_ref(&live, up)));
        cancel_pair(&mut live, lo, up);
    }
    let survivors: Vec<HandleRef> = live
        .iter()
        .enumerate()
        .filter(|(_, h)| h.alive)
        .map(|(pos, _)| handle_ref(&live, pos))
        .collect();
    CancellationReport { trivial: survivors.is_empty(), trace, survivors }
}

fn handle_ref(live: &[LiveHandle], pos: usize) -> HandleRef {
    HandleRef { position: pos, index: live[pos].index, label: live[pos].label }
}

fn materialize(c: &Cobordism) -> Vec<LiveHandle> {
    let mut live = Vec::with_capacity(c.handles.len());
    for (pos, h) in c.handles.iter().enumerate() {
        let lower: Vec<usize> = c.handles[..pos]
            .iter()
            .enumerate()
            .filter(|(_, l)| l.index + 1 == h.index)
            .map(|(p, _)| p)
            .collect();
        assert_eq!(
            lower.len(),
            h.attach.len(),
            "attach vector must cover earlier lower-index handles"
        );
        let attach = lower
            .into_iter()
            .zip(h.attach.iter().copied())
            .filter(|&(_, v)| v != 0)
            .collect();
        let mut links = BTreeMap::new();
        for &(label, count) in &h.boundary_links {
            *links.entry(label).or_insert(0) += count;
        }
        links.retain(|_, v| *v != 0);
        live.push(LiveHandle { index: h.index, label: h.label, attach, links, alive: true });
    }
    live
}

fn cancellable_pairs(live: &[LiveHandle]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (up, h) in live.iter().enumerate() {
        if !h.alive {
            continue;
        }
        for (&lo, &v) in &h.attach {
            if live[lo].alive && v.abs() == 1 {
                out.push((lo, up));
            }
        }
    }
    out.sort();
    out
}

fn cancel_pair(live: &mut [LiveHandle], lo: usize, up: usize) {
    let pivot = live[up].attach[&lo];
    let pivot_attach: Vec<(usize, i64)> =
        live[up].attach.iter().map(|(&p, &v)| (p, v)).collect();
    let pivot_links: Vec<(Origin, i64)> =
        live[up].links.iter().map(|(&l, &v)| (l, v)).collect();
    let upper_index = live[up].index;
    for pos in 0..live.len() {
        if pos == up || !live[pos].alive {
            continue;
        }
        if live[pos].index == upper_index {
            let Some(&c) = live[pos].attach.get(&lo) else { continue };
            let factor = c.checked_mul(pivot).expect("attach entry overflow");
            for &(p, v) in &pivot_attach {
                let e = live[pos].attach.entry(p).or_insert(0);
                *e = e.checked_sub(factor.checked_mul(v).expect("attach entry overflow"))
                    .expect("attach entry overflow");
            }
            for &(l, v) in &pivot_links {
                let e = live[pos].links.entry(l).or_insert(0);
                *e = e.checked_sub(factor.checked_mul(v).expect("attach entry overflow"))
                    .expect("attach entry overflow");
            }
            live[pos].attach.retain(|_, v| *v != 0);
            live[pos].links.retain(|_, v| *v != 0);
        } else if live[pos].index == upper_index + 1 {
            live[pos].attach.remove(&up);
        }
    }
    live[lo].alive = false;
    live[up].alive = false;
}

/// Homology of the handle chain complex. Geometric counts carry no
/// orientation for 3-handle attachments, so when the composed boundary
/// maps fail d. d = 0 no complex exists and None is returned.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CobordismHomology {
    pub h1: AbelianGroup,
    pub h2: AbelianGroup,
    pub h3: AbelianGroup,
}

pub fn cobordism_homology(c: &Cobordism) -> Option<CobordismHomology> {
    let d2 = boundary_matrix(c, 2);
    let d3 = boundary_matrix(c, 3);
    if !d2.mul(&d3).is_zero() {
        return None;
    }
    let h1 = cokernel(&d2);
    let kernel = kernel_basis(&d2);
    let h2 = quotient_in_lattice(&kernel, &d3);
    let h3 = AbelianGroup::free(kernel_basis(&d3).len());
    Some(CobordismHomology { h1, h2, h3 })
}

/// Boundary map of the k-handles over the (k-1)-handles, columns in list
/// order, source-boundary links ignored.
fn boundary_matrix(c: &Cobordism, k: u8) -> IntMatrix {
    let lower: Vec<usize> = c
        .handles
        .iter()
        .enumerate()
        .filter(|(_, h)| h.index + 1 == k)
        .map(|(p, _)| p)
        .collect();
    let upper: Vec<&Handle> = c.handles.iter().filter(|h| h.index == k).collect();
    let mut m = IntMatrix::zeros(lower.len(), upper.len());
    for (col, h) in upper.iter().enumerate() {
        for (row, v) in h.attach.iter().enumerate() {
            m.set(row, col, BigInt::from(*v));
        }
    }
    m
}

/// ker(d2) / im(d3), computed by expressing the image in the kernel basis.
fn quotient_in_lattice(kernel: &[Vec<BigInt>], d3: &IntMatrix) -> AbelianGroup {
    if kernel.is_empty() {
        return AbelianGroup::free(0);
    }
    let dim = kernel[0].len();
    let mut k = IntMatrix::zeros(dim, kernel.len());
    for (col, v) in kernel.iter().enumerate() {
        for (row, e) in v.iter().enumerate() {
            k.set(row, col, e.clone());
        }
    }
    let sf = smith_form(&k);
    let mut coords = IntMatrix::zeros(kernel.len(), d3.cols());
    for col in 0..d3.cols() {
        // Solve K y = w via U K V = D: y = V z with z_i = (U w)_i / d_i.
        let mut uw = vec![BigInt::zero(); sf.u.rows()];
        for (r, slot) in uw.iter_mut().enumerate() {
            let mut acc = BigInt::zero();
            for i in 0..dim {
                acc += sf.u.get(r, i) * d3.get(i, col);
            }
            *slot = acc;
        }
        let mut z = vec![BigInt::zero(); kernel.len()];
        for (i, zi) in z.iter_mut().enumerate() {
            let d = sf.d.get(i, i);
            if d.is_zero() {
                assert!(uw[i].is_zero(), "image must lie in the kernel lattice");
            } else {
                assert!((&uw[i] % d).is_zero(), "image must lie in the kernel lattice");
                *zi = &uw[i] / d;
            }
        }
        for i in sf.rank..uw.len() {
            assert!(uw[i].is_zero(), "image must lie in the kernel lattice");
        }
        for r in 0..kernel.len() {
            let mut acc = BigInt::zero();
            for (i, zi) in z.iter().enumerate() {
                acc += sf.v.get(r, i) * zi;
            }
            coords.set(r, col, acc);
        }
    }
    cokernel(&coords)
}

/// Compares the handle homology of a protocork cobordism against the
/// diagram profile.
pub fn matches_profile(h: &CobordismHomology, profile: &HomologyProfile) -> bool {
    h.h1 == profile.h1 && h.h2 == profile.h2 && h.h3 == profile.h3
}

/// Dimension of the real vector space behind a homology orientation for a
/// cobordism: H1 of the cobordism, its maximal positive-definite subspace,
/// and H1 of the outgoing end. Zero means the orientation is canonical.
pub fn homology_orientation_dim(h1: u64, iplus: u64, h1_out: u64) -> u64 {
    h1 + iplus + h1_out
}
