//! Protocork plumbing graphs.
//!
//! A plumbing graph on sphere-number n is a bipartite signed multigraph on
//! vertex parts A = {A_1..A_n} and B = {B_1..B_n} whose signed adjacency
//! between the parts is the identity: writing r(i, j) for the number of
//! edges between A_i and B_j and a(i, j) for their signed count,
//! a(i, j) = delta_ij. Consequently r(i, i) is odd and at least 1 while
//! r(i, j) is even for i != j, and the sign multiset of every slot (i, j)
//! is forced by r(i, j) alone.

use crate::matrix::IntMatrix;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn glyph(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Edge between A_a and B_b with a plumbing sign. Indices are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct SignedEdge {
    pub a: usize,
    pub b: usize,
    pub sign: Sign,
}

impl SignedEdge {
    pub fn new(a: usize, b: usize, sign: Sign) -> Self {
        SignedEdge { a, b, sign }
    }

    pub fn is_diagonal(self) -> bool {
        self.a == self.b
    }

    pub fn reflected(self) -> Self {
        SignedEdge { a: self.b, b: self.a, sign: self.sign }
    }
}

/// Index into the sorted edge list of a graph.
pub type EdgeId = usize;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DeltaViolation {
    pub a: usize,
    pub b: usize,
    pub expected: i64,
    pub actual: i64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GraphError {
    /// n == 0 carries no vertices to plumb.
    EmptyGraph,
    /// Edges whose endpoints fall outside 1..=n.
    IndexOutOfRange { edges: Vec<(usize, usize, i64)> },
    /// Every (i, j) slot whose signed edge count differs from delta_ij.
    DeltaConstraintViolated { violations: Vec<DeltaViolation> },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::EmptyGraph => write!(f, "graph must have n >= 1"),
            GraphError::IndexOutOfRange { edges } => {
                write!(f, "edge indices out of range:")?;
                for (a, b, s) in edges {
                    write!(f, " ({}, {}, {})", a, b, s)?;
                }
                Ok(())
            }
            GraphError::DeltaConstraintViolated { violations } => {
                write!(f, "signed adjacency must be the identity;")?;
                for v in violations {
                    write!(
                        f,
                        " slot ({}, {}) has signed count {} (expected {})",
                        v.a, v.b, v.actual, v.expected
                    )?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EnumerateError {
    BudgetExceeded { cap: usize },
}

impl fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerateError::BudgetExceeded { cap } => {
                write!(f, "enumeration exceeded the class cap of {}", cap)
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ActionError {
    NotSymmetric,
}

impl fmt::Display for ActionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionError::NotSymmetric => write!(f, "graph is not symmetric"),
        }
    }
}

/// Validated plumbing graph. Edges are kept sorted by (a, b, sign) so edge
/// ids are stable and ordinals within an (i, j, sign) class are well defined.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProtocorkGraph {
    n: usize,
    edges: Vec<SignedEdge>,
}

/// Summary invariants of a graph and its plumbing boundary.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GraphStats {
    pub edge_count: usize,
    pub component_count: usize,
    /// First Betti number of the boundary 3-manifold: |E| - 2n + c.
    pub b1_boundary: usize,
    /// Edges outside the deterministic spanning forest.
    pub excess_edges: Vec<EdgeId>,
    pub is_symmetric: bool,
    pub is_trivial: bool,
}

/// Involutions acting on the plumbing-torus classes of the boundary.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TorusInvolution {
    RhoA,
    RhoB,
    Tau,
}

/// Signed permutation of the edge basis: e maps to sign[e] * basis[image[e]].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedPermutation {
    image: Vec<usize>,
    sign: Vec<i8>,
}

impl SignedPermutation {
    pub fn identity(len: usize) -> Self {
        SignedPermutation { image: (0..len).collect(), sign: vec![1; len] }
    }

    pub fn negated_identity(len: usize) -> Self {
        SignedPermutation { image: (0..len).collect(), sign: vec![-1; len] }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image_of(&self, e: usize) -> (usize, i8) {
        (self.image[e], self.sign[e])
    }

    /// Composition acting left to right: (self then other).
    pub fn then(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.len(), other.len());
        let mut image = vec![0; self.len()];
        let mut sign = vec![1i8; self.len()];
        for e in 0..self.len() {
            let (m, s) = self.image_of(e);
            let (m2, s2) = other.image_of(m);
            image[e] = m2;
            sign[e] = s * s2;
        }
        SignedPermutation { image, sign }
    }

    pub fn is_identity(&self) -> bool {
        self.sign.iter().all(|&s| s == 1) && self.image.iter().enumerate().all(|(i, &m)| i == m)
    }

    pub fn to_matrix(&self) -> IntMatrix {
        let n = self.len();
        let mut m = IntMatrix::zeros(n, n);
        for e in 0..n {
            let (img, s) = self.image_of(e);
            m.set(img, e, i64::from(s).into());
        }
        m
    }
}

impl ProtocorkGraph {
    /// Validates raw data. Collects every violated constraint rather than
    /// stopping at the first.
    pub fn new(n: usize, edges: &[(usize, usize, i64)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let bad: Vec<(usize, usize, i64)> = edges
            .iter()
            .copied()
            .filter(|&(a, b, s)| {
                a < 1 || a > n || b < 1 || b > n || Sign::from_value(s).is_none()
            })
            .collect();
        if !bad.is_empty() {
            return Err(GraphError::IndexOutOfRange { edges: bad });
        }
        let mut signed = BTreeMap::<(usize, usize), i64>::new();
        for &(a, b, s) in edges {
            *signed.entry((a, b)).or_insert(0) += s;
        }
        let mut violations = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                let expected = i64::from(i == j);
                let actual = signed.get(&(i, j)).copied().unwrap_or(0);
                if actual != expected {
                    violations.push(DeltaViolation { a: i, b: j, expected, actual });
                }
            }
        }
        if !violations.is_empty() {
            return Err(GraphError::DeltaConstraintViolated { violations });
        }
        let mut sorted: Vec<SignedEdge> = edges
            .iter()
            .map(|&(a, b, s)| SignedEdge::new(a, b, Sign::from_value(s).unwrap()))
            .collect();
        sorted.sort();
        Ok(ProtocorkGraph { n, edges: sorted })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[SignedEdge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, id: EdgeId) -> SignedEdge {
        self.edges[id]
    }

    /// Ordinal of the edge within its (a, b, sign) class.
    pub fn edge_ordinal(&self, id: EdgeId) -> usize {
        let e = self.edges[id];
        self.edges[..id].iter().filter(|&&f| f == e).count()
    }

    /// Number of edges between A_i and B_j regardless of sign.
    pub fn geometric_count(&self, i: usize, j: usize) -> usize {
        self.edges.iter().filter(|e| e.a == i && e.b == j).count()
    }

    /// Signed count of edges between A_i and B_j; always delta_ij here.
    pub fn algebraic_count(&self, i: usize, j: usize) -> i64 {
        self.edges
            .iter()
            .filter(|e| e.a == i && e.b == j)
            .map(|e| e.sign.value())
            .sum()
    }

    /// Swaps the two vertex parts: every edge (i, j, s) becomes (j, i, s).
    pub fn reflect(&self) -> ProtocorkGraph {
        let mut edges: Vec<SignedEdge> = self.edges.iter().map(|e| e.reflected()).collect();
        edges.sort();
        ProtocorkGraph { n: self.n, edges }
    }

    /// Relabels indices by a permutation given 0-based: index i+1 becomes
    /// perm[i]+1 on both parts simultaneously.
    pub fn permute(&self, perm: &[usize]) -> ProtocorkGraph {
        assert_eq!(perm.len(), self.n);
        let mut edges: Vec<SignedEdge> = self
            .edges
            .iter()
            .map(|e| SignedEdge::new(perm[e.a - 1] + 1, perm[e.b - 1] + 1, e.sign))
            .collect();
        edges.sort();
        ProtocorkGraph { n: self.n, edges }
    }

    /// Geometric adjacency is symmetric: r(i, j) == r(j, i) for all i, j.
    pub fn is_symmetric(&self) -> bool {
        (1..=self.n).all(|i| {
            (i + 1..=self.n).all(|j| self.geometric_count(i, j) == self.geometric_count(j, i))
        })
    }

    /// Involution pairing each (i, j, s) edge with a distinct (j, i, s) edge
    /// and fixing diagonal edges, or None when the graph is asymmetric.
    /// pairing[e] is the partner edge id; ordinals within a class match up.
    pub fn symmetry_pairing(&self) -> Option<Vec<EdgeId>> {
        if !self.is_symmetric() {
            return None;
        }
        let mut pairing = vec![0usize; self.edges.len()];
        let mut by_class = BTreeMap::<(usize, usize, Sign), Vec<EdgeId>>::new();
        for (id, e) in self.edges.iter().enumerate() {
            by_class.entry((e.a, e.b, e.sign)).or_default().push(id);
        }
        for (&(a, b, sign), ids) in &by_class {
            if a == b {
                for &id in ids {
                    pairing[id] = id;
                }
                continue;
            }
            let partners = &by_class[&(b, a, sign)];
            debug_assert_eq!(ids.len(), partners.len());
            for (&id, &pid) in ids.iter().zip(partners.iter()) {
                pairing[id] = pid;
            }
        }
        Some(pairing)
    }

    /// A graph is trivial when no diagonal slot carries more than one edge;
    /// the boundary involution then acts trivially on first cohomology.
    pub fn is_trivial(&self) -> bool {
        (1..=self.n).all(|i| self.geometric_count(i, i) == 1)
    }

    fn vertex_index(&self, part_a: bool, i: usize) -> usize {
        if part_a {
            i - 1
        } else {
            self.n + i - 1
        }
    }

    pub fn component_count(&self) -> usize {
        let mut dsu = Dsu::new(2 * self.n);
        for e in &self.edges {
            dsu.union(self.vertex_index(true, e.a), self.vertex_index(false, e.b));
        }
        dsu.component_count()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Deterministic spanning forest: per component, diagonal edges with
    /// lowest index enter first, then off-diagonal edges in (a, b)
    /// lexicographic order with plus signs preferred. Returns tree edge ids
    /// in ascending order.
    pub fn spanning_forest(&self) -> Vec<EdgeId> {
        let mut order: Vec<EdgeId> = (0..self.edges.len()).collect();
        order.sort_by_key(|&id| {
            let e = self.edges[id];
            (!e.is_diagonal(), e.a, e.b, e.sign, id)
        });
        let mut dsu = Dsu::new(2 * self.n);
        let mut tree = Vec::new();
        for id in order {
            let e = self.edges[id];
            if dsu.union(self.vertex_index(true, e.a), self.vertex_index(false, e.b)) {
                tree.push(id);
            }
        }
        tree.sort();
        tree
    }

    /// Edges outside the spanning forest, in ascending edge-id order. These
    /// generate the first homology of the boundary.
    pub fn excess_edges(&self) -> Vec<EdgeId> {
        let tree: BTreeSet<EdgeId> = self.spanning_forest().into_iter().collect();
        (0..self.edges.len()).filter(|id| !tree.contains(id)).collect()
    }

    pub fn stats(&self) -> GraphStats {
        let c = self.component_count();
        let excess = self.excess_edges();
        debug_assert_eq!(excess.len(), self.edges.len() + c - 2 * self.n);
        GraphStats {
            edge_count: self.edges.len(),
            component_count: c,
            b1_boundary: self.edges.len() + c - 2 * self.n,
            excess_edges: excess,
            is_symmetric: self.is_symmetric(),
            is_trivial: self.is_trivial(),
        }
    }

    fn serialize_edges(n: usize, edges: &[SignedEdge]) -> Vec<u8> {
        let mut out = Vec::with_capacity(2 + edges.len() * 5);
        out.extend_from_slice(&(n as u16).to_le_bytes());
        for e in edges {
            out.extend_from_slice(&(e.a as u16).to_le_bytes());
            out.extend_from_slice(&(e.b as u16).to_le_bytes());
            out.push(match e.sign {
                Sign::Plus => 0,
                Sign::Minus => 1,
            });
        }
        out
    }

    /// Canonical byte string: lexicographic minimum of the sorted edge
    /// serialization over all simultaneous index permutations.
    pub fn canonical_form(&self) -> Vec<u8> {
        let mut best: Option<Vec<u8>> = None;
        for perm in permutations(self.n) {
            let candidate = Self::serialize_edges(self.n, self.permute(&perm).edges());
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
        }
        best.unwrap()
    }

    pub fn canonical_hex(&self) -> String {
        let bytes = self.canonical_form();
        let mut s = String::with_capacity(bytes.len() * 2);
        for b in bytes {
            for nibble in [b >> 4, b & 0xf] {
                s.push(char::from_digit(u32::from(nibble), 16).unwrap());
            }
        }
        s
    }

    /// Isomorphism under simultaneous permutations of the A and B indices.
    /// Part-swapping maps are deliberately not isomorphisms; see reflect.
    pub fn is_isomorphic(&self, other: &ProtocorkGraph) -> bool {
        self.n == other.n && self.canonical_form() == other.canonical_form()
    }

    /// Signed permutation action of a boundary involution on the rank-|E|
    /// lattice spanned by the plumbing-torus classes. The orientation
    /// reversals negate every class; tau requires a symmetric graph and
    /// sends each class to minus the class of its paired edge.
    pub fn torus_action(&self, which: TorusInvolution) -> Result<SignedPermutation, ActionError> {
        match which {
            TorusInvolution::RhoA | TorusInvolution::RhoB => {
                Ok(SignedPermutation::negated_identity(self.edges.len()))
            }
            TorusInvolution::Tau => {
                let pairing = self.symmetry_pairing().ok_or(ActionError::NotSymmetric)?;
                Ok(SignedPermutation { image: pairing, sign: vec![-1; self.edges.len()] })
            }
        }
    }
}

/// All valid graphs on sphere-number n with at most max_edges edges, one
/// representative per isomorphism class, sorted by (edge count, canonical
/// form). A valid graph is determined by its geometric count matrix r:
/// diagonal entries odd and positive, off-diagonal entries even, with the
/// sign multiset of every slot forced. Errors out once more than cap
/// classes accumulate.
pub fn enumerate(
    n: usize,
    max_edges: usize,
    cap: usize,
) -> Result<Vec<ProtocorkGraph>, EnumerateError> {
    assert!(n >= 1, "enumerate requires n >= 1");
    let slots: Vec<(usize, usize)> =
        (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
    let mut seen = BTreeSet::<Vec<u8>>::new();
    let mut out: Vec<ProtocorkGraph> = Vec::new();
    let mut counts = vec![0usize; slots.len()];
    fill_slot(
        n,
        max_edges,
        cap,
        &slots,
        0,
        0,
        &mut counts,
        &mut seen,
        &mut out,
    )?;
    out.sort_by_key(|g| (g.edge_count(), ProtocorkGraph::serialize_edges(g.n, g.edges())));
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn fill_slot(
    n: usize,
    max_edges: usize,
    cap: usize,
    slots: &[(usize, usize)],
    slot: usize,
    used: usize,
    counts: &mut Vec<usize>,
    seen: &mut BTreeSet<Vec<u8>>,
    out: &mut Vec<ProtocorkGraph>,
) -> Result<(), EnumerateError> {
    if slot == slots.len() {
        let mut edges = Vec::with_capacity(used);
        for (idx, &(i, j)) in slots.iter().enumerate() {
            let r = counts[idx];
            let plus = if i == j { (r + 1) / 2 } else { r / 2 };
            for _ in 0..plus {
                edges.push((i, j, 1));
            }
            for _ in 0..r - plus {
                edges.push((i, j, -1));
            }
        }
        let g = ProtocorkGraph::new(n, &edges).expect("enumerated graph must validate");
        if seen.insert(g.canonical_form()) {
            if out.len() + 1 > cap {
                return Err(EnumerateError::BudgetExceeded { cap });
            }
            out.push(g);
        }
        return Ok(());
    }
    let (i, j) = slots[slot];
    let (start, step) = if i == j { (1, 2) } else { (0, 2) };
    let mut r = start;
    while used + r <= max_edges {
        counts[slot] = r;
        fill_slot(n, max_edges, cap, slots, slot + 1, used + r, counts, seen, out)?;
        r += step;
    }
    counts[slot] = 0;
    Ok(())
}

/// All permutations of 0..n in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    fn rec(n: usize, depth: usize, current: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if depth == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current[depth] = v;
                rec(n, depth + 1, current, used, out);
                used[v] = false;
            }
        }
    }
    rec(n, 0, &mut current, &mut used, &mut out);
    out
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when the merge joined two distinct components.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }

    fn component_count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn akbulut_graph() -> ProtocorkGraph {
        ProtocorkGraph::new(1, &[(1, 1, 1), (1, 1, 1), (1, 1, -1)]).unwrap()
    }

    #[test]
    fn single_edge_graph_is_valid_and_trivial() {
        let g = ProtocorkGraph::new(1, &[(1, 1, 1)]).unwrap();
        assert!(g.is_trivial());
        assert!(g.is_symmetric());
        assert_eq!(g.stats().b1_boundary, 0);
    }

    #[test]
    fn delta_violations_all_reported() {
        let err = ProtocorkGraph::new(2, &[(1, 1, 1), (2, 2, 1), (1, 2, 1)]).unwrap_err();
        match err {
            GraphError::DeltaConstraintViolated { violations } => {
                assert_eq!(
                    violations,
                    vec![DeltaViolation { a: 1, b: 2, expected: 0, actual: 1 }]
                );
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn lone_negative_diagonal_is_rejected() {
        let err = ProtocorkGraph::new(1, &[(1, 1, -1)]).unwrap_err();
        assert!(matches!(err, GraphError::DeltaConstraintViolated { .. }));
    }

    #[test]
    fn out_of_range_indices_are_rejected() {
        let err = ProtocorkGraph::new(1, &[(1, 2, 1)]).unwrap_err();
        assert_eq!(err, GraphError::IndexOutOfRange { edges: vec![(1, 2, 1)] });
    }

    #[test]
    fn n_zero_is_rejected() {
        assert_eq!(ProtocorkGraph::new(0, &[]).unwrap_err(), GraphError::EmptyGraph);
    }

    #[test]
    fn akbulut_graph_stats() {
        let g = akbulut_graph();
        let st = g.stats();
        assert_eq!(st.edge_count, 3);
        assert_eq!(st.component_count, 1);
        assert_eq!(st.b1_boundary, 2);
        assert_eq!(st.excess_edges.len(), 2);
        assert!(st.is_symmetric);
        assert!(!st.is_trivial);
    }

    #[test]
    fn disconnected_diag_graph_stats() {
        let g = ProtocorkGraph::new(2, &[(1, 1, 1), (2, 2, 1)]).unwrap();
        let st = g.stats();
        assert_eq!(st.component_count, 2);
        assert_eq!(st.b1_boundary, 0);
    }

    #[test]
    fn symmetry_of_six_edge_graph_with_off_diagonal_pairs() {
        let g = ProtocorkGraph::new(
            2,
            &[(1, 1, 1), (2, 2, 1), (1, 2, 1), (1, 2, -1), (2, 1, 1), (2, 1, -1)],
        )
        .unwrap();
        assert!(g.is_symmetric());
        let pairing = g.symmetry_pairing().unwrap();
        for (id, &pid) in pairing.iter().enumerate() {
            assert_eq!(pairing[pid], id, "pairing must be an involution");
            let (e, p) = (g.edge(id), g.edge(pid));
            assert_eq!((e.a, e.b, e.sign), (p.b, p.a, p.sign));
        }
    }

    #[test]
    fn off_diagonal_single_pair_is_asymmetric() {
        let g = ProtocorkGraph::new(2, &[(1, 1, 1), (2, 2, 1), (1, 2, 1), (1, 2, -1)]).unwrap();
        assert!(!g.is_symmetric());
        assert!(g.symmetry_pairing().is_none());
    }

    #[test]
    fn reflect_is_an_involution() {
        let g = ProtocorkGraph::new(2, &[(1, 1, 1), (2, 2, 1), (1, 2, 1), (1, 2, -1)]).unwrap();
        assert_eq!(g.reflect().reflect(), g);
    }

    #[test]
    fn symmetric_iff_equal_to_reflection() {
        let symmetric = akbulut_graph();
        assert_eq!(symmetric.reflect(), symmetric);
        let asymmetric =
            ProtocorkGraph::new(2, &[(1, 1, 1), (2, 2, 1), (1, 2, 1), (1, 2, -1)]).unwrap();
        assert_ne!(asymmetric.reflect(), asymmetric);
        // The reflection can still be isomorphic through a relabeling.
        assert!(asymmetric.is_isomorphic(&asymmetric.reflect()));
    }

    #[test]
    fn isomorphism_by_index_swap() {
        let g1 = ProtocorkGraph::new(2, &[(1, 1, 1), (2, 2, 1), (1, 2, 1), (1, 2, -1)]).unwrap();
        let g2 = ProtocorkGraph::new(2, &[(1, 1, 1), (2, 2, 1), (2, 1, 1), (2, 1, -1)]).unwrap();
        assert!(g1.is_isomorphic(&g2));
        assert_eq!(g1.canonical_form(), g2.canonical_form());
    }

    #[test]
    fn enumerate_small_cases() {
        assert_eq!(enumerate(1, 3, 1000).unwrap().len(), 2);
        assert_eq!(enumerate(1, 5, 1000).unwrap().len(), 3);
        let classes = enumerate(2, 4, 1000).unwrap();
        assert_eq!(classes.len(), 3);
        let by_edges: Vec<usize> = classes.iter().map(|g| g.edge_count()).collect();
        assert_eq!(by_edges, vec![2, 4, 4]);
    }

    #[test]
    fn enumerate_budget() {
        assert_eq!(
            enumerate(1, 5, 2).unwrap_err(),
            EnumerateError::BudgetExceeded { cap: 2 }
        );
    }

    #[test]
    fn spanning_forest_prefers_plus_diagonals() {
        let g = akbulut_graph();
        let tree = g.spanning_forest();
        assert_eq!(tree.len(), 1);
        assert_eq!(g.edge(tree[0]).sign, Sign::Plus);
        let excess = g.excess_edges();
        assert_eq!(excess.len(), 2);
        let signs: Vec<Sign> = excess.iter().map(|&id| g.edge(id).sign).collect();
        assert!(signs.contains(&Sign::Plus) && signs.contains(&Sign::Minus));
    }

    #[test]
    fn torus_action_rho_negates_everything() {
        let g = akbulut_graph();
        let rho = g.torus_action(TorusInvolution::RhoA).unwrap();
        assert_eq!(rho, SignedPermutation::negated_identity(3));
    }

    #[test]
    fn torus_action_tau_on_six_edge_graph() {
        let g = ProtocorkGraph::new(
            2,
            &[(1, 1, 1), (2, 2, 1), (1, 2, 1), (1, 2, -1), (2, 1, 1), (2, 1, -1)],
        )
        .unwrap();
        let tau = g.torus_action(TorusInvolution::Tau).unwrap();
        for (id, e) in g.edges().iter().enumerate() {
            let (img, s) = tau.image_of(id);
            assert_eq!(s, -1);
            let p = g.edge(img);
            assert_eq!((p.a, p.b, p.sign), (e.b, e.a, e.sign));
        }
        assert!(tau.then(&tau).is_identity());
    }

    #[test]
    fn torus_action_tau_needs_symmetry() {
        let g = ProtocorkGraph::new(2, &[(1, 1, 1), (2, 2, 1), (1, 2, 1), (1, 2, -1)]).unwrap();
        assert_eq!(g.torus_action(TorusInvolution::Tau), Err(ActionError::NotSymmetric));
    }

    #[test]
    fn dihedral_relations_hold() {
        let g = akbulut_graph();
        let rho_a = g.torus_action(TorusInvolution::RhoA).unwrap();
        let rho_b = g.torus_action(TorusInvolution::RhoB).unwrap();
        let tau = g.torus_action(TorusInvolution::Tau).unwrap();
        assert!(rho_a.then(&rho_a).is_identity());
        assert!(rho_b.then(&rho_b).is_identity());
        assert!(tau.then(&tau).is_identity());
        assert_eq!(rho_a.then(&rho_b), rho_b.then(&rho_a));
        assert_eq!(tau.then(&rho_b).then(&tau), rho_a);
    }
}
