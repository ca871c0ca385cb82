//! Kirby diagram synthesis.
//!
//! From a plumbing graph we build schematic Kirby diagrams of the three
//! stages of the plumbing 4-manifold: stage 1/2 has all 2n vertex knots
//! 0-framed, stage 0 dots the B-part, stage 1 dots the A-part. Every edge
//! becomes a clasp of its sign; edges outside the canonical spanning forest
//! additionally carry a dotted circle meridional to their clasp, and the
//! clasp threads that circle. Diagrams are combinatorial: they record
//! components, clasps, and threading, not a planar embedding.

use crate::graph::{EdgeId, ProtocorkGraph, Sign};
use crate::matrix::IntMatrix;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Stage {
    Zero,
    Half,
    One,
}

impl Stage {
    pub const ALL: [Stage; 3] = [Stage::Zero, Stage::Half, Stage::One];

    pub fn label(self) -> &'static str {
        match self {
            Stage::Zero => "0",
            Stage::Half => "1/2",
            Stage::One => "1",
        }
    }

    pub fn from_name(name: &str) -> Option<Stage> {
        match name {
            "0" => Some(Stage::Zero),
            "1/2" | "half" | "0.5" => Some(Stage::Half),
            "1" => Some(Stage::One),
            _ => None,
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// What a diagram component or a cobordism handle came from.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Origin {
    VertexA(usize),
    VertexB(usize),
    Excess(EdgeId),
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::VertexA(i) => write!(f, "A{}", i),
            Origin::VertexB(j) => write!(f, "B{}", j),
            Origin::Excess(e) => write!(f, "excess:{}", e),
        }
    }
}

/// All framed knots here are 0-framed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ComponentKind {
    Framed0,
    Dotted,
}

pub type ComponentId = usize;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DiagramComponent {
    pub id: ComponentId,
    pub kind: ComponentKind,
    pub origin: Origin,
}

/// A clasp between the knot of the edge's A-vertex component and the knot
/// of its B-vertex component. An excess edge's clasp threads exactly the
/// dotted circle meridional to itself.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Clasp {
    pub edge: EdgeId,
    pub sign: Sign,
    pub a_component: ComponentId,
    pub b_component: ComponentId,
    pub threads: Vec<ComponentId>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KirbyDiagram {
    pub stage: Stage,
    pub n: usize,
    /// Ordered A_1..A_n, B_1..B_n, then excess meridians by edge id.
    pub components: Vec<DiagramComponent>,
    /// One clasp per edge, in edge-id order.
    pub clasps: Vec<Clasp>,
    /// Spanning forest edge ids, ascending.
    pub forest: Vec<EdgeId>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DiagramCounts {
    pub framed: usize,
    pub dotted: usize,
    pub clasps: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RenderFormat {
    Text,
    Svg,
}

impl RenderFormat {
    pub fn from_name(name: &str) -> Option<RenderFormat> {
        match name {
            "text" => Some(RenderFormat::Text),
            "svg" => Some(RenderFormat::Svg),
            _ => None,
        }
    }
}

/// Surgery description of the boundary 3-manifold: every component becomes
/// a 0-framed surgery curve. Vertex meridians link by the signed adjacency,
/// which is the identity block; all other linking numbers vanish.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurgeryPresentation {
    pub linking: IntMatrix,
    pub framings: Vec<i64>,
}

impl KirbyDiagram {
    pub fn component(&self, id: ComponentId) -> DiagramComponent {
        self.components[id]
    }

    pub fn framed_ids(&self) -> Vec<ComponentId> {
        self.components
            .iter()
            .filter(|c| c.kind == ComponentKind::Framed0)
            .map(|c| c.id)
            .collect()
    }

    pub fn dotted_ids(&self) -> Vec<ComponentId> {
        self.components
            .iter()
            .filter(|c| c.kind == ComponentKind::Dotted)
            .map(|c| c.id)
            .collect()
    }

    pub fn excess_edge_ids(&self) -> Vec<EdgeId> {
        self.components
            .iter()
            .filter_map(|c| match c.origin {
                Origin::Excess(e) => Some(e),
                _ => None,
            })
            .collect()
    }
}

fn vertex_kind(stage: Stage, part_a: bool) -> ComponentKind {
    match (stage, part_a) {
        (Stage::Half, _) => ComponentKind::Framed0,
        (Stage::Zero, true) | (Stage::One, false) => ComponentKind::Framed0,
        (Stage::Zero, false) | (Stage::One, true) => ComponentKind::Dotted,
    }
}

pub fn build_diagram(g: &ProtocorkGraph, stage: Stage) -> KirbyDiagram {
    let n = g.n();
    let forest = g.spanning_forest();
    let excess = g.excess_edges();
    let mut components = Vec::with_capacity(2 * n + excess.len());
    for i in 1..=n {
        components.push(DiagramComponent {
            id: components.len(),
            kind: vertex_kind(stage, true),
            origin: Origin::VertexA(i),
        });
    }
    for j in 1..=n {
        components.push(DiagramComponent {
            id: components.len(),
            kind: vertex_kind(stage, false),
            origin: Origin::VertexB(j),
        });
    }
    let mut meridian_of = BTreeMap::<EdgeId, ComponentId>::new();
    for &e in &excess {
        let id = components.len();
        components.push(DiagramComponent { id, kind: ComponentKind::Dotted, origin: Origin::Excess(e) });
        meridian_of.insert(e, id);
    }
    let clasps = (0..g.edge_count())
        .map(|id| {
            let e = g.edge(id);
            Clasp {
                edge: id,
                sign: e.sign,
                a_component: e.a - 1,
                b_component: n + e.b - 1,
                threads: meridian_of.get(&id).copied().into_iter().collect(),
            }
        })
        .collect();
    KirbyDiagram { stage, n, components, clasps, forest }
}

pub fn diagram_counts(d: &KirbyDiagram) -> DiagramCounts {
    DiagramCounts {
        framed: d.framed_ids().len(),
        dotted: d.dotted_ids().len(),
        clasps: d.clasps.len(),
    }
}

/// Boundary map of the handle chain complex of the diagram's 4-manifold:
/// rows are dotted components (1-handles), columns framed knots (2-handles),
/// entries the linking number of the knot with the dotted circle. Vertex to
/// vertex linking is the signed clasp count. A framed vertex knot links an
/// excess meridian it threads by the edge sign at stages 0 and 1; at stage
/// 1/2 the two framed strands through each meridian cancel.
pub fn chain_boundary_map(d: &KirbyDiagram) -> IntMatrix {
    let dotted = d.dotted_ids();
    let framed = d.framed_ids();
    IntMatrix::from_fn(dotted.len(), framed.len(), |r, c| {
        linking_entry(d, d.component(dotted[r]).origin, d.component(framed[c]).origin)
    })
}

/// Linking matrix of the framed knots with each other, 0 framings on the
/// diagonal. This is the intersection data for 2-handle classes.
pub fn framed_linking(d: &KirbyDiagram) -> IntMatrix {
    let framed = d.framed_ids();
    IntMatrix::from_fn(framed.len(), framed.len(), |r, c| {
        if r == c {
            0
        } else {
            linking_entry(d, d.component(framed[r]).origin, d.component(framed[c]).origin)
        }
    })
}

fn linking_entry(d: &KirbyDiagram, x: Origin, y: Origin) -> i64 {
    match (x, y) {
        (Origin::VertexA(i), Origin::VertexB(j)) | (Origin::VertexB(j), Origin::VertexA(i)) => d
            .clasps
            .iter()
            .filter(|c| c.a_component == i - 1 && c.b_component == d.n + j - 1)
            .map(|c| c.sign.value())
            .sum(),
        (Origin::VertexA(i), Origin::Excess(e)) | (Origin::Excess(e), Origin::VertexA(i)) => {
            let c = &d.clasps[e];
            let threads = c.a_component == i - 1 && !c.threads.is_empty();
            if threads && d.stage == Stage::Zero {
                c.sign.value()
            } else {
                0
            }
        }
        (Origin::VertexB(j), Origin::Excess(e)) | (Origin::Excess(e), Origin::VertexB(j)) => {
            let c = &d.clasps[e];
            let threads = c.b_component == d.n + j - 1 && !c.threads.is_empty();
            if threads && d.stage == Stage::One {
                c.sign.value()
            } else {
                0
            }
        }
        _ => 0,
    }
}

/// Every component becomes a 0-framed surgery curve for the boundary;
/// rows and columns follow the component order. The only nonzero linking
/// numbers are the delta pairings of A- with B-vertex meridians.
pub fn surgery_presentation(d: &KirbyDiagram) -> SurgeryPresentation {
    let m = d.components.len();
    let linking = IntMatrix::from_fn(m, m, |r, c| {
        match (d.component(r).origin, d.component(c).origin) {
            (Origin::VertexA(i), Origin::VertexB(j)) | (Origin::VertexB(j), Origin::VertexA(i)) => {
                linking_entry(d, Origin::VertexA(i), Origin::VertexB(j))
            }
            _ => 0,
        }
    });
    SurgeryPresentation { linking, framings: alloc::vec![0; m] }
}

pub fn render(d: &KirbyDiagram, format: RenderFormat) -> Vec<u8> {
    match format {
        RenderFormat::Text => render_text(d).into_bytes(),
        RenderFormat::Svg => render_svg(d).into_bytes(),
    }
}

fn kind_label(kind: ComponentKind) -> &'static str {
    match kind {
        ComponentKind::Framed0 => "framed0",
        ComponentKind::Dotted => "dotted",
    }
}

/// One line per component, then one line per clasp, fixed field order.
fn render_text(d: &KirbyDiagram) -> String {
    let counts = diagram_counts(d);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "diagram stage={} n={} framed={} dotted={} clasps={}",
        d.stage, d.n, counts.framed, counts.dotted, counts.clasps
    );
    for c in &d.components {
        let _ = writeln!(out, "component {} {} origin={}", c.id, kind_label(c.kind), c.origin);
    }
    for c in &d.clasps {
        let mut threads = String::new();
        for (k, t) in c.threads.iter().enumerate() {
            if k > 0 {
                threads.push(',');
            }
            let _ = write!(threads, "{}", t);
        }
        let _ = writeln!(
            out,
            "clasp edge={} sign={} a={} b={} threads={}",
            c.edge,
            c.sign.glyph(),
            c.a_component,
            c.b_component,
            threads
        );
    }
    out
}

const COL_A_X: i64 = 70;
const COL_B_X: i64 = 270;
const ROW_Y0: i64 = 50;
const ROW_PITCH: i64 = 90;
const VERTEX_R: i64 = 18;

fn vertex_center(origin: Origin) -> (i64, i64) {
    match origin {
        Origin::VertexA(i) => (COL_A_X, ROW_Y0 + ROW_PITCH * (i as i64 - 1)),
        Origin::VertexB(j) => (COL_B_X, ROW_Y0 + ROW_PITCH * (j as i64 - 1)),
        Origin::Excess(_) => unreachable!("excess circles sit on clasp arcs"),
    }
}

/// Schematic layout: A-vertex knots in a left column, B-vertex knots in a
/// right column, one bezier arc per clasp fanned out by its ordinal among
/// parallel clasps, excess meridians as small circles at arc midpoints.
/// Coordinates are integers so output bytes are stable.
fn render_svg(d: &KirbyDiagram) -> String {
    let n = d.n as i64;
    let width = COL_B_X + 90;
    let max_fan: i64 = d
        .clasps
        .iter()
        .map(|c| parallel_ordinal(d, c).1 as i64)
        .max()
        .unwrap_or(1);
    let height = ROW_Y0 + ROW_PITCH * (n - 1) + VERTEX_R + 24 * max_fan + 40;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
        w = width,
        h = height
    );
    let _ = writeln!(
        s,
        "  <title>stage {} diagram, n={}, {} clasps</title>",
        d.stage,
        d.n,
        d.clasps.len()
    );
    for c in &d.clasps {
        let (xa, ya) = vertex_center(d.component(c.a_component).origin);
        let (xb, yb) = vertex_center(d.component(c.b_component).origin);
        let (ord, count) = parallel_ordinal(d, c);
        let fan = 2 * ord as i64 - (count as i64 - 1);
        let mid_y = (ya + yb) / 2;
        let cy = mid_y + 12 * fan;
        let (sx, ex) = (xa + VERTEX_R, xb - VERTEX_R);
        let cx = (sx + ex) / 2;
        let _ = writeln!(
            s,
            "  <path d=\"M {sx} {ya} Q {cx} {cy} {ex} {yb}\" fill=\"none\" stroke=\"black\"/>",
        );
        let lx = (sx + 2 * cx + ex) / 4;
        let ly = (ya + 2 * cy + yb) / 4;
        let _ = writeln!(
            s,
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{}</text>",
            lx,
            ly - 12,
            c.sign.glyph()
        );
        for &t in &c.threads {
            let _ = writeln!(
                s,
                "  <circle cx=\"{lx}\" cy=\"{ly}\" r=\"8\" fill=\"none\" stroke=\"black\"/>",
            );
            let _ = writeln!(s, "  <circle cx=\"{}\" cy=\"{}\" r=\"2\"/>", lx, ly - 8);
            let _ = writeln!(
                s,
                "  <text x=\"{}\" y=\"{}\" font-size=\"10\">{}</text>",
                lx + 10,
                ly + 4,
                d.component(t).origin
            );
        }
    }
    for c in &d.components {
        if matches!(c.origin, Origin::Excess(_)) {
            continue;
        }
        let (x, y) = vertex_center(c.origin);
        let _ = writeln!(
            s,
            "  <circle cx=\"{x}\" cy=\"{y}\" r=\"{VERTEX_R}\" fill=\"none\" stroke=\"black\"/>",
        );
        if c.kind == ComponentKind::Dotted {
            let _ = writeln!(s, "  <circle cx=\"{}\" cy=\"{}\" r=\"2\"/>", x, y - VERTEX_R);
        } else {
            let _ = writeln!(
                s,
                "  <text x=\"{}\" y=\"{}\" font-size=\"10\">0</text>",
                x + VERTEX_R + 4,
                y - VERTEX_R
            );
        }
        let anchor_x = if matches!(c.origin, Origin::VertexA(_)) { x - VERTEX_R - 34 } else { x + VERTEX_R + 22 };
        let _ = writeln!(
            s,
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\">{}</text>",
            anchor_x,
            y + 4,
            c.origin
        );
    }
    s.push_str("</svg>\n");
    s
}

/// Position of a clasp among the clasps sharing its vertex pair, and the
/// size of that pack.
fn parallel_ordinal(d: &KirbyDiagram, clasp: &Clasp) -> (usize, usize) {
    let same: Vec<&Clasp> = d
        .clasps
        .iter()
        .filter(|c| c.a_component == clasp.a_component && c.b_component == clasp.b_component)
        .collect();
    let ord = same.iter().position(|c| c.edge == clasp.edge).unwrap();
    (ord, same.len())
}

/// Diagrams agree as plumbing descriptions after exchanging the two vertex
/// parts: equal counts per kind, matching clasp sign multisets per
/// unordered vertex pair, and excess circles on matching pair multisets.
/// Spanning forests need not correspond, so this is weaker than equality.
pub fn mirror_equivalent(d0: &KirbyDiagram, d1: &KirbyDiagram) -> bool {
    if d0.n != d1.n || diagram_counts(d0) != diagram_counts(d1) {
        return false;
    }
    fn slot(d: &KirbyDiagram, c: &Clasp) -> (usize, usize) {
        let (Origin::VertexA(i), Origin::VertexB(j)) =
            (d.component(c.a_component).origin, d.component(c.b_component).origin)
        else {
            unreachable!("clasp endpoints are vertex components")
        };
        (i.min(j), i.max(j))
    }
    fn clasp_profile(d: &KirbyDiagram) -> BTreeMap<(usize, usize, Sign, bool), usize> {
        let mut m = BTreeMap::new();
        for c in &d.clasps {
            let (lo, hi) = slot(d, c);
            *m.entry((lo, hi, c.sign, !c.threads.is_empty())).or_insert(0) += 1;
        }
        m
    }
    fn kind_of(d: &KirbyDiagram, part_a: bool) -> Vec<ComponentKind> {
        d.components
            .iter()
            .filter(|c| match c.origin {
                Origin::VertexA(_) => part_a,
                Origin::VertexB(_) => !part_a,
                Origin::Excess(_) => false,
            })
            .map(|c| c.kind)
            .collect()
    }
    clasp_profile(d0) == clasp_profile(d1)
        && kind_of(d0, true) == kind_of(d1, false)
        && kind_of(d0, false) == kind_of(d1, true)
}
