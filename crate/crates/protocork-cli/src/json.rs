//! Report envelope and JSON mirrors of the core types. Every numeric
//! field is exact: integers stay integers, rationals become "p/q" strings,
//! big torsion coefficients become decimal strings.

use protocork_core::cobordism::{Boundary, CancellationReport, Cobordism, HandleRef};
use protocork_core::floer::{FloerPackage, Rational};
use protocork_core::graph::ProtocorkGraph;
use protocork_core::homology::HomologyProfile;
use protocork_core::kirby::{ComponentKind, KirbyDiagram};
use protocork_core::matrix::AbelianGroup;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const SCHEMA: &str = "protocork-report/1";

#[derive(Serialize)]
pub struct Report<T: Serialize> {
    pub schema: &'static str,
    pub version: &'static str,
    pub input_digest: String,
    pub command: String,
    pub results: T,
    pub timing_ms: Option<u128>,
}

impl<T: Serialize> Report<T> {
    pub fn new(input_digest: String, command: &str, results: T) -> Self {
        Report {
            schema: SCHEMA,
            version: env!("CARGO_PKG_VERSION"),
            input_digest,
            command: command.to_string(),
            results,
            timing_ms: None,
        }
    }

    pub fn print(&self) {
        let body = serde_json::to_string_pretty(self).expect("report serializes");
        println!("{body}");
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    let mut out = String::with_capacity(64);
    for b in digest {
        use core::fmt::Write;
        let _ = write!(out, "{b:02x}");
    }
    out
}

pub fn rational_string(r: Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((num, den)) => {
            let den: i64 = den.trim().parse().ok()?;
            if den == 0 {
                return None;
            }
            Some(Rational::new(num.trim().parse().ok()?, den))
        }
        None => Some(Rational::from_integer(s.trim().parse().ok()?)),
    }
}

/// On-disk graph format: {"n": 1, "edges": [[1, 1, 1], [1, 1, -1]]}.
#[derive(Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<(usize, usize, i64)>,
}

impl GraphFile {
    pub fn of(g: &ProtocorkGraph) -> GraphFile {
        GraphFile {
            n: g.n(),
            edges: g.edges().iter().map(|e| (e.a, e.b, e.sign.value())).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct GroupJson {
    pub free_rank: usize,
    pub torsion: Vec<String>,
    pub pretty: String,
}

impl GroupJson {
    pub fn of(g: &AbelianGroup) -> GroupJson {
        GroupJson {
            free_rank: g.free_rank,
            torsion: g.torsion.iter().map(|t| t.to_string()).collect(),
            pretty: g.describe(),
        }
    }
}

#[derive(Serialize)]
pub struct ProfileJson {
    pub h0: GroupJson,
    pub h1: GroupJson,
    pub h2: GroupJson,
    pub h3: GroupJson,
    pub b_plus: usize,
    pub b_minus: usize,
}

impl ProfileJson {
    pub fn of(p: &HomologyProfile) -> ProfileJson {
        ProfileJson {
            h0: GroupJson::of(&p.h0),
            h1: GroupJson::of(&p.h1),
            h2: GroupJson::of(&p.h2),
            h3: GroupJson::of(&p.h3),
            b_plus: p.b_plus,
            b_minus: p.b_minus,
        }
    }
}

#[derive(Serialize)]
pub struct ComponentJson {
    pub id: usize,
    pub kind: &'static str,
    pub origin: String,
}

#[derive(Serialize)]
pub struct ClaspJson {
    pub edge: usize,
    pub sign: i64,
    pub a_component: usize,
    pub b_component: usize,
    pub threads: Vec<usize>,
}

#[derive(Serialize)]
pub struct DiagramJson {
    pub stage: String,
    pub n: usize,
    pub components: Vec<ComponentJson>,
    pub clasps: Vec<ClaspJson>,
    pub forest: Vec<usize>,
}

impl DiagramJson {
    pub fn of(d: &KirbyDiagram) -> DiagramJson {
        DiagramJson {
            stage: d.stage.label().to_string(),
            n: d.n,
            components: d
                .components
                .iter()
                .map(|c| ComponentJson {
                    id: c.id,
                    kind: match c.kind {
                        ComponentKind::Framed0 => "framed0",
                        ComponentKind::Dotted => "dotted",
                    },
                    origin: c.origin.to_string(),
                })
                .collect(),
            clasps: d
                .clasps
                .iter()
                .map(|c| ClaspJson {
                    edge: c.edge,
                    sign: c.sign.value(),
                    a_component: c.a_component,
                    b_component: c.b_component,
                    threads: c.threads.clone(),
                })
                .collect(),
            forest: d.forest.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct TowerJson {
    pub k: u32,
    pub mult: u64,
    pub top_gr: Option<String>,
}

#[derive(Serialize, Deserialize)]
pub struct ReducedSummandJson {
    pub gr: String,
    pub order: u32,
}

#[derive(Serialize)]
pub struct PackageJson {
    pub flavor: String,
    pub b1: u32,
    pub towers: Vec<TowerJson>,
    pub reduced: Vec<ReducedSummandJson>,
}

impl PackageJson {
    pub fn of(p: &FloerPackage) -> PackageJson {
        PackageJson {
            flavor: p.flavor.label().to_string(),
            b1: p.b1,
            towers: p
                .standard
                .iter()
                .map(|t| TowerJson {
                    k: t.wedge_degree,
                    mult: t.multiplicity,
                    top_gr: t.top_grading.map(rational_string),
                })
                .collect(),
            reduced: p
                .reduced
                .summands()
                .iter()
                .map(|s| ReducedSummandJson { gr: rational_string(s.grading), order: s.order })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct HandleRefJson {
    pub position: usize,
    pub index: u8,
    pub label: String,
}

impl HandleRefJson {
    pub fn of(h: &HandleRef) -> HandleRefJson {
        HandleRefJson { position: h.position, index: h.index, label: h.label.to_string() }
    }
}

#[derive(Serialize)]
pub struct CancellationJson {
    pub trivial: bool,
    pub trace: Vec<(HandleRefJson, HandleRefJson)>,
    pub survivors: Vec<HandleRefJson>,
}

impl CancellationJson {
    pub fn of(r: &CancellationReport) -> CancellationJson {
        CancellationJson {
            trivial: r.trivial,
            trace: r
                .trace
                .iter()
                .map(|(lo, up)| (HandleRefJson::of(lo), HandleRefJson::of(up)))
                .collect(),
            survivors: r.survivors.iter().map(HandleRefJson::of).collect(),
        }
    }
}

pub fn boundary_string(b: &Boundary) -> String {
    match b {
        Boundary::S3 => "S3".to_string(),
        Boundary::ConnSumS1S2 { b1, .. } => format!("#{b1}(S1xS2)"),
        Boundary::Protocork { canonical_hex, .. } => format!("protocork:{canonical_hex}"),
    }
}

#[derive(Serialize)]
pub struct CobordismJson {
    pub source: String,
    pub target: String,
    pub handles_by_index: Vec<(u8, usize)>,
    pub euler_characteristic: i64,
}

impl CobordismJson {
    pub fn of(c: &Cobordism) -> CobordismJson {
        let mut by_index = Vec::new();
        for index in 0..=4u8 {
            let count = c.handle_count(index);
            if count > 0 {
                by_index.push((index, count));
            }
        }
        CobordismJson {
            source: boundary_string(&c.source),
            target: boundary_string(&c.target),
            handles_by_index: by_index,
            euler_characteristic: c.euler_characteristic(),
        }
    }
}
