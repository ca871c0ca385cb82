//! Graded module bookkeeping for the monopole Floer splitting.
//!
//! The boundary of a protocork has the Floer homology of a connected sum
//! of S1 x S2 factors plus a finite U-torsion part. This module models the
//! standard tower packages, the split packages, the exactness shape of the
//! long exact sequence, torsion orders, the grading and dimension
//! formulas, and the Morgan-Szabo number. Everything is exact arithmetic
//! on explicit summands; no Floer differential is ever computed.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use num_rational::Ratio;

pub type Rational = Ratio<i64>;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Flavor {
    Hat,
    Check,
    Bar,
}

impl Flavor {
    pub fn from_name(name: &str) -> Option<Flavor> {
        match name {
            "hat" => Some(Flavor::Hat),
            "check" => Some(Flavor::Check),
            "bar" => Some(Flavor::Bar),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Flavor::Hat => "hat",
            Flavor::Check => "check",
            Flavor::Bar => "bar",
        }
    }
}

/// Coefficient ring of a tower: polynomial for the hat flavor, the
/// U-divisible quotient for check, Laurent series for bar.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TowerKind {
    FromTower,
    ToTower,
    BarTower,
}

impl TowerKind {
    pub fn for_flavor(flavor: Flavor) -> TowerKind {
        match flavor {
            Flavor::Hat => TowerKind::FromTower,
            Flavor::Check => TowerKind::ToTower,
            Flavor::Bar => TowerKind::BarTower,
        }
    }
}

/// Towers coming from the degree-k part of the exterior algebra on b1
/// circle classes; the hat flavor carries the absolute grading of the
/// tower top.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TowerSummand {
    pub kind: TowerKind,
    pub wedge_degree: u32,
    pub top_grading: Option<Rational>,
    pub multiplicity: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CyclicSummand {
    pub grading: Rational,
    /// Smallest d with U^d annihilating the generator; at least 1.
    pub order: u32,
}

/// Direct sum of cyclic U-torsion modules with free abelian underlying
/// groups.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FiniteUModule {
    summands: Vec<CyclicSummand>,
}

impl FiniteUModule {
    pub fn empty() -> Self {
        FiniteUModule { summands: Vec::new() }
    }

    pub fn new(summands: Vec<CyclicSummand>) -> Self {
        assert!(summands.iter().all(|s| s.order >= 1), "torsion orders must be positive");
        FiniteUModule { summands }
    }

    pub fn summands(&self) -> &[CyclicSummand] {
        &self.summands
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FloerPackage {
    pub flavor: Flavor,
    pub b1: u32,
    pub standard: Vec<TowerSummand>,
    pub reduced: FiniteUModule,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FloerError {
    BarHasReduced,
    MismatchedShapes,
    InconsistentGradings,
    NoIrreducibles,
}

impl fmt::Display for FloerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FloerError::BarHasReduced => write!(f, "bar flavor carries no reduced part"),
            FloerError::MismatchedShapes => {
                write!(f, "packages disagree in b1, flavor, or reduced parts")
            }
            FloerError::InconsistentGradings => {
                write!(f, "relative gradings are inconsistent with the base point")
            }
            FloerError::NoIrreducibles => write!(f, "at least one irreducible is required"),
        }
    }
}

pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..u64::from(k) {
        acc = acc * (u64::from(n) - i) / (i + 1);
    }
    acc
}

/// Floer package of the connected sum of b1 copies of S1 x S2: one tower
/// summand per exterior degree with binomial multiplicity. The hat tower
/// of degree k tops out at grading (k - 1) - b1.
pub fn standard_package(b1: u32, flavor: Flavor) -> FloerPackage {
    let standard = (0..=b1)
        .map(|k| TowerSummand {
            kind: TowerKind::for_flavor(flavor),
            wedge_degree: k,
            top_grading: (flavor == Flavor::Hat)
                .then(|| Rational::from_integer(i64::from(k) - 1 - i64::from(b1))),
            multiplicity: binomial(b1, k),
        })
        .collect();
    FloerPackage { flavor, b1, standard, reduced: FiniteUModule::empty() }
}

/// Splitting shape: the standard package plus the reduced part carried
/// verbatim. The bar flavor admits no reduced part.
pub fn split_package(
    b1: u32,
    flavor: Flavor,
    reduced: FiniteUModule,
) -> Result<FloerPackage, FloerError> {
    if flavor == Flavor::Bar && !reduced.is_empty() {
        return Err(FloerError::BarHasReduced);
    }
    let mut package = standard_package(b1, flavor);
    package.reduced = reduced;
    Ok(package)
}

/// Summand-level image/kernel flags for the maps of the long exact
/// sequence at the hat position: which hat summands j hits and which p
/// kills.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SequenceMaps {
    pub j_image_standard: Vec<bool>,
    pub j_image_reduced: Vec<bool>,
    pub p_kernel_standard: Vec<bool>,
    pub p_kernel_reduced: Vec<bool>,
}

impl SequenceMaps {
    /// The split model: j vanishes on the standard part and is the
    /// identity on the reduced part; p embeds the standard part and
    /// vanishes on the reduced part.
    pub fn standard_model(hat: &FloerPackage) -> SequenceMaps {
        SequenceMaps {
            j_image_standard: alloc::vec![false; hat.standard.len()],
            j_image_reduced: alloc::vec![true; hat.reduced.len()],
            p_kernel_standard: alloc::vec![false; hat.standard.len()],
            p_kernel_reduced: alloc::vec![true; hat.reduced.len()],
        }
    }
}

pub fn exact_sequence_check(
    check: &FloerPackage,
    hat: &FloerPackage,
    bar: &FloerPackage,
) -> Result<bool, FloerError> {
    exact_sequence_check_with(check, hat, bar, &SequenceMaps::standard_model(hat))
}

/// Verifies image(j) = kernel(p) summand-wise at the hat position of the
/// sequence. The separate-maps variant exists so corrupted maps can be
/// checked to fail.
pub fn exact_sequence_check_with(
    check: &FloerPackage,
    hat: &FloerPackage,
    bar: &FloerPackage,
    maps: &SequenceMaps,
) -> Result<bool, FloerError> {
    let shapes_ok = check.flavor == Flavor::Check
        && hat.flavor == Flavor::Hat
        && bar.flavor == Flavor::Bar
        && check.b1 == hat.b1
        && hat.b1 == bar.b1
        && check.reduced == hat.reduced
        && bar.reduced.is_empty();
    if !shapes_ok {
        return Err(FloerError::MismatchedShapes);
    }
    if maps.j_image_standard.len() != hat.standard.len()
        || maps.p_kernel_standard.len() != hat.standard.len()
        || maps.j_image_reduced.len() != hat.reduced.len()
        || maps.p_kernel_reduced.len() != hat.reduced.len()
    {
        return Err(FloerError::MismatchedShapes);
    }
    Ok(maps.j_image_standard == maps.p_kernel_standard
        && maps.j_image_reduced == maps.p_kernel_reduced)
}

/// Sparse element of a FiniteUModule: (summand index, U-power offset,
/// integer coefficient) terms.
pub type ReducedElement = [(usize, u32, i64)];

fn combined_terms(m: &FiniteUModule, element: &ReducedElement) -> BTreeMap<(usize, u32), i64> {
    let mut terms = BTreeMap::new();
    for &(summand, power, coeff) in element {
        assert!(summand < m.len(), "element refers to a missing summand");
        *terms.entry((summand, power)).or_insert(0) += coeff;
    }
    terms.retain(|_, v| *v != 0);
    terms
}

/// Smallest d with U^d annihilating the element; 0 exactly for the zero
/// element. A term at U-power p of an order-d summand dies after d - p
/// more multiplications.
pub fn torsion_order(m: &FiniteUModule, element: &ReducedElement) -> u32 {
    combined_terms(m, element)
        .keys()
        .map(|&(summand, power)| m.summands()[summand].order.saturating_sub(power))
        .max()
        .unwrap_or(0)
}

/// Multiplies an element by U^a.
pub fn u_shift(element: &ReducedElement, a: u32) -> Vec<(usize, u32, i64)> {
    element.iter().map(|&(s, p, c)| (s, p + a, c)).collect()
}

/// Degree of the Floer map induced by a spin-c cobordism between
/// connected sums: (c1^2 - 2*chi - 3*sigma)/4 - (b1_out - b1_in)/2.
pub fn cobordism_map_degree(
    c1_sq: i64,
    chi: i64,
    sigma: i64,
    b1_in: i64,
    b1_out: i64,
) -> Rational {
    Rational::new(c1_sq - 2 * chi - 3 * sigma, 4) - Rational::new(b1_out - b1_in, 2)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MsGate {
    pub d: Rational,
    pub passes: bool,
}

/// Arithmetic gate for equality of Seiberg-Witten invariants under a cork
/// twist: the spin-c dimension d = (c1^2 - 2*chi - 3*sigma)/4 of the
/// ambient piece must be at least twice the torsion order of the
/// difference element.
pub fn ms_gate(c1_sq: i64, chi: i64, sigma: i64, d_delta: u32) -> MsGate {
    let d = Rational::new(c1_sq - 2 * chi - 3 * sigma, 4);
    MsGate { d, passes: d >= Rational::from_integer(2 * i64::from(d_delta)) }
}

/// Expected dimension of the moduli space from the reducible of Morse
/// index index_f on the i-th tower level.
pub fn formal_dimension(b1: u32, index_f: u32, i: i64) -> i64 {
    assert!(index_f <= b1, "morse index ranges over 0..=b1");
    let base = i64::from(b1) - i64::from(index_f) - 2 * i;
    if i >= 0 {
        base - 1
    } else {
        base - 2
    }
}

/// Relative grading between reducible tower levels.
pub fn bar_gr(index_f_a: u32, i: i64, index_f_b: u32, j: i64) -> i64 {
    i64::from(index_f_a) - i64::from(index_f_b) + 2 * (i - j)
}

/// The formal dimension decomposes against the top reducible: it equals
/// -1 + bar_gr(b1, 0, index_f, i) minus 1 more on negative levels.
pub fn dimension_additivity_check(b1: u32, index_f: u32, i: i64) -> bool {
    let epsilon = i64::from(i < 0);
    formal_dimension(b1, index_f, i) == -1 + bar_gr(b1, 0, index_f, i) - epsilon
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Reducible {
    pub morse_index: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Irreducible {
    pub id: usize,
    /// Grading relative to the first irreducible in the list.
    pub relative_grading: i64,
}

/// Critical point bookkeeping of a perturbed Chern-Simons-Dirac functional
/// with a unique top reducible.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CriticalPointData {
    pub reducibles: Vec<Reducible>,
    pub irreducibles: Vec<Irreducible>,
}

impl CriticalPointData {
    pub fn validate(&self, b1: u32) -> Result<(), FloerError> {
        let top = self.reducibles.iter().filter(|r| r.morse_index == b1).count();
        let in_range = self.reducibles.iter().all(|r| r.morse_index <= b1);
        if top != 1 || !in_range {
            return Err(FloerError::InconsistentGradings);
        }
        Ok(())
    }
}

/// 2 plus the maximum relative degree between two irreducibles. The base
/// irreducible anchors the relative gradings, so its own entry must be 0.
pub fn morgan_szabo_number(cp: &CriticalPointData) -> Result<i64, FloerError> {
    let Some(first) = cp.irreducibles.first() else {
        return Err(FloerError::NoIrreducibles);
    };
    if first.relative_grading != 0 {
        return Err(FloerError::InconsistentGradings);
    }
    let max = cp.irreducibles.iter().map(|x| x.relative_grading).max().unwrap();
    let min = cp.irreducibles.iter().map(|x| x.relative_grading).min().unwrap();
    Ok(2 + (max - min))
}

/// Consistency report n_MS >= 2 d_Delta; not a proof, a bookkeeping check.
pub fn ms_number_bounds_torsion(n_ms: i64, d_delta: u32) -> bool {
    n_ms >= 2 * i64::from(d_delta)
}

/// Sparse tower coordinates of an element: (tower summand index, U-power,
/// coefficient).
pub type TowerCoords = [(usize, i64, i64)];

/// An element lies in the reduced summand exactly when its tower
/// coordinates all cancel.
pub fn reduced_membership_hint(tower_coords: &TowerCoords) -> bool {
    let mut terms = BTreeMap::new();
    for &(tower, power, coeff) in tower_coords {
        *terms.entry((tower, power)).or_insert(0i64) += coeff;
    }
    terms.values().all(|&v| v == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_hat_b0_is_one_tower_at_minus_one() {
        let p = standard_package(0, Flavor::Hat);
        assert_eq!(p.standard.len(), 1);
        assert_eq!(p.standard[0].kind, TowerKind::FromTower);
        assert_eq!(p.standard[0].multiplicity, 1);
        assert_eq!(p.standard[0].top_grading, Some(Rational::from_integer(-1)));
        assert!(p.reduced.is_empty());
    }

    #[test]
    fn standard_hat_b2_binomials_and_gradings() {
        let p = standard_package(2, Flavor::Hat);
        let mults: Vec<u64> = p.standard.iter().map(|t| t.multiplicity).collect();
        assert_eq!(mults, vec![1, 2, 1]);
        let grs: Vec<i64> = p
            .standard
            .iter()
            .map(|t| t.top_grading.unwrap().to_integer())
            .collect();
        assert_eq!(grs, vec![-3, -2, -1]);
    }

    #[test]
    fn standard_bar_b1_shape() {
        let p = standard_package(1, Flavor::Bar);
        assert_eq!(p.standard.len(), 2);
        assert!(p.standard.iter().all(|t| t.kind == TowerKind::BarTower));
        assert!(p.standard.iter().all(|t| t.top_grading.is_none()));
        assert_eq!(p.standard.iter().map(|t| t.multiplicity).sum::<u64>(), 2);
    }

    #[test]
    fn total_generators_are_powers_of_two() {
        for b1 in 0..=8 {
            for flavor in [Flavor::Hat, Flavor::Check, Flavor::Bar] {
                let p = standard_package(b1, flavor);
                let total: u64 = p.standard.iter().map(|t| t.multiplicity).sum();
                assert_eq!(total, 1 << b1);
            }
            let hat = standard_package(b1, Flavor::Hat);
            for t in &hat.standard {
                let g = t.top_grading.unwrap();
                assert!(g >= Rational::from_integer(-i64::from(b1) - 1));
                assert!(g <= Rational::from_integer(-1));
            }
        }
    }

    fn sample_reduced() -> FiniteUModule {
        FiniteUModule::new(alloc::vec![
            CyclicSummand { grading: Rational::from_integer(0), order: 2 },
            CyclicSummand { grading: Rational::new(1, 2), order: 5 },
        ])
    }

    #[test]
    fn split_package_attaches_reduced() {
        let p = split_package(2, Flavor::Hat, sample_reduced()).unwrap();
        assert_eq!(p.standard.iter().map(|t| t.multiplicity).sum::<u64>(), 4);
        assert_eq!(p.reduced.len(), 2);
        assert_eq!(
            split_package(1, Flavor::Bar, sample_reduced()).unwrap_err(),
            FloerError::BarHasReduced
        );
        assert!(split_package(1, Flavor::Bar, FiniteUModule::empty()).is_ok());
    }

    #[test]
    fn exact_sequence_standard_model_is_exact() {
        for b1 in [0u32, 2, 5] {
            for reduced in [FiniteUModule::empty(), sample_reduced()] {
                let check = split_package(b1, Flavor::Check, reduced.clone()).unwrap();
                let hat = split_package(b1, Flavor::Hat, reduced).unwrap();
                let bar = standard_package(b1, Flavor::Bar);
                assert_eq!(exact_sequence_check(&check, &hat, &bar), Ok(true));
            }
        }
    }

    #[test]
    fn exact_sequence_rejects_shape_mismatch() {
        let check = split_package(2, Flavor::Check, sample_reduced()).unwrap();
        let hat = split_package(2, Flavor::Hat, FiniteUModule::empty()).unwrap();
        let bar = standard_package(2, Flavor::Bar);
        assert_eq!(exact_sequence_check(&check, &hat, &bar), Err(FloerError::MismatchedShapes));
        let bar_wrong = standard_package(3, Flavor::Bar);
        let hat_ok = split_package(2, Flavor::Hat, sample_reduced()).unwrap();
        assert_eq!(
            exact_sequence_check(&check, &hat_ok, &bar_wrong),
            Err(FloerError::MismatchedShapes)
        );
    }

    #[test]
    fn corrupting_any_summand_breaks_exactness() {
        let check = split_package(2, Flavor::Check, sample_reduced()).unwrap();
        let hat = split_package(2, Flavor::Hat, sample_reduced()).unwrap();
        let bar = standard_package(2, Flavor::Bar);
        let clean = SequenceMaps::standard_model(&hat);
        for i in 0..clean.j_image_standard.len() {
            let mut maps = clean.clone();
            maps.j_image_standard[i] = true;
            assert_eq!(exact_sequence_check_with(&check, &hat, &bar, &maps), Ok(false));
        }
        for i in 0..clean.p_kernel_reduced.len() {
            let mut maps = clean.clone();
            maps.p_kernel_reduced[i] = false;
            assert_eq!(exact_sequence_check_with(&check, &hat, &bar, &maps), Ok(false));
        }
    }

    #[test]
    fn torsion_orders() {
        let m = sample_reduced();
        assert_eq!(torsion_order(&m, &[]), 0);
        assert_eq!(torsion_order(&m, &[(0, 0, 1)]), 2);
        assert_eq!(torsion_order(&m, &[(1, 0, 1)]), 5);
        assert_eq!(torsion_order(&m, &[(1, 1, 1)]), 4);
        assert_eq!(torsion_order(&m, &[(0, 0, 1), (1, 0, 1)]), 5);
        assert_eq!(torsion_order(&m, &[(0, 0, 1), (0, 0, -1)]), 0);
    }

    #[test]
    fn torsion_order_shift_law() {
        let m = FiniteUModule::new(alloc::vec![CyclicSummand {
            grading: Rational::from_integer(0),
            order: 3,
        }]);
        let x = [(0usize, 0u32, 1i64)];
        assert_eq!(torsion_order(&m, &x), 3);
        for a in 0..6u32 {
            let shifted = u_shift(&x, a);
            assert_eq!(torsion_order(&m, &shifted), 3u32.saturating_sub(a));
        }
    }

    #[test]
    fn degree_formula_vanishes_on_reference_cobordisms() {
        assert_eq!(cobordism_map_degree(0, -2, 0, 0, 2), Rational::from_integer(0));
        for b in 0..5 {
            assert_eq!(cobordism_map_degree(0, 0, 0, b, b), Rational::from_integer(0));
        }
        assert_eq!(cobordism_map_degree(0, 2, 0, 0, 0), Rational::from_integer(-1));
    }

    #[test]
    fn ms_gate_examples() {
        let g = ms_gate(0, 4, 0, 0);
        assert_eq!(g.d, Rational::from_integer(-2));
        assert!(!g.passes);
        let g = ms_gate(0, -4, 0, 1);
        assert_eq!(g.d, Rational::from_integer(2));
        assert!(g.passes);
        assert!(ms_gate(5, 0, 0, 0).passes);
    }

    #[test]
    fn ms_gate_monotone_in_d_delta() {
        for c1 in -4..=4 {
            for chi in -4..=4 {
                let mut last = true;
                for d in 0..6 {
                    let pass = ms_gate(c1, chi, 1, d).passes;
                    assert!(last || !pass, "gate flipped back on at d_delta={d}");
                    last = pass;
                }
            }
        }
    }

    #[test]
    fn formal_dimension_examples() {
        assert_eq!(formal_dimension(2, 2, 0), -1);
        assert_eq!(formal_dimension(2, 2, -1), 0);
        assert_eq!(formal_dimension(3, 1, 1), -1);
    }

    #[test]
    fn bar_gr_antisymmetry_and_examples() {
        assert_eq!(bar_gr(2, 0, 2, 0), 0);
        assert_eq!(bar_gr(3, -1, 3, 0), -2);
        for fa in 0..4u32 {
            for fb in 0..4u32 {
                for i in -3..=3 {
                    for j in -3..=3 {
                        assert_eq!(bar_gr(fa, i, fb, j), -bar_gr(fb, j, fa, i));
                        let through = bar_gr(fa, i, 0, 0) + bar_gr(0, 0, fb, j);
                        assert_eq!(bar_gr(fa, i, fb, j), through);
                    }
                }
            }
        }
    }

    #[test]
    fn dimension_additivity_exhaustive() {
        for b1 in 0..=5u32 {
            for index_f in 0..=b1 {
                for i in -5..=5 {
                    assert!(dimension_additivity_check(b1, index_f, i));
                }
            }
        }
    }

    #[test]
    fn morgan_szabo_numbers() {
        let single = CriticalPointData {
            reducibles: alloc::vec![Reducible { morse_index: 2 }],
            irreducibles: alloc::vec![Irreducible { id: 0, relative_grading: 0 }],
        };
        assert!(single.validate(2).is_ok());
        assert_eq!(morgan_szabo_number(&single), Ok(2));
        let spread = CriticalPointData {
            reducibles: alloc::vec![Reducible { morse_index: 2 }],
            irreducibles: alloc::vec![
                Irreducible { id: 0, relative_grading: 0 },
                Irreducible { id: 1, relative_grading: 3 },
            ],
        };
        assert_eq!(morgan_szabo_number(&spread), Ok(5));
        assert!(ms_number_bounds_torsion(5, 2));
        assert!(!ms_number_bounds_torsion(5, 3));
    }

    #[test]
    fn morgan_szabo_rejects_bad_input() {
        let empty = CriticalPointData {
            reducibles: alloc::vec![Reducible { morse_index: 1 }],
            irreducibles: alloc::vec![],
        };
        assert_eq!(morgan_szabo_number(&empty), Err(FloerError::NoIrreducibles));
        let skewed = CriticalPointData {
            reducibles: alloc::vec![Reducible { morse_index: 1 }],
            irreducibles: alloc::vec![Irreducible { id: 0, relative_grading: 1 }],
        };
        assert_eq!(morgan_szabo_number(&skewed), Err(FloerError::InconsistentGradings));
    }

    #[test]
    fn critical_point_validation() {
        let two_tops = CriticalPointData {
            reducibles: alloc::vec![
                Reducible { morse_index: 2 },
                Reducible { morse_index: 2 },
            ],
            irreducibles: alloc::vec![Irreducible { id: 0, relative_grading: 0 }],
        };
        assert_eq!(two_tops.validate(2), Err(FloerError::InconsistentGradings));
        let out_of_range = CriticalPointData {
            reducibles: alloc::vec![
                Reducible { morse_index: 3 },
                Reducible { morse_index: 2 },
            ],
            irreducibles: alloc::vec![],
        };
        assert_eq!(out_of_range.validate(2), Err(FloerError::InconsistentGradings));
    }

    #[test]
    fn reduced_membership() {
        assert!(reduced_membership_hint(&[]));
        assert!(!reduced_membership_hint(&[(0, 0, 1)]));
        assert!(reduced_membership_hint(&[(0, 0, 1), (0, 0, -1)]));
        assert!(reduced_membership_hint(&[(1, 2, 3), (1, 2, -3), (0, 0, 0)]));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(8, 4), 70);
        assert_eq!(binomial(5, 6), 0);
        for n in 0..=10u32 {
            for k in 1..=n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }
}
