//! Eisenstein and Gaussian constellations and their average energies.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::eisenstein::Eisenstein;
use crate::gaussian::Gaussian;
use crate::intmath::isqrt_u128;
use crate::metrics::{hex_weight, min_class_hex_weight};
use crate::quotient::Modulus;
use crate::{EisError, Result};

/// Fixed-point scale used for square roots in the `E` column.
const SQRT_SCALE: u128 = 1_000_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Eisenstein,
    Gaussian,
}

/// The reduced residue system of a modulus, used as a signal set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Constellation {
    Eisenstein {
        modulus: Eisenstein,
        points: Vec<Eisenstein>,
    },
    Gaussian {
        modulus: Gaussian,
        points: Vec<Gaussian>,
    },
}

/// An exact average `num / den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mean {
    pub num: u128,
    pub den: u128,
}

impl Mean {
    pub fn new(num: u128, den: u128) -> Self {
        assert!(den > 0, "mean over an empty set");
        Mean { num, den }
    }

    pub fn value(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Value in hundredths, exact halves rounded up.
    pub fn hundredths(self) -> u128 {
        (200 * self.num + self.den) / (2 * self.den)
    }

    /// Whether a two-decimal value `h / 100` lies within `0.005` of this mean.
    pub fn agrees_with(self, h: u128) -> bool {
        (200 * self.num).abs_diff(2 * h * self.den) <= self.den
    }

    /// Two-decimal rendering.
    pub fn fixed2(self) -> String {
        let h = self.hundredths();
        format!("{}.{:02}", h / 100, h % 100)
    }
}

impl PartialOrd for Mean {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mean {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl fmt::Display for Mean {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fixed2())
    }
}

impl Serialize for Mean {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_f64(self.value())
    }
}

/// Average energies and minimum distances of a constellation.
///
/// `weight` is the mean hexagonal weight of the points (Eisenstein) or the
/// mean `|a| + |b|` of the points (Gaussian). `class_min_weight` instead
/// minimizes the weight over each residue class, which for Gaussian points is
/// the Mannheim weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnergyReport {
    pub kind: Kind,
    pub size: u64,
    pub e: Mean,
    pub e2: Mean,
    pub weight: Mean,
    pub class_min_weight: Mean,
    pub d2_min: Option<u64>,
    pub d_weight_min: Option<u64>,
}

impl Constellation {
    pub fn eisenstein(eta: Eisenstein) -> Result<Self> {
        let m = Modulus::new(eta)?;
        Ok(Constellation::Eisenstein {
            modulus: eta,
            points: m.e_points(),
        })
    }

    pub fn gaussian(eta: Gaussian) -> Result<Self> {
        Ok(Constellation::Gaussian {
            modulus: eta,
            points: eta.residue_system()?,
        })
    }

    /// Builds from a coefficient pair interpreted according to `kind`.
    pub fn build(kind: Kind, a: i64, b: i64) -> Result<Self> {
        match kind {
            Kind::Eisenstein => Self::eisenstein(Eisenstein::new(a, b)),
            Kind::Gaussian => Self::gaussian(Gaussian::new(a, b)),
        }
    }

    pub fn kind(&self) -> Kind {
        match self {
            Constellation::Eisenstein { .. } => Kind::Eisenstein,
            Constellation::Gaussian { .. } => Kind::Gaussian,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Constellation::Eisenstein { points, .. } => points.len(),
            Constellation::Gaussian { points, .. } => points.len(),
        }
    }

    /// Points as `(re, im)` in the complex plane.
    pub fn complex_points(&self) -> Vec<(f64, f64)> {
        match self {
            Constellation::Eisenstein { points, .. } => {
                points.iter().map(|p| p.to_complex()).collect()
            }
            Constellation::Gaussian { points, .. } => {
                points.iter().map(|p| p.to_complex()).collect()
            }
        }
    }

    /// Points as integer coefficient pairs.
    pub fn coefficient_pairs(&self) -> Vec<(i64, i64)> {
        match self {
            Constellation::Eisenstein { points, .. } => points.iter().map(|p| (p.a, p.b)).collect(),
            Constellation::Gaussian { points, .. } => points.iter().map(|p| (p.a, p.b)).collect(),
        }
    }

    pub fn energy_report(&self) -> Result<EnergyReport> {
        match self {
            Constellation::Eisenstein { modulus, points } => {
                let m = Modulus::new(*modulus)?;
                let norms: Vec<u64> = points.iter().map(|p| p.norm()).collect();
                let weights: Vec<u64> = points.iter().map(|&p| hex_weight(p)).collect();
                let class_min: Vec<u64> = points
                    .iter()
                    .map(|&p| min_class_hex_weight(p, &m))
                    .collect();
                let (d2, dw) = pairwise_minima(points, |p, q| {
                    let d = *p - *q;
                    (d.norm(), hex_weight(d))
                });
                Ok(report(
                    Kind::Eisenstein,
                    &norms,
                    &weights,
                    &class_min,
                    d2,
                    dw,
                ))
            }
            Constellation::Gaussian { modulus, points } => {
                let norms: Vec<u64> = points.iter().map(|p| p.norm()).collect();
                let weights: Vec<u64> = points.iter().map(|p| p.manhattan()).collect();
                let class_min = points
                    .iter()
                    .map(|p| p.mannheim_weight(*modulus))
                    .collect::<Result<Vec<u64>>>()?;
                let (d2, dw) = pairwise_minima(points, |p, q| {
                    let d = *p - *q;
                    (d.norm(), d.manhattan())
                });
                Ok(report(Kind::Gaussian, &norms, &weights, &class_min, d2, dw))
            }
        }
    }
}

fn pairwise_minima<T>(
    points: &[T],
    dist: impl Fn(&T, &T) -> (u64, u64),
) -> (Option<u64>, Option<u64>) {
    let mut best: Option<(u64, u64)> = None;
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            let (a, b) = dist(p, q);
            best = Some(best.map_or((a, b), |(x, y)| (x.min(a), y.min(b))));
        }
    }
    (best.map(|v| v.0), best.map(|v| v.1))
}

fn sum(xs: &[u64]) -> u128 {
    xs.iter().map(|&x| x as u128).sum()
}

fn report(
    kind: Kind,
    norms: &[u64],
    weights: &[u64],
    class_min: &[u64],
    d2_min: Option<u64>,
    d_weight_min: Option<u64>,
) -> EnergyReport {
    let n = norms.len() as u128;
    let roots: u128 = norms
        .iter()
        .map(|&x| isqrt_u128(x as u128 * SQRT_SCALE * SQRT_SCALE))
        .sum();
    EnergyReport {
        kind,
        size: norms.len() as u64,
        e: Mean::new(roots, n * SQRT_SCALE),
        e2: Mean::new(sum(norms), n),
        weight: Mean::new(sum(weights), n),
        class_min_weight: Mean::new(sum(class_min), n),
        d2_min,
        d_weight_min,
    }
}

/// One line of the side-by-side comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub gaussian: Gaussian,
    pub eisenstein: Eisenstein,
    pub size: u64,
    pub gaussian_report: EnergyReport,
    pub eisenstein_report: EnergyReport,
}

pub const COLUMNS: [&str; 6] = ["E(G)", "E(E)", "E2(G)", "E2(E)", "EM(G)", "EHex(E)"];

impl TableRow {
    /// `E(G), E(E), E²(G), E²(E), E_M(G), E_Hex(E)`.
    pub fn values(&self) -> [Mean; 6] {
        let (g, e) = (&self.gaussian_report, &self.eisenstein_report);
        [g.e, e.e, g.e2, e.e2, g.weight, e.weight]
    }
}

/// Reference values in hundredths, same column order as [`TableRow::values`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReferenceRow {
    pub gaussian: Gaussian,
    pub eisenstein: Eisenstein,
    pub size: u64,
    pub hundredths: [u32; 6],
}

const fn row(g: (i64, i64), e: (i64, i64), size: u64, hundredths: [u32; 6]) -> ReferenceRow {
    ReferenceRow {
        gaussian: Gaussian::new(g.0, g.1),
        eisenstein: Eisenstein::new(e.0, e.1),
        size,
        hundredths,
    }
}

/// Published two-decimal energies for 23 equal-size Gaussian/Eisenstein pairs.
pub const REFERENCE_TABLE: [ReferenceRow; 23] = [
    row((2, 0), (2, 0), 4, [85, 75, 100, 75, 100, 75]),
    row((3, 0), (3, 0), 9, [107, 105, 133, 133, 133, 111]),
    row((2, 3), (3, 4), 13, [136, 126, 215, 185, 154, 138]),
    row((4, 0), (4, 0), 16, [159, 140, 300, 225, 200, 150]),
    row((-3, 4), (5, 5), 25, [190, 177, 416, 360, 224, 192]),
    row((5, 0), (5, 0), 25, [187, 177, 400, 360, 240, 192]),
    row((6, 0), (6, 0), 36, [234, 211, 633, 508, 300, 231]),
    row((6, 1), (7, 3), 37, [232, 211, 616, 503, 292, 227]),
    row((7, 0), (7, 0), 49, [270, 246, 829, 686, 351, 269]),
    row((8, 0), (8, 0), 64, [309, 282, 1100, 900, 400, 309]),
    row((8, 3), (8, 9), 73, [327, 299, 1216, 1011, 416, 329]),
    row((9, 0), (9, 0), 81, [355, 317, 1431, 1133, 465, 348]),
    row((10, 0), (10, 0), 100, [385, 351, 1700, 1395, 500, 387]),
    row((11, 0), (11, 0), 121, [419, 387, 2000, 1691, 545, 426]),
    row((12, 0), (12, 0), 144, [461, 422, 2433, 2008, 600, 465]),
    row((13, 0), (13, 0), 169, [496, 457, 2800, 2354, 646, 504]),
    row((-5, 12), (-7, 8), 169, [497, 455, 2817, 2336, 630, 497]),
    row((14, 0), (14, 0), 196, [538, 492, 3300, 2732, 700, 543]),
    row((8, 12), (12, 16), 208, [552, 506, 3469, 2890, 687, 557]),
    row((15, 0), (15, 0), 225, [573, 527, 3733, 3133, 747, 582]),
    row((16, 0), (16, 0), 256, [614, 562, 4300, 3563, 800, 621]),
    row((16, 6), (16, 18), 292, [654, 600, 4867, 4057, 835, 663]),
    row((18, 3), (21, 9), 333, [698, 640, 5550, 4625, 906, 700]),
];

/// The pair list of [`REFERENCE_TABLE`].
pub fn reference_pairs() -> Vec<(Gaussian, Eisenstein)> {
    REFERENCE_TABLE
        .iter()
        .map(|r| (r.gaussian, r.eisenstein))
        .collect()
}

/// Builds both constellations for each pair and reports their energies.
pub fn compare_table(pairs: &[(Gaussian, Eisenstein)]) -> Result<Vec<TableRow>> {
    pairs
        .iter()
        .map(|&(g, e)| {
            let gn = g.checked_norm().ok_or(EisError::Overflow)?;
            let en = e.checked_norm().ok_or(EisError::Overflow)?;
            if gn != en {
                return Err(EisError::CardinalityMismatch {
                    gaussian: g,
                    gaussian_norm: gn,
                    eisenstein: e,
                    eisenstein_norm: en,
                });
            }
            Ok(TableRow {
                gaussian: g,
                eisenstein: e,
                size: gn,
                gaussian_report: Constellation::gaussian(g)?.energy_report()?,
                eisenstein_report: Constellation::eisenstein(e)?.energy_report()?,
            })
        })
        .collect()
}

/// A computed cell that is more than `0.005` away from its reference value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellMismatch {
    pub size: u64,
    pub gaussian: Gaussian,
    pub eisenstein: Eisenstein,
    pub column: &'static str,
    pub expected: String,
    pub computed: String,
}

/// Compares computed rows against reference rows (matched by modulus pair).
pub fn check_against_reference(rows: &[TableRow], reference: &[ReferenceRow]) -> Vec<CellMismatch> {
    let mut out = Vec::new();
    for r in rows {
        let Some(refrow) = reference
            .iter()
            .find(|x| x.gaussian == r.gaussian && x.eisenstein == r.eisenstein)
        else {
            continue;
        };
        for (col, (value, &h)) in r.values().iter().zip(&refrow.hundredths).enumerate() {
            if !value.agrees_with(h as u128) {
                out.push(CellMismatch {
                    size: r.size,
                    gaussian: r.gaussian,
                    eisenstein: r.eisenstein,
                    column: COLUMNS[col],
                    expected: format!("{}.{:02}", h / 100, h % 100),
                    computed: format!("{:.4}", value.value()),
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: i64, b: i64) -> Eisenstein {
        Eisenstein::new(a, b)
    }

    #[test]
    fn means_round_half_up() {
        assert_eq!(Mean::new(3, 4).fixed2(), "0.75");
        assert_eq!(Mean::new(1, 200).fixed2(), "0.01");
        assert_eq!(Mean::new(61, 12).fixed2(), "5.08");
        assert!(Mean::new(61, 12).agrees_with(508));
        assert!(!Mean::new(61, 12).agrees_with(509));
        assert!(Mean::new(1, 3) < Mean::new(1, 2));
    }

    #[test]
    fn size_four() {
        let c = Constellation::eisenstein(e(2, 0)).unwrap();
        let Constellation::Eisenstein { points, .. } = &c else {
            unreachable!()
        };
        let norms: Vec<u64> = points.iter().map(|p| p.norm()).collect();
        assert_eq!(norms, [0, 1, 1, 1]);
        let r = c.energy_report().unwrap();
        assert_eq!(
            (r.e.fixed2(), r.e2.fixed2(), r.weight.fixed2()),
            ("0.75".into(), "0.75".into(), "0.75".into())
        );
        assert_eq!(r.d2_min, Some(1));

        let g = Constellation::gaussian(Gaussian::new(2, 0))
            .unwrap()
            .energy_report()
            .unwrap();
        assert_eq!(
            (g.e.fixed2(), g.e2.fixed2(), g.weight.fixed2()),
            ("0.85".into(), "1.00".into(), "1.00".into())
        );
        assert_eq!(g.class_min_weight.fixed2(), "1.00");
    }

    #[test]
    fn size_one_and_36() {
        let r = Constellation::eisenstein(e(1, 0))
            .unwrap()
            .energy_report()
            .unwrap();
        assert_eq!((r.size, r.e2.num, r.d2_min), (1, 0, None));
        let r = Constellation::eisenstein(e(6, 0))
            .unwrap()
            .energy_report()
            .unwrap();
        assert_eq!(
            (r.e.fixed2(), r.e2.fixed2(), r.weight.fixed2()),
            ("2.11".into(), "5.08".into(), "2.31".into())
        );
    }

    #[test]
    fn mismatched_pair() {
        let err = compare_table(&[(Gaussian::new(2, 3), e(2, 0))]).unwrap_err();
        assert!(matches!(
            err,
            EisError::CardinalityMismatch {
                gaussian_norm: 13,
                eisenstein_norm: 4,
                ..
            }
        ));
    }

    #[test]
    fn reference_sizes_are_norms() {
        for r in REFERENCE_TABLE {
            assert_eq!(r.gaussian.norm(), r.size);
            assert_eq!(r.eisenstein.norm(), r.size);
        }
    }
}
