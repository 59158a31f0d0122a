//! Self-check suites. Each suite runs deterministic (seeded) checks and stops
//! at the first counterexample.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::codes::ExtField;
use crate::constellation::{check_against_reference, compare_table, reference_pairs};
use crate::eisenstein::{Eisenstein, ONE, RHO, UNITS};
use crate::gaussian::Gaussian;
use crate::intmath::factor_u64;
use crate::metrics::hex_weight;
use crate::partition::{recursive_partition, PartitionNode};
use crate::quotient::Modulus;
use crate::EisError;

pub const SUITES: [&str; 8] = [
    "relnormhex",
    "roundtrip",
    "primitivity",
    "partition",
    "mannheim-oracle",
    "table5",
    "residue-tables",
    "fields",
];

/// Reference residue tables: modulus and CSV text `x,y,re_rep_a,re_rep_b`.
pub const GOLDEN_TABLES: [(Eisenstein, &str); 3] = [
    (
        Eisenstein::new(6, 0),
        include_str!("../data/table1_eta6.csv"),
    ),
    (
        Eisenstein::new(6, 12),
        include_str!("../data/table2_eta6p12r.csv"),
    ),
    (
        Eisenstein::new(-6, 5),
        include_str!("../data/table3_eta_m6p5r.csv"),
    ),
];

/// Moduli whose full grids are round-tripped by the `roundtrip` suite.
pub const ROUNDTRIP_MODULI: [Eisenstein; 5] = [
    Eisenstein::new(6, 0),
    Eisenstein::new(6, 12),
    Eisenstein::new(-6, 5),
    Eisenstein::new(4, 6),
    Eisenstein::new(18, 6),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: u64,
    pub failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "{}: pass ({} checks)", self.suite, self.checks),
            Some(msg) => write!(
                f,
                "{}: FAIL after {} checks: {}",
                self.suite, self.checks, msg
            ),
        }
    }
}

/// Counts assertions and turns the first failing one into an error message.
#[derive(Debug, Default)]
pub struct Counter {
    pub checks: u64,
}

impl Counter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
        self.checks += 1;
        if ok {
            Ok(())
        } else {
            Err(msg())
        }
    }
}

/// Runs one named suite. Unknown names are reported as failures.
pub fn run_suite(name: &str, samples: u64, seed: u64) -> SuiteReport {
    let mut c = Counter::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let outcome = match name {
        "relnormhex" => relnormhex(&mut c, &mut rng, samples),
        "roundtrip" => roundtrip(&mut c, &mut rng, samples),
        "primitivity" => primitivity(&mut c, 500),
        "partition" => partition(&mut c),
        "mannheim-oracle" => mannheim_oracle(&mut c, 400),
        "table5" => table5(&mut c),
        "residue-tables" => residue_tables(&mut c),
        "fields" => fields(&mut c, &mut rng, samples),
        other => Err(format!("unknown suite {other:?}")),
    };
    SuiteReport {
        suite: name.to_string(),
        checks: c.checks,
        failure: outcome.err(),
    }
}

pub fn random_eisenstein(rng: &mut ChaCha8Rng, bound: i64) -> Eisenstein {
    Eisenstein::new(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

/// Hexagonal weight checks on random pairs with coefficients in `[-100, 100]`,
/// plus the four fixed witnesses showing weight does not follow norm.
pub fn relnormhex(c: &mut Counter, rng: &mut ChaCha8Rng, samples: u64) -> Result<(), String> {
    for ((a, b), w, n) in [
        ((4, 4), 4, 16),
        ((3, 4), 4, 13),
        ((8, 4), 8, 48),
        ((7, 7), 7, 49),
    ] {
        let x = Eisenstein::new(a, b);
        c.check(hex_weight(x) == w && x.norm() == n, || {
            format!("witness {x}")
        })?;
    }
    for _ in 0..samples {
        let x = random_eisenstein(rng, 100);
        let y = random_eisenstein(rng, 100);
        let (wx, wy, nx) = (hex_weight(x), hex_weight(y), x.norm());
        c.check(wx * wx >= nx && wx <= nx, || {
            format!("sqrt(N) <= wt <= N fails at {x}")
        })?;
        if !y.is_zero() {
            c.check(wx <= hex_weight(x * y), || {
                format!("wt(x) <= wt(xy) fails at {x}, {y}")
            })?;
        }
        c.check(wx == hex_weight(x.conjugate()), || {
            format!("conjugate weight differs at {x}")
        })?;
        let k = rng.gen_range(-20i64..=20);
        c.check(
            hex_weight(x.scale(k).unwrap()) == k.unsigned_abs() * wx,
            || format!("wt(kx) != |k| wt(x) at k={k}, x={x}"),
        )?;
        if !x.is_zero() {
            let n = wx as i64;
            let hits = x
                .associates()
                .iter()
                .filter(|u| u.a == n && (0..n).contains(&u.b))
                .count();
            c.check(hits == 1, || {
                format!("{x} has {hits} associates of the form n+kρ")
            })?;
        }
        let u = UNITS[rng.gen_range(0..6)];
        let partner = if rng.gen_bool(0.5) {
            u * x
        } else {
            u * x.conjugate()
        };
        c.check(partner.norm() == nx && hex_weight(partner) == wx, || {
            format!("associate/conjugate weight differs at {x}, {partner}")
        })?;
        c.check(hex_weight(x * y) <= wx * wy, || {
            format!("wt(xy) <= wt(x)wt(y) fails at {x}, {y}")
        })?;
    }
    Ok(())
}

/// Full-grid round trip for one modulus: lift∘reduce is the identity on the
/// grid, reduce∘lift is the identity on reduced points, and reduced points
/// are distinct and number `N(η)`.
pub fn roundtrip_modulus(c: &mut Counter, eta: Eisenstein) -> Result<(), String> {
    let m = Modulus::new(eta).map_err(|e| format!("{eta}: {e}"))?;
    let rs = m.residue_system();
    c.check(rs.len() as u64 == m.size(), || {
        format!("{eta}: grid has {} points", rs.len())
    })?;
    for (g, e) in rs.rows() {
        c.check(m.pi_lift(e) == g, || {
            format!("{eta}: lift(reduce({g})) = {}", m.pi_lift(e))
        })?;
        c.check(m.mu_reduce(m.pi_lift(e)) == e, || {
            format!("{eta}: reduce(lift({e})) != {e}")
        })?;
    }
    let distinct: BTreeSet<_> = rs.e_points.iter().collect();
    c.check(distinct.len() == rs.len(), || {
        format!("{eta}: repeated reduced points")
    })
}

/// Random nonzero `η` with `N(η) <= max_norm`.
pub fn random_modulus(rng: &mut ChaCha8Rng, max_norm: u64) -> Eisenstein {
    let bound = ((max_norm as f64 * 4.0 / 3.0).sqrt()).ceil() as i64;
    loop {
        let x = random_eisenstein(rng, bound);
        if !x.is_zero() && x.norm() <= max_norm {
            return x;
        }
    }
}

pub fn roundtrip(c: &mut Counter, rng: &mut ChaCha8Rng, samples: u64) -> Result<(), String> {
    for eta in ROUNDTRIP_MODULI {
        roundtrip_modulus(c, eta)?;
    }
    for _ in 0..samples {
        let eta = random_modulus(rng, 1000);
        match Modulus::new(eta) {
            Err(EisError::NoSuitableAssociate(_)) => continue,
            _ => roundtrip_modulus(c, eta)?,
        }
    }
    Ok(())
}

/// Every nonzero `η` with `N(η) <= max_norm`.
pub fn moduli_up_to(max_norm: u64) -> Vec<Eisenstein> {
    let bound = ((max_norm as f64 * 4.0 / 3.0).sqrt()).ceil() as i64 + 1;
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            let x = Eisenstein::new(a, b);
            if !x.is_zero() && x.norm() <= max_norm {
                out.push(x);
            }
        }
    }
    out
}

/// gcd-based primitivity agrees with the factorization shape, and primitive
/// norms avoid 9 and every rational prime `≡ 2 (mod 3)`.
pub fn primitivity(c: &mut Counter, max_norm: u64) -> Result<(), String> {
    for eta in moduli_up_to(max_norm) {
        let by_gcd = eta.is_primitive().map_err(|e| e.to_string())?;
        let by_shape = eta.has_primitive_structure().map_err(|e| e.to_string())?;
        c.check(by_gcd == by_shape, || {
            format!("{eta}: gcd says {by_gcd}, factorization says {by_shape}")
        })?;
        if by_gcd {
            let n = eta.norm();
            let bad = n % 9 == 0 || factor_u64(n).iter().any(|&(p, _)| p % 3 == 2);
            c.check(!bad, || format!("{eta}: primitive with norm {n}"))?;
        }
    }
    Ok(())
}

/// Sibling subsets at every level report the same distances.
pub fn sibling_distances_agree(node: &PartitionNode) -> bool {
    let first = node.children.first().map(|k| (k.min_d2, k.min_dhex));
    node.children
        .iter()
        .all(|k| Some((k.min_d2, k.min_dhex)) == first)
        && node.children.iter().all(sibling_distances_agree)
}

/// Sizes equal and points partitioned exactly at every level.
pub fn children_partition_parent(node: &PartitionNode) -> bool {
    if node.children.is_empty() {
        return true;
    }
    let size = node.children[0].points.len();
    let mut union: Vec<Eisenstein> = node
        .children
        .iter()
        .flat_map(|k| k.points.iter().copied())
        .collect();
    let mut parent = node.points.clone();
    union.sort();
    parent.sort();
    node.children.iter().all(|k| k.points.len() == size)
        && union == parent
        && node.children.iter().all(|k| k.min_d2 >= node.min_d2)
        && node.children.iter().all(children_partition_parent)
}

/// The worked partitions, each checked for exact distances and structure.
pub fn partition(c: &mut Counter) -> Result<(), String> {
    // (modulus, factors, expected squared distance at each depth)
    type Case = ((i64, i64), &'static [u64], &'static [Option<u64>]);
    let cases: [Case; 5] = [
        ((-6, 5), &[7], &[Some(1), Some(7)]),
        ((6, 0), &[2], &[Some(1), Some(4)]),
        ((6, 0), &[3], &[Some(1), Some(9)]),
        ((6, 12), &[3], &[Some(1), Some(9)]),
        ((-1, 16), &[7, 13], &[Some(1), Some(7), Some(91)]),
    ];
    for ((a, b), factors, d2) in cases {
        let eta = Eisenstein::new(a, b);
        let m = Modulus::new(eta).map_err(|e| e.to_string())?;
        let root = recursive_partition(&m, factors).map_err(|e| e.to_string())?;
        for (depth, &want) in d2.iter().enumerate() {
            for node in root.level(depth) {
                c.check(node.min_d2 == want, || {
                    format!(
                        "{eta} {factors:?}: subset {:?} has d2 {:?}, want {want:?}",
                        node.label, node.min_d2
                    )
                })?;
            }
        }
        c.check(sibling_distances_agree(&root), || {
            format!("{eta} {factors:?}: sibling distances differ")
        })?;
        c.check(children_partition_parent(&root), || {
            format!("{eta} {factors:?}: not an equal partition")
        })?;
        if let Some(h) = root.subgroup() {
            c.check(!h.contains_unit(), || {
                format!("{eta} {factors:?}: subgroup holds a unit")
            })?;
        }
    }
    let m = Modulus::new(Eisenstein::new(-1, 16)).map_err(|e| e.to_string())?;
    let root = recursive_partition(&m, &[7, 13]).map_err(|e| e.to_string())?;
    let leaf = root.find(&[0, 0]).ok_or("missing subset [0,0]")?;
    let want: Vec<Eisenstein> = [0, 91, 182]
        .iter()
        .map(|&x| m.mu_reduce(Eisenstein::new(x, 0)))
        .collect();
    c.check(leaf.points == want, || {
        format!("subset [0,0] is {:?}", leaf.points)
    })
}

/// Mannheim weight by brute force over a `(2r+1)²` window of translates.
pub fn mannheim_window(theta: Gaussian, eta: Gaussian, r: i64) -> u64 {
    let rep = theta.mod_reduce(eta).expect("nonzero modulus");
    let mut best = u64::MAX;
    for u in -r..=r {
        for v in -r..=r {
            let p = rep + Gaussian::new(u, v) * eta;
            best = best.min(p.a.unsigned_abs() + p.b.unsigned_abs());
        }
    }
    best
}

pub fn mannheim_oracle(c: &mut Counter, max_norm: u64) -> Result<(), String> {
    let bound = (max_norm as f64).sqrt() as i64 + 1;
    for a in -bound..=bound {
        for b in -bound..=bound {
            let eta = Gaussian::new(a, b);
            if eta.is_zero() || eta.norm() > max_norm {
                continue;
            }
            for p in eta.residue_system().map_err(|e| e.to_string())? {
                let fast = p.mannheim_weight(eta).map_err(|e| e.to_string())?;
                let wide = mannheim_window(p, eta, 3);
                c.check(fast == wide, || {
                    format!("{p} mod {eta}: 3x3 gives {fast}, 7x7 gives {wide}")
                })?;
            }
        }
    }
    Ok(())
}

pub fn table5(c: &mut Counter) -> Result<(), String> {
    let rows = compare_table(&reference_pairs()).map_err(|e| e.to_string())?;
    let cells = rows.len() as u64 * 6;
    let bad = check_against_reference(&rows, &crate::constellation::REFERENCE_TABLE);
    c.checks += cells - bad.len() as u64;
    match bad.first() {
        None => Ok(()),
        Some(m) => Err(format!(
            "{} of {cells} cells differ; first: size {} ({}, {}) {} expected {} computed {}",
            bad.len(),
            m.size,
            m.gaussian,
            m.eisenstein,
            m.column,
            m.expected,
            m.computed
        )),
    }
}

/// Parses an embedded table into `(grid, reduced)` pairs.
pub fn parse_golden(csv: &str) -> Vec<(Eisenstein, Eisenstein)> {
    csv.lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let v: Vec<i64> = l
                .split(',')
                .map(|s| s.trim().parse().expect("integer cell"))
                .collect();
            (Eisenstein::new(v[0], v[1]), Eisenstein::new(v[2], v[3]))
        })
        .collect()
}

pub fn residue_tables(c: &mut Counter) -> Result<(), String> {
    for (eta, csv) in GOLDEN_TABLES {
        let expected = parse_golden(csv);
        let m = Modulus::new(eta).map_err(|e| e.to_string())?;
        let got: Vec<_> = m.residue_system().rows().collect();
        c.check(got.len() == expected.len(), || {
            format!("{eta}: {} rows, want {}", got.len(), expected.len())
        })?;
        for (g, w) in got.iter().zip(&expected) {
            c.check(g == w, || {
                format!("{eta}: row {} maps to {}, want {}", g.0, g.1, w.1)
            })?;
        }
    }
    Ok(())
}

/// The sixteen-element field over `E_2`, plus sampled field axioms.
pub fn fields(c: &mut Counter, rng: &mut ChaCha8Rng, samples: u64) -> Result<(), String> {
    let f = ExtField::new(Eisenstein::new(2, 0), &[RHO, ONE, ONE]).map_err(|e| e.to_string())?;
    let elems = f.elements();
    c.check(elems.len() == 16, || format!("{} elements", elems.len()))?;
    let alpha = f.alpha();
    c.check(
        f.mul(&alpha, &alpha) == f.add(&alpha, &f.from_coeffs(&[RHO])),
        || "α² != α + ρ".into(),
    )?;
    let g = f.mult_group_order_check();
    c.check(g.order == 15 && g.all_orders_divide, || {
        format!("group order {}", g.order)
    })?;
    c.check(g.generator.is_some(), || "no element of order 15".into())?;
    let zero = f.zero();
    let one = f.one();
    for x in elems.iter().filter(|x| **x != zero) {
        c.check(elems.iter().any(|y| f.mul(x, y) == one), || {
            format!("{:?} has no inverse", f.coeffs(x))
        })?;
    }
    for _ in 0..samples {
        let pick = |rng: &mut ChaCha8Rng| elems[rng.gen_range(0..elems.len())].clone();
        let (x, y, z) = (pick(rng), pick(rng), pick(rng));
        let lhs = f.mul(&x, &f.add(&y, &z));
        let rhs = f.add(&f.mul(&x, &y), &f.mul(&x, &z));
        c.check(lhs == rhs, || "distributivity fails".into())?;
    }
    Ok(())
}

/// Result of sampling random moduli and checking `|E_η| = N(η)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CardinalitySample {
    pub sampled: u64,
    pub rejected: u64,
    pub failures: Vec<Eisenstein>,
}

pub fn cardinality_sample(samples: u64, seed: u64, max_norm: u64) -> CardinalitySample {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = CardinalitySample {
        sampled: samples,
        rejected: 0,
        failures: Vec::new(),
    };
    for _ in 0..samples {
        let eta = random_modulus(&mut rng, max_norm);
        match Modulus::new(eta) {
            Ok(m) => {
                let pts = m.e_points();
                let distinct: BTreeSet<_> = pts.iter().collect();
                if pts.len() as u64 != eta.norm() || distinct.len() != pts.len() {
                    out.failures.push(eta);
                }
            }
            Err(_) => out.rejected += 1,
        }
    }
    out
}
