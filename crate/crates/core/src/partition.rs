//! Set partitioning of a residue system into cosets of additive subgroups.
//!
//! When `t = 1` the ring is cyclic and the subgroup generated by `c` (with
//! `c | N(η)`) has `c` cosets `k + ⟨c⟩`. When `t > 1` the subgroup of points
//! whose grid coordinates are both multiples of `c` (with `c | t`) has `c²`
//! cosets `i + jρ + ⟨c⟩`, listed with index `j·c + i`. A chain of factors
//! refines each coset again with the next factor.
//!
//! Minimum distances are always measured exhaustively over the reduced points.

use serde::Serialize;

use crate::eisenstein::Eisenstein;
use crate::metrics::{hex_distance, sq_euclid_distance};
use crate::quotient::Modulus;
use crate::{EisError, Result};

/// One subset in a partition tree. `None` distances mean the subset has a single point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionNode {
    pub label: Vec<usize>,
    pub points: Vec<Eisenstein>,
    pub min_d2: Option<u64>,
    pub min_dhex: Option<u64>,
    pub children: Vec<PartitionNode>,
}

impl PartitionNode {
    /// All nodes `depth` levels below this one, in label order.
    pub fn level(&self, depth: usize) -> Vec<&PartitionNode> {
        if depth == 0 {
            return vec![self];
        }
        self.children
            .iter()
            .flat_map(|c| c.level(depth - 1))
            .collect()
    }

    pub fn depth(&self) -> usize {
        self.children
            .iter()
            .map(|c| c.depth() + 1)
            .max()
            .unwrap_or(0)
    }

    /// The child holding zero (the subgroup itself), if any.
    pub fn subgroup(&self) -> Option<&PartitionNode> {
        self.children.first()
    }

    pub fn contains_unit(&self) -> bool {
        self.points.iter().any(|p| p.is_unit())
    }

    /// Finds a node by label path.
    pub fn find(&self, label: &[usize]) -> Option<&PartitionNode> {
        match label.split_first() {
            None => Some(self),
            Some((&i, rest)) => self.children.get(i)?.find(rest),
        }
    }
}

/// Exhaustive minimum squared Euclidean and hexagonal distance over distinct pairs.
pub fn subset_min_distances(points: &[Eisenstein]) -> (Option<u64>, Option<u64>) {
    let mut d2 = None::<u64>;
    let mut dh = None::<u64>;
    for (i, &p) in points.iter().enumerate() {
        for &q in &points[i + 1..] {
            let a = sq_euclid_distance(p, q);
            let b = hex_distance(p, q);
            d2 = Some(d2.map_or(a, |v| v.min(a)));
            dh = Some(dh.map_or(b, |v| v.min(b)));
        }
    }
    (d2, dh)
}

/// The `c` cosets of the subgroup generated by `c` in `Z[ρ]/⟨η⟩ ≅ Z_{N(η)}`.
pub fn subgroup_primitive(modulus: &Modulus, c: u64, d: u64) -> Result<PartitionNode> {
    if modulus.t != 1 {
        return Err(EisError::NotPrimitiveModulus(modulus.eta));
    }
    if c == 0 || d == 0 {
        return Err(EisError::ZeroFactor);
    }
    let size = modulus.size();
    if c.checked_mul(d) != Some(size) {
        return Err(EisError::NotAFactorization { c, d, size });
    }
    recursive_partition(modulus, &[c])
}

/// The `c²` cosets of `{x + yρ : c | x, c | y}` when `t = c·d`.
pub fn subgroup_nonprimitive(modulus: &Modulus, c: u64, d: u64) -> Result<PartitionNode> {
    if c == 0 || d == 0 {
        return Err(EisError::ZeroFactor);
    }
    let t = modulus.t as u64;
    let product = c.saturating_mul(d);
    if product != t {
        return Err(EisError::BadFactorOfT { product, t });
    }
    recursive_partition(modulus, &[c])
}

/// Builds the partition chain for `factors`, one tree level per factor.
/// For `t = 1` the product of the factors must divide `N(η)`; otherwise it
/// must divide `t`.
pub fn recursive_partition(modulus: &Modulus, factors: &[u64]) -> Result<PartitionNode> {
    if factors.contains(&0) {
        return Err(EisError::ZeroFactor);
    }
    let product = factors
        .iter()
        .try_fold(1u64, |acc, &f| acc.checked_mul(f))
        .ok_or(EisError::Overflow)?;
    let cyclic = modulus.t == 1;
    if cyclic {
        let size = modulus.size();
        if !size.is_multiple_of(product) {
            return Err(EisError::BadFactorOfNorm { product, size });
        }
    } else if !(modulus.t as u64).is_multiple_of(product) {
        return Err(EisError::BadFactorOfT {
            product,
            t: modulus.t as u64,
        });
    }

    let rs = modulus.residue_system();
    let members: Vec<(Eisenstein, Eisenstein)> = rs.rows().collect();
    let ctx = Chain { cyclic, factors };
    Ok(ctx.build(Vec::new(), (0, 0), 1, members))
}

struct Chain<'a> {
    cyclic: bool,
    factors: &'a [u64],
}

impl Chain<'_> {
    /// `members` are (grid point, reduced point) pairs congruent to `offset`
    /// modulo `step` (coordinatewise when not cyclic).
    fn build(
        &self,
        label: Vec<usize>,
        offset: (u64, u64),
        step: u64,
        members: Vec<(Eisenstein, Eisenstein)>,
    ) -> PartitionNode {
        let points: Vec<Eisenstein> = members.iter().map(|&(_, e)| e).collect();
        let (min_d2, min_dhex) = subset_min_distances(&points);
        let mut children = Vec::new();
        if let Some(&c) = self.factors.get(label.len()) {
            let next = step * c;
            let offsets: Vec<(u64, u64)> = if self.cyclic {
                (0..c).map(|i| (offset.0 + step * i, 0)).collect()
            } else {
                (0..c)
                    .flat_map(|j| (0..c).map(move |i| (i, j)))
                    .map(|(i, j)| (offset.0 + step * i, offset.1 + step * j))
                    .collect()
            };
            for (idx, off) in offsets.into_iter().enumerate() {
                let sub: Vec<_> = members
                    .iter()
                    .copied()
                    .filter(|&(g, _)| self.key(g, next) == off)
                    .collect();
                let mut child_label = label.clone();
                child_label.push(idx);
                children.push(self.build(child_label, off, next, sub));
            }
        }
        PartitionNode {
            label,
            points,
            min_d2,
            min_dhex,
            children,
        }
    }

    fn key(&self, g: Eisenstein, modulus: u64) -> (u64, u64) {
        let m = modulus as i64;
        if self.cyclic {
            (g.a.rem_euclid(m) as u64, 0)
        } else {
            (g.a.rem_euclid(m) as u64, g.b.rem_euclid(m) as u64)
        }
    }
}
