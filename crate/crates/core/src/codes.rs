//! Small linear codes over `E_η` and extension fields of `E_γ`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::eisenstein::{Eisenstein, ONE};
use crate::metrics::{hex_distance_vec, sq_euclid_distance_vec};
use crate::quotient::Modulus;
use crate::{EisError, Result};

/// Default cap on the number of codewords a span may materialize.
pub const DEFAULT_SPAN_BOUND: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Metric {
    SqEuclid,
    Hex,
}

/// A submodule of `E_η^n`, with every codeword listed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearCode {
    pub alphabet: Modulus,
    pub length: usize,
    pub generators: Vec<Vec<Eisenstein>>,
    pub codewords: Vec<Vec<Eisenstein>>,
}

fn reduce_word(m: &Modulus, w: &[Eisenstein]) -> Vec<Eisenstein> {
    w.iter().map(|&x| m.mu_reduce(x)).collect()
}

impl LinearCode {
    /// All `E_η`-linear combinations of `generators`, each of length `length`.
    pub fn span(
        alphabet: Modulus,
        length: usize,
        generators: Vec<Vec<Eisenstein>>,
        bound: usize,
    ) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.len() != length) {
            return Err(EisError::LengthMismatch {
                left: g.len(),
                right: length,
            });
        }
        let scalars = alphabet.e_points();
        let mut words: BTreeSet<Vec<Eisenstein>> = BTreeSet::new();
        words.insert(vec![Eisenstein::default(); length]);
        for g in &generators {
            let g = reduce_word(&alphabet, g);
            let mut next = BTreeSet::new();
            for w in &words {
                for &s in &scalars {
                    let combo: Vec<Eisenstein> = w
                        .iter()
                        .zip(&g)
                        .map(|(&x, &y)| alphabet.mu_reduce(x + s * y))
                        .collect();
                    next.insert(combo);
                    if next.len() > bound {
                        return Err(EisError::SpanTooLarge { bound });
                    }
                }
            }
            words = next;
        }
        Ok(LinearCode {
            alphabet,
            length,
            generators,
            codewords: words.into_iter().collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }

    pub fn min_distance(&self, metric: Metric) -> Result<u64> {
        code_min_distance(&self.codewords, metric)
    }

    /// Smallest weight of a nonzero codeword.
    pub fn min_weight(&self, metric: Metric) -> Option<u64> {
        let zero = vec![Eisenstein::default(); self.length];
        self.codewords
            .iter()
            .filter(|w| **w != zero)
            .map(|w| distance(w, &zero, metric).expect("equal lengths"))
            .min()
    }
}

fn distance(x: &[Eisenstein], y: &[Eisenstein], metric: Metric) -> Result<u64> {
    match metric {
        Metric::SqEuclid => sq_euclid_distance_vec(x, y),
        Metric::Hex => hex_distance_vec(x, y),
    }
}

/// Closure under componentwise subtraction followed by reduction.
pub fn is_group_code(words: &[Vec<Eisenstein>], modulus: &Modulus) -> bool {
    let set: BTreeSet<Vec<Eisenstein>> = words.iter().map(|w| reduce_word(modulus, w)).collect();
    if set.is_empty() {
        return false;
    }
    set.iter().all(|x| {
        set.iter().all(|y| {
            let diff: Vec<Eisenstein> = x
                .iter()
                .zip(y)
                .map(|(&a, &b)| modulus.mu_reduce(a - b))
                .collect();
            set.contains(&diff)
        })
    })
}

/// Exhaustive minimum distance over distinct pairs of codewords.
pub fn code_min_distance(words: &[Vec<Eisenstein>], metric: Metric) -> Result<u64> {
    if words.len() < 2 {
        return Err(EisError::TooFewWords);
    }
    let mut best = u64::MAX;
    for (i, x) in words.iter().enumerate() {
        for y in &words[i + 1..] {
            if x != y {
                best = best.min(distance(x, y, metric)?);
            }
        }
    }
    if best == u64::MAX {
        return Err(EisError::TooFewWords);
    }
    Ok(best)
}

/// `E_γ[X]/⟨f⟩` for an Eisenstein prime `γ` and a monic irreducible `f`.
///
/// Base-field elements are stored as indices into the reduced residue system
/// of `γ`, with full addition and multiplication tables.
#[derive(Clone, Debug)]
pub struct ExtField {
    pub base: Modulus,
    /// Coefficients of `f`, constant term first, leading `1` included.
    pub poly: Vec<Eisenstein>,
    elems: Vec<Eisenstein>,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    neg: Vec<usize>,
    f: Vec<usize>,
}

/// An element of an [`ExtField`]: coefficients of `1, α, …, α^{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtElem(Vec<usize>);

/// Outcome of the multiplicative group scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupCheck {
    pub order: u64,
    pub all_orders_divide: bool,
    pub generator: Option<ExtElem>,
}

impl ExtField {
    pub fn new(gamma: Eisenstein, poly: &[Eisenstein]) -> Result<Self> {
        if !gamma.is_prime() {
            return Err(EisError::NotPrimeModulus(gamma));
        }
        let base = Modulus::new(gamma)?;
        let elems = base.e_points();
        let index: BTreeMap<Eisenstein, usize> =
            elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let idx = |x: Eisenstein| index[&base.mu_reduce(x)];
        let q = elems.len();
        let add: Vec<Vec<usize>> = (0..q)
            .map(|i| (0..q).map(|j| idx(elems[i] + elems[j])).collect())
            .collect();
        let mul: Vec<Vec<usize>> = (0..q)
            .map(|i| (0..q).map(|j| idx(elems[i] * elems[j])).collect())
            .collect();
        let neg: Vec<usize> = (0..q).map(|i| idx(-elems[i])).collect();

        if poly.len() < 2 || !base.class_equal(*poly.last().unwrap(), ONE) {
            return Err(EisError::BadPolynomial);
        }
        let f: Vec<usize> = poly.iter().map(|&c| idx(c)).collect();
        let field = ExtField {
            base,
            poly: poly.to_vec(),
            elems,
            add,
            mul,
            neg,
            f,
        };
        if !field.is_irreducible() {
            return Err(EisError::ReduciblePolynomial);
        }
        Ok(field)
    }

    /// Degree of the extension.
    pub fn degree(&self) -> usize {
        self.f.len() - 1
    }

    pub fn base_size(&self) -> u64 {
        self.elems.len() as u64
    }

    pub fn order(&self) -> u64 {
        self.base_size().pow(self.degree() as u32)
    }

    pub fn zero(&self) -> ExtElem {
        ExtElem(vec![0; self.degree()])
    }

    pub fn one(&self) -> ExtElem {
        self.from_coeffs(&[ONE])
    }

    /// The class of `X`, i.e. a root of `f`.
    pub fn alpha(&self) -> ExtElem {
        self.from_coeffs(&[Eisenstein::default(), ONE])
    }

    /// Element with the given coefficients (low degree first), reduced by `f`.
    pub fn from_coeffs(&self, coeffs: &[Eisenstein]) -> ExtElem {
        let raw: Vec<usize> = coeffs.iter().map(|&c| self.index_of(c)).collect();
        self.reduce(raw)
    }

    pub fn coeffs(&self, x: &ExtElem) -> Vec<Eisenstein> {
        x.0.iter().map(|&i| self.elems[i]).collect()
    }

    fn index_of(&self, c: Eisenstein) -> usize {
        let r = self.base.mu_reduce(c);
        self.elems
            .iter()
            .position(|&e| e == r)
            .expect("reduced point is listed")
    }

    /// Every element, coefficients enumerated lexicographically.
    pub fn elements(&self) -> Vec<ExtElem> {
        let q = self.elems.len();
        let n = self.degree();
        (0..self.order() as usize)
            .map(|mut k| {
                let mut c = vec![0; n];
                for slot in c.iter_mut() {
                    *slot = k % q;
                    k /= q;
                }
                ExtElem(c)
            })
            .collect()
    }

    pub fn add(&self, x: &ExtElem, y: &ExtElem) -> ExtElem {
        ExtElem(
            x.0.iter()
                .zip(&y.0)
                .map(|(&a, &b)| self.add[a][b])
                .collect(),
        )
    }

    pub fn mul(&self, x: &ExtElem, y: &ExtElem) -> ExtElem {
        let n = self.degree();
        let mut prod = vec![0usize; 2 * n - 1];
        for (i, &a) in x.0.iter().enumerate() {
            for (j, &b) in y.0.iter().enumerate() {
                prod[i + j] = self.add[prod[i + j]][self.mul[a][b]];
            }
        }
        self.reduce(prod)
    }

    pub fn pow(&self, x: &ExtElem, mut e: u64) -> ExtElem {
        let mut base = x.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, x: &ExtElem) -> Option<u64> {
        if *x == self.zero() {
            return None;
        }
        let one = self.one();
        let mut acc = x.clone();
        let mut k = 1;
        while acc != one {
            acc = self.mul(&acc, x);
            k += 1;
            if k > self.order() {
                return None;
            }
        }
        Some(k)
    }

    /// Checks that every nonzero order divides `|F| - 1` and looks for a generator.
    pub fn mult_group_order_check(&self) -> GroupCheck {
        let order = self.order() - 1;
        let mut all = true;
        let mut generator = None;
        for x in self.elements().iter().filter(|x| **x != self.zero()) {
            match self.mult_order(x) {
                Some(k) if order.is_multiple_of(k) => {
                    if k == order && generator.is_none() {
                        generator = Some(x.clone());
                    }
                }
                _ => all = false,
            }
        }
        GroupCheck {
            order,
            all_orders_divide: all,
            generator,
        }
    }

    /// Reduces a coefficient vector of any length modulo `f`.
    fn reduce(&self, mut p: Vec<usize>) -> ExtElem {
        let n = self.degree();
        while p.len() > n {
            let lead = p.pop().unwrap();
            let shift = p.len() - n;
            // X^n = -(f_0 + … + f_{n-1} X^{n-1})
            for (k, &fk) in self.f[..n].iter().enumerate() {
                let t = self.neg[self.mul[lead][fk]];
                p[shift + k] = self.add[p[shift + k]][t];
            }
        }
        p.resize(n, 0);
        ExtElem(p)
    }

    /// No monic factor of degree `1..=n/2` divides `f`.
    fn is_irreducible(&self) -> bool {
        let n = self.degree();
        let q = self.elems.len();
        for d in 1..=n / 2 {
            for k in 0..q.pow(d as u32) {
                let mut g = Vec::with_capacity(d + 1);
                let mut k = k;
                for _ in 0..d {
                    g.push(k % q);
                    k /= q;
                }
                g.push(self.index_of(ONE));
                if self.poly_rem_is_zero(&self.f, &g) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether monic `g` divides `p` over the base field.
    fn poly_rem_is_zero(&self, p: &[usize], g: &[usize]) -> bool {
        let mut r = p.to_vec();
        let dg = g.len() - 1;
        while r.len() > dg {
            let lead = r.pop().unwrap();
            let shift = r.len() - dg;
            for (k, &gk) in g[..dg].iter().enumerate() {
                let t = self.neg[self.mul[lead][gk]];
                r[shift + k] = self.add[r[shift + k]][t];
            }
        }
        r.iter().all(|&c| self.elems[c].is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eisenstein::RHO;

    fn e(a: i64, b: i64) -> Eisenstein {
        Eisenstein::new(a, b)
    }

    fn word(v: &[(i64, i64)]) -> Vec<Eisenstein> {
        v.iter().map(|&(a, b)| e(a, b)).collect()
    }

    #[test]
    fn spans() {
        let e3 = Modulus::new(e(3, 0)).unwrap();
        let full = LinearCode::span(e3, 1, vec![word(&[(1, 0)])], DEFAULT_SPAN_BOUND).unwrap();
        assert_eq!(full.len(), 9);
        assert_eq!(full.min_distance(Metric::SqEuclid).unwrap(), 1);

        let e2 = Modulus::new(e(2, 0)).unwrap();
        let rep =
            LinearCode::span(e2, 2, vec![word(&[(1, 0), (1, 0)])], DEFAULT_SPAN_BOUND).unwrap();
        assert_eq!(rep.len(), 4);
        assert!(rep.codewords.iter().all(|w| w[0] == w[1]));
        assert_eq!(rep.min_distance(Metric::Hex).unwrap(), 2);
        assert!(is_group_code(&rep.codewords, &e2));

        let empty = LinearCode::span(e2, 3, vec![], DEFAULT_SPAN_BOUND).unwrap();
        assert_eq!(empty.codewords, vec![vec![e(0, 0); 3]]);
        assert_eq!(empty.min_distance(Metric::Hex), Err(EisError::TooFewWords));

        let big = LinearCode::span(
            e3,
            2,
            vec![word(&[(1, 0), (0, 0)]), word(&[(0, 0), (1, 0)])],
            10,
        );
        assert_eq!(big, Err(EisError::SpanTooLarge { bound: 10 }));
        let bad = LinearCode::span(e3, 2, vec![word(&[(1, 0)])], 10);
        assert_eq!(bad, Err(EisError::LengthMismatch { left: 1, right: 2 }));
    }

    #[test]
    fn group_closure() {
        let e3 = Modulus::new(e(3, 0)).unwrap();
        assert!(!is_group_code(
            &[word(&[(0, 0), (0, 0)]), word(&[(1, 0), (0, 0)])],
            &e3
        ));
        assert!(is_group_code(&[word(&[(0, 0), (0, 0)])], &e3));
    }

    #[test]
    fn field_of_sixteen() {
        let f = ExtField::new(e(2, 0), &[RHO, ONE, ONE]).unwrap();
        assert_eq!(f.order(), 16);
        assert_eq!(f.elements().len(), 16);
        let a = f.alpha();
        let expected = f.add(&a, &f.from_coeffs(&[RHO]));
        assert_eq!(f.mul(&a, &a), expected);
        let check = f.mult_group_order_check();
        assert_eq!(check.order, 15);
        assert!(check.all_orders_divide);
        assert!(check.generator.is_some());
    }

    #[test]
    fn base_fields_and_errors() {
        let f = ExtField::new(e(1, -1), &[e(0, 0), ONE]).unwrap();
        assert_eq!(f.mult_group_order_check().order, 2);
        let f = ExtField::new(e(2, 0), &[e(0, 0), ONE]).unwrap();
        let c = f.mult_group_order_check();
        assert_eq!(c.order, 3);
        assert!(c.generator.is_some());
        assert_eq!(
            ExtField::new(e(2, 0), &[e(0, 0), e(0, 0), ONE]).unwrap_err(),
            EisError::ReduciblePolynomial
        );
        assert_eq!(
            ExtField::new(e(6, 0), &[e(0, 0), ONE]).unwrap_err(),
            EisError::NotPrimeModulus(e(6, 0))
        );
        assert_eq!(
            ExtField::new(e(2, 0), &[ONE, e(0, 0)]).unwrap_err(),
            EisError::BadPolynomial
        );
    }
}
