use std::collections::BTreeSet;

use eisring::eisenstein::{ideal_member, UNITS};
use eisring::metrics::hex_weight;
use eisring::{EisError, Eisenstein, Gaussian, Modulus, PrimeKind};
use proptest::prelude::*;

fn eis(bound: i64) -> impl Strategy<Value = Eisenstein> {
    (-bound..=bound, -bound..=bound).prop_map(|(a, b)| Eisenstein::new(a, b))
}

fn nonzero_eis(bound: i64) -> impl Strategy<Value = Eisenstein> {
    eis(bound).prop_filter("nonzero", |x| !x.is_zero())
}

fn modulus(bound: i64) -> impl Strategy<Value = Modulus> {
    nonzero_eis(bound).prop_filter_map("qualifying associate", |x| Modulus::new(x).ok())
}

proptest! {
    #[test]
    fn norm_is_multiplicative(x in eis(1000), y in eis(1000)) {
        prop_assert_eq!((x * y).norm(), x.norm() * y.norm());
    }

    #[test]
    fn conjugation_is_an_involution_preserving_norm(x in eis(1000)) {
        prop_assert_eq!(x.conjugate().conjugate(), x);
        prop_assert_eq!(x.conjugate().norm(), x.norm());
    }

    #[test]
    fn division_reconstructs_and_shrinks(x in eis(10_000), eta in nonzero_eis(200)) {
        let (q, r) = x.divmod(eta).unwrap();
        prop_assert_eq!(q * eta + r, x);
        prop_assert!(r.norm() < eta.norm());
        // the remainder is a nearest point: no unit step of η shortens it
        for u in UNITS {
            prop_assert!(r.norm() <= (r - u * eta).norm());
        }
    }

    #[test]
    fn division_is_deterministic(x in eis(10_000), eta in nonzero_eis(200)) {
        prop_assert_eq!(x.divmod(eta).unwrap(), x.divmod(eta).unwrap());
    }

    #[test]
    fn canonical_associate_is_unique(x in nonzero_eis(1000)) {
        let c = x.canonical_associate();
        prop_assert_eq!(x.associates().iter().filter(|&&a| a == c).count(), 1);
        prop_assert!(c.a > 0 && 0 <= c.b && c.b < c.a);
        prop_assert_eq!(c.canonical_associate(), c);
    }

    #[test]
    fn associates_and_conjugates_share_norm(x in eis(1000)) {
        for a in x.associates().into_iter().chain(x.conjugate().associates()) {
            prop_assert_eq!(a.norm(), x.norm());
        }
    }

    #[test]
    fn equal_prime_norm_means_associate_or_conjugate(x in nonzero_eis(40)) {
        prop_assume!(matches!(x.classify_prime(), Ok(PrimeKind::Type1 | PrimeKind::Type2 { .. })));
        let n = x.norm();
        let r = 2 * (n as f64).sqrt() as i64 + 2;
        for a in -r..=r {
            for b in -r..=r {
                let y = Eisenstein::new(a, b);
                if y.norm() == n {
                    prop_assert!(y.is_associate_of(x) || y.is_associate_of(x.conjugate()), "{} vs {}", x, y);
                }
            }
        }
    }

    #[test]
    fn gcd_divides_both(x in eis(300), y in nonzero_eis(300)) {
        let g = x.gcd(y).unwrap();
        prop_assert!(g.divides(x) && g.divides(y));
        prop_assert_eq!(g, g.canonical_associate());
    }

    #[test]
    fn factorization_multiplies_back(x in nonzero_eis(300)) {
        let f = x.factorize().unwrap();
        prop_assert_eq!(f.product().unwrap(), x);
        prop_assert!(f.unit.is_unit());
        for &(p, _) in &f.factors {
            prop_assert!(p.is_prime());
            prop_assert_eq!(p, p.canonical_associate());
        }
        let distinct: BTreeSet<_> = f.factors.iter().map(|&(p, _)| p).collect();
        prop_assert_eq!(distinct.len(), f.factors.len());
    }

    #[test]
    fn ideal_membership_matches_division(x in eis(2000), k in 1i64..8, g in nonzero_eis(15)) {
        let gen = g * Eisenstein::new(k, 0);
        let by_division = x.divmod(gen).unwrap().1.is_zero();
        prop_assert_eq!(ideal_member(x, k, g).unwrap(), by_division);
        prop_assert_eq!(ideal_member(x * gen, k, g).unwrap(), true);
    }

    #[test]
    fn class_equality_matches_ideal_membership(m in modulus(25), x in eis(500), y in eis(500)) {
        let same = m.class_equal(x, y);
        prop_assert_eq!(same, ideal_member(x - y, m.t, m.primitive_part()).unwrap());
        prop_assert!(m.class_equal(x, x + m.eta * y));
        prop_assert_eq!(same, m.mu_reduce(x) == m.mu_reduce(y));
    }

    #[test]
    fn lift_and_reduce_invert_each_other(m in modulus(25), x in eis(1000)) {
        let r = m.mu_reduce(x);
        let g = m.pi_lift(x);
        prop_assert!(0 <= g.a && g.a < m.grid_width() && 0 <= g.b && g.b < m.t);
        prop_assert_eq!(m.pi_lift(r), g);
        prop_assert_eq!(m.mu_reduce(g), r);
    }

    #[test]
    fn residue_systems_have_norm_many_distinct_points(m in modulus(18)) {
        let pts = m.e_points();
        prop_assert_eq!(pts.len() as u64, m.eta.norm());
        let distinct: BTreeSet<_> = pts.iter().collect();
        prop_assert_eq!(distinct.len(), pts.len());
        if m.t == 1 {
            prop_assert!(m.grid().all(|g| g.b == 0));
        }
    }

    #[test]
    fn hex_weight_bounds(x in eis(100), y in eis(100), k in -30i64..=30) {
        let w = hex_weight(x);
        prop_assert!(w * w >= x.norm() && w <= x.norm());
        prop_assert!(hex_weight(x * y) <= w * hex_weight(y));
        if !y.is_zero() {
            prop_assert!(w <= hex_weight(x * y));
        }
        prop_assert_eq!(hex_weight(x.conjugate()), w);
        prop_assert_eq!(hex_weight(x * Eisenstein::new(k, 0)), k.unsigned_abs() * w);
        prop_assert!(hex_weight(x + y) <= w + hex_weight(y));
    }

    #[test]
    fn primitivity_agrees_with_factorization_shape(x in nonzero_eis(60)) {
        prop_assert_eq!(x.is_primitive().unwrap(), x.has_primitive_structure().unwrap());
    }

    #[test]
    fn gaussian_reduction_stays_in_class(x in (-5000i64..5000, -5000i64..5000), eta in (-60i64..60, -60i64..60)) {
        let (x, eta) = (Gaussian::new(x.0, x.1), Gaussian::new(eta.0, eta.1));
        prop_assume!(!eta.is_zero());
        let r = x.mod_reduce(eta).unwrap();
        let d = (x - r) * eta.conj();
        let n = eta.norm() as i64;
        prop_assert!(d.a % n == 0 && d.b % n == 0);
        prop_assert!(r.norm() <= x.norm());
        prop_assert!(2 * r.norm() <= eta.norm());
    }
}

#[test]
fn equal_norm_alone_does_not_force_associates() {
    let (x, y) = (Eisenstein::new(7, 0), Eisenstein::new(8, 3));
    assert_eq!(x.norm(), y.norm());
    assert!(!y.is_associate_of(x) && !y.is_associate_of(x.conjugate()));
    assert_ne!(hex_weight(x), hex_weight(y));
}

#[test]
fn gaussian_residue_systems_are_complete() {
    for a in -12i64..=12 {
        for b in -12i64..=12 {
            let eta = Gaussian::new(a, b);
            if eta.is_zero() {
                continue;
            }
            let pts = eta.residue_system().unwrap();
            assert_eq!(pts.len() as u64, eta.norm());
            let distinct: BTreeSet<_> = pts.iter().collect();
            assert_eq!(distinct.len(), pts.len(), "{eta}");
        }
    }
}

#[test]
fn rejects_when_no_associate_qualifies() {
    let bad = Eisenstein::new(240, 90);
    assert_eq!(Modulus::new(bad), Err(EisError::NoSuitableAssociate(bad)));
}
