use std::sync::Arc;

use proptest::prelude::*;
use skewcode::{Automorphism, Elem, FiniteField, SkewPolynomial};

const FIELDS: &[(u32, u32)] = &[(2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3)];

fn ring(idx: usize, s: u32) -> Arc<Automorphism> {
    let (p, r) = FIELDS[idx];
    let field = Arc::new(FiniteField::new(p, r, None).unwrap());
    Arc::new(Automorphism::frobenius(field, s % r).unwrap())
}

fn poly(a: &Arc<Automorphism>, raw: &[u32]) -> SkewPolynomial {
    let q = a.field().q();
    let enc: Vec<u64> = raw.iter().map(|&c| (c % q) as u64).collect();
    SkewPolynomial::from_encodings(a, &enc).unwrap()
}

fn coeffs() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(any::<u32>(), 0..7)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn multiplication_is_associative(
        idx in 0..FIELDS.len(), s in 0u32..3,
        f in coeffs(), g in coeffs(), h in coeffs(),
    ) {
        let a = ring(idx, s);
        let (f, g, h) = (poly(&a, &f), poly(&a, &g), poly(&a, &h));
        prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
    }

    #[test]
    fn multiplication_distributes(
        idx in 0..FIELDS.len(), s in 0u32..3,
        f in coeffs(), g in coeffs(), h in coeffs(),
    ) {
        let a = ring(idx, s);
        let (f, g, h) = (poly(&a, &f), poly(&a, &g), poly(&a, &h));
        let left = f.mul(&g.add(&h).unwrap()).unwrap();
        prop_assert_eq!(left, f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap());
        let right = g.add(&h).unwrap().mul(&f).unwrap();
        prop_assert_eq!(right, g.mul(&f).unwrap().add(&h.mul(&f).unwrap()).unwrap());
    }

    #[test]
    fn right_division_identity(
        idx in 0..FIELDS.len(), s in 0u32..3,
        f in prop::collection::vec(any::<u32>(), 0..12), g in coeffs(),
    ) {
        let a = ring(idx, s);
        let (f, g) = (poly(&a, &f), poly(&a, &g));
        prop_assume!(!g.is_zero());
        let (quot, rem) = f.right_divmod(&g).unwrap();
        prop_assert_eq!(quot.mul(&g).unwrap().add(&rem).unwrap(), f);
        prop_assert!(rem.degree().is_none_or(|d| d < g.degree().unwrap()));
    }

    #[test]
    fn substitution_is_multiplicative(
        idx in 0..FIELDS.len(), s in 0u32..3,
        f in coeffs(), g in coeffs(), alpha in 1u32..,
    ) {
        let a = ring(idx, s);
        let q = a.field().q();
        let alpha = a.field().elem((1 + alpha % (q - 1)) as u64).unwrap();
        let (f, g) = (poly(&a, &f), poly(&a, &g));
        let lhs = f.mul(&g).unwrap().substitute_scale(alpha);
        let rhs = f.substitute_scale(alpha).mul(&g.substitute_scale(alpha)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn twisted_commutation_rule() {
    // x a = sigma(a) x for every constant a
    for idx in 0..FIELDS.len() {
        for s in 0..3 {
            let a = ring(idx, s);
            let x = SkewPolynomial::monomial(&a, Elem::ONE, 1);
            for c in a.field().elements() {
                let lhs = x.mul(&SkewPolynomial::constant(&a, c)).unwrap();
                assert_eq!(lhs, SkewPolynomial::monomial(&a, a.apply(c), 1));
            }
        }
    }
}

#[test]
fn binomial_is_central_exactly_when_expected() {
    // x^n - lambda is central iff m | n and sigma(lambda) = lambda
    for idx in 0..FIELDS.len() {
        for s in 0..3 {
            let a = ring(idx, s);
            let m = a.order() as usize;
            for n in 1..=6 {
                for lambda in a.field().nonzero_elements() {
                    let central = SkewPolynomial::binomial(&a, n, lambda).is_central();
                    assert_eq!(central, n % m == 0 && a.fixes(lambda));
                }
            }
        }
    }
}
