use std::sync::Arc;

use skewcode::{
    enumerate_codes, Automorphism, CodeContext, EnumerationBudget, Error, FiniteField, Shift,
    SkewPolynomial,
};

fn aut(p: u32, r: u32, s: u32) -> Arc<Automorphism> {
    let field = Arc::new(FiniteField::new(p, r, None).unwrap());
    Arc::new(Automorphism::frobenius(field, s).unwrap())
}

#[test]
fn closure_checks_can_fail() {
    // with gcd(m, n) = 2 some skew cyclic code over GF(4) is not cyclic
    let a = aut(2, 2, 1);
    let ctx = CodeContext::new(&a, 4, skewcode::Elem::ONE).unwrap();
    let codes = enumerate_codes(&ctx, &EnumerationBudget::default()).unwrap();
    let not_cyclic = codes
        .iter()
        .filter(|c| !c.verify_reduction_to_constacyclic().closed)
        .count();
    assert!(not_cyclic > 0);
    for c in &codes {
        assert!(c.is_closed_under(Shift::Skew));
        assert!(c.verify_quasi_twisted().closed);
    }
}

#[test]
fn generator_row_check_matches_exhaustive_check() {
    let budget = EnumerationBudget::default();
    for (p, r) in [(2, 2), (2, 3), (3, 2)] {
        for s in 0..r {
            let a = aut(p, r, s);
            for n in 1..=4 {
                for lambda in a.field().nonzero_elements() {
                    let ctx = CodeContext::new(&a, n, lambda).unwrap();
                    for code in enumerate_codes(&ctx, &budget).unwrap() {
                        for op in [Shift::Skew, Shift::Classical, Shift::ClassicalPower(2)] {
                            assert_eq!(
                                code.is_closed_under(op),
                                code.is_closed_under_exhaustive(op, &budget).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn skew_shift_of_a_codeword_is_left_multiplication_by_x() {
    // T(c) corresponds to x c(x) mod x^n - lambda
    let a = aut(2, 3, 1);
    let lambda = a.field().xi();
    let ctx = CodeContext::new(&a, 3, lambda).unwrap();
    let x = SkewPolynomial::monomial(&a, skewcode::Elem::ONE, 1);
    for code in enumerate_codes(&ctx, &EnumerationBudget::default()).unwrap() {
        for c in code.codewords(&EnumerationBudget::default()).unwrap().take(50) {
            let as_poly = SkewPolynomial::new(&a, c.0.clone());
            let (_, rem) = x.mul(&as_poly).unwrap().right_divmod(&ctx.modulus()).unwrap();
            let mut expected = rem.coeffs().to_vec();
            expected.resize(3, skewcode::Elem::ZERO);
            assert_eq!(ctx.skew_shift(&c.0).unwrap().0, expected);
        }
    }
}

#[test]
fn budget_is_enforced() {
    let a = aut(2, 4, 1);
    let ctx = CodeContext::new(&a, 8, skewcode::Elem::ONE).unwrap();
    let budget = EnumerationBudget {
        codewords: 1 << 10,
        divisor_candidates: 1 << 10,
    };
    assert!(matches!(
        enumerate_codes(&ctx, &budget),
        Err(Error::EnumerationBudgetExceeded { .. })
    ));
}

#[test]
fn non_divisor_is_rejected() {
    let a = aut(2, 2, 1);
    let ctx = CodeContext::new(&a, 3, skewcode::Elem::ONE).unwrap();
    let g = SkewPolynomial::parse_csv(&a, "1,1,1,1").unwrap();
    assert!(matches!(
        skewcode::SkewConstacyclicCode::new(&ctx, &g),
        Err(Error::NotARightDivisor { .. })
    ));
}
