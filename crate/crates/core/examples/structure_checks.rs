//! When skew codes collapse to classical constacyclic or quasi-twisted codes.

use std::sync::Arc;

use skewcode::{enumerate_codes, Automorphism, CodeContext, Elem, EnumerationBudget, FiniteField};

fn main() -> skewcode::Result<()> {
    let f16 = Arc::new(FiniteField::new(2, 4, None)?);
    let budget = EnumerationBudget::default();

    for (s, n) in [(1, 3), (1, 4), (2, 4), (2, 6)] {
        let aut = Arc::new(Automorphism::frobenius(f16.clone(), s)?);
        let ctx = CodeContext::new(&aut, n, Elem::ONE)?;
        let codes = enumerate_codes(&ctx, &budget)?;
        let classical = codes
            .iter()
            .filter(|c| c.verify_reduction_to_constacyclic().closed)
            .count();
        let quasi = codes.iter().filter(|c| c.verify_quasi_twisted().closed).count();
        let index = codes[0].verify_quasi_twisted().index;
        println!(
            "GF(16), s={s} (m={}), n={n}: {} codes, {classical} cyclic, {quasi} quasi-cyclic of index {index}",
            aut.order(),
            codes.len()
        );
    }
    Ok(())
}
