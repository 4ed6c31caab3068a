//! Transporting codes between equivalent constants with x -> alpha x.

use std::sync::Arc;

use skewcode::{
    apply_isometry, check_isometry, enumerate_codes, Automorphism, CodeContext, Elem,
    EnumerationBudget, EquivalenceContext, FiniteField,
};

fn main() -> skewcode::Result<()> {
    let f8 = Arc::new(FiniteField::new(2, 3, None)?);
    let theta = Arc::new(Automorphism::frobenius(f8.clone(), 1)?);
    let budget = EnumerationBudget::default();
    let n = 4;

    // gcd([4]_1, 7) = 1, so every nonzero constant reduces to lambda = 1
    let eq = EquivalenceContext::new(&theta, n as u64)?;
    let (lambda, mu) = (Elem::ONE, f8.xi_pow(3));
    let alpha = eq.find_witness(lambda, mu)?.expect("a single class");
    println!(
        "lambda = {}, mu = {}, witness alpha = {}",
        f8.pretty(lambda),
        f8.pretty(mu),
        f8.pretty(alpha)
    );

    let source = CodeContext::new(&theta, n, mu)?;
    for code in enumerate_codes(&source, &budget)? {
        let image = apply_isometry(&code, lambda, alpha)?;
        let check = check_isometry(&code, &image, alpha, &budget)?;
        println!(
            "  {:<28} -> {:<28} k={} weights {:?} preserved={}",
            code.generator().to_string(),
            image.generator().to_string(),
            image.dimension(),
            image.weight_distribution(&budget)?,
            check.all_hold()
        );
    }

    let eq3 = EquivalenceContext::new(&theta, 3)?;
    println!(
        "\nfor n = 3 there are {} classes; 1 ~ xi? {}",
        eq3.class_count(),
        eq3.are_equivalent(Elem::ONE, f8.xi())?
    );
    Ok(())
}
