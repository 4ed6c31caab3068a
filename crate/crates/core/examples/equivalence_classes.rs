//! (n, sigma)-equivalence: class counts, witnesses and representatives.

use std::sync::Arc;

use skewcode::{Automorphism, EquivalenceContext, FiniteField};

fn main() -> skewcode::Result<()> {
    let f8 = Arc::new(FiniteField::new(2, 3, None)?);
    let theta2 = Arc::new(Automorphism::frobenius(f8.clone(), 2)?);

    for n in 1..=9 {
        let ctx = EquivalenceContext::new(&theta2, n)?;
        println!("n = {n}: {} classes, d = {}", ctx.class_count(), ctx.d());
    }

    let f9 = Arc::new(FiniteField::new(3, 2, None)?);
    let theta = Arc::new(Automorphism::frobenius(f9.clone(), 1)?);
    let ctx = EquivalenceContext::new(&theta, 2)?;
    println!("\nGF(9), n = 2: representatives {:?}", ctx.class_representatives());
    for rep in ctx.class_representatives() {
        let class: Vec<String> = ctx.class_of(rep)?.into_iter().map(|e| f9.pretty(e)).collect();
        println!("  class of {}: {}", f9.pretty(rep), class.join(" "));
    }

    let (lambda, mu) = (f9.xi_pow(1), f9.xi_pow(5));
    let report = ctx.report(lambda, mu)?;
    println!(
        "\nxi ~ xi^5? {} (witness {:?}, votes {:?})",
        report.equivalent, report.witness, report.criterion_votes
    );
    let squared = f9.xi_pow(2);
    println!(
        "x^2 - xi^2 reduces to x^2 - 1: {}",
        ctx.scalar_equivalent_to_cyclic(squared)?
    );
    Ok(())
}
