//! Every skew constacyclic code of a given length, with parameters.

use std::sync::Arc;

use skewcode::code::count_by_dimension;
use skewcode::{enumerate_codes, Automorphism, CodeContext, EnumerationBudget, FiniteField};

fn main() -> skewcode::Result<()> {
    let f4 = Arc::new(FiniteField::new(2, 2, None)?);
    let theta = Arc::new(Automorphism::frobenius(f4.clone(), 1)?);
    let budget = EnumerationBudget::default();

    let ctx = CodeContext::new(&theta, 4, f4.xi())?;
    let codes = enumerate_codes(&ctx, &budget)?;
    println!("x^4 - xi over GF(4)[x, theta]: {} codes", codes.len());
    for code in &codes {
        let d = code.descriptor(&budget)?;
        println!(
            "  g = {:<24} [n={}, k={}, d={}]",
            code.generator().to_string(),
            d.n,
            d.k,
            d.d_min.map_or("-".to_string(), |d| d.to_string())
        );
    }
    println!("by dimension: {:?}", count_by_dimension(&codes));

    let best = codes
        .iter()
        .filter(|c| c.dimension() == 2)
        .max_by_key(|c| c.min_distance(&budget).unwrap_or(0))
        .expect("a two-dimensional code exists");
    println!("\ngenerator matrix of {}:", best.generator());
    for row in best.generator_matrix()? {
        let cells: Vec<String> = row.iter().map(|&e| f4.pretty(e)).collect();
        println!("  [{}]", cells.join(" "));
    }
    Ok(())
}
