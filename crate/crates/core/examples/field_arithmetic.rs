//! GF(p^r) arithmetic, the primitive element and Frobenius norms.
//!
//! Run with `cargo run --example field_arithmetic`.

use std::sync::Arc;

use skewcode::{Automorphism, FiniteField};

fn main() -> skewcode::Result<()> {
    let f9 = Arc::new(FiniteField::new(3, 2, None)?);
    println!("GF(9) modulus coefficients {:?}, xi = {}", f9.modulus(), f9.xi());

    for a in f9.nonzero_elements() {
        let log = f9.discrete_log(a)?;
        println!("  {a} = {:<5} order {}", f9.pretty(a), f9.multiplicative_order(a)?);
        assert_eq!(f9.xi_pow(log as u64), a);
    }

    let theta = Automorphism::frobenius(f9.clone(), 1)?;
    println!("theta has order {}, fixes {:?}", theta.order(), theta.fixed_subfield());

    let alpha = f9.xi();
    for i in 0..=4 {
        println!(
            "  [{i}]_1 = {:>3}   N_{i}(xi) = {}",
            theta.bracket(i)?,
            f9.pretty(theta.norm(i, alpha))
        );
    }
    Ok(())
}
