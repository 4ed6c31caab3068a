//! Class counts over a long range of lengths, checked against 2^gcd(n, r) - 1.

use std::sync::Arc;
use std::time::Instant;

use skewcode::equivalence::sweep;
use skewcode::{Automorphism, FiniteField};

fn main() -> skewcode::Result<()> {
    for (r, s) in [(2, 1), (3, 2), (5, 2)] {
        let field = Arc::new(FiniteField::new(2, r, None)?);
        let aut = Automorphism::frobenius(field, s)?;
        let start = Instant::now();
        let summary = sweep(&aut, 1, 1_000_000, 0);
        println!(
            "GF(2^{r}), s={s}: histogram {:?}, violations {}, {:.2?}",
            summary.histogram,
            summary.violations.len(),
            start.elapsed()
        );
    }
    Ok(())
}
