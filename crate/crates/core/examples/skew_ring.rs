//! Multiplication, right division and right evaluation in F_q[x, sigma].

use std::sync::Arc;

use skewcode::{Automorphism, Elem, FiniteField, SkewPolynomial};

fn main() -> skewcode::Result<()> {
    let f4 = Arc::new(FiniteField::new(2, 2, None)?);
    let theta = Arc::new(Automorphism::frobenius(f4.clone(), 1)?);
    let xi = f4.xi();

    let x = SkewPolynomial::monomial(&theta, Elem::ONE, 1);
    let a = SkewPolynomial::constant(&theta, xi);
    println!("x * xi = {}", x.mul(&a)?);
    println!("xi * x = {}", a.mul(&x)?);

    let f = SkewPolynomial::from_encodings(&theta, &[1, 2, 0, 3, 1])?;
    let g = SkewPolynomial::from_encodings(&theta, &[3, 1])?;
    let (quot, rem) = f.right_divmod(&g)?;
    println!("({f}) = ({quot}) * ({g}) + {rem}");
    assert_eq!(quot.mul(&g)?.add(&rem)?, f);

    for alpha in f4.elements() {
        println!(
            "f({alpha}) = {} (remainder by x - alpha: {})",
            f.right_eval(alpha),
            f.right_eval_by_division(alpha)
        );
    }

    let x4 = SkewPolynomial::binomial(&theta, 4, Elem::ONE);
    let x3 = SkewPolynomial::binomial(&theta, 3, Elem::ONE);
    println!("x^4 - 1 central: {}, x^3 - 1 central: {}", x4.is_central(), x3.is_central());
    Ok(())
}
