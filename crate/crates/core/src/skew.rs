//! The skew polynomial ring F_q[x, sigma], where x a = sigma(a) x.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Automorphism, Elem, FiniteField};

/// A polynomial `sum f_i x^i` over F_q with the twisted product. Coefficients
/// are stored lowest degree first without trailing zeros, so the zero
/// polynomial has no coefficients and no degree.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewPolynomial {
    aut: Arc<Automorphism>,
    coeffs: Vec<Elem>,
}

impl fmt::Debug for SkewPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewPolynomial[{}]", self.to_csv())
    }
}

impl fmt::Display for SkewPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let field = self.field();
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff = field.pretty(c);
            match (i, c == Elem::ONE) {
                (0, _) => write!(f, "{coeff}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{coeff}·x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{coeff}·x^{i}")?,
            }
        }
        Ok(())
    }
}

fn trim(coeffs: &mut Vec<Elem>) {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
}

/// Remainder of `f` on right division by the monic `g`, both as raw
/// coefficient slices. Works in place on a scratch buffer.
pub(crate) fn right_rem_monic_into(
    aut: &Automorphism,
    f: &[Elem],
    g: &[Elem],
    scratch: &mut Vec<Elem>,
) {
    let field = aut.field();
    let dg = g.len() - 1;
    debug_assert_eq!(g[dg], Elem::ONE);
    scratch.clear();
    scratch.extend_from_slice(f);
    trim(scratch);
    while scratch.len() > dg {
        let top = scratch.len() - 1;
        let c = scratch[top];
        let shift = (top - dg) as u64;
        // subtract c x^shift g
        for (j, &gj) in g[..dg].iter().enumerate() {
            if !gj.is_zero() {
                let t = field.mul(c, aut.apply_pow(shift, gj));
                let slot = &mut scratch[top - dg + j];
                *slot = field.sub(*slot, t);
            }
        }
        scratch.pop();
        trim(scratch);
    }
}

impl SkewPolynomial {
    pub fn new(aut: &Arc<Automorphism>, mut coeffs: Vec<Elem>) -> Self {
        trim(&mut coeffs);
        SkewPolynomial {
            aut: Arc::clone(aut),
            coeffs,
        }
    }

    /// Builds a polynomial from packed element encodings, lowest degree first.
    pub fn from_encodings(aut: &Arc<Automorphism>, encodings: &[u64]) -> Result<Self> {
        let field = aut.field();
        let coeffs = encodings
            .iter()
            .map(|&e| field.elem(e))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(aut, coeffs))
    }

    /// Parses the comma-separated encoding format, e.g. `"1,0,1"` = 1 + x^2.
    pub fn parse_csv(aut: &Arc<Automorphism>, text: &str) -> Result<Self> {
        let encodings = text
            .split(',')
            .map(|t| {
                t.trim().parse::<u64>().map_err(|_| Error::Parse {
                    what: "polynomial",
                    input: text.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_encodings(aut, &encodings)
    }

    pub fn to_csv(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.encoding().to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn zero(aut: &Arc<Automorphism>) -> Self {
        Self::new(aut, Vec::new())
    }

    pub fn one(aut: &Arc<Automorphism>) -> Self {
        Self::constant(aut, Elem::ONE)
    }

    pub fn constant(aut: &Arc<Automorphism>, c: Elem) -> Self {
        Self::new(aut, vec![c])
    }

    /// The monomial `c x^k`.
    pub fn monomial(aut: &Arc<Automorphism>, c: Elem, k: usize) -> Self {
        let mut coeffs = vec![Elem::ZERO; k + 1];
        coeffs[k] = c;
        Self::new(aut, coeffs)
    }

    /// `x^n - lambda`.
    pub fn binomial(aut: &Arc<Automorphism>, n: usize, lambda: Elem) -> Self {
        let mut coeffs = vec![Elem::ZERO; n + 1];
        coeffs[n] = Elem::ONE;
        coeffs[0] = aut.field().sub(coeffs[0], lambda);
        Self::new(aut, coeffs)
    }

    pub fn automorphism(&self) -> &Arc<Automorphism> {
        &self.aut
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        self.aut.field()
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(Elem::ONE)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.aut, &other.aut) || *self.aut == *other.aut {
            Ok(())
        } else {
            Err(Error::AutomorphismMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let field = self.field();
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| field.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Self::new(&self.aut, coeffs))
    }

    pub fn neg(&self) -> Self {
        let field = self.field();
        let coeffs = self.coeffs.iter().map(|&c| field.neg(c)).collect();
        Self::new(&self.aut, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// The left scalar multiple `c f`, i.e. coefficients `c f_i`.
    pub fn scale_left(&self, c: Elem) -> Self {
        let field = self.field();
        let coeffs = self.coeffs.iter().map(|&a| field.mul(c, a)).collect();
        Self::new(&self.aut, coeffs)
    }

    /// Left-scales by the inverse of the leading coefficient.
    pub fn monic(&self) -> Result<Self> {
        let lead = self.leading().ok_or(Error::ZeroGenerator)?;
        Ok(self.scale_left(self.field().inv(lead)?))
    }

    /// Twisted product: the coefficient of `x^k` in `f g` is
    /// `sum_{i + j = k} f_i sigma^i(g_j)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.aut));
        }
        let field = self.field();
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &fi) in self.coeffs.iter().enumerate() {
            if fi.is_zero() {
                continue;
            }
            for (j, &gj) in other.coeffs.iter().enumerate() {
                let t = field.mul(fi, self.aut.apply_pow(i as u64, gj));
                out[i + j] = field.add(out[i + j], t);
            }
        }
        Ok(Self::new(&self.aut, out))
    }

    /// Right Euclidean division `self = quotient * divisor + remainder`
    /// with `deg remainder < deg divisor`.
    pub fn right_divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_same(divisor)?;
        let dg = divisor.degree().ok_or(Error::DivisionByZero)?;
        let field = self.field();
        let lead_g = divisor.coeffs[dg];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Elem::ZERO; rem.len().saturating_sub(dg)];
        while rem.len() > dg {
            let top = rem.len() - 1;
            let shift = top - dg;
            let c = field.div(rem[top], self.aut.apply_pow(shift as u64, lead_g))?;
            quot[shift] = c;
            for (j, &gj) in divisor.coeffs.iter().enumerate() {
                let t = field.mul(c, self.aut.apply_pow(shift as u64, gj));
                rem[shift + j] = field.sub(rem[shift + j], t);
            }
            debug_assert!(rem[top].is_zero());
            rem.pop();
            trim(&mut rem);
        }
        Ok((Self::new(&self.aut, quot), Self::new(&self.aut, rem)))
    }

    /// Whether `self` right-divides `f`.
    pub fn is_right_divisor(&self, f: &Self) -> Result<bool> {
        Ok(f.right_divmod(self)?.1.is_zero())
    }

    /// Right evaluation `sum f_i N_i(alpha)`.
    pub fn right_eval(&self, alpha: Elem) -> Elem {
        let field = self.field();
        self.coeffs
            .iter()
            .enumerate()
            .fold(Elem::ZERO, |acc, (i, &c)| {
                field.add(acc, field.mul(c, self.aut.norm(i as u64, alpha)))
            })
    }

    /// Right evaluation as the remainder of division by `x - alpha`.
    pub fn right_eval_by_division(&self, alpha: Elem) -> Elem {
        let field = self.field();
        let linear = Self::new(&self.aut, vec![field.neg(alpha), Elem::ONE]);
        let (_, rem) = self
            .right_divmod(&linear)
            .expect("x - alpha is a nonzero divisor over the same ring");
        rem.coeff(0)
    }

    /// `f(alpha x)`: the coefficient of `x^j` becomes `f_j N_j(alpha)`.
    pub fn substitute_scale(&self, alpha: Elem) -> Self {
        let field = self.field();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, &c)| field.mul(c, self.aut.norm(j as u64, alpha)))
            .collect();
        Self::new(&self.aut, coeffs)
    }

    /// Centrality, tested by commutation with `x` and with the primitive
    /// element, which together generate the ring.
    pub fn is_central(&self) -> bool {
        let x = Self::monomial(&self.aut, Elem::ONE, 1);
        let xi = Self::constant(&self.aut, self.field().xi());
        [x, xi].iter().all(|h| {
            let left = self.mul(h).expect("same ring");
            let right = h.mul(self).expect("same ring");
            left == right
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4_theta() -> Arc<Automorphism> {
        let f = Arc::new(FiniteField::new(2, 2, None).unwrap());
        Arc::new(Automorphism::frobenius(f, 1).unwrap())
    }

    fn poly(aut: &Arc<Automorphism>, enc: &[u64]) -> SkewPolynomial {
        SkewPolynomial::from_encodings(aut, enc).unwrap()
    }

    #[test]
    fn degree_sentinel() {
        let aut = gf4_theta();
        assert_eq!(SkewPolynomial::zero(&aut).degree(), None);
        assert_eq!(SkewPolynomial::one(&aut).degree(), Some(0));
        assert_eq!(poly(&aut, &[1, 0, 0]).degree(), Some(0));
    }

    #[test]
    fn twist_rule() {
        let aut = gf4_theta();
        let x = poly(&aut, &[0, 1]);
        let xi = poly(&aut, &[2]);
        // x xi = xi^2 x
        assert_eq!(x.mul(&xi).unwrap().coeffs(), &[Elem(0), Elem(3)]);
        assert_ne!(x.mul(&xi).unwrap(), xi.mul(&x).unwrap());
        let one = SkewPolynomial::one(&aut);
        assert_eq!(x.mul(&one).unwrap(), x);
    }

    #[test]
    fn product_of_linear_factors() {
        let aut = gf4_theta();
        // (x + xi^2)(x - xi) = x^2 + 1 in characteristic 2
        let a = poly(&aut, &[3, 1]);
        let b = poly(&aut, &[2, 1]);
        assert_eq!(a.mul(&b).unwrap(), poly(&aut, &[1, 0, 1]));
    }

    #[test]
    fn division_examples() {
        let aut = gf4_theta();
        let x2 = poly(&aut, &[0, 0, 1]);
        let g = poly(&aut, &[2, 1]);
        let (q, r) = x2.right_divmod(&g).unwrap();
        assert_eq!(q, poly(&aut, &[3, 1]));
        assert_eq!(r, SkewPolynomial::one(&aut));
        let (q, r) = g.right_divmod(&g).unwrap();
        assert_eq!(q, SkewPolynomial::one(&aut));
        assert!(r.is_zero());
        let (q, r) = g.right_divmod(&x2).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, g);
        assert_eq!(
            g.right_divmod(&SkewPolynomial::zero(&aut)).unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn evaluation_examples() {
        let aut = gf4_theta();
        let x2 = poly(&aut, &[0, 0, 1]);
        assert_eq!(x2.right_eval(Elem(2)), Elem::ONE);
        assert_eq!(x2.right_eval_by_division(Elem(2)), Elem::ONE);
        let c = poly(&aut, &[3]);
        assert_eq!(c.right_eval(Elem(2)), Elem(3));
    }

    #[test]
    fn divisibility_examples() {
        let aut = gf4_theta();
        let f = SkewPolynomial::binomial(&aut, 2, Elem(2));
        let x_minus_1 = poly(&aut, &[1, 1]);
        assert!(!x_minus_1.is_right_divisor(&f).unwrap());
        assert!(SkewPolynomial::one(&aut).is_right_divisor(&f).unwrap());
        // x - alpha | x^n - lambda iff the right evaluation vanishes
        for n in 1..6 {
            for lambda in aut.field().nonzero_elements() {
                let f = SkewPolynomial::binomial(&aut, n, lambda);
                for alpha in aut.field().elements() {
                    let lin = poly(&aut, &[alpha.encoding() as u64, 1]);
                    assert_eq!(
                        lin.is_right_divisor(&f).unwrap(),
                        f.right_eval(alpha).is_zero()
                    );
                }
            }
        }
    }

    #[test]
    fn substitution_examples() {
        let aut = gf4_theta();
        let f = poly(&aut, &[1, 1, 1]);
        assert_eq!(f.substitute_scale(Elem::ONE), f);
        assert_eq!(f.substitute_scale(Elem(2)), poly(&aut, &[1, 2, 1]));
        let x3 = poly(&aut, &[0, 0, 0, 1]);
        let n3 = aut.norm(3, Elem(3));
        assert_eq!(
            x3.substitute_scale(Elem(3)),
            SkewPolynomial::monomial(&aut, n3, 3)
        );
    }

    #[test]
    fn centrality_examples() {
        let aut = gf4_theta();
        assert!(poly(&aut, &[1]).is_central());
        assert!(!poly(&aut, &[2]).is_central());
        assert!(!poly(&aut, &[0, 1]).is_central());
        assert!(poly(&aut, &[0, 0, 1]).is_central());
    }

    #[test]
    fn mismatched_rings() {
        let a = gf4_theta();
        let f = Arc::new(FiniteField::new(2, 2, None).unwrap());
        let id = Arc::new(Automorphism::identity(f));
        let p = poly(&a, &[1, 1]);
        let q = SkewPolynomial::one(&id);
        assert_eq!(p.mul(&q).unwrap_err(), Error::AutomorphismMismatch);
    }

    #[test]
    fn csv_format() {
        let aut = gf4_theta();
        let p = SkewPolynomial::parse_csv(&aut, "1,0,1").unwrap();
        assert_eq!(p, poly(&aut, &[1, 0, 1]));
        assert_eq!(p.to_csv(), "1,0,1");
        assert!(SkewPolynomial::parse_csv(&aut, "1,x").is_err());
        assert!(SkewPolynomial::parse_csv(&aut, "1,4").is_err());
        assert_eq!(p.to_string(), "x^2 + 1");
    }
}
