//! Finite fields GF(p^r) in a polynomial basis, with log/antilog tables and
//! the Frobenius-power automorphisms a -> a^(p^s).
//!
//! Elements are stored by their packed integer encoding `sum c_i p^i`, where
//! `c_i` is the coefficient of `t^i` and `t` is a root of the field modulus.
//! Encoding 0 is the additive identity and encoding 1 the multiplicative one.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};

/// Largest field order for which tables are built.
pub const MAX_ORDER: u32 = 1 << 16;

/// Bit-size cap for exact bracket values.
const MAX_BRACKET_BITS: u64 = 1 << 24;

/// A field element, identified by its packed base-p encoding.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn encoding(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// GF(p^r) with a fixed irreducible modulus and primitive element `xi`.
pub struct FiniteField {
    p: u32,
    r: u32,
    q: u32,
    modulus: Vec<u32>,
    xi: Elem,
    /// `exp[i] = xi^i` for `0 <= i < q - 1`.
    exp: Vec<u32>,
    /// `log[e]` for nonzero encodings; `log[0]` is unused.
    log: Vec<u32>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("r", &self.r)
            .field("modulus", &self.modulus)
            .field("xi", &self.xi)
            .finish()
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.r == other.r && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Parses a field designator such as `"2^3"` or `"7"`.
pub fn parse_designator(s: &str) -> Result<(u32, u32)> {
    let bad = || Error::Parse {
        what: "field designator",
        input: s.to_string(),
    };
    let (p, r) = match s.trim().split_once('^') {
        Some((p, r)) => (p.trim(), r.trim()),
        None => (s.trim(), "1"),
    };
    let p = p.parse::<u32>().map_err(|_| bad())?;
    let r = r.parse::<u32>().map_err(|_| bad())?;
    Ok((p, r))
}

fn checked_order(p: u32, r: u32) -> Option<u32> {
    let mut q: u64 = 1;
    for _ in 0..r {
        q = q.checked_mul(p as u64)?;
        if q > MAX_ORDER as u64 {
            return None;
        }
    }
    Some(q as u32)
}

// Dense polynomial helpers over GF(p), coefficients low degree first.

fn gfp_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut rem: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let db = b.len() - 1;
    let p = p as u64;
    let lead_inv = mod_inverse(b[db] as u64, p);
    while rem.len() > db {
        let top = rem.len() - 1;
        let c = rem[top] * lead_inv % p;
        if c != 0 {
            let shift = top - db;
            for (i, &bi) in b.iter().enumerate() {
                rem[shift + i] = (rem[shift + i] + p * p - c * bi as u64 % p) % p;
            }
        }
        rem.pop();
    }
    while rem.last() == Some(&0) {
        rem.pop();
    }
    rem.into_iter().map(|c| c as u32).collect()
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let r = modulus.len() - 1;
    for d in 1..=r / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut rest = idx;
            for _ in 0..d {
                divisor.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            divisor.push(1);
            if gfp_rem(modulus, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The lexicographically smallest monic irreducible of degree `r`, comparing
/// coefficient sequences from the constant term upwards.
fn default_modulus(p: u32, r: u32) -> Vec<u32> {
    let count = (p as u64).pow(r);
    for idx in 0..count {
        let mut coeffs = vec![0u32; r as usize + 1];
        let mut rest = idx;
        for i in (0..r as usize).rev() {
            coeffs[i] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        coeffs[r as usize] = 1;
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn mul_mod_poly(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let r = modulus.len() - 1;
    let p = p as u64;
    let mut prod = vec![0u64; 2 * r];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai as u64 * bj as u64) % p;
        }
    }
    for k in (r..2 * r).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        for i in 0..r {
            prod[k - r + i] = (prod[k - r + i] + p * p - c * modulus[i] as u64 % p) % p;
        }
        prod[k] = 0;
    }
    prod.truncate(r);
    prod.into_iter().map(|c| c as u32).collect()
}

impl FiniteField {
    /// Builds GF(p^r). Without a modulus the lexicographically smallest monic
    /// irreducible is used; `xi` is the smallest encoding of order q-1.
    pub fn new(p: u32, r: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NonPrimeCharacteristic(p as u64));
        }
        if r == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = checked_order(p, r).ok_or(Error::FieldTooLarge {
            p,
            r,
            max: MAX_ORDER,
        })?;
        let modulus = match modulus {
            Some(m) => {
                let mut m = m.to_vec();
                while m.last() == Some(&0) {
                    m.pop();
                }
                if m.len() != r as usize + 1 {
                    return Err(Error::DegreeMismatch {
                        expected: r,
                        found: m.len().saturating_sub(1) as u32,
                    });
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::Parse {
                        what: "modulus coefficient",
                        input: format!("{m:?}"),
                    });
                }
                if m[r as usize] != 1 {
                    return Err(Error::NonMonicModulus);
                }
                if !is_irreducible(&m, p) {
                    return Err(Error::ReducibleModulus { p });
                }
                m
            }
            None => default_modulus(p, r),
        };

        let encode = |c: &[u32]| c.iter().rev().fold(0u32, |acc, &d| acc * p + d);
        let decode = |mut e: u32| {
            let mut c = vec![0u32; r as usize];
            for slot in c.iter_mut() {
                *slot = e % p;
                e /= p;
            }
            c
        };

        let group = (q - 1) as usize;
        let one = decode(1);
        let mut found = None;
        for cand in 1..q {
            let g = decode(cand);
            let mut table = Vec::with_capacity(group);
            let mut cur = one.clone();
            let mut primitive = true;
            for k in 0..group {
                if k > 0 && cur == one {
                    primitive = false;
                    break;
                }
                table.push(encode(&cur));
                cur = mul_mod_poly(&cur, &g, &modulus, p);
            }
            if primitive && cur == one {
                found = Some((Elem(cand), table));
                break;
            }
        }
        let (xi, exp) = found.expect("the multiplicative group of a finite field is cyclic");
        let mut log = vec![u32::MAX; q as usize];
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u32;
        }
        Ok(FiniteField {
            p,
            r,
            q,
            modulus,
            xi,
            exp,
            log,
        })
    }

    /// Builds the field from a modulus given as its packed base-p integer,
    /// e.g. `7` for t^2 + t + 1 over GF(2).
    pub fn with_packed_modulus(p: u32, r: u32, packed: u64) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NonPrimeCharacteristic(p as u64));
        }
        let mut digits = Vec::new();
        let mut rest = packed;
        while rest > 0 {
            digits.push((rest % p as u64) as u32);
            rest /= p as u64;
        }
        Self::new(p, r, Some(&digits))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients, constant term first; monic of degree r.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn modulus_packed(&self) -> u64 {
        self.modulus
            .iter()
            .rev()
            .fold(0u64, |acc, &d| acc * self.p as u64 + d as u64)
    }

    pub fn designator(&self) -> String {
        format!("{}^{}", self.p, self.r)
    }

    pub fn xi(&self) -> Elem {
        self.xi
    }

    pub fn elem(&self, encoding: u64) -> Result<Elem> {
        if encoding < self.q as u64 {
            Ok(Elem(encoding as u32))
        } else {
            Err(Error::FieldMismatch {
                encoding,
                q: self.q,
            })
        }
    }

    pub fn contains(&self, a: Elem) -> bool {
        a.0 < self.q
    }

    /// All elements in increasing encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> {
        (1..self.q).map(Elem)
    }

    /// Coefficients of `a` in the basis 1, t, ..., t^(r-1).
    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        let mut e = a.0;
        (0..self.r)
            .map(|_| {
                let c = e % self.p;
                e /= self.p;
                c
            })
            .collect()
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.r as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::Parse {
                what: "element coefficients",
                input: format!("{coeffs:?}"),
            });
        }
        Ok(Elem(
            coeffs.iter().rev().fold(0u32, |acc, &d| acc * self.p + d),
        ))
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0, b.0);
        let (mut out, mut weight) = (0u32, 1u32);
        while x > 0 || y > 0 {
            out += ((x % self.p + y % self.p) % self.p) * weight;
            x /= self.p;
            y /= self.p;
            weight = weight.wrapping_mul(self.p);
        }
        Elem(out)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        let mut x = a.0;
        let (mut out, mut weight) = (0u32, 1u32);
        while x > 0 {
            out += ((self.p - x % self.p) % self.p) * weight;
            x /= self.p;
            weight = weight.wrapping_mul(self.p);
        }
        Elem(out)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        let group = self.q - 1;
        let k = (self.log[a.0 as usize] + self.log[b.0 as usize]) % group;
        Elem(self.exp[k as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let group = self.q - 1;
        let k = (group - self.log[a.0 as usize]) % group;
        Ok(Elem(self.exp[k as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`, with `0^0 = 1`.
    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let group = (self.q - 1) as u64;
        let k = (self.log[a.0 as usize] as u64 * (e % group)) % group;
        Elem(self.exp[k as usize])
    }

    /// `a^e` for any signed exponent; negative powers of zero fail.
    pub fn pow_signed(&self, a: Elem, e: i64) -> Result<Elem> {
        if e >= 0 {
            return Ok(self.pow(a, e as u64));
        }
        let inv = self.inv(a)?;
        Ok(self.pow(inv, e.unsigned_abs()))
    }

    pub fn pow_big(&self, a: Elem, e: &BigUint) -> Elem {
        let group = BigUint::from(self.q - 1);
        if e.bits() == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let reduced = u64::try_from(e % &group).expect("reduced below q - 1");
        let group = (self.q - 1) as u64;
        let k = (self.log[a.0 as usize] as u64 * reduced) % group;
        Elem(self.exp[k as usize])
    }

    /// `xi^k` for any k.
    pub fn xi_pow(&self, k: u64) -> Elem {
        Elem(self.exp[(k % (self.q - 1) as u64) as usize])
    }

    /// The exponent `i` in `0..q-1` with `xi^i = a`.
    pub fn discrete_log(&self, a: Elem) -> Result<u32> {
        if a.is_zero() {
            return Err(Error::ZeroArgument);
        }
        Ok(self.log[a.0 as usize])
    }

    pub fn multiplicative_order(&self, a: Elem) -> Result<u64> {
        let k = self.discrete_log(a)? as u64;
        let group = (self.q - 1) as u64;
        Ok(group / k.gcd(&group))
    }

    /// Renders `a` as a power of the primitive element: `0`, `1`, `xi^k`.
    pub fn pretty(&self, a: Elem) -> String {
        match self.discrete_log(a) {
            Err(_) => "0".to_string(),
            Ok(0) => "1".to_string(),
            Ok(1) => "ξ".to_string(),
            Ok(k) => format!("ξ^{k}"),
        }
    }
}

/// `(sum_{j < count} base^j) mod modulus` by binary doubling.
pub(crate) fn geometric_sum_mod(base: u64, count: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let b = base as u128 % m;
    // (sum of first k powers, base^k)
    let (mut sum, mut power) = (0u128, 1u128);
    for bit in (0..64).rev() {
        if (count >> bit) == 0 {
            continue;
        }
        sum = (sum + power * sum) % m;
        power = power * power % m;
        if (count >> bit) & 1 == 1 {
            sum = (sum + power) % m;
            power = power * b % m;
        }
    }
    sum as u64
}

fn pow_mod(base: u64, mut e: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut out = 1u128 % m;
    while e > 0 {
        if e & 1 == 1 {
            out = out * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    out as u64
}

/// The automorphism a -> a^(p^s) of GF(p^r).
#[derive(Clone, Debug)]
pub struct Automorphism {
    field: Arc<FiniteField>,
    s: u32,
    order: u32,
    /// `p^k mod (q-1)` for `0 <= k < r`.
    frob_exp: Vec<u64>,
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        self.s == other.s
            && (Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field)
    }
}

impl Eq for Automorphism {}

impl Automorphism {
    /// The Frobenius power a -> a^(p^s), `0 <= s < r`.
    pub fn frobenius(field: Arc<FiniteField>, s: u32) -> Result<Self> {
        let r = field.r;
        if s >= r {
            return Err(Error::ExponentOutOfRange { s, r });
        }
        let order = if s == 0 { 1 } else { r / s.gcd(&r) };
        let group = (field.q - 1) as u64;
        let frob_exp = (0..r)
            .map(|k| pow_mod(field.p as u64, k as u64, group.max(1)))
            .collect();
        Ok(Automorphism {
            field,
            s,
            order,
            frob_exp,
        })
    }

    pub fn identity(field: Arc<FiniteField>) -> Self {
        Self::frobenius(field, 0).expect("s = 0 is always in range")
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    /// The Frobenius exponent s.
    pub fn exponent(&self) -> u32 {
        self.s
    }

    /// The order m = r / gcd(r, s) of the automorphism (1 for the identity).
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_identity(&self) -> bool {
        self.s == 0
    }

    pub fn apply(&self, a: Elem) -> Elem {
        self.apply_pow(1, a)
    }

    /// sigma^j(a) = a^(p^(s j mod r)).
    pub fn apply_pow(&self, j: u64, a: Elem) -> Elem {
        if a.is_zero() || self.s == 0 {
            return a;
        }
        let r = self.field.r as u64;
        let k = (self.s as u64 * (j % r)) % r;
        if k == 0 {
            return a;
        }
        let f = &self.field;
        let group = (f.q - 1) as u64;
        let idx = (f.log[a.0 as usize] as u64 * self.frob_exp[k as usize]) % group;
        Elem(f.exp[idx as usize])
    }

    pub fn fixes(&self, a: Elem) -> bool {
        self.apply(a) == a
    }

    /// `{ a : sigma(a) = a }`, in encoding order.
    pub fn fixed_subfield(&self) -> Vec<Elem> {
        self.field.elements().filter(|&a| self.fixes(a)).collect()
    }

    /// `[i]_s = (p^(s i) - 1) / (p^s - 1)`, and `[i]_0 = i`.
    pub fn bracket(&self, i: u64) -> Result<BigUint> {
        if self.s == 0 {
            return Ok(BigUint::from(i));
        }
        let bits_per_digit = 32 - self.field.p.leading_zeros() as u64;
        if (self.s as u64)
            .checked_mul(i)
            .and_then(|x| x.checked_mul(bits_per_digit))
            .is_none_or(|bits| bits > MAX_BRACKET_BITS)
        {
            return Err(Error::IndexTooLarge(i));
        }
        let base = BigUint::from(self.field.p).pow(self.s);
        let exp = u32::try_from(i).map_err(|_| Error::IndexTooLarge(i))?;
        let one = BigUint::from(1u32);
        Ok((base.pow(exp) - &one) / (base - one))
    }

    /// `[i]_s mod modulus`, without big integers.
    pub fn bracket_mod(&self, i: u64, modulus: u64) -> u64 {
        let base = pow_mod(self.field.p as u64, self.s as u64, modulus.max(1));
        geometric_sum_mod(base, i, modulus.max(1))
    }

    /// `N_i(alpha)` via the closed form `alpha^([i]_s)`; `N_0 = 1` and
    /// `N_i(0) = 0` for `i >= 1`.
    pub fn norm(&self, i: u64, alpha: Elem) -> Elem {
        if i == 0 {
            return Elem::ONE;
        }
        if alpha.is_zero() {
            return Elem::ZERO;
        }
        let group = (self.field.q - 1) as u64;
        let e = self.bracket_mod(i, group);
        // e == 0 means the exponent is a positive multiple of q - 1.
        if e == 0 {
            return Elem::ONE;
        }
        self.field.pow(alpha, e)
    }

    /// `N_i(alpha) = sigma^(i-1)(alpha) ... sigma(alpha) alpha`.
    pub fn norm_product(&self, i: u64, alpha: Elem) -> Elem {
        (0..i).fold(Elem::ONE, |acc, j| {
            self.field.mul(self.apply_pow(j, alpha), acc)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32, r: u32) -> Arc<FiniteField> {
        Arc::new(FiniteField::new(p, r, None).unwrap())
    }

    #[test]
    fn prime_field_of_two() {
        let f = gf(2, 1);
        assert_eq!(f.q(), 2);
        assert_eq!(f.xi(), Elem::ONE);
        assert_eq!(f.add(Elem::ONE, Elem::ONE), Elem::ZERO);
    }

    #[test]
    fn gf4_with_explicit_modulus() {
        let f = FiniteField::with_packed_modulus(2, 2, 7).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        assert_eq!(f.xi(), Elem(2));
        // t^2 = t + 1, t^3 = 1
        assert_eq!(f.mul(Elem(2), Elem(2)), Elem(3));
        assert_eq!(f.inv(Elem(2)).unwrap(), Elem(3));
        assert_eq!(f.discrete_log(Elem(1)).unwrap(), 0);
        assert_eq!(f.discrete_log(Elem(2)).unwrap(), 1);
        assert_eq!(f.discrete_log(Elem(3)).unwrap(), 2);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            FiniteField::with_packed_modulus(2, 2, 5).unwrap_err(),
            Error::ReducibleModulus { p: 2 }
        );
        assert_eq!(
            FiniteField::new(4, 1, None).unwrap_err(),
            Error::NonPrimeCharacteristic(4)
        );
        assert!(matches!(
            FiniteField::with_packed_modulus(2, 3, 7).unwrap_err(),
            Error::DegreeMismatch { expected: 3, found: 2 }
        ));
        assert!(matches!(
            FiniteField::new(2, 17, None).unwrap_err(),
            Error::FieldTooLarge { .. }
        ));
        assert_eq!(
            FiniteField::new(3, 2, Some(&[1, 0, 2])).unwrap_err(),
            Error::NonMonicModulus
        );
    }

    #[test]
    fn default_moduli_are_low_degree_first_lexicographic() {
        assert_eq!(gf(2, 2).modulus(), &[1, 1, 1]);
        // 1 + t^2 + t^3 precedes 1 + t + t^3 when the constant term is
        // compared first.
        assert_eq!(gf(2, 3).modulus(), &[1, 0, 1, 1]);
        assert_eq!(gf(3, 2).modulus(), &[1, 0, 1]);
        // t^2 + 1 over GF(3): t has order 4, so xi = 1 + t (encoding 4)
        assert_eq!(gf(3, 2).xi(), Elem(4));
    }

    #[test]
    fn zero_inverse_and_field_mismatch() {
        let f = gf(2, 2);
        assert_eq!(f.inv(Elem::ZERO), Err(Error::ZeroInverse));
        assert_eq!(f.discrete_log(Elem::ZERO), Err(Error::ZeroArgument));
        assert!(matches!(f.elem(4), Err(Error::FieldMismatch { .. })));
        assert_eq!(f.pow_signed(Elem::ZERO, -1), Err(Error::ZeroInverse));
        assert_eq!(f.pow_signed(Elem(2), -1).unwrap(), Elem(3));
    }

    #[test]
    fn odd_characteristic_arithmetic() {
        let f = gf(5, 2);
        for a in f.elements() {
            assert_eq!(f.add(a, Elem::ZERO), a);
            assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
            }
        }
    }

    #[test]
    fn frobenius_orders() {
        let f4 = gf(2, 2);
        assert_eq!(Automorphism::frobenius(f4.clone(), 1).unwrap().order(), 2);
        assert_eq!(Automorphism::frobenius(f4.clone(), 0).unwrap().order(), 1);
        assert!(matches!(
            Automorphism::frobenius(f4, 2),
            Err(Error::ExponentOutOfRange { s: 2, r: 2 })
        ));
        let f8 = gf(2, 3);
        assert_eq!(Automorphism::frobenius(f8, 2).unwrap().order(), 3);
        let f16 = gf(2, 4);
        assert_eq!(Automorphism::frobenius(f16, 2).unwrap().order(), 2);
    }

    #[test]
    fn apply_and_fixed_subfield() {
        let f4 = gf(2, 2);
        let theta = Automorphism::frobenius(f4.clone(), 1).unwrap();
        assert_eq!(theta.apply(Elem(2)), Elem(3));
        assert_eq!(theta.apply(Elem::ZERO), Elem::ZERO);
        assert_eq!(theta.apply(Elem::ONE), Elem::ONE);
        assert_eq!(theta.fixed_subfield(), vec![Elem(0), Elem(1)]);
        let id = Automorphism::identity(f4.clone());
        assert_eq!(id.fixed_subfield().len(), 4);

        let f16 = gf(2, 4);
        let s2 = Automorphism::frobenius(f16.clone(), 2).unwrap();
        // exhaustive scan of a^4 = a
        let scan: Vec<_> = f16.elements().filter(|&a| f16.pow(a, 4) == a).collect();
        assert_eq!(scan.len(), 4);
        assert_eq!(s2.fixed_subfield(), scan);

        let f8 = gf(2, 3);
        let theta8 = Automorphism::frobenius(f8.clone(), 1).unwrap();
        for a in f8.elements() {
            assert_eq!(theta8.apply(theta8.apply(theta8.apply(a))), a);
        }
    }

    #[test]
    fn brackets() {
        let f4 = gf(2, 2);
        let theta = Automorphism::frobenius(f4.clone(), 1).unwrap();
        assert_eq!(theta.bracket(0).unwrap(), BigUint::from(0u32));
        assert_eq!(theta.bracket(1).unwrap(), BigUint::from(1u32));
        assert_eq!(theta.bracket(10).unwrap(), BigUint::from(1023u32));
        let f8 = gf(2, 3);
        let theta2 = Automorphism::frobenius(f8, 2).unwrap();
        assert_eq!(theta2.bracket(3).unwrap(), BigUint::from(21u32));
        let id = Automorphism::identity(f4);
        assert_eq!(id.bracket(7).unwrap(), BigUint::from(7u32));
        assert_eq!(id.bracket_mod(7, 3), 1);
        assert!(matches!(
            theta.bracket(u64::MAX),
            Err(Error::IndexTooLarge(_))
        ));
    }

    #[test]
    fn bracket_mod_matches_big_integers() {
        let f = gf(3, 2);
        for s in 0..2 {
            let aut = Automorphism::frobenius(f.clone(), s).unwrap();
            for i in 0..60 {
                for m in [1u64, 2, 7, 8, 80, 1000] {
                    let big = aut.bracket(i).unwrap() % BigUint::from(m);
                    assert_eq!(BigUint::from(aut.bracket_mod(i, m)), big, "s={s} i={i} m={m}");
                }
            }
        }
    }

    #[test]
    fn small_norms() {
        let f4 = gf(2, 2);
        let theta = Automorphism::frobenius(f4.clone(), 1).unwrap();
        let xi = f4.xi();
        assert_eq!(theta.norm(0, xi), Elem::ONE);
        assert_eq!(theta.norm(0, Elem::ZERO), Elem::ONE);
        assert_eq!(theta.norm(1, xi), xi);
        assert_eq!(theta.norm(2, xi), Elem::ONE);
        assert_eq!(theta.norm_product(2, xi), Elem::ONE);
        assert_eq!(theta.norm(3, Elem::ZERO), Elem::ZERO);
    }

    #[test]
    fn pretty_rendering() {
        let f4 = gf(2, 2);
        assert_eq!(f4.pretty(Elem(0)), "0");
        assert_eq!(f4.pretty(Elem(1)), "1");
        assert_eq!(f4.pretty(Elem(2)), "ξ");
        assert_eq!(f4.pretty(Elem(3)), "ξ^2");
    }

    #[test]
    fn designators() {
        assert_eq!(parse_designator("2^3").unwrap(), (2, 3));
        assert_eq!(parse_designator("7").unwrap(), (7, 1));
        assert!(parse_designator("x^2").is_err());
    }
}
