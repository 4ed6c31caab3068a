//! The (n, sigma)-equivalence relation on F_q^*.
//!
//! Two constants are equivalent, `lambda ~ mu`, when `lambda N_n(alpha) = mu`
//! for some nonzero `alpha`. Since `N_n(alpha) = alpha^([n]_s)`, the classes
//! are the cosets of the subgroup generated by `xi^([n]_s)`, and there are
//! `gcd([n]_s, q - 1)` of them. Equivalent constants give isometric families
//! of skew constacyclic codes; see [`crate::code::apply_isometry`].

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Automorphism, Elem, FiniteField};
use crate::skew::SkewPolynomial;

/// Parameters `(F_q, sigma, n)` with the derived class count and
/// `d = (q - 1) / class_count`.
#[derive(Clone, Debug)]
pub struct EquivalenceContext {
    aut: Arc<Automorphism>,
    n: u64,
    class_count: u64,
    d: u64,
}

/// Outcome of an equivalence query, with the verdict of each of the five
/// characterizations:
///
/// 1. a witness `alpha` with `lambda N_n(alpha) = mu` exists (exhaustive scan),
/// 2. some substitution `f(x) -> f(alpha x)` maps `x^n - mu` into the left
///    ideal generated by `x^n - lambda`,
/// 3. `lambda^-1 mu` lies in the subgroup generated by `N_n(xi)`,
/// 4. `lambda^-1 mu` lies in the subgroup generated by `xi^([n]_s)`,
/// 5. `(lambda^-1 mu)^d = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub equivalent: bool,
    pub witness: Option<Elem>,
    pub criterion_votes: [bool; 5],
}

impl EquivalenceReport {
    pub fn votes_agree(&self) -> bool {
        self.criterion_votes.iter().all(|&v| v == self.equivalent)
    }
}

fn nonzero(a: Elem) -> Result<Elem> {
    if a.is_zero() {
        Err(Error::ZeroConstant)
    } else {
        Ok(a)
    }
}

/// `gcd(b, m)` where `b = 0` stands for a positive multiple of `m`.
fn gcd_with_group(b: u64, m: u64) -> u64 {
    if b == 0 {
        m
    } else {
        b.gcd(&m)
    }
}

/// `N_n(alpha)` as the twisted product, folded over the period m of sigma:
/// `N_n = (sigma^(m-1)(a) ... a)^(n div m) * sigma^(r-1)(a) ... a` with
/// `r = n mod m`.
pub fn norm_by_periodic_product(aut: &Automorphism, n: u64, alpha: Elem) -> Elem {
    let field = aut.field();
    let m = aut.order() as u64;
    let full = aut.norm_product(m, alpha);
    let tail = aut.norm_product(n % m, alpha);
    field.mul(field.pow(full, n / m), tail)
}

impl EquivalenceContext {
    pub fn new(aut: &Arc<Automorphism>, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidLength);
        }
        let group = (aut.field().q() - 1) as u64;
        let class_count = gcd_with_group(aut.bracket_mod(n, group), group);
        Ok(EquivalenceContext {
            aut: Arc::clone(aut),
            n,
            class_count,
            d: group / class_count,
        })
    }

    pub fn automorphism(&self) -> &Arc<Automorphism> {
        &self.aut
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        self.aut.field()
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Number of equivalence classes, `gcd([n]_s, q - 1)`.
    pub fn class_count(&self) -> u64 {
        self.class_count
    }

    /// Order of the subgroup `<xi^([n]_s)>`, `(q - 1) / class_count`.
    pub fn d(&self) -> u64 {
        self.d
    }

    fn quotient(&self, lambda: Elem, mu: Elem) -> Result<Elem> {
        nonzero(lambda)?;
        nonzero(mu)?;
        self.field().div(mu, lambda)
    }

    /// Decides `lambda ~ mu` by testing `(lambda^-1 mu)^d = 1`.
    pub fn are_equivalent(&self, lambda: Elem, mu: Elem) -> Result<bool> {
        let ratio = self.quotient(lambda, mu)?;
        Ok(self.field().pow(ratio, self.d) == Elem::ONE)
    }

    /// The smallest-encoding `alpha` with `lambda N_n(alpha) = mu`, found by
    /// solving `[n]_s i = log(lambda^-1 mu) (mod q - 1)` for `alpha = xi^i`.
    pub fn find_witness(&self, lambda: Elem, mu: Elem) -> Result<Option<Elem>> {
        let field = self.field();
        let ratio = self.quotient(lambda, mu)?;
        let group = (field.q() - 1) as u64;
        let target = field.discrete_log(ratio)? as u64;
        let b = self.aut.bracket_mod(self.n, group);
        let g = gcd_with_group(b, group);
        if !target.is_multiple_of(g) {
            return Ok(None);
        }
        let step = group / g;
        let base = if step == 1 {
            0
        } else {
            let inv = mod_inverse((b / g) % step, step).expect("b / g is a unit modulo step");
            ((target / g) % step) as u128 * inv as u128 % step as u128
        } as u64;
        let best = (0..g)
            .map(|k| field.xi_pow(base + k * step))
            .min()
            .expect("at least one solution");
        debug_assert_eq!(field.mul(lambda, self.aut.norm(self.n, best)), mu);
        Ok(Some(best))
    }

    /// Criterion 1: exhaustive search for a witness.
    pub fn criterion_witness_scan(&self, lambda: Elem, mu: Elem) -> Result<bool> {
        self.quotient(lambda, mu)?;
        let field = self.field();
        Ok(field.nonzero_elements().any(|alpha| {
            field.mul(lambda, norm_by_periodic_product(&self.aut, self.n, alpha)) == mu
        }))
    }

    /// Criterion 2: some `alpha` makes `f(x) -> f(alpha x)` carry the relation
    /// `x^n - mu` into the left ideal of `x^n - lambda`. Cost grows as `q n`.
    pub fn criterion_substitution(&self, lambda: Elem, mu: Elem) -> Result<bool> {
        self.quotient(lambda, mu)?;
        let n = usize::try_from(self.n).map_err(|_| Error::IndexTooLarge(self.n))?;
        let source = SkewPolynomial::binomial(&self.aut, n, mu);
        let target = SkewPolynomial::binomial(&self.aut, n, lambda);
        for alpha in self.field().nonzero_elements() {
            let image = source.substitute_scale(alpha);
            if target.is_right_divisor(&image)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Criterion 3: `lambda^-1 mu` in `<N_n(xi)>`, via discrete logarithms.
    pub fn criterion_norm_subgroup(&self, lambda: Elem, mu: Elem) -> Result<bool> {
        let ratio = self.quotient(lambda, mu)?;
        let field = self.field();
        let group = (field.q() - 1) as u64;
        let generator = norm_by_periodic_product(&self.aut, self.n, field.xi());
        let e = field.discrete_log(generator)? as u64;
        let g = gcd_with_group(e, group);
        Ok((field.discrete_log(ratio)? as u64).is_multiple_of(g))
    }

    /// Criterion 4: `lambda^-1 mu` in `<xi^([n]_s)>`, by generating the
    /// cyclic subgroup element by element.
    pub fn criterion_bracket_subgroup(&self, lambda: Elem, mu: Elem) -> Result<bool> {
        let ratio = self.quotient(lambda, mu)?;
        Ok(self.bracket_subgroup().contains(&ratio))
    }

    /// Criterion 5, identical to [`Self::are_equivalent`].
    pub fn criterion_order(&self, lambda: Elem, mu: Elem) -> Result<bool> {
        self.are_equivalent(lambda, mu)
    }

    /// The subgroup `<xi^([n]_s)>` listed by successive powers.
    pub fn bracket_subgroup(&self) -> Vec<Elem> {
        let field = self.field();
        let group = (field.q() - 1) as u64;
        let generator = field.xi_pow(self.aut.bracket_mod(self.n, group));
        let mut out = vec![Elem::ONE];
        let mut cur = generator;
        while cur != Elem::ONE {
            out.push(cur);
            cur = field.mul(cur, generator);
        }
        out
    }

    /// The image `{ N_n(alpha) : alpha in F_q^* }`, sorted.
    pub fn norm_image(&self) -> Vec<Elem> {
        let mut image: Vec<Elem> = self
            .field()
            .nonzero_elements()
            .map(|a| self.aut.norm(self.n, a))
            .collect();
        image.sort();
        image.dedup();
        image
    }

    /// Evaluates all five characterizations. Criterion 2 divides polynomials
    /// of degree n for every nonzero alpha.
    pub fn report(&self, lambda: Elem, mu: Elem) -> Result<EquivalenceReport> {
        let equivalent = self.are_equivalent(lambda, mu)?;
        let witness = self.find_witness(lambda, mu)?;
        let criterion_votes = [
            self.criterion_witness_scan(lambda, mu)?,
            self.criterion_substitution(lambda, mu)?,
            self.criterion_norm_subgroup(lambda, mu)?,
            self.criterion_bracket_subgroup(lambda, mu)?,
            self.criterion_order(lambda, mu)?,
        ];
        Ok(EquivalenceReport {
            equivalent,
            witness,
            criterion_votes,
        })
    }

    /// Canonical class representatives `xi^0, ..., xi^(c-1)`.
    pub fn class_representatives(&self) -> Vec<Elem> {
        (0..self.class_count)
            .map(|j| self.field().xi_pow(j))
            .collect()
    }

    /// The unique `j` with `lambda` in `xi^j <N_n(xi)>`.
    pub fn classify(&self, lambda: Elem) -> Result<u64> {
        nonzero(lambda)?;
        let field = self.field();
        let j = field.discrete_log(lambda)? as u64 % self.class_count;
        assert!(
            self.are_equivalent(field.xi_pow(j), lambda)?,
            "coset index disagrees with the order test"
        );
        Ok(j)
    }

    /// Whether skew (sigma, lambda)-constacyclic codes of length n are
    /// equivalent to skew cyclic ones: `lambda^d = 1`.
    pub fn scalar_equivalent_to_cyclic(&self, lambda: Elem) -> Result<bool> {
        nonzero(lambda)?;
        Ok(self.field().pow(lambda, self.d) == Elem::ONE)
    }

    /// All `mu` equivalent to `lambda`, in encoding order.
    pub fn class_of(&self, lambda: Elem) -> Result<Vec<Elem>> {
        nonzero(lambda)?;
        let mut out = Vec::new();
        for mu in self.field().nonzero_elements() {
            if self.are_equivalent(lambda, mu)? {
                out.push(mu);
            }
        }
        Ok(out)
    }
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let e = (a as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i128) as u64)
}

/// Class count from the exact big-integer bracket, `gcd([n]_s, q - 1)`.
pub fn class_count_exact(aut: &Automorphism, n: u64) -> Result<u64> {
    let group = BigUint::from(aut.field().q() - 1);
    let g = aut.bracket(n)?.gcd(&group);
    Ok(u64::try_from(g).expect("divides q - 1"))
}

/// `2^gcd(n, r) - 1`, the class count over GF(2^r) with sigma the Frobenius map.
pub fn binary_class_count(n: u64, r: u32) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidLength);
    }
    let g = n.gcd(&(r as u64));
    if g >= 64 {
        return Err(Error::IndexTooLarge(g));
    }
    Ok((1u64 << g) - 1)
}

/// The closed-form class count predicted for characteristic 2 when
/// `gcd(s, r) = 1`: `gcd([n]_s, 2^r - 1) = 2^gcd(n, r) - 1`.
pub fn predicted_binary_class_count(aut: &Automorphism, n: u64) -> Option<u64> {
    let field = aut.field();
    let s = aut.exponent() as u64;
    let r = field.r() as u64;
    if field.p() != 2 || s.gcd(&r) != 1 {
        return None;
    }
    binary_class_count(n, field.r()).ok()
}

/// Class counts for every `n` in `from..=to`, using the recurrence
/// `[n + 1]_s = 1 + p^s [n]_s` modulo `q - 1`.
pub fn sweep_class_counts(aut: &Automorphism, from: u64, to: u64) -> Vec<u64> {
    let field = aut.field();
    let group = (field.q() - 1) as u64;
    if from > to {
        return Vec::new();
    }
    let ps = (field.p() as u64).pow(aut.exponent()) % group.max(1);
    let mut b = aut.bracket_mod(from, group);
    let mut out = Vec::with_capacity((to - from + 1) as usize);
    for _ in from..=to {
        out.push(gcd_with_group(b, group));
        b = (1 + ps as u128 * b as u128 % group.max(1) as u128) as u64 % group.max(1);
    }
    out
}

/// Summary of a sweep: how often each class count occurs and the lengths
/// where the characteristic-2 closed form (when it applies) is violated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub field: String,
    pub s: u32,
    pub from: u64,
    pub to: u64,
    pub histogram: BTreeMap<u64, u64>,
    pub pattern_checked: bool,
    pub violations: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counts: Option<Vec<u64>>,
}

/// Sweeps `from..=to`, keeping the per-n table when it has at most
/// `keep_rows` entries.
pub fn sweep(aut: &Automorphism, from: u64, to: u64, keep_rows: usize) -> SweepSummary {
    let counts = sweep_class_counts(aut, from, to);
    let mut histogram = BTreeMap::new();
    for &c in &counts {
        *histogram.entry(c).or_insert(0) += 1;
    }
    let pattern_checked = predicted_binary_class_count(aut, 1).is_some();
    let violations = if pattern_checked {
        counts
            .iter()
            .zip(from..)
            .filter(|&(&c, n)| predicted_binary_class_count(aut, n) != Some(c))
            .map(|(_, n)| n)
            .collect()
    } else {
        Vec::new()
    };
    SweepSummary {
        field: aut.field().designator(),
        s: aut.exponent(),
        from,
        to,
        histogram,
        pattern_checked,
        violations,
        counts: (counts.len() <= keep_rows).then_some(counts),
    }
}

/// JSON form of a classification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceJson {
    pub field: String,
    pub s: u32,
    pub n: u64,
    pub class_count: u64,
    pub d: u64,
    pub representatives: Vec<u32>,
    pub queries: Vec<QueryJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryJson {
    pub lambda: u32,
    pub mu: u32,
    pub equivalent: bool,
    pub witness: Option<u32>,
}

impl EquivalenceContext {
    pub fn to_json(&self, queries: &[(Elem, Elem)]) -> Result<EquivalenceJson> {
        let queries = queries
            .iter()
            .map(|&(lambda, mu)| {
                let witness = self.find_witness(lambda, mu)?;
                Ok(QueryJson {
                    lambda: lambda.encoding(),
                    mu: mu.encoding(),
                    equivalent: self.are_equivalent(lambda, mu)?,
                    witness: witness.map(Elem::encoding),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(EquivalenceJson {
            field: self.field().designator(),
            s: self.aut.exponent(),
            n: self.n,
            class_count: self.class_count,
            d: self.d,
            representatives: self
                .class_representatives()
                .into_iter()
                .map(Elem::encoding)
                .collect(),
            queries,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aut(p: u32, r: u32, s: u32) -> Arc<Automorphism> {
        let f = Arc::new(FiniteField::new(p, r, None).unwrap());
        Arc::new(Automorphism::frobenius(f, s).unwrap())
    }

    #[test]
    fn class_counts_from_examples() {
        assert_eq!(EquivalenceContext::new(&aut(2, 2, 1), 2).unwrap().class_count(), 3);
        assert_eq!(EquivalenceContext::new(&aut(2, 3, 1), 3).unwrap().class_count(), 7);
        let ctx = EquivalenceContext::new(&aut(3, 2, 1), 2).unwrap();
        assert_eq!(ctx.class_count(), 4);
        assert_eq!(ctx.d(), 2);
        // image of N_2 on F_9^* has 2 elements, index 4
        assert_eq!(ctx.norm_image().len() as u64 * ctx.class_count(), 8);
        assert_eq!(
            EquivalenceContext::new(&aut(2, 2, 1), 0).unwrap_err(),
            Error::InvalidLength
        );
    }

    #[test]
    fn gf4_equivalence_queries() {
        let a = aut(2, 2, 1);
        let xi = a.field().xi();
        let even = EquivalenceContext::new(&a, 2).unwrap();
        assert!(even.are_equivalent(xi, xi).unwrap());
        assert!(!even.are_equivalent(Elem::ONE, xi).unwrap());
        assert_eq!(even.find_witness(Elem::ONE, xi).unwrap(), None);
        assert_eq!(even.find_witness(xi, xi).unwrap(), Some(Elem::ONE));
        for n in [1u64, 3, 5, 7] {
            let odd = EquivalenceContext::new(&a, n).unwrap();
            for l in a.field().nonzero_elements() {
                for m in a.field().nonzero_elements() {
                    assert!(odd.are_equivalent(l, m).unwrap());
                }
            }
        }
        let three = EquivalenceContext::new(&a, 3).unwrap();
        assert_eq!(three.find_witness(Elem::ONE, xi).unwrap(), Some(xi));
        assert_eq!(
            even.are_equivalent(Elem::ZERO, xi).unwrap_err(),
            Error::ZeroConstant
        );
    }

    #[test]
    fn representatives_and_classification() {
        let a = aut(2, 2, 1);
        let f = a.field().clone();
        let ctx = EquivalenceContext::new(&a, 4).unwrap();
        assert_eq!(ctx.class_representatives(), vec![Elem(1), Elem(2), Elem(3)]);
        assert_eq!(ctx.classify(Elem::ONE).unwrap(), 0);
        assert_eq!(ctx.classify(f.xi_pow(2)).unwrap(), 2);
        let single = EquivalenceContext::new(&a, 1).unwrap();
        assert_eq!(single.class_representatives(), vec![Elem::ONE]);

        let a8 = aut(2, 3, 1);
        let ctx8 = EquivalenceContext::new(&a8, 3).unwrap();
        let mut reps = ctx8.class_representatives();
        reps.sort();
        assert_eq!(reps, a8.field().nonzero_elements().collect::<Vec<_>>());
        let ctx8_2 = EquivalenceContext::new(&a8, 2).unwrap();
        for l in a8.field().nonzero_elements() {
            assert_eq!(ctx8_2.classify(l).unwrap(), 0);
        }
    }

    #[test]
    fn cyclic_reduction_examples() {
        let a = aut(2, 2, 1);
        let ctx = EquivalenceContext::new(&a, 2).unwrap();
        assert!(ctx.scalar_equivalent_to_cyclic(Elem::ONE).unwrap());
        assert!(!ctx.scalar_equivalent_to_cyclic(a.field().xi()).unwrap());

        // F_9, n = 2: the class of 1 is {1, -1} = {xi^0, xi^4}; xi^2 is outside.
        let a9 = aut(3, 2, 1);
        let ctx9 = EquivalenceContext::new(&a9, 2).unwrap();
        let xi2 = a9.field().xi_pow(2);
        let brute = a9
            .field()
            .nonzero_elements()
            .any(|alpha| a9.norm_product(2, alpha) == xi2);
        assert!(!brute);
        assert!(!ctx9.scalar_equivalent_to_cyclic(xi2).unwrap());
        assert_eq!(
            ctx9.class_of(Elem::ONE).unwrap(),
            vec![Elem::ONE, a9.field().xi_pow(4)]
        );
    }

    #[test]
    fn binary_counts() {
        assert_eq!(binary_class_count(5, 2).unwrap(), 1);
        assert_eq!(binary_class_count(6, 3).unwrap(), 7);
        assert_eq!(binary_class_count(6, 4).unwrap(), 3);
    }

    #[test]
    fn sweeps_follow_examples() {
        let a = aut(2, 3, 2);
        assert_eq!(
            sweep_class_counts(&a, 1, 12),
            vec![1, 1, 7, 1, 1, 7, 1, 1, 7, 1, 1, 7]
        );
        assert_eq!(sweep_class_counts(&aut(2, 2, 1), 1, 6), vec![1, 3, 1, 3, 1, 3]);
        // [4]_1 = 40 and gcd(40, 8) = 8
        assert_eq!(sweep_class_counts(&aut(3, 2, 1), 1, 4), vec![1, 4, 1, 8]);
        let summary = sweep(&a, 1, 30, 100);
        assert!(summary.pattern_checked);
        assert!(summary.violations.is_empty());
        assert_eq!(summary.histogram[&7], 10);
        assert_eq!(summary.counts.as_ref().unwrap().len(), 30);
    }

    #[test]
    fn exact_and_modular_counts_agree() {
        for (p, r) in [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3)] {
            for s in 0..r {
                let a = aut(p, r, s);
                for n in 1..40 {
                    let ctx = EquivalenceContext::new(&a, n).unwrap();
                    assert_eq!(ctx.class_count(), class_count_exact(&a, n).unwrap());
                }
            }
        }
    }

    #[test]
    fn report_votes_agree() {
        let a = aut(2, 2, 1);
        let ctx = EquivalenceContext::new(&a, 2).unwrap();
        let rep = ctx.report(Elem::ONE, Elem(2)).unwrap();
        assert!(!rep.equivalent);
        assert!(rep.votes_agree());
        let rep = ctx.report(Elem(3), Elem(3)).unwrap();
        assert!(rep.equivalent && rep.votes_agree());
        assert_eq!(rep.witness, Some(Elem::ONE));
    }

    #[test]
    fn json_shape() {
        let a = aut(2, 2, 1);
        let ctx = EquivalenceContext::new(&a, 3).unwrap();
        let json = ctx.to_json(&[(Elem(1), Elem(2))]).unwrap();
        let text = serde_json::to_string(&json).unwrap();
        assert_eq!(
            text,
            r#"{"field":"2^2","s":1,"n":3,"class_count":1,"d":3,"representatives":[1],"queries":[{"lambda":1,"mu":2,"equivalent":true,"witness":2}]}"#
        );
    }
}
