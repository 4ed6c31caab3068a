//! Skew (sigma, lambda)-constacyclic codes as concrete linear codes.
//!
//! A code of length n is the left ideal of `F_q[x, sigma] / <x^n - lambda>`
//! generated by a monic right divisor `g` of `x^n - lambda`. Its dimension is
//! `n - deg g` and its generator matrix is the staircase whose row i holds
//! `sigma^i(g_j)` in column `i + j`.
//!
//! Minimum distance, weight distributions and closure under the exhaustive
//! path are computed by brute-force enumeration, bounded by an explicit
//! [`EnumerationBudget`]; exceeding it is an error, never a truncation.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Automorphism, Elem, FiniteField};
use crate::linalg::RowSpace;
use crate::skew::{right_rem_monic_into, SkewPolynomial};

/// Limits on brute-force enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Maximum number of codewords `q^k` to enumerate.
    pub codewords: u64,
    /// Maximum number of monic candidates `q^deg` scanned per divisor degree.
    pub divisor_candidates: u64,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            codewords: 1 << 24,
            divisor_candidates: 1 << 20,
        }
    }
}

fn check_budget(q: u32, exponent: usize, budget: u64) -> Result<u64> {
    let required = (q as u128).checked_pow(exponent as u32).unwrap_or(u128::MAX);
    if required > budget as u128 {
        return Err(Error::EnumerationBudgetExceeded { required, budget });
    }
    Ok(required as u64)
}

/// A vector of F_q^n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword(pub Vec<Elem>);

impl Codeword {
    pub fn zero(n: usize) -> Self {
        Codeword(vec![Elem::ZERO; n])
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn coords(&self) -> &[Elem] {
        &self.0
    }
}

/// The shift operators a code can be tested against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shift {
    /// `T_{sigma,lambda}(v) = (lambda sigma(v_{n-1}), sigma(v_0), ..., sigma(v_{n-2}))`.
    Skew,
    /// `T_lambda(v) = (lambda v_{n-1}, v_0, ..., v_{n-2})`.
    Classical,
    /// `T_lambda` applied the given number of times.
    ClassicalPower(usize),
}

/// The ambient quotient `F_q[x, sigma] / <x^n - lambda>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeContext {
    aut: Arc<Automorphism>,
    n: usize,
    lambda: Elem,
}

impl CodeContext {
    pub fn new(aut: &Arc<Automorphism>, n: usize, lambda: Elem) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidLength);
        }
        if lambda.is_zero() {
            return Err(Error::ZeroConstant);
        }
        if !aut.field().contains(lambda) {
            return Err(Error::FieldMismatch {
                encoding: lambda.encoding() as u64,
                q: aut.field().q(),
            });
        }
        Ok(CodeContext {
            aut: Arc::clone(aut),
            n,
            lambda,
        })
    }

    pub fn automorphism(&self) -> &Arc<Automorphism> {
        &self.aut
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        self.aut.field()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> Elem {
        self.lambda
    }

    /// `x^n - lambda`.
    pub fn modulus(&self) -> SkewPolynomial {
        SkewPolynomial::binomial(&self.aut, self.n, self.lambda)
    }

    pub fn lambda_is_fixed(&self) -> bool {
        self.aut.fixes(self.lambda)
    }

    fn check_len(&self, v: &[Elem]) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// The (sigma, lambda)-constacyclic shift.
    pub fn skew_shift(&self, v: &[Elem]) -> Result<Codeword> {
        self.check_len(v)?;
        let field = self.field();
        let n = self.n;
        let mut out = Vec::with_capacity(n);
        out.push(field.mul(self.lambda, self.aut.apply(v[n - 1])));
        out.extend(v[..n - 1].iter().map(|&c| self.aut.apply(c)));
        Ok(Codeword(out))
    }

    /// The lambda-constacyclic shift, with no automorphism applied.
    pub fn classical_shift(&self, v: &[Elem]) -> Result<Codeword> {
        self.check_len(v)?;
        let n = self.n;
        let mut out = Vec::with_capacity(n);
        out.push(self.field().mul(self.lambda, v[n - 1]));
        out.extend_from_slice(&v[..n - 1]);
        Ok(Codeword(out))
    }

    pub fn shift(&self, op: Shift, v: &[Elem]) -> Result<Codeword> {
        match op {
            Shift::Skew => self.skew_shift(v),
            Shift::Classical => self.classical_shift(v),
            Shift::ClassicalPower(times) => {
                self.check_len(v)?;
                let mut cur = Codeword(v.to_vec());
                for _ in 0..times {
                    cur = self.classical_shift(&cur.0)?;
                }
                Ok(cur)
            }
        }
    }
}

/// Result of checking one of the structural reduction statements on a code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verification {
    /// Whether the code is closed under the relevant classical shift power.
    pub closed: bool,
    /// Whether the statement's hypotheses hold; when false, `closed` is the
    /// raw closure verdict and carries no guarantee.
    pub hypotheses_hold: bool,
    /// The shift power tested (1 for plain constacyclicity).
    pub index: usize,
}

/// A skew (sigma, lambda)-constacyclic code with its monic generator.
#[derive(Clone, Debug)]
pub struct SkewConstacyclicCode {
    ctx: CodeContext,
    generator: SkewPolynomial,
    matrix: Vec<Vec<Elem>>,
    space: RowSpace,
}

impl PartialEq for SkewConstacyclicCode {
    /// Codes are equal when they live in the same quotient and span the
    /// same subspace.
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.space == other.space
    }
}

impl Eq for SkewConstacyclicCode {}

impl SkewConstacyclicCode {
    /// Builds the code generated by `g`, after left-scaling it to be monic.
    pub fn new(ctx: &CodeContext, g: &SkewPolynomial) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        if **g.automorphism() != *ctx.aut {
            return Err(Error::AutomorphismMismatch);
        }
        let g = g.monic()?;
        let deg = g.degree().expect("nonzero");
        if deg > ctx.n || !g.is_right_divisor(&ctx.modulus())? {
            return Err(Error::NotARightDivisor { n: ctx.n });
        }
        let k = ctx.n - deg;
        let field = ctx.field();
        let matrix: Vec<Vec<Elem>> = (0..k)
            .map(|i| {
                let mut row = vec![Elem::ZERO; ctx.n];
                for (j, &gj) in g.coeffs().iter().enumerate() {
                    row[i + j] = ctx.aut.apply_pow(i as u64, gj);
                }
                row
            })
            .collect();
        let space = RowSpace::from_rows(field, ctx.n, &matrix);
        debug_assert_eq!(space.rank(), k);
        Ok(SkewConstacyclicCode {
            ctx: ctx.clone(),
            generator: g,
            matrix,
            space,
        })
    }

    pub fn context(&self) -> &CodeContext {
        &self.ctx
    }

    pub fn generator(&self) -> &SkewPolynomial {
        &self.generator
    }

    pub fn length(&self) -> usize {
        self.ctx.n
    }

    pub fn dimension(&self) -> usize {
        self.matrix.len()
    }

    /// The k x n staircase generator matrix.
    pub fn generator_matrix(&self) -> Result<&[Vec<Elem>]> {
        if self.matrix.is_empty() {
            return Err(Error::ZeroDimensional);
        }
        Ok(&self.matrix)
    }

    /// Reduced row echelon form of the generator matrix, the code's identity.
    pub fn canonical_form(&self) -> &[Vec<Elem>] {
        self.space.rows()
    }

    pub fn rank(&self) -> usize {
        self.space.rank()
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        self.space.contains(self.ctx.field(), v)
    }

    /// Closure under a (semi)linear shift, checked on the generator rows:
    /// each operator is additive and maps `a u` to `tau(a) T(u)`, so the
    /// images of the rows span the image of the code.
    pub fn is_closed_under(&self, op: Shift) -> bool {
        self.matrix.iter().all(|row| {
            let image = self.ctx.shift(op, row).expect("rows have length n");
            self.contains(&image.0)
        })
    }

    /// Closure checked on every codeword.
    pub fn is_closed_under_exhaustive(&self, op: Shift, budget: &EnumerationBudget) -> Result<bool> {
        for c in self.codewords(budget)? {
            if !self.contains(&self.ctx.shift(op, &c.0)?.0) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether the code is an ordinary lambda-constacyclic code; guaranteed
    /// when `gcd(m, n) = 1` and `sigma(lambda) = lambda`.
    pub fn verify_reduction_to_constacyclic(&self) -> Verification {
        let m = self.ctx.aut.order() as usize;
        Verification {
            closed: self.is_closed_under(Shift::Classical),
            hypotheses_hold: m.gcd(&self.ctx.n) == 1 && self.ctx.lambda_is_fixed(),
            index: 1,
        }
    }

    /// Whether the code is quasi-twisted of index `gcd(m, n)` with shift
    /// constant lambda; guaranteed when `sigma(lambda) = lambda`.
    pub fn verify_quasi_twisted(&self) -> Verification {
        let index = (self.ctx.aut.order() as usize).gcd(&self.ctx.n);
        Verification {
            closed: self.is_closed_under(Shift::ClassicalPower(index)),
            hypotheses_hold: self.ctx.lambda_is_fixed(),
            index,
        }
    }

    /// All `q^k` codewords, as combinations of the generator rows with
    /// coefficient vectors in increasing encoding order.
    pub fn codewords(&self, budget: &EnumerationBudget) -> Result<Codewords<'_>> {
        let total = check_budget(self.ctx.field().q(), self.dimension(), budget.codewords)?;
        Ok(Codewords::new(self, total))
    }

    pub fn weight_distribution(&self, budget: &EnumerationBudget) -> Result<Vec<u64>> {
        let mut dist = vec![0u64; self.length() + 1];
        for c in self.codewords(budget)? {
            dist[c.weight()] += 1;
        }
        Ok(dist)
    }

    /// Minimum Hamming weight of a nonzero codeword.
    pub fn min_distance(&self, budget: &EnumerationBudget) -> Result<usize> {
        if self.dimension() == 0 {
            return Err(Error::ZeroDimensional);
        }
        let dist = self.weight_distribution(budget)?;
        Ok(dist
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &count)| count > 0)
            .map(|(w, _)| w)
            .expect("a nonzero code has a nonzero codeword"))
    }

    pub fn matrix_encodings(&self) -> Vec<Vec<u32>> {
        self.matrix
            .iter()
            .map(|row| row.iter().map(|c| c.encoding()).collect())
            .collect()
    }

    pub fn descriptor(&self, budget: &EnumerationBudget) -> Result<CodeDescriptor> {
        let weight_distribution = self.weight_distribution(budget)?;
        let d_min = weight_distribution
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &count)| count > 0)
            .map(|(w, _)| w);
        Ok(CodeDescriptor {
            field: self.ctx.field().designator(),
            s: self.ctx.aut.exponent(),
            n: self.ctx.n,
            lambda: self.ctx.lambda.encoding(),
            g: self.generator.coeffs().iter().map(|c| c.encoding()).collect(),
            k: self.dimension(),
            d_min,
            weight_distribution,
        })
    }
}

/// Iterator over the codewords of a code.
pub struct Codewords<'a> {
    code: &'a SkewConstacyclicCode,
    digits: Vec<u32>,
    /// `partial[i] = sum_{j >= i} digits[j] row_j`; `partial[k]` is zero.
    partial: Vec<Vec<Elem>>,
    remaining: u64,
}

impl<'a> Codewords<'a> {
    fn new(code: &'a SkewConstacyclicCode, total: u64) -> Self {
        let k = code.dimension();
        Codewords {
            code,
            digits: vec![0; k],
            partial: vec![vec![Elem::ZERO; code.length()]; k + 1],
            remaining: total,
        }
    }

    fn refresh_from(&mut self, top: usize) {
        let field = self.code.ctx.field();
        for i in (0..=top).rev() {
            let coeff = Elem(self.digits[i]);
            let (lower, upper) = self.partial.split_at_mut(i + 1);
            let next = &upper[0];
            let row = &self.code.matrix[i];
            for ((out, &acc), &r) in lower[i].iter_mut().zip(next).zip(row) {
                *out = field.add(acc, field.mul(coeff, r));
            }
        }
    }
}

impl Iterator for Codewords<'_> {
    type Item = Codeword;

    fn next(&mut self) -> Option<Codeword> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let word = Codeword(self.partial[0].clone());
        if self.remaining > 0 {
            let q = self.code.ctx.field().q();
            let mut i = 0;
            loop {
                self.digits[i] += 1;
                if self.digits[i] < q {
                    break;
                }
                self.digits[i] = 0;
                i += 1;
            }
            // digits below i reset to zero; digit i advanced
            self.refresh_from(i);
        }
        Some(word)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (n, Some(n))
    }
}

/// JSON form of a code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub field: String,
    pub s: u32,
    pub n: usize,
    pub lambda: u32,
    pub g: Vec<u32>,
    pub k: usize,
    pub d_min: Option<usize>,
    pub weight_distribution: Vec<u64>,
}

/// Codeword-level action of `f(x) -> f(alpha x)`: `c_j -> N_j(alpha) c_j`.
pub fn isometry_codeword(aut: &Automorphism, alpha: Elem, c: &Codeword) -> Codeword {
    let field = aut.field();
    Codeword(
        c.0.iter()
            .enumerate()
            .map(|(j, &cj)| field.mul(aut.norm(j as u64, alpha), cj))
            .collect(),
    )
}

/// Maps a code over `x^n - mu` to the code over `x^n - lambda` generated by
/// `g(alpha x)`, where `lambda N_n(alpha) = mu`.
pub fn apply_isometry(
    code: &SkewConstacyclicCode,
    lambda: Elem,
    alpha: Elem,
) -> Result<SkewConstacyclicCode> {
    let source = code.context();
    let aut = source.automorphism();
    let field = aut.field();
    if lambda.is_zero() {
        return Err(Error::ZeroConstant);
    }
    if field.mul(lambda, aut.norm(source.n as u64, alpha)) != source.lambda {
        return Err(Error::WitnessConditionViolated);
    }
    let target = CodeContext::new(aut, source.n, lambda)?;
    let image = code.generator().substitute_scale(alpha).monic()?;
    SkewConstacyclicCode::new(&target, &image)
}

/// Invariants compared between a code and its image under the isometry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsometryCheck {
    pub same_dimension: bool,
    pub same_min_distance: bool,
    pub same_weight_distribution: bool,
    pub generator_divides: bool,
    /// Every source codeword, scaled coordinate-wise, lies in the image code.
    pub codeword_map_consistent: bool,
}

impl IsometryCheck {
    pub fn all_hold(&self) -> bool {
        self.same_dimension
            && self.same_min_distance
            && self.same_weight_distribution
            && self.generator_divides
            && self.codeword_map_consistent
    }
}

pub fn check_isometry(
    source: &SkewConstacyclicCode,
    image: &SkewConstacyclicCode,
    alpha: Elem,
    budget: &EnumerationBudget,
) -> Result<IsometryCheck> {
    let aut = source.context().automorphism();
    let wd_source = source.weight_distribution(budget)?;
    let wd_image = image.weight_distribution(budget)?;
    let first_nonzero = |wd: &[u64]| wd.iter().skip(1).position(|&c| c > 0);
    let mut consistent = true;
    for c in source.codewords(budget)? {
        if !image.contains(&isometry_codeword(aut, alpha, &c).0) {
            consistent = false;
            break;
        }
    }
    Ok(IsometryCheck {
        same_dimension: source.dimension() == image.dimension(),
        same_min_distance: first_nonzero(&wd_source) == first_nonzero(&wd_image),
        same_weight_distribution: wd_source == wd_image,
        generator_divides: image
            .generator()
            .is_right_divisor(&image.context().modulus())?,
        codeword_map_consistent: consistent,
    })
}

/// Monic right divisors of `x^n - lambda` of the given degree, or of every
/// degree `0..=n`, ordered by degree and then by coefficient sequence read
/// from the constant term up.
pub fn enumerate_right_divisors(
    ctx: &CodeContext,
    degree: Option<usize>,
    budget: &EnumerationBudget,
) -> Result<Vec<SkewPolynomial>> {
    let degrees: Vec<usize> = match degree {
        Some(d) if d > ctx.n => return Ok(Vec::new()),
        Some(d) => vec![d],
        None => (0..=ctx.n).collect(),
    };
    for &d in &degrees {
        if d != 0 && d != ctx.n {
            check_budget(ctx.field().q(), d, budget.divisor_candidates)?;
        }
    }
    let mut out = Vec::new();
    for d in degrees {
        divisors_of_degree(ctx, d, &mut out);
    }
    Ok(out)
}

fn divisors_of_degree(ctx: &CodeContext, d: usize, out: &mut Vec<SkewPolynomial>) {
    let aut = &ctx.aut;
    if d == 0 {
        out.push(SkewPolynomial::one(aut));
        return;
    }
    if d == ctx.n {
        out.push(ctx.modulus());
        return;
    }
    let q = ctx.field().q();
    let f = ctx.modulus();
    let mut candidate = vec![Elem::ZERO; d + 1];
    candidate[d] = Elem::ONE;
    let mut scratch = Vec::with_capacity(ctx.n + 1);
    loop {
        right_rem_monic_into(aut, f.coeffs(), &candidate, &mut scratch);
        if scratch.is_empty() {
            out.push(SkewPolynomial::new(aut, candidate.clone()));
        }
        // odometer with the constant term as the most significant digit
        let mut i = d;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            let next = candidate[i].encoding() + 1;
            if next < q {
                candidate[i] = Elem(next);
                break;
            }
            candidate[i] = Elem::ZERO;
        }
    }
}

/// One code per monic right divisor of `x^n - lambda`.
pub fn enumerate_codes(
    ctx: &CodeContext,
    budget: &EnumerationBudget,
) -> Result<Vec<SkewConstacyclicCode>> {
    enumerate_right_divisors(ctx, None, budget)?
        .iter()
        .map(|g| SkewConstacyclicCode::new(ctx, g))
        .collect()
}

/// Number of codes of each dimension.
pub fn count_by_dimension(codes: &[SkewConstacyclicCode]) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for c in codes {
        *out.entry(c.dimension()).or_insert(0) += 1;
    }
    out
}
