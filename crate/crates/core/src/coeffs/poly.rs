//! Exact polynomial arithmetic: dense univariate and sparse multivariate
//! polynomials over the rationals.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense univariate polynomial with exact rational coefficients.
/// `coeffs[i]` is the coefficient of x^i; the leading coefficient is nonzero
/// unless the polynomial is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = UniPoly { coeffs: vec![c] };
        p.normalize();
        p
    }

    pub fn x() -> Self {
        UniPoly {
            coeffs: vec![BigRational::zero(), BigRational::one()],
        }
    }

    pub fn monomial(degree: usize, c: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        coeffs[degree] = c;
        let mut p = UniPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.normalize();
        p
    }

    /// ∏ (x - r) over the given roots.
    pub fn from_roots(roots: &[BigRational]) -> Self {
        let mut p = UniPoly::one();
        for r in roots {
            p = p.mul(&UniPoly::from_coeffs(vec![-r.clone(), BigRational::one()]));
        }
        p
    }

    pub fn from_integer_roots(roots: &[i64]) -> Self {
        UniPoly::from_roots(&roots.iter().map(|&r| rat(r)).collect::<Vec<_>>())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        UniPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - other.coeff(i)).collect();
        UniPoly::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial: a map from exponent vectors of fixed
/// length (the arity) to nonzero rational coefficients. The arity is part of
/// the value so polynomials over different variable sets cannot be mixed by
/// accident.
#[derive(Clone, PartialEq, Eq)]
pub struct ExpPoly {
    arity: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

/// What to substitute for one variable in `ExpPoly::substitute`.
#[derive(Clone, Debug)]
pub enum Subst {
    /// x_old ↦ x_new
    Var(usize),
    /// x_old ↦ scale·x_new + shift
    Affine(usize, BigRational, BigRational),
    /// x_old ↦ constant
    Const(BigRational),
}

impl ExpPoly {
    pub fn zero(arity: usize) -> Self {
        ExpPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: BigRational) -> Self {
        let mut p = ExpPoly::zero(arity);
        p.add_term(vec![0; arity], c);
        p
    }

    pub fn one(arity: usize) -> Self {
        ExpPoly::constant(arity, BigRational::one())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: BigRational) {
        assert_eq!(exps.len(), self.arity, "wrong exponent-vector length");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in deterministic (lexicographic exponent) order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigRational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn add(&self, other: &ExpPoly) -> ExpPoly {
        assert_eq!(self.arity, other.arity, "mismatched arity");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ExpPoly) -> ExpPoly {
        assert_eq!(self.arity, other.arity, "mismatched arity");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &ExpPoly) -> ExpPoly {
        assert_eq!(self.arity, other.arity, "mismatched arity");
        let mut out = ExpPoly::zero(self.arity);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    /// Multiply, reducing the exponent of variable `var` modulo `modulus`.
    /// Used for arithmetic with a root of unity carried as a variable.
    pub fn mul_reduce(&self, other: &ExpPoly, var: usize, modulus: u32) -> ExpPoly {
        assert_eq!(self.arity, other.arity, "mismatched arity");
        let mut out = ExpPoly::zero(self.arity);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                exps[var] %= modulus;
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> ExpPoly {
        if c.is_zero() {
            return ExpPoly::zero(self.arity);
        }
        ExpPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// Embed a univariate polynomial as a polynomial in variable `var`.
    pub fn from_univariate(arity: usize, var: usize, p: &UniPoly) -> ExpPoly {
        let mut out = ExpPoly::zero(arity);
        for (i, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                let mut exps = vec![0; arity];
                exps[var] = i as u32;
                out.add_term(exps, c.clone());
            }
        }
        out
    }

    /// ∏ᵢ pᵢ(xᵢ): the product of one univariate polynomial per variable.
    pub fn product_of_univariates(polys: &[UniPoly]) -> ExpPoly {
        let arity = polys.len();
        let mut out = ExpPoly::one(arity);
        for (var, p) in polys.iter().enumerate() {
            out = out.mul(&ExpPoly::from_univariate(arity, var, p));
        }
        out
    }

    /// Tensor product over disjoint variable blocks: the result has arity
    /// equal to the sum of the inputs' arities, exponent vectors concatenated.
    pub fn tensor(polys: &[&ExpPoly]) -> ExpPoly {
        let arity = polys.iter().map(|p| p.arity).sum();
        let mut out = ExpPoly::one(arity);
        let mut offset = 0;
        for p in polys {
            let mut next = ExpPoly::zero(arity);
            for (eb, cb) in &p.terms {
                for (ea, ca) in &out.terms {
                    let mut exps = ea.clone();
                    for (j, &e) in eb.iter().enumerate() {
                        exps[offset + j] += e;
                    }
                    next.add_term(exps, ca * cb);
                }
            }
            out = next;
            offset += p.arity;
        }
        out
    }

    /// Apply one substitution per variable; `new_arity` is the arity of the
    /// result.
    pub fn substitute(&self, subst: &[Subst], new_arity: usize) -> ExpPoly {
        assert_eq!(subst.len(), self.arity);
        let mut out = ExpPoly::zero(new_arity);
        for (exps, c) in &self.terms {
            let mut term = ExpPoly::constant(new_arity, c.clone());
            for (var, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let factor = match &subst[var] {
                    Subst::Var(v) => {
                        let mut ex = vec![0; new_arity];
                        ex[*v] = 1;
                        let mut f = ExpPoly::zero(new_arity);
                        f.add_term(ex, BigRational::one());
                        f
                    }
                    Subst::Affine(v, a, b) => {
                        let mut f = ExpPoly::constant(new_arity, b.clone());
                        let mut ex = vec![0; new_arity];
                        ex[*v] = 1;
                        f.add_term(ex, a.clone());
                        f
                    }
                    Subst::Const(v) => ExpPoly::constant(new_arity, v.clone()),
                };
                for _ in 0..e {
                    term = term.mul(&factor);
                }
            }
            out = out.add(&term);
        }
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.arity);
        let mut acc = BigRational::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (var, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    term *= &point[var];
                }
            }
            acc += term;
        }
        acc
    }
}

impl fmt::Debug for ExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (var, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{var}")?,
                    _ => write!(f, "*x{var}^{e}")?,
                }
            }
        }
        Ok(())
    }
}
