//! Exact cyclotomic integers: elements of Z[t]/(t^m - 1) standing for
//! integer combinations of m-th roots of unity. Equality and rationality
//! are decided modulo the m-th cyclotomic polynomial Φ_m, computed by
//! iterated exact division of t^m - 1 — no floating point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficients of Φ_m, ascending degree, monic.
pub fn cyclotomic_polynomial(m: usize) -> Vec<BigInt> {
    assert!(m >= 1);
    let mut cache: Vec<Option<Vec<BigInt>>> = vec![None; m + 1];
    cyclotomic_rec(m, &mut cache)
}

fn cyclotomic_rec(m: usize, cache: &mut Vec<Option<Vec<BigInt>>>) -> Vec<BigInt> {
    if let Some(p) = &cache[m] {
        return p.clone();
    }
    // t^m - 1 divided by Φ_e for every proper divisor e of m
    let mut num = vec![BigInt::zero(); m + 1];
    num[0] = -BigInt::one();
    num[m] = BigInt::one();
    for e in 1..m {
        if m % e == 0 {
            let phi = cyclotomic_rec(e, cache);
            num = exact_div(&num, &phi);
        }
    }
    cache[m] = Some(num.clone());
    num
}

/// Exact division of integer polynomials with monic divisor.
fn exact_div(num: &[BigInt], div: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = div.len() - 1;
    assert!(div[dd].is_one(), "divisor must be monic");
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = std::mem::take(&mut rem[i]);
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, d) in div.iter().enumerate().take(dd) {
            let delta = &c * d;
            rem[i - dd + j] -= delta;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division not exact");
    quot
}

/// Remainder of a rational polynomial modulo a monic integer polynomial.
pub(crate) fn rem_mod(coeffs: &[BigRational], div: &[BigInt]) -> Vec<BigRational> {
    let dd = div.len() - 1;
    let mut rem: Vec<BigRational> = coeffs.to_vec();
    for i in (dd..rem.len()).rev() {
        let c = std::mem::replace(&mut rem[i], BigRational::zero());
        if c.is_zero() {
            continue;
        }
        for (j, d) in div.iter().enumerate().take(dd) {
            let delta = &c * BigRational::from_integer(d.clone());
            rem[i - dd + j] -= delta;
        }
    }
    rem.truncate(dd);
    while rem.last().is_some_and(|c| c.is_zero()) {
        rem.pop();
    }
    rem
}

/// An element Σ cⱼ·ζ_m^j of Z[ζ_m], stored as the coefficient vector in
/// Z[t]/(t^m - 1). Two values are equal when their difference vanishes
/// modulo Φ_m.
#[derive(Clone, Debug)]
pub struct CycValue {
    order: usize,
    coeffs: Vec<BigInt>,
}

impl CycValue {
    pub fn new(order: usize, mut coeffs: Vec<BigInt>) -> Self {
        assert!(order >= 1);
        coeffs.resize(order, BigInt::zero());
        CycValue { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        CycValue::new(order, Vec::new())
    }

    pub fn integer(order: usize, v: impl Into<BigInt>) -> Self {
        CycValue::new(order, vec![v.into()])
    }

    /// ζ_order^exponent.
    pub fn root(order: usize, exponent: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); order];
        coeffs[exponent % order] = BigInt::one();
        CycValue { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &CycValue) -> CycValue {
        let (a, b) = CycValue::common(self, other);
        CycValue::new(
            a.order,
            a.coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x + y)
                .collect(),
        )
    }

    pub fn neg(&self) -> CycValue {
        CycValue::new(self.order, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &CycValue) -> CycValue {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &BigInt) -> CycValue {
        CycValue::new(self.order, self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Cyclic convolution: multiplication in Z[t]/(t^m - 1).
    pub fn mul(&self, other: &CycValue) -> CycValue {
        let (a, b) = CycValue::common(self, other);
        let m = a.order;
        let mut out = vec![BigInt::zero(); m];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    out[(i + j) % m] += x * y;
                }
            }
        }
        CycValue::new(m, out)
    }

    /// Reinterpret in Z[ζ_M] for a multiple M of the order.
    pub fn lift(&self, new_order: usize) -> CycValue {
        assert_eq!(new_order % self.order, 0, "order must divide the target");
        let stride = new_order / self.order;
        let mut coeffs = vec![BigInt::zero(); new_order];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[j * stride] += c;
        }
        CycValue {
            order: new_order,
            coeffs,
        }
    }

    fn common(a: &CycValue, b: &CycValue) -> (CycValue, CycValue) {
        if a.order == b.order {
            (a.clone(), b.clone())
        } else {
            let m = a.order.lcm(&b.order);
            (a.lift(m), b.lift(m))
        }
    }

    /// Canonical form: the remainder modulo Φ_m, degree < φ(m). Constants
    /// are already reduced, which keeps bulk integrality checks cheap.
    pub fn reduced(&self) -> Vec<BigInt> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            return if self.coeffs[0].is_zero() {
                Vec::new()
            } else {
                vec![self.coeffs[0].clone()]
            };
        }
        let phi = cyclotomic_polynomial(self.order);
        let dd = phi.len() - 1;
        let mut rem = self.coeffs.clone();
        for i in (dd..rem.len()).rev() {
            let c = std::mem::take(&mut rem[i]);
            if c.is_zero() {
                continue;
            }
            for (j, d) in phi.iter().enumerate().take(dd) {
                let delta = &c * d;
                rem[i - dd + j] -= delta;
            }
        }
        rem.truncate(dd);
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
        rem
    }

    pub fn is_zero(&self) -> bool {
        self.reduced().is_empty()
    }

    /// Some(value) when the element is a rational integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        let r = self.reduced();
        match r.len() {
            0 => Some(BigInt::zero()),
            1 => Some(r[0].clone()),
            _ => None,
        }
    }
}

impl PartialEq for CycValue {
    fn eq(&self, other: &CycValue) -> bool {
        let (a, b) = CycValue::common(self, other);
        a.sub(&b).is_zero()
    }
}

impl Eq for CycValue {}
