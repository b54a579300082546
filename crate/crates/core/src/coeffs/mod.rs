//! The combinatorial coefficients M^n_p, the polynomial bases the closed
//! forms are written in, and exact multivariate polynomial arithmetic.

mod poly;

pub use poly::{rat, rat_frac, ExpPoly, Subst, UniPoly};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::wreath::GroupSpec;

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// C(n, k), zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n || n < 0 {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// The coefficient M^n_{p₁,..,p_k}: the number of n-tuples (S₁,..,Sₙ) of
/// proper subsets of [k] such that exactly pⱼ of the sets contain j.
/// Computed by the alternating sum Σ_t (-1)^t C(n,t) ∏ C(n-t, pᵢ-t); zero
/// whenever some pᵢ is negative or exceeds n.
pub fn m_coeff(n: usize, p: &[i64]) -> BigInt {
    if p.iter().any(|&pi| pi < 0 || pi > n as i64) {
        return BigInt::zero();
    }
    let t_max = p.iter().copied().min().unwrap_or(0);
    let mut acc = BigInt::zero();
    for t in 0..=t_max {
        let mut term = binomial(n as i64, t);
        for &pi in p {
            term *= binomial(n as i64 - t, pi - t);
        }
        if t % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Independent oracle for `m_coeff`: direct enumeration of the
/// (2^k - 1)^n tuples of proper subsets.
pub fn m_coeff_by_subsets(n: usize, p: &[i64]) -> BigInt {
    let k = p.len();
    if p.iter().any(|&pi| pi < 0 || pi > n as i64) {
        return BigInt::zero();
    }
    let proper = (1u32 << k) - 1; // subsets 0..proper, i.e. everything except [k]
    let mut count = 0u64;
    let mut stack = vec![0u32; n];
    let mut occupancy = vec![0i64; k];
    // odometer over all n-tuples of masks in 0..proper
    loop {
        if occupancy.iter().zip(p).all(|(a, b)| a == b) {
            count += 1;
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return BigInt::from(count);
            }
            pos -= 1;
            for j in 0..k {
                if stack[pos] & (1 << j) != 0 {
                    occupancy[j] -= 1;
                }
            }
            stack[pos] += 1;
            if stack[pos] < proper {
                break;
            }
            stack[pos] = 0;
        }
        for j in 0..k {
            if stack[pos] & (1 << j) != 0 {
                occupancy[j] += 1;
            }
        }
    }
}

/// The falling factorial (x)_p = x(x-1)···(x-p+1).
pub fn falling(p: usize) -> UniPoly {
    let roots: Vec<i64> = (0..p as i64).collect();
    UniPoly::from_integer_roots(&roots)
}

/// (x-1)^{(d)}_p = (x-1)(x-1-d)···(x-1-(p-1)d) = ∏ (x - e*ᵢ) over the first
/// p coexponents of G(d,1,·).
pub fn d_falling(d: u32, p: usize) -> UniPoly {
    let roots: Vec<i64> = (0..p as i64).map(|i| 1 + i * d as i64).collect();
    UniPoly::from_integer_roots(&roots)
}

/// Ψ_k^{(d)}(x) = (x - (k-1)(d-1))·(x-1)^{(d)}_{k-1}, with Ψ₀ = 1, Ψ₁ = x;
/// its roots are the coexponents of G(d,d,k).
pub fn psi(d: u32, k: usize) -> UniPoly {
    match k {
        0 => UniPoly::one(),
        1 => UniPoly::x(),
        _ => UniPoly::from_integer_roots(&[(k as i64 - 1) * (d as i64 - 1)])
            .mul(&d_falling(d, k - 1)),
    }
}

/// Which P-basis a group uses in the rank-2/rank-3 theorems.
///
/// `Prefix` is Pᵢ = ∏_{j≤i} (x - e*ⱼ)/dⱼ and covers the rank-2 groups,
/// G(d,1,n), G₂₃, G₂₅, G₂₆ and G₃₂; the three remaining cases carry their
/// own polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PBasisFamily {
    Prefix {
        coexponents: Vec<u64>,
        degrees: Vec<u64>,
    },
    Gdd3 {
        d: u32,
    },
    G24,
    G27,
}

impl PBasisFamily {
    pub fn for_spec(spec: &GroupSpec) -> Option<PBasisFamily> {
        match spec {
            GroupSpec::Sym { .. } => None,
            GroupSpec::Gd1n { .. } => {
                let inv = spec.invariants();
                Some(PBasisFamily::Prefix {
                    coexponents: inv.coexponents,
                    degrees: inv.degrees,
                })
            }
            GroupSpec::Gddn { d, n } => match n {
                2 => {
                    let inv = spec.invariants();
                    Some(PBasisFamily::Prefix {
                        coexponents: inv.coexponents,
                        degrees: inv.degrees,
                    })
                }
                3 => Some(PBasisFamily::Gdd3 { d: *d }),
                _ => None,
            },
            GroupSpec::Exceptional { name, .. } => match name.as_str() {
                "G24" => Some(PBasisFamily::G24),
                "G27" => Some(PBasisFamily::G27),
                _ => {
                    let inv = spec.invariants();
                    Some(PBasisFamily::Prefix {
                        coexponents: inv.coexponents,
                        degrees: inv.degrees,
                    })
                }
            },
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            PBasisFamily::Prefix { degrees, .. } => degrees.len(),
            PBasisFamily::Gdd3 { .. } | PBasisFamily::G24 | PBasisFamily::G27 => 3,
        }
    }

    /// The polynomial Pᵢ of the family.
    pub fn poly(&self, i: usize) -> UniPoly {
        assert!(i <= self.rank(), "basis index exceeds rank");
        match self {
            PBasisFamily::Prefix {
                coexponents,
                degrees,
            } => {
                let roots: Vec<i64> = coexponents[..i].iter().map(|&e| e as i64).collect();
                let den: i64 = degrees[..i].iter().map(|&d| d as i64).product();
                UniPoly::from_integer_roots(&roots).scale(&rat_frac(1, den))
            }
            PBasisFamily::Gdd3 { d } => {
                let d = *d as i64;
                match i {
                    0 => UniPoly::one(),
                    1 => UniPoly::from_integer_roots(&[1]).scale(&rat_frac(d + 1, 3 * d)),
                    2 => UniPoly::from_integer_roots(&[1, d]).scale(&rat_frac(1, 3 * d)),
                    _ => UniPoly::from_integer_roots(&[1, d + 1, 2 * d - 2])
                        .scale(&rat_frac(1, 6 * d * d)),
                }
            }
            PBasisFamily::G24 => match i {
                0 => UniPoly::one(),
                1 => UniPoly::from_integer_roots(&[1]).scale(&rat_frac(1, 3)),
                2 => UniPoly::from_integer_roots(&[1, 7]).scale(&rat_frac(1, 24)),
                _ => UniPoly::from_integer_roots(&[1, 9, 11]).scale(&rat_frac(1, 336)),
            },
            PBasisFamily::G27 => match i {
                0 => UniPoly::one(),
                1 => UniPoly::from_integer_roots(&[1]).scale(&rat_frac(2, 9)),
                2 => UniPoly::from_integer_roots(&[1, 15]).scale(&rat_frac(1, 72)),
                _ => UniPoly::from_integer_roots(&[1, 19, 25]).scale(&rat_frac(1, 2160)),
            },
        }
    }

    pub fn polys(&self) -> Vec<UniPoly> {
        (0..=self.rank()).map(|i| self.poly(i)).collect()
    }
}

/// Express the powers x^0..x^max in the given degree-graded basis.
/// Returns T with x^m = Σⱼ T[m][j]·basis[j].
fn power_to_basis_matrix(basis: &[UniPoly], max: usize) -> Vec<Vec<BigRational>> {
    assert!(basis.len() > max, "basis must cover degrees 0..={max}");
    for (j, b) in basis.iter().enumerate().take(max + 1) {
        assert_eq!(b.degree(), Some(j), "basis element {j} has the wrong degree");
    }
    let mut rows = Vec::with_capacity(max + 1);
    for m in 0..=max {
        let mut remainder = UniPoly::monomial(m, BigRational::one());
        let mut row = vec![BigRational::zero(); max + 1];
        for j in (0..=m).rev() {
            let c = remainder.coeff(j) / basis[j].coeff(j);
            if !c.is_zero() {
                remainder = remainder.sub(&basis[j].scale(&c));
                row[j] = c;
            }
        }
        assert!(remainder.is_zero());
        rows.push(row);
    }
    rows
}

/// Expand f(x₁,..,x_k) in products ∏ᵢ B_{pᵢ}(xᵢ) of one degree-graded
/// univariate basis. The change of basis is triangular, so coefficients are
/// exact rationals and `build_from_basis` inverts it.
pub fn expand_in_basis(f: &ExpPoly, basis: &[UniPoly]) -> BTreeMap<Vec<u32>, BigRational> {
    let max = f
        .terms()
        .flat_map(|(e, _)| e.iter().copied())
        .max()
        .unwrap_or(0) as usize;
    let table = power_to_basis_matrix(basis, max);
    let mut out: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
    for (exps, c) in f.terms() {
        let mut partial: Vec<(Vec<u32>, BigRational)> = vec![(Vec::new(), c.clone())];
        for &e in exps {
            let mut next = Vec::new();
            for (key, coeff) in &partial {
                for (j, t) in table[e as usize].iter().enumerate() {
                    if t.is_zero() {
                        continue;
                    }
                    let mut k2 = key.clone();
                    k2.push(j as u32);
                    next.push((k2, coeff * t));
                }
            }
            partial = next;
        }
        for (key, coeff) in partial {
            let entry = out.entry(key).or_insert_with(BigRational::zero);
            *entry += coeff;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Σ coeffs[p]·∏ᵢ basis[pᵢ](xᵢ).
pub fn build_from_basis(
    coeffs: &BTreeMap<Vec<u32>, BigRational>,
    basis: &[UniPoly],
    arity: usize,
) -> ExpPoly {
    let mut out = ExpPoly::zero(arity);
    for (key, c) in coeffs {
        assert_eq!(key.len(), arity);
        let polys: Vec<UniPoly> = key.iter().map(|&j| basis[j as usize].clone()).collect();
        out = out.add(&ExpPoly::product_of_univariates(&polys).scale(c));
    }
    out
}
