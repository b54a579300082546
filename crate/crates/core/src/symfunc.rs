//! Finite-alphabet symmetric functions: power sums, monomial symmetric
//! polynomials, stable principal specializations, hook lengths, z_μ and
//! Aut(λ).
//!
//! Symmetric functions exist here only as honest polynomials in a finite
//! variable list. An alphabet of n variables is enough for every identity
//! in this crate: the partitions involved have at most n parts.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coeffs::{factorial, rat, ExpPoly, UniPoly};
use crate::perm::Partition;

/// p_λ(y₁,..,y_V) = ∏ over parts m of (y₁^m + .. + y_V^m).
pub fn power_sum(lambda: &Partition, vars: usize) -> ExpPoly {
    let mut out = ExpPoly::one(vars);
    for &m in lambda.parts() {
        out = out.mul(&power_sum_single(m, vars));
    }
    out
}

fn power_sum_single(m: u32, vars: usize) -> ExpPoly {
    let mut p = ExpPoly::zero(vars);
    for v in 0..vars {
        let mut exps = vec![0; vars];
        exps[v] = m;
        p.add_term(exps, BigRational::one());
    }
    p
}

/// m_μ(y₁,..,y_V): the sum of all distinct monomials with exponent pattern
/// μ. Zero when μ has more parts than there are variables.
pub fn monomial(mu: &Partition, vars: usize) -> ExpPoly {
    let mut out = ExpPoly::zero(vars);
    if mu.len() > vars {
        return out;
    }
    let mut exps: Vec<u32> = mu.parts().to_vec();
    exps.resize(vars, 0);
    exps.sort_unstable(); // ascending start for the next_permutation loop
    loop {
        out.add_term(exps.clone(), BigRational::one());
        if !next_permutation(&mut exps) {
            return out;
        }
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Hook lengths h(i,j) = λᵢ - i + λ'ⱼ - j + 1 over all cells of λ.
pub fn hooks(lambda: &Partition) -> Vec<u32> {
    let conj = lambda.conjugate();
    let mut out = Vec::new();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            out.push(row + conj.parts()[j] - 1 - i as u32 - j as u32);
        }
    }
    out
}

pub fn hook_product(lambda: &Partition) -> BigInt {
    hooks(lambda)
        .into_iter()
        .fold(BigInt::one(), |acc, h| acc * BigInt::from(h))
}

/// z_μ = ∏ m^{a_m}·a_m! over the multiplicities a_m of μ; the centralizer
/// order of the class μ.
pub fn z(mu: &Partition) -> BigInt {
    let mut acc = BigInt::one();
    for (value, mult) in mu.multiplicities() {
        acc *= BigInt::from(value).pow(mult as u32) * factorial(mult);
    }
    acc
}

/// Aut(λ) = ∏ a_m! over part multiplicities.
pub fn aut(lambda: &Partition) -> BigInt {
    lambda
        .multiplicities()
        .into_iter()
        .fold(BigInt::one(), |acc, (_, mult)| acc * factorial(mult))
}

/// p_λ(1^x) = x^{ℓ(λ)}.
pub fn p_stable(lambda: &Partition) -> UniPoly {
    UniPoly::monomial(lambda.len(), BigRational::one())
}

/// Hook content formula: s_λ(1^x) = ∏ (x + j - i)/h(i,j) over cells.
pub fn s_stable(lambda: &Partition) -> UniPoly {
    let mut out = UniPoly::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            let content = j as i64 - i as i64;
            out = out.mul(&UniPoly::from_integer_roots(&[-content]));
        }
    }
    out.scale(&BigRational::new(BigInt::one(), hook_product(lambda)))
}

/// m_λ(1^x) = C(x, ℓ)·ℓ!/Aut(λ).
pub fn m_stable(lambda: &Partition) -> UniPoly {
    let l = lambda.len();
    let scale = BigRational::new(BigInt::one(), aut(lambda)); // ℓ!/Aut / ℓ! from (x)_ℓ
    crate::coeffs::falling(l).scale(&scale)
}

/// The power sum p_m on the alphabet (1, y₁ repeated d times, .., y_V
/// repeated d times): d·p_m(y) + 1.
pub fn alphabet_power_sum(d: u32, m: u32, vars: usize) -> ExpPoly {
    power_sum_single(m, vars)
        .scale(&rat(d as i64))
        .add(&ExpPoly::one(vars))
}

/// Collect a symmetric polynomial into monomial-basis coefficients, keyed by
/// the exponent partition. Only valid for symmetric inputs.
pub fn collect_to_monomial_basis(f: &ExpPoly) -> BTreeMap<Partition, BigRational> {
    let mut out = BTreeMap::new();
    for (exps, c) in f.terms() {
        if exps.windows(2).all(|w| w[0] >= w[1]) {
            out.insert(Partition::new(exps.to_vec()), c.clone());
        }
    }
    out
}

/// Expansion of p_λ in the monomial basis (integer coefficients).
pub fn p_in_m_basis(lambda: &Partition) -> BTreeMap<Partition, BigRational> {
    let n = lambda.size();
    collect_to_monomial_basis(&power_sum(lambda, n.max(1)))
}

/// Expansion of m_μ in the power-sum basis (rational; denominators divide
/// z_λ). Solved from the p-to-m matrix by Gaussian elimination.
pub fn m_in_p_basis(mu: &Partition) -> BTreeMap<Partition, BigRational> {
    let n = mu.size();
    let parts = Partition::all_of(n);
    let idx: BTreeMap<&Partition, usize> = parts.iter().zip(0..).collect();
    // rows: p_λ expressed in m-basis
    let mut matrix = vec![vec![BigRational::zero(); parts.len()]; parts.len()];
    for (r, lambda) in parts.iter().enumerate() {
        for (nu, c) in p_in_m_basis(lambda) {
            matrix[r][idx[&nu]] = c;
        }
    }
    // solve cᵀ·matrix = e_μ
    let mut rhs = vec![BigRational::zero(); parts.len()];
    rhs[idx[&mu]] = BigRational::one();
    let solution = solve_transposed(matrix, rhs);
    parts
        .into_iter()
        .zip(solution)
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

fn solve_transposed(matrix: Vec<Vec<BigRational>>, rhs: Vec<BigRational>) -> Vec<BigRational> {
    // solve x·M = rhs, i.e. Mᵀ·xᵀ = rhsᵀ, by Gaussian elimination
    let n = rhs.len();
    let mut a = vec![vec![BigRational::zero(); n + 1]; n];
    for (i, row) in a.iter_mut().enumerate() {
        for j in 0..n {
            row[j] = matrix[j][i].clone();
        }
        row[n] = rhs[i].clone();
    }
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("transition matrix is invertible");
        a.swap(col, pivot);
        let inv = a[col][col].clone();
        for j in col..=n {
            a[col][j] = &a[col][j] / &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in col..=n {
                    let delta = &f * &a[col][j];
                    a[r][j] = &a[r][j] - delta;
                }
            }
        }
    }
    (0..n).map(|i| a[i][n].clone()).collect()
}
