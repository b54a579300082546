//! One evaluator per counting theorem: the Jackson/Schaeffer–Vassilieva
//! polynomial for the n-cycle, the G(d,1,n) and G(d,d,n) generating
//! polynomials, the transitive (n-1)-cycle polynomial, colored-factorization
//! counts, reflection-factorization numbers, genus-0 and cycle-type
//! refinements, and the rank-2/rank-3 P-basis forms.
//!
//! Every function returns exact values. Intermediate arithmetic is rational;
//! results are asserted integral (and nonnegative where they are counts)
//! before being handed back — a failure there is a bug, not a rounding
//! issue.

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coeffs::{
    binomial, d_falling, factorial, falling, m_coeff, psi, rat, ExpPoly, PBasisFamily, UniPoly,
};
use crate::error::{Error, Result};
use crate::perm::Partition;
use crate::symfunc::{aut, monomial};
use crate::wreath::{GroupInvariants, GroupSpec};

fn big_rat(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

fn rat_pow(base: i64, exp: u32) -> BigRational {
    big_rat(BigInt::from(base).pow(exp))
}

/// Σ over p ∈ {lo..=hi}^k with nonzero M-coefficient of
/// coeff(p)·∏ᵢ poly(pᵢ)(xᵢ).
fn basis_sum(
    k: usize,
    lo: u32,
    hi: u32,
    m_index: impl Fn(&[i64]) -> Vec<i64>,
    term_poly: impl Fn(u32) -> UniPoly,
    m_size: usize,
) -> ExpPoly {
    let cache: Vec<UniPoly> = (lo..=hi).map(|p| term_poly(p)).collect();
    let mut acc = ExpPoly::zero(k);
    for p in (0..k).map(|_| lo..=hi).multi_cartesian_product() {
        let p_i64: Vec<i64> = p.iter().map(|&x| x as i64).collect();
        let m = m_coeff(m_size, &m_index(&p_i64));
        if m.is_zero() {
            continue;
        }
        let polys: Vec<UniPoly> = p.iter().map(|&pi| cache[(pi - lo) as usize].clone()).collect();
        acc = acc.add(&ExpPoly::product_of_univariates(&polys).scale(&big_rat(m)));
    }
    acc
}

fn check_counting_poly(poly: &ExpPoly, max_total_degree: u32, what: &str) {
    assert!(poly.is_integral(), "{what}: non-integral coefficient");
    assert!(poly.is_nonnegative(), "{what}: negative coefficient");
    assert!(
        poly.total_degree() <= max_total_degree,
        "{what}: degree {} exceeds bound {max_total_degree}",
        poly.total_degree()
    );
}

/// Factorizations of an n-cycle in Sₙ into k factors, by number of cycles:
/// (n!)^{k-1} Σ_p M^{n-1}_{p-1} ∏ (xᵢ)_{pᵢ}/pᵢ!.
pub fn jackson_poly(n: usize, k: usize) -> ExpPoly {
    assert!(n >= 1 && k >= 1);
    let poly = basis_sum(
        k,
        1,
        n as u32,
        |p| p.iter().map(|&pi| pi - 1).collect(),
        |p| {
            falling(p as usize).scale(&BigRational::new(BigInt::one(), factorial(p as usize)))
        },
        n - 1,
    );
    let scale = big_rat(factorial(n).pow(k as u32 - 1));
    let poly = poly.scale(&scale);
    check_counting_poly(&poly, (n * (k - 1) + 1) as u32, "jackson_poly");
    poly
}

/// Factorizations of the Coxeter element of G(d,1,n) into k factors, by
/// fixed space dimension:
/// |G|^{k-1} Σ_p M^n_p ∏ (xᵢ-1)^{(d)}_{pᵢ}/(d^{pᵢ}·pᵢ!).
pub fn gd1n_poly(d: u32, n: usize, k: usize) -> ExpPoly {
    assert!(d >= 2 && n >= 1 && k >= 1);
    let poly = basis_sum(
        k,
        0,
        n as u32,
        |p| p.to_vec(),
        |p| {
            let den = BigInt::from(d).pow(p) * factorial(p as usize);
            d_falling(d, p as usize).scale(&BigRational::new(BigInt::one(), den))
        },
        n,
    );
    let order = GroupSpec::g_d1n(d, n).order();
    let poly = poly.scale(&big_rat(order.pow(k as u32 - 1)));
    check_counting_poly(&poly, (n * (k - 1)) as u32, "gd1n_poly");
    poly
}

/// Transitive factorizations of the Coxeter element of G(d,d,n):
/// (|G|^{k-1}/n^k) Σ_{p≥1} M^n_p ∏ Ψ^{(d)}_{pᵢ}(xᵢ)/(d^{pᵢ-1}·(pᵢ-1)!).
pub fn gddn_transitive_poly(d: u32, n: usize, k: usize) -> ExpPoly {
    assert!(d >= 2 && n >= 2 && k >= 1);
    let poly = basis_sum(
        k,
        1,
        n as u32,
        |p| p.to_vec(),
        |p| {
            let den = BigInt::from(d).pow(p - 1) * factorial(p as usize - 1);
            psi(d, p as usize).scale(&BigRational::new(BigInt::one(), den))
        },
        n,
    );
    let order = GroupSpec::g_ddn(d, n).order();
    let scale = BigRational::new(order.pow(k as u32 - 1), BigInt::from(n).pow(k as u32));
    let poly = poly.scale(&scale);
    check_counting_poly(&poly, (n * (k - 1)) as u32, "gddn_transitive_poly");
    poly
}

/// Nontransitive factorizations of the Coxeter element of G(d,d,n):
/// (|G|^{k-1}/n^{k-1}) Σ_{p≥1} M^{n-2}_{p-1} (∏ Q_{pᵢ}(xᵢ) - ∏ Q'_{pᵢ}(xᵢ)).
pub fn gddn_nontransitive_poly(d: u32, n: usize, k: usize) -> ExpPoly {
    assert!(d >= 2 && n >= 2 && k >= 1);
    let di = d as i64;
    let q_poly = |p: u32, primed: bool| -> UniPoly {
        let p_i = p as i64;
        // x² - (d-1)(p-1)x + p(d-1)  /  x² - (d-1)(p-1)x - p
        let constant = if primed { rat(-p_i) } else { rat(p_i * (di - 1)) };
        let quad = UniPoly::from_coeffs(vec![
            constant,
            rat(-(di - 1) * (p_i - 1)),
            BigRational::one(),
        ]);
        let den = BigInt::from(d).pow(p) * factorial(p as usize);
        quad.mul(&d_falling(d, p as usize - 1))
            .scale(&BigRational::new(BigInt::one(), den))
    };
    let mut acc = ExpPoly::zero(k);
    for p in (0..k).map(|_| 1..=n as u32).multi_cartesian_product() {
        let shifted: Vec<i64> = p.iter().map(|&pi| pi as i64 - 1).collect();
        let m = m_coeff(n - 2, &shifted);
        if m.is_zero() {
            continue;
        }
        let plain: Vec<UniPoly> = p.iter().map(|&pi| q_poly(pi, false)).collect();
        let primed: Vec<UniPoly> = p.iter().map(|&pi| q_poly(pi, true)).collect();
        let diff = ExpPoly::product_of_univariates(&plain)
            .sub(&ExpPoly::product_of_univariates(&primed));
        acc = acc.add(&diff.scale(&big_rat(m)));
    }
    let order = GroupSpec::g_ddn(d, n).order();
    let scale = BigRational::new(order.pow(k as u32 - 1), BigInt::from(n).pow(k as u32 - 1));
    let poly = acc.scale(&scale);
    check_counting_poly(&poly, (n * (k - 1)) as u32, "gddn_nontransitive_poly");
    poly
}

/// Transitive factorizations of an (n-1)-cycle in Sₙ:
/// ((n!)^{k-1}/n^k) Σ_{p≥1} M^n_p ∏ (xᵢ)_{pᵢ}/(pᵢ-1)!.
pub fn n1cycle_transitive_poly(n: usize, k: usize) -> ExpPoly {
    assert!(n >= 2 && k >= 1);
    let poly = basis_sum(
        k,
        1,
        n as u32,
        |p| p.to_vec(),
        |p| {
            falling(p as usize)
                .scale(&BigRational::new(BigInt::one(), factorial(p as usize - 1)))
        },
        n,
    );
    let scale = BigRational::new(factorial(n).pow(k as u32 - 1), BigInt::from(n).pow(k as u32));
    let poly = poly.scale(&scale);
    check_counting_poly(&poly, (n * (k - 1) + 1) as u32, "n1cycle_transitive_poly");
    poly
}

fn assert_integer(v: BigRational, what: &str) -> BigInt {
    assert!(v.is_integer(), "{what}: non-integral value {v}");
    v.to_integer()
}

/// C^⟨n⟩_p = (n!)^{k-1}·M^{n-1}_{p-1}: colored factorizations of the
/// n-cycle where factor i uses exactly pᵢ colors.
pub fn c_sn(n: usize, p: &[i64]) -> BigInt {
    assert!(n >= 1);
    let shifted: Vec<i64> = p.iter().map(|&pi| pi - 1).collect();
    factorial(n).pow(p.len() as u32 - 1) * m_coeff(n - 1, &shifted)
}

/// C^⟨n-1,1⟩_p = (n!)^{k-1}·(p₁···p_k/n^k)·M^n_p: colored transitive
/// factorizations of the (n-1)-cycle.
pub fn c_n1(n: usize, p: &[i64]) -> BigInt {
    assert!(n >= 2);
    let k = p.len() as u32;
    if p.iter().any(|&pi| pi < 0) {
        return BigInt::zero();
    }
    let prod: BigInt = p.iter().map(|&pi| BigInt::from(pi)).product();
    let value = BigRational::new(
        factorial(n).pow(k - 1) * prod * m_coeff(n, p),
        BigInt::from(n).pow(k),
    );
    assert_integer(value, "c_n1")
}

/// C^{(d,1,n)}_p = d^{(k-1)n} Σ_{∅≠S⊆[k]} C^⟨n⟩_{p+e_S}.
pub fn c_gd1n(d: u32, n: usize, p: &[i64]) -> BigInt {
    let k = p.len();
    let mut acc = BigInt::zero();
    for mask in 1u32..(1 << k) {
        let q: Vec<i64> = p
            .iter()
            .enumerate()
            .map(|(i, &pi)| pi + ((mask >> i) & 1) as i64)
            .collect();
        acc += c_sn(n, &q);
    }
    BigInt::from(d).pow(((k - 1) * n) as u32) * acc
}

/// C^{(d,d,n)}_p = Σ_{S⊆[k]} d^{(k-1)n-|S|+1}·C^⟨n-1,1⟩_{p+e_S}.
pub fn c_gddn_trans(d: u32, n: usize, p: &[i64]) -> BigInt {
    let k = p.len();
    let mut acc = BigRational::zero();
    for mask in 0u32..(1 << k) {
        let q: Vec<i64> = p
            .iter()
            .enumerate()
            .map(|(i, &pi)| pi + ((mask >> i) & 1) as i64)
            .collect();
        let exp = ((k - 1) * n) as i64 - mask.count_ones() as i64 + 1;
        let power = if exp >= 0 {
            rat_pow(d as i64, exp as u32)
        } else {
            rat_pow(d as i64, (-exp) as u32).recip()
        };
        acc += power * big_rat(c_n1(n, &q));
    }
    assert_integer(acc, "c_gddn_trans")
}

/// B^{(d,d,n)}_p = d^{n(k-1)+1} Σ_{S∩T≠∅, S∩U=∅} d^{-|S∪T|}·∏_{i∉S}pᵢ·
/// C^⟨n-1⟩_{p+e_T-e_U}, with C^⟨n-1⟩_q = ((n-1)!)^{k-1}·M^{n-2}_{q-1}.
pub fn b_gddn_nontrans(d: u32, n: usize, p: &[i64]) -> BigInt {
    assert!(n >= 2);
    let k = p.len();
    let mut acc = BigRational::zero();
    for s in 0u32..(1 << k) {
        for t in 0u32..(1 << k) {
            if s & t == 0 {
                continue;
            }
            for u in 0u32..(1 << k) {
                if s & u != 0 {
                    continue;
                }
                let q: Vec<i64> = p
                    .iter()
                    .enumerate()
                    .map(|(i, &pi)| {
                        pi + ((t >> i) & 1) as i64 - ((u >> i) & 1) as i64 - 1
                    })
                    .collect();
                let m = m_coeff(n - 2, &q);
                if m.is_zero() {
                    continue;
                }
                let outside: BigInt = (0..k)
                    .filter(|i| (s >> i) & 1 == 0)
                    .map(|i| BigInt::from(p[i]))
                    .product();
                let c = factorial(n - 1).pow(k as u32 - 1) * m;
                let union = (s | t).count_ones();
                acc += BigRational::new(outside * c, BigInt::from(d).pow(union));
            }
        }
    }
    let scale = rat_pow(d as i64, (n * (k - 1) + 1) as u32);
    assert_integer(acc * scale, "b_gddn_nontrans")
}

/// N_ℓ for ℓ = 0..=l_max: reflection factorizations of a Coxeter element,
/// from the exponential generating function
/// (1/|W|)(e^{t|R|/n} - e^{-t|R*|/n})^n.
pub fn chapuy_stump_counts(inv: &GroupInvariants, l_max: usize) -> Vec<BigInt> {
    let n = inv.rank as i64;
    let bases: Vec<BigRational> = (0..=n)
        .map(|j| {
            BigRational::new(
                BigInt::from(j * inv.num_reflections as i64 - (n - j) * inv.num_hyperplanes as i64),
                BigInt::from(n),
            )
        })
        .collect();
    let mut powers: Vec<BigRational> = vec![BigRational::one(); bases.len()];
    let mut out = Vec::with_capacity(l_max + 1);
    for _ in 0..=l_max {
        let mut sum = BigRational::zero();
        for (j, power) in powers.iter().enumerate() {
            let sign = if (n - j as i64) % 2 == 0 { 1 } else { -1 };
            sum += big_rat(binomial(n, j as i64) * BigInt::from(sign)) * power;
        }
        out.push(assert_integer(sum / big_rat(inv.order.clone()), "chapuy_stump"));
        for (j, power) in powers.iter_mut().enumerate() {
            *power *= &bases[j];
        }
    }
    out
}

/// Genus-0 chain counts for G(d,1,n): with rank-jumps s (Σsᵢ = n) there are
/// ∏ C(n, sᵢ) chains; the value does not depend on d.
pub fn genus0_gd1n(d: u32, n: usize, s: &[u32]) -> BigInt {
    assert!(d >= 2);
    assert_eq!(s.iter().sum::<u32>() as usize, n, "rank jumps must sum to n");
    s.iter()
        .map(|&si| binomial(n as i64, si as i64))
        .product()
}

/// Genus-0 chain counts for G(d,d,n):
/// d·∏ C(n-1, sᵢ) + Σᵢ C(n-2, sᵢ-2)·∏_{j≠i} C(n-1, sⱼ).
pub fn genus0_gddn(d: u32, n: usize, s: &[u32]) -> BigInt {
    assert!(d >= 2 && n >= 2);
    assert_eq!(s.iter().sum::<u32>() as usize, n, "rank jumps must sum to n");
    let base: Vec<BigInt> = s.iter().map(|&si| binomial(n as i64 - 1, si as i64)).collect();
    let mut acc: BigInt = base.iter().product::<BigInt>() * BigInt::from(d);
    for i in 0..s.len() {
        let mut term = binomial(n as i64 - 2, s[i] as i64 - 2);
        for (j, b) in base.iter().enumerate() {
            if j != i {
                term *= b;
            }
        }
        acc += term;
    }
    acc
}

/// Zeta polynomial of the noncrossing partition interval: the number of
/// multichains 1 ≤ g₁ ≤ .. ≤ g_k = c.
pub fn zeta(spec: &GroupSpec, k: usize) -> Result<BigInt> {
    match spec {
        GroupSpec::Gd1n { n, .. } => Ok(binomial((n * k) as i64, *n as i64)),
        GroupSpec::Gddn { d, n } => {
            let nk = ((n - 1) * k) as i64;
            Ok(BigInt::from(*d) * binomial(nk, *n as i64)
                + BigInt::from(k) * binomial(nk - 1, *n as i64 - 2))
        }
        _ => Err(Error::Unsupported(format!(
            "no zeta closed form for {}",
            spec.name()
        ))),
    }
}

fn p_basis_for(spec: &GroupSpec, expected_rank: usize) -> Result<Vec<UniPoly>> {
    let family = PBasisFamily::for_spec(spec).ok_or_else(|| {
        Error::Unsupported(format!("no P-basis known for {}", spec.name()))
    })?;
    if family.rank() != expected_rank {
        return Err(Error::Unsupported(format!(
            "{} has rank {}, expected {expected_rank}",
            spec.name(),
            family.rank()
        )));
    }
    Ok(family.polys())
}

fn m_basis_poly(spec: &GroupSpec, rank: usize, k: usize) -> Result<ExpPoly> {
    let basis = p_basis_for(spec, rank)?;
    let order = spec.invariants().order;
    let mut acc = ExpPoly::zero(k);
    for p in (0..k).map(|_| 0..=rank as u32).multi_cartesian_product() {
        let p_i64: Vec<i64> = p.iter().map(|&x| x as i64).collect();
        let m = m_coeff(rank, &p_i64);
        if m.is_zero() {
            continue;
        }
        let polys: Vec<UniPoly> = p.iter().map(|&pi| basis[pi as usize].clone()).collect();
        acc = acc.add(&ExpPoly::product_of_univariates(&polys).scale(&big_rat(m)));
    }
    let poly = acc.scale(&big_rat(order.pow(k as u32 - 1)));
    check_counting_poly(&poly, (rank * (k - 1)) as u32, "P-basis polynomial");
    Ok(poly)
}

/// All-factor generating polynomial for a rank-2 well generated group:
/// |G|^{k-1} Σ_p M²_p ∏ P_{pᵢ}(xᵢ).
pub fn rank2_poly(spec: &GroupSpec, k: usize) -> Result<ExpPoly> {
    m_basis_poly(spec, 2, k)
}

/// The explicit two-factor form of the rank-2 theorem:
/// (x-1)(x-e*₂) + N(x-1)(y-1) + (y-1)(y-e*₂) + 2h(x-1) + 2h(y-1) + |G|
/// with N = 2h/d₁.
pub fn rank2_poly_k2_explicit(inv: &GroupInvariants) -> ExpPoly {
    assert_eq!(inv.rank, 2);
    let e2 = inv.coexponents[1] as i64;
    let h = inv.h as i64;
    let big_n = BigRational::new(BigInt::from(2 * h), BigInt::from(inv.degrees[0]));
    let x_part = UniPoly::from_integer_roots(&[1, e2]);
    let lin = UniPoly::from_integer_roots(&[1]);
    let mut acc = ExpPoly::product_of_univariates(&[x_part.clone(), UniPoly::one()]);
    acc = acc.add(&ExpPoly::product_of_univariates(&[UniPoly::one(), x_part]));
    acc = acc.add(
        &ExpPoly::product_of_univariates(&[lin.clone(), lin.clone()]).scale(&big_n),
    );
    acc = acc.add(
        &ExpPoly::product_of_univariates(&[lin.clone(), UniPoly::one()]).scale(&rat(2 * h)),
    );
    acc = acc.add(
        &ExpPoly::product_of_univariates(&[UniPoly::one(), lin]).scale(&rat(2 * h)),
    );
    acc.add(&ExpPoly::constant(2, big_rat(inv.order.clone())))
}

/// Rank-3 analogue, valid for G(d,1,3), G(d,d,3), G₂₃, G₂₄, G₂₆, G₂₇
/// (but not G₂₅): |G|^{k-1} Σ_p M³_p ∏ P^G_{pᵢ}(xᵢ).
pub fn rank3_poly(spec: &GroupSpec, k: usize) -> Result<ExpPoly> {
    if matches!(spec, GroupSpec::Exceptional { name, .. } if name == "G25") {
        return Err(Error::Unsupported(
            "G25 admits no M³ form in any degree-graded basis; use g25_poly".into(),
        ));
    }
    m_basis_poly(spec, 3, k)
}

/// The special G₂₅ expansion: with Pᵢ = ∏_{j≤i}(x-e*ⱼ)/dⱼ for coexponents
/// (1,4,7) and degrees (6,9,12),
/// F/|G|^{k-1} = ∏(P₃+3P₂+3P₁+1) - 3∏(P₃+2P₂+P₁) - 3∏(P₃+P₂) - ∏P₃
///               - 3∏(P₃+P₂+P₁/3) + 9∏(P₃+P₂+P₁/9).
pub fn g25_poly(k: usize) -> ExpPoly {
    let family = PBasisFamily::Prefix {
        coexponents: vec![1, 4, 7],
        degrees: vec![6, 9, 12],
    };
    let p1 = family.poly(1);
    let p2 = family.poly(2);
    let p3 = family.poly(3);
    let combo = |c3: i64, c2: i64, c1: BigRational, c0: i64| -> UniPoly {
        p3.scale(&rat(c3))
            .add(&p2.scale(&rat(c2)))
            .add(&p1.scale(&c1))
            .add(&UniPoly::constant(rat(c0)))
    };
    let product = |poly: UniPoly, k: usize| -> ExpPoly {
        ExpPoly::product_of_univariates(&vec![poly; k])
    };
    let mut acc = product(combo(1, 3, rat(3), 1), k);
    acc = acc.sub(&product(combo(1, 2, rat(1), 0), k).scale(&rat(3)));
    acc = acc.sub(&product(combo(1, 1, rat(0), 0), k).scale(&rat(3)));
    acc = acc.sub(&product(p3.clone(), k));
    acc = acc.sub(&product(combo(1, 1, rat(1) / rat(3), 0), k).scale(&rat(3)));
    acc = acc.add(&product(combo(1, 1, rat(1) / rat(9), 0), k).scale(&rat(9)));
    let order = BigInt::from(648);
    let poly = acc.scale(&big_rat(order.pow(k as u32 - 1)));
    check_counting_poly(&poly, (3 * (k - 1)) as u32, "g25_poly");
    poly
}

/// Right-hand side of the cycle-type refinement for G(d,1,n), as a
/// polynomial in k blocks of `vars` variables:
/// |G|^{k-1} Σ over tuples of partitions μ⁽ⁱ⁾ of size ≤ n (not all of size
/// n) of M^{n-1}_{q-1}/∏ C(n-1, qᵢ-1) · ∏ m_{μ⁽ⁱ⁾}(yᵢ), where qᵢ is
/// ℓ(μ⁽ⁱ⁾) when |μ⁽ⁱ⁾| = n and ℓ(μ⁽ⁱ⁾)+1 otherwise.
pub fn cycle_type_rhs(d: u32, n: usize, k: usize, vars: usize) -> ExpPoly {
    assert!(d >= 2 && n >= 1 && k >= 1 && vars >= 1);
    let all_parts = Partition::all_up_to(n);
    let monomials: Vec<ExpPoly> = all_parts.iter().map(|mu| monomial(mu, vars)).collect();
    let order = GroupSpec::g_d1n(d, n).order();
    let mut acc = ExpPoly::zero(k * vars);
    for combo in (0..k).map(|_| 0..all_parts.len()).multi_cartesian_product() {
        if combo.iter().all(|&i| all_parts[i].size() == n) {
            continue;
        }
        let q: Vec<i64> = combo
            .iter()
            .map(|&i| {
                let mu = &all_parts[i];
                if mu.size() == n {
                    mu.len() as i64
                } else {
                    mu.len() as i64 + 1
                }
            })
            .collect();
        let shifted: Vec<i64> = q.iter().map(|&qi| qi - 1).collect();
        let m = m_coeff(n - 1, &shifted);
        if m.is_zero() {
            continue;
        }
        let mut coeff = big_rat(m);
        for &qi in &q {
            coeff /= big_rat(binomial(n as i64 - 1, qi - 1));
        }
        let factors: Vec<&ExpPoly> = combo.iter().map(|&i| &monomials[i]).collect();
        let term = ExpPoly::tensor(&factors);
        acc = acc.add(&term.scale(&coeff));
    }
    let poly = acc.scale(&big_rat(order.pow(k as u32 - 1)));
    assert!(poly.is_integral(), "cycle_type_rhs: non-integral coefficient");
    assert!(poly.is_nonnegative(), "cycle_type_rhs: negative coefficient");
    poly
}

/// Genus-0 factorization counts of G(d,1,n) by weight-0 cycle type: for
/// partitions λ⁽ⁱ⁾ of size at most n with Σ ℓ(λ⁽ⁱ⁾) = n(k-1), the count is
/// zero unless exactly one j has |λ⁽ʲ⁾| < n, and then equals
/// n^{k-1}·∏ (qᵢ-1)!/Aut(λ⁽ⁱ⁾) with qⱼ = ℓ(λ⁽ʲ⁾)+1 at the small index and
/// qᵢ = ℓ(λ⁽ⁱ⁾) elsewhere. (For ℓ(λ⁽ʲ⁾) ≥ 1 this is the familiar
/// ℓ(λ⁽ʲ⁾)·∏(ℓ-1)! form; the q-form also covers λ⁽ʲ⁾ = ∅, where the only
/// factorization puts the full Coxeter element in slot j.) Independent of d.
pub fn genus0_cycle_type(d: u32, n: usize, lambdas: &[Partition]) -> BigInt {
    assert!(d >= 2);
    let k = lambdas.len();
    let total_len: usize = lambdas.iter().map(|l| l.len()).sum();
    assert_eq!(total_len, n * (k - 1), "not a genus-0 length profile");
    assert!(lambdas.iter().all(|l| l.size() <= n));
    let small: Vec<usize> = (0..k).filter(|&i| lambdas[i].size() < n).collect();
    if small.len() != 1 {
        return BigInt::zero();
    }
    let j = small[0];
    let mut value = big_rat(BigInt::from(n).pow(k as u32 - 1));
    for (i, lambda) in lambdas.iter().enumerate() {
        let q = if i == j { lambda.len() + 1 } else { lambda.len() };
        value *= BigRational::new(factorial(q - 1), aut(lambda));
    }
    assert_integer(value, "genus0_cycle_type")
}

/// Factorization counts of the Coxeter element of G(d,1,n) refined by the
/// full weight distribution of each factor. Variables are x_{i,j} for
/// factor i and weight j, flattened as i·d + j. Computed with a root of
/// unity t carried as an extra formal variable of order d:
/// |G|^{k-1}·d·[t¹] Σ_p M^{n-1}_{p-1} ∏ C((Σⱼ tʲx_{i,j})/d, pᵢ).
pub fn all_weights_poly(d: u32, n: usize, k: usize) -> ExpPoly {
    assert!(d >= 2 && n >= 1 && k >= 1);
    let du = d as usize;
    let arity = k * du + 1; // variable 0 is t
    let binom_cache: Vec<Vec<ExpPoly>> = (0..k)
        .map(|i| {
            // z_i = Σ_j t^j·x_{i,j}
            let mut z = ExpPoly::zero(arity);
            for j in 0..du {
                let mut exps = vec![0u32; arity];
                exps[0] = j as u32;
                exps[1 + i * du + j] = 1;
                z.add_term(exps, BigRational::one());
            }
            let z_over_d = z.scale(&BigRational::new(BigInt::one(), BigInt::from(d)));
            let mut binoms = vec![ExpPoly::one(arity)];
            for p in 1..=n {
                let shifted =
                    z_over_d.sub(&ExpPoly::constant(arity, rat(p as i64 - 1)));
                let next = binoms[p - 1]
                    .mul_reduce(&shifted, 0, d)
                    .scale(&BigRational::new(BigInt::one(), BigInt::from(p)));
                binoms.push(next);
            }
            binoms
        })
        .collect();
    let mut acc = ExpPoly::zero(arity);
    for p in (0..k).map(|_| 1..=n).multi_cartesian_product() {
        let shifted: Vec<i64> = p.iter().map(|&pi| pi as i64 - 1).collect();
        let m = m_coeff(n - 1, &shifted);
        if m.is_zero() {
            continue;
        }
        let mut term = ExpPoly::constant(arity, big_rat(m));
        for (i, &pi) in p.iter().enumerate() {
            term = term.mul_reduce(&binom_cache[i][pi], 0, d);
        }
        acc = acc.add(&term);
    }
    // extract the coefficient of t¹ and drop the t variable
    let mut extracted = ExpPoly::zero(k * du);
    for (exps, c) in acc.terms() {
        if exps[0] == 1 {
            extracted.add_term(exps[1..].to_vec(), c.clone());
        }
    }
    let order = GroupSpec::g_d1n(d, n).order();
    let scale = big_rat(order.pow(k as u32 - 1) * BigInt::from(d));
    let poly = extracted.scale(&scale);
    assert!(poly.is_integral(), "all_weights_poly: non-integral coefficient");
    assert!(poly.is_nonnegative(), "all_weights_poly: negative coefficient");
    poly
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::Subst;
    use crate::oracle::{
        colored_count, count_by_fixdim, count_by_weight0_type, count_by_weight_distribution,
        weight0_counts_to_poly, weight_distribution_counts_to_poly, FactorQuery, Transitivity,
    };

    fn oracle_fixdim(spec: GroupSpec, k: usize, t: Transitivity) -> ExpPoly {
        count_by_fixdim(&FactorQuery::new(spec, k).with_transitivity(t)).unwrap()
    }

    #[test]
    fn jackson_small_cases() {
        let p = jackson_poly(2, 2);
        assert_eq!(p.coefficient(&[2, 1]), rat(1));
        assert_eq!(p.coefficient(&[1, 2]), rat(1));
        assert_eq!(p.num_terms(), 2);

        // k = 1: the n-cycle factors only as itself, one cycle
        let p = jackson_poly(5, 1);
        assert_eq!(p.coefficient(&[1]), rat(1));
        assert_eq!(p.num_terms(), 1);

        assert_eq!(
            jackson_poly(3, 2),
            oracle_fixdim(GroupSpec::sym(3), 2, Transitivity::All)
        );
    }

    #[test]
    fn gd1n_small_cases() {
        // d=2, n=1: the two factorizations of the sign flip
        let p = gd1n_poly(2, 1, 2);
        assert_eq!(p.coefficient(&[1, 0]), rat(1));
        assert_eq!(p.coefficient(&[0, 1]), rat(1));
        assert_eq!(p.num_terms(), 2);

        assert_eq!(gd1n_poly(3, 2, 1), ExpPoly::one(1));

        assert_eq!(
            gd1n_poly(2, 2, 2),
            oracle_fixdim(GroupSpec::g_d1n(2, 2), 2, Transitivity::All)
        );
    }

    #[test]
    fn gddn_transitive_matches_oracle() {
        for (d, n) in [(2u32, 2usize), (3, 2), (2, 3)] {
            assert_eq!(
                gddn_transitive_poly(d, n, 2),
                oracle_fixdim(GroupSpec::g_ddn(d, n), 2, Transitivity::TransitiveOnly),
                "G({d},{d},{n})"
            );
        }
    }

    #[test]
    fn gddn_nontransitive_and_totality() {
        for (d, n) in [(2u32, 3usize), (3, 3)] {
            let nontrans = gddn_nontransitive_poly(d, n, 2);
            assert_eq!(
                nontrans,
                oracle_fixdim(GroupSpec::g_ddn(d, n), 2, Transitivity::NontransitiveOnly),
                "G({d},{d},{n}) nontransitive"
            );
            let total = gddn_transitive_poly(d, n, 2).add(&nontrans);
            assert_eq!(
                total,
                oracle_fixdim(GroupSpec::g_ddn(d, n), 2, Transitivity::All),
                "G({d},{d},{n}) totality"
            );
        }
    }

    #[test]
    fn n1cycle_matches_oracle_and_bijection_scaling() {
        let spec = GroupSpec::sym(3);
        let target = crate::oracle::long_cycle_with_fixed_point(3);
        let q = FactorQuery::new(spec, 2)
            .with_target(crate::wreath::GenPerm::new(1, target, vec![0; 3]))
            .with_transitivity(Transitivity::TransitiveOnly);
        assert_eq!(n1cycle_transitive_poly(3, 2), count_by_fixdim(&q).unwrap());

        // the (n-1)-to-1 contraction forces b = (n-1)·jackson(n-1)
        let lhs = n1cycle_transitive_poly(4, 2);
        let rhs = jackson_poly(3, 2).scale(&rat(3));
        assert_eq!(lhs, rhs);

        // b_{n,..,n} = 0
        assert_eq!(n1cycle_transitive_poly(4, 2).coefficient(&[4, 4]), rat(0));
        assert_eq!(n1cycle_transitive_poly(4, 3).coefficient(&[4, 4, 4]), rat(0));
    }

    #[test]
    fn colored_count_formulas_match_oracle() {
        // Cor for Sₙ at n = 3
        assert_eq!(c_sn(3, &[1, 1]), BigInt::from(6));
        let q = FactorQuery::new(GroupSpec::sym(3), 2);
        for p1 in 0..=2i64 {
            for p2 in 0..=2i64 {
                assert_eq!(
                    c_sn(3, &[p1, p2]),
                    colored_count(&q, &[p1 as u32, p2 as u32]).unwrap(),
                    "c_sn p=({p1},{p2})"
                );
            }
        }

        // G(d,1,n) lemma at (2,2), all p ≤ 2
        let q = FactorQuery::new(GroupSpec::g_d1n(2, 2), 2);
        for p1 in 0..=2i64 {
            for p2 in 0..=2i64 {
                assert_eq!(
                    c_gd1n(2, 2, &[p1, p2]),
                    colored_count(&q, &[p1 as u32, p2 as u32]).unwrap(),
                    "c_gd1n p=({p1},{p2})"
                );
            }
        }

        // transitive and nontransitive lemmas for G(2,2,3) at p = (1,1)
        let spec = GroupSpec::g_ddn(2, 3);
        let qt = FactorQuery::new(spec.clone(), 2).with_transitivity(Transitivity::TransitiveOnly);
        let qn = FactorQuery::new(spec, 2).with_transitivity(Transitivity::NontransitiveOnly);
        assert_eq!(c_gddn_trans(2, 3, &[1, 1]), colored_count(&qt, &[1, 1]).unwrap());
        assert_eq!(b_gddn_nontrans(2, 3, &[1, 1]), colored_count(&qn, &[1, 1]).unwrap());
    }

    #[test]
    fn chapuy_stump_counts_match_dp() {
        let spec = GroupSpec::g_d1n(2, 2);
        let inv = spec.invariants();
        let counts = chapuy_stump_counts(&inv, 4);
        assert_eq!(counts[0], BigInt::zero());
        assert_eq!(counts[1], BigInt::zero());
        assert_eq!(counts[2], BigInt::from(4)); // n!·h^n/|W| = 2·16/8
        assert_eq!(counts, crate::oracle::reflection_dp(&spec, 4).unwrap());
    }

    #[test]
    fn genus0_counts_and_zeta() {
        // chain counts are top-degree coefficients of the main polynomials
        let poly = gd1n_poly(2, 2, 2);
        for s1 in 0..=2u32 {
            let s2 = 2 - s1;
            assert_eq!(
                BigRational::from_integer(genus0_gd1n(2, 2, &[s1, s2])),
                poly.coefficient(&[2 - s1, 2 - s2])
            );
        }
        assert_eq!(zeta(&GroupSpec::g_d1n(2, 2), 2).unwrap(), BigInt::from(6));
        assert_eq!(zeta(&GroupSpec::g_d1n(3, 2), 2).unwrap(), BigInt::from(6));
        for d in [3u32, 4, 5] {
            assert_eq!(
                zeta(&GroupSpec::g_ddn(d, 2), 2).unwrap(),
                BigInt::from(d + 2)
            );
        }

        // G(d,d,n) genus-0: sum over all jump profiles equals zeta at k = 2
        let d = 2;
        let n = 3;
        let mut total = BigInt::zero();
        for s1 in 0..=n as u32 {
            let s2 = n as u32 - s1;
            total += genus0_gddn(d, n, &[s1, s2]);
        }
        assert_eq!(total, zeta(&GroupSpec::g_ddn(d, n), 2).unwrap());
    }

    #[test]
    fn rank2_forms_agree() {
        // G(d,1,2): the rank-2 statement is the main theorem restated
        for d in [2u32, 3] {
            assert_eq!(rank2_poly(&GroupSpec::g_d1n(d, 2), 2).unwrap(), gd1n_poly(d, 2, 2));
            assert_eq!(rank2_poly(&GroupSpec::g_d1n(d, 2), 3).unwrap(), gd1n_poly(d, 2, 3));
        }
        // G(d,d,2): equals transitive + nontransitive
        for d in [3u32, 4] {
            let spec = GroupSpec::g_ddn(d, 2);
            let sum = gddn_transitive_poly(d, 2, 2).add(&gddn_nontransitive_poly(d, 2, 2));
            assert_eq!(rank2_poly(&spec, 2).unwrap(), sum, "d={d}");
            // and the explicit two-factor form
            assert_eq!(
                rank2_poly_k2_explicit(&spec.invariants()),
                sum,
                "explicit d={d}"
            );
        }
    }

    #[test]
    fn rank3_forms_agree() {
        assert_eq!(rank3_poly(&GroupSpec::g_d1n(2, 3), 2).unwrap(), gd1n_poly(2, 3, 2));
        let spec = GroupSpec::g_ddn(2, 3);
        let sum = gddn_transitive_poly(2, 3, 2).add(&gddn_nontransitive_poly(2, 3, 2));
        assert_eq!(rank3_poly(&spec, 2).unwrap(), sum);
        assert!(rank3_poly(&GroupSpec::exceptional("G25", vec![6, 9, 12], vec![1, 4, 7]), 2).is_err());
    }

    #[test]
    fn cycle_type_rhs_matches_oracle_counts() {
        let (d, n, k) = (2u32, 2usize, 2usize);
        let counts = count_by_weight0_type(&FactorQuery::new(GroupSpec::g_d1n(d, n), k)).unwrap();
        let lhs = weight0_counts_to_poly(d, k, n, &counts);
        assert_eq!(lhs, cycle_type_rhs(d, n, k, n));
    }

    #[test]
    fn cycle_type_rhs_specializes_to_gd1n() {
        // setting yᵢ ↦ 1^{xᵢ} must reproduce the fixdim polynomial at
        // xᵢ·d + 1; check pointwise on a grid
        let (d, n, k) = (2u32, 2usize, 2usize);
        let refined = cycle_type_rhs(d, n, k, n);
        let plain = gd1n_poly(d, n, k);
        for x1 in 0..=n {
            for x2 in 0..=n {
                let mut point = Vec::new();
                for x in [x1, x2] {
                    for v in 0..n {
                        point.push(if v < x { rat(1) } else { rat(0) });
                    }
                }
                let lhs = refined.eval(&point);
                let rhs = plain.eval(&[
                    rat((x1 as u32 * d + 1) as i64),
                    rat((x2 as u32 * d + 1) as i64),
                ]);
                assert_eq!(lhs, rhs, "x = ({x1},{x2})");
            }
        }
    }

    #[test]
    fn genus0_cycle_type_values() {
        let two = genus0_cycle_type(
            2,
            2,
            &[Partition::new(vec![2]), Partition::new(vec![1])],
        );
        assert_eq!(two, BigInt::from(2));
        // all partitions of size n vanish
        let zero = genus0_cycle_type(
            2,
            2,
            &[Partition::new(vec![2]), Partition::new(vec![2])],
        );
        assert_eq!(zero, BigInt::zero());
    }

    #[test]
    fn all_weights_small_cases() {
        // d=2, n=1, k=2: x_{1,0}x_{2,1} + x_{1,1}x_{2,0}
        let p = all_weights_poly(2, 1, 2);
        assert_eq!(p.coefficient(&[1, 0, 0, 1]), rat(1));
        assert_eq!(p.coefficient(&[0, 1, 1, 0]), rat(1));
        assert_eq!(p.num_terms(), 2);

        // full oracle comparison at (2,2,2)
        let counts =
            count_by_weight_distribution(&FactorQuery::new(GroupSpec::g_d1n(2, 2), 2)).unwrap();
        assert_eq!(
            weight_distribution_counts_to_poly(2, 2, &counts),
            all_weights_poly(2, 2, 2)
        );
    }

    #[test]
    fn all_weights_specializes_to_gd1n() {
        // x_{i,0} = xᵢ, x_{i,j} = 1 for j ≥ 1 recovers the fixdim polynomial
        let (d, n, k) = (2u32, 2usize, 2usize);
        let full = all_weights_poly(d, n, k);
        let subst: Vec<Subst> = (0..k)
            .flat_map(|i| {
                (0..d as usize).map(move |j| {
                    if j == 0 {
                        Subst::Var(i)
                    } else {
                        Subst::Const(rat(1))
                    }
                })
            })
            .collect();
        assert_eq!(full.substitute(&subst, k), gd1n_poly(d, n, k));
    }
}
