//! Character-theoretic counting: the Murnaghan–Nakayama rule for Sₙ, the
//! Frobenius factorization-counting formula, the hook and near-hook
//! character polynomials g_λ, exact cyclotomic values, and the embedded
//! character-polynomial tables for the exceptional groups.

mod cyclo;
mod table;

pub use cyclo::{cyclotomic_polynomial, CycValue};
pub use table::{embedded_table_names, load_embedded, CharEntry, CharTable, FPoly};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::coeffs::{factorial, ExpPoly, UniPoly};
use crate::error::{Error, Result};
use crate::perm::Partition;
use crate::symfunc::{hook_product, z};
use crate::wreath::{GroupInvariants, GroupSpec};

/// χ^λ(μ) by recursive border-strip removal, working on beta-sets.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lambda.size(), mu.size(), "mismatched sizes");
    mn_rec(lambda, mu.parts())
}

fn mn_rec(lambda: &Partition, remaining: &[u32]) -> i64 {
    let Some((&strip, rest)) = remaining.split_first() else {
        return 1; // both empty
    };
    let len = lambda.len();
    let betas: Vec<i64> = (0..len)
        .map(|j| lambda.parts()[j] as i64 + (len - 1 - j) as i64)
        .collect();
    let mut total = 0;
    for j in 0..len {
        let target = betas[j] - strip as i64;
        if target < 0 || betas.contains(&target) {
            continue;
        }
        let height = betas.iter().filter(|&&b| target < b && b < betas[j]).count();
        let mut next = betas.clone();
        next[j] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = next
            .iter()
            .enumerate()
            .map(|(i, &b)| (b - (len - 1 - i) as i64) as u32)
            .collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&Partition::new(parts), rest);
    }
    total
}

/// dim λ = n!/∏ hooks.
pub fn dimension(lambda: &Partition) -> BigInt {
    factorial(lambda.size()) / hook_product(lambda)
}

/// The Frobenius count: the number of factorizations g = u₁···u_k in Sₙ
/// with uᵢ drawn from the conjugacy-closed set Aᵢ (given by its cycle
/// types), for g of cycle type `target`:
/// (1/n!) Σ_λ dim(λ)·χ_λ(g⁻¹)·∏ᵢ χ̂_λ(𝔷ᵢ).
pub fn frobenius_count(n: usize, target: &Partition, sets: &[Vec<Partition>]) -> BigInt {
    assert_eq!(target.size(), n);
    let mut total = BigRational::zero();
    for lambda in Partition::all_of(n) {
        // χ(g⁻¹) = χ(g): g and g⁻¹ share a cycle type
        let chi_target = mn_character(&lambda, target);
        if chi_target == 0 {
            continue;
        }
        let dim = BigRational::from_integer(dimension(&lambda));
        let mut term = BigRational::from_integer(BigInt::from(chi_target)) * &dim;
        for set in sets {
            let mut class_sum = BigRational::zero();
            for mu in set {
                assert_eq!(mu.size(), n);
                let size = BigRational::from_integer(factorial(n) / z(mu));
                class_sum +=
                    size * BigRational::from_integer(BigInt::from(mn_character(&lambda, mu)));
            }
            term *= class_sum / &dim;
        }
        total += term;
    }
    let value = total / BigRational::from_integer(factorial(n));
    assert!(value.is_integer(), "Frobenius count must be an integer");
    value.to_integer()
}

/// g_λ(x) = Σ_{μ⊢n} (n!/z_μ)·(χ_λ(μ)/dim λ)·x^{ℓ(μ)}, the normalized
/// class-sum generating polynomial by cycle count.
pub fn g_lambda(lambda: &Partition) -> UniPoly {
    let n = lambda.size();
    let dim = dimension(lambda);
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for mu in Partition::all_of(n) {
        let chi = mn_character(lambda, &mu);
        if chi == 0 {
            continue;
        }
        coeffs[mu.len()] +=
            BigRational::new(factorial(n) / z(&mu) * BigInt::from(chi), dim.clone());
    }
    UniPoly::from_coeffs(coeffs)
}

/// The hook ⟨n-m, 1^m⟩ with n cells.
pub fn hook(n: usize, m: usize) -> Partition {
    assert!(m < n);
    let mut parts = vec![1u32; m + 1];
    parts[0] = (n - m) as u32;
    Partition::new(parts)
}

/// The near hook ⟨n-m-1, 2, 1^{m-1}⟩ with n cells, for 1 ≤ m ≤ n-3.
pub fn near_hook(n: usize, m: usize) -> Partition {
    assert!((1..=n.saturating_sub(3)).contains(&m));
    let mut parts = vec![1u32; m + 1];
    parts[0] = (n - m - 1) as u32;
    parts[1] = 2;
    Partition::new(parts)
}

/// Closed form for hooks: g_{⟨n-m,1^m⟩}(x) = (x-m)(x-m+1)···(x-m+n-1).
pub fn hook_g(n: usize, m: usize) -> UniPoly {
    let roots: Vec<i64> = (0..n as i64).map(|j| m as i64 - j).collect();
    UniPoly::from_integer_roots(&roots)
}

/// Closed form for near hooks: g_{⟨n-m-1,2,1^{m-1}⟩}(x) = x·g_{⟨n-1-m,1^m⟩}(x).
pub fn near_hook_g(n: usize, m: usize) -> UniPoly {
    UniPoly::x().mul(&hook_g(n - 1, m))
}

/// ∏ (x - 1 + dᵢ): the character polynomial of the trivial character.
pub fn triv_poly(inv: &GroupInvariants) -> UniPoly {
    let roots: Vec<i64> = inv.degrees.iter().map(|&d| 1 - d as i64).collect();
    UniPoly::from_integer_roots(&roots)
}

/// ∏ (x - e*ᵢ): the character polynomial of the determinant character.
pub fn det_poly(inv: &GroupInvariants) -> UniPoly {
    let roots: Vec<i64> = inv.coexponents.iter().map(|&e| e as i64).collect();
    UniPoly::from_integer_roots(&roots)
}

/// Assemble the factorization polynomial of an exceptional group from its
/// character table:
/// F_G(x₁,..,x_k) = (1/|G|) Σ_λ dim(λ)·χ_λ(c⁻¹)·∏ᵢ f_{χ_λ}(xᵢ).
/// The cyclotomic character values must cancel to rational integers; a
/// residue is reported as table-data corruption.
pub fn exceptional_f(table: &CharTable, k: usize) -> Result<ExpPoly> {
    assert!(k >= 1);
    let m = table.order_m;
    let phi = cyclotomic_polynomial(m);
    // per-exponent coefficients in Q[t]/(t^m - 1)
    let mut acc: BTreeMap<Vec<u32>, Vec<BigRational>> = BTreeMap::new();
    for entry in &table.entries {
        let f = table.f_power(entry);
        let tensor = ExpPoly::product_of_univariates(&vec![f; k]);
        let weight = entry.chi.scale(&BigInt::from(entry.dim));
        for (exps, c) in tensor.terms() {
            let slot = acc
                .entry(exps.to_vec())
                .or_insert_with(|| vec![BigRational::zero(); m]);
            for (j, w) in weight.coeffs().iter().enumerate() {
                if !w.is_zero() {
                    slot[j] += BigRational::from_integer(w.clone()) * c;
                }
            }
        }
    }
    let order = BigRational::from_integer(table.order());
    let mut out = ExpPoly::zero(k);
    for (exps, cyc) in acc {
        let reduced = cyclo::rem_mod(&cyc, &phi);
        if reduced.len() > 1 {
            return Err(Error::Table(format!(
                "{}: cyclotomic residue survives at exponent {exps:?}",
                table.name
            )));
        }
        let value = reduced.first().cloned().unwrap_or_else(BigRational::zero) / &order;
        if value.is_zero() {
            continue;
        }
        if !value.is_integer() || value.is_negative() {
            return Err(Error::Table(format!(
                "{}: coefficient {value} at {exps:?} is not a nonnegative integer",
                table.name
            )));
        }
        out.add_term(exps, value);
    }
    Ok(out)
}

/// Outcome of the f_triv/f_det consistency checks.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub group: String,
    pub triv_ok: bool,
    pub det_ok: bool,
    pub messages: Vec<String>,
}

impl IdentityReport {
    pub fn all_ok(&self) -> bool {
        self.triv_ok && self.det_ok
    }
}

/// Check that a table contains ∏(x-1+dᵢ) (trivial character) and ∏(x-e*ᵢ)
/// (determinant character) among its character polynomials.
pub fn char_poly_identity_check_table(table: &CharTable) -> IdentityReport {
    let inv = table.group_spec().invariants();
    let triv = triv_poly(&inv);
    let det = det_poly(&inv);
    let mut report = IdentityReport {
        group: table.name.clone(),
        triv_ok: false,
        det_ok: false,
        messages: Vec::new(),
    };
    for entry in &table.entries {
        let f = table.f_power(entry);
        if f == triv {
            report.triv_ok = true;
        }
        if f == det {
            report.det_ok = true;
        }
    }
    if !report.triv_ok {
        report
            .messages
            .push(format!("no entry equals f_triv = {triv:?}"));
    }
    if !report.det_ok {
        report
            .messages
            .push(format!("no entry equals f_det = {det:?}"));
    }
    report
}

/// Brute-force the two identities over a wreath group: Σ x^{dim fix w} must
/// be ∏(x-1+dᵢ) and Σ det(w)·x^{dim fix w} must be ∏(x-e*ᵢ), with
/// det(w) = sign(π)·ζ_d^{Σ aᵢ} handled exactly in Z[ζ_d].
pub fn char_poly_identity_check_wreath(spec: &GroupSpec) -> Result<IdentityReport> {
    if !matches!(spec, GroupSpec::Gd1n { .. } | GroupSpec::Gddn { .. }) {
        return Err(Error::Unsupported(
            "identity check by summation needs a wreath matrix model".into(),
        ));
    }
    let inv = spec.invariants();
    let n = spec.n_points().unwrap();
    let d = spec.wreath_d().unwrap() as usize;
    let mut triv_counts = vec![BigInt::zero(); n + 1];
    // det exponent distribution per fixed-space dimension
    let mut det_counts = vec![vec![BigInt::zero(); d]; n + 1];
    for w in spec.elements()? {
        // one cycle pass per element: fixdim, sign and total weight together
        let cycles = w.perm().cycles0();
        let fix = cycles.iter().filter(|c| w.cycle_weight(c) == 0).count();
        let flips: usize = cycles.iter().map(|c| c.len() - 1).sum();
        let sign = if flips % 2 == 0 { 1 } else { -1 };
        triv_counts[fix] += 1;
        let exponent = w.weights().iter().map(|&a| a as usize).sum::<usize>() % d;
        det_counts[fix][exponent] += sign;
    }
    let triv = triv_poly(&inv);
    let det = det_poly(&inv);
    let mut report = IdentityReport {
        group: spec.name(),
        triv_ok: true,
        det_ok: true,
        messages: Vec::new(),
    };
    for (fix, count) in triv_counts.iter().enumerate() {
        if BigRational::from_integer(count.clone()) != triv.coeff(fix) {
            report.triv_ok = false;
            report
                .messages
                .push(format!("Shephard-Todd mismatch at degree {fix}"));
        }
    }
    for (fix, dist) in det_counts.iter().enumerate() {
        let value = CycValue::new(d, dist.clone());
        let expected = det.coeff(fix);
        let matches = value
            .as_integer()
            .is_some_and(|v| BigRational::from_integer(v) == expected);
        if !matches {
            report.det_ok = false;
            report
                .messages
                .push(format!("Orlik-Solomon mismatch at degree {fix}"));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::{jackson_poly, n1cycle_transitive_poly, rank2_poly};
    use crate::coeffs::rat;
    use num_traits::One;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn mn_trivial_and_sign_characters() {
        for n in 1..=6usize {
            for mu in Partition::all_of(n) {
                assert_eq!(mn_character(&part(&[n as u32]), &mu), 1);
                let sign = if (n - mu.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(mn_character(&part(&vec![1; n]), &mu), sign);
            }
        }
    }

    #[test]
    fn mn_column_orthogonality_small() {
        // Σ_λ χ^λ(μ)·χ^λ(ν) = δ_{μν}·z_μ
        for n in 1..=5usize {
            let classes = Partition::all_of(n);
            for mu in &classes {
                for nu in &classes {
                    let sum: i64 = classes
                        .iter()
                        .map(|l| mn_character(l, mu) * mn_character(l, nu))
                        .sum();
                    let expected = if mu == nu {
                        z(mu)
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(BigInt::from(sum), expected, "n={n} mu={mu:?} nu={nu:?}");
                }
            }
        }
    }

    #[test]
    fn dimension_matches_identity_column() {
        for n in 1..=6usize {
            for lambda in Partition::all_of(n) {
                assert_eq!(
                    dimension(&lambda),
                    BigInt::from(mn_character(&lambda, &part(&vec![1; n])))
                );
            }
        }
    }

    #[test]
    fn frobenius_reproduces_jackson_counts() {
        // two-factor counts of the 4-cycle by cycle count
        let n = 4;
        let by_cycles: Vec<Vec<Partition>> = (1..=n)
            .map(|r| {
                Partition::all_of(n)
                    .into_iter()
                    .filter(|mu| mu.len() == r)
                    .collect()
            })
            .collect();
        let target = part(&[n as u32]);
        let jackson = jackson_poly(n, 2);
        for r1 in 1..=n {
            for r2 in 1..=n {
                let count = frobenius_count(
                    n,
                    &target,
                    &[by_cycles[r1 - 1].clone(), by_cycles[r2 - 1].clone()],
                );
                assert_eq!(
                    BigRational::from_integer(count),
                    jackson.coefficient(&[r1 as u32, r2 as u32]),
                    "r=({r1},{r2})"
                );
            }
        }
    }

    #[test]
    fn frobenius_single_set_is_class_indicator() {
        let target = part(&[3, 1]);
        let yes = frobenius_count(4, &target, &[vec![part(&[3, 1])]]);
        let no = frobenius_count(4, &target, &[vec![part(&[2, 2])]]);
        assert_eq!(yes, BigInt::one());
        assert_eq!(no, BigInt::zero());
    }

    #[test]
    fn n1cycle_counts_via_difference_of_frobenius() {
        // b_r = d_r - c_r with c_r coming from S_{n-1}
        for n in 3..=5usize {
            let poly = n1cycle_transitive_poly(n, 2);
            let target_n = Partition::new(vec![n as u32 - 1, 1]);
            let target_n1 = Partition::new(vec![n as u32 - 1]);
            for r1 in 1..=n {
                for r2 in 1..=n {
                    let set = |size: usize, r: usize| -> Vec<Partition> {
                        Partition::all_of(size)
                            .into_iter()
                            .filter(|mu| mu.len() == r)
                            .collect()
                    };
                    let d_count =
                        frobenius_count(n, &target_n, &[set(n, r1), set(n, r2)]);
                    // an empty class set (rᵢ - 1 = 0 cycles) contributes 0
                    let c_count =
                        frobenius_count(n - 1, &target_n1, &[set(n - 1, r1 - 1), set(n - 1, r2 - 1)]);
                    assert_eq!(
                        BigRational::from_integer(d_count - c_count),
                        poly.coefficient(&[r1 as u32, r2 as u32]),
                        "n={n} r=({r1},{r2})"
                    );
                }
            }
        }
    }

    #[test]
    fn g_lambda_closed_forms() {
        // hooks for all n ≤ 6 (acceptance extends to 7)
        for n in 2..=6usize {
            for m in 0..n {
                assert_eq!(g_lambda(&hook(n, m)), hook_g(n, m), "hook n={n} m={m}");
            }
            for m in 1..=n.saturating_sub(3) {
                assert_eq!(
                    g_lambda(&near_hook(n, m)),
                    near_hook_g(n, m),
                    "near hook n={n} m={m}"
                );
            }
        }
        // g_(n) = x(x+1)..(x+n-1) and g_(1^n) = (x-n+1)..x
        assert_eq!(g_lambda(&part(&[5])), hook_g(5, 0));
        assert_eq!(g_lambda(&part(&[1, 1, 1, 1, 1])), hook_g(5, 4));
        // the binomial-basis expansion of eq. hooks
        for (n, m) in [(5usize, 2usize), (6, 3)] {
            let mut rhs = UniPoly::zero();
            for k in m + 1..=n {
                let c = crate::coeffs::binomial(n as i64 - 1 - m as i64, k as i64 - 1 - m as i64)
                    * factorial(n);
                let binom_poly = crate::coeffs::falling(k)
                    .scale(&BigRational::new(BigInt::one(), factorial(k)));
                rhs = rhs.add(&binom_poly.scale(&BigRational::from_integer(c)));
            }
            assert_eq!(hook_g(n, m), rhs, "n={n} m={m}");
        }
    }

    #[test]
    fn wreath_identity_checks() {
        for spec in [
            GroupSpec::g_d1n(2, 2),
            GroupSpec::g_d1n(3, 2),
            GroupSpec::g_ddn(3, 3),
        ] {
            let report = char_poly_identity_check_wreath(&spec).unwrap();
            assert!(report.all_ok(), "{}: {:?}", spec.name(), report.messages);
        }
    }

    #[test]
    fn g4_table_round_trip_and_identities() {
        let table = load_embedded("G4").unwrap();
        assert_eq!(table.degrees, vec![4, 6]);
        let report = char_poly_identity_check_table(&table);
        assert!(report.all_ok(), "{:?}", report.messages);

        // the trivial entry expands to (x+3)(x+5)
        let triv = table.f_power(&table.entries[0]);
        assert_eq!(triv, UniPoly::from_integer_roots(&[-3, -5]));

        // serialize → load → serialize is a fixpoint and preserves the table
        let s1 = table.serialize();
        let reloaded = CharTable::parse(&s1).unwrap();
        assert_eq!(reloaded, table);
        assert_eq!(reloaded.serialize(), s1);
    }

    #[test]
    fn exceptional_f_is_one_at_k1() {
        // F_G(x) at k = 1 counts the single factorization c = c, fixdim 0
        for name in embedded_table_names() {
            let table = load_embedded(name).unwrap();
            let f = exceptional_f(&table, 1).unwrap();
            assert_eq!(f, ExpPoly::one(1), "{name}");
        }
    }

    #[test]
    fn g6_assembles_to_rank2_form() {
        let table = load_embedded("G6").unwrap();
        let f = exceptional_f(&table, 2).unwrap();
        assert_eq!(f, rank2_poly(&table.group_spec(), 2).unwrap());

        // the assembled polynomial also matches the explicit three-product
        // simplification |G|·(∏(P2+2P1+P0) - 2∏(P2+P1) + ∏P2)
        let basis = table.basis.clone().unwrap();
        let combo = |c2: i64, c1: i64, c0: i64| {
            basis[2]
                .scale(&rat(c2))
                .add(&basis[1].scale(&rat(c1)))
                .add(&UniPoly::constant(rat(c0)))
        };
        let product = |p: UniPoly| ExpPoly::product_of_univariates(&[p.clone(), p]);
        let explicit = product(combo(1, 2, 1))
            .sub(&product(combo(1, 1, 0)).scale(&rat(2)))
            .add(&product(combo(1, 0, 0)))
            .scale(&rat(48));
        assert_eq!(f, explicit);
    }

    #[test]
    fn corrupted_table_is_rejected() {
        let table = load_embedded("G4").unwrap();
        let corrupted = table.serialize().replace("dim=2", "dim=3");
        let parsed = CharTable::parse(&corrupted).unwrap();
        // the identity check still passes (f rows intact) but the Frobenius
        // assembly detects the inconsistent dimensions
        assert!(exceptional_f(&parsed, 2).is_err() || exceptional_f(&parsed, 2).unwrap() != exceptional_f(&table, 2).unwrap());
        // and a structurally broken file fails to parse
        assert!(CharTable::parse("group X\ndegrees 2\n").is_err());
        assert!(CharTable::parse(&table.serialize().replace("coexponents 1 3", "coexponents 1")).is_err());
    }
}
