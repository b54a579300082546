//! Independent brute-force ground truth.
//!
//! Every count here is obtained by enumerating tuples (u₁,..,u_{k-1}) over
//! G^{k-1}, solving for the last factor u_k = (u₁···u_{k-1})⁻¹·target, and
//! classifying the resulting factorization. Nothing is shared with the
//! closed-form evaluators, so agreement between the two is meaningful.
//!
//! The enumeration is embarrassingly parallel: disjoint index ranges are
//! folded locally and merged by (big-)integer addition. With the `parallel`
//! feature the work is spread over a rayon pool; the sequential path is
//! always available and is what the feature-less build uses.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coeffs::{binomial, ExpPoly};
use crate::error::{Error, Result};
use crate::perm::{Composition, Partition, Permutation, UnionFind};
use crate::symfunc::alphabet_power_sum;
use crate::wreath::{GenPerm, GroupSpec};

/// Default ceiling on the number of classified tuples, |G|^{k-1}.
pub const DEFAULT_WORK_LIMIT: u64 = 100_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Transitivity {
    All,
    TransitiveOnly,
    NontransitiveOnly,
}

/// A factorization-counting question: which group, which target (the
/// Coxeter element when unset), how many factors, and which transitivity
/// class of the underlying permutations to keep.
#[derive(Clone, Debug)]
pub struct FactorQuery {
    pub spec: GroupSpec,
    pub target: Option<GenPerm>,
    pub k: usize,
    pub transitivity: Transitivity,
    pub work_limit: u64,
}

impl FactorQuery {
    pub fn new(spec: GroupSpec, k: usize) -> Self {
        assert!(k >= 1);
        FactorQuery {
            spec,
            target: None,
            k,
            transitivity: Transitivity::All,
            work_limit: DEFAULT_WORK_LIMIT,
        }
    }

    pub fn with_target(mut self, target: GenPerm) -> Self {
        self.target = Some(target);
        self
    }

    pub fn with_transitivity(mut self, t: Transitivity) -> Self {
        self.transitivity = t;
        self
    }

    pub fn with_work_limit(mut self, limit: u64) -> Self {
        self.work_limit = limit;
        self
    }

    fn resolve_target(&self) -> Result<GenPerm> {
        match &self.target {
            Some(t) => Ok(t.clone()),
            None => self.spec.coxeter_element(),
        }
    }
}

struct Context {
    elements: Vec<GenPerm>,
    index: HashMap<GenPerm, usize>,
    fixdim: Vec<u32>,
    w0type: Vec<Partition>,
    wdist: Vec<Vec<u32>>,
    /// 0-based cycles of the underlying permutation, per element.
    cycles: Vec<Vec<Vec<usize>>>,
    target: GenPerm,
    n: usize,
    k: usize,
    transitivity: Transitivity,
}

impl Context {
    fn build(q: &FactorQuery) -> Result<Context> {
        let target = q.resolve_target()?;
        let n = q
            .spec
            .n_points()
            .ok_or_else(|| Error::Unsupported(format!("{} cannot be enumerated", q.spec.name())))?;
        let order = q.spec.order();
        let mut required = BigInt::one();
        for _ in 1..q.k {
            required *= &order;
        }
        if required > BigInt::from(q.work_limit) {
            return Err(Error::WorkLimit {
                required,
                limit: q.work_limit,
            });
        }
        let elements = q.spec.elements_with_limit(q.work_limit)?;
        let index = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        let fixdim = elements.iter().map(|e| e.fixdim() as u32).collect();
        let w0type = elements.iter().map(|e| e.weight0_cycle_type()).collect();
        let wdist = elements.iter().map(|e| e.weight_distribution()).collect();
        let cycles = elements.iter().map(|e| e.perm().cycles0()).collect();
        Ok(Context {
            elements,
            index,
            fixdim,
            w0type,
            wdist,
            cycles,
            target,
            n,
            k: q.k,
            transitivity: q.transitivity,
        })
    }

    fn tuple_count(&self) -> u64 {
        (self.elements.len() as u64).pow(self.k as u32 - 1)
    }

    /// Decode one flat index into k factor indices (the last solved for),
    /// apply the transitivity filter, and return None for filtered tuples.
    fn decode(&self, flat: u64) -> Option<Vec<usize>> {
        let m = self.elements.len() as u64;
        let mut rem = flat;
        let mut factors = Vec::with_capacity(self.k);
        let mut prefix: Option<GenPerm> = None;
        for _ in 0..self.k - 1 {
            let idx = (rem % m) as usize;
            rem /= m;
            factors.push(idx);
            prefix = Some(match prefix {
                None => self.elements[idx].clone(),
                Some(p) => p.multiply(&self.elements[idx]),
            });
        }
        let last = match prefix {
            None => self.target.clone(),
            Some(p) => p.inverse().multiply(&self.target),
        };
        // the solved factor can fall outside G(d,d,n); such tuples are not
        // factorizations within the group
        let last_idx = *self.index.get(&last)?;
        factors.push(last_idx);
        match self.transitivity {
            Transitivity::All => Some(factors),
            mode => {
                let mut uf = UnionFind::new(self.n);
                for &fi in &factors {
                    for cycle in &self.cycles[fi] {
                        for w in cycle.windows(2) {
                            uf.union(w[0], w[1]);
                        }
                    }
                }
                let transitive = uf.component_count() == 1;
                let keep = match mode {
                    Transitivity::TransitiveOnly => transitive,
                    Transitivity::NontransitiveOnly => !transitive,
                    Transitivity::All => unreachable!(),
                };
                keep.then_some(factors)
            }
        }
    }
}

/// Fold `item` over all passing factorizations, merging partial results by
/// `merge`. Runs on the rayon pool when built with the `parallel` feature.
fn run<A, F, E, M>(ctx: &Context, item: F, empty: E, merge: M, sequential: bool) -> A
where
    A: Send,
    F: Fn(&mut A, &[usize]) + Sync,
    E: Fn() -> A + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let total = ctx.tuple_count();
    let step = |acc: &mut A, flat: u64| {
        if let Some(factors) = ctx.decode(flat) {
            item(acc, &factors);
        }
    };
    #[cfg(feature = "parallel")]
    if !sequential {
        use rayon::prelude::*;
        return (0..total as usize)
            .into_par_iter()
            .with_min_len(512)
            .fold(&empty, |mut acc, flat| {
                step(&mut acc, flat as u64);
                acc
            })
            .reduce(&empty, merge);
    }
    let _ = (&merge, sequential);
    let mut acc = empty();
    for flat in 0..total {
        step(&mut acc, flat);
    }
    acc
}

fn fixdim_map(ctx: &Context, sequential: bool) -> BTreeMap<Vec<u32>, BigInt> {
    run(
        ctx,
        |acc: &mut BTreeMap<Vec<u32>, BigInt>, factors| {
            let key: Vec<u32> = factors.iter().map(|&f| ctx.fixdim[f]).collect();
            *acc.entry(key).or_default() += 1;
        },
        BTreeMap::new,
        merge_maps,
        sequential,
    )
}

fn merge_maps<K: Ord>(mut a: BTreeMap<K, BigInt>, b: BTreeMap<K, BigInt>) -> BTreeMap<K, BigInt> {
    for (k, v) in b {
        *a.entry(k).or_default() += v;
    }
    a
}

fn counts_to_poly(k: usize, counts: BTreeMap<Vec<u32>, BigInt>) -> ExpPoly {
    let mut poly = ExpPoly::zero(k);
    for (exps, c) in counts {
        poly.add_term(exps, BigRational::from_integer(c));
    }
    poly
}

/// Generating polynomial Σ (count)·x₁^{r₁}···x_k^{r_k} over the
/// factorizations of the target, where rᵢ is the fixed space dimension of
/// factor i.
pub fn count_by_fixdim(q: &FactorQuery) -> Result<ExpPoly> {
    let ctx = Context::build(q)?;
    Ok(counts_to_poly(q.k, fixdim_map(&ctx, false)))
}

/// Single-threaded version of [`count_by_fixdim`], kept callable for
/// benchmark comparison against the rayon path.
pub fn count_by_fixdim_sequential(q: &FactorQuery) -> Result<ExpPoly> {
    let ctx = Context::build(q)?;
    Ok(counts_to_poly(q.k, fixdim_map(&ctx, true)))
}

/// Counts keyed by the tuple of weight-0 cycle types of the factors.
pub fn count_by_weight0_type(q: &FactorQuery) -> Result<BTreeMap<Vec<Partition>, BigInt>> {
    let ctx = Context::build(q)?;
    Ok(run(
        &ctx,
        |acc: &mut BTreeMap<Vec<Partition>, BigInt>, factors| {
            let key: Vec<Partition> = factors.iter().map(|&f| ctx.w0type[f].clone()).collect();
            *acc.entry(key).or_default() += 1;
        },
        BTreeMap::new,
        merge_maps,
        false,
    ))
}

/// Counts keyed by the full weight distribution of each factor: factor i
/// contributes the length-d vector (rᵢ₀,..,rᵢ,d₋₁) of its cycle counts by
/// weight.
pub fn count_by_weight_distribution(q: &FactorQuery) -> Result<BTreeMap<Vec<Vec<u32>>, BigInt>> {
    let ctx = Context::build(q)?;
    Ok(run(
        &ctx,
        |acc: &mut BTreeMap<Vec<Vec<u32>>, BigInt>, factors| {
            let key: Vec<Vec<u32>> = factors.iter().map(|&f| ctx.wdist[f].clone()).collect();
            *acc.entry(key).or_default() += 1;
        },
        BTreeMap::new,
        merge_maps,
        false,
    ))
}

/// Number of valid cycle-colorings of one factor with `p` strips when the
/// factor has `weight0` cycles of weight 0. For the symmetric group the
/// color set is {1,..,p} with every color used; in the wreath case the color
/// set is {0,..,pd} with every d-strip used and color 0 free (cycles of
/// nonzero weight are forced to color 0 and contribute no choice).
/// Inclusion–exclusion over the set of unused strips.
fn strip_colorings(d: u32, p: u32, weight0: u32, sym_rule: bool) -> BigInt {
    let mut acc = BigInt::zero();
    for j in 0..=p {
        let colors = if sym_rule {
            BigInt::from(p - j)
        } else {
            BigInt::from((p - j) * d + 1)
        };
        let term = binomial(p as i64, j as i64) * colors.pow(weight0);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Number of colored factorizations with strip counts `p` (one entry per
/// factor). Colorings are never materialized; each factor contributes an
/// inclusion–exclusion count.
pub fn colored_count(q: &FactorQuery, p: &[u32]) -> Result<BigInt> {
    assert_eq!(p.len(), q.k);
    let sym_rule = matches!(q.spec, GroupSpec::Sym { .. });
    let d = q.spec.wreath_d().unwrap_or(1);
    let ctx = Context::build(q)?;
    Ok(run(
        &ctx,
        |acc: &mut BigInt, factors| {
            let mut term = BigInt::one();
            for (i, &f) in factors.iter().enumerate() {
                term *= strip_colorings(d, p[i], ctx.fixdim[f], sym_rule);
                if term.is_zero() {
                    break;
                }
            }
            *acc += term;
        },
        BigInt::zero,
        |a, b| a + b,
        false,
    ))
}

/// Colorings of one factor's weight-0 cycles (given by their `lengths`)
/// that realize the exact per-color length profile `alpha`. Wreath factors
/// may additionally send cycles to color 0, and each strip-colored cycle
/// picks one of d colors within its strip.
fn type_colorings(d: u32, alpha: &[u32], lengths: &[u32], sym_rule: bool) -> BigInt {
    fn dfs(
        d: u32,
        lengths: &[u32],
        pos: usize,
        remaining: &mut [u32],
        assigned: u32,
        sym_rule: bool,
    ) -> BigInt {
        if pos == lengths.len() {
            if remaining.iter().all(|&r| r == 0) {
                return if sym_rule {
                    BigInt::one()
                } else {
                    BigInt::from(d).pow(assigned)
                };
            }
            return BigInt::zero();
        }
        let mut acc = BigInt::zero();
        if !sym_rule {
            acc += dfs(d, lengths, pos + 1, remaining, assigned, sym_rule);
        }
        for j in 0..remaining.len() {
            if remaining[j] >= lengths[pos] {
                remaining[j] -= lengths[pos];
                acc += dfs(d, lengths, pos + 1, remaining, assigned + 1, sym_rule);
                remaining[j] += lengths[pos];
            }
        }
        acc
    }
    let mut remaining = alpha.to_vec();
    dfs(d, lengths, 0, &mut remaining, 0, sym_rule)
}

/// Number of colored factorizations whose i-th factor has per-color length
/// profile `alphas[i]` (for wreath factors, per-strip totals).
pub fn colored_count_by_type(q: &FactorQuery, alphas: &[Composition]) -> Result<BigInt> {
    assert_eq!(alphas.len(), q.k);
    let sym_rule = matches!(q.spec, GroupSpec::Sym { .. });
    let d = q.spec.wreath_d().unwrap_or(1);
    let ctx = Context::build(q)?;
    Ok(run(
        &ctx,
        |acc: &mut BigInt, factors| {
            let mut term = BigInt::one();
            for (i, &f) in factors.iter().enumerate() {
                term *= type_colorings(d, alphas[i].parts(), ctx.w0type[f].parts(), sym_rule);
                if term.is_zero() {
                    break;
                }
            }
            *acc += term;
        },
        BigInt::zero,
        |a, b| a + b,
        false,
    ))
}

/// N_ℓ for ℓ = 0..=l_max: the number of ways to write the Coxeter element
/// as an ordered product of ℓ reflections, by repeated convolution of the
/// counting distribution with the reflection set.
pub fn reflection_dp(spec: &GroupSpec, l_max: usize) -> Result<Vec<BigInt>> {
    let c = spec.coxeter_element()?;
    let reflections = spec.reflections()?;
    let d = spec.wreath_d().unwrap();
    let n = spec.n_points().unwrap();
    let mut dist: HashMap<GenPerm, BigInt> = HashMap::new();
    dist.insert(GenPerm::identity(d, n), BigInt::one());
    let mut out = Vec::with_capacity(l_max + 1);
    out.push(dist.get(&c).cloned().unwrap_or_default());
    for _ in 1..=l_max {
        let mut next: HashMap<GenPerm, BigInt> = HashMap::new();
        for (g, count) in &dist {
            for r in &reflections {
                *next.entry(g.multiply(r)).or_default() += count;
            }
        }
        dist = next;
        out.push(dist.get(&c).cloned().unwrap_or_default());
    }
    Ok(out)
}

/// Contract a transitive factorization u·v = (1..(n-1))(n) in Sₙ to a
/// factorization u'·v' of the (n-1)-cycle in S_{n-1}. Returns (u', v', t)
/// where t = v(n) is the (1-based) witness making the map (n-1)-to-1.
pub fn n1_contract(u: &Permutation, v: &Permutation) -> Result<(Permutation, Permutation, u32)> {
    let n = u.n();
    let expected = long_cycle_with_fixed_point(n);
    if u.compose(v) != expected {
        return Err(Error::InvalidArgument(
            "u·v is not the standard (n-1)-cycle".into(),
        ));
    }
    let t = v.apply(n - 1);
    if t == n - 1 {
        return Err(Error::InvalidArgument(
            "factorization is not transitive: both factors fix n".into(),
        ));
    }
    let tau = Permutation::transposition(n, t as u32 + 1, n as u32);
    let u1 = u.compose(&tau).restrict(n - 1);
    let v1 = tau.compose(v).restrict(n - 1);
    Ok((u1, v1, t as u32 + 1))
}

/// Inverse of [`n1_contract`]: lift a factorization of the (n-1)-cycle in
/// S_{n-1} back to a transitive factorization of (1..(n-1))(n) in Sₙ, using
/// the witness t ∈ [n-1].
pub fn n1_expand(u1: &Permutation, v1: &Permutation, t: u32, n: usize) -> (Permutation, Permutation) {
    assert_eq!(u1.n(), n - 1);
    assert!(1 <= t && (t as usize) < n);
    let tau = Permutation::transposition(n, t, n as u32);
    let u = u1.extend(n).compose(&tau);
    let v = tau.compose(&v1.extend(n));
    (u, v)
}

/// The permutation (1 2 .. n-1)(n).
pub fn long_cycle_with_fixed_point(n: usize) -> Permutation {
    let cycle: Vec<u32> = (1..n as u32).collect();
    Permutation::from_cycles(n, &[&cycle])
}

/// Rebuild the weight0-type generating polynomial from oracle counts: each
/// factor's type λ contributes ∏_{m ∈ λ} (d·p_m(y) + 1) on `vars` variables
/// per factor.
pub fn weight0_counts_to_poly(
    d: u32,
    k: usize,
    vars: usize,
    counts: &BTreeMap<Vec<Partition>, BigInt>,
) -> ExpPoly {
    let mut out = ExpPoly::zero(k * vars);
    for (types, count) in counts {
        assert_eq!(types.len(), k);
        let factors: Vec<ExpPoly> = types
            .iter()
            .map(|lambda| {
                let mut f = ExpPoly::one(vars);
                for &m in lambda.parts() {
                    f = f.mul(&alphabet_power_sum(d, m, vars));
                }
                f
            })
            .collect();
        let refs: Vec<&ExpPoly> = factors.iter().collect();
        let tensored = ExpPoly::tensor(&refs);
        out = out.add(&tensored.scale(&BigRational::from_integer(count.clone())));
    }
    out
}

/// Rebuild the all-weights generating polynomial from oracle counts: the
/// factor-i distribution (rᵢ₀,..,rᵢ,d₋₁) is the exponent vector of the
/// variables x_{i,0},..,x_{i,d-1}.
pub fn weight_distribution_counts_to_poly(
    d: u32,
    k: usize,
    counts: &BTreeMap<Vec<Vec<u32>>, BigInt>,
) -> ExpPoly {
    let arity = k * d as usize;
    let mut out = ExpPoly::zero(arity);
    for (dists, count) in counts {
        assert_eq!(dists.len(), k);
        let mut exps = Vec::with_capacity(arity);
        for dist in dists {
            assert_eq!(dist.len(), d as usize);
            exps.extend_from_slice(dist);
        }
        out.add_term(exps, BigRational::from_integer(count.clone()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::rat;
    use crate::perm::{enumerate_sn, is_transitive};

    #[test]
    fn s2_two_factor_polynomial_by_hand() {
        // the only factorizations of (12) are (id,(12)) and ((12),id)
        let q = FactorQuery::new(GroupSpec::sym(2), 2);
        let poly = count_by_fixdim(&q).unwrap();
        assert_eq!(poly.coefficient(&[2, 1]), rat(1));
        assert_eq!(poly.coefficient(&[1, 2]), rat(1));
        assert_eq!(poly.num_terms(), 2);
    }

    #[test]
    fn total_counts_equal_group_order_powers() {
        // u₁ free, u₂ determined: |G| factorizations in total
        let q = FactorQuery::new(GroupSpec::g_d1n(2, 2), 2);
        let poly = count_by_fixdim(&q).unwrap();
        let total: BigRational = poly.terms().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, rat(8));
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let q = FactorQuery::new(GroupSpec::g_ddn(2, 3), 3);
        assert_eq!(
            count_by_fixdim(&q).unwrap(),
            count_by_fixdim_sequential(&q).unwrap()
        );
    }

    #[test]
    fn transitivity_split_is_a_partition_of_all() {
        let spec = GroupSpec::g_ddn(2, 3);
        let all = count_by_fixdim(&FactorQuery::new(spec.clone(), 2)).unwrap();
        let trans = count_by_fixdim(
            &FactorQuery::new(spec.clone(), 2).with_transitivity(Transitivity::TransitiveOnly),
        )
        .unwrap();
        let nontrans = count_by_fixdim(
            &FactorQuery::new(spec, 2).with_transitivity(Transitivity::NontransitiveOnly),
        )
        .unwrap();
        assert_eq!(trans.add(&nontrans), all);
        let total: BigRational = all.terms().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, rat(24));
    }

    #[test]
    fn gd1n_factorizations_are_always_transitive() {
        let spec = GroupSpec::g_d1n(2, 3);
        let all = count_by_fixdim(&FactorQuery::new(spec.clone(), 2)).unwrap();
        let trans = count_by_fixdim(
            &FactorQuery::new(spec, 2).with_transitivity(Transitivity::TransitiveOnly),
        )
        .unwrap();
        assert_eq!(all, trans);
    }

    #[test]
    fn work_limit_is_enforced() {
        let q = FactorQuery::new(GroupSpec::g_d1n(2, 3), 4).with_work_limit(1000);
        match count_by_fixdim(&q) {
            Err(Error::WorkLimit { required, limit }) => {
                assert_eq!(required, BigInt::from(48u64 * 48 * 48));
                assert_eq!(limit, 1000);
            }
            other => panic!("expected work-limit error, got {other:?}"),
        }
    }

    #[test]
    fn colored_count_matches_literal_enumeration() {
        // literal coloring enumeration for tiny cases pins the
        // inclusion–exclusion counting
        fn literal(d: u32, p: u32, weight0: u32, sym_rule: bool) -> BigInt {
            let colors: Vec<u32> = if sym_rule {
                (1..=p).collect()
            } else {
                (0..=p * d).collect()
            };
            if colors.is_empty() {
                return BigInt::from(u32::from(weight0 == 0));
            }
            let mut count = 0u64;
            let mut assignment = vec![0usize; weight0 as usize];
            loop {
                // check every strip used
                let used: Vec<u32> = assignment.iter().map(|&a| colors[a]).collect();
                let ok = (1..=p).all(|strip| {
                    used.iter().any(|&c| {
                        if sym_rule {
                            c == strip
                        } else {
                            c >= (strip - 1) * d + 1 && c <= strip * d
                        }
                    })
                });
                if ok {
                    count += 1;
                }
                let mut pos = weight0 as usize;
                loop {
                    if pos == 0 {
                        return BigInt::from(count);
                    }
                    pos -= 1;
                    assignment[pos] += 1;
                    if assignment[pos] < colors.len() {
                        break;
                    }
                    assignment[pos] = 0;
                }
            }
        }
        for d in [1u32, 2, 3] {
            for p in 0..=2u32 {
                for z in 0..=3u32 {
                    for sym_rule in [false, true] {
                        assert_eq!(
                            strip_colorings(d, p, z, sym_rule),
                            literal(d, p, z, sym_rule),
                            "d={d} p={p} z={z} sym={sym_rule}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn colored_count_c3_example() {
        // C^{<3>}_{1,1} = 3!·M²₍₀,₀₎ = 6
        let q = FactorQuery::new(GroupSpec::sym(3), 2);
        assert_eq!(colored_count(&q, &[1, 1]).unwrap(), BigInt::from(6));
    }

    #[test]
    fn colored_type_refinement_identities() {
        // summing type counts over all compositions with p parts gives the
        // strip count, and each type count is invariant under reordering
        let q = FactorQuery::new(GroupSpec::sym(3), 2);
        let total = colored_count(&q, &[2, 1]).unwrap();
        let mut by_type = BigInt::zero();
        for a1 in Composition::all_of(3, 2) {
            for a2 in Composition::all_of(3, 1) {
                let c = colored_count_by_type(&q, &[a1.clone(), a2.clone()]).unwrap();
                // invariance under permuting the parts of each composition
                let rev = Composition::new(a1.parts().iter().rev().copied().collect());
                assert_eq!(
                    colored_count_by_type(&q, &[rev, a2.clone()]).unwrap(),
                    c
                );
                by_type += c;
            }
        }
        assert_eq!(by_type, total);

        // monochromatic types match p = (1,..,1)
        let mono = colored_count_by_type(
            &q,
            &[Composition::new(vec![3]), Composition::new(vec![3])],
        )
        .unwrap();
        assert_eq!(mono, colored_count(&q, &[1, 1]).unwrap());
    }

    #[test]
    fn reflection_dp_base_cases() {
        let spec = GroupSpec::g_d1n(2, 2);
        let counts = reflection_dp(&spec, 2).unwrap();
        assert_eq!(counts[0], BigInt::zero()); // c is not the identity
        assert_eq!(counts[1], BigInt::zero()); // ℓ < n
        assert_eq!(counts[2], BigInt::from(4)); // n!·h^n/|W| = 2·16/8
    }

    #[test]
    fn n1_contraction_fig_example() {
        // (1234)(5) = (135)(2)(4)·(12)(345) contracts to ((13)(2)(4), (12)(34))
        let u = Permutation::from_cycles(5, &[&[1, 3, 5]]);
        let v = Permutation::from_cycles(5, &[&[1, 2], &[3, 4, 5]]);
        let (u1, v1, t) = n1_contract(&u, &v).unwrap();
        assert_eq!(u1, Permutation::from_cycles(4, &[&[1, 3]]));
        assert_eq!(v1, Permutation::from_cycles(4, &[&[1, 2], &[3, 4]]));
        assert_eq!(t, 3);
        let (u2, v2) = n1_expand(&u1, &v1, t, 5);
        assert_eq!((u2, v2), (u, v));
    }

    #[test]
    fn n1_contraction_fibers_have_size_n_minus_1() {
        // over S₄: each factorization of (123) has exactly 3 preimages
        let n = 4;
        let target = long_cycle_with_fixed_point(n);
        let mut fibers: BTreeMap<(Permutation, Permutation), u32> = BTreeMap::new();
        let mut transitive_count = 0;
        for u in enumerate_sn(n) {
            let v = u.inverse().compose(&target);
            if !is_transitive(&[u.clone(), v.clone()], n) {
                continue;
            }
            transitive_count += 1;
            let (u1, v1, t) = n1_contract(&u, &v).unwrap();
            // round trip through the witness
            assert_eq!(n1_expand(&u1, &v1, t, n), (u.clone(), v.clone()));
            *fibers.entry((u1, v1)).or_default() += 1;
        }
        assert!(fibers.values().all(|&c| c == n as u32 - 1));
        // images are exactly the factorizations of the 3-cycle in S₃
        assert_eq!(fibers.len(), 6);
        assert_eq!(transitive_count, 6 * (n - 1));
    }

    #[test]
    fn weight_classification_marginals() {
        let q = FactorQuery::new(GroupSpec::g_d1n(2, 2), 2);
        let by_type = count_by_weight0_type(&q).unwrap();
        let by_dist = count_by_weight_distribution(&q).unwrap();
        let by_fix = count_by_fixdim(&q).unwrap();

        // ℓ(λ⁰) marginal reproduces fixdim counts
        let mut marginal: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (types, c) in &by_type {
            let key: Vec<u32> = types.iter().map(|t| t.len() as u32).collect();
            *marginal.entry(key).or_default() += c;
        }
        assert_eq!(counts_to_poly(2, marginal), by_fix);

        // weight-0 coordinate of the full distribution reproduces fixdim too
        let mut marginal: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (dists, c) in &by_dist {
            let key: Vec<u32> = dists.iter().map(|v| v[0]).collect();
            *marginal.entry(key).or_default() += c;
        }
        assert_eq!(counts_to_poly(2, marginal), by_fix);
    }
}
