//! The two subword orders on a reflection group — the codim-fix order ≤
//! and the reflection-length order ≤_R — and the interval below a Coxeter
//! element in each.
//!
//! x ≤ y holds when codim fix(x) + codim fix(x⁻¹y) = codim fix(y); the
//! ≤_R order is the same condition on reflection length. The interval
//! [1, c] in either order is the noncrossing partition lattice; extracting
//! both and comparing them is the desk-scale content of the "alternative
//! NC characterization" corollary.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::wreath::{GenPerm, GroupSpec};

/// Work ceiling for `reflection_length` searches: |R|^⌈ℓ/2⌉ half-products.
pub const DEFAULT_SEARCH_BUDGET: u64 = 100_000_000;

/// The codim-fix order test: codim fix(x) + codim fix(x⁻¹y) = codim fix(y).
pub fn codim_leq(x: &GenPerm, y: &GenPerm) -> bool {
    x.codim() + x.inverse().multiply(y).codim() == y.codim()
}

/// Minimal number of reflections whose product is `u`, found by
/// meet-in-the-middle over products of half the length. Errors out if the
/// half-product sets would exceed the budget.
pub fn reflection_length(spec: &GroupSpec, u: &GenPerm, budget: u64) -> Result<usize> {
    if u.is_identity() {
        return Ok(0);
    }
    let reflections = spec.reflections()?;
    let r = reflections.len() as u64;
    // half[j] = set of products of exactly j reflections
    let mut half: Vec<HashMap<GenPerm, ()>> = Vec::new();
    let mut seed = HashMap::new();
    seed.insert(GenPerm::identity(u.d(), u.n()), ());
    half.push(seed);
    for length in 1..=2 * u.n() + 2 {
        let need = length.div_ceil(2);
        while half.len() <= need {
            let mut next = HashMap::new();
            let estimated = (half.last().unwrap().len() as u64).saturating_mul(r);
            if estimated > budget {
                return Err(Error::Budget(format!(
                    "meet-in-the-middle set would exceed {budget} elements"
                )));
            }
            for g in half.last().unwrap().keys() {
                for t in &reflections {
                    next.insert(g.multiply(t), ());
                }
            }
            half.push(next);
        }
        let a = length / 2;
        let b = length - a;
        // u = v·w with v ∈ half[a], w ∈ half[b]  ⇔  v⁻¹·u ∈ half[b]
        let found = half[a]
            .keys()
            .any(|v| half[b].contains_key(&v.inverse().multiply(u)));
        if found {
            return Ok(length);
        }
    }
    Err(Error::Budget(format!(
        "no reflection factorization of length ≤ {} found",
        2 * u.n() + 2
    )))
}

/// Reflection length of every element, by breadth-first search on the
/// Cayley graph generated by the reflections. Needs full enumeration.
pub fn reflection_length_table(spec: &GroupSpec) -> Result<HashMap<GenPerm, usize>> {
    let reflections = spec.reflections()?;
    let order = spec
        .order_u64()
        .ok_or_else(|| Error::Unsupported("group too large".into()))?;
    let d = spec.wreath_d().unwrap();
    let n = spec.n_points().unwrap();
    let mut dist: HashMap<GenPerm, usize> = HashMap::new();
    dist.insert(GenPerm::identity(d, n), 0);
    let mut frontier = vec![GenPerm::identity(d, n)];
    let mut level = 0;
    while (dist.len() as u64) < order && !frontier.is_empty() {
        level += 1;
        let mut next = Vec::new();
        for g in &frontier {
            for t in &reflections {
                let h = g.multiply(t);
                if !dist.contains_key(&h) {
                    dist.insert(h.clone(), level);
                    next.push(h);
                }
            }
        }
        frontier = next;
    }
    Ok(dist)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IntervalOrder {
    CodimFix,
    ReflectionLength,
}

/// The interval [1, c] below the canonical Coxeter element with its rank
/// function, in either order. Elements are sorted for determinism.
#[derive(Clone, Debug)]
pub struct Interval {
    pub order: IntervalOrder,
    pub top: GenPerm,
    /// (element, rank) pairs; the identity has rank 0, the top has rank n.
    pub elements: Vec<(GenPerm, usize)>,
}

impl Interval {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn rank_sizes(&self) -> Vec<usize> {
        let top_rank = self.elements.iter().map(|(_, r)| *r).max().unwrap_or(0);
        let mut sizes = vec![0; top_rank + 1];
        for (_, r) in &self.elements {
            sizes[*r] += 1;
        }
        sizes
    }

    /// The underlying element set, sorted, without ranks.
    pub fn element_set(&self) -> Vec<GenPerm> {
        self.elements.iter().map(|(g, _)| g.clone()).collect()
    }
}

/// Extract [1, c] by testing the additivity condition against every group
/// element.
pub fn interval(spec: &GroupSpec, order: IntervalOrder) -> Result<Interval> {
    let c = spec.coxeter_element()?;
    let elements = spec.elements()?;
    let mut out = Vec::new();
    match order {
        IntervalOrder::CodimFix => {
            for w in elements {
                if codim_leq(&w, &c) {
                    let rank = w.codim();
                    out.push((w, rank));
                }
            }
        }
        IntervalOrder::ReflectionLength => {
            let table = reflection_length_table(spec)?;
            let c_len = table[&c];
            for w in elements {
                let lw = table[&w];
                let rest = table[&w.inverse().multiply(&c)];
                if lw + rest == c_len {
                    out.push((w, lw));
                }
            }
        }
    }
    out.sort();
    Ok(Interval {
        order,
        top: c,
        elements: out,
    })
}

/// Count multichains 1 ≤ g₁ ≤ .. ≤ g_k = c in the codim-fix order whose
/// rank jumps are exactly `s`, by dynamic programming over the interval.
pub fn chains_by_rank_jumps(spec: &GroupSpec, k: usize, jumps: &[u32]) -> Result<BigInt> {
    assert_eq!(jumps.len(), k);
    let interval = interval(spec, IntervalOrder::CodimFix)?;
    let n = interval.top.codim();
    if jumps.iter().map(|&s| s as usize).sum::<usize>() != n {
        return Err(Error::InvalidArgument(format!(
            "rank jumps must sum to the top rank {n}"
        )));
    }
    // prefix ranks after each jump
    let prefix: Vec<usize> = jumps
        .iter()
        .scan(0usize, |acc, &s| {
            *acc += s as usize;
            Some(*acc)
        })
        .collect();
    let mut weights: HashMap<&GenPerm, BigInt> = HashMap::new();
    let identity = GenPerm::identity(interval.top.d(), interval.top.n());
    weights.insert(&identity, BigInt::one());
    let mut current: Vec<&GenPerm> = vec![&identity];
    for &target_rank in &prefix {
        let layer: Vec<&GenPerm> = interval
            .elements
            .iter()
            .filter(|(_, r)| *r == target_rank)
            .map(|(g, _)| g)
            .collect();
        let mut next: HashMap<&GenPerm, BigInt> = HashMap::new();
        for h in layer {
            let mut acc = BigInt::zero();
            for g in &current {
                if codim_leq(g, h) {
                    acc += &weights[*g];
                }
            }
            if !acc.is_zero() {
                next.insert(h, acc);
            }
        }
        current = next.keys().copied().collect();
        weights = next;
    }
    Ok(weights
        .get(&interval.top)
        .cloned()
        .unwrap_or_else(BigInt::zero))
}
