//! Permutations of `[n]`, integer partitions, and compositions.
//!
//! Permutations are stored in one-line notation with 0-based images; the
//! cycle-facing API (`from_cycles`, `cycles`, `Display`) uses the usual
//! 1-based values so group elements read the same way they are written on
//! paper. Composition is fixed so that `compose(p, q)` applies `q` first,
//! matching multiplication of permutation matrices.

use std::fmt;

/// A permutation of `{0, .., n-1}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    /// Build from 0-based images. Panics unless `images` is a bijection.
    pub fn from_images(images: Vec<u32>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            assert!((v as usize) < n && !seen[v as usize], "not a bijection");
            seen[v as usize] = true;
        }
        Permutation { images }
    }

    /// Build from disjoint cycles written with 1-based entries, e.g.
    /// `from_cycles(5, &[&[1, 5, 3, 2]])` for (1532)(4).
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Self {
        let mut images: Vec<u32> = (0..n as u32).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for window in 0..cycle.len() {
                let from = cycle[window] as usize - 1;
                let to = cycle[(window + 1) % cycle.len()] - 1;
                assert!(from < n && (to as usize) < n, "cycle entry out of range");
                assert!(!used[from], "cycles not disjoint");
                used[from] = true;
                images[from] = to;
            }
        }
        Permutation { images }
    }

    /// The transposition (a b), 1-based.
    pub fn transposition(n: usize, a: u32, b: u32) -> Self {
        assert!(a != b);
        Permutation::from_cycles(n, &[&[a, b]])
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// `compose(p, q)(i) = p(q(i))`: apply `q` first, then `p`. This is the
    /// order under which permutation matrices multiply.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "mismatched degree");
        Permutation {
            images: (0..self.n()).map(|i| self.images[other.apply(i)]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u32;
        }
        Permutation { images }
    }

    /// Cycles with 1-based entries in canonical form: each cycle starts at
    /// its minimum, cycles sorted by minimum.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        self.cycles0()
            .into_iter()
            .map(|c| c.into_iter().map(|i| i as u32 + 1).collect())
            .collect()
    }

    /// Cycles with 0-based entries, same canonical form as `cycles`.
    pub fn cycles0(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut i = self.apply(start);
            while i != start {
                seen[i] = true;
                cycle.push(i);
                i = self.apply(i);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles0().iter().map(|c| c.len() as u32).collect())
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles0().len()
    }

    pub fn sign(&self) -> i64 {
        let flips: usize = self.cycles0().iter().map(|c| c.len() - 1).sum();
        if flips % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Restrict to `{0, .., m-1}`; every moved point must lie below `m`.
    pub fn restrict(&self, m: usize) -> Permutation {
        for i in m..self.n() {
            assert_eq!(self.apply(i), i, "restriction would drop a moved point");
        }
        Permutation {
            images: self.images[..m].to_vec(),
        }
    }

    /// Extend to `{0, .., m-1}` by fixing the new points.
    pub fn extend(&self, m: usize) -> Permutation {
        assert!(m >= self.n());
        let mut images = self.images.clone();
        images.extend(self.n() as u32..m as u32);
        Permutation { images }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            write!(f, "(")?;
            for (idx, v) in cycle.iter().enumerate() {
                if idx > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// True iff the group generated by `ps` has a single orbit on `{0, .., n-1}`.
///
/// Orbits of the generated group coincide with connected components of the
/// union of the generators' cycles, so a union-find over cycle adjacencies
/// suffices.
pub fn is_transitive(ps: &[Permutation], n: usize) -> bool {
    if n <= 1 {
        return true;
    }
    let mut uf = UnionFind::new(n);
    for p in ps {
        assert_eq!(p.n(), n, "mismatched degree");
        for i in 0..n {
            uf.union(i, p.apply(i));
        }
    }
    uf.component_count() == 1
}

/// All `n!` permutations in lexicographic order of one-line notation.
pub fn enumerate_sn(n: usize) -> impl Iterator<Item = Permutation> {
    let total = factorial_u64(n);
    (0..total).map(move |r| sn_unrank(n, r))
}

/// The permutation at position `rank` in lexicographic one-line order.
pub fn sn_unrank(n: usize, rank: u64) -> Permutation {
    let mut digits = Vec::with_capacity(n);
    let mut r = rank;
    for i in (1..=n).rev() {
        let f = factorial_u64(i - 1);
        digits.push((r / f) as usize);
        r %= f;
    }
    let mut pool: Vec<u32> = (0..n as u32).collect();
    let images = digits.into_iter().map(|d| pool.remove(d)).collect();
    Permutation { images }
}

pub fn factorial_u64(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    pub(crate) fn component_count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Number of parts, written ℓ(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Multiplicity of each part value, as (value, multiplicity) pairs.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        gen_partitions(n as u32, u32::MAX, &mut current, &mut out);
        out
    }

    /// All partitions of every size in `0..=n`.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of).collect()
    }
}

fn gen_partitions(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    let mut part = remaining.min(max_part);
    while part >= 1 {
        current.push(part);
        gen_partitions(remaining - part, part, current, out);
        current.pop();
        part -= 1;
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A composition: ordered positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "composition parts must be positive");
        Composition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn underlying_partition(&self) -> Partition {
        Partition::new(self.parts.clone())
    }

    /// All compositions of `n` into exactly `len` positive parts.
    pub fn all_of(n: usize, len: usize) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        gen_compositions(n as u32, len, &mut current, &mut out);
        out
    }
}

fn gen_compositions(remaining: u32, slots: usize, current: &mut Vec<u32>, out: &mut Vec<Composition>) {
    if slots == 0 {
        if remaining == 0 {
            out.push(Composition {
                parts: current.clone(),
            });
        }
        return;
    }
    // each remaining slot needs at least 1
    let max = remaining as i64 - (slots as i64 - 1);
    for part in 1..=max.max(0) as u32 {
        current.push(part);
        gen_compositions(remaining - part, slots - 1, current, out);
        current.pop();
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}
