//! Elements and invariants of the wreath-product reflection groups.
//!
//! An element of G(d,1,n) is a pair [π; a]: a permutation π together with a
//! weight vector a over Z/dZ, multiplying by [π; a]·[σ; b] = [πσ; σ(a) + b]
//! where σ(a) = (a_{σ(1)}, .., a_{σ(n)}). This is exactly multiplication of
//! the associated monomial matrices. G(d,d,n) is the subgroup of total
//! weight 0, and the symmetric group is the degenerate case d = 1.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::perm::{sn_unrank, Partition, Permutation};

/// Largest group that `GroupSpec::elements` will materialize.
pub const DEFAULT_ENUM_LIMIT: u64 = 10_000_000;

/// A generalized permutation [π; a] with weights in Z/dZ.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenPerm {
    d: u32,
    perm: Permutation,
    weights: Vec<u32>,
}

impl GenPerm {
    /// Weights are normalized into `0..d`, so negative values are fine:
    /// `-1` becomes `d - 1`.
    pub fn new(d: u32, perm: Permutation, weights: Vec<i64>) -> Self {
        assert!(d >= 1);
        assert_eq!(perm.n(), weights.len(), "mismatched weight vector");
        let weights = weights
            .into_iter()
            .map(|w| w.rem_euclid(d as i64) as u32)
            .collect();
        GenPerm { d, perm, weights }
    }

    pub fn identity(d: u32, n: usize) -> Self {
        GenPerm::new(d, Permutation::identity(n), vec![0; n])
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.weights.iter().all(|&w| w == 0)
    }

    /// [π; a]·[σ; b] = [πσ; σ(a) + b].
    pub fn multiply(&self, other: &GenPerm) -> GenPerm {
        assert_eq!(self.d, other.d, "mismatched modulus");
        assert_eq!(self.n(), other.n(), "mismatched degree");
        let perm = self.perm.compose(&other.perm);
        let weights = (0..self.n())
            .map(|j| (self.weights[other.perm.apply(j)] + other.weights[j]) % self.d)
            .collect();
        GenPerm {
            d: self.d,
            perm,
            weights,
        }
    }

    pub fn inverse(&self) -> GenPerm {
        let inv = self.perm.inverse();
        let weights = (0..self.n())
            .map(|j| (self.d - self.weights[inv.apply(j)]) % self.d)
            .collect();
        GenPerm {
            d: self.d,
            perm: inv,
            weights,
        }
    }

    /// Weight of one cycle: the sum of its entries' weights in Z/dZ.
    pub fn cycle_weight(&self, cycle: &[usize]) -> u32 {
        cycle.iter().map(|&i| self.weights[i]).sum::<u32>() % self.d
    }

    /// Lengths of the weight-0 cycles.
    pub fn weight0_cycle_type(&self) -> Partition {
        Partition::new(
            self.perm
                .cycles0()
                .into_iter()
                .filter(|c| self.cycle_weight(c) == 0)
                .map(|c| c.len() as u32)
                .collect(),
        )
    }

    /// Dimension of the fixed space: the number of weight-0 cycles.
    pub fn fixdim(&self) -> usize {
        self.perm
            .cycles0()
            .into_iter()
            .filter(|c| self.cycle_weight(c) == 0)
            .count()
    }

    pub fn codim(&self) -> usize {
        self.n() - self.fixdim()
    }

    /// The conjugacy class: for each weight j, the lengths of the cycles of
    /// weight j.
    pub fn conjugacy_index(&self) -> MultiPartition {
        let mut per_weight = vec![Vec::new(); self.d as usize];
        for cycle in self.perm.cycles0() {
            per_weight[self.cycle_weight(&cycle) as usize].push(cycle.len() as u32);
        }
        MultiPartition::new(per_weight.into_iter().map(Partition::new).collect())
    }

    /// Number of cycles of each weight, as a length-d vector.
    pub fn weight_distribution(&self) -> Vec<u32> {
        let mut out = vec![0u32; self.d as usize];
        for cycle in self.perm.cycles0() {
            out[self.cycle_weight(&cycle) as usize] += 1;
        }
        out
    }

    pub fn total_weight(&self) -> u32 {
        self.weights.iter().sum::<u32>() % self.d
    }

    pub fn in_ddn(&self) -> bool {
        self.total_weight() == 0
    }
}

impl fmt::Debug for GenPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; {:?}]", self.perm, self.weights)
    }
}

/// A d-tuple of partitions with total size n, indexing a conjugacy class.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MultiPartition {
    parts: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(parts: Vec<Partition>) -> Self {
        MultiPartition { parts }
    }

    pub fn components(&self) -> &[Partition] {
        &self.parts
    }

    pub fn total_size(&self) -> usize {
        self.parts.iter().map(|p| p.size()).sum()
    }
}

/// Degrees, coexponents and the derived numerology of a reflection group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupInvariants {
    pub rank: usize,
    pub degrees: Vec<u64>,
    pub coexponents: Vec<u64>,
    /// Coxeter number; the largest degree.
    pub h: u64,
    /// |R|, the number of reflections: Σ (dᵢ - 1).
    pub num_reflections: u64,
    /// |R*|, the number of reflecting hyperplanes: Σ e*ᵢ.
    pub num_hyperplanes: u64,
    pub order: BigInt,
}

/// Identifies one of the groups the engine can work with.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum GroupSpec {
    /// The symmetric group Sₙ acting on n points; fixed space dimension is
    /// the number of cycles.
    Sym { n: usize },
    /// The wreath product G(d,1,n), d ≥ 2.
    Gd1n { d: u32, n: usize },
    /// The index-d subgroup G(d,d,n) of weight-0 elements, d ≥ 2, n ≥ 2.
    Gddn { d: u32, n: usize },
    /// An exceptional group known only through its character table.
    Exceptional {
        name: String,
        degrees: Vec<u64>,
        coexponents: Vec<u64>,
    },
}

impl GroupSpec {
    pub fn sym(n: usize) -> Self {
        assert!(n >= 1);
        GroupSpec::Sym { n }
    }

    pub fn g_d1n(d: u32, n: usize) -> Self {
        assert!(d >= 2, "d = 1 collapses to the symmetric group");
        assert!(n >= 1);
        GroupSpec::Gd1n { d, n }
    }

    pub fn g_ddn(d: u32, n: usize) -> Self {
        assert!(d >= 2, "d = 1 collapses to the symmetric group");
        assert!(n >= 2);
        GroupSpec::Gddn { d, n }
    }

    pub fn exceptional(name: &str, degrees: Vec<u64>, coexponents: Vec<u64>) -> Self {
        assert_eq!(degrees.len(), coexponents.len());
        GroupSpec::Exceptional {
            name: name.to_string(),
            degrees,
            coexponents,
        }
    }

    /// Number of points the permutation action lives on (n); not defined
    /// for exceptional groups.
    pub fn n_points(&self) -> Option<usize> {
        match self {
            GroupSpec::Sym { n } | GroupSpec::Gd1n { n, .. } | GroupSpec::Gddn { n, .. } => {
                Some(*n)
            }
            GroupSpec::Exceptional { .. } => None,
        }
    }

    /// Weight modulus of the matrix model; 1 for the symmetric group.
    pub fn wreath_d(&self) -> Option<u32> {
        match self {
            GroupSpec::Sym { .. } => Some(1),
            GroupSpec::Gd1n { d, .. } | GroupSpec::Gddn { d, .. } => Some(*d),
            GroupSpec::Exceptional { .. } => None,
        }
    }

    pub fn name(&self) -> String {
        match self {
            GroupSpec::Sym { n } => format!("S{n}"),
            GroupSpec::Gd1n { d, n } => format!("G({d},1,{n})"),
            GroupSpec::Gddn { d, n } => format!("G({d},{d},{n})"),
            GroupSpec::Exceptional { name, .. } => name.clone(),
        }
    }

    pub fn invariants(&self) -> GroupInvariants {
        let (degrees, coexponents) = match self {
            GroupSpec::Sym { n } => {
                let degrees: Vec<u64> = (2..=*n as u64).collect();
                let coexponents: Vec<u64> = (1..*n as u64).collect();
                (degrees, coexponents)
            }
            GroupSpec::Gd1n { d, n } => {
                let d = *d as u64;
                let degrees: Vec<u64> = (1..=*n as u64).map(|i| d * i).collect();
                let coexponents: Vec<u64> = (0..*n as u64).map(|i| 1 + d * i).collect();
                (degrees, coexponents)
            }
            GroupSpec::Gddn { d, n } => {
                let d = *d as u64;
                let n = *n as u64;
                let mut degrees: Vec<u64> = (1..n).map(|i| d * i).collect();
                degrees.push(n);
                degrees.sort_unstable();
                let mut coexponents: Vec<u64> = (0..n - 1).map(|i| 1 + d * i).collect();
                coexponents.push((n - 1) * (d - 1));
                coexponents.sort_unstable();
                (degrees, coexponents)
            }
            GroupSpec::Exceptional {
                degrees,
                coexponents,
                ..
            } => (degrees.clone(), coexponents.clone()),
        };
        let order = match self {
            // for Sₙ the permutation-action order, not ∏ of the listed degrees
            GroupSpec::Sym { n } => factorial_big(*n),
            _ => degrees.iter().map(|&d| BigInt::from(d)).product(),
        };
        GroupInvariants {
            rank: degrees.len(),
            h: degrees.iter().copied().max().unwrap_or(1),
            num_reflections: degrees.iter().map(|&d| d - 1).sum(),
            num_hyperplanes: coexponents.iter().sum(),
            order,
            degrees,
            coexponents,
        }
    }

    pub fn order(&self) -> BigInt {
        match self {
            GroupSpec::Sym { n } => factorial_big(*n),
            GroupSpec::Gd1n { d, n } => BigInt::from(*d).pow(*n as u32) * factorial_big(*n),
            GroupSpec::Gddn { d, n } => {
                BigInt::from(*d).pow(*n as u32 - 1) * factorial_big(*n)
            }
            GroupSpec::Exceptional { degrees, .. } => {
                degrees.iter().map(|&d| BigInt::from(d)).product()
            }
        }
    }

    pub fn order_u64(&self) -> Option<u64> {
        u64::try_from(self.order()).ok()
    }

    /// The canonical Coxeter element: the n-cycle for Sₙ,
    /// [(12..n); (0,..,0,1)] for G(d,1,n), and
    /// [(12..(n-1))(n); (0,..,0,1,-1)] for G(d,d,n).
    pub fn coxeter_element(&self) -> Result<GenPerm> {
        match self {
            GroupSpec::Sym { n } => {
                let cycle: Vec<u32> = (1..=*n as u32).collect();
                Ok(GenPerm::new(
                    1,
                    Permutation::from_cycles(*n, &[&cycle]),
                    vec![0; *n],
                ))
            }
            GroupSpec::Gd1n { d, n } => {
                let cycle: Vec<u32> = (1..=*n as u32).collect();
                let mut weights = vec![0i64; *n];
                weights[*n - 1] = 1;
                Ok(GenPerm::new(
                    *d,
                    Permutation::from_cycles(*n, &[&cycle]),
                    weights,
                ))
            }
            GroupSpec::Gddn { d, n } => {
                let cycle: Vec<u32> = (1..*n as u32).collect();
                let mut weights = vec![0i64; *n];
                weights[*n - 2] = 1;
                weights[*n - 1] = -1;
                Ok(GenPerm::new(
                    *d,
                    Permutation::from_cycles(*n, &[&cycle]),
                    weights,
                ))
            }
            GroupSpec::Exceptional { name, .. } => Err(Error::Unsupported(format!(
                "{name} has no matrix model here; only character-table data"
            ))),
        }
    }

    /// All reflections: n(d-1) diagonal ones plus d·C(n,2) transposition-like
    /// ones for G(d,1,n); only the latter for G(d,d,n); transpositions for Sₙ.
    pub fn reflections(&self) -> Result<Vec<GenPerm>> {
        let mut out = Vec::new();
        match self {
            GroupSpec::Sym { n } => {
                for i in 1..=*n as u32 {
                    for j in i + 1..=*n as u32 {
                        out.push(GenPerm::new(
                            1,
                            Permutation::transposition(*n, i, j),
                            vec![0; *n],
                        ));
                    }
                }
            }
            GroupSpec::Gd1n { d, n } => {
                for i in 0..*n {
                    for a in 1..*d {
                        let mut weights = vec![0i64; *n];
                        weights[i] = a as i64;
                        out.push(GenPerm::new(*d, Permutation::identity(*n), weights));
                    }
                }
                push_transposition_like(&mut out, *d, *n);
            }
            GroupSpec::Gddn { d, n } => {
                push_transposition_like(&mut out, *d, *n);
            }
            GroupSpec::Exceptional { name, .. } => {
                return Err(Error::Unsupported(format!(
                    "{name} has no matrix model here; only character-table data"
                )))
            }
        }
        Ok(out)
    }

    /// Materialize every group element in a fixed deterministic order:
    /// underlying permutations lexicographic, weight vectors as base-d
    /// counters (for G(d,d,n) the last weight is determined by the rest).
    pub fn elements(&self) -> Result<Vec<GenPerm>> {
        self.elements_with_limit(DEFAULT_ENUM_LIMIT)
    }

    pub fn elements_with_limit(&self, limit: u64) -> Result<Vec<GenPerm>> {
        let order = self.order();
        let count = match self.order_u64() {
            Some(c) if c <= limit => c,
            _ => return Err(Error::EnumerationLimit { order, limit }),
        };
        Ok((0..count).map(|i| self.element_at(i)).collect())
    }

    /// The element at a given position of the enumeration order.
    pub fn element_at(&self, index: u64) -> GenPerm {
        match self {
            GroupSpec::Sym { n } => GenPerm::new(1, sn_unrank(*n, index), vec![0; *n]),
            GroupSpec::Gd1n { d, n } => {
                let weight_count = (*d as u64).pow(*n as u32);
                let perm = sn_unrank(*n, index / weight_count);
                let mut w = index % weight_count;
                let mut weights = vec![0i64; *n];
                for slot in (0..*n).rev() {
                    weights[slot] = (w % *d as u64) as i64;
                    w /= *d as u64;
                }
                GenPerm::new(*d, perm, weights)
            }
            GroupSpec::Gddn { d, n } => {
                let weight_count = (*d as u64).pow(*n as u32 - 1);
                let perm = sn_unrank(*n, index / weight_count);
                let mut w = index % weight_count;
                let mut weights = vec![0i64; *n];
                for slot in (0..*n - 1).rev() {
                    weights[slot] = (w % *d as u64) as i64;
                    w /= *d as u64;
                }
                let partial: i64 = weights[..*n - 1].iter().sum();
                weights[*n - 1] = -partial;
                GenPerm::new(*d, perm, weights)
            }
            GroupSpec::Exceptional { .. } => {
                panic!("exceptional groups cannot be enumerated")
            }
        }
    }
}

fn push_transposition_like(out: &mut Vec<GenPerm>, d: u32, n: usize) {
    for i in 1..=n as u32 {
        for j in i + 1..=n as u32 {
            for b in 0..d {
                let mut weights = vec![0i64; n];
                weights[i as usize - 1] = b as i64;
                weights[j as usize - 1] = -(b as i64);
                out.push(GenPerm::new(
                    d,
                    Permutation::transposition(n, i, j),
                    weights,
                ));
            }
        }
    }
}

pub fn factorial_big(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g315(cycles: &[&[u32]], weights: Vec<i64>) -> GenPerm {
        GenPerm::new(3, Permutation::from_cycles(5, cycles), weights)
    }

    #[test]
    fn golden_product_in_g315() {
        // u·v = c pins the composition convention
        let u = g315(&[&[1, 5, 3, 2]], vec![1, 2, 2, 0, 1]);
        let v = g315(&[&[1, 3, 4], &[2, 5]], vec![1, 2, 0, 2, 2]);
        let c = GroupSpec::g_d1n(3, 5).coxeter_element().unwrap();
        assert_eq!(u.multiply(&v), c);
    }

    #[test]
    fn multiply_identity_and_inverse() {
        let u = g315(&[&[1, 5, 3, 2]], vec![1, 2, 2, 0, 1]);
        let id = GenPerm::identity(3, 5);
        assert_eq!(u.multiply(&id), u);
        assert_eq!(id.multiply(&u), u);
        assert!(u.multiply(&u.inverse()).is_identity());
        let diag = GenPerm::new(2, Permutation::identity(2), vec![1, 0]);
        assert_eq!(diag.inverse(), diag);
        assert!(GenPerm::identity(2, 2).inverse().is_identity());
    }

    #[test]
    fn coxeter_elements() {
        let c = GroupSpec::g_d1n(5, 4).coxeter_element().unwrap();
        assert_eq!(c.perm().cycles(), vec![vec![1, 2, 3, 4]]);
        assert_eq!(c.weights(), &[0, 0, 0, 1]);

        let c = GroupSpec::g_ddn(5, 4).coxeter_element().unwrap();
        assert_eq!(c.perm().cycles(), vec![vec![1, 2, 3], vec![4]]);
        assert_eq!(c.weights(), &[0, 0, 1, 4]);
        assert!(c.in_ddn());

        let c = GroupSpec::sym(6).coxeter_element().unwrap();
        assert_eq!(c.perm().cycles(), vec![vec![1, 2, 3, 4, 5, 6]]);
    }

    #[test]
    fn fixdim_and_weight0_type() {
        let id = GenPerm::identity(2, 3);
        assert_eq!(id.weight0_cycle_type().parts(), &[1, 1, 1]);
        assert_eq!(id.fixdim(), 3);

        let c = GroupSpec::g_d1n(3, 4).coxeter_element().unwrap();
        assert!(c.weight0_cycle_type().is_empty());
        assert_eq!(c.fixdim(), 0);

        let refl = GenPerm::new(4, Permutation::identity(5), vec![3, 0, 0, 0, 0]);
        assert_eq!(refl.fixdim(), 4);
    }

    #[test]
    fn conjugacy_indices() {
        let id = GenPerm::identity(3, 4);
        let idx = id.conjugacy_index();
        assert_eq!(idx.components()[0].parts(), &[1, 1, 1, 1]);
        assert!(idx.components()[1].is_empty());

        let c = GroupSpec::g_ddn(3, 4).coxeter_element().unwrap();
        let idx = c.conjugacy_index();
        assert!(idx.components()[0].is_empty());
        assert_eq!(idx.components()[1].parts(), &[3]);
        assert_eq!(idx.components()[2].parts(), &[1]);
        assert_eq!(idx.total_size(), 4);
    }

    #[test]
    fn total_weight_and_ddn_membership() {
        assert!(GenPerm::identity(4, 3).in_ddn());
        let c = GroupSpec::g_d1n(4, 3).coxeter_element().unwrap();
        assert_eq!(c.total_weight(), 1);
        assert!(!c.in_ddn());
        assert!(GroupSpec::g_ddn(4, 3).coxeter_element().unwrap().in_ddn());
    }

    #[test]
    fn reflection_counts() {
        let refs = GroupSpec::g_d1n(2, 2).reflections().unwrap();
        assert_eq!(refs.len(), 4);
        // cross-check by filtering the full group on fixed space dimension
        let brute: Vec<_> = GroupSpec::g_d1n(2, 2)
            .elements()
            .unwrap()
            .into_iter()
            .filter(|w| w.fixdim() == 1)
            .collect();
        assert_eq!(brute.len(), refs.len());
        for r in &refs {
            assert!(brute.contains(r));
            assert_eq!(r.fixdim(), 1);
        }

        for d in [3u32, 4, 5] {
            let spec = GroupSpec::g_ddn(d, 2);
            let refs = spec.reflections().unwrap();
            assert_eq!(refs.len(), d as usize);
            let brute = spec
                .elements()
                .unwrap()
                .into_iter()
                .filter(|w| w.fixdim() == 1)
                .count();
            assert_eq!(brute, d as usize);
        }
    }

    #[test]
    fn invariants_tables() {
        let inv = GroupSpec::g_d1n(2, 2).invariants();
        assert_eq!(inv.degrees, vec![2, 4]);
        assert_eq!(inv.order, BigInt::from(8));
        assert_eq!(inv.h, 4);

        let inv = GroupSpec::g_ddn(3, 3).invariants();
        assert_eq!(inv.degrees, vec![3, 3, 6]);
        assert_eq!(inv.coexponents, vec![1, 4, 4]);
        assert_eq!(inv.order, BigInt::from(54));

        let h3 = GroupSpec::exceptional("G23", vec![2, 6, 10], vec![1, 5, 9]);
        let inv = h3.invariants();
        assert_eq!(inv.h, 10);
        assert_eq!(inv.order, BigInt::from(120));
        assert_eq!(inv.num_hyperplanes, 15);

        // Σ e*ᵢ = |R*| consistency for a handful of wreath specs
        for spec in [GroupSpec::g_d1n(3, 4), GroupSpec::g_ddn(4, 3)] {
            let inv = spec.invariants();
            assert_eq!(
                inv.num_hyperplanes,
                inv.coexponents.iter().sum::<u64>()
            );
            assert_eq!(inv.order, spec.order());
        }
    }

    #[test]
    fn enumeration_counts_and_distinctness() {
        let els = GroupSpec::g_d1n(2, 2).elements().unwrap();
        assert_eq!(els.len(), 8);
        let els = GroupSpec::g_ddn(3, 3).elements().unwrap();
        assert_eq!(els.len(), 54);
        let mut dedup = els.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 54);
        assert!(els.iter().all(|w| w.in_ddn()));
    }

    #[test]
    fn shephard_todd_sum_for_small_groups() {
        // Σ_w x^fixdim = ∏ (x - 1 + dᵢ), checked on coefficient vectors
        for spec in [
            GroupSpec::g_d1n(2, 2),
            GroupSpec::g_d1n(3, 2),
            GroupSpec::g_ddn(2, 3),
            GroupSpec::g_ddn(3, 3),
        ] {
            let inv = spec.invariants();
            let n = spec.n_points().unwrap();
            let mut counts = vec![0i64; n + 1];
            for w in spec.elements().unwrap() {
                counts[w.fixdim()] += 1;
            }
            let mut expected = vec![0i64; n + 1];
            expected[0] = 1;
            for &d in &inv.degrees {
                let mut next = vec![0i64; n + 1];
                for (e, &c) in expected.iter().enumerate() {
                    if c != 0 {
                        next[e + 1] += c;
                        next[e] += c * (d as i64 - 1);
                    }
                }
                expected = next;
            }
            assert_eq!(counts, expected, "Shephard-Todd failed for {}", spec.name());
        }
    }

    fn arb_genperm(d: u32, n: usize) -> impl Strategy<Value = GenPerm> {
        (
            Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle(),
            proptest::collection::vec(0..d as i64, n),
        )
            .prop_map(move |(images, weights)| {
                GenPerm::new(d, Permutation::from_images(images), weights)
            })
    }

    proptest! {
        #[test]
        fn multiply_associative(
            u in arb_genperm(3, 4),
            v in arb_genperm(3, 4),
            w in arb_genperm(3, 4),
        ) {
            prop_assert_eq!(u.multiply(&v).multiply(&w), u.multiply(&v.multiply(&w)));
        }

        #[test]
        fn inverse_round_trip(u in arb_genperm(3, 4)) {
            prop_assert!(u.multiply(&u.inverse()).is_identity());
            prop_assert!(u.inverse().multiply(&u).is_identity());
        }

        #[test]
        fn conjugacy_index_is_class_function(u in arb_genperm(3, 4), g in arb_genperm(3, 4)) {
            let conj = g.multiply(&u).multiply(&g.inverse());
            prop_assert_eq!(conj.conjugacy_index(), u.conjugacy_index());
            prop_assert_eq!(conj.fixdim(), u.fixdim());
        }

        #[test]
        fn total_weight_is_additive(u in arb_genperm(4, 3), v in arb_genperm(4, 3)) {
            let prod = u.multiply(&v);
            prop_assert_eq!(prod.total_weight(), (u.total_weight() + v.total_weight()) % 4);
            prop_assert_eq!(prod.in_ddn(), (u.total_weight() + v.total_weight()) % 4 == 0);
        }
    }
}
