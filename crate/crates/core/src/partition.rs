//! Set partitions, numerical attributes, and the dit/indit machinery.
//!
//! A partition `π = {B_1, …, B_m}` of a universe `U` induces two
//! complementary pair relations on `U × U`: the *indit set* (pairs in a
//! common block — the equivalence relation of `π`) and the *dit set*
//! (pairs in different blocks). Distinction counting over these
//! relations is what logical entropy measures.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::math;
use crate::policy::NumericPolicy;
use crate::rng::SplitMix64;
use crate::universe::FiniteUniverse;

/// A real-valued attribute `f : U → ℝ`, one value per element.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericalAttribute {
    universe: Arc<FiniteUniverse>,
    values: Vec<f64>,
}

impl NumericalAttribute {
    pub fn new(universe: &Arc<FiniteUniverse>, values: Vec<f64>) -> Result<Self> {
        if values.len() != universe.size() {
            return Err(Error::LengthMismatch {
                expected: universe.size(),
                got: values.len(),
            });
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteValue { index });
        }
        Ok(Self {
            universe: Arc::clone(universe),
            values,
        })
    }

    pub fn universe(&self) -> &Arc<FiniteUniverse> {
        &self.universe
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Groups indices of `values` into classes of equal value, classes
/// ordered by ascending value. Values closer than `tol` merge (chained
/// gap clustering on the sorted list), so exact numerals group exactly
/// and floating inputs get a deterministic rule.
pub(crate) fn group_by_value(values: &[f64], tol: f64) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]).then(a.cmp(&b)));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for index in order {
        match classes.last_mut() {
            Some(class) if math::abs(values[index] - values[*class.last().unwrap()]) <= tol => {
                class.push(index);
            }
            _ => classes.push(vec![index]),
        }
    }
    for class in &mut classes {
        class.sort_unstable();
    }
    classes
}

/// A partition of the universe into non-empty, disjoint, covering blocks.
///
/// Block order is preserved as constructed (attribute-derived partitions
/// order blocks by ascending value), but equality compares the
/// canonical form: blocks sorted by their smallest member, so two
/// partitions are equal exactly when they make the same distinctions.
#[derive(Debug, Clone)]
pub struct Partition {
    universe: Arc<FiniteUniverse>,
    blocks: Vec<Vec<usize>>,
    /// Block index of each element; the O(1) form of the partition.
    block_of: Vec<usize>,
}

impl Partition {
    /// Validates `blocks` as a partition of the universe. Block order is
    /// kept as given; indices inside each block are sorted.
    pub fn new(universe: &Arc<FiniteUniverse>, blocks: &[Vec<usize>]) -> Result<Self> {
        let n = universe.size();
        let mut block_of: Vec<Option<usize>> = vec![None; n];
        let mut sorted_blocks: Vec<Vec<usize>> = Vec::with_capacity(blocks.len());
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::EmptyBlock { block: b });
            }
            let mut sorted = block.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != block.len() {
                // a repeated index inside one block is a self-overlap
                return Err(Error::OverlappingBlocks {
                    index: duplicate_in(block),
                });
            }
            for &index in &sorted {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, size: n });
                }
                if block_of[index].is_some() {
                    return Err(Error::OverlappingBlocks { index });
                }
                block_of[index] = Some(b);
            }
            sorted_blocks.push(sorted);
        }
        let mut resolved = Vec::with_capacity(n);
        for (index, slot) in block_of.iter().enumerate() {
            match slot {
                Some(b) => resolved.push(*b),
                None => return Err(Error::IncompleteCover { index }),
            }
        }
        Ok(Self {
            universe: Arc::clone(universe),
            blocks: sorted_blocks,
            block_of: resolved,
        })
    }

    /// The indiscrete partition (the "blob") `0_U = {U}`.
    pub fn indiscrete(universe: &Arc<FiniteUniverse>) -> Self {
        let n = universe.size();
        Self {
            universe: Arc::clone(universe),
            blocks: vec![(0..n).collect()],
            block_of: vec![0; n],
        }
    }

    /// The discrete partition `1_U` of singleton blocks.
    pub fn discrete(universe: &Arc<FiniteUniverse>) -> Self {
        let n = universe.size();
        Self {
            universe: Arc::clone(universe),
            blocks: (0..n).map(|i| vec![i]).collect(),
            block_of: (0..n).collect(),
        }
    }

    /// Inverse-image partition of a numerical attribute: blocks are
    /// `f⁻¹(r_j)`, ordered by ascending value.
    pub fn from_attribute(attribute: &NumericalAttribute) -> Self {
        Self::from_attribute_with(attribute, &NumericPolicy::DEFAULT)
    }

    pub fn from_attribute_with(attribute: &NumericalAttribute, policy: &NumericPolicy) -> Self {
        let blocks = group_by_value(attribute.values(), policy.value_tol);
        Self::from_valid_blocks(attribute.universe(), blocks)
    }

    /// Internal constructor for blocks already known to partition `U`.
    pub(crate) fn from_valid_blocks(universe: &Arc<FiniteUniverse>, blocks: Vec<Vec<usize>>) -> Self {
        let mut block_of = vec![0usize; universe.size()];
        for (b, block) in blocks.iter().enumerate() {
            for &index in block {
                block_of[index] = b;
            }
        }
        Self {
            universe: Arc::clone(universe),
            blocks,
            block_of,
        }
    }

    pub fn universe(&self) -> &Arc<FiniteUniverse> {
        &self.universe
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block containing element `index`.
    pub fn block_of(&self, index: usize) -> usize {
        self.block_of[index]
    }

    /// Block membership as one class label per element.
    pub fn class_labels(&self) -> &[usize] {
        &self.block_of
    }

    /// `Pr(B_j)`, the mass of block `j`.
    pub fn block_probability(&self, block: usize) -> f64 {
        math::compensated_sum(
            self.blocks[block]
                .iter()
                .map(|&i| self.universe.probability(i)),
        )
    }

    pub fn block_probabilities(&self) -> Vec<f64> {
        (0..self.block_count())
            .map(|j| self.block_probability(j))
            .collect()
    }

    /// Canonical form: blocks ordered by their smallest member.
    #[must_use]
    pub fn canonicalized(&self) -> Self {
        let mut blocks = self.blocks.clone();
        blocks.sort_by_key(|block| block[0]);
        Self::from_valid_blocks(&self.universe, blocks)
    }

    pub fn is_indiscrete(&self) -> bool {
        self.block_count() == 1
    }

    pub fn is_discrete(&self) -> bool {
        self.block_count() == self.universe.size()
    }

    /// The distinction (dit) set: ordered pairs in different blocks.
    pub fn dit_set(&self) -> PairRelation {
        self.pairs_where(|a, b| a != b)
    }

    /// The indistinction (indit) set: ordered pairs in a common block.
    /// This is exactly the equivalence relation associated with the
    /// partition; dit and indit sets partition `U × U` between them.
    pub fn indit_set(&self) -> PairRelation {
        self.pairs_where(|a, b| a == b)
    }

    fn pairs_where(&self, keep: impl Fn(usize, usize) -> bool) -> PairRelation {
        let n = self.universe.size();
        let mut pairs = alloc::collections::BTreeSet::new();
        for i in 0..n {
            for j in 0..n {
                if keep(self.block_of[i], self.block_of[j]) {
                    pairs.insert((i, j));
                }
            }
        }
        PairRelation {
            universe: Arc::clone(&self.universe),
            pairs,
        }
    }

    /// Number of distinctions, `|dit(π)| = n² − Σ_j |B_j|²`.
    pub fn dit_count(&self) -> usize {
        let n = self.universe.size();
        n * n - self.blocks.iter().map(|b| b.len() * b.len()).sum::<usize>()
    }

    /// Join `π ∨ σ`: blocks are all non-empty intersections `B_j ∩ C_k`.
    /// The join combines the distinctions of both operands:
    /// `dit(π∨σ) = dit(π) ∪ dit(σ)`. The result is canonical.
    pub fn join(&self, other: &Partition) -> Result<Partition> {
        if self.universe.as_ref() != other.universe.as_ref() {
            return Err(Error::UniverseMismatch);
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for mine in &self.blocks {
            for theirs in &other.blocks {
                let cell: Vec<usize> = mine
                    .iter()
                    .copied()
                    .filter(|i| theirs.binary_search(i).is_ok())
                    .collect();
                if !cell.is_empty() {
                    blocks.push(cell);
                }
            }
        }
        blocks.sort_by_key(|block| block[0]);
        Ok(Self::from_valid_blocks(&self.universe, blocks))
    }

    /// True when the iterated join of `partitions` is the discrete
    /// partition, i.e. the set jointly distinguishes every pair.
    pub fn is_complete(partitions: &[Partition]) -> Result<bool> {
        let mut iter = partitions.iter();
        let first = iter.next().ok_or(Error::EmptyList)?;
        let mut acc = first.clone();
        for p in iter {
            acc = acc.join(p)?;
        }
        Ok(acc.is_discrete())
    }

    /// True when every block of `self` lies inside a block of `coarser`.
    /// Refinement reverses distinction order: the finer partition makes
    /// at least the distinctions of the coarser one.
    pub fn refines(&self, coarser: &Partition) -> Result<bool> {
        if self.universe.as_ref() != coarser.universe.as_ref() {
            return Err(Error::UniverseMismatch);
        }
        Ok(self.blocks.iter().all(|block| {
            let home = coarser.block_of(block[0]);
            block.iter().all(|&i| coarser.block_of(i) == home)
        }))
    }

    /// The attribute sending each element to its block index. Its
    /// inverse-image partition is `self` again (up to block order).
    pub fn indexing_attribute(&self) -> NumericalAttribute {
        NumericalAttribute {
            universe: Arc::clone(&self.universe),
            values: self.block_of.iter().map(|&b| b as f64).collect(),
        }
    }

    /// All partitions of the universe, by restricted-growth strings.
    /// There are Bell(n) of them, so this is only for small universes.
    pub fn enumerate_all(universe: &Arc<FiniteUniverse>) -> Vec<Partition> {
        let n = universe.size();
        let mut out = Vec::new();
        let mut rgs = vec![0usize; n];
        loop {
            out.push(Self::from_rgs(universe, &rgs));
            // increment the restricted-growth string
            let mut i = n;
            loop {
                if i <= 1 {
                    return out;
                }
                i -= 1;
                let cap = 1 + rgs[..i].iter().copied().max().unwrap_or(0);
                if rgs[i] < cap {
                    rgs[i] += 1;
                    for slot in rgs.iter_mut().skip(i + 1) {
                        *slot = 0;
                    }
                    break;
                }
            }
        }
    }

    /// A partition drawn from a uniformly random restricted-growth
    /// string (not uniform over partitions; fine for exercising laws).
    pub fn random(universe: &Arc<FiniteUniverse>, rng: &mut SplitMix64) -> Partition {
        let n = universe.size();
        let mut rgs = vec![0usize; n];
        let mut max = 0usize;
        for slot in rgs.iter_mut().skip(1) {
            *slot = rng.below(max + 2);
            max = max.max(*slot);
        }
        Self::from_rgs(universe, &rgs)
    }

    fn from_rgs(universe: &Arc<FiniteUniverse>, rgs: &[usize]) -> Partition {
        let classes = rgs.iter().copied().max().map_or(1, |m| m + 1);
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); classes];
        for (index, &class) in rgs.iter().enumerate() {
            blocks[class].push(index);
        }
        Self::from_valid_blocks(universe, blocks)
    }
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        if self.universe.as_ref() != other.universe.as_ref() {
            return false;
        }
        let mut mine = self.blocks.clone();
        let mut theirs = other.blocks.clone();
        mine.sort_by_key(|b| b[0]);
        theirs.sort_by_key(|b| b[0]);
        mine == theirs
    }
}

impl Eq for Partition {}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (j, block) in self.blocks.iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{")?;
            for (k, &i) in block.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.universe.label(i))?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

/// A binary relation `R ⊆ U × U` as an explicit set of ordered pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct PairRelation {
    universe: Arc<FiniteUniverse>,
    pairs: alloc::collections::BTreeSet<(usize, usize)>,
}

impl PairRelation {
    pub fn new<I>(universe: &Arc<FiniteUniverse>, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = universe.size();
        let mut set = alloc::collections::BTreeSet::new();
        for (i, j) in pairs {
            for index in [i, j] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, size: n });
                }
            }
            set.insert((i, j));
        }
        Ok(Self {
            universe: Arc::clone(universe),
            pairs: set,
        })
    }

    pub fn empty(universe: &Arc<FiniteUniverse>) -> Self {
        Self {
            universe: Arc::clone(universe),
            pairs: alloc::collections::BTreeSet::new(),
        }
    }

    /// The full relation `U × U`.
    pub fn full(universe: &Arc<FiniteUniverse>) -> Self {
        let n = universe.size();
        let pairs = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
        Self {
            universe: Arc::clone(universe),
            pairs,
        }
    }

    /// The diagonal `ΔS = {(u_i, u_i) : u_i ∈ S}` of a subset.
    pub fn diagonal_of(universe: &Arc<FiniteUniverse>, subset: &[usize]) -> Result<Self> {
        let sorted = universe.checked_subset(subset)?;
        Self::new(universe, sorted.into_iter().map(|i| (i, i)))
    }

    /// The Cartesian square `S × S` of a subset.
    pub fn square_of(universe: &Arc<FiniteUniverse>, subset: &[usize]) -> Result<Self> {
        let sorted = universe.checked_subset(subset)?;
        let pairs: Vec<(usize, usize)> = sorted
            .iter()
            .flat_map(|&i| sorted.iter().map(move |&j| (i, j)))
            .collect();
        Self::new(universe, pairs)
    }

    pub fn universe(&self) -> &Arc<FiniteUniverse> {
        &self.universe
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.pairs.contains(&(i, j))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn union(&self, other: &PairRelation) -> Result<PairRelation> {
        if self.universe.as_ref() != other.universe.as_ref() {
            return Err(Error::UniverseMismatch);
        }
        Ok(Self {
            universe: Arc::clone(&self.universe),
            pairs: self.pairs.union(&other.pairs).copied().collect(),
        })
    }

    /// Complement within `U × U`.
    #[must_use]
    pub fn complement(&self) -> PairRelation {
        let n = self.universe.size();
        let pairs = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|p| !self.pairs.contains(p))
            .collect();
        Self {
            universe: Arc::clone(&self.universe),
            pairs,
        }
    }
}

fn duplicate_in(block: &[usize]) -> usize {
    for (i, &x) in block.iter().enumerate() {
        if block[..i].contains(&x) {
            return x;
        }
    }
    unreachable!("caller established a duplicate exists")
}
