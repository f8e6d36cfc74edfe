//! Conjugacy classes, generated subgroups, normal closures and coset data.

use std::collections::VecDeque;

use crate::elemset::ElementSet;
use crate::error::{Error, Result};
use crate::table::{ElemIx, GroupTable};

/// Incrementally maintains the subgroup generated by a growing list of
/// elements. Closure runs as an orbit BFS from the identity over
/// right-multiplication by the recorded generators and their inverses, so
/// the cost per rebuild is `|subgroup| * generators` rather than quadratic
/// in the subgroup size. Elements already inside the subgroup are skipped,
/// keeping the generator list near-minimal.
pub(crate) struct SubgroupCloser<'t> {
    table: &'t GroupTable,
    pub set: ElementSet,
    gens: Vec<ElemIx>,
}

impl<'t> SubgroupCloser<'t> {
    pub fn new(table: &'t GroupTable) -> SubgroupCloser<'t> {
        SubgroupCloser {
            table,
            set: ElementSet::singleton(table, 0),
            gens: Vec::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.set.count()
    }

    /// Adjoins an element; returns true when the subgroup grew.
    pub fn add(&mut self, ix: ElemIx) -> bool {
        if self.set.contains(ix) {
            return false;
        }
        self.gens.push(ix);
        let mut set = ElementSet::singleton(self.table, 0);
        let mut queue = VecDeque::from([0 as ElemIx]);
        while let Some(e) = queue.pop_front() {
            for &g in &self.gens {
                for t in [self.table.mul(e, g), self.table.mul(e, self.table.inv(g))] {
                    if set.insert(t) {
                        queue.push_back(t);
                    }
                }
            }
        }
        self.set = set;
        true
    }

    pub fn into_set(self) -> ElementSet {
        self.set
    }
}

impl GroupTable {
    /// The conjugacy class of `g`: its orbit under conjugation by the
    /// generators, which equals `{ h g h^-1 : h in G }`.
    pub fn conjugacy_class(&self, g: ElemIx) -> ElementSet {
        let mut class = ElementSet::singleton(self, g);
        let mut queue = VecDeque::from([g]);
        while let Some(h) = queue.pop_front() {
            for i in 0..self.generator_count() {
                let c = self.conjugate(h, self.generator_elem(i));
                if class.insert(c) {
                    queue.push_back(c);
                }
            }
        }
        class
    }

    /// All conjugacy classes, ordered by smallest member index.
    pub fn conjugacy_classes(&self) -> Vec<ElementSet> {
        let mut assigned = ElementSet::empty(self);
        let mut classes = Vec::new();
        for e in 0..self.order() as ElemIx {
            if assigned.contains(e) {
                continue;
            }
            let class = self.conjugacy_class(e);
            assigned.union_with(&class);
            classes.push(class);
        }
        classes
    }

    /// Smallest-index representative of every conjugacy class.
    pub fn class_representatives(&self) -> Vec<ElemIx> {
        self.conjugacy_classes()
            .iter()
            .map(|c| c.iter().next().expect("classes are nonempty"))
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.generator_count();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let a = self.generator_elem(i);
                let b = self.generator_elem(j);
                self.mul(a, b) == self.mul(b, a)
            })
        })
    }

    /// The subgroup generated by a nonempty seed set: its closure under
    /// product and inverse. Always contains the identity.
    pub fn subgroup_generated(&self, seed: &ElementSet) -> Result<ElementSet> {
        if seed.is_empty() {
            return Err(Error::EmptySeed);
        }
        let mut closer = SubgroupCloser::new(self);
        for ix in seed.iter() {
            closer.add(ix);
        }
        Ok(closer.into_set())
    }

    /// The smallest subgroup containing the seed and closed under
    /// conjugation, found by alternating subgroup closure and conjugation
    /// by the generators until a fixed point.
    pub fn normal_closure(&self, seed: &ElementSet) -> Result<ElementSet> {
        if seed.is_empty() {
            return Err(Error::EmptySeed);
        }
        let mut closer = SubgroupCloser::new(self);
        for ix in seed.iter() {
            closer.add(ix);
        }
        loop {
            let mut new = Vec::new();
            for h in closer.set.iter() {
                for i in 0..self.generator_count() {
                    let c = self.conjugate(h, self.generator_elem(i));
                    if !closer.set.contains(c) {
                        new.push(c);
                    }
                }
            }
            if new.is_empty() {
                return Ok(closer.into_set());
            }
            for c in new {
                closer.add(c);
            }
        }
    }

    /// True iff `set` is closed under product and inverse (and so contains
    /// the identity).
    pub fn is_subgroup(&self, set: &ElementSet) -> bool {
        if set.is_empty() || !set.contains(0) {
            return false;
        }
        match self.subgroup_generated(set) {
            Ok(generated) => generated == *set,
            Err(_) => false,
        }
    }

    /// True iff conjugation by every generator maps `sub` into itself.
    /// Fails when `sub` is not a subgroup.
    pub fn is_normal(&self, sub: &ElementSet) -> Result<bool> {
        if !self.is_subgroup(sub) {
            return Err(Error::NotASubgroup);
        }
        for h in sub.iter() {
            for i in 0..self.generator_count() {
                if !sub.contains(self.conjugate(h, self.generator_elem(i))) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// True iff the normal closure of every nontrivial class representative
    /// is the whole group. The trivial group does not count as simple.
    pub fn is_simple(&self) -> bool {
        if self.order() < 2 {
            return false;
        }
        for rep in self.class_representatives() {
            if rep == 0 {
                continue;
            }
            let closure = self
                .normal_closure(&ElementSet::singleton(self, rep))
                .expect("singleton seed");
            if closure.count() < self.order() {
                return false;
            }
        }
        true
    }

    /// Maximum over the left cosets `gN` of the minimum BFS depth among the
    /// coset's members: the word length of the worst coset's best
    /// representative.
    pub fn coset_rep_bound(&self, sub: &ElementSet) -> Result<u32> {
        if !self.is_subgroup(sub) {
            return Err(Error::NotASubgroup);
        }
        let mut visited = ElementSet::empty(self);
        let mut bound = 0u32;
        // Element indexing is breadth-first, so the first member of a coset
        // met in index order realizes that coset's minimum depth.
        for e in 0..self.order() as ElemIx {
            if visited.contains(e) {
                continue;
            }
            bound = bound.max(self.depth(e));
            for n in sub.iter() {
                visited.insert(self.mul(e, n));
            }
        }
        Ok(bound)
    }
}
