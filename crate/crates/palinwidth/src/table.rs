//! Dense enumeration of a finite permutation group with its Cayley
//! transition table and shortest-word metadata.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::{Letter, Word};

/// Index of an element inside a [`GroupTable`]; index 0 is the identity.
pub type ElemIx = u32;

/// Default cap on the number of enumerated elements.
pub const DEFAULT_MAX_ORDER: usize = 2_000_000;

static NEXT_TABLE_ID: AtomicU64 = AtomicU64::new(0);

/// One right-multiplication column of the transition table.
struct Column {
    perm: Permutation,
    /// Canonical letter realizing this column, used in parent links.
    letter: Letter,
}

/// A fully enumerated finite permutation group.
///
/// Elements are indexed in breadth-first order from the identity, exploring
/// right-multiplication by the generators in index order and then by the
/// inverses of non-involution generators, so two closures of the same
/// generator list produce identical tables. Transition rows exist once per
/// distinct multiplier: the inverse of an involution shares its generator's
/// column.
///
/// Tables are immutable after construction and safe to share across threads.
pub struct GroupTable {
    id: u64,
    degree: usize,
    gens: Vec<Permutation>,
    cols: Vec<Column>,
    /// Column index per letter ordinal (generator-major, positive first).
    letter_col: Vec<usize>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, ElemIx>,
    /// Row-major: `transitions[e * cols.len() + c]`.
    transitions: Vec<ElemIx>,
    depth: Vec<u32>,
    /// `(predecessor, letter)` realizing `depth`; entry 0 is unused.
    parent: Vec<(ElemIx, Letter)>,
    inverse: Vec<ElemIx>,
}

impl GroupTable {
    /// Enumerates the group generated by `generators` by BFS from the
    /// identity. Fails with a capacity error once more than `max_order`
    /// distinct elements have been found.
    pub fn closure(generators: &[Permutation], max_order: usize) -> Result<GroupTable> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let degree = generators[0].degree();
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }

        let gens: Vec<Permutation> = generators.to_vec();
        let n = gens.len();
        let mut cols: Vec<Column> = Vec::new();
        let mut letter_col = vec![usize::MAX; 2 * n];
        for (i, g) in gens.iter().enumerate() {
            letter_col[Letter::pos(i as u32).ord_index()] = cols.len();
            cols.push(Column {
                perm: g.clone(),
                letter: Letter::pos(i as u32),
            });
        }
        for (i, g) in gens.iter().enumerate() {
            let inv = g.inverse();
            if inv == *g {
                // Involutions and identity generators share the forward column.
                letter_col[Letter::neg(i as u32).ord_index()] =
                    letter_col[Letter::pos(i as u32).ord_index()];
            } else {
                letter_col[Letter::neg(i as u32).ord_index()] = cols.len();
                cols.push(Column {
                    perm: inv,
                    letter: Letter::neg(i as u32),
                });
            }
        }

        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0 as ElemIx);
        let mut transitions: Vec<ElemIx> = Vec::new();
        let mut depth = vec![0u32];
        let mut parent = vec![(0 as ElemIx, Letter::pos(0))];

        let mut e = 0usize;
        while e < elements.len() {
            for col in &cols {
                let product = &elements[e] * &col.perm;
                let target = match index.get(&product) {
                    Some(&t) => t,
                    None => {
                        if elements.len() >= max_order {
                            return Err(Error::CapacityExceeded {
                                cap: max_order,
                                seen: elements.len() + 1,
                            });
                        }
                        let t = elements.len() as ElemIx;
                        index.insert(product.clone(), t);
                        elements.push(product);
                        depth.push(depth[e] + 1);
                        parent.push((e as ElemIx, col.letter));
                        t
                    }
                };
                transitions.push(target);
            }
            e += 1;
        }

        let inverse = elements.iter().map(|p| index[&p.inverse()]).collect();

        Ok(GroupTable {
            id: NEXT_TABLE_ID.fetch_add(1, Ordering::Relaxed),
            degree,
            gens,
            cols,
            letter_col,
            elements,
            index,
            transitions,
            depth,
            parent,
            inverse,
        })
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of group elements.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> ElemIx {
        0
    }

    pub fn generator_count(&self) -> usize {
        self.gens.len()
    }

    pub fn generator_perms(&self) -> &[Permutation] {
        &self.gens
    }

    /// Element index of generator `i`.
    pub fn generator_elem(&self, i: usize) -> ElemIx {
        self.step(0, Letter::pos(i as u32))
    }

    /// True when the table was built from exactly these generator
    /// permutations, in the same order.
    pub fn generated_by(&self, perms: &[Permutation]) -> bool {
        self.gens == perms
    }

    pub fn element(&self, ix: ElemIx) -> &Permutation {
        &self.elements[ix as usize]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<ElemIx> {
        self.index.get(p).copied()
    }

    /// Right-multiplies element `ix` by a letter via the transition table.
    pub fn step(&self, ix: ElemIx, letter: Letter) -> ElemIx {
        let col = self.letter_col[letter.ord_index()];
        self.transitions[ix as usize * self.cols.len() + col]
    }

    /// Product of two elements by index.
    pub fn mul(&self, a: ElemIx, b: ElemIx) -> ElemIx {
        let p = &self.elements[a as usize] * &self.elements[b as usize];
        self.index[&p]
    }

    pub fn inv(&self, ix: ElemIx) -> ElemIx {
        self.inverse[ix as usize]
    }

    /// Conjugate `by · g · by^-1`.
    pub fn conjugate(&self, g: ElemIx, by: ElemIx) -> ElemIx {
        self.mul(self.mul(by, g), self.inv(by))
    }

    /// Shortest word length over the alphabet realizing element `ix`.
    pub fn depth(&self, ix: ElemIx) -> u32 {
        self.depth[ix as usize]
    }

    /// BFS predecessor link; `None` for the identity.
    pub fn parent_link(&self, ix: ElemIx) -> Option<(ElemIx, Letter)> {
        (ix != 0).then(|| self.parent[ix as usize])
    }

    /// Maximum shortest-word length over all elements. Element indexing is
    /// breadth-first, so this is the depth of the last element.
    pub fn diameter(&self) -> u32 {
        self.depth[self.elements.len() - 1]
    }

    /// The canonical shortest word for an element, read off the BFS tree.
    pub fn canonical_word(&self, ix: ElemIx) -> Word {
        let mut letters = Vec::with_capacity(self.depth(ix) as usize);
        let mut cur = ix;
        while let Some((prev, letter)) = self.parent_link(cur) {
            letters.push(letter);
            cur = prev;
        }
        letters.reverse();
        Word::new(letters)
    }

    pub fn element_order(&self, ix: ElemIx) -> u64 {
        self.elements[ix as usize].order()
    }

    /// Left-to-right fold of transitions, without alphabet validation.
    pub(crate) fn fold_letters(&self, start: ElemIx, letters: &[Letter]) -> ElemIx {
        letters.iter().fold(start, |e, &l| self.step(e, l))
    }
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GroupTable(order {}, degree {}, {} generators)",
            self.order(),
            self.degree,
            self.gens.len()
        )
    }
}
