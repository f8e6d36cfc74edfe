//! Element-level palindrome sets, exact palindromic widths, the normal
//! subgroup of reversed relations, and width bounds.
//!
//! The palindrome set is computed as a fixed point at element level, never
//! by enumerating words to a length cap: every palindromic word of length
//! k+2 is a shorter palindrome wrapped in one letter on both sides, so the
//! set of palindrome elements is the least set containing the identity and
//! the letter images that is closed under `m -> l·m·l` for every letter.

use std::collections::VecDeque;

use crate::elemset::ElementSet;
use crate::error::{Error, Result};
use crate::subgroup::SubgroupCloser;
use crate::table::{ElemIx, GroupTable};
use crate::word::{relations, GeneratingSet, Letter, Word};
use crate::RELATION_SCAN_BUDGET;

/// How each palindrome element was first reached.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PalSource {
    /// Not a palindrome (or not reached).
    Unreached,
    /// The empty word; only the identity.
    EmptyWord,
    /// A single-letter word.
    SingleLetter(Letter),
    /// Wrapped from a shorter palindrome: `letter · inner · letter`.
    Wrap { letter: Letter, inner: ElemIx },
}

/// The set of palindrome elements with witness links for readback.
pub struct PalindromeData {
    members: ElementSet,
    source: Vec<PalSource>,
}

impl PalindromeData {
    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn count(&self) -> usize {
        self.members.count()
    }

    pub fn contains(&self, ix: ElemIx) -> bool {
        self.members.contains(ix)
    }

    pub fn source(&self, ix: ElemIx) -> PalSource {
        self.source[ix as usize]
    }
}

/// Computes the palindrome set of the group as the least fixed point of the
/// wrap rule, breadth-first, recording one witness link per member.
pub fn palindrome_set(gens: &GeneratingSet, table: &GroupTable) -> Result<PalindromeData> {
    if !table.generated_by(gens.perms()) {
        return Err(Error::AlphabetMismatch);
    }
    let n_letters = gens.len() * 2;
    let mut members = ElementSet::empty(table);
    let mut source = vec![PalSource::Unreached; table.order()];
    let mut queue = VecDeque::new();

    let mut mark =
        |ix: ElemIx, src: PalSource, members: &mut ElementSet, queue: &mut VecDeque<ElemIx>| {
            if members.insert(ix) {
                source[ix as usize] = src;
                queue.push_back(ix);
            }
        };

    mark(
        table.identity(),
        PalSource::EmptyWord,
        &mut members,
        &mut queue,
    );
    for ord in 0..n_letters {
        let letter = Letter::from_ord_index(ord);
        let image = table.step(table.identity(), letter);
        mark(
            image,
            PalSource::SingleLetter(letter),
            &mut members,
            &mut queue,
        );
    }

    while let Some(m) = queue.pop_front() {
        for ord in 0..n_letters {
            let letter = Letter::from_ord_index(ord);
            let l_elem = table.step(table.identity(), letter);
            let wrapped = table.step(table.mul(l_elem, m), letter);
            mark(
                wrapped,
                PalSource::Wrap { letter, inner: m },
                &mut members,
                &mut queue,
            );
        }
    }

    // Palindromes are inverse-closed; a violation would mean the fixed
    // point is broken.
    for m in members.iter() {
        if !members.contains(table.inv(m)) {
            return Err(Error::InvariantViolation(
                "palindrome set is not inverse-closed".into(),
            ));
        }
    }

    Ok(PalindromeData { members, source })
}

/// Rebuilds a palindromic word evaluating to `g` from the wrap links.
pub fn palindrome_witness(g: ElemIx, data: &PalindromeData, table: &GroupTable) -> Result<Word> {
    if !data.contains(g) {
        return Err(Error::NotAPalindrome { element: g });
    }
    let mut outer: Vec<Letter> = Vec::new();
    let mut cur = g;
    let core = loop {
        match data.source(cur) {
            PalSource::Wrap { letter, inner } => {
                outer.push(letter);
                cur = inner;
            }
            PalSource::SingleLetter(letter) => break vec![letter],
            PalSource::EmptyWord => break Vec::new(),
            PalSource::Unreached => {
                return Err(Error::InvariantViolation(
                    "palindrome member without witness link".into(),
                ))
            }
        }
    };
    let mut letters = outer.clone();
    letters.extend_from_slice(&core);
    letters.extend(outer.iter().rev());
    let word = Word::new(letters);
    debug_assert!(word.is_palindrome());
    debug_assert_eq!(table.fold_letters(table.identity(), word.letters()), g);
    Ok(word)
}

/// Breadth-first layering of a set product: layer i+1 is layer i times the
/// factor set. One witness link `(previous element, factor)` is stored per
/// newly reached element; frontiers are scanned in ascending index order
/// and factors in ascending element order, so links are deterministic.
pub(crate) struct ProductBfs {
    pub layer_of: Vec<u32>,
    pub link: Vec<Option<(ElemIx, ElemIx)>>,
    /// Cumulative coverage per layer: `layer_sizes[i] = |W_i|`.
    pub layer_sizes: Vec<u64>,
    pub covered: usize,
}

pub(crate) fn product_bfs(table: &GroupTable, factors: &[ElemIx]) -> ProductBfs {
    let order = table.order();
    let mut layer_of = vec![u32::MAX; order];
    let mut link: Vec<Option<(ElemIx, ElemIx)>> = vec![None; order];
    layer_of[0] = 0;
    let mut frontier: Vec<ElemIx> = vec![0];
    let mut covered = 1usize;
    let mut layer_sizes = vec![1u64];

    let mut layer = 0u32;
    while !frontier.is_empty() && covered < order {
        layer += 1;
        let mut next = Vec::new();
        for &w in &frontier {
            for &p in factors {
                let r = table.mul(w, p);
                if layer_of[r as usize] == u32::MAX {
                    layer_of[r as usize] = layer;
                    link[r as usize] = Some((w, p));
                    next.push(r);
                    covered += 1;
                }
            }
        }
        next.sort_unstable();
        layer_sizes.push(covered as u64);
        frontier = next;
    }

    ProductBfs {
        layer_of,
        link,
        layer_sizes,
        covered,
    }
}

/// Exact palindromic width data: layered product BFS over the palindrome
/// set, with witness links for factorization readback.
pub struct WidthReport {
    width: Option<u32>,
    layer_of: Vec<u32>,
    link: Vec<Option<(ElemIx, ElemIx)>>,
    layer_sizes: Vec<u64>,
}

impl WidthReport {
    /// The palindromic width: the first layer covering the whole group.
    /// `None` means the product BFS stalled, which cannot happen when the
    /// factor set contains the letter images and the identity.
    pub fn width(&self) -> Option<u32> {
        self.width
    }

    /// Cumulative layer sizes `|W_0|, |W_1|, ...`; strictly increasing until
    /// the final entry equals the group order.
    pub fn layer_sizes(&self) -> &[u64] {
        &self.layer_sizes
    }

    /// The layer at which `g` first appears: the minimum number of
    /// palindromes whose product is `g`.
    pub fn element_width(&self, g: ElemIx) -> u32 {
        let layer = self.layer_of[g as usize];
        assert_ne!(layer, u32::MAX, "element not reached by width BFS");
        layer
    }

    /// Reads back a minimum-length factorization of `g` into palindrome
    /// elements, as element indices.
    pub fn factorization(&self, g: ElemIx) -> Vec<ElemIx> {
        let mut factors = Vec::new();
        let mut cur = g;
        while let Some((prev, p)) = self.link[cur as usize] {
            factors.push(p);
            cur = prev;
        }
        factors.reverse();
        factors
    }
}

/// Palindromic width by layered product BFS over a freshly computed
/// palindrome set.
pub fn palindromic_width(gens: &GeneratingSet, table: &GroupTable) -> Result<WidthReport> {
    let data = palindrome_set(gens, table)?;
    Ok(width_from_set(&data, table))
}

/// Palindromic width from an already computed palindrome set.
pub fn width_from_set(data: &PalindromeData, table: &GroupTable) -> WidthReport {
    let factors: Vec<ElemIx> = data.members().iter().collect();
    let bfs = product_bfs(table, &factors);
    let width = (bfs.covered == table.order()).then(|| bfs.layer_sizes.len() as u32 - 1);
    WidthReport {
        width,
        layer_of: bfs.layer_of,
        link: bfs.link,
        layer_sizes: bfs.layer_sizes,
    }
}

/// Least `m` with `(class ∪ {identity})^m = G`, by layered product BFS.
/// Fails when the class generates a proper subgroup, reporting its order.
pub fn covering_number(class: &ElementSet, table: &GroupTable) -> Result<u32> {
    let mut factors: Vec<ElemIx> = class.iter().collect();
    if !class.contains(table.identity()) {
        factors.insert(0, table.identity());
    }
    let bfs = product_bfs(table, &factors);
    if bfs.covered < table.order() {
        return Err(Error::ProperSubgroup { order: bfs.covered });
    }
    Ok(bfs.layer_sizes.len() as u32 - 1)
}

/// How complete an [`n_subgroup`] result is.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NStatus {
    /// The subgroup is the whole group; no deeper scan can change it.
    FullGroup,
    /// Provably the full reversed-relation subgroup: over an all-involution
    /// alphabet every reversed word evaluates to the inverse element, so
    /// every reversed-relation value is the identity.
    Exact,
    /// The scan exhausted the length cap and the subgroup had stopped
    /// growing for at least the final two length tiers.
    Stable,
    /// Truncated by the length cap or the scan budget; the result is a
    /// lower approximation.
    LowerBound,
}

/// Result of collecting the subgroup of reversed-relation values.
pub struct NSubgroup {
    pub members: ElementSet,
    pub status: NStatus,
    /// Number of relation words consumed by the scan.
    pub scanned: usize,
}

/// Collects `evaluate(reverse(w) · w)` over relations `w` of length at most
/// `max_relation_len` and returns the subgroup these values generate.
///
/// Every such value has a literally palindromic word, and the set of all of
/// them over *all* relations is a normal subgroup; the scan is truncated by
/// the length cap and [`RELATION_SCAN_BUDGET`], so the result is a subgroup
/// of that normal subgroup (see [`NStatus`]). The scan stops early once the
/// whole group is reached. Normality of the returned set is verified, and a
/// failure is reported as an invariant violation.
pub fn n_subgroup(
    gens: &GeneratingSet,
    table: &GroupTable,
    max_relation_len: usize,
) -> Result<NSubgroup> {
    if max_relation_len < 2 {
        return Err(Error::InvalidParameter(
            "max_relation_len must be at least 2".into(),
        ));
    }
    if !table.generated_by(gens.perms()) {
        return Err(Error::AlphabetMismatch);
    }
    if gens.all_involutions() {
        return Ok(NSubgroup {
            members: ElementSet::singleton(table, table.identity()),
            status: NStatus::Exact,
            scanned: 0,
        });
    }
    let mut closer = SubgroupCloser::new(table);
    let mut scanned = 0usize;
    let mut last_growth_len = 0usize;
    let mut budget_hit = false;
    for w in relations(gens, table, max_relation_len)? {
        if scanned >= RELATION_SCAN_BUDGET {
            budget_hit = true;
            break;
        }
        scanned += 1;
        let value = table.fold_letters(table.identity(), w.reversed().concat(&w).letters());
        if closer.add(value) {
            last_growth_len = w.len();
            if closer.size() == table.order() {
                break;
            }
        }
    }

    let members = closer.into_set();
    let status = if members.count() == table.order() {
        NStatus::FullGroup
    } else if !budget_hit && last_growth_len + 2 <= max_relation_len {
        NStatus::Stable
    } else {
        NStatus::LowerBound
    };

    if !table.is_normal(&members)? {
        return Err(Error::InvariantViolation(
            "collected reversed-relation subgroup is not normal".into(),
        ));
    }

    Ok(NSubgroup {
        members,
        status,
        scanned,
    })
}

/// Width upper bound from a palindromic subgroup: every element is a coset
/// representative word (each letter a palindrome) times one element of the
/// subgroup (a single palindrome), so the width is at most the worst
/// coset's best representative length plus one.
pub fn width_upper_bound_via_subgroup(
    sub: &ElementSet,
    data: &PalindromeData,
    table: &GroupTable,
) -> Result<u32> {
    if !sub.is_subset_of(data.members()) {
        return Err(Error::SubgroupNotPalindromic);
    }
    Ok(table.coset_rep_bound(sub)? + 1)
}

/// Lower bound on the width of `g` for involution-class alphabets.
///
/// When every generator is an involution the reversal of any word evaluates
/// to the inverse element, so every palindrome element is trivial or a
/// conjugate of a single generator and moves exactly as many points as one
/// generator does. A product of k palindromes then moves at most k times
/// that many points.
pub fn involution_lower_bound(g: ElemIx, gens: &GeneratingSet, table: &GroupTable) -> Result<u32> {
    if !table.generated_by(gens.perms()) {
        return Err(Error::AlphabetMismatch);
    }
    for p in gens.perms() {
        if !p.is_involution() {
            return Err(Error::BoundInapplicable(
                "all generators must have order 2".into(),
            ));
        }
    }
    let first = table
        .index_of(gens.perm(0))
        .ok_or(Error::AlphabetMismatch)?;
    let class = table.conjugacy_class(first);
    for p in gens.perms() {
        let ix = table.index_of(p).ok_or(Error::AlphabetMismatch)?;
        if !class.contains(ix) {
            return Err(Error::BoundInapplicable(
                "generators must lie in a single conjugacy class".into(),
            ));
        }
    }
    let support = gens.perm(0).moved_points();
    let moved = table.element(g).moved_points();
    Ok(moved.div_ceil(support) as u32)
}
