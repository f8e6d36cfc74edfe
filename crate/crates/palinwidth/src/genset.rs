//! Generating-set constructors: the built-in group catalog, involution-class
//! and double-transposition-class alphabets, and the augmentation procedure
//! that makes some relation reverse to a non-relation.

use crate::error::{Error, Result};
use crate::perm::{Permutation, Point};
use crate::table::GroupTable;
use crate::word::{relations, GeneratingSet, Word};
use crate::RELATION_SCAN_BUDGET;

/// First pair `(i, j)`, `i < j`, of generators that do not commute.
pub fn find_noncommuting_pair(gens: &GeneratingSet) -> Option<(usize, usize)> {
    let n = gens.len();
    for i in 0..n {
        for j in i + 1..n {
            let a = gens.perm(i);
            let b = gens.perm(j);
            if (a * b) != (b * a) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Output of [`augment_generating_set`].
pub struct AugmentationResult {
    /// The input generating set, or the input plus exactly one generator.
    pub gens: GeneratingSet,
    /// Table rebuilt for `gens` (identical to the input table when nothing
    /// was added).
    pub table: GroupTable,
    /// Label of the adjoined generator, when one was added.
    pub added: Option<String>,
    /// A relation whose reversal is a non-relation, when one was found
    /// within the length cap and scan budget.
    pub witness: Option<Word>,
}

fn scan_for_witness(
    gens: &GeneratingSet,
    table: &GroupTable,
    max_relation_len: usize,
) -> Result<Option<Word>> {
    for w in relations(gens, table, max_relation_len)?.take(RELATION_SCAN_BUDGET) {
        let reversed_value = table.fold_letters(table.identity(), w.reversed().letters());
        if reversed_value != table.identity() {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn fresh_label(gens: &GeneratingSet) -> String {
    if !gens.labels().iter().any(|l| l == "c") {
        return "c".to_string();
    }
    let mut k = 2usize;
    loop {
        let candidate = format!("c{k}");
        if !gens.labels().iter().any(|l| l == &candidate) {
            return candidate;
        }
        k += 1;
    }
}

/// Adds at most one generator so that some relation reverses to a
/// non-relation.
///
/// Phase 1 scans existing relations for such a witness and, if one is
/// found, returns the generating set unchanged. Phase 2 adjoins `c = x·y`
/// for the first non-commuting generator pair `(x, y)`, rebuilds the table
/// over the extended alphabet and rescans: the word `x y c^-1` is a
/// relation whose reversal evaluates to the commutator of `x` and `y`, so a
/// witness of length 3 always exists there. Scans are bounded by the length
/// cap and [`RELATION_SCAN_BUDGET`]; `witness` is `None` if both bounds ran
/// out first (the augmented set is still returned and usable).
///
/// Fails when all generators commute: a witness would force two generators
/// not to commute.
pub fn augment_generating_set(
    gens: &GeneratingSet,
    table: &GroupTable,
    max_relation_len: usize,
) -> Result<AugmentationResult> {
    if !table.generated_by(gens.perms()) {
        return Err(Error::AlphabetMismatch);
    }
    let (i, j) = find_noncommuting_pair(gens).ok_or(Error::AbelianAugmentation)?;

    // Over an all-involution alphabet the reversal of any word evaluates to
    // the inverse element, so reversed relations are always relations and
    // phase 1 cannot succeed; skip the scan.
    if !gens.all_involutions() {
        if let Some(witness) = scan_for_witness(gens, table, max_relation_len)? {
            return Ok(AugmentationResult {
                gens: gens.clone(),
                table: GroupTable::closure(gens.perms(), table.order())?,
                added: None,
                witness: Some(witness),
            });
        }
    }

    let c = gens.perm(i) * gens.perm(j);
    let label = fresh_label(gens);
    let extended = gens.with_added(label.clone(), c)?;
    let extended_table = GroupTable::closure(extended.perms(), table.order())?;
    let witness = scan_for_witness(&extended, &extended_table, max_relation_len)?;
    Ok(AugmentationResult {
        gens: extended,
        table: extended_table,
        added: Some(label),
        witness,
    })
}

/// Builds a generating set from the conjugacy class of the first element of
/// order 2 in index order, one labelled generator per class member.
///
/// Requires a non-abelian simple group, which guarantees the class
/// generates; the generation check runs anyway.
pub fn involution_class_genset(table: &GroupTable) -> Result<GeneratingSet> {
    let involution = (0..table.order() as u32)
        .find(|&e| table.element_order(e) == 2)
        .ok_or(Error::NoInvolution)?;
    if table.is_abelian() || !table.is_simple() {
        return Err(Error::NotSimple(
            "involution-class generating sets require a non-abelian simple group".into(),
        ));
    }
    let class = table.conjugacy_class(involution);
    let closure = table.normal_closure(&class)?;
    if !closure.is_full() {
        return Err(Error::NotSimple(format!(
            "involution class generates a subgroup of order {}",
            closure.count()
        )));
    }
    let perms: Vec<Permutation> = class.iter().map(|e| table.element(e).clone()).collect();
    let labels = (0..perms.len()).map(|k| format!("g{k}")).collect();
    GeneratingSet::new(labels, perms)
}

/// Builds the alternating group on `n >= 5` points and returns the
/// conjugacy class of the double transposition `(1 2)(3 4)` as its
/// generating set, together with the rebuilt table over that alphabet.
pub fn double_transposition_class_genset(
    n: usize,
    max_order: usize,
) -> Result<(GeneratingSet, GroupTable)> {
    if n < 5 {
        return Err(Error::InvalidParameter(format!(
            "the double-transposition class needs n >= 5, got {n}"
        )));
    }
    let (_, base) = catalog_group(&format!("A{n}"), max_order)?;
    let sigma = Permutation::parse_cycles("(1 2)(3 4)", n)?;
    let sigma_ix = base
        .index_of(&sigma)
        .expect("(1 2)(3 4) is an even permutation");
    let class = base.conjugacy_class(sigma_ix);
    let perms: Vec<Permutation> = class.iter().map(|e| base.element(e).clone()).collect();
    let labels = (0..perms.len()).map(|k| format!("g{k}")).collect();
    let gens = GeneratingSet::new(labels, perms)?;
    let table = GroupTable::closure(gens.perms(), base.order())?;
    Ok((gens, table))
}

fn cycle_text(points: impl Iterator<Item = usize>) -> String {
    format!(
        "({})",
        points.map(|k| k.to_string()).collect::<Vec<_>>().join(" ")
    )
}

fn alternating_gens(n: usize) -> Result<Vec<Permutation>> {
    // (1 2 3) together with an n-cycle for odd n, or the (n-1)-cycle
    // (2 3 .. n) for even n so both generators are even.
    let three_cycle = Permutation::parse_cycles("(1 2 3)", n)?;
    let long = if n % 2 == 1 {
        Permutation::parse_cycles(&cycle_text(1..=n), n)?
    } else {
        Permutation::parse_cycles(&cycle_text(2..=n), n)?
    };
    Ok(vec![three_cycle, long])
}

fn symmetric_gens(n: usize) -> Result<Vec<Permutation>> {
    let transposition = Permutation::parse_cycles("(1 2)", n)?;
    if n == 2 {
        return Ok(vec![transposition]);
    }
    let long = Permutation::parse_cycles(&cycle_text(1..=n), n)?;
    Ok(vec![transposition, long])
}

fn mod_inverse(x: u64, p: u64) -> u64 {
    // p is prime; Fermat.
    let mut result = 1u64;
    let mut base = x % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

/// PSL(2,p) acting on the projective line: points 0..p-1 are the field
/// elements, the last point is infinity. Generated by `t: x -> x+1` and
/// `s: x -> -1/x`.
fn psl2_gens(p: usize) -> Result<Vec<Permutation>> {
    let degree = p + 1;
    let inf = p;
    let mut t = vec![0 as Point; degree];
    let mut s = vec![0 as Point; degree];
    for x in 0..p {
        t[x] = ((x + 1) % p) as Point;
        s[x] = if x == 0 {
            inf as Point
        } else {
            ((p as u64 - mod_inverse(x as u64, p as u64)) % p as u64) as Point
        };
    }
    t[inf] = inf as Point;
    s[inf] = 0;
    Ok(vec![
        Permutation::from_images(t)?,
        Permutation::from_images(s)?,
    ])
}

fn dihedral_gens(n: usize) -> Result<Vec<Permutation>> {
    // Symmetries of the regular n-gon on n points: a rotation and a
    // reflection. Order 2n.
    let rotation = Permutation::parse_cycles(&cycle_text(1..=n), n)?;
    let reflection = Permutation::from_images((0..n).map(|i| (n - 1 - i) as Point).collect())?;
    Ok(vec![rotation, reflection])
}

/// Instantiates a catalog group from its CLI name: `A3`..`A10`, `S2`..`S10`,
/// `PSL(2,p)` for p in {5, 7, 11, 13}, `Dn` (dihedral of the n-gon, order
/// 2n, n >= 3) and `Cn` (cyclic of order n >= 1).
pub fn catalog_group(name: &str, max_order: usize) -> Result<(GeneratingSet, GroupTable)> {
    let name = name.trim();
    let unknown = || Error::UnknownGroup(name.to_string());
    let parse_param = |tail: &str| tail.parse::<usize>().map_err(|_| unknown());

    let (labels, perms): (Vec<String>, Vec<Permutation>) =
        if let Some(tail) = name.strip_prefix('A') {
            let n = parse_param(tail)?;
            if !(3..=10).contains(&n) {
                return Err(Error::InvalidParameter(format!(
                    "alternating groups are cataloged for 3 <= n <= 10, got {n}"
                )));
            }
            (vec!["x".into(), "y".into()], alternating_gens(n)?)
        } else if let Some(tail) = name.strip_prefix('S') {
            let n = parse_param(tail)?;
            if !(2..=10).contains(&n) {
                return Err(Error::InvalidParameter(format!(
                    "symmetric groups are cataloged for 2 <= n <= 10, got {n}"
                )));
            }
            let perms = symmetric_gens(n)?;
            let labels = if perms.len() == 1 {
                vec!["x".into()]
            } else {
                vec!["x".into(), "y".into()]
            };
            (labels, perms)
        } else if let Some(tail) = name.strip_prefix("PSL(2,") {
            let p = tail.strip_suffix(')').map(str::trim).ok_or_else(unknown)?;
            let p = p.parse::<usize>().map_err(|_| unknown())?;
            if ![5, 7, 11, 13].contains(&p) {
                return Err(Error::InvalidParameter(format!(
                    "PSL(2,p) is cataloged for p in {{5, 7, 11, 13}}, got {p}"
                )));
            }
            (vec!["x".into(), "y".into()], psl2_gens(p)?)
        } else if let Some(tail) = name.strip_prefix('D') {
            let n = parse_param(tail)?;
            if !(3..=512).contains(&n) {
                return Err(Error::InvalidParameter(format!(
                    "dihedral groups are cataloged for 3 <= n <= 512, got {n}"
                )));
            }
            (vec!["x".into(), "y".into()], dihedral_gens(n)?)
        } else if let Some(tail) = name.strip_prefix('C') {
            let n = parse_param(tail)?;
            if !(1..=1024).contains(&n) {
                return Err(Error::InvalidParameter(format!(
                    "cyclic groups are cataloged for 1 <= n <= 1024, got {n}"
                )));
            }
            let perm = if n == 1 {
                Permutation::identity(1)
            } else {
                Permutation::parse_cycles(&cycle_text(1..=n), n)?
            };
            (vec!["x".into()], vec![perm])
        } else {
            return Err(unknown());
        };

    let gens = GeneratingSet::new(labels, perms)?;
    let table = GroupTable::closure(gens.perms(), max_order)?;
    Ok((gens, table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::palindrome::{palindrome_set, width_from_set};
    use crate::word::evaluate;

    const CAP: usize = 2_000_000;

    #[test]
    fn noncommuting_pair_detection() {
        let cyclic = GeneratingSet::parse("degree 6\nx = (1 2 3 4 5 6)\n").unwrap();
        assert_eq!(find_noncommuting_pair(&cyclic), None);

        let s3 = GeneratingSet::parse("degree 3\nx = (1 2)\ny = (2 3)\n").unwrap();
        assert_eq!(find_noncommuting_pair(&s3), Some((0, 1)));

        // Powers of a common element commute.
        let powers = GeneratingSet::parse("degree 5\na = (1 2 3 4 5)\nb = (1 3 5 2 4)\n").unwrap();
        assert_eq!(find_noncommuting_pair(&powers), None);
    }

    #[test]
    fn augmentation_rejects_abelian_input() {
        let (gens, table) = catalog_group("C6", CAP).unwrap();
        assert!(matches!(
            augment_generating_set(&gens, &table, 12),
            Err(Error::AbelianAugmentation)
        ));
    }

    #[test]
    fn augmentation_phase_one_succeeds_on_asymmetric_s3_triple() {
        // x = (1 2), y = (1 2 3), z = (1 3): the word x y z^-1 is a relation
        // whose reversal evaluates to a 3-cycle, so no generator is added.
        let gens = GeneratingSet::parse("degree 3\nx = (1 2)\ny = (1 2 3)\nz = (1 3)\n").unwrap();
        let table = GroupTable::closure(gens.perms(), 100).unwrap();
        let result = augment_generating_set(&gens, &table, 6).unwrap();
        assert!(result.added.is_none());
        assert_eq!(result.gens.len(), 3);
        let witness = result.witness.expect("phase 1 witness");
        assert_eq!(evaluate(&witness, &result.gens, &result.table).unwrap(), 0);
        assert_ne!(
            evaluate(&witness.reversed(), &result.gens, &result.table).unwrap(),
            0
        );
    }

    #[test]
    fn augmentation_adds_one_generator_to_involution_class() {
        // Phase 1 is skipped (all generators are involutions), phase 2
        // adjoins the product of the first non-commuting pair.
        let (base_gens, base_table) = catalog_group("A5", CAP).unwrap();
        let sigma = base_table
            .index_of(&Permutation::parse_cycles("(1 2)(3 4)", 5).unwrap())
            .unwrap();
        let class = base_table.conjugacy_class(sigma);
        let perms: Vec<Permutation> = class
            .iter()
            .map(|e| base_table.element(e).clone())
            .collect();
        let labels = (0..perms.len()).map(|k| format!("g{k}")).collect();
        let gens = GeneratingSet::new(labels, perms).unwrap();
        let table = GroupTable::closure(gens.perms(), 100).unwrap();
        drop(base_gens);

        let result = augment_generating_set(&gens, &table, 6).unwrap();
        assert_eq!(result.added.as_deref(), Some("c"));
        assert_eq!(result.gens.len(), gens.len() + 1);
        // The new generator is the product of two non-commuting involutions
        // in the class; in A_5 such a product has order 3 or 5.
        let c = result.gens.perm(gens.len());
        assert!([3, 5].contains(&c.order()));
        let witness = result.witness.expect("phase 2 witness");
        assert_eq!(evaluate(&witness, &result.gens, &result.table).unwrap(), 0);
        assert_ne!(
            evaluate(&witness.reversed(), &result.gens, &result.table).unwrap(),
            0
        );
    }

    #[test]
    fn augmentation_keeps_the_group_and_label_fresh() {
        let gens = GeneratingSet::parse("degree 3\nc = (1 2)\ny = (1 2 3)\n").unwrap();
        let table = GroupTable::closure(gens.perms(), 100).unwrap();
        let result = augment_generating_set(&gens, &table, 12).unwrap();
        assert_eq!(result.table.order(), table.order());
        if let Some(label) = &result.added {
            assert_eq!(label, "c2");
        }
    }

    #[test]
    fn involution_class_of_a5_has_fifteen_generators() {
        let (_, table) = catalog_group("A5", CAP).unwrap();
        let gens = involution_class_genset(&table).unwrap();
        assert_eq!(gens.len(), 15);
        for p in gens.perms() {
            assert!(p.is_involution());
        }
        // The set is closed under conjugation by every generator.
        for a in gens.perms() {
            for b in gens.perms() {
                let conj = &(b * a) * &b.inverse();
                assert!(gens.perms().contains(&conj));
            }
        }
    }

    #[test]
    fn involution_class_of_a7_counts_double_transpositions() {
        let (_, table) = catalog_group("A7", CAP).unwrap();
        let gens = involution_class_genset(&table).unwrap();
        assert_eq!(gens.len(), 105);
        // Oracle: permutations of cycle type (2,2) among the elements.
        let count = table
            .elements()
            .iter()
            .filter(|p| p.order() == 2 && p.moved_points() == 4)
            .count();
        assert_eq!(count, 105);
    }

    #[test]
    fn involution_class_rejects_unsuitable_groups() {
        let (_, c5) = catalog_group("C5", CAP).unwrap();
        assert!(matches!(
            involution_class_genset(&c5),
            Err(Error::NoInvolution)
        ));
        let (_, s4) = catalog_group("S4", CAP).unwrap();
        assert!(matches!(
            involution_class_genset(&s4),
            Err(Error::NotSimple(_))
        ));
        let (_, c2) = catalog_group("C2", CAP).unwrap();
        assert!(matches!(
            involution_class_genset(&c2),
            Err(Error::NotSimple(_))
        ));
    }

    #[test]
    fn double_transposition_class_sizes() {
        let (gens, table) = double_transposition_class_genset(5, CAP).unwrap();
        assert_eq!(gens.len(), 15);
        assert_eq!(table.order(), 60);

        let (gens, table) = double_transposition_class_genset(6, CAP).unwrap();
        assert_eq!(gens.len(), 45);
        assert_eq!(table.order(), 360);

        assert!(matches!(
            double_transposition_class_genset(4, CAP),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn catalog_orders() {
        for (name, order) in [
            ("A5", 60),
            ("A6", 360),
            ("S4", 24),
            ("S3", 6),
            ("PSL(2,5)", 60),
            ("PSL(2,7)", 168),
            ("PSL(2,11)", 660),
            ("D4", 8),
            ("D8", 16),
            ("C6", 6),
            ("C1", 1),
        ] {
            let (gens, table) = catalog_group(name, CAP).unwrap();
            assert_eq!(table.order(), order, "{name}");
            assert_eq!(table.degree(), gens.degree());
        }
        // PSL(2,7) acts on 8 points.
        let (gens, _) = catalog_group("PSL(2,7)", CAP).unwrap();
        assert_eq!(gens.degree(), 8);
    }

    #[test]
    fn catalog_simplicity_facts() {
        for name in ["A5", "A6", "PSL(2,5)", "PSL(2,7)"] {
            let (_, table) = catalog_group(name, CAP).unwrap();
            assert!(table.is_simple(), "{name} is simple");
            assert!(!table.is_abelian());
        }
        for name in ["S3", "S4", "D4", "D8", "C6", "A4"] {
            let (_, table) = catalog_group(name, CAP).unwrap();
            assert!(!table.is_simple(), "{name} is not simple");
        }
        // Prime cyclic groups are simple but abelian.
        let (_, c5) = catalog_group("C5", CAP).unwrap();
        assert!(c5.is_simple() && c5.is_abelian());
        let (_, c6) = catalog_group("C6", CAP).unwrap();
        assert!(c6.is_abelian());
    }

    #[test]
    fn catalog_rejects_unknown_names_and_bad_params() {
        assert!(matches!(
            catalog_group("Q8", CAP),
            Err(Error::UnknownGroup(_))
        ));
        assert!(matches!(
            catalog_group("", CAP),
            Err(Error::UnknownGroup(_))
        ));
        assert!(matches!(
            catalog_group("A11", CAP),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            catalog_group("PSL(2,9)", CAP),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            catalog_group("Axx", CAP),
            Err(Error::UnknownGroup(_))
        ));
    }

    #[test]
    fn augmented_a5_makes_every_element_a_palindrome() {
        let (gens, table) = catalog_group("A5", CAP).unwrap();
        let result = augment_generating_set(&gens, &table, 12).unwrap();
        let data = palindrome_set(&result.gens, &result.table).unwrap();
        assert!(data.members().is_full());
        let report = width_from_set(&data, &result.table);
        assert_eq!(report.width(), Some(1));

        // The reversed-relation subgroup reaches the whole group here, and
        // the coset width bound collapses to 1 accordingly.
        let n = crate::palindrome::n_subgroup(&result.gens, &result.table, 12).unwrap();
        assert!(n.members.is_full());
        let bound =
            crate::palindrome::width_upper_bound_via_subgroup(&n.members, &data, &result.table)
                .unwrap();
        assert_eq!(bound, 1);
    }
}
