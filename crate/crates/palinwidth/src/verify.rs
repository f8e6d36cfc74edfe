//! Sampled and exhaustive checkers for the algebraic identities the width
//! machinery relies on.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::palindrome::{product_bfs, PalindromeData};
use crate::table::{ElemIx, GroupTable};
use crate::word::{relations, GeneratingSet, Word};
use crate::RELATION_SCAN_BUDGET;

/// Outcome of a verification suite.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    Pass,
    Fail(String),
    /// The check could not run, e.g. no relations exist within the cap.
    Inconclusive(String),
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail(msg) => write!(f, "fail: {msg}"),
            Verdict::Inconclusive(msg) => write!(f, "inconclusive: {msg}"),
        }
    }
}

/// Counts from [`verify_normality_identities`].
#[derive(Debug)]
pub struct IdentityCheckReport {
    pub verdict: Verdict,
    /// Relation words available for sampling.
    pub relation_pool: usize,
    pub product_checks: usize,
    pub conjugation_checks: usize,
    pub failures: usize,
}

/// Size cap on the relation pool sampled by the identity checker.
const POOL_CAP: usize = 2_000;

/// Samples relation words `s`, `t` and group elements `g` and checks, as
/// element identities, the two facts that make the reversed-relation set a
/// normal subgroup:
///
/// 1. `eval(rev(t)·t) · eval(rev(s)·s) = eval(rev(s·t)·(s·t))` — products of
///    reversed-relation values are again reversed-relation values.
/// 2. `g^-1 · eval(rev(t)·t) · g = eval(rev(u)·u)` for the transported word
///    `u = rev(W)·t·rev(inv(W))`, `W` a word for `g` — conjugates are too.
///
/// Returns `Inconclusive` when no relation of length `<= max_relation_len`
/// exists.
pub fn verify_normality_identities(
    gens: &GeneratingSet,
    table: &GroupTable,
    samples: usize,
    seed: u64,
    max_relation_len: usize,
) -> Result<IdentityCheckReport> {
    let pool: Vec<Word> = relations(gens, table, max_relation_len)?
        .take(POOL_CAP.min(RELATION_SCAN_BUDGET))
        .collect();
    if pool.is_empty() {
        return Ok(IdentityCheckReport {
            verdict: Verdict::Inconclusive(format!("no relations of length <= {max_relation_len}")),
            relation_pool: 0,
            product_checks: 0,
            conjugation_checks: 0,
            failures: 0,
        });
    }

    let eval = |w: &Word| table.fold_letters(table.identity(), w.letters());
    let rev_value = |w: &Word| eval(&w.reversed().concat(w));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0usize;
    let mut product_checks = 0usize;
    let mut conjugation_checks = 0usize;
    for _ in 0..samples {
        let s = &pool[rng.gen_range(0..pool.len())];
        let t = &pool[rng.gen_range(0..pool.len())];
        let g = rng.gen_range(0..table.order() as ElemIx);

        let lhs = table.mul(rev_value(t), rev_value(s));
        let st = s.concat(t);
        product_checks += 1;
        if lhs != rev_value(&st) {
            failures += 1;
        }

        let word_g = table.canonical_word(g);
        let u = word_g
            .reversed()
            .concat(t)
            .concat(&word_g.inverted().reversed());
        let conjugated = table.mul(table.mul(table.inv(g), rev_value(t)), g);
        conjugation_checks += 1;
        if conjugated != rev_value(&u) {
            failures += 1;
        }
    }

    Ok(IdentityCheckReport {
        verdict: if failures == 0 {
            Verdict::Pass
        } else {
            Verdict::Fail(format!("{failures} identity checks failed"))
        },
        relation_pool: pool.len(),
        product_checks,
        conjugation_checks,
        failures,
    })
}

/// Exhaustively checks that every conjugate of a palindrome lies in the
/// two-fold product of the palindrome set: `g·w·g^-1 ∈ P·P` for all `g` in
/// the group and `w` in `P`. The set `P·P` is computed once.
pub fn conjugates_in_palindrome_square(data: &PalindromeData, table: &GroupTable) -> Result<bool> {
    let factors: Vec<ElemIx> = data.members().iter().collect();
    let bfs = product_bfs(table, &factors);
    let in_square = |ix: ElemIx| bfs.layer_of[ix as usize] <= 2;
    if (0..table.order() as ElemIx).all(in_square) {
        return Ok(true);
    }
    for g in 0..table.order() as ElemIx {
        for w in data.members().iter() {
            if !in_square(table.conjugate(w, g)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::palindrome::palindrome_set;
    use crate::perm::Permutation;

    fn genset(text: &str) -> (GeneratingSet, GroupTable) {
        let gens = GeneratingSet::parse(text).unwrap();
        let table = GroupTable::closure(gens.perms(), 100_000).unwrap();
        (gens, table)
    }

    #[test]
    fn identities_hold_in_order_two_cyclic_group() {
        let (gens, table) = genset("degree 2\nx = (1 2)\n");
        let report = verify_normality_identities(&gens, &table, 50, 1, 8).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        assert!(report.relation_pool >= 1);
        assert_eq!(report.failures, 0);
    }

    #[test]
    fn identities_hold_on_a_thousand_s4_samples() {
        let (gens, table) = genset("degree 4\nx = (1 2)\ny = (1 2 3 4)\n");
        let report = verify_normality_identities(&gens, &table, 1000, 7, 12).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        assert_eq!(report.failures, 0);
        assert_eq!(report.product_checks + report.conjugation_checks, 2000);
    }

    #[test]
    fn no_relations_within_cap_is_inconclusive() {
        // The shortest relation of a 100-cycle has length 100.
        let cycle = format!(
            "({})",
            (1..=100)
                .map(|k| k.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        );
        let gens = GeneratingSet::new(
            vec!["x".into()],
            vec![Permutation::parse_cycles(&cycle, 100).unwrap()],
        )
        .unwrap();
        let table = GroupTable::closure(gens.perms(), 1000).unwrap();
        let report = verify_normality_identities(&gens, &table, 10, 1, 12).unwrap();
        assert!(matches!(report.verdict, Verdict::Inconclusive(_)));
    }

    #[test]
    fn conjugates_sit_inside_palindrome_square() {
        // Abelian: conjugation fixes everything and P contains the identity.
        let (gens, table) = genset("degree 6\nx = (1 2 3 4 5 6)\n");
        let data = palindrome_set(&gens, &table).unwrap();
        assert!(conjugates_in_palindrome_square(&data, &table).unwrap());

        // S_4 with standard generators, exhaustively.
        let (gens, table) = genset("degree 4\nx = (1 2)\ny = (1 2 3 4)\n");
        let data = palindrome_set(&gens, &table).unwrap();
        assert!(conjugates_in_palindrome_square(&data, &table).unwrap());
    }

    #[test]
    fn conjugation_invariance_of_class_union_identity() {
        // With a single-class involution alphabet, P is the class plus the
        // identity, so conjugates of palindromes are palindromes and the
        // square check holds with room to spare.
        let base = GroupTable::closure(
            &[
                Permutation::parse_cycles("(1 2 3)", 5).unwrap(),
                Permutation::parse_cycles("(1 2 3 4 5)", 5).unwrap(),
            ],
            100,
        )
        .unwrap();
        let sigma = base
            .index_of(&Permutation::parse_cycles("(1 2)(3 4)", 5).unwrap())
            .unwrap();
        let class = base.conjugacy_class(sigma);
        let perms: Vec<Permutation> = class.iter().map(|i| base.element(i).clone()).collect();
        let labels = (0..perms.len()).map(|i| format!("g{i}")).collect();
        let gens = GeneratingSet::new(labels, perms).unwrap();
        let table = GroupTable::closure(gens.perms(), 100).unwrap();
        let data = palindrome_set(&gens, &table).unwrap();
        assert!(conjugates_in_palindrome_square(&data, &table).unwrap());
        for g in 0..table.order() as ElemIx {
            for w in data.members().iter() {
                assert!(data.contains(table.conjugate(w, g)));
            }
        }
    }
}
