//! The analysis pipeline behind every subcommand: resolve a group and a
//! generating-set mode, compute palindrome data, width, the reversed-relation
//! subgroup, bounds and (optionally) verification verdicts.

use std::collections::BTreeMap;
use std::time::Instant;

use palinwidth::{
    augment_generating_set, catalog_group, conjugates_in_palindrome_square,
    double_transposition_class_genset, evaluate, involution_class_genset, involution_lower_bound,
    n_subgroup, palindrome_set, verify_normality_identities, width_from_set,
    width_upper_bound_via_subgroup, ElemIx, ElementSet, Error, GeneratingSet, GroupTable, NStatus,
    PalindromeData, Verdict, WidthReport,
};

use crate::report::{AnalysisReport, Bounds, WidthValue};

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum GensetMode {
    AsGiven,
    InvolutionClass,
    SigmaClass,
    LemmaAugmented,
}

impl GensetMode {
    pub fn as_str(self) -> &'static str {
        match self {
            GensetMode::AsGiven => "as-given",
            GensetMode::InvolutionClass => "involution-class",
            GensetMode::SigmaClass => "sigma-class",
            GensetMode::LemmaAugmented => "lemma-augmented",
        }
    }
}

#[derive(Clone)]
pub enum GroupSource {
    Catalog(String),
    File { name: String, text: String },
}

impl GroupSource {
    pub fn label(&self) -> &str {
        match self {
            GroupSource::Catalog(name) => name,
            GroupSource::File { name, .. } => name,
        }
    }
}

#[derive(Clone, Copy)]
pub struct Options {
    pub max_order: usize,
    pub max_relation_len: usize,
    pub seed: u64,
    pub verify: bool,
}

/// Sample count for the identity checker (two identity checks per sample).
const VERIFY_SAMPLES: usize = 1000;

pub struct Analysis {
    pub report: AnalysisReport,
    /// Factorization of one deepest element, for text output.
    pub witness_line: Option<String>,
}

fn describe_genset(mode: GensetMode, gens: &GeneratingSet, extra: Option<String>) -> String {
    let body = match mode {
        GensetMode::AsGiven if gens.len() <= 4 => gens
            .labels()
            .iter()
            .zip(gens.perms())
            .map(|(l, p)| format!("{l} = {}", p.cycle_string()))
            .collect::<Vec<_>>()
            .join(", "),
        GensetMode::AsGiven => format!("{} generators", gens.len()),
        GensetMode::InvolutionClass | GensetMode::SigmaClass => format!(
            "{} conjugates of {}",
            gens.len(),
            gens.perm(0).cycle_string()
        ),
        GensetMode::LemmaAugmented => format!("{} generators", gens.len()),
    };
    match extra {
        Some(extra) => format!("{}: {body}; {extra}", mode.as_str()),
        None => format!("{}: {body}", mode.as_str()),
    }
}

/// Builds the configured (generating set, table) pair.
fn resolve(
    source: &GroupSource,
    mode: GensetMode,
    opts: &Options,
    timings: &mut BTreeMap<String, u64>,
) -> Result<(GeneratingSet, GroupTable, String), Error> {
    let t0 = Instant::now();
    if mode == GensetMode::SigmaClass {
        let name = match source {
            GroupSource::Catalog(name) => name.trim(),
            GroupSource::File { .. } => {
                return Err(Error::InvalidParameter(
                    "sigma-class requires a catalog alternating group An".into(),
                ))
            }
        };
        let n = name
            .strip_prefix('A')
            .and_then(|t| t.parse::<usize>().ok())
            .ok_or_else(|| {
                Error::InvalidParameter(
                    "sigma-class requires a catalog alternating group An".into(),
                )
            })?;
        let (gens, table) = double_transposition_class_genset(n, opts.max_order)?;
        let desc = format!("{}: {} conjugates of (1 2)(3 4)", mode.as_str(), gens.len());
        timings.insert("build".into(), t0.elapsed().as_millis() as u64);
        return Ok((gens, table, desc));
    }

    let (base_gens, base_table) = match source {
        GroupSource::Catalog(name) => catalog_group(name, opts.max_order)?,
        GroupSource::File { text, .. } => {
            let gens = GeneratingSet::parse(text)?;
            let table = GroupTable::closure(gens.perms(), opts.max_order)?;
            (gens, table)
        }
    };

    let resolved = match mode {
        GensetMode::AsGiven => {
            let desc = describe_genset(mode, &base_gens, None);
            (base_gens, base_table, desc)
        }
        GensetMode::InvolutionClass => {
            let gens = involution_class_genset(&base_table)?;
            let table = GroupTable::closure(gens.perms(), base_table.order())?;
            let desc = describe_genset(mode, &gens, None);
            (gens, table, desc)
        }
        GensetMode::LemmaAugmented => {
            let result = augment_generating_set(&base_gens, &base_table, opts.max_relation_len)?;
            let extra = match (&result.added, &result.witness) {
                (Some(label), Some(w)) => {
                    format!("added {label}, witness '{}'", result.gens.word_string(w))
                }
                (Some(label), None) => format!("added {label}, no witness within cap"),
                (None, Some(w)) => {
                    format!("unchanged, witness '{}'", result.gens.word_string(w))
                }
                (None, None) => "unchanged, no witness within cap".into(),
            };
            let desc = describe_genset(mode, &result.gens, Some(extra));
            (result.gens, result.table, desc)
        }
        GensetMode::SigmaClass => unreachable!("handled above"),
    };
    timings.insert("build".into(), t0.elapsed().as_millis() as u64);
    Ok(resolved)
}

fn compute_bounds(
    gens: &GeneratingSet,
    table: &GroupTable,
    data: &PalindromeData,
    n_members: &ElementSet,
) -> Result<Bounds, Error> {
    // Involution-class lower bound: applicable when all generators are
    // involutions in one conjugacy class; the group bound is the bound of
    // the element moving the most points.
    let involution = match involution_lower_bound(table.identity(), gens, table) {
        Ok(_) => {
            let most_moved = (0..table.order() as ElemIx)
                .max_by_key(|&e| table.element(e).moved_points())
                .expect("nonempty group");
            Some(involution_lower_bound(most_moved, gens, table)?)
        }
        Err(Error::BoundInapplicable(_)) => None,
        Err(e) => return Err(e),
    };

    let coset = Some(width_upper_bound_via_subgroup(n_members, data, table)?);

    // Twice the best covering number over generators whose class generates.
    let mut covering2x: Option<u32> = None;
    let mut seen = ElementSet::empty(table);
    for i in 0..gens.len() {
        let e = table.generator_elem(i);
        if e == table.identity() || seen.contains(e) {
            continue;
        }
        let class = table.conjugacy_class(e);
        seen.union_with(&class);
        match palinwidth::covering_number(&class, table) {
            Ok(m) => {
                let candidate = 2 * m;
                covering2x = Some(covering2x.map_or(candidate, |c: u32| c.min(candidate)));
            }
            Err(Error::ProperSubgroup { .. }) => {}
            Err(e) => return Err(e),
        }
    }

    Ok(Bounds {
        involution,
        coset,
        covering2x,
    })
}

fn verdict_string(v: &Verdict) -> String {
    v.to_string()
}

fn run_verifications(
    gens: &GeneratingSet,
    table: &GroupTable,
    data: &PalindromeData,
    n_members: &ElementSet,
    opts: &Options,
) -> Result<BTreeMap<String, String>, Error> {
    let mut verdicts = BTreeMap::new();

    let identities = verify_normality_identities(
        gens,
        table,
        VERIFY_SAMPLES,
        opts.seed,
        opts.max_relation_len,
    )?;
    verdicts.insert(
        "reversal_identities".into(),
        match &identities.verdict {
            Verdict::Pass => format!(
                "pass ({} identity checks over {} relations)",
                identities.product_checks + identities.conjugation_checks,
                identities.relation_pool
            ),
            other => verdict_string(other),
        },
    );

    verdicts.insert(
        "n_subgroup_palindromic".into(),
        if n_members.is_subset_of(data.members()) {
            "pass".into()
        } else {
            "fail: reversed-relation subgroup contains non-palindromes".into()
        },
    );

    verdicts.insert(
        "conjugates_in_palindrome_square".into(),
        if conjugates_in_palindrome_square(data, table)? {
            "pass".into()
        } else {
            "fail: some conjugate of a palindrome left the palindrome square".into()
        },
    );

    // Width 1 after augmentation, applicable to non-abelian simple groups.
    verdicts.insert(
        "single_palindrome_width".into(),
        if table.is_abelian() {
            "not applicable (abelian)".into()
        } else if !table.is_simple() {
            "not applicable (not simple)".into()
        } else {
            let aug = augment_generating_set(gens, table, opts.max_relation_len)?;
            let aug_data = palindrome_set(&aug.gens, &aug.table)?;
            let aug_width = width_from_set(&aug_data, &aug.table);
            if aug_data.members().is_full() && aug_width.width() == Some(1) {
                "pass".into()
            } else {
                format!(
                    "fail: augmented palindrome set covers {}/{} elements, width {:?}",
                    aug_data.count(),
                    aug.table.order(),
                    aug_width.width()
                )
            }
        },
    );

    // Involution-alphabet facts: even-length palindromes are trivial (so
    // every palindrome squares to the identity), odd-order elements are not
    // palindromes, and the palindrome set is the class plus the identity.
    verdicts.insert(
        "involution_facts".into(),
        match involution_lower_bound(table.identity(), gens, table) {
            Err(Error::BoundInapplicable(_)) => {
                "not applicable (generators are not a single involution class)".into()
            }
            Err(e) => return Err(e),
            Ok(_) => {
                let mut failure = None;
                for p in data.members().iter() {
                    if table.mul(p, p) != table.identity() {
                        failure = Some("a palindrome does not square to the identity");
                        break;
                    }
                }
                if failure.is_none() {
                    for e in 0..table.order() as ElemIx {
                        let order = table.element_order(e);
                        if order > 1 && order % 2 == 1 && data.contains(e) {
                            failure = Some("an odd-order element is a palindrome");
                            break;
                        }
                    }
                }
                if failure.is_none() {
                    let mut expected = table.conjugacy_class(table.generator_elem(0));
                    expected.insert(table.identity());
                    if &expected != data.members() {
                        failure = Some("palindrome set is not the class plus the identity");
                    }
                }
                match failure {
                    None => "pass".into(),
                    Some(msg) => format!("fail: {msg}"),
                }
            }
        },
    );

    // The augmentation adds at most one generator and any witness is a
    // relation whose reversal is a non-relation.
    verdicts.insert(
        "augmentation".into(),
        if table.is_abelian() {
            "not applicable (abelian)".into()
        } else {
            let aug = augment_generating_set(gens, table, opts.max_relation_len)?;
            if aug.gens.len() > gens.len() + 1 {
                "fail: more than one generator added".into()
            } else {
                match &aug.witness {
                    Some(w) => {
                        let value = evaluate(w, &aug.gens, &aug.table)?;
                        let rev_value = evaluate(&w.reversed(), &aug.gens, &aug.table)?;
                        if value == aug.table.identity() && rev_value != aug.table.identity() {
                            "pass".into()
                        } else {
                            "fail: witness is not a relation with non-relation reversal".into()
                        }
                    }
                    None => "inconclusive: no witness within cap".into(),
                }
            }
        },
    );

    Ok(verdicts)
}

fn n_status_string(status: NStatus) -> &'static str {
    match status {
        NStatus::FullGroup => "full-group",
        NStatus::Exact => "exact",
        NStatus::Stable => "stable",
        NStatus::LowerBound => "lower-bound",
    }
}

fn deepest_witness(table: &GroupTable, report: &WidthReport) -> Option<String> {
    let width = report.width()?;
    if width == 0 {
        return None;
    }
    let deepest = (0..table.order() as ElemIx).find(|&e| report.element_width(e) == width)?;
    let factors = report
        .factorization(deepest)
        .iter()
        .map(|&f| table.element(f).cycle_string())
        .collect::<Vec<_>>()
        .join(" · ");
    Some(format!(
        "{} = {factors}",
        table.element(deepest).cycle_string()
    ))
}

pub fn analyze(source: &GroupSource, mode: GensetMode, opts: &Options) -> Result<Analysis, Error> {
    let mut timings = BTreeMap::new();
    let (gens, table, genset_desc) = resolve(source, mode, opts, &mut timings)?;

    let t0 = Instant::now();
    let data = palindrome_set(&gens, &table)?;
    timings.insert("palindromes".into(), t0.elapsed().as_millis() as u64);

    let t0 = Instant::now();
    let width_report = width_from_set(&data, &table);
    timings.insert("width".into(), t0.elapsed().as_millis() as u64);

    let t0 = Instant::now();
    let n = n_subgroup(&gens, &table, opts.max_relation_len)?;
    timings.insert("n_subgroup".into(), t0.elapsed().as_millis() as u64);

    let t0 = Instant::now();
    let bounds = compute_bounds(&gens, &table, &data, &n.members)?;
    timings.insert("bounds".into(), t0.elapsed().as_millis() as u64);

    let mut verdicts = BTreeMap::new();
    if opts.verify {
        let t0 = Instant::now();
        verdicts = run_verifications(&gens, &table, &data, &n.members, opts)?;
        timings.insert("verify".into(), t0.elapsed().as_millis() as u64);
    }
    verdicts.insert(
        "n_subgroup_status".into(),
        n_status_string(n.status).to_string(),
    );

    let width = match width_report.width() {
        Some(w) => WidthValue::Exact(w),
        None => WidthValue::Unreached("unreached"),
    };

    // Bounds must bracket the exact width whenever both are defined.
    if let Some(w) = width.exact() {
        if let Some(lo) = bounds.involution {
            if lo > w {
                return Err(Error::InvariantViolation(format!(
                    "involution lower bound {lo} exceeds width {w}"
                )));
            }
        }
        for hi in [bounds.coset, bounds.covering2x].into_iter().flatten() {
            if w > hi {
                return Err(Error::InvariantViolation(format!(
                    "width {w} exceeds upper bound {hi}"
                )));
            }
        }
    }

    let witness_line = deepest_witness(&table, &width_report);
    let report = AnalysisReport {
        group: source.label().to_string(),
        order: table.order(),
        genset: genset_desc,
        palindrome_count: data.count(),
        width,
        layers: width_report.layer_sizes().to_vec(),
        n_subgroup_order: n.members.count(),
        bounds,
        verdicts,
        timings_ms: timings,
    };
    Ok(Analysis {
        report,
        witness_line,
    })
}
