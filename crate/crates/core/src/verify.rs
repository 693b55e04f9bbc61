//! Named verification targets: every closed form, bijection, and table in
//! the crate recomputed and compared against brute-force enumeration.
//!
//! A target never panics on a mismatch; it records expected vs observed per
//! row and an overall verdict. Exploratory targets (the conjectured Motzkin
//! count and the quadruple-pattern classes) are reported but excluded from
//! the gating verdict of a full run.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::biject::{
    grow_involution, grow_word, phi, phi_inv, psi, rtl_lemma_map, stack_sort_word, GrowthStep,
    RtlLemmaCase,
};
use crate::error::Error;
use crate::oracle::{
    collect, count, distribution, CountQuery, Limits, ObjectClass, Statistic,
};
use crate::perm::{pattern_132, PatternSpec, Permutation};
use crate::series::catalog::{
    self, central_binomial_series, family, RotationReading,
};
use crate::series::cf::{cf_catalog, rtl_gf, CfKind, Specialization};
use crate::series::closed;
use crate::series::poly::{rat, Poly};
use crate::series::catalan_series;
use crate::succession::{
    ballot_count, dp_inversions, dp_rises, level_counts, level_total, SuccessionSystem,
};
use crate::words::{right_dyck_steps, split_uv, xi, xi_inv, LatticeWord, Step};
use crate::Result;

/// One comparison row of a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyRow {
    pub label: String,
    pub expected: String,
    pub observed: String,
    pub matched: bool,
}

/// The outcome of one verification target.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub target: String,
    pub params: String,
    pub rows: Vec<VerifyRow>,
    pub exploratory: bool,
}

impl VerifyReport {
    fn new(target: &str, params: String) -> VerifyReport {
        VerifyReport {
            target: target.to_string(),
            params,
            rows: Vec::new(),
            exploratory: false,
        }
    }

    fn push(&mut self, label: String, expected: impl ToString, observed: impl ToString) {
        let expected = expected.to_string();
        let observed = observed.to_string();
        let matched = expected == observed;
        self.rows.push(VerifyRow { label, expected, observed, matched });
    }

    fn push_flag(&mut self, label: String, holds: bool) {
        self.rows.push(VerifyRow {
            label,
            expected: "holds".to_string(),
            observed: if holds { "holds" } else { "fails" }.to_string(),
            matched: holds,
        });
    }

    /// True when every row matched.
    pub fn verdict(&self) -> bool {
        self.rows.iter().all(|r| r.matched)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &VerifyRow> {
        self.rows.iter().filter(|r| !r.matched)
    }
}

/// All target names, in suite order.
pub fn targets() -> Vec<&'static str> {
    vec![
        "baseline", "ballot", "even132", "rises", "phi", "psi",
        "tha1", "tha2", "tha3", "tha4",
        "thb2", "thb3", "thb4",
        "thc1", "thc2", "thc3", "thc4",
        "thd1", "thd2",
        "cf_c", "cf_d", "th_ssd", "rtl_lemmas", "bounded",
        "genl", "rk", "eo_reconstruct", "nonneg", "stack",
        "motzkin_1432", "quad4_classes",
    ]
}

/// Runs one named target, capping enumeration lengths at `n_max`.
pub fn verify(target: &str, n_max: usize, limits: &Limits) -> Result<VerifyReport> {
    match target {
        "baseline" => baseline(n_max.min(14), limits),
        "ballot" => ballot(n_max.min(12), limits),
        "even132" => even132(n_max.min(14), limits),
        "rises" => rises(n_max.min(14), limits),
        "phi" => phi_transport(n_max.min(12), limits),
        "psi" => psi_checks(n_max.min(12), limits),
        "tha1" => theorem_i(target, "empty", &[], n_max.min(12), limits),
        "tha2" => theorem_i(target, "12k", &[(2, 0), (3, 0), (4, 0), (5, 0)], n_max.min(12), limits),
        "tha3" => theorem_i(target, "2134k", &[(2, 0), (3, 0), (4, 0), (5, 0)], n_max.min(12), limits),
        "tha4" => theorem_i(target, "rot", &[(3, 1), (4, 1), (4, 2), (5, 2)], n_max.min(12), limits),
        "thb2" => theorem_i(target, "12k_once", &[(2, 0), (3, 0), (4, 0), (5, 0)], n_max.min(12), limits),
        "thb3" => theorem_i(target, "2134k_once", &[(2, 0), (3, 0), (4, 0), (5, 0)], n_max.min(12), limits),
        "thb4" => theorem_i(target, "23k1_once", &[(3, 0), (4, 0), (5, 0)], n_max.min(12), limits),
        "thc1" => theorem_i(target, "J_empty", &[], n_max.min(12), limits),
        "thc2" => theorem_i(target, "J_12k", &[(2, 0), (3, 0), (4, 0), (5, 0)], n_max.min(12), limits),
        "thc3" => theorem_i(target, "J_2134k", &[(3, 0), (4, 0), (5, 0)], n_max.min(12), limits),
        "thc4" => theorem_i(target, "J_23k1", &[(2, 0), (3, 0), (4, 0), (5, 0)], n_max.min(12), limits),
        "thd1" => thd1(n_max.min(12), limits),
        "thd2" => theorem_i(target, "J_2134k_once", &[(2, 0), (3, 0), (4, 0), (5, 0)], n_max.min(12), limits),
        "cf_c" => cf_c(n_max.min(12), limits),
        "cf_d" => cf_d(n_max.min(12), limits),
        "th_ssd" => th_ssd(n_max.min(12), limits),
        "rtl_lemmas" => rtl_lemmas(n_max.min(11), limits),
        "bounded" => bounded(n_max.min(12), limits),
        "genl" => genl(),
        "rk" => rk_equations(),
        "eo_reconstruct" => eo_reconstruct(n_max.min(12)),
        "nonneg" => nonneg(n_max.min(12)),
        "stack" => stack_checks(n_max.min(9), limits),
        "motzkin_1432" => motzkin_1432(n_max.min(11), limits),
        "quad4_classes" => quad4_classes(n_max.min(8), limits),
        _ => Err(Error::UnknownName(format!("verification target {target:?}"))),
    }
}

/// Runs every target; exploratory ones never affect the combined verdict.
pub fn verify_all(n_max: usize, limits: &Limits) -> Result<Vec<VerifyReport>> {
    targets()
        .into_iter()
        .map(|t| verify(t, n_max, limits))
        .collect()
}

/// Combined gating verdict of a set of reports.
pub fn all_pass(reports: &[VerifyReport]) -> bool {
    reports.iter().all(|r| r.exploratory || r.verdict())
}

fn avoiders(n: usize, limits: &Limits) -> Result<Vec<Permutation>> {
    collect(
        &CountQuery::new(ObjectClass::Involutions, n).avoiding(pattern_132()),
        limits,
    )
}

// --------------------------------------------------------------------------
// Criteria 1 and 2: baseline counts and the fixed-point refinement
// --------------------------------------------------------------------------

fn baseline(n_max: usize, limits: &Limits) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("baseline", format!("n_max={n_max}"));
    let ci = cf_catalog(CfKind::CI, &Specialization::length_only(), n_max, 0)?;
    let gf = central_binomial_series(n_max);
    for n in 0..=n_max {
        let observed = count(
            &CountQuery::new(ObjectClass::Involutions, n).avoiding(pattern_132()),
            limits,
        )?;
        let expected = closed::central_binomial(n);
        report.push(format!("n={n} oracle"), &expected, observed);
        report.push(
            format!("n={n} continued fraction"),
            &expected,
            ci.coefficient(n, 0),
        );
        report.push(format!("n={n} closed-form series"), &expected, gf.coefficient(n));
    }
    Ok(report)
}

fn ballot(n_max: usize, limits: &Limits) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("ballot", format!("n_max={n_max}"));
    for n in 0..=n_max {
        let q = CountQuery::new(ObjectClass::Involutions, n)
            .avoiding(pattern_132())
            .tallying(Statistic::FixedPoints);
        let table = distribution(&q, limits)?;
        for p in 0..=n {
            let observed = table.get(&vec![p as u64]).copied().unwrap_or(0);
            report.push(format!("n={n} p={p}"), ballot_count(n, p), observed);
        }
    }
    Ok(report)
}

// --------------------------------------------------------------------------
// Criterion 3: inversion parity
// --------------------------------------------------------------------------

fn even132(n_max: usize, limits: &Limits) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("even132", format!("n_max={n_max}"));
    let table = dp_inversions(n_max);
    for n in 0..=n_max {
        let q = CountQuery::new(ObjectClass::Involutions, n)
            .avoiding(pattern_132())
            .tallying(Statistic::Parity);
        let tally = distribution(&q, limits)?;
        let even = tally.get(&vec![0]).copied().unwrap_or(0);
        let odd = tally.get(&vec![1]).copied().unwrap_or(0);
        report.push(format!("n={n} even oracle"), closed::even_avoiders(n), even);
        report.push(format!("n={n} odd oracle"), closed::odd_avoiders(n), odd);
        report.push(format!("n={n} even table"), even, table.parity_total(n, 0));
        report.push(format!("n={n} odd table"), odd, table.parity_total(n, 1));
    }
    // The refined table matches the joint (fixed points, inversions) tally.
    for n in 0..=n_max.min(10) {
        let q = CountQuery::new(ObjectClass::Involutions, n)
            .avoiding(pattern_132())
            .tallying(Statistic::FixedPoints)
            .tallying(Statistic::Inversions);
        let tally = distribution(&q, limits)?;
        let mut joint_ok = true;
        for p in 0..=n {
            for i in 0..=n * n.saturating_sub(1) / 2 {
                let observed = tally.get(&vec![p as u64, i as u64]).copied().unwrap_or(0);
                joint_ok &= observed == table.count(n, p, i);
            }
        }
        report.push_flag(format!("n={n} joint (p, i) table"), joint_ok);
    }
    Ok(report)
}

// --------------------------------------------------------------------------
// Criterion 4: rises, the left-to-right-minima remark, and the split pairs
// --------------------------------------------------------------------------

fn rises(n_max: usize, limits: &Limits) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("rises", format!("n_max={n_max}"));
    let table = dp_rises(n_max);
    for n in 0..=n_max {
        let q = CountQuery::new(ObjectClass::Involutions, n)
            .avoiding(pattern_132())
            .tallying(Statistic::Rises);
        let tally = distribution(&q, limits)?;
        for r in 0..=n.saturating_sub(1) {
            let observed = tally.get(&vec![r as u64]).copied().unwrap_or(0);
            report.push(
                format!("n={n} r={r} oracle"),
                closed::avoiders_by_rises(n, r),
                observed,
            );
            report.push(format!("n={n} r={r} table"), observed, table.rise_total(n, r));
        }
        // Independent word-side route: tally bilateral words of length n by
        // their double-step count directly.
        let mut by_double_steps: BTreeMap<usize, u64> = BTreeMap::new();
        for mask in 0u64..1 << n {
            let steps: Vec<Step> = (0..n)
                .map(|i| if mask >> i & 1 == 1 { Step::Up } else { Step::Down })
                .collect();
            let w = LatticeWord::new(steps);
            if w.is_bilateral() {
                *by_double_steps.entry(w.double_step_count()).or_insert(0) += 1;
            }
        }
        let mut words_match = true;
        for r in 0..=n {
            let observed = by_double_steps.get(&r).copied().unwrap_or(0);
            words_match &= BigInt::from(observed) == closed::avoiders_by_rises(n, r);
        }
        report.push_flag(format!("n={n} bilateral double-step tally"), words_match);
    }
    // Every enumerated avoider with r < n rises has exactly n − r
    // left-to-right minima.
    for n in 1..=n_max {
        let mut remark_holds = true;
        for p in avoiders(n, limits)? {
            let stats = p.statistics();
            if stats.rises < n {
                remark_holds &= stats.ltr_minima == n - stats.rises;
            }
        }
        report.push_flag(format!("n={n} minima remark"), remark_holds);
    }
    Ok(report)
}

// --------------------------------------------------------------------------
// Criterion 5: transport along the word bijection
// --------------------------------------------------------------------------

fn phi_transport(n_max: usize, limits: &Limits) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("phi", format!("n_max={n_max}"));
    for n in 0..=n_max {
        let objects = avoiders(n, limits)?;
        let mut round_trip = true;
        let mut inversions_ok = true;
        let mut rises_ok = true;
        let mut fixed_ok = true;
        let mut height_ok = true;
        let mut images = BTreeSet::new();
        for p in &objects {
            let w = phi(p)?;
            images.insert(w.clone());
            round_trip &= phi_inv(&w)? == *p;
            inversions_ok &= right_dyck_steps(&w)? == p.inversions();
            let b = xi(&w)?;
            let stats = p.statistics();
            rises_ok &= b.double_step_count() == stats.rises;
            fixed_ok &= w.surplus() == stats.fixed_points as isize;
            height_ok &= b.min_nonpositive_height() == (stats.fixed_points + 1) / 2;
        }
        report.push_flag(format!("n={n} round trip"), round_trip);
        report.push(format!("n={n} distinct images"), objects.len(), images.len());
        report.push_flag(format!("n={n} inversions transport"), inversions_ok);
        report.push_flag(format!("n={n} rises transport"), rises_ok);
        report.push_flag(format!("n={n} fixed points transport"), fixed_ok);
        report.push_flag(format!("n={n} dip depth transport"), height_ok);
        // Images are exactly the Dyck prefixes: their number is the
        // central binomial coefficient.
        report.push(
            format!("n={n} image count"),
            closed::central_binomial(n),
            images.len(),
        );
    }
    Ok(report)
}

// --------------------------------------------------------------------------
// Criterion 6: the reduction of one-occurrence involutions
// --------------------------------------------------------------------------

fn psi_checks(n_max: usize, limits: &Limits) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("psi", format!("n_max={n_max}"));
    for n in 2..=n_max {
        let sources = collect(
            &CountQuery::new(ObjectClass::Involutions, n).containing(pattern_132(), 1),
            limits,
        )?;
        let mut in_codomain = true;
        let mut fixed_preserved = true;
        let mut inversion_law = true;
        let mut parity_flip = true;
        let mut has_fixed_point = true;
        let mut images = BTreeSet::new();
        let mut even_count = 0u64;
        let mut odd_count = 0u64;
        for p in &sources {
            let fp = p.fixed_points();
            has_fixed_point &= fp >= 1;
            if p.inversions() % 2 == 0 {
                even_count += 1;
            } else {
                odd_count += 1;
            }
            let sigma = psi(p)?;
            images.insert(sigma.clone());
            in_codomain &= sigma.len() == n - 2
                && sigma.is_involution()
                && !sigma.contains(&pattern_132());
            fixed_preserved &= sigma.fixed_points() == fp;
            inversion_law &=
                sigma.inversions() as isize == p.inversions() as isize - 2 * n as isize
                    + 2 * fp as isize
                    + 3;
            parity_flip &= sigma.inversions() % 2 != p.inversions() % 2;
        }
        report.push_flag(format!("n={n} at least one fixed point"), has_fixed_point);
        report.push_flag(format!("n={n} lands in the avoiders"), in_codomain);
        report.push_flag(format!("n={n} fixed points preserved"), fixed_preserved);
        report.push_flag(format!("n={n} inversion law"), inversion_law);
        report.push_flag(format!("n={n} parity flips"), parity_flip);
        // Bijectivity onto the avoiders two shorter with a fixed point.
        let codomain: Vec<Permutation> = avoiders(n - 2, limits)?
            .into_iter()
            .filter(|s| s.fixed_points() >= 1)
            .collect();
        report.push(format!("n={n} image size"), sources.len(), images.len());
        report.push(format!("n={n} codomain covered"), codomain.len(), images.len());
        // The closed parity split.
        report.push(
            format!("n={n} even once"),
            closed::even_one_occurrence(n),
            even_count,
        );
        report.push(
            format!("n={n} odd once"),
            closed::odd_one_occurrence(n),
            odd_count,
        );
    }
    Ok(report)
}

// --------------------------------------------------------------------------
// Criterion 7: the section-3 catalog against the oracle
// --------------------------------------------------------------------------

/// How a family constrains its objects.
enum FamilyMode {
    /// Avoid 132 and avoid the second pattern.
    AvoidBoth,
    /// Avoid 132, contain the second pattern exactly once.
    AvoidContain,
    /// Contain 132 exactly once, avoid the second pattern.
    ContainAvoid,
    /// Contain both exactly once.
    ContainBoth,
}

fn family_pattern(base: &str, k: usize, d: usize) -> Result<(FamilyMode, Option<PatternSpec>)> {
    Ok(match base {
        "empty" => (FamilyMode::AvoidBoth, None),
        "12k" => (FamilyMode::AvoidBoth, Some(PatternSpec::monotone(k))),
        "2134k" => (FamilyMode::AvoidBoth, Some(PatternSpec::prefix_swapped(k))),
        "rot" => (FamilyMode::AvoidBoth, Some(PatternSpec::rotation(k, d)?)),
        "12k_once" => (FamilyMode::AvoidContain, Some(PatternSpec::monotone(k))),
        "2134k_once" => (FamilyMode::AvoidContain, Some(PatternSpec::prefix_swapped(k))),
        "23k1_once" => (FamilyMode::AvoidContain, Some(PatternSpec::rotation(k, 1)?)),
        "J_empty" => (FamilyMode::ContainAvoid, None),
        "J_12k" => (FamilyMode::ContainAvoid, Some(PatternSpec::monotone(k))),
        "J_2134k" => (FamilyMode::ContainAvoid, Some(PatternSpec::prefix_swapped(k))),
        "J_23k1" => (FamilyMode::ContainAvoid, Some(PatternSpec::rotation(k, 1)?)),
        "J_12k_once" => (FamilyMode::ContainBoth, Some(PatternSpec::monotone(k))),
        "J_23k1_once" => (FamilyMode::ContainBoth, Some(PatternSpec::rotation(k, 1)?)),
        "J_2134k_once" => (FamilyMode::ContainBoth, Some(PatternSpec::prefix_swapped(k))),
        _ => return Err(Error::UnknownName(format!("family {base:?}"))),
    })
}

fn family_query(base: &str, k: usize, d: usize, n: usize) -> Result<CountQuery> {
    let (mode, pattern) = family_pattern(base, k, d)?;
    let mut q = CountQuery::new(ObjectClass::Involutions, n);
    q = match mode {
        FamilyMode::AvoidBoth | FamilyMode::AvoidContain => q.avoiding(pattern_132()),
        FamilyMode::ContainAvoid | FamilyMode::ContainBoth => q.containing(pattern_132(), 1),
    };
    if let Some(t) = pattern {
        q = match mode {
            FamilyMode::AvoidBoth | FamilyMode::ContainAvoid => q.avoiding(t),
            FamilyMode::AvoidContain | FamilyMode::ContainBoth => q.containing(t, 1),
        };
    }
    Ok(q.tallying(Statistic::Parity))
}

/// Compares a family's even series (and odd/total when available) against
/// the oracle's parity tally, for each listed `(k, d)`.
fn theorem_i(
    target: &str,
    base: &str,
    params: &[(usize, usize)],
    n_max: usize,
    limits: &Limits,
) -> Result<VerifyReport> {
    let mut report = VerifyReport::new(target, format!("family={base} n_max={n_max}"));
    let sweep: &[(usize, usize)] = if params.is_empty() { &[(0, 0)] } else { params };
    for &(k, d) in sweep {
        let fam = family(base, Some(k).filter(|&k| k > 0), Some(d).filter(|&d| d > 0),
            RotationReading::Proof, n_max)?;
        let tag = if k == 0 {
            String::new()
        } else if d == 0 {
            format!("k={k} ")
        } else {
            format!("k={k} d={d} ")
        };
        for n in 0..=n_max {
            let tally = distribution(&family_query(base, k, d, n)?, limits)?;
            let even = tally.get(&vec![0]).copied().unwrap_or(0);
            let odd = tally.get(&vec![1]).copied().unwrap_or(0);
            report.push(format!("{tag}n={n} even"), fam.even.coefficient(n), even);
            if let Some(odd_series) = &fam.odd {
                report.push(format!("{tag}n={n} odd"), odd_series.coefficient(n), odd);
            }
            if let Some(total) = &fam.total {
                report.push(format!("{tag}n={n} total"), total.coefficient(n), even + odd);
            }
        }
    }
    if target == "thc1" {
        // The discrete form of the even count, from n = 3 on.
        let fam = family("J_empty", None, None, RotationReading::Proof, n_max)?;
        for n in 3..=n_max {
            report.push(
                format!("n={n} discrete"),
                closed::even_one_occurrence_discrete(n)?,
                fam.even.coefficient(n),
            );
        }
    }
    Ok(report)
}

fn thd1(n_max: usize, limits: &Limits) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("thd1", format!("n_max={n_max}"));
    for base in ["J_12k_once", "J_23k1_once"] {
        for k in 2..=5 {
            let fam = family(base, Some(k), None, RotationReading::Proof, n_max)?;
            for n in 0..=n_max {
                let tally = distribution(&family_query(base, k, 0, n)?, limits)?;
                let even = tally.get(&vec![0]).copied().unwrap_or(0);
                report.push(format!("{base} k={k} n={n} series zero"), 0, fam.even.coefficient(n));
                report.push(format!("{base} k={k} n={n} oracle zero"), 0, even);
            }
        }
    }
    Ok(report)
}

// --------------------------------------------------------------------------
// Criterion 8: the section-4 continued fractions
// --------------------------------------------------------------------------

fn cf_c(n_max: usize, limits: &Limits) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("cf_c", format!("n_max={n_max}"));
    let order_y = n_max * n_max.saturating_sub(1) / 2;
    let ci = cf_catalog(CfKind::CI, &Specialization::length_and_second(), n_max, order_y)?;
    let ascending = PatternSpec::parse("1-2")?;
    for n in 0..=n_max {
        let q = CountQuery::new(ObjectClass::Involutions, n)
            .avoiding(pattern_132())
            .tallying(Statistic::Occurrences(ascending.clone()));
        let tally = distribution(&q, limits)?;
        let mut joint_ok = true;
        for j in 0..=order_y {
            let observed = tally.get(&vec![j as u64]).copied().unwrap_or(0);
            joint_ok &= ci.coefficient(n, j) == rat(observed as i64);
        }
        report.push_flag(format!("n={n} joint (length, ascents)"), joint_ok);
        // The two quoted closed forms for one and two occurrences of 1-2.
        let once = tally.get(&vec![1]).copied().unwrap_or(0);
        let twice = tally.get(&vec![2]).copied().unwrap_or(0);
        if n >= 1 {
            report.push(format!("n={n} once 1-2"), closed::once_ascending_pair(n), once);
            report.push(format!("n={n} twice 1-2"), closed::twice_ascending_pair(n), twice);
        }
    }
    // C_S at (x, 1, 1, …) is the Catalan series.
    let cs = cf_catalog(CfKind::CS, &Specialization::length_only(), n_max, 0)?;
    let catalan = catalan_series(n_max);
    let mut catalan_ok = true;
    for n in 0..=n_max {
        catalan_ok &= cs.coefficient(n, 0) == catalan.coefficient(n);
    }
    report.push_flag("C_S specializes to Catalan".to_string(), catalan_ok);
    Ok(report)
}

fn cf_d(n_max: usize, limits: &Limits) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("cf_d", format!("n_max={n_max}"));
    let di = cf_catalog(CfKind::DI, &Specialization::length_and_second(), n_max, n_max)?;
    let adjacent = PatternSpec::parse("12")?;
    for n in 0..=n_max {
        let q = CountQuery::new(ObjectClass::Involutions, n)
            .avoiding(pattern_132())
            .tallying(Statistic::Occurrences(adjacent.clone()));
        let tally = distribution(&q, limits)?;
        let mut joint_ok = true;
        for j in 0..=n_max {
            let observed = tally.get(&vec![j as u64]).copied().unwrap_or(0);
            joint_ok &= di.coefficient(n, j) == rat(observed as i64);
        }
        report.push_flag(format!("n={n} joint (length, rises)"), joint_ok);
        let once = tally.get(&vec![1]).copied().unwrap_or(0);
        let twice = tally.get(&vec![2]).copied().unwrap_or(0);
        report.push(format!("n={n} once adjacent 12"), closed::once_adjacent_rise(n), once);
        report.push(format!("n={n} twice adjacent 12"), closed::twice_adjacent_rise(n), twice);
    }
    Ok(report)
}

// --------------------------------------------------------------------------
// Criterion 9: right-to-left maxima
// --------------------------------------------------------------------------

fn th_ssd(n_max: usize, limits: &Limits) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("th_ssd", format!("n_max={n_max}"));
    let gf = rtl_gf(n_max);
    for n in 0..=n_max {
        let q = CountQuery::new(ObjectClass::Involutions, n)
            .avoiding(pattern_132())
            .tallying(Statistic::RtlMaxima);
        let tally = distribution(&q, limits)?;
        for s in 1..=n {
            let observed = tally.get(&vec![s as u64]).copied().unwrap_or(0);
            report.push(
                format!("n={n} s={s} closed form"),
                closed::avoiders_by_rtl_maxima(n, s),
                observed,
            );
            report.push(
                format!("n={n} s={s} series"),
                gf.coefficient(n, s),
                rat(observed as i64),
            );
        }
    }
    // Odd length with evenly many maxima never happens.
    let mut vanishing = true;
    for n in (1..=n_max).step_by(2) {
        for s in (2..=n).step_by(2) {
            vanishing &= gf.coefficient(n, s) == rat(0);
        }
    }
    report.push_flag("odd length, even maxima vanish".to_string(), vanishing);
    // The ballot law on 132-avoiding permutations behind the even case.
    for n in 1..=n_max.min(limits.permutations) {
        let q = CountQuery::new(ObjectClass::Permutations, n)
            .avoiding(pattern_132())
            .tallying(Statistic::RtlMaxima);
        let tally = distribution(&q, limits)?;
        for s in 1..=n {
            let observed = tally.get(&vec![s as u64]).copied().unwrap_or(0);
            report.push(
                format!("permutations n={n} s={s}"),
                closed::permutations_by_rtl_maxima(n, s),
                observed,
            );
        }
    }
    Ok(report)
}

fn rtl_lemmas(n_max: usize, limits: &Limits) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("rtl_lemmas", format!("n_max={n_max}"));
    // The remark's facts on every avoider.
    for n in 1..=n_max.min(12) {
        let mut facts = true;
        for p in avoiders(n, limits)? {
            let maxima = p.rtl_maxima_values();
            let s = maxima.len();
            // Positions mirror: the i-th maximum sits where the
            // (s+1−i)-th one points.
            for (i, &m) in maxima.iter().enumerate() {
                facts &= p.preimage(m) == maxima[s - i - 1];
                let lower = if i == 0 { 0 } else { maxima[i - 1] };
                facts &= p.preimage(m) == n - lower;
            }
            if s % 2 == 0 {
                facts &= p.fixed_points() == 0;
            } else if s != 1 {
                let mid = (s + 1) / 2;
                facts &= maxima[mid - 1] + maxima[mid - 2] == n;
            }
        }
        report.push_flag(format!("n={n} remark facts"), facts);
    }
    // Both surgery lemmas. The image classes are keyed by (length, maxima):
    // the fixed-point side conditions are automatic from the remark (even
    // maxima force no fixed point, odd maxima on even length force some).
    for n in 1..=n_max {
        let sources: Vec<Permutation> = avoiders(n, limits)?
            .into_iter()
            .filter(|p| p.rtl_maxima_values().len() % 2 == 1)
            .collect();
        let mut images: BTreeMap<usize, BTreeSet<Permutation>> = BTreeMap::new();
        let mut shape_ok = true;
        for p in &sources {
            let s = p.rtl_maxima_values().len();
            let image = rtl_lemma_map(p)?;
            let result = &image.result;
            let expected_s = match image.case {
                RtlLemmaCase::EvenToOdd | RtlLemmaCase::OddToEvenMoreFixed => s + 2,
                RtlLemmaCase::OddToEvenNoFixed => s + 1,
            };
            shape_ok &= result.len() == n + 1
                && result.is_involution()
                && !result.contains(&pattern_132())
                && result.rtl_maxima_values().len() == expected_s;
            if image.case == RtlLemmaCase::OddToEvenNoFixed {
                shape_ok &= result.fixed_points() == 0;
            }
            images.entry(expected_s).or_default().insert(result.clone());
        }
        report.push_flag(format!("n={n} images well formed"), shape_ok);
        let mapped_total: usize = images.values().map(|set| set.len()).sum();
        report.push(format!("n={n} images distinct"), sources.len(), mapped_total);
        // Images fill each stated codomain class exactly.
        let targets = avoiders(n + 1, limits)?;
        let mut onto = true;
        for (s, image_set) in &images {
            let codomain = targets
                .iter()
                .filter(|q| q.rtl_maxima_values().len() == *s)
                .count();
            onto &= image_set.len() == codomain;
        }
        report.push_flag(format!("n={n} bijective onto codomains"), onto);
    }
    Ok(report)
}

// --------------------------------------------------------------------------
// Criterion 10: the bounded-pattern tables
// --------------------------------------------------------------------------

fn bounded(n_max: usize, limits: &Limits) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("bounded", format!("n_max={n_max}"));
    for k in 3..=5 {
        let system = SuccessionSystem::bounded(k);
        for n in 0..=n_max {
            let q = CountQuery::new(ObjectClass::Involutions, n)
                .avoiding(pattern_132())
                .avoiding(PatternSpec::monotone(k))
                .tallying(Statistic::FixedPoints)
                .tallying(Statistic::Parity);
            let tally = distribution(&q, limits)?;
            let by_label = level_counts(&system, n);
            let mut total = 0u64;
            for p in 0..k {
                let observed: u64 = tally
                    .iter()
                    .filter(|(key, _)| key[0] == p as u64)
                    .map(|(_, c)| *c)
                    .sum();
                total += observed;
                report.push(
                    format!("k={k} n={n} p={p} closed"),
                    closed::bounded_by_fixed_points(k, n, p)?,
                    observed,
                );
                report.push(
                    format!("k={k} n={n} p={p} tree"),
                    by_label.get(&vec![p as i64]).cloned().unwrap_or_default(),
                    observed,
                );
            }
            report.push(format!("k={k} n={n} level total"), level_total(&system, n), total);
            let even: u64 = tally.iter().filter(|(key, _)| key[1] == 0).map(|(_, c)| *c).sum();
            let odd: u64 = tally.iter().filter(|(key, _)| key[1] == 1).map(|(_, c)| *c).sum();
            report.push(
                format!("k={k} n={n} even"),
                closed::bounded_by_parity(k, n, true)?,
                even,
            );
            report.push(
                format!("k={k} n={n} odd"),
                closed::bounded_by_parity(k, n, false)?,
                odd,
            );
        }
    }
    Ok(report)
}

// --------------------------------------------------------------------------
// Criterion 11: the property suites
// --------------------------------------------------------------------------

/// A tiny deterministic generator for test polynomials.
struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn small(&mut self) -> i64 {
        (self.next() % 11) as i64 - 5
    }
}

fn genl() -> Result<VerifyReport> {
    let mut report = VerifyReport::new("genl", "order=12 trials=10".to_string());
    let order = 12;
    let mut rng = SplitMix(0x132);
    for trial in 0..10 {
        let y: Vec<i64> = (0..=6).map(|_| rng.small()).collect();
        let z: Vec<i64> = (0..=6).map(|_| rng.small()).collect();
        // Left sides by direct double sums.
        let mut odd_lhs = vec![0i64; order + 1];
        let mut even_lhs = vec![0i64; order + 1];
        for (n, slot) in odd_lhs.iter_mut().enumerate() {
            for j in 0..=n / 4 {
                if 2 * j + 1 <= 6 && n - 4 * j <= 6 {
                    *slot += y[2 * j + 1] * z[n - 4 * j];
                }
            }
        }
        for (n, slot) in even_lhs.iter_mut().enumerate() {
            for j in 0..=n / 4 {
                if 2 * j <= 6 && n - 4 * j <= 6 {
                    *slot += y[2 * j] * z[n - 4 * j];
                }
            }
        }
        // Right sides via the series engine.
        let ypoly = Poly::from_integers(&y);
        let zpoly = Poly::from_integers(&z);
        let y_plus = ypoly.substitute_square(false).to_series(order + 2);
        let y_minus = ypoly.substitute_square(true).to_series(order + 2);
        let zs = zpoly.to_series(order + 2);
        let odd_rhs = y_plus
            .sub(&y_minus)
            .mul(&zs)
            .div_xpow(2)?
            .scale(&(rat(1) / rat(2)));
        let even_rhs = y_plus.add(&y_minus).mul(&zs).scale(&(rat(1) / rat(2)));
        let odd_ok = (0..=order).all(|n| odd_rhs.coefficient(n) == rat(odd_lhs[n]));
        let even_ok = (0..=order).all(|n| even_rhs.coefficient(n) == rat(even_lhs[n]));
        report.push_flag(format!("trial {trial} odd-index sum"), odd_ok);
        report.push_flag(format!("trial {trial} even-index sum"), even_ok);
    }
    Ok(report)
}

fn rk_equations() -> Result<VerifyReport> {
    let mut report = VerifyReport::new("rk", "order=20 k<=8".to_string());
    for k in 1..=8 {
        report.push_flag(
            format!("k={k} functional equation"),
            catalog::r_k_functional_equation_holds(k, 20),
        );
    }
    Ok(report)
}

fn family_sweep() -> Vec<(&'static str, Vec<(usize, usize)>)> {
    vec![
        ("empty", vec![(0, 0)]),
        ("12k", (1..=6).map(|k| (k, 0)).collect()),
        ("2134k", (2..=6).map(|k| (k, 0)).collect()),
        ("rot", vec![(2, 1), (3, 1), (4, 1), (4, 2), (5, 1), (5, 2), (6, 2), (6, 3)]),
        ("12k_once", (1..=6).map(|k| (k, 0)).collect()),
        ("2134k_once", (2..=6).map(|k| (k, 0)).collect()),
        ("23k1_once", (3..=6).map(|k| (k, 0)).collect()),
        ("J_empty", vec![(0, 0)]),
        ("J_12k", (2..=6).map(|k| (k, 0)).collect()),
        ("J_2134k", (3..=6).map(|k| (k, 0)).collect()),
        ("J_23k1", (2..=6).map(|k| (k, 0)).collect()),
        ("J_2134k_once", (2..=6).map(|k| (k, 0)).collect()),
    ]
}

fn eo_reconstruct(order: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("eo_reconstruct", format!("order={order} k<=6"));
    for (base, params) in family_sweep() {
        for (k, d) in params {
            let fam = family(base, Some(k).filter(|&k| k > 0), Some(d).filter(|&d| d > 0),
                RotationReading::Proof, order)?;
            let (Some(odd), Some(total)) = (&fam.odd, &fam.total) else {
                continue;
            };
            let rebuilt = fam.even.add(odd);
            report.push_flag(
                format!("{base} k={k} d={d} even+odd=total"),
                rebuilt.agrees_with(total, order),
            );
        }
    }
    Ok(report)
}

fn nonneg(order: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("nonneg", format!("order={order} k<=6"));
    for (base, params) in family_sweep() {
        for (k, d) in params {
            let fam = family(base, Some(k).filter(|&k| k > 0), Some(d).filter(|&d| d > 0),
                RotationReading::Proof, order)?;
            let mut ok = fam.even.has_nonnegative_integer_coefficients();
            if let Some(odd) = &fam.odd {
                ok &= odd.has_nonnegative_integer_coefficients();
            }
            if let Some(total) = &fam.total {
                ok &= total.has_nonnegative_integer_coefficients();
            }
            report.push_flag(format!("{base} k={k} d={d} counting series"), ok);
        }
    }
    Ok(report)
}

fn stack_checks(n_max: usize, limits: &Limits) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("stack", format!("n_max={n_max}"));
    for n in 1..=n_max {
        let mut factor_law = true;
        let mut sorted_ok = 0u64;
        let mut total = 0u64;
        crate::oracle::for_each_permutation(n, &mut |p| {
            total += 1;
            match stack_sort_word(p) {
                Ok(word) => {
                    sorted_ok += 1;
                    factor_law &= word.is_dyck_word()
                        && word.len() == 2 * n
                        && primitive_factors(&word) == p.statistics().rtl_maxima;
                }
                Err(_) => {
                    factor_law &= p.contains(&pattern_132());
                }
            }
        });
        let avoider_count = count(
            &CountQuery::new(ObjectClass::Permutations, n).avoiding(pattern_132()),
            limits,
        )?;
        report.push(format!("n={n} sortable = avoiders"), avoider_count, sorted_ok);
        report.push_flag(format!("n={n} primitive factors = maxima"), factor_law);
        let _ = total;
    }
    Ok(report)
}

fn primitive_factors(word: &LatticeWord) -> usize {
    let mut height = 0isize;
    let mut factors = 0;
    for &s in word.steps() {
        height += if s == Step::Up { 1 } else { -1 };
        if height == 0 {
            factors += 1;
        }
    }
    factors
}

// --------------------------------------------------------------------------
// Criterion 12: exploratory checks (reported, never gating)
// --------------------------------------------------------------------------

fn motzkin_1432(n_max: usize, limits: &Limits) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("motzkin_1432", format!("n_max={n_max}"));
    report.exploratory = true;
    let pattern = PatternSpec::classical(&[1, 4, 3, 2])?;
    for n in 0..=n_max {
        let observed = count(
            &CountQuery::new(ObjectClass::Involutions, n).avoiding(pattern.clone()),
            limits,
        )?;
        report.push(format!("n={n}"), closed::motzkin_number(n), observed);
    }
    Ok(report)
}

fn quad4_classes(n_max: usize, limits: &Limits) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("quad4_classes", format!("n_max={n_max}"));
    report.exploratory = true;
    let patterns = [
        PatternSpec::classical(&[1, 2, 3, 4])?,
        PatternSpec::classical(&[1, 2, 4, 3])?,
        PatternSpec::classical(&[1, 4, 2, 3])?,
        PatternSpec::classical(&[4, 1, 2, 3])?,
    ];
    for n in 0..=n_max {
        let mut q = CountQuery::new(ObjectClass::Permutations, n + 1);
        for t in &patterns {
            q = q.avoiding(t.clone());
        }
        let observed = count(&q, limits)?;
        report.push(
            format!("n+1={}", n + 1),
            crate::succession::binomial(2 * n, n as isize),
            observed,
        );
    }
    Ok(report)
}

// --------------------------------------------------------------------------
// Tree-growth cross checks used by integration tests
// --------------------------------------------------------------------------

/// Grows the full generating tree of avoiders level by level and checks that
/// children enumerate the next level exactly once. Returns the level sizes.
pub fn grown_tree_levels(n_max: usize) -> Result<Vec<usize>> {
    let mut level = vec![Permutation::empty()];
    let mut sizes = vec![1usize];
    for _ in 0..n_max {
        let mut next = BTreeSet::new();
        for p in &level {
            let insert = grow_involution(p, GrowthStep::InsertFixedPoint)?;
            if !next.insert(insert) {
                return Err(Error::Domain("duplicate insert child".into()));
            }
            if p.fixed_points() >= 1 {
                let cycle = grow_involution(p, GrowthStep::FixedPointToCycle)?;
                if !next.insert(cycle) {
                    return Err(Error::Domain("duplicate cycle child".into()));
                }
            }
        }
        level = next.into_iter().collect();
        sizes.push(level.len());
    }
    Ok(sizes)
}

/// Same growth on the word side; the two trees stay aligned under `phi`.
pub fn grown_word_levels(n_max: usize) -> Result<Vec<usize>> {
    let mut level = vec![LatticeWord::empty()];
    let mut sizes = vec![1usize];
    for _ in 0..n_max {
        let mut next = BTreeSet::new();
        for w in &level {
            next.insert(grow_word(w, GrowthStep::InsertFixedPoint)?);
            if w.surplus() > 0 {
                next.insert(grow_word(w, GrowthStep::FixedPointToCycle)?);
            }
        }
        level = next.into_iter().collect();
        sizes.push(level.len());
    }
    Ok(sizes)
}

/// Round trip through the bilateral words for every avoider of length `n`.
pub fn xi_round_trip_exhaustive(n: usize) -> Result<bool> {
    let mut ok = true;
    let mut stack = vec![(LatticeWord::empty(), 0usize)];
    while let Some((w, len)) = stack.pop() {
        if len == n {
            let b = xi(&w)?;
            ok &= xi_inv(&b)? == w;
            continue;
        }
        let mut up = w.steps().to_vec();
        up.push(Step::Up);
        stack.push((LatticeWord::new(up), len + 1));
        if w.surplus() > 0 {
            let mut down = w.steps().to_vec();
            down.push(Step::Down);
            stack.push((LatticeWord::new(down), len + 1));
        }
    }
    Ok(ok)
}

/// Split/merge round trip over all bilateral words of length `n`.
pub fn split_round_trip_exhaustive(n: usize) -> Result<bool> {
    let mut ok = true;
    let count = 1usize << n;
    for mask in 0..count {
        let steps: Vec<Step> = (0..n)
            .map(|i| if mask >> i & 1 == 1 { Step::Up } else { Step::Down })
            .collect();
        let w = LatticeWord::new(steps);
        if !w.is_bilateral() {
            continue;
        }
        let (u, v) = split_uv(&w)?;
        ok &= crate::words::merge_uv(&u, &v)? == w;
    }
    Ok(ok)
}
