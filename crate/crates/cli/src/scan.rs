//! Batch scanning: a built-in group corpus, per-group analysis records,
//! statement checking, and deterministic report assembly.
//!
//! Scans are parallel per group (rayon), but the report is assembled in a
//! fixed order — records sorted by (order, name), summary maps keyed by
//! sorted statement and verdict identifiers — so the serialized output is
//! byte-identical no matter how many worker threads ran.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use smallclass::families::{
    direct_product, make_alternating, make_cyclic, make_dicyclic, make_dihedral,
    make_elementary_abelian, make_heisenberg, make_symmetric,
};
use smallclass::{
    check_conjecture_1, check_conjecture_1prime, check_corollary_b, check_equivalence,
    check_lemma_centralizer, check_prop_commutator_central, check_prop_flat, check_theorem_a,
    check_theorem_c, find_theorem_a_witnesses_enumerating, GroupAnalysis, GroupTable, Statement,
    TheoremReport, Verdict, MAX_REPRESENTABLE_ORDER,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Everything that determines a scan's output. Worker count is deliberately
/// not part of this: it must not influence the report.
#[derive(Clone, Debug, Serialize)]
pub struct ScanConfig {
    pub builtin_max_order: usize,
    pub catalogs: Vec<String>,
    pub statements: Vec<Statement>,
    pub oracle_cap: usize,
    pub max_order: usize,
    /// Which subgroup the subgroup-parameterized checkers receive in the
    /// base pass. Always the Fitting subgroup; echoed for self-description.
    pub parameter_subgroup: &'static str,
}

impl ScanConfig {
    pub fn new(
        builtin_max_order: usize,
        catalogs: Vec<String>,
        statements: Vec<Statement>,
        oracle_cap: usize,
        max_order: usize,
    ) -> Self {
        ScanConfig {
            builtin_max_order,
            catalogs,
            statements,
            oracle_cap,
            max_order,
            parameter_subgroup: "fitting",
        }
    }
}

/// One entry of the class-3-bound subgroup sweep: the qualifying subgroup's
/// order plus the resulting report.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessSearchEntry {
    pub subgroup_order: usize,
    pub report: TheoremReport,
}

/// Per-group scan result.
#[derive(Clone, Debug, Serialize)]
pub struct GroupRecord {
    pub name: String,
    pub order: usize,
    pub class_sizes: Vec<usize>,
    pub center_order: usize,
    pub small_degenerate: bool,
    pub m_order: usize,
    /// Nilpotency class of M(G); `null` when M(G) is not nilpotent.
    pub m_class: Option<usize>,
    pub f_order: usize,
    pub solvable: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub reports: Vec<TheoremReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_search: Option<Vec<WitnessSearchEntry>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleEntry {
    /// "proved_statement_bug" for settled statements (a checker defect),
    /// "conjecture_counterexample" for the open questions (a discovery).
    pub kind: &'static str,
    pub group: String,
    pub statement: Statement,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subgroup_order: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub schema_version: u32,
    pub tool_version: &'static str,
    pub config: ScanConfig,
    pub groups: Vec<GroupRecord>,
    /// statement id → verdict id → count, over every report in `groups`
    /// (witness-search entries included).
    pub summary: BTreeMap<String, BTreeMap<String, usize>>,
    pub counterexamples: Vec<CounterexampleEntry>,
}

impl ScanReport {
    pub fn has_counterexample(&self) -> bool {
        !self.counterexamples.is_empty()
    }
}

/// The fixed corpus of constructor-built groups of order ≤ `max_order`:
/// cyclic, dihedral (n ≥ 3), dicyclic (n ≥ 2), symmetric and alternating
/// (degree ≤ 7), elementary abelian (exponent ≥ 2), Heisenberg, and a few
/// direct products chosen for centerless/solvable coverage.
pub fn builtin_groups(max_order: usize, build_cap: usize) -> Vec<GroupTable> {
    let eff = max_order.min(build_cap).min(MAX_REPRESENTABLE_ORDER);
    let mut out = Vec::new();
    for n in 1..=eff {
        out.push(make_cyclic(n).expect("cyclic parameters in range"));
    }
    for n in 3..=eff / 2 {
        out.push(make_dihedral(n).expect("dihedral parameters in range"));
    }
    for n in 2..=eff / 4 {
        out.push(make_dicyclic(n).expect("dicyclic parameters in range"));
    }
    for n in 3..=7 {
        if factorial(n) <= eff {
            out.push(make_symmetric(n).expect("symmetric parameters in range"));
        }
        if n >= 4 && factorial(n) / 2 <= eff {
            out.push(make_alternating(n).expect("alternating parameters in range"));
        }
    }
    for p in (2..=eff).filter(|&p| is_prime(p)) {
        if p.saturating_mul(p) > eff {
            break;
        }
        let mut order = p * p;
        let mut k = 2;
        while order <= eff {
            out.push(make_elementary_abelian(p, k).expect("elementary abelian in range"));
            k += 1;
            order = match order.checked_mul(p) {
                Some(next) => next,
                None => break,
            };
        }
    }
    for p in (3..=eff).filter(|&p| is_prime(p)) {
        if p.saturating_mul(p).saturating_mul(p) > eff {
            break;
        }
        out.push(make_heisenberg(p).expect("heisenberg parameters in range"));
    }
    // Products giving solvable centerless and mixed-nilpotency coverage.
    let pairs: [(GroupTable, GroupTable); 5] = [
        (make_symmetric(3).unwrap(), make_symmetric(3).unwrap()),
        (make_symmetric(3).unwrap(), make_cyclic(2).unwrap()),
        (make_dihedral(4).unwrap(), make_cyclic(3).unwrap()),
        (make_dihedral(5).unwrap(), make_symmetric(3).unwrap()),
        (make_alternating(4).unwrap(), make_cyclic(2).unwrap()),
    ];
    for (a, b) in pairs {
        if a.order() * b.order() <= eff {
            out.push(direct_product(&a, &b, eff).expect("product order checked"));
        }
    }
    out
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Runs every selected checker on every group and assembles the report.
///
/// `extra_groups` (catalog ingests) are scanned after the built-in corpus.
/// Per-group outcomes are recorded, never aborted on; the only panic paths
/// are internal invariant violations.
pub fn scan(config: &ScanConfig, extra_groups: Vec<GroupTable>) -> ScanReport {
    assert!(!config.statements.is_empty(), "statement set must be non-empty");
    let mut groups = builtin_groups(config.builtin_max_order, config.max_order);
    groups.extend(extra_groups);
    let mut records: Vec<GroupRecord> = groups
        .into_par_iter()
        .map(|g| analyze_group(g, &config.statements, config.oracle_cap))
        .collect();
    records.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.name.cmp(&b.name)));

    let mut summary: BTreeMap<String, BTreeMap<String, usize>> = BTreeMap::new();
    for &s in &config.statements {
        let per: BTreeMap<String, usize> = smallclass::ALL_VERDICTS
            .iter()
            .map(|v| (v.id().to_string(), 0))
            .collect();
        summary.insert(s.id().to_string(), per);
    }
    let mut counterexamples = Vec::new();
    for record in &records {
        let tagged = record
            .reports
            .iter()
            .map(|r| (r, None))
            .chain(
                record
                    .witness_search
                    .iter()
                    .flatten()
                    .map(|e| (&e.report, Some(e.subgroup_order))),
            );
        for (report, subgroup_order) in tagged {
            *summary
                .get_mut(report.statement.id())
                .expect("summary pre-seeded with every selected statement")
                .get_mut(report.verdict.id())
                .expect("summary pre-seeded with every verdict")
                += 1;
            if report.verdict == Verdict::Counterexample {
                counterexamples.push(CounterexampleEntry {
                    kind: if report.statement.is_conjecture() {
                        "conjecture_counterexample"
                    } else {
                        "proved_statement_bug"
                    },
                    group: record.name.clone(),
                    statement: report.statement,
                    subgroup_order,
                });
            }
        }
    }
    ScanReport {
        schema_version: SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION"),
        config: config.clone(),
        groups: records,
        summary,
        counterexamples,
    }
}

/// Analysis record for one group, including the base checker pass (the
/// subgroup-parameterized checkers get K = F(G), which is always normal)
/// and, when the class count is within the cap, the self-centralizing
/// normal-subgroup sweep for the class-3 bound.
pub fn analyze_group(g: GroupTable, statements: &[Statement], oracle_cap: usize) -> GroupRecord {
    let a = GroupAnalysis::new(g);
    let reports: Vec<TheoremReport> = statements
        .iter()
        .map(|&s| run_checker(&a, s))
        .collect();
    let witness_search = if statements.contains(&Statement::TheoremA)
        && a.classes().len() <= oracle_cap
    {
        let entries = find_theorem_a_witnesses_enumerating(&a, oracle_cap)
            .expect("class count checked against cap")
            .into_iter()
            .map(|(sub, report)| WitnessSearchEntry {
                subgroup_order: sub.order(),
                report,
            })
            .collect();
        Some(entries)
    } else {
        None
    };
    GroupRecord {
        name: a.group().name().to_string(),
        order: a.group().order(),
        class_sizes: a.classes().sizes().to_vec(),
        center_order: a.center().order(),
        small_degenerate: a.small_degenerate(),
        m_order: a.m_subgroup().order(),
        m_class: a.m_class(),
        f_order: a.fitting().order(),
        solvable: a.is_solvable(),
        reports,
        witness_search,
    }
}

/// Dispatches one statement checker with the scan's base parameters.
pub fn run_checker(a: &GroupAnalysis, statement: Statement) -> TheoremReport {
    match statement {
        Statement::LemmaCentralizer => check_lemma_centralizer(a, a.fitting()),
        Statement::PropCommutatorCentral => check_prop_commutator_central(a, a.fitting()),
        Statement::TheoremA => check_theorem_a(a, a.fitting()),
        Statement::CorollaryB => check_corollary_b(a, a.fitting()),
        Statement::TheoremC => check_theorem_c(a),
        Statement::Conjecture1 => check_conjecture_1(a),
        Statement::Conjecture1Prime => check_conjecture_1prime(a),
        Statement::PropEquivalence => check_equivalence(a),
        Statement::PropFlat => check_prop_flat(a),
    }
}

/// Parses `--statements`: the word `all` or a comma-separated identifier
/// list. The result follows the canonical statement order regardless of the
/// input order, with duplicates collapsed.
pub fn parse_statement_set(text: &str) -> Result<Vec<Statement>, String> {
    if text.trim() == "all" {
        return Ok(Statement::ALL.to_vec());
    }
    let mut requested = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        let statement = Statement::parse(part).ok_or_else(|| {
            format!(
                "unknown statement {:?}; known: all, {}",
                part,
                Statement::ALL.map(|s| s.id()).join(", ")
            )
        })?;
        requested.push(statement);
    }
    if requested.is_empty() {
        return Err("statement list is empty".to_string());
    }
    Ok(Statement::ALL
        .into_iter()
        .filter(|s| requested.contains(s))
        .collect())
}

/// `1 2^3 8` style run-length rendering of a sorted size list.
pub fn format_class_sizes(sizes: &[usize]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < sizes.len() {
        let mut j = i;
        while j < sizes.len() && sizes[j] == sizes[i] {
            j += 1;
        }
        if j - i == 1 {
            parts.push(format!("{}", sizes[i]));
        } else {
            parts.push(format!("{}^{}", sizes[i], j - i));
        }
        i = j;
    }
    parts.join(" ")
}

pub fn render_json(report: &ScanReport) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    text
}

pub fn render_text(report: &ScanReport) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let ids: Vec<&str> = report.config.statements.iter().map(|s| s.id()).collect();
    let _ = writeln!(
        out,
        "scan: {} group(s), builtin max order {}, statements: {}",
        report.groups.len(),
        report.config.builtin_max_order,
        ids.join(",")
    );
    for record in &report.groups {
        let m_class = match record.m_class {
            Some(c) => c.to_string(),
            None => "not nilpotent".to_string(),
        };
        let _ = writeln!(
            out,
            "{}  order {}  classes [{}]  |Z|={}  |M|={} (class {})  |F|={}  {}",
            record.name,
            record.order,
            format_class_sizes(&record.class_sizes),
            record.center_order,
            record.m_order,
            m_class,
            record.f_order,
            if record.solvable { "solvable" } else { "not solvable" },
        );
        for report in &record.reports {
            let _ = writeln!(out, "  {}: {}", report.statement.id(), report.verdict.id());
        }
        if let Some(entries) = &record.witness_search {
            let rendered: Vec<String> = entries
                .iter()
                .map(|e| format!("order {} {}", e.subgroup_order, e.report.verdict.id()))
                .collect();
            let _ = writeln!(
                out,
                "  theorem_A subgroup sweep ({} qualifying): {}",
                entries.len(),
                if rendered.is_empty() { "-".to_string() } else { rendered.join(", ") },
            );
        }
    }
    let _ = writeln!(out, "summary:");
    for (statement, per) in &report.summary {
        let counts: Vec<String> = smallclass::ALL_VERDICTS
            .iter()
            .map(|v| format!("{}={}", v.id(), per.get(v.id()).copied().unwrap_or(0)))
            .collect();
        let _ = writeln!(out, "  {}: {}", statement, counts.join(" "));
    }
    if report.counterexamples.is_empty() {
        let _ = writeln!(out, "counterexamples: none");
    } else {
        let _ = writeln!(out, "counterexamples:");
        for c in &report.counterexamples {
            let suffix = match c.subgroup_order {
                Some(k) => format!(" (subgroup order {k})"),
                None => String::new(),
            };
            let _ = writeln!(out, "  {}: {} on {}{}", c.kind, c.statement.id(), c.group, suffix);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use smallclass::{DEFAULT_MAX_ORDER, DEFAULT_ORACLE_CAP};

    fn config(max: usize, statements: Vec<Statement>) -> ScanConfig {
        ScanConfig::new(max, Vec::new(), statements, DEFAULT_ORACLE_CAP, DEFAULT_MAX_ORDER)
    }

    #[test]
    fn builtin_corpus_has_expected_members_and_bounds() {
        let groups = builtin_groups(64, DEFAULT_MAX_ORDER);
        let names: Vec<&str> = groups.iter().map(|g| g.name()).collect();
        for expected in ["C1", "C64", "D3", "D32", "Dic2", "Dic16", "S3", "S4", "A4", "E_4",
            "E_64", "H27", "S3xS3", "D4xC3", "A4xC2"]
        {
            assert!(names.contains(&expected), "missing {expected} in {names:?}");
        }
        assert!(groups.iter().all(|g| g.order() <= 64));
        // Names are unique (the corpus never builds the same group twice).
        let mut sorted = names.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
        // S5 and the larger products enter at higher caps.
        let larger = builtin_groups(200, DEFAULT_MAX_ORDER);
        let names: Vec<&str> = larger.iter().map(|g| g.name()).collect();
        for expected in ["S5", "A5", "C200", "D100", "Dic50", "E_128", "H125", "D5xS3"] {
            assert!(names.contains(&expected), "missing {expected}");
        }
    }

    #[test]
    fn trivial_group_scan_is_all_verified_or_not_applicable() {
        let report = scan(&config(1, Statement::ALL.to_vec()), Vec::new());
        assert_eq!(report.groups.len(), 1);
        for r in &report.groups[0].reports {
            assert!(
                matches!(r.verdict, Verdict::Verified | Verdict::NotApplicable),
                "{}: {:?}",
                r.statement.id(),
                r.verdict
            );
        }
        assert!(!report.has_counterexample());
    }

    #[test]
    fn s4_witness_search_contains_verified_order_4_subgroup() {
        let s4 = make_symmetric(4).unwrap();
        let record = analyze_group(s4, &[Statement::TheoremA], DEFAULT_ORACLE_CAP);
        let entries = record.witness_search.expect("S4 has 5 classes, within cap");
        assert!(entries
            .iter()
            .any(|e| e.subgroup_order == 4 && e.report.verdict == Verdict::Verified));
        assert_eq!(record.class_sizes, vec![1, 3, 6, 6, 8]);
        assert_eq!(record.m_order, 4);
    }

    #[test]
    fn summary_counts_match_report_recount() {
        let report = scan(&config(24, Statement::ALL.to_vec()), Vec::new());
        let mut recount: BTreeMap<(String, String), usize> = BTreeMap::new();
        for record in &report.groups {
            let all = record.reports.iter().chain(
                record.witness_search.iter().flatten().map(|e| &e.report),
            );
            for r in all {
                *recount
                    .entry((r.statement.id().to_string(), r.verdict.id().to_string()))
                    .or_default() += 1;
            }
        }
        let mut total_from_summary = 0;
        for (statement, per) in &report.summary {
            for (verdict, count) in per {
                total_from_summary += count;
                let expected = recount
                    .get(&(statement.clone(), verdict.clone()))
                    .copied()
                    .unwrap_or(0);
                assert_eq!(*count, expected, "{statement}/{verdict}");
            }
        }
        assert_eq!(total_from_summary, recount.values().sum::<usize>());
    }

    #[test]
    fn scan_output_is_independent_of_worker_count() {
        let run = |threads: usize| {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap();
            pool.install(|| render_json(&scan(&config(16, Statement::ALL.to_vec()), Vec::new())))
        };
        assert_eq!(run(1), run(4));
    }

    #[test]
    fn statement_set_parsing() {
        assert_eq!(parse_statement_set("all").unwrap(), Statement::ALL.to_vec());
        assert_eq!(
            parse_statement_set("conjecture_1,lemma_centralizer,conjecture_1").unwrap(),
            vec![Statement::LemmaCentralizer, Statement::Conjecture1],
        );
        assert!(parse_statement_set("theorem_Z").is_err());
        assert!(parse_statement_set("").is_err());
    }

    #[test]
    fn class_size_rendering() {
        assert_eq!(format_class_sizes(&[1, 3, 6, 6, 8]), "1 3 6^2 8");
        assert_eq!(format_class_sizes(&[1, 1, 1]), "1^3");
        assert_eq!(format_class_sizes(&[]), "");
    }

    #[test]
    fn empty_catalog_only_scan_has_zero_counts() {
        let report = scan(&config(0, vec![Statement::Conjecture1]), Vec::new());
        assert!(report.groups.is_empty());
        let per = &report.summary["conjecture_1"];
        assert_eq!(per.values().sum::<usize>(), 0);
        assert_eq!(per.len(), 4);
        assert!(!report.has_counterexample());
    }
}
