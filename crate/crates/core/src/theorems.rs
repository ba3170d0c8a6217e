//! Statement checkers: each evaluates the hypotheses and conclusion of one
//! statement about small conjugacy classes on a concrete group and returns a
//! structured [`TheoremReport`].
//!
//! Two statements (`conjecture_1`, `conjecture_1prime`) are open questions:
//! a `COUNTEREXAMPLE` verdict there is a discovery to publish, with the full
//! witness dumped. The other seven are settled, so a counterexample from
//! them means the implementation is wrong and fails the build.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::analysis::GroupAnalysis;
use crate::classes::{commutator_set, left_commutator_set, commutator_subgroup};
use crate::fitting::{enumerate_normal_subgroups, OracleCapExceeded};
use crate::group::{ElementId, GroupTable};
use crate::series::nilpotency_class;
use crate::set::ElementSet;
use crate::subgroup::{
    center_of, centralizer, is_normal_subgroup, is_subgroup, normal_subset_violation, Subgroup,
};

/// Identifier of a checkable statement.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Statement {
    #[serde(rename = "lemma_centralizer")]
    LemmaCentralizer,
    #[serde(rename = "prop_commutator_central")]
    PropCommutatorCentral,
    #[serde(rename = "theorem_A")]
    TheoremA,
    #[serde(rename = "corollary_B")]
    CorollaryB,
    #[serde(rename = "theorem_C")]
    TheoremC,
    #[serde(rename = "conjecture_1")]
    Conjecture1,
    #[serde(rename = "conjecture_1prime")]
    Conjecture1Prime,
    #[serde(rename = "prop_equivalence")]
    PropEquivalence,
    #[serde(rename = "prop_flat")]
    PropFlat,
}

impl Statement {
    pub const ALL: [Statement; 9] = [
        Statement::LemmaCentralizer,
        Statement::PropCommutatorCentral,
        Statement::TheoremA,
        Statement::CorollaryB,
        Statement::TheoremC,
        Statement::Conjecture1,
        Statement::Conjecture1Prime,
        Statement::PropEquivalence,
        Statement::PropFlat,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Statement::LemmaCentralizer => "lemma_centralizer",
            Statement::PropCommutatorCentral => "prop_commutator_central",
            Statement::TheoremA => "theorem_A",
            Statement::CorollaryB => "corollary_B",
            Statement::TheoremC => "theorem_C",
            Statement::Conjecture1 => "conjecture_1",
            Statement::Conjecture1Prime => "conjecture_1prime",
            Statement::PropEquivalence => "prop_equivalence",
            Statement::PropFlat => "prop_flat",
        }
    }

    pub fn parse(text: &str) -> Option<Statement> {
        Statement::ALL.into_iter().find(|s| s.id() == text)
    }

    /// Whether a counterexample would be a finding rather than a bug.
    pub fn is_conjecture(self) -> bool {
        matches!(self, Statement::Conjecture1 | Statement::Conjecture1Prime)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    HypothesisNotMet,
    Verified,
    Counterexample,
    NotApplicable,
}

pub const ALL_VERDICTS: [Verdict; 4] = [
    Verdict::HypothesisNotMet,
    Verdict::Verified,
    Verdict::Counterexample,
    Verdict::NotApplicable,
];

impl Verdict {
    pub fn id(self) -> &'static str {
        match self {
            Verdict::HypothesisNotMet => "HYPOTHESIS_NOT_MET",
            Verdict::Verified => "VERIFIED",
            Verdict::Counterexample => "COUNTEREXAMPLE",
            Verdict::NotApplicable => "NOT_APPLICABLE",
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub held: bool,
}

/// Structured outcome of one checker on one group.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TheoremReport {
    pub group_name: String,
    pub statement: Statement,
    pub hypotheses: Vec<Hypothesis>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub conclusion: Option<bool>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Value>,
}

impl TheoremReport {
    fn not_applicable(
        group: &GroupTable,
        statement: Statement,
        hypotheses: Vec<Hypothesis>,
        witness: Option<Value>,
    ) -> Self {
        TheoremReport {
            group_name: group.name().to_string(),
            statement,
            hypotheses,
            conclusion: None,
            verdict: Verdict::NotApplicable,
            witness,
        }
    }

    fn hypothesis_not_met(
        group: &GroupTable,
        statement: Statement,
        hypotheses: Vec<Hypothesis>,
        witness: Option<Value>,
    ) -> Self {
        debug_assert!(hypotheses.iter().any(|h| !h.held));
        TheoremReport {
            group_name: group.name().to_string(),
            statement,
            hypotheses,
            conclusion: None,
            verdict: Verdict::HypothesisNotMet,
            witness,
        }
    }

    fn concluded(
        group: &GroupTable,
        statement: Statement,
        hypotheses: Vec<Hypothesis>,
        conclusion: bool,
        witness: Option<Value>,
    ) -> Self {
        debug_assert!(hypotheses.iter().all(|h| h.held));
        TheoremReport {
            group_name: group.name().to_string(),
            statement,
            hypotheses,
            conclusion: Some(conclusion),
            verdict: if conclusion { Verdict::Verified } else { Verdict::Counterexample },
            witness,
        }
    }

    /// Checks the structural invariants relating verdict, hypotheses, and
    /// conclusion.
    pub fn validate(&self) -> Result<(), String> {
        let all_held = self.hypotheses.iter().all(|h| h.held);
        match self.verdict {
            Verdict::Verified => {
                if self.conclusion != Some(true) || !all_held {
                    return Err(format!(
                        "VERIFIED report for {} on {} must have all hypotheses and a true conclusion",
                        self.statement.id(),
                        self.group_name
                    ));
                }
            }
            Verdict::Counterexample => {
                if self.conclusion != Some(false) || !all_held {
                    return Err(format!(
                        "COUNTEREXAMPLE report for {} on {} must have all hypotheses and a false conclusion",
                        self.statement.id(),
                        self.group_name
                    ));
                }
            }
            Verdict::HypothesisNotMet => {
                if self.conclusion.is_some() || all_held {
                    return Err(format!(
                        "HYPOTHESIS_NOT_MET report for {} on {} must have a failed hypothesis and no conclusion",
                        self.statement.id(),
                        self.group_name
                    ));
                }
            }
            Verdict::NotApplicable => {
                if self.conclusion.is_some() {
                    return Err(format!(
                        "NOT_APPLICABLE report for {} on {} must not carry a conclusion",
                        self.statement.id(),
                        self.group_name
                    ));
                }
            }
        }
        Ok(())
    }
}

fn hyp(name: &str, held: bool) -> Hypothesis {
    Hypothesis { name: name.to_string(), held }
}

fn element_json(g: &GroupTable, x: ElementId) -> Value {
    json!({ "index": x.index(), "label": g.label(x) })
}

fn set_json(g: &GroupTable, set: &ElementSet) -> Value {
    let labels: Vec<String> = set.iter().map(|x| g.label(x)).collect();
    json!({ "order": set.len(), "members": labels })
}

/// Whether every conjugate of each member of `set` by members of `under`
/// stays in `set`; on failure returns the offending (conjugator, member).
fn normal_subset_check(
    g: &GroupTable,
    set: &ElementSet,
    under: &ElementSet,
) -> Result<(), (ElementId, ElementId)> {
    match normal_subset_violation(g, set, under) {
        None => Ok(()),
        Some(pair) => Err(pair),
    }
}

/// Centralizer-growth check: for a normal subgroup `K`, every non-central
/// `x` whose commutator set against `K` is a normal subset of `K` must have
/// |C_G(y)| strictly greater than |C_G(x)| for every `y` in that set.
pub fn check_lemma_centralizer(a: &GroupAnalysis, k: &Subgroup) -> TheoremReport {
    let g = a.group();
    if !is_normal_subgroup(g, k) {
        return TheoremReport::not_applicable(
            g,
            Statement::LemmaCentralizer,
            vec![hyp("K_normal_in_G", false)],
            Some(json!({ "K": set_json(g, k) })),
        );
    }
    let hypotheses = vec![hyp("K_normal_in_G", true)];
    let mut qualifying = 0usize;
    for x in g.elements() {
        if a.center().contains(x) {
            continue;
        }
        let comm = commutator_set(g, x, k);
        if normal_subset_check(g, &comm, k).is_err() {
            continue;
        }
        qualifying += 1;
        let cx = a.centralizer_order(x);
        for y in comm.iter() {
            let cy = a.centralizer_order(y);
            if cy <= cx {
                let witness = json!({
                    "x": element_json(g, x),
                    "y": element_json(g, y),
                    "centralizer_order_x": cx,
                    "centralizer_order_y": cy,
                    "commutator_set": set_json(g, &comm),
                    "K": set_json(g, k),
                });
                return TheoremReport::concluded(
                    g,
                    Statement::LemmaCentralizer,
                    hypotheses,
                    false,
                    Some(witness),
                );
            }
        }
    }
    TheoremReport::concluded(
        g,
        Statement::LemmaCentralizer,
        hypotheses,
        true,
        Some(json!({ "qualifying_noncentral_elements": qualifying, "k_order": k.order() })),
    )
}

/// For normal `K` with every small commutator set normal in `K`, the
/// commutator subgroup of M(G) against `K` must land in the center of G.
pub fn check_prop_commutator_central(a: &GroupAnalysis, k: &Subgroup) -> TheoremReport {
    let g = a.group();
    if !is_normal_subgroup(g, k) {
        return TheoremReport::not_applicable(
            g,
            Statement::PropCommutatorCentral,
            vec![hyp("K_normal_in_G", false)],
            Some(json!({ "K": set_json(g, k) })),
        );
    }
    let mut violation: Option<(ElementId, ElementId, ElementId)> = None;
    for x in a.small_elements().iter() {
        let comm = commutator_set(g, x, k);
        if let Err((u, s)) = normal_subset_check(g, &comm, k) {
            violation = Some((x, u, s));
            break;
        }
    }
    let hypotheses = vec![
        hyp("K_normal_in_G", true),
        hyp("small_commutator_sets_normal_in_K", violation.is_none()),
    ];
    if let Some((x, u, s)) = violation {
        return TheoremReport::hypothesis_not_met(
            g,
            Statement::PropCommutatorCentral,
            hypotheses,
            Some(json!({
                "small_x": element_json(g, x),
                "conjugator": element_json(g, u),
                "escaping_member": element_json(g, s),
            })),
        );
    }
    let m_k = commutator_subgroup(g, a.m_subgroup(), k);
    let contained = m_k.is_subset_of(a.center());
    let witness = json!({
        "m_order": a.m_subgroup().order(),
        "k_order": k.order(),
        "commutator_subgroup": set_json(g, &m_k),
        "center_order": a.center().order(),
    });
    TheoremReport::concluded(g, Statement::PropCommutatorCentral, hypotheses, contained, Some(witness))
}

fn theorem_a_hypotheses(a: &GroupAnalysis, sub: &Subgroup) -> (Vec<Hypothesis>, Option<Value>) {
    let g = a.group();
    let normal = is_normal_subgroup(g, sub);
    let self_centralizing = centralizer(g, sub, &ElementSet::full(g.order())).is_subset_of(sub);
    let mut violation = None;
    for x in a.small_elements().iter() {
        let comm = left_commutator_set(g, sub, x);
        if let Err((u, s)) = normal_subset_check(g, &comm, sub) {
            violation = Some((x, u, s));
            break;
        }
    }
    let hypotheses = vec![
        hyp("A_normal_in_G", normal),
        hyp("centralizer_of_A_within_A", self_centralizing),
        hyp("A_commutator_sets_normal_in_A", violation.is_none()),
    ];
    let witness = violation.map(|(x, u, s)| {
        json!({
            "small_x": element_json(g, x),
            "conjugator": element_json(g, u),
            "escaping_member": element_json(g, s),
        })
    });
    (hypotheses, witness)
}

/// Hypotheses: `A` normal, self-centralizing (C_G(A) inside A), and each
/// small element's commutator set against `A` a normal subset of `A`.
/// Conclusion: M(G) is nilpotent of class at most 3.
pub fn check_theorem_a(a: &GroupAnalysis, sub: &Subgroup) -> TheoremReport {
    let g = a.group();
    let (hypotheses, violation_witness) = theorem_a_hypotheses(a, sub);
    if hypotheses.iter().any(|h| !h.held) {
        return TheoremReport::hypothesis_not_met(
            g,
            Statement::TheoremA,
            hypotheses,
            violation_witness,
        );
    }
    let ok = matches!(a.m_class(), Some(c) if c <= 3);
    let witness = json!({
        "A_order": sub.order(),
        "m_order": a.m_subgroup().order(),
        "m_class": a.m_class(),
    });
    TheoremReport::concluded(g, Statement::TheoremA, hypotheses, ok, Some(witness))
}

/// Variant with the stronger hypothesis that each small element's commutator
/// set against `A` lies in the center of `A`. Conclusion: class of M(G) at
/// most 3, and the stronger hypothesis implies the normal-subset one (a
/// central subset of `A` is automatically normal in `A`) — both recorded.
pub fn check_corollary_b(a: &GroupAnalysis, sub: &Subgroup) -> TheoremReport {
    let g = a.group();
    let normal = is_normal_subgroup(g, sub);
    let self_centralizing = centralizer(g, sub, &ElementSet::full(g.order())).is_subset_of(sub);
    let sub_center = center_of(g, sub);
    let mut violation = None;
    for x in a.small_elements().iter() {
        let comm = left_commutator_set(g, sub, x);
        if !comm.is_subset_of(&sub_center) {
            violation = Some((x, comm));
            break;
        }
    }
    let hypotheses = vec![
        hyp("A_normal_in_G", normal),
        hyp("centralizer_of_A_within_A", self_centralizing),
        hyp("A_commutator_sets_central_in_A", violation.is_none()),
    ];
    if hypotheses.iter().any(|h| !h.held) {
        let witness = violation.map(|(x, comm)| {
            json!({
                "small_x": element_json(g, x),
                "commutator_set": set_json(g, &comm),
                "center_of_A": set_json(g, &sub_center),
            })
        });
        return TheoremReport::hypothesis_not_met(g, Statement::CorollaryB, hypotheses, witness);
    }
    let class_ok = matches!(a.m_class(), Some(c) if c <= 3);
    // The stronger hypothesis held, so the normal-subset hypothesis must too.
    let (weaker, _) = theorem_a_hypotheses(a, sub);
    let implied = weaker.iter().all(|h| h.held);
    let witness = json!({
        "A_order": sub.order(),
        "m_class": a.m_class(),
        "m_class_at_most_3": class_ok,
        "normal_subset_hypothesis_implied": implied,
    });
    TheoremReport::concluded(g, Statement::CorollaryB, hypotheses, class_ok && implied, Some(witness))
}

/// Hypotheses: the Fitting subgroup is self-centralizing and each small `x`
/// has its commutator set against F(G) a normal subset of F(G). Conclusion:
/// class of M(G) at most 2, and M(G) inside the second center of F(G) —
/// recorded separately in the witness.
pub fn check_theorem_c(a: &GroupAnalysis) -> TheoremReport {
    let g = a.group();
    let f = a.fitting();
    let self_centralizing = centralizer(g, f, &ElementSet::full(g.order())).is_subset_of(f);
    let mut violation = None;
    for x in a.small_elements().iter() {
        let comm = commutator_set(g, x, f);
        if let Err((u, s)) = normal_subset_check(g, &comm, f) {
            violation = Some((x, u, s));
            break;
        }
    }
    let hypotheses = vec![
        hyp("centralizer_of_F_within_F", self_centralizing),
        hyp("F_commutator_sets_normal_in_F", violation.is_none()),
    ];
    if hypotheses.iter().any(|h| !h.held) {
        let witness = violation.map(|(x, u, s)| {
            json!({
                "small_x": element_json(g, x),
                "conjugator": element_json(g, u),
                "escaping_member": element_json(g, s),
            })
        });
        return TheoremReport::hypothesis_not_met(g, Statement::TheoremC, hypotheses, witness);
    }
    let class_ok = matches!(a.m_class(), Some(c) if c <= 2);
    let in_second_center = a.m_subgroup().is_subset_of(a.fitting_second_center());
    let witness = json!({
        "m_order": a.m_subgroup().order(),
        "m_class": a.m_class(),
        "f_order": f.order(),
        "m_class_at_most_2": class_ok,
        "m_in_second_center_of_F": in_second_center,
    });
    TheoremReport::concluded(
        g,
        Statement::TheoremC,
        hypotheses,
        class_ok && in_second_center,
        Some(witness),
    )
}

fn conjecture_hypotheses(a: &GroupAnalysis) -> Vec<Hypothesis> {
    vec![
        hyp("G_solvable", a.is_solvable()),
        hyp("center_trivial", a.center().order() == 1),
    ]
}

/// Open question: in a solvable centerless group, do all small elements lie
/// in the center of the Fitting subgroup?
pub fn check_conjecture_1(a: &GroupAnalysis) -> TheoremReport {
    let g = a.group();
    let hypotheses = conjecture_hypotheses(a);
    if hypotheses.iter().any(|h| !h.held) {
        return TheoremReport::hypothesis_not_met(g, Statement::Conjecture1, hypotheses, None);
    }
    let escapers: Vec<ElementId> = a
        .small_elements()
        .iter()
        .filter(|&x| !a.fitting_center().contains(x))
        .collect();
    let ok = escapers.is_empty();
    let witness = if ok {
        json!({
            "small_count": a.small_elements().len(),
            "small_class_sizes": a.small_sizes(),
            "f_order": a.fitting().order(),
            "center_of_F_order": a.fitting_center().order(),
        })
    } else {
        // A counterexample to an open question: dump everything needed to
        // reconstruct and verify it by hand.
        json!({
            "escaping_small_elements": escapers.iter().map(|&x| element_json(g, x)).collect::<Vec<_>>(),
            "small_elements": set_json(g, a.small_elements()),
            "small_class_sizes": a.small_sizes(),
            "fitting": set_json(g, a.fitting()),
            "center_of_F": set_json(g, a.fitting_center()),
            "class_sizes": a.classes().sizes(),
        })
    };
    TheoremReport::concluded(g, Statement::Conjecture1, hypotheses, ok, Some(witness))
}

/// Open question, primed form: in a solvable centerless group, is each small
/// element's commutator set against F(G) a normal subset of F(G)?
pub fn check_conjecture_1prime(a: &GroupAnalysis) -> TheoremReport {
    let g = a.group();
    let hypotheses = conjecture_hypotheses(a);
    if hypotheses.iter().any(|h| !h.held) {
        return TheoremReport::hypothesis_not_met(g, Statement::Conjecture1Prime, hypotheses, None);
    }
    let f = a.fitting();
    let mut violation = None;
    for x in a.small_elements().iter() {
        let comm = commutator_set(g, x, f);
        if let Err((u, s)) = normal_subset_check(g, &comm, f) {
            violation = Some((x, u, s, comm));
            break;
        }
    }
    let ok = violation.is_none();
    let witness = match &violation {
        None => json!({
            "small_count": a.small_elements().len(),
            "f_order": f.order(),
        }),
        Some((x, u, s, comm)) => json!({
            "small_x": element_json(g, *x),
            "conjugator": element_json(g, *u),
            "escaping_member": element_json(g, *s),
            "commutator_set": set_json(g, comm),
            "fitting": set_json(g, f),
            "small_elements": set_json(g, a.small_elements()),
            "class_sizes": a.classes().sizes(),
        }),
    };
    TheoremReport::concluded(g, Statement::Conjecture1Prime, hypotheses, ok, Some(witness))
}

/// Settled equivalence: for solvable centerless groups, "M(G) inside the
/// center of F(G)" and "all small commutator sets against F(G) normal in
/// F(G)" are either both true or both false.
pub fn check_equivalence(a: &GroupAnalysis) -> TheoremReport {
    let g = a.group();
    let hypotheses = conjecture_hypotheses(a);
    if hypotheses.iter().any(|h| !h.held) {
        return TheoremReport::not_applicable(g, Statement::PropEquivalence, hypotheses, None);
    }
    let f = a.fitting();
    let first = a.m_subgroup().is_subset_of(a.fitting_center());
    let second = a.small_elements().iter().all(|x| {
        let comm = commutator_set(g, x, f);
        normal_subset_check(g, &comm, f).is_ok()
    });
    let witness = json!({
        "m_in_center_of_F": first,
        "commutator_sets_normal": second,
    });
    TheoremReport::concluded(g, Statement::PropEquivalence, hypotheses, first == second, Some(witness))
}

/// Whether every element's commutator set against the whole group is a
/// subgroup.
pub fn is_flat(g: &GroupTable) -> bool {
    let full = ElementSet::full(g.order());
    g.elements().all(|x| is_subgroup(g, &commutator_set(g, x, &full)))
}

/// Whether all non-central elements share one conjugacy class size
/// (vacuously true for abelian groups).
pub fn conjugate_rank_one(a: &GroupAnalysis) -> bool {
    let noncentral_sizes: Vec<usize> =
        a.classes().sizes().iter().copied().filter(|&s| s > 1).collect();
    noncentral_sizes.windows(2).all(|w| w[0] == w[1])
}

/// For p-groups of conjugate rank one with a non-central element: flatness
/// holds exactly when the nilpotency class is 2.
pub fn check_prop_flat(a: &GroupAnalysis) -> TheoremReport {
    let g = a.group();
    let prime_power = is_prime_power(g.order());
    let rank_one = conjugate_rank_one(a);
    let has_noncentral = a.center().order() < g.order();
    let hypotheses = vec![
        hyp("order_is_prime_power", prime_power),
        hyp("conjugate_rank_one", rank_one),
        hyp("has_noncentral_element", has_noncentral),
    ];
    if !(prime_power && rank_one && has_noncentral) {
        return TheoremReport::not_applicable(g, Statement::PropFlat, hypotheses, None);
    }
    let flat = is_flat(g);
    let class = nilpotency_class(g, &Subgroup::full(g));
    let ok = flat == (class == Some(2));
    let witness = json!({
        "flat": flat,
        "nilpotency_class": class,
    });
    TheoremReport::concluded(g, Statement::PropFlat, hypotheses, ok, Some(witness))
}

fn is_prime_power(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut n = n;
    let mut p = 0;
    for candidate in 2.. {
        if candidate * candidate > n {
            break;
        }
        if n % candidate == 0 {
            p = candidate;
            break;
        }
    }
    if p == 0 {
        return true; // n itself is prime
    }
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Reports for every subgroup in `normals` that qualifies for the class-3
/// bound statement by being self-centralizing (its full-group centralizer
/// contained in itself).
pub fn find_theorem_a_witnesses(
    a: &GroupAnalysis,
    normals: &[Subgroup],
) -> Vec<(Subgroup, TheoremReport)> {
    let g = a.group();
    let full = ElementSet::full(g.order());
    normals
        .iter()
        .filter(|n| centralizer(g, n, &full).is_subset_of(n))
        .map(|n| (n.clone(), check_theorem_a(a, n)))
        .collect()
}

/// [`find_theorem_a_witnesses`] over all normal subgroups, enumerated fresh
/// under the given class-count cap.
pub fn find_theorem_a_witnesses_enumerating(
    a: &GroupAnalysis,
    cap: usize,
) -> Result<Vec<(Subgroup, TheoremReport)>, OracleCapExceeded> {
    let normals = enumerate_normal_subgroups(a.group(), a.classes(), cap)?;
    Ok(find_theorem_a_witnesses(a, &normals))
}
