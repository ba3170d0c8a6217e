//! Cross-checks of the main algorithms against independent brute-force
//! oracles, plus randomized structural invariants.
//!
//! The `naive` module recomputes everything the slow, obvious way (full
//! conjugation scans, fixpoint closures, subset enumeration over class
//! unions) so that agreement is meaningful.

use std::sync::OnceLock;

use proptest::prelude::*;

use smallclass::families::{
    direct_product, make_alternating, make_cyclic, make_dicyclic, make_dihedral,
    make_elementary_abelian, make_heisenberg, make_symmetric,
};
use smallclass::{
    center, centralizer, check_conjecture_1, check_conjecture_1prime, check_corollary_b,
    check_equivalence, check_lemma_centralizer, check_prop_commutator_central, check_prop_flat,
    check_theorem_a, check_theorem_c, commutator_set, commutator_subgroup, conjugacy_classes,
    enumerate_normal_subgroups, fitting_subgroup, h_class, is_normal_subgroup, is_normal_subset,
    lower_central_series, m_subgroup, normal_closure, subgroup_generated, ElementId, ElementSet,
    GroupAnalysis, GroupTable, Subgroup, Verdict, DEFAULT_MAX_ORDER,
};

mod naive {
    use smallclass::{ElementId, ElementSet, GroupTable};

    /// Conjugacy classes by conjugating every element with every element.
    pub fn classes(g: &GroupTable) -> Vec<ElementSet> {
        let mut seen = ElementSet::empty(g.order());
        let mut out = Vec::new();
        for x in g.elements() {
            if seen.contains(x) {
                continue;
            }
            let mut class = ElementSet::empty(g.order());
            for u in g.elements() {
                class.insert(g.conj(x, u));
            }
            for y in class.iter() {
                seen.insert(y);
            }
            out.push(class);
        }
        out.sort_by_key(|c| (c.len(), c.iter().next().unwrap()));
        out
    }

    /// Subgroup closure as a fixpoint: S := {e} ∪ S ∪ S·S until stable.
    pub fn closure(g: &GroupTable, seed: &ElementSet) -> ElementSet {
        let mut current = seed.clone();
        current.insert(g.identity());
        loop {
            let mut next = current.clone();
            let members: Vec<ElementId> = current.iter().collect();
            for &a in &members {
                for &b in &members {
                    next.insert(g.mul(a, b));
                }
            }
            if next == current {
                return current;
            }
            current = next;
        }
    }

    pub fn center(g: &GroupTable) -> ElementSet {
        let mut out = ElementSet::empty(g.order());
        for x in g.elements() {
            if g.elements().all(|u| g.mul(x, u) == g.mul(u, x)) {
                out.insert(x);
            }
        }
        out
    }

    pub fn commutator_subgroup(g: &GroupTable, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let mut comms = ElementSet::empty(g.order());
        for x in a.iter() {
            for y in b.iter() {
                comms.insert(g.comm(x, y));
            }
        }
        closure(g, &comms)
    }

    /// Is `set` closed under products and does it contain the identity?
    pub fn is_subgroup(g: &GroupTable, set: &ElementSet) -> bool {
        set.contains(g.identity())
            && set.iter().all(|a| set.iter().all(|b| set.contains(g.mul(a, b))))
    }

    /// All normal subgroups by scanning every union of conjugacy classes
    /// (the identity's class always included) for the subgroup property.
    /// Exponential in the class count, so callers keep that small.
    pub fn normal_subgroups(g: &GroupTable) -> Vec<ElementSet> {
        let classes = classes(g);
        let identity_class = classes
            .iter()
            .position(|c| c.contains(g.identity()))
            .expect("identity is in some class");
        let optional: Vec<&ElementSet> = classes
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != identity_class)
            .map(|(_, c)| c)
            .collect();
        assert!(optional.len() <= 16, "naive enumeration cap");
        let mut out = Vec::new();
        for mask in 0u32..1 << optional.len() {
            let mut candidate = classes[identity_class].clone();
            for (i, class) in optional.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    candidate.union_with(class);
                }
            }
            if is_subgroup(g, &candidate) {
                out.push(candidate);
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out.dedup();
        out
    }

    /// Nilpotency via a lower central series built on the naive closure.
    pub fn is_nilpotent(g: &GroupTable, h: &ElementSet) -> bool {
        let mut current = h.clone();
        loop {
            let next = commutator_subgroup(g, &current, h);
            if next.len() == 1 {
                return true;
            }
            if next == current {
                return false;
            }
            current = next;
        }
    }

    /// Fitting subgroup as the largest nilpotent entry of the naive normal
    /// subgroup list.
    pub fn fitting(g: &GroupTable) -> ElementSet {
        normal_subgroups(g)
            .into_iter()
            .filter(|n| is_nilpotent(g, n))
            .max_by_key(|n| n.len())
            .expect("trivial subgroup is always there")
    }
}

fn catalog() -> &'static Vec<GroupTable> {
    static CATALOG: OnceLock<Vec<GroupTable>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let s3 = make_symmetric(3).unwrap();
        let c2 = make_cyclic(2).unwrap();
        vec![
            make_cyclic(1).unwrap(),
            make_cyclic(12).unwrap(),
            make_symmetric(3).unwrap(),
            make_symmetric(4).unwrap(),
            make_alternating(4).unwrap(),
            make_dihedral(4).unwrap(),
            make_dihedral(5).unwrap(),
            make_dihedral(6).unwrap(),
            make_dicyclic(2).unwrap(),
            make_dicyclic(3).unwrap(),
            make_elementary_abelian(2, 3).unwrap(),
            make_heisenberg(3).unwrap(),
            direct_product(&s3, &c2, DEFAULT_MAX_ORDER).unwrap(),
        ]
    })
}

/// Strategy: a catalog index and a handful of element picks (reduced mod the
/// group order at use sites).
fn group_and_elements() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..catalog().len(), proptest::collection::vec(0usize..4096, 1..5))
}

fn pick_set(g: &GroupTable, picks: &[usize]) -> ElementSet {
    let mut set = ElementSet::empty(g.order());
    for &p in picks {
        set.insert(ElementId::new(p % g.order()));
    }
    set
}

#[test]
fn classes_match_naive_on_catalog() {
    for g in catalog() {
        let fast = conjugacy_classes(g);
        let slow = naive::classes(g);
        assert_eq!(fast.classes(), &slow[..], "class mismatch in {}", g.name());
    }
}

#[test]
fn center_matches_naive_on_catalog() {
    for g in catalog() {
        assert_eq!(center(g).as_set(), &naive::center(g), "center mismatch in {}", g.name());
    }
}

#[test]
fn normal_subgroups_match_naive_on_catalog() {
    for g in catalog() {
        let classes = conjugacy_classes(g);
        if classes.len() > 16 {
            continue;
        }
        let fast: Vec<ElementSet> = enumerate_normal_subgroups(g, &classes, 20)
            .unwrap()
            .into_iter()
            .map(Subgroup::into_set)
            .collect();
        let slow = naive::normal_subgroups(g);
        assert_eq!(fast, slow, "normal subgroup mismatch in {}", g.name());
    }
}

#[test]
fn fitting_matches_naive_on_catalog() {
    for g in catalog() {
        let classes = conjugacy_classes(g);
        if classes.len() > 16 {
            continue;
        }
        let fast = fitting_subgroup(g, &classes);
        assert_eq!(fast.as_set(), &naive::fitting(g), "Fitting mismatch in {}", g.name());
    }
}

#[test]
fn m_subgroup_is_normal_and_contains_center_on_catalog() {
    for g in catalog() {
        let classes = conjugacy_classes(g);
        let m = m_subgroup(g, &classes);
        assert!(is_normal_subgroup(g, &m), "M not normal in {}", g.name());
        assert!(center(g).is_subset_of(&m), "center escapes M in {}", g.name());
    }
}

#[test]
fn class_unions_are_normal_subsets_and_partial_classes_are_not() {
    for g in catalog() {
        let classes = conjugacy_classes(g);
        let full = ElementSet::full(g.order());
        // Union of the two largest classes (or all of them).
        let mut union = ElementSet::empty(g.order());
        for c in classes.classes().iter().rev().take(2) {
            union.union_with(c);
        }
        assert!(is_normal_subset(g, &union, &full));
        // Remove one element of a class with at least two: no longer normal.
        if let Some(big) = classes.classes().iter().find(|c| c.len() >= 2) {
            let mut broken = big.clone();
            let victim = broken.iter().next().unwrap();
            broken.remove(victim);
            assert!(!is_normal_subset(g, &broken, &full), "partial class passed in {}", g.name());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closure_matches_naive((gi, picks) in group_and_elements()) {
        let g = &catalog()[gi];
        let seed = pick_set(g, &picks);
        let fast = subgroup_generated(g, seed.iter());
        let slow = naive::closure(g, &seed);
        prop_assert_eq!(fast.as_set(), &slow);
        prop_assert_eq!(g.order() % fast.order(), 0, "Lagrange violated");
    }

    #[test]
    fn normal_closure_is_normal_and_contains_generated((gi, picks) in group_and_elements()) {
        let g = &catalog()[gi];
        let seed = pick_set(g, &picks);
        let ncl = normal_closure(g, seed.iter());
        prop_assert!(is_normal_subgroup(g, &ncl));
        prop_assert!(subgroup_generated(g, seed.iter()).is_subset_of(&ncl));
        prop_assert_eq!(g.order() % ncl.order(), 0);
    }

    #[test]
    fn centralizer_is_a_subgroup_of_within((gi, picks) in group_and_elements()) {
        let g = &catalog()[gi];
        let set = pick_set(g, &picks);
        let within = subgroup_generated(g, set.iter());
        let c = centralizer(g, &set, &within);
        prop_assert!(c.is_subset_of(&within));
        prop_assert!(naive::is_subgroup(g, &c));
        // The group center centralizes anything, so its overlap with
        // `within` sits inside every centralizer taken within `within`.
        let z = center(g);
        prop_assert!(z.intersection(&within).is_subset_of(&c));
    }

    #[test]
    fn class_and_commutator_sets_match_in_size((gi, picks) in group_and_elements()) {
        let g = &catalog()[gi];
        let h = subgroup_generated(g, pick_set(g, &picks).iter());
        for x in g.elements() {
            prop_assert_eq!(
                h_class(g, x, &h).len(),
                commutator_set(g, x, &h).len(),
                "identity |x^H| = |[x,H]| failed in {}", g.name()
            );
        }
    }

    #[test]
    fn gamma_2_is_the_commutator_subgroup((gi, picks) in group_and_elements()) {
        let g = &catalog()[gi];
        let h = subgroup_generated(g, pick_set(g, &picks).iter());
        let series = lower_central_series(g, &h);
        if series.terms().len() > 1 {
            let direct = commutator_subgroup(g, &h, &h);
            prop_assert_eq!(series.terms()[1].as_set(), direct.as_set());
            prop_assert_eq!(direct.as_set(), &naive::commutator_subgroup(g, &h, &h));
        }
    }

    #[test]
    fn class_equation_holds((gi, _picks) in group_and_elements()) {
        let g = &catalog()[gi];
        let classes = conjugacy_classes(g);
        let mut total = 0usize;
        for (i, class) in classes.classes().iter().enumerate() {
            total += class.len();
            prop_assert_eq!(g.order() % class.len(), 0);
            let rep = classes.representative(i);
            let c = centralizer(
                g,
                &ElementSet::singleton(g.order(), rep),
                &ElementSet::full(g.order()),
            );
            prop_assert_eq!(c.order(), g.order() / class.len());
        }
        prop_assert_eq!(total, g.order());
    }
}

/// Every checker, on every catalog group, with every normal subgroup as the
/// parameter where one is taken: reports are internally consistent and the
/// settled statements never produce a counterexample.
#[test]
fn checkers_are_consistent_and_counterexample_free_on_catalog() {
    for g in catalog() {
        let a = GroupAnalysis::new(g.clone());
        let classes = a.classes();
        let normals = if classes.len() <= 16 {
            enumerate_normal_subgroups(a.group(), classes, 20).unwrap()
        } else {
            vec![Subgroup::trivial(a.group()), Subgroup::full(a.group())]
        };
        let mut reports = Vec::new();
        for k in &normals {
            reports.push(check_lemma_centralizer(&a, k));
            reports.push(check_prop_commutator_central(&a, k));
            reports.push(check_theorem_a(&a, k));
            reports.push(check_corollary_b(&a, k));
        }
        reports.push(check_theorem_c(&a));
        reports.push(check_equivalence(&a));
        reports.push(check_prop_flat(&a));
        let conj1 = check_conjecture_1(&a);
        let conj1p = check_conjecture_1prime(&a);
        assert_eq!(conj1.verdict, conj1p.verdict, "conjectures disagree on {}", g.name());
        reports.push(conj1);
        reports.push(conj1p);
        for report in &reports {
            report.validate().unwrap_or_else(|e| panic!("{e}"));
            if !report.statement.is_conjecture() {
                assert_ne!(
                    report.verdict,
                    Verdict::Counterexample,
                    "settled statement {} failed on {}",
                    report.statement.id(),
                    g.name()
                );
            } else {
                assert_ne!(
                    report.verdict,
                    Verdict::Counterexample,
                    "open-question counterexample on {} — investigate before shipping",
                    g.name()
                );
            }
        }
    }
}
