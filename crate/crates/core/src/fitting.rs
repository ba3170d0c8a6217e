//! The Fitting subgroup (largest nilpotent normal subgroup) and a
//! brute-force normal-subgroup enumeration used as its independent oracle.

use std::collections::{HashMap, HashSet};

use thiserror::Error;

use crate::classes::ClassPartition;
use crate::group::GroupTable;
use crate::series::nilpotency_class;
use crate::set::ElementSet;
use crate::subgroup::{subgroup_generated, Subgroup};

/// Normal-subgroup enumeration refuses to run on groups with more conjugacy
/// classes than the configured cap; the join-closure is only known to be
/// cheap when the class count is modest.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("group has {class_count} conjugacy classes, above the enumeration cap of {cap}")]
pub struct OracleCapExceeded {
    pub class_count: usize,
    pub cap: usize,
}

/// Default class-count cap for normal-subgroup enumeration.
pub const DEFAULT_ORACLE_CAP: usize = 20;

/// The Fitting subgroup of `g`: generated by the elements whose normal
/// closure is nilpotent. A nilpotent group is its own Fitting subgroup, so
/// that case short-circuits; otherwise normal closures are computed once per
/// conjugacy class (conjugate elements share theirs) and memoized.
pub fn fitting_subgroup(g: &GroupTable, classes: &ClassPartition) -> Subgroup {
    let full = Subgroup::full(g);
    if nilpotency_class(g, &full).is_some() {
        return full;
    }
    let mut nilpotent_memo: HashMap<ElementSet, bool> = HashMap::new();
    let mut generating = ElementSet::empty(g.order());
    for class in classes.classes() {
        let closure = subgroup_generated(g, class.iter());
        let nilpotent = *nilpotent_memo
            .entry(closure.as_set().clone())
            .or_insert_with(|| nilpotency_class(g, &closure).is_some());
        if nilpotent {
            generating.union_with(class);
        }
    }
    subgroup_generated(g, generating.iter())
}

/// All normal subgroups of `g`, as the join-closure of the per-class normal
/// closures together with the trivial subgroup, sorted by (order, members).
///
/// Every normal subgroup is a union of classes and hence the join of the
/// closures of the classes it contains, so the join-closure reaches all of
/// them while visiting only actual normal subgroups.
pub fn enumerate_normal_subgroups(
    g: &GroupTable,
    classes: &ClassPartition,
    cap: usize,
) -> Result<Vec<Subgroup>, OracleCapExceeded> {
    if classes.len() > cap {
        return Err(OracleCapExceeded { class_count: classes.len(), cap });
    }
    let mut seeds: Vec<Subgroup> =
        classes.classes().iter().map(|c| subgroup_generated(g, c.iter())).collect();
    seeds.sort();
    seeds.dedup();

    let trivial = Subgroup::trivial(g);
    let mut found: HashSet<Subgroup> = HashSet::new();
    found.insert(trivial.clone());
    let mut queue: Vec<Subgroup> = vec![trivial];
    while let Some(current) = queue.pop() {
        for seed in &seeds {
            if seed.is_subset_of(&current) {
                continue;
            }
            let join = subgroup_generated(g, current.iter().chain(seed.iter()));
            if !found.contains(&join) {
                found.insert(join.clone());
                queue.push(join);
            }
        }
    }
    let mut list: Vec<Subgroup> = found.into_iter().collect();
    list.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.as_set().cmp(b.as_set())));
    Ok(list)
}

/// Independent Fitting computation: enumerate normal subgroups, keep the
/// nilpotent ones, return the largest. Panics if the nilpotent normal
/// subgroups fail to have a unique maximum — every one must lie inside the
/// returned subgroup (their pairwise products then lie inside it too) — since
/// that would contradict how the largest nilpotent normal subgroup behaves.
pub fn fitting_oracle(
    g: &GroupTable,
    classes: &ClassPartition,
    cap: usize,
) -> Result<Subgroup, OracleCapExceeded> {
    let normals = enumerate_normal_subgroups(g, classes, cap)?;
    let nilpotents: Vec<&Subgroup> =
        normals.iter().filter(|n| nilpotency_class(g, n).is_some()).collect();
    let best: &Subgroup = nilpotents
        .iter()
        .copied()
        .max_by_key(|n| n.order())
        .expect("the trivial subgroup is always nilpotent");
    for n in &nilpotents {
        assert!(
            n.is_subset_of(best),
            "nilpotent normal subgroup of order {} escapes the maximal one of order {} in {}",
            n.order(),
            best.order(),
            g.name()
        );
    }
    Ok(best.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::conjugacy_classes;
    use crate::families::{
        direct_product, make_alternating, make_cyclic, make_dicyclic, make_dihedral,
        make_symmetric,
    };
    use crate::group::DEFAULT_MAX_ORDER;
    use crate::subgroup::{center, is_normal_subgroup};

    fn fitting_of(g: &GroupTable) -> Subgroup {
        fitting_subgroup(g, &conjugacy_classes(g))
    }

    #[test]
    fn nilpotent_groups_are_their_own_fitting_subgroup() {
        for g in [make_dihedral(4).unwrap(), make_dicyclic(2).unwrap(), make_cyclic(12).unwrap()] {
            assert!(fitting_of(&g).is_whole_group(&g));
        }
    }

    #[test]
    fn fitting_subgroups_of_symmetric_groups() {
        let s4 = make_symmetric(4).unwrap();
        let f = fitting_of(&s4);
        assert_eq!(f.order(), 4);
        // V4: identity plus the three order-2 elements in the size-3 class.
        for x in f.iter().filter(|&x| x != s4.identity()) {
            assert_eq!(s4.element_order(x), 2);
        }
        let s3 = make_symmetric(3).unwrap();
        assert_eq!(fitting_of(&s3).order(), 3);
        let a4 = make_alternating(4).unwrap();
        assert_eq!(fitting_of(&a4).order(), 4);
        let a5 = make_alternating(5).unwrap();
        assert!(fitting_of(&a5).is_trivial(), "a simple nonabelian group has trivial Fitting");
    }

    #[test]
    fn fitting_subgroups_of_products() {
        let s3 = make_symmetric(3).unwrap();
        let prod = direct_product(&s3, &s3, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(fitting_of(&prod).order(), 9);
        let d4c3 =
            direct_product(&make_dihedral(4).unwrap(), &make_cyclic(3).unwrap(), DEFAULT_MAX_ORDER)
                .unwrap();
        assert!(fitting_of(&d4c3).is_whole_group(&d4c3), "nilpotent product");
    }

    #[test]
    fn fitting_contains_center_and_is_nilpotent_normal() {
        for g in [
            make_symmetric(4).unwrap(),
            make_dihedral(6).unwrap(),
            make_alternating(5).unwrap(),
        ] {
            let f = fitting_of(&g);
            assert!(is_normal_subgroup(&g, &f));
            assert!(nilpotency_class(&g, &f).is_some());
            assert!(center(&g).is_subset_of(&f));
        }
    }

    #[test]
    fn normal_subgroup_enumeration() {
        let trivial = make_cyclic(1).unwrap();
        let list =
            enumerate_normal_subgroups(&trivial, &conjugacy_classes(&trivial), 20).unwrap();
        assert_eq!(list.len(), 1);

        let s4 = make_symmetric(4).unwrap();
        let list = enumerate_normal_subgroups(&s4, &conjugacy_classes(&s4), 20).unwrap();
        let orders: Vec<usize> = list.iter().map(|n| n.order()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        for n in &list {
            assert!(is_normal_subgroup(&s4, n));
        }

        let q8 = make_dicyclic(2).unwrap();
        let list = enumerate_normal_subgroups(&q8, &conjugacy_classes(&q8), 20).unwrap();
        let orders: Vec<usize> = list.iter().map(|n| n.order()).collect();
        assert_eq!(orders, vec![1, 2, 4, 4, 4, 8]);
    }

    #[test]
    fn enumeration_respects_class_cap() {
        let s4 = make_symmetric(4).unwrap();
        let err = enumerate_normal_subgroups(&s4, &conjugacy_classes(&s4), 3).unwrap_err();
        assert_eq!(err, OracleCapExceeded { class_count: 5, cap: 3 });
    }

    #[test]
    fn oracle_agrees_with_primary_fitting() {
        let groups = vec![
            make_cyclic(1).unwrap(),
            make_symmetric(3).unwrap(),
            make_symmetric(4).unwrap(),
            make_alternating(4).unwrap(),
            make_dihedral(4).unwrap(),
            make_dicyclic(2).unwrap(),
            direct_product(
                &make_symmetric(3).unwrap(),
                &make_symmetric(3).unwrap(),
                DEFAULT_MAX_ORDER,
            )
            .unwrap(),
        ];
        for g in groups {
            let classes = conjugacy_classes(&g);
            let primary = fitting_subgroup(&g, &classes);
            let oracle = fitting_oracle(&g, &classes, 20).unwrap();
            assert_eq!(primary.as_set(), oracle.as_set(), "Fitting mismatch in {}", g.name());
        }
    }
}
