//! Subgroups and normality.
//!
//! A [`Subgroup`] wraps an [`ElementSet`] that is known to be closed under
//! the group operation; the constructors here (generation, normal closure,
//! centralizers) are the only public ways to make one, so the wrapper can be
//! trusted downstream without re-checking.

use std::ops::Deref;

use crate::group::{ElementId, GroupTable};
use crate::set::ElementSet;

/// A subset of a group's elements verified (or constructed) to be a subgroup.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Subgroup(ElementSet);

impl Subgroup {
    pub fn trivial(g: &GroupTable) -> Self {
        Subgroup(ElementSet::singleton(g.order(), g.identity()))
    }

    pub fn full(g: &GroupTable) -> Self {
        Subgroup(ElementSet::full(g.order()))
    }

    /// Wraps `set` if it really is a subgroup of `g`.
    pub fn from_set(g: &GroupTable, set: ElementSet) -> Option<Self> {
        if is_subgroup(g, &set) {
            Some(Subgroup(set))
        } else {
            None
        }
    }

    /// For callers that have just proved closure themselves.
    pub(crate) fn from_set_unchecked(set: ElementSet) -> Self {
        Subgroup(set)
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn as_set(&self) -> &ElementSet {
        &self.0
    }

    pub fn into_set(self) -> ElementSet {
        self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole_group(&self, g: &GroupTable) -> bool {
        self.order() == g.order()
    }
}

impl Deref for Subgroup {
    type Target = ElementSet;

    fn deref(&self) -> &ElementSet {
        &self.0
    }
}

/// The subgroup generated by `gens`: breadth-first closure of the identity
/// under right multiplication. In a finite group closure under products
/// already yields inverses, so no inverse steps are needed.
pub fn subgroup_generated(
    g: &GroupTable,
    gens: impl IntoIterator<Item = ElementId>,
) -> Subgroup {
    let gens: Vec<ElementId> = gens.into_iter().collect();
    let mut members = ElementSet::singleton(g.order(), g.identity());
    let mut queue: Vec<ElementId> = vec![g.identity()];
    while let Some(h) = queue.pop() {
        for &s in &gens {
            let next = g.mul(h, s);
            if !members.contains(next) {
                members.insert(next);
                queue.push(next);
            }
        }
    }
    Subgroup(members)
}

/// All conjugates of `x` in `g` (its conjugacy class), found by orbit
/// expansion: conjugating by a generating set reaches the whole class.
pub(crate) fn conjugacy_orbit(g: &GroupTable, x: ElementId) -> Vec<ElementId> {
    let conjugators: Vec<ElementId> = match g.generators() {
        Some(gens) if !gens.is_empty() => gens.to_vec(),
        _ => g.elements().collect(),
    };
    let mut seen = ElementSet::singleton(g.order(), x);
    let mut orbit = vec![x];
    let mut frontier = 0;
    while frontier < orbit.len() {
        let y = orbit[frontier];
        frontier += 1;
        for &u in &conjugators {
            let z = g.conj(y, u);
            if !seen.contains(z) {
                seen.insert(z);
                orbit.push(z);
            }
        }
    }
    orbit
}

/// The normal closure of `seeds` in `g`: the smallest normal subgroup
/// containing them, generated by the full conjugacy classes of the seeds.
pub fn normal_closure(g: &GroupTable, seeds: impl IntoIterator<Item = ElementId>) -> Subgroup {
    let mut class_members = ElementSet::empty(g.order());
    for s in seeds {
        if class_members.contains(s) {
            continue;
        }
        for y in conjugacy_orbit(g, s) {
            class_members.insert(y);
        }
    }
    subgroup_generated(g, class_members.iter())
}

/// Elements of `within` that commute with everything in `set`.
pub fn centralizer(g: &GroupTable, set: &ElementSet, within: &ElementSet) -> Subgroup {
    let targets: Vec<ElementId> = set.iter().collect();
    let mut members = ElementSet::empty(g.order());
    for h in within.iter() {
        if targets.iter().all(|&s| g.mul(h, s) == g.mul(s, h)) {
            members.insert(h);
        }
    }
    Subgroup(members)
}

/// The center of the subgroup on `members`: its elements commuting with all
/// of it.
pub fn center_of(g: &GroupTable, members: &ElementSet) -> Subgroup {
    centralizer(g, members, members)
}

/// The center of the whole group.
pub fn center(g: &GroupTable) -> Subgroup {
    let all = ElementSet::full(g.order());
    centralizer(g, &all, &all)
}

/// Whether `set` contains the identity and is closed under products. For a
/// finite subset of a group that is exactly the subgroup property.
pub fn is_subgroup(g: &GroupTable, set: &ElementSet) -> bool {
    if !set.contains(g.identity()) {
        return false;
    }
    let members: Vec<ElementId> = set.iter().collect();
    members
        .iter()
        .all(|&a| members.iter().all(|&b| set.contains(g.mul(a, b))))
}

/// First pair `(u, s)` with `u` in `under`, `s` in `set`, and the conjugate
/// of `s` by `u` outside `set`; `None` when `set` is a normal subset under
/// `under`. Iteration order is fixed, so the witness is deterministic.
pub fn normal_subset_violation(
    g: &GroupTable,
    set: &ElementSet,
    under: &ElementSet,
) -> Option<(ElementId, ElementId)> {
    for u in under.iter() {
        for s in set.iter() {
            if !set.contains(g.conj(s, u)) {
                return Some((u, s));
            }
        }
    }
    None
}

/// Whether every conjugate of `set` by elements of `under` stays in `set`.
pub fn is_normal_subset(g: &GroupTable, set: &ElementSet, under: &ElementSet) -> bool {
    normal_subset_violation(g, set, under).is_none()
}

/// Whether `set` is a subgroup invariant under conjugation by the whole group.
pub fn is_normal_subgroup(g: &GroupTable, set: &ElementSet) -> bool {
    is_subgroup(g, set) && is_normal_subset(g, set, &ElementSet::full(g.order()))
}
