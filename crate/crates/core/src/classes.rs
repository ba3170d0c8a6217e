//! Conjugacy classes, commutator sets, and the subgroup generated by the
//! smallest classes.
//!
//! The "small" elements of a group are those lying in conjugacy classes of
//! the two smallest distinct sizes present; the subgroup they generate is
//! always normal since the generating set is a union of classes.

use crate::group::{ElementId, GroupTable};
use crate::set::ElementSet;
use crate::subgroup::{conjugacy_orbit, subgroup_generated, Subgroup};

/// The partition of a group into conjugacy classes, ordered by
/// (size, smallest member).
#[derive(Clone, Debug)]
pub struct ClassPartition {
    classes: Vec<ElementSet>,
    reps: Vec<ElementId>,
    sizes: Vec<usize>,
    class_index: Vec<usize>,
}

impl ClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class(&self, i: usize) -> &ElementSet {
        &self.classes[i]
    }

    pub fn classes(&self) -> &[ElementSet] {
        &self.classes
    }

    /// Smallest member of class `i`.
    pub fn representative(&self, i: usize) -> ElementId {
        self.reps[i]
    }

    pub fn size(&self, i: usize) -> usize {
        self.sizes[i]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Index of the class containing `x`.
    pub fn class_index_of(&self, x: ElementId) -> usize {
        self.class_index[x.index()]
    }

    pub fn class_of(&self, x: ElementId) -> &ElementSet {
        &self.classes[self.class_index_of(x)]
    }

    /// Number of distinct class sizes present.
    pub fn distinct_size_count(&self) -> usize {
        // Sizes are sorted ascending, so count steps.
        1 + self.sizes.windows(2).filter(|w| w[0] != w[1]).count()
    }
}

/// Computes the conjugacy classes of `g` by orbit expansion.
pub fn conjugacy_classes(g: &GroupTable) -> ClassPartition {
    let order = g.order();
    let mut assigned = ElementSet::empty(order);
    let mut classes: Vec<ElementSet> = Vec::new();
    for x in g.elements() {
        if assigned.contains(x) {
            continue;
        }
        let mut class = ElementSet::empty(order);
        for y in conjugacy_orbit(g, x) {
            class.insert(y);
            assigned.insert(y);
        }
        classes.push(class);
    }
    classes.sort_by_key(|c| (c.len(), c.iter().next().expect("class is nonempty")));
    let reps: Vec<ElementId> =
        classes.iter().map(|c| c.iter().next().expect("class is nonempty")).collect();
    let sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
    let mut class_index = vec![usize::MAX; order];
    for (i, class) in classes.iter().enumerate() {
        for y in class.iter() {
            class_index[y.index()] = i;
        }
    }
    ClassPartition { classes, reps, sizes, class_index }
}

/// The H-class of `x`: all conjugates of `x` by elements of `h`.
pub fn h_class(g: &GroupTable, x: ElementId, h: &ElementSet) -> ElementSet {
    let mut out = ElementSet::empty(g.order());
    for u in h.iter() {
        out.insert(g.conj(x, u));
    }
    out
}

/// The commutator set of `x` against `h`: all products `x^-1 h^-1 x h` for
/// `h` in the set. Contains the identity whenever `h` does.
pub fn commutator_set(g: &GroupTable, x: ElementId, h: &ElementSet) -> ElementSet {
    let mut out = ElementSet::empty(g.order());
    for u in h.iter() {
        out.insert(g.comm(x, u));
    }
    out
}

/// The mirrored commutator set: all `a^-1 x^-1 a x` for `a` in the set.
pub fn left_commutator_set(g: &GroupTable, a: &ElementSet, x: ElementId) -> ElementSet {
    let mut out = ElementSet::empty(g.order());
    for u in a.iter() {
        out.insert(g.comm(u, x));
    }
    out
}

/// The subgroup generated by all commutators between members of `a` and
/// members of `b`.
pub fn commutator_subgroup(g: &GroupTable, a: &ElementSet, b: &ElementSet) -> Subgroup {
    let mut comms = ElementSet::empty(g.order());
    for x in a.iter() {
        for y in b.iter() {
            comms.insert(g.comm(x, y));
        }
    }
    subgroup_generated(g, comms.iter())
}

/// Union of all classes whose size is one of the two smallest distinct class
/// sizes. When only one distinct size exists (abelian groups) every class
/// qualifies, so the result is the whole group; report consumers flag that
/// case via [`ClassPartition::distinct_size_count`].
pub fn small_elements(classes: &ClassPartition) -> ElementSet {
    let sizes = classes.sizes();
    let smallest = sizes[0];
    let second = sizes.iter().copied().find(|&s| s != smallest);
    let mut out = ElementSet::empty(classes.class(0).parent_order());
    for (i, &size) in sizes.iter().enumerate() {
        if size == smallest || Some(size) == second {
            out.union_with(classes.class(i));
        }
    }
    out
}

/// The subgroup generated by the small elements; normal in `g` because its
/// generating set is a union of conjugacy classes.
pub fn m_subgroup(g: &GroupTable, classes: &ClassPartition) -> Subgroup {
    subgroup_generated(g, small_elements(classes).iter())
}
