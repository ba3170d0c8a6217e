//! One-stop preccomputation for a group: classes, center, small elements,
//! M(G), Fitting subgroup and its centers, solvability.
//!
//! Statement checkers and report emitters all read from a [`GroupAnalysis`];
//! it is computed eagerly once per group and immutable afterwards, so it can
//! be shared freely across threads.

use crate::classes::{conjugacy_classes, m_subgroup, small_elements, ClassPartition};
use crate::group::{ElementId, GroupTable};
use crate::series::{
    derived_series_and_solvability, lower_central_series, upper_central_series,
};
use crate::set::ElementSet;
use crate::subgroup::{center_of, Subgroup};

pub struct GroupAnalysis {
    group: GroupTable,
    classes: ClassPartition,
    centralizer_orders: Vec<usize>,
    center: Subgroup,
    small: ElementSet,
    small_degenerate: bool,
    m: Subgroup,
    m_class: Option<usize>,
    fitting: Subgroup,
    fitting_center: Subgroup,
    fitting_second_center: Subgroup,
    solvable: bool,
}

impl GroupAnalysis {
    pub fn new(group: GroupTable) -> Self {
        let order = group.order();
        let classes = conjugacy_classes(&group);
        let centralizer_orders: Vec<usize> = (0..order)
            .map(|x| order / classes.class_of(ElementId::new(x)).len())
            .collect();
        let full = ElementSet::full(order);
        let center = center_of(&group, &full);
        let small = small_elements(&classes);
        let small_degenerate = classes.distinct_size_count() < 2;
        let m = m_subgroup(&group, &classes);
        let m_class = lower_central_series(&group, &m).nilpotency_class();
        let fitting = crate::fitting::fitting_subgroup(&group, &classes);
        let fitting_center = center_of(&group, &fitting);
        let fitting_upper = upper_central_series(&group, &fitting);
        let fitting_second_center = fitting_upper.ascending_term(2).clone();
        let solvable = derived_series_and_solvability(&group, &Subgroup::full(&group)).1;
        GroupAnalysis {
            group,
            classes,
            centralizer_orders,
            center,
            small,
            small_degenerate,
            m,
            m_class,
            fitting,
            fitting_center,
            fitting_second_center,
            solvable,
        }
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn classes(&self) -> &ClassPartition {
        &self.classes
    }

    /// Order of the centralizer of `x` in the whole group, read off the
    /// class sizes.
    pub fn centralizer_order(&self, x: ElementId) -> usize {
        self.centralizer_orders[x.index()]
    }

    pub fn center(&self) -> &Subgroup {
        &self.center
    }

    /// Union of the classes with the two smallest distinct sizes.
    pub fn small_elements(&self) -> &ElementSet {
        &self.small
    }

    /// True when only one distinct class size exists (abelian groups), where
    /// "two smallest sizes" degenerates and every element counts as small.
    pub fn small_degenerate(&self) -> bool {
        self.small_degenerate
    }

    /// The distinct class sizes that qualify as small (one or two values).
    pub fn small_sizes(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(2);
        for &s in self.classes.sizes() {
            if !out.contains(&s) {
                out.push(s);
                if out.len() == 2 {
                    break;
                }
            }
        }
        out
    }

    pub fn m_subgroup(&self) -> &Subgroup {
        &self.m
    }

    /// Nilpotency class of M(G), absent when M(G) is not nilpotent.
    pub fn m_class(&self) -> Option<usize> {
        self.m_class
    }

    pub fn fitting(&self) -> &Subgroup {
        &self.fitting
    }

    pub fn fitting_center(&self) -> &Subgroup {
        &self.fitting_center
    }

    /// Second term of the upper central series of the Fitting subgroup.
    pub fn fitting_second_center(&self) -> &Subgroup {
        &self.fitting_second_center
    }

    pub fn is_solvable(&self) -> bool {
        self.solvable
    }
}
