//! Lower central, upper central, and derived series.
//!
//! Each series is stored as the chain of terms up to stabilization: a chain
//! ending in the trivial subgroup (or, ascending, in the whole subgroup)
//! stops there, since one more step provably repeats; a chain that stalls
//! anywhere else stores the first repeated term once, making the
//! stabilization visible in the data.

use crate::classes::commutator_subgroup;
use crate::group::GroupTable;
use crate::subgroup::Subgroup;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeriesKind {
    LowerCentral,
    UpperCentral,
    Derived,
}

/// A stabilized chain of subgroups of a common parent.
#[derive(Clone, Debug)]
pub struct Series {
    kind: SeriesKind,
    terms: Vec<Subgroup>,
}

impl Series {
    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn terms(&self) -> &[Subgroup] {
        &self.terms
    }

    pub fn last(&self) -> &Subgroup {
        self.terms.last().expect("series has at least one term")
    }

    /// For a lower central series: the smallest `c` with the `(c+1)`-th term
    /// trivial, or `None` when the chain stabilizes above the identity.
    pub fn nilpotency_class(&self) -> Option<usize> {
        debug_assert_eq!(self.kind, SeriesKind::LowerCentral);
        if self.last().is_trivial() {
            Some(self.terms.len() - 1)
        } else {
            None
        }
    }

    /// The `i`-th term of an ascending chain, reading past the end as the
    /// stable top (so the second center of an abelian group is the group).
    pub fn ascending_term(&self, i: usize) -> &Subgroup {
        debug_assert_eq!(self.kind, SeriesKind::UpperCentral);
        &self.terms[i.min(self.terms.len() - 1)]
    }
}

/// Descending chain `h`, `[h,h-previous?]` — precisely: first term `h`, each
/// next term the commutator subgroup of the previous term against `h`.
pub fn lower_central_series(g: &GroupTable, h: &Subgroup) -> Series {
    let mut terms = vec![h.clone()];
    loop {
        let last = terms.last().expect("nonempty");
        if last.is_trivial() {
            break;
        }
        let next = commutator_subgroup(g, last, h);
        let stalled = &next == last;
        terms.push(next);
        if stalled {
            break;
        }
    }
    Series { kind: SeriesKind::LowerCentral, terms }
}

/// Ascending chain from the trivial subgroup: each next term collects the
/// members of `h` whose commutator with every member of `h` lands in the
/// previous term. Computed directly, with no quotient construction.
pub fn upper_central_series(g: &GroupTable, h: &Subgroup) -> Series {
    let mut terms = vec![Subgroup::trivial(g)];
    loop {
        let last = terms.last().expect("nonempty");
        if last.as_set() == h.as_set() {
            break;
        }
        let mut members = crate::set::ElementSet::empty(g.order());
        for x in h.iter() {
            if h.iter().all(|u| last.contains(g.comm(x, u))) {
                members.insert(x);
            }
        }
        let next = Subgroup::from_set_unchecked(members);
        let stalled = &next == last;
        terms.push(next);
        if stalled {
            break;
        }
    }
    Series { kind: SeriesKind::UpperCentral, terms }
}

/// Descending chain `h`, `[h,h]`, `[[h,h],[h,h]]`, …; the boolean reports
/// whether it reaches the trivial subgroup (solvability).
pub fn derived_series_and_solvability(g: &GroupTable, h: &Subgroup) -> (Series, bool) {
    let mut terms = vec![h.clone()];
    loop {
        let last = terms.last().expect("nonempty");
        if last.is_trivial() {
            break;
        }
        let next = commutator_subgroup(g, last, last);
        let stalled = &next == last;
        terms.push(next);
        if stalled {
            break;
        }
    }
    let solvable = terms.last().expect("nonempty").is_trivial();
    (Series { kind: SeriesKind::Derived, terms }, solvable)
}

/// Smallest `c` with the `(c+1)`-th lower central term of `h` trivial.
pub fn nilpotency_class(g: &GroupTable, h: &Subgroup) -> Option<usize> {
    lower_central_series(g, h).nilpotency_class()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_alternating, make_cyclic, make_dicyclic, make_dihedral, make_symmetric};
    use crate::subgroup::{center, is_normal_subgroup};

    fn orders(series: &Series) -> Vec<usize> {
        series.terms().iter().map(|t| t.order()).collect()
    }

    #[test]
    fn lower_central_series_examples() {
        let c6 = make_cyclic(6).unwrap();
        assert_eq!(orders(&lower_central_series(&c6, &Subgroup::full(&c6))), vec![6, 1]);

        let d4 = make_dihedral(4).unwrap();
        let series = lower_central_series(&d4, &Subgroup::full(&d4));
        assert_eq!(orders(&series), vec![8, 2, 1]);
        assert_eq!(series.terms()[1].to_indices(), vec![0, 2], "second term is {{1, r2}}");
        assert_eq!(series.nilpotency_class(), Some(2));

        let s3 = make_symmetric(3).unwrap();
        let series = lower_central_series(&s3, &Subgroup::full(&s3));
        assert_eq!(orders(&series), vec![6, 3, 3], "stalls at the rotation subgroup");
        assert_eq!(series.nilpotency_class(), None);

        let trivial = make_cyclic(1).unwrap();
        let series = lower_central_series(&trivial, &Subgroup::full(&trivial));
        assert_eq!(orders(&series), vec![1]);
        assert_eq!(series.nilpotency_class(), Some(0));

        // Terms are normal in the parent group.
        for t in lower_central_series(&d4, &Subgroup::full(&d4)).terms() {
            assert!(is_normal_subgroup(&d4, t));
        }
    }

    #[test]
    fn nilpotency_classes() {
        let d4 = make_dihedral(4).unwrap();
        let q8 = make_dicyclic(2).unwrap();
        assert_eq!(nilpotency_class(&d4, &Subgroup::full(&d4)), Some(2));
        assert_eq!(nilpotency_class(&q8, &Subgroup::full(&q8)), Some(2));
        let s3 = make_symmetric(3).unwrap();
        assert_eq!(nilpotency_class(&s3, &Subgroup::full(&s3)), None);
    }

    #[test]
    fn derived_series_examples() {
        let c6 = make_cyclic(6).unwrap();
        let (_, solvable) = derived_series_and_solvability(&c6, &Subgroup::full(&c6));
        assert!(solvable);

        let s4 = make_symmetric(4).unwrap();
        let (series, solvable) = derived_series_and_solvability(&s4, &Subgroup::full(&s4));
        assert!(solvable);
        assert_eq!(orders(&series), vec![24, 12, 4, 1]);

        let a5 = make_alternating(5).unwrap();
        let (series, solvable) = derived_series_and_solvability(&a5, &Subgroup::full(&a5));
        assert!(!solvable);
        assert_eq!(orders(&series), vec![60, 60], "perfect group stalls at itself");
    }

    #[test]
    fn upper_central_series_examples() {
        let q8 = make_dicyclic(2).unwrap();
        let series = upper_central_series(&q8, &Subgroup::full(&q8));
        assert_eq!(orders(&series), vec![1, 2, 8]);
        assert_eq!(series.ascending_term(1).as_set(), center(&q8).as_set());
        assert_eq!(series.ascending_term(2).order(), 8, "second center is all of Q8");
        // Reading past the end stays at the top.
        assert_eq!(series.ascending_term(7).order(), 8);

        let s3 = make_symmetric(3).unwrap();
        let series = upper_central_series(&s3, &Subgroup::full(&s3));
        assert_eq!(orders(&series), vec![1, 1], "centerless series stalls immediately");

        // The first ascending term is always the center.
        for g in [make_dihedral(6).unwrap(), make_symmetric(4).unwrap(), make_cyclic(8).unwrap()] {
            let series = upper_central_series(&g, &Subgroup::full(&g));
            assert_eq!(series.terms()[1].as_set(), center(&g).as_set());
        }
    }

    #[test]
    fn lower_and_upper_detection_agree() {
        for g in [
            make_dihedral(4).unwrap(),
            make_dicyclic(2).unwrap(),
            make_symmetric(3).unwrap(),
            make_symmetric(4).unwrap(),
            make_cyclic(12).unwrap(),
            make_cyclic(1).unwrap(),
        ] {
            let full = Subgroup::full(&g);
            let lower = lower_central_series(&g, &full);
            let upper = upper_central_series(&g, &full);
            let nilpotent = lower.nilpotency_class().is_some();
            assert_eq!(nilpotent, upper.last().order() == g.order());
            if nilpotent {
                assert_eq!(lower.terms().len(), upper.terms().len());
            }
        }
    }
}
