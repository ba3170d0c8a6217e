//! Finite groups as validated multiplication tables.
//!
//! A [`GroupTable`] stores the full Cayley table of a finite group with
//! elements renumbered so the identity is element `0`. Tables can be built
//! from an explicit square of products ([`GroupTable::from_cayley`]) or as
//! the closure of a set of permutations ([`GroupTable::from_generators`]);
//! both paths run the same validation pipeline, so every `GroupTable` in
//! circulation really is a group.

use std::collections::HashMap;
use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use thiserror::Error;

/// Largest group order the table representation supports (element ids are `u16`).
pub const MAX_REPRESENTABLE_ORDER: usize = u16::MAX as usize + 1;

/// Default ceiling for constructions whose size is discovered as they run
/// (generator closures, direct products, parsed group expressions).
pub const DEFAULT_MAX_ORDER: usize = 2000;

/// Above this order the associativity check samples triples instead of
/// enumerating all `n^3` of them.
const FULL_ASSOC_LIMIT: usize = 256;

/// Index of an element within its group's table.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(u16);

impl ElementId {
    /// Wraps an index; panics if it does not fit the `u16` element range.
    pub fn new(index: usize) -> Self {
        debug_assert!(index < MAX_REPRESENTABLE_ORDER, "element index {index} too large");
        ElementId(index as u16)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// Errors from group construction and validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("table is not square: row {row} has {found} entries, expected {expected}")]
    NotSquare { row: usize, found: usize, expected: usize },
    #[error("entry {value} at row {row}, column {col} is outside 0..{order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("not a Latin square: {axis} {index} repeats value {value}")]
    NotLatinSquare { axis: &'static str, index: usize, value: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    MissingInverse { element: usize },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("construction exceeded the order cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("permutation degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("images do not form a permutation: value {value} out of range or repeated")]
    NotAPermutation { value: usize },
    #[error("{0}")]
    ParameterOutOfRange(String),
}

/// A permutation of `0..degree`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    /// Validates that `images` is a bijection on `0..images.len()`.
    pub fn new(images: Vec<u16>) -> Result<Self, BuildError> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &img in &images {
            let i = img as usize;
            if i >= degree || seen[i] {
                return Err(BuildError::NotAPermutation { value: i });
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation of `0..degree` from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u16]]) -> Result<Self, BuildError> {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w] as usize;
                let to = cycle[(w + 1) % cycle.len()];
                if from >= degree || to as usize >= degree {
                    return Err(BuildError::NotAPermutation { value: from.max(to as usize) });
                }
                images[from] = to;
            }
        }
        Perm::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: u16) -> u16 {
        self.images[point as usize]
    }

    /// `self * other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.images.len()];
        for (from, &to) in self.images.iter().enumerate() {
            images[to as usize] = from as u16;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img as usize)
    }
}

/// Cycle notation on the moved points; the identity prints as `()`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let degree = self.degree();
        let mut seen = vec![false; degree];
        let mut wrote_any = false;
        for start in 0..degree {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            write!(f, "(")?;
            let mut point = start;
            let mut first = true;
            while !seen[point] {
                seen[point] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{point}")?;
                first = false;
                point = self.images[point] as usize;
            }
            write!(f, ")")?;
            wrote_any = true;
        }
        if !wrote_any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{self}]")
    }
}

/// A finite group given by its complete multiplication table.
///
/// The identity is always element `0`. Products, inverses, conjugates and
/// commutators are all table lookups.
#[derive(Clone)]
pub struct GroupTable {
    name: String,
    order: usize,
    /// Row-major: `mul[a * order + b]` is the product `a * b`.
    mul: Vec<u16>,
    inv: Vec<u16>,
    labels: Option<Vec<String>>,
    /// Elements known to generate the group, when the construction provides
    /// them; conjugacy-orbit computations use these to cut the conjugator set.
    gens: Option<Vec<ElementId>>,
}

impl GroupTable {
    /// Validates `rows` as the multiplication table of a group and renumbers
    /// elements so the identity is `0`.
    ///
    /// Checks, in order: squareness and entry range, the Latin-square
    /// property, existence of a two-sided identity, two-sided inverses, and
    /// associativity. Associativity is checked over all triples up to order
    /// 256 and over a fixed-seed sample of `10 * order^2` triples above that.
    pub fn from_cayley(name: impl Into<String>, rows: Vec<Vec<usize>>) -> Result<Self, BuildError> {
        Self::from_cayley_with(name, rows, None)
    }

    /// [`GroupTable::from_cayley`] with element labels, which are renumbered
    /// along with the elements.
    pub fn from_cayley_with(
        name: impl Into<String>,
        rows: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, BuildError> {
        let order = rows.len();
        if order == 0 {
            return Err(BuildError::ParameterOutOfRange("empty table".into()));
        }
        if order > MAX_REPRESENTABLE_ORDER {
            return Err(BuildError::OrderCapExceeded { cap: MAX_REPRESENTABLE_ORDER });
        }
        if let Some(ref l) = labels {
            if l.len() != order {
                return Err(BuildError::ParameterOutOfRange(format!(
                    "{} labels for {} elements",
                    l.len(),
                    order
                )));
            }
        }
        let mut mul = Vec::with_capacity(order * order);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(BuildError::NotSquare { row: r, found: row.len(), expected: order });
            }
            for (c, &value) in row.iter().enumerate() {
                if value >= order {
                    return Err(BuildError::EntryOutOfRange { row: r, col: c, value, order });
                }
                mul.push(value as u16);
            }
        }

        check_latin(&mul, order)?;

        // Locate the two-sided identity and renumber it to 0.
        let identity = (0..order)
            .find(|&e| {
                (0..order).all(|x| {
                    mul[e * order + x] == x as u16 && mul[x * order + e] == x as u16
                })
            })
            .ok_or(BuildError::NoIdentity)?;
        let (mul, labels) = if identity == 0 {
            (mul, labels)
        } else {
            let swap = |x: u16| -> u16 {
                if x as usize == identity {
                    0
                } else if x == 0 {
                    identity as u16
                } else {
                    x
                }
            };
            let mut renumbered = vec![0u16; order * order];
            for a in 0..order {
                for b in 0..order {
                    let sa = swap(a as u16) as usize;
                    let sb = swap(b as u16) as usize;
                    renumbered[a * order + b] = swap(mul[sa * order + sb]);
                }
            }
            let labels = labels.map(|mut l| {
                l.swap(0, identity);
                l
            });
            (renumbered, labels)
        };

        let mut inv = vec![0u16; order];
        for x in 0..order {
            let y = (0..order)
                .find(|&y| mul[x * order + y] == 0)
                .expect("Latin square rows contain every value");
            if mul[y * order + x] != 0 {
                // Report against the caller's numbering.
                let original = if x == 0 { identity } else if x == identity { 0 } else { x };
                return Err(BuildError::MissingInverse { element: original });
            }
            inv[x] = y as u16;
        }

        check_associativity(&mul, order)?;

        Ok(GroupTable {
            name: name.into(),
            order,
            mul,
            inv,
            labels,
            gens: None,
        })
    }

    /// Closes a set of permutations under composition and builds the
    /// multiplication table of the generated group.
    ///
    /// The identity gets id 0 and each generator is recorded. An empty
    /// generator list yields the trivial group. Fails with
    /// [`BuildError::OrderCapExceeded`] if the closure grows past `max_order`.
    pub fn from_generators(
        name: impl Into<String>,
        generators: &[Perm],
        max_order: usize,
    ) -> Result<Self, BuildError> {
        let cap = max_order.min(MAX_REPRESENTABLE_ORDER);
        if generators.is_empty() {
            let mut g = GroupTable::from_cayley(name, vec![vec![0]])?;
            g.gens = Some(Vec::new());
            return Ok(g);
        }
        let degree = generators[0].degree();
        for g in generators {
            if g.degree() != degree {
                return Err(BuildError::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }

        // Breadth-first closure under right multiplication by the generators.
        let mut elements: Vec<Perm> = vec![Perm::identity(degree)];
        let mut index: HashMap<Perm, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut frontier = 0;
        while frontier < elements.len() {
            let current = elements[frontier].clone();
            frontier += 1;
            for g in generators {
                let next = current.compose(g);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(BuildError::OrderCapExceeded { cap });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
        }

        let order = elements.len();
        let mut mul = vec![0u16; order * order];
        for a in 0..order {
            for b in 0..order {
                let product = elements[a].compose(&elements[b]);
                mul[a * order + b] = index[&product] as u16;
            }
        }
        let labels: Vec<String> = elements.iter().map(|p| p.to_string()).collect();
        let gens: Vec<ElementId> = generators.iter().map(|g| ElementId::new(index[g])).collect();

        let rows: Vec<Vec<usize>> = (0..order)
            .map(|a| (0..order).map(|b| mul[a * order + b] as usize).collect())
            .collect();
        let mut table = GroupTable::from_cayley_with(name, rows, Some(labels))?;
        table.gens = Some(gens);
        Ok(table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> ElementId {
        ElementId(0)
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.order as u16).map(ElementId)
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.mul[a.index() * self.order + b.index()])
    }

    #[inline]
    pub fn inv(&self, a: ElementId) -> ElementId {
        ElementId(self.inv[a.index()])
    }

    /// The conjugate `u^-1 * x * u`.
    #[inline]
    pub fn conj(&self, x: ElementId, u: ElementId) -> ElementId {
        self.mul(self.mul(self.inv(u), x), u)
    }

    /// The commutator `x^-1 * y^-1 * x * y`.
    #[inline]
    pub fn comm(&self, x: ElementId, y: ElementId) -> ElementId {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    /// Smallest `k >= 1` with `x^k` the identity.
    pub fn element_order(&self, x: ElementId) -> usize {
        let mut power = x;
        let mut k = 1;
        while power != self.identity() {
            power = self.mul(power, x);
            k += 1;
        }
        k
    }

    /// Display label for an element; `g{index}` when no labels were supplied.
    pub fn label(&self, x: ElementId) -> String {
        match &self.labels {
            Some(labels) => labels[x.index()].clone(),
            None => format!("g{}", x.index()),
        }
    }

    /// The multiplication table as nested rows, suitable for serialization
    /// and for rebuilding the same group via [`GroupTable::from_cayley`].
    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul[a * self.order + b] as usize).collect())
            .collect()
    }

    /// Recorded generating set, if the construction supplied one.
    pub fn generators(&self) -> Option<&[ElementId]> {
        self.gens.as_deref()
    }

    pub fn set_generators(&mut self, gens: Vec<ElementId>) {
        self.gens = Some(gens);
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

fn check_latin(mul: &[u16], order: usize) -> Result<(), BuildError> {
    let mut seen = vec![usize::MAX; order];
    for r in 0..order {
        for c in 0..order {
            let v = mul[r * order + c] as usize;
            if seen[v] == r {
                return Err(BuildError::NotLatinSquare { axis: "row", index: r, value: v });
            }
            seen[v] = r;
        }
    }
    let mut seen = vec![usize::MAX; order];
    for c in 0..order {
        for r in 0..order {
            let v = mul[r * order + c] as usize;
            if seen[v] == c {
                return Err(BuildError::NotLatinSquare { axis: "column", index: c, value: v });
            }
            seen[v] = c;
        }
    }
    Ok(())
}

fn check_associativity(mul: &[u16], order: usize) -> Result<(), BuildError> {
    let at = |a: usize, b: usize| mul[a * order + b] as usize;
    let check = |a: usize, b: usize, c: usize| -> Result<(), BuildError> {
        if at(at(a, b), c) != at(a, at(b, c)) {
            Err(BuildError::NotAssociative { a, b, c })
        } else {
            Ok(())
        }
    };
    if order <= FULL_ASSOC_LIMIT {
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    check(a, b, c)?;
                }
            }
        }
    } else {
        // Deterministic sample; the same table always gets the same triples.
        let mut rng = StdRng::seed_from_u64(0x5eed_cafe);
        for _ in 0..10 * order * order {
            let a = rng.gen_range(0..order);
            let b = rng.gen_range(0..order);
            let c = rng.gen_range(0..order);
            check(a, b, c)?;
        }
    }
    Ok(())
}
