//! Standard group families with canonical names.
//!
//! Conventions: `make_dihedral(n)` is the symmetry group of the n-gon and has
//! order `2n` (so `D4` is the order-8 group), `make_dicyclic(n)` has order
//! `4n` (so `Dic2` is the quaternion group `Q8`), elementary abelian groups
//! are named by order (`E_8` for C2×C2×C2), and `make_heisenberg(p)` is the
//! extraspecial group of order `p^3` and exponent `p` built from upper
//! unitriangular 3×3 matrices mod `p`. Every constructor routes through the
//! full table validation in [`GroupTable::from_cayley_with`].

use crate::group::{BuildError, ElementId, GroupTable, Perm, DEFAULT_MAX_ORDER};

/// Cyclic group of order `n`, named `C{n}`.
pub fn make_cyclic(n: usize) -> Result<GroupTable, BuildError> {
    if n == 0 {
        return Err(BuildError::ParameterOutOfRange("cyclic order must be at least 1".into()));
    }
    let rows = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g{i}"),
        })
        .collect();
    let mut g = GroupTable::from_cayley_with(format!("C{n}"), rows, Some(labels))?;
    if n > 1 {
        g.set_generators(vec![ElementId::new(1)]);
    } else {
        g.set_generators(vec![]);
    }
    Ok(g)
}

/// Dihedral group of the n-gon, order `2n`, named `D{n}`. Elements are
/// `r^i s^j` encoded as `i + j*n`.
pub fn make_dihedral(n: usize) -> Result<GroupTable, BuildError> {
    if n < 1 {
        return Err(BuildError::ParameterOutOfRange("dihedral parameter must be at least 1".into()));
    }
    let order = 2 * n;
    let encode = |i: usize, j: usize| i + j * n;
    let mut rows = vec![vec![0usize; order]; order];
    for i in 0..n {
        for j in 0..2 {
            for k in 0..n {
                for l in 0..2 {
                    // (r^i s^j)(r^k s^l): s r^k = r^{-k} s.
                    let value = if j == 0 {
                        encode((i + k) % n, l)
                    } else {
                        encode((i + n - k % n) % n, (j + l) % 2)
                    };
                    rows[encode(i, j)][encode(k, l)] = value;
                }
            }
        }
    }
    let labels = (0..order)
        .map(|e| {
            let (i, j) = (e % n, e / n);
            match (i, j) {
                (0, 0) => "1".to_string(),
                (1, 0) => "r".to_string(),
                (i, 0) => format!("r{i}"),
                (0, 1) => "s".to_string(),
                (1, 1) => "rs".to_string(),
                (i, 1) => format!("r{i}s"),
                _ => unreachable!(),
            }
        })
        .collect();
    let mut g = GroupTable::from_cayley_with(format!("D{n}"), rows, Some(labels))?;
    g.set_generators(if n > 1 {
        vec![ElementId::new(1), ElementId::new(n)]
    } else {
        vec![ElementId::new(n)]
    });
    Ok(g)
}

/// Dicyclic group of order `4n`, named `Dic{n}`; `Dic2` is the quaternion
/// group Q8. Presentation: a^(2n) = 1, b^2 = a^n, b^-1 a b = a^-1; elements
/// `a^i b^j` encoded as `i + j*2n`.
pub fn make_dicyclic(n: usize) -> Result<GroupTable, BuildError> {
    if n < 1 {
        return Err(BuildError::ParameterOutOfRange("dicyclic parameter must be at least 1".into()));
    }
    let m = 2 * n;
    let order = 4 * n;
    let encode = |i: usize, j: usize| i + j * m;
    let mut rows = vec![vec![0usize; order]; order];
    for i in 0..m {
        for j in 0..2 {
            for k in 0..m {
                for l in 0..2 {
                    // (a^i b^j)(a^k b^l), with b a^k = a^-k b and b^2 = a^n.
                    let value = if j == 0 {
                        encode((i + k) % m, l)
                    } else if l == 0 {
                        encode((i + m - k) % m, 1)
                    } else {
                        encode((i + m - k + n) % m, 0)
                    };
                    rows[encode(i, j)][encode(k, l)] = value;
                }
            }
        }
    }
    let labels = (0..order)
        .map(|e| {
            let (i, j) = (e % m, e / m);
            match (i, j) {
                (0, 0) => "1".to_string(),
                (1, 0) => "a".to_string(),
                (i, 0) => format!("a{i}"),
                (0, 1) => "b".to_string(),
                (1, 1) => "ab".to_string(),
                (i, 1) => format!("a{i}b"),
                _ => unreachable!(),
            }
        })
        .collect();
    let mut g = GroupTable::from_cayley_with(format!("Dic{n}"), rows, Some(labels))?;
    g.set_generators(vec![ElementId::new(1), ElementId::new(m)]);
    Ok(g)
}

/// Symmetric group on `n` points (n ≤ 7), named `S{n}`, built as the closure
/// of a transposition and an n-cycle.
pub fn make_symmetric(n: usize) -> Result<GroupTable, BuildError> {
    if n < 1 || n > 7 {
        return Err(BuildError::ParameterOutOfRange(format!(
            "symmetric group parameter {n} outside 1..=7"
        )));
    }
    let name = format!("S{n}");
    if n == 1 {
        return GroupTable::from_generators(name, &[Perm::identity(1)], 2);
    }
    let cycle: Vec<u16> = (0..n as u16).collect();
    let gens = vec![
        Perm::from_cycles(n, &[&[0, 1]])?,
        Perm::from_cycles(n, &[&cycle])?,
    ];
    let g = GroupTable::from_generators(name, &gens, 5100)?;
    let expected: usize = (1..=n).product();
    assert_eq!(g.order(), expected, "symmetric group closure has the wrong order");
    Ok(g)
}

/// Alternating group on `n` points (n ≤ 7), named `A{n}`.
pub fn make_alternating(n: usize) -> Result<GroupTable, BuildError> {
    if n < 1 || n > 7 {
        return Err(BuildError::ParameterOutOfRange(format!(
            "alternating group parameter {n} outside 1..=7"
        )));
    }
    let name = format!("A{n}");
    if n <= 2 {
        return GroupTable::from_generators(name, &[Perm::identity(n.max(1))], 2);
    }
    let mut gens = vec![Perm::from_cycles(n, &[&[0, 1, 2]])?];
    if n > 3 {
        // An even long cycle: all n points when n is odd, else points 1..n.
        let cycle: Vec<u16> = if n % 2 == 1 {
            (0..n as u16).collect()
        } else {
            (1..n as u16).collect()
        };
        gens.push(Perm::from_cycles(n, &[&cycle])?);
    }
    let g = GroupTable::from_generators(name, &gens, 2600)?;
    let expected: usize = (1..=n).product::<usize>() / 2;
    assert_eq!(g.order(), expected, "alternating group closure has the wrong order");
    Ok(g)
}

/// Elementary abelian group of order `p^k` (p prime), named by its order,
/// e.g. `E_8` for C2×C2×C2. Elements are vectors over the field of `p`
/// elements in base-`p` encoding.
pub fn make_elementary_abelian(p: usize, k: usize) -> Result<GroupTable, BuildError> {
    if !is_prime(p) {
        return Err(BuildError::ParameterOutOfRange(format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(BuildError::ParameterOutOfRange("exponent must be at least 1".into()));
    }
    let order = p.checked_pow(k as u32).filter(|&o| o <= DEFAULT_MAX_ORDER).ok_or(
        BuildError::OrderCapExceeded { cap: DEFAULT_MAX_ORDER },
    )?;
    let add = |a: usize, b: usize| {
        let (mut a, mut b, mut out, mut place) = (a, b, 0usize, 1usize);
        for _ in 0..k {
            out += (a + b) % p * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    };
    let rows = (0..order).map(|a| (0..order).map(|b| add(a, b)).collect()).collect();
    let labels = (0..order)
        .map(|mut e| {
            let mut digits = Vec::with_capacity(k);
            for _ in 0..k {
                digits.push((e % p).to_string());
                e /= p;
            }
            format!("({})", digits.join(","))
        })
        .collect();
    let mut g = GroupTable::from_cayley_with(format!("E_{order}"), rows, Some(labels))?;
    g.set_generators((0..k).map(|i| ElementId::new(p.pow(i as u32))).collect());
    Ok(g)
}

/// Extraspecial group of order `p^3` and exponent `p` for an odd prime `p`,
/// named `H{p^3}`: triples (a,b,c) mod p with
/// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a·b').
pub fn make_heisenberg(p: usize) -> Result<GroupTable, BuildError> {
    if !is_prime(p) || p == 2 {
        return Err(BuildError::ParameterOutOfRange(format!("{p} is not an odd prime")));
    }
    let order = p * p * p;
    if order > DEFAULT_MAX_ORDER {
        return Err(BuildError::OrderCapExceeded { cap: DEFAULT_MAX_ORDER });
    }
    let encode = |a: usize, b: usize, c: usize| (a * p + b) * p + c;
    let decode = |e: usize| (e / (p * p), e / p % p, e % p);
    let rows = (0..order)
        .map(|x| {
            let (a, b, c) = decode(x);
            (0..order)
                .map(|y| {
                    let (a2, b2, c2) = decode(y);
                    encode((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p)
                })
                .collect()
        })
        .collect();
    let labels = (0..order)
        .map(|e| {
            let (a, b, c) = decode(e);
            format!("({a},{b},{c})")
        })
        .collect();
    let mut g = GroupTable::from_cayley_with(format!("H{order}"), rows, Some(labels))?;
    g.set_generators(vec![ElementId::new(encode(1, 0, 0)), ElementId::new(encode(0, 1, 0))]);
    Ok(g)
}

/// Direct product with elements `(a, b)` encoded as `a * |H| + b` and name
/// `{G}x{H}`. Fails with `OrderCapExceeded` when the product order passes
/// `max_order`.
pub fn direct_product(
    g: &GroupTable,
    h: &GroupTable,
    max_order: usize,
) -> Result<GroupTable, BuildError> {
    let order = g
        .order()
        .checked_mul(h.order())
        .filter(|&o| o <= max_order)
        .ok_or(BuildError::OrderCapExceeded { cap: max_order })?;
    let hn = h.order();
    let encode = |a: ElementId, b: ElementId| a.index() * hn + b.index();
    let rows = (0..order)
        .map(|x| {
            let (a, b) = (ElementId::new(x / hn), ElementId::new(x % hn));
            (0..order)
                .map(|y| {
                    let (c, d) = (ElementId::new(y / hn), ElementId::new(y % hn));
                    encode(g.mul(a, c), h.mul(b, d))
                })
                .collect()
        })
        .collect();
    let labels = (0..order)
        .map(|x| {
            let (a, b) = (ElementId::new(x / hn), ElementId::new(x % hn));
            format!("({},{})", g.label(a), h.label(b))
        })
        .collect();
    let name = format!("{}x{}", g.name(), h.name());
    let mut prod = GroupTable::from_cayley_with(name, rows, Some(labels))?;
    let mut gens = Vec::new();
    if let (Some(ga), Some(gb)) = (g.generators(), h.generators()) {
        for &a in ga {
            gens.push(ElementId::new(encode(a, h.identity())));
        }
        for &b in gb {
            gens.push(ElementId::new(encode(g.identity(), b)));
        }
        prod.set_generators(gens);
    }
    Ok(prod)
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
