//! Finite semigroups as explicit multiplication tables.
//!
//! Elements are canonical indices `0..order`; names are only for display.
//! The product of `a` and `b` is `table[a * order + b]`.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Tables up to this order are checked for associativity exhaustively.
pub const FULL_ASSOCIATIVITY_ORDER: usize = 64;
/// Number of random triples sampled for larger tables.
pub const ASSOCIATIVITY_SAMPLES: usize = 1000;
/// Default cap on group order for generating-set enumeration.
pub const DEFAULT_GENSET_CAP: usize = 120;

#[derive(Clone, PartialEq, Eq)]
pub struct MulTable {
    order: usize,
    table: Vec<usize>,
    names: Vec<String>,
    identity: Option<usize>,
    group: bool,
}

impl fmt::Debug for MulTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MulTable")
            .field("order", &self.order)
            .field("identity", &self.identity)
            .field("group", &self.group)
            .finish()
    }
}

impl MulTable {
    /// Builds a table from rows, validating range and associativity.
    ///
    /// The identity is detected, not supplied: if some element is a two-sided
    /// identity it is recorded.
    pub fn new(rows: Vec<Vec<usize>>, names: Vec<String>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::InvalidTable("empty carrier".into()));
        }
        if names.len() != order {
            return Err(Error::InvalidTable(format!(
                "{} names for {} elements",
                names.len(),
                order
            )));
        }
        let mut table = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidTable(format!("row {i} has length {}", row.len())));
            }
            for &x in row {
                if x >= order {
                    return Err(Error::ElementOutOfRange { element: x, order });
                }
            }
            table.extend_from_slice(row);
        }
        Self::from_flat(order, table, names)
    }

    fn from_flat(order: usize, table: Vec<usize>, names: Vec<String>) -> Result<Self> {
        let mut t = MulTable {
            order,
            table,
            names,
            identity: None,
            group: false,
        };
        t.check_associative()?;
        t.identity = (0..order).find(|&e| (0..order).all(|x| t.mul(e, x) == x && t.mul(x, e) == x));
        t.group = match t.identity {
            Some(e) => (0..order).all(|x| (0..order).any(|y| t.mul(x, y) == e)),
            None => false,
        };
        Ok(t)
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.order;
        let bad = |a: usize, b: usize, c: usize| self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c));
        if n <= FULL_ASSOCIATIVITY_ORDER {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if bad(a, b, c) {
                            return Err(Error::InvalidTable(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..ASSOCIATIVITY_SAMPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if bad(a, b, c) {
                    return Err(Error::InvalidTable(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn is_group(&self) -> bool {
        self.group
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    /// Index of the element whose name is `name`.
    pub fn find(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// True iff `tT = T` for every `t`, i.e. every row of the table is onto.
    pub fn every_principal_right_ideal_full(&self) -> bool {
        (0..self.order).all(|t| {
            let mut seen = vec![false; self.order];
            for &x in self.row(t) {
                seen[x] = true;
            }
            seen.into_iter().all(|b| b)
        })
    }

    fn require_group(&self, what: &str) -> Result<usize> {
        match (self.group, self.identity) {
            (true, Some(e)) => Ok(e),
            _ => Err(Error::NotAGroup(what.to_string())),
        }
    }

    pub fn inverse(&self, x: usize) -> Result<usize> {
        let e = self.require_group("inverse")?;
        self.check_element(x)?;
        Ok((0..self.order).find(|&y| self.mul(x, y) == e).expect("group elements are invertible"))
    }

    /// Least `k >= 1` with `x^k` equal to the identity.
    pub fn element_order(&self, x: usize) -> Result<usize> {
        let e = self.require_group("element_order")?;
        self.check_element(x)?;
        let mut acc = x;
        let mut k = 1;
        while acc != e {
            acc = self.mul(acc, x);
            k += 1;
        }
        Ok(k)
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: x,
                order: self.order,
            })
        }
    }

    /// Elements of order exactly two.
    pub fn involutions(&self) -> Result<Vec<usize>> {
        self.require_group("involutions")?;
        Ok((0..self.order)
            .filter(|&x| self.element_order(x).map(|k| k == 2).unwrap_or(false))
            .collect())
    }
}

/// Cyclic group `Z_n` with identity 0.
pub fn make_cyclic(n: usize) -> Result<MulTable> {
    if n == 0 {
        return Err(Error::InvalidParameter("Z_n needs n >= 1".into()));
    }
    let table = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
    MulTable::from_flat(n, table, (0..n).map(|i| i.to_string()).collect())
}

/// Dihedral group of order `2n`.
///
/// Element `(k, f)` stands for `r^k s^f` and has index `k + n*f`, so the
/// rotations come first and the identity is 0.
pub fn make_dihedral(n: usize) -> Result<MulTable> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("D_n needs n >= 2, got {n}")));
    }
    let order = 2 * n;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (a, f) = (x % n, x / n);
        for y in 0..order {
            let (b, g) = (y % n, y / n);
            // s r^b = r^{-b} s
            let k = if f == 0 { (a + b) % n } else { (a + n - b) % n };
            table.push(k + n * (f ^ g));
        }
    }
    let names = (0..order).map(|x| format!("({},{})", x % n, x / n)).collect();
    MulTable::from_flat(order, table, names)
}

fn permutation_group(perms: Vec<Vec<usize>>) -> Result<MulTable> {
    let order = perms.len();
    let index: std::collections::HashMap<&[usize], usize> =
        perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let mut table = Vec::with_capacity(order * order);
    for p in &perms {
        for q in &perms {
            // apply p, then q
            let pq: Vec<usize> = p.iter().map(|&i| q[i]).collect();
            table.push(index[pq.as_slice()]);
        }
    }
    let names = perms.iter().map(|p| p.iter().join("")).collect();
    MulTable::from_flat(order, table, names)
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

/// Symmetric group on `n <= 5` points, elements in lexicographic order.
pub fn make_symmetric(n: usize) -> Result<MulTable> {
    if n == 0 || n > 5 {
        return Err(Error::InvalidParameter(format!("S_n supported for 1 <= n <= 5, got {n}")));
    }
    permutation_group((0..n).permutations(n).collect())
}

/// Alternating group on `n <= 5` points.
pub fn make_alternating(n: usize) -> Result<MulTable> {
    if n == 0 || n > 5 {
        return Err(Error::InvalidParameter(format!("A_n supported for 1 <= n <= 5, got {n}")));
    }
    permutation_group((0..n).permutations(n).filter(|p| is_even(p)).collect())
}

/// Right-zero semigroup `R_r`: every product is its right factor.
pub fn make_right_zero(r: usize) -> Result<MulTable> {
    if r == 0 {
        return Err(Error::InvalidParameter("R_r needs r >= 1".into()));
    }
    let table = (0..r).flat_map(|_| 0..r).collect();
    MulTable::from_flat(r, table, (1..=r).map(|i| format!("r{i}")).collect())
}

/// Left-zero semigroup: every product is its left factor.
pub fn make_left_zero(l: usize) -> Result<MulTable> {
    if l == 0 {
        return Err(Error::InvalidParameter("left-zero semigroup needs order >= 1".into()));
    }
    let table = (0..l).flat_map(|a| std::iter::repeat_n(a, l)).collect();
    MulTable::from_flat(l, table, (1..=l).map(|i| format!("l{i}")).collect())
}

/// Componentwise product; element `(i, j)` has index `i * |b| + j`.
pub fn direct_product(a: &MulTable, b: &MulTable) -> MulTable {
    let (na, nb) = (a.order, b.order);
    let order = na * nb;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (x1, x2) = (x / nb, x % nb);
        for y in 0..order {
            let (y1, y2) = (y / nb, y % nb);
            table.push(a.mul(x1, y1) * nb + b.mul(x2, y2));
        }
    }
    let names = (0..order)
        .map(|x| format!("({},{})", a.name(x / nb), b.name(x % nb)))
        .collect();
    let identity = match (a.identity, b.identity) {
        (Some(e1), Some(e2)) => Some(e1 * nb + e2),
        _ => None,
    };
    let t = MulTable {
        order,
        table,
        names,
        identity,
        group: a.group && b.group,
    };
    debug_assert!(t.check_associative().is_ok());
    t
}

/// A non-empty subset of a table's carrier.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratingSet(BTreeSet<usize>);

impl GeneratingSet {
    pub fn new<I: IntoIterator<Item = usize>>(s: &MulTable, elements: I) -> Result<Self> {
        let set: BTreeSet<usize> = elements.into_iter().collect();
        if set.is_empty() {
            return Err(Error::InvalidParameter("generating set must be non-empty".into()));
        }
        for &x in &set {
            s.check_element(x)?;
        }
        Ok(GeneratingSet(set))
    }

    /// The whole carrier, e.g. `R_r` generated by itself.
    pub fn all(s: &MulTable) -> Self {
        GeneratingSet((0..s.order()).collect())
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.contains(&x)
    }

    /// `C x D` inside `S x T`, indexed as in [`direct_product`].
    pub fn product(&self, other: &GeneratingSet, right_order: usize) -> GeneratingSet {
        GeneratingSet(
            self.0
                .iter()
                .flat_map(|&c| other.0.iter().map(move |&d| c * right_order + d))
                .collect(),
        )
    }

    pub fn display(&self, s: &MulTable) -> String {
        format!("{{{}}}", self.0.iter().map(|&x| s.name(x)).join(", "))
    }
}

/// Everything reachable from `gens` by right multiplication by `gens`.
pub fn closure(s: &MulTable, gens: &[usize]) -> Vec<bool> {
    extend_closure(s, vec![false; s.order()], gens, gens)
}

fn extend_closure(s: &MulTable, mut inside: Vec<bool>, seeds: &[usize], gens: &[usize]) -> Vec<bool> {
    let mut queue: Vec<usize> = (0..s.order()).filter(|&x| inside[x]).collect();
    for &g in seeds {
        if !inside[g] {
            inside[g] = true;
            queue.push(g);
        }
    }
    while let Some(x) = queue.pop() {
        for &g in gens {
            let y = s.mul(x, g);
            if !inside[y] {
                inside[y] = true;
                queue.push(y);
            }
        }
    }
    inside
}

pub fn generates(s: &MulTable, c: &GeneratingSet) -> bool {
    closure(s, &c.to_vec()).into_iter().all(|b| b)
}

/// All inclusion-minimal generating sets of a group, in lexicographic order
/// of their sorted element lists.
pub fn minimal_generating_sets(s: &MulTable) -> Result<Vec<GeneratingSet>> {
    minimal_generating_sets_capped(s, DEFAULT_GENSET_CAP)
}

pub fn minimal_generating_sets_capped(s: &MulTable, cap: usize) -> Result<Vec<GeneratingSet>> {
    s.require_group("minimal_generating_sets")?;
    if s.order() > cap {
        return Err(Error::CapExceeded {
            what: "group order",
            actual: s.order(),
            cap,
        });
    }
    if s.order() == 1 {
        return Ok(vec![GeneratingSet(BTreeSet::from([0]))]);
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let start = vec![false; s.order()];
    search_generating_sets(s, 0, &mut chosen, &start, &mut out);
    Ok(out)
}

// Every inclusion-minimal set {x1 < .. < xk} has x_j outside <x1..x_{j-1}>
// and no proper prefix generating, so this DFS visits all of them in
// lexicographic order.
fn search_generating_sets(
    s: &MulTable,
    from: usize,
    chosen: &mut Vec<usize>,
    inside: &[bool],
    out: &mut Vec<GeneratingSet>,
) {
    for x in from..s.order() {
        if inside[x] {
            continue;
        }
        chosen.push(x);
        let grown = extend_closure(s, inside.to_vec(), &[x], chosen);
        if grown.iter().all(|&b| b) {
            if is_irredundant(s, chosen) {
                out.push(GeneratingSet(chosen.iter().copied().collect()));
            }
        } else {
            search_generating_sets(s, x + 1, chosen, &grown, out);
        }
        chosen.pop();
    }
}

fn is_irredundant(s: &MulTable, set: &[usize]) -> bool {
    (0..set.len()).all(|i| {
        let rest: Vec<usize> = set.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
        !closure(s, &rest).into_iter().all(|b| b)
    })
}

/// The minimum-cardinality members of [`minimal_generating_sets`].
pub fn minimum_generating_sets(s: &MulTable) -> Result<Vec<GeneratingSet>> {
    let all = minimal_generating_sets(s)?;
    let least = all.iter().map(GeneratingSet::len).min().unwrap_or(0);
    Ok(all.into_iter().filter(|c| c.len() == least).collect())
}

/// Some pair of elements of order two generates the whole group.
pub fn two_involutions_generate(s: &MulTable) -> Result<bool> {
    let inv = s.involutions()?;
    for (i, &a) in inv.iter().enumerate() {
        for &b in &inv[i + 1..] {
            if closure(s, &[a, b]).into_iter().all(|x| x) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count_true(v: &[bool]) -> usize {
        v.iter().filter(|&&b| b).count()
    }

    #[test]
    fn cyclic_tables() {
        let z1 = make_cyclic(1).unwrap();
        assert_eq!(z1.order(), 1);
        assert!(z1.is_group());
        let z6 = make_cyclic(6).unwrap();
        assert_eq!(z6.mul(2, 3), 5);
        assert_eq!(z6.mul(3, 3), 0);
        assert_eq!(z6.identity(), Some(0));
        assert_eq!(z6.name(4), "4");
        assert!(make_cyclic(0).is_err());
    }

    #[test]
    fn element_order_by_repeated_multiplication() {
        // oracle: smallest k with x added to itself k times = 0 mod n
        let z4 = make_cyclic(4).unwrap();
        let mut acc = 1;
        let mut k = 1;
        while acc != 0 {
            acc = (acc + 1) % 4;
            k += 1;
        }
        assert_eq!(z4.element_order(1).unwrap(), k);
        let z6 = make_cyclic(6).unwrap();
        assert_eq!(z6.element_order(1).unwrap(), 6);
        assert_eq!(z6.element_order(2).unwrap(), 3);
        assert_eq!(z6.element_order(3).unwrap(), 2);
        let d4 = make_dihedral(4).unwrap();
        for k in 0..4 {
            let flip = k + 4;
            assert_eq!(d4.mul(flip, flip), 0);
            assert_eq!(d4.element_order(flip).unwrap(), 2);
        }
    }

    #[test]
    fn element_order_rejects_semigroups() {
        let r2 = make_right_zero(2).unwrap();
        assert!(matches!(r2.element_order(0), Err(Error::NotAGroup(_))));
        let z3r2 = direct_product(&make_cyclic(3).unwrap(), &r2);
        assert!(z3r2.element_order(1).is_err());
    }

    #[test]
    fn dihedral_groups() {
        let d2 = make_dihedral(2).unwrap();
        assert_eq!(d2.order(), 4);
        assert_eq!(d2.involutions().unwrap().len(), 3);
        let d3 = make_dihedral(3).unwrap();
        assert_eq!(d3.order(), 6);
        let squares_to_e = (1..6).filter(|&x| d3.mul(x, x) == 0).count();
        assert_eq!(squares_to_e, 3);
        assert_eq!(make_dihedral(5).unwrap().order(), 10);
        assert!(make_dihedral(1).is_err());
        // non-abelian for n >= 3
        assert_ne!(d3.mul(1, 3), d3.mul(3, 1));
    }

    #[test]
    fn permutation_groups() {
        assert_eq!(make_alternating(4).unwrap().order(), 12);
        assert_eq!(make_symmetric(4).unwrap().order(), 24);
        assert_eq!(make_symmetric(3).unwrap().identity(), Some(0));
        assert!(make_symmetric(6).is_err());
        assert!(make_alternating(6).is_err());
    }

    fn normal_subgroup_orders(g: &MulTable) -> Vec<usize> {
        // brute force over cyclic and two-generated subgroups
        let n = g.order();
        let mut found = BTreeSet::new();
        for a in 0..n {
            for b in a..n {
                let h = closure(g, &[a, b]);
                let size = count_true(&h);
                if size == 1 || size == n {
                    continue;
                }
                let normal = (0..n).all(|x| {
                    let xi = g.inverse(x).unwrap();
                    (0..n).filter(|&y| h[y]).all(|y| h[g.mul(g.mul(xi, y), x)])
                });
                if normal {
                    found.insert(size);
                }
            }
        }
        found.into_iter().collect()
    }

    #[test]
    fn a5_is_simple() {
        let a5 = make_alternating(5).unwrap();
        assert_eq!(a5.order(), 60);
        // every subgroup of A5 is generated by at most two elements
        assert!(normal_subgroup_orders(&a5).is_empty());
        // sanity: A4 has the Klein four normal subgroup
        assert_eq!(normal_subgroup_orders(&make_alternating(4).unwrap()), vec![4]);
    }

    #[test]
    fn right_zero_semigroups() {
        let r1 = make_right_zero(1).unwrap();
        assert_eq!(r1.identity(), Some(0));
        let r3 = make_right_zero(3).unwrap();
        assert_eq!(r3.mul(0, 2), 2);
        assert_eq!(r3.mul(2, 0), 0);
        assert_eq!(r3.identity(), None);
        for i in 0..3 {
            assert_eq!(r3.row(i), &[0, 1, 2]);
        }
        assert!(make_right_zero(2).unwrap().every_principal_right_ideal_full());
        assert!(!make_left_zero(2).unwrap().every_principal_right_ideal_full());
    }

    #[test]
    fn products() {
        let z2z3 = direct_product(&make_cyclic(2).unwrap(), &make_cyclic(3).unwrap());
        assert_eq!(z2z3.order(), 6);
        assert!(z2z3.is_group());
        assert!((0..6).any(|x| z2z3.element_order(x).unwrap() == 6));

        let z3r2 = direct_product(&make_cyclic(3).unwrap(), &make_right_zero(2).unwrap());
        assert_eq!(z3r2.order(), 6);
        assert_eq!(z3r2.identity(), None);
        assert!(z3r2.every_principal_right_ideal_full());

        let z2d3 = direct_product(&make_cyclic(2).unwrap(), &make_dihedral(3).unwrap());
        assert_eq!(z2d3.order(), 12);
    }

    #[test]
    fn rejects_non_associative_tables() {
        // x*y = x - y mod 3
        let rows = (0..3).map(|a| (0..3).map(|b| (a + 3 - b) % 3).collect()).collect();
        let names = (0..3).map(|i| i.to_string()).collect();
        assert!(matches!(MulTable::new(rows, names), Err(Error::InvalidTable(_))));
        let rows = vec![vec![0, 3], vec![1, 1]];
        assert!(MulTable::new(rows, vec!["a".into(), "b".into()]).is_err());
    }

    #[test]
    fn generation() {
        let z6 = make_cyclic(6).unwrap();
        let set = |v: &[usize]| GeneratingSet::new(&z6, v.iter().copied()).unwrap();
        assert!(generates(&z6, &set(&[1])));
        assert!(generates(&z6, &set(&[2, 3])));
        assert!(!generates(&z6, &set(&[2])));
        let z4 = make_cyclic(4).unwrap();
        assert!(!generates(&z4, &GeneratingSet::new(&z4, [2]).unwrap()));
        assert!(GeneratingSet::new(&z6, []).is_err());
        assert!(GeneratingSet::new(&z6, [6]).is_err());
    }

    #[test]
    fn minimal_sets_match_subset_enumeration() {
        // oracle: all subsets of Z6 that generate and whose proper subsets don't
        let z6 = make_cyclic(6).unwrap();
        let gen = |mask: u32| {
            let v: Vec<usize> = (0..6).filter(|i| mask >> i & 1 == 1).collect();
            !v.is_empty() && count_true(&closure(&z6, &v)) == 6
        };
        let mut oracle: Vec<Vec<usize>> = (1u32..64)
            .filter(|&m| gen(m) && (0..6).all(|i| m >> i & 1 == 0 || !gen(m & !(1 << i))))
            .map(|m| (0..6).filter(|i| m >> i & 1 == 1).collect())
            .collect();
        oracle.sort();
        let got: Vec<Vec<usize>> = minimal_generating_sets(&z6).unwrap().iter().map(|c| c.to_vec()).collect();
        assert_eq!(got, oracle);
        assert!(got.contains(&vec![1]));
        assert!(got.contains(&vec![5]));
        assert!(got.contains(&vec![2, 3]));
        assert!(!got.contains(&vec![1, 2]));

        let z2 = make_cyclic(2).unwrap();
        let got: Vec<Vec<usize>> = minimal_generating_sets(&z2).unwrap().iter().map(|c| c.to_vec()).collect();
        assert_eq!(got, vec![vec![1]]);
    }

    #[test]
    fn minimal_sets_are_irredundant() {
        for g in [make_dihedral(3).unwrap(), make_alternating(4).unwrap(), make_dihedral(4).unwrap()] {
            let sets = minimal_generating_sets(&g).unwrap();
            assert!(!sets.is_empty());
            for c in &sets {
                assert!(generates(&g, c));
                let v = c.to_vec();
                for i in 0..v.len() {
                    let mut rest = v.clone();
                    rest.remove(i);
                    assert!(rest.is_empty() || count_true(&closure(&g, &rest)) < g.order());
                }
            }
            let mut sorted = sets.clone();
            sorted.sort_by_key(|c| c.to_vec());
            assert_eq!(sets, sorted);
        }
        let d3 = make_dihedral(3).unwrap();
        let has_involution_pair = minimal_generating_sets(&d3).unwrap().iter().any(|c| {
            c.len() == 2 && c.elements().all(|x| d3.element_order(x).unwrap() == 2)
        });
        assert!(has_involution_pair);
        let minimum = minimum_generating_sets(&d3).unwrap();
        assert!(minimum.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn involution_pairs() {
        assert!(two_involutions_generate(&make_dihedral(5).unwrap()).unwrap());
        assert!(!two_involutions_generate(&make_alternating(4).unwrap()).unwrap());
        let z2z4 = direct_product(&make_cyclic(2).unwrap(), &make_cyclic(4).unwrap());
        // oracle: every pair of involutions generates a subgroup of size <= 4
        let inv = z2z4.involutions().unwrap();
        let best = inv
            .iter()
            .flat_map(|&a| inv.iter().map(move |&b| (a, b)))
            .map(|(a, b)| count_true(&closure(&z2z4, &[a, b])))
            .max()
            .unwrap();
        assert!(best < 8);
        assert!(!two_involutions_generate(&z2z4).unwrap());
    }

    #[test]
    fn lagrange_and_sampled_associativity() {
        let big = direct_product(&make_cyclic(2).unwrap(), &make_alternating(5).unwrap());
        assert_eq!(big.order(), 120);
        assert!(big.check_associative().is_ok());
        for g in [make_symmetric(4).unwrap(), big] {
            for x in 0..g.order() {
                assert_eq!(g.order() % g.element_order(x).unwrap(), 0);
            }
        }
    }

    #[test]
    fn projections_are_homomorphisms() {
        let a = make_dihedral(3).unwrap();
        let b = make_right_zero(3).unwrap();
        let p = direct_product(&a, &b);
        let nb = b.order();
        for x in 0..p.order() {
            for y in 0..p.order() {
                let z = p.mul(x, y);
                assert_eq!(z / nb, a.mul(x / nb, y / nb));
                assert_eq!(z % nb, b.mul(x % nb, y % nb));
            }
        }
    }
}
