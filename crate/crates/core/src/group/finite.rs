//! Explicit finite groups: an indexed element set with a total composition
//! table, plus orders, centers, centralizers, and subgroup views.
//!
//! Element handles are `u32` indices into the element list of the group that
//! created them. Composition tables are materialized eagerly, which caps the
//! usable order (see [`Guard::max_table_order`]) but makes every downstream
//! scan a plain array lookup.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::bitset::BitSet;
use crate::guard::Guard;

#[derive(Clone)]
pub struct FiniteGroup {
    n: usize,
    identity: u32,
    /// Row-major n x n composition table.
    table: Vec<u32>,
    inv: Vec<u32>,
    labels: Option<Arc<Vec<String>>>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup(order {})", self.n)
    }
}

impl FiniteGroup {
    /// Materializes a group from a composition law on indices 0..order.
    ///
    /// Validates closure (every product lands in range), the Latin-square
    /// property, a two-sided identity, and two-sided inverses. Associativity
    /// is sampled deterministically here; exhaustive checks are a separate,
    /// guarded call because they cost O(n^3).
    pub fn from_law<F>(
        order: usize,
        law: F,
        labels: Option<Vec<String>>,
        guard: &Guard,
    ) -> Result<Self>
    where
        F: Fn(u32, u32) -> u32,
    {
        if order == 0 {
            return Err(Error::NotAGroup("empty element set".into()));
        }
        guard.check_table("composition table", order as u128)?;
        let n = order;
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let c = law(a as u32, b as u32);
                if c as usize >= n {
                    return Err(Error::NotAGroup(format!(
                        "law({a}, {b}) = {c} escapes the element set"
                    )));
                }
                table[a * n + b] = c;
            }
        }
        // Latin square: each row and column is a permutation.
        let mut seen = vec![false; n];
        for a in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..n {
                let c = table[a * n + b] as usize;
                if seen[c] {
                    return Err(Error::NotAGroup(format!("row {a} repeats element {c}")));
                }
                seen[c] = true;
            }
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..n {
                let c = table[b * n + a] as usize;
                if seen[c] {
                    return Err(Error::NotAGroup(format!("column {a} repeats element {c}")));
                }
                seen[c] = true;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e * n + x] == x as u32 && table[x * n + e] == x as u32))
            .ok_or_else(|| Error::NotAGroup("no two-sided identity".into()))? as u32;
        let mut inv = vec![u32::MAX; n];
        for a in 0..n {
            let b = (0..n)
                .find(|&b| table[a * n + b] == identity && table[b * n + a] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))?;
            inv[a] = b as u32;
        }
        let g = FiniteGroup {
            n,
            identity,
            table,
            inv,
            labels: labels.map(Arc::new),
        };
        // Deterministic sampled associativity; exhaustive checks are opt-in.
        let mut state = 0x9E3779B97F4A7C15u64;
        let mut next = || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (state >> 33) as usize % n
        };
        let samples = if n as u128 * n as u128 * n as u128 <= 4096 {
            // Small groups get the full check for free.
            return match g.check_associativity_exhaustive() {
                None => Ok(g),
                Some((a, b, c)) => Err(Error::NotAGroup(format!(
                    "associativity fails at ({a}, {b}, {c})"
                ))),
            };
        } else {
            2048
        };
        for _ in 0..samples {
            let (a, b, c) = (next() as u32, next() as u32, next() as u32);
            if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) {
                return Err(Error::NotAGroup(format!(
                    "associativity fails at ({a}, {b}, {c})"
                )));
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.n as u32
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.n + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn conjugate(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, g: u32, mut e: u64) -> u32 {
        let mut base = g;
        let mut acc = self.identity;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Least m >= 1 with g^m = identity; divides the group order.
    pub fn order_of(&self, g: u32) -> Result<u64> {
        if g as usize >= self.n {
            return Err(Error::NotInGroup(g));
        }
        let mut m = 1u64;
        let mut x = g;
        while x != self.identity {
            x = self.mul(x, g);
            m += 1;
        }
        Ok(m)
    }

    pub fn label(&self, g: u32) -> String {
        match &self.labels {
            Some(l) => l[g as usize].clone(),
            None => format!("g{g}"),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref().map(|v| v.as_slice())
    }

    pub fn is_abelian(&self) -> bool {
        for a in 0..self.n as u32 {
            for b in (a + 1)..self.n as u32 {
                if self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    /// Elements commuting with everything, in index order.
    pub fn center_members(&self) -> Vec<u32> {
        (0..self.n as u32)
            .filter(|&z| (0..self.n as u32).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// Elements commuting with g, in index order.
    pub fn centralizer_members(&self, g: u32) -> Result<Vec<u32>> {
        if g as usize >= self.n {
            return Err(Error::NotInGroup(g));
        }
        Ok((0..self.n as u32)
            .filter(|&x| self.mul(x, g) == self.mul(g, x))
            .collect())
    }

    /// The center as a standalone group.
    pub fn center(&self) -> FiniteGroup {
        self.subgroup(&self.center_members())
    }

    /// The centralizer of g as a standalone group.
    pub fn centralizer(&self, g: u32) -> Result<FiniteGroup> {
        Ok(self.subgroup(&self.centralizer_members(g)?))
    }

    /// The cyclic subgroup generated by g, sorted.
    pub fn cyclic_members(&self, g: u32) -> Vec<u32> {
        let mut out = vec![self.identity];
        let mut x = g;
        while x != self.identity {
            out.push(x);
            x = self.mul(x, g);
        }
        out.sort_unstable();
        out
    }

    /// Closure of a generating set, sorted. For a finite group, closure under
    /// products alone yields a subgroup.
    pub fn generated(&self, gens: &[u32]) -> Vec<u32> {
        let mut bits = BitSet::new(self.n);
        bits.insert(self.identity);
        let mut members = vec![self.identity];
        for &g in gens {
            if bits.insert(g) {
                members.push(g);
            }
        }
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            i += 1;
            let mut j = 0;
            while j < members.len() {
                let y = members[j];
                j += 1;
                for p in [self.mul(x, y), self.mul(y, x)] {
                    if bits.insert(p) {
                        members.push(p);
                    }
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// Reindexes a closed member set as a standalone group. The member list
    /// must be sorted, contain the identity, and be closed under the law.
    pub fn subgroup(&self, members: &[u32]) -> FiniteGroup {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]), "members sorted");
        let mut back = vec![u32::MAX; self.n];
        for (new, &old) in members.iter().enumerate() {
            back[old as usize] = new as u32;
        }
        let m = members.len();
        let mut table = vec![0u32; m * m];
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                let c = back[self.mul(a, b) as usize];
                debug_assert_ne!(c, u32::MAX, "member set not closed");
                table[i * m + j] = c;
            }
        }
        let inv = members
            .iter()
            .map(|&a| back[self.inv(a) as usize])
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| Arc::new(members.iter().map(|&m| l[m as usize].clone()).collect()));
        FiniteGroup {
            n: m,
            identity: back[self.identity as usize],
            table,
            inv,
            labels,
        }
    }

    /// Scans all n^3 triples; returns the first violating triple, if any.
    pub fn check_associativity_exhaustive(&self) -> Option<(u32, u32, u32)> {
        use rayon::prelude::*;
        (0..self.n as u32).into_par_iter().find_map_first(|a| {
            for b in 0..self.n as u32 {
                let ab = self.mul(a, b);
                for c in 0..self.n as u32 {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
            None
        })
    }

    /// Element-order histogram, a cheap isomorphism invariant.
    pub fn order_histogram(&self) -> BTreeMap<u64, usize> {
        let mut h = BTreeMap::new();
        for g in 0..self.n as u32 {
            *h.entry(self.order_of(g).expect("in range")).or_insert(0) += 1;
        }
        h
    }
}

/// Builds a group from concrete elements and a composition law on them.
/// Returns the group together with the element list in index order.
pub fn group_from_elements<T, F>(
    elems: Vec<T>,
    law: F,
    labels: Option<Vec<String>>,
    guard: &Guard,
) -> Result<(FiniteGroup, Vec<T>)>
where
    T: Clone + Eq + std::hash::Hash,
    F: Fn(&T, &T) -> T,
{
    use std::collections::HashMap;
    let index: HashMap<T, u32> = elems
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i as u32))
        .collect();
    if index.len() != elems.len() {
        return Err(Error::NotAGroup("duplicate elements".into()));
    }
    let lookup = |a: u32, b: u32| -> u32 {
        let prod = law(&elems[a as usize], &elems[b as usize]);
        *index.get(&prod).unwrap_or(&u32::MAX)
    };
    let g = FiniteGroup::from_law(elems.len(), lookup, labels, guard)?;
    Ok((g, elems))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn cyclic(n: usize) -> FiniteGroup {
        FiniteGroup::from_law(
            n,
            |a, b| ((a as usize + b as usize) % n) as u32,
            None,
            &Guard::default(),
        )
        .unwrap()
    }

    #[test]
    fn cyclic_group_basics() {
        let c6 = cyclic(6);
        assert_eq!(c6.identity(), 0);
        assert_eq!(c6.order_of(1).unwrap(), 6);
        assert_eq!(c6.order_of(2).unwrap(), 3);
        assert!(c6.is_abelian());
        assert_eq!(c6.center_members().len(), 6);
        assert_eq!(c6.cyclic_members(2), vec![0, 2, 4]);
    }

    #[test]
    fn broken_law_is_rejected() {
        // Constant law: no identity, rows repeat.
        let r = FiniteGroup::from_law(3, |_, _| 0, None, &Guard::default());
        assert!(matches!(r, Err(Error::NotAGroup(_))));
    }

    #[test]
    fn subgroup_reindexing() {
        let c6 = cyclic(6);
        let h = c6.subgroup(&[0, 2, 4]);
        assert_eq!(h.order(), 3);
        assert_eq!(h.order_of(1).unwrap(), 3);
    }

    #[test]
    fn table_guard_applies() {
        let tiny = Guard {
            max_table_order: 4,
            ..Guard::default()
        };
        assert!(matches!(
            FiniteGroup::from_law(6, |a, b| (a + b) % 6, None, &tiny),
            Err(Error::GuardExceeded { .. })
        ));
    }

    /// Dihedral group of order 2n as a law on (rotation, flip) codes.
    fn dihedral(n: u32) -> FiniteGroup {
        FiniteGroup::from_law(
            2 * n as usize,
            move |a, b| {
                let (r1, f1) = (a % n, a / n);
                let (r2, f2) = (b % n, b / n);
                let r = if f1 == 0 { (r1 + r2) % n } else { (r1 + n - r2) % n };
                r + n * ((f1 + f2) % 2)
            },
            None,
            &Guard::default(),
        )
        .unwrap()
    }

    #[test]
    fn center_sits_inside_every_centralizer() {
        let g = dihedral(4); // order 8, center of order 2
        let center = g.center_members();
        assert_eq!(center.len(), 2);
        for x in g.elements() {
            let c = g.centralizer_members(x).unwrap();
            for z in &center {
                assert!(c.contains(z), "center escapes the centralizer of {x}");
            }
            // The centralizer is everything exactly for central elements.
            assert_eq!(c.len() == g.order(), center.contains(&x));
        }
        assert_eq!(g.center().order(), 2);
        assert_eq!(g.centralizer(g.identity()).unwrap().order(), 8);
    }

    #[test]
    fn out_of_range_handles_error() {
        let g = cyclic(3);
        assert!(matches!(g.order_of(7), Err(Error::NotInGroup(7))));
        assert!(matches!(g.centralizer_members(9), Err(Error::NotInGroup(9))));
    }
}
