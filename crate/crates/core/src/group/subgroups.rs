//! Subgroup-lattice enumeration and abelian-subgroup search.
//!
//! Enumeration is bottom-up: all cyclic subgroups first, then repeated joins
//! of known subgroups with cyclic ones until the lattice is closed. Member
//! sets are hash-consed bitsets, and a closure whose size passes |G|/2 is the
//! whole group by Lagrange, which cuts off most joins early.
//!
//! The maximum-abelian search is exact without enumerating the lattice:
//! every maximal abelian subgroup A satisfies A = C_G(A), an intersection of
//! element centralizers, so the intersection closure of the centralizer
//! family contains every maximal abelian subgroup.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::Result;
use crate::group::bitset::BitSet;
use crate::group::finite::FiniteGroup;
use crate::guard::Guard;

/// Product closure of a seed set. Early-exits to the full group as soon as
/// the intermediate size exceeds |G|/2.
fn close(g: &FiniteGroup, seed: &BitSet) -> BitSet {
    let n = g.order();
    let mut bits = seed.clone();
    let mut members = bits.members();
    let mut i = 0;
    while i < members.len() {
        if 2 * members.len() > n {
            return BitSet::full(n);
        }
        let x = members[i];
        i += 1;
        let mut j = 0;
        while j < members.len() {
            let y = members[j];
            j += 1;
            for p in [g.mul(x, y), g.mul(y, x)] {
                if bits.insert(p) {
                    members.push(p);
                }
            }
        }
    }
    bits
}

/// All subgroups, each exactly once, sorted by (order, member list).
pub fn enumerate_subgroups(g: &FiniteGroup, guard: &Guard) -> Result<Vec<Vec<u32>>> {
    guard.check_subgroup_order("subgroup enumeration", g.order() as u64)?;
    let n = g.order();

    let mut seen: HashMap<BitSet, usize> = HashMap::new();
    let mut found: Vec<BitSet> = Vec::new();
    let push = |s: BitSet, found: &mut Vec<BitSet>, seen: &mut HashMap<BitSet, usize>| -> bool {
        if seen.contains_key(&s) {
            false
        } else {
            seen.insert(s.clone(), found.len());
            found.push(s);
            true
        }
    };

    let trivial = BitSet::from_members(&[g.identity()], n);
    push(trivial, &mut found, &mut seen);
    let mut cyclics: Vec<BitSet> = Vec::new();
    for x in g.elements() {
        let c = BitSet::from_members(&g.cyclic_members(x), n);
        push(c.clone(), &mut found, &mut seen);
        if !cyclics.contains(&c) {
            cyclics.push(c);
        }
    }

    // Round-based joins: each new subgroup is joined against every cyclic
    // subgroup. Rounds are merged in pair order, so the discovery order (and
    // hence the output) is independent of the rayon thread count.
    let mut frontier: Vec<BitSet> = found.clone();
    while !frontier.is_empty() {
        let joins: Vec<BitSet> = frontier
            .par_iter()
            .flat_map_iter(|h| {
                cyclics.iter().filter_map(|c| {
                    if c.is_subset(h) {
                        None
                    } else {
                        let mut seed = h.clone();
                        seed.union_with(c);
                        Some(close(g, &seed))
                    }
                })
            })
            .collect();
        let mut next = Vec::new();
        for j in joins {
            if push(j.clone(), &mut found, &mut seen) {
                next.push(j);
            }
        }
        frontier = next;
    }

    let mut out: Vec<Vec<u32>> = found.iter().map(BitSet::members).collect();
    out.sort_unstable_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    Ok(out)
}

fn members_commute(g: &FiniteGroup, members: &[u32]) -> bool {
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if g.mul(a, b) != g.mul(b, a) {
                return false;
            }
        }
    }
    true
}

/// Is the subgroup with the given members abelian?
pub fn is_abelian_subset(g: &FiniteGroup, members: &[u32]) -> bool {
    members_commute(g, members)
}

/// Is `sub` normal inside the subgroup spanned by `ambient`?
pub fn is_normal_within(g: &FiniteGroup, sub: &[u32], ambient: &[u32]) -> bool {
    let bits = BitSet::from_members(sub, g.order());
    for &h in ambient {
        for &a in sub {
            if !bits.contains(g.conjugate(h, a)) {
                return false;
            }
        }
    }
    true
}

/// Maximum order over all abelian subgroups, with a witness subgroup.
///
/// Exact by the centralizer-intersection argument in the module docs; the
/// subgroup lattice is never enumerated, so this scales to groups well past
/// the lattice guard.
pub fn max_abelian_order(g: &FiniteGroup) -> (u64, Vec<u32>) {
    let n = g.order();
    if g.is_abelian() {
        return (n as u64, g.elements().collect());
    }
    let mut family: Vec<BitSet> = Vec::new();
    let mut seen: HashMap<BitSet, ()> = HashMap::new();
    for x in g.elements() {
        let c = BitSet::from_members(&g.centralizer_members(x).expect("in range"), n);
        if seen.insert(c.clone(), ()).is_none() {
            family.push(c);
        }
    }
    let mut i = 0;
    while i < family.len() {
        let mut j = 0;
        while j < family.len() {
            let meet = family[i].intersect(&family[j]);
            if seen.insert(meet.clone(), ()).is_none() {
                family.push(meet);
            }
            j += 1;
        }
        i += 1;
    }
    let mut best: Option<(usize, Vec<u32>)> = None;
    for s in &family {
        let count = s.count();
        if best.as_ref().is_some_and(|(b, _)| *b >= count) {
            continue;
        }
        let members = s.members();
        if members_commute(g, &members) {
            best = Some((count, members));
        }
    }
    let (count, members) = best.expect("cyclic subgroups are abelian");
    (count as u64, members)
}

/// Minimum index [G : A] over normal abelian subgroups A, with a witness.
/// The trivial subgroup is always normal and abelian, so this is total.
pub fn min_normal_abelian_index(g: &FiniteGroup, guard: &Guard) -> Result<(u64, Vec<u32>)> {
    let subs = enumerate_subgroups(g, guard)?;
    let all: Vec<u32> = g.elements().collect();
    let mut best: Option<&Vec<u32>> = None;
    for s in subs.iter().rev() {
        if best.is_some_and(|b| b.len() >= s.len()) {
            break;
        }
        if is_abelian_subset(g, s) && is_normal_within(g, s, &all) {
            best = Some(s);
        }
    }
    let best = best.expect("trivial subgroup is normal abelian");
    Ok(((g.order() / best.len()) as u64, best.clone()))
}

/// Shared lattice scan for per-subgroup bounds: for every subgroup H of G,
/// the minimum index of a normal abelian subgroup of H.
pub struct LatticeScan {
    /// Sorted member lists, one per subgroup of G.
    pub subgroups: Vec<Vec<u32>>,
    /// (order of H, min normal abelian index within H), aligned with `subgroups`.
    pub min_indices: Vec<(u64, u64)>,
}

pub fn lattice_min_normal_abelian_indices(
    g: &FiniteGroup,
    guard: &Guard,
) -> Result<LatticeScan> {
    let subgroups = enumerate_subgroups(g, guard)?;
    let n = g.order();
    let bits: Vec<BitSet> = subgroups
        .iter()
        .map(|s| BitSet::from_members(s, n))
        .collect();
    let abelian: Vec<bool> = subgroups
        .iter()
        .map(|s| is_abelian_subset(g, s))
        .collect();
    // Candidate A scanned in decreasing order; the first normal abelian
    // subgroup of H gives the minimum index.
    let desc: Vec<usize> = {
        let mut idx: Vec<usize> = (0..subgroups.len()).collect();
        idx.sort_unstable_by(|&a, &b| {
            (subgroups[b].len(), &subgroups[b]).cmp(&(subgroups[a].len(), &subgroups[a]))
        });
        idx
    };
    let min_indices: Vec<(u64, u64)> = subgroups
        .par_iter()
        .enumerate()
        .map(|(hi, h)| {
            for &ai in &desc {
                if !abelian[ai] || !bits[ai].is_subset(&bits[hi]) {
                    continue;
                }
                if is_normal_within(g, &subgroups[ai], h) {
                    return (h.len() as u64, (h.len() / subgroups[ai].len()) as u64);
                }
            }
            unreachable!("trivial subgroup is always normal abelian")
        })
        .collect();
    Ok(LatticeScan {
        subgroups,
        min_indices,
    })
}
