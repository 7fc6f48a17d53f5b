//! Subgroup enumeration and order spectra.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{dihedral_element_order, FiniteGroup};

/// Largest group order that [`all_subgroups`] accepts by default.
pub const BRUTE_FORCE_CAP: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DihedralKind {
    /// `<r^d>`
    Rotation,
    /// `<r^d, r^i s>`
    Mixed,
}

/// Position of a subgroup of `D_n` in the standard listing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DihedralCoord {
    pub kind: DihedralKind,
    pub d: u64,
    pub i: u64,
}

/// A subgroup, identified by its sorted member list.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Subgroup {
    members: Vec<usize>,
    dihedral_coord: Option<DihedralCoord>,
}

// Identity is the member set; the coordinate is only an annotation.
impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.members.len(), &self.members).cmp(&(other.members.len(), &other.members))
    }
}

impl Subgroup {
    pub fn from_members(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Subgroup {
            members,
            dihedral_coord: None,
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn dihedral_coord(&self) -> Option<DihedralCoord> {
        self.dihedral_coord
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&g| other.contains(g))
    }

    /// Closure under products and inverses, and presence of the identity.
    pub fn is_closed_in(&self, g: &FiniteGroup) -> bool {
        self.contains(g.identity())
            && self.members.iter().all(|&a| {
                self.contains(g.inv(a)) && self.members.iter().all(|&b| self.contains(g.mul(a, b)))
            })
    }
}

/// The set `{o(x) : x in H}`, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OrderSpectrum(Vec<u64>);

impl OrderSpectrum {
    pub fn new(values: impl IntoIterator<Item = u64>) -> Self {
        let mut v: Vec<u64> = values.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        OrderSpectrum(v)
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn max(&self) -> u64 {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn is_subset(&self, other: &OrderSpectrum) -> bool {
        self.0.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &OrderSpectrum) -> OrderSpectrum {
        OrderSpectrum(
            self.0
                .iter()
                .copied()
                .filter(|&x| other.contains(x))
                .collect(),
        )
    }

    pub fn union(&self, other: &OrderSpectrum) -> OrderSpectrum {
        OrderSpectrum::new(self.0.iter().chain(&other.0).copied())
    }

    /// Divisors of `m`, optionally with 2 adjoined.
    pub fn divisors_with_two(m: u64, with_two: bool) -> OrderSpectrum {
        let mut v = arith::divisors(m);
        if with_two {
            v.push(2);
        }
        OrderSpectrum::new(v)
    }
}

impl fmt::Display for OrderSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Membership bitmap plus member list, grown by right multiplication.
struct Closure<'g> {
    group: &'g FiniteGroup,
    present: Vec<bool>,
    list: Vec<usize>,
}

impl<'g> Closure<'g> {
    fn new(group: &'g FiniteGroup) -> Self {
        let mut present = vec![false; group.order()];
        present[group.identity()] = true;
        Closure {
            group,
            present,
            list: vec![group.identity()],
        }
    }

    fn seeded(group: &'g FiniteGroup, members: &[usize]) -> Self {
        let mut c = Closure {
            group,
            present: vec![false; group.order()],
            list: Vec::with_capacity(members.len()),
        };
        for &m in members {
            if !c.present[m] {
                c.present[m] = true;
                c.list.push(m);
            }
        }
        c
    }

    /// Closes under right multiplication by `gens`; in a finite group that
    /// also gives inverses.
    fn close(&mut self, gens: &[usize]) {
        let mut queue: VecDeque<usize> = self.list.iter().copied().collect();
        for &g in gens {
            if !self.present[g] {
                self.present[g] = true;
                self.list.push(g);
                queue.push_back(g);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.group.mul(x, g);
                if !self.present[y] {
                    self.present[y] = true;
                    self.list.push(y);
                    queue.push_back(y);
                }
            }
        }
    }

    fn into_members(self) -> Vec<usize> {
        let mut v = self.list;
        v.sort_unstable();
        v
    }
}

/// Smallest subgroup containing `gens`.
pub fn generated_subgroup(g: &FiniteGroup, gens: &[usize]) -> Subgroup {
    let mut c = Closure::new(g);
    c.close(gens);
    Subgroup {
        members: c.into_members(),
        dihedral_coord: None,
    }
}

pub fn all_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup>> {
    all_subgroups_with_cap(g, BRUTE_FORCE_CAP)
}

/// Every subgroup of `g`, sorted by (order, members).
///
/// Seeds with the cyclic subgroups, then repeatedly joins each known
/// subgroup with each cyclic subgroup it does not contain until no new
/// subgroup appears. Every subgroup is a join of cyclic subgroups, so the
/// fixpoint is the full subgroup lattice.
pub fn all_subgroups_with_cap(g: &FiniteGroup, cap: usize) -> Result<Vec<Subgroup>> {
    if g.order() > cap {
        return Err(Error::BruteForceCap {
            order: g.order(),
            cap,
        });
    }

    // Distinct cyclic subgroups, each with one generator.
    let mut cyclic: HashMap<Vec<usize>, usize> = HashMap::new();
    for x in g.elements() {
        let members = generated_subgroup(g, &[x]).members;
        cyclic.entry(members).or_insert(x);
    }
    let mut cyclic: Vec<(Vec<usize>, usize)> = cyclic.into_iter().collect();
    cyclic.sort();

    // members -> generators used to reach it
    let mut known: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    let mut queue = VecDeque::new();
    for (members, gen) in &cyclic {
        let gens = if members.len() == 1 {
            vec![]
        } else {
            vec![*gen]
        };
        if known.insert(members.clone(), gens).is_none() {
            queue.push_back(members.clone());
        }
    }

    while let Some(members) = queue.pop_front() {
        let gens = known[&members].clone();
        let mut present = vec![false; g.order()];
        for &m in &members {
            present[m] = true;
        }
        for (_, x) in &cyclic {
            if present[*x] {
                continue;
            }
            let mut c = Closure::seeded(g, &members);
            let mut ext = gens.clone();
            ext.push(*x);
            c.close(&ext);
            let joined = c.into_members();
            if !known.contains_key(&joined) {
                known.insert(joined.clone(), ext);
                queue.push_back(joined);
            }
        }
    }

    let mut out: Vec<Subgroup> = known
        .into_keys()
        .map(|members| Subgroup {
            members,
            dihedral_coord: None,
        })
        .collect();
    out.sort();
    Ok(out)
}

/// The complete subgroup listing of `D_n`: `<r^d>` for `d | n`, and
/// `<r^d, r^i s>` for `d | n`, `0 <= i < d`. Members use the
/// rotations-then-reflections numbering of [`crate::group`].
pub fn dihedral_subgroup_listing(n: u64) -> Vec<Subgroup> {
    assert!(n >= 1, "D_n needs n >= 1");
    let divisors = arith::divisors(n);
    let mut out = Vec::new();
    for &d in &divisors {
        out.push(dihedral_subgroup(n, DihedralKind::Rotation, d, 0));
    }
    for &d in &divisors {
        for i in 0..d {
            out.push(dihedral_subgroup(n, DihedralKind::Mixed, d, i));
        }
    }
    out
}

/// `<r^d>` or `<r^d, r^i s>` inside `D_n`.
pub fn dihedral_subgroup(n: u64, kind: DihedralKind, d: u64, i: u64) -> Subgroup {
    debug_assert!(n % d == 0 && i < d.max(1));
    let rotations = (0..n / d).map(|j| (j * d) as usize);
    let mut members: Vec<usize> = rotations.collect();
    if kind == DihedralKind::Mixed {
        members.extend((0..n / d).map(|j| (n + i + j * d) as usize));
    }
    members.sort_unstable();
    Subgroup {
        members,
        dihedral_coord: Some(DihedralCoord { kind, d, i }),
    }
}

pub fn order_spectrum(g: &FiniteGroup, h: &Subgroup) -> OrderSpectrum {
    OrderSpectrum::new(h.members.iter().map(|&x| g.element_order(x)))
}

/// Order spectrum of a subgroup of `D_n` given by member ids, without a table.
pub fn dihedral_order_spectrum(n: u64, h: &Subgroup) -> OrderSpectrum {
    OrderSpectrum::new(
        h.members
            .iter()
            .map(|&x| dihedral_element_order(n, x as u64)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{construct_group, GroupSpec};
    use std::collections::HashSet;

    fn dihedral(n: u64) -> FiniteGroup {
        construct_group(&GroupSpec::Dihedral(n)).unwrap()
    }

    #[test]
    fn generated_subgroups_of_d6() {
        let g = dihedral(6);
        assert_eq!(generated_subgroup(&g, &[]).members(), &[0]);
        assert_eq!(generated_subgroup(&g, &[6, 1]).order(), 12);
        // r^2 = 2, s = 6: {e, r^2, r^4, s, r^2 s, r^4 s}
        assert_eq!(
            generated_subgroup(&g, &[2, 6]).members(),
            &[0, 2, 4, 6, 8, 10]
        );
    }

    #[test]
    fn subgroup_counts() {
        let c12 = construct_group(&GroupSpec::Cyclic(12)).unwrap();
        assert_eq!(all_subgroups(&c12).unwrap().len(), 6);
        assert_eq!(all_subgroups(&dihedral(6)).unwrap().len(), 16);
        let triv = construct_group(&GroupSpec::Cyclic(1)).unwrap();
        assert_eq!(all_subgroups(&triv).unwrap().len(), 1);
        // subspaces of F_2^3: 1 + 7 + 7 + 1
        let e8 = construct_group(&GroupSpec::ElementaryAbelian { p: 2, k: 3 }).unwrap();
        assert_eq!(all_subgroups(&e8).unwrap().len(), 16);
    }

    #[test]
    fn brute_force_cap_is_enforced() {
        let g = dihedral(101);
        assert!(matches!(
            all_subgroups(&g),
            Err(Error::BruteForceCap {
                order: 202,
                cap: 200
            })
        ));
    }

    #[test]
    fn listing_small_cases() {
        let l1 = dihedral_subgroup_listing(1);
        assert_eq!(l1.len(), 2);
        assert_eq!(l1[0].members(), &[0]);
        assert_eq!(l1[1].members(), &[0, 1]);

        let l6 = dihedral_subgroup_listing(6);
        assert_eq!(l6.len(), 16);
        let rot = l6
            .iter()
            .filter(|h| h.dihedral_coord().unwrap().kind == DihedralKind::Rotation)
            .count();
        assert_eq!(rot, 4);

        // <r^2, r s> in D_4: {e, r^2, r s, r^3 s}
        let h = dihedral_subgroup(4, DihedralKind::Mixed, 2, 1);
        assert_eq!(h.members(), &[0, 2, 5, 7]);
    }

    #[test]
    fn listing_matches_brute_force_small() {
        for n in 1..=12 {
            let g = dihedral(n);
            let brute: HashSet<Subgroup> = all_subgroups(&g).unwrap().into_iter().collect();
            let listed: HashSet<Subgroup> = dihedral_subgroup_listing(n).into_iter().collect();
            assert_eq!(brute, listed, "n = {n}");
            assert_eq!(listed.len() as u64, arith::tau(n) + arith::sigma(n));
        }
    }

    #[test]
    fn spectra() {
        let g = dihedral(6);
        let e = generated_subgroup(&g, &[]);
        assert_eq!(order_spectrum(&g, &e).values(), &[1]);
        let h = generated_subgroup(&g, &[2, 6]);
        assert_eq!(order_spectrum(&g, &h).values(), &[1, 2, 3]);
        let g12 = dihedral(12);
        let rot = generated_subgroup(&g12, &[1]);
        assert_eq!(order_spectrum(&g12, &rot).values(), &[1, 2, 3, 4, 6, 12]);
        assert_eq!(
            OrderSpectrum::new([1, 2, 3]).to_string(),
            "{1,2,3}".to_string()
        );
    }
}
