use serde::{Deserialize, Serialize};

use super::poset::FinitePoset;

/// A poset in which every pair has a join and a meet, with both tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    poset: FinitePoset,
    join: Vec<usize>,
    meet: Vec<usize>,
}

/// Why a poset failed to be a lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonLattice {
    pub a: usize,
    pub b: usize,
    pub missing_join: bool,
    pub missing_meet: bool,
}

/// Decides whether `poset` is a lattice, filling in join/meet tables.
pub fn as_lattice(poset: &FinitePoset) -> Result<FiniteLattice, NonLattice> {
    let m = poset.size();
    let mut join = vec![0; m * m];
    let mut meet = vec![0; m * m];
    for a in 0..m {
        for b in a..m {
            let (lub, glb) = poset.bounds(a, b);
            match (lub, glb) {
                (Some(j), Some(w)) => {
                    join[a * m + b] = j;
                    join[b * m + a] = j;
                    meet[a * m + b] = w;
                    meet[b * m + a] = w;
                }
                _ => {
                    return Err(NonLattice {
                        a,
                        b,
                        missing_join: lub.is_none(),
                        missing_meet: glb.is_none(),
                    })
                }
            }
        }
    }
    Ok(FiniteLattice {
        poset: poset.clone(),
        join,
        meet,
    })
}

impl FiniteLattice {
    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn size(&self) -> usize {
        self.poset.size()
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size() + b]
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size() + b]
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    pub fn bottom(&self) -> usize {
        (0..self.size()).fold(0, |acc, x| self.meet(acc, x))
    }

    pub fn top(&self) -> usize {
        (0..self.size()).fold(0, |acc, x| self.join(acc, x))
    }

    /// First `(a, b, c)` with `a <= c` and `a v (b ^ c) != (a v b) ^ c`.
    pub fn modularity_violations(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let m = self.size();
        (0..m)
            .flat_map(move |a| (0..m).map(move |c| (a, c)))
            .filter(move |&(a, c)| self.leq(a, c))
            .flat_map(move |(a, c)| (0..m).map(move |b| (a, b, c)))
            .filter(move |&(a, b, c)| {
                self.join(a, self.meet(b, c)) != self.meet(self.join(a, b), c)
            })
    }

    /// Triples with `a ^ (b v c) != (a ^ b) v (a ^ c)`.
    pub fn distributivity_violations(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let m = self.size();
        (0..m)
            .flat_map(move |a| (0..m).flat_map(move |b| (0..m).map(move |c| (a, b, c))))
            .filter(move |&(a, b, c)| {
                self.meet(a, self.join(b, c)) != self.join(self.meet(a, b), self.meet(a, c))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawVerdict {
    pub modular: bool,
    pub distributive: bool,
    /// `(a, b, c)` with `a <= c` breaking the modular law.
    pub modular_witness: Option<(usize, usize, usize)>,
    /// `(a, b, c)` breaking the distributive law.
    pub distributive_witness: Option<(usize, usize, usize)>,
}

/// O(m^3) scan of the modular and distributive laws.
pub fn check_laws(lattice: &FiniteLattice) -> LawVerdict {
    let modular_witness = lattice.modularity_violations().next();
    let distributive_witness = lattice.distributivity_violations().next();
    LawVerdict {
        modular: modular_witness.is_none(),
        distributive: distributive_witness.is_none(),
        modular_witness,
        distributive_witness,
    }
}
