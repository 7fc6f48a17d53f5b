//! Extraction of pentagon and diamond sublattices.

use serde::{Deserialize, Serialize};

use super::laws::FiniteLattice;
use super::reference::{make_reference_lattice, ReferenceLattice};

/// Lattices up to this size are also searched exhaustively over 5-subsets.
pub const EXHAUSTIVE_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ForbiddenShape {
    N5,
    M3,
}

impl ForbiddenShape {
    fn reference(self) -> FiniteLattice {
        match self {
            ForbiddenShape::N5 => make_reference_lattice(&ReferenceLattice::N5),
            ForbiddenShape::M3 => make_reference_lattice(&ReferenceLattice::M(3)),
        }
    }
}

/// Five nodes of a sublattice, listed in the reference order of the shape:
/// N5 as `[bottom, low, high, side, top]` (low < high), M3 as
/// `[bottom, a, b, c, top]`.
pub type Pentad = [usize; 5];

/// True iff `nodes`, in reference order, span a sublattice of `lattice`
/// isomorphic to `shape`: an injective join/meet homomorphism.
pub fn is_shape(lattice: &FiniteLattice, nodes: &Pentad, shape: ForbiddenShape) -> bool {
    nodes.iter().all(|&v| v < lattice.size())
        && partial_match(lattice, nodes, 5, &shape.reference())
}

/// Checks the first `len` nodes: distinct, and every join/meet among them
/// that the reference maps inside the prefix agrees.
fn partial_match(
    lattice: &FiniteLattice,
    nodes: &Pentad,
    len: usize,
    reference: &FiniteLattice,
) -> bool {
    for i in 0..len {
        if nodes[..i].contains(&nodes[i]) {
            return false;
        }
    }
    (0..len).all(|i| {
        (0..len).all(|j| {
            let (rj, rm) = (reference.join(i, j), reference.meet(i, j));
            (rj >= len || lattice.join(nodes[i], nodes[j]) == nodes[rj])
                && (rm >= len || lattice.meet(nodes[i], nodes[j]) == nodes[rm])
        })
    })
}

/// Finds a sublattice isomorphic to `shape`, or `None` if there is none.
///
/// N5 is built from a modular-law violation `(a, b, c)`, `a <= c`:
/// `{b ^ c, a v (b ^ c), (a v b) ^ c, b, a v b}`. M3 is built from a
/// distributive-law violation by the median construction, falling back to a
/// complete scan over incomparable pairs. Every candidate is re-verified.
pub fn find_forbidden_sublattice(lattice: &FiniteLattice, shape: ForbiddenShape) -> Option<Pentad> {
    let found = match shape {
        ForbiddenShape::N5 => pentagon_from_violations(lattice),
        ForbiddenShape::M3 => diamond_from_violations(lattice).or_else(|| diamond_scan(lattice)),
    };
    if found.is_none() && lattice.size() <= EXHAUSTIVE_LIMIT {
        return exhaustive_forbidden_search(lattice, shape);
    }
    found
}

fn pentagon_from_violations(l: &FiniteLattice) -> Option<Pentad> {
    l.modularity_violations().find_map(|(a, b, c)| {
        let bottom = l.meet(b, c);
        let low = l.join(a, bottom);
        let high = l.meet(l.join(a, b), c);
        let top = l.join(a, b);
        let nodes = [bottom, low, high, b, top];
        is_shape(l, &nodes, ForbiddenShape::N5).then_some(nodes)
    })
}

fn diamond_from_violations(l: &FiniteLattice) -> Option<Pentad> {
    l.distributivity_violations().find_map(|(a, b, c)| {
        let median_low = l.join(l.join(l.meet(a, b), l.meet(b, c)), l.meet(c, a));
        let median_high = l.meet(l.meet(l.join(a, b), l.join(b, c)), l.join(c, a));
        let project = |x| l.join(l.meet(x, median_high), median_low);
        let nodes = [median_low, project(a), project(b), project(c), median_high];
        is_shape(l, &nodes, ForbiddenShape::M3).then_some(nodes)
    })
}

/// Complete O(m^3) search: every diamond is `{x ^ y, x, y, z, x v y}` for
/// some incomparable `x`, `y` and a third `z` with the same pairwise bounds.
fn diamond_scan(l: &FiniteLattice) -> Option<Pentad> {
    let m = l.size();
    for x in 0..m {
        for y in x + 1..m {
            if l.poset().comparable(x, y) {
                continue;
            }
            let (lo, hi) = (l.meet(x, y), l.join(x, y));
            let third = (y + 1..m).find(|&z| {
                l.meet(x, z) == lo && l.meet(y, z) == lo && l.join(x, z) == hi && l.join(y, z) == hi
            });
            if let Some(z) = third {
                let nodes = [lo, x, y, z, hi];
                if is_shape(l, &nodes, ForbiddenShape::M3) {
                    return Some(nodes);
                }
            }
        }
    }
    None
}

/// Tries every 5-subset in every arrangement. O(m^5); small lattices only.
pub fn exhaustive_forbidden_search(l: &FiniteLattice, shape: ForbiddenShape) -> Option<Pentad> {
    let reference = shape.reference();
    let mut nodes = [0usize; 5];
    fn rec(l: &FiniteLattice, reference: &FiniteLattice, depth: usize, nodes: &mut Pentad) -> bool {
        if depth == 5 {
            return true;
        }
        for v in 0..l.size() {
            nodes[depth] = v;
            if partial_match(l, nodes, depth + 1, reference) && rec(l, reference, depth + 1, nodes)
            {
                return true;
            }
        }
        false
    }
    rec(l, &reference, 0, &mut nodes).then_some(nodes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::check_laws;

    fn lattice(kind: ReferenceLattice) -> FiniteLattice {
        make_reference_lattice(&kind)
    }

    #[test]
    fn pentagon_finds_itself() {
        let n5 = lattice(ReferenceLattice::N5);
        let found = find_forbidden_sublattice(&n5, ForbiddenShape::N5).unwrap();
        let mut sorted = found;
        sorted.sort();
        assert_eq!(sorted, [0, 1, 2, 3, 4]);
        assert_eq!(find_forbidden_sublattice(&n5, ForbiddenShape::M3), None);
    }

    #[test]
    fn diamond_finds_itself() {
        let m3 = lattice(ReferenceLattice::M(3));
        assert!(find_forbidden_sublattice(&m3, ForbiddenShape::M3).is_some());
        assert_eq!(find_forbidden_sublattice(&m3, ForbiddenShape::N5), None);
    }

    #[test]
    fn distributive_lattices_have_neither() {
        for n in [12u64, 30, 60, 360] {
            let t = lattice(ReferenceLattice::Divisor(n));
            assert_eq!(find_forbidden_sublattice(&t, ForbiddenShape::N5), None);
            assert_eq!(find_forbidden_sublattice(&t, ForbiddenShape::M3), None);
        }
    }

    #[test]
    fn large_diamond_found_without_exhaustive_search() {
        // M_4 x C_3 has 18 nodes: modular, not distributive.
        let l = lattice(ReferenceLattice::Product(
            Box::new(ReferenceLattice::M(4)),
            Box::new(ReferenceLattice::Chain(3)),
        ));
        assert!(l.size() > EXHAUSTIVE_LIMIT);
        let v = check_laws(&l);
        assert!(v.modular && !v.distributive);
        let d = find_forbidden_sublattice(&l, ForbiddenShape::M3).unwrap();
        assert!(is_shape(&l, &d, ForbiddenShape::M3));
        assert_eq!(find_forbidden_sublattice(&l, ForbiddenShape::N5), None);
    }

    #[test]
    fn shape_check_rejects_wrong_order() {
        let n5 = lattice(ReferenceLattice::N5);
        assert!(is_shape(&n5, &[0, 1, 2, 3, 4], ForbiddenShape::N5));
        assert!(!is_shape(&n5, &[0, 2, 1, 3, 4], ForbiddenShape::N5));
        assert!(!is_shape(&n5, &[0, 1, 1, 3, 4], ForbiddenShape::N5));
    }
}
