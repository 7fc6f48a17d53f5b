use super::poset::FinitePoset;
use crate::error::{Error, Result};

/// Largest poset accepted by [`are_isomorphic`].
pub const ISOMORPHISM_CAP: usize = 256;

/// Per-node data preserved by every order isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct NodeInvariant {
    height: usize,
    down: usize,
    up: usize,
    lower_covers: usize,
    upper_covers: usize,
}

fn invariants(p: &FinitePoset) -> Vec<NodeInvariant> {
    let heights = p.heights();
    (0..p.size())
        .map(|a| NodeInvariant {
            height: heights[a],
            down: p.down_set_size(a),
            up: p.up_set_size(a),
            lower_covers: p.hasse().iter().filter(|&&(_, hi)| hi == a).count(),
            upper_covers: p.hasse().iter().filter(|&&(lo, _)| lo == a).count(),
        })
        .collect()
}

/// An order isomorphism `map[i]` from `p` onto `q`, if one exists.
///
/// Backtracking over nodes of `p` in order of increasing height, with
/// candidates restricted to nodes of `q` carrying the same invariant. The
/// mapping is re-checked in both directions before it is returned.
pub fn are_isomorphic(p: &FinitePoset, q: &FinitePoset) -> Result<Option<Vec<usize>>> {
    for size in [p.size(), q.size()] {
        if size > ISOMORPHISM_CAP {
            return Err(Error::IsomorphismCap {
                size,
                cap: ISOMORPHISM_CAP,
            });
        }
    }
    if p.size() != q.size() || p.hasse().len() != q.hasse().len() {
        return Ok(None);
    }
    let inv_p = invariants(p);
    let inv_q = invariants(q);
    let mut sorted_p = inv_p.clone();
    let mut sorted_q = inv_q.clone();
    sorted_p.sort();
    sorted_q.sort();
    if sorted_p != sorted_q {
        return Ok(None);
    }

    let m = p.size();
    let candidates: Vec<Vec<usize>> = (0..m)
        .map(|a| (0..m).filter(|&b| inv_q[b] == inv_p[a]).collect())
        .collect();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&a| (inv_p[a].height, candidates[a].len(), a));

    let mut map = vec![usize::MAX; m];
    let mut used = vec![false; m];
    if !extend(p, q, &order, 0, &candidates, &mut map, &mut used) {
        return Ok(None);
    }
    if !is_order_isomorphism(p, q, &map) {
        return Ok(None);
    }
    Ok(Some(map))
}

fn extend(
    p: &FinitePoset,
    q: &FinitePoset,
    order: &[usize],
    depth: usize,
    candidates: &[Vec<usize>],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&a) = order.get(depth) else {
        return true;
    };
    for &b in &candidates[a] {
        if used[b] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&x| {
            let y = map[x];
            p.leq(x, a) == q.leq(y, b) && p.leq(a, x) == q.leq(b, y)
        });
        if !consistent {
            continue;
        }
        map[a] = b;
        used[b] = true;
        if extend(p, q, order, depth + 1, candidates, map, used) {
            return true;
        }
        used[b] = false;
        map[a] = usize::MAX;
    }
    false
}

/// `map` is a bijection with `a <= b` iff `map[a] <= map[b]`.
pub fn is_order_isomorphism(p: &FinitePoset, q: &FinitePoset, map: &[usize]) -> bool {
    let m = p.size();
    if q.size() != m || map.len() != m {
        return false;
    }
    let mut seen = vec![false; m];
    for &b in map {
        if b >= m || std::mem::replace(&mut seen[b], true) {
            return false;
        }
    }
    (0..m).all(|a| (0..m).all(|b| p.leq(a, b) == q.leq(map[a], map[b])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_poset, make_reference_lattice, ReferenceLattice};

    fn poset(kind: ReferenceLattice) -> FinitePoset {
        make_reference_lattice(&kind).poset().clone()
    }

    #[test]
    fn identical_posets() {
        let t = poset(ReferenceLattice::Divisor(30));
        let map = are_isomorphic(&t, &t).unwrap().unwrap();
        assert!(is_order_isomorphism(&t, &t, &map));
    }

    #[test]
    fn chains_of_equal_length() {
        let c3 = poset(ReferenceLattice::Chain(3));
        let t4 = poset(ReferenceLattice::Divisor(4));
        assert_eq!(are_isomorphic(&c3, &t4).unwrap(), Some(vec![0, 1, 2]));
    }

    #[test]
    fn non_isomorphic() {
        let t6 = poset(ReferenceLattice::Divisor(6));
        let c4 = poset(ReferenceLattice::Chain(4));
        assert_eq!(are_isomorphic(&t6, &c4).unwrap(), None);
        let n5 = poset(ReferenceLattice::N5);
        let m3 = poset(ReferenceLattice::M(3));
        assert_eq!(are_isomorphic(&n5, &m3).unwrap(), None);
    }

    #[test]
    fn boolean_cube_is_divisor_lattice_of_squarefree() {
        let b3 = poset(ReferenceLattice::Boolean(3));
        let t30 = poset(ReferenceLattice::Divisor(30));
        let map = are_isomorphic(&b3, &t30).unwrap().unwrap();
        assert!(is_order_isomorphism(&b3, &t30, &map));
    }

    #[test]
    fn relabelled_poset_is_found() {
        let t = poset(ReferenceLattice::Divisor(72));
        let m = t.size();
        // reverse the node numbering
        let labels = (0..m).map(|i| t.label(m - 1 - i).to_string()).collect();
        let r = build_poset(labels, |a, b| t.leq(m - 1 - a, m - 1 - b)).unwrap();
        let map = are_isomorphic(&t, &r).unwrap().unwrap();
        assert!(is_order_isomorphism(&t, &r, &map));
    }

    #[test]
    fn cap_is_enforced() {
        let big = poset(ReferenceLattice::Chain(ISOMORPHISM_CAP + 1));
        assert!(matches!(
            are_isomorphic(&big, &big),
            Err(Error::IsomorphismCap { .. })
        ));
    }
}
