use std::fmt;

use super::laws::{as_lattice, FiniteLattice};
use super::poset::FinitePoset;
use crate::arith;

/// Named small lattices used as fixtures and isomorphism targets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReferenceLattice {
    /// `C_k`, the k-element chain.
    Chain(usize),
    /// `T(n)`, positive divisors of `n` under divisibility.
    Divisor(u64),
    /// `B_k`, subsets of a k-element set.
    Boolean(usize),
    /// `M_k`: bottom, k pairwise incomparable atoms, top.
    M(usize),
    /// The pentagon.
    N5,
    /// Componentwise order on the cartesian product.
    Product(Box<ReferenceLattice>, Box<ReferenceLattice>),
}

impl fmt::Display for ReferenceLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReferenceLattice::Chain(k) => write!(f, "C_{k}"),
            ReferenceLattice::Divisor(n) => write!(f, "T({n})"),
            ReferenceLattice::Boolean(k) => write!(f, "B_{k}"),
            ReferenceLattice::M(k) => write!(f, "M_{k}"),
            ReferenceLattice::N5 => write!(f, "N_5"),
            ReferenceLattice::Product(a, b) => write!(f, "{a} x {b}"),
        }
    }
}

pub fn make_reference_lattice(kind: &ReferenceLattice) -> FiniteLattice {
    let poset = reference_poset(kind);
    as_lattice(&poset).expect("reference posets are lattices")
}

fn reference_poset(kind: &ReferenceLattice) -> FinitePoset {
    let (labels, leq): (Vec<String>, Box<dyn Fn(usize, usize) -> bool>) = match kind {
        ReferenceLattice::Chain(k) => {
            assert!(*k >= 1, "empty chain");
            (
                (0..*k).map(|i| i.to_string()).collect(),
                Box::new(|a, b| a <= b),
            )
        }
        ReferenceLattice::Divisor(n) => {
            let divs = arith::divisors(*n);
            let labels = divs.iter().map(|d| d.to_string()).collect();
            (labels, Box::new(move |a, b| divs[b] % divs[a] == 0))
        }
        ReferenceLattice::Boolean(k) => {
            let labels = (0..1usize << k)
                .map(|mask| {
                    let items: Vec<String> = (0..*k)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| (i + 1).to_string())
                        .collect();
                    format!("{{{}}}", items.join(","))
                })
                .collect();
            (labels, Box::new(|a, b| a & b == a))
        }
        ReferenceLattice::M(k) => {
            let top = k + 1;
            let mut labels = vec!["0".to_string()];
            labels.extend((1..=*k).map(|i| format!("a{i}")));
            labels.push("1".to_string());
            (labels, Box::new(move |a, b| a == b || a == 0 || b == top))
        }
        ReferenceLattice::N5 => {
            // 0 < x < y < 1 and 0 < z < 1
            let labels = ["0", "x", "y", "z", "1"].map(String::from).to_vec();
            let rel = [
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 2),
                (1, 4),
                (2, 4),
                (3, 4),
            ];
            (
                labels,
                Box::new(move |a, b| a == b || rel.contains(&(a, b))),
            )
        }
        ReferenceLattice::Product(left, right) => {
            let l = reference_poset(left);
            let r = reference_poset(right);
            let width = r.size();
            let mut labels = Vec::with_capacity(l.size() * width);
            for i in 0..l.size() {
                for j in 0..width {
                    labels.push(format!("({},{})", l.label(i), r.label(j)));
                }
            }
            (
                labels,
                Box::new(move |a, b| l.leq(a / width, b / width) && r.leq(a % width, b % width)),
            )
        }
    };
    let m = labels.len();
    let mut rel = vec![false; m * m];
    for a in 0..m {
        for b in 0..m {
            rel[a * m + b] = leq(a, b);
        }
    }
    FinitePoset::from_validated(labels, rel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_poset, check_laws};

    #[test]
    fn sizes() {
        let size = |k: ReferenceLattice| make_reference_lattice(&k).size();
        assert_eq!(size(ReferenceLattice::Divisor(12)), 6);
        assert_eq!(size(ReferenceLattice::Boolean(3)), 8);
        assert_eq!(size(ReferenceLattice::M(3)), 5);
        assert_eq!(size(ReferenceLattice::N5), 5);
        assert_eq!(
            size(ReferenceLattice::Product(
                Box::new(ReferenceLattice::Divisor(15)),
                Box::new(ReferenceLattice::Chain(2))
            )),
            8
        );
    }

    #[test]
    fn reference_posets_are_valid_orders() {
        let kinds = [
            ReferenceLattice::Chain(4),
            ReferenceLattice::Divisor(60),
            ReferenceLattice::Boolean(3),
            ReferenceLattice::M(4),
            ReferenceLattice::N5,
            ReferenceLattice::Product(
                Box::new(ReferenceLattice::N5),
                Box::new(ReferenceLattice::Chain(3)),
            ),
        ];
        for kind in kinds {
            let p = reference_poset(&kind);
            let labels = p.labels().to_vec();
            let rebuilt = build_poset(labels, |a, b| p.leq(a, b)).unwrap();
            assert_eq!(rebuilt, p, "{kind}");
        }
    }

    #[test]
    fn small_lattices_laws() {
        let n5 = check_laws(&make_reference_lattice(&ReferenceLattice::N5));
        assert!(!n5.modular && !n5.distributive);
        let m3 = check_laws(&make_reference_lattice(&ReferenceLattice::M(3)));
        assert!(m3.modular && !m3.distributive);
        let m2 = check_laws(&make_reference_lattice(&ReferenceLattice::M(2)));
        assert!(m2.modular && m2.distributive);
    }

    #[test]
    fn product_bounds_are_componentwise() {
        let t = make_reference_lattice(&ReferenceLattice::Divisor(12));
        let c = make_reference_lattice(&ReferenceLattice::Chain(3));
        let p = make_reference_lattice(&ReferenceLattice::Product(
            Box::new(ReferenceLattice::Divisor(12)),
            Box::new(ReferenceLattice::Chain(3)),
        ));
        assert_eq!(p.size(), t.size() * c.size());
        let w = c.size();
        for a in 0..p.size() {
            for b in 0..p.size() {
                let (a1, a2, b1, b2) = (a / w, a % w, b / w, b % w);
                assert_eq!(p.join(a, b), t.join(a1, b1) * w + c.join(a2, b2));
                assert_eq!(p.meet(a, b), t.meet(a1, b1) * w + c.meet(a2, b2));
            }
        }
    }
}
