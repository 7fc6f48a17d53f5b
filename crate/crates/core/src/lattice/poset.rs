use crate::error::{Error, Result};

/// A finite partial order on nodes `0..m`, with its Hasse cover edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    leq: Vec<bool>,
    hasse: Vec<(usize, usize)>,
}

/// Validates `leq` as a partial order on `labels` and computes covers.
pub fn build_poset(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<FinitePoset> {
    let m = labels.len();
    let mut rel = vec![false; m * m];
    for a in 0..m {
        for b in 0..m {
            rel[a * m + b] = leq(a, b);
        }
    }
    for a in 0..m {
        if !rel[a * m + a] {
            return Err(Error::NotReflexive(a));
        }
        for b in a + 1..m {
            if rel[a * m + b] && rel[b * m + a] {
                return Err(Error::NotAntisymmetric(a, b));
            }
        }
    }
    for a in 0..m {
        for b in 0..m {
            if a == b || !rel[a * m + b] {
                continue;
            }
            for c in 0..m {
                if rel[b * m + c] && !rel[a * m + c] {
                    return Err(Error::NotTransitive(a, b, c));
                }
            }
        }
    }
    Ok(FinitePoset::from_validated(labels, rel))
}

impl FinitePoset {
    pub(crate) fn from_validated(labels: Vec<String>, leq: Vec<bool>) -> Self {
        let m = labels.len();
        let mut hasse = Vec::new();
        for a in 0..m {
            for b in 0..m {
                if a == b || !leq[a * m + b] {
                    continue;
                }
                let covered = (0..m).any(|z| z != a && z != b && leq[a * m + z] && leq[z * m + b]);
                if !covered {
                    hasse.push((a, b));
                }
            }
        }
        FinitePoset { labels, leq, hasse }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size() + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// Cover edges `(lower, upper)`, sorted.
    pub fn hasse(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    /// Least upper bound and greatest lower bound of `a` and `b`, if they exist.
    pub fn bounds(&self, a: usize, b: usize) -> (Option<usize>, Option<usize>) {
        let m = self.size();
        let upper: Vec<usize> = (0..m)
            .filter(|&x| self.leq(a, x) && self.leq(b, x))
            .collect();
        let lower: Vec<usize> = (0..m)
            .filter(|&x| self.leq(x, a) && self.leq(x, b))
            .collect();
        let lub = upper
            .iter()
            .copied()
            .find(|&x| upper.iter().all(|&y| self.leq(x, y)));
        let glb = lower
            .iter()
            .copied()
            .find(|&x| lower.iter().all(|&y| self.leq(y, x)));
        (lub, glb)
    }

    /// True iff every pair is comparable.
    pub fn is_chain(&self) -> bool {
        let m = self.size();
        (0..m).all(|a| (a + 1..m).all(|b| self.comparable(a, b)))
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        let m = self.size();
        (0..m).filter(|&a| (0..m).all(|b| !self.lt(b, a))).collect()
    }

    /// Length of the longest chain ending at each node.
    pub fn heights(&self) -> Vec<usize> {
        let m = self.size();
        let mut order: Vec<usize> = (0..m).collect();
        // the number of elements below is a linear extension
        order.sort_by_key(|&a| (0..m).filter(|&b| self.leq(b, a)).count());
        let mut height = vec![0; m];
        for &a in &order {
            height[a] = self
                .hasse
                .iter()
                .filter(|&&(_, hi)| hi == a)
                .map(|&(lo, _)| height[lo] + 1)
                .max()
                .unwrap_or(0);
        }
        height
    }

    pub fn down_set_size(&self, a: usize) -> usize {
        (0..self.size()).filter(|&b| self.leq(b, a)).count()
    }

    pub fn up_set_size(&self, a: usize) -> usize {
        (0..self.size()).filter(|&b| self.leq(a, b)).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn divisor_poset(n: u64) -> FinitePoset {
        let divs = crate::arith::divisors(n);
        let labels = divs.iter().map(|d| d.to_string()).collect();
        build_poset(labels, |a, b| divs[b] % divs[a] == 0).unwrap()
    }

    #[test]
    fn single_node() {
        let p = build_poset(vec!["x".into()], |_, _| true).unwrap();
        assert_eq!(p.size(), 1);
        assert!(p.is_chain());
        assert!(p.hasse().is_empty());
    }

    #[test]
    fn divisors_of_six_form_a_diamond() {
        let p = divisor_poset(6);
        // 1-2, 1-3, 2-6, 3-6 on nodes [1,2,3,6]
        assert_eq!(p.hasse(), &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert!(!p.is_chain());
    }

    #[test]
    fn rejects_non_orders() {
        let two_cycle = build_poset(vec!["a".into(), "b".into()], |_, _| true);
        assert_eq!(two_cycle, Err(Error::NotAntisymmetric(0, 1)));
        let irreflexive = build_poset(vec!["a".into()], |_, _| false);
        assert_eq!(irreflexive, Err(Error::NotReflexive(0)));
        // 0 <= 1 <= 2 but not 0 <= 2
        let rel = [(0, 1), (1, 2)];
        let intransitive = build_poset(vec!["a".into(), "b".into(), "c".into()], |a, b| {
            a == b || rel.contains(&(a, b))
        });
        assert_eq!(intransitive, Err(Error::NotTransitive(0, 1, 2)));
    }

    #[test]
    fn bounds_in_divisor_poset() {
        let p = divisor_poset(12);
        // nodes: 1 2 3 4 6 12
        assert_eq!(p.bounds(3, 4), (Some(5), Some(1)));
        assert_eq!(p.bounds(2, 2), (Some(2), Some(2)));
        let antichain = build_poset(vec!["a".into(), "b".into()], |a, b| a == b).unwrap();
        assert_eq!(antichain.bounds(0, 1), (None, None));
    }

    #[test]
    fn heights_of_divisor_poset() {
        let p = divisor_poset(12);
        assert_eq!(p.heights(), vec![0, 1, 1, 2, 2, 3]);
    }
}
