//! The poset of subgroup classes with equal order spectra.
//!
//! Two subgroups share a class when their element-order sets coincide;
//! classes are ordered by inclusion of those sets. Besides the brute-force
//! construction over all subgroups, this module carries the closed forms for
//! `D_n`: every class of `D_n` has spectrum `T(m)` or `T(m) ∪ {2}` for a
//! divisor `m` of `n`, which is what [`DihedralClassKey`] records.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{self, Factorization};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupSpec};
use crate::lattice::{
    as_lattice, build_poset, is_shape, make_reference_lattice, FiniteLattice, FinitePoset,
    ForbiddenShape, NonLattice, Pentad, ReferenceLattice,
};
use crate::subgroup::{
    all_subgroups, dihedral_order_spectrum, dihedral_subgroup_listing, order_spectrum,
    DihedralKind, OrderSpectrum, Subgroup, BRUTE_FORCE_CAP,
};

/// One class `[H]`: its spectrum and the subgroups realizing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumClass {
    pub spectrum: OrderSpectrum,
    pub representatives: Vec<Subgroup>,
}

/// Classes sorted by (cardinality, values) of their spectra, so index 0
/// is the class of the trivial subgroup and the order is a linear extension.
#[derive(Debug, Clone)]
pub struct SpectrumPoset {
    group: GroupSpec,
    classes: Vec<SpectrumClass>,
    poset: FinitePoset,
}

impl SpectrumPoset {
    /// Sorts and validates `classes` and derives the inclusion order.
    pub fn from_classes(group: GroupSpec, mut classes: Vec<SpectrumClass>) -> Result<Self> {
        classes
            .sort_by(|a, b| (a.spectrum.len(), &a.spectrum).cmp(&(b.spectrum.len(), &b.spectrum)));
        for c in &mut classes {
            c.representatives.sort();
        }
        let labels = classes.iter().map(|c| c.spectrum.to_string()).collect();
        let poset = build_poset(labels, |a, b| {
            classes[a].spectrum.is_subset(&classes[b].spectrum)
        })?;
        Ok(SpectrumPoset {
            group,
            classes,
            poset,
        })
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn classes(&self) -> &[SpectrumClass] {
        &self.classes
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn spectrum(&self, class: usize) -> &OrderSpectrum {
        &self.classes[class].spectrum
    }

    pub fn index_of(&self, spectrum: &OrderSpectrum) -> Option<usize> {
        self.classes.iter().position(|c| &c.spectrum == spectrum)
    }

    pub fn lattice(&self) -> std::result::Result<FiniteLattice, NonLattice> {
        as_lattice(&self.poset)
    }

    /// Spectra of every subgroup carried as a representative.
    pub fn subgroup_spectra(&self) -> Vec<OrderSpectrum> {
        self.classes
            .iter()
            .flat_map(|c| c.representatives.iter().map(move |_| c.spectrum.clone()))
            .collect()
    }

    pub fn subgroup_count(&self) -> usize {
        self.classes.iter().map(|c| c.representatives.len()).sum()
    }
}

/// Builds the poset of `g`: brute force within the subgroup-enumeration
/// cap, the closed-form listing for larger dihedral groups.
pub fn build_spectrum_poset(g: &FiniteGroup) -> Result<SpectrumPoset> {
    if g.order() <= BRUTE_FORCE_CAP {
        return brute_force_spectrum_poset(g);
    }
    match g.spec().dihedral_n() {
        Some(n) => Ok(dihedral_spectrum_poset(n)),
        None => Err(Error::BruteForceCap {
            order: g.order(),
            cap: BRUTE_FORCE_CAP,
        }),
    }
}

/// Like [`build_spectrum_poset`], but large dihedral groups never have
/// their table built.
pub fn spectrum_poset_of_spec(spec: &GroupSpec) -> Result<SpectrumPoset> {
    spec.validate()?;
    if let Some(n) = spec.dihedral_n() {
        if 2 * n as u128 > BRUTE_FORCE_CAP as u128 {
            return Ok(dihedral_spectrum_poset(n));
        }
    }
    build_spectrum_poset(&crate::group::construct_group(spec)?)
}

/// Enumerates every subgroup and groups them by exact spectrum equality.
pub fn brute_force_spectrum_poset(g: &FiniteGroup) -> Result<SpectrumPoset> {
    let subgroups = all_subgroups(g)?;
    let mut by_spectrum: BTreeMap<OrderSpectrum, Vec<Subgroup>> = BTreeMap::new();
    for h in subgroups {
        by_spectrum
            .entry(order_spectrum(g, &h))
            .or_default()
            .push(h);
    }
    let classes = by_spectrum
        .into_iter()
        .map(|(spectrum, representatives)| SpectrumClass {
            spectrum,
            representatives,
        })
        .collect();
    SpectrumPoset::from_classes(g.spec().clone(), classes)
}

/// `L(G)` as a poset under inclusion, nodes labelled by subgroup order.
pub fn subgroup_inclusion_poset(subgroups: &[Subgroup]) -> Result<FinitePoset> {
    let labels = subgroups.iter().map(|h| h.order().to_string()).collect();
    build_poset(labels, |a, b| subgroups[a].is_subset_of(&subgroups[b]))
}

/// Class of `D_n` with spectrum `T(m)`, or `T(m) ∪ {2}` when `with_two`.
///
/// Normalized: an even `m` already contains 2, so `with_two` is false for
/// it, and `{1,2}` is always written `(1, true)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DihedralClassKey {
    pub m: u64,
    pub with_two: bool,
}

impl fmt::Display for DihedralClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.with_two)
    }
}

impl DihedralClassKey {
    /// Key of the class `{1}`.
    pub const TRIVIAL: DihedralClassKey = DihedralClassKey {
        m: 1,
        with_two: false,
    };

    /// Key of the class `{1,2}`.
    pub const INVOLUTION: DihedralClassKey = DihedralClassKey {
        m: 1,
        with_two: true,
    };

    /// Normalizes any `(m, with_two)` pair.
    pub fn normalized(m: u64, with_two: bool) -> Self {
        if m == 2 {
            return Self::INVOLUTION;
        }
        DihedralClassKey {
            m,
            with_two: with_two && m % 2 == 1,
        }
    }

    /// Validates an already normalized key against `n`.
    pub fn new(n: u64, m: u64, with_two: bool) -> Result<Self> {
        let err = |reason| Error::InvalidClassKey {
            n,
            m,
            with_two,
            reason,
        };
        if m == 0 || n % m != 0 {
            return Err(err("m must divide n"));
        }
        let key = DihedralClassKey { m, with_two };
        if Self::normalized(m, with_two) != key {
            return Err(err("key is not normalized"));
        }
        Ok(key)
    }

    pub fn validate(&self, n: u64) -> Result<()> {
        Self::new(n, self.m, self.with_two).map(|_| ())
    }

    pub fn contains_two(&self) -> bool {
        self.with_two || self.m % 2 == 0
    }

    pub fn spectrum(&self) -> OrderSpectrum {
        OrderSpectrum::divisors_with_two(self.m, self.with_two)
    }

    /// Key of the class containing a listed subgroup of `D_n`.
    pub fn of_subgroup(n: u64, h: &Subgroup) -> Option<Self> {
        let coord = h.dihedral_coord()?;
        let m = n / coord.d;
        Some(Self::normalized(m, coord.kind == DihedralKind::Mixed))
    }

    /// Recovers the key from a spectrum of the form `T(m)` or `T(m) ∪ {2}`.
    pub fn from_spectrum(spectrum: &OrderSpectrum) -> Option<Self> {
        let m = spectrum.max();
        [false, true]
            .into_iter()
            .map(|t| Self::normalized(m, t))
            .find(|k| &k.spectrum() == spectrum)
    }
}

/// All class keys of `D_n`, in the same order as the classes of
/// [`dihedral_spectrum_poset`].
pub fn dihedral_class_keys(n: u64) -> Vec<DihedralClassKey> {
    let mut keys: Vec<DihedralClassKey> = arith::divisors(n)
        .into_iter()
        .flat_map(|m| {
            let mut ks = vec![DihedralClassKey::normalized(m, false)];
            if m % 2 == 1 {
                ks.push(DihedralClassKey::normalized(m, true));
            }
            ks
        })
        .collect();
    keys.sort_by_cached_key(|k| {
        let s = k.spectrum();
        (s.len(), s)
    });
    keys.dedup();
    keys
}

/// The poset of `D_n` from class keys, with representatives taken from
/// the complete subgroup listing; no multiplication table is built.
pub fn dihedral_spectrum_poset(n: u64) -> SpectrumPoset {
    let keys = dihedral_class_keys(n);
    let mut reps: BTreeMap<DihedralClassKey, Vec<Subgroup>> = BTreeMap::new();
    for h in dihedral_subgroup_listing(n) {
        let key = DihedralClassKey::of_subgroup(n, &h).expect("listed subgroups carry coordinates");
        reps.entry(key).or_default().push(h);
    }
    let classes = keys
        .iter()
        .map(|k| SpectrumClass {
            spectrum: k.spectrum(),
            representatives: reps.remove(k).unwrap_or_default(),
        })
        .collect();
    debug_assert!(reps.is_empty());
    SpectrumPoset::from_classes(GroupSpec::Dihedral(n), classes)
        .expect("spectrum inclusion is a partial order")
}

/// Join and meet of two classes of `D_n`, split on where 2 occurs.
///
/// In exponent coordinates the joins take componentwise minima of the
/// exponents of `d` (maxima of those of `m = n/d`), i.e. lcm on `m`; the
/// meets dually take gcd. Whether 2 survives is decided by the case.
pub fn closed_form_join_meet(
    n: u64,
    a: DihedralClassKey,
    b: DihedralClassKey,
) -> Result<(DihedralClassKey, DihedralClassKey)> {
    a.validate(n)?;
    b.validate(n)?;
    let norm = DihedralClassKey::normalized;
    let (join, meet) = match (a.contains_two(), b.contains_two()) {
        // Neither has 2: both are classes of odd-order rotation subgroups.
        (false, false) => (
            norm(arith::lcm(a.m, b.m), false),
            norm(arith::gcd(a.m, b.m), false),
        ),
        // Exactly one spectrum contains 2.
        (false, true) | (true, false) => {
            let (odd, even) = if a.contains_two() { (b, a) } else { (a, b) };
            if even == DihedralClassKey::INVOLUTION {
                // {1,2}: adjoin a reflection; nothing but e is shared.
                (norm(odd.m, true), DihedralClassKey::TRIVIAL)
            } else {
                // 2 plus a larger rotation part
                (
                    norm(arith::lcm(odd.m, even.m), true),
                    norm(arith::gcd(odd.m, even.m), false),
                )
            }
        }
        // Both contain 2, so both bounds keep it.
        (true, true) => (
            norm(arith::lcm(a.m, b.m), true),
            norm(arith::gcd(a.m, b.m), true),
        ),
    };
    Ok((join, meet))
}

/// Bounds of two spectra computed literally from the subgroup spectra:
/// `X` is the intersection of every spectrum containing both, `Y` the
/// union of every spectrum contained in both. A bound exists iff some
/// subgroup has exactly that spectrum.
pub fn join_meet_via_lemma(
    subgroup_spectra: &[OrderSpectrum],
    a: &OrderSpectrum,
    b: &OrderSpectrum,
) -> (Option<OrderSpectrum>, Option<OrderSpectrum>) {
    let x = subgroup_spectra
        .iter()
        .filter(|s| a.is_subset(s) && b.is_subset(s))
        .fold(None::<OrderSpectrum>, |acc, s| {
            Some(match acc {
                None => s.clone(),
                Some(acc) => acc.intersection(s),
            })
        });
    let y = subgroup_spectra
        .iter()
        .filter(|s| s.is_subset(a) && s.is_subset(b))
        .fold(None::<OrderSpectrum>, |acc, s| {
            Some(match acc {
                None => s.clone(),
                Some(acc) => acc.union(s),
            })
        });
    let realized = |t: Option<OrderSpectrum>| t.filter(|t| subgroup_spectra.contains(t));
    (realized(x), realized(y))
}

/// Class-indexed bounds through [`join_meet_via_lemma`], over the
/// representatives carried by `poset` (all subgroups, when brute-forced).
pub fn spectrum_set_bounds(
    poset: &SpectrumPoset,
    a: usize,
    b: usize,
) -> (Option<usize>, Option<usize>) {
    let spectra = poset.subgroup_spectra();
    spectrum_set_bounds_with(poset, &spectra, a, b)
}

pub fn spectrum_set_bounds_with(
    poset: &SpectrumPoset,
    subgroup_spectra: &[OrderSpectrum],
    a: usize,
    b: usize,
) -> (Option<usize>, Option<usize>) {
    let (x, y) = join_meet_via_lemma(subgroup_spectra, poset.spectrum(a), poset.spectrum(b));
    (
        x.and_then(|s| poset.index_of(&s)),
        y.and_then(|s| poset.index_of(&s)),
    )
}

/// The map from classes of `D_n` (n odd) onto `T(n) × C_2`.
#[derive(Debug, Clone)]
pub struct PhiMap {
    pub n: u64,
    /// `(divisor, upper)` image of each class, indexed like the poset.
    pub images: Vec<(u64, bool)>,
    /// Node of `product` each class maps to.
    pub node_map: Vec<usize>,
    pub product: FiniteLattice,
}

/// Sends `[<r^d>]` to `(n/d, lower)` and `[<r^d, s>]` to `(n/d, upper)`, then
/// checks on every pair that joins go to (lcm, max) and meets to (gcd, min).
pub fn phi_to_divisor_product(n: u64) -> Result<PhiMap> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::Domain(format!(
            "the product decomposition needs odd n, got {n}"
        )));
    }
    let poset = dihedral_spectrum_poset(n);
    let keys = dihedral_class_keys(n);
    let lattice = poset
        .lattice()
        .map_err(|e| Error::NotPreserved(format!("not a lattice at ({}, {})", e.a, e.b)))?;

    let images: Vec<(u64, bool)> = keys.iter().map(|k| (k.m, k.with_two)).collect();
    let product = make_reference_lattice(&ReferenceLattice::Product(
        Box::new(ReferenceLattice::Divisor(n)),
        Box::new(ReferenceLattice::Chain(2)),
    ));
    let divisors = arith::divisors(n);
    let node_of = |(d, upper): (u64, bool)| {
        divisors.binary_search(&d).expect("image divides n") * 2 + upper as usize
    };
    let node_map: Vec<usize> = images.iter().map(|&img| node_of(img)).collect();

    let mut seen = vec![false; product.size()];
    for &v in &node_map {
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::NotPreserved(format!("node {v} hit twice")));
        }
    }
    if node_map.len() != product.size() {
        return Err(Error::NotPreserved(format!(
            "{} classes but {} product nodes",
            node_map.len(),
            product.size()
        )));
    }

    for i in 0..images.len() {
        for j in 0..images.len() {
            let (di, ui) = images[i];
            let (dj, uj) = images[j];
            let want_join = (arith::lcm(di, dj), ui || uj);
            let want_meet = (arith::gcd(di, dj), ui && uj);
            let got_join = images[lattice.join(i, j)];
            let got_meet = images[lattice.meet(i, j)];
            if got_join != want_join || got_meet != want_meet {
                return Err(Error::NotPreserved(format!(
                    "classes {} and {}",
                    poset.spectrum(i),
                    poset.spectrum(j)
                )));
            }
            if node_map[lattice.join(i, j)] != product.join(node_map[i], node_map[j])
                || node_map[lattice.meet(i, j)] != product.meet(node_map[i], node_map[j])
            {
                return Err(Error::NotPreserved(format!(
                    "product tables disagree at {} and {}",
                    poset.spectrum(i),
                    poset.spectrum(j)
                )));
            }
        }
    }

    Ok(PhiMap {
        n,
        images,
        node_map,
        product,
    })
}

/// The pentagon exhibited for `D_n`, as keys `[bottom, low, high, side, top]`.
///
/// With `p` the smallest odd prime dividing `n`:
/// for `4 | n`, `{1,2} < {1,2,p} < {1,2,p,2p} < T(4p)` with side `{1,2,4}`;
/// for `n = 2 * odd` with two odd primes `p < q`,
/// `{1,2} < T(p) ∪ {2} < T(2p) < T(2pq)` with side `T(2q)`.
/// The five classes are re-verified as a sublattice before returning.
pub fn figure_n5_witness(n: u64) -> Option<[DihedralClassKey; 5]> {
    if n == 0 {
        return None;
    }
    let f = Factorization::of(n);
    let norm = DihedralClassKey::normalized;
    let keys = match (f.alpha, f.odd_primes.as_slice()) {
        (a, [(p, _), ..]) if a >= 2 => [
            DihedralClassKey::INVOLUTION,
            norm(*p, true),
            norm(2 * p, false),
            norm(4, false),
            norm(4 * p, false),
        ],
        (1, [(p, _), (q, _), ..]) => [
            DihedralClassKey::INVOLUTION,
            norm(*p, true),
            norm(2 * p, false),
            norm(2 * q, false),
            norm(2 * p * q, false),
        ],
        _ => return None,
    };
    let poset = dihedral_spectrum_poset(n);
    let lattice = poset.lattice().ok()?;
    let mut nodes: Pentad = [0; 5];
    for (slot, key) in nodes.iter_mut().zip(&keys) {
        *slot = poset.index_of(&key.spectrum())?;
    }
    is_shape(&lattice, &nodes, ForbiddenShape::N5).then_some(keys)
}

/// Spectrum of every listed subgroup of `D_n`, computed from member orders.
pub fn dihedral_listing_spectra(n: u64) -> Vec<(Subgroup, OrderSpectrum)> {
    dihedral_subgroup_listing(n)
        .into_iter()
        .map(|h| {
            let s = dihedral_order_spectrum(n, &h);
            (h, s)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::construct_group;

    fn spectra(p: &SpectrumPoset) -> Vec<Vec<u64>> {
        p.classes()
            .iter()
            .map(|c| c.spectrum.values().to_vec())
            .collect()
    }

    fn key(m: u64, with_two: bool) -> DihedralClassKey {
        DihedralClassKey { m, with_two }
    }

    #[test]
    fn cyclic_of_prime_order_is_two_chain() {
        let g = construct_group(&GroupSpec::Cyclic(5)).unwrap();
        let p = build_spectrum_poset(&g).unwrap();
        assert_eq!(spectra(&p), vec![vec![1], vec![1, 5]]);
        assert!(p.poset().is_chain());
    }

    #[test]
    fn d6_brute_force_classes() {
        let g = construct_group(&GroupSpec::Dihedral(6)).unwrap();
        let p = brute_force_spectrum_poset(&g).unwrap();
        assert_eq!(
            spectra(&p),
            vec![
                vec![1],
                vec![1, 2],
                vec![1, 3],
                vec![1, 2, 3],
                vec![1, 2, 3, 6]
            ]
        );
        assert_eq!(p.subgroup_count(), 16);
    }

    #[test]
    fn heisenberg_three_is_two_chain() {
        let g = construct_group(&GroupSpec::Heisenberg(3)).unwrap();
        let p = build_spectrum_poset(&g).unwrap();
        assert_eq!(spectra(&p), vec![vec![1], vec![1, 3]]);
    }

    #[test]
    fn dihedral_class_counts() {
        assert_eq!(dihedral_spectrum_poset(15).len(), 8);
        let p8 = dihedral_spectrum_poset(8);
        assert_eq!(p8.len(), 4);
        assert!(p8.poset().is_chain());
        assert_eq!(dihedral_spectrum_poset(12).len(), 7);
    }

    #[test]
    fn key_normalization() {
        assert_eq!(
            DihedralClassKey::normalized(2, false),
            DihedralClassKey::INVOLUTION
        );
        assert_eq!(DihedralClassKey::normalized(6, true), key(6, false));
        assert_eq!(DihedralClassKey::normalized(3, true), key(3, true));
        assert!(DihedralClassKey::new(12, 5, false).is_err());
        assert!(DihedralClassKey::new(12, 6, true).is_err());
        assert!(DihedralClassKey::new(12, 2, false).is_err());
        assert_eq!(
            DihedralClassKey::from_spectrum(&OrderSpectrum::new([1, 2, 3])),
            Some(key(3, true))
        );
        assert_eq!(
            DihedralClassKey::from_spectrum(&OrderSpectrum::new([1, 3, 5])),
            None
        );
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            closed_form_join_meet(45, key(5, false), key(3, false)).unwrap(),
            (key(15, false), key(1, false))
        );
        assert_eq!(
            closed_form_join_meet(12, key(3, false), key(1, true)).unwrap(),
            (key(3, true), key(1, false))
        );
        assert_eq!(
            closed_form_join_meet(12, key(3, true), key(4, false)).unwrap(),
            (key(12, false), key(1, true))
        );
        assert!(closed_form_join_meet(12, key(5, false), key(1, false)).is_err());
    }

    #[test]
    fn bound_set_examples() {
        let g = construct_group(&GroupSpec::Dihedral(6)).unwrap();
        let p = brute_force_spectrum_poset(&g).unwrap();
        let spectra = p.subgroup_spectra();
        let s = |v: &[u64]| OrderSpectrum::new(v.iter().copied());
        assert_eq!(
            join_meet_via_lemma(&spectra, &s(&[1, 3]), &s(&[1, 2])),
            (Some(s(&[1, 2, 3])), Some(s(&[1])))
        );
        assert_eq!(
            join_meet_via_lemma(&spectra, &s(&[1, 3]), &s(&[1, 3])),
            (Some(s(&[1, 3])), Some(s(&[1, 3])))
        );

        let g = construct_group(&GroupSpec::Dihedral(12)).unwrap();
        let p = brute_force_spectrum_poset(&g).unwrap();
        let spectra = p.subgroup_spectra();
        assert_eq!(
            join_meet_via_lemma(&spectra, &s(&[1, 2, 4]), &s(&[1, 2, 3, 6])),
            (Some(s(&[1, 2, 3, 4, 6, 12])), Some(s(&[1, 2])))
        );
    }

    #[test]
    fn phi_examples() {
        let phi = phi_to_divisor_product(15).unwrap();
        let keys = dihedral_class_keys(15);
        let at = |k| images_of(&phi, &keys, k);
        assert_eq!(at(key(15, false)), (15, false));
        assert_eq!(at(key(1, true)), (1, true));
        assert!(matches!(phi_to_divisor_product(12), Err(Error::Domain(_))));
        assert_eq!(phi_to_divisor_product(9).unwrap().images.len(), 6);
    }

    fn images_of(phi: &PhiMap, keys: &[DihedralClassKey], k: DihedralClassKey) -> (u64, bool) {
        phi.images[keys.iter().position(|&x| x == k).unwrap()]
    }

    #[test]
    fn pentagon_witnesses() {
        let w12 = figure_n5_witness(12).unwrap();
        let mut got: Vec<Vec<u64>> = w12.iter().map(|k| k.spectrum().values().to_vec()).collect();
        got.sort();
        assert_eq!(
            got,
            vec![
                vec![1, 2],
                vec![1, 2, 3],
                vec![1, 2, 3, 4, 6, 12],
                vec![1, 2, 3, 6],
                vec![1, 2, 4],
            ]
        );
        let w30 = figure_n5_witness(30).unwrap();
        assert_eq!(w30[0], DihedralClassKey::INVOLUTION);
        assert_eq!(figure_n5_witness(18), None);
        assert_eq!(figure_n5_witness(15), None);
        assert_eq!(figure_n5_witness(16), None);
    }

    #[test]
    fn listing_spectra_follow_divisors() {
        for n in 1..=30u64 {
            for (h, s) in dihedral_listing_spectra(n) {
                let c = h.dihedral_coord().unwrap();
                let expected =
                    OrderSpectrum::divisors_with_two(n / c.d, c.kind == DihedralKind::Mixed);
                assert_eq!(s, expected, "n = {n}, {c:?}");
            }
        }
    }
}
