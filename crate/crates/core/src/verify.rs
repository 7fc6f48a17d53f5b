//! Closed-form predictions against exhaustive computation.
//!
//! Each [`TheoremId`] pairs a prediction made from arithmetic on the case
//! descriptor alone with a value computed by building the poset. The two
//! sides are compared as short claim strings, so a report line reads like
//! `dihedral:12  predicted "N5"  computed "N5"`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{self, Factorization};
use crate::error::{Error, Result};
use crate::group::{construct_group, FiniteGroup, GroupSpec};
use crate::lattice::{
    are_isomorphic, check_laws, find_forbidden_sublattice, make_reference_lattice, ForbiddenShape,
    ReferenceLattice,
};
use crate::spectrum::{
    build_spectrum_poset, closed_form_join_meet, dihedral_spectrum_poset, figure_n5_witness,
    phi_to_divisor_product, spectrum_set_bounds_with, subgroup_inclusion_poset, DihedralClassKey,
    SpectrumPoset,
};
use crate::subgroup::{all_subgroups, dihedral_subgroup_listing, Subgroup, BRUTE_FORCE_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    ChainIffPGroup,
    C2Classification,
    CyclicIso,
    DihedralLattice,
    ProductIso,
    NoM3,
    N5Characterization,
    ModularClassification,
    ListingVsBruteforce,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::ChainIffPGroup,
        TheoremId::C2Classification,
        TheoremId::CyclicIso,
        TheoremId::DihedralLattice,
        TheoremId::ProductIso,
        TheoremId::NoM3,
        TheoremId::N5Characterization,
        TheoremId::ModularClassification,
        TheoremId::ListingVsBruteforce,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::ChainIffPGroup => "chain-iff-p-group",
            TheoremId::C2Classification => "c2-classification",
            TheoremId::CyclicIso => "cyclic-iso",
            TheoremId::DihedralLattice => "dihedral-lattice",
            TheoremId::ProductIso => "product-iso",
            TheoremId::NoM3 => "no-m3",
            TheoremId::N5Characterization => "n5-characterization",
            TheoremId::ModularClassification => "modular-classification",
            TheoremId::ListingVsBruteforce => "listing-vs-bruteforce",
        }
    }

    /// Default upper end of the `n` range; `None` for atlas-driven checks.
    pub fn default_max_n(self) -> Option<u64> {
        match self {
            TheoremId::ChainIffPGroup | TheoremId::C2Classification => None,
            TheoremId::CyclicIso => Some(200),
            TheoremId::DihedralLattice
            | TheoremId::NoM3
            | TheoremId::N5Characterization
            | TheoremId::ModularClassification => Some(150),
            TheoremId::ProductIso => Some(315),
            TheoremId::ListingVsBruteforce => Some(24),
        }
    }

    /// Whether extra groups (e.g. Cayley tables) can be added to the cases.
    pub fn uses_atlas(self) -> bool {
        self.default_max_n().is_none()
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = TheoremId::ALL.iter().map(|t| t.name()).collect();
                Error::InvalidParameter(format!(
                    "unknown theorem '{s}', expected one of: {}",
                    names.join(", ")
                ))
            })
    }
}

/// Below this lattice size the dihedral lattice check also runs the
/// subgroup-spectrum bound computation.
pub const SPECTRUM_SET_MAX_N: u64 = 100;

/// The convention used whenever `M_2` appears in a report.
pub const M2_CONVENTION: &str =
    "M_2 is taken as a bottom, two incomparable atoms and a top (4 nodes)";

const CHAIN: &str = "chain";
const NOT_CHAIN: &str = "not a chain";
const C2: &str = "C_2";
const NOT_C2: &str = "not C_2";
const N5: &str = "N5";
const NO_N5: &str = "no N5";
const MODULAR: &str = "modular";
const NOT_MODULAR: &str = "not modular";
const NO_M3: &str = "no M3, modular iff distributive";
const CYCLIC_ISO: &str = "tau(n) classes, isomorphic to L(Z_n)";
const DIHEDRAL_LATTICE: &str = "lattice, all bounds agree";
const PRODUCT_ISO: &str = "2 tau(n) classes, isomorphic to T(n) x C_2";
const LISTING: &str = "listing equals brute force, tau(n) + sigma(n) subgroups";

fn claim(flag: bool, yes: &str, no: &str) -> String {
    if flag { yes } else { no }.to_string()
}

fn dihedral_arg(theorem: TheoremId, case: &GroupSpec) -> Result<u64> {
    case.dihedral_n().filter(|&n| n >= 1).ok_or_else(|| {
        Error::Domain(format!(
            "{theorem} is stated for dihedral groups, got {case}"
        ))
    })
}

/// Whether a group of order `order` is a p-group (the trivial group is).
fn is_prime_power_order(order: u128) -> bool {
    order == 1
        || (order <= u64::MAX as u128
            && Factorization::of(order as u64).prime_power_base().is_some())
}

/// The theorem's claim for `case`, from arithmetic on the descriptor only.
///
/// The C_2 trichotomy needs group structure (commutativity, exponent and a
/// subgroup of order p^3), so that one case builds the group; no prediction
/// ever looks at a spectrum poset.
pub fn predict(theorem: TheoremId, case: &GroupSpec) -> Result<String> {
    match theorem {
        TheoremId::ChainIffPGroup => {
            case.validate()?;
            Ok(claim(is_prime_power_order(case.order()?), CHAIN, NOT_CHAIN))
        }
        TheoremId::C2Classification => {
            case.validate()?;
            let g = construct_group(case)?;
            Ok(claim(c2_trichotomy(&g)?, C2, NOT_C2))
        }
        TheoremId::CyclicIso => match case {
            GroupSpec::Cyclic(n) if *n >= 1 => Ok(CYCLIC_ISO.to_string()),
            _ => Err(Error::Domain(format!(
                "{theorem} is stated for cyclic groups, got {case}"
            ))),
        },
        TheoremId::DihedralLattice => {
            dihedral_arg(theorem, case)?;
            Ok(DIHEDRAL_LATTICE.to_string())
        }
        TheoremId::ProductIso => {
            let n = dihedral_arg(theorem, case)?;
            if n % 2 == 0 {
                return Err(Error::Domain(format!("{theorem} needs odd n, got n = {n}")));
            }
            Ok(PRODUCT_ISO.to_string())
        }
        TheoremId::NoM3 => {
            dihedral_arg(theorem, case)?;
            Ok(NO_M3.to_string())
        }
        TheoremId::N5Characterization => {
            let f = Factorization::of(dihedral_arg(theorem, case)?);
            let present =
                (f.alpha >= 2 && f.odd_part() > 1) || (f.alpha == 1 && f.odd_prime_count() >= 2);
            Ok(claim(present, N5, NO_N5))
        }
        TheoremId::ModularClassification => {
            let n = dihedral_arg(theorem, case)?;
            let f = Factorization::of(n);
            let modular =
                f.odd_part() == 1 || f.alpha == 0 || (f.alpha == 1 && f.odd_prime_count() == 1);
            Ok(claim(modular, MODULAR, NOT_MODULAR))
        }
        TheoremId::ListingVsBruteforce => {
            dihedral_arg(theorem, case)?;
            Ok(LISTING.to_string())
        }
    }
}

/// `G` is cyclic of prime order, elementary abelian, or has prime exponent
/// `p` and a non-abelian subgroup of order `p^3` and exponent `p`.
fn c2_trichotomy(g: &FiniteGroup) -> Result<bool> {
    let order = g.order() as u64;
    if order == 1 {
        return Ok(false);
    }
    if arith::is_prime(order) {
        return Ok(true);
    }
    let p = g.exponent();
    if !arith::is_prime(p) {
        return Ok(false);
    }
    if g.is_abelian() {
        return Ok(true);
    }
    let heis = all_subgroups(g)?.into_iter().any(|h| {
        h.order() as u64 == p * p * p
            && !subgroup_is_abelian(g, &h)
            && h.members().iter().all(|&x| p % g.element_order(x) == 0)
    });
    Ok(heis)
}

fn subgroup_is_abelian(g: &FiniteGroup, h: &Subgroup) -> bool {
    let m = h.members();
    m.iter()
        .all(|&a| m.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

/// One verified case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseResult {
    pub case: String,
    pub predicted: String,
    pub computed: String,
    pub pass: bool,
    /// Poset and witnesses, filled in only for failing cases.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub debug: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedCase {
    pub case: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub cases: Vec<CaseResult>,
    pub skipped: Vec<SkippedCase>,
    pub summary: Summary,
    /// True when some case could not be run.
    pub incomplete: bool,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0 && !self.incomplete
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.summary;
        writeln!(
            f,
            "{}: {} cases, {} passed, {} failed, {} skipped",
            self.theorem, s.total, s.passed, s.failed, s.skipped
        )?;
        for note in &self.notes {
            writeln!(f, "  note: {note}")?;
        }
        for c in self.cases.iter().filter(|c| !c.pass) {
            writeln!(
                f,
                "  FAIL {}: predicted \"{}\", computed \"{}\"",
                c.case, c.predicted, c.computed
            )?;
            if let Some(d) = &c.debug {
                for line in d.lines() {
                    writeln!(f, "    {line}")?;
                }
            }
        }
        for sk in &self.skipped {
            writeln!(f, "  skipped {}: {}", sk.case, sk.reason)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Overrides [`TheoremId::default_max_n`].
    pub max_n: Option<u64>,
    /// Groups added to the atlas of the atlas-driven theorems.
    pub extra_groups: Vec<GroupSpec>,
}

/// Groups for the chain and C_2 checks: cyclic up to 32, dihedral up to
/// 16 plus `D_{2^a}` for `a <= 7`, elementary abelian of order at most 64,
/// and the Heisenberg group mod 3.
pub fn default_atlas() -> Vec<GroupSpec> {
    let mut atlas: Vec<GroupSpec> = (1..=32).map(GroupSpec::Cyclic).collect();
    atlas.extend((1..=16).map(GroupSpec::Dihedral));
    atlas.extend([32, 64, 128].map(GroupSpec::Dihedral));
    for p in [2u64, 3, 5, 7] {
        let mut k = 1;
        while p.pow(k) <= 64 {
            atlas.push(GroupSpec::ElementaryAbelian { p, k });
            k += 1;
        }
    }
    atlas.push(GroupSpec::Heisenberg(3));
    atlas
}

/// Cases of `theorem` under `options`, in report order.
pub fn cases_for(theorem: TheoremId, options: &VerifyOptions) -> Vec<GroupSpec> {
    match theorem.default_max_n() {
        None => {
            let mut cases = default_atlas();
            if theorem == TheoremId::C2Classification {
                for g in [
                    GroupSpec::Cyclic(5),
                    GroupSpec::Cyclic(4),
                    GroupSpec::Cyclic(9),
                    GroupSpec::Dihedral(3),
                    GroupSpec::ElementaryAbelian { p: 3, k: 2 },
                ] {
                    if !cases.contains(&g) {
                        cases.push(g);
                    }
                }
            }
            cases.extend(options.extra_groups.iter().cloned());
            cases
        }
        Some(default) => {
            let max = options.max_n.unwrap_or(default);
            match theorem {
                TheoremId::CyclicIso => (1..=max).map(GroupSpec::Cyclic).collect(),
                TheoremId::ProductIso => (1..=max)
                    .filter(|n| n % 2 == 1)
                    .map(GroupSpec::Dihedral)
                    .collect(),
                _ => (1..=max).map(GroupSpec::Dihedral).collect(),
            }
        }
    }
}

/// Runs every case of `theorem`, in parallel, and assembles the report in
/// case order.
pub fn verify(theorem: TheoremId, options: &VerifyOptions) -> VerificationReport {
    let cases = cases_for(theorem, options);
    let outcomes: Vec<(String, Result<CaseResult>)> = cases
        .par_iter()
        .map(|case| (case.to_string(), run_case(theorem, case)))
        .collect();

    let mut results = Vec::new();
    let mut skipped = Vec::new();
    for (case, outcome) in outcomes {
        match outcome {
            Ok(r) => results.push(r),
            Err(e) => skipped.push(SkippedCase {
                case,
                reason: e.to_string(),
            }),
        }
    }
    let passed = results.iter().filter(|r| r.pass).count();
    let summary = Summary {
        total: results.len() + skipped.len(),
        passed,
        failed: results.len() - passed,
        skipped: skipped.len(),
        first_failure: results.iter().find(|r| !r.pass).map(|r| r.case.clone()),
    };
    let mut notes = Vec::new();
    if theorem == TheoremId::ProductIso {
        notes.push(M2_CONVENTION.to_string());
    }
    if theorem == TheoremId::DihedralLattice {
        notes.push(format!(
            "subgroup-spectrum bounds compared for n <= {SPECTRUM_SET_MAX_N}"
        ));
    }
    VerificationReport {
        theorem,
        incomplete: !skipped.is_empty(),
        cases: results,
        skipped,
        summary,
        notes,
    }
}

/// Verifies a single case; errors mean the case could not be run.
pub fn run_case(theorem: TheoremId, case: &GroupSpec) -> Result<CaseResult> {
    let predicted = predict(theorem, case)?;
    let (computed, debug) = compute(theorem, case)?;
    let pass = predicted == computed;
    Ok(CaseResult {
        case: case.to_string(),
        predicted,
        computed,
        pass,
        debug: if pass { None } else { Some(debug) },
    })
}

fn dihedral_poset(n: u64) -> Result<SpectrumPoset> {
    build_spectrum_poset(&construct_group(&GroupSpec::Dihedral(n))?)
}

/// Human-readable dump of a poset for failure reports.
pub fn describe_poset(p: &SpectrumPoset) -> String {
    let mut out = String::new();
    for (i, c) in p.classes().iter().enumerate() {
        out.push_str(&format!(
            "class {i}: {} ({} subgroups)\n",
            c.spectrum,
            c.representatives.len()
        ));
    }
    let edges: Vec<String> = p
        .poset()
        .hasse()
        .iter()
        .map(|(a, b)| format!("{a}->{b}"))
        .collect();
    out.push_str(&format!("covers: {}\n", edges.join(" ")));
    out
}

fn compute(theorem: TheoremId, case: &GroupSpec) -> Result<(String, String)> {
    match theorem {
        TheoremId::ChainIffPGroup => {
            let p = build_spectrum_poset(&construct_group(case)?)?;
            Ok((
                claim(p.poset().is_chain(), CHAIN, NOT_CHAIN),
                describe_poset(&p),
            ))
        }
        TheoremId::C2Classification => {
            let p = build_spectrum_poset(&construct_group(case)?)?;
            let c2 = make_reference_lattice(&ReferenceLattice::Chain(2));
            let iso = are_isomorphic(p.poset(), c2.poset())?.is_some();
            Ok((claim(iso, C2, NOT_C2), describe_poset(&p)))
        }
        TheoremId::CyclicIso => compute_cyclic_iso(case),
        TheoremId::DihedralLattice => compute_dihedral_lattice(dihedral_arg(theorem, case)?),
        TheoremId::ProductIso => compute_product_iso(dihedral_arg(theorem, case)?),
        TheoremId::NoM3 => {
            let p = dihedral_poset(dihedral_arg(theorem, case)?)?;
            let Ok(l) = p.lattice() else {
                return Ok(("not a lattice".into(), describe_poset(&p)));
            };
            let m3 = find_forbidden_sublattice(&l, ForbiddenShape::M3);
            let laws = check_laws(&l);
            let computed = match m3 {
                Some(_) => "M3 found".to_string(),
                None if laws.modular != laws.distributive => {
                    "modular but not distributive without M3".to_string()
                }
                None => NO_M3.to_string(),
            };
            Ok((
                computed,
                format!("{}M3: {m3:?}\nlaws: {laws:?}", describe_poset(&p)),
            ))
        }
        TheoremId::N5Characterization => {
            let n = dihedral_arg(theorem, case)?;
            let p = dihedral_poset(n)?;
            let Ok(l) = p.lattice() else {
                return Ok(("not a lattice".into(), describe_poset(&p)));
            };
            let found = find_forbidden_sublattice(&l, ForbiddenShape::N5);
            let pentagon = figure_n5_witness(n);
            let computed = if found.is_some() != pentagon.is_some() {
                "search and pentagon witness disagree".to_string()
            } else {
                claim(found.is_some(), N5, NO_N5)
            };
            Ok((
                computed,
                format!(
                    "{}search: {found:?}\npentagon: {pentagon:?}",
                    describe_poset(&p)
                ),
            ))
        }
        TheoremId::ModularClassification => {
            let p = dihedral_poset(dihedral_arg(theorem, case)?)?;
            let Ok(l) = p.lattice() else {
                return Ok(("not a lattice".into(), describe_poset(&p)));
            };
            let laws = check_laws(&l);
            Ok((
                claim(laws.modular, MODULAR, NOT_MODULAR),
                format!("{}laws: {laws:?}", describe_poset(&p)),
            ))
        }
        TheoremId::ListingVsBruteforce => compute_listing(dihedral_arg(theorem, case)?),
    }
}

fn compute_cyclic_iso(case: &GroupSpec) -> Result<(String, String)> {
    let GroupSpec::Cyclic(n) = *case else {
        return Err(Error::Domain(format!(
            "expected a cyclic group, got {case}"
        )));
    };
    let g = construct_group(case)?;
    let p = build_spectrum_poset(&g)?;
    let subgroups = all_subgroups(&g)?;
    let lz = subgroup_inclusion_poset(&subgroups)?;
    let iso = are_isomorphic(p.poset(), &lz)?;
    let computed = if p.len() as u64 != arith::tau(n) {
        format!("{} classes", p.len())
    } else if iso.is_none() {
        "not isomorphic to L(Z_n)".to_string()
    } else {
        CYCLIC_ISO.to_string()
    };
    Ok((computed, describe_poset(&p)))
}

fn compute_dihedral_lattice(n: u64) -> Result<(String, String)> {
    let p = dihedral_poset(n)?;
    let mut debug = describe_poset(&p);
    let Ok(l) = p.lattice() else {
        return Ok(("not a lattice".into(), debug));
    };
    let brute_forced = 2 * n as usize <= BRUTE_FORCE_CAP;
    if brute_forced {
        let closed = dihedral_spectrum_poset(n);
        let a: Vec<_> = p.classes().iter().map(|c| &c.spectrum).collect();
        let b: Vec<_> = closed.classes().iter().map(|c| &c.spectrum).collect();
        if a != b || p.poset().hasse() != closed.poset().hasse() {
            debug.push_str(&format!("closed form:\n{}", describe_poset(&closed)));
            return Ok(("closed-form classes differ".into(), debug));
        }
    }
    let keys: Vec<DihedralClassKey> = p
        .classes()
        .iter()
        .map(|c| DihedralClassKey::from_spectrum(&c.spectrum))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Domain(format!("D_{n} has a class with no key")))?;
    let spectra = p.subgroup_spectra();
    let with_sets = brute_forced && n <= SPECTRUM_SET_MAX_N;
    for i in 0..p.len() {
        for j in 0..p.len() {
            let (join, meet) = (l.join(i, j), l.meet(i, j));
            let (cj, cm) = closed_form_join_meet(n, keys[i], keys[j])?;
            if cj != keys[join] || cm != keys[meet] {
                debug.push_str(&format!(
                    "pair {i},{j}: bounds ({}, {}), closed form ({cj}, {cm})\n",
                    keys[join], keys[meet]
                ));
                return Ok(("closed form disagrees".into(), debug));
            }
            if with_sets {
                let sets = spectrum_set_bounds_with(&p, &spectra, i, j);
                if sets != (Some(join), Some(meet)) {
                    debug.push_str(&format!(
                        "pair {i},{j}: bounds ({join}, {meet}), subgroup spectra {sets:?}\n"
                    ));
                    return Ok(("subgroup-spectrum bounds disagree".into(), debug));
                }
            }
        }
    }
    Ok((DIHEDRAL_LATTICE.to_string(), debug))
}

fn compute_product_iso(n: u64) -> Result<(String, String)> {
    let p = dihedral_spectrum_poset(n);
    let debug = describe_poset(&p);
    let phi = match phi_to_divisor_product(n) {
        Ok(phi) => phi,
        Err(Error::NotPreserved(why)) => return Ok((format!("map fails: {why}"), debug)),
        Err(e) => return Err(e),
    };
    if p.len() as u64 != 2 * arith::tau(n) {
        return Ok((format!("{} classes", p.len()), debug));
    }
    if are_isomorphic(p.poset(), phi.product.poset())?.is_none() {
        return Ok(("not isomorphic to T(n) x C_2".into(), debug));
    }
    Ok((PRODUCT_ISO.to_string(), debug))
}

fn compute_listing(n: u64) -> Result<(String, String)> {
    let listing = dihedral_subgroup_listing(n);
    let g = construct_group(&GroupSpec::Dihedral(n))?;
    let brute = all_subgroups(&g)?;
    let a: BTreeSet<&[usize]> = listing.iter().map(|h| h.members()).collect();
    let b: BTreeSet<&[usize]> = brute.iter().map(|h| h.members()).collect();
    let debug = format!(
        "listing: {} subgroups ({} distinct), brute force: {}",
        listing.len(),
        a.len(),
        brute.len()
    );
    let expected = (arith::tau(n) + arith::sigma(n)) as usize;
    let computed = if a != b {
        "sets differ".to_string()
    } else if listing.len() != a.len() {
        "listing repeats a subgroup".to_string()
    } else if listing.len() != expected {
        format!("{} subgroups", listing.len())
    } else {
        LISTING.to_string()
    };
    Ok((computed, debug))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
            assert_eq!(
                serde_json::to_string(&t).unwrap(),
                format!("\"{}\"", t.name())
            );
        }
        assert!("theorem-2.9".parse::<TheoremId>().is_err());
    }

    #[test]
    fn prediction_examples() {
        let d = GroupSpec::Dihedral;
        assert_eq!(
            predict(TheoremId::ModularClassification, &d(18)).unwrap(),
            MODULAR
        );
        assert_eq!(
            predict(TheoremId::ModularClassification, &d(12)).unwrap(),
            NOT_MODULAR
        );
        assert_eq!(predict(TheoremId::N5Characterization, &d(12)).unwrap(), N5);
        assert_eq!(
            predict(TheoremId::N5Characterization, &d(18)).unwrap(),
            NO_N5
        );
        assert_eq!(
            predict(TheoremId::ChainIffPGroup, &d(6)).unwrap(),
            NOT_CHAIN
        );
        assert_eq!(
            predict(TheoremId::ChainIffPGroup, &GroupSpec::Cyclic(1)).unwrap(),
            CHAIN
        );
        assert!(matches!(
            predict(TheoremId::ProductIso, &d(12)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            predict(TheoremId::CyclicIso, &d(5)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn c2_predictions() {
        let c2 = |g: GroupSpec| predict(TheoremId::C2Classification, &g).unwrap() == C2;
        assert!(c2(GroupSpec::Cyclic(5)));
        assert!(c2(GroupSpec::ElementaryAbelian { p: 3, k: 2 }));
        assert!(c2(GroupSpec::Heisenberg(3)));
        assert!(!c2(GroupSpec::Cyclic(4)));
        assert!(!c2(GroupSpec::Cyclic(1)));
        assert!(!c2(GroupSpec::Dihedral(3)));
    }

    #[test]
    fn c2_case_of_cyclic_four() {
        let r = run_case(TheoremId::C2Classification, &GroupSpec::Cyclic(4)).unwrap();
        assert!(r.pass);
        assert_eq!(r.computed, NOT_C2);
    }

    #[test]
    fn small_ranges_pass() {
        let opts = VerifyOptions {
            max_n: Some(20),
            ..Default::default()
        };
        for t in TheoremId::ALL.into_iter().filter(|t| !t.uses_atlas()) {
            let report = verify(t, &opts);
            assert!(report.all_pass(), "{report}");
        }
    }

    #[test]
    fn cap_overflow_is_reported_as_skip() {
        let opts = VerifyOptions {
            max_n: Some(201),
            ..Default::default()
        };
        let r = run_case(TheoremId::CyclicIso, &GroupSpec::Cyclic(201));
        assert!(matches!(r, Err(Error::BruteForceCap { .. })));
        let cases = cases_for(TheoremId::CyclicIso, &opts);
        assert_eq!(cases.len(), 201);
    }

    #[test]
    fn failing_cases_carry_debug() {
        let r = CaseResult {
            case: "x".into(),
            predicted: "a".into(),
            computed: "b".into(),
            pass: false,
            debug: Some("class 0: {1}".into()),
        };
        let report = VerificationReport {
            theorem: TheoremId::NoM3,
            cases: vec![r],
            skipped: vec![],
            summary: Summary {
                total: 1,
                passed: 0,
                failed: 1,
                skipped: 0,
                first_failure: Some("x".into()),
            },
            incomplete: false,
            notes: vec![],
        };
        assert!(!report.all_pass());
        assert!(report.to_string().contains("class 0: {1}"));
    }
}
