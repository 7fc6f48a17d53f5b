//! Finite groups as explicit multiplication tables.
//!
//! Elements are dense ids `0..N`. For the dihedral group `D_n` the rotations
//! `r^i` come first (id `i`) and the reflections `r^i s` follow (id `n + i`),
//! so subgroup member lists are stable across runs and crates.

mod cayley;

use std::fmt;
use std::sync::Arc;

pub use cayley::{format_cayley_table, load_cayley_file, parse_cayley_table, CayleySource};

use crate::arith::{self, Factorization};
use crate::error::{CayleyViolation, Error, Result};

/// Default upper bound on the order of a constructed group.
pub const DEFAULT_ORDER_CAP: usize = 4096;

/// How a group is built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    Dihedral(u64),
    Heisenberg(u64),
    ElementaryAbelian { p: u64, k: u32 },
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    Cayley(CayleySource),
}

impl GroupSpec {
    /// Order of the group this spec describes, without building it.
    pub fn order(&self) -> Result<u128> {
        let order = match self {
            GroupSpec::Cyclic(n) => *n as u128,
            GroupSpec::Dihedral(n) => 2 * *n as u128,
            GroupSpec::Heisenberg(p) => (*p as u128).pow(3),
            GroupSpec::ElementaryAbelian { p, k } => (*p as u128)
                .checked_pow(*k)
                .ok_or_else(|| Error::InvalidParameter(format!("{p}^{k} overflows")))?,
            GroupSpec::DirectProduct(a, b) => a
                .order()?
                .checked_mul(b.order()?)
                .ok_or_else(|| Error::InvalidParameter("product order overflows".into()))?,
            GroupSpec::Cayley(src) => src.table.len() as u128,
        };
        Ok(order)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            GroupSpec::Cyclic(n) | GroupSpec::Dihedral(n) if *n == 0 => Err(
                Error::InvalidParameter(format!("{self}: n must be at least 1")),
            ),
            GroupSpec::Heisenberg(p) if !arith::is_prime(*p) => Err(Error::NotPrime {
                what: "heisenberg",
                value: *p,
            }),
            GroupSpec::ElementaryAbelian { p, .. } if !arith::is_prime(*p) => {
                Err(Error::NotPrime {
                    what: "elementary abelian",
                    value: *p,
                })
            }
            GroupSpec::ElementaryAbelian { k: 0, .. } => Err(Error::InvalidParameter(
                "elementary abelian rank must be at least 1".into(),
            )),
            GroupSpec::DirectProduct(a, b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }

    pub fn dihedral_n(&self) -> Option<u64> {
        match self {
            GroupSpec::Dihedral(n) => Some(*n),
            _ => None,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Heisenberg(p) => write!(f, "heisenberg:{p}"),
            GroupSpec::ElementaryAbelian { p, k } => write!(f, "elem-abelian:{p}:{k}"),
            GroupSpec::DirectProduct(a, b) => write!(f, "product({a},{b})"),
            GroupSpec::Cayley(src) => write!(f, "cayley:{}", src.label),
        }
    }
}

/// Answer of [`FiniteGroup::is_p_group`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PGroup {
    /// The trivial group, a p-group for every prime.
    Trivial,
    Prime(u64),
}

/// A group given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    identity: usize,
    inv: Vec<u32>,
    orders: Vec<u64>,
    spec: GroupSpec,
    element_names: Option<Vec<String>>,
}

pub fn construct_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    construct_group_with_cap(spec, DEFAULT_ORDER_CAP)
}

pub fn construct_group_with_cap(spec: &GroupSpec, cap: usize) -> Result<FiniteGroup> {
    spec.validate()?;
    let order = spec.order()?;
    if order > cap as u128 {
        return Err(Error::OrderCap { order, cap });
    }
    let (table, names) = build_table(spec)?;
    Ok(FiniteGroup::from_table_unchecked(
        spec.clone(),
        table,
        names,
    ))
}

type Table = Vec<Vec<usize>>;

fn build_table(spec: &GroupSpec) -> Result<(Table, Option<Vec<String>>)> {
    let table_from = |n: usize, f: &dyn Fn(usize, usize) -> usize| -> Table {
        (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()
    };
    Ok(match spec {
        GroupSpec::Cyclic(n) => {
            let n = *n as usize;
            let names = (0..n).map(power_name("g")).collect();
            (table_from(n, &|a, b| (a + b) % n), Some(names))
        }
        GroupSpec::Dihedral(n) => {
            let n = *n as usize;
            let names = (0..2 * n)
                .map(|id| {
                    if id < n {
                        power_name("r")(id)
                    } else if id == n {
                        "s".to_string()
                    } else {
                        format!("{} s", power_name("r")(id - n))
                    }
                })
                .collect();
            let table = table_from(2 * n, &|a, b| dihedral_product(n, a, b));
            (table, Some(names))
        }
        GroupSpec::Heisenberg(p) => {
            let p = *p as usize;
            let split = |x: usize| (x / (p * p), (x / p) % p, x % p);
            let table = table_from(p * p * p, &|x, y| {
                let (a, b, c) = split(x);
                let (a2, b2, c2) = split(y);
                let na = (a + a2) % p;
                let nb = (b + b2) % p;
                let nc = (c + c2 + a * b2) % p;
                na * p * p + nb * p + nc
            });
            let names = (0..p * p * p)
                .map(|x| {
                    let (a, b, c) = split(x);
                    format!("({a},{b},{c})")
                })
                .collect();
            (table, Some(names))
        }
        GroupSpec::ElementaryAbelian { p, k } => {
            let p = *p as usize;
            let k = *k as usize;
            let size = p.pow(k as u32);
            let digits = |mut x: usize| {
                let mut d = vec![0; k];
                for slot in d.iter_mut() {
                    *slot = x % p;
                    x /= p;
                }
                d
            };
            let table = table_from(size, &|x, y| {
                let (dx, dy) = (digits(x), digits(y));
                dx.iter()
                    .zip(&dy)
                    .rev()
                    .fold(0, |acc, (a, b)| acc * p + (a + b) % p)
            });
            let names = (0..size)
                .map(|x| {
                    let d: Vec<String> = digits(x).iter().map(|v| v.to_string()).collect();
                    format!("({})", d.join(","))
                })
                .collect();
            (table, Some(names))
        }
        GroupSpec::DirectProduct(a, b) => {
            let ga = construct_group_with_cap(a, usize::MAX)?;
            let gb = construct_group_with_cap(b, usize::MAX)?;
            let nb = gb.order();
            let table = table_from(ga.order() * nb, &|x, y| {
                ga.mul(x / nb, y / nb) * nb + gb.mul(x % nb, y % nb)
            });
            let names = (0..ga.order() * nb)
                .map(|x| format!("({},{})", ga.element_name(x / nb), gb.element_name(x % nb)))
                .collect();
            (table, Some(names))
        }
        GroupSpec::Cayley(src) => (src.table.as_ref().clone(), None),
    })
}

fn power_name(base: &'static str) -> impl Fn(usize) -> String {
    move |i| match i {
        0 => "e".to_string(),
        1 => base.to_string(),
        _ => format!("{base}^{i}"),
    }
}

/// Product in `D_n` on the rotations-then-reflections numbering.
pub fn dihedral_product(n: usize, a: usize, b: usize) -> usize {
    match (a < n, b < n) {
        (true, true) => (a + b) % n,
        (true, false) => n + (a + b - n) % n,
        (false, true) => n + (a - n + n - b) % n,
        (false, false) => (a - n + n - (b - n)) % n,
    }
}

/// Order of element `id` of `D_n` without building a table.
pub fn dihedral_element_order(n: u64, id: u64) -> u64 {
    if id < n {
        n / arith::gcd(id, n)
    } else {
        2
    }
}

impl FiniteGroup {
    /// Wraps a table already known to satisfy the group axioms with identity 0.
    fn from_table_unchecked(spec: GroupSpec, table: Table, names: Option<Vec<String>>) -> Self {
        let order = table.len();
        let mul: Vec<u32> = table.iter().flatten().map(|&x| x as u32).collect();
        let identity = (0..order)
            .find(|&e| (0..order).all(|g| mul[e * order + g] as usize == g))
            .expect("table has an identity");
        let mut inv = vec![0u32; order];
        for g in 0..order {
            let h = (0..order)
                .find(|&h| mul[g * order + h] as usize == identity)
                .expect("every element has an inverse");
            inv[g] = h as u32;
        }
        let mut group = FiniteGroup {
            order,
            mul,
            identity,
            inv,
            orders: Vec::new(),
            spec,
            element_names: names,
        };
        group.orders = (0..order).map(|g| group.compute_order(g)).collect();
        group
    }

    fn compute_order(&self, g: usize) -> u64 {
        let mut x = g;
        let mut m = 1;
        while x != self.identity {
            x = self.mul(x, g);
            m += 1;
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn element_name(&self, g: usize) -> String {
        match &self.element_names {
            Some(names) => names[g].clone(),
            None => g.to_string(),
        }
    }

    /// Least `m >= 1` with `g^m = e`.
    pub fn element_order(&self, g: usize) -> u64 {
        self.orders[g]
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |acc, &o| arith::lcm(acc, o))
    }

    pub fn is_p_group(&self) -> Option<PGroup> {
        if self.order == 1 {
            return Some(PGroup::Trivial);
        }
        Factorization::of(self.order as u64)
            .prime_power_base()
            .map(PGroup::Prime)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Exhaustive check of the group axioms; returns the first violation.
    pub fn check_axioms(&self) -> std::result::Result<(), CayleyViolation> {
        let n = self.order;
        for g in 0..n {
            if self.mul(self.identity, g) != g || self.mul(g, self.identity) != g {
                return Err(CayleyViolation::NoIdentity);
            }
            if self.mul(g, self.inv(g)) != self.identity
                || self.mul(self.inv(g), g) != self.identity
            {
                return Err(CayleyViolation::RepeatedEntry { row: g, col: g });
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(CayleyViolation::NonAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    /// Raw table rows, as consumed by the Cayley text format.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }
}

/// Convenience for building a [`GroupSpec::Cayley`] from in-memory rows.
pub fn cayley_spec(label: impl Into<String>, rows: Vec<Vec<usize>>) -> Result<GroupSpec> {
    let table = cayley::validate_table(rows)?;
    Ok(GroupSpec::Cayley(CayleySource {
        label: label.into(),
        table: Arc::new(table),
    }))
}

/// Parses `cyclic:N`, `dihedral:N`, `heisenberg:P`, `elem-abelian:P:K` or
/// `cayley:PATH` (which reads the file) and validates the parameters.
pub fn parse_group_spec(input: &str) -> Result<GroupSpec> {
    let syntax = |reason: &str| Error::SpecSyntax {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let (kind, rest) = input
        .split_once(':')
        .ok_or_else(|| syntax("expected kind:parameters"))?;
    if kind == "cayley" {
        if rest.is_empty() {
            return Err(syntax("missing path"));
        }
        return load_cayley_file(std::path::Path::new(rest));
    }
    let nums = rest
        .split(':')
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| syntax("parameters must be non-negative integers"))
        })
        .collect::<Result<Vec<u64>>>()?;
    let spec = match (kind, nums.as_slice()) {
        ("cyclic", [n]) => GroupSpec::Cyclic(*n),
        ("dihedral", [n]) => GroupSpec::Dihedral(*n),
        ("heisenberg", [p]) => GroupSpec::Heisenberg(*p),
        ("elem-abelian", [p, k]) => GroupSpec::ElementaryAbelian {
            p: *p,
            k: u32::try_from(*k).map_err(|_| syntax("rank too large"))?,
        },
        ("cyclic" | "dihedral" | "heisenberg" | "elem-abelian", _) => {
            return Err(syntax("wrong number of parameters"))
        }
        _ => return Err(syntax("unknown group kind")),
    };
    spec.validate()?;
    Ok(spec)
}
