//! Graphviz and JSON output for spectrum posets.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{parse_group_spec, GroupSpec};
use crate::lattice::{check_laws, find_forbidden_sublattice, ForbiddenShape, NonLattice, Pentad};
use crate::spectrum::{SpectrumClass, SpectrumPoset};
use crate::subgroup::{OrderSpectrum, Subgroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Properties {
    pub chain: bool,
    pub lattice: bool,
    pub modular: bool,
    pub distributive: bool,
}

/// Class indices exhibiting each failed property.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    pub non_lattice: Option<NonLattice>,
    pub modular_violation: Option<(usize, usize, usize)>,
    pub distributive_violation: Option<(usize, usize, usize)>,
    /// `[bottom, low, high, side, top]`
    pub n5: Option<Pentad>,
    /// `[bottom, a, b, c, top]`
    pub m3: Option<Pentad>,
}

/// Lattice properties and witnesses of a spectrum poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis {
    pub properties: Properties,
    pub witnesses: Witnesses,
}

pub fn analyze(poset: &SpectrumPoset) -> Analysis {
    let chain = poset.poset().is_chain();
    match poset.lattice() {
        Err(non_lattice) => Analysis {
            properties: Properties {
                chain,
                lattice: false,
                modular: false,
                distributive: false,
            },
            witnesses: Witnesses {
                non_lattice: Some(non_lattice),
                ..Witnesses::default()
            },
        },
        Ok(l) => {
            let laws = check_laws(&l);
            let n5 = find_forbidden_sublattice(&l, ForbiddenShape::N5);
            let m3 = find_forbidden_sublattice(&l, ForbiddenShape::M3);
            Analysis {
                properties: Properties {
                    chain,
                    lattice: true,
                    modular: laws.modular,
                    distributive: laws.distributive,
                },
                witnesses: Witnesses {
                    non_lattice: None,
                    modular_violation: laws.modular_witness,
                    distributive_violation: laws.distributive_witness,
                    n5,
                    m3,
                },
            }
        }
    }
}

/// Hasse diagram in DOT. Nodes follow class order, edges point from the
/// smaller class to the cover above it.
pub fn to_dot(poset: &SpectrumPoset) -> String {
    let mut out = String::from("digraph pi_poset {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, c) in poset.classes().iter().enumerate() {
        out.push_str(&format!("  n{i} [label=\"{}\"];\n", c.spectrum));
    }
    for (lo, hi) in poset.poset().hasse() {
        out.push_str(&format!("  n{lo} -> n{hi};\n"));
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDump {
    pub spectrum: Vec<u64>,
    pub representatives: Vec<Vec<usize>>,
}

/// The JSON document written by `analyze --json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDump {
    pub group: String,
    pub classes: Vec<ClassDump>,
    pub hasse: Vec<(usize, usize)>,
    pub properties: Properties,
    pub witnesses: Witnesses,
}

impl PosetDump {
    pub fn new(poset: &SpectrumPoset) -> Self {
        let analysis = analyze(poset);
        PosetDump {
            group: poset.group().to_string(),
            classes: poset
                .classes()
                .iter()
                .map(|c| ClassDump {
                    spectrum: c.spectrum.values().to_vec(),
                    representatives: c
                        .representatives
                        .iter()
                        .map(|h| h.members().to_vec())
                        .collect(),
                })
                .collect(),
            hasse: poset.poset().hasse().to_vec(),
            properties: analysis.properties,
            witnesses: analysis.witnesses,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("dump is always serializable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Io {
            path: "<json>".into(),
            message: e.to_string(),
        })
    }

    /// Rebuilds the poset, checking that the stored covers match the
    /// order recomputed from the spectra.
    ///
    /// `group` resolves the group string; [`parse_group_spec`] is used when
    /// it is `None`, which re-reads Cayley files from their path.
    pub fn to_spectrum_poset(&self, group: Option<GroupSpec>) -> Result<SpectrumPoset> {
        let group = match group {
            Some(g) => g,
            None => parse_group_spec(&self.group)?,
        };
        let classes = self
            .classes
            .iter()
            .map(|c| SpectrumClass {
                spectrum: OrderSpectrum::new(c.spectrum.iter().copied()),
                representatives: c
                    .representatives
                    .iter()
                    .map(|m| Subgroup::from_members(m.clone()))
                    .collect(),
            })
            .collect();
        let poset = SpectrumPoset::from_classes(group, classes)?;
        let rebuilt = PosetDump::new(&poset);
        if rebuilt.classes != self.classes || rebuilt.hasse != self.hasse {
            return Err(Error::Io {
                path: "<json>".into(),
                message: "stored classes or covers disagree with the spectra".into(),
            });
        }
        Ok(poset)
    }
}
