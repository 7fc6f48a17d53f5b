//! Command-line front end.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::error::{Error, Result};
use crate::export::{analyze, to_dot, PosetDump};
use crate::group::{load_cayley_file, parse_group_spec, GroupSpec};
use crate::lattice::are_isomorphic;
use crate::spectrum::{spectrum_poset_of_spec, SpectrumPoset};
use crate::verify::{verify, TheoremId, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "order-spectra",
    version,
    about = "Posets of subgroup classes with equal element-order sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the class poset of a group and report its lattice properties.
    Analyze {
        /// cyclic:N, dihedral:N, heisenberg:P, elem-abelian:P:K or cayley:PATH
        spec: String,
        /// Write the Hasse diagram as Graphviz DOT.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        /// Write classes, covers, properties and witnesses as JSON.
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
    },
    /// Check a theorem's prediction against computation over a range.
    Verify {
        theorem: String,
        /// Upper end of the n range (range theorems only).
        #[arg(long, value_name = "N")]
        max_n: Option<u64>,
        /// Cayley table file, or a directory of them, added to the atlas.
        #[arg(long, value_name = "PATH")]
        atlas: Option<PathBuf>,
        /// Write the full report as JSON.
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
    },
    /// Decide whether two groups have isomorphic class posets.
    Iso { a: String, b: String },
}

/// Runs the CLI on `argv` (including the program name) and returns the
/// exit code: 0 on success, 1 when a verification fails or the posets are
/// not isomorphic, 2 on usage and input errors.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Analyze { spec, dot, json } => {
            cmd_analyze(&spec, dot.as_deref(), json.as_deref(), out)
        }
        Command::Verify {
            theorem,
            max_n,
            atlas,
            json,
        } => cmd_verify(&theorem, max_n, atlas.as_deref(), json.as_deref(), out),
        Command::Iso { a, b } => cmd_iso(&a, &b, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io {
        path: "<stdout>".into(),
        message: e.to_string(),
    }
}

fn class_list(p: &SpectrumPoset, nodes: &[usize]) -> String {
    let parts: Vec<String> = nodes.iter().map(|&i| p.spectrum(i).to_string()).collect();
    parts.join(", ")
}

fn cmd_analyze(
    spec: &str,
    dot: Option<&Path>,
    json: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32> {
    let group = parse_group_spec(spec)?;
    let poset = spectrum_poset_of_spec(&group)?;
    let analysis = analyze(&poset);
    let props = analysis.properties;
    let w = &analysis.witnesses;

    let mut text = format!("group: {} (order {})\n", group, group.order()?);
    text.push_str(&format!("classes: {}\n", poset.len()));
    for c in poset.classes() {
        let n = c.representatives.len();
        text.push_str(&format!(
            "  {} ({n} subgroup{})\n",
            c.spectrum,
            if n == 1 { "" } else { "s" }
        ));
    }
    text.push_str(&format!(
        "chain: {}\nlattice: {}\nmodular: {}\ndistributive: {}\n",
        props.chain, props.lattice, props.modular, props.distributive
    ));
    if let Some(nl) = &w.non_lattice {
        text.push_str(&format!(
            "no {} for {} and {}\n",
            if nl.missing_join { "join" } else { "meet" },
            poset.spectrum(nl.a),
            poset.spectrum(nl.b)
        ));
    }
    if props.lattice {
        match &w.n5 {
            Some(n5) => text.push_str(&format!("N5: {}\n", class_list(&poset, n5))),
            None => text.push_str("N5: none\n"),
        }
        match &w.m3 {
            Some(m3) => text.push_str(&format!("M3: {}\n", class_list(&poset, m3))),
            None => text.push_str("M3: none\n"),
        }
    }
    out.write_all(text.as_bytes()).map_err(io_err)?;

    if let Some(path) = dot {
        write_file(path, &to_dot(&poset))?;
    }
    if let Some(path) = json {
        write_file(path, &PosetDump::new(&poset).to_json())?;
    }
    Ok(EXIT_OK)
}

/// Every Cayley table at `path`: the file itself, or each regular file of
/// a directory in name order.
fn load_atlas(path: &Path) -> Result<Vec<GroupSpec>> {
    let io = |e: std::io::Error| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    };
    if !path.is_dir() {
        return Ok(vec![load_cayley_file(path)?]);
    }
    let mut files: Vec<PathBuf> = std::fs::read_dir(path)
        .map_err(io)?
        .map(|e| e.map(|e| e.path()).map_err(io))
        .collect::<Result<_>>()?;
    files.retain(|f| f.is_file());
    files.sort();
    files.iter().map(|f| load_cayley_file(f)).collect()
}

fn cmd_verify(
    theorem: &str,
    max_n: Option<u64>,
    atlas: Option<&Path>,
    json: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32> {
    let theorem: TheoremId = theorem.parse()?;
    if max_n.is_some() && theorem.uses_atlas() {
        return Err(Error::InvalidParameter(format!(
            "{theorem} runs over the group atlas; --max-n does not apply"
        )));
    }
    if atlas.is_some() && !theorem.uses_atlas() {
        return Err(Error::InvalidParameter(format!(
            "{theorem} runs over a range of n; --atlas does not apply"
        )));
    }
    let extra_groups = match atlas {
        Some(path) => load_atlas(path)?,
        None => Vec::new(),
    };
    let report = verify(
        theorem,
        &VerifyOptions {
            max_n,
            extra_groups,
        },
    );
    write!(out, "{report}").map_err(io_err)?;
    if let Some(path) = json {
        let text = serde_json::to_string_pretty(&report).expect("report is always serializable");
        write_file(path, &(text + "\n"))?;
    }
    Ok(if report.all_pass() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

fn cmd_iso(a: &str, b: &str, out: &mut dyn Write) -> Result<i32> {
    let pa = spectrum_poset_of_spec(&parse_group_spec(a)?)?;
    let pb = spectrum_poset_of_spec(&parse_group_spec(b)?)?;
    let mut text = String::new();
    let code = match are_isomorphic(pa.poset(), pb.poset())? {
        Some(map) => {
            text.push_str(&format!("isomorphic ({} classes)\n", pa.len()));
            for (i, &j) in map.iter().enumerate() {
                text.push_str(&format!("  {} -> {}\n", pa.spectrum(i), pb.spectrum(j)));
            }
            EXIT_OK
        }
        None => {
            text.push_str(&format!(
                "not isomorphic ({} and {} classes)\n",
                pa.len(),
                pb.len()
            ));
            EXIT_FAILURE
        }
    };
    out.write_all(text.as_bytes()).map_err(io_err)?;
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("order-spectra").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn analyze_d12() {
        let (code, out, _) = run_capture(&["analyze", "dihedral:12"]);
        assert_eq!(code, 0);
        assert!(out.contains("classes: 7\n"));
        assert!(out.contains("lattice: true\n"));
        assert!(out.contains("modular: false\n"));
        assert!(out.contains("N5: {1,2}"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_capture(&["analyze", "cyclic:0"]).0, 2);
        assert_eq!(run_capture(&["analyze", "nonsense"]).0, 2);
        assert_eq!(run_capture(&["verify", "theorem-9"]).0, 2);
        assert_eq!(run_capture(&["verify", "no-m3", "--atlas", "."]).0, 2);
        assert_eq!(
            run_capture(&["verify", "chain-iff-p-group", "--max-n", "3"]).0,
            2
        );
        assert_eq!(run_capture(&["frobnicate"]).0, 2);
        let (code, _, err) = run_capture(&["analyze", "cyclic:0"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn verify_small_range() {
        let (code, out, _) = run_capture(&["verify", "modular-classification", "--max-n", "30"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.starts_with("modular-classification: 30 cases, 30 passed, 0 failed"));
    }

    #[test]
    fn iso_exit_codes() {
        let (code, out, _) = run_capture(&["iso", "dihedral:15", "elem-abelian:2:1"]);
        assert_eq!(code, 1, "{out}");
        let (code, out, _) = run_capture(&["iso", "cyclic:4", "dihedral:4"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("{1,2,4} -> {1,2,4}"));
    }
}
