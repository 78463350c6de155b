//! The subcommands. Each prints its report and returns `Ok(false)` when a
//! comparison or check failed.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use log::info;
use rayon::prelude::*;
use reeder_core::classifiers::{e6_tree_classify, flower_classify};
use reeder_core::families::{
    canonical_representatives, closed_form_count, construct, known_fixed_labelings, ClosedForm, Family,
    FamilySpec, Representative,
};
use reeder_core::sigma::{duality_check, orbit_bijection_check_with_cap};
use reeder_core::{apply_move, count_classes, enumerate_classes_with_cap, ClassPartition, Labeling};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::target::Target;
use crate::Format;

type Outcome = Result<bool, CliError>;

pub fn count(t: &Target, formula: bool, cap: usize) -> Outcome {
    let n = count_classes(&t.diagram, cap)?;
    println!("{n}");
    if !formula {
        return Ok(true);
    }
    let Some(spec) = t.spec else {
        println!("formula n/a");
        return Ok(true);
    };
    match closed_form_count(&spec)? {
        ClosedForm::Exact(c) => {
            let ok = c == n as u64;
            println!("formula {c} {}", if ok { "MATCH" } else { "MISMATCH" });
            Ok(ok)
        }
        ClosedForm::Deferred => {
            println!("formula deferred");
            Ok(true)
        }
    }
}

struct RepRow {
    name: String,
    shown: String,
    class: usize,
    weight: u32,
}

struct RepCheck {
    rows: Vec<RepRow>,
    distinct: bool,
    complete: bool,
    minimal: bool,
}

impl RepCheck {
    fn new(p: &ClassPartition, reps: &[Representative]) -> Result<Self, CliError> {
        let d = p.diagram();
        let mut rows = Vec::with_capacity(reps.len());
        for r in reps {
            rows.push(RepRow {
                name: r.name.clone(),
                shown: d.render(&r.labeling),
                class: p.class_of(&r.labeling)?,
                weight: r.labeling.weight(),
            });
        }
        let classes: BTreeSet<usize> = rows.iter().map(|r| r.class).collect();
        let minimal = rows
            .iter()
            .all(|r| r.weight == p.summaries()[r.class].representative.weight());
        Ok(Self {
            distinct: classes.len() == rows.len(),
            complete: classes.len() == p.class_count(),
            minimal,
            rows,
        })
    }

    fn ok(&self) -> bool {
        self.distinct && self.complete && self.minimal
    }

    fn verdicts(&self) -> [(&'static str, bool); 3] {
        [
            ("pairwise inequivalent", self.distinct),
            ("complete", self.complete),
            ("weight-minimal", self.minimal),
        ]
    }

    fn names_for(&self, class: usize) -> String {
        self.rows
            .iter()
            .filter(|r| r.class == class)
            .map(|r| r.name.as_str())
            .collect::<Vec<_>>()
            .join(";")
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn histogram(counts: &std::collections::BTreeMap<usize, u64>) -> String {
    counts
        .iter()
        .map(|(k, v)| format!("{k}:{v}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn classes(t: &Target, reps: bool, full: bool, format: Format, cap: usize) -> Outcome {
    let p = enumerate_classes_with_cap(&t.diagram, cap)?;
    let d = p.diagram();
    let check = match (reps, t.spec) {
        (true, Some(spec)) => canonical_representatives(&spec)?
            .map(|list| RepCheck::new(&p, &list))
            .transpose()?,
        _ => None,
    };
    let members = full.then(|| p.all_members());
    let render_members = |i: usize| -> Vec<String> {
        let mut shown: Vec<String> = members
            .as_ref()
            .map_or_else(Vec::new, |m| m[i].iter().map(|a| d.render(a)).collect());
        shown.sort_unstable();
        shown
    };

    match format {
        Format::Text => {
            let pinned = d.pinned();
            println!(
                "{}: {} vertices, pinned {}, {} classes",
                t.label(),
                d.n_vertices(),
                if pinned.is_empty() {
                    "none".to_string()
                } else {
                    format!("{pinned:?}")
                },
                p.class_count()
            );
            let mut rows = vec![["class", "size", "representative", "weight", "components", "fixed"]
                .map(String::from)
                .to_vec()];
            for (i, s) in p.summaries().iter().enumerate() {
                rows.push(vec![
                    i.to_string(),
                    s.size.to_string(),
                    d.render(&s.representative),
                    s.representative.weight().to_string(),
                    histogram(&s.component_counts),
                    yes_no(s.singleton_fixed).to_string(),
                ]);
            }
            print!("{}", table(&rows));
            if full {
                for i in 0..p.class_count() {
                    println!("class {i}: {{{}}}", render_members(i).join(", "));
                }
            }
            if reps {
                match &check {
                    None => println!("no canonical representative list"),
                    Some(c) => {
                        let mut rows = vec![["name", "labeling", "class"].map(String::from).to_vec()];
                        rows.extend(c.rows.iter().map(|r| vec![r.name.clone(), r.shown.clone(), r.class.to_string()]));
                        print!("{}", table(&rows));
                        for (what, ok) in c.verdicts() {
                            println!("{what}: {}", yes_no(ok));
                        }
                    }
                }
            }
        }
        Format::Json => {
            let mut v = p.to_json();
            if full {
                if let Some(Value::Array(classes)) = v.get_mut("classes") {
                    for (i, c) in classes.iter_mut().enumerate() {
                        c["members"] = json!(render_members(i));
                    }
                }
            }
            if reps {
                v["representatives"] = match &check {
                    None => Value::Null,
                    Some(c) => json!({
                        "list": c.rows.iter().map(|r| json!({
                            "name": r.name,
                            "labeling": r.shown,
                            "class": r.class,
                        })).collect::<Vec<_>>(),
                        "pairwise_inequivalent": c.distinct,
                        "complete": c.complete,
                        "weight_minimal": c.minimal,
                    }),
                };
            }
            println!("{}", serde_json::to_string_pretty(&v).expect("json values serialize"));
        }
        Format::Csv => {
            let csv = p.to_csv();
            let mut out = String::new();
            for (row, line) in csv.lines().enumerate() {
                out.push_str(line);
                if full {
                    out.push(',');
                    match row {
                        0 => out.push_str("members"),
                        r => out.push_str(&render_members(r - 1).join(";")),
                    }
                }
                if let Some(c) = check.as_ref().filter(|_| reps) {
                    out.push(',');
                    match row {
                        0 => out.push_str("canonical"),
                        r => out.push_str(&c.names_for(r - 1)),
                    }
                }
                out.push('\n');
            }
            print!("{out}");
            if let Some(c) = &check {
                for (what, ok) in c.verdicts() {
                    eprintln!("{what}: {}", yes_no(ok));
                }
            }
        }
    }
    Ok(check.as_ref().is_none_or(RepCheck::ok))
}

/// Inclusive parameter range from `a..b`, `a..=b` or `a`.
fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<u32>, CliError> {
    let bad = || CliError::Input(format!("bad range {s:?}, expected a..b"));
    let num = |x: &str| x.trim().parse::<u32>().map_err(|_| bad());
    match s.split_once("..") {
        Some((a, b)) => Ok(num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let a = num(s)?;
            Ok(a..=a)
        }
    }
}

struct CensusRow {
    spec: FamilySpec,
    vertices: usize,
    formula: ClosedForm,
    brute: usize,
    runtime_ms: u128,
}

impl CensusRow {
    fn matches(&self) -> Option<bool> {
        self.formula.exact().map(|c| c == self.brute as u64)
    }
}

fn census_row(spec: FamilySpec, cap: usize) -> Result<CensusRow, CliError> {
    let start = Instant::now();
    let d = construct(&spec)?;
    let formula = closed_form_count(&spec)?;
    let brute = count_classes(&d, cap)?;
    let runtime_ms = start.elapsed().as_millis();
    info!("{spec}: {brute} classes in {runtime_ms} ms");
    Ok(CensusRow {
        spec,
        vertices: d.n_vertices(),
        formula,
        brute,
        runtime_ms,
    })
}

const CENSUS_HEADER: &str = "family,param,vertices,formula,bruteforce,match,runtime_ms";

fn census_text(rows: &[CensusRow], format: Format) -> String {
    let verdict = |r: &CensusRow| match r.matches() {
        Some(true) => "true",
        Some(false) => "false",
        None => "n/a",
    };
    match format {
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "family": r.spec.family.name(),
                        "param": r.spec.param,
                        "vertices": r.vertices,
                        "formula": r.formula.exact(),
                        "bruteforce": r.brute,
                        "match": r.matches(),
                        "runtime_ms": r.runtime_ms as u64,
                    })
                })
                .collect();
            serde_json::to_string_pretty(&v).expect("json values serialize") + "\n"
        }
        Format::Csv | Format::Text => {
            let mut out = format!("{CENSUS_HEADER}\n");
            for r in rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.spec.family.name(),
                    r.spec.param,
                    r.vertices,
                    r.formula,
                    r.brute,
                    verdict(r),
                    r.runtime_ms
                );
            }
            out
        }
    }
}

/// Writes next to `path` and renames, so a failed run leaves no partial file.
fn write_atomically(path: &Path, contents: &str) -> Result<(), CliError> {
    let file_name = path
        .file_name()
        .ok_or_else(|| CliError::Input(format!("{} is not a file path", path.display())))?;
    let mut tmp_name = std::ffi::OsString::from(".");
    tmp_name.push(file_name);
    tmp_name.push(format!(".{}.tmp", std::process::id()));
    let tmp = path.with_file_name(tmp_name);
    std::fs::write(&tmp, contents).map_err(|e| CliError::io(format!("writing {}", tmp.display()), e))?;
    std::fs::rename(&tmp, path).map_err(|e| {
        let _ = std::fs::remove_file(&tmp);
        CliError::io(format!("renaming onto {}", path.display()), e)
    })
}

pub fn census(family: &str, range: &str, format: Format, output: Option<&Path>, cap: usize) -> Outcome {
    let family: Family = family.parse()?;
    let specs = parse_range(range)?
        .map(|p| {
            let spec = FamilySpec::new(family, p);
            spec.validate().map(|()| spec)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let results: Vec<Result<CensusRow, CliError>> = specs.par_iter().map(|&s| census_row(s, cap)).collect();
    let rows = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    let text = census_text(&rows, format);
    match output {
        Some(path) => write_atomically(path, &text)?,
        None => print!("{text}"),
    }
    Ok(rows.iter().all(|r| r.matches() != Some(false)))
}

struct Checks(Vec<(String, bool)>);

impl Checks {
    fn push(&mut self, name: &str, ok: bool) {
        println!("{name}: {}", if ok { "ok" } else { "FAIL" });
        self.0.push((name.to_string(), ok));
    }

    fn all_ok(&self) -> bool {
        self.0.iter().all(|(_, ok)| *ok)
    }
}

fn sorted(mut v: Vec<Labeling>) -> Vec<Labeling> {
    v.sort_unstable_by_key(Labeling::bits);
    v
}

pub fn verify(t: &Target, cap: usize) -> Outcome {
    let d = &t.diagram;
    let p = enumerate_classes_with_cap(d, cap)?;
    println!("{}: {} classes", t.label(), p.class_count());
    let mut checks = Checks(Vec::new());
    let members = p.all_members();

    let total: u64 = p.summaries().iter().map(|s| s.size).sum();
    checks.push("class sizes sum to the state count", total == p.state_count() as u64);

    let minimal = members.iter().zip(p.summaries()).all(|(m, s)| {
        m.iter().min_by_key(|a| (a.weight(), a.bits())) == Some(&s.representative)
    });
    checks.push("representatives are minimal", minimal);

    let free = d.free_vertices();
    let involution = members.iter().flatten().all(|a| {
        free.iter().all(|&i| {
            apply_move(d, a, i)
                .and_then(|b| apply_move(d, &b, i))
                .is_ok_and(|c| c == *a)
        })
    });
    checks.push("every move is an involution", involution);

    let singletons: Vec<Labeling> = p
        .summaries()
        .iter()
        .filter(|s| s.size == 1)
        .map(|s| s.representative)
        .collect();
    let solved = sorted(d.fixed_labelings()?);
    checks.push("fixed labelings are the singleton classes", sorted(singletons) == solved);

    if let Some(spec) = t.spec {
        if let ClosedForm::Exact(c) = closed_form_count(&spec)? {
            checks.push("closed form", c == p.class_count() as u64);
        }
        if let Some(known) = known_fixed_labelings(&spec)? {
            checks.push("known fixed labelings", known == solved);
        }
        if let Some(list) = canonical_representatives(&spec)? {
            checks.push("canonical representatives", RepCheck::new(&p, &list)?.ok());
        }
        if spec.family == Family::Flower {
            checks.push("flower prediction", flower_classify(spec.param)?.class_count == p.class_count() as u64);
        }
    }

    let unpinned = d.pinned_mask() == 0;
    if unpinned && d.is_tree() && d.is_simply_laced() && d.max_degree() <= 2 {
        let distinct: BTreeSet<Vec<usize>> = p
            .summaries()
            .iter()
            .map(|s| s.component_counts.keys().copied().collect())
            .collect();
        let ok = distinct.len() == p.class_count() && distinct.iter().all(|k| k.len() == 1);
        checks.push("classes are component counts", ok);
    }
    if unpinned && d.is_tree() && d.is_simply_laced() {
        let ok = p.summaries().iter().all(|s| {
            let parities: BTreeSet<usize> = s.component_counts.keys().map(|k| k % 2).collect();
            parities.len() == 1
        });
        checks.push("component parity is invariant", ok);
        if d.contains_e6()? {
            checks.push("E6 tree prediction", e6_tree_classify(d)?.class_count == p.class_count());
        }
    }
    if unpinned && d.is_simply_laced() {
        checks.push("sigma matrix laws", duality_check(d)?);
        let report = orbit_bijection_check_with_cap(d, cap)?;
        if let Some(ok) = report.bijection_verified {
            checks.push("sigma orbit bijection", ok);
        }
    }
    Ok(checks.all_ok())
}

pub fn duality(t: &Target, cap: usize) -> Outcome {
    let laws = duality_check(&t.diagram)?;
    let report = orbit_bijection_check_with_cap(&t.diagram, cap)?;
    let mut v = serde_json::to_value(&report).expect("report serializes");
    v["diagram"] = json!(t.label());
    v["matrix_laws"] = json!(laws);
    println!("{}", serde_json::to_string_pretty(&v).expect("json values serialize"));
    Ok(laws && report.bijection_verified != Some(false))
}
