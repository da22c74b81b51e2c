use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use kringoid::additive::{complete as completion, iso_class_table, ObjSum};
use kringoid::assembly::{assembly_zero, equivariant_assembly_zero, naturality_check, AssemblyZeroMap};
use kringoid::constructions::{
    group_ringoid, orbit_skeleton, quotient as quotient_by, tensor as tensor_of, transport_groupoid,
    unitize as unitize_of, validate_ideal,
};
use kringoid::ktheory::{k0_bounded, k0_relative, k1_bounded};
use kringoid::nerve::{check_simplicial_identities, oracle_compare as compare, MAX_LEVEL};
use kringoid::rgd::{self, Model, RgdError};
use kringoid::{validate as validate_ringoid, validate_hom, Error, FiniteRingoid};
use serde_json::{json, Value};

#[derive(Debug)]
pub enum CliError {
    Io(String, std::io::Error),
    Rgd(RgdError),
    Core(Error),
    Missing(&'static str, String),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(p, e) => write!(f, "{p}: {e}"),
            CliError::Rgd(e) => write!(f, "{e}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Missing(kind, name) => write!(f, "no {kind} named `{name}` in the document"),
            CliError::Usage(m) => write!(f, "{m}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::Undecided(_)) => 2,
            _ => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<RgdError> for CliError {
    fn from(e: RgdError) -> Self {
        CliError::Rgd(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Failed,
    Undecided,
}

/// What a command produced: text for people, JSON for machines, and notes for stderr.
pub struct Outcome {
    pub human: String,
    pub machine: Value,
    pub status: Status,
    pub diagnostics: Vec<String>,
}

impl Outcome {
    fn new(human: String, machine: Value) -> Self {
        Outcome {
            human,
            machine,
            status: Status::Ok,
            diagnostics: Vec::new(),
        }
    }

    fn fail_unless(mut self, ok: bool) -> Self {
        if !ok && self.status == Status::Ok {
            self.status = Status::Failed;
        }
        self
    }

    /// Undecided wins over failure: the verdict itself may be an artifact of the ceiling.
    fn undecided_unless(mut self, decided: bool, what: &str) -> Self {
        if !decided {
            self.status = Status::Undecided;
            self.diagnostics.push(format!(
                "warning: {what}: an isomorphism search hit the ceiling; relations may be missing"
            ));
        }
        self
    }
}

pub fn load(path: &Path) -> Result<Model> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    Ok(rgd::load(&text)?)
}

fn ringoid<'m>(m: &'m Model, name: Option<&str>) -> Result<&'m Arc<FiniteRingoid>> {
    match name {
        Some(n) => m.ringoid(n).ok_or_else(|| CliError::Missing("ringoid", n.into())),
        None => m
            .ringoids
            .last()
            .map(|(_, r)| r)
            .ok_or_else(|| CliError::Missing("ringoid", "(any)".into())),
    }
}

fn document(r: &FiniteRingoid) -> Outcome {
    let text = rgd::ringoid_document(r).to_string();
    Outcome::new(text.clone(), json!({ "name": r.name(), "rgd": text }))
}

pub fn validate(m: &Model, pick: Option<&str>) -> Result<Outcome> {
    let mut human = String::new();
    let mut items = Vec::new();
    let mut clean = true;
    let mut record = |kind: &str, name: &str, problems: Vec<String>| {
        if problems.is_empty() {
            let _ = writeln!(human, "{kind} {name}: clean");
        } else {
            clean = false;
            let _ = writeln!(human, "{kind} {name}: {} violation(s)", problems.len());
            for p in &problems {
                let _ = writeln!(human, "  {p}");
            }
        }
        items.push(json!({ "kind": kind, "name": name, "violations": problems }));
    };
    for (name, r) in &m.ringoids {
        if pick.is_some_and(|p| p != name) {
            continue;
        }
        let rep = validate_ringoid(r);
        record("ringoid", name, rep.violations.iter().map(|v| v.to_string()).collect());
    }
    if pick.is_none() {
        for (name, h) in &m.homs {
            let rep = validate_hom(h);
            record(
                "homomorphism",
                name,
                rep.violations.iter().map(|v| v.to_string()).collect(),
            );
        }
        for (name, j) in &m.ideals {
            let problems = match validate_ideal(j) {
                Ok(()) => vec![],
                Err(e) => vec![e.to_string()],
            };
            record("ideal", name, problems);
        }
    }
    Ok(Outcome::new(human, json!({ "items": items, "clean": clean })).fail_unless(clean))
}

pub fn complete(m: &Model, pick: Option<&str>, bound: usize, ceiling: u64) -> Result<Outcome> {
    let r = ringoid(m, pick)?;
    let view = completion(r.clone())?;
    let sums = ObjSum::enumerate(r.num_objects(), bound);
    let (mut checked, mut failures) = (0usize, Vec::new());
    if view.is_unital() {
        for a in &sums {
            for b in sums.iter().filter(|b| a.len() + b.len() <= bound) {
                checked += 1;
                let bp = view.biproduct(a, b)?;
                if view.check_biproduct(&bp)?.contains(&false) {
                    failures.push(format!("{} + {}", a.display(r), b.display(r)));
                }
            }
        }
    }
    let mut human = format!("{}: {} sums of length at most {bound}\n", r.name(), sums.len());
    let mut machine = json!({ "ringoid": r.name(), "bound": bound, "sums": sums.len() });
    if !view.is_unital() {
        human.push_str("not unital: no identities, so no biproducts or isomorphism classes\n");
        return Ok(Outcome::new(human, machine));
    }
    let _ = writeln!(human, "biproducts checked: {checked}, failures: {}", failures.len());
    for f in &failures {
        let _ = writeln!(human, "  fails: {f}");
    }
    let table = iso_class_table(&view, bound, ceiling)?;
    let _ = writeln!(human, "isomorphism classes: {}", table.num_classes());
    let classes: Vec<Value> = (0..table.num_classes())
        .map(|c| {
            let members: Vec<String> = table
                .members
                .iter()
                .filter(|(_, k)| *k == c)
                .map(|(s, _)| s.display(r))
                .collect();
            let _ = writeln!(human, "  {}", members.join(" ~ "));
            json!(members)
        })
        .collect();
    machine["biproducts_checked"] = json!(checked);
    machine["biproduct_failures"] = json!(failures);
    machine["classes"] = json!(classes);
    machine["undecided"] = json!(table.undecided.len());
    let decided = table.is_decided();
    Ok(Outcome::new(human, machine)
        .fail_unless(failures.is_empty())
        .undecided_unless(decided, r.name()))
}

pub fn k0(m: &Model, pick: Option<&str>, bound: usize, ceiling: u64) -> Result<Outcome> {
    let r = ringoid(m, pick)?;
    if r.is_unital() {
        let k = k0_bounded(r, bound, ceiling)?;
        let note = match k.stabilized_at {
            Some(at) => format!("stabilized at L={at}"),
            None => format!("not stabilized by L={bound}"),
        };
        let human = format!("K0 = {} ({note})\n", k.group);
        let machine = serde_json::to_value(k.summary()).expect("serializable");
        Ok(Outcome::new(human, machine).undecided_unless(k.is_decided(), r.name()))
    } else {
        let k = k0_relative(r, bound, ceiling)?;
        let human = format!(
            "K0 = {} (relative: kernel of {} -> {} at L={bound})\n",
            k.group, k.unitized.group, k.scalars.group
        );
        let machine = json!({
            "relative": true,
            "bound": bound,
            "group": k.group.summary(),
            "unitized": k.unitized.summary(),
            "scalars": k.scalars.summary(),
        });
        Ok(Outcome::new(human, machine).undecided_unless(k.is_decided(), r.name()))
    }
}

pub fn k1(m: &Model, pick: Option<&str>, gl_max: usize, ceiling: u64) -> Result<Outcome> {
    let r = ringoid(m, pick)?;
    let k = k1_bounded(r, gl_max, ceiling)?;
    let mut human = String::new();
    for (n, (order, ab)) in k.orders.iter().zip(&k.abelianizations).enumerate() {
        let _ = writeln!(human, "GL_{n}: order {order}, abelianization {ab}");
    }
    for (n, map) in k.maps.iter().enumerate() {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(
            human,
            "GL_{n} -> GL_{}: injective {}, surjective {}",
            n + 1,
            yn(map.is_injective()),
            yn(map.is_surjective())
        );
    }
    let top = k.abelianizations.last().expect("rank 0 is always present");
    if k.stabilized {
        let _ = writeln!(human, "K1 = {top} (stabilized)");
    } else {
        let _ = writeln!(human, "K1 = {top} (not stabilized by n={gl_max})");
    }
    let machine = serde_json::to_value(k.summary()).expect("serializable");
    Ok(Outcome::new(human, machine).fail_unless(k.embeddings_injective))
}

pub fn unitize(m: &Model, pick: Option<&str>) -> Result<Outcome> {
    Ok(document(&unitize_of(ringoid(m, pick)?)?))
}

pub fn quotient(m: &Model, ideal: &str) -> Result<Outcome> {
    let j = m.ideal(ideal).ok_or_else(|| CliError::Missing("ideal", ideal.into()))?;
    validate_ideal(j)?;
    let (q, _) = quotient_by(j)?;
    Ok(document(&q))
}

pub fn tensor(m: &Model, left: &str, right: &str) -> Result<Outcome> {
    let l = ringoid(m, Some(left))?;
    let r = ringoid(m, Some(right))?;
    let t = tensor_of(l.clone(), r.clone())?;
    Ok(document(t.ringoid()))
}

pub fn groupring(m: &Model, groupoid: &str, ring: &str) -> Result<Outcome> {
    let g = m
        .groupoid(groupoid)
        .ok_or_else(|| CliError::Missing("groupoid", groupoid.into()))?;
    let r = ringoid(m, Some(ring))?;
    Ok(document(&group_ringoid(g.clone(), r.clone())?))
}

pub fn transport(m: &Model, gset: &str) -> Result<Outcome> {
    let x = m.gset(gset).ok_or_else(|| CliError::Missing("gset", gset.into()))?;
    let t = transport_groupoid(x);
    let skel = orbit_skeleton(&t);
    let mut human = format!(
        "{}: {} objects, {} morphisms\n",
        t.name(),
        t.num_objects(),
        t.num_arrows()
    );
    let mut orbits = Vec::new();
    for (c, comp) in skel.components.iter().enumerate() {
        let names: Vec<&str> = comp.iter().map(|&a| t.objects()[a].as_str()).collect();
        let order = skel.vertex_groups[c].0.order();
        let _ = writeln!(human, "  orbit {{{}}}: stabilizer of order {order}", names.join(", "));
        orbits.push(json!({ "points": names, "stabilizer_order": order }));
    }
    let machine = json!({
        "groupoid": t.name(),
        "objects": t.num_objects(),
        "morphisms": t.num_arrows(),
        "orbits": orbits,
    });
    Ok(Outcome::new(human, machine))
}

pub enum AssemblyTarget {
    Groupoid(String),
    GSet(String),
    GMap(String),
}

fn render_assembly(a: &AssemblyZeroMap, human: &mut String) {
    let _ = writeln!(human, "source = {}", a.map.source);
    let _ = writeln!(human, "target = {}", a.map.target);
    let _ = writeln!(human, "matrix:");
    for row in a.map.matrix.row_iter() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(human, "  [{}]", cells.join(" "));
    }
    let _ = writeln!(human, "isomorphism: {}", if a.is_isomorphism() { "yes" } else { "no" });
}

pub fn assembly(m: &Model, ring: &str, target: &AssemblyTarget, bound: usize, ceiling: u64) -> Result<Outcome> {
    let r = ringoid(m, Some(ring))?;
    let mut human = String::new();
    match target {
        AssemblyTarget::Groupoid(g) => {
            let pi = m.groupoid(g).ok_or_else(|| CliError::Missing("groupoid", g.clone()))?;
            let a = assembly_zero(pi, r, bound, ceiling)?;
            render_assembly(&a, &mut human);
            let machine = serde_json::to_value(a.summary()).expect("serializable");
            Ok(Outcome::new(human, machine)
                .fail_unless(a.is_well_defined())
                .undecided_unless(a.is_decided(), g))
        }
        AssemblyTarget::GSet(x) => {
            let xs = m.gset(x).ok_or_else(|| CliError::Missing("gset", x.clone()))?;
            let a = equivariant_assembly_zero(xs, r, bound, ceiling)?;
            render_assembly(&a, &mut human);
            let machine = serde_json::to_value(a.summary()).expect("serializable");
            Ok(Outcome::new(human, machine)
                .fail_unless(a.is_well_defined())
                .undecided_unless(a.is_decided(), x))
        }
        AssemblyTarget::GMap(f) => {
            let map = m.gmap(f).ok_or_else(|| CliError::Missing("gmap", f.clone()))?;
            let rep = naturality_check(map, r, bound, ceiling)?;
            let _ = writeln!(human, "orbit map: {:?}", rep.orbit_map);
            let _ = writeln!(human, "square commutes: {}", if rep.commutes { "yes" } else { "no" });
            let machine = serde_json::to_value(rep.summary()).expect("serializable");
            let decided = rep.is_decided();
            Ok(Outcome::new(human, machine)
                .fail_unless(rep.commutes)
                .undecided_unless(decided, f))
        }
    }
}

pub fn nerve_check(m: &Model, pick: Option<&str>, level: usize, bound: usize) -> Result<Outcome> {
    if level > MAX_LEVEL {
        return Err(CliError::Usage(format!("--level is at most {MAX_LEVEL}")));
    }
    let r = ringoid(m, pick)?;
    let view = completion(r.clone())?;
    let rep = check_simplicial_identities(&view, level, bound)?;
    let mut human = format!(
        "simplicial identities up to level {level}, L={bound}: {} checked, {} failed\n",
        rep.checked,
        rep.failures.len()
    );
    for f in &rep.failures {
        let _ = writeln!(human, "  {f}");
    }
    let holds = rep.holds();
    let machine = serde_json::to_value(&rep).expect("serializable");
    Ok(Outcome::new(human, machine).fail_unless(holds))
}

pub fn oracle_compare(m: &Model, pick: Option<&str>, bound: usize, ceiling: u64) -> Result<Outcome> {
    let r = ringoid(m, pick)?;
    let rep = compare(r, bound, ceiling)?;
    let human = if rep.matches() {
        format!("MATCH: {}\n", rep.bounded.group)
    } else {
        format!(
            "MISMATCH: K0 = {}, nerve = {}, comparison isomorphism: {}\n",
            rep.bounded.group,
            rep.nerve.group,
            if rep.comparison_iso { "yes" } else { "no" }
        )
    };
    let machine = serde_json::to_value(rep.summary()).expect("serializable");
    let (ok, decided) = (rep.matches(), rep.is_decided());
    Ok(Outcome::new(human, machine)
        .fail_unless(ok)
        .undecided_unless(decided, r.name()))
}
