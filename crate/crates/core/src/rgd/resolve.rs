use std::collections::HashMap;
use std::sync::Arc;

use super::ast::*;
use super::RgdError;
use crate::algebra::{FinAbGroup, FinGroup};
use crate::constructions::{FinGroupoid, GMap, GSet, GroupoidBuilder, Ideal};
use crate::ringoid::{FiniteRingoid, RingoidBuilder, RingoidHom};

/// Everything a document declares, built and looked up by name.
#[derive(Clone, Debug, Default)]
pub struct Model {
    pub ringoids: Vec<(String, Arc<FiniteRingoid>)>,
    pub groupoids: Vec<(String, Arc<FinGroupoid>)>,
    pub gsets: Vec<(String, Arc<GSet>)>,
    pub homs: Vec<(String, RingoidHom)>,
    pub ideals: Vec<(String, Ideal)>,
    pub gmaps: Vec<(String, GMap)>,
}

fn find<'a, T>(items: &'a [(String, T)], name: &str) -> Option<&'a T> {
    items.iter().find(|(n, _)| n == name).map(|(_, t)| t)
}

impl Model {
    pub fn ringoid(&self, name: &str) -> Option<&Arc<FiniteRingoid>> {
        find(&self.ringoids, name)
    }
    pub fn groupoid(&self, name: &str) -> Option<&Arc<FinGroupoid>> {
        find(&self.groupoids, name)
    }
    pub fn gset(&self, name: &str) -> Option<&Arc<GSet>> {
        find(&self.gsets, name)
    }
    pub fn hom(&self, name: &str) -> Option<&RingoidHom> {
        find(&self.homs, name)
    }
    pub fn ideal(&self, name: &str) -> Option<&Ideal> {
        find(&self.ideals, name)
    }
    pub fn gmap(&self, name: &str) -> Option<&GMap> {
        find(&self.gmaps, name)
    }

    fn taken(&self, name: &str) -> bool {
        self.ringoid(name).is_some()
            || self.groupoid(name).is_some()
            || self.gset(name).is_some()
            || self.hom(name).is_some()
            || self.ideal(name).is_some()
            || self.gmap(name).is_some()
    }
}

fn sem<T>(line: usize, col: usize, msg: impl Into<String>) -> Result<T, RgdError> {
    Err(RgdError::Semantic {
        line,
        col,
        message: msg.into(),
    })
}

fn check_coords<T>(at: &Located<T>, h: &FinAbGroup, value: &[u64], what: &str) -> Result<(), RgdError> {
    if value.len() != h.ngens() {
        return sem(
            at.line,
            at.col,
            format!("{what}: expected {} coordinates, found {}", h.ngens(), value.len()),
        );
    }
    if let Some((k, (&x, &d))) = value.iter().zip(h.moduli()).enumerate().find(|(_, (&x, &d))| x >= d) {
        return sem(
            at.line,
            at.col,
            format!("{what}: coordinate {k} is {x}, out of range for Z/{d}"),
        );
    }
    Ok(())
}

fn object_of(objects: &HashMap<String, usize>, at_line: usize, at_col: usize, o: &str) -> Result<usize, RgdError> {
    match objects.get(o) {
        Some(&i) => Ok(i),
        None => sem(at_line, at_col, format!("unknown object `{o}`")),
    }
}

fn ringoid(model: &Model, name: &Located<String>, body: &[Located<RingoidStmt>]) -> Result<FiniteRingoid, RgdError> {
    let mut b = RingoidBuilder::new(&name.value);
    let mut objects = HashMap::new();
    let mut homs: HashMap<(usize, usize), FinAbGroup> = HashMap::new();
    let mut scalar: Option<Arc<FiniteRingoid>> = None;
    let hom = |homs: &HashMap<(usize, usize), FinAbGroup>, a, b| {
        homs.get(&(a, b)).cloned().unwrap_or_else(FinAbGroup::trivial)
    };
    for st in body {
        let obj = |o: &str| object_of(&objects, st.line, st.col, o);
        match &st.value {
            RingoidStmt::Object(o) => {
                if objects.contains_key(o) {
                    return sem(st.line, st.col, format!("object `{o}` declared twice"));
                }
                objects.insert(o.clone(), b.object(o));
            }
            RingoidStmt::Hom { a, b: bb, moduli } => {
                let (x, y) = (obj(a)?, obj(bb)?);
                if homs.insert((x, y), FinAbGroup::new(moduli.clone())).is_some() {
                    return sem(st.line, st.col, format!("Hom({a}, {bb}) declared twice"));
                }
                b.hom(x, y, moduli.clone());
            }
            RingoidStmt::Compose {
                a,
                b: bb,
                c,
                j,
                i,
                value,
            } => {
                let (x, y, z) = (obj(a)?, obj(bb)?, obj(c)?);
                if *j >= hom(&homs, x, y).ngens() {
                    return sem(st.line, st.col, format!("Hom({a}, {bb}) has no generator {j}"));
                }
                if *i >= hom(&homs, y, z).ngens() {
                    return sem(st.line, st.col, format!("Hom({bb}, {c}) has no generator {i}"));
                }
                check_coords(st, &hom(&homs, x, z), value, &format!("Hom({a}, {c})"))?;
                b.compose(x, y, z, *j, *i, value.clone());
            }
            RingoidStmt::Identity { a, value } => {
                let x = obj(a)?;
                check_coords(st, &hom(&homs, x, x), value, &format!("Hom({a}, {a})"))?;
                b.identity(x, value.clone());
            }
            RingoidStmt::Scalar(s) => match model.ringoid(s) {
                Some(r) => {
                    scalar = Some(r.clone());
                    b.scalar(r.clone());
                }
                None => return sem(st.line, st.col, format!("unknown ringoid `{s}`")),
            },
            RingoidStmt::Action { a, b: bb, r, g, value } => {
                let (x, y) = (obj(a)?, obj(bb)?);
                let Some(s) = &scalar else {
                    return sem(st.line, st.col, "action before `scalar`");
                };
                if *r >= s.ring_group().ngens() {
                    return sem(st.line, st.col, format!("scalar ring has no generator {r}"));
                }
                let h = hom(&homs, x, y);
                if *g >= h.ngens() {
                    return sem(st.line, st.col, format!("Hom({a}, {bb}) has no generator {g}"));
                }
                check_coords(st, &h, value, &format!("Hom({a}, {bb})"))?;
                b.action(x, y, *r, *g, value.clone());
            }
        }
    }
    b.build().or_else(|e| sem(name.line, name.col, e.to_string()))
}

fn groupoid(name: &Located<String>, body: &[Located<GroupoidStmt>]) -> Result<FinGroupoid, RgdError> {
    let mut b = GroupoidBuilder::new(&name.value);
    let mut objects = HashMap::new();
    let mut arrows: HashMap<String, usize> = HashMap::new();
    for st in body {
        let arrow = |f: &str| match arrows.get(f) {
            Some(&i) => Ok(i),
            None => sem(st.line, st.col, format!("unknown morphism `{f}`")),
        };
        match &st.value {
            GroupoidStmt::Object(o) => {
                if objects.contains_key(o) {
                    return sem(st.line, st.col, format!("object `{o}` declared twice"));
                }
                objects.insert(o.clone(), b.object(o));
            }
            GroupoidStmt::Morphism { id, .. } | GroupoidStmt::Identity { id, .. } if arrows.contains_key(id) => {
                return sem(st.line, st.col, format!("morphism `{id}` declared twice"));
            }
            GroupoidStmt::Morphism { a, b: bb, id } => {
                let (x, y) = (
                    object_of(&objects, st.line, st.col, a)?,
                    object_of(&objects, st.line, st.col, bb)?,
                );
                arrows.insert(id.clone(), b.arrow(x, y, id));
            }
            GroupoidStmt::Identity { a, id } => {
                let x = object_of(&objects, st.line, st.col, a)?;
                arrows.insert(id.clone(), b.identity(x, id));
            }
            GroupoidStmt::Compose { f, g, h } => {
                let (f, g, h) = (arrow(f)?, arrow(g)?, arrow(h)?);
                b.compose(f, g, h);
            }
            GroupoidStmt::Inverse { f, g } => {
                let (f, g) = (arrow(f)?, arrow(g)?);
                b.inverse(f, g);
            }
        }
    }
    b.build().or_else(|e| sem(name.line, name.col, e.to_string()))
}

/// The group of a one-object groupoid, with arrow `k` of the groupoid being element `k`.
fn group_of(g: &FinGroupoid) -> Option<FinGroup> {
    if g.num_objects() != 1 {
        return None;
    }
    let (group, loops) = g.vertex_group(0);
    // vertex_group lists loops in arrow order, so element k is arrow k
    debug_assert!(loops.iter().enumerate().all(|(k, &f)| k == f));
    Some(group)
}

fn gset(model: &Model, name: &Located<String>, group_name: &str, body: &[Located<GSetStmt>]) -> Result<GSet, RgdError> {
    let Some(gg) = model.groupoid(group_name) else {
        return sem(name.line, name.col, format!("unknown groupoid `{group_name}`"));
    };
    let Some(group) = group_of(gg) else {
        return sem(name.line, name.col, format!("`{group_name}` has more than one object"));
    };
    let k = group.order();
    let mut points: Vec<String> = Vec::new();
    let mut acts = Vec::new();
    for st in body {
        match &st.value {
            GSetStmt::Point(p) => {
                if points.contains(p) {
                    return sem(st.line, st.col, format!("point `{p}` declared twice"));
                }
                points.push(p.clone());
            }
            GSetStmt::Act { .. } => acts.push(st),
        }
    }
    let point = |st: &Located<GSetStmt>, p: &str| match points.iter().position(|q| q == p) {
        Some(i) => Ok(i),
        None => sem(st.line, st.col, format!("unknown point `{p}`")),
    };
    let mut act: Vec<Option<usize>> = vec![None; points.len() * k];
    for x in 0..points.len() {
        act[x * k + group.identity()] = Some(x);
    }
    for st in acts {
        let GSetStmt::Act { x, g, y } = &st.value else {
            unreachable!()
        };
        let (xi, yi) = (point(st, x)?, point(st, y)?);
        let Some(gi) = gg.arrow_index(g) else {
            return sem(st.line, st.col, format!("unknown group element `{g}`"));
        };
        let slot = &mut act[xi * k + gi];
        if slot.is_some_and(|v| v != yi) {
            return sem(st.line, st.col, format!("{x}·{g} given two values"));
        }
        *slot = Some(yi);
    }
    if let Some(i) = act.iter().position(Option::is_none) {
        return sem(
            name.line,
            name.col,
            format!("missing act {} {}", points[i / k], gg.arrow(i % k).name),
        );
    }
    let act = act.into_iter().map(Option::unwrap).collect();
    GSet::new(&name.value, Arc::new(group), points, act).or_else(|e| sem(name.line, name.col, e.to_string()))
}

fn lookup_ringoid(model: &Model, at: &Located<String>, name: &str) -> Result<Arc<FiniteRingoid>, RgdError> {
    match model.ringoid(name) {
        Some(r) => Ok(r.clone()),
        None => sem(at.line, at.col, format!("unknown ringoid `{name}`")),
    }
}

fn homomorphism(
    model: &Model,
    name: &Located<String>,
    from: &str,
    to: &str,
    body: &[Located<HomStmt>],
) -> Result<RingoidHom, RgdError> {
    let (s, t) = (lookup_ringoid(model, name, from)?, lookup_ringoid(model, name, to)?);
    let n = s.num_objects();
    let mut omap: Vec<Option<usize>> = vec![None; n];
    for st in body {
        if let HomStmt::Map { a, b } = &st.value {
            let Some(x) = s.object_index(a) else {
                return sem(st.line, st.col, format!("unknown object `{a}` of {from}"));
            };
            let Some(y) = t.object_index(b) else {
                return sem(st.line, st.col, format!("unknown object `{b}` of {to}"));
            };
            omap[x] = Some(y);
        }
    }
    if let Some(x) = omap.iter().position(Option::is_none) {
        return sem(
            name.line,
            name.col,
            format!("object `{}` is not mapped", s.object_name(x)),
        );
    }
    let omap: Vec<usize> = omap.into_iter().map(Option::unwrap).collect();
    let mut images: Vec<Vec<Vec<u64>>> = (0..n * n)
        .map(|p| {
            let th = t.hom(omap[p / n], omap[p % n]);
            vec![th.zero(); s.hom(p / n, p % n).ngens()]
        })
        .collect();
    for st in body {
        if let HomStmt::Image { a, b, g, value } = &st.value {
            let (Some(x), Some(y)) = (s.object_index(a), s.object_index(b)) else {
                return sem(st.line, st.col, format!("unknown object in `{a} {b}`"));
            };
            if *g >= s.hom(x, y).ngens() {
                return sem(st.line, st.col, format!("Hom({a}, {b}) has no generator {g}"));
            }
            check_coords(st, t.hom(omap[x], omap[y]), value, "image")?;
            images[x * n + y][*g] = value.clone();
        }
    }
    RingoidHom::new(s, t, omap, images).or_else(|e| sem(name.line, name.col, e.to_string()))
}

fn ideal(model: &Model, name: &Located<String>, parent: &str, body: &[Located<IdealGen>]) -> Result<Ideal, RgdError> {
    let r = lookup_ringoid(model, name, parent)?;
    let n = r.num_objects();
    let mut gens = vec![Vec::new(); n * n];
    for st in body {
        let IdealGen { a, b, value } = &st.value;
        let (Some(x), Some(y)) = (r.object_index(a), r.object_index(b)) else {
            return sem(st.line, st.col, format!("unknown object in `{a} {b}`"));
        };
        check_coords(st, r.hom(x, y), value, &format!("Hom({a}, {b})"))?;
        gens[x * n + y].push(value.clone());
    }
    Ideal::new(r, gens).or_else(|e| sem(name.line, name.col, e.to_string()))
}

fn gmap(model: &Model, name: &Located<String>, from: &str, to: &str, body: &[Located<Send>]) -> Result<GMap, RgdError> {
    let (Some(x), Some(y)) = (model.gset(from), model.gset(to)) else {
        return sem(name.line, name.col, format!("unknown gset in `{from} -> {to}`"));
    };
    let mut map: Vec<Option<usize>> = vec![None; x.points().len()];
    for st in body {
        let Some(i) = x.points().iter().position(|p| p == &st.value.x) else {
            return sem(st.line, st.col, format!("unknown point `{}` of {from}", st.value.x));
        };
        let Some(j) = y.points().iter().position(|p| p == &st.value.y) else {
            return sem(st.line, st.col, format!("unknown point `{}` of {to}", st.value.y));
        };
        map[i] = Some(j);
    }
    if let Some(i) = map.iter().position(Option::is_none) {
        return sem(
            name.line,
            name.col,
            format!("point `{}` is not sent anywhere", x.points()[i]),
        );
    }
    GMap::new(x.clone(), y.clone(), map.into_iter().map(Option::unwrap).collect())
        .or_else(|e| sem(name.line, name.col, e.to_string()))
}

/// Builds every section in order; a section may refer only to earlier ones.
pub fn resolve(doc: &RgdDocument) -> Result<Model, RgdError> {
    let mut m = Model::default();
    for s in &doc.sections {
        let name = s.name();
        if m.taken(&name.value) {
            return sem(name.line, name.col, format!("`{}` declared twice", name.value));
        }
        let key = name.value.clone();
        match s {
            Section::Ringoid { name, body } => {
                let r = ringoid(&m, name, body)?;
                m.ringoids.push((key, Arc::new(r)));
            }
            Section::Groupoid { name, body } => {
                let g = groupoid(name, body)?;
                m.groupoids.push((key, Arc::new(g)));
            }
            Section::GSet { name, group, body } => {
                let x = gset(&m, name, group, body)?;
                m.gsets.push((key, Arc::new(x)));
            }
            Section::Homomorphism { name, from, to, body } => {
                let h = homomorphism(&m, name, from, to, body)?;
                m.homs.push((key, h));
            }
            Section::Ideal { name, parent, body } => {
                let i = ideal(&m, name, parent, body)?;
                m.ideals.push((key, i));
            }
            Section::GMap { name, from, to, body } => {
                let f = gmap(&m, name, from, to, body)?;
                m.gmaps.push((key, f));
            }
        }
    }
    Ok(m)
}

/// The sections that rebuild `r`: its scalar ring first, if any, then `r` itself.
pub fn ringoid_sections(r: &FiniteRingoid) -> Vec<Section> {
    let mut out = Vec::new();
    if let Some(s) = r.scalar_ring() {
        out.extend(ringoid_sections(s));
    }
    let n = r.num_objects();
    let name = |a: usize| r.object_name(a).to_string();
    let mut body = Vec::new();
    for a in 0..n {
        body.push(RingoidStmt::Object(name(a)));
    }
    for a in 0..n {
        for b in 0..n {
            // cyclic 1 factors still count as generators, so only an empty list is omitted
            let h = r.hom(a, b);
            if h.ngens() > 0 {
                body.push(RingoidStmt::Hom {
                    a: name(a),
                    b: name(b),
                    moduli: h.moduli().to_vec(),
                });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for j in 0..r.hom(a, b).ngens() {
                    for i in 0..r.hom(b, c).ngens() {
                        let v = r.constant(a, b, c, j, i);
                        if v.iter().any(|&x| x != 0) {
                            body.push(RingoidStmt::Compose {
                                a: name(a),
                                b: name(b),
                                c: name(c),
                                j,
                                i,
                                value: v.clone(),
                            });
                        }
                    }
                }
            }
        }
    }
    if let Some(ids) = r.identities() {
        for (a, e) in ids.iter().enumerate() {
            body.push(RingoidStmt::Identity {
                a: name(a),
                value: e.clone(),
            });
        }
    }
    if let Some(s) = r.scalar_ring() {
        body.push(RingoidStmt::Scalar(s.name().to_string()));
        for a in 0..n {
            for b in 0..n {
                for rg in 0..s.ring_group().ngens() {
                    for g in 0..r.hom(a, b).ngens() {
                        if let Some(v) = r.action_constant(a, b, rg, g) {
                            if v.iter().any(|&x| x != 0) {
                                body.push(RingoidStmt::Action {
                                    a: name(a),
                                    b: name(b),
                                    r: rg,
                                    g,
                                    value: v.clone(),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    out.push(Section::Ringoid {
        name: Located::bare(r.name().to_string()),
        body: body.into_iter().map(Located::bare).collect(),
    });
    out
}

/// A standalone document for `r`; a shared scalar ring is emitted once.
pub fn ringoid_document(r: &FiniteRingoid) -> RgdDocument {
    let mut sections: Vec<Section> = Vec::new();
    for s in ringoid_sections(r) {
        if !sections.iter().any(|t| t.name() == s.name()) {
            sections.push(s);
        }
    }
    RgdDocument { sections }
}
