use std::sync::Arc;

use crate::algebra::FinGroup;
use crate::error::{Error, Result};

const NONE: u32 = u32::MAX;

/// A morphism of a [`FinGroupoid`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// Finite groupoid with an exhaustively checked composition table.
///
/// `then(f, g)` is the composite "first `f`, then `g`".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinGroupoid {
    name: String,
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    table: Vec<u32>,
    identities: Vec<usize>,
    inverse: Vec<usize>,
}

impl FinGroupoid {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrow(&self, f: usize) -> &Arrow {
        &self.arrows[f]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Arrows `a → b` in index order.
    pub fn hom(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&f| self.arrows[f].source == a && self.arrows[f].target == b)
            .collect()
    }

    pub fn identity(&self, a: usize) -> usize {
        self.identities[a]
    }

    pub fn inverse(&self, f: usize) -> usize {
        self.inverse[f]
    }

    /// `f` then `g`; `None` unless `target(f) = source(g)`.
    pub fn then(&self, f: usize, g: usize) -> Option<usize> {
        let v = self.table[f * self.arrows.len() + g];
        (v != NONE).then_some(v as usize)
    }

    /// One-object groupoid of a group; arrow `i` is group element `i`.
    pub fn from_group(name: &str, g: &FinGroup) -> Self {
        let n = g.order();
        let arrows = (0..n)
            .map(|i| Arrow {
                name: format!("g{i}"),
                source: 0,
                target: 0,
            })
            .collect();
        let table = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| g.mul(a, b) as u32)
            .collect();
        FinGroupoid {
            name: name.to_string(),
            objects: vec!["o".into()],
            arrows,
            table,
            identities: vec![g.identity()],
            inverse: (0..n).map(|a| g.inv(a)).collect(),
        }
    }

    /// Objects with identity arrows only.
    pub fn discrete(name: &str, objects: &[&str]) -> Self {
        let mut b = GroupoidBuilder::new(name);
        for o in objects {
            let i = b.object(o);
            b.identity(i, &format!("1_{o}"));
        }
        b.build().expect("discrete groupoid")
    }

    /// Connected components, each sorted, ordered by least object.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.objects.len();
        let mut label: Vec<usize> = (0..n).collect();
        fn find(l: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while l[r] != r {
                r = l[r];
            }
            l[x] = r;
            r
        }
        for f in &self.arrows {
            let (a, b) = (find(&mut label, f.source), find(&mut label, f.target));
            if a != b {
                label[a.max(b)] = a.min(b);
            }
        }
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut root_of = vec![usize::MAX; n];
        for x in 0..n {
            let r = find(&mut label, x);
            if root_of[r] == usize::MAX {
                root_of[r] = comps.len();
                comps.push(Vec::new());
            }
            comps[root_of[r]].push(x);
        }
        comps
    }

    /// The vertex group `Hom(a, a)` and the arrow index of each of its elements.
    pub fn vertex_group(&self, a: usize) -> (FinGroup, Vec<usize>) {
        let loops = self.hom(a, a);
        let pos = |f: usize| loops.iter().position(|&x| x == f).unwrap();
        let n = loops.len();
        let table = loops
            .iter()
            .flat_map(|&f| loops.iter().map(move |&g| (f, g)))
            .map(|(f, g)| pos(self.then(f, g).unwrap()) as u32)
            .collect();
        let g = FinGroup::from_table_unchecked(n, table, pos(self.identity(a))).expect("vertex group of a groupoid");
        (g, loops)
    }
}

/// Incremental construction of a [`FinGroupoid`]; compositions with an identity are filled in.
#[derive(Clone, Debug, Default)]
pub struct GroupoidBuilder {
    name: String,
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    identities: Vec<(usize, usize)>,
    compose: Vec<(usize, usize, usize)>,
    inverses: Vec<(usize, usize)>,
}

impl GroupoidBuilder {
    pub fn new(name: &str) -> Self {
        GroupoidBuilder {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn object(&mut self, name: &str) -> usize {
        self.objects.push(name.into());
        self.objects.len() - 1
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&mut self, source: usize, target: usize, name: &str) -> usize {
        self.arrows.push(Arrow {
            name: name.into(),
            source,
            target,
        });
        self.arrows.len() - 1
    }

    /// Declares a new arrow named `name` as the identity of `a`.
    pub fn identity(&mut self, a: usize, name: &str) -> usize {
        let f = self.arrow(a, a, name);
        self.identities.push((a, f));
        f
    }

    /// Marks an existing arrow as the identity of `a`.
    pub fn mark_identity(&mut self, a: usize, f: usize) {
        self.identities.push((a, f));
    }

    /// `f` then `g` is `h`.
    pub fn compose(&mut self, f: usize, g: usize, h: usize) {
        self.compose.push((f, g, h));
    }

    pub fn inverse(&mut self, f: usize, g: usize) {
        self.inverses.push((f, g));
    }

    pub fn build(&self) -> Result<FinGroupoid> {
        let n = self.objects.len();
        let m = self.arrows.len();
        for (i, a) in self.arrows.iter().enumerate() {
            if a.source >= n || a.target >= n {
                return Err(Error::Structure(format!("arrow {} names a non-object", a.name)));
            }
            if self.arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::Structure(format!("duplicate arrow {}", a.name)));
            }
        }
        let mut identities = vec![usize::MAX; n];
        for &(a, f) in &self.identities {
            if a >= n || f >= m {
                return Err(Error::Structure("identity out of range".into()));
            }
            if self.arrows[f].source != a || self.arrows[f].target != a {
                return Err(Error::Structure(format!(
                    "identity {} of {} is not a loop",
                    self.arrows[f].name, self.objects[a]
                )));
            }
            identities[a] = f;
        }
        if let Some(a) = identities.iter().position(|&f| f == usize::MAX) {
            return Err(Error::Structure(format!("object {} has no identity", self.objects[a])));
        }
        let mut table = vec![NONE; m * m];
        for f in 0..m {
            let (s, t) = (self.arrows[f].source, self.arrows[f].target);
            table[identities[s] * m + f] = f as u32;
            table[f * m + identities[t]] = f as u32;
        }
        for &(f, g, h) in &self.compose {
            if f >= m || g >= m || h >= m {
                return Err(Error::Structure("composition names an unknown arrow".into()));
            }
            let (af, ag, ah) = (&self.arrows[f], &self.arrows[g], &self.arrows[h]);
            if af.target != ag.source || ah.source != af.source || ah.target != ag.target {
                return Err(Error::Structure(format!(
                    "composite of {} then {} cannot be {}",
                    af.name, ag.name, ah.name
                )));
            }
            let slot = &mut table[f * m + g];
            if *slot != NONE && *slot != h as u32 {
                return Err(Error::Axiom(format!("{} then {} given two values", af.name, ag.name)));
            }
            *slot = h as u32;
        }
        for f in 0..m {
            for g in 0..m {
                if self.arrows[f].target == self.arrows[g].source && table[f * m + g] == NONE {
                    return Err(Error::Structure(format!(
                        "missing composite of {} then {}",
                        self.arrows[f].name, self.arrows[g].name
                    )));
                }
            }
        }
        for f in 0..m {
            for g in 0..m {
                let Some(fg) = get(&table, m, f, g) else { continue };
                for h in 0..m {
                    let Some(gh) = get(&table, m, g, h) else { continue };
                    if get(&table, m, fg, h) != get(&table, m, f, gh) {
                        return Err(Error::Axiom(format!(
                            "associativity fails on {}, {}, {}",
                            self.arrows[f].name, self.arrows[g].name, self.arrows[h].name
                        )));
                    }
                }
            }
        }
        let mut inverse = vec![usize::MAX; m];
        for (f, inv) in inverse.iter_mut().enumerate() {
            let (s, t) = (self.arrows[f].source, self.arrows[f].target);
            *inv = (0..m)
                .find(|&g| get(&table, m, f, g) == Some(identities[s]) && get(&table, m, g, f) == Some(identities[t]))
                .ok_or_else(|| Error::Axiom(format!("arrow {} has no inverse", self.arrows[f].name)))?;
        }
        for &(f, g) in &self.inverses {
            if f >= m || g >= m || inverse[f] != g {
                return Err(Error::Axiom("declared inverse does not invert".into()));
            }
        }
        Ok(FinGroupoid {
            name: self.name.clone(),
            objects: self.objects.clone(),
            arrows: self.arrows.clone(),
            table,
            identities,
            inverse,
        })
    }
}

fn get(table: &[u32], m: usize, f: usize, g: usize) -> Option<usize> {
    let v = table[f * m + g];
    (v != NONE).then_some(v as usize)
}

/// Finite set with a right action of a finite group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSet {
    name: String,
    group: Arc<FinGroup>,
    points: Vec<String>,
    act: Vec<usize>,
}

impl GSet {
    /// `act[x * |G| + g]` is `x·g`.
    pub fn new(name: &str, group: Arc<FinGroup>, points: Vec<String>, act: Vec<usize>) -> Result<Self> {
        let (n, k) = (points.len(), group.order());
        if act.len() != n * k || act.iter().any(|&y| y >= n) {
            return Err(Error::Structure("malformed action table".into()));
        }
        for x in 0..n {
            if act[x * k + group.identity()] != x {
                return Err(Error::Axiom(format!("{}·e != {}", points[x], points[x])));
            }
            for g in 0..k {
                for h in 0..k {
                    if act[act[x * k + g] * k + h] != act[x * k + group.mul(g, h)] {
                        return Err(Error::Axiom(format!(
                            "({}·g{g})·g{h} != {}·(g{g} g{h})",
                            points[x], points[x]
                        )));
                    }
                }
            }
        }
        Ok(GSet {
            name: name.into(),
            group,
            points,
            act,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self) -> &Arc<FinGroup> {
        &self.group
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn act(&self, x: usize, g: usize) -> usize {
        self.act[x * self.group.order() + g]
    }

    /// `G/H` for a subgroup mask, points labelled by coset.
    pub fn cosets(name: &str, group: Arc<FinGroup>, subgroup: &[bool]) -> Self {
        let k = group.order();
        let mut label = vec![usize::MAX; k];
        let mut reps = Vec::new();
        for a in 0..k {
            if label[a] == usize::MAX {
                for h in (0..k).filter(|&h| subgroup[h]) {
                    label[group.mul(h, a)] = reps.len();
                }
                reps.push(a);
            }
        }
        let act = reps
            .iter()
            .flat_map(|&r| (0..k).map(move |g| (r, g)))
            .map(|(r, g)| label[group.mul(r, g)])
            .collect();
        let points = (0..reps.len()).map(|i| format!("H{i}")).collect();
        GSet::new(name, group, points, act).expect("coset action")
    }

    pub fn disjoint_union(&self, other: &GSet) -> GSet {
        assert_eq!(self.group, other.group);
        let n = self.points.len();
        let mut act = self.act.clone();
        act.extend(other.act.iter().map(|&y| y + n));
        let mut points = self.points.clone();
        points.extend(other.points.iter().map(|p| format!("{p}'")));
        GSet {
            name: format!("{}+{}", self.name, other.name),
            group: self.group.clone(),
            points,
            act,
        }
    }
}

/// Equivariant map of G-sets.
#[derive(Clone, Debug)]
pub struct GMap {
    pub source: Arc<GSet>,
    pub target: Arc<GSet>,
    pub map: Vec<usize>,
}

impl GMap {
    pub fn new(source: Arc<GSet>, target: Arc<GSet>, map: Vec<usize>) -> Result<Self> {
        if source.group != target.group {
            return Err(Error::Structure("G-sets over different groups".into()));
        }
        if map.len() != source.points.len() || map.iter().any(|&y| y >= target.points.len()) {
            return Err(Error::Structure("malformed point map".into()));
        }
        for x in 0..source.points.len() {
            for g in 0..source.group.order() {
                if map[source.act(x, g)] != target.act(map[x], g) {
                    return Err(Error::Axiom(format!(
                        "map is not equivariant at {} and g{g}",
                        source.points[x]
                    )));
                }
            }
        }
        Ok(GMap { source, target, map })
    }
}

/// Transport groupoid: arrow `(x, g): x → x·g`, with index `x·|G| + g`.
pub fn transport_groupoid(xs: &GSet) -> FinGroupoid {
    let k = xs.group.order();
    let n = xs.points.len();
    let mut arrows = Vec::with_capacity(n * k);
    for x in 0..n {
        for g in 0..k {
            arrows.push(Arrow {
                name: format!("{}*g{g}", xs.points[x]),
                source: x,
                target: xs.act(x, g),
            });
        }
    }
    let m = n * k;
    let mut table = vec![NONE; m * m];
    for x in 0..n {
        for g in 0..k {
            let y = xs.act(x, g);
            for h in 0..k {
                table[(x * k + g) * m + y * k + h] = (x * k + xs.group.mul(g, h)) as u32;
            }
        }
    }
    let identities = (0..n).map(|x| x * k + xs.group.identity()).collect();
    let inverse = (0..n)
        .flat_map(|x| (0..k).map(move |g| (x, g)))
        .map(|(x, g)| xs.act(x, g) * k + xs.group.inv(g))
        .collect();
    FinGroupoid {
        name: format!("transport({})", xs.name),
        objects: xs.points.clone(),
        arrows,
        table,
        identities,
        inverse,
    }
}

/// Components of a groupoid with a chosen object and its vertex group.
#[derive(Clone, Debug)]
pub struct Skeleton {
    pub components: Vec<Vec<usize>>,
    pub chosen: Vec<usize>,
    /// Vertex group at the chosen object, with its inclusion as arrow indices.
    pub vertex_groups: Vec<(FinGroup, Vec<usize>)>,
}

pub fn orbit_skeleton(g: &FinGroupoid) -> Skeleton {
    let components = g.components();
    let chosen: Vec<usize> = components.iter().map(|c| c[0]).collect();
    let vertex_groups = chosen.iter().map(|&a| g.vertex_group(a)).collect();
    Skeleton {
        components,
        chosen,
        vertex_groups,
    }
}

/// Functor between groupoids, given on objects and arrows.
#[derive(Clone, Debug)]
pub struct GroupoidFunctor {
    pub source: Arc<FinGroupoid>,
    pub target: Arc<FinGroupoid>,
    pub objects: Vec<usize>,
    pub arrows: Vec<usize>,
}

impl GroupoidFunctor {
    pub fn new(
        source: Arc<FinGroupoid>,
        target: Arc<FinGroupoid>,
        objects: Vec<usize>,
        arrows: Vec<usize>,
    ) -> Result<Self> {
        if objects.len() != source.num_objects() || arrows.len() != source.num_arrows() {
            return Err(Error::Structure("functor data has the wrong length".into()));
        }
        if objects.iter().any(|&o| o >= target.num_objects()) || arrows.iter().any(|&f| f >= target.num_arrows()) {
            return Err(Error::Structure("functor hits a non-object or non-arrow".into()));
        }
        for f in 0..source.num_arrows() {
            let (a, t) = (source.arrow(f), target.arrow(arrows[f]));
            if t.source != objects[a.source] || t.target != objects[a.target] {
                return Err(Error::Axiom(format!("arrow {} changes endpoints", a.name)));
            }
            for g in 0..source.num_arrows() {
                if let Some(fg) = source.then(f, g) {
                    if target.then(arrows[f], arrows[g]) != Some(arrows[fg]) {
                        return Err(Error::Axiom(format!(
                            "composition not preserved at {} then {}",
                            a.name,
                            source.arrow(g).name
                        )));
                    }
                }
            }
        }
        for a in 0..source.num_objects() {
            if arrows[source.identity(a)] != target.identity(objects[a]) {
                return Err(Error::Axiom("identity not preserved".into()));
            }
        }
        Ok(GroupoidFunctor {
            source,
            target,
            objects,
            arrows,
        })
    }

    /// The functor `X̄ → Ȳ` induced by an equivariant map.
    pub fn of_gmap(f: &GMap, source: Arc<FinGroupoid>, target: Arc<FinGroupoid>) -> Result<Self> {
        let k = f.source.group.order();
        let arrows = (0..f.source.points.len() * k)
            .map(|i| f.map[i / k] * k + i % k)
            .collect();
        Self::new(source, target, f.map.clone(), arrows)
    }

    /// Inclusion of the vertex group at `a`, as a one-object groupoid.
    pub fn vertex_inclusion(g: Arc<FinGroupoid>, a: usize) -> Result<(Arc<FinGroupoid>, Self)> {
        let (h, loops) = g.vertex_group(a);
        let hg = Arc::new(FinGroupoid::from_group("vertex", &h));
        let f = Self::new(hg.clone(), g, vec![a], loops)?;
        Ok((hg, f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> Arc<FinGroup> {
        Arc::new(FinGroup::cyclic(2))
    }

    fn swap() -> GSet {
        GSet::new("swap", c2(), vec!["1".into(), "2".into()], vec![0, 1, 1, 0]).unwrap()
    }

    #[test]
    fn transport_of_swap_is_connected() {
        let t = transport_groupoid(&swap());
        assert_eq!(t.hom(0, 0).len(), 1);
        assert_eq!(t.hom(0, 1).len(), 1);
        assert_eq!(t.components().len(), 1);
        let s = orbit_skeleton(&t);
        assert_eq!(s.vertex_groups[0].0.order(), 1);
    }

    #[test]
    fn transport_of_point_is_the_group() {
        let pt = GSet::new("pt", c2(), vec!["pt".into()], vec![0, 0]).unwrap();
        let t = transport_groupoid(&pt);
        assert_eq!(t.hom(0, 0).len(), 2);
        assert_eq!(orbit_skeleton(&t).vertex_groups[0].0.order(), 2);
    }

    #[test]
    fn mixed_action_has_two_components() {
        let xs = GSet::new(
            "mixed",
            c2(),
            vec!["1".into(), "2".into(), "3".into()],
            vec![0, 1, 1, 0, 2, 2],
        )
        .unwrap();
        let t = transport_groupoid(&xs);
        let s = orbit_skeleton(&t);
        assert_eq!(s.components, vec![vec![0, 1], vec![2]]);
        let orders: Vec<usize> = s.vertex_groups.iter().map(|(g, _)| g.order()).collect();
        assert_eq!(orders, vec![1, 2]);
    }

    #[test]
    fn builder_checks_inverses() {
        let mut b = GroupoidBuilder::new("C2");
        let o = b.object("o");
        let e = b.identity(o, "e");
        let g = b.arrow(o, o, "g");
        b.compose(g, g, e);
        let grp = b.build().unwrap();
        assert_eq!(grp.num_arrows(), 2);
        assert_eq!(grp.inverse(g), g);

        let mut b = GroupoidBuilder::new("bad");
        let o = b.object("o");
        let _e = b.identity(o, "e");
        let g = b.arrow(o, o, "g");
        b.compose(g, g, g);
        assert!(b.build().is_err());
    }

    #[test]
    fn bad_action_rejected() {
        let r = GSet::new("bad", c2(), vec!["1".into(), "2".into()], vec![1, 0, 1, 0]);
        assert!(matches!(r, Err(Error::Axiom(_))));
    }
}
