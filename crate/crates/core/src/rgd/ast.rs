use std::fmt;

/// A value with the position it was read from. Positions do not take part in equality.
#[derive(Clone, Debug, Eq)]
pub struct Located<T> {
    pub value: T,
    pub line: usize,
    pub col: usize,
}

impl<T: PartialEq> PartialEq for Located<T> {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl<T> Located<T> {
    pub fn new(value: T, line: usize, col: usize) -> Self {
        Located { value, line, col }
    }

    /// For generated documents with no source text.
    pub fn bare(value: T) -> Self {
        Located { value, line: 0, col: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingoidStmt {
    Object(String),
    Hom {
        a: String,
        b: String,
        moduli: Vec<u64>,
    },
    /// `g_i ∘ g_j` for `g_j ∈ Hom(a,b)` and `g_i ∈ Hom(b,c)`.
    Compose {
        a: String,
        b: String,
        c: String,
        j: usize,
        i: usize,
        value: Vec<u64>,
    },
    Identity {
        a: String,
        value: Vec<u64>,
    },
    Scalar(String),
    /// `r · g` for ring generator `r` and generator `g` of `Hom(a,b)`.
    Action {
        a: String,
        b: String,
        r: usize,
        g: usize,
        value: Vec<u64>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupoidStmt {
    Object(String),
    Morphism {
        a: String,
        b: String,
        id: String,
    },
    Identity {
        a: String,
        id: String,
    },
    /// `f` then `g` is `h`.
    Compose {
        f: String,
        g: String,
        h: String,
    },
    Inverse {
        f: String,
        g: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GSetStmt {
    Point(String),
    /// `x · g = y` for an arrow `g` of the group.
    Act {
        x: String,
        g: String,
        y: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomStmt {
    Map {
        a: String,
        b: String,
    },
    Image {
        a: String,
        b: String,
        g: usize,
        value: Vec<u64>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealGen {
    pub a: String,
    pub b: String,
    pub value: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Send {
    pub x: String,
    pub y: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Section {
    Ringoid {
        name: Located<String>,
        body: Vec<Located<RingoidStmt>>,
    },
    Groupoid {
        name: Located<String>,
        body: Vec<Located<GroupoidStmt>>,
    },
    GSet {
        name: Located<String>,
        group: String,
        body: Vec<Located<GSetStmt>>,
    },
    Homomorphism {
        name: Located<String>,
        from: String,
        to: String,
        body: Vec<Located<HomStmt>>,
    },
    Ideal {
        name: Located<String>,
        parent: String,
        body: Vec<Located<IdealGen>>,
    },
    GMap {
        name: Located<String>,
        from: String,
        to: String,
        body: Vec<Located<Send>>,
    },
}

impl Section {
    pub fn name(&self) -> &Located<String> {
        match self {
            Section::Ringoid { name, .. }
            | Section::Groupoid { name, .. }
            | Section::GSet { name, .. }
            | Section::Homomorphism { name, .. }
            | Section::Ideal { name, .. }
            | Section::GMap { name, .. } => name,
        }
    }
}

/// A parsed document: sections in file order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RgdDocument {
    pub sections: Vec<Section>,
}

fn nums(v: &[impl fmt::Display]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for RingoidStmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingoidStmt::Object(o) => write!(f, "object {o}"),
            RingoidStmt::Hom { a, b, moduli } => write!(f, "hom {a} {b} cyclic {}", nums(moduli)),
            RingoidStmt::Compose { a, b, c, j, i, value } => {
                write!(f, "compose {a} {b} {c}: {j} {i} -> {}", nums(value))
            }
            RingoidStmt::Identity { a, value } => write!(f, "identity {a}: {}", nums(value)),
            RingoidStmt::Scalar(s) => write!(f, "scalar {s}"),
            RingoidStmt::Action { a, b, r, g, value } => write!(f, "action {a} {b}: {r} {g} -> {}", nums(value)),
        }
    }
}

impl fmt::Display for GroupoidStmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupoidStmt::Object(o) => write!(f, "object {o}"),
            GroupoidStmt::Morphism { a, b, id } => write!(f, "morphism {a} {b} {id}"),
            GroupoidStmt::Identity { a, id } => write!(f, "identity {a} {id}"),
            GroupoidStmt::Compose { f: x, g, h } => write!(f, "compose {x} {g} -> {h}"),
            GroupoidStmt::Inverse { f: x, g } => write!(f, "inverse {x} {g}"),
        }
    }
}

impl fmt::Display for GSetStmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GSetStmt::Point(p) => write!(f, "point {p}"),
            GSetStmt::Act { x, g, y } => write!(f, "act {x} {g} -> {y}"),
        }
    }
}

impl fmt::Display for HomStmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomStmt::Map { a, b } => write!(f, "map {a} -> {b}"),
            HomStmt::Image { a, b, g, value } => write!(f, "image {a} {b}: {g} -> {}", nums(value)),
        }
    }
}

fn body<T: fmt::Display>(f: &mut fmt::Formatter<'_>, stmts: &[Located<T>]) -> fmt::Result {
    for s in stmts {
        writeln!(f, "  {}", s.value)?;
    }
    Ok(())
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Section::Ringoid { name, body: b } => {
                writeln!(f, "ringoid {}", name.value)?;
                body(f, b)
            }
            Section::Groupoid { name, body: b } => {
                writeln!(f, "groupoid {}", name.value)?;
                body(f, b)
            }
            Section::GSet { name, group, body: b } => {
                writeln!(f, "gset {} over {group}", name.value)?;
                body(f, b)
            }
            Section::Homomorphism {
                name,
                from,
                to,
                body: b,
            } => {
                writeln!(f, "homomorphism {} from {from} to {to}", name.value)?;
                body(f, b)
            }
            Section::Ideal { name, parent, body: b } => {
                writeln!(f, "ideal {} in {parent}", name.value)?;
                for g in b {
                    writeln!(f, "  gen {} {}: {}", g.value.a, g.value.b, nums(&g.value.value))?;
                }
                Ok(())
            }
            Section::GMap {
                name,
                from,
                to,
                body: b,
            } => {
                writeln!(f, "gmap {} from {from} to {to}", name.value)?;
                for s in b {
                    writeln!(f, "  send {} -> {}", s.value.x, s.value.y)?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for RgdDocument {
    /// The normalized form: one section per block, two-space indented bodies, blank line between.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.sections.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
