use super::ast::*;
use super::RgdError;

#[derive(Clone, Debug)]
struct Token<'a> {
    text: &'a str,
    col: usize,
}

/// Splits on whitespace, with `:` and `->` as tokens of their own.
fn tokenize(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    let bytes = line.as_bytes();
    let mut i = 0;
    fn push<'a>(out: &mut Vec<Token<'a>>, line: &'a str, s: usize, e: usize) {
        if s < e {
            out.push(Token {
                text: &line[s..e],
                col: line[..s].chars().count() + 1,
            });
        }
    }
    while i < bytes.len() {
        let c = bytes[i];
        let sep = if c == b':' {
            Some(1)
        } else if c == b'-' && bytes.get(i + 1) == Some(&b'>') {
            Some(2)
        } else {
            None
        };
        if c.is_ascii_whitespace() || sep.is_some() {
            if let Some(s) = start.take() {
                push(&mut out, line, s, i);
            }
            if let Some(w) = sep {
                push(&mut out, line, i, i + w);
                i += w;
                continue;
            }
        } else if start.is_none() {
            start = Some(i);
        }
        i += 1;
    }
    if let Some(s) = start {
        push(&mut out, line, s, bytes.len());
    }
    out
}

struct Cursor<'a> {
    line: usize,
    end_col: usize,
    toks: Vec<Token<'a>>,
    at: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, col: usize, msg: impl Into<String>) -> Result<T, RgdError> {
        Err(RgdError::Syntax {
            line: self.line,
            col,
            message: msg.into(),
        })
    }

    fn col(&self) -> usize {
        self.toks.get(self.at).map_or(self.end_col, |t| t.col)
    }

    fn word(&mut self, what: &str) -> Result<String, RgdError> {
        match self.toks.get(self.at) {
            Some(t) if t.text != ":" && t.text != "->" => {
                self.at += 1;
                Ok(t.text.to_string())
            }
            _ => self.err(self.col(), format!("expected {what}")),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), RgdError> {
        match self.toks.get(self.at) {
            Some(t) if t.text == kw => {
                self.at += 1;
                Ok(())
            }
            _ => self.err(self.col(), format!("expected `{kw}`")),
        }
    }

    fn number<T: std::str::FromStr>(&mut self, what: &str) -> Result<T, RgdError> {
        let col = self.col();
        let w = self.word(what)?;
        w.parse()
            .or_else(|_| self.err(col, format!("expected {what}, found `{w}`")))
    }

    /// The remaining tokens as numbers; at least one.
    fn numbers(&mut self, what: &str) -> Result<Vec<u64>, RgdError> {
        let mut out = vec![self.number(what)?];
        while self.at < self.toks.len() {
            out.push(self.number(what)?);
        }
        Ok(out)
    }

    /// Like `numbers`, but an empty list is allowed (the trivial group has no coordinates).
    fn coords(&mut self) -> Result<Vec<u64>, RgdError> {
        let mut out = Vec::new();
        while self.at < self.toks.len() {
            out.push(self.number("a coordinate")?);
        }
        Ok(out)
    }

    fn finish(&self) -> Result<(), RgdError> {
        match self.toks.get(self.at) {
            Some(t) => self.err(t.col, format!("unexpected `{}`", t.text)),
            None => Ok(()),
        }
    }
}

fn ringoid_stmt(c: &mut Cursor<'_>, kw: &str) -> Result<RingoidStmt, RgdError> {
    let s = match kw {
        "object" => RingoidStmt::Object(c.word("an object name")?),
        "hom" => {
            let (a, b) = (c.word("an object")?, c.word("an object")?);
            c.keyword("cyclic")?;
            let col = c.col();
            let moduli = c.numbers("a modulus")?;
            if moduli.contains(&0) {
                return c.err(col, "modulus must be at least 1");
            }
            RingoidStmt::Hom { a, b, moduli }
        }
        "compose" => {
            let (a, b, cc) = (c.word("an object")?, c.word("an object")?, c.word("an object")?);
            c.keyword(":")?;
            let j = c.number("a generator index")?;
            let i = c.number("a generator index")?;
            c.keyword("->")?;
            RingoidStmt::Compose {
                a,
                b,
                c: cc,
                j,
                i,
                value: c.coords()?,
            }
        }
        "identity" => {
            let a = c.word("an object")?;
            c.keyword(":")?;
            RingoidStmt::Identity { a, value: c.coords()? }
        }
        "scalar" => RingoidStmt::Scalar(c.word("a ringoid name")?),
        "action" => {
            let (a, b) = (c.word("an object")?, c.word("an object")?);
            c.keyword(":")?;
            let r = c.number("a scalar generator index")?;
            let g = c.number("a generator index")?;
            c.keyword("->")?;
            RingoidStmt::Action {
                a,
                b,
                r,
                g,
                value: c.coords()?,
            }
        }
        _ => return c.err(c.toks[0].col, format!("unknown ringoid statement `{kw}`")),
    };
    c.finish()?;
    Ok(s)
}

fn groupoid_stmt(c: &mut Cursor<'_>, kw: &str) -> Result<GroupoidStmt, RgdError> {
    let s = match kw {
        "object" => GroupoidStmt::Object(c.word("an object name")?),
        "morphism" => GroupoidStmt::Morphism {
            a: c.word("an object")?,
            b: c.word("an object")?,
            id: c.word("a morphism name")?,
        },
        "identity" => GroupoidStmt::Identity {
            a: c.word("an object")?,
            id: c.word("a morphism name")?,
        },
        "compose" => {
            let (f, g) = (c.word("a morphism")?, c.word("a morphism")?);
            c.keyword("->")?;
            GroupoidStmt::Compose {
                f,
                g,
                h: c.word("a morphism")?,
            }
        }
        "inverse" => GroupoidStmt::Inverse {
            f: c.word("a morphism")?,
            g: c.word("a morphism")?,
        },
        _ => return c.err(c.toks[0].col, format!("unknown groupoid statement `{kw}`")),
    };
    c.finish()?;
    Ok(s)
}

fn gset_stmt(c: &mut Cursor<'_>, kw: &str) -> Result<GSetStmt, RgdError> {
    let s = match kw {
        "point" => GSetStmt::Point(c.word("a point name")?),
        "act" => {
            let (x, g) = (c.word("a point")?, c.word("a group element")?);
            c.keyword("->")?;
            GSetStmt::Act {
                x,
                g,
                y: c.word("a point")?,
            }
        }
        _ => return c.err(c.toks[0].col, format!("unknown gset statement `{kw}`")),
    };
    c.finish()?;
    Ok(s)
}

fn hom_stmt(c: &mut Cursor<'_>, kw: &str) -> Result<HomStmt, RgdError> {
    let s = match kw {
        "map" => {
            let a = c.word("an object")?;
            c.keyword("->")?;
            HomStmt::Map {
                a,
                b: c.word("an object")?,
            }
        }
        "image" => {
            let (a, b) = (c.word("an object")?, c.word("an object")?);
            c.keyword(":")?;
            let g = c.number("a generator index")?;
            c.keyword("->")?;
            HomStmt::Image {
                a,
                b,
                g,
                value: c.coords()?,
            }
        }
        _ => return c.err(c.toks[0].col, format!("unknown homomorphism statement `{kw}`")),
    };
    c.finish()?;
    Ok(s)
}

enum Open {
    None,
    Ringoid,
    Groupoid,
    GSet,
    Hom,
    Ideal,
    GMap,
}

/// Parses a document. Only syntax is checked here; names are resolved later.
pub fn parse_rgd(text: &str) -> Result<RgdDocument, RgdError> {
    let mut doc = RgdDocument::default();
    let mut open = Open::None;
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let toks = tokenize(line);
        if toks.is_empty() {
            continue;
        }
        let mut c = Cursor {
            line: ln + 1,
            end_col: line.chars().count() + 1,
            at: 1,
            toks,
        };
        let kw = c.toks[0].text.to_string();
        let kcol = c.toks[0].col;
        let header = |c: &mut Cursor<'_>| -> Result<Located<String>, RgdError> {
            let col = c.col();
            Ok(Located::new(c.word("a name")?, ln + 1, col))
        };
        match kw.as_str() {
            "ringoid" => {
                let name = header(&mut c)?;
                c.finish()?;
                doc.sections.push(Section::Ringoid { name, body: vec![] });
                open = Open::Ringoid;
            }
            "groupoid" => {
                let name = header(&mut c)?;
                c.finish()?;
                doc.sections.push(Section::Groupoid { name, body: vec![] });
                open = Open::Groupoid;
            }
            "gset" => {
                let name = header(&mut c)?;
                c.keyword("over")?;
                let group = c.word("a group name")?;
                c.finish()?;
                doc.sections.push(Section::GSet {
                    name,
                    group,
                    body: vec![],
                });
                open = Open::GSet;
            }
            "homomorphism" | "gmap" => {
                let name = header(&mut c)?;
                c.keyword("from")?;
                let from = c.word("a source")?;
                c.keyword("to")?;
                let to = c.word("a target")?;
                c.finish()?;
                if kw == "gmap" {
                    doc.sections.push(Section::GMap {
                        name,
                        from,
                        to,
                        body: vec![],
                    });
                    open = Open::GMap;
                } else {
                    doc.sections.push(Section::Homomorphism {
                        name,
                        from,
                        to,
                        body: vec![],
                    });
                    open = Open::Hom;
                }
            }
            "ideal" => {
                let name = header(&mut c)?;
                c.keyword("in")?;
                let parent = c.word("a ringoid name")?;
                c.finish()?;
                doc.sections.push(Section::Ideal {
                    name,
                    parent,
                    body: vec![],
                });
                open = Open::Ideal;
            }
            _ => {
                let last = doc.sections.last_mut();
                match (&open, last) {
                    (Open::Ringoid, Some(Section::Ringoid { body, .. })) => {
                        body.push(Located::new(ringoid_stmt(&mut c, &kw)?, ln + 1, kcol))
                    }
                    (Open::Groupoid, Some(Section::Groupoid { body, .. })) => {
                        body.push(Located::new(groupoid_stmt(&mut c, &kw)?, ln + 1, kcol))
                    }
                    (Open::GSet, Some(Section::GSet { body, .. })) => {
                        body.push(Located::new(gset_stmt(&mut c, &kw)?, ln + 1, kcol))
                    }
                    (Open::Hom, Some(Section::Homomorphism { body, .. })) => {
                        body.push(Located::new(hom_stmt(&mut c, &kw)?, ln + 1, kcol))
                    }
                    (Open::Ideal, Some(Section::Ideal { body, .. })) => {
                        if kw != "gen" {
                            return c.err(kcol, format!("unknown ideal statement `{kw}`"));
                        }
                        let (a, b) = (c.word("an object")?, c.word("an object")?);
                        c.keyword(":")?;
                        let value = c.coords()?;
                        body.push(Located::new(IdealGen { a, b, value }, ln + 1, kcol));
                    }
                    (Open::GMap, Some(Section::GMap { body, .. })) => {
                        if kw != "send" {
                            return c.err(kcol, format!("unknown gmap statement `{kw}`"));
                        }
                        let x = c.word("a point")?;
                        c.keyword("->")?;
                        let y = c.word("a point")?;
                        c.finish()?;
                        body.push(Located::new(Send { x, y }, ln + 1, kcol));
                    }
                    _ => return c.err(kcol, format!("`{kw}` outside of a section")),
                }
            }
        }
    }
    Ok(doc)
}
