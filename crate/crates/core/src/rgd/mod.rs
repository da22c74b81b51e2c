//! The line-oriented text format for ringoids, groupoids, G-sets and maps between them.
//!
//! ```text
//! ringoid F2
//!   object o
//!   hom o o cyclic 2
//!   compose o o o: 0 0 -> 1
//!   identity o: 1
//! ```

mod ast;
mod parse;
mod resolve;

pub use ast::{GSetStmt, GroupoidStmt, HomStmt, IdealGen, Located, RgdDocument, RingoidStmt, Section, Send};
pub use parse::parse_rgd;
pub use resolve::{resolve, ringoid_document, ringoid_sections, Model};

/// Syntax errors come from the parser, semantic errors from name and range resolution.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RgdError {
    #[error("{line}:{col}: syntax error: {message}")]
    Syntax { line: usize, col: usize, message: String },
    #[error("{line}:{col}: {message}")]
    Semantic { line: usize, col: usize, message: String },
}

impl RgdError {
    pub fn position(&self) -> (usize, usize) {
        match self {
            RgdError::Syntax { line, col, .. } | RgdError::Semantic { line, col, .. } => (*line, *col),
        }
    }
}

/// Parses and resolves in one step.
pub fn load(text: &str) -> Result<Model, RgdError> {
    resolve(&parse_rgd(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    const F2: &str = "ringoid F2\n  object o\n  hom o o cyclic 2\n  compose o o o: 0 0 -> 1\n  identity o: 1\n";

    #[test]
    fn f2_document() {
        let m = load(F2).unwrap();
        let r = m.ringoid("F2").unwrap();
        assert_eq!(**r, catalog::prime_field(2));
        assert!(crate::validate(r).is_clean());
    }

    #[test]
    fn round_trip() {
        let doc = parse_rgd(F2).unwrap();
        assert_eq!(doc.to_string(), F2);
        assert_eq!(parse_rgd(&doc.to_string()).unwrap(), doc);
    }

    #[test]
    fn catalog_rings_print_and_reload() {
        for r in [
            catalog::matrix_ring_f2(),
            catalog::f2_c2(),
            catalog::zero_ring(),
            catalog::two_z4(),
            catalog::cyclic_over(2, 4),
        ] {
            let doc = ringoid_document(&r);
            let m = load(&doc.to_string()).unwrap();
            assert_eq!(**m.ringoid(r.name()).unwrap(), r, "{}", r.name());
        }
    }

    #[test]
    fn c2_groupoid_and_gset() {
        let text = "\
groupoid C2
  object *
  identity * e
  morphism * * t
  compose t t -> e
  inverse t t

gset free over C2
  point p
  point q
  act p t -> q
  act q t -> p
";
        let m = load(text).unwrap();
        assert_eq!(m.groupoid("C2").unwrap().num_arrows(), 2);
        assert_eq!(m.gset("free").unwrap().act(0, 1), 1);
    }

    #[test]
    fn unknown_object_is_semantic() {
        let e = load("ringoid R\n  object a\n  hom a b cyclic 2\n").unwrap_err();
        assert!(matches!(e, RgdError::Semantic { line: 3, col: 3, .. }), "{e:?}");
    }

    #[test]
    fn coordinate_out_of_range() {
        let e = load("ringoid R\n  object a\n  hom a a cyclic 2\n  identity a: 2\n").unwrap_err();
        assert!(e.to_string().contains("out of range"), "{e}");
    }
}
