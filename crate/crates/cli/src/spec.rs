//! Textual group constructor expressions.
//!
//! Grammar, all lowercase tags:
//!
//! ```text
//! spec := cyclic:N | dihedral:N | dicyclic:N | sym:N | alt:N
//!       | elemab:P,K | heisenberg:P
//!       | product:spec,spec
//!       | file:PATH | gens:PATH
//! ```
//!
//! `product` nests (`product:product:cyclic:2,cyclic:3,sym:3`). `file:` and
//! `gens:` consume the rest of the expression as a filesystem path, so they
//! cannot appear in the first slot of a `product`.

use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

use smallclass::families::{
    direct_product, make_alternating, make_cyclic, make_dicyclic, make_dihedral,
    make_elementary_abelian, make_heisenberg, make_symmetric,
};
use smallclass::{BuildError, GroupTable};

use crate::catalog::{self, CatalogError, RecordKind};

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("unknown family {family:?} at byte {at} of group spec")]
    UnknownFamily { family: String, at: usize },
    #[error("group spec parse error at byte {at}: {message}")]
    Parse { at: usize, message: String },
}

/// A parsed group constructor expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Dicyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    ElementaryAbelian(usize, usize),
    Heisenberg(usize),
    Product(Box<GroupSpec>, Box<GroupSpec>),
    File(PathBuf),
    Gens(PathBuf),
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec, SpecError> {
        let mut p = Parser { text, pos: 0 };
        let spec = p.spec()?;
        if p.pos != text.len() {
            return Err(SpecError::Parse {
                at: p.pos,
                message: format!("trailing input {:?}", &text[p.pos..]),
            });
        }
        Ok(spec)
    }

    /// Canonical text form; [`GroupSpec::parse`] inverts it.
    pub fn render(&self) -> String {
        match self {
            GroupSpec::Cyclic(n) => format!("cyclic:{n}"),
            GroupSpec::Dihedral(n) => format!("dihedral:{n}"),
            GroupSpec::Dicyclic(n) => format!("dicyclic:{n}"),
            GroupSpec::Symmetric(n) => format!("sym:{n}"),
            GroupSpec::Alternating(n) => format!("alt:{n}"),
            GroupSpec::ElementaryAbelian(p, k) => format!("elemab:{p},{k}"),
            GroupSpec::Heisenberg(p) => format!("heisenberg:{p}"),
            GroupSpec::Product(a, b) => format!("product:{},{}", a.render(), b.render()),
            GroupSpec::File(path) => format!("file:{}", path.display()),
            GroupSpec::Gens(path) => format!("gens:{}", path.display()),
        }
    }

    /// Constructs the group, capping any open-ended construction (products,
    /// generator closures) at `max_order` elements.
    pub fn build(&self, max_order: usize) -> Result<GroupTable, BuildSpecError> {
        let table = match self {
            GroupSpec::Cyclic(n) => make_cyclic(*n)?,
            GroupSpec::Dihedral(n) => make_dihedral(*n)?,
            GroupSpec::Dicyclic(n) => make_dicyclic(*n)?,
            GroupSpec::Symmetric(n) => make_symmetric(*n)?,
            GroupSpec::Alternating(n) => make_alternating(*n)?,
            GroupSpec::ElementaryAbelian(p, k) => make_elementary_abelian(*p, *k)?,
            GroupSpec::Heisenberg(p) => make_heisenberg(*p)?,
            GroupSpec::Product(a, b) => {
                direct_product(&a.build(max_order)?, &b.build(max_order)?, max_order)?
            }
            GroupSpec::File(path) => {
                catalog::load_single(path, RecordKind::Cayley, max_order)?
            }
            GroupSpec::Gens(path) => catalog::load_single(path, RecordKind::Generators, max_order)?,
        };
        Ok(table)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Failure while turning a spec into a table: either a parameter/validation
/// problem from the builders or a file ingestion problem.
#[derive(Debug, Error)]
pub enum BuildSpecError {
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn spec(&mut self) -> Result<GroupSpec, SpecError> {
        let start = self.pos;
        let tag_len = self
            .rest()
            .find(':')
            .ok_or_else(|| SpecError::Parse {
                at: start,
                message: "expected FAMILY:ARGS".to_string(),
            })?;
        let tag = &self.rest()[..tag_len];
        let tag_owned = tag.to_string();
        self.pos += tag_len + 1;
        match tag_owned.as_str() {
            "cyclic" => Ok(GroupSpec::Cyclic(self.number()?)),
            "dihedral" => Ok(GroupSpec::Dihedral(self.number()?)),
            "dicyclic" => Ok(GroupSpec::Dicyclic(self.number()?)),
            "sym" => Ok(GroupSpec::Symmetric(self.number()?)),
            "alt" => Ok(GroupSpec::Alternating(self.number()?)),
            "heisenberg" => Ok(GroupSpec::Heisenberg(self.number()?)),
            "elemab" => {
                let p = self.number()?;
                self.comma()?;
                let k = self.number()?;
                Ok(GroupSpec::ElementaryAbelian(p, k))
            }
            "product" => {
                let a = self.spec()?;
                self.comma()?;
                let b = self.spec()?;
                Ok(GroupSpec::Product(Box::new(a), Box::new(b)))
            }
            "file" | "gens" => {
                let path = self.rest();
                if path.is_empty() {
                    return Err(SpecError::Parse {
                        at: self.pos,
                        message: "expected a file path".to_string(),
                    });
                }
                self.pos = self.text.len();
                let path = PathBuf::from(path);
                Ok(if tag_owned == "file" {
                    GroupSpec::File(path)
                } else {
                    GroupSpec::Gens(path)
                })
            }
            _ => Err(SpecError::UnknownFamily {
                family: tag_owned,
                at: start,
            }),
        }
    }

    fn number(&mut self) -> Result<usize, SpecError> {
        let digits: usize = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(SpecError::Parse {
                at: self.pos,
                message: "expected a number".to_string(),
            });
        }
        let value = self.rest()[..digits].parse().map_err(|_| SpecError::Parse {
            at: self.pos,
            message: "number out of range".to_string(),
        })?;
        self.pos += digits;
        Ok(value)
    }

    fn comma(&mut self) -> Result<(), SpecError> {
        if self.rest().starts_with(',') {
            self.pos += 1;
            Ok(())
        } else {
            Err(SpecError::Parse {
                at: self.pos,
                message: "expected ','".to_string(),
            })
        }
    }
}
