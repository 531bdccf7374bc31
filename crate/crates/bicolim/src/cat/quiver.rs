use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Index of an object within its category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjId(pub u32);

/// Index of a generating arrow within its category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArrowId(pub u32);

impl ObjId {
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl ArrowId {
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub src: ObjId,
    pub tgt: ObjId,
}

/// A finite directed multigraph with named objects and arrows.
#[derive(Debug, Clone, Default)]
pub struct Quiver {
    pub objects: Vec<String>,
    pub arrows: Vec<Arrow>,
    obj_index: BTreeMap<String, ObjId>,
    arrow_index: BTreeMap<String, ArrowId>,
}

impl Quiver {
    pub fn new(objects: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Self> {
        let mut q = Quiver::default();
        for o in objects {
            q.add_object(o)?;
        }
        for (name, src, tgt) in arrows {
            let s = q.obj(&src)?;
            let t = q.obj(&tgt)?;
            q.add_arrow(name, s, t)?;
        }
        Ok(q)
    }

    pub fn add_object(&mut self, name: String) -> Result<ObjId> {
        if self.obj_index.contains_key(&name) {
            return Err(Error::DuplicateName(name));
        }
        let id = ObjId(self.objects.len() as u32);
        self.obj_index.insert(name.clone(), id);
        self.objects.push(name);
        Ok(id)
    }

    pub fn add_arrow(&mut self, name: String, src: ObjId, tgt: ObjId) -> Result<ArrowId> {
        if self.arrow_index.contains_key(&name) {
            return Err(Error::DuplicateName(name));
        }
        let id = ArrowId(self.arrows.len() as u32);
        self.arrow_index.insert(name.clone(), id);
        self.arrows.push(Arrow { name, src, tgt });
        Ok(id)
    }

    pub fn obj(&self, name: &str) -> Result<ObjId> {
        self.obj_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownObject(name.to_string()))
    }

    pub fn arrow(&self, name: &str) -> Result<ArrowId> {
        self.arrow_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn obj_name(&self, o: ObjId) -> &str {
        &self.objects[o.idx()]
    }

    pub fn arrow_name(&self, a: ArrowId) -> &str {
        &self.arrows[a.idx()].name
    }

    pub fn src(&self, a: ArrowId) -> ObjId {
        self.arrows[a.idx()].src
    }

    pub fn tgt(&self, a: ArrowId) -> ObjId {
        self.arrows[a.idx()].tgt
    }

    pub fn object_ids(&self) -> impl Iterator<Item = ObjId> + '_ {
        (0..self.objects.len() as u32).map(ObjId)
    }

    pub fn arrow_ids(&self) -> impl Iterator<Item = ArrowId> + '_ {
        (0..self.arrows.len() as u32).map(ArrowId)
    }

    /// Arrows whose source is `o`.
    pub fn arrows_from(&self, o: ObjId) -> impl Iterator<Item = ArrowId> + '_ {
        self.arrow_ids().filter(move |&a| self.src(a) == o)
    }
}

/// A composable sequence of generating arrows, or an identity.
///
/// Composition is diagrammatic: `arrows[0]` is applied first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathTerm {
    pub src: ObjId,
    pub tgt: ObjId,
    pub arrows: Vec<ArrowId>,
}

impl PathTerm {
    pub fn identity(o: ObjId) -> Self {
        PathTerm { src: o, tgt: o, arrows: Vec::new() }
    }

    pub fn single(q: &Quiver, a: ArrowId) -> Self {
        PathTerm { src: q.src(a), tgt: q.tgt(a), arrows: vec![a] }
    }

    /// Builds a path from a nonempty arrow sequence, checking composability.
    pub fn from_arrows(q: &Quiver, arrows: Vec<ArrowId>) -> Result<Self> {
        if arrows.is_empty() {
            return Err(Error::Invalid("empty arrow sequence needs a base object".into()));
        }
        for w in arrows.windows(2) {
            if q.tgt(w[0]) != q.src(w[1]) {
                return Err(Error::NotComposable(format!(
                    "{} then {}",
                    q.arrow_name(w[0]),
                    q.arrow_name(w[1])
                )));
            }
        }
        Ok(PathTerm {
            src: q.src(arrows[0]),
            tgt: q.tgt(*arrows.last().unwrap()),
            arrows,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Diagrammatic composite `self;other`.
    pub fn then(&self, other: &PathTerm) -> Result<PathTerm> {
        if self.tgt != other.src {
            return Err(Error::NotComposable(format!(
                "target {:?} != source {:?}",
                self.tgt, other.src
            )));
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Ok(PathTerm { src: self.src, tgt: other.tgt, arrows })
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> PathDisplay<'a> {
        PathDisplay { path: self, quiver: q }
    }
}

pub struct PathDisplay<'a> {
    path: &'a PathTerm,
    quiver: &'a Quiver,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_identity() {
            write!(f, "id({})", self.quiver.obj_name(self.path.src))
        } else {
            let names: Vec<&str> =
                self.path.arrows.iter().map(|&a| self.quiver.arrow_name(a)).collect();
            write!(f, "{}", names.join(";"))
        }
    }
}
