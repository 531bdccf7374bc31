use crate::cat::fpcat::{FpCategory, Tri};
use crate::cat::quiver::{ArrowId, ObjId, PathTerm};
use crate::error::{Error, Result};

/// A functor between finitely presented categories, given on generators.
///
/// The functor does not own its endpoint categories; callers pass them to
/// every operation so the same data can be reused across constructions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functor {
    /// Image object per source object, indexed by `ObjId`.
    pub obj_map: Vec<ObjId>,
    /// Image path per source generating arrow, indexed by `ArrowId`.
    pub arrow_map: Vec<PathTerm>,
}

impl Functor {
    pub fn new(
        src: &FpCategory,
        tgt: &FpCategory,
        obj_map: Vec<ObjId>,
        arrow_map: Vec<PathTerm>,
    ) -> Result<Self> {
        if obj_map.len() != src.quiver.objects.len() || arrow_map.len() != src.quiver.arrows.len()
        {
            return Err(Error::Invalid("functor data has wrong arity".into()));
        }
        for o in &obj_map {
            if o.idx() >= tgt.quiver.objects.len() {
                return Err(Error::UnknownObject(format!("object index {}", o.0)));
            }
        }
        for a in src.quiver.arrow_ids() {
            let img = &arrow_map[a.idx()];
            if img.src != obj_map[src.quiver.src(a).idx()]
                || img.tgt != obj_map[src.quiver.tgt(a).idx()]
            {
                return Err(Error::Invalid(format!(
                    "image of `{}` has wrong endpoints",
                    src.quiver.arrow_name(a)
                )));
            }
        }
        Ok(Functor { obj_map, arrow_map })
    }

    /// Builds a functor from name-to-name assignments. Arrow images are paths
    /// written as `;`-separated arrow names or `id(X)`.
    pub fn by_names(
        src: &FpCategory,
        tgt: &FpCategory,
        objects: &[(&str, &str)],
        arrows: &[(&str, &str)],
    ) -> Result<Self> {
        let mut obj_map = vec![None; src.quiver.objects.len()];
        for (a, b) in objects {
            obj_map[src.quiver.obj(a)?.idx()] = Some(tgt.quiver.obj(b)?);
        }
        let obj_map: Vec<ObjId> = obj_map
            .into_iter()
            .enumerate()
            .map(|(i, o)| o.ok_or_else(|| Error::UnknownObject(src.quiver.objects[i].clone())))
            .collect::<Result<_>>()?;
        let mut arrow_map = vec![None; src.quiver.arrows.len()];
        for (a, expr) in arrows {
            let id = src.quiver.arrow(a)?;
            arrow_map[id.idx()] = Some(parse_path(tgt, expr)?);
        }
        let arrow_map: Vec<PathTerm> = arrow_map
            .into_iter()
            .enumerate()
            .map(|(i, p)| {
                p.ok_or_else(|| Error::UnknownArrow(src.quiver.arrows[i].name.clone()))
            })
            .collect::<Result<_>>()?;
        Functor::new(src, tgt, obj_map, arrow_map)
    }

    /// The identity functor on `c`.
    pub fn identity(c: &FpCategory) -> Self {
        Functor {
            obj_map: c.quiver.object_ids().collect(),
            arrow_map: c
                .quiver
                .arrow_ids()
                .map(|a| PathTerm::single(&c.quiver, a))
                .collect(),
        }
    }

    pub fn map_obj(&self, o: ObjId) -> ObjId {
        self.obj_map[o.idx()]
    }

    pub fn map_arrow(&self, a: ArrowId) -> &PathTerm {
        &self.arrow_map[a.idx()]
    }

    /// Image of a path, normalized in the target.
    pub fn map_path(&self, tgt: &FpCategory, p: &PathTerm) -> Result<PathTerm> {
        let mut acc = PathTerm::identity(self.map_obj(p.src));
        for &a in &p.arrows {
            acc = acc.then(&self.arrow_map[a.idx()])?;
        }
        Ok(tgt.normalize(&acc))
    }

    /// Checks that the functor respects every relation of the source.
    /// `Equal` if all relations verifiably hold, `Distinct` if any image
    /// pair is verifiably different, `Unknown` otherwise.
    pub fn check(&self, src: &FpCategory, tgt: &FpCategory) -> Result<Tri> {
        let mut out = Tri::Equal;
        for (l, r) in &src.relations {
            let fl = self.map_path(tgt, l)?;
            let fr = self.map_path(tgt, r)?;
            match tgt.morphisms_equal(&fl, &fr)? {
                Tri::Equal => {}
                Tri::Distinct => return Ok(Tri::Distinct),
                Tri::Unknown => out = Tri::Unknown,
            }
        }
        Ok(out)
    }

    /// Diagrammatic composite `self;other` (apply `self` first).
    pub fn then(&self, mid: &FpCategory, tgt: &FpCategory, other: &Functor) -> Result<Functor> {
        let _ = mid;
        let obj_map = self.obj_map.iter().map(|&o| other.map_obj(o)).collect();
        let arrow_map = self
            .arrow_map
            .iter()
            .map(|p| other.map_path(tgt, p))
            .collect::<Result<_>>()?;
        Ok(Functor { obj_map, arrow_map })
    }
}

/// Parses `id(X)` or a `;`-separated sequence of arrow names in `c`.
pub fn parse_path(c: &FpCategory, expr: &str) -> Result<PathTerm> {
    let expr = expr.trim();
    if let Some(rest) = expr.strip_prefix("id(") {
        let name = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Invalid(format!("malformed identity `{expr}`")))?;
        return Ok(PathTerm::identity(c.quiver.obj(name.trim())?));
    }
    let arrows = expr
        .split(';')
        .map(|n| c.quiver.arrow(n.trim()))
        .collect::<Result<Vec<_>>>()?;
    PathTerm::from_arrows(&c.quiver, arrows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::fpcat::{Backend, Bounds};
    use crate::cat::quiver::Quiver;

    fn z2() -> FpCategory {
        let q = Quiver::new(
            vec!["X".into()],
            vec![("f".into(), "X".into(), "X".into())],
        )
        .unwrap();
        let f = q.arrow("f").unwrap();
        let ff = PathTerm::from_arrows(&q, vec![f, f]).unwrap();
        let rel = (ff, PathTerm::identity(q.obj("X").unwrap()));
        FpCategory::new(q, vec![rel], Backend::Rewrite(Bounds::default())).unwrap()
    }

    #[test]
    fn identity_functor_checks() {
        let c = z2();
        let f = Functor::identity(&c);
        assert_eq!(f.check(&c, &c).unwrap(), Tri::Equal);
    }

    #[test]
    fn relation_violation_detected() {
        let c = z2();
        let free = {
            let q = Quiver::new(
                vec!["X".into()],
                vec![("f".into(), "X".into(), "X".into())],
            )
            .unwrap();
            FpCategory::new(q, vec![], Backend::Rewrite(Bounds::default())).unwrap()
        };
        // map z2's generator to the free loop: f;f = id is not preserved
        let f = Functor::by_names(&c, &free, &[("X", "X")], &[("f", "f")]).unwrap();
        assert_eq!(f.check(&c, &free).unwrap(), Tri::Distinct);
    }

    #[test]
    fn functor_composition() {
        let c = z2();
        let idf = Functor::identity(&c);
        let comp = idf.then(&c, &c, &idf).unwrap();
        assert_eq!(comp, idf);
    }

    #[test]
    fn bad_endpoints_rejected() {
        let c = z2();
        let q = Quiver::new(
            vec!["A".into(), "B".into()],
            vec![("g".into(), "A".into(), "B".into())],
        )
        .unwrap();
        let d = FpCategory::new(q, vec![], Backend::Rewrite(Bounds::default())).unwrap();
        let err = Functor::by_names(&c, &d, &[("X", "A")], &[("f", "g")]);
        assert!(err.is_err());
    }
}
