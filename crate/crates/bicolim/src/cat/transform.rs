use crate::cat::fpcat::{FpCategory, Tri};
use crate::cat::functor::Functor;
use crate::cat::quiver::{ObjId, PathTerm};
use crate::error::{Error, Result};

/// A natural transformation between parallel functors, given by one
/// component per source object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transformation {
    /// Component at each source object, indexed by `ObjId`; a morphism
    /// `F(A) -> G(A)` of the target category.
    pub components: Vec<PathTerm>,
}

impl Transformation {
    pub fn new(
        src: &FpCategory,
        f: &Functor,
        g: &Functor,
        components: Vec<PathTerm>,
    ) -> Result<Self> {
        if components.len() != src.quiver.objects.len() {
            return Err(Error::Invalid("transformation data has wrong arity".into()));
        }
        for o in src.quiver.object_ids() {
            let c = &components[o.idx()];
            if c.src != f.map_obj(o) || c.tgt != g.map_obj(o) {
                return Err(Error::Invalid(format!(
                    "component at `{}` has wrong endpoints",
                    src.quiver.obj_name(o)
                )));
            }
        }
        Ok(Transformation { components })
    }

    pub fn identity(src: &FpCategory, f: &Functor) -> Self {
        Transformation {
            components: src
                .quiver
                .object_ids()
                .map(|o| PathTerm::identity(f.map_obj(o)))
                .collect(),
        }
    }

    pub fn at(&self, o: ObjId) -> &PathTerm {
        &self.components[o.idx()]
    }

    /// Checks naturality against every generating arrow of the source:
    /// `F(a);t_B = t_A;G(a)` for `a: A -> B`.
    pub fn check_natural(
        &self,
        src: &FpCategory,
        tgt: &FpCategory,
        f: &Functor,
        g: &Functor,
    ) -> Result<Tri> {
        let mut out = Tri::Equal;
        for a in src.quiver.arrow_ids() {
            let s = src.quiver.src(a);
            let t = src.quiver.tgt(a);
            let lhs = tgt.compose(f.map_arrow(a), self.at(t))?;
            let rhs = tgt.compose(self.at(s), g.map_arrow(a))?;
            match tgt.morphisms_equal(&lhs, &rhs)? {
                Tri::Equal => {}
                Tri::Distinct => return Ok(Tri::Distinct),
                Tri::Unknown => out = Tri::Unknown,
            }
        }
        Ok(out)
    }

    /// Vertical composite `self;other` (components composed in the target).
    pub fn then(&self, tgt: &FpCategory, other: &Transformation) -> Result<Transformation> {
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| tgt.compose(a, b))
            .collect::<Result<_>>()?;
        Ok(Transformation { components })
    }

    /// Left whiskering `h * self`: precompose the transformation with a
    /// functor `h` into the source of the parallel pair.
    pub fn whisker_left(&self, h: &Functor, h_src: &FpCategory) -> Transformation {
        Transformation {
            components: h_src
                .quiver
                .object_ids()
                .map(|o| self.components[h.map_obj(o).idx()].clone())
                .collect(),
        }
    }

    /// Right whiskering `self * h`: postcompose with a functor out of the
    /// target of the parallel pair.
    pub fn whisker_right(&self, h: &Functor, h_tgt: &FpCategory) -> Result<Transformation> {
        let components = self
            .components
            .iter()
            .map(|c| h.map_path(h_tgt, c))
            .collect::<Result<_>>()?;
        Ok(Transformation { components })
    }

    /// Decides invertibility of every component (requires saturated target).
    pub fn is_invertible(&self, tgt: &FpCategory) -> Result<bool> {
        for c in &self.components {
            if !tgt.is_invertible(c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
