use std::collections::BTreeSet;

use crate::cat::fpcat::{FpCategory, Tri};
use crate::cat::functor::Functor;
use crate::cat::quiver::{ObjId, PathTerm};
use crate::cat::transform::Transformation;
use crate::error::{Error, Result};

/// Exhaustively enumerates functors `src -> tgt`.
///
/// Requires the target to be saturated so arrow images range over exact
/// hom-set representatives. `limit` caps the number of functors returned;
/// exceeding it is a `BoundExceeded` error.
pub fn enumerate_functors(
    src: &FpCategory,
    tgt: &FpCategory,
    limit: usize,
) -> Result<Vec<Functor>> {
    tgt.require_saturated()?;
    let nobj = src.quiver.objects.len();
    let tgt_objs: Vec<ObjId> = tgt.quiver.object_ids().collect();
    let mut out = Vec::new();
    let mut obj_map: Vec<ObjId> = Vec::with_capacity(nobj);
    enumerate_obj(src, tgt, &tgt_objs, &mut obj_map, &mut out, limit)?;
    Ok(out)
}

fn enumerate_obj(
    src: &FpCategory,
    tgt: &FpCategory,
    tgt_objs: &[ObjId],
    obj_map: &mut Vec<ObjId>,
    out: &mut Vec<Functor>,
    limit: usize,
) -> Result<()> {
    if obj_map.len() == src.quiver.objects.len() {
        let mut arrow_map: Vec<PathTerm> = Vec::with_capacity(src.quiver.arrows.len());
        return enumerate_arr(src, tgt, obj_map, &mut arrow_map, out, limit);
    }
    for &o in tgt_objs {
        obj_map.push(o);
        enumerate_obj(src, tgt, tgt_objs, obj_map, out, limit)?;
        obj_map.pop();
    }
    Ok(())
}

fn enumerate_arr(
    src: &FpCategory,
    tgt: &FpCategory,
    obj_map: &[ObjId],
    arrow_map: &mut Vec<PathTerm>,
    out: &mut Vec<Functor>,
    limit: usize,
) -> Result<()> {
    if arrow_map.len() == src.quiver.arrows.len() {
        let cand = Functor { obj_map: obj_map.to_vec(), arrow_map: arrow_map.clone() };
        if cand.check(src, tgt)? == Tri::Equal {
            if out.len() >= limit {
                return Err(Error::BoundExceeded(format!(
                    "more than {limit} functors found"
                )));
            }
            out.push(cand);
        }
        return Ok(());
    }
    let a = crate::cat::quiver::ArrowId(arrow_map.len() as u32);
    let s = obj_map[src.quiver.src(a).idx()];
    let t = obj_map[src.quiver.tgt(a).idx()];
    for img in tgt.hom(s, t)? {
        arrow_map.push(img);
        enumerate_arr(src, tgt, obj_map, arrow_map, out, limit)?;
        arrow_map.pop();
    }
    Ok(())
}

/// Exhaustively enumerates natural transformations `f => g`.
pub fn enumerate_transformations(
    src: &FpCategory,
    tgt: &FpCategory,
    f: &Functor,
    g: &Functor,
    limit: usize,
) -> Result<Vec<Transformation>> {
    tgt.require_saturated()?;
    let per_obj: Vec<Vec<PathTerm>> = src
        .quiver
        .object_ids()
        .map(|o| tgt.hom(f.map_obj(o), g.map_obj(o)))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    let mut comps: Vec<PathTerm> = Vec::new();
    fn rec(
        src: &FpCategory,
        tgt: &FpCategory,
        f: &Functor,
        g: &Functor,
        per_obj: &[Vec<PathTerm>],
        comps: &mut Vec<PathTerm>,
        out: &mut Vec<Transformation>,
        limit: usize,
    ) -> Result<()> {
        if comps.len() == per_obj.len() {
            let cand = Transformation { components: comps.clone() };
            if cand.check_natural(src, tgt, f, g)? == Tri::Equal {
                if out.len() >= limit {
                    return Err(Error::BoundExceeded(format!(
                        "more than {limit} transformations found"
                    )));
                }
                out.push(cand);
            }
            return Ok(());
        }
        for c in &per_obj[comps.len()] {
            comps.push(c.clone());
            rec(src, tgt, f, g, per_obj, comps, out, limit)?;
            comps.pop();
        }
        Ok(())
    }
    rec(src, tgt, f, g, &per_obj, &mut comps, &mut out, limit)?;
    Ok(out)
}

/// Whether two objects are isomorphic (requires saturation).
pub fn objects_isomorphic(c: &FpCategory, a: ObjId, b: ObjId) -> Result<bool> {
    if a == b {
        return Ok(true);
    }
    for p in c.hom(a, b)? {
        if c.is_invertible(&p)? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub essentially_surjective: bool,
    pub fully_faithful: bool,
    /// Witness of the first failure found, if any.
    pub failure: Option<String>,
}

impl EquivalenceReport {
    pub fn is_equivalence(&self) -> bool {
        self.essentially_surjective && self.fully_faithful
    }
}

/// Checks whether `f: src -> tgt` is an equivalence of categories by
/// exhaustive enumeration. Both categories must be saturated.
pub fn check_equivalence(
    src: &FpCategory,
    tgt: &FpCategory,
    f: &Functor,
) -> Result<EquivalenceReport> {
    src.require_saturated()?;
    tgt.require_saturated()?;
    let mut report = EquivalenceReport {
        essentially_surjective: true,
        fully_faithful: true,
        failure: None,
    };
    'tgt_obj: for d in tgt.quiver.object_ids() {
        for s in src.quiver.object_ids() {
            if objects_isomorphic(tgt, f.map_obj(s), d)? {
                continue 'tgt_obj;
            }
        }
        report.essentially_surjective = false;
        if report.failure.is_none() {
            report.failure = Some(format!(
                "object `{}` is not in the essential image",
                tgt.quiver.obj_name(d)
            ));
        }
        break;
    }
    for a in src.quiver.object_ids() {
        for b in src.quiver.object_ids() {
            let dom = src.hom(a, b)?;
            let cod = tgt.hom(f.map_obj(a), f.map_obj(b))?;
            let mut hit: BTreeSet<usize> = BTreeSet::new();
            for p in &dom {
                let img = f.map_path(tgt, p)?;
                let mut found = None;
                for (i, q) in cod.iter().enumerate() {
                    if tgt.morphisms_equal(&img, q)? == Tri::Equal {
                        found = Some(i);
                        break;
                    }
                }
                let i = found.ok_or_else(|| {
                    Error::Invalid("functor image missing from saturated hom".into())
                })?;
                if !hit.insert(i) {
                    report.fully_faithful = false;
                    if report.failure.is_none() {
                        report.failure = Some(format!(
                            "not faithful on Hom({}, {})",
                            src.quiver.obj_name(a),
                            src.quiver.obj_name(b)
                        ));
                    }
                }
            }
            if hit.len() < cod.len() {
                report.fully_faithful = false;
                if report.failure.is_none() {
                    report.failure = Some(format!(
                        "not full on Hom({}, {})",
                        src.quiver.obj_name(a),
                        src.quiver.obj_name(b)
                    ));
                }
            }
        }
    }
    Ok(report)
}
