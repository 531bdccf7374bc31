use std::collections::{BTreeMap, BTreeSet};

use crate::cat::fpcat::{Backend, Bounds, FpCategory, Tri};
use crate::cat::quiver::{ArrowId, ObjId, PathTerm, Quiver};
use crate::error::{Error, Result};
use crate::tensor::monoid::ObjectMonoid;

/// A generating morphism of a tensor category presentation, between
/// single monoid elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proto {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// One factor of a tensor-context path: the generator `proto` whiskered
/// by monoid elements on both sides, `left (x) proto (x) right`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TTerm {
    pub left: usize,
    pub proto: usize,
    pub right: usize,
}

/// A composable sequence of whiskered generators starting at the monoid
/// element `src` (which also types the empty path).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TPath {
    pub src: usize,
    pub terms: Vec<TTerm>,
}

impl TPath {
    pub fn identity(src: usize) -> Self {
        TPath { src, terms: vec![] }
    }

    pub fn single(src: usize, term: TTerm) -> Self {
        TPath { src, terms: vec![term] }
    }
}

/// How the symmetry of a presented tensor category is given.
#[derive(Debug, Clone)]
pub enum SigmaSpec {
    /// `sigma` is the identity; requires a commutative object monoid.
    Identity,
    /// Fresh symmetry generators with the symmetry axioms imposed.
    Free,
    /// User-supplied paths for every pair of non-unit elements whose
    /// products both ways are defined; the axioms are checked, not
    /// imposed.
    Explicit(BTreeMap<(usize, usize), TPath>),
}

#[derive(Debug, Clone)]
pub struct TensorPresentation {
    pub monoid: ObjectMonoid,
    pub protos: Vec<Proto>,
    pub relations: Vec<(TPath, TPath)>,
    pub sigma: SigmaSpec,
}

/// A strict symmetric tensor category over a finitely presented carrier.
///
/// Objects are the elements of the object monoid; carrier arrows are all
/// defined whiskerings `a (x) proto (x) b` of the generating morphisms.
#[derive(Debug, Clone)]
pub struct TensorCategory {
    pub monoid: ObjectMonoid,
    pub protos: Vec<Proto>,
    pub carrier: FpCategory,
    /// `(left, proto, right) -> carrier arrow`.
    whisker: BTreeMap<(usize, usize, usize), ArrowId>,
    /// Context of each carrier arrow, indexed by `ArrowId`.
    arrow_ctx: Vec<(usize, usize, usize)>,
    /// Symmetry components for non-unit pairs; unit pairs are identities.
    sigma: BTreeMap<(usize, usize), PathTerm>,
    /// Whether symmetry generators were freshly adjoined.
    pub sigma_free: bool,
}

impl TensorCategory {
    pub fn build(pres: &TensorPresentation, bounds: Bounds) -> Result<TensorCategory> {
        TensorCategory::build_with(pres, bounds, &[])
    }

    /// Like [`TensorCategory::build`], but for explicit symmetry also
    /// imposes naturality of the symmetry against the generators listed in
    /// `extra_nat` (used when extending an existing category with fresh
    /// generators).
    pub fn build_with(
        pres: &TensorPresentation,
        bounds: Bounds,
        extra_nat: &[usize],
    ) -> Result<TensorCategory> {
        let monoid = pres.monoid.clone();
        let n = monoid.len();
        let unit = monoid.unit;
        if matches!(pres.sigma, SigmaSpec::Identity) && !monoid.is_commutative() {
            return Err(Error::IncoherentSymmetry(
                "identity symmetry needs a commutative object monoid".into(),
            ));
        }
        let mut protos = pres.protos.clone();
        let mut sigma_proto: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        if matches!(pres.sigma, SigmaSpec::Free) {
            for x in 0..n {
                for y in 0..n {
                    if x == unit || y == unit {
                        continue;
                    }
                    if let (Some(xy), Some(yx)) =
                        (monoid.prod_opt(x, y), monoid.prod_opt(y, x))
                    {
                        sigma_proto.insert((x, y), protos.len());
                        protos.push(Proto {
                            name: format!("sigma@{}@{}", monoid.name(x), monoid.name(y)),
                            src: xy,
                            tgt: yx,
                        });
                    }
                }
            }
        }

        let mut q = Quiver::default();
        for e in &monoid.elems {
            q.add_object(e.clone())?;
        }
        let mut whisker: BTreeMap<(usize, usize, usize), ArrowId> = BTreeMap::new();
        let mut arrow_ctx: Vec<(usize, usize, usize)> = Vec::new();
        for (i, p) in protos.iter().enumerate() {
            for a in 0..n {
                for b in 0..n {
                    let (s, t) = match (
                        monoid.prod3_opt(a, p.src, b),
                        monoid.prod3_opt(a, p.tgt, b),
                    ) {
                        (Some(s), Some(t)) => (s, t),
                        _ => continue,
                    };
                    let base = if a == unit && b == unit {
                        p.name.clone()
                    } else {
                        format!("{}@{}@{}", monoid.name(a), p.name, monoid.name(b))
                    };
                    let mut name = base;
                    while q.arrow(&name).is_ok() {
                        name.push('_');
                    }
                    let id = q.add_arrow(name, ObjId(s as u32), ObjId(t as u32))?;
                    whisker.insert((a, i, b), id);
                    arrow_ctx.push((a, i, b));
                }
            }
        }

        let term_arrow = |t: &TTerm| -> Result<ArrowId> {
            whisker.get(&(t.left, t.proto, t.right)).copied().ok_or_else(|| {
                Error::UndefinedProduct(format!(
                    "whisker {} (x) {} (x) {}",
                    monoid.name(t.left),
                    protos[t.proto].name,
                    monoid.name(t.right)
                ))
            })
        };
        let tpath = |p: &TPath| -> Result<PathTerm> {
            let mut cur = ObjId(p.src as u32);
            let mut arrows = Vec::new();
            for t in &p.terms {
                let a = term_arrow(t)?;
                if q.src(a) != cur {
                    return Err(Error::NotComposable(format!(
                        "tensor path at `{}`",
                        q.arrow_name(a)
                    )));
                }
                cur = q.tgt(a);
                arrows.push(a);
            }
            Ok(PathTerm { src: ObjId(p.src as u32), tgt: cur, arrows })
        };
        // whisker a carrier-level path by an outer context `c (x) - (x) d`
        let whisk_raw = |p: &PathTerm, c: usize, d: usize| -> Option<PathTerm> {
            let src = monoid.prod3_opt(c, p.src.idx(), d)?;
            let tgt = monoid.prod3_opt(c, p.tgt.idx(), d)?;
            let mut arrows = Vec::new();
            for &x in &p.arrows {
                let (a, i, b) = arrow_ctx[x.idx()];
                let ca = monoid.prod_opt(c, a)?;
                let bd = monoid.prod_opt(b, d)?;
                arrows.push(*whisker.get(&(ca, i, bd))?);
            }
            Some(PathTerm { src: ObjId(src as u32), tgt: ObjId(tgt as u32), arrows })
        };

        // symmetry components
        let mut sigma: BTreeMap<(usize, usize), PathTerm> = BTreeMap::new();
        for x in 0..n {
            for y in 0..n {
                if x == unit || y == unit {
                    continue;
                }
                let (xy, yx) = match (monoid.prod_opt(x, y), monoid.prod_opt(y, x)) {
                    (Some(a), Some(b)) => (a, b),
                    _ => continue,
                };
                let path = match &pres.sigma {
                    SigmaSpec::Identity => PathTerm::identity(ObjId(xy as u32)),
                    SigmaSpec::Free => {
                        PathTerm::single(&q, whisker[&(unit, sigma_proto[&(x, y)], unit)])
                    }
                    SigmaSpec::Explicit(map) => {
                        let tp = map.get(&(x, y)).ok_or_else(|| {
                            Error::IncoherentSymmetry(format!(
                                "missing symmetry component ({}, {})",
                                monoid.name(x),
                                monoid.name(y)
                            ))
                        })?;
                        let p = tpath(tp)?;
                        if p.src != ObjId(xy as u32) || p.tgt != ObjId(yx as u32) {
                            return Err(Error::IncoherentSymmetry(format!(
                                "symmetry component ({}, {}) has wrong endpoints",
                                monoid.name(x),
                                monoid.name(y)
                            )));
                        }
                        p
                    }
                };
                sigma.insert((x, y), path);
            }
        }
        let sigma_of = |x: usize, y: usize| -> Option<PathTerm> {
            if x == unit || y == unit {
                let xy = monoid.prod_opt(x, y)?;
                return Some(PathTerm::identity(ObjId(xy as u32)));
            }
            sigma.get(&(x, y)).cloned()
        };

        // relation set, deduplicated
        let mut rels: BTreeSet<(PathTerm, PathTerm)> = BTreeSet::new();
        let mut add = |rels: &mut BTreeSet<(PathTerm, PathTerm)>, l: PathTerm, r: PathTerm| {
            if l != r {
                let pair = if l <= r { (l, r) } else { (r, l) };
                rels.insert(pair);
            }
        };
        let add_whiskered = |rels: &mut BTreeSet<(PathTerm, PathTerm)>,
                             l: &PathTerm,
                             r: &PathTerm| {
            for c in 0..n {
                for d in 0..n {
                    if let (Some(l2), Some(r2)) = (whisk_raw(l, c, d), whisk_raw(r, c, d)) {
                        if l2 != r2 {
                            let pair = if l2 <= r2 { (l2, r2) } else { (r2, l2) };
                            rels.insert(pair);
                        }
                    }
                }
            }
        };
        for (l, r) in &pres.relations {
            let lp = tpath(l)?;
            let rp = tpath(r)?;
            if lp.src != rp.src || lp.tgt != rp.tgt {
                return Err(Error::NonParallelRelation(format!(
                    "{} = {}",
                    lp.display(&q),
                    rp.display(&q)
                )));
            }
            add_whiskered(&mut rels, &lp, &rp);
        }
        // interchange of disjoint tensor factors
        for (i, p) in protos.iter().enumerate() {
            for (j, r) in protos.iter().enumerate() {
                for a in 0..n {
                    for m in 0..n {
                        for b in 0..n {
                            let parts = (|| {
                                let mub = monoid.prod3_opt(m, r.src, b)?;
                                let mvb = monoid.prod3_opt(m, r.tgt, b)?;
                                let aym = monoid.prod3_opt(a, p.tgt, m)?;
                                let axm = monoid.prod3_opt(a, p.src, m)?;
                                let a1 = *whisker.get(&(a, i, mub))?;
                                let a2 = *whisker.get(&(aym, j, b))?;
                                let b1 = *whisker.get(&(axm, j, b))?;
                                let b2 = *whisker.get(&(a, i, mvb))?;
                                Some((a1, a2, b1, b2))
                            })();
                            if let Some((a1, a2, b1, b2)) = parts {
                                let l = PathTerm::from_arrows(&q, vec![a1, a2]).unwrap();
                                let rr = PathTerm::from_arrows(&q, vec![b1, b2]).unwrap();
                                add(&mut rels, l, rr);
                            }
                        }
                    }
                }
            }
        }
        // symmetry axioms are imposed for identity and fresh symmetry;
        // explicit symmetry is checked instead, except that naturality
        // against designated fresh generators is imposed
        let impose_axioms = !matches!(pres.sigma, SigmaSpec::Explicit(_));
        let nat_protos: BTreeSet<usize> = if impose_axioms {
            (0..protos.len()).collect()
        } else {
            extra_nat.iter().copied().collect()
        };
        if impose_axioms {
            for x in 0..n {
                for y in 0..n {
                    let (s1, s2) = match (sigma_of(x, y), sigma_of(y, x)) {
                        (Some(a), Some(b)) => (a, b),
                        _ => continue,
                    };
                    if let Ok(c) = s1.then(&s2) {
                        add_whiskered(&mut rels, &c, &PathTerm::identity(c.src));
                    }
                }
            }
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if let Some(xy) = monoid.prod_opt(x, y) {
                            let lhs = sigma_of(xy, z);
                            let rhs = (|| {
                                let a = whisk_raw(&sigma_of(y, z)?, x, unit)?;
                                let b = whisk_raw(&sigma_of(x, z)?, unit, y)?;
                                a.then(&b).ok()
                            })();
                            if let (Some(l), Some(r)) = (lhs, rhs) {
                                add_whiskered(&mut rels, &l, &r);
                            }
                        }
                        if let Some(yz) = monoid.prod_opt(y, z) {
                            let lhs = sigma_of(x, yz);
                            let rhs = (|| {
                                let a = whisk_raw(&sigma_of(x, y)?, unit, z)?;
                                let b = whisk_raw(&sigma_of(x, z)?, y, unit)?;
                                a.then(&b).ok()
                            })();
                            if let (Some(l), Some(r)) = (lhs, rhs) {
                                add_whiskered(&mut rels, &l, &r);
                            }
                        }
                    }
                }
            }
        }
        {
            // naturality of sigma against carrier arrows
            for h in 0..arrow_ctx.len() {
                if !nat_protos.contains(&arrow_ctx[h].1) {
                    continue;
                }
                let h = ArrowId(h as u32);
                let hp = PathTerm::single(&q, h);
                let xx = q.src(h).idx();
                let yy = q.tgt(h).idx();
                for z in 0..n {
                    if z == unit {
                        continue;
                    }
                    let rel = (|| {
                        let hz = whisk_raw(&hp, unit, z)?;
                        let zh = whisk_raw(&hp, z, unit)?;
                        let l = hz.then(&sigma_of(yy, z)?).ok()?;
                        let r = sigma_of(xx, z)?.then(&zh).ok()?;
                        Some((l, r))
                    })();
                    if let Some((l, r)) = rel {
                        add(&mut rels, l, r);
                    }
                }
            }
        }

        let relations: Vec<(PathTerm, PathTerm)> = rels.into_iter().collect();
        let carrier = FpCategory::new(q, relations, Backend::Rewrite(bounds))?;
        let cat = TensorCategory {
            monoid,
            protos,
            carrier,
            whisker,
            arrow_ctx,
            sigma,
            sigma_free: matches!(pres.sigma, SigmaSpec::Free),
        };
        if matches!(pres.sigma, SigmaSpec::Explicit(_)) {
            if cat.check_symmetry()? == Tri::Distinct {
                return Err(Error::IncoherentSymmetry(
                    "explicit symmetry violates a symmetry axiom".into(),
                ));
            }
        }
        Ok(cat)
    }

    pub fn unit_obj(&self) -> ObjId {
        ObjId(self.monoid.unit as u32)
    }

    pub fn obj(&self, elem: usize) -> ObjId {
        ObjId(elem as u32)
    }

    /// The carrier arrow for a whiskered generator, if its context is
    /// defined.
    pub fn whisker_arrow(&self, left: usize, proto: usize, right: usize) -> Option<ArrowId> {
        self.whisker.get(&(left, proto, right)).copied()
    }

    pub fn arrow_context(&self, a: ArrowId) -> (usize, usize, usize) {
        self.arrow_ctx[a.idx()]
    }

    /// The generator as a carrier path at the trivial context.
    pub fn proto_path(&self, i: usize) -> PathTerm {
        PathTerm::single(
            &self.carrier.quiver,
            self.whisker[&(self.monoid.unit, i, self.monoid.unit)],
        )
    }

    /// Whiskers a carrier morphism by an outer context: `c (x) p (x) d`.
    pub fn whisk(&self, p: &PathTerm, c: usize, d: usize) -> Result<PathTerm> {
        let src = self
            .monoid
            .prod3_opt(c, p.src.idx(), d)
            .ok_or_else(|| self.undefined(c, p.src.idx(), d))?;
        let tgt = self
            .monoid
            .prod3_opt(c, p.tgt.idx(), d)
            .ok_or_else(|| self.undefined(c, p.tgt.idx(), d))?;
        let mut arrows = Vec::new();
        for &x in &p.arrows {
            let (a, i, b) = self.arrow_ctx[x.idx()];
            let ca = self
                .monoid
                .prod_opt(c, a)
                .ok_or_else(|| self.undefined2(c, a))?;
            let bd = self
                .monoid
                .prod_opt(b, d)
                .ok_or_else(|| self.undefined2(b, d))?;
            let arr = self.whisker.get(&(ca, i, bd)).ok_or_else(|| {
                Error::UndefinedProduct(format!(
                    "whisker {} (x) {} (x) {}",
                    self.monoid.name(ca),
                    self.protos[i].name,
                    self.monoid.name(bd)
                ))
            })?;
            arrows.push(*arr);
        }
        Ok(PathTerm { src: ObjId(src as u32), tgt: ObjId(tgt as u32), arrows })
    }

    fn undefined(&self, a: usize, b: usize, c: usize) -> Error {
        Error::UndefinedProduct(format!(
            "{} * {} * {}",
            self.monoid.name(a),
            self.monoid.name(b),
            self.monoid.name(c)
        ))
    }

    fn undefined2(&self, a: usize, b: usize) -> Error {
        Error::UndefinedProduct(format!(
            "{} * {}",
            self.monoid.name(a),
            self.monoid.name(b)
        ))
    }

    /// Tensor product of morphisms: `f (x) g = (f (x) src g);(tgt f (x) g)`,
    /// normalized.
    pub fn tensor_mor(&self, f: &PathTerm, g: &PathTerm) -> Result<PathTerm> {
        let l = self.whisk(f, self.monoid.unit, g.src.idx())?;
        let r = self.whisk(g, f.tgt.idx(), self.monoid.unit)?;
        Ok(self.carrier.normalize(&l.then(&r)?))
    }

    /// The symmetry component `sigma_{x,y}: x (x) y -> y (x) x`.
    pub fn sigma(&self, x: usize, y: usize) -> Result<PathTerm> {
        if x == self.monoid.unit || y == self.monoid.unit {
            let xy = self.monoid.prod(x, y)?;
            return Ok(PathTerm::identity(ObjId(xy as u32)));
        }
        self.sigma.get(&(x, y)).cloned().ok_or_else(|| {
            Error::IncoherentSymmetry(format!(
                "no symmetry component ({}, {})",
                self.monoid.name(x),
                self.monoid.name(y)
            ))
        })
    }

    /// Verifies the symmetry axioms (involutivity, multiplicativity and
    /// naturality against every carrier generator) within bounds.
    pub fn check_symmetry(&self) -> Result<Tri> {
        let n = self.monoid.len();
        let unit = self.monoid.unit;
        let mut out = Tri::Equal;
        let mut merge = |t: Tri, out: &mut Tri| match t {
            Tri::Equal => {}
            Tri::Distinct => *out = Tri::Distinct,
            Tri::Unknown => {
                if *out == Tri::Equal {
                    *out = Tri::Unknown;
                }
            }
        };
        for x in 0..n {
            for y in 0..n {
                let (s1, s2) = match (self.sigma(x, y), self.sigma(y, x)) {
                    (Ok(a), Ok(b)) => (a, b),
                    _ => continue,
                };
                if let Ok(c) = s1.then(&s2) {
                    let t = self
                        .carrier
                        .morphisms_equal(&c, &PathTerm::identity(c.src))?;
                    merge(t, &mut out);
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if let Some(xy) = self.monoid.prod_opt(x, y) {
                        let pair = (|| {
                            let l = self.sigma(xy, z).ok()?;
                            let a = self.whisk(&self.sigma(y, z).ok()?, x, unit).ok()?;
                            let b = self.whisk(&self.sigma(x, z).ok()?, unit, y).ok()?;
                            Some((l, a.then(&b).ok()?))
                        })();
                        if let Some((l, r)) = pair {
                            merge(self.carrier.morphisms_equal(&l, &r)?, &mut out);
                        }
                    }
                }
            }
        }
        for h in 0..self.arrow_ctx.len() {
            let hp = PathTerm::single(&self.carrier.quiver, ArrowId(h as u32));
            let (xx, yy) = (hp.src.idx(), hp.tgt.idx());
            for z in 0..n {
                if z == unit {
                    continue;
                }
                let pair = (|| {
                    let hz = self.whisk(&hp, unit, z).ok()?;
                    let zh = self.whisk(&hp, z, unit).ok()?;
                    let l = hz.then(&self.sigma(yy, z).ok()?).ok()?;
                    let r = self.sigma(xx, z).ok()?.then(&zh).ok()?;
                    Some((l, r))
                })();
                if let Some((l, r)) = pair {
                    merge(self.carrier.morphisms_equal(&l, &r)?, &mut out);
                }
            }
            if out == Tri::Distinct {
                return Ok(out);
            }
        }
        Ok(out)
    }

    /// Verifies strict unit whiskering and the interchange law on saturated
    /// hom representatives: both factorizations of `f (x) g` must agree,
    /// and whiskering by the unit context must fix every morphism.
    /// At most `limit` representatives are collected.
    pub fn check_interchange(&self, limit: usize) -> Result<Tri> {
        let sat = self.carrier.require_saturated()?;
        let n = self.monoid.len();
        let unit = self.monoid.unit;
        let mut reps: Vec<PathTerm> = Vec::new();
        'collect: for s in 0..n {
            for t in 0..n {
                for p in sat.hom(ObjId(s as u32), ObjId(t as u32)) {
                    reps.push(p.clone());
                    if reps.len() >= limit {
                        break 'collect;
                    }
                }
            }
        }
        let mut out = Tri::Equal;
        let merge = |t: Tri, out: &mut Tri| match t {
            Tri::Equal => {}
            Tri::Distinct => *out = Tri::Distinct,
            Tri::Unknown => {
                if *out == Tri::Equal {
                    *out = Tri::Unknown;
                }
            }
        };
        for f in &reps {
            let w = self.whisk(f, unit, unit)?;
            merge(self.carrier.morphisms_equal(f, &w)?, &mut out);
            for g in &reps {
                let pair = (|| {
                    let l1 = self.whisk(f, unit, g.src.idx()).ok()?;
                    let l2 = self.whisk(g, f.tgt.idx(), unit).ok()?;
                    let r1 = self.whisk(g, f.src.idx(), unit).ok()?;
                    let r2 = self.whisk(f, unit, g.tgt.idx()).ok()?;
                    Some((l1.then(&l2).ok()?, r1.then(&r2).ok()?))
                })();
                if let Some((l, r)) = pair {
                    merge(self.carrier.morphisms_equal(&l, &r)?, &mut out);
                }
                if out == Tri::Distinct {
                    return Ok(out);
                }
            }
        }
        Ok(out)
    }

    /// A carrier morphism re-expressed as a presentation-level path.
    pub fn path_to_tpath(&self, p: &PathTerm) -> TPath {
        TPath {
            src: p.src.idx(),
            terms: p
                .arrows
                .iter()
                .map(|&a| {
                    let (l, i, r) = self.arrow_ctx[a.idx()];
                    TTerm { left: l, proto: i, right: r }
                })
                .collect(),
        }
    }

    /// All carrier relations as presentation-level paths.
    pub fn relation_tpaths(&self) -> Vec<(TPath, TPath)> {
        self.carrier
            .relations
            .iter()
            .map(|(l, r)| (self.path_to_tpath(l), self.path_to_tpath(r)))
            .collect()
    }

    /// The symmetry components as presentation-level paths.
    pub fn sigma_tpaths(&self) -> BTreeMap<(usize, usize), TPath> {
        self.sigma
            .iter()
            .map(|(&k, p)| (k, self.path_to_tpath(p)))
            .collect()
    }

    /// Rebuilds the category with additional generators and relations.
    ///
    /// The object monoid and the symmetry are kept; generator indices and
    /// the carrier arrows of the original category are preserved, so
    /// existing carrier paths stay valid in the extension. Naturality of
    /// the symmetry against the new generators is imposed.
    pub fn extend(
        &self,
        new_protos: Vec<Proto>,
        new_relations: Vec<(TPath, TPath)>,
        bounds: Bounds,
    ) -> Result<TensorCategory> {
        let extra_nat: Vec<usize> =
            (self.protos.len()..self.protos.len() + new_protos.len()).collect();
        let mut protos = self.protos.clone();
        protos.extend(new_protos);
        let mut relations = self.relation_tpaths();
        relations.extend(new_relations);
        let pres = TensorPresentation {
            monoid: self.monoid.clone(),
            protos,
            relations,
            sigma: SigmaSpec::Explicit(self.sigma_tpaths()),
        };
        TensorCategory::build_with(&pres, bounds, &extra_nat)
    }

    /// The discrete tensor category on a monoid: no generating morphisms.
    pub fn discrete(monoid: ObjectMonoid, bounds: Bounds) -> Result<TensorCategory> {
        let sigma = if monoid.is_commutative() {
            SigmaSpec::Identity
        } else {
            SigmaSpec::Free
        };
        TensorCategory::build(
            &TensorPresentation { monoid, protos: vec![], relations: vec![], sigma },
            bounds,
        )
    }

    /// The initial tensor category: one object, identity only.
    pub fn initial(bounds: Bounds) -> TensorCategory {
        TensorCategory::discrete(ObjectMonoid::trivial(), bounds).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_monoid() -> ObjectMonoid {
        ObjectMonoid::finite_table(
            vec!["1".into(), "g".into()],
            "1",
            vec![("g".into(), "g".into(), "1".into())],
        )
        .unwrap()
    }

    #[test]
    fn initial_tensor_category() {
        let c = TensorCategory::initial(Bounds::default());
        assert_eq!(c.monoid.len(), 1);
        assert!(c.carrier.saturate().closed());
        let u = c.unit_obj();
        assert_eq!(c.carrier.hom(u, u).unwrap().len(), 1);
    }

    #[test]
    fn endomorphism_with_identity_sigma() {
        let m = z2_monoid();
        let pres = TensorPresentation {
            monoid: m,
            protos: vec![Proto { name: "f".into(), src: 1, tgt: 1 }],
            relations: vec![(
                TPath {
                    src: 1,
                    terms: vec![
                        TTerm { left: 0, proto: 0, right: 0 },
                        TTerm { left: 0, proto: 0, right: 0 },
                    ],
                },
                TPath::identity(1),
            )],
            sigma: SigmaSpec::Identity,
        };
        let c = TensorCategory::build(&pres, Bounds::default()).unwrap();
        // carrier arrows: f, g@f@1 (= 1@f@g), and whiskers at g contexts
        assert!(c.carrier.saturate().closed());
        let g = c.obj(1);
        assert_eq!(c.carrier.hom(g, g).unwrap().len(), 2);
        // f (x) f is an endomorphism of g*g = 1
        let f = c.proto_path(0);
        let ff = c.tensor_mor(&f, &f).unwrap();
        assert_eq!(ff.src, c.unit_obj());
        assert_eq!(c.check_symmetry().unwrap(), Tri::Equal);
    }

    #[test]
    fn interchange_holds() {
        let m = z2_monoid();
        let pres = TensorPresentation {
            monoid: m,
            protos: vec![Proto { name: "f".into(), src: 1, tgt: 1 }],
            relations: vec![],
            sigma: SigmaSpec::Identity,
        };
        let c = TensorCategory::build(&pres, Bounds::default()).unwrap();
        let f = c.proto_path(0);
        let idg = PathTerm::identity(c.obj(1));
        // (f (x) id);(id (x) f) = (id (x) f);(f (x) id)
        let l = c
            .tensor_mor(&f, &idg)
            .unwrap()
            .then(&c.tensor_mor(&idg, &f).unwrap())
            .unwrap();
        let r = c
            .tensor_mor(&idg, &f)
            .unwrap()
            .then(&c.tensor_mor(&f, &idg).unwrap())
            .unwrap();
        assert_eq!(c.carrier.morphisms_equal(&l, &r).unwrap(), Tri::Equal);
    }

    #[test]
    fn free_sigma_satisfies_axioms() {
        let m = ObjectMonoid::free(&["x", "y"], 2).unwrap();
        let pres = TensorPresentation {
            monoid: m,
            protos: vec![],
            relations: vec![],
            sigma: SigmaSpec::Free,
        };
        let c = TensorCategory::build(&pres, Bounds::default()).unwrap();
        assert_eq!(c.check_symmetry().unwrap(), Tri::Equal);
        let x = c.monoid.elem("x").unwrap();
        let y = c.monoid.elem("y").unwrap();
        let s = c.sigma(x, y).unwrap();
        let s2 = c.sigma(y, x).unwrap();
        let c2 = s.then(&s2).unwrap();
        assert_eq!(
            c.carrier
                .morphisms_equal(&c2, &PathTerm::identity(c2.src))
                .unwrap(),
            Tri::Equal
        );
    }

    #[test]
    fn identity_sigma_needs_commutativity() {
        let m = ObjectMonoid::free(&["x", "y"], 2).unwrap();
        let pres = TensorPresentation {
            monoid: m,
            protos: vec![],
            relations: vec![],
            sigma: SigmaSpec::Identity,
        };
        assert!(matches!(
            TensorCategory::build(&pres, Bounds::default()),
            Err(Error::IncoherentSymmetry(_))
        ));
    }

    #[test]
    fn explicit_sigma_is_checked() {
        // claim sigma_{g,g} = f where f: 1 -> 1 is not an involution
        let m = z2_monoid();
        let mut map = BTreeMap::new();
        map.insert(
            (1usize, 1usize),
            TPath::single(0, TTerm { left: 0, proto: 0, right: 0 }),
        );
        let pres = TensorPresentation {
            monoid: m,
            protos: vec![Proto { name: "f".into(), src: 0, tgt: 0 }],
            relations: vec![(
                TPath {
                    src: 0,
                    terms: vec![
                        TTerm { left: 0, proto: 0, right: 0 },
                        TTerm { left: 0, proto: 0, right: 0 },
                        TTerm { left: 0, proto: 0, right: 0 },
                    ],
                },
                TPath::identity(0),
            )],
            sigma: SigmaSpec::Explicit(map),
        };
        assert!(matches!(
            TensorCategory::build(&pres, Bounds::default()),
            Err(Error::IncoherentSymmetry(_))
        ));
    }
}
