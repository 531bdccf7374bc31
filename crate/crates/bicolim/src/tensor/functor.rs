use std::collections::BTreeMap;

use crate::cat::fpcat::Tri;
use crate::cat::quiver::PathTerm;
use crate::error::{Error, Result};
use crate::tensor::category::TensorCategory;

/// A strong symmetric tensor functor between presented tensor categories.
///
/// The structure morphisms `eta: 1 -> F(1)` and
/// `mu_{a,b}: F(a) (x) F(b) -> F(a (x) b)` are stored with explicit
/// inverses. When the object map is a monoid homomorphism they are
/// endomorphisms and may be left implicit (identities).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorFunctor {
    /// Image monoid element per source element.
    pub obj_map: Vec<usize>,
    /// Image carrier path per source generator (at the trivial context).
    pub proto_map: Vec<PathTerm>,
    pub eta: PathTerm,
    pub eta_inv: PathTerm,
    /// `(mu, mu_inv)` per source element pair with defined product;
    /// missing entries are identities.
    pub mu: BTreeMap<(usize, usize), (PathTerm, PathTerm)>,
}

impl TensorFunctor {
    /// A strict tensor functor: `eta` and every `mu` are identities.
    /// Requires the object map to be a monoid homomorphism.
    pub fn strict(
        src: &TensorCategory,
        tgt: &TensorCategory,
        obj_map: Vec<usize>,
        proto_map: Vec<PathTerm>,
    ) -> Result<Self> {
        let unit = PathTerm::identity(tgt.obj(tgt.monoid.unit));
        let f = TensorFunctor {
            obj_map,
            proto_map,
            eta: unit.clone(),
            eta_inv: unit,
            mu: BTreeMap::new(),
        };
        f.validate(src, tgt)?;
        Ok(f)
    }

    pub fn with_structure(
        src: &TensorCategory,
        tgt: &TensorCategory,
        obj_map: Vec<usize>,
        proto_map: Vec<PathTerm>,
        eta: PathTerm,
        eta_inv: PathTerm,
        mu: BTreeMap<(usize, usize), (PathTerm, PathTerm)>,
    ) -> Result<Self> {
        let f = TensorFunctor { obj_map, proto_map, eta, eta_inv, mu };
        f.validate(src, tgt)?;
        Ok(f)
    }

    /// The identity tensor functor on `c`.
    pub fn identity(c: &TensorCategory) -> Self {
        let unit = PathTerm::identity(c.obj(c.monoid.unit));
        TensorFunctor {
            obj_map: (0..c.monoid.len()).collect(),
            proto_map: (0..c.protos.len()).map(|i| c.proto_path(i)).collect(),
            eta: unit.clone(),
            eta_inv: unit,
            mu: BTreeMap::new(),
        }
    }

    fn validate(&self, src: &TensorCategory, tgt: &TensorCategory) -> Result<()> {
        if self.obj_map.len() != src.monoid.len()
            || self.proto_map.len() != src.protos.len()
        {
            return Err(Error::Invalid("tensor functor data has wrong arity".into()));
        }
        for (i, p) in src.protos.iter().enumerate() {
            let img = &self.proto_map[i];
            if img.src != tgt.obj(self.obj_map[p.src])
                || img.tgt != tgt.obj(self.obj_map[p.tgt])
            {
                return Err(Error::Invalid(format!(
                    "image of `{}` has wrong endpoints",
                    p.name
                )));
            }
        }
        let u = tgt.obj(tgt.monoid.unit);
        let f1 = tgt.obj(self.obj_map[src.monoid.unit]);
        if self.eta.src != u || self.eta.tgt != f1 {
            return Err(Error::Invalid("eta has wrong endpoints".into()));
        }
        if self.eta_inv.src != f1 || self.eta_inv.tgt != u {
            return Err(Error::Invalid("eta inverse has wrong endpoints".into()));
        }
        for a in 0..src.monoid.len() {
            for b in 0..src.monoid.len() {
                let ab = match src.monoid.prod_opt(a, b) {
                    Some(x) => x,
                    None => continue,
                };
                let prod = tgt.monoid.prod(self.obj_map[a], self.obj_map[b])?;
                match self.mu.get(&(a, b)) {
                    None => {
                        if prod != self.obj_map[ab] {
                            return Err(Error::Invalid(format!(
                                "object map needs an explicit mu at ({}, {})",
                                src.monoid.name(a),
                                src.monoid.name(b)
                            )));
                        }
                    }
                    Some((m, mi)) => {
                        let s = tgt.obj(prod);
                        let t = tgt.obj(self.obj_map[ab]);
                        if m.src != s || m.tgt != t || mi.src != t || mi.tgt != s {
                            return Err(Error::Invalid(format!(
                                "mu component ({}, {}) has wrong endpoints",
                                src.monoid.name(a),
                                src.monoid.name(b)
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn map_obj(&self, elem: usize) -> usize {
        self.obj_map[elem]
    }

    /// `mu_{a,b}` and its inverse (identity when unstored).
    pub fn mu_at(&self, src: &TensorCategory, tgt: &TensorCategory, a: usize, b: usize)
        -> Result<(PathTerm, PathTerm)>
    {
        if let Some(p) = self.mu.get(&(a, b)) {
            return Ok(p.clone());
        }
        let ab = src.monoid.prod(a, b)?;
        let prod = tgt.monoid.prod(self.obj_map[a], self.obj_map[b])?;
        if prod != self.obj_map[ab] {
            return Err(Error::Invalid(format!(
                "missing mu component ({}, {})",
                src.monoid.name(a),
                src.monoid.name(b)
            )));
        }
        let id = PathTerm::identity(tgt.obj(self.obj_map[ab]));
        Ok((id.clone(), id))
    }

    /// The composite structure morphism
    /// `F(a) (x) F(x) (x) F(b) -> F(a (x) x (x) b)` and its inverse.
    fn mu3(
        &self,
        src: &TensorCategory,
        tgt: &TensorCategory,
        a: usize,
        x: usize,
        b: usize,
    ) -> Result<(PathTerm, PathTerm)> {
        let ax = src.monoid.prod(a, x)?;
        let (m1, m1i) = self.mu_at(src, tgt, a, x)?;
        let (m2, m2i) = self.mu_at(src, tgt, ax, b)?;
        let fb = self.obj_map[b];
        let fwd = tgt
            .whisk(&m1, tgt.monoid.unit, fb)?
            .then(&m2)?;
        let bwd = m2i.then(&tgt.whisk(&m1i, tgt.monoid.unit, fb)?)?;
        Ok((fwd, bwd))
    }

    /// Image of a carrier morphism, normalized in the target carrier.
    pub fn map_path(
        &self,
        src: &TensorCategory,
        tgt: &TensorCategory,
        p: &PathTerm,
    ) -> Result<PathTerm> {
        let mut acc = PathTerm::identity(tgt.obj(self.obj_map[p.src.idx()]));
        for &arr in &p.arrows {
            let (a, i, b) = src.arrow_context(arr);
            let proto = &src.protos[i];
            let (_, bwd) = self.mu3(src, tgt, a, proto.src, b)?;
            let (fwd, _) = self.mu3(src, tgt, a, proto.tgt, b)?;
            let mid = tgt.whisk(&self.proto_map[i], self.obj_map[a], self.obj_map[b])?;
            acc = acc.then(&bwd)?.then(&mid)?.then(&fwd)?;
        }
        Ok(tgt.carrier.normalize(&acc))
    }

    /// Checks functoriality, invertibility of the structure morphisms and
    /// the tensor-functor coherence axioms within bounds.
    pub fn check(&self, src: &TensorCategory, tgt: &TensorCategory) -> Result<Tri> {
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
        // eta and mu invertible
        let tc = &tgt.carrier;
        let idu = PathTerm::identity(tgt.obj(tgt.monoid.unit));
        let idf1 = PathTerm::identity(self.eta.tgt);
        merge(tc.morphisms_equal(&tc.compose(&self.eta, &self.eta_inv)?, &idu)?, &mut out);
        merge(tc.morphisms_equal(&tc.compose(&self.eta_inv, &self.eta)?, &idf1)?, &mut out);
        for (m, mi) in self.mu.values() {
            merge(
                tc.morphisms_equal(&tc.compose(m, mi)?, &PathTerm::identity(m.src))?,
                &mut out,
            );
            merge(
                tc.morphisms_equal(&tc.compose(mi, m)?, &PathTerm::identity(mi.src))?,
                &mut out,
            );
        }
        if out == Tri::Distinct {
            return Ok(out);
        }
        // carrier relations preserved
        for (l, r) in &src.carrier.relations {
            let fl = self.map_path(src, tgt, l)?;
            let fr = self.map_path(src, tgt, r)?;
            merge(tc.morphisms_equal(&fl, &fr)?, &mut out);
            if out == Tri::Distinct {
                return Ok(out);
            }
        }
        let n = src.monoid.len();
        let su = src.monoid.unit;
        // mu associativity: (mu_{a,b} (x) F(c));mu_{ab,c} = (F(a) (x) mu_{b,c});mu_{a,bc}
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let pair = (|| {
                        let ab = src.monoid.prod_opt(a, b)?;
                        let bc = src.monoid.prod_opt(b, c)?;
                        src.monoid.prod_opt(ab, c)?;
                        let (mab, _) = self.mu_at(src, tgt, a, b).ok()?;
                        let (mab_c, _) = self.mu_at(src, tgt, ab, c).ok()?;
                        let (mbc, _) = self.mu_at(src, tgt, b, c).ok()?;
                        let (ma_bc, _) = self.mu_at(src, tgt, a, bc).ok()?;
                        let l = tgt
                            .whisk(&mab, tgt.monoid.unit, self.obj_map[c])
                            .ok()?
                            .then(&mab_c)
                            .ok()?;
                        let r = tgt
                            .whisk(&mbc, self.obj_map[a], tgt.monoid.unit)
                            .ok()?
                            .then(&ma_bc)
                            .ok()?;
                        Some((l, r))
                    })();
                    if let Some((l, r)) = pair {
                        merge(tc.morphisms_equal(&l, &r)?, &mut out);
                    }
                }
            }
        }
        // unit axioms: (eta (x) F(a));mu_{1,a} = id and (F(a) (x) eta);mu_{a,1} = id
        for a in 0..n {
            let fa = self.obj_map[a];
            let (m1a, _) = self.mu_at(src, tgt, su, a)?;
            let (ma1, _) = self.mu_at(src, tgt, a, su)?;
            let l = tgt.whisk(&self.eta, tgt.monoid.unit, fa)?.then(&m1a)?;
            let r = tgt.whisk(&self.eta, fa, tgt.monoid.unit)?.then(&ma1)?;
            let id = PathTerm::identity(tgt.obj(fa));
            merge(tc.morphisms_equal(&l, &id)?, &mut out);
            merge(tc.morphisms_equal(&r, &id)?, &mut out);
        }
        // symmetry: mu_{a,b};F(sigma_{a,b}) = sigma_{Fa,Fb};mu_{b,a}
        for a in 0..n {
            for b in 0..n {
                let pair = (|| {
                    src.monoid.prod_opt(a, b)?;
                    src.monoid.prod_opt(b, a)?;
                    let (mab, _) = self.mu_at(src, tgt, a, b).ok()?;
                    let (mba, _) = self.mu_at(src, tgt, b, a).ok()?;
                    let fs = self.map_path(src, tgt, &src.sigma(a, b).ok()?).ok()?;
                    let ts = tgt.sigma(self.obj_map[a], self.obj_map[b]).ok()?;
                    let l = mab.then(&fs).ok()?;
                    let r = ts.then(&mba).ok()?;
                    Some((l, r))
                })();
                if let Some((l, r)) = pair {
                    merge(tc.morphisms_equal(&l, &r)?, &mut out);
                }
            }
        }
        // mu naturality against whiskered generators, one side at a time
        for h in src.carrier.quiver.arrow_ids() {
            let hp = PathTerm::single(&src.carrier.quiver, h);
            let (x, y) = (hp.src.idx(), hp.tgt.idx());
            for u in 0..n {
                // (F(h) (x) F(u));mu_{y,u} = mu_{x,u};F(h (x) u)
                let pair = (|| {
                    let hu = src.whisk(&hp, su, u).ok()?;
                    let (myu, _) = self.mu_at(src, tgt, y, u).ok()?;
                    let (mxu, _) = self.mu_at(src, tgt, x, u).ok()?;
                    let fh = self.map_path(src, tgt, &hp).ok()?;
                    let l = tgt
                        .whisk(&fh, tgt.monoid.unit, self.obj_map[u])
                        .ok()?
                        .then(&myu)
                        .ok()?;
                    let r = mxu.then(&self.map_path(src, tgt, &hu).ok()?).ok()?;
                    Some((l, r))
                })();
                if let Some((l, r)) = pair {
                    merge(tc.morphisms_equal(&l, &r)?, &mut out);
                }
                // (F(u) (x) F(h));mu_{u,y} = mu_{u,x};F(u (x) h)
                let pair = (|| {
                    let uh = src.whisk(&hp, u, su).ok()?;
                    let (muy, _) = self.mu_at(src, tgt, u, y).ok()?;
                    let (mux, _) = self.mu_at(src, tgt, u, x).ok()?;
                    let fh = self.map_path(src, tgt, &hp).ok()?;
                    let l = tgt
                        .whisk(&fh, self.obj_map[u], tgt.monoid.unit)
                        .ok()?
                        .then(&muy)
                        .ok()?;
                    let r = mux.then(&self.map_path(src, tgt, &uh).ok()?).ok()?;
                    Some((l, r))
                })();
                if let Some((l, r)) = pair {
                    merge(tc.morphisms_equal(&l, &r)?, &mut out);
                }
            }
            if out == Tri::Distinct {
                return Ok(out);
            }
        }
        Ok(out)
    }

    /// Diagrammatic composite `self;other`.
    pub fn then(
        &self,
        src: &TensorCategory,
        mid: &TensorCategory,
        tgt: &TensorCategory,
        other: &TensorFunctor,
    ) -> Result<TensorFunctor> {
        let obj_map: Vec<usize> = self.obj_map.iter().map(|&a| other.obj_map[a]).collect();
        let proto_map = self
            .proto_map
            .iter()
            .map(|p| other.map_path(mid, tgt, p))
            .collect::<Result<Vec<_>>>()?;
        let eta = tgt
            .carrier
            .compose(&other.eta, &other.map_path(mid, tgt, &self.eta)?)?;
        let eta_inv = tgt
            .carrier
            .compose(&other.map_path(mid, tgt, &self.eta_inv)?, &other.eta_inv)?;
        let mut mu = BTreeMap::new();
        for a in 0..src.monoid.len() {
            for b in 0..src.monoid.len() {
                if src.monoid.prod_opt(a, b).is_none() {
                    continue;
                }
                let (fm, fmi) = self.mu_at(src, mid, a, b)?;
                let (gm, gmi) = other.mu_at(mid, tgt, self.obj_map[a], self.obj_map[b])?;
                let m = tgt.carrier.compose(&gm, &other.map_path(mid, tgt, &fm)?)?;
                let mi = tgt
                    .carrier
                    .compose(&other.map_path(mid, tgt, &fmi)?, &gmi)?;
                if !m.is_identity() || !mi.is_identity() {
                    mu.insert((a, b), (m, mi));
                }
            }
        }
        TensorFunctor::with_structure(src, tgt, obj_map, proto_map, eta, eta_inv, mu)
    }
}

/// A monoidal natural transformation between parallel tensor functors,
/// one component per object monoid element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorTransformation {
    pub components: Vec<PathTerm>,
}

impl TensorTransformation {
    pub fn new(
        src: &TensorCategory,
        tgt: &TensorCategory,
        f: &TensorFunctor,
        g: &TensorFunctor,
        components: Vec<PathTerm>,
    ) -> Result<Self> {
        if components.len() != src.monoid.len() {
            return Err(Error::Invalid("transformation data has wrong arity".into()));
        }
        for a in 0..src.monoid.len() {
            let c = &components[a];
            if c.src != tgt.obj(f.obj_map[a]) || c.tgt != tgt.obj(g.obj_map[a]) {
                return Err(Error::Invalid(format!(
                    "component at `{}` has wrong endpoints",
                    src.monoid.name(a)
                )));
            }
        }
        Ok(TensorTransformation { components })
    }

    pub fn identity(src: &TensorCategory, tgt: &TensorCategory, f: &TensorFunctor) -> Self {
        TensorTransformation {
            components: (0..src.monoid.len())
                .map(|a| PathTerm::identity(tgt.obj(f.obj_map[a])))
                .collect(),
        }
    }

    pub fn at(&self, elem: usize) -> &PathTerm {
        &self.components[elem]
    }

    /// Checks naturality against every carrier generator and the
    /// monoidality conditions.
    pub fn check_monoidal(
        &self,
        src: &TensorCategory,
        tgt: &TensorCategory,
        f: &TensorFunctor,
        g: &TensorFunctor,
    ) -> Result<Tri> {
        let tc = &tgt.carrier;
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
        for h in src.carrier.quiver.arrow_ids() {
            let hp = PathTerm::single(&src.carrier.quiver, h);
            let fh = f.map_path(src, tgt, &hp)?;
            let gh = g.map_path(src, tgt, &hp)?;
            let l = tc.compose(&fh, self.at(hp.tgt.idx()))?;
            let r = tc.compose(self.at(hp.src.idx()), &gh)?;
            merge(tc.morphisms_equal(&l, &r)?, &mut out);
            if out == Tri::Distinct {
                return Ok(out);
            }
        }
        // monoidality: mu_F;t_{ab} = (t_a (x) t_b);mu_G and eta_F;t_1 = eta_G
        let n = src.monoid.len();
        for a in 0..n {
            for b in 0..n {
                let ab = match src.monoid.prod_opt(a, b) {
                    Some(x) => x,
                    None => continue,
                };
                let (mf, _) = f.mu_at(src, tgt, a, b)?;
                let (mg, _) = g.mu_at(src, tgt, a, b)?;
                let l = tc.compose(&mf, self.at(ab))?;
                let tab = tgt.tensor_mor(self.at(a), self.at(b))?;
                let r = tc.compose(&tab, &mg)?;
                merge(tc.morphisms_equal(&l, &r)?, &mut out);
            }
        }
        let l = tc.compose(&f.eta, self.at(src.monoid.unit))?;
        merge(tc.morphisms_equal(&l, &g.eta)?, &mut out);
        Ok(out)
    }

    pub fn then(&self, tgt: &TensorCategory, other: &TensorTransformation) -> Result<Self> {
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| tgt.carrier.compose(a, b))
            .collect::<Result<_>>()?;
        Ok(TensorTransformation { components })
    }

    /// Components are invertible in the target carrier.
    pub fn is_invertible(&self, tgt: &TensorCategory) -> Result<bool> {
        for c in &self.components {
            if !tgt.carrier.is_invertible(c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::fpcat::Bounds;
    use crate::tensor::category::{Proto, SigmaSpec, TPath, TTerm, TensorPresentation};
    use crate::tensor::monoid::ObjectMonoid;

    fn z2_endo() -> TensorCategory {
        let m = ObjectMonoid::finite_table(
            vec!["1".into(), "g".into()],
            "1",
            vec![("g".into(), "g".into(), "1".into())],
        )
        .unwrap();
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
        TensorCategory::build(&pres, Bounds::default()).unwrap()
    }

    #[test]
    fn identity_functor_checks() {
        let c = z2_endo();
        let f = TensorFunctor::identity(&c);
        assert_eq!(f.check(&c, &c).unwrap(), Tri::Equal);
    }

    #[test]
    fn generator_flip_is_a_functor() {
        let c = z2_endo();
        // f |-> id is compatible with f;f = id
        let f = TensorFunctor::strict(
            &c,
            &c,
            vec![0, 1],
            vec![PathTerm::identity(c.obj(1))],
        )
        .unwrap();
        assert_eq!(f.check(&c, &c).unwrap(), Tri::Equal);
    }

    #[test]
    fn invalid_functor_rejected() {
        let c = z2_endo();
        let err = TensorFunctor::strict(&c, &c, vec![0, 0], vec![c.proto_path(0)]);
        assert!(err.is_err());
    }

    #[test]
    fn identity_transformation_is_monoidal() {
        let c = z2_endo();
        let f = TensorFunctor::identity(&c);
        let t = TensorTransformation::identity(&c, &c, &f);
        assert_eq!(t.check_monoidal(&c, &c, &f, &f).unwrap(), Tri::Equal);
    }

    #[test]
    fn composite_functor() {
        let c = z2_endo();
        let idf = TensorFunctor::identity(&c);
        let comp = idf.then(&c, &c, &c, &idf).unwrap();
        assert_eq!(comp.check(&c, &c).unwrap(), Tri::Equal);
        assert_eq!(comp.obj_map, idf.obj_map);
    }
}
