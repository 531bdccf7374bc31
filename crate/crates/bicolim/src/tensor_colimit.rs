//! Colimit constructions for strict symmetric tensor categories:
//! coproducts, coinserters (with their non-monoidal first stage),
//! coequifiers, coinverters, coequalizers, pushouts and directed
//! colimits, together with factorization through the cocones.

use std::collections::BTreeMap;

use crate::cat::fpcat::{Bounds, Tri};
use crate::cat::quiver::PathTerm;
use crate::error::{Error, Result};
use crate::tensor::category::{
    Proto, SigmaSpec, TPath, TTerm, TensorCategory, TensorPresentation,
};
use crate::tensor::functor::{TensorFunctor, TensorTransformation};
use crate::tensor::monoid::ObjectMonoid;

/// The initial tensor category: one object, identity only.
pub fn initial_tensor(bounds: Bounds) -> TensorCategory {
    TensorCategory::initial(bounds)
}

fn tpath_concat(mut a: TPath, b: TPath) -> TPath {
    a.terms.extend(b.terms);
    a
}

fn merge3(a: Bounds, b: Bounds) -> Bounds {
    Bounds { max_len: a.max_len.max(b.max_len), max_hom: a.max_hom.max(b.max_hom) }
}

/// The identity-on-generators cocone functor into an extension of `b`.
fn strict_embedding(b: &TensorCategory, ext: &TensorCategory) -> Result<TensorFunctor> {
    TensorFunctor::strict(
        b,
        ext,
        (0..b.monoid.len()).collect(),
        (0..b.protos.len()).map(|i| ext.proto_path(i)).collect(),
    )
}

/// Coinserter cocone data: the colimit, the cocone functor from the
/// codomain of the parallel pair, and the universal 2-cell.
#[derive(Debug, Clone)]
pub struct TensorCoinserter {
    pub category: TensorCategory,
    pub proj: TensorFunctor,
    pub cell: TensorTransformation,
}

/// First stage of the tensor coinserter: freely adjoins components
/// `del_i: F(i) -> G(i)` natural in `i`, without the monoidality
/// equations. Its cell is natural but in general not monoidal.
pub fn coinserter_into_tensor(
    a: &TensorCategory,
    b: &TensorCategory,
    f: &TensorFunctor,
    g: &TensorFunctor,
) -> Result<TensorCoinserter> {
    let bounds = merge3(a.carrier.bounds(), b.carrier.bounds());
    let base = b.protos.len();
    let protos: Vec<Proto> = (0..a.monoid.len())
        .map(|i| Proto {
            name: format!("del@{}", a.monoid.name(i)),
            src: f.obj_map[i],
            tgt: g.obj_map[i],
        })
        .collect();
    let delta = |i: usize| TTerm { left: b.monoid.unit, proto: base + i, right: b.monoid.unit };
    let mut rels = Vec::new();
    for h in a.carrier.quiver.arrow_ids() {
        let hp = PathTerm::single(&a.carrier.quiver, h);
        let (x, y) = (hp.src.idx(), hp.tgt.idx());
        let fh = f.map_path(a, b, &hp)?;
        let gh = g.map_path(a, b, &hp)?;
        let lhs = tpath_concat(
            b.path_to_tpath(&fh),
            TPath::single(g.obj_map[y], delta(y)),
        );
        let rhs = tpath_concat(
            TPath::single(f.obj_map[x], delta(x)),
            b.path_to_tpath(&gh),
        );
        rels.push((TPath { src: f.obj_map[x], ..lhs }, TPath { src: f.obj_map[x], ..rhs }));
    }
    let category = b.extend(protos, rels, bounds)?;
    let proj = strict_embedding(b, &category)?;
    let components: Vec<PathTerm> = (0..a.monoid.len())
        .map(|i| category.proto_path(base + i))
        .collect();
    let fp = f.then(a, b, &category, &proj)?;
    let gp = g.then(a, b, &category, &proj)?;
    let cell = TensorTransformation::new(a, &category, &fp, &gp, components)?;
    Ok(TensorCoinserter { category, proj, cell })
}

/// The monoidality equations for a coinserter-style cell, as relations of
/// an extension of `b` whose protos `base..` are the components.
fn monoidality_relations(
    a: &TensorCategory,
    b: &TensorCategory,
    stage: &TensorCategory,
    f: &TensorFunctor,
    g: &TensorFunctor,
    base: usize,
) -> Result<Vec<(TPath, TPath)>> {
    let delta = |i: usize| TTerm {
        left: stage.monoid.unit,
        proto: base + i,
        right: stage.monoid.unit,
    };
    let mut rels = Vec::new();
    for i in 0..a.monoid.len() {
        for j in 0..a.monoid.len() {
            let ij = match a.monoid.prod_opt(i, j) {
                Some(x) => x,
                None => continue,
            };
            let (mf, _) = f.mu_at(a, b, i, j)?;
            let (mg, _) = g.mu_at(a, b, i, j)?;
            let src = match stage.monoid.prod_opt(f.obj_map[i], f.obj_map[j]) {
                Some(x) => x,
                None => continue,
            };
            let lhs = tpath_concat(
                stage.path_to_tpath(&mf),
                TPath::single(f.obj_map[ij], delta(ij)),
            );
            // del_i (x) del_j = (del_i (x) F(j));(G(i) (x) del_j)
            let tens = TPath {
                src,
                terms: vec![
                    TTerm { left: stage.monoid.unit, proto: base + i, right: f.obj_map[j] },
                    TTerm { left: g.obj_map[i], proto: base + j, right: stage.monoid.unit },
                ],
            };
            let rhs = tpath_concat(tens, stage.path_to_tpath(&mg));
            rels.push((TPath { src, ..lhs }, rhs));
        }
    }
    // eta_F;del_1 = eta_G
    let lhs = tpath_concat(
        stage.path_to_tpath(&f.eta),
        TPath::single(f.obj_map[a.monoid.unit], delta(a.monoid.unit)),
    );
    let rhs = stage.path_to_tpath(&g.eta);
    rels.push((TPath { src: stage.monoid.unit, ..lhs }, rhs));
    Ok(rels)
}

/// Coinserter of tensor functors `f, g: a -> b`: the first stage followed
/// by coequifying the monoidality equations of the universal cell.
pub fn coinserter_tensor(
    a: &TensorCategory,
    b: &TensorCategory,
    f: &TensorFunctor,
    g: &TensorFunctor,
) -> Result<TensorCoinserter> {
    let bounds = merge3(a.carrier.bounds(), b.carrier.bounds());
    let stage = coinserter_into_tensor(a, b, f, g)?;
    let base = b.protos.len();
    let rels = monoidality_relations(a, b, &stage.category, f, g, base)?;
    let category = stage.category.extend(vec![], rels, bounds)?;
    let proj = strict_embedding(b, &category)?;
    let components: Vec<PathTerm> = (0..a.monoid.len())
        .map(|i| category.proto_path(base + i))
        .collect();
    let fp = f.then(a, b, &category, &proj)?;
    let gp = g.then(a, b, &category, &proj)?;
    let cell = TensorTransformation::new(a, &category, &fp, &gp, components)?;
    Ok(TensorCoinserter { category, proj, cell })
}

#[derive(Debug, Clone)]
pub struct TensorCoequifier {
    pub category: TensorCategory,
    pub proj: TensorFunctor,
}

/// Coequifier of monoidal 2-cells `alpha, beta: f => g`.
pub fn coequifier_tensor(
    a: &TensorCategory,
    b: &TensorCategory,
    alpha: &TensorTransformation,
    beta: &TensorTransformation,
) -> Result<TensorCoequifier> {
    let bounds = merge3(a.carrier.bounds(), b.carrier.bounds());
    let mut rels = Vec::new();
    for i in 0..a.monoid.len() {
        let l = b.path_to_tpath(alpha.at(i));
        let r = b.path_to_tpath(beta.at(i));
        if l != r {
            rels.push((l, r));
        }
    }
    let category = b.extend(vec![], rels, bounds)?;
    let proj = strict_embedding(b, &category)?;
    Ok(TensorCoequifier { category, proj })
}

#[derive(Debug, Clone)]
pub struct TensorCoinverter {
    pub category: TensorCategory,
    pub proj: TensorFunctor,
    pub inverse: TensorTransformation,
}

/// Coinverter of a monoidal 2-cell `alpha: f => g`: freely adjoins
/// inverses to every component.
pub fn coinverter_tensor(
    a: &TensorCategory,
    b: &TensorCategory,
    f: &TensorFunctor,
    g: &TensorFunctor,
    alpha: &TensorTransformation,
) -> Result<TensorCoinverter> {
    let bounds = merge3(a.carrier.bounds(), b.carrier.bounds());
    let base = b.protos.len();
    let protos: Vec<Proto> = (0..a.monoid.len())
        .map(|i| Proto {
            name: format!("inv@{}", a.monoid.name(i)),
            src: g.obj_map[i],
            tgt: f.obj_map[i],
        })
        .collect();
    let inv = |i: usize| TTerm { left: b.monoid.unit, proto: base + i, right: b.monoid.unit };
    let mut rels = Vec::new();
    for i in 0..a.monoid.len() {
        let al = b.path_to_tpath(alpha.at(i));
        rels.push((
            tpath_concat(al.clone(), TPath::single(g.obj_map[i], inv(i))),
            TPath::identity(f.obj_map[i]),
        ));
        rels.push((
            tpath_concat(TPath::single(g.obj_map[i], inv(i)), al),
            TPath::identity(g.obj_map[i]),
        ));
    }
    // naturality of the inverse
    for h in a.carrier.quiver.arrow_ids() {
        let hp = PathTerm::single(&a.carrier.quiver, h);
        let (x, y) = (hp.src.idx(), hp.tgt.idx());
        let fh = f.map_path(a, b, &hp)?;
        let gh = g.map_path(a, b, &hp)?;
        let lhs = tpath_concat(
            b.path_to_tpath(&gh),
            TPath::single(f.obj_map[y], inv(y)),
        );
        let rhs = tpath_concat(
            TPath::single(g.obj_map[x], inv(x)),
            b.path_to_tpath(&fh),
        );
        rels.push((TPath { src: g.obj_map[x], ..lhs }, TPath { src: g.obj_map[x], ..rhs }));
    }
    // monoidality of the inverse (derivable; helps rewriting)
    for i in 0..a.monoid.len() {
        for j in 0..a.monoid.len() {
            let ij = match a.monoid.prod_opt(i, j) {
                Some(x) => x,
                None => continue,
            };
            let (mf, _) = f.mu_at(a, b, i, j)?;
            let (mg, _) = g.mu_at(a, b, i, j)?;
            let src = match b.monoid.prod_opt(g.obj_map[i], g.obj_map[j]) {
                Some(x) => x,
                None => continue,
            };
            let lhs = tpath_concat(
                b.path_to_tpath(&mg),
                TPath::single(g.obj_map[ij], inv(ij)),
            );
            let tens = TPath {
                src,
                terms: vec![
                    TTerm { left: b.monoid.unit, proto: base + i, right: g.obj_map[j] },
                    TTerm { left: f.obj_map[i], proto: base + j, right: b.monoid.unit },
                ],
            };
            let rhs = tpath_concat(tens, b.path_to_tpath(&mf));
            rels.push((TPath { src, ..lhs }, rhs));
        }
    }
    let category = b.extend(protos, rels, bounds)?;
    let proj = strict_embedding(b, &category)?;
    let components: Vec<PathTerm> = (0..a.monoid.len())
        .map(|i| category.proto_path(base + i))
        .collect();
    let fp = f.then(a, b, &category, &proj)?;
    let gp = g.then(a, b, &category, &proj)?;
    let inverse = TensorTransformation::new(a, &category, &gp, &fp, components)?;
    Ok(TensorCoinverter { category, proj, inverse })
}

#[derive(Debug, Clone)]
pub struct TensorCoequalizer {
    pub category: TensorCategory,
    pub proj: TensorFunctor,
    pub cell: TensorTransformation,
    pub cell_inverse: TensorTransformation,
}

/// Coequalizer of tensor functors: freely adjoins an invertible monoidal
/// 2-cell `proj;f => proj;g`, in one construction step.
pub fn coequalizer_tensor(
    a: &TensorCategory,
    b: &TensorCategory,
    f: &TensorFunctor,
    g: &TensorFunctor,
) -> Result<TensorCoequalizer> {
    let bounds = merge3(a.carrier.bounds(), b.carrier.bounds());
    let n = a.monoid.len();
    let base = b.protos.len();
    let mut protos: Vec<Proto> = (0..n)
        .map(|i| Proto {
            name: format!("del@{}", a.monoid.name(i)),
            src: f.obj_map[i],
            tgt: g.obj_map[i],
        })
        .collect();
    protos.extend((0..n).map(|i| Proto {
        name: format!("inv@{}", a.monoid.name(i)),
        src: g.obj_map[i],
        tgt: f.obj_map[i],
    }));
    let delta = |i: usize| TTerm { left: b.monoid.unit, proto: base + i, right: b.monoid.unit };
    let inv = |i: usize| TTerm {
        left: b.monoid.unit,
        proto: base + n + i,
        right: b.monoid.unit,
    };
    let mut rels = Vec::new();
    for i in 0..n {
        rels.push((
            TPath {
                src: f.obj_map[i],
                terms: vec![delta(i), inv(i)],
            },
            TPath::identity(f.obj_map[i]),
        ));
        rels.push((
            TPath {
                src: g.obj_map[i],
                terms: vec![inv(i), delta(i)],
            },
            TPath::identity(g.obj_map[i]),
        ));
    }
    for h in a.carrier.quiver.arrow_ids() {
        let hp = PathTerm::single(&a.carrier.quiver, h);
        let (x, y) = (hp.src.idx(), hp.tgt.idx());
        let fh = f.map_path(a, b, &hp)?;
        let gh = g.map_path(a, b, &hp)?;
        rels.push((
            tpath_concat(
                b.path_to_tpath(&fh),
                TPath::single(g.obj_map[y], delta(y)),
            ),
            tpath_concat(
                TPath::single(f.obj_map[x], delta(x)),
                b.path_to_tpath(&gh),
            ),
        ));
        rels.push((
            tpath_concat(b.path_to_tpath(&gh), TPath::single(f.obj_map[y], inv(y))),
            tpath_concat(TPath::single(g.obj_map[x], inv(x)), b.path_to_tpath(&fh)),
        ));
    }
    // monoidality of the universal cell
    for i in 0..n {
        for j in 0..n {
            let ij = match a.monoid.prod_opt(i, j) {
                Some(x) => x,
                None => continue,
            };
            let (mf, _) = f.mu_at(a, b, i, j)?;
            let (mg, _) = g.mu_at(a, b, i, j)?;
            let src = match b.monoid.prod_opt(f.obj_map[i], f.obj_map[j]) {
                Some(x) => x,
                None => continue,
            };
            let lhs = tpath_concat(
                b.path_to_tpath(&mf),
                TPath::single(f.obj_map[ij], delta(ij)),
            );
            let tens = TPath {
                src,
                terms: vec![
                    TTerm { left: b.monoid.unit, proto: base + i, right: f.obj_map[j] },
                    TTerm { left: g.obj_map[i], proto: base + j, right: b.monoid.unit },
                ],
            };
            let rhs = tpath_concat(tens, b.path_to_tpath(&mg));
            rels.push((TPath { src, ..lhs }, rhs));
        }
    }
    let lhs = tpath_concat(
        b.path_to_tpath(&f.eta),
        TPath::single(f.obj_map[a.monoid.unit], delta(a.monoid.unit)),
    );
    rels.push((
        TPath { src: b.monoid.unit, ..lhs },
        b.path_to_tpath(&g.eta),
    ));
    let category = b.extend(protos, rels, bounds)?;
    let proj = strict_embedding(b, &category)?;
    let fp = f.then(a, b, &category, &proj)?;
    let gp = g.then(a, b, &category, &proj)?;
    let cell = TensorTransformation::new(
        a,
        &category,
        &fp,
        &gp,
        (0..n).map(|i| category.proto_path(base + i)).collect(),
    )?;
    let cell_inverse = TensorTransformation::new(
        a,
        &category,
        &gp,
        &fp,
        (0..n).map(|i| category.proto_path(base + n + i)).collect(),
    )?;
    Ok(TensorCoequalizer { category, proj, cell, cell_inverse })
}

/// Coequalizer computed as coinserter followed by coinverter; exists to
/// cross-check the direct construction.
pub fn coequalizer_tensor_staged(
    a: &TensorCategory,
    b: &TensorCategory,
    f: &TensorFunctor,
    g: &TensorFunctor,
) -> Result<TensorCoequalizer> {
    let coins = coinserter_tensor(a, b, f, g)?;
    let f1 = f.then(a, b, &coins.category, &coins.proj)?;
    let g1 = g.then(a, b, &coins.category, &coins.proj)?;
    let coinv = coinverter_tensor(a, &coins.category, &f1, &g1, &coins.cell)?;
    let proj = coins.proj.then(b, &coins.category, &coinv.category, &coinv.proj)?;
    let cell = TensorTransformation {
        components: coins
            .cell
            .components
            .iter()
            .map(|c| coinv.proj.map_path(&coins.category, &coinv.category, c))
            .collect::<Result<_>>()?,
    };
    Ok(TensorCoequalizer {
        category: coinv.category,
        proj,
        cell,
        cell_inverse: coinv.inverse,
    })
}

#[derive(Debug, Clone)]
pub struct TensorCoproduct {
    pub category: TensorCategory,
    pub left: TensorFunctor,
    pub right: TensorFunctor,
}

/// Coproduct of tensor categories: the product category with componentwise
/// structure, which is the bicategorical coproduct in this setting.
pub fn coproduct_tensor(a: &TensorCategory, b: &TensorCategory) -> Result<TensorCoproduct> {
    let bounds = merge3(a.carrier.bounds(), b.carrier.bounds());
    let monoid = ObjectMonoid::product(&a.monoid, &b.monoid);
    let nb = b.monoid.len();
    let pair = |i: usize, j: usize| i * nb + j;
    let base = a.protos.len();
    let mut protos: Vec<Proto> = a
        .protos
        .iter()
        .map(|p| Proto {
            name: format!("l.{}", p.name),
            src: pair(p.src, b.monoid.unit),
            tgt: pair(p.tgt, b.monoid.unit),
        })
        .collect();
    protos.extend(b.protos.iter().map(|p| Proto {
        name: format!("r.{}", p.name),
        src: pair(a.monoid.unit, p.src),
        tgt: pair(a.monoid.unit, p.tgt),
    }));
    // a morphism of `a` at a fixed second coordinate
    let embed_a = |p: &PathTerm, j: usize| -> TPath {
        let tp = a.path_to_tpath(p);
        TPath {
            src: pair(tp.src, j),
            terms: tp
                .terms
                .into_iter()
                .map(|t| TTerm {
                    left: pair(t.left, j),
                    proto: t.proto,
                    right: pair(t.right, b.monoid.unit),
                })
                .collect(),
        }
    };
    let embed_b = |p: &PathTerm, i: usize| -> TPath {
        let tp = b.path_to_tpath(p);
        TPath {
            src: pair(i, tp.src),
            terms: tp
                .terms
                .into_iter()
                .map(|t| TTerm {
                    left: pair(i, t.left),
                    proto: base + t.proto,
                    right: pair(a.monoid.unit, t.right),
                })
                .collect(),
        }
    };
    let mut relations = Vec::new();
    for (l, r) in &a.carrier.relations {
        relations.push((embed_a(l, b.monoid.unit), embed_a(r, b.monoid.unit)));
    }
    for (l, r) in &b.carrier.relations {
        relations.push((embed_b(l, a.monoid.unit), embed_b(r, a.monoid.unit)));
    }
    // componentwise symmetry
    let mut sigma = BTreeMap::new();
    for x1 in 0..a.monoid.len() {
        for x2 in 0..nb {
            for y1 in 0..a.monoid.len() {
                for y2 in 0..nb {
                    let x = pair(x1, x2);
                    let y = pair(y1, y2);
                    if x == monoid.unit || y == monoid.unit {
                        continue;
                    }
                    let entry = (|| {
                        monoid.prod_opt(x, y)?;
                        monoid.prod_opt(y, x)?;
                        let sa = a.sigma(x1, y1).ok()?;
                        let sb = b.sigma(x2, y2).ok()?;
                        let x2y2 = b.monoid.prod_opt(x2, y2)?;
                        let y1x1 = a.monoid.prod_opt(y1, x1)?;
                        Some(tpath_concat(embed_a(&sa, x2y2), embed_b(&sb, y1x1)))
                    })();
                    match entry {
                        Some(p) => {
                            sigma.insert((x, y), p);
                        }
                        None => continue,
                    }
                }
            }
        }
    }
    let pres = TensorPresentation {
        monoid,
        protos,
        relations,
        sigma: SigmaSpec::Explicit(sigma),
    };
    let all: Vec<usize> = (0..pres.protos.len()).collect();
    let category = TensorCategory::build_with(&pres, bounds, &all)?;
    let left = TensorFunctor::strict(
        a,
        &category,
        (0..a.monoid.len()).map(|i| pair(i, b.monoid.unit)).collect(),
        (0..a.protos.len()).map(|i| category.proto_path(i)).collect(),
    )?;
    let right = TensorFunctor::strict(
        b,
        &category,
        (0..nb).map(|j| pair(a.monoid.unit, j)).collect(),
        (0..b.protos.len())
            .map(|i| category.proto_path(base + i))
            .collect(),
    )?;
    Ok(TensorCoproduct { category, left, right })
}

/// The functor out of a coproduct induced by `f: a -> t` and `g: b -> t`,
/// sending `(x, y)` to `F(x) (x) G(y)`, with `mu` built from the
/// symmetry of the target.
pub fn pair_tensor_functors(
    a: &TensorCategory,
    b: &TensorCategory,
    cop: &TensorCoproduct,
    t: &TensorCategory,
    f: &TensorFunctor,
    g: &TensorFunctor,
) -> Result<TensorFunctor> {
    let nb = b.monoid.len();
    let prod = &cop.category;
    let mut obj_map = Vec::with_capacity(prod.monoid.len());
    for i in 0..a.monoid.len() {
        for j in 0..nb {
            obj_map.push(t.monoid.prod(f.obj_map[i], g.obj_map[j])?);
        }
    }
    let mut proto_map = Vec::new();
    for p in 0..a.protos.len() {
        let img = f.map_path(a, t, &a.proto_path(p))?;
        proto_map.push(t.whisk(&img, t.monoid.unit, g.obj_map[b.monoid.unit])?);
    }
    for p in 0..b.protos.len() {
        let img = g.map_path(b, t, &b.proto_path(p))?;
        proto_map.push(t.whisk(&img, f.obj_map[a.monoid.unit], t.monoid.unit)?);
    }
    // eta = eta_F;(F(1) (x) eta_G)
    let eta = t
        .carrier
        .compose(&f.eta, &t.whisk(&g.eta, f.obj_map[a.monoid.unit], t.monoid.unit)?)?;
    let eta_inv = t
        .carrier
        .compose(
            &t.whisk(&g.eta_inv, f.obj_map[a.monoid.unit], t.monoid.unit)?,
            &f.eta_inv,
        )?;
    // mu_{(i,j),(k,l)} = (F(i) (x) sigma_{G(j),F(k)} (x) G(l));(mu_F (x) mu_G)
    let mut mu = BTreeMap::new();
    for i in 0..a.monoid.len() {
        for j in 0..nb {
            for k in 0..a.monoid.len() {
                for l in 0..nb {
                    let (x, y) = (i * nb + j, k * nb + l);
                    if prod.monoid.prod_opt(x, y).is_none() {
                        continue;
                    }
                    let s = t.sigma(g.obj_map[j], f.obj_map[k])?;
                    let s_inv = t.sigma(f.obj_map[k], g.obj_map[j])?;
                    let (mf, mfi) = f.mu_at(a, t, i, k)?;
                    let (mg, mgi) = g.mu_at(b, t, j, l)?;
                    let gjl = t.monoid.prod(g.obj_map[j], g.obj_map[l])?;
                    let fik = t.monoid.prod(f.obj_map[i], f.obj_map[k])?;
                    let w_s = t.whisk(&s, f.obj_map[i], g.obj_map[l])?;
                    let w_mf = t.whisk(&mf, t.monoid.unit, gjl)?;
                    let w_mg = t.whisk(&mg, f.obj_map[a.monoid.prod(i, k)?], t.monoid.unit)?;
                    let m = t
                        .carrier
                        .compose(&t.carrier.compose(&w_s, &w_mf)?, &w_mg)?;
                    let w_mgi = t.whisk(&mgi, f.obj_map[a.monoid.prod(i, k)?], t.monoid.unit)?;
                    let w_mfi = t.whisk(&mfi, t.monoid.unit, gjl)?;
                    let w_si = t.whisk(&s_inv, f.obj_map[i], g.obj_map[l])?;
                    let mi = t
                        .carrier
                        .compose(&t.carrier.compose(&w_mgi, &w_mfi)?, &w_si)?;
                    if !m.is_identity() || !mi.is_identity() {
                        mu.insert((x, y), (m, mi));
                    }
                }
            }
        }
    }
    TensorFunctor::with_structure(prod, t, obj_map, proto_map, eta, eta_inv, mu)
}

#[derive(Debug, Clone)]
pub struct TensorPushout {
    pub category: TensorCategory,
    pub left: TensorFunctor,
    pub right: TensorFunctor,
    pub cell: TensorTransformation,
    pub cell_inverse: TensorTransformation,
}

/// Pushout of `f: c -> a`, `g: c -> b`: the coequalizer of the two
/// composites into the coproduct.
pub fn pushout_tensor(
    c: &TensorCategory,
    a: &TensorCategory,
    b: &TensorCategory,
    f: &TensorFunctor,
    g: &TensorFunctor,
) -> Result<TensorPushout> {
    let cop = coproduct_tensor(a, b)?;
    let h1 = f.then(c, a, &cop.category, &cop.left)?;
    let h2 = g.then(c, b, &cop.category, &cop.right)?;
    let ce = coequalizer_tensor(c, &cop.category, &h1, &h2)?;
    let left = cop.left.then(a, &cop.category, &ce.category, &ce.proj)?;
    let right = cop.right.then(b, &cop.category, &ce.category, &ce.proj)?;
    Ok(TensorPushout {
        category: ce.category,
        left,
        right,
        cell: ce.cell,
        cell_inverse: ce.cell_inverse,
    })
}

/// A finite directed diagram of tensor categories with strict transition
/// functors.
#[derive(Debug, Clone)]
pub struct TensorDirectedDiagram {
    pub cats: Vec<TensorCategory>,
    pub leq: Vec<(usize, usize)>,
    pub functors: BTreeMap<(usize, usize), TensorFunctor>,
}

#[derive(Debug, Clone)]
pub struct TensorDirectedColimit {
    pub category: TensorCategory,
    pub injections: Vec<TensorFunctor>,
}

/// Directed colimit of tensor categories. A finite directed index order
/// has a greatest element `m`, so the colimit is realized as the stage-`m`
/// category with the transports as cocone; transition functors must be
/// strict for the realization to be strict.
pub fn directed_colimit_tensor(d: &TensorDirectedDiagram) -> Result<TensorDirectedColimit> {
    let n = d.cats.len();
    if n == 0 {
        return Err(Error::IncoherentDiagram("empty diagram".into()));
    }
    let mut cl = vec![vec![false; n]; n];
    for i in 0..n {
        cl[i][i] = true;
    }
    for &(i, j) in &d.leq {
        cl[i][j] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if cl[i][k] && cl[k][j] {
                    cl[i][j] = true;
                }
            }
        }
    }
    let m = match (0..n).find(|&j| (0..n).all(|i| cl[i][j])) {
        Some(m) => m,
        None => {
            return Err(Error::IncoherentDiagram("index order is not directed".into()))
        }
    };
    for ((i, j), f) in &d.functors {
        if !f.eta.is_identity() || f.mu.values().any(|(p, _)| !p.is_identity()) {
            return Err(Error::IncoherentDiagram(format!(
                "transition functor {i} -> {j} is not strict"
            )));
        }
        if !d.cats[*i]
            .monoid
            .is_homomorphism(&d.cats[*j].monoid, &f.obj_map)
        {
            return Err(Error::IncoherentDiagram(format!(
                "transition functor {i} -> {j} is not strict on objects"
            )));
        }
    }
    // coherence of declared compositions
    for (&(i, j), fij) in &d.functors {
        for (&(j2, k), fjk) in &d.functors {
            if j2 != j {
                continue;
            }
            if let Some(fik) = d.functors.get(&(i, k)) {
                let comp = fij.then(&d.cats[i], &d.cats[j], &d.cats[k], fjk)?;
                if comp.obj_map != fik.obj_map {
                    return Err(Error::IncoherentDiagram(format!(
                        "transitions {i}->{j}->{k} disagree with {i}->{k} on objects"
                    )));
                }
                for p in 0..d.cats[i].protos.len() {
                    let eq = d.cats[k].carrier.morphisms_equal(
                        &comp.proto_map[p],
                        &fik.proto_map[p],
                    )?;
                    if eq != Tri::Equal {
                        return Err(Error::IncoherentDiagram(format!(
                            "transitions {i}->{j}->{k} disagree with {i}->{k} on `{}`",
                            d.cats[i].protos[p].name
                        )));
                    }
                }
            }
        }
    }
    // transports to the top stage
    let mut injections = Vec::with_capacity(n);
    for i in 0..n {
        if i == m {
            injections.push(TensorFunctor::identity(&d.cats[m]));
            continue;
        }
        if let Some(f) = d.functors.get(&(i, m)) {
            injections.push(f.clone());
            continue;
        }
        // compose along any declared path
        let mut prev: BTreeMap<usize, usize> = BTreeMap::new();
        let mut queue = std::collections::VecDeque::from([i]);
        while let Some(k) = queue.pop_front() {
            if k == m {
                break;
            }
            for &(s, t) in &d.leq {
                if s == k && t != i && !prev.contains_key(&t) {
                    prev.insert(t, k);
                    queue.push_back(t);
                }
            }
        }
        if !prev.contains_key(&m) {
            return Err(Error::IncoherentDiagram(format!(
                "no transition path from index {i} to {m}"
            )));
        }
        let mut path = vec![m];
        let mut k = m;
        while k != i {
            k = prev[&k];
            path.push(k);
        }
        path.reverse();
        let mut acc = TensorFunctor::identity(&d.cats[i]);
        for w in path.windows(2) {
            let step = d.functors.get(&(w[0], w[1])).ok_or_else(|| {
                Error::IncoherentDiagram(format!("missing functor {} -> {}", w[0], w[1]))
            })?;
            acc = acc.then(&d.cats[i], &d.cats[w[0]], &d.cats[w[1]], step)?;
        }
        injections.push(acc);
    }
    Ok(TensorDirectedColimit { category: d.cats[m].clone(), injections })
}

fn require_factorization(
    quotient: &TensorCategory,
    t: &TensorCategory,
    k: TensorFunctor,
) -> Result<TensorFunctor> {
    match k.check(quotient, t)? {
        Tri::Equal => Ok(k),
        Tri::Distinct => Err(Error::ConditionsNotSatisfied(
            "the given data does not respect the imposed equations".into(),
        )),
        Tri::Unknown => Err(Error::UnknownEquality(
            "factorization could not be verified within bounds".into(),
        )),
    }
}

/// The functor out of a coinserter induced by `q: b -> t` and a monoidal
/// 2-cell `gamma: q;f => q;g`.
pub fn factor_through_coinserter(
    a: &TensorCategory,
    b: &TensorCategory,
    cons: &TensorCoinserter,
    t: &TensorCategory,
    q: &TensorFunctor,
    gamma: &TensorTransformation,
) -> Result<TensorFunctor> {
    let _ = a;
    let mut proto_map = q.proto_map.clone();
    proto_map.extend(gamma.components.iter().cloned());
    let k = TensorFunctor::with_structure(
        &cons.category,
        t,
        q.obj_map.clone(),
        proto_map,
        q.eta.clone(),
        q.eta_inv.clone(),
        q.mu.clone(),
    )?;
    let _ = b;
    require_factorization(&cons.category, t, k)
}

/// The functor out of a coequifier induced by a functor `q: b -> t` that
/// equalizes the two 2-cells.
pub fn factor_through_coequifier(
    b: &TensorCategory,
    coeq: &TensorCoequifier,
    t: &TensorCategory,
    q: &TensorFunctor,
) -> Result<TensorFunctor> {
    let _ = b;
    let k = TensorFunctor {
        obj_map: q.obj_map.clone(),
        proto_map: q.proto_map.clone(),
        eta: q.eta.clone(),
        eta_inv: q.eta_inv.clone(),
        mu: q.mu.clone(),
    };
    require_factorization(&coeq.category, t, k)
}

/// The functor out of a coinverter induced by `q: b -> t` such that the
/// whiskered cell `q(alpha)` is invertible; inverses are found in the
/// saturated target.
pub fn factor_through_coinverter(
    a: &TensorCategory,
    b: &TensorCategory,
    coinv: &TensorCoinverter,
    t: &TensorCategory,
    q: &TensorFunctor,
    q_alpha: &TensorTransformation,
) -> Result<TensorFunctor> {
    let _ = (a, b);
    let mut proto_map = q.proto_map.clone();
    for c in &q_alpha.components {
        let inv = t.carrier.inverse_of(c)?.ok_or_else(|| {
            Error::ConditionsNotSatisfied("whiskered cell is not invertible".into())
        })?;
        proto_map.push(inv);
    }
    let k = TensorFunctor::with_structure(
        &coinv.category,
        t,
        q.obj_map.clone(),
        proto_map,
        q.eta.clone(),
        q.eta_inv.clone(),
        q.mu.clone(),
    )?;
    require_factorization(&coinv.category, t, k)
}

/// The functor out of a coequalizer induced by `q: b -> t` and an
/// invertible monoidal 2-cell `gamma: q;f => q;g`.
pub fn factor_through_coequalizer(
    a: &TensorCategory,
    b: &TensorCategory,
    coeq: &TensorCoequalizer,
    t: &TensorCategory,
    q: &TensorFunctor,
    gamma: &TensorTransformation,
) -> Result<TensorFunctor> {
    let _ = (a, b);
    let mut proto_map = q.proto_map.clone();
    proto_map.extend(gamma.components.iter().cloned());
    for c in &gamma.components {
        let inv = t.carrier.inverse_of(c)?.ok_or_else(|| {
            Error::ConditionsNotSatisfied("the 2-cell is not invertible".into())
        })?;
        proto_map.push(inv);
    }
    let k = TensorFunctor::with_structure(
        &coeq.category,
        t,
        q.obj_map.clone(),
        proto_map,
        q.eta.clone(),
        q.eta_inv.clone(),
        q.mu.clone(),
    )?;
    require_factorization(&coeq.category, t, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::fpcat::HomStatus;

    fn z2_monoid() -> ObjectMonoid {
        ObjectMonoid::finite_table(
            vec!["1".into(), "g".into()],
            "1",
            vec![("g".into(), "g".into(), "1".into())],
        )
        .unwrap()
    }

    fn z2_discrete() -> TensorCategory {
        TensorCategory::discrete(z2_monoid(), Bounds::default()).unwrap()
    }

    #[test]
    fn coinserter_from_initial_adds_unit_endo() {
        let i = initial_tensor(Bounds::default());
        let b = z2_discrete();
        let f = TensorFunctor::strict(&i, &b, vec![0], vec![]).unwrap();
        let c = coinserter_tensor(&i, &b, &f, &f).unwrap();
        // del@1: 1 -> 1 with monoidality making del_1 = id via eta
        let u = c.category.unit_obj();
        let sat = c.category.carrier.require_saturated().unwrap();
        assert_eq!(sat.report.homs[&(u, u)], HomStatus::Closed(1));
        let id = PathTerm::identity(u);
        assert_eq!(
            c.category
                .carrier
                .morphisms_equal(&c.cell.components[0], &id)
                .unwrap(),
            Tri::Equal
        );
        assert_eq!(c.proj.check(&b, &c.category).unwrap(), Tri::Equal);
    }

    #[test]
    fn stage_one_cell_is_not_monoidal_but_final_is() {
        let i = initial_tensor(Bounds::default());
        let b = initial_tensor(Bounds::default());
        let f = TensorFunctor::strict(&i, &b, vec![0], vec![]).unwrap();
        let stage = coinserter_into_tensor(&i, &b, &f, &f).unwrap();
        let f1 = f.then(&i, &b, &stage.category, &stage.proj).unwrap();
        // free endomorphism of the unit: natural, but eta;del != eta
        let check = stage
            .cell
            .check_monoidal(&i, &stage.category, &f1, &f1)
            .unwrap();
        assert_eq!(check, Tri::Distinct);
        let full = coinserter_tensor(&i, &b, &f, &f).unwrap();
        let f2 = f.then(&i, &b, &full.category, &full.proj).unwrap();
        assert_eq!(
            full.cell
                .check_monoidal(&i, &full.category, &f2, &f2)
                .unwrap(),
            Tri::Equal
        );
    }

    #[test]
    fn coproduct_of_discretes() {
        let a = z2_discrete();
        let b = z2_discrete();
        let c = coproduct_tensor(&a, &b).unwrap();
        assert_eq!(c.category.monoid.len(), 4);
        assert!(c.category.carrier.saturate().closed());
        assert_eq!(c.left.check(&a, &c.category).unwrap(), Tri::Equal);
        assert_eq!(c.right.check(&b, &c.category).unwrap(), Tri::Equal);
    }

    #[test]
    fn pairing_out_of_coproduct() {
        let a = z2_discrete();
        let b = z2_discrete();
        let cop = coproduct_tensor(&a, &b).unwrap();
        let t = z2_discrete();
        let f = TensorFunctor::identity(&t);
        let h = pair_tensor_functors(&a, &b, &cop, &t, &f, &f).unwrap();
        assert_eq!(h.check(&cop.category, &t).unwrap(), Tri::Equal);
        // H(g, g) = g (x) g = 1
        assert_eq!(h.obj_map[3], 0);
    }

    #[test]
    fn coequalizer_routes_have_matching_homs() {
        let i = initial_tensor(Bounds::default());
        let b = z2_discrete();
        let f = TensorFunctor::strict(&i, &b, vec![0], vec![]).unwrap();
        let direct = coequalizer_tensor(&i, &b, &f, &f).unwrap();
        let staged = coequalizer_tensor_staged(&i, &b, &f, &f).unwrap();
        for c in [&direct, &staged] {
            let u = c.category.unit_obj();
            let g = c.category.obj(1);
            let sat = c.category.carrier.require_saturated().unwrap();
            assert_eq!(sat.report.homs[&(u, u)], HomStatus::Closed(1));
            assert_eq!(sat.report.homs[&(g, g)], HomStatus::Closed(1));
        }
    }

    #[test]
    fn directed_colimit_tensor_top_stage() {
        let a = initial_tensor(Bounds::default());
        let b = z2_discrete();
        let f = TensorFunctor::strict(&a, &b, vec![0], vec![]).unwrap();
        let d = TensorDirectedDiagram {
            cats: vec![a, b],
            leq: vec![(0, 1)],
            functors: BTreeMap::from([((0, 1), f)]),
        };
        let col = directed_colimit_tensor(&d).unwrap();
        assert_eq!(col.category.monoid.len(), 2);
        assert_eq!(col.injections.len(), 2);
    }

    #[test]
    fn factorization_through_coequifier() {
        let i = initial_tensor(Bounds::default());
        let b = z2_discrete();
        // trivial coequifier (alpha = beta = identity of the inclusion)
        let f = TensorFunctor::strict(&i, &b, vec![0], vec![]).unwrap();
        let al = TensorTransformation::identity(&i, &b, &f);
        let ce = coequifier_tensor(&i, &b, &al, &al).unwrap();
        let q = TensorFunctor::identity(&b);
        let k = factor_through_coequifier(&b, &ce, &b, &q).unwrap();
        assert_eq!(k.check(&ce.category, &b).unwrap(), Tri::Equal);
    }
}
