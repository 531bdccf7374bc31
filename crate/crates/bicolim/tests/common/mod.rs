#![allow(dead_code)]

use std::collections::BTreeMap;

use bicolim::cat::fpcat::{Bounds, FpCategory, Tri};
use bicolim::cat::quiver::{ObjId, PathTerm};
use bicolim::colimit::{
    coequalizer_cat, coequalizer_cat_staged, coequifier_cat, coinserter_cat, coinverter_cat,
    coproduct_cat, pushout_cat,
};
use bicolim::dsl::{parse, resolve, Env};
use bicolim::error::Result;
use bicolim::tensor::category::TensorCategory;
use bicolim::tensor_colimit::{
    coequalizer_tensor, coequalizer_tensor_staged, coinserter_tensor, coproduct_tensor,
    pushout_tensor,
};
use bicolim::verify::{
    verify_coequalizer_cat, verify_coequalizer_tensor, verify_coequifier_cat,
    verify_coinserter_cat, verify_coinserter_tensor, verify_coinverter_cat, verify_coproduct_cat,
    verify_coproduct_tensor, verify_pushout_cat, verify_pushout_tensor, UPReport,
};

pub fn default_bounds() -> Bounds {
    Bounds { max_len: 12, max_hom: 5000 }
}

pub fn env(text: &str) -> Env {
    resolve(&parse(text).expect("fixture parses"), default_bounds())
        .expect("fixture resolves")
}

pub fn env_with(text: &str, bounds: Bounds) -> Env {
    resolve(&parse(text).expect("fixture parses"), bounds).expect("fixture resolves")
}

/// All paths of length at most `max_len` in the free category on the quiver.
pub fn free_paths(c: &FpCategory, max_len: usize) -> Vec<PathTerm> {
    let mut out: Vec<PathTerm> = c.quiver.object_ids().map(PathTerm::identity).collect();
    let mut frontier = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            for a in c.quiver.arrow_ids() {
                if c.quiver.src(a) == p.tgt {
                    let mut arrows = p.arrows.clone();
                    arrows.push(a);
                    next.push(PathTerm { src: p.src, tgt: c.quiver.tgt(a), arrows });
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    out
}

struct Uf {
    parent: Vec<usize>,
}

impl Uf {
    fn new(n: usize) -> Self {
        Uf { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Object sitting at position `i` along a path: the source of arrow `i`,
/// or the path target when `i` is one past the last arrow.
fn object_at(c: &FpCategory, p: &PathTerm, i: usize) -> ObjId {
    if i < p.arrows.len() {
        c.quiver.src(p.arrows[i])
    } else {
        p.tgt
    }
}

/// Equivalence classes of all free paths of length at most `max_len`,
/// computed by closing the declared relations under one-step rewriting in
/// arbitrary contexts. This is a brute-force congruence closure and shares
/// nothing with the rewriting engine inside `FpCategory`.
pub struct OracleClasses {
    pub paths: Vec<PathTerm>,
    index: BTreeMap<(usize, usize, Vec<usize>), usize>,
    class: Vec<usize>,
}

impl OracleClasses {
    pub fn class_of(&self, p: &PathTerm) -> Option<usize> {
        let key = (
            p.src.idx(),
            p.tgt.idx(),
            p.arrows.iter().map(|a| a.idx()).collect(),
        );
        self.index.get(&key).map(|&i| self.class[i])
    }

    pub fn equal(&self, p: &PathTerm, q: &PathTerm) -> Option<bool> {
        Some(self.class_of(p)? == self.class_of(q)?)
    }
}

pub fn oracle_classes(c: &FpCategory, max_len: usize) -> OracleClasses {
    let paths = free_paths(c, max_len);
    let mut index = BTreeMap::new();
    for (i, p) in paths.iter().enumerate() {
        let key = (
            p.src.idx(),
            p.tgt.idx(),
            p.arrows.iter().map(|a| a.idx()).collect::<Vec<_>>(),
        );
        index.insert(key, i);
    }
    let mut rules: Vec<(PathTerm, PathTerm)> = Vec::new();
    for (l, r) in &c.relations {
        rules.push((l.clone(), r.clone()));
        rules.push((r.clone(), l.clone()));
    }
    let mut uf = Uf::new(paths.len());
    let mut changed = true;
    while changed {
        changed = false;
        for (pi, p) in paths.iter().enumerate() {
            for (l, r) in &rules {
                let n = l.arrows.len();
                if p.arrows.len() < n {
                    continue;
                }
                for i in 0..=p.arrows.len() - n {
                    if p.arrows[i..i + n] != l.arrows[..] {
                        continue;
                    }
                    if object_at(c, p, i) != l.src {
                        continue;
                    }
                    let mut arrows = p.arrows[..i].to_vec();
                    arrows.extend(r.arrows.iter().copied());
                    arrows.extend(p.arrows[i + n..].iter().copied());
                    if arrows.len() > max_len {
                        continue;
                    }
                    let key = (
                        p.src.idx(),
                        p.tgt.idx(),
                        arrows.iter().map(|a| a.idx()).collect::<Vec<_>>(),
                    );
                    let qi = *index.get(&key).expect("rewritten path is a free path");
                    if uf.union(pi, qi) {
                        changed = true;
                    }
                }
            }
        }
    }
    let class = (0..paths.len()).map(|i| uf.find(i)).collect();
    OracleClasses { paths, index, class }
}

/// Twenty small presentations used to cross-check the rewriting engine
/// against a brute-force congruence closure over free paths.
pub fn oracle_fixtures() -> Vec<(&'static str, &'static str)> {
    vec![
        ("point", "category C { objects: X }"),
        ("arrow", "category C { objects: X, Y  arrows: f: X -> Y }"),
        (
            "parallel_pair",
            "category C { objects: X, Y  arrows: u: X -> Y, v: X -> Y }",
        ),
        (
            "iso",
            "category C { objects: X, Y  arrows: f: X -> Y, g: Y -> X  \
             relations: f;g = id(X), g;f = id(Y) }",
        ),
        (
            "idempotent",
            "category C { objects: X  arrows: e: X -> X  relations: e;e = e }",
        ),
        (
            "z2",
            "category C { objects: X  arrows: s: X -> X  relations: s;s = id(X) }",
        ),
        (
            "z3",
            "category C { objects: X  arrows: s: X -> X  relations: s;s;s = id(X) }",
        ),
        ("free_endo", "category C { objects: X  arrows: x: X -> X }"),
        (
            "free_pair",
            "category C { objects: X  arrows: x: X -> X, y: X -> X }",
        ),
        (
            "square",
            "category C { objects: P, Q, R, S  arrows: a: P -> Q, b: Q -> S, \
             c: P -> R, d: R -> S  relations: a;b = c;d }",
        ),
        (
            "triangle",
            "category C { objects: X, Y, Z  arrows: f: X -> Y, g: Y -> Z, \
             h: X -> Z  relations: f;g = h }",
        ),
        (
            "one_sided_inverse",
            "category C { objects: X  arrows: x: X -> X, y: X -> X  \
             relations: x;y = id(X) }",
        ),
        (
            "retraction",
            "category C { objects: A, B  arrows: s: A -> B, r: B -> A  \
             relations: s;r = id(A) }",
        ),
        (
            "commuting_idempotents",
            "category C { objects: X  arrows: e: X -> X, f: X -> X  \
             relations: e;e = e, f;f = f, f;e = e;f }",
        ),
        (
            "collapsing_chain",
            "category C { objects: A, B, D  arrows: f: A -> B, g: B -> D, \
             h: A -> D, k: A -> D  relations: f;g = h, h = k }",
        ),
        (
            "iso_with_endo",
            "category C { objects: X, Y  arrows: f: X -> Y, g: Y -> X, \
             e: X -> X  relations: f;g = id(X), g;f = id(Y), e;e = e }",
        ),
        (
            "eventually_idempotent",
            "category C { objects: X  arrows: x: X -> X  relations: x;x;x = x;x }",
        ),
        (
            "two_isos",
            "category C { objects: X, Y  arrows: f: X -> Y, g: Y -> X, \
             u: X -> Y, v: Y -> X  relations: f;g = id(X), g;f = id(Y), \
             u;v = id(X), v;u = id(Y) }",
        ),
        (
            "coforked",
            "category C { objects: X, Y, Z  arrows: u: X -> Y, v: X -> Y, \
             w: Y -> Z  relations: u;w = v;w }",
        ),
        (
            "commutative_monoid",
            "category C { objects: X  arrows: x: X -> X, y: X -> X  \
             relations: y;x = x;y }",
        ),
    ]
}

/// Compares the oracle verdict against the engine on every parallel pair of
/// paths of length at most `cmp_len`. Returns (pairs checked, unknowns).
pub fn cross_check(c: &FpCategory, oracle_len: usize, cmp_len: usize) -> (usize, usize) {
    let oracle = oracle_classes(c, oracle_len);
    let short: Vec<&PathTerm> = oracle
        .paths
        .iter()
        .filter(|p| p.arrows.len() <= cmp_len)
        .collect();
    let mut checked = 0;
    let mut unknowns = 0;
    for (i, p) in short.iter().enumerate() {
        for q in &short[i..] {
            if p.src != q.src || p.tgt != q.tgt {
                continue;
            }
            checked += 1;
            let want = oracle.equal(p, q).unwrap();
            match c.morphisms_equal(p, q).expect("engine comparison") {
                Tri::Equal => assert!(
                    want,
                    "engine says equal, oracle disagrees: {} vs {}",
                    p.display(&c.quiver),
                    q.display(&c.quiver)
                ),
                Tri::Distinct => assert!(
                    !want,
                    "engine says distinct, oracle disagrees: {} vs {}",
                    p.display(&c.quiver),
                    q.display(&c.quiver)
                ),
                Tri::Unknown => unknowns += 1,
            }
        }
    }
    (checked, unknowns)
}

/// One colimit instance over finitely presented categories: a label, the
/// construction kind, the fixture document, and the argument names.
pub struct CatInstance {
    pub label: &'static str,
    pub kind: &'static str,
    pub text: &'static str,
    pub args: Vec<&'static str>,
}

pub fn cat_instances() -> Vec<CatInstance> {
    let glue = "category J { objects: O }\n\
                category B { objects: X, Y }\n\
                functor F: J -> B { O |-> X }\n\
                functor G: J -> B { O |-> Y }";
    let invert = "category J { objects: O }\n\
                  category B { objects: X, Y  arrows: w: X -> Y }\n\
                  functor F: J -> B { O |-> X }\n\
                  functor G: J -> B { O |-> Y }\n\
                  transformation al: F => G { O |-> w }";
    let equify = "category J { objects: O }\n\
                  category B { objects: X  arrows: e1: X -> X, e2: X -> X  \
                  relations: e1;e1 = e1, e2;e2 = e2, e1;e2 = e1, e2;e1 = e2 }\n\
                  functor F: J -> B { O |-> X }\n\
                  transformation al: F => F { O |-> e1 }\n\
                  transformation be: F => F { O |-> e2 }";
    let invert_idem = "category J { objects: O }\n\
                       category B { objects: X  arrows: e: X -> X  relations: e;e = e }\n\
                       functor F: J -> B { O |-> X }\n\
                       transformation al: F => F { O |-> e }";
    let span = "category J { objects: O }\n\
                category A { objects: P, Q  arrows: u: P -> Q }\n\
                category B { objects: Z }\n\
                functor F: J -> A { O |-> Q }\n\
                functor G: J -> B { O |-> Z }";
    vec![
        CatInstance {
            label: "coproduct of points",
            kind: "coproduct",
            text: "category A { objects: X }\ncategory B { objects: Y }",
            args: vec!["A", "B"],
        },
        CatInstance {
            label: "coproduct arrow + point",
            kind: "coproduct",
            text: "category A { objects: X, Y  arrows: f: X -> Y }\n\
                   category B { objects: Z }",
            args: vec!["A", "B"],
        },
        CatInstance {
            label: "coinserter gluing two objects",
            kind: "coinserter",
            text: glue,
            args: vec!["F", "G"],
        },
        CatInstance {
            label: "coequalizer gluing two objects",
            kind: "coequalizer",
            text: glue,
            args: vec!["F", "G"],
        },
        CatInstance {
            label: "coequifier of distinct idempotents",
            kind: "coequifier",
            text: equify,
            args: vec!["al", "be"],
        },
        CatInstance {
            label: "coinverter of the walking arrow",
            kind: "coinverter",
            text: invert,
            args: vec!["al"],
        },
        CatInstance {
            label: "coinverter of an idempotent",
            kind: "coinverter",
            text: invert_idem,
            args: vec!["al"],
        },
        CatInstance {
            label: "pushout gluing an endpoint",
            kind: "pushout",
            text: span,
            args: vec!["F", "G"],
        },
    ]
}

pub fn cat_targets() -> Vec<(&'static str, FpCategory)> {
    let mk = |text: &str| {
        let e = env(text);
        e.cats["T"].clone()
    };
    vec![
        ("walking arrow", mk("category T { objects: P, Q  arrows: w: P -> Q }")),
        (
            "parallel pair",
            mk("category T { objects: P, Q  arrows: w1: P -> Q, w2: P -> Q }"),
        ),
        (
            "walking iso",
            mk("category T { objects: P, Q  arrows: w: P -> Q, wi: Q -> P  \
                relations: w;wi = id(P), wi;w = id(Q) }"),
        ),
    ]
}

/// Constructs the instance and verifies its universal property against `t`.
pub fn verify_cat_instance(
    inst: &CatInstance,
    e: &Env,
    t: &FpCategory,
    limit: usize,
) -> Result<UPReport> {
    match inst.kind {
        "coproduct" => {
            let a = &e.cats[inst.args[0]];
            let b = &e.cats[inst.args[1]];
            let c = coproduct_cat(a, b)?;
            verify_coproduct_cat(a, b, &c, t, limit)
        }
        "coinserter" => {
            let f = &e.functors[inst.args[0]];
            let g = &e.functors[inst.args[1]];
            let (idx, b) = (&e.cats[&f.src], &e.cats[&f.tgt]);
            let c = coinserter_cat(idx, b, &f.functor, &g.functor)?;
            verify_coinserter_cat(idx, b, &f.functor, &g.functor, &c, t, limit)
        }
        "coequalizer" => {
            let f = &e.functors[inst.args[0]];
            let g = &e.functors[inst.args[1]];
            let (idx, b) = (&e.cats[&f.src], &e.cats[&f.tgt]);
            let c = coequalizer_cat(idx, b, &f.functor, &g.functor)?;
            verify_coequalizer_cat(idx, b, &f.functor, &g.functor, &c, t, limit)
        }
        "coequifier" => {
            let al = &e.transforms[inst.args[0]];
            let be = &e.transforms[inst.args[1]];
            let f = &e.functors[&al.src];
            let (idx, b) = (&e.cats[&f.src], &e.cats[&f.tgt]);
            let c = coequifier_cat(idx, b, &al.transform, &be.transform)?;
            verify_coequifier_cat(idx, b, &al.transform, &be.transform, &c, t, limit)
        }
        "coinverter" => {
            let al = &e.transforms[inst.args[0]];
            let f = &e.functors[&al.src];
            let g = &e.functors[&al.tgt];
            let (idx, b) = (&e.cats[&f.src], &e.cats[&f.tgt]);
            let c = coinverter_cat(idx, b, &f.functor, &g.functor, &al.transform)?;
            verify_coinverter_cat(idx, b, &al.transform, &c, t, limit)
        }
        "pushout" => {
            let f = &e.functors[inst.args[0]];
            let g = &e.functors[inst.args[1]];
            let (c0, a, b) = (&e.cats[&f.src], &e.cats[&f.tgt], &e.cats[&g.tgt]);
            let c = pushout_cat(c0, a, b, &f.functor, &g.functor)?;
            verify_pushout_cat(c0, a, b, &f.functor, &g.functor, &c, t, limit)
        }
        other => panic!("unknown cat instance kind {other}"),
    }
}

/// Same instance, but realized through the staged route where one exists.
/// Returns None for kinds with a single construction route.
pub fn verify_cat_instance_staged(
    inst: &CatInstance,
    e: &Env,
    t: &FpCategory,
    limit: usize,
) -> Result<Option<UPReport>> {
    if inst.kind != "coequalizer" {
        return Ok(None);
    }
    let f = &e.functors[inst.args[0]];
    let g = &e.functors[inst.args[1]];
    let (idx, b) = (&e.cats[&f.src], &e.cats[&f.tgt]);
    let c = coequalizer_cat_staged(idx, b, &f.functor, &g.functor)?;
    verify_coequalizer_cat(idx, b, &f.functor, &g.functor, &c, t, limit).map(Some)
}

pub struct TensorInstance {
    pub label: &'static str,
    pub kind: &'static str,
    pub text: &'static str,
    pub args: Vec<&'static str>,
}

pub const T_INITIAL: &str = "tensor category I {\n  objects: 1\n  unit: 1\n  sigma: identity\n}";
pub const T_Z2: &str = "tensor category Z2 {\n  objects: 1, g\n  unit: 1\n  table:\n    \
                        g * g = 1\n  sigma: identity\n}";
pub const T_Z22: &str = "tensor category Z22 {\n  objects: 1, a, b, c\n  unit: 1\n  table:\n    \
                         a * a = 1,\n    b * b = 1,\n    c * c = 1,\n    a * b = c,\n    \
                         b * a = c,\n    a * c = b,\n    c * a = b,\n    b * c = a,\n    \
                         c * b = a\n  sigma: identity\n}";
pub const T_FREE3: &str =
    "tensor category F3 {\n  objects: free(x) max 3\n  sigma: identity\n}";
pub const T_IDEM: &str = "tensor category E {\n  objects: 1, g\n  unit: 1\n  table:\n    \
                          g * g = g\n  sigma: identity\n}";
pub const T_IDEM_ARROW: &str =
    "tensor category EP {\n  objects: 1, x\n  unit: 1\n  table:\n    x * x = x\n  \
     sigma: identity\n  arrows:\n    p: x -> x\n  relations:\n    \
     (1|p|1) ; (1|p|1) = (1|p|1),\n    (x|p|1) = (1|p|1),\n    (1|p|x) = (1|p|1),\n    \
     (x|p|x) = (1|p|1)\n}";

fn two(a: &str, b: &str) -> String {
    format!("{a}\n\n{b}")
}

pub fn tensor_instances() -> Vec<TensorInstance> {
    let unit_incl = "tensor functor F: I -> Z2 {\n  1 |-> 1\n}";
    let idem_pair = "tensor functor F: E -> EP {\n  1 |-> 1\n  g |-> x\n}\n\n\
                     tensor functor G: E -> EP {\n  1 |-> 1\n  g |-> 1\n}";
    vec![
        TensorInstance {
            label: "coproduct initial + Z2",
            kind: "coproduct",
            text: Box::leak(two(T_INITIAL, T_Z2).into_boxed_str()),
            args: vec!["I", "Z2"],
        },
        TensorInstance {
            label: "coproduct Z2 + Z2",
            kind: "coproduct",
            text: Box::leak(format!("{T_Z2}\n\ntensor category W {{\n  objects: 1, h\n  unit: 1\n  table:\n    h * h = 1\n  sigma: identity\n}}").into_boxed_str()),
            args: vec!["Z2", "W"],
        },
        TensorInstance {
            label: "coproduct Z2 + Z2xZ2",
            kind: "coproduct",
            text: Box::leak(two(T_Z2, T_Z22).into_boxed_str()),
            args: vec!["Z2", "Z22"],
        },
        TensorInstance {
            label: "coproduct free-on-one + Z2",
            kind: "coproduct",
            text: Box::leak(two(T_FREE3, T_Z2).into_boxed_str()),
            args: vec!["F3", "Z2"],
        },
        TensorInstance {
            label: "coproduct initial + free-on-one",
            kind: "coproduct",
            text: Box::leak(two(T_INITIAL, T_FREE3).into_boxed_str()),
            args: vec!["I", "F3"],
        },
        TensorInstance {
            label: "coproduct Z2xZ2 + idempotent",
            kind: "coproduct",
            text: Box::leak(two(T_Z22, T_IDEM).into_boxed_str()),
            args: vec!["Z22", "E"],
        },
        TensorInstance {
            label: "coinserter from initial",
            kind: "coinserter",
            text: Box::leak(
                format!("{}\n\n{unit_incl}", two(T_INITIAL, T_Z2)).into_boxed_str(),
            ),
            args: vec!["F", "F"],
        },
        TensorInstance {
            label: "coequalizer from initial",
            kind: "coequalizer",
            text: Box::leak(
                format!("{}\n\n{unit_incl}", two(T_INITIAL, T_Z2)).into_boxed_str(),
            ),
            args: vec!["F", "F"],
        },
        TensorInstance {
            label: "coinserter collapsing an idempotent",
            kind: "coinserter",
            text: Box::leak(
                format!("{}\n\n{idem_pair}", two(T_IDEM, T_IDEM_ARROW)).into_boxed_str(),
            ),
            args: vec!["F", "G"],
        },
        TensorInstance {
            label: "coequalizer collapsing an idempotent",
            kind: "coequalizer",
            text: Box::leak(
                format!("{}\n\n{idem_pair}", two(T_IDEM, T_IDEM_ARROW)).into_boxed_str(),
            ),
            args: vec!["F", "G"],
        },
        TensorInstance {
            label: "pushout of unit inclusions",
            kind: "pushout",
            text: Box::leak(
                format!(
                    "{}\n\ntensor category W {{\n  objects: 1, h\n  unit: 1\n  table:\n    \
                     h * h = 1\n  sigma: identity\n}}\n\n\
                     tensor functor F: I -> Z2 {{\n  1 |-> 1\n}}\n\n\
                     tensor functor G: I -> W {{\n  1 |-> 1\n}}",
                    two(T_INITIAL, T_Z2)
                )
                .into_boxed_str(),
            ),
            args: vec!["F", "G"],
        },
        TensorInstance {
            label: "pushout along identities on Z2",
            kind: "pushout",
            text: Box::leak(
                format!(
                    "{T_Z2}\n\ntensor functor F: Z2 -> Z2 {{\n  1 |-> 1\n  g |-> g\n}}"
                )
                .into_boxed_str(),
            ),
            args: vec!["F", "F"],
        },
    ]
}

pub fn tensor_targets() -> Vec<(&'static str, TensorCategory)> {
    let mk = |text: &str, name: &str| {
        let e = env(text);
        e.tcats[name].clone()
    };
    vec![
        ("trivial", mk(T_INITIAL, "I")),
        ("discrete Z2", mk(T_Z2, "Z2")),
        ("idempotent with endo", mk(T_IDEM_ARROW, "EP")),
    ]
}

pub fn verify_tensor_instance(
    inst: &TensorInstance,
    e: &Env,
    t: &TensorCategory,
    limit: usize,
) -> Result<UPReport> {
    match inst.kind {
        "coproduct" => {
            let a = &e.tcats[inst.args[0]];
            let b = &e.tcats[inst.args[1]];
            let c = coproduct_tensor(a, b)?;
            verify_coproduct_tensor(a, b, &c, t, limit)
        }
        "coinserter" => {
            let f = &e.tfunctors[inst.args[0]];
            let g = &e.tfunctors[inst.args[1]];
            let (a, b) = (&e.tcats[&f.src], &e.tcats[&f.tgt]);
            let c = coinserter_tensor(a, b, &f.functor, &g.functor)?;
            verify_coinserter_tensor(a, b, &f.functor, &g.functor, &c, t, limit)
        }
        "coequalizer" => {
            let f = &e.tfunctors[inst.args[0]];
            let g = &e.tfunctors[inst.args[1]];
            let (a, b) = (&e.tcats[&f.src], &e.tcats[&f.tgt]);
            let c = coequalizer_tensor(a, b, &f.functor, &g.functor)?;
            verify_coequalizer_tensor(a, b, &f.functor, &g.functor, &c, t, limit)
        }
        "pushout" => {
            let f = &e.tfunctors[inst.args[0]];
            let g = &e.tfunctors[inst.args[1]];
            let (c0, a, b) = (&e.tcats[&f.src], &e.tcats[&f.tgt], &e.tcats[&g.tgt]);
            let c = pushout_tensor(c0, a, b, &f.functor, &g.functor)?;
            verify_pushout_tensor(c0, a, b, &f.functor, &g.functor, &c, t, limit)
        }
        other => panic!("unknown tensor instance kind {other}"),
    }
}

pub fn verify_tensor_instance_staged(
    inst: &TensorInstance,
    e: &Env,
    t: &TensorCategory,
    limit: usize,
) -> Result<Option<UPReport>> {
    if inst.kind != "coequalizer" {
        return Ok(None);
    }
    let f = &e.tfunctors[inst.args[0]];
    let g = &e.tfunctors[inst.args[1]];
    let (a, b) = (&e.tcats[&f.src], &e.tcats[&f.tgt]);
    let c = coequalizer_tensor_staged(a, b, &f.functor, &g.functor)?;
    verify_coequalizer_tensor(a, b, &f.functor, &g.functor, &c, t, limit).map(Some)
}
