mod common;

use proptest::prelude::*;

use bicolim::cat::fpcat::{Backend, Bounds, FpCategory, Tri};
use bicolim::cat::quiver::{PathTerm, Quiver};
use bicolim::colimit::coproduct_cat;
use bicolim::dsl::resolve::category_block;
use bicolim::dsl::{parse, resolve};
use bicolim::dsl::ast::{Block, Document};
use bicolim::verify::{monoid_product, CommMonoid};

/// Builds a small category from generator seeds: object count, arrow
/// endpoints, and relation seeds that drive two random walks from a shared
/// source.
fn build(
    n_obj: usize,
    arrows: &[(u8, u8)],
    rels: &[(u8, Vec<u8>, Vec<u8>)],
) -> FpCategory {
    let mut q = Quiver::new(Vec::new(), Vec::new()).unwrap();
    for i in 0..n_obj {
        q.add_object(format!("X{i}")).unwrap();
    }
    for (k, (s, t)) in arrows.iter().enumerate() {
        let s = q.object_ids().nth(*s as usize % n_obj).unwrap();
        let t = q.object_ids().nth(*t as usize % n_obj).unwrap();
        q.add_arrow(format!("a{k}"), s, t).unwrap();
    }
    let walk = |q: &Quiver, start: u8, steps: &[u8]| -> PathTerm {
        let o = q.object_ids().nth(start as usize % n_obj).unwrap();
        let mut p = PathTerm::identity(o);
        for &s in steps {
            let out: Vec<_> = q.arrows_from(p.tgt).collect();
            if out.is_empty() {
                break;
            }
            let a = out[s as usize % out.len()];
            p = p.then(&PathTerm::single(q, a)).unwrap();
        }
        p
    };
    let mut relations = Vec::new();
    for (start, ls, rs) in rels {
        let l = walk(&q, *start, ls);
        let r = walk(&q, *start, rs);
        if l.tgt == r.tgt {
            relations.push((l, r));
        }
    }
    FpCategory::new(q, relations, Backend::Rewrite(Bounds::default())).unwrap()
}

fn seeds() -> impl Strategy<Value = (usize, Vec<(u8, u8)>, Vec<(u8, Vec<u8>, Vec<u8>)>)> {
    (
        1usize..=3,
        prop::collection::vec((any::<u8>(), any::<u8>()), 1..=4),
        prop::collection::vec(
            (
                any::<u8>(),
                prop::collection::vec(any::<u8>(), 0..=3),
                prop::collection::vec(any::<u8>(), 0..=3),
            ),
            0..=2,
        ),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normalize_is_idempotent_and_sound((n, arrows, rels) in seeds(), s in any::<u8>(), steps in prop::collection::vec(any::<u8>(), 0..=4)) {
        let c = build(n, &arrows, &rels);
        let o = c.quiver.object_ids().nth(s as usize % n).unwrap();
        let mut p = PathTerm::identity(o);
        for &k in &steps {
            let out: Vec<_> = c.quiver.arrows_from(p.tgt).collect();
            if out.is_empty() { break; }
            let a = out[k as usize % out.len()];
            p = p.then(&PathTerm::single(&c.quiver, a)).unwrap();
        }
        let np = c.normalize(&p);
        prop_assert_eq!(
            format!("{}", c.normalize(&np).display(&c.quiver)),
            format!("{}", np.display(&c.quiver))
        );
        prop_assert_ne!(c.morphisms_equal(&p, &np).unwrap(), Tri::Distinct);
        prop_assert_eq!(c.morphisms_equal(&p, &p).unwrap(), Tri::Equal);
    }

    #[test]
    fn dsl_round_trip_is_stable((n, arrows, rels) in seeds()) {
        let c = build(n, &arrows, &rels);
        let doc = Document { blocks: vec![Block::Category(category_block("C", &c))] };
        let text = doc.to_string();
        let parsed = parse(&text).unwrap();
        prop_assert_eq!(parsed.to_string(), text.clone());
        let env = resolve(&parsed, Bounds::default()).unwrap();
        let doc2 = Document {
            blocks: vec![Block::Category(category_block("C", &env.cats["C"]))],
        };
        prop_assert_eq!(doc2.to_string(), text);
    }

    #[test]
    fn coproduct_components_add_up((n, arrows, rels) in seeds(), (m, arrows2, rels2) in seeds()) {
        let a = build(n, &arrows, &rels);
        let b = build(m, &arrows2, &rels2);
        let c = coproduct_cat(&a, &b).unwrap();
        prop_assert_eq!(c.category.pi0().len(), a.pi0().len() + b.pi0().len());
    }

    #[test]
    fn monoid_product_commutes_up_to_iso(p in 1usize..=4, q in 1usize..=4) {
        let a = CommMonoid::cyclic(p);
        let b = CommMonoid::cyclic(q);
        prop_assert!(monoid_product(&a, &b).is_isomorphic(&monoid_product(&b, &a)));
    }
}
