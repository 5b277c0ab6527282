//! Laws checked on seeded random instances from the corpus generators.

use std::sync::Arc;

use enrichkit::corpus;
use enrichkit_core::category::{Category, Finite};
use enrichkit_core::enriched::{opposite_mcat, SetEnriched};
use enrichkit_core::fincat::{enumerate_functors, validate_fincat};
use enrichkit_core::finset::FinSets;
use enrichkit_core::mfunctor::{audit_mfun_et, compose_mfun_mor, enumerate_mfun_et, identity_mfun_mor, mfun_category};
use enrichkit_core::monoidal::opposite_monoidal;
use enrichkit_core::presheaf::{
    audit_presheaf, enumerate_presheaves, op_functor_to_presheaf, presheaf_to_op_functor, tensor_presheaf, Presheaves,
};
use enrichkit_core::tensored::{find_isomorphism, hom_object, is_universal, naturality_failures, representing_pairs, LTensored};
use enrichkit_core::wcolim::{check_universal, sample_weights, Ext};
use enrichkit_core::Limits;
use proptest::prelude::*;

fn small() -> Limits {
    Limits {
        max_candidates: 200_000,
        max_morphisms: 512,
        ..Limits::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_categories_round_trip(seed in any::<u64>()) {
        let c = corpus::random_set_category(&mut corpus::rng(seed));
        let again = validate_fincat(&c.to_raw()).unwrap();
        prop_assert_eq!(again, c);
    }

    #[test]
    fn functors_compose(seed in any::<u64>()) {
        let mut rng = corpus::rng(seed);
        let (c, d, e) = (corpus::random_set_category(&mut rng), corpus::random_set_category(&mut rng), corpus::random_set_category(&mut rng));
        let lim = small();
        let (Ok(cd), Ok(de), Ok(ce)) = (enumerate_functors(&c, &d, &lim), enumerate_functors(&d, &e, &lim), enumerate_functors(&c, &e, &lim)) else {
            return Ok(());
        };
        for f in &cd {
            for g in &de {
                let gf = g.after(f);
                prop_assert!(gf.check(&c, &e).is_ok());
                prop_assert!(ce.contains(&gf));
            }
        }
    }

    #[test]
    fn random_bases_are_valid_and_opposite_is_an_involution(seed in any::<u64>()) {
        let m = corpus::random_base(&mut corpus::rng(seed));
        prop_assert!(m.audit().is_empty());
        let op = opposite_monoidal(&m);
        prop_assert!(op.audit().is_empty());
        prop_assert_eq!(opposite_monoidal(&op), m);
    }

    #[test]
    fn random_enriched_categories_are_valid_and_opposite_is_an_involution(seed in any::<u64>()) {
        let mut rng = corpus::rng(seed);
        let base = Arc::new(corpus::random_base(&mut rng));
        let a = corpus::random_mcat(&mut rng, base, 4);
        prop_assert!(a.audit().is_empty());
        let op = opposite_mcat(&a);
        prop_assert!(op.audit().is_empty());
        prop_assert_eq!(opposite_mcat(&op).raw(), a.raw());
    }

    #[test]
    fn hom_objects_are_universal_and_unique(seed in any::<u64>()) {
        let base = Arc::new(corpus::random_base(&mut corpus::rng(seed)));
        let b = LTensored::regular(base.clone());
        for x in b.objects() {
            for y in b.objects() {
                if let Some((h, u)) = hom_object(&b, &x, &y) {
                    prop_assert!(is_universal(&b, &x, &y, &h, &u));
                    prop_assert!(naturality_failures(&b, &x, &h, &u).is_empty());
                }
                let found = representing_pairs(&b, &x, &y);
                for (h, _) in &found {
                    for (h2, _) in &found {
                        prop_assert!(find_isomorphism(base.as_ref(), h, h2).is_some());
                    }
                }
            }
        }
    }

    #[test]
    fn functor_categories_are_categories(seed in any::<u64>()) {
        let a = corpus::random_pair(&mut corpus::rng(seed));
        let b = LTensored::regular(a.base_arc().clone());
        let lim = small();
        let Ok(functors) = enumerate_mfun_et(&a, &b, true, &lim) else { return Ok(()) };
        for f in &functors {
            prop_assert!(audit_mfun_et(&a, &b, f).is_empty());
        }
        let Ok(fc) = mfun_category(&a, &b, functors.clone(), &lim) else { return Ok(()) };
        prop_assert!(validate_fincat(&fc.category.to_raw()).is_ok());
        for (i, j, s) in &fc.morphisms {
            let (id_i, id_j) = (identity_mfun_mor(&b, &functors[*i].ob_map), identity_mfun_mor(&b, &functors[*j].ob_map));
            prop_assert_eq!(&compose_mfun_mor(&b, s, &id_i), s);
            prop_assert_eq!(&compose_mfun_mor(&b, &id_j, s), s);
            for (j2, k, t) in fc.morphisms.iter().filter(|m| m.0 == *j) {
                prop_assert_eq!(j2, j);
                for (_, _, u) in fc.morphisms.iter().filter(|m| m.0 == *k) {
                    let left = compose_mfun_mor(&b, u, &compose_mfun_mor(&b, t, s));
                    let right = compose_mfun_mor(&b, &compose_mfun_mor(&b, u, t), s);
                    prop_assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn presheaves_are_closed_under_tensoring(seed in any::<u64>()) {
        let a = corpus::random_pair(&mut corpus::rng(seed));
        let Ok(pc) = enumerate_presheaves(&a, &small()) else { return Ok(()) };
        let base = a.base();
        let op = opposite_mcat(&a);
        let module = LTensored::regular(op.base_arc().clone());
        for p in &pc.presheaves {
            prop_assert!(audit_presheaf(&a, p).is_empty());
            for m in base.objects() {
                prop_assert!(pc.index_of(&tensor_presheaf(base, &m, p)).is_some());
            }
            let f = presheaf_to_op_functor(p);
            prop_assert!(audit_mfun_et(&op, &module, &f).is_empty());
            prop_assert_eq!(&op_functor_to_presheaf(&f), p);
        }
    }

    #[test]
    fn colimit_legs_cover_the_apex(seed in any::<u64>()) {
        let mut rng = corpus::rng(seed);
        let a = SetEnriched::new(corpus::random_set_category(&mut rng));
        let f = corpus::random_diagram(&mut rng, &a, 3);
        let w = corpus::random_weight(&mut rng, &a, 3);
        let ext = Ext::new(&a, &FinSets, f.clone(), Limits::default());
        let wc = ext.apply(&w).unwrap();
        let u = check_universal(&a, &FinSets, &w, &f, &wc, &[]);
        prop_assert!(u.jointly_surjective);
        prop_assert!(u.failures.is_empty(), "{:?}", u.failures);
    }

    #[test]
    fn ext_is_functorial_in_the_weight(seed in any::<u64>()) {
        let mut rng = corpus::rng(seed);
        let a = SetEnriched::new(corpus::random_set_category(&mut rng));
        let f = corpus::random_diagram(&mut rng, &a, 3);
        let w = corpus::random_weight(&mut rng, &a, 3);
        let p = Presheaves::new(&a);
        let ext = Ext::new(&a, &FinSets, f, Limits::default());
        let id = p.identity(&w);
        let apex = ext.apply(&w).unwrap().cocone.apex;
        prop_assert_eq!(ext.apply_mor(&id).unwrap(), FinSets.identity(&apex));
        let (_, maps, _, _) = sample_weights(&a, std::slice::from_ref(&w));
        for g in &maps {
            for h in maps.iter().filter(|h| p.cod(h) == p.dom(g)) {
                let whole = ext.apply_mor(&p.then(g, h)).unwrap();
                let parts = FinSets.then(&ext.apply_mor(g).unwrap(), &ext.apply_mor(h).unwrap());
                prop_assert_eq!(whole, parts);
            }
        }
    }
}
