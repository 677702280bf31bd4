use super::*;
use crate::field::F1009;
use crate::homological::tau_minus;
use crate::modrep::{is_isomorphic, projective_module, simple_module, DEFAULT_SEED};
use crate::standard::{cyclic_nakayama, interval_module, linear_a, linear_a_indecomposables};

type K = F1009;

fn shape(q: &Quiver) -> Vec<(usize, usize)> {
    let mut s: Vec<_> = q.arrows().iter().map(|a| (a.source, a.target)).collect();
    s.sort();
    s
}

#[test]
fn end_of_one_projective_is_the_field() {
    let a = linear_a::<K>(4).unwrap();
    for i in 0..4 {
        let p = end_algebra(&[projective_module(&a, i)], DEFAULT_SEED).unwrap();
        assert_eq!(p.dim(), 1);
        assert_eq!(p.quiver().arrows().len(), 0);
    }
    // Repeated summands are collapsed.
    let p = end_algebra(&[projective_module(&a, 2), projective_module(&a, 2)], DEFAULT_SEED).unwrap();
    assert_eq!(p.summands().len(), 1);
}

#[test]
fn end_of_lambda_is_lambda() {
    let a = linear_a::<K>(4).unwrap();
    let lam: Vec<_> = (0..4).map(|i| projective_module(&a, i)).collect();
    let p = end_algebra(&lam, DEFAULT_SEED).unwrap();
    assert_eq!(p.dim(), 10);
    assert_eq!(shape(p.quiver()), shape(a.quiver()));
    assert!(p.algebra().relations().is_empty());
    assert_eq!(p.cartan(), algebra_cartan(&a));
    // Hom(Λ, x) recovers x.
    for x in linear_a_indecomposables(&a).unwrap() {
        let fx = hom_functor(&p, &x).unwrap();
        assert_eq!(fx.dims(), x.dims());
    }
    let ff = fully_faithful_check(&p, &linear_a_indecomposables(&a).unwrap()).unwrap();
    assert!(ff.pass());
    assert_eq!(ff.entries.len(), 100);
}

#[test]
fn semisimple_end_has_no_arrows() {
    let a = linear_a::<K>(4).unwrap();
    let s: Vec<_> = (0..3).map(|i| simple_module(&a, i)).collect();
    let p = end_algebra(&s, DEFAULT_SEED).unwrap();
    assert_eq!(p.dim(), 3);
    assert!(p.quiver().arrows().is_empty());
}

#[test]
fn generator_of_a4_gives_the_displayed_quiver() {
    let a = linear_a::<K>(4).unwrap();
    let mut g: Vec<_> = (0..4).map(|i| projective_module(&a, i)).collect();
    g.push(interval_module(&a, 2, 2).unwrap());
    let p = end_algebra(&g, DEFAULT_SEED).unwrap();
    assert_eq!(p.summands().len(), 5);
    // 1 <- 2 <- 3 <- 4 and 5 -> 3, with the path 5 -> 3 -> 2 zero.
    let want = Quiver::from_triples(5, &[("b", 1, 0), ("c", 2, 1), ("d", 3, 2), ("e", 4, 2)]).unwrap();
    assert_eq!(shape(p.quiver()), shape(&want));
    assert_eq!(p.algebra().relations().len(), 1);
    assert!(p.algebra().relations()[0].is_monomial());
    // End(Λ), Hom(P2, S2) and End(S2).
    assert_eq!(p.dim(), 10 + 1 + 1);
    assert!(p.algebra().check_associativity());
}

fn reference_nakayama_gamma() -> Arc<BasedAlgebra<K>> {
    // Vertices 1..4 of the display become 0..3.
    let q = Quiver::from_triples(
        4,
        &[("delta", 0, 2), ("epsilon", 1, 0), ("alpha", 1, 3), ("beta", 3, 1), ("gamma", 2, 1)],
    )
    .unwrap();
    let rels = ["beta*alpha", "gamma*alpha", "delta*gamma*epsilon", "beta*epsilon", "alpha*beta - epsilon*delta*gamma"]
        .iter()
        .map(|s| Relation::parse(&q, s).unwrap())
        .collect();
    build_based_algebra(q, rels).unwrap()
}

#[test]
fn stable_end_over_nakayama() {
    let n = cyclic_nakayama::<K>(3, 4).unwrap();
    let s = simple_module(&n, 0);
    let c = SubcatSpec::new(&[s.clone()], DEFAULT_SEED).unwrap();
    let mut m: Vec<_> = (0..3).map(|i| projective_module(&n, i)).collect();
    m.push(tau_minus(&s));
    let p = stable_end_algebra(&m, &c, DEFAULT_SEED).unwrap();
    assert_eq!(p.summands().len(), 4);
    assert_eq!(p.quiver().arrows().len(), 5);
    let expected = reference_nakayama_gamma();
    let sigma = quiver_isomorphism(p.quiver(), expected.quiver()).expect("same quiver up to relabelling");
    assert!(cartan_matches(&p.cartan(), &algebra_cartan(&expected), &sigma));
    assert_eq!(p.dim(), expected.dim());
    assert!(p.algebra().check_associativity());
}

#[test]
fn hom_functor_maps_compose() {
    let a = linear_a::<K>(4).unwrap();
    let mut g: Vec<_> = (0..4).map(|i| projective_module(&a, i)).collect();
    g.push(interval_module(&a, 2, 2).unwrap());
    let p = end_algebra(&g, DEFAULT_SEED).unwrap();
    let all = linear_a_indecomposables(&a).unwrap();
    let images: Vec<_> = all.iter().map(|x| hom_functor(&p, x).unwrap()).collect();
    for (i, x) in all.iter().enumerate() {
        let expect: Vec<usize> = g.iter().map(|gk| hom_space(gk, x).unwrap().dim()).collect();
        assert_eq!(images[i].dims(), expect.as_slice());
        for (j, y) in all.iter().enumerate() {
            if i < j {
                assert!(!is_isomorphic(&images[i], &images[j], DEFAULT_SEED).unwrap());
            }
            let h = hom_space(x, y).unwrap();
            for f in h.basis() {
                let ff = hom_functor_map(&p, f, &images[i], &images[j]).unwrap();
                assert!(ff.validate().is_ok());
            }
        }
    }
    let id = ModuleMap::identity(&all[3]);
    let fid = hom_functor_map(&p, &id, &images[3], &images[3]).unwrap();
    assert!(fid.is_iso());
}

#[test]
fn quiver_isomorphism_search() {
    let a = Quiver::from_triples(3, &[("x", 0, 1), ("y", 1, 2)]).unwrap();
    let b = Quiver::from_triples(3, &[("u", 2, 0), ("v", 1, 2)]).unwrap();
    assert_eq!(quiver_isomorphism(&a, &b), Some(vec![1, 2, 0]));
    let c = Quiver::from_triples(3, &[("u", 0, 1), ("v", 2, 1)]).unwrap();
    assert_eq!(quiver_isomorphism(&a, &c), None);
}
