use std::sync::Arc;

use super::*;
use crate::field::F1009;
use crate::modrep::{
    injective_module, is_isomorphic, projective_module, simple_module, DEFAULT_SEED,
};
use crate::standard::{cyclic_nakayama, interval_module, linear_a, linear_a_indecomposables, nakayama_uniserial};

type K = F1009;

/// Euler form of a quiver without relations, `dim Hom - dim Ext^1`.
fn euler(m: &ModuleRep<K>, n: &ModuleRep<K>) -> i64 {
    let q = m.algebra().quiver();
    let verts: i64 = (0..q.vertex_count()).map(|v| (m.dim_at(v) * n.dim_at(v)) as i64).sum();
    let arrows: i64 = q.arrows().iter().map(|a| (m.dim_at(a.source) * n.dim_at(a.target)) as i64).sum();
    verts - arrows
}

#[test]
fn projective_resolutions_over_a4() {
    let a = linear_a::<K>(4).unwrap();
    for i in 0..4 {
        let r = min_proj_resolution(&projective_module(&a, i), 4);
        assert_eq!(r.length(), Some(0));
    }
    for m in linear_a_indecomposables(&a).unwrap() {
        let r = min_proj_resolution(&m, 4);
        assert!(r.verify());
        assert!(r.length().unwrap() <= 1);
        let r = min_inj_resolution(&m, 4);
        assert!(r.verify());
        assert!(r.length().unwrap() <= 1);
    }
    assert_eq!(global_dimension(&a, 4), Some(1));
}

#[test]
fn ext_matches_euler_form_over_a4() {
    let a = linear_a::<K>(4).unwrap();
    let all = linear_a_indecomposables(&a).unwrap();
    for m in &all {
        for n in &all {
            let t = ext_table(m, n, 3).unwrap();
            assert_eq!(t.dims[0] as i64 - t.dims[1] as i64, euler(m, n), "{m:?} {n:?}");
            assert_eq!(t.dims[2], 0);
            assert_eq!(t.dims[3], 0);
            assert_eq!(ext_dim_dual(m, n, 1).unwrap(), t.dims[1]);
        }
    }
    for i in 0..3 {
        let e = ext_dim(&simple_module(&a, i + 1), &simple_module(&a, i), 1).unwrap();
        assert_eq!(e, 1);
        assert_eq!(ext_dim(&simple_module(&a, i), &simple_module(&a, i + 1), 1).unwrap(), 0);
    }
}

#[test]
fn ext_two_ways_over_nakayama() {
    let n = cyclic_nakayama::<K>(3, 4).unwrap();
    let mut mods = Vec::new();
    for top in 0..3 {
        for len in 1..=4 {
            mods.push(nakayama_uniserial(&n, top, len).unwrap());
        }
    }
    for m in mods.iter().step_by(2) {
        for x in mods.iter().skip(1).step_by(3) {
            for i in 1..=3 {
                assert_eq!(ext_dim(m, x, i).unwrap(), ext_dim_dual(m, x, i).unwrap(), "{m:?} {x:?} {i}");
            }
        }
    }
}

#[test]
fn self_injective_simple_has_infinite_injective_dimension() {
    let n = cyclic_nakayama::<K>(3, 4).unwrap();
    let r = min_inj_resolution(&simple_module(&n, 0), 8);
    assert!(!r.terminated);
    assert!(r.verify());
    assert!(matches!(ext_from_coresolution(&simple_module(&n, 0), &r, 20), Err(Error::DepthExceeded(_))));
}

#[test]
fn auslander_reiten_translate_over_a4() {
    let a = linear_a::<K>(4).unwrap();
    for i in 0..4 {
        assert!(tau(&projective_module(&a, i)).is_zero());
        assert!(tau_minus(&injective_module(&a, i)).is_zero());
    }
    // The translation quiver of a linearly oriented A_n shifts intervals by one.
    for lo in 1..4 {
        for hi in lo..4 {
            let m = interval_module(&a, lo, hi).unwrap();
            let t = tau(&m);
            assert!(Arc::ptr_eq(t.algebra(), &a));
            let expect = interval_module(&a, lo - 1, hi - 1).unwrap();
            assert!(is_isomorphic(&t, &expect, DEFAULT_SEED).unwrap(), "{m:?}");
            assert!(is_isomorphic(&tau_minus(&t), &m, DEFAULT_SEED).unwrap());
            let tt = transpose(&transpose(&m));
            assert!(is_isomorphic(&tt, &m, DEFAULT_SEED).unwrap());
        }
    }
    let t = tau(&simple_module(&a, 1));
    assert!(is_isomorphic(&t, &simple_module(&a, 0), DEFAULT_SEED).unwrap());
}

#[test]
fn translate_permutes_nakayama_non_projectives() {
    let n = cyclic_nakayama::<K>(3, 4).unwrap();
    let mut nonproj = Vec::new();
    for top in 0..3 {
        for len in 1..4 {
            nonproj.push(nakayama_uniserial(&n, top, len).unwrap());
        }
        assert!(tau(&projective_module(&n, top)).is_zero());
    }
    let mut hit = vec![false; nonproj.len()];
    for m in &nonproj {
        let t = tau(m);
        assert_eq!(t.total_dim(), m.total_dim());
        let j = nonproj
            .iter()
            .position(|x| is_isomorphic(x, &t, DEFAULT_SEED).unwrap())
            .expect("τ of a non-projective uniserial is uniserial");
        assert!(!hit[j]);
        hit[j] = true;
        assert!(is_isomorphic(&tau_minus(&t), m, DEFAULT_SEED).unwrap());
    }
}

#[test]
fn pushout_and_pullback() {
    let a = linear_a::<K>(4).unwrap();
    let s0 = simple_module(&a, 0);
    let p1 = projective_module(&a, 1);
    let s1 = simple_module(&a, 1);
    let f = hom_space(&s0, &p1).unwrap().basis()[0].clone();
    let (_, proj) = cokernel(&f);
    let proj = proj.retarget(&p1, &s1);
    let ses = ShortExactSeq::new(f, proj).unwrap();
    assert!(!ses.is_split());
    let i0 = injective_module(&a, 0);
    let g = hom_space(&s0, &i0).unwrap().basis()[0].clone();
    let po = pushout(&ses, &g).unwrap();
    assert_eq!(po.seq.middle().total_dim(), p1.total_dim() + i0.total_dim() - 1);
    // Pushing out along an injective kills the extension.
    assert!(po.seq.is_split());
    let same = pushout(&ses, &ModuleMap::identity(&s0)).unwrap();
    assert!(is_isomorphic(same.seq.middle(), &p1, DEFAULT_SEED).unwrap());
    assert!(!same.seq.is_split());
    let pb = pullback(&ses, &ModuleMap::zero(&s1, &s1)).unwrap();
    assert!(pb.seq.is_split());
    let back = pullback(&ses, &ModuleMap::identity(&s1)).unwrap();
    assert!(!back.seq.is_split());
}

#[test]
fn extension_basis_has_ext_dimension() {
    let a = linear_a::<K>(4).unwrap();
    let all = linear_a_indecomposables(&a).unwrap();
    for c in &all {
        for x in &all {
            let seqs = extension_basis(c, x).unwrap();
            assert_eq!(seqs.len(), ext_dim(c, x, 1).unwrap());
            for s in &seqs {
                s.validate().unwrap();
                assert!(!s.is_split());
            }
        }
    }
}

#[test]
fn lifting_and_extending() {
    let a = linear_a::<K>(4).unwrap();
    let p2 = projective_module(&a, 2);
    let s2 = simple_module(&a, 2);
    let m = interval_module(&a, 1, 2).unwrap();
    let f = hom_space(&m, &s2).unwrap().basis()[0].clone();
    let g = hom_space(&p2, &s2).unwrap().basis()[0].clone();
    let h = lift_through(&f, &g).unwrap().unwrap();
    assert_eq!(h.then(&f).flatten(), g.flatten());
    // S2 does not lift to a map into S1 -> ... : Hom(S2, P2) = 0.
    let inc = hom_space(&simple_module(&a, 0), &p2).unwrap().basis()[0].clone();
    assert!(lift_through(&inc, &ModuleMap::identity(&simple_module(&a, 0))).unwrap().is_some());
    assert!(extend_through(&f, &ModuleMap::identity(&m)).unwrap().is_none());
}

#[test]
fn ab_approximation_base_and_one_step() {
    let a = linear_a::<K>(4).unwrap();
    let all = linear_a_indecomposables(&a).unwrap();
    let inj: Vec<_> = (0..4).map(|i| injective_module(&a, i)).collect();
    let r = ab_approximation(&simple_module(&a, 0), &all, &inj, 4, DEFAULT_SEED).unwrap();
    assert_eq!(r.resolution_length, 0);
    assert!(r.right.left().is_zero());
    assert!(is_isomorphic(r.left.middle(), &inj[0], DEFAULT_SEED).unwrap());

    // X = W = add Λ: the X-resolution of S1 is P0 -> P1.
    let proj: Vec<_> = (0..4).map(|i| projective_module(&a, i)).collect();
    let s1 = simple_module(&a, 1);
    let r = ab_approximation(&s1, &proj, &proj, 4, DEFAULT_SEED).unwrap();
    assert_eq!(r.resolution_length, 1);
    assert!(is_isomorphic(r.right.middle(), &proj[1], DEFAULT_SEED).unwrap());
    assert!(is_isomorphic(r.right.left(), &proj[0], DEFAULT_SEED).unwrap());
    assert!(is_isomorphic(r.left.middle(), &s1, DEFAULT_SEED).unwrap());
    assert!(r.left.right().is_zero());
    assert!(matches!(
        ab_approximation(&s1, &proj, &proj, 0, DEFAULT_SEED),
        Err(Error::DepthExceeded(0))
    ));
}

#[test]
fn almost_split_sequences_over_a4() {
    let a = linear_a::<K>(4).unwrap();
    let s = almost_split_sequence(&simple_module(&a, 1), DEFAULT_SEED).unwrap();
    assert!(is_isomorphic(s.middle(), &projective_module(&a, 1), DEFAULT_SEED).unwrap());
    let m = interval_module(&a, 1, 2).unwrap();
    let s = almost_split_sequence(&m, DEFAULT_SEED).unwrap();
    assert!(!s.is_split());
    let expect = crate::modrep::direct_sum(
        &a,
        &[interval_module(&a, 0, 2).unwrap(), interval_module(&a, 1, 1).unwrap()],
    )
    .module;
    assert!(is_isomorphic(s.middle(), &expect, DEFAULT_SEED).unwrap());
    assert!(almost_split_sequence(&projective_module(&a, 2), DEFAULT_SEED).is_err());
}

#[test]
fn enumeration_finds_every_indecomposable() {
    let a = linear_a::<K>(4).unwrap();
    let found = enumerate_indecomposables(&a, 100, DEFAULT_SEED).unwrap();
    assert_eq!(found.len(), 10);
    for m in linear_a_indecomposables(&a).unwrap() {
        assert_eq!(found.iter().filter(|x| is_isomorphic(x, &m, DEFAULT_SEED).unwrap()).count(), 1);
    }
    let n = cyclic_nakayama::<K>(3, 4).unwrap();
    assert_eq!(enumerate_indecomposables(&n, 100, DEFAULT_SEED).unwrap().len(), 12);
    assert!(matches!(enumerate_indecomposables(&n, 5, DEFAULT_SEED), Err(Error::Budget(_))));
}
