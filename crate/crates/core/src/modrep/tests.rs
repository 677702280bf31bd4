use super::*;
use crate::field::{Fp, F1009, F2};
use crate::standard::{cyclic_nakayama, interval_module, linear_a, linear_a_indecomposables};

type K = F1009;

#[test]
fn yoneda_dimensions() {
    let a = linear_a::<K>(4).unwrap();
    for m in linear_a_indecomposables(&a).unwrap() {
        for i in 0..4 {
            let p = projective_module(&a, i);
            assert_eq!(hom_space(&p, &m).unwrap().dim(), m.dim_at(i));
        }
    }
}

#[test]
fn simples_are_orthogonal_bricks() {
    let a = linear_a::<K>(4).unwrap();
    for i in 0..4 {
        for j in 0..4 {
            let d = hom_space(&simple_module(&a, i), &simple_module(&a, j)).unwrap().dim();
            assert_eq!(d, usize::from(i == j));
        }
    }
}

/// Counts all vertex-wise linear maps commuting with the arrows by brute force.
fn brute_force_hom_count(m: &ModuleRep<F2>, n: &ModuleRep<F2>) -> usize {
    let cells: usize = (0..m.dims().len()).map(|v| m.dim_at(v) * n.dim_at(v)).sum();
    let mut count = 0;
    for mask in 0u64..(1 << cells) {
        let bits: Vec<F2> = (0..cells).map(|k| Fp::new(((mask >> k) & 1) as i64)).collect();
        if ModuleMap::from_flat(m, n, &bits).validate().is_ok() {
            count += 1;
        }
    }
    count
}

#[test]
fn hom_matches_exhaustive_count_over_f2() {
    let a = linear_a::<F2>(4).unwrap();
    let x = interval_module(&a, 0, 1).unwrap();
    let y = interval_module(&a, 1, 2).unwrap();
    for (m, n) in [(&x, &y), (&y, &x), (&x, &x)] {
        let d = hom_space(m, n).unwrap().dim();
        assert_eq!(brute_force_hom_count(m, n), 1 << d);
    }
    let all = linear_a_indecomposables(&a).unwrap();
    for m in &all {
        for n in &all {
            let d = hom_space(m, n).unwrap().dim();
            assert_eq!(brute_force_hom_count(m, n), 1 << d, "{m:?} {n:?}");
        }
    }
}

#[test]
fn kernels_images_cokernels() {
    let a = linear_a::<K>(4).unwrap();
    let p0 = projective_module(&a, 0);
    let p1 = projective_module(&a, 1);
    let f = hom_space(&p0, &p1).unwrap().basis()[0].clone();
    assert!(f.is_injective());
    let (c, proj) = cokernel(&f);
    assert_eq!(c.dims(), &[0, 1, 0, 0]);
    c.validate().unwrap();
    assert!(proj.is_surjective());
    let (k, _) = kernel(&ModuleMap::identity(&p1));
    assert!(k.is_zero());
    let (k, _) = kernel(&ModuleMap::zero(&p1, &p0));
    assert_eq!(k.dims(), p1.dims());
    for m in linear_a_indecomposables(&a).unwrap() {
        for n in linear_a_indecomposables(&a).unwrap() {
            for g in hom_space(&m, &n).unwrap().basis() {
                let (k, _) = kernel(g);
                let (im, onto, incl) = image(g);
                im.validate().unwrap();
                assert_eq!(onto.then(&incl).flatten(), g.flatten());
                for v in 0..4 {
                    assert_eq!(m.dim_at(v), k.dim_at(v) + im.dim_at(v));
                }
            }
        }
    }
}

#[test]
fn projectives_injectives_socles() {
    let a = linear_a::<K>(4).unwrap();
    for i in 0..4 {
        assert_eq!(projective_module(&a, i).total_dim(), i + 1);
        assert_eq!(injective_module(&a, i).total_dim(), 4 - i);
        let (t, _) = top(&projective_module(&a, i));
        assert_eq!(t.dims(), simple_module(&a, i).dims());
        let (r, _) = radical(&simple_module(&a, i));
        assert!(r.is_zero());
    }
    let (s, _) = socle(&projective_module(&a, 3));
    assert_eq!(s.dims(), &[1, 0, 0, 0]);
    let n = cyclic_nakayama::<K>(3, 4).unwrap();
    for i in 0..3 {
        let p = projective_module(&n, i);
        p.validate().unwrap();
        assert_eq!(p.total_dim(), 4);
    }
}

#[test]
fn covers_and_envelopes() {
    let a = linear_a::<K>(4).unwrap();
    let (ps, p) = projective_cover(&simple_module(&a, 1));
    assert_eq!(ps.vertices, vec![1]);
    let (k, _) = kernel(&p);
    assert!(is_isomorphic(&k, &projective_module(&a, 0), DEFAULT_SEED).unwrap());
    let (i, e, verts) = injective_envelope(&simple_module(&a, 0));
    assert_eq!(verts, vec![0]);
    assert_eq!(i.total_dim(), 4);
    assert!(e.is_injective());
    e.validate().unwrap();
    for m in linear_a_indecomposables(&a).unwrap() {
        let (ps, p) = projective_cover(&m);
        p.validate().unwrap();
        assert!(p.is_surjective());
        assert_eq!(ps.vertices.len(), top(&m).0.total_dim());
        let (i, e, _) = injective_envelope(&m);
        i.validate().unwrap();
        e.validate().unwrap();
        assert!(e.is_injective());
    }
}

#[test]
fn duality_swaps_projectives_and_injectives() {
    let a = linear_a::<K>(4).unwrap();
    let op = a.opposite();
    for i in 0..4 {
        let ds = dualize(&simple_module(&a, i));
        assert!(Arc::ptr_eq(ds.algebra(), &op));
        assert!(is_isomorphic(&ds, &simple_module(&op, i), DEFAULT_SEED).unwrap());
        let dp = dualize(&projective_module(&a, i));
        dp.validate().unwrap();
        let iop = injective_module(&op, i);
        assert!(is_isomorphic(&dp, &iop, DEFAULT_SEED).unwrap());
        assert_eq!(socle(&dp).0.dims(), top(&projective_module(&a, i)).0.dims());
        let back = dualize(&dp);
        assert!(Arc::ptr_eq(back.algebra(), &a));
        assert!(back.same_data(&projective_module(&a, i)));
    }
}

#[test]
fn decomposition_examples() {
    let a = linear_a::<K>(4).unwrap();
    let p0 = projective_module(&a, 0);
    let s = direct_sum(&a, &[p0.clone(), p0.clone()]);
    let d = decompose(&s.module, DEFAULT_SEED).unwrap();
    assert_eq!(d.summands.len(), 1);
    assert_eq!(d.summands[0].1, 2);
    let lam = projective_sum(&a, &[0, 1, 2, 3]).module;
    let d = decompose(&lam, DEFAULT_SEED).unwrap();
    assert_eq!(d.summands.len(), 4);
    assert!(d.summands.iter().all(|(_, k)| *k == 1));
    for (x, _) in &d.summands {
        assert_eq!(x.end_dim(), 1);
    }
}

#[test]
fn decomposition_of_a_twisted_sum() {
    // Conjugate P1 ⊕ S1 ⊕ [1..2] by a random automorphism of each vertex space.
    let a = linear_a::<K>(4).unwrap();
    let parts = [
        projective_module(&a, 1),
        simple_module(&a, 1),
        interval_module(&a, 1, 2).unwrap(),
        interval_module(&a, 1, 2).unwrap(),
    ];
    let s = direct_sum(&a, &parts).module;
    let n = a.vertex_count();
    let mut g = Vec::new();
    for v in 0..n {
        let d = s.dim_at(v);
        let mut m = Mat::<K>::identity(d);
        for i in 0..d {
            for j in 0..d {
                if i < j {
                    m[(i, j)] = K::from_i64((3 * i + 5 * j + v) as i64 % 7);
                }
            }
        }
        let mut lower = Mat::<K>::identity(d);
        for i in 0..d {
            for j in 0..i {
                lower[(i, j)] = K::from_i64((i + 2 * j + 1) as i64);
            }
        }
        g.push(&lower * &m);
    }
    let maps = a
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, ar)| &(&g[ar.target] * s.map(k)) * &g[ar.source].inverse().unwrap())
        .collect();
    let t = ModuleRep::new(a.clone(), s.dims().to_vec(), maps).unwrap();
    assert!(is_isomorphic(&s, &t, DEFAULT_SEED).unwrap());
    let d = decompose(&t, DEFAULT_SEED).unwrap();
    assert_eq!(d.total_count(), 4);
    assert_eq!(d.summands.len(), 3);
}

#[test]
fn non_isomorphic_with_equal_dimensions() {
    let a = linear_a::<K>(3).unwrap();
    let x = direct_sum(&a, &[interval_module(&a, 0, 1).unwrap(), simple_module(&a, 2)]).module;
    let y = direct_sum(&a, &[interval_module(&a, 1, 2).unwrap(), simple_module(&a, 0)]).module;
    assert_eq!(x.dims(), y.dims());
    assert!(!is_isomorphic(&x, &y, DEFAULT_SEED).unwrap());
}

#[test]
fn approximations_by_simples() {
    let a = linear_a::<K>(4).unwrap();
    let c = AddCategory::new(&[simple_module(&a, 0)], DEFAULT_SEED).unwrap();
    let p1 = projective_module(&a, 1);
    let r = c.right_approximation(&p1).unwrap();
    assert_eq!(r.sum.dims(), &[1, 0, 0, 0]);
    assert!(r.map.is_injective());
    let l = c.left_approximation(&p1).unwrap();
    assert!(l.sum.is_zero());
}

#[test]
fn submodule_enumeration_over_f2() {
    let a = linear_a::<F2>(4).unwrap();
    // P3 is uniserial of length 4, so it has exactly 5 submodules.
    assert_eq!(enumerate_submodules(&projective_module(&a, 3), 10_000).unwrap().len(), 5);
    // S0 ⊕ S0 has 2 + 3 = 5 submodules over F2 (0, three lines, everything).
    let s = direct_sum(&a, &[simple_module(&a, 0), simple_module(&a, 0)]).module;
    assert_eq!(enumerate_submodules(&s, 10_000).unwrap().len(), 5);
}
