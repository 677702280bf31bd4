use super::*;
use crate::field::{F1009, F2};
use crate::modrep::{simple_module, DEFAULT_SEED};
use crate::relexact::fixture_sequences;
use crate::standard::{cyclic_nakayama, linear_a, linear_a_indecomposables};

type K = F1009;

#[test]
fn injective_dimensions() {
    let a = linear_a::<K>(4).unwrap();
    for i in dual_lambda(&a) {
        assert_eq!(injective_dimension(&i, 4), Some(0));
    }
    for m in linear_a_indecomposables(&a).unwrap() {
        assert!(injective_dimension(&m, 4).unwrap() <= 1);
    }
    let n = cyclic_nakayama::<K>(3, 4).unwrap();
    assert_eq!(injective_dimension(&simple_module(&n, 0), 6), None);
}

#[test]
fn self_orthogonality() {
    let a = linear_a::<K>(4).unwrap();
    let lam = crate::modrep::direct_sum(&a, &lambda_modules(&a)).module;
    assert!(is_self_orthogonal(&lam, 3).unwrap().pass);
    let dl = crate::modrep::direct_sum(&a, &dual_lambda(&a)).module;
    assert!(is_self_orthogonal(&dl, 3).unwrap().pass);
    let s = crate::modrep::direct_sum(&a, &[simple_module(&a, 0), simple_module(&a, 1)]).module;
    let so = is_self_orthogonal(&s, 3).unwrap();
    assert!(!so.pass);
    assert_eq!(so.dims, vec![1, 0, 0]);
}

#[test]
fn finite_resolutions() {
    let a = linear_a::<K>(4).unwrap();
    let all = linear_a_indecomposables(&a).unwrap();
    let dl = dual_lambda(&a);
    let c = hat_membership(&dl[1], &dl, 3, DEFAULT_SEED).unwrap();
    assert_eq!(c.length(), 0);
    // Right approximations by injectives need not be onto.
    assert!(matches!(hat_membership(&simple_module(&a, 0), &dl, 3, DEFAULT_SEED), Err(Error::NotSurjective(0))));
    for m in &all {
        let c = cohat_membership(m, &dl, 4, DEFAULT_SEED).unwrap();
        assert!(c.verify());
        assert_eq!(Some(c.length()), injective_dimension(m, 4));
        let lam = lambda_modules(&a);
        let h = hat_membership(m, &lam, 4, DEFAULT_SEED).unwrap();
        assert!(h.verify());
        assert_eq!(Some(h.length()), crate::homological::min_proj_resolution(m, 4).length());
    }
    assert!(matches!(hat_membership(&simple_module(&a, 1), &lambda_modules(&a), 0, DEFAULT_SEED), Err(Error::DepthExceeded(0))));
}

#[test]
fn cotilting_examples() {
    let a = linear_a::<K>(4).unwrap();
    let dl = crate::modrep::direct_sum(&a, &dual_lambda(&a)).module;
    let r = is_cotilting(&dl, 0, 2, DEFAULT_SEED).unwrap();
    assert!(r.pass(), "{r}");
    let lam = crate::modrep::direct_sum(&a, &lambda_modules(&a)).module;
    assert!(!is_cotilting(&lam, 0, 2, DEFAULT_SEED).unwrap().pass());
    assert!(is_cotilting(&lam, 1, 2, DEFAULT_SEED).unwrap().pass());
    let n = cyclic_nakayama::<K>(3, 4).unwrap();
    let lam = crate::modrep::direct_sum(&n, &lambda_modules(&n)).module;
    assert!(is_cotilting(&lam, 0, 3, DEFAULT_SEED).unwrap().pass());
}

#[test]
fn perp_lists() {
    let a = linear_a::<K>(4).unwrap();
    let all = linear_a_indecomposables(&a).unwrap();
    let lam = crate::modrep::direct_sum(&a, &lambda_modules(&a)).module;
    let perp = perp_fixture_list(&all, &lam, 4).unwrap();
    assert_eq!(perp.len(), 4);
    for k in perp {
        assert!(crate::homological::tau(&all[k]).is_zero());
    }
    let dl = crate::modrep::direct_sum(&a, &dual_lambda(&a)).module;
    assert_eq!(perp_fixture_list(&all, &dl, 4).unwrap().len(), 10);
}

#[test]
fn gorenstein_projectives() {
    let a = linear_a::<K>(4).unwrap();
    let all = linear_a_indecomposables(&a).unwrap();
    let lam = lambda_modules(&a);
    let gp: Vec<_> = all.iter().filter(|m| xw_membership(m, &lam, 8, 2, DEFAULT_SEED).unwrap().verdict.is_member()).collect();
    assert_eq!(gp.len(), 4);
    let dl = dual_lambda(&a);
    for m in &all {
        assert!(matches!(xw_membership(m, &dl, 8, 2, DEFAULT_SEED).unwrap().verdict, XwVerdict::Finite(_)));
    }
    let n = cyclic_nakayama::<K>(3, 4).unwrap();
    let lam = lambda_modules(&n);
    for m in crate::homological::enumerate_indecomposables(&n, 50, DEFAULT_SEED).unwrap() {
        let v = xw_membership(&m, &lam, 8, 2, DEFAULT_SEED).unwrap().verdict;
        assert!(v.is_member(), "{m:?}: {v}");
        if !crate::homological::tau(&m).is_zero() {
            assert!(matches!(v, XwVerdict::Periodic { .. }));
        }
    }
}

#[test]
fn wakamatsu() {
    let a = linear_a::<K>(4).unwrap();
    assert_eq!(is_wakamatsu_tilting(&lambda_modules(&a), 8, 2, DEFAULT_SEED).unwrap().verdict(), Some(true));
    assert_eq!(is_wakamatsu_tilting(&dual_lambda(&a), 8, 2, DEFAULT_SEED).unwrap().verdict(), Some(true));
    assert_eq!(is_wakamatsu_tilting(&[simple_module(&a, 0)], 8, 2, DEFAULT_SEED).unwrap().verdict(), Some(false));
}

#[test]
fn torsionfree_classes() {
    let a = linear_a::<K>(4).unwrap();
    let all = linear_a_indecomposables(&a).unwrap();
    let seqs = fixture_sequences(&all, DEFAULT_SEED).unwrap();
    assert!(torsionfree_class_check(&all, &all, &seqs, DEFAULT_SEED).unwrap().pass());
    let r = torsionfree_class_check(&dual_lambda(&a), &all, &seqs, DEFAULT_SEED).unwrap();
    assert!(!r.submodule_closed);
    assert!(r.extension_closed);
    let b = linear_a::<F2>(4).unwrap();
    assert!(!submodule_closed_enumerated(&dual_lambda(&b), 10_000, DEFAULT_SEED).unwrap());
    assert!(submodule_closed_enumerated(&lambda_modules(&b), 10_000, DEFAULT_SEED).unwrap());
}
