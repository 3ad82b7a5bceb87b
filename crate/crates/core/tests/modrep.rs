use std::sync::Arc;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use specht_core::modrep::{
    jordan_profile, non_projective_points, nonzero_points, is_projective_by_rank, profile_of_nilpotent,
    specht_basis, sweep, u_alpha_matrix, EModule, ElementaryAbelianSubgroup, GaloisField, GfMatrix,
    Permutation,
};
use specht_core::{partitions, specht_dimension, Partition, Prime};

fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn random_permutation(n: usize, rng: &mut StdRng) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

#[test]
fn realized_dimension_matches_hook_formula() {
    for n in 0..=8 {
        for mu in partitions(n) {
            let expected = specht_dimension(&mu).to_u128().unwrap() as usize;
            for p in [2, 3, 5] {
                let r = specht_basis(&mu, prime(p), 1).unwrap();
                assert_eq!(r.dimension(), expected, "{mu} p={p}");
            }
        }
    }
}

#[test]
fn extension_fields_give_the_same_dimension() {
    let r = specht_basis(&part(&[3, 2, 1]), prime(2), 3).unwrap();
    assert_eq!(r.dimension(), 16);
    assert_eq!(r.field().order(), 8);
}

#[test]
fn action_composes_on_random_pairs() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for (mu, p) in [(part(&[3, 2, 1]), 3), (part(&[4, 2]), 2), (part(&[3, 1, 1]), 5)] {
        let r = specht_basis(&mu, prime(p), 1).unwrap();
        let n = mu.size();
        for _ in 0..100 {
            let g = random_permutation(n, &mut rng);
            let h = random_permutation(n, &mut rng);
            let lhs = r.action_matrix(&g.compose(&h));
            let rhs = r.action_matrix(&g).mul(&r.action_matrix(&h));
            assert_eq!(lhs, rhs, "{mu}: g={g} h={h}");
        }
    }
}

#[test]
fn sweeps_are_unipotent_and_jordan_consistent() {
    let cases = [
        (part(&[3, 2]), 2, "V1^2"),
        (part(&[4, 1]), 2, "V2"),
        (part(&[3, 3]), 3, "V1^2"),
        (part(&[4, 1, 1]), 3, "(1,2,3);(4,5,6)"),
        (part(&[5, 1]), 5, "V1"),
    ];
    for (mu, p, spec) in cases {
        let p = prime(p);
        let r = specht_basis(&mu, p, 1).unwrap();
        let e = ElementaryAbelianSubgroup::parse_spec(spec, p, mu.size()).unwrap();
        let module = EModule::restrict(&r, &e).unwrap();
        for alpha in nonzero_points(p.get() as usize, e.rank()) {
            let n = module.shifted_nilpotent(&alpha).unwrap();
            assert!(n.pow(p.get()).is_zero(), "{mu} {alpha:?}");
            let prof = profile_of_nilpotent(&n, p).unwrap();
            assert_eq!(prof.dimension(), r.dimension());
            assert_eq!(prof.is_projective(), is_projective_by_rank(&n, p));
            let u = u_alpha_matrix(&r, &e, &alpha).unwrap();
            assert_eq!(jordan_profile(&u, p).unwrap(), prof);
        }
    }
}

#[test]
fn direct_sum_points_are_the_union() {
    let p = prime(2);
    let e = ElementaryAbelianSubgroup::parse_spec("V1^2", p, 4).unwrap();
    let m = EModule::restrict(&specht_basis(&part(&[2, 2]), p, 1).unwrap(), &e).unwrap();
    let n = EModule::restrict(&specht_basis(&part(&[3, 1]), p, 1).unwrap(), &e).unwrap();
    let field = Arc::clone(m.field());
    let free = EModule::permutation(field, &ElementaryAbelianSubgroup::parse_spec("V1^2", p, 4).unwrap()).unwrap();
    for (a, b) in [(&m, &n), (&m, &free), (&free, &free), (&n, &free)] {
        let sum = a.direct_sum(b).unwrap();
        let mut union = non_projective_points(a, 100).unwrap();
        union.extend(non_projective_points(b, 100).unwrap());
        union.sort();
        union.dedup();
        let mut got = non_projective_points(&sum, 100).unwrap();
        got.sort();
        assert_eq!(got, union);
    }
}

#[test]
fn regular_module_is_projective_everywhere() {
    let p = prime(3);
    let field = Arc::new(GaloisField::new(p, 2).unwrap());
    let e = ElementaryAbelianSubgroup::regular(p, 2, 0, 9).unwrap();
    let free = EModule::permutation(field, &e).unwrap();
    assert!(non_projective_points(&free, 100).unwrap().is_empty());
    assert_eq!(sweep(&free, 100).unwrap().len(), 80);
}

#[test]
fn trivial_module_unit_is_identity() {
    let p = prime(3);
    let r = specht_basis(&Partition::row(6), p, 1).unwrap();
    let e = ElementaryAbelianSubgroup::parse_spec("V1^2", p, 6).unwrap();
    let u = u_alpha_matrix(&r, &e, &[1, 2]).unwrap();
    assert_eq!(u, GfMatrix::identity(Arc::clone(r.field()), 1));
}

#[test]
fn two_one_unit_is_not_free() {
    let p = prime(3);
    let r = specht_basis(&part(&[2, 1]), p, 1).unwrap();
    let e = ElementaryAbelianSubgroup::parse_spec("(1,2,3)", p, 3).unwrap();
    let u = u_alpha_matrix(&r, &e, &[1]).unwrap();
    assert!(!u.minus_identity().is_zero());
    let prof = jordan_profile(&u, p).unwrap();
    assert_eq!(prof.blocks(), &[0, 1, 0]);
    assert!(!prof.is_projective());
}

#[test]
fn extension_field_sweep_over_gf4() {
    // (3,1) has odd dimension, so every GF(4)-point is non-projective
    let p = prime(2);
    let e = ElementaryAbelianSubgroup::parse_spec("(1,2);(3,4)", p, 4).unwrap();
    let pts = specht_core::modrep::rank_variety_points(&part(&[3, 1]), p, &e, 2).unwrap();
    assert_eq!(pts.len(), 15);
    // (2,1,1) at p = 2 has dimension 3 as well
    let pts = specht_core::modrep::rank_variety_points(&part(&[2, 1, 1]), p, &e, 2).unwrap();
    assert_eq!(pts.len(), 15);
}
