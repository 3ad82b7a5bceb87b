use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use specht_core::checks::{
    gate_suite, rim_hook_core_weight, strip_one_at_a_time,
};
use specht_core::expansion::strip_horizontal_hooks;
use specht_core::vertex::{classify, feasible_abelian_types, SpechtContext, VertexStatus};
use specht_core::{m_core_weight, p_adic_expansion, partitions, Partition, Prime};

fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

fn partition_strategy(max_n: usize) -> impl Strategy<Value = Partition> {
    (0..=max_n, any::<u64>()).prop_map(|(n, seed)| {
        let all: Vec<Partition> = partitions(n).collect();
        all[(seed % all.len() as u64) as usize].clone()
    })
}

proptest! {
    #[test]
    fn rim_hook_order_does_not_matter(mu in partition_strategy(18), m in 2usize..=6, seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (core, w) = rim_hook_core_weight(&mu, m, &mut |k| rng.gen_range(0..k));
        let cw = m_core_weight(&mu, m).unwrap();
        prop_assert_eq!(core, cw.core);
        prop_assert_eq!(w, cw.weight);
    }

    #[test]
    fn horizontal_stripping_order_does_not_matter(mu in partition_strategy(18), p in prop::sample::select(vec![2u64, 3, 5]), seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let p = prime(p);
        let (rest, quotient) = strip_horizontal_hooks(&mu, p);
        let (r, mut removed) = strip_one_at_a_time(&mu, p, &mut |k| rng.gen_range(0..k));
        while removed.last() == Some(&0) {
            removed.pop();
        }
        prop_assert_eq!(r, rest);
        prop_assert_eq!(removed, quotient.parts().to_vec());
    }

    #[test]
    fn expansion_round_trips(mu in partition_strategy(30), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        prop_assert_eq!(p_adic_expansion(&mu, prime(p)).reconstruct(), mu);
    }
}

#[test]
fn gate_matches_brute_force_up_to_30() {
    let bad = gate_suite(30, &[prime(2), prime(3), prime(5)]);
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn odd_primes_collapse_to_v1_power() {
    for p in [3, 5, 7] {
        let p = prime(p);
        for w in 0..=8 {
            let types = specht_core::vertex::gate_types(p, w, 0);
            assert_eq!(types.len(), 1);
            assert_eq!(types[0].exponents(), vec![1; w].as_slice());
        }
    }
}

#[test]
fn feasible_types_are_empty_off_p2_cores() {
    for n in 0..=16 {
        for mu in partitions(n) {
            for p in [2, 3] {
                let p = prime(p);
                let r = feasible_abelian_types(&mu, p);
                let p2core = mu.is_core((p.get() * p.get()) as usize);
                assert_eq!(r.feasible.is_empty(), !p2core, "{mu} p={p}");
                assert!(r.feasible.iter().all(|w| w.passes() && w.combined_lhs == 0));
            }
        }
    }
}

#[test]
fn classifier_is_consistent() {
    for n in 0..=14 {
        for mu in partitions(n) {
            for p in [2, 3, 5] {
                let p = prime(p);
                let w = m_core_weight(&mu, p.get() as usize).unwrap().weight;
                let r = classify(&SpechtContext::new(mu.clone(), p));
                assert!(r.complexity.lo <= r.complexity.hi && r.complexity.hi <= w, "{}", r.to_json());
                assert_eq!(r.block.weight, w);
                if r.status == VertexStatus::ElementaryAbelian {
                    assert_eq!(r.elementary_abelian_rank(), Some(w));
                    assert!(r.complexity.is_exact() && r.complexity.lo == w);
                }
                if r.status != VertexStatus::NotClassified {
                    assert_eq!(r.status == VertexStatus::ProjectiveTrivialVertex, w == 0, "{mu} p={p}");
                }
                let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
                assert_eq!(json["block"]["weight"], w);
            }
        }
    }
}
