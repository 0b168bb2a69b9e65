use exlab_core::contains_clique;
use exlab_core::erdos_rogers::{default_alpha, default_length, find_ks3_free_subset, random_clique_free};
use exlab_core::oracle::graph_clique;
use num_rational::Rational64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn process_keeps_its_invariants(
        n in 6usize..=24,
        s in 3usize..=4,
        density in 0.2..1.0f64,
        seed in any::<u64>(),
        p in 0usize..6,
    ) {
        let h = random_clique_free(n, s + 1, density, seed).unwrap();
        let m = default_length(p.max(2)).min(n);
        let run = find_ks3_free_subset(&h, s, p, default_alpha(p, m), m).unwrap();
        prop_assert_eq!(run.state.check(&h), Ok(()));
        prop_assert!(graph_clique(&run.state.aux, s).is_none());
        prop_assert!(run.aux_checks >= run.state.sequence.len());
        prop_assert!(contains_clique(&h.induced(&run.set).unwrap(), s).unwrap().is_none());
    }

    #[test]
    fn sampled_pairs_are_homogeneous(n in 10usize..=30, density in 0.3..1.0f64, seed in any::<u64>()) {
        let h = random_clique_free(n, 4, density, seed).unwrap();
        let run = find_ks3_free_subset(&h, 3, 0, Rational64::new(1, 2), n).unwrap();
        let st = &run.state;
        let l = st.sequence.len();
        prop_assume!(l >= 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let i = rng.gen_range(0..l - 1);
        let j = rng.gen_range(i + 1..l);
        let pool: Vec<usize> = st.sequence[j + 1..].iter().chain(&st.survivors).copied().collect();
        prop_assume!(!pool.is_empty());
        let expect = st.aux.has_edge(i, j);
        for _ in 0..20 {
            let w = pool[rng.gen_range(0..pool.len())];
            prop_assert_eq!(h.has_edge(&[st.sequence[i], st.sequence[j], w]), expect);
        }
    }
}

#[test]
fn aux_stays_clique_free_at_every_length() {
    // the process is deterministic, so length m replays the first m steps
    for seed in 0..10 {
        let h = random_clique_free(20, 4, 0.8, seed).unwrap();
        for m in 1..=20 {
            let run = find_ks3_free_subset(&h, 3, 0, Rational64::new(1, 2), m).unwrap();
            assert!(graph_clique(&run.state.aux, 3).is_none(), "seed {seed} length {m}");
            run.state.check(&h).unwrap();
        }
    }
}
