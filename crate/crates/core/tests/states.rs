mod common;

use common::{random_graph, random_set, rng};
use elc_core::graphstate::{amplitudes, apply_local_hadamard, check_local_hadamard, graph_state_match, proportional};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn amplitudes_are_signs(n in 0usize..11, seed in any::<u64>()) {
        let g = random_graph(&mut rng(seed), n, 0.5);
        let psi = amplitudes(&g).unwrap();
        prop_assert!(psi.amplitudes().iter().all(|a| a.abs() == 1));
        prop_assert_eq!(graph_state_match(&psi), Some(g));
    }

    #[test]
    fn hadamard_twice_is_scalar(n in 1usize..11, seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, 0.5);
        let w = random_set(&mut r, n);
        let psi = amplitudes(&g).unwrap();
        let twice = apply_local_hadamard(&apply_local_hadamard(&psi, &w).unwrap(), &w).unwrap();
        prop_assert!(proportional(&twice, &psi));
        prop_assert_eq!(twice.amplitudes()[0], psi.amplitudes()[0] << w.len());
    }

    #[test]
    fn hadamard_correspondence_on_larger_graphs(n in 5usize..11, seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, 0.5);
        let w = random_set(&mut r, n);
        let check = check_local_hadamard(&g, &w).unwrap();
        prop_assert!(check.holds_up_to_signs);
        if check.in_domain {
            prop_assert_eq!(check.observed_signed.map(|(g, _)| g), check.predicted);
        } else {
            prop_assert_eq!(check.observed_signed, None);
        }
    }
}
