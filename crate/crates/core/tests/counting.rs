mod common;

use common::{all_graphs, random_graph, rng};
use elc_core::interlace::{divisibility_check, evenness_sufficient, interlace_poly};
use elc_core::invariants::{
    bineighborhood_space, class_size, delta_count, invariant_report, sigma_space, stabilises,
};
use elc_core::orbit::{elc_orbit, lc_orbit, DEFAULT_ORBIT_CAP};
use elc_core::{BitMatrix, BitVector, Graph};
use rand::Rng;

/// Span of `Σ ν_ij` over every even-degree edge set, each a disjoint union
/// of cycles.
fn brute_bineighborhood(g: &Graph) -> BitMatrix {
    let n = g.n();
    let nu = |i: usize, j: usize| g.neighbors(i).and(g.neighbors(j));
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                gens.push(nu(i, j));
            }
        }
    }
    let edges = g.edges();
    for mask in 1u64..1 << edges.len() {
        let mut deg = vec![0usize; n];
        let mut sum = BitVector::zeros(n);
        for (k, &(i, j)) in edges.iter().enumerate() {
            if mask >> k & 1 == 1 {
                deg[i] += 1;
                deg[j] += 1;
                sum.xor_assign(&nu(i, j));
            }
        }
        if deg.iter().all(|d| d % 2 == 0) {
            gens.push(sum);
        }
    }
    BitMatrix::from_columns(&gens, n).column_space_basis()
}

#[test]
fn bineighborhood_matches_cycle_enumeration() {
    let mut r = rng(10);
    for n in 1..=5 {
        for g in all_graphs(n) {
            assert_eq!(bineighborhood_space(&g), brute_bineighborhood(&g));
        }
    }
    for _ in 0..100 {
        let n = r.gen_range(6..=7);
        let g = random_graph(&mut r, n, 0.5);
        assert_eq!(bineighborhood_space(&g), brute_bineighborhood(&g));
    }
}

#[test]
fn stabiliser_containment_and_rank_bound() {
    let mut r = rng(11);
    for _ in 0..500 {
        let n = r.gen_range(1..=16);
        let p = r.gen_range(0.1..0.9);
        let g = random_graph(&mut r, n, p);
        let sigma = sigma_space(&g);
        let g_plus_i = g.adjacency().add_identity();
        let nu = bineighborhood_space(&g);
        for x in sigma.basis().columns() {
            assert!(stabilises(&g, &x));
            assert!(g_plus_i.mul_vec(&x).is_zero());
            for y in nu.columns() {
                assert!(!y.dot(&x));
            }
        }
        assert!(sigma.dim() <= n - g_plus_i.rank());
    }
}

#[test]
fn invariants_survive_every_move() {
    let mut r = rng(12);
    for _ in 0..500 {
        let n = r.gen_range(2..=12);
        let p = r.gen_range(0.2..0.8);
        let g = random_graph(&mut r, n, p);
        let before = invariant_report(&g);
        let sigma = sigma_space(&g);
        let q = interlace_poly(&g).unwrap();
        assert_eq!(before.delta_count.unwrap() % sigma.size(), 0);
        assert!(divisibility_check(&g, &q).1);
        for (i, j) in g.edges() {
            let h = g.edge_local_complement(i, j).unwrap();
            let after = invariant_report(&h);
            assert!(sigma.same_span(&sigma_space(&h)));
            assert_eq!(
                before.kernel_basis.column_space_basis(),
                after.kernel_basis.column_space_basis()
            );
            assert_eq!(before.twin_pairs, after.twin_pairs);
            assert_eq!(before.delta_count, after.delta_count);
            assert_eq!(before.class_size, after.class_size);
            assert_eq!(before.orthogonal, after.orthogonal);
            assert_eq!(before.rank_gamma_plus_i, after.rank_gamma_plus_i);
            assert_eq!(interlace_poly(&h).unwrap(), q);
        }
    }
}

#[test]
fn value_at_one_identity_exhaustive() {
    for n in 0..=6 {
        for g in all_graphs(n) {
            let q = interlace_poly(&g).unwrap();
            let expect = class_size(&g).unwrap() * sigma_space(&g).size();
            assert_eq!(q.evaluate(1).unwrap(), expect as i128);
            assert_eq!(q.evaluate(2).unwrap(), 1i128 << n);
            assert!(divisibility_check(&g, &q).1);
            if evenness_sufficient(&g).is_some() {
                assert!(sigma_space(&g).dim() > 0);
            }
        }
    }
}

#[test]
fn orbit_members_share_invariants() {
    let mut r = rng(13);
    for _ in 0..60 {
        let n = r.gen_range(3..=7);
        let g = random_graph(&mut r, n, 0.5);
        let e = elc_orbit(&g, DEFAULT_ORBIT_CAP).unwrap();
        let l = lc_orbit(&g, DEFAULT_ORBIT_CAP).unwrap();
        assert!(e.is_subset_of(&l));
        assert_eq!(e.len() as u128, class_size(&g).unwrap());
        let q = interlace_poly(&g).unwrap();
        let sigma = sigma_space(&g);
        let report = invariant_report(&g);
        for h in e.graphs() {
            assert_eq!(interlace_poly(h).unwrap(), q);
            assert!(sigma.same_span(&sigma_space(h)));
            assert_eq!(delta_count(h).unwrap(), report.delta_count.unwrap());
            assert_eq!(h.twins(), report.twin_pairs);
        }
    }
}
