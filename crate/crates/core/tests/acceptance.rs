//! Acceptance criteria AC1 to AC8. Prints one `[PASS]` or `[FAIL]` line per
//! criterion and exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{all_graphs, all_sets, random_graph, random_walk, rng};
use elc_core::equivalence::{elc_sequence_between, invert_via_elc, recognize_elc};
use elc_core::graphstate::{amplitudes, apply_local_hadamard, check_local_hadamard, proportional, AmplitudeVector};
use elc_core::interlace::{interlace_poly, InterlacePoly};
use elc_core::invariants::{bineighborhood_space, class_size, delta_count, invariant_report, sigma_space};
use elc_core::orbit::{elc_orbit, DEFAULT_ORBIT_CAP};
use elc_core::{Graph, GraphKind};
use rand::Rng;

const CLEBSCH_INTERLACE_LIMIT: Duration = Duration::from_secs(60);
const CLEBSCH_SIGMA_LIMIT: Duration = Duration::from_secs(1);
/// Quartic growth from n = 32 to n = 64 is a factor 16; allow 4 times that.
const SCALING_RATIO_LIMIT: f64 = 64.0;

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ac1_clebsch() -> Outcome {
    let g = Graph::generate(GraphKind::Clebsch).map_err(|e| e.to_string())?;
    ensure(g.is_strongly_regular(16, 5, 0, 2), || "generator is not srg(16,5,0,2)".into())?;
    let t = Instant::now();
    let sigma = sigma_space(&g);
    let sigma_time = t.elapsed();
    let t = Instant::now();
    let q = interlace_poly(&g).map_err(|e| e.to_string())?;
    let q_time = t.elapsed();
    ensure(sigma.dim() == 1, || format!("dim Σ_e = {}, expected 1", sigma.dim()))?;
    let odd: Vec<_> = q.coefficients().iter().filter(|c| *c % 2 != 0).collect();
    ensure(odd.is_empty(), || format!("odd coefficients {odd:?}"))?;
    ensure(sigma_time <= CLEBSCH_SIGMA_LIMIT, || format!("Σ_e took {sigma_time:?}"))?;
    ensure(q_time <= CLEBSCH_INTERLACE_LIMIT, || format!("interlace took {q_time:?}"))?;
    Ok(format!(
        "dim Σ_e = 1, q = {q}, Σ_e in {sigma_time:?} (limit {CLEBSCH_SIGMA_LIMIT:?}), q in {q_time:?} (limit {CLEBSCH_INTERLACE_LIMIT:?})"
    ))
}

fn orbit_matches_count(g: &Graph) -> Result<(), String> {
    let orbit = elc_orbit(g, DEFAULT_ORBIT_CAP).map_err(|e| e.to_string())?.len() as u128;
    let delta = delta_count(g).map_err(|e| e.to_string())?;
    let sigma = sigma_space(g).size();
    ensure(delta % sigma == 0 && orbit == delta / sigma, || {
        format!("{g:?}: orbit {orbit}, Δ_e {delta}, |Σ_e| {sigma}")
    })
}

fn ac2_counting() -> Outcome {
    let mut count = 0;
    for n in 0..=5 {
        for g in all_graphs(n) {
            orbit_matches_count(&g)?;
            count += 1;
        }
    }
    let mut r = rng(0xac2);
    for _ in 0..200 {
        let n = r.gen_range(6..=8);
        orbit_matches_count(&random_graph(&mut r, n, 0.5))?;
    }
    Ok(format!("{count} graphs with n <= 5 and 200 random graphs with n in 6..=8"))
}

fn ac3_recognition() -> Outcome {
    let mut pairs = 0u64;
    let mut positive = 0u64;
    for n in 0..=5 {
        let graphs = all_graphs(n);
        for g in &graphs {
            let orbit = elc_orbit(g, DEFAULT_ORBIT_CAP).map_err(|e| e.to_string())?;
            for h in &graphs {
                pairs += 1;
                let seq = elc_sequence_between(g, h).map_err(|e| e.to_string())?;
                ensure(seq.is_some() == orbit.contains(h), || format!("{g:?} vs {h:?}: disagreement"))?;
                if let Some(seq) = seq {
                    positive += 1;
                    let end = seq.replay(g).map_err(|e| format!("{g:?} -> {h:?}: {e}"))?;
                    ensure(&end == h, || format!("{g:?} -> {h:?}: replay ends at {end:?}"))?;
                }
            }
        }
    }
    Ok(format!("{pairs} ordered pairs, {positive} equivalent, all sequences replay"))
}

fn median_recognition_time(n: usize, seed: u64) -> Result<Duration, String> {
    let mut r = rng(seed);
    let mut times = Vec::new();
    for _ in 0..7 {
        let g = random_graph(&mut r, n, 0.5);
        let h = random_walk(&mut r, &g, 2 * n);
        let t = Instant::now();
        let a = recognize_elc(&g, &h).map_err(|e| e.to_string())?;
        times.push(t.elapsed());
        ensure(a.is_some(), || format!("n = {n}: equivalent pair not recognised"))?;
    }
    times.sort();
    Ok(times[times.len() / 2])
}

fn ac4_scaling() -> Outcome {
    // Warm-up so allocation and page faults do not land on the first sample.
    median_recognition_time(16, 0)?;
    let t32 = median_recognition_time(32, 0xac4)?;
    let t64 = median_recognition_time(64, 0xac4 + 1)?;
    let ratio = t64.as_secs_f64() / t32.as_secs_f64().max(1e-9);
    ensure(ratio <= SCALING_RATIO_LIMIT, || {
        format!("t(32) = {t32:?}, t(64) = {t64:?}, ratio {ratio:.1} > {SCALING_RATIO_LIMIT}")
    })?;
    Ok(format!("median t(32) = {t32:?}, t(64) = {t64:?}, ratio {ratio:.1} (limit {SCALING_RATIO_LIMIT})"))
}

fn ac5_inversion() -> Outcome {
    let mut r = rng(0xac5);
    let mut done = 0;
    let mut moves = 0;
    while done < 100 {
        let n = 2 * r.gen_range(1..=8);
        let g = random_graph(&mut r, n, 0.5);
        let Ok(gauss) = g.adjacency().inverse() else { continue };
        let (seq, inv) = invert_via_elc(&g).map_err(|e| e.to_string())?;
        ensure(inv.adjacency() == &gauss, || format!("{g:?}: inverse differs"))?;
        let end = seq.replay(&g).map_err(|e| format!("{g:?}: {e}"))?;
        ensure(end == inv, || format!("{g:?}: sequence does not reach the inverse"))?;
        moves += seq.len();
        done += 1;
    }
    Ok(format!("100 nonsingular graphs, {moves} moves replayed"))
}

/// Scalar multiple of `Z^c v` for some sign flip `c`.
fn proportional_up_to_signs(u: &AmplitudeVector, v: &AmplitudeVector) -> bool {
    let n = v.n();
    (0u64..1 << n).any(|c| {
        let flipped: Vec<i64> = v
            .amplitudes()
            .iter()
            .enumerate()
            .map(|(x, &a)| if (c & x as u64).count_ones() % 2 == 1 { -a } else { a })
            .collect();
        proportional(u, &AmplitudeVector::new(n, flipped).unwrap())
    })
}

/// Checked as stated: states compared up to a scalar only. The same counts
/// under the signed reading are reported alongside.
fn ac6_graph_states() -> Outcome {
    let (mut in_domain, mut outside) = (0, 0);
    let (mut strict_bad, mut signed_bad) = (0, 0);
    let (mut pairs, mut reach_bad, mut reach_signed_bad) = (0, 0, 0);
    let mut first: Option<String> = None;
    for n in 0..=4 {
        let graphs = all_graphs(n);
        let sets = all_sets(n);
        for g in &graphs {
            for a in &sets {
                let check = check_local_hadamard(g, a).map_err(|e| e.to_string())?;
                if check.in_domain {
                    in_domain += 1;
                } else {
                    outside += 1;
                }
                if !check.holds {
                    strict_bad += 1;
                    first.get_or_insert_with(|| format!("{g:?} with A = {a}"));
                }
                if !check.holds_up_to_signs {
                    signed_bad += 1;
                }
            }
            let psi = amplitudes(g).map_err(|e| e.to_string())?;
            let images = sets
                .iter()
                .map(|w| apply_local_hadamard(&psi, w))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            let orbit = elc_orbit(g, DEFAULT_ORBIT_CAP).map_err(|e| e.to_string())?;
            for h in &graphs {
                pairs += 1;
                let target = amplitudes(h).map_err(|e| e.to_string())?;
                let member = orbit.contains(h);
                if images.iter().any(|v| proportional(v, &target)) != member {
                    reach_bad += 1;
                }
                if images.iter().any(|v| proportional_up_to_signs(v, &target)) != member {
                    reach_signed_bad += 1;
                }
            }
        }
    }
    let summary = format!(
        "{in_domain} in-domain and {outside} out-of-domain (G, A); \
         up to a scalar: {strict_bad} instances and {reach_bad}/{pairs} reachability pairs disagree; \
         up to a scalar and Z signs: {signed_bad} instances and {reach_signed_bad}/{pairs} pairs disagree"
    );
    match first {
        None if reach_bad == 0 => Ok(summary),
        _ => Err(format!("{summary}; first counterexample {}", first.unwrap_or_default())),
    }
}

fn ac7_interlace() -> Outcome {
    let q = |edges: &[(usize, usize)], n| interlace_poly(&Graph::from_edges(n, edges).unwrap()).unwrap();
    let k2 = q(&[(0, 1)], 2);
    let p3 = q(&[(0, 1), (1, 2)], 3);
    let k3 = q(&[(0, 1), (0, 2), (1, 2)], 3);
    let expect = |a: Vec<i128>| InterlacePoly::from_monomial(a).unwrap();
    ensure(k2 == expect(vec![0, 2, 0]), || format!("q(K2) = {k2}"))?;
    ensure(p3 == expect(vec![0, 2, 1, 0]), || format!("q(P3) = {p3}"))?;
    ensure(k3 == expect(vec![0, 4, 0, 0]), || format!("q(K3) = {k3}"))?;

    let mut exhaustive = 0;
    for n in 0..=6 {
        for g in all_graphs(n) {
            let at_one = interlace_poly(&g).unwrap().evaluate(1).unwrap();
            let expect = class_size(&g).unwrap() * sigma_space(&g).size();
            ensure(at_one == expect as i128, || format!("{g:?}: q(1) = {at_one}, expected {expect}"))?;
            exhaustive += 1;
        }
    }

    let mut r = rng(0xac7);
    let mut moves = 0;
    while moves < 500 {
        let n = r.gen_range(2..=12);
        let g = random_graph(&mut r, n, 0.5);
        let edges = g.edges();
        if edges.is_empty() {
            continue;
        }
        let (i, j) = edges[r.gen_range(0..edges.len())];
        let before = interlace_poly(&g).unwrap();
        let after = interlace_poly(&g.edge_local_complement(i, j).unwrap()).unwrap();
        ensure(before == after, || format!("{g:?} at {{{},{}}}: {before} vs {after}", i + 1, j + 1))?;
        moves += 1;
    }
    Ok(format!("q(K2) = {k2}, q(P3) = {p3}, q(K3) = {k3}; q(1) identity on {exhaustive} graphs; 500 moves invariant"))
}

fn ac8_invariance() -> Outcome {
    let mut r = rng(0xac8);
    let mut moves = 0;
    for _ in 0..500 {
        let n = r.gen_range(1..=12);
        let g = random_graph(&mut r, n, 0.5);
        let sigma = sigma_space(&g);
        let report = invariant_report(&g);
        let g_plus_i = g.adjacency().add_identity();
        let nu = bineighborhood_space(&g);
        for x in sigma.basis().columns() {
            ensure(g_plus_i.mul_vec(&x).is_zero(), || format!("{g:?}: {x} outside ker(Γ + I)"))?;
            ensure(nu.columns().iter().all(|y| !y.dot(&x)), || format!("{g:?}: {x} outside ν(G)^⊥"))?;
        }
        for (i, j) in g.edges() {
            let h = g.edge_local_complement(i, j).unwrap();
            let other = invariant_report(&h);
            ensure(sigma.same_span(&sigma_space(&h)), || format!("{g:?}: Σ_e changed"))?;
            ensure(
                report.kernel_basis.column_space_basis() == other.kernel_basis.column_space_basis(),
                || format!("{g:?}: ker(Γ + I) changed"),
            )?;
            ensure(report.twin_pairs == other.twin_pairs, || format!("{g:?}: twins changed"))?;
            ensure(report.delta_count == other.delta_count, || format!("{g:?}: Δ_e changed"))?;
            ensure(report.orthogonal == other.orthogonal, || format!("{g:?}: orthogonality changed"))?;
            moves += 1;
        }
    }
    let petersen = Graph::generate(GraphKind::Petersen).unwrap();
    let size = sigma_space(&petersen).size();
    ensure(size == 1, || format!("Petersen |Σ_e| = {size}"))?;
    Ok(format!("500 graphs, {moves} moves; containment holds; Petersen |Σ_e| = 1"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("AC1", "Clebsch stabiliser and even interlace coefficients", ac1_clebsch),
        ("AC2", "orbit size equals Δ_e / |Σ_e|", ac2_counting),
        ("AC3", "recognition agrees with orbit membership", ac3_recognition),
        ("AC4", "recognition scaling from n = 32 to n = 64", ac4_scaling),
        ("AC5", "inversion by edge moves", ac5_inversion),
        ("AC6", "local Hadamard correspondence on graph states", ac6_graph_states),
        ("AC7", "interlace polynomial values and invariance", ac7_interlace),
        ("AC8", "invariants preserved by every move", ac8_invariance),
    ];
    let mut failed: BTreeSet<&str> = BTreeSet::new();
    for (id, name, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("[PASS] {id} {name}: {detail} ({elapsed:.2?})"),
            Err(detail) => {
                println!("[FAIL] {id} {name}: {detail} ({elapsed:.2?})");
                failed.insert(id);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: 8/8 passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {} failed: {:?}", failed.len(), failed);
        ExitCode::FAILURE
    }
}
