use antsys_core::aco::{construct_tour, init_pheromone, transition_probabilities, AntState};
use antsys_core::instance::euc_2d;
use antsys_core::meas::{escape, global_update_meas};
use antsys_core::tour::validate_permutation;
use antsys_core::{
    brute_force_optimum, held_karp_exact, nearest_neighbor_tour, parse_tsplib, to_tsplib,
    tour_length, Algorithm, ColonyConfig, Instance, MeasParams, PheromoneMatrix, Tour,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn coords(min: usize, max: usize) -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((0.0..1000.0f64, 0.0..1000.0f64), min..=max)
}

fn instance(min: usize, max: usize) -> impl Strategy<Value = Instance> {
    coords(min, max).prop_map(|c| Instance::from_coords("prop", c).unwrap())
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// Instance with a pheromone matrix of arbitrary (floored) trails.
fn instance_and_trails(
    min: usize,
    max: usize,
) -> impl Strategy<Value = (Instance, PheromoneMatrix)> {
    instance(min, max).prop_flat_map(|inst| {
        let n = inst.n();
        prop::collection::vec(1e-3..10.0f64, n * n).prop_map(move |vals| {
            let mut ph = PheromoneMatrix::uniform(n, 1.0, 1e-4);
            for i in 0..n {
                for j in (i + 1)..n {
                    ph.set(i, j, vals[i * n + j]);
                }
            }
            (inst.clone(), ph)
        })
    })
}

/// Ant at `order[0]` having visited `order[..=k]`, with at least one node left.
fn ant_on(order: &[usize], k: usize) -> AntState {
    let mut ant = AntState::new(order.len(), order[0]);
    for &c in &order[1..=k.min(order.len() - 2)] {
        ant.visit(c);
    }
    ant
}

fn config(n: usize, alpha: f64, beta: f64) -> ColonyConfig {
    ColonyConfig {
        alpha,
        beta,
        ..ColonyConfig::for_instance(n)
    }
}

proptest! {
    #[test]
    fn tour_length_is_invariant_under_rotation_and_reversal(
        (inst, order, k) in instance(3, 12).prop_flat_map(|inst| {
            let n = inst.n();
            (Just(inst), permutation(n), 0..n)
        })
    ) {
        let base = tour_length(&inst, &order).unwrap();
        let mut rotated = order.clone();
        rotated.rotate_left(k);
        let mut reversed = order.clone();
        reversed.reverse();
        prop_assert_eq!(tour_length(&inst, &rotated).unwrap(), base);
        prop_assert_eq!(tour_length(&inst, &reversed).unwrap(), base);
    }

    #[test]
    fn euc_2d_matrix_is_reproduced_from_parsed_coordinates(inst in instance(2, 15)) {
        let parsed = parse_tsplib(&to_tsplib(&inst)).unwrap();
        let c = parsed.coords().unwrap();
        for i in 0..parsed.n() {
            for j in 0..parsed.n() {
                prop_assert_eq!(parsed.d(i, j), euc_2d(c[i], c[j]));
                prop_assert_eq!(parsed.d(i, j), inst.d(i, j));
            }
        }
    }

    #[test]
    fn nearest_neighbor_never_beats_the_optimum(
        (inst, start) in instance(3, 10).prop_flat_map(|i| { let n = i.n(); (Just(i), 0..n) })
    ) {
        let nn = nearest_neighbor_tour(&inst, start).unwrap();
        prop_assert!(nn.length() >= held_karp_exact(&inst).unwrap().length());
    }

    #[test]
    fn exact_oracles_agree(inst in instance(4, 9)) {
        prop_assert_eq!(
            held_karp_exact(&inst).unwrap().length(),
            brute_force_optimum(&inst).unwrap().length()
        );
    }

    #[test]
    fn probabilities_are_normalized(
        ((inst, ph), order, k, alpha, beta) in instance_and_trails(3, 10).prop_flat_map(|(i, ph)| {
            let n = i.n();
            (Just((i, ph)), permutation(n), 0..n, prop::sample::select(vec![0.0, 0.5, 1.0, 2.0]),
             prop::sample::select(vec![0.0, 1.0, 2.0, 5.0]))
        })
    ) {
        let ant = ant_on(&order, k);
        let p = transition_probabilities(&inst, &ph, &ant, &config(inst.n(), alpha, beta)).unwrap();
        let mut total = 0.0;
        for (j, &v) in p.iter().enumerate() {
            if ant.is_visited(j) {
                prop_assert_eq!(v, 0.0);
            } else {
                prop_assert!(v >= 0.0);
                total += v;
            }
        }
        prop_assert!((total - 1.0).abs() <= 1e-12, "sum {}", total);
    }

    #[test]
    fn beta_zero_with_uniform_trails_is_uniform(
        (inst, order, k) in instance(3, 12).prop_flat_map(|i| {
            let n = i.n();
            (Just(i), permutation(n), 0..n)
        }),
        tau in 1e-3..5.0f64,
    ) {
        let ph = PheromoneMatrix::uniform(inst.n(), tau, tau * 1e-4);
        let ant = ant_on(&order, k);
        let p = transition_probabilities(&inst, &ph, &ant, &config(inst.n(), 1.0, 0.0)).unwrap();
        let feasible = (0..inst.n()).filter(|&j| !ant.is_visited(j)).count() as f64;
        for (j, &v) in p.iter().enumerate() {
            if !ant.is_visited(j) {
                prop_assert!((v - 1.0 / feasible).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn probabilities_are_homogeneous_in_tau_and_distance(
        ((inst, ph), order, k) in instance_and_trails(3, 9).prop_flat_map(|(i, ph)| {
            let n = i.n();
            (Just((i, ph)), permutation(n), 0..n)
        }),
        c in 0.2..100.0f64,
        beta in 0.0..5.0f64,
    ) {
        let n = inst.n();
        let ant = ant_on(&order, k);
        let mut scaled_tau = ph.clone();
        for i in 0..n {
            for j in (i + 1)..n {
                scaled_tau.set(i, j, ph.get(i, j) * c);
            }
        }
        // α = 0: trails drop out entirely.
        let cfg0 = config(n, 0.0, beta);
        prop_assert_eq!(
            transition_probabilities(&inst, &ph, &ant, &cfg0).unwrap(),
            transition_probabilities(&inst, &scaled_tau, &ant, &cfg0).unwrap()
        );
        // α = 1: the common factor cancels in the normalization.
        let cfg1 = config(n, 1.0, beta);
        let a = transition_probabilities(&inst, &ph, &ant, &cfg1).unwrap();
        let b = transition_probabilities(&inst, &scaled_tau, &ant, &cfg1).unwrap();
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() <= 1e-12);
        }
        // Scaling every distance keeps the visibility ranking.
        let rows: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| inst.d(i, j) * c).collect()).collect();
        let wide = Instance::from_matrix("wide", rows).unwrap();
        let cfg = config(n, 0.0, beta.max(0.5));
        let pa = transition_probabilities(&inst, &ph, &ant, &cfg).unwrap();
        let pb = transition_probabilities(&wide, &ph, &ant, &cfg).unwrap();
        let argmax = |p: &[f64]| {
            let top = p.iter().cloned().fold(f64::MIN, f64::max);
            p.iter().enumerate().filter(|(_, &v)| v >= top * (1.0 - 1e-12)).map(|(j, _)| j).collect::<Vec<_>>()
        };
        prop_assert_eq!(argmax(&pa), argmax(&pb));
    }

    #[test]
    fn update_commutes_with_relabeling(
        (inst, pi, tours) in instance(3, 9).prop_flat_map(|i| {
            let n = i.n();
            (Just(i), permutation(n), prop::collection::vec(permutation(n), 1..5))
        }),
        rho in 0.0..=1.0f64,
        e in 0.0..5.0f64,
    ) {
        let n = inst.n();
        let mut relabeled_coords = vec![(0.0, 0.0); n];
        for (i, &c) in inst.coords().unwrap().iter().enumerate() {
            relabeled_coords[pi[i]] = c;
        }
        let other = Instance::from_coords("relabeled", relabeled_coords).unwrap();
        // Same starting level on both sides; τ₀ from a greedy tour out of
        // node 0 is itself label-dependent.
        let mut a = PheromoneMatrix::uniform(n, 0.5, 0.5e-4);
        let mut b = a.clone();
        let ta: Vec<Tour> = tours.iter().map(|o| Tour::new(&inst, o.clone()).unwrap()).collect();
        let tb: Vec<Tour> = tours
            .iter()
            .map(|o| Tour::new(&other, o.iter().map(|&c| pi[c]).collect()).unwrap())
            .collect();
        a.evaporate(rho);
        a.deposit_as(&ta, 1.0);
        a.deposit_elite(&ta[0], e, 1.0);
        b.evaporate(rho);
        b.deposit_as(&tb, 1.0);
        b.deposit_elite(&tb[0], e, 1.0);
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(a.get(i, j), b.get(pi[i], pi[j]));
            }
        }
    }

    #[test]
    fn constructed_tours_are_permutations(
        ((inst, ph), start, seed) in instance_and_trails(2, 14).prop_flat_map(|(i, ph)| {
            let n = i.n();
            (Just((i, ph)), 0..n, any::<u64>())
        })
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = construct_tour(&inst, &ph, &config(inst.n(), 1.0, 3.0), start, &mut rng).unwrap();
        prop_assert!(validate_permutation(inst.n(), t.order()).is_ok());
        prop_assert_eq!(t.order()[0], start);
        prop_assert_eq!(t.length(), tour_length(&inst, t.order()).unwrap());
    }

    #[test]
    fn escape_preserves_trail_order(
        (_, ph) in instance_and_trails(3, 10),
        lambda in 0.01..0.99f64,
    ) {
        let n = ph.n();
        let before: Vec<f64> = ph.off_diagonal().collect();
        let mut after = ph.clone();
        let p = MeasParams { escape_blend: lambda, ..MeasParams::with_reinforcement(1.0) };
        escape(&mut after, &p);
        let after: Vec<f64> = after.off_diagonal().collect();
        prop_assert_eq!(before.len(), n * (n - 1));
        for a in 0..before.len() {
            for b in 0..before.len() {
                if before[a] < before[b] {
                    prop_assert!(after[a] <= after[b]);
                } else if before[a] == before[b] {
                    prop_assert_eq!(after[a], after[b]);
                }
            }
        }
    }
}

#[derive(Debug, Clone)]
enum Op {
    Evaporate(f64),
    DepositAs(Vec<Vec<usize>>),
    Elite(Vec<usize>, f64),
    Meas(Vec<usize>, Vec<usize>, f64, f64),
    Escape(f64),
    Set(usize, usize, f64),
}

fn op(n: usize) -> impl Strategy<Value = Op> {
    prop_oneof![
        (0.0..=1.0f64).prop_map(Op::Evaporate),
        prop::collection::vec(permutation(n), 1..4).prop_map(Op::DepositAs),
        (permutation(n), 0.0..10.0f64).prop_map(|(t, e)| Op::Elite(t, e)),
        (permutation(n), permutation(n), 0.0..10.0f64, 0.0..1.0f64)
            .prop_map(|(a, b, wp, wm)| Op::Meas(a, b, wp, wm)),
        (0.01..=1.0f64).prop_map(Op::Escape),
        (0..n, 0..n, -1.0..10.0f64).prop_map(|(i, j, v)| Op::Set(i, j, v)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn floor_and_symmetry_survive_any_update_sequence(
        (inst, ops) in instance(2, 8).prop_flat_map(|i| {
            let n = i.n();
            (Just(i), prop::collection::vec(op(n), 1..20))
        })
    ) {
        let cfg = ColonyConfig::for_instance(inst.n());
        let mut ph = init_pheromone(&inst, &cfg).unwrap();
        let tour = |o: &Vec<usize>| Tour::new(&inst, o.clone()).unwrap();
        for op in &ops {
            match op {
                Op::Evaporate(rho) => ph.evaporate(*rho),
                Op::DepositAs(ts) => ph.deposit_as(&ts.iter().map(tour).collect::<Vec<_>>(), 1.0),
                Op::Elite(t, e) => ph.deposit_elite(&tour(t), *e, 1.0),
                Op::Meas(a, b, wp, wm) => {
                    let (mut best, mut worst) = (tour(a), tour(b));
                    if best.length() > worst.length() {
                        std::mem::swap(&mut best, &mut worst);
                    }
                    let p = MeasParams {
                        penalty_weight: *wm,
                        ..MeasParams::with_reinforcement(*wp)
                    };
                    global_update_meas(&mut ph, &best, &worst, &p, 1.0).unwrap();
                }
                Op::Escape(l) => escape(
                    &mut ph,
                    &MeasParams { escape_blend: *l, ..MeasParams::with_reinforcement(1.0) },
                ),
                Op::Set(i, j, v) if i != j => ph.set(*i, *j, *v),
                Op::Set(..) => {}
            }
            prop_assert!(ph.is_symmetric());
            prop_assert!(ph.off_diagonal().all(|t| t >= ph.tau_min() && t.is_finite()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn runs_are_deterministic_and_best_is_monotone(
        inst in instance(4, 9),
        algo in prop::sample::select(Algorithm::ALL.to_vec()),
        seed in any::<u64>(),
        window in prop::option::of(1usize..6),
    ) {
        let mut cfg = ColonyConfig::for_instance(inst.n()).with_iterations(40).with_seed(seed);
        cfg.meas.stagnation_window = window;
        let a = algo.solve(&inst, &cfg).unwrap();
        let b = algo.solve(&inst, &cfg).unwrap();
        prop_assert_eq!(&a.best_history, &b.best_history);
        prop_assert_eq!(&a.worst_history, &b.worst_history);
        prop_assert_eq!(&a.best_tour, &b.best_tour);
        prop_assert_eq!(a.counters, b.counters);
        prop_assert_eq!(a.escapes_triggered, b.escapes_triggered);

        // Escapes reshape the trails but never the recorded best.
        let so_far = a.best_so_far();
        prop_assert!(so_far.windows(2).all(|w| w[1] <= w[0]));
        prop_assert_eq!(a.best_tour.length(), *so_far.last().unwrap());
        prop_assert_eq!(a.best_history[a.last_improvement_iter - 1], a.best_tour.length());
        prop_assert!(a.best_history[..a.last_improvement_iter - 1]
            .iter()
            .all(|&v| v > a.best_tour.length()));
    }
}
