use antsys_core::experiment::read_optima;
use antsys_core::{read_tsplib, tour_length, Instance, WeightKind};

fn berlin52() -> Instance {
    read_tsplib(concat!(env!("CARGO_MANIFEST_DIR"), "/data/berlin52.tsp")).unwrap()
}

#[test]
fn parses_header() {
    let inst = berlin52();
    assert_eq!(inst.name(), "berlin52");
    assert_eq!(inst.n(), 52);
    assert_eq!(inst.weight_kind(), WeightKind::Euc2d);
    assert_eq!(inst.coords().unwrap()[0], (565.0, 575.0));
    assert_eq!(inst.coords().unwrap()[51], (1740.0, 245.0));
}

#[test]
fn hand_computed_distances() {
    // (TSPLIB ids, rounded distance) worked out from the coordinate file:
    // 1-2:   sqrt(540² + 390²) = 666.108  -> 666
    // 1-52:  sqrt(1175² + 330²) = 1220.461 -> 1220
    // 2-3:   sqrt(320² + 565²) = 649.327  -> 649
    // 10-20: sqrt(90² + 765²)  = 770.276  -> 770
    // 51-52: sqrt(400² + 480²) = 624.820  -> 625
    let inst = berlin52();
    for (a, b, want) in [
        (1, 2, 666.0),
        (1, 52, 1220.0),
        (2, 3, 649.0),
        (10, 20, 770.0),
        (51, 52, 625.0),
    ] {
        assert_eq!(inst.distance(a - 1, b - 1).unwrap(), want, "{a}-{b}");
        assert_eq!(inst.distance(b - 1, a - 1).unwrap(), want, "{b}-{a}");
    }
}

#[test]
fn canonical_optimal_tour_has_registry_length() {
    // berlin52.opt.tour from the TSPLIB distribution, 1-based.
    let opt = [
        1, 49, 32, 45, 19, 41, 8, 9, 10, 43, 33, 51, 11, 52, 14, 13, 47, 26, 27, 28, 12, 25, 4, 6,
        15, 5, 24, 48, 38, 37, 40, 39, 36, 35, 34, 44, 46, 16, 29, 50, 20, 23, 30, 2, 7, 42, 21,
        17, 3, 18, 31, 22,
    ];
    let order: Vec<usize> = opt.iter().map(|&c| c - 1).collect();
    let table = read_optima(concat!(env!("CARGO_MANIFEST_DIR"), "/data/optima.txt")).unwrap();
    assert_eq!(table["berlin52"], 7542.0);
    assert_eq!(tour_length(&berlin52(), &order).unwrap(), table["berlin52"]);
}
