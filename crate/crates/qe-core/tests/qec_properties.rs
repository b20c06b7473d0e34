//! Property sweeps for the QEC computation: Rayleigh sampling soundness
//! and monotonicity under isometric embeddings.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qe_core::graph::{
    build_graph, is_isometric_subgraph, named_graph, star_product, Graph, GraphKind, StarSpec,
};
use qe_core::qec::{qec_exact, qec_rayleigh};

fn sample_graphs() -> Vec<Graph> {
    let mut graphs = vec![
        named_graph(GraphKind::Path, 6).unwrap(),
        named_graph(GraphKind::Complete, 5).unwrap(),
        named_graph(GraphKind::Cycle, 7).unwrap(),
        named_graph(GraphKind::Star, 6).unwrap(),
        build_graph(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]).unwrap(),
    ];
    let (product, _) = star_product(
        &StarSpec::new(vec![
            (named_graph(GraphKind::Complete, 3).unwrap(), 0),
            (named_graph(GraphKind::Path, 4).unwrap(), 1),
        ])
        .unwrap(),
    );
    graphs.push(product);
    graphs
}

/// A random unit direction orthogonal to all-ones.
fn random_feasible(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    loop {
        let mut f: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..=1.0)).collect();
        let mean = f.iter().sum::<f64>() / n as f64;
        for v in &mut f {
            *v -= mean;
        }
        let norm = f.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm > 1e-6 {
            for v in &mut f {
                *v /= norm;
            }
            return f;
        }
    }
}

/// No feasible direction beats the computed maximum.
#[test]
fn rayleigh_sampling_soundness() {
    let mut rng = ChaCha8Rng::seed_from_u64(59);
    for g in sample_graphs() {
        let exact = qec_exact(&g).unwrap().value;
        for _ in 0..100 {
            let f = random_feasible(&mut rng, g.vertex_count());
            let rq = qec_rayleigh(&g, &f).unwrap();
            assert!(
                rq <= exact + 1e-9,
                "sampled quotient {rq} beats the maximum {exact}"
            );
        }
    }
}

/// The distance matrix of a cycle is circulant, so its spectrum is
/// explicit: QEC(C_n) is the largest of
/// `sum_j min(j, n - j) cos(2 pi j k / n)` over `k = 1 .. n-1`. An
/// entirely independent route to cycle constants, including the exact
/// zero of even cycles and `-(3 - sqrt 5)/2` for the 5-cycle.
#[test]
fn cycle_qec_matches_the_circulant_formula() {
    for n in 3..=16usize {
        let cycle = named_graph(GraphKind::Cycle, n).unwrap();
        let computed = qec_exact(&cycle).unwrap().value;
        let circulant = (1..n)
            .map(|k| {
                (0..n)
                    .map(|j| {
                        let d = j.min(n - j) as f64;
                        d * (2.0 * std::f64::consts::PI * (j * k) as f64 / n as f64).cos()
                    })
                    .sum::<f64>()
            })
            .fold(f64::NEG_INFINITY, f64::max);
        assert!(
            (computed - circulant).abs() < 1e-9,
            "C_{n}: eigen {computed} vs circulant {circulant}"
        );
        if n % 2 == 0 {
            assert!(computed.abs() < 1e-9, "even cycle C_{n} must sit at zero");
        } else {
            assert!(computed < -1e-3, "odd cycle C_{n} must be strictly negative");
        }
    }
    let five = qec_exact(&named_graph(GraphKind::Cycle, 5).unwrap())
        .unwrap()
        .value;
    assert!((five + (3.0 - 5.0f64.sqrt()) / 2.0).abs() < 1e-12);
}

/// Gluing `n - 1` edges at one vertex gives the star graph, whose
/// constant is exactly `-2/n`: with `f = (c, x)` and `c = -sum x`, the
/// form reduces to `-2 <x, x>` against `(sum x)^2 + <x, x>`, maximized by
/// constant `x` via Cauchy-Schwarz. The sandwich upper bound is attained
/// here.
#[test]
fn star_graph_attains_minus_two_over_n() {
    for n in 3..=12usize {
        let star = named_graph(GraphKind::Star, n).unwrap();
        let value = qec_exact(&star).unwrap().value;
        assert!((value + 2.0 / n as f64).abs() < 1e-10, "K_1_{}: {value}", n - 1);

        let edge = named_graph(GraphKind::Complete, 2).unwrap();
        let spec = StarSpec::new(vec![(edge, 0); n - 1]).unwrap();
        let (product, _) = star_product(&spec);
        assert_eq!(product.degree_sequence(), star.degree_sequence());
        let glued = qec_exact(&product).unwrap().value;
        assert!((glued - value).abs() < 1e-12);
    }
}

/// Isometrically embedded subgraphs never have a larger QE constant:
/// checked on factor-into-star-product pairs and on path prefixes.
#[test]
fn isometric_monotonicity() {
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    for _ in 0..50 {
        let count = rng.gen_range(2..=3usize);
        let mut factors = Vec::new();
        for _ in 0..count {
            let m = rng.gen_range(2..=5usize);
            let g = if rng.gen_bool(0.5) {
                named_graph(GraphKind::Complete, m).unwrap()
            } else {
                named_graph(GraphKind::Path, m).unwrap()
            };
            let root = rng.gen_range(0..m);
            factors.push((g, root));
        }
        let spec = StarSpec::new(factors).unwrap();
        let (product, maps) = star_product(&spec);
        let product_value = qec_exact(&product).unwrap().value;
        for ((factor, _), map) in spec.factors().iter().zip(&maps) {
            assert_eq!(is_isometric_subgraph(&product, factor, map), Ok(true));
            let factor_value = qec_exact(factor).unwrap().value;
            assert!(
                factor_value <= product_value + 1e-10,
                "factor {factor_value} vs product {product_value}"
            );
        }
    }

    // Path prefixes are isometric, so their constants are nondecreasing.
    for n in 2..=20usize {
        let longer = named_graph(GraphKind::Path, n + 1).unwrap();
        let shorter = named_graph(GraphKind::Path, n).unwrap();
        let embed: Vec<usize> = (0..n).collect();
        assert_eq!(is_isometric_subgraph(&longer, &shorter, &embed), Ok(true));
        let small = qec_exact(&shorter).unwrap().value;
        let large = qec_exact(&longer).unwrap().value;
        assert!(small <= large + 1e-10, "n = {n}");
    }
}
