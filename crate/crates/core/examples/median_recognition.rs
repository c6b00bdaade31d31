//! Medians of triples, the two median-graph recognizers and convexity.
//!
//! cargo run --example median_recognition

use simplex_graphs::families::{cartesian_product, cycle, path};
use simplex_graphs::median::median_check;
use simplex_graphs::{
    generate, is_convex, is_median_graph, is_median_graph_via_convexity, medians, ConvexityMethod,
    Family, Graph,
};

fn main() {
    let q3 = generate(Family::Hypercube, 3).unwrap();
    println!(
        "Q3: medians of 1, 2, 4 = {:?}",
        medians(&q3, 1, 2, 4).unwrap()
    );

    let graphs: Vec<(&str, Graph)> = vec![
        ("P3 x P4", cartesian_product(&path(3), &path(4))),
        ("Q3", q3.clone()),
        ("Q3-", generate(Family::QMinus, 3).unwrap()),
        ("C6", cycle(6)),
        ("gear 5", generate(Family::Gear, 5).unwrap()),
    ];
    for (name, g) in &graphs {
        let check = median_check(g);
        let witness = check
            .witness
            .map(|(t, m)| format!(" witness {t:?} has medians {m:?}"))
            .unwrap_or_default();
        println!(
            "{name}: median {} (by convexity {}){witness}",
            is_median_graph(g),
            is_median_graph_via_convexity(g)
        );
    }

    let c6 = cycle(6);
    for set in [vec![0, 1, 2], vec![0, 1, 2, 3]] {
        println!(
            "C6, {set:?} convex: definition {}, lemma {}",
            is_convex(&c6, &set, ConvexityMethod::Definition).unwrap(),
            is_convex(&c6, &set, ConvexityMethod::Lemma).unwrap()
        );
    }
}
