//! The named families with their sizes and simplex-graph status.
//!
//! cargo run --example graph_families

use simplex_graphs::cli::run;
use simplex_graphs::{
    generate, is_median_graph, is_partial_cube, simplex_preimage, Family, Limits,
};

fn main() {
    let limits = Limits::default();
    for family in Family::ALL {
        let n = family.min_n().max(4);
        let g = generate(family, n).unwrap();
        let simplex = is_median_graph(&g) && simplex_preimage(&g, &limits).unwrap().is_some();
        println!(
            "{family:<17} n={n}: {:>3} vertices {:>3} edges, partial cube {:<5} median {:<5} simplex {simplex}",
            g.vertex_count(),
            g.edge_count(),
            is_partial_cube(&g),
            is_median_graph(&g),
        );
    }

    let counts: Vec<usize> = (1..=8)
        .map(|n| generate(Family::FibonacciCube, n).unwrap().vertex_count())
        .collect();
    println!("Fibonacci cube orders: {counts:?}");

    let out = run(
        ["simplexgraph", "gen", "gear", "4", "--emit", "labels"],
        &mut std::io::empty(),
    );
    print!("gear 4 labels:\n{}", out.stdout);
}
